"""
Arithmetic in GF(q^2) with q = 2^e.

Elements are plain integers in polynomial basis over GF(2): bit j of the value is
the coefficient of x^j. Scalar operations use discrete exp/log tables built from
a fixed primitive modulus; vectorized work goes through the matching galois
FieldArray class exposed as ``FieldCtx.gf``.

GF(q) is never built separately: it is the Frobenius-fixed subfield of GF(q^2).
"""

import functools
import itertools
import logging
from collections.abc import Mapping
from dataclasses import dataclass, field, replace
from enum import Enum
from types import MappingProxyType

import galois
import numpy as np

log = logging.getLogger(__name__)


# One primitive polynomial per extension degree 2e, as integer bitmasks.
PRIMITIVE_POLYNOMIALS: dict[int, int] = {
    2: 0b111,  # x^2 + x + 1
    4: 0b10011,  # x^4 + x + 1
    6: 0b1000011,  # x^6 + x + 1
    8: 0b100011101,  # x^8 + x^4 + x^3 + x^2 + 1
    10: 0b10000001001,  # x^10 + x^3 + 1
    12: 0b1000001010011,  # x^12 + x^6 + x^4 + x + 1
}

MAX_E = 6


class UnsupportedFieldError(ValueError):
    """Raised for an extension degree outside the shipped polynomial table."""


class LinearizedMap(str, Enum):
    """The two GF(2)-linear maps whose affine equations define the curve fibers."""

    ARTIN_SCHREIER = "y^2+y"
    TRACE_LIKE = "y^q+y"


@dataclass(frozen=True, eq=False)
class _AffineSolver:
    """
    Precomputed reduction of a GF(2)-linear map M on GF(2)^{2e}.

    ``transform`` is an invertible matrix with transform @ M in reduced row echelon
    form; ``pivots`` are its pivot columns and ``kernel`` lists every y with M(y) = 0.
    """

    transform: np.ndarray
    pivots: tuple[int, ...]
    kernel: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """
    The field tower GF(2) ⊂ GF(q) ⊂ GF(q^2).

    Build instances through :func:`new_field`, which caches one context per e
    and fills in the subfield and both fiber solvers before returning it;
    contexts are immutable and compared by identity.
    """

    e: int
    modulus: int
    exp_table: np.ndarray
    log_table: np.ndarray
    gf: type[galois.FieldArray]
    _solvers: Mapping[LinearizedMap, _AffineSolver] = field(default_factory=dict, repr=False)
    _subfield: tuple[int, ...] = field(default=(), repr=False)

    @property
    def q(self) -> int:
        return 1 << self.e

    @property
    def q2(self) -> int:
        return 1 << (2 * self.e)

    @property
    def degree(self) -> int:
        return 2 * self.e

    @property
    def generator(self) -> int:
        """The primitive element x used to build the tables."""
        return 2

    def __repr__(self) -> str:
        return f"FieldCtx(q={self.q}, q2={self.q2}, modulus={self.modulus:#x})"

    # ------------------------------------------------------------------
    # Scalar arithmetic
    # ------------------------------------------------------------------
    def _check(self, a: int) -> int:
        if not 0 <= a < self.q2:
            raise ValueError(f"{a} is not an element of GF({self.q2})")
        return a

    def add(self, a: int, b: int) -> int:
        return self._check(a) ^ self._check(b)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, b)

    def mul(self, a: int, b: int) -> int:
        if self._check(a) == 0 or self._check(b) == 0:
            return 0
        order = self.q2 - 1
        return int(self.exp_table[(self.log_table[a] + self.log_table[b]) % order])

    def inv(self, a: int) -> int:
        if self._check(a) == 0:
            raise ZeroDivisionError("cannot invert zero")
        order = self.q2 - 1
        return int(self.exp_table[(-self.log_table[a]) % order])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, exponent: int) -> int:
        if self._check(a) == 0:
            if exponent < 0:
                raise ZeroDivisionError("cannot raise zero to a negative power")
            return 1 if exponent == 0 else 0
        order = self.q2 - 1
        return int(self.exp_table[(self.log_table[a] * exponent) % order])

    # ------------------------------------------------------------------
    # Galois structure over GF(q)
    # ------------------------------------------------------------------
    def frobenius_q(self, a: int) -> int:
        """The conjugation a -> a^q, an involution of GF(q^2) fixing GF(q)."""
        return self.pow(a, self.q)

    def trace_to_gf_q(self, a: int) -> int:
        return self.add(a, self.frobenius_q(a))

    def norm_to_gf_q(self, a: int) -> int:
        return self.mul(a, self.frobenius_q(a))

    def is_in_subfield(self, a: int) -> bool:
        return self.frobenius_q(a) == a

    @property
    def subfield_elements(self) -> tuple[int, ...]:
        """The q elements of GF(q), ascending."""
        return self._subfield

    def elements(self) -> galois.FieldArray:
        """All q^2 field elements in ascending integer order."""
        return self.gf(np.arange(self.q2))

    # ------------------------------------------------------------------
    # Affine linearized equations
    # ------------------------------------------------------------------
    def apply_map(self, kind: LinearizedMap, y: int) -> int:
        exponent = 2 if kind is LinearizedMap.ARTIN_SCHREIER else self.q
        return self.add(self.pow(y, exponent), y)

    def _bits(self, a: int) -> np.ndarray:
        return (a >> np.arange(self.degree)) & 1

    def _from_bits(self, bits: np.ndarray) -> int:
        return int(np.dot(np.asarray(bits, dtype=np.int64), 1 << np.arange(self.degree)))

    def _reduce_map(self, kind: LinearizedMap) -> _AffineSolver:
        gf2 = galois.GF(2)
        dim = self.degree
        # Column j holds the image of the basis vector x^j.
        matrix = np.stack([self._bits(self.apply_map(kind, 1 << j)) for j in range(dim)], axis=1)
        augmented = gf2(np.hstack([matrix, np.eye(dim, dtype=int)]))
        reduced = augmented.row_reduce(ncols=dim)
        echelon = reduced[:, :dim].view(np.ndarray)
        transform = reduced[:, dim:].view(np.ndarray).astype(np.int64)

        pivots = tuple(int(np.argmax(row)) for row in echelon if row.any())
        free = [j for j in range(dim) if j not in pivots]

        basis = []
        for f in free:
            v = np.zeros(dim, dtype=np.int64)
            v[f] = 1
            for i, p in enumerate(pivots):
                v[p] = echelon[i, f]
            basis.append(v)

        kernel = []
        for coeffs in itertools.product((0, 1), repeat=len(basis)):
            v = np.zeros(dim, dtype=np.int64)
            for c, b in zip(coeffs, basis):
                if c:
                    v ^= b
            kernel.append(self._from_bits(v))

        solver = _AffineSolver(transform=transform, pivots=pivots, kernel=tuple(sorted(kernel)))
        log.debug(
            "GF(%d) %s: rank %d, kernel size %d",
            self.q2,
            kind.value,
            len(pivots),
            len(solver.kernel),
        )
        return solver

    def solve_affine_linearized(self, kind: LinearizedMap, c: int) -> frozenset[int]:
        """
        All y in GF(q^2) with map(y) = c.

        The map is treated as a GF(2)-linear operator on coordinate vectors: a
        particular solution is read off the reduced system and the kernel is added
        to it. The result is empty or has the size of the kernel.
        """
        self._check(c)
        solver = self._solvers[kind]
        rhs = (solver.transform @ self._bits(c)) % 2

        rank = len(solver.pivots)
        if rhs[rank:].any():
            return frozenset()

        particular = np.zeros(self.degree, dtype=np.int64)
        for i, p in enumerate(solver.pivots):
            particular[p] = rhs[i]
        y0 = self._from_bits(particular)
        return frozenset(y0 ^ k for k in solver.kernel)


def _build_tables(degree: int, modulus: int) -> tuple[np.ndarray, np.ndarray]:
    order = (1 << degree) - 1
    exp_table = np.zeros(order, dtype=np.int64)
    log_table = np.full(1 << degree, -1, dtype=np.int64)

    value = 1
    for i in range(order):
        exp_table[i] = value
        log_table[value] = i
        value <<= 1
        if value >> degree:
            value ^= modulus

    # The generator must have order q^2 - 1: every nonzero element is reached once.
    if len(set(exp_table.tolist())) != order or value != 1:
        raise RuntimeError(f"modulus {modulus:#x} is not primitive")
    return exp_table, log_table


@functools.lru_cache(maxsize=None)
def new_field(e: int) -> FieldCtx:
    """
    Return the field context for GF(q^2), q = 2^e, 1 <= e <= 6.

    Raises:
        UnsupportedFieldError: e is outside the supported range.
    """
    if not isinstance(e, int) or not 1 <= e <= MAX_E:
        raise UnsupportedFieldError(f"unsupported extension parameter e={e!r}; expected 1..{MAX_E}")

    degree = 2 * e
    modulus = PRIMITIVE_POLYNOMIALS[degree]
    exp_table, log_table = _build_tables(degree, modulus)
    exp_table.flags.writeable = False
    log_table.flags.writeable = False

    gf = galois.GF(1 << degree, irreducible_poly=modulus, primitive_element=2)
    ctx = FieldCtx(e=e, modulus=modulus, exp_table=exp_table, log_table=log_table, gf=gf)
    log.debug("Built GF(%d) with modulus %#x", 1 << degree, modulus)
    return replace(
        ctx,
        _solvers=MappingProxyType({kind: ctx._reduce_map(kind) for kind in LinearizedMap}),
        _subfield=tuple(a for a in range(ctx.q2) if ctx.is_in_subfield(a)),
    )


def e_from_q(q: int) -> int:
    """Inverse of q = 2^e; raises ValueError when q is not a supported power of two."""
    if q < 2 or q & (q - 1):
        raise UnsupportedFieldError(f"q={q} is not a power of two")
    return q.bit_length() - 1
