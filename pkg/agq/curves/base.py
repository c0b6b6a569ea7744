"""Base class for the maximal curves and their Riemann-Roch bases at P∞."""

import abc
import functools
import hashlib
import logging
from dataclasses import dataclass
from enum import Enum

import galois
import numpy as np

from agq.field import FieldCtx, LinearizedMap

log = logging.getLogger(__name__)


class CurveKind(str, Enum):
    A = "a"
    B = "b"


class CurveParameterError(ValueError):
    """Raised when a curve is requested over a field it is not defined (or maximal) over."""


Point = tuple[int, int]
Monomial = tuple[int, int]


@dataclass(frozen=True)
class MonomialBasis:
    """
    Basis x^a y^b of L(mP∞), ordered by increasing pole order.

    Pole orders are pairwise distinct, so the monomials are linearly independent
    as functions.
    """

    m: int
    monomials: tuple[Monomial, ...]
    pole_orders: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.monomials)


class CurveSpec(abc.ABC):
    """
    A curve y-polynomial(y) = x-polynomial(x) over GF(q^2) with one place P∞ at infinity.

    Subclasses fix the defining equation through :attr:`fiber_map` and
    :meth:`fiber_rhs`, and the Weierstrass semigroup at P∞ through the pole orders of
    x and y. The finite rational points are enumerated fiber by fiber over every x
    in GF(q^2) and stored in canonical order (ascending x, then y, as integers).

    P∞ itself is never materialized; divisors enter the API as multiples m of it.
    """

    kind: CurveKind
    fiber_map: LinearizedMap

    def __init__(self, field: FieldCtx):
        self.field = field
        self.points: tuple[Point, ...] = self._enumerate_points()
        if len(self.points) != self.n:
            raise RuntimeError(
                f"{self!r}: enumerated {len(self.points)} points, expected {self.n}"
            )
        log.debug("%r: %d finite rational points", self, len(self.points))

    # ------------------------------------------------------------------
    # Curve data supplied by subclasses
    # ------------------------------------------------------------------
    @property
    @abc.abstractmethod
    def genus(self) -> int:
        raise NotImplementedError

    @property
    @abc.abstractmethod
    def n(self) -> int:
        """Number of finite rational points, i.e. the code length."""
        raise NotImplementedError

    @property
    @abc.abstractmethod
    def x_pole(self) -> int:
        raise NotImplementedError

    @property
    @abc.abstractmethod
    def y_pole(self) -> int:
        raise NotImplementedError

    @property
    @abc.abstractmethod
    def y_degree(self) -> int:
        """Degree of the defining equation in y; caps the y-exponent of basis monomials."""
        raise NotImplementedError

    @property
    @abc.abstractmethod
    def hermitian_threshold(self) -> int:
        """Largest m for which C_m is guaranteed Hermitian self-orthogonal."""
        raise NotImplementedError

    @abc.abstractmethod
    def fiber_rhs(self, x: int) -> int:
        """Right-hand side c(x) of the fiber equation map(y) = c(x)."""
        raise NotImplementedError

    # ------------------------------------------------------------------
    # Points
    # ------------------------------------------------------------------
    @property
    def q(self) -> int:
        return self.field.q

    @property
    def e(self) -> int:
        return self.field.e

    def contains(self, point: Point) -> bool:
        x, y = point
        return self.field.apply_map(self.fiber_map, y) == self.fiber_rhs(x)

    def _enumerate_points(self) -> tuple[Point, ...]:
        points: list[Point] = []
        for x in range(self.field.q2):
            ys = self.field.solve_affine_linearized(self.fiber_map, self.fiber_rhs(x))
            points.extend((x, y) for y in sorted(ys))
        return tuple(points)

    @functools.cached_property
    def xs(self) -> galois.FieldArray:
        return self.field.gf([p[0] for p in self.points])

    @functools.cached_property
    def ys(self) -> galois.FieldArray:
        return self.field.gf([p[1] for p in self.points])

    def x_values(self) -> dict[int, int]:
        """Distinct x-coordinates mapped to their fiber sizes, ascending."""
        fibers: dict[int, int] = {}
        for x, _ in self.points:
            fibers[x] = fibers.get(x, 0) + 1
        return fibers

    def points_digest(self) -> str:
        """SHA-256 over the canonical point list, one 'x,y' pair per line."""
        text = "\n".join(f"{x},{y}" for x, y in self.points)
        return hashlib.sha256(text.encode("ascii")).hexdigest()

    # ------------------------------------------------------------------
    # Riemann-Roch spaces L(mP∞)
    # ------------------------------------------------------------------
    def pole_order(self, monomial: Monomial) -> int:
        a, b = monomial
        return self.x_pole * a + self.y_pole * b

    def rr_basis(self, m: int) -> MonomialBasis:
        """
        Monomial basis of L(mP∞).

        Every x^a y^b with b < y_degree and pole order <= m; the relation defining
        the curve rewrites higher powers of y, so these span the space.
        """
        if m < 0:
            raise ValueError(f"m must be >= 0, got {m}")
        monomials = [
            (a, b)
            for b in range(self.y_degree)
            for a in range((m - self.y_pole * b) // self.x_pole + 1)
            if self.y_pole * b <= m
        ]
        monomials.sort(key=self.pole_order)
        return MonomialBasis(
            m=m,
            monomials=tuple(monomials),
            pole_orders=tuple(self.pole_order(mono) for mono in monomials),
        )

    def semigroup_gaps(self) -> tuple[int, ...]:
        """Integers that are not pole orders of any function regular off P∞."""
        realized = set(self.rr_basis(2 * self.genus).pole_orders)
        return tuple(i for i in range(2 * self.genus) if i not in realized)

    def evaluate_monomial(self, monomial: Monomial, point: Point) -> int:
        a, b = monomial
        x, y = point
        return self.field.mul(self.field.pow(x, a), self.field.pow(y, b))

    def evaluation_matrix(self, basis: MonomialBasis) -> galois.FieldArray:
        """Row i is the evaluation of the i-th basis monomial at every point."""
        gf = self.field.gf
        if not len(basis):
            return gf.Zeros((0, self.n))
        rows = [_power(self.xs, a) * _power(self.ys, b) for a, b in basis.monomials]
        return gf(np.stack([row.view(np.ndarray) for row in rows]))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(q={self.q}, genus={self.genus}, n={self.n})"


def _power(values: galois.FieldArray, exponent: int) -> galois.FieldArray:
    if exponent == 0:
        return type(values).Ones(values.shape)
    return values**exponent
