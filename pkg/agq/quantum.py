"""
q-ary stabilizer codes from Hermitian self-orthogonal AG codes.

A Hermitian self-orthogonal [n, k] code C over GF(q^2) yields an
[[n, n - 2k, d]]_q stabilizer code, d being the minimum distance of the
Hermitian dual. This module evaluates the closed-form parameters on both curves,
derives records from actual codes, and builds the symplectic check matrix over
GF(q).

GF(q)-valued matrices keep the GF(q^2) integer encoding: their entries are the
subfield elements of the ambient field, so one FieldArray class serves both.
"""

import logging
import math
from dataclasses import dataclass
from typing import NamedTuple

import galois
import numpy as np

from agq.codes.ag import AgCode
from agq.codes.distance import DEFAULT_BUDGET, DEFAULT_SEED, DEFAULT_TRIALS, Distance, certify_distance
from agq.codes.linear import LinearCode
from agq.curves import CurveKind, CurveParameterError
from agq.field import FieldCtx, e_from_q

log = logging.getLogger(__name__)


class NotHermitianSelfOrthogonalError(ValueError):
    """Raised when a stabilizer construction is given a code that is not Hermitian self-orthogonal."""


class QuantumParams(NamedTuple):
    n: int
    k_q: int
    d_lower: int


# ----------------------------------------------------------------------
# Closed-form parameters
# ----------------------------------------------------------------------
def theorem_range(kind: CurveKind | str, q: int) -> range:
    """m values for which the parameter formulas of ``kind`` are proven."""
    if CurveKind(kind) is CurveKind.A:
        return range(q - 1, 2 * q - 1)
    return range(2 * q - 3, 3 * q - 3)


def _warn_out_of_range(kind: CurveKind, q: int, m: int) -> None:
    allowed = theorem_range(kind, q)
    if m not in allowed:
        log.warning(
            "m=%d is outside the proven range %d..%d for curve %s with q=%d",
            m,
            allowed.start,
            allowed.stop - 1,
            kind.value,
            q,
        )


def qparams_curve_a(q: int, m: int) -> QuantumParams:
    """[[2q², 2q² - 2m + q - 2, ≥ m + 2 - q]]_q."""
    e_from_q(q)
    _warn_out_of_range(CurveKind.A, q, m)
    n = 2 * q * q
    return QuantumParams(n=n, k_q=n - 2 * m + q - 2, d_lower=m + 2 - q)


def qparams_curve_b(q: int, m: int) -> QuantumParams:
    """[[3q² - 2q, 3q² - 2m - 4, ≥ m + 4 - 2q]]_q, q an odd power of two."""
    if e_from_q(q) % 2 == 0:
        raise CurveParameterError(f"curve b needs q an odd power of two, got q={q}")
    _warn_out_of_range(CurveKind.B, q, m)
    return QuantumParams(n=3 * q * q - 2 * q, k_q=3 * q * q - 2 * m - 4, d_lower=m + 4 - 2 * q)


# ----------------------------------------------------------------------
# Symplectic expansion
# ----------------------------------------------------------------------
def symplectic_product_matrix(stabilizer: galois.FieldArray) -> galois.FieldArray:
    """Matrix of a·b' - a'·b over all row pairs of an (X|Z) matrix."""
    n = stabilizer.shape[1] // 2
    x, z = stabilizer[:, :n], stabilizer[:, n:]
    return x @ z.T - z @ x.T


def is_symplectic_self_orthogonal(stabilizer: galois.FieldArray) -> bool:
    if stabilizer.shape[0] == 0:
        return True
    return not symplectic_product_matrix(stabilizer).view(np.ndarray).any()


def _split(field: FieldCtx, words: galois.FieldArray, gamma: int) -> galois.FieldArray:
    """
    Write each entry u as a + γb with a, b in GF(q); return (a | b) rows.

    Tr(u) = Tr(γ)·b because Tr(a) = 2a = 0, and Tr(γ) is nonzero off GF(q).
    """
    gf = field.gf
    g = gf(gamma)
    trace_gamma = g + g**field.q
    b = (words + words**field.q) / trace_gamma
    a = words - g * b
    return gf(np.hstack([a.view(np.ndarray), b.view(np.ndarray)]))


def _expand_with(code: LinearCode, gamma: int) -> galois.FieldArray:
    gf = code.field.gf
    rows = np.empty((2 * code.k, 2 * code.n), dtype=np.int64)
    rows[0::2] = _split(code.field, code.gen, gamma).view(np.ndarray)
    rows[1::2] = _split(code.field, gf(gamma) * code.gen, gamma).view(np.ndarray)
    return gf(rows)


def _gamma_candidates(field: FieldCtx) -> list[int]:
    default = field.generator
    rest = [a for a in range(field.q2) if a != default and not field.is_in_subfield(a)]
    return [default, *rest]


def expand_to_symplectic(code: LinearCode) -> galois.FieldArray:
    """
    The 2k×2n check matrix over GF(q) of the stabilizer code of ``code``.

    Each generator row c contributes the expansions of c and γc in the basis
    {1, γ}, γ the field generator unless it fails the pairwise check, in which
    case every other γ outside GF(q) is tried in ascending order.

    Raises:
        NotHermitianSelfOrthogonalError: no γ gives a symplectic self-orthogonal matrix.
    """
    field = code.field
    if code.k == 0:
        return field.gf.Zeros((0, 2 * code.n))

    for gamma in _gamma_candidates(field):
        stabilizer = _expand_with(code, gamma)
        if not is_symplectic_self_orthogonal(stabilizer):
            log.debug("%r: γ=%d fails the symplectic check", code, gamma)
            continue
        rank = int(np.linalg.matrix_rank(stabilizer))
        if rank != 2 * code.k:
            raise RuntimeError(f"{code!r}: expansion has rank {rank}, expected {2 * code.k}")
        return stabilizer
    raise NotHermitianSelfOrthogonalError(f"{code!r} has no symplectic self-orthogonal expansion")


def conjugate_symplectic(stabilizer: galois.FieldArray, gamma: int, field: FieldCtx) -> galois.FieldArray:
    """
    Apply (a | b) -> (a + t·b | b) with t = γ + γ^q.

    This is the image of the expansion under entry-wise conjugation u -> u^q, so
    the expansion of C^q and the conjugate of the expansion of C span the same
    GF(q) row space.
    """
    gf = field.gf
    g = gf(gamma)
    t = g + g**field.q
    n = stabilizer.shape[1] // 2
    a, b = stabilizer[:, :n], stabilizer[:, n:]
    return gf(np.hstack([(a + t * b).view(np.ndarray), b.view(np.ndarray)]))


# ----------------------------------------------------------------------
# Records
# ----------------------------------------------------------------------
@dataclass(frozen=True, eq=False)
class QuantumCodeRecord:
    """
    An [[n, k_q, d]]_q stabilizer code derived from C_m on one curve.

    ``d_exact`` is set only with a certificate; ``d_upper`` is the lightest dual
    codeword seen when the search ran.
    """

    q: int
    n: int
    k_q: int
    d_lower: int
    curve: CurveKind
    m: int
    k_classical: int
    in_theorem_range: bool
    d_exact: Distance | None = None
    d_upper: Distance | None = None
    distance_method: str | None = None
    stabilizer: galois.FieldArray | None = None
    note: str = ""

    @property
    def d(self) -> Distance:
        return self.d_exact if self.d_exact is not None else self.d_lower

    def __str__(self) -> str:
        d = f"{self.d_exact}" if self.d_exact is not None else f"≥{self.d_lower}"
        return f"[[{self.n},{self.k_q},{d}]]_{self.q}"


def derive_quantum(
    ag: AgCode,
    *,
    certify: bool = True,
    stabilizer: bool = True,
    budget: int = DEFAULT_BUDGET,
    trials: int = DEFAULT_TRIALS,
    w_max: int = 2,
    seed: int = DEFAULT_SEED,
    workers: int = 1,
) -> QuantumCodeRecord:
    """
    Stabilizer code of a Hermitian self-orthogonal C_m.

    The distance that matters is that of the Hermitian dual, which has the same
    weights as C_m^⊥ since conjugation preserves supports; ``certify`` computes it
    on C_m^⊥ within ``budget``.

    Raises:
        NotHermitianSelfOrthogonalError: C_m is not Hermitian self-orthogonal.
    """
    curve, code = ag.curve, ag.code
    if not code.is_hermitian_self_orthogonal():
        raise NotHermitianSelfOrthogonalError(f"C_{ag.m} on {curve!r} is not Hermitian self-orthogonal")

    in_range = ag.m in theorem_range(curve.kind, curve.q)
    notes = [] if in_range else [f"m={ag.m} outside the proven parameter range"]

    d_exact = d_upper = None
    method = None
    if certify:
        report = certify_distance(code.dual(), budget=budget, trials=trials, w_max=w_max, seed=seed, workers=workers)
        d_exact, d_upper, method = report.exact, report.upper, report.method
        if report.upper < ag.dual_designed_distance:
            raise RuntimeError(
                f"C_{ag.m} on {curve!r}: dual has a word of weight {report.upper} "
                f"below the designed distance {ag.dual_designed_distance}"
            )
        if d_exact is None:
            notes.append(f"distance in [{report.lower}, {report.upper}]")

    record = QuantumCodeRecord(
        q=curve.q,
        n=curve.n,
        k_q=curve.n - 2 * code.k,
        d_lower=ag.dual_designed_distance,
        curve=curve.kind,
        m=ag.m,
        k_classical=code.k,
        in_theorem_range=in_range,
        d_exact=d_exact,
        d_upper=d_upper,
        distance_method=method,
        stabilizer=expand_to_symplectic(code) if stabilizer else None,
        note="; ".join(notes),
    )
    log.info("C_%d on %r gives %s", ag.m, curve, record)
    return record


# ----------------------------------------------------------------------
# Bounds
# ----------------------------------------------------------------------
def singleton_check(record: QuantumCodeRecord) -> tuple[int, bool]:
    """(n + 2 - (k_q + 2d), defect >= 0); d is d_exact when known."""
    defect = record.n + 2 - (record.k_q + 2 * int(record.d))
    return defect, defect >= 0


def hamming_check(record: QuantumCodeRecord) -> bool:
    """q^(n - k_q) >= sum_{j <= (d-1)//2} C(n, j) (q² - 1)^j, exactly."""
    t = (int(record.d) - 1) // 2
    volume = sum(math.comb(record.n, j) * (record.q**2 - 1) ** j for j in range(t + 1))
    return record.q ** (record.n - record.k_q) >= volume
