"""
The two maximal curves over GF(q^2) and their one-point Riemann-Roch spaces.

Use :func:`new_curve` to obtain a curve; instances are cached per (kind, e) and
immutable once built.
"""

import functools

from agq.field import new_field

from .base import CurveKind, CurveParameterError, CurveSpec, MonomialBasis, Point
from .curve_a import CurveA
from .curve_b import CurveB

_CURVES: dict[CurveKind, type[CurveSpec]] = {
    CurveKind.A: CurveA,
    CurveKind.B: CurveB,
}


@functools.lru_cache(maxsize=None)
def _cached_curve(kind: CurveKind, e: int) -> CurveSpec:
    return _CURVES[kind](new_field(e))


def new_curve(kind: CurveKind | str, e: int) -> CurveSpec:
    """
    Build (or fetch) the curve of the given kind over GF(2^(2e)).

    Raises:
        CurveParameterError: unknown kind, or curve b with even e.
        UnsupportedFieldError: e outside 1..6.
    """
    try:
        kind = CurveKind(kind)
    except ValueError as exc:
        raise CurveParameterError(f"unknown curve kind {kind!r}; expected 'a' or 'b'") from exc
    return _cached_curve(kind, e)


__all__ = [
    "CurveKind",
    "CurveParameterError",
    "CurveSpec",
    "CurveA",
    "CurveB",
    "MonomialBasis",
    "Point",
    "new_curve",
]
