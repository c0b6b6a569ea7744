"""The maximal curve y^2 + y = x^(q+1) over GF(q^2)."""

from agq.field import LinearizedMap

from .base import CurveKind, CurveSpec


class CurveA(CurveSpec):
    """
    y^2 + y = x^(q+1), any q = 2^e.

    x^(q+1) is the norm of x and lies in GF(q), so every fiber has exactly two
    points: n = 2q^2 and genus q/2. Pole orders at P∞ are 2 for x and q+1 for y.
    """

    kind = CurveKind.A
    fiber_map = LinearizedMap.ARTIN_SCHREIER

    @property
    def genus(self) -> int:
        return self.q // 2

    @property
    def n(self) -> int:
        return 2 * self.q**2

    @property
    def x_pole(self) -> int:
        return 2

    @property
    def y_pole(self) -> int:
        return self.q + 1

    @property
    def y_degree(self) -> int:
        return 2

    @property
    def hermitian_threshold(self) -> int:
        return 2 * self.q - 2

    def fiber_rhs(self, x: int) -> int:
        return self.field.norm_to_gf_q(x)
