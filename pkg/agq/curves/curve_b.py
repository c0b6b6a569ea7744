"""The maximal curve y^q + y = x^3 over GF(q^2), q an odd power of two."""

from agq.field import FieldCtx, LinearizedMap

from .base import CurveKind, CurveParameterError, CurveSpec


class CurveB(CurveSpec):
    """
    y^q + y = x^3 with q = 2^e, e odd (so 3 divides q + 1).

    A fiber is nonempty exactly when x^3 lies in GF(q), which happens for the
    3q - 2 roots of x - x^(3q-2); each such fiber has q points, giving
    n = 3q^2 - 2q and genus q - 1. Pole orders at P∞ are q for x and 3 for y.
    """

    kind = CurveKind.B
    fiber_map = LinearizedMap.TRACE_LIKE

    def __init__(self, field: FieldCtx):
        if field.e % 2 == 0:
            raise CurveParameterError(
                f"curve b needs q to be an odd power of 2, got q={field.q}"
            )
        super().__init__(field)

    @property
    def genus(self) -> int:
        return self.q - 1

    @property
    def n(self) -> int:
        return 3 * self.q**2 - 2 * self.q

    @property
    def x_pole(self) -> int:
        return self.q

    @property
    def y_pole(self) -> int:
        return 3

    @property
    def y_degree(self) -> int:
        return self.q

    @property
    def hermitian_threshold(self) -> int:
        return 3 * self.q - 4

    def fiber_rhs(self, x: int) -> int:
        return self.field.pow(x, 3)
