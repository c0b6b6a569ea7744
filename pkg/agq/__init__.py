"""
agq - Hermitian self-orthogonal AG codes and q-ary quantum stabilizer codes.

Builds the one-point codes C_m on two maximal curves over GF(q^2), checks their
duality and self-orthogonality by direct matrix computation, and derives
[[n, n - 2k, d]]_q stabilizer codes with verified parameters.

Quick start:
    from agq import new_curve, build, derive_quantum

    curve = new_curve("a", e=2)          # y^2 + y = x^5 over GF(16), n = 32
    record = derive_quantum(build(curve, 6))
    print(record)                        # [[32,22,4]]_4

The ``agq`` console script exposes the same operations; see ``agq --help``.
"""

from .codes import AgCode, LinearCode, build, certify_distance, verify_duality
from .curves import CurveKind, new_curve
from .field import FieldCtx, new_field
from .quantum import QuantumCodeRecord, derive_quantum, expand_to_symplectic

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "AgCode",
    "CurveKind",
    "FieldCtx",
    "LinearCode",
    "QuantumCodeRecord",
    "build",
    "certify_distance",
    "derive_quantum",
    "expand_to_symplectic",
    "new_curve",
    "new_field",
    "verify_duality",
]
