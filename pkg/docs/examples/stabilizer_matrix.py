# examples/stabilizer_matrix.py
"""
Build a stabilizer check matrix from C_m on curve a and write it to a file.

This demonstrates:
- Checking Hermitian self-orthogonality before deriving a quantum code
- Attaching the symplectic check matrix to the record
- Writing and reading back the agq-matrix format

Usage:
    python docs/examples/stabilizer_matrix.py [e] [m] [output]

Requirements:
    - agq installed (pip install -e .)
"""

import logging
import sys
from pathlib import Path

from agq import build, derive_quantum, new_curve
from agq.quantum import is_symplectic_self_orthogonal
from agq.runner import configure_logging
from agq.serialize import format_matrix, read_matrix

log = logging.getLogger(__name__)


def main(e: int = 2, m: int = 5, output: str = "stabilizer.agqm") -> int:
    configure_logging("INFO")
    curve = new_curve("a", e)
    ag = build(curve, m)

    if not ag.code.is_hermitian_self_orthogonal():
        log.error("C_%d on %r is not Hermitian self-orthogonal (threshold m <= %d)", m, curve, curve.hermitian_threshold)
        return 1

    record = derive_quantum(ag, certify=False)
    print(f"{record}  from C_{m} = [{ag.n}, {ag.k}] over GF({curve.field.q2})")

    path = Path(output)
    path.write_text(format_matrix(curve.field, record.stabilizer), encoding="utf-8")
    _, matrix = read_matrix(path.read_text(encoding="utf-8"))
    print(f"wrote {matrix.shape[0]}x{matrix.shape[1]} check matrix to {path}")
    print(f"rows pairwise symplectic-orthogonal: {is_symplectic_self_orthogonal(matrix)}")
    return 0


if __name__ == "__main__":
    args = sys.argv[1:]
    sys.exit(
        main(
            int(args[0]) if len(args) > 0 else 2,
            int(args[1]) if len(args) > 1 else 5,
            args[2] if len(args) > 2 else "stabilizer.agqm",
        )
    )
