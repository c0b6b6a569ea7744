# examples/reproduce_examples.py
"""
Print the reproduction table of the published worked examples.

This demonstrates:
- How to run the golden rows through the library instead of the CLI
- How certification is limited to small fields
- How to read match/mismatch against the expected status

Usage:
    python docs/examples/reproduce_examples.py [certify_max_q]

Requirements:
    - agq installed (pip install -e .)
"""

import logging
import sys

from agq.reporting import reproduction_table
from agq.runner import configure_logging

log = logging.getLogger(__name__)


def main(certify_max_q: int = 2) -> int:
    configure_logging("INFO")
    rows = reproduction_table(certify_max_q=certify_max_q)

    width = max(len(row.claimed) for row in rows)
    for row in rows:
        flag = "ok" if row.ok else "UNEXPECTED"
        print(f"Ex{row.example} m={row.m:<3} {row.claimed:<{width}}  {row.computed:<28} {row.status:<8} {flag}")
        if row.note:
            print(f"    {row.note}")

    failures = [row for row in rows if not row.ok]
    log.info("%d rows, %d unexpected", len(rows), len(failures))
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(int(sys.argv[1]) if len(sys.argv) > 1 else 2))
