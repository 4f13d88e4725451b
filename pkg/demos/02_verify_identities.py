"""Run a slice of the identity verification suite and print the report.

Every registered identity is checked by evaluating its two sides
independently (series engine vs. quadrature oracle or closed form) and
comparing the residual against the tolerance plus both error bounds.

Run:  python3 demos/02_verify_identities.py [filter]
"""

import sys

from hzeta.identity_registry import identity_ids, run_suite
from hzeta.precision import PrecisionConfig


def main():
    pattern = sys.argv[1] if len(sys.argv) > 1 else "thm-*"
    print(f"{len(identity_ids())} identities registered; "
          f"verifying filter {pattern!r} with 2 samples each\n")
    report = run_suite(pattern, samples_per_id=2, tol="1e-10", seed=7,
                       prec=PrecisionConfig(bits=192))
    print(report.table())
    return 0 if report.all_passed else 2


if __name__ == "__main__":
    raise SystemExit(main())
