#!/usr/bin/env python3
"""How fast the exact optimal cutoff approaches its asymptotic prediction.

Sweeps n for one bias regime and prints a CSV of the exact optimum (scan of
the closed form) against the regime's predicted cutoff and limiting success
probability.

Examples:
  python scripts/threshold_convergence.py --regime weak --c 1.0
  python scripts/threshold_convergence.py --regime moderate --c 1.0 --alpha 0.5
  python scripts/threshold_convergence.py --regime strong --q 0.7 --n-grid 100,1000,10000
"""

import argparse
import csv
import sys

from mallows_secretary.asymptotics import RegimeSpec, predict
from mallows_secretary.policy import optimal_threshold


def regime_q(spec: RegimeSpec, n: int) -> float:
    if spec.kind == "weak":
        return 1.0 - spec.c / n
    if spec.kind == "moderate":
        return 1.0 - spec.c * n**-spec.alpha
    return spec.q


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--regime", choices=["weak", "moderate", "strong"], required=True)
    parser.add_argument("--c", type=float)
    parser.add_argument("--alpha", type=float)
    parser.add_argument("--q", type=float)
    parser.add_argument("--n-grid", default="100,300,1000,3000,10000,30000,100000")
    args = parser.parse_args()

    if args.regime == "weak":
        spec = RegimeSpec("weak", c=args.c)
    elif args.regime == "moderate":
        spec = RegimeSpec("moderate", c=args.c, alpha=args.alpha)
    else:
        spec = RegimeSpec("strong", q=args.q)

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["n", "q", "m_exact", "m_predicted", "p_exact", "p_limit"])
    for raw in args.n_grid.split(","):
        n = int(raw)
        q = regime_q(spec, n)
        m_star, p_star = optimal_threshold(n, q)
        m_pred, p_limit = predict(spec, n)
        writer.writerow([n, repr(q), m_star, m_pred, repr(p_star.value), repr(p_limit)])
    return 0


if __name__ == "__main__":
    sys.exit(main())
