"""Compare the compiled and pure subset-sum kernels on the same queries.

Run from the repository root:

    python3 scripts/benchmark.py          # full set
    python3 scripts/benchmark.py --quick  # skip the larger shapes

Every row checks exact agreement between the two backends before
reporting times, so a speedup is only printed for identical values.
"""

import argparse
import time

from vicalc import backend
from vicalc.engine import InvariantQuery, vi_invariant

SHAPES = [
    # n, k, g, e
    (8, 3, 0, -1),
    (10, 3, 1, -1),
    (12, 4, 1, -1),
    (12, 4, 2, -4),
    (16, 4, 2, -3),
    (20, 5, 2, -4),
]

QUICK_LIMIT = 13


def admissible_query(n, k, g, e):
    """Fill the degree condition with top classes plus one remainder part."""
    weight = -e * n + k * (n - k) * (1 - g)
    if weight < 0:
        raise ValueError("no admissible monomial for n=%d k=%d g=%d e=%d" % (n, k, g, e))
    monomial = (k,) * (weight // k)
    if weight % k:
        monomial += (weight % k,)
    return InvariantQuery(n=n, k=k, g=g, e=e, monomial=monomial, convention="dual")


def time_once(query, kernel):
    start = time.perf_counter()
    result = vi_invariant(query, kernel=kernel)
    return time.perf_counter() - start, result.value


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true")
    args = parser.parse_args()

    if not backend.HAVE_COMPILED:
        print("compiled kernel not built; nothing to compare")
        return 1

    print("%-28s %10s %10s %8s" % ("query", "pure", "compiled", "speedup"))
    for n, k, g, e in SHAPES:
        if args.quick and n > QUICK_LIMIT:
            continue
        query = admissible_query(n, k, g, e)
        t_pure, v_pure = time_once(query, "pure")
        t_comp, v_comp = time_once(query, "compiled")
        if v_pure != v_comp:
            print("backend disagreement at %r: %s vs %s" % (query, v_pure, v_comp))
            return 1
        label = "n=%d k=%d g=%d m=%d" % (n, k, g, len(query.monomial))
        print("%-28s %9.3fs %9.3fs %7.1fx" % (label, t_pure, t_comp, t_pure / t_comp))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
