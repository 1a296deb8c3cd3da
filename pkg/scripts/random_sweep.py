#!/usr/bin/env python3
"""Randomized verification sweep.

Samples smooth arrangements from a seed and runs the full battery on each:
oracle equivalence on every BOTH-free pattern, covering, adjacency, density
and the empty-core criterion. Prints one line per instance and a summary.

Usage: python scripts/random_sweep.py [--seed N] [--count N] [--max-d N]
"""

import argparse
import itertools
import random
import time

from corecover import (
    adjacency_lemma_check,
    core_empty_criterion,
    hk_semistable_geometric,
    hk_semistable_numeric,
    theta_cpt,
    torus_data,
    verify_covering,
    verify_density,
)
from corecover.arrangement import all_sign_vectors
from corecover.randgen import random_smooth_arrangement
from corecover.stability import NO_BOTH_ALPHABET


def check_instance(arr) -> dict:
    td = torus_data(arr)
    equivalence = all(
        hk_semistable_numeric(td, p).semistable
        == hk_semistable_geometric(arr, p).semistable
        for p in itertools.product(NO_BOTH_ALPHABET, repeat=arr.d)
    )
    compact = theta_cpt(arr)
    covered = verify_covering(arr).covered if compact else None
    return {
        "equivalence": equivalence,
        "covered": covered,
        "adjacency": adjacency_lemma_check(arr),
        "density": all(verify_density(arr, eps) for eps in all_sign_vectors(arr.d)),
        "criterion_agrees": core_empty_criterion(arr).agree,
        "theta_cpt": len(compact),
    }


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--count", type=int, default=25)
    parser.add_argument("--max-d", type=int, default=7)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    start = time.monotonic()
    failures = 0
    for index in range(args.count):
        arr = random_smooth_arrangement(rng, max_d=args.max_d)
        result = check_instance(arr)
        ok = all(v is not False for v in result.values())
        failures += not ok
        print(
            f"[{index:03d}] n={arr.n} d={arr.d} theta_cpt={result['theta_cpt']} "
            f"equivalence={result['equivalence']} covered={result['covered']} "
            f"adjacency={result['adjacency']} density={result['density']} "
            f"criterion={result['criterion_agrees']} {'ok' if ok else 'FAIL'}"
        )
    elapsed = time.monotonic() - start
    print(f"{args.count} instances, {failures} failures, {elapsed:.1f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
