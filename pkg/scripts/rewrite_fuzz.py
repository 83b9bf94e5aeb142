#!/usr/bin/env python3
"""Fuzz the envelope rewriting system on random metabelian algebras:
random dotted words must reach the same normal form under both reduction
strategies, and every overlap must reduce to zero."""

import argparse
import random
import sys
from fractions import Fraction

from permalg import Envelope, MetabelianLieAlgebra
from permalg.envelope import EnvelopeMonomial


def random_metabelian(dim, rng):
    brackets = {}
    if rng.random() < 0.5 and dim >= 2:
        for j in range(2, dim + 1):
            vec = {b: Fraction(rng.randint(-3, 3)) for b in range(2, dim + 1) if rng.random() < 0.6}
            vec = {b: c for b, c in vec.items() if c}
            if vec:
                brackets[(1, j)] = vec
    else:
        m = max(2, dim - 1)
        for i in range(1, m + 1):
            for j in range(i + 1, m + 1):
                vec = {b: Fraction(rng.randint(-2, 2)) for b in range(m + 1, dim + 1) if rng.random() < 0.8}
                vec = {b: c for b, c in vec.items() if c}
                if vec:
                    brackets[(i, j)] = vec
    return MetabelianLieAlgebra(dim, brackets=brackets)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--algebras", type=int, default=10)
    parser.add_argument("--words", type=int, default=200)
    parser.add_argument("--max-degree", type=int, default=8)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    bad = 0
    for a in range(args.algebras):
        algebra = random_metabelian(rng.randint(2, 5), rng)
        assert algebra.validate().ok
        env = Envelope(algebra)
        comps = env.check_compositions()
        mismatches = 0
        for _ in range(args.words):
            degree = rng.randint(1, args.max_degree)
            dot = rng.randint(1, env.dim)
            tail = tuple(sorted(rng.randint(1, env.dim) for _ in range(degree - 1)))
            element = {EnvelopeMonomial(dot, tail): Fraction(1)}
            if env.normal_form(element, "leftmost") != env.normal_form(element, "rightmost"):
                mismatches += 1
        status = "ok" if comps.all_trivial and mismatches == 0 else "FAIL"
        bad += status == "FAIL"
        print(
            f"algebra {a}: dim {env.dim}, overlaps {len(comps.entries)} "
            f"(trivial: {comps.all_trivial}), strategy mismatches {mismatches} -> {status}"
        )
    sys.exit(1 if bad else 0)


if __name__ == "__main__":
    main()
