"""Run every lemma sweep and print status counts.

Violations, if any, are written to ``counterexamples/`` and the script
exits with status 3.
"""
import argparse
import time

from pancyclic.sweeps import (lemma1_exhaustive, lemma1_seeded, lemma2_exhaustive, lemma3_exhaustive,
                              lemma3_seeded, lemma4_exhaustive, lemma4_seeded, lemma5_seeded,
                              lemma6_harvest)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--count", type=int, default=200, help="premise-true instances per seeded sweep")
    ap.add_argument("--lemma6-cycles", type=int, default=20, help="spanning cycles tried per host")
    args = ap.parse_args()

    sweeps = {
        "1 exhaustive": lambda: lemma1_exhaustive(),
        "1 seeded": lambda: lemma1_seeded(args.count, args.seed),
        "2 exhaustive": lambda: lemma2_exhaustive(),
        "3 exhaustive": lambda: lemma3_exhaustive(),
        "3 seeded": lambda: lemma3_seeded(args.count, args.seed),
        "4 exhaustive": lambda: lemma4_exhaustive(),
        **{f"4{v} seeded": (lambda v=v: lemma4_seeded(args.count, args.seed, v)) for v in ("a_i", "a_ii", "b")},
        "5 seeded": lambda: lemma5_seeded(args.count, args.seed),
        "6 harvest": lambda: lemma6_harvest(args.lemma6_cycles),
    }
    bad = 0
    for key, run in sweeps.items():
        t = time.perf_counter()
        out = run()
        for res in out.values() if isinstance(out, dict) else (out,):
            print(f"[{key}] {res} ({time.perf_counter() - t:.2f}s)")
            if res.violations:
                bad += len(res.violations)
                res.persist("counterexamples", tag="_" + key.split()[-1])
    raise SystemExit(3 if bad else 0)


if __name__ == "__main__":
    main()
