"""Run the shipped theorem-verification campaigns and print their summaries.

    python3 scripts/run_campaign.py                 # both shipped configurations
    python3 scripts/run_campaign.py --p 14 --samples 200 --seed 3 --workers 4
"""
import argparse
import logging
from dataclasses import dataclass

from pancyclic.harness import run_campaign


@dataclass(frozen=True)
class CampaignConfig:
    p: int
    samples: int
    seed: int
    workers: int = 1
    out_dir: str = "counterexamples"


SHIPPED = (CampaignConfig(10, 10_000, 1), CampaignConfig(12, 1_000, 7))


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--p", type=int)
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--lines", action="store_true", help="also print per-sample verdict lines")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s")

    configs = SHIPPED if args.p is None else (CampaignConfig(args.p, args.samples, args.seed, args.workers),)
    failed = False
    for cfg in configs:
        report = run_campaign(cfg.p, cfg.samples, cfg.seed, out_dir=cfg.out_dir, workers=cfg.workers)
        text = report.format()
        if not args.lines:
            text = text[: text.index("verdict=")] if "verdict=" in text else text
        print(text, end="")
        failed |= report.counterexamples > 0
    raise SystemExit(3 if failed else 0)


if __name__ == "__main__":
    main()
