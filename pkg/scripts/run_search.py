"""Exhaustive scan of 0/1 normal forms in one dimension, with checkpointing.

    python3 scripts/run_search.py --dim 5 --checkpoint runs/d5.json --out runs/d5_report.json
"""

import argparse
import json
import logging
from pathlib import Path

from zonobelt.search import SearchOptions, search_xi


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--checkpoint")
    p.add_argument("--out", help="write the final report here as JSON")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--row-filter", action="store_true")
    p.add_argument("--symmetry", action="store_true")
    args = p.parse_args()
    logging.basicConfig(level=logging.INFO)

    opts = SearchOptions(row_filter=args.row_filter, symmetry_reduction=args.symmetry,
                         checkpoint_path=args.checkpoint, workers=args.workers)
    report = search_xi(args.dim, opts)
    data = json.dumps(report.to_json(), indent=1, sort_keys=True)
    if args.out:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        Path(args.out).write_text(data + "\n")
    print(data)


if __name__ == "__main__":
    main()
