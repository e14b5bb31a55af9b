"""corpus-export: select submissions from a data directory and write M2 or JSONL."""

from __future__ import annotations

import argparse
import sys

from .corpus import SelectionConfig, export_jsonl, export_m2, select_candidates
from .errors import KatebError
from .store import DataStore


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="corpus-export",
        description="Export checked submissions as an annotated corpus.",
    )
    parser.add_argument("--data-dir", required=True, help="service data directory")
    parser.add_argument("--out", required=True, help="output file path")
    parser.add_argument("--format", required=True, choices=("m2", "jsonl"))
    parser.add_argument("--require-improvement", action="store_true",
                        help="keep only essays whose errors dropped or CEFR rose between first and last revision")
    parser.add_argument("--require-multi", action="store_true",
                        help="keep only essays with at least two revisions")
    parser.add_argument("--min-words", type=int, default=50)
    parser.add_argument("--max-words", type=int, default=600)
    args = parser.parse_args(argv)

    try:
        store = DataStore(args.data_dir)
        config = SelectionConfig(
            require_multiple_revisions=args.require_multi,
            require_improvement=args.require_improvement,
            min_words=args.min_words,
            max_words=args.max_words,
        )
        records = select_candidates(store, config)
        if args.format == "m2":
            export_m2(records, args.out)
        else:
            export_jsonl(records, args.out)
    except KatebError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    total = store.total_submissions()
    print(f"selected {len(records)} of {total} submissions")
    print(
        "note: user ids are anonymized, but essay content itself is not scrubbed "
        "of personal details; review before publishing.",
        file=sys.stderr,
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
