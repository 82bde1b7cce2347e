"""Command-line interface.

All indices in CLI input and output are 1-based (internal representation is
0-based). Exit codes: 0 success (and "yes" for retentive/isomorphic), 1 "no",
2 usage errors, 3 malformed or unreadable input files.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import core, counterexample, search
from .teq import TeqCache, is_retentive, minimal_retentive_sets, teq

PROG = "teqtools"


class UsageError(Exception):
    """Bad flag value detected after argument parsing (exit 2)."""


def _parse_index_list(text: str) -> list[int]:
    out = []
    for piece in text.split(","):
        piece = piece.strip()
        try:
            v = int(piece)
        except ValueError:
            raise UsageError(f"invalid index {piece!r}: expected a positive integer") from None
        if v < 1:
            raise UsageError(f"invalid index {v}: indices are 1-based")
        out.append(v)
    if not out:
        raise UsageError("empty index list")
    return out


def _indices_to_mask(indices: list[int], order: int, flag: str) -> int:
    mask = 0
    for v in indices:
        if v > order:
            raise UsageError(f"{flag}: index {v} out of range for order {order}")
        mask |= 1 << (v - 1)
    return mask


def _mask_to_indices(mask: int) -> list[int]:
    return [v + 1 for v in core.iter_members(mask)]


def _format_mask(mask: int) -> str:
    return " ".join(str(v) for v in _mask_to_indices(mask))


def _load(path: str) -> core.Tournament:
    return core.parse(Path(path).read_text())


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    elif not args.quiet:
        for line in text_lines:
            print(line)


def _cmd_verify(args) -> int:
    inst = counterexample.build_counterexample()
    report = counterexample.verify_claims(inst)
    if args.json:
        payload = {
            "command": "verify-counterexample",
            "all_passed": report.all_passed,
            "claims": [
                {"id": c.claim_id, "description": c.description,
                 "passed": c.passed, "details": c.details}
                for c in report.claims
            ],
            "notes": report.notes,
        }
        print(json.dumps(payload, indent=2))
    else:
        for c in report.claims:
            if args.quiet and c.passed:
                continue
            status = "PASS" if c.passed else "FAIL"
            line = f"{status}  {c.claim_id}: {c.description}"
            if c.details:
                line += f" ({c.details})"
            print(line)
        if not args.quiet:
            for note in report.notes:
                print(f"note: {note}")
        verdict = "all claims pass" if report.all_passed else "SOME CLAIMS FAIL"
        print(f"{len(report.claims)} claims checked: {verdict}")
    return 0 if report.all_passed else 1


def _cmd_teq(args) -> int:
    t = _load(args.file)
    result = teq(t)
    _emit(args,
          {"command": "teq", "file": args.file, "order": t.order,
           "teq": _mask_to_indices(result)},
          [_format_mask(result)])
    return 0


def _cmd_minimal_retentive(args) -> int:
    t = _load(args.file)
    sets = minimal_retentive_sets(t)
    _emit(args,
          {"command": "minimal-retentive", "file": args.file, "order": t.order,
           "minimal_retentive_sets": [_mask_to_indices(m) for m in sets]},
          [_format_mask(m) for m in sets])
    return 0


def _cmd_retentive(args) -> int:
    t = _load(args.file)
    mask = _indices_to_mask(_parse_index_list(args.set), t.order, "--set")
    result = is_retentive(TeqCache(t), mask)
    _emit(args,
          {"command": "retentive", "file": args.file,
           "set": _mask_to_indices(mask), "retentive": result},
          ["retentive" if result else "not retentive"])
    return 0 if result else 1


def _cmd_dominators(args) -> int:
    t = _load(args.file)
    if args.alt < 1:
        raise UsageError(f"--alt: index {args.alt} is 1-based")
    if args.alt > t.order:
        raise UsageError(f"--alt: index {args.alt} out of range for order {t.order}")
    if args.within is None:
        within = core.full_set(t.order)
    else:
        within = _indices_to_mask(_parse_index_list(args.within), t.order, "--within")
    result = core.dominators(t, within, args.alt - 1)
    _emit(args,
          {"command": "dominators", "file": args.file, "alt": args.alt,
           "within": None if args.within is None else _mask_to_indices(within),
           "dominators": _mask_to_indices(result)},
          [_format_mask(result)])
    return 0


def _cmd_isomorphic(args) -> int:
    a = _load(args.file_a)
    b = _load(args.file_b)
    witness = core.find_isomorphism(a, b)
    if witness is None:
        _emit(args,
              {"command": "isomorphic", "isomorphic": False, "mapping": None},
              ["not isomorphic"])
        return 1
    mapping = [w + 1 for w in witness]
    _emit(args,
          {"command": "isomorphic", "isomorphic": True, "mapping": mapping},
          ["isomorphic: " + " ".join(f"{i + 1}->{w}" for i, w in enumerate(mapping))])
    return 0


def _cmd_gen(args) -> int:
    t = core.random_tournament(args.order, args.seed)
    text = core.serialize(t)
    if args.json:
        print(json.dumps({"command": "gen", "order": args.order,
                          "seed": args.seed, "tournament": text}, indent=2))
    else:
        sys.stdout.write(text)
    return 0


def _cmd_search(args) -> int:
    config = search.SearchConfig(order=args.order, trials=args.trials, seed=args.seed,
                                 mode=args.mode, time_budget=args.time_budget,
                                 witness_cap=args.witness_cap)
    try:
        config.validate()
    except ValueError as e:
        raise UsageError(str(e)) from None
    report = search.search_random(config)
    witness_files = []
    if args.witness_dir is not None:
        out_dir = Path(args.witness_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        for k, text in enumerate(report.witnesses):
            path = out_dir / f"witness_{k:03d}.txt"
            path.write_text(text)
            witness_files.append(str(path))
    if args.json:
        payload = report.to_dict()
        payload["command"] = "search"
        payload["witness_files"] = witness_files
        print(json.dumps(payload, indent=2))
    elif args.quiet:
        print(f"found {report.found} / {report.trials}")
    else:
        print(f"order {report.order}  mode {report.mode}  trials {report.trials}  seed {report.seed}")
        print(f"found {report.found} tournaments with >= 2 minimal retentive sets")
        print(f"timed out: {report.timed_out}")
        print(f"total time: {report.total_seconds:.2f}s  (max trial {report.max_trial_seconds * 1000:.1f} ms)")
        for path in witness_files:
            print(f"witness written: {path}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable JSON output")
    common.add_argument("--quiet", action="store_true", help="suppress non-essential output")

    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Tournament equilibrium set computations, retentive sets, "
                    "the embedded order-24 two-minimal-sets instance, and a seeded search harness. "
                    "All indices are 1-based.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-counterexample", parents=[common],
                       help="recheck every claimed property of the embedded order-24 instance")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("teq", parents=[common], help="compute the tournament equilibrium set")
    p.add_argument("file", help="tournament file")
    p.set_defaults(func=_cmd_teq)

    p = sub.add_parser("minimal-retentive", parents=[common],
                       help="list all inclusion-minimal TEQ-retentive sets")
    p.add_argument("file", help="tournament file")
    p.set_defaults(func=_cmd_minimal_retentive)

    p = sub.add_parser("retentive", parents=[common],
                       help="test whether a set is TEQ-retentive (exit 0 yes, 1 no)")
    p.add_argument("file", help="tournament file")
    p.add_argument("--set", required=True, help="comma-separated 1-based indices")
    p.set_defaults(func=_cmd_retentive)

    p = sub.add_parser("dominators", parents=[common], help="list the dominators of an alternative")
    p.add_argument("file", help="tournament file")
    p.add_argument("--alt", type=int, required=True, help="alternative (1-based)")
    p.add_argument("--within", help="restrict to these alternatives (comma-separated, 1-based)")
    p.set_defaults(func=_cmd_dominators)

    p = sub.add_parser("isomorphic", parents=[common],
                       help="test two tournaments for isomorphism (exit 0 yes, 1 no)")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=_cmd_isomorphic)

    p = sub.add_parser("gen", parents=[common], help="generate a seeded random tournament")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("search", parents=[common],
                       help="search random tournaments for multiple minimal retentive sets")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--mode", choices=search.MODES, default="uniform")
    p.add_argument("--time-budget", type=float, default=None,
                   help="seconds per trial; timed-out trials are counted, not findings")
    p.add_argument("--witness-cap", type=int, default=search.DEFAULT_WITNESS_CAP,
                   help="max witnesses kept in the report")
    p.add_argument("--witness-dir", default=None,
                   help="directory to write witness tournament files into")
    p.set_defaults(func=_cmd_search)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except core.FormatError as e:
        print(f"{PROG}: error: {e}", file=sys.stderr)
        return 3
    except OSError as e:
        print(f"{PROG}: error: {e}", file=sys.stderr)
        return 3
    except UsageError as e:
        print(f"{PROG}: error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"{PROG}: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
