"""Command-line front end: sweeps, the anticlassicality search, and reports."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .measures import measure_report
from .states import QcsSpec, StateKind, build_state
from .sweep import (
    NumericalError,
    SweepSpec,
    klyshko_bars,
    resolve_amplitude,
    run_sweep,
    table1_search,
    write_rows_csv,
    write_rows_json,
)
from .witnesses import witness_report


def _parse_quantities(text: str) -> tuple[tuple[str, int | None], ...]:
    out: list[tuple[str, int | None]] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if ":" in chunk:
            ident, _, order_text = chunk.partition(":")
            try:
                order = int(order_text)
            except ValueError:
                raise ValueError(f"bad order in quantity token {chunk!r}") from None
            out.append((ident.strip(), order))
        else:
            out.append((chunk, None))
    if not out:
        raise ValueError("no quantities given")
    return tuple(out)


def _parse_d_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise ValueError(f"bad level-count list {text!r}") from None


def _parse_range(text: str) -> tuple[str, str]:
    start, sep, stop = text.partition(":")
    if not sep or not start.strip() or not stop.strip():
        raise ValueError(f"range must look like start:stop, got {text!r}")
    return start.strip(), stop.strip()


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    raw = json.loads(Path(path).read_text())
    if not isinstance(raw, dict):
        raise ValueError("config must be a JSON object")
    return raw


def _config_quantities(value) -> tuple[tuple[str, int | None], ...]:
    # Accepts "hoa:1,a3", ["hoa:1", "a3"], or [["hoa", 1], ["a3", null]].
    if isinstance(value, str):
        return _parse_quantities(value)
    out: list[tuple[str, int | None]] = []
    for item in value:
        if isinstance(item, str):
            out.extend(_parse_quantities(item))
        else:
            ident, order = item
            out.append((str(ident), None if order is None else int(order)))
    return tuple(out)


def _build_sweep_spec(args: argparse.Namespace) -> SweepSpec:
    cfg = _load_config(args.config)
    kind = args.kind if args.kind is not None else cfg.get("state_kind")
    if kind is None:
        raise ValueError("a state kind is required (--kind or config)")
    d_list = _parse_d_list(args.d) if args.d is not None else tuple(cfg.get("d_list", ()))
    if args.range is not None:
        amp_start, amp_stop = _parse_range(args.range)
    else:
        amp_start = cfg.get("amp_start")
        amp_stop = cfg.get("amp_stop")
        if amp_start is None or amp_stop is None:
            raise ValueError("an amplitude range is required (--range or config)")
    steps = args.steps if args.steps is not None else cfg.get("steps")
    if steps is None:
        raise ValueError("a step count is required (--steps or config)")
    if args.quantities is not None:
        quantities = _parse_quantities(args.quantities)
    elif "quantities" in cfg:
        quantities = _config_quantities(cfg["quantities"])
    else:
        raise ValueError("quantities are required (--quantities or config)")
    fmt = args.format if args.format is not None else cfg.get("format", "csv")
    return SweepSpec(
        state_kind=StateKind(kind),
        d_list=tuple(int(d) for d in d_list),
        amp_start=amp_start,
        amp_stop=amp_stop,
        steps=int(steps),
        quantities=quantities,
        output_format=fmt,
    )


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _cmd_sweep(args: argparse.Namespace) -> int:
    spec = _build_sweep_spec(args)
    rows = run_sweep(spec)
    import io

    buf = io.StringIO()
    if spec.output_format == "csv":
        write_rows_csv(rows, buf)
    else:
        write_rows_json(rows, buf)
    _emit(buf.getvalue(), args.out)
    return 0


def _cmd_table1(args: argparse.Namespace) -> int:
    report = table1_search(args.tolerance)
    _emit(json.dumps(report, indent=2) + "\n", args.out)
    return 0


def _cmd_klyshko(args: argparse.Namespace) -> int:
    amplitudes = [tok.strip() for tok in args.amplitudes.split(",") if tok.strip()]
    if not amplitudes:
        raise ValueError("at least one amplitude is required")
    report = klyshko_bars(StateKind(args.kind), args.d, amplitudes)
    _emit(json.dumps(report, indent=2) + "\n", args.out)
    return 0


def _cmd_report(args: argparse.Namespace) -> int:
    amp = resolve_amplitude(args.amplitude, args.d)
    state = build_state(QcsSpec(StateKind(args.kind), args.d, amp))
    payload = {
        "kind": args.kind,
        "d": args.d,
        "amplitude": amp,
        "witnesses": witness_report(state).as_dicts(),
        "measures": measure_report(state).as_dict(),
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quditnc",
        description=(
            "Finite-level coherent states: nonclassicality witness sweeps, "
            "anticlassicality searches, and per-state reports."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="evaluate quantities over an amplitude grid")
    sweep.add_argument("--kind", choices=["linear", "nonlinear"])
    sweep.add_argument("--d", help="comma-separated level counts, e.g. 3,4")
    sweep.add_argument(
        "--range",
        help="amplitude range start:stop; Td/2 and Td/4 resolve per level count",
    )
    sweep.add_argument("--steps", type=int)
    sweep.add_argument(
        "--quantities",
        help="comma-separated ids, ordered ones as id:order, e.g. hoa:1,a3",
    )
    sweep.add_argument("--out", help="output path (default: stdout)")
    sweep.add_argument("--format", choices=["csv", "json"])
    sweep.add_argument("--config", help="JSON file with SweepSpec fields; flags win")
    sweep.set_defaults(handler=_cmd_sweep)

    table1 = sub.add_parser(
        "table1", help="search level counts for anticlassicality targets"
    )
    table1.add_argument("--tolerance", type=float, default=0.005)
    table1.add_argument("--out")
    table1.set_defaults(handler=_cmd_table1)

    kly = sub.add_parser("klyshko", help="per-level probability bars for one family")
    kly.add_argument("--kind", required=True, choices=["linear", "nonlinear"])
    kly.add_argument("--d", required=True, type=int)
    kly.add_argument(
        "--amplitudes", required=True, help="comma-separated values or Td/2, Td/4"
    )
    kly.add_argument("--out")
    kly.set_defaults(handler=_cmd_klyshko)

    report = sub.add_parser("report", help="all witnesses and measures for one state")
    report.add_argument("--kind", required=True, choices=["linear", "nonlinear"])
    report.add_argument("--d", required=True, type=int)
    report.add_argument("--amplitude", required=True)
    report.add_argument("--out")
    report.set_defaults(handler=_cmd_report)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
