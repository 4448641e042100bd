"""Command line: config authoring, solving, replay, hull analysis, rendering.

Exit codes: 0 success, 1 usage, 2 validation (bad config, bad action file,
incomplete episode, malformed front), 3 resource limit.
"""
from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
import time
from pathlib import Path

from seatreasure import __version__
from seatreasure.engine import (
    EnvConfig,
    EpisodeFinishedError,
    InvalidActionError,
    InvalidConfigError,
    canonical_json,
)
from seatreasure.pareto import INTERIOR, VERTEX
from seatreasure.render import format_number, render_svg, render_text
from seatreasure.solver import (
    ResourceLimitError,
    SolutionPoint,
    SolveStats,
    solve_bi_front,
    solve_tri_front,
    with_hull_labels,
)
from seatreasure.wrappers import make_env, n_objectives

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_LIMIT = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message, code=EXIT_INVALID):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- files --------------------------------------------------------------------

def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def load_config(path: str) -> EnvConfig:
    text = _read_text(path)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise CliError(f"{path}: configuration must be a JSON object")
    try:
        return EnvConfig.from_dict(data).check()
    except InvalidConfigError as exc:
        raise CliError(f"{path}: " + "; ".join(exc.violations)) from None
    except TypeError as exc:
        raise CliError(f"{path}: {exc}") from None


def config_digest(config: EnvConfig) -> str:
    return hashlib.sha256(config.to_json().encode("utf-8")).hexdigest()


def parse_action(line: str, discrete: bool):
    parts = [p.strip() for p in line.split(",")]
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"not an integer action: {line!r}") from None
    if discrete:
        if len(vals) != 1:
            raise ValueError(f"expected a direction code 0..3, got {line!r}")
        return vals[0]
    if len(vals) != 2:
        raise ValueError(f"expected 'ax,ay', got {line!r}")
    return tuple(vals)


def load_actions(path: str, discrete: bool) -> list[tuple[int, object]]:
    """``(line_number, action)`` pairs; blank lines and ``#`` comments skipped."""
    out = []
    for n, raw in enumerate(_read_text(path).splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append((n, parse_action(line, discrete)))
        except ValueError as exc:
            raise CliError(f"{path}:{n}: {exc}") from None
    return out


def _fmt_action(a) -> str:
    return str(a) if isinstance(a, int) else f"{a[0]},{a[1]}"


def _fmt_vec(v) -> str:
    return ",".join(format_number(x) for x in v)


# -- front documents ---------------------------------------------------------

def front_to_json(points: list[SolutionPoint], digest: str, objectives: int, meta: dict) -> str:
    doc = {
        "config_digest": digest,
        "objectives": objectives,
        "points": [
            {
                "rewards": list(p.rewards),
                "hull_label": p.hull_label,
                "actions": [a if isinstance(a, int) else list(a) for a in p.actions],
            }
            for p in points
        ],
        "metadata": meta,
    }
    return canonical_json(doc)


def front_to_csv(points: list[SolutionPoint], objectives: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["time", "treasure", "fuel"][:objectives] + ["hull", "actions"])
    for p in points:
        w.writerow([format_number(x) for x in p.rewards]
                   + [p.hull_label or "", ";".join(_fmt_action(a) for a in p.actions)])
    return buf.getvalue()


def _number(s: str):
    try:
        return int(s)
    except ValueError:
        return float(s)


def read_front(path: str) -> tuple[list[SolutionPoint], dict | None]:
    """Parse a JSON or CSV front; returns the points and the JSON document if any."""
    text = _read_text(path)
    try:
        if text.lstrip().startswith("{"):
            doc = json.loads(text)
            pts = [
                SolutionPoint(
                    tuple(p["rewards"]),
                    tuple(a if isinstance(a, int) else tuple(a) for a in p["actions"]),
                    p.get("hull_label"),
                )
                for p in doc["points"]
            ]
            return pts, doc
        rows = list(csv.reader(io.StringIO(text)))
        header, body = rows[0], rows[1:]
        k = header.index("hull")
        pts = []
        for r in body:
            acts = tuple(parse_action(a, "," not in a) for a in r[k + 1].split(";") if a)
            pts.append(SolutionPoint(tuple(_number(x) for x in r[:k]), acts, r[k] or None))
        return pts, None
    except (KeyError, ValueError, IndexError, TypeError) as exc:
        raise CliError(f"{path}: malformed front file ({exc})") from None


# -- commands ----------------------------------------------------------------

def cmd_config(args) -> int:
    if args.from_file is not None:
        config = load_config(args.from_file)
    else:
        config = EnvConfig.vamplew() if args.objectives == 2 else EnvConfig()
    sys.stdout.write(config.to_json())
    return EXIT_OK


def _config_arg(args) -> EnvConfig:
    if args.config is not None:
        return load_config(args.config)
    return EnvConfig.vamplew() if getattr(args, "objectives", 3) == 2 else EnvConfig()


def cmd_solve(args) -> int:
    config = _config_arg(args)
    objectives = args.objectives or n_objectives(config)
    stats = SolveStats()
    t0 = time.perf_counter()
    try:
        if objectives == 3:
            front = solve_tri_front(config, threads=args.threads, max_labels=args.max_labels, stats=stats)
        else:
            front = solve_bi_front(config)
    except ResourceLimitError as exc:
        raise CliError(str(exc), EXIT_LIMIT) from None
    except ValueError as exc:
        raise CliError(str(exc)) from None
    front = with_hull_labels(front)
    meta = {
        "solver_version": __version__,
        "label_counts": {"labels": stats.labels_created, "layers": stats.layers, "nodes": stats.nodes},
    }
    if args.record_time:
        meta["wall_time"] = round(time.perf_counter() - t0, 3)
    if args.format == "csv":
        text = front_to_csv(front, objectives)
    else:
        text = front_to_json(front, config_digest(config), objectives, meta)
    _write_text(args.out, text)
    return EXIT_OK


def cmd_play(args) -> int:
    config = load_config(args.config) if args.config else EnvConfig()
    discrete = "vamplew" in config.wrappers
    actions = load_actions(args.actions, discrete)
    env = make_env(config)
    env.reset()
    total = None
    done = False
    for i, (line, a) in enumerate(actions, start=1):
        if done:
            raise CliError(f"{args.actions}:{line}: episode already finished")
        try:
            _, reward, term, trunc, info = env.step(a)
        except (InvalidActionError, EpisodeFinishedError) as exc:
            raise CliError(f"{args.actions}:{line}: {exc}") from None
        total = tuple(reward) if total is None else tuple(x + y for x, y in zip(total, reward))
        done = term or trunc
        print(f"{i}\t{_fmt_action(a)}\t{_fmt_vec(reward)}\t{'collided' if info.collided else 'ok'}")
    if not done:
        print(f"total\t{_fmt_vec(total) if total else '-'}\tincomplete")
        raise CliError("incomplete episode: actions ran out before the episode ended")
    print(f"total\t{_fmt_vec(total)}")
    return EXIT_OK


def cmd_hull(args) -> int:
    points, doc = read_front(args.front)
    labelled = with_hull_labels(points)
    counts = {VERTEX: sum(p.hull_label == VERTEX for p in labelled),
              INTERIOR: sum(p.hull_label == INTERIOR for p in labelled)}
    print(f"vertex: {counts[VERTEX]}")
    print(f"interior: {counts[INTERIOR]}")
    out = args.out or args.front
    if out != "-":
        if doc is not None:
            text = front_to_json(labelled, doc.get("config_digest"), doc.get("objectives", len(points[0].rewards)),
                                 doc.get("metadata", {}))
        else:
            text = front_to_csv(labelled, len(points[0].rewards))
        _write_text(out, text)
    return EXIT_OK


def cmd_render(args) -> int:
    config = load_config(args.config) if args.config else EnvConfig()
    discrete = "vamplew" in config.wrappers
    actions = load_actions(args.actions, discrete) if args.actions else []
    if args.frame < 0 or args.frame > len(actions):
        raise CliError(f"frame {args.frame} out of range 0..{len(actions)}")
    env = make_env(config)
    env.reset()
    for line, a in actions[: args.frame]:
        try:
            env.step(a)
        except (InvalidActionError, EpisodeFinishedError) as exc:
            raise CliError(f"frame {args.frame} out of range: line {line}: {exc}") from None
    render = render_svg if args.format == "svg" else render_text
    _write_text(args.out, render(env.state, config))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="seatreasure", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("config", help="emit a canonical configuration")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--default", action="store_true", help="the default configuration")
    g.add_argument("--from-file", metavar="PATH", help="canonicalize PATH ('-' for stdin)")
    c.add_argument("--objectives", type=int, choices=(2, 3), default=3,
                   help="with --default: 3 = fuel wrapper, 2 = Vamplew wrapper")
    c.set_defaults(func=cmd_config)

    s = sub.add_parser("solve", help="compute the exact Pareto front")
    s.add_argument("--config", metavar="PATH")
    s.add_argument("--objectives", type=int, choices=(2, 3))
    s.add_argument("--out", metavar="PATH")
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--max-labels", type=int, default=None)
    s.add_argument("--record-time", action="store_true",
                   help="store wall time in the metadata (output is then not reproducible)")
    s.set_defaults(func=cmd_solve)

    pl = sub.add_parser("play", help="replay an action file and print the reward trace")
    pl.add_argument("--config", metavar="PATH")
    pl.add_argument("--actions", metavar="PATH", required=True)
    pl.set_defaults(func=cmd_play)

    h = sub.add_parser("hull", help="classify front points against the convex hull")
    h.add_argument("--front", metavar="PATH", required=True)
    h.add_argument("--out", metavar="PATH", help="write here instead of rewriting --front")
    h.set_defaults(func=cmd_hull)

    r = sub.add_parser("render", help="draw one frame of a replayed episode")
    r.add_argument("--config", metavar="PATH")
    r.add_argument("--actions", metavar="PATH")
    r.add_argument("--format", choices=("text", "svg"), default="text")
    r.add_argument("--frame", type=int, default=0)
    r.add_argument("--out", metavar="PATH")
    r.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"seatreasure: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
