"""Command-line entry point for the triangle-bar localizability tools.

    python run.py gen cycle:6 -o g.json
    python run.py run scenario.json --trace trace.txt
    python run.py oracle g.json
    python run.py ftg g.json --format dot
    python run.py compare net:linked --trials 10
    python run.py trace wheel:6 --scheduler-seed 3 -o trace.txt
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from dotenv import load_dotenv

load_dotenv()

from barClasses import BarClassError, generate
from distsim import Scenario, SeedNotTriangle, SimulationError, metrics, seed_of, simulate
from ftg import build_ftg, ftg_report
from graphModel import Graph, GraphError, Triangle, enumerate_triangles, format_graph, parse_graph, read_graph
from graphModel.graph_io import FORMATS
from publisher import publisher_for
from rigidityOracle import OracleError, is_globally_rigid

logger = logging.getLogger("tribar.cli")

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_SEED = 3
EXIT_IO = 4
EXIT_PROPERTY = 5
EXIT_SIMULATION = 6


class PropertyFailure(Exception):
    pass


# -- Inputs ----------------------------------------------------------------

def _seed_arg(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3 or not all(p.strip().lstrip("-").isdigit() for p in parts):
        raise argparse.ArgumentTypeError(f"Invalid seed triangle {text!r}, expected a,b,c")
    return tuple(int(p) for p in parts)


def _is_generator_spec(arg: str) -> bool:
    return ":" in arg and not Path(arg).exists() and "/" not in arg


def load_input(arg: str) -> tuple[Graph, Optional[Triangle]]:
    """A graph file path, an s3:// key, or a generator spec such as `wheel:6`; returns the graph and its default seed."""
    if _is_generator_spec(arg):
        inst = generate(arg)
        return inst.graph, inst.seed_triangle
    if arg.startswith("s3://"):
        pub, key = publisher_for(arg)
        g = parse_graph(pub.read_text(key), key)
    else:
        g = read_graph(arg)
    tris = enumerate_triangles(g)
    return g, (min(tris) if tris else None)


def _pick_seed(given, default: Optional[Triangle]):
    seed = given if given is not None else default
    if seed is None:
        raise SeedNotTriangle(())
    return seed


def _emit(args, text: str) -> None:
    pub, key = publisher_for(getattr(args, "out", None))
    pub.publish_text(key, text)


def _write_trace(path: Optional[str], lines: list[str]) -> None:
    if path is None:
        return
    pub, key = publisher_for(path)
    pub.publish_text(key, "\n".join(lines) + "\n")


# -- Commands --------------------------------------------------------------

def cmd_gen(args) -> int:
    inst = generate(args.spec)
    if args.format == "json":
        _emit(args, inst.to_json())
    else:
        _emit(args, format_graph(inst.graph, args.format))
    logger.info("Generated %s nodes=%d edges=%d", inst.spec, len(inst.graph), inst.graph.num_edges)
    return EXIT_OK


def cmd_run(args) -> int:
    scenario = Scenario.load(args.scenario)
    g, default = load_input(scenario.graph)
    seed = _pick_seed(args.seed_triangle or scenario.seed_triangle, default)
    scheduler_seed = args.scheduler_seed if args.scheduler_seed is not None else scenario.scheduler_seed
    trace = scenario.trace or args.trace is not None
    sim = simulate(g, seed, scheduler_seed, trace=trace)
    report = sim.report()
    out = report.to_dict()
    if args.metrics:
        out["metrics"] = metrics(report)
    _emit(args, json.dumps(out, sort_keys=True))
    _write_trace(args.trace, sim.trace)
    return EXIT_OK


def cmd_oracle(args) -> int:
    g, _ = load_input(args.graph)
    _emit(args, is_globally_rigid(g).to_json())
    return EXIT_OK


def cmd_ftg(args) -> int:
    g, default = load_input(args.graph)
    if args.format == "dot":
        _emit(args, build_ftg(g).to_dot())
        return EXIT_OK
    root = seed_of(g, args.seed_triangle) if args.seed_triangle else default
    _emit(args, json.dumps(ftg_report(g, root), sort_keys=True))
    return EXIT_OK


def cmd_compare(args) -> int:
    g, default = load_input(args.graph)
    seed = _pick_seed(args.seed_triangle, default)
    if args.trials < 1:
        raise BarClassError(f"Invalid trial count {args.trials!r}")
    start = args.scheduler_seed or 0
    marked = [frozenset(simulate(g, seed, start + k).localizable_nodes()) for k in range(args.trials)]

    lines = []
    failed = False
    same = len(set(marked)) == 1
    failed |= not same
    lines.append(f"{'PASS' if same else 'FAIL'} marked set identical across {args.trials} scheduler seeds")
    for nodes in sorted(set(marked), key=sorted):
        rigid = is_globally_rigid(g.induced(nodes)).globally_rigid
        failed |= not rigid
        lines.append(f"{'PASS' if rigid else 'FAIL'} {len(nodes)} of {len(g)} marked nodes globally rigid")
    _emit(args, "\n".join(lines))
    if failed:
        raise PropertyFailure(f"Comparison failed for {args.graph!r}")
    return EXIT_OK


def cmd_trace(args) -> int:
    g, default = load_input(args.graph)
    seed = _pick_seed(args.seed_triangle, default)
    sim = simulate(g, seed, args.scheduler_seed or 0, trace=True)
    _emit(args, "\n".join(sim.trace))
    return EXIT_OK


# -- Parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--log-level", default=None, help="Logging level (default: TRIBAR_LOG_LEVEL or WARNING)")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("-o", "--out", default=None, help="Local path or s3://bucket/prefix/key (default: stdout)")
        p.set_defaults(func=func)
        return p

    p = add("gen", cmd_gen, "Generate a graph from a family spec")
    p.add_argument("spec")
    p.add_argument("--format", choices=FORMATS, default="json")

    p = add("run", cmd_run, "Run all three phases for a scenario file")
    p.add_argument("scenario")
    p.add_argument("--seed-triangle", type=_seed_arg, default=None)
    p.add_argument("--scheduler-seed", type=int, default=None)
    p.add_argument("--trace", default=None, help="Write delivery trace lines to this target")
    p.add_argument("--metrics", action="store_true", help="Add the message and clock summary")

    p = add("oracle", cmd_oracle, "Centralized global rigidity verdict")
    p.add_argument("graph")

    p = add("ftg", cmd_ftg, "Flip-triangle graph, tree and base cycles")
    p.add_argument("graph")
    p.add_argument("--seed-triangle", type=_seed_arg, default=None)
    p.add_argument("--format", choices=("json", "dot"), default="json")

    p = add("compare", cmd_compare, "Check marked-set identity and soundness across scheduler seeds")
    p.add_argument("graph")
    p.add_argument("--seed-triangle", type=_seed_arg, default=None)
    p.add_argument("--scheduler-seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=10)

    p = add("trace", cmd_trace, "Delivery trace of a full run")
    p.add_argument("graph")
    p.add_argument("--seed-triangle", type=_seed_arg, default=None)
    p.add_argument("--scheduler-seed", type=int, default=0)
    return ap


def _configure_logging(level: Optional[str]) -> None:
    level = (level or os.environ.get("TRIBAR_LOG_LEVEL", "WARNING")).upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(asctime)s [%(levelname)s] %(name)s - %(message)s",
        stream=sys.stderr,
    )


def _fail(code: int, e: Exception) -> int:
    logger.error("%s", e)
    print(f"error: {e}", file=sys.stderr)
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.log_level)
    try:
        return args.func(args)
    except SeedNotTriangle as e:
        return _fail(EXIT_SEED, e)
    except (BarClassError, OracleError) as e:
        return _fail(EXIT_USAGE, e)
    except (OSError, GraphError, json.JSONDecodeError, ValueError) as e:
        return _fail(EXIT_IO, e)
    except PropertyFailure as e:
        return _fail(EXIT_PROPERTY, e)
    except SimulationError as e:
        return _fail(EXIT_SIMULATION, e)


if __name__ == "__main__":
    sys.exit(main())
