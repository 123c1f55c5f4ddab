"""Command line front end.

Every command reads JSON files, writes one JSON document to stdout and
exits 0 on success, 1 when a domain precondition fails, 2 on malformed
input.  ``selftest`` is the exception: it prints the acceptance table as
plain text.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .acceptance import run_acceptance
from .cubical import suspension_model, validate
from .homology import RATIONALS, FieldSpec, betti
from .james import crossing_word
from .loop_algebra import loop_space_homology
from .paths import STAR, Suspension
from .serialize import (
    FormatError,
    dump_complex,
    dump_path,
    dump_word,
    load_complex,
    load_path,
    parse_rational,
    rational_str,
)
from .straighten import DEFAULT_SAMPLES, contract_to_constant, full_straighten


@dataclass(frozen=True)
class RunConfig:
    """Settings shared by the computing commands; one place to validate them."""

    field: FieldSpec = RATIONALS
    degree: int = 6
    epsilon: Fraction = Fraction(1, 2)
    samples: tuple = DEFAULT_SAMPLES
    x_structure: str = "total"
    seed: int = 0

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        if not 0 < self.epsilon < 1:
            raise ValueError("epsilon must lie strictly between 0 and 1")
        if len(self.samples) < 2 or any(not 0 <= s <= 1 for s in self.samples):
            raise ValueError("samples must be at least two rationals in [0, 1]")
        if self.x_structure not in ("total", "directed"):
            raise ValueError("x_structure must be 'total' or 'directed'")


def _sample_grid(count: int) -> tuple:
    if count < 2:
        raise ValueError("samples must be at least 2")
    return tuple(Fraction(k, count - 1) for k in range(count))


def _config(args: argparse.Namespace) -> RunConfig:
    kwargs = {}
    if getattr(args, "field", None) is not None:
        kwargs["field"] = args.field
    if getattr(args, "degree", None) is not None:
        kwargs["degree"] = args.degree
    if getattr(args, "eps", None) is not None:
        kwargs["epsilon"] = args.eps
    if getattr(args, "samples", None) is not None:
        kwargs["samples"] = _sample_grid(args.samples)
    if getattr(args, "x_structure", None) is not None:
        kwargs["x_structure"] = args.x_structure
    if getattr(args, "seed", None) is not None:
        kwargs["seed"] = args.seed
    return RunConfig(**kwargs)


def _read_json(filename: str):
    try:
        with open(filename, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except json.JSONDecodeError as err:
        raise FormatError(f"{filename}: {err}") from None


def _load_complex_file(filename: str):
    return load_complex(_read_json(filename))


def _load_pair(args: argparse.Namespace):
    sus = Suspension(_load_complex_file(args.complex))
    return sus, load_path(sus, _read_json(args.path))


def _point_json(pt) -> dict:
    if pt is STAR:
        return {"kind": "star"}
    return {
        "kind": "interior",
        "height": rational_str(pt.height),
        "cube": pt.point.cube,
        "coords": [rational_str(c) for c in pt.point.coords],
    }


def cmd_validate(args):
    report = validate(_load_complex_file(args.complex))
    payload = {
        "violations": [
            {"kind": v.kind, "cube": v.cube, "detail": v.detail, "indices": list(v.indices)}
            for v in report
        ]
    }
    return payload, (1 if report else 0)


def cmd_homology(args):
    config = _config(args)
    dims = betti(_load_complex_file(args.complex), config.field)
    if args.reduced:
        dims = dims.reduced()
    return {"dims": {str(k): n for k, n in enumerate(dims.as_tuple())}}, 0


def cmd_suspension(args):
    model = suspension_model(_load_complex_file(args.complex))
    payload = {
        "complex": dump_complex(model.complex),
        "star": model.star,
        "lower": sorted(model.lower),
        "upper": sorted(model.upper),
    }
    return payload, 0


def cmd_loop_homology(args):
    config = _config(args)
    series = loop_space_homology(
        _load_complex_file(args.complex), config.field, truncation=config.degree
    )
    return {"series": [series.get(k) for k in range(config.degree + 1)]}, 0


def cmd_sec(args):
    sus, loop = _load_pair(args)
    return dump_word(crossing_word(sus, loop).letters), 0


def cmd_straighten(args):
    config = _config(args)
    sus, loop = _load_pair(args)
    result, frames = full_straighten(sus, loop, config.samples)
    payload = {
        "result": dump_path(result),
        "frames": [dump_path(f) for f in frames],
        "sec": dump_word(crossing_word(sus, result).letters),
    }
    if args.contract:
        payload["trail"] = [dump_path(f) for f in contract_to_constant(sus, loop, config.samples)]
    return payload, 0


def cmd_contract(args):
    config = _config(args)
    sus, loop = _load_pair(args)
    trail = contract_to_constant(sus, loop, config.samples)
    return {"trail": [dump_path(f) for f in trail]}, 0


def cmd_path_eval(args):
    sus, loop = _load_pair(args)
    return _point_json(sus.evaluate(loop, args.t)), 0


def cmd_path_verify(args):
    config = _config(args)
    sus, loop = _load_pair(args)
    problems = sus.verify_directed(loop, config.x_structure)
    return {"ok": not problems, "problems": problems}, (1 if problems else 0)


def cmd_path_phi(args):
    sus, loop = _load_pair(args)
    return dump_path(sus.shrink_cone(loop, args.side, args.t)), 0


def cmd_path_increase(args):
    config = _config(args)
    sus, loop = _load_pair(args)
    return dump_path(sus.make_increasing(loop, config.epsilon)), 0


def cmd_path_truncate(args):
    sus, loop = _load_pair(args)
    return dump_path(sus.truncate_near_basepoint(loop, args.delta)), 0


def cmd_selftest(args):
    config = _config(args)
    results = run_acceptance(config.seed)
    width = max(len(r.name) for r in results)
    for r in results:
        print(f"{'PASS' if r.ok else 'FAIL'}  {r.name:<{width}}  {r.detail}")
    passed = sum(r.ok for r in results)
    print(f"{passed}/{len(results)} criteria passed")
    return None, (0 if passed == len(results) else 1)


def _add_complex_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("complex", help="complex JSON file")


def _add_path_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("path", help="path JSON file")
    parser.add_argument("--complex", required=True, help="complex JSON file the path lives over")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dirloop",
        description="Exact computations with directed loops on suspended cubical complexes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a complex presentation; exit 1 if defects found")
    _add_complex_arg(p)
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("homology", help="homology dimensions of a complex")
    _add_complex_arg(p)
    p.add_argument("--field", type=FieldSpec.parse, default=None, help="q or zp:<p> (default q)")
    p.add_argument("--reduced", action="store_true", help="drop one dimension in degree 0")
    p.set_defaults(handler=cmd_homology)

    p = sub.add_parser("suspension", help="build the suspension model of a complex")
    _add_complex_arg(p)
    p.set_defaults(handler=cmd_suspension)

    p = sub.add_parser("loop-homology", help="homology series of the loop space of the suspension")
    _add_complex_arg(p)
    p.add_argument("--field", type=FieldSpec.parse, default=None, help="q or zp:<p> (default q)")
    p.add_argument("--degree", type=int, default=None, help="truncation degree (default 6)")
    p.set_defaults(handler=cmd_loop_homology)

    p = sub.add_parser("sec", help="crossing word of a directed loop")
    _add_path_args(p)
    p.set_defaults(handler=cmd_sec)

    p = sub.add_parser("straighten", help="straighten a directed loop onto its word loop")
    _add_path_args(p)
    p.add_argument("--samples", type=int, default=None, help="number of frames (default 5)")
    p.add_argument("--contract", action="store_true", help="also contract to the constant loop")
    p.set_defaults(handler=cmd_straighten)

    p = sub.add_parser("contract", help="contract a directed loop to the constant loop")
    _add_path_args(p)
    p.add_argument("--samples", type=int, default=None, help="number of frames (default 5)")
    p.set_defaults(handler=cmd_contract)

    p = sub.add_parser("path", help="operations on path files")
    psub = p.add_subparsers(dest="path_command", required=True)

    q = psub.add_parser("eval", help="evaluate a path at a time")
    _add_path_args(q)
    q.add_argument("--t", type=parse_rational, required=True, help="time, a rational")
    q.set_defaults(handler=cmd_path_eval)

    q = psub.add_parser("verify", help="directedness report; exit 1 if violations found")
    _add_path_args(q)
    q.add_argument(
        "--x-structure",
        dest="x_structure",
        choices=("total", "directed"),
        default=None,
        help="whether base coordinates must also be nondecreasing",
    )
    q.set_defaults(handler=cmd_path_verify)

    q = psub.add_parser("phi", help="shrink one half cone toward the middle slice")
    _add_path_args(q)
    q.add_argument("--side", choices=("lower", "upper"), required=True)
    q.add_argument("--t", type=parse_rational, required=True, help="stage in [0, 1]")
    q.set_defaults(handler=cmd_path_phi)

    q = psub.add_parser("increase", help="shear heights to make the loop strictly increasing")
    _add_path_args(q)
    q.add_argument("--eps", type=parse_rational, required=True, help="shear in (0, 1)")
    q.set_defaults(handler=cmd_path_increase)

    q = psub.add_parser("truncate", help="replace near basepoint stretches by pauses")
    _add_path_args(q)
    q.add_argument(
        "--delta",
        type=parse_rational,
        default=None,
        help="height threshold; omitted means the collar retraction",
    )
    q.set_defaults(handler=cmd_path_truncate)

    p = sub.add_parser("selftest", help="run the acceptance suite and print a pass/fail table")
    p.add_argument("--seed", type=int, default=None, help="corpus seed (default 0)")
    p.set_defaults(handler=cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        payload, code = args.handler(args)
    except FormatError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    if payload is not None:
        print(json.dumps(payload))
    return code


if __name__ == "__main__":
    sys.exit(main())
