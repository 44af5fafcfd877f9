"""Command-line front end.

Exit status: 0 on success, 1 when a verification or optimality check fails,
2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from . import bounds as bnd
from . import fermioracle, synth, verify
from .errors import FswapError, MalformedNetwork
from .lattice import HubbardModel, InteractionGraph, dense_interaction_graph, grid_interaction_graph, interaction_graph, make_grid
from .network import SwapNetwork

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MODELS = ("spinless", "spin", "dense", "grid", "triangular")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _dims(text: str) -> List[int]:
    try:
        dims = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not dims:
        raise argparse.ArgumentTypeError("empty --dims")
    return dims


def _add_model(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--model", choices=MODELS, required=required)
    p.add_argument("--rows", type=int, help="M (spinless, spin, triangular)")
    p.add_argument("--cols", type=int, help="N (spinless, spin, triangular)")
    p.add_argument("--n", type=int, help="mode count (dense)")
    p.add_argument("--dims", type=_dims, help="comma-separated grid sizes (grid)")
    p.add_argument("--mode", choices=("swap_optimal", "interaction_optimal"), default="swap_optimal",
                   help="dense construction")
    p.add_argument("--u", type=float, default=1.0, help="on-site coupling U")
    p.add_argument("--t", type=float, default=1.0, help="hopping amplitude t")


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fswapnet", description="Fermionic swap network synthesis and verification.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    s = sub.add_parser("synth", help="build a network")
    _add_model(s)
    s.add_argument("--out", help="write here instead of stdout")
    s.add_argument("--format", choices=("json", "text", "dot"), default="json")

    b = sub.add_parser("bounds", help="depth lower bounds")
    _add_model(b)
    b.add_argument("--format", choices=("json", "text"), default="json")

    v = sub.add_parser("verify", help="check a network file")
    v.add_argument("network")
    _add_model(v)
    v.add_argument("--against-bounds", action="store_true", help="fail unless swap depth meets its lower bound")
    v.add_argument("--format", choices=("json", "text"), default="text")

    o = sub.add_parser("oracle", help="exhaustive oracles")
    o.add_argument("quantity", choices=("bandwidth", "two-bandwidth", "min-swap-depth"))
    _add_model(o, required=False)
    o.add_argument("--max-size", type=int, help="largest vertex count to search")

    c = sub.add_parser("check-fermionic", help="dense-matrix checks of a synthesized network")
    _add_model(c)
    c.add_argument("--dt", type=float, default=0.05)
    c.add_argument("--tol", type=float, default=1e-9)

    e = sub.add_parser("export", help="convert a network file")
    e.add_argument("network")
    e.add_argument("--format", choices=("json", "text", "dot"), default="json")
    e.add_argument("--out")
    return p


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--model {args.model} needs {' '.join(missing)}")


def _hubbard(args) -> HubbardModel:
    _need(args, "rows", "cols")
    return HubbardModel(args.rows, args.cols, spin=args.model == "spin", U=args.u, t=args.t)


def _graph(args) -> InteractionGraph:
    if args.model in ("spinless", "spin"):
        return interaction_graph(_hubbard(args))
    if args.model == "dense":
        _need(args, "n")
        return dense_interaction_graph(args.n)
    if args.model == "grid":
        _need(args, "dims")
        return grid_interaction_graph(make_grid(args.dims))
    _need(args, "rows", "cols")
    return synth.triangular_interaction_graph(args.rows, args.cols)


def _network(args) -> SwapNetwork:
    if args.model in ("spinless", "spin"):
        return synth.hubbard_network(_hubbard(args))
    if args.model == "dense":
        _need(args, "n")
        return synth.dense_network(args.n, args.mode)
    if args.model == "grid":
        _need(args, "dims")
        return synth.grid_network(args.dims)
    _need(args, "rows", "cols")
    return synth.triangular_network(args.rows, args.cols)[1]


def _bounds(args) -> bnd.BoundsReport:
    if args.model in ("spinless", "spin"):
        return bnd.hubbard_bounds(_hubbard(args))
    if args.model == "dense":
        _need(args, "n")
        return bnd.dense_bounds(args.n)
    if args.model == "grid":
        _need(args, "dims")
        return bnd.boundary_profile(make_grid(args.dims))
    raise UsageError("no closed-form bounds for the triangular model")


def export(net: SwapNetwork, fmt: str) -> str:
    if fmt == "json":
        return net.to_json()
    if fmt == "text":
        return net.to_text()
    if fmt == "dot":
        return net.to_dot()
    raise UsageError(f"unknown format {fmt!r}")


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(path: str) -> SwapNetwork:
    try:
        with open(path, encoding="utf-8") as fh:
            return SwapNetwork.from_json(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _cmd_synth(args) -> int:
    _emit(export(_network(args), args.format), args.out)
    return EXIT_OK


def _cmd_bounds(args) -> int:
    rep = _bounds(args)
    if args.format == "json":
        print(json.dumps(rep.to_json()))
    else:
        print(f"bandwidth={rep.bandwidth} two_bandwidth={rep.two_bandwidth} "
              f"swap_depth_lb={rep.swap_depth_lb} interaction_depth_lb={rep.interaction_depth_lb}")
        for note in rep.notes:
            print(f"note: {note}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    net = _load(args.network)
    try:
        rep = verify.coverage(net, _graph(args))
    except MalformedNetwork as exc:
        print(f"malformed network: {exc}", file=sys.stderr)
        return EXIT_FAIL
    status = EXIT_OK if rep.complete else EXIT_FAIL
    verdict = {}
    if args.against_bounds:
        verdict = verify.check_against_bounds(rep, _bounds(args))
        if not verdict["swap_optimal"]:
            status = EXIT_FAIL
    if args.format == "json":
        out = rep.to_json()
        out.update(verdict)
        print(json.dumps(out))
        return status
    if not rep.complete:
        print(f"incomplete: {len(rep.missing)} edges and {len(rep.missing_sites)} site terms never interacted")
    tag = ""
    if args.against_bounds:
        tag = " optimal" if verdict["swap_optimal"] else " not optimal"
    print(f"swap_depth={rep.swap_depth}{tag}")
    itag = ""
    if args.against_bounds:
        itag = " optimal" if verdict["interaction_optimal"] else " above degree bound"
    print(f"interaction_depth={rep.interaction_depth}{itag}")
    return status


def _cmd_oracle(args) -> int:
    if args.model is None and args.dims is not None:
        args.model = "grid"
    if args.model is None:
        raise UsageError("oracle needs --dims or --model")
    if args.quantity == "min-swap-depth":
        limit = args.max_size if args.max_size is not None else 7
        print(verify.min_swap_depth_exhaustive(_graph(args), size_limit=limit))
        return EXIT_OK
    ig = _graph(args)
    limit = args.max_size if args.max_size is not None else 9
    fn = bnd.bandwidth_exact if args.quantity == "bandwidth" else bnd.two_bandwidth_exact
    print(fn(ig, size_limit=limit))
    return EXIT_OK


def _cmd_check_fermionic(args) -> int:
    net = _network(args)
    out = {"permutation": fermioracle.mode_permutation_check(net, tol=args.tol)}
    ok = out["permutation"]
    if args.model in ("spinless", "spin"):
        rep = fermioracle.trotter_error_check(_hubbard(args), net, args.dt)
        out.update(rep.to_json())
        ok = ok and rep.passed
    out["pass"] = ok
    print(json.dumps(out))
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_export(args) -> int:
    net = _load(args.network)
    _emit(export(net, args.format), args.out)
    return EXIT_OK


_COMMANDS = {
    "synth": _cmd_synth,
    "bounds": _cmd_bounds,
    "verify": _cmd_verify,
    "oracle": _cmd_oracle,
    "check-fermionic": _cmd_check_fermionic,
    "export": _cmd_export,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run one subcommand and return its exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.cmd](args)
    except UsageError as exc:
        print(f"fswapnet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MalformedNetwork as exc:
        print(f"fswapnet: malformed network: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except FswapError as exc:
        print(f"fswapnet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        # --help and friends
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE


def main() -> None:
    sys.exit(run())
