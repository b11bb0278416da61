"""Command-line interface: preset runs and queries over finished runs.

Exit codes: 0 success, 1 usage or bad input, 2 numeric degeneracy or
applicability failure, 3 file-system trouble.
"""

import argparse
import sys

from . import __version__
from .config import ExperimentConfig, load as load_config
from .errors import (
    ApplicabilityError,
    DegeneracyError,
    InputError,
    NumericError,
    ParameterError,
)
from .presets import query_hadamard, query_nn, query_ratio, run_preset


class _Parser(argparse.ArgumentParser):
    # usage problems are exit code 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _axes(text):
    return tuple(int(a) for a in text.split(","))


def _build_parser():
    parser = _Parser(
        prog="eigenscape",
        description="Eigenfunction landscapes via heat-kernel affinities.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", parents=[], help="execute a preset end to end")
    run.add_argument("--preset", help="preset name (or supply --config)")
    run.add_argument("--config", help="key=value config file; flags override it")
    run.add_argument("--seed", type=int, help="RNG seed for random presets")
    run.add_argument("--p", type=float, help="elementwise affinity exponent")
    run.add_argument("--t0", type=float,
                     help="fixed diffusion time (default: adaptive per pair)")
    run.add_argument("--axes", type=_axes, metavar="A,B,C",
                     help="1-based embedding axis ranks")
    run.add_argument("--sigma", type=float, help="gaussian kernel width")
    run.add_argument("--n", type=int, help="primary size knob of the preset")
    run.add_argument("--lmax", type=int, help="sphere basis degree cutoff")
    run.add_argument("--scale", choices=("full", "small"),
                     help="small shrinks the big presets to desk scale")
    run.add_argument("--out", help="output directory (default runs/<preset>)")
    run.add_argument("--diag", choices=("natural", "one"),
                     help="affinity diagonal: computed like any pair, or pinned 1")
    run.add_argument("--input", help="data file for the custom presets")
    run.add_argument("--delimiter", help="column delimiter for custom inputs")
    run.add_argument("--scale-coords", action=argparse.BooleanOptionalAction,
                     dest="scale_coords", default=None,
                     help="stretch embedding axes by |eigenvalue|")

    query = sub.add_parser("query", help="inspect a completed run directory")
    query.add_argument("run_dir")
    query.add_argument("what", choices=("nn", "ratio", "hadamard"))
    query.add_argument("--i", type=int, required=True, help="function index")
    query.add_argument("--k", type=int, default=1, help="neighbor count (nn)")
    query.add_argument("--near", type=int, help="near index (ratio)")
    query.add_argument("--far", type=int, help="far index (ratio)")
    query.add_argument("--j", type=int, help="second index (hadamard)")
    return parser


def _cmd_run(args, parser):
    if args.config:
        cfg = load_config(args.config)
        if args.preset:
            cfg = cfg.override(preset=args.preset)
    elif args.preset:
        cfg = ExperimentConfig(preset=args.preset)
    else:
        parser.error("one of --preset or --config is required")
    cfg = cfg.override(
        seed=args.seed,
        p=args.p,
        t0=args.t0,
        axes=args.axes,
        sigma=args.sigma,
        n=args.n,
        lmax=args.lmax,
        scale=args.scale,
        out=args.out,
        diag=args.diag,
        input=args.input,
        delimiter=args.delimiter,
        scale_coords=args.scale_coords,
    )
    if not cfg.out:
        suffix = "-small" if cfg.scale == "small" else ""
        cfg = cfg.override(out=f"runs/{cfg.preset}{suffix}")
    summary = run_preset(cfg)
    print(f"run complete: {summary.preset} -> {summary.out_dir}")
    print(
        f"  grid {summary.grid_size}, basis {summary.basis_size}, "
        f"subset {summary.subset_size}, power {summary.power:g}, "
        f"mode {summary.mode}"
    )
    print(
        f"  raw similarity range [{summary.raw_min:.6g}, {summary.raw_max:.6g}], "
        f"degenerate pairs {summary.degenerate_pairs}, "
        f"near-tie {'yes' if summary.near_tie else 'no'}"
    )
    timing = "  ".join(f"{k} {v:.2f}s" for k, v in summary.seconds.items())
    print(f"  timings: {timing}")
    print(f"  artifacts: {' '.join(summary.artifacts)}")
    return 0


def _cmd_query(args, parser):
    if args.what == "nn":
        neighbors = query_nn(args.run_dir, args.i, args.k)
        print(f"nearest neighbors of {args.i}: "
              + "  ".join(f"{j} (d={d:.6g})" for j, d in neighbors))
    elif args.what == "ratio":
        if args.near is None or args.far is None:
            parser.error("ratio needs --near and --far")
        value = query_ratio(args.run_dir, args.i, args.near, args.far)
        print(f"distance ratio d({args.i},{args.far}) / d({args.i},{args.near}) "
              f"= {value:.6g}")
    else:
        if args.j is None:
            parser.error("hadamard needs --j")
        csv_path, svg_path = query_hadamard(args.run_dir, args.i, args.j)
        print(f"wrote {csv_path} and {svg_path}")
    return 0


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "run":
            return _cmd_run(args, parser)
        return _cmd_query(args, parser)
    except SystemExit as exc:
        return int(exc.code or 0)
    except (ParameterError, InputError) as exc:
        print(f"eigenscape: error: {exc}", file=sys.stderr)
        return 1
    except (NumericError, DegeneracyError, ApplicabilityError) as exc:
        print(f"eigenscape: numeric error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"eigenscape: i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
