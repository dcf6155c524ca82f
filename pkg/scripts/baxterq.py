#!/usr/bin/env python3
"""
baxterq.py

Command line for Baxter Q-function hierarchies of U_q(gl(M|N)).

- gen:    build the 2^(M+N) Q-functions from seeded single-index polynomials
- verify: run verification suites and stream one JSON report per identity instance
- tfun:   compute one T-function by one or more routes, or compare the routes
- char:   the three supercharacter formulas at x = 0, with Kac-Dynkin labels

Exit codes: 0 success / all pass, 1 at least one failing record or route
disagreement, 2 usage, configuration or genericity error.

Twist parameters default to z_a = a-th prime and t = 2 (q = t^2).

Usage:
  baxterq gen --M 2 --N 1 --deg 1 --seed 0 -o h.qh
  baxterq verify all -i h.qh
  baxterq verify tsystem --a-max 4 --s-max 4
  baxterq verify qq --mutate 1 --seed 3
  baxterq verify all --fast --jobs 4 --report-tsv reports.tsv
  baxterq tfun --mu 2,1 --route tab,wronskian --check
  baxterq tfun --mu '' --B 1 --F 3
  baxterq char --mu 1 --M 1 --N 1 --z 2,3
  baxterq verify all --config config/acceptance.yaml
"""

import argparse
import logging
import sys
from typing import Dict, List, Optional

from .diagrams import Partition, hook_check, kac_dynkin
from .errors import GenericityError, HookError, ResonanceError
from .qhierarchy import QHierarchy, build_hierarchy, dumps_hierarchy, load_hierarchy, save_hierarchy
from .report import all_passed, summarize, write_tsv
from .run_config import RunConfig, resolve_config
from .tfunctions import TContext
from .tfunctions.characters import character_table
from .tfunctions.routes import compare_routes, parse_routes, routes_agree, t_by_route
from .verify.runner import FAST, parse_suites, run_suite, summary_counts

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
GENERICITY_HINT = "choose different twist parameters (--z, --t) or another --seed"


# ----------------------------- hierarchy -----------------------------


def obtain_hierarchy(cfg: RunConfig) -> QHierarchy:
    """Load --input, or generate inline; --mutate N applies N successive mutations."""
    if cfg.input:
        h = load_hierarchy(cfg.input)
        print(f"[info] loaded {len(h.table)} Q-functions from {cfg.input} ({h.twist.describe()})")
    else:
        h = build_hierarchy(cfg.twist(), cfg.gen_config(), cfg.convention)
    for i in range(cfg.mutate):
        h = h.mutated(cfg.seed + i)
        print(f"[warn] mutation {i + 1}: subset mask {h.mutation[0]} at x^{h.mutation[1]}")
    return h


# ----------------------------- commands -----------------------------


def cmd_gen(cfg: RunConfig) -> int:
    h = build_hierarchy(cfg.twist(), cfg.gen_config(), cfg.convention)
    if cfg.output:
        save_hierarchy(h, cfg.output)
        print(f"[ok] wrote {cfg.output}")
    else:
        sys.stdout.write(dumps_hierarchy(h))
    print(f"[info] {len(h.table)} entries, max degree {h.max_degree()}, {h.convention}, seed {h.seed}",
          file=sys.stderr if not cfg.output else sys.stdout)
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    names = parse_suites(cfg.suites)
    h = obtain_hierarchy(cfg)
    results = run_suite(h, names, cfg.options, cfg.mode, cfg.samples, cfg.seed, cfg.jobs)
    reports = [r for result in results for r in result.reports]
    for r in reports:
        print(r.to_record(timing=cfg.timing))

    print("\n" + "=" * 60)
    print("VERIFICATION SUMMARY")
    print("=" * 60)
    table = summarize(reports)
    if not table.empty:
        print(table.to_string(index=False))
    counts = summary_counts(results)
    print(f"\nInstances: {counts['instances']}  passed: {counts['passed']}  failed: {counts['failed']}")
    for result in results:
        if result.failed:
            print(f"[warn] {result.name}: {result.failed} failing instance(s)")

    if cfg.report_tsv:
        write_tsv(reports, cfg.report_tsv)
        print(f"[ok] report table written to {cfg.report_tsv}")
    return 0 if all_passed(reports) else 1


def _fmt_value(value, at) -> str:
    if value is None:
        return "n/a (route precondition not met)"
    if at is not None:
        return str(value.eval(at))
    num, den = value.coefficient_lists()
    return f"{_coeff_list(num)} / {_coeff_list(den)}"


def _coeff_list(coeffs) -> str:
    return "[" + ", ".join(str(c) for c in coeffs) + "]"


def cmd_tfun(cfg: RunConfig) -> int:
    mu = Partition.parse(cfg.mu)
    routes = parse_routes(cfg.routes)
    h = obtain_hierarchy(cfg)
    ctx = TContext.of(h, B=cfg.B, F=cfg.F)
    print(f"[info] T_({mu}) for B={list(ctx.B)} F={list(ctx.F)}, {h.convention}")

    if len(routes) == 1 and not cfg.check:
        value = t_by_route(h, mu, routes[0], ctx.B, ctx.F, sample=cfg.at)
        print(_fmt_value(value, cfg.at))
        return 0

    values = compare_routes(h, mu, routes, ctx.B, ctx.F, sample=cfg.at)
    for route, value in values.items():
        print(f"{route:<10} {_fmt_value(value, cfg.at)}")
    agree = routes_agree(values)
    print("AGREE" if agree else "DISAGREE")
    return 0 if agree else 1


def cmd_char(cfg: RunConfig) -> int:
    mu = Partition.parse(cfg.mu)
    h = obtain_hierarchy(cfg)
    tw = h.twist
    if not hook_check(mu, tw.M, tw.N):
        raise HookError(f"({mu}) is outside the ({tw.M},{tw.N})-hook")
    values = character_table(h, mu)
    for name, value in values.items():
        print(f"{name:<16} {value}")
    agree = len(set(values.values())) == 1
    print("AGREE" if agree else "DISAGREE")
    labels = kac_dynkin(mu, tw.M, tw.N)
    print(f"Kac-Dynkin labels: {list(labels.labels)}")
    print(f"{'typical' if labels.typical else 'atypical'}")
    return 0 if agree else 1


COMMANDS = {"gen": cmd_gen, "verify": cmd_verify, "tfun": cmd_tfun, "char": cmd_char}


# ----------------------------- arguments -----------------------------


def _common(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("hierarchy")
    g.add_argument("--config", help="YAML config file with a 'run:' mapping (flags override it)")
    g.add_argument("--M", type=int, help="number of bosonic indices")
    g.add_argument("--N", type=int, help="number of fermionic indices")
    g.add_argument("--t", help="shift base t, q = t^2 (default 2)")
    g.add_argument("--z", help="twist parameters, e.g. 2,3,5/2 (default: first primes)")
    g.add_argument("--seed", type=int, help="generation seed (default 0)")
    g.add_argument("--deg", dest="degrees", help="single-index degrees, e.g. 1 or 1,2,1")
    g.add_argument("--coeff-bound", type=int, help="numerators/denominators of random coefficients")
    g.add_argument("--k-max", type=int, help="largest resonance |k| checked")
    g.add_argument("--convention", choices=["unbarred", "barred"], help="storage normalization")
    g.add_argument("-i", "--input", help="hierarchy file to load instead of generating")
    g.add_argument("--mutate", type=int, help="apply N seeded +1 coefficient mutations first")
    g.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    g.add_argument("-q", "--quiet", action="store_true", help="warnings only")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Exact Baxter Q-function hierarchies and their functional relations",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a hierarchy file")
    _common(p)
    p.add_argument("-o", "--output", help="output path (default: stdout)")

    p = sub.add_parser("verify", help="run verification suites")
    _common(p)
    p.add_argument("suites", nargs="?", help="'all' or a comma list, e.g. qq,tsystem,mutation")
    g = p.add_argument_group("grid")
    g.add_argument("--a-max", type=int)
    g.add_argument("--s-max", type=int)
    g.add_argument("--f-max", type=int, help="rectangle bound for tableau-level checks")
    g.add_argument("--size-max", type=int, help="largest |mu| for route and character checks")
    g.add_argument("--duality-max", type=int)
    g.add_argument("--conv-max", type=int)
    g.add_argument("--typical-max", type=int)
    g.add_argument("--mutation-seeds", type=int)
    g.add_argument("--subsets", choices=["full", "all"], help="full index sets only, or every subset pair")
    g = p.add_argument_group("execution")
    g.add_argument("--fast", action="store_const", const=FAST, dest="mode",
                   help="evaluate at random sample points instead of exact functions")
    g.add_argument("--samples", type=int,
                   help="sample points per suite in fast mode (default and minimum: degree bound + 1)")
    g.add_argument("--jobs", type=int, help="suites run in parallel")
    g.add_argument("--report-tsv", help="also write the per-instance table as TSV")
    g.add_argument("--no-timing", action="store_false", dest="timing", default=None,
                   help="omit micros from records (byte-stable output)")

    p = sub.add_parser("tfun", help="compute a T-function")
    _common(p)
    p.add_argument("--mu", help="Young diagram, e.g. 2,1 ('' for empty)")
    p.add_argument("--B", help="bosonic subset (default: all)")
    p.add_argument("--F", help="fermionic subset (default: all)")
    p.add_argument("--route", dest="routes", help="route name(s), comma list or 'all'")
    p.add_argument("--check", action="store_true", default=None, help="compare routes, print AGREE/DISAGREE")
    p.add_argument("--at", help="evaluate at this rational x0")

    p = sub.add_parser("char", help="supercharacters at x = 0")
    _common(p)
    p.add_argument("--mu", help="Young diagram in the (M,N)-hook")
    return parser


NON_CONFIG = {"config", "verbose", "quiet"}


def flag_values(args: argparse.Namespace) -> Dict:
    return {k: v for k, v in vars(args).items() if k not in NON_CONFIG}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format=LOG_FORMAT)

    try:
        cfg = resolve_config(args.config, flag_values(args))
        logger.debug(f"run config: {cfg.describe()}")
        return COMMANDS[cfg.command](cfg)
    except ResonanceError as e:
        print(f"[error] {e} (resonance at k={e.k})", file=sys.stderr)
        print(f"[error] hint: {GENERICITY_HINT}", file=sys.stderr)
        return 2
    except GenericityError as e:
        print(f"[error] {e}", file=sys.stderr)
        for msg in e.diagnostics[1:]:
            print(f"[error]   {msg}", file=sys.stderr)
        print(f"[error] hint: {GENERICITY_HINT}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as e:
        print(f"[error] {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
