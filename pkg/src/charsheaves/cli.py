"""Command line front end: ``charsheaves VERB --pair TYPE:p,q ...``."""
from __future__ import annotations

import csv
import io
import json
import sys
from fractions import Fraction

import click

from . import counts as counts_mod
from .atlas import (
    ATLAS_KINDS,
    enumerate_char_labels,
    fraction_text,
    verify_counts,
)
from .identities import REGISTRY
from .orbits import component_group
from .richardson import is_richardson, nilpotent_support_count, omega_data
from .series import Factor, expand, prod
from .suites import SUITES, RunConfig, failures, run_suite
from .syd import SymmetricPair, enumerate_syd
from .weyl import BruteForceBound, character_orbit_reps, stabilizer

FORMATS = click.Choice(["json", "csv", "text"])


def _pair(ctx, param, value):
    if value is None:
        return None
    try:
        return SymmetricPair.parse(value)
    except (ValueError, KeyError) as exc:
        raise click.BadParameter(str(exc)) from exc


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _emit(fmt: str, header: list[str], rows: list[list], records: list[dict]) -> None:
    if fmt == "json":
        click.echo(_json(records))
    elif fmt == "csv":
        click.echo(_csv(header, rows))
    else:
        widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)] if rows else [len(h) for h in header]
        for r in [header] + rows:
            click.echo("  ".join(str(x).ljust(w) for x, w in zip(r, widths)).rstrip())


@click.group()
@click.pass_context
def main(ctx):
    """Nilpotent orbits, character sheaves and their counts for classical symmetric pairs."""
    ctx.obj = RunConfig.from_env()


pair_option = click.option("--pair", "pair", required=True, callback=_pair, help="TYPE:p,q or TYPE:n")


@main.command()
@pair_option
@click.option("--format", "fmt", type=FORMATS, default="text")
def orbits(pair, fmt):
    """List the nilpotent orbits with their component groups."""
    labs = enumerate_syd(pair)
    rows = [[o.text(), str(component_group(pair, o))] for o in labs]
    recs = [dict(o.to_json(), componentGroup=str(component_group(pair, o))) for o in labs]
    _emit(fmt, ["orbit", "componentGroup"], rows, recs)


@main.command()
@pair_option
@click.option("--list", "mode", flag_value="list", default=True)
@click.option("--count", "mode", flag_value="count")
@click.option("--format", "fmt", type=FORMATS, default="json")
def richardson(pair, mode, fmt):
    """Richardson test per orbit, or the nilpotent-support count."""
    if mode == "count":
        val = fraction_text(nilpotent_support_count(pair))
        _emit(fmt, ["pair", "count"], [[pair.text(), val]], [{"pair": pair.text(), "count": val}])
        return
    rows, recs = [], []
    for o in enumerate_syd(pair):
        rich = is_richardson(pair, o)
        omega = l = pi = None
        if rich and pair.kind == "BDI":
            data = omega_data(o)
            omega, l, pi = sorted(data.omega), data.l, data.pi_cardinality
        recs.append({"orbit": o.text(), "richardson": rich, "omega": omega, "l": l, "piCount": pi})
        rows.append([o.text(), rich, "" if omega is None else " ".join(map(str, omega)),
                     "" if l is None else l, "" if pi is None else pi])
    _emit(fmt, ["orbit", "richardson", "omega", "l", "piCount"], rows, recs)


@main.command()
@pair_option
@click.option("--what", type=click.Choice(["fullsupport", "hecke"]), default="fullsupport")
@click.option("--format", "fmt", type=FORMATS, default="csv")
def counts(pair, what, fmt):
    """Full-support counts, or the Hecke simple-module table up to the pair's rank."""
    if what == "fullsupport":
        val = fraction_text(counts_mod.full_support_count(pair))
        _emit(fmt, ["pair", "fullSupport"], [[pair.text(), val]], [{"pair": pair.text(), "fullSupport": val}])
        return
    header = ["rank"] + list(counts_mod.HECKE_FAMILIES)
    rows = []
    for k in range(pair.rank + 1):
        rows.append([k] + [fraction_text(counts_mod.hecke_count(counts_mod.HeckeFamily(v, k)))
                           for v in counts_mod.HECKE_FAMILIES])
    _emit(fmt, header, rows, [dict(zip(header, r)) for r in rows])


@main.command()
@pair_option
@click.option("--chi", type=int, default=0, show_default=True, help="index m of the representative chi_m")
@click.option("--bound", type=int, default=None, help="rank bound for the brute force")
@click.pass_obj
def weyl(cfg, pair, chi, bound):
    """Stabilizer of chi_m in the little Weyl group and its reflection subgroup."""
    reps = character_orbit_reps(pair)
    if not 0 <= chi < len(reps):
        raise click.BadParameter(f"chi must lie in 0..{len(reps) - 1}", param_hint="--chi")
    try:
        st = stabilizer(pair, reps[chi], bound or cfg.weyl_bound)
    except BruteForceBound as exc:
        raise click.UsageError(str(exc)) from exc
    click.echo(_json(st.to_json()))


@main.command()
@click.option("--pair", "pair", callback=_pair, default=None)
@click.option("--list", "do_list", is_flag=True)
@click.option("--verify", "do_verify", is_flag=True)
@click.option("--max-rank", type=int, default=None)
@click.option("--format", "fmt", type=FORMATS, default=None)
@click.pass_obj
def atlas(cfg, pair, do_list, do_verify, max_rank, fmt):
    """Character-sheaf labels (--list) or the count matrix (--verify)."""
    if do_verify:
        R = max_rank if max_rank is not None else cfg.atlas_bound
        rows, bad = [], []
        for kind in ATLAS_KINDS:
            for N in range(R + 1):
                if kind in ("CI", "DIII"):
                    prs = [SymmetricPair(kind, N, N)]
                else:
                    prs = [SymmetricPair(kind, p, N - p) for p in range(N + 1)]
                for pr in prs:
                    rep = verify_counts(pr)
                    rows.append(rep.row())
                    if not rep.ok:
                        bad.append(pr.text())
        header = ["pair", "|A|", "|Char|", "formulaValue", "ok"]
        _emit(fmt or "csv", header, rows, [dict(zip(header, r)) for r in rows])
        if bad:
            click.echo(f"FAILED: count matrix at {', '.join(bad)}", err=True)
            sys.exit(1)
        return
    if pair is None:
        raise click.UsageError("--pair is required unless --verify is given")
    labs = enumerate_char_labels(pair)
    if do_list:
        fmt = fmt or "json"
        rows = [[lab.support.text(), lab.local.text()] for lab in labs]
        _emit(fmt, ["support", "localSystem"], rows, [lab.to_json() for lab in labs])
    else:
        _emit(fmt or "text", ["pair", "count"], [[pair.text(), len(labs)]], [{"pair": pair.text(), "count": len(labs)}])


@main.command()
@click.option("--suite", type=click.Choice(SUITES), default="all", show_default=True)
@click.option("--order", type=int, default=None, help="truncation order for the identity suite")
@click.option("--format", "fmt", type=FORMATS, default="text")
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True, help="worker processes for --suite all")
@click.pass_obj
def verify(cfg, suite, order, fmt, jobs):
    """Run a verification suite; exits 1 naming the first failing check."""
    if order is not None and order < 1:
        raise click.BadParameter("order must be at least 1", param_hint="--order")
    checks = run_suite(suite, cfg, order, jobs)
    rows = [[c.suite, c.name, "PASS" if c.ok else ("FAIL (known)" if c.expected_failure else "FAIL"), c.detail]
            for c in checks]
    _emit(fmt, ["suite", "check", "status", "detail"], rows, [c.to_json() for c in checks])
    bad = failures(checks)
    if bad:
        click.echo(f"FAILED: {bad[0].suite}/{bad[0].name}", err=True)
        sys.exit(1)


NAMED_SERIES = {
    "d": lambda n: expand(prod(Factor((2, 0)), Factor((1, 0))), n),
    "e": lambda n: expand(prod(Factor((2, -1)), Factor((1, 0))), n),
    "typeC": lambda n: expand(prod(Factor((1, 0), power=3), Factor((1, 0), sign=-1, power=-2)), n),
    "bC": lambda n: expand(prod(Factor((1, 0)), Factor((1, 0), sign=-1, power=-1)), n),
    "biorbitalB": lambda n: expand(prod(Factor((4, 0), power=2), Factor((2, 0), power=2), scalar=2, prefactor=1), n),
    "biorbitalD": lambda n: expand(prod(Factor((4, -2), power=2), Factor((2, 0), power=2), scalar=Fraction(1, 2)), n),
}


@main.command()
@click.option("--name", type=click.Choice(sorted(NAMED_SERIES)), required=True)
@click.option("--order", type=click.IntRange(min=0), default=None)
@click.option("--format", "fmt", type=FORMATS, default="text")
@click.pass_obj
def series(cfg, name, order, fmt):
    """Coefficients of a named generating function."""
    s = NAMED_SERIES[name](cfg.order1 if order is None else order)
    rows = [[i, fraction_text(c)] for i, c in enumerate(s.coeffs)]
    _emit(fmt, ["exponent", "coefficient"], rows, [{"exponent": i, "coefficient": c} for i, c in rows])


if __name__ == "__main__":
    main()
