"""Command-line interface: ``strandkit``.

Exit codes: 0 success, 1 an intersection number differs from a Hom dimension,
2 input error.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import click

from . import __version__
from .algebra import Algebra
from .arcs import build_model, shift_arc
from .catalog import RUNNING_DATUM, d4_datum, running_arcs, running_datum
from .datum import load_datum, to_quiver_triple, validate_datum
from .dg import HomComplex, build_arc_module, module_to_json
from .errors import InputError, StrandkitError, UnknownExample
from .generate import ENUMERATION_CAP, enumerate_arcs, random_arcs
from .intersect import BiQuiver, count_parts, verify_theorem
from .linalg import Field
from .reps import build_R, hom_rep_dim, is_bijective, rep_of_arc
from .textio import arc_to_json, load_arcs, parse_arc, word_from_obj, word_to_json
from .words import build_bush, canonicalize, classify_word

BUILTIN_DATUMS = {"running": running_datum, "d4": d4_datum}


@dataclass
class RunConfig:
    datum: str = "running"
    field: str = "q"
    seed: int = 0
    fmt: str = "table"
    window: tuple = (-6, 6)
    max_crossings: int = 5
    r_bound: int = 2
    jobs: int = 1
    pairs: int = 20

    def rho_range(self):
        return range(self.window[0], self.window[1] + 1)


def resolve_datum(name):
    """A datum from a builtin name or a JSON file path."""
    if name in BUILTIN_DATUMS:
        return BUILTIN_DATUMS[name]()
    return load_datum(name)


def parse_window(text):
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError:
        raise InputError(f"bad rho window {text!r}; use a..b") from None
    if lo > hi:
        raise InputError(f"empty rho window {text!r}")
    return lo, hi


def emit(rows, fmt, out=None):
    """Print a list of flat dicts as json, csv or an aligned table."""
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(rows, indent=2) + "\n")
        return
    if not rows:
        return
    keys = list(rows[0])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        out.write(buf.getvalue())
        return
    cells = [[str(k) for k in keys]] + [[str(r[k]) for k in keys] for r in rows]
    widths = [max(len(c[i]) for c in cells) for i in range(len(keys))]
    for c in cells:
        out.write("  ".join(x.ljust(wd) for x, wd in zip(c, widths)).rstrip() + "\n")


class Context:
    def __init__(self, cfg: RunConfig):
        self.cfg = cfg
        self._datum = None

    @property
    def datum(self):
        if self._datum is None:
            self._datum = resolve_datum(self.cfg.datum)
        return self._datum

    @property
    def bush(self):
        return build_bush(self.datum)

    @property
    def field(self):
        return Field.parse(self.cfg.field)


class StrandkitGroup(click.Group):
    """Maps library errors to exit code 2."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (InputError, StrandkitError) as exc:
            click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
            ctx.exit(2)


@click.group(cls=StrandkitGroup)
@click.version_option(__version__)
@click.option("--datum", "datum", default="running", show_default=True,
              help="Builtin datum name (running, d4) or path to a datum JSON file.")
@click.option("--field", default="q", show_default=True, help="q or p:PRIME.")
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "table"]), default="table",
              show_default=True)
@click.pass_context
def main(ctx, datum, field, seed, fmt):
    """Skew-gentle datums, arc objects and intersection-Hom comparisons."""
    Field.parse(field)
    ctx.obj = Context(RunConfig(datum=datum, field=field, seed=seed, fmt=fmt))


# -- datum ---------------------------------------------------------------------

@main.group()
def datum():
    """Validate datums and print their quivers."""


@datum.command("validate")
@click.argument("source")
@click.pass_obj
def datum_validate(obj, source):
    d = resolve_datum(source)
    rows = [{"polygons": len(d.polygon_sizes), "edges": sum(d.polygon_sizes),
             "fixed": len(d.fixed), "status": "ok"}]
    emit(rows, obj.cfg.fmt)


@datum.command("quiver")
@click.argument("source")
@click.pass_obj
def datum_quiver(obj, source):
    d = resolve_datum(source)
    q = to_quiver_triple(d)
    if obj.cfg.fmt == "json":
        out = {"vertices": [list(v) for v in q.vertices],
               "arrows": [{"name": n, "source": list(s), "target": list(t), "degree": g}
                          for n, s, t, g in q.arrows],
               "special": [list(x) for x in q.special],
               "relations": [list(r) for r in q.relations]}
        click.echo(json.dumps(out, indent=2))
        return
    rows = [{"arrow": n, "source": s, "target": t, "degree": g} for n, s, t, g in q.arrows]
    click.echo(f"vertices: {len(q.vertices)}  special: {q.special}  relations: {q.relations}")
    emit(rows, obj.cfg.fmt)


# -- arcs ----------------------------------------------------------------------

def _read_text(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _read_words(bush, path):
    text = _read_text(path).strip()
    if text.startswith(("{", "[")):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path} is not valid JSON: {exc}") from None
        items = data if isinstance(data, list) else [data]
    else:
        items = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    return [word_from_obj(bush, x) for x in items]


def _arc_rows(arcs):
    return [{"kind": a.kind, "tags": "".join(a.tags), "word": a.word.tokens()} for a in arcs]


@main.group()
def arc():
    """Canonical forms, shifts and encodings of words and arcs."""


@arc.command("canon")
@click.argument("path")
@click.pass_obj
def arc_canon(obj, path):
    """Canonical form and class of each word in PATH."""
    b = obj.bush
    canon = [canonicalize(b, w) for w, _ in _read_words(b, path)]
    if obj.cfg.fmt == "json":
        click.echo(json.dumps([dict(word_to_json(c), **{"class": classify_word(b, c)})
                               for c in canon], indent=2))
        return
    emit([{"class": classify_word(b, c), "periodic": c.periodic, "word": c.tokens()}
          for c in canon], obj.cfg.fmt)


@arc.command("shift")
@click.argument("path")
@click.option("--by", "rho", type=int, required=True)
@click.pass_obj
def arc_shift(obj, path, rho):
    b = obj.bush
    arcs = [shift_arc(a, rho) for a in load_arcs(b, path)]
    _print_arcs(obj, arcs)


@arc.command("encode")
@click.argument("path")
@click.pass_obj
def arc_encode(obj, path):
    """Tagged arcs of the words (with tags) in PATH."""
    _print_arcs(obj, load_arcs(obj.bush, path))


def _print_arcs(obj, arcs):
    if obj.cfg.fmt == "json":
        click.echo(json.dumps([arc_to_json(a) for a in arcs], indent=2))
    else:
        emit(_arc_rows(arcs), obj.cfg.fmt)


# -- dg modules -------------------------------------------------------------------

@main.group()
def dg():
    """Dg modules of arcs and Hom dimensions."""


def _one_arc(bush, path):
    arcs = load_arcs(bush, path)
    if len(arcs) != 1:
        raise InputError(f"{path} holds {len(arcs)} arcs; expected one")
    return arcs[0]


@dg.command("build")
@click.argument("path")
@click.pass_obj
def dg_build(obj, path):
    b = obj.bush
    a = _one_arc(b, path)
    m = build_arc_module(b, Algebra(obj.datum), a)
    data = module_to_json(m)
    if obj.cfg.fmt == "json":
        click.echo(json.dumps(data, indent=2))
        return
    click.echo("summands: " + " + ".join(s["label"] for s in data["summands"]))
    emit([{"row": r, "col": c, "coeff": x, "element": data["basis"][str(e)]}
          for r, c, x, e in data["entries"]], obj.cfg.fmt)


@dg.command("hom")
@click.argument("path_a")
@click.argument("path_b")
@click.option("--rho-window", "window", default="-6..6", show_default=True)
@click.pass_obj
def dg_hom(obj, path_a, path_b, window):
    b = obj.bush
    alg = Algebra(obj.datum)
    lo, hi = parse_window(window)
    hc = HomComplex(build_arc_module(b, alg, _one_arc(b, path_a)),
                    build_arc_module(b, alg, _one_arc(b, path_b)), obj.field)
    emit([{"rho": r, "homdim": hc.cohomology_dim(r)} for r in range(lo, hi + 1)], obj.cfg.fmt)


# -- intersections -------------------------------------------------------------------

@main.group("int")
def int_group():
    """Intersection numbers and the comparison with Hom dimensions."""


@int_group.command("count")
@click.argument("path_a")
@click.argument("path_b")
@click.option("--rho-window", "window", default="-6..6", show_default=True)
@click.pass_obj
def int_count(obj, path_a, path_b, window):
    b = obj.bush
    a1, a2 = _one_arc(b, path_a), _one_arc(b, path_b)
    lo, hi = parse_window(window)
    rows = []
    for r in range(lo, hi + 1):
        p = count_parts(b, a1, shift_arc(a2, r))
        rows.append({"rho": r, "int": p.total, "hlines": p.hlines, "w2": p.w2, "w1": p.w1})
    emit(rows, obj.cfg.fmt)


def _verify_item(args):
    raw, a_text, b_text, lo, hi, field_text = args
    d = validate_datum(raw)
    b = build_bush(d)
    return verify_theorem(b, Algebra(d), parse_arc(b, a_text), parse_arc(b, b_text),
                          range(lo, hi + 1), Field.parse(field_text))


def cmd_verify(cfg: RunConfig, arcs=None, pairs=None, out=None):
    """Run the comparison on all pairs; returns ``(exit code, rows)``."""
    d = resolve_datum(cfg.datum)
    b = build_bush(d)
    if pairs is None:
        if arcs:
            pairs = [(x, y) for x in arcs for y in arcs]
        else:
            gen = random_arcs(b, 2 * cfg.pairs, seed=cfg.seed,
                              max_crossings=cfg.max_crossings, r_bound=cfg.r_bound)
            pairs = list(zip(gen[0::2], gen[1::2]))
    lo, hi = cfg.window
    items = [(d.to_raw(), x.describe(), y.describe(), lo, hi, cfg.field) for x, y in pairs]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(cfg.jobs) as ex:
            results = list(ex.map(_verify_item, items, chunksize=8))
    else:
        results = [_verify_item(it) for it in items]
    rows = [r for res in results for r in res]
    if out is not None:
        emit(rows, cfg.fmt, out)
    return (0 if all(r["match"] for r in rows) else 1), rows


@int_group.command("verify")
@click.argument("paths", nargs=-1)
@click.option("--pairs", "npairs", default=20, show_default=True,
              help="Number of random pairs when no arc files are given.")
@click.option("--max-crossings", default=5, show_default=True)
@click.option("--r-bound", default=2, show_default=True)
@click.option("--rho-window", "window", default="-6..6", show_default=True)
@click.option("--jobs", default=1, show_default=True)
@click.option("--summary/--no-summary", default=True, show_default=True)
@click.pass_obj
def int_verify(obj, paths, npairs, max_crossings, r_bound, window, jobs, summary):
    """Compare intersection numbers with Hom dimensions.

    With arc files, all ordered pairs of the arcs they hold are compared;
    otherwise random pairs are drawn with the global seed.
    """
    cfg = obj.cfg
    cfg.window = parse_window(window)
    cfg.max_crossings, cfg.r_bound, cfg.jobs = max_crossings, r_bound, jobs
    cfg.pairs = npairs
    b = obj.bush
    arcs = [a for p in paths for a in load_arcs(b, p)] if paths else None
    code, rows = cmd_verify(cfg, arcs, out=sys.stdout)
    if summary:
        bad = sum(1 for r in rows if not r["match"])
        click.echo(f"rows: {len(rows)}  mismatches: {bad}", err=True)
    sys.exit(code)


# -- representations ------------------------------------------------------------------

@main.group()
def rep():
    """Representations of the bush attached to arcs."""


def _rep_rows(r):
    return [{"plus": r.plus[p][1].token(), "minus": r.minus[m][1].token(), "coeff": c}
            for (p, m), c in sorted(r.f.items()) if c]


@rep.command("build")
@click.argument("path")
@click.pass_obj
def rep_build(obj, path):
    b = obj.bush
    a = _one_arc(b, path)
    r = rep_of_arc(b, a)
    local = None if a.kind == "AFW" else (a.tags[0] if a.kind == "SFW" else tuple(a.tags))
    same = hom_rep_dim(b, r, build_R(b, a.word, local), obj.field)
    if obj.cfg.fmt == "json":
        click.echo(json.dumps({"minus": len(r.minus), "plus": len(r.plus),
                               "bijective": is_bijective(r, obj.field),
                               "hom_to_word_rep": same, "entries": _rep_rows(r)}, indent=2))
        return
    click.echo(f"minus: {len(r.minus)}  plus: {len(r.plus)}  "
               f"bijective: {is_bijective(r, obj.field)}")
    emit(_rep_rows(r), obj.cfg.fmt)


@rep.command("hom")
@click.argument("path_a")
@click.argument("path_b")
@click.pass_obj
def rep_hom(obj, path_a, path_b):
    b = obj.bush
    a1, a2 = _one_arc(b, path_a), _one_arc(b, path_b)
    h = hom_rep_dim(b, rep_of_arc(b, a1), rep_of_arc(b, a2), obj.field)
    emit([{"homdim": h, "hlines": count_parts(b, a1, a2).hlines}], obj.cfg.fmt)


# -- enumeration ---------------------------------------------------------------------

@main.command("enumerate")
@click.option("--max-crossings", default=3, show_default=True)
@click.option("--r-bound", default=0, show_default=True)
@click.option("--up-to-shift/--all-shifts", default=False, show_default=True)
@click.pass_obj
def enumerate_cmd(obj, max_crossings, r_bound, up_to_shift):
    """All tagged arcs with at most the given number of crossings."""
    arcs = enumerate_arcs(obj.bush, max_crossings, r_bound, ENUMERATION_CAP, up_to_shift)
    if obj.cfg.fmt == "table":
        for a in arcs:
            click.echo(a.describe())
        return
    _print_arcs(obj, arcs)


# -- examples ------------------------------------------------------------------------

def running_report(field=None):
    d = running_datum()
    b = build_bush(d)
    alg = Algebra(d)
    sigma, tau = running_arcs(b)
    q = BiQuiver(b, sigma, tau)
    rows = verify_theorem(b, alg, sigma, tau, range(-8, 9), field or Field())
    return {
        "datum": RUNNING_DATUM,
        "sigma": arc_to_json(sigma),
        "tau": arc_to_json(tau),
        "dg_sigma": module_to_json(build_arc_module(b, alg, sigma)),
        "dg_tau": module_to_json(build_arc_module(b, alg, tau)),
        "biquiver": {"vertices": len(q.vertices),
                     "lines": [{"vertices": [[u + 1, v + 1] for u, v in L.vertices],
                                "type": L.type, "real_h": L.real_h, "tagged_h": L.tagged_h}
                               for L in q.lines()]},
        "table": [{"rho": r["rho"], "int": r["int"], "hom": r["homdim"]} for r in rows],
    }


def d4_report():
    d = d4_datum()
    b = build_bush(d)
    alg = Algebra(d)
    arcs = enumerate_arcs(b, 6, r_bound=2, up_to_shift=True)
    rows = []
    for a in arcs:
        m = build_arc_module(b, alg, a)
        rows.append({"kind": a.kind, "tags": "".join(a.tags), "word": a.word.tokens(),
                     "crossings": len(build_model(b, a).crossings),
                     "end": HomComplex(m, m).cohomology_dim(0)})
    return {"datum": d.to_raw(), "count": len(arcs), "arcs": rows}


@main.command("example")
@click.argument("name")
@click.pass_obj
def example(obj, name):
    """Built-in examples: running, d4."""
    fmt = obj.cfg.fmt
    if name == "running":
        rep_ = running_report(obj.field)
        if fmt == "json":
            click.echo(json.dumps(rep_, indent=2))
            return
        click.echo(f"datum: {json.dumps(rep_['datum'])}")
        click.echo(f"sigma: {rep_['sigma']['kind']}[{''.join(rep_['sigma']['tags'])}] "
                   f"{rep_['sigma']['tokens']}")
        click.echo(f"tau:   {rep_['tau']['kind']}[] {rep_['tau']['tokens']}")
        for key in ("dg_sigma", "dg_tau"):
            click.echo(f"{key}: " + " + ".join(s["label"] for s in rep_[key]["summands"]))
        bq = rep_["biquiver"]
        click.echo(f"bi-quiver: {bq['vertices']} vertices, {len(bq['lines'])} lines, "
                   f"{sum(1 for L in bq['lines'] if L['real_h'])} real h-lines")
        emit(rep_["table"], fmt)
        return
    if name == "d4":
        rep_ = d4_report()
        if fmt == "json":
            click.echo(json.dumps(rep_, indent=2))
            return
        click.echo(f"datum: {json.dumps(rep_['datum'])}")
        click.echo(f"arc objects up to shift: {rep_['count']}")
        emit(rep_["arcs"], fmt)
        return
    raise UnknownExample(f"unknown example {name!r}; choose running or d4")


if __name__ == "__main__":
    main()
