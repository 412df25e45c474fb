"""Command-line interface for cubic-order continued fraction experiments.

Subcommands
-----------
expand      run jpa/ijpa/brun on a family vector and emit the run as JSON
classify    classify the semiconvergents of a JPA run, emit CSV rows and a
            summary line with the convergent/semiconvergent flags
catalog     dump the indecomposable catalog of a family as CSV
pythagoras  square enumeration and minimal sum-of-squares report as JSON
scan        harvest + expansion + classification workflow over a JSON file
            of polynomials with known unit pairs, one run per real root

Family specs follow "simplest:a=4", "ennola1:a=5", "ennola2:a=7",
"ab:a=2,b=4", "generic:p=0,q=-3,r=1,u1=0:1:0,u2=2:0:-1".  Roots are named
by their labels (rho, rho', psi'', ...), by ASCII aliases with p for each
prime mark (rhop, psipp), or by ascending index 0/1/2.

Exit codes: 0 success (expand: Periodic or Terminated), 1 usage or data
errors, 2 iteration bound exhausted, 3 units unavailable.  The default
iteration bound is 1000, overridable by --max-iter or MCF_MAX_ITER.
"""

from __future__ import annotations

import argparse
import csv
import functools
import json
import os
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import families, mcf
from .core import (
    MissingUnits,
    OrderError,
    is_totally_positive,
    mul,
    signature,
    trace,
)
from .indecomposables import (
    NoCatalog,
    catalog_for,
    flat_associate,
    harvest_totally_positive,
    is_decomposable,
    label_str,
)
from .pythagoras import (
    MoreThanCap,
    min_squares,
    minimal_decomposition,
    squares_below,
    standard_target,
    verify_representation,
)

DEFAULT_MAX_ITER = 1000
_BIG = 2 ** 53


# ---------------------------------------------------------------------------
# Serialization: numbers above 2^53 travel as decimal strings so that JSON
# consumers reading doubles cannot silently lose precision.

def _enc_num(c):
    if isinstance(c, Fraction) and c.denominator != 1:
        return "%d/%d" % (c.numerator, c.denominator)
    c = int(c)
    return str(c) if abs(c) >= _BIG else c


def _dec_num(c):
    if isinstance(c, str):
        return Fraction(c) if "/" in c else int(c)
    return int(c)


def _enc_coords(x):
    return [_enc_num(c) for c in x.v]


def record_to_dict(rec):
    """Plain-data form of an ExpansionRecord, ready for json.dump."""
    return {
        "algorithm": rec.algorithm,
        "tracking_root": rec.tracking,
        "states": [[_enc_coords(c) for c in state] for state in rec.states],
        "digits": [[_enc_num(d) for d in dig] for dig in rec.digits],
        "l0": rec.l0,
        "l1": rec.l1,
        "period_unit": _enc_coords(rec.period_unit)
                       if rec.period_unit is not None else None,
        "status": rec.status,
    }


def record_from_dict(data, order):
    """Rebuild an ExpansionRecord over the given order from record_to_dict
    output; states and the period unit become exact elements again."""
    states = [tuple(order.element(*[_dec_num(c) for c in coords])
                    for coords in state)
              for state in data["states"]]
    digits = [tuple(_dec_num(d) for d in dig) for dig in data["digits"]]
    unit = data["period_unit"]
    if unit is not None:
        unit = order.element(*[_dec_num(c) for c in unit])
    return mcf.ExpansionRecord(data["algorithm"], order, data["tracking_root"],
                               states, digits, data["l0"], data["l1"],
                               unit, data["status"])


# ---------------------------------------------------------------------------
# Argument plumbing.

def _root_index(order, text):
    t = text.strip()
    if t in ("0", "1", "2"):
        return int(t)
    for label in order.labels:
        if t == label or t == label.replace("'", "p"):
            return order.label_index(label)
    raise ValueError("unknown root %r; this order has %s"
                     % (text, ", ".join(order.labels)))


def _parse_vector(text, count):
    parts = [p for p in text.split(";") if p.strip()]
    if len(parts) != count:
        raise ValueError("expected %d coordinate triples, got %d"
                         % (count, len(parts)))
    out = []
    for part in parts:
        comps = part.split(",")
        if len(comps) != 3:
            raise ValueError("coordinate triple must be v1,v2,v3, got %r"
                             % (part,))
        out.append(tuple(int(c) for c in comps))
    return out


def _resolve_max_iter(args):
    if args.max_iter is not None:
        return args.max_iter
    env = os.environ.get("MCF_MAX_ITER")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError("MCF_MAX_ITER must be an integer, got %r" % (env,))
    return DEFAULT_MAX_ITER


def _write_text(path, text):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _sig_str(x):
    return "".join("+" if s > 0 else "-" if s < 0 else "0" for s in signature(x))


def _flag(ok):
    return "✓" if ok else "✗"


# ---------------------------------------------------------------------------
# Subcommands.

def cmd_expand(args):
    order = families.parse_family(args.family)
    tracking = (_root_index(order, args.root) if args.root
                else order.tracking_default())
    max_iter = _resolve_max_iter(args)
    if args.vector and args.vector not in ("std", "(1,|t|,t^2)"):
        vec = _parse_vector(args.vector, 2 if args.algo == "ijpa" else 3)
    else:
        std = families.standard_vector(order, tracking)
        vec = std[1:] if args.algo == "ijpa" else std
    if args.algo == "jpa":
        rec = mcf.jpa_expand(order, vec, tracking=tracking, max_iter=max_iter)
    elif args.algo == "ijpa":
        rec = mcf.ijpa_expand(order, vec, tracking=tracking, max_iter=max_iter)
    else:
        rec = mcf.brun_expand(order, vec, tracking=tracking, max_iter=max_iter)
    _write_text(args.output, json.dumps(record_to_dict(rec), indent=2) + "\n")
    return 0 if rec.status in (mcf.PERIODIC, mcf.TERMINATED) else 2


def _classified_rows(rec):
    # catalog classification when the family has one, exact oracle otherwise
    try:
        return mcf.classify_semiconvergents(rec)
    except NoCatalog:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", mcf.NotPeriodicWarning)
            rows = mcf.semiconvergents(rec)
        units = rec.order.units
        for row in rows:
            probe = (flat_associate(row.value, units)[0] if units
                     else row.value)
            row.verdict = ("indecomposable" if not is_decomposable(probe)
                           else "decomposable")
        return rows


def cmd_classify(args):
    order = families.parse_family(args.family)
    tracking = (_root_index(order, args.root) if args.root
                else order.tracking_default())
    families.units_for_tracking(order, tracking)  # MissingUnits -> exit 3
    max_iter = _resolve_max_iter(args)
    vec = families.standard_vector(order, tracking)
    rec = mcf.jpa_expand(order, vec, tracking=tracking, max_iter=max_iter)
    rows = _classified_rows(rec)
    conv = all(r.verdict == "indecomposable" for r in rows if r.j == 0)
    semi = all(r.verdict == "indecomposable" for r in rows if r.j >= 1)
    if args.format == "json":
        data = {
            "rows": [{"k": r.k, "i": r.i, "j": r.j,
                      "coords": _enc_coords(r.value),
                      "norm": _enc_num(r.norm),
                      "label": label_str(r.label) if r.label else "",
                      "unit_exponents": list(r.unit_exponents)
                                        if r.unit_exponents else None,
                      "verdict": r.verdict} for r in rows],
            "l0": rec.l0, "l1": rec.l1, "status": rec.status,
            "conv": conv, "semiconv": semi,
        }
        _write_text(args.output, json.dumps(data, indent=2) + "\n")
        return 0
    buf = []
    out = csv.writer(_ListWriter(buf), lineterminator="\n")
    out.writerow(["k", "i", "j", "coords", "norm", "label",
                  "unit_exponents", "verdict"])
    for r in rows:
        exps = ("%d:%d:%d" % r.unit_exponents) if r.unit_exponents else ""
        out.writerow([r.k, r.i, r.j, "%d:%d:%d" % r.value.v, r.norm,
                      label_str(r.label) if r.label else "", exps, r.verdict])
    summary = "# l0=%s l1=%s conv=%s semiconv=%s\n" % (
        "" if rec.l0 is None else rec.l0,
        "" if rec.l1 is None else rec.l1,
        _flag(conv), _flag(semi))
    _write_text(args.output, "".join(buf) + summary)
    return 0


class _ListWriter:
    def __init__(self, buf):
        self.buf = buf

    def write(self, s):
        self.buf.append(s)


def cmd_catalog(args):
    order = families.parse_family(args.family)
    cat = catalog_for(order)
    buf = []
    out = csv.writer(_ListWriter(buf), lineterminator="\n")
    out.writerow(["family", "a", "label", "v1", "v2", "v3",
                  "norm", "trace", "signature"])
    for entry in cat:
        x = entry.element
        out.writerow([cat.family, cat.a, label_str(entry.label),
                      x.v[0], x.v[1], x.v[2], x.norm(), trace(x), _sig_str(x)])
    _write_text(args.output, "".join(buf))
    return 0


def cmd_pythagoras(args):
    order = families.parse_family(args.family)
    if args.gamma:
        (coords,) = _parse_vector(args.gamma, 1)
        gamma = order.element(*coords)
    else:
        gamma, parts = standard_target(order)
        if not verify_representation(gamma, parts):
            raise OrderError("standard witness failed verification")
    ss = squares_below(gamma)
    res = min_squares(gamma, cap=args.cap, square_set=ss)
    if isinstance(res, MoreThanCap):
        count, forced = "MoreThanCap", []
    else:
        count = res
        forced = minimal_decomposition(gamma, cap=args.cap, square_set=ss)
    data = {
        "gamma": _enc_coords(gamma),
        "squares": [_enc_coords(s) for s in ss.squares],
        "min_squares": count,
        "forced_decomposition": [_enc_coords(s) for s in forced],
    }
    _write_text(args.output, json.dumps(data, indent=2) + "\n")
    return 0


def _indecomposable_verdict(x, indec_coords, trace_bound, units):
    # indecomposability is invariant under unit scaling and negation, so
    # reduce to the flattest associate first; a totally positive associate
    # with trace within the harvest bound has an exact flag in the harvest,
    # everything else gets the exhaustive test
    best, _ = flat_associate(x, units)
    if is_totally_positive(best):
        y = best
    elif is_totally_positive(-best):
        y = -best
    else:
        y = None
    if y is not None and trace(y) <= trace_bound:
        return y.v in indec_coords
    return not is_decomposable(best)


def _scan_field(entry, trace_bound, max_iter):
    poly = entry["poly"]
    units = entry.get("units")
    if not units:
        raise MissingUnits("scan entry %r carries no unit pair" % (poly,))
    units = tuple(tuple(int(c) for c in u) for u in units)
    order = families.generic_order(int(poly["p"]), int(poly["q"]),
                                   int(poly["r"]), units=units)
    harvest = harvest_totally_positive(order, trace_bound)
    indec_coords = {x.v for x, flag in harvest.items() if flag}
    out = []
    for tracking in range(3):
        vec = families.standard_vector(order, tracking)
        rec = mcf.jpa_expand(order, vec, tracking=tracking, max_iter=max_iter)
        conv = None
        semi = None
        if rec.status == "Periodic":
            # a periodic record carries finitely many convergent classes;
            # a truncated orbit cannot settle an all-convergents claim
            rows = mcf.semiconvergents(rec)
            conv = True
            semi = True
            for row in rows:
                ok = _indecomposable_verdict(row.value, indec_coords,
                                             trace_bound, order.units)
                if row.j == 0:
                    conv = conv and ok
                else:
                    semi = semi and ok
        out.append({
            "poly": {"p": order.p, "q": order.q, "r": order.r},
            "disc": order.disc,
            "root": float(order.root_float(tracking)),
            "tracking": tracking,
            "status": rec.status,
            "l0": rec.l0,
            "l1": rec.l1,
            "conv": conv,
            "semiconv": semi,
            "note": entry.get("note", ""),
        })
    return out


def cmd_scan(args):
    with open(args.input, encoding="utf-8") as fh:
        entries = json.load(fh)
    max_iter = _resolve_max_iter(args)
    work = functools.partial(_scan_field, trace_bound=args.trace_bound,
                             max_iter=max_iter)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            chunks = list(pool.map(work, entries))
    else:
        chunks = [work(e) for e in entries]
    rows = [row for chunk in chunks for row in chunk]
    _write_text(args.output, json.dumps(rows, indent=2) + "\n")
    return 0


# ---------------------------------------------------------------------------
# Parser.

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, "%s: error: %s\n" % (self.prog, message))


def build_parser():
    parser = _Parser(prog="cubicmcf", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="run an expansion, emit JSON")
    p.add_argument("--family", required=True)
    p.add_argument("--root", help="root label, ASCII alias, or index")
    p.add_argument("--algo", choices=("jpa", "ijpa", "brun"), default="jpa")
    p.add_argument("--vector",
                   help="raw start: v1,v2,v3;...  (default: 1, |t|, t^2)")
    p.add_argument("--max-iter", type=int)
    p.add_argument("--output")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("classify", help="classify semiconvergents, emit CSV")
    p.add_argument("--family", required=True)
    p.add_argument("--root")
    p.add_argument("--max-iter", type=int)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("catalog", help="dump an indecomposable catalog as CSV")
    p.add_argument("--family", required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("pythagoras", help="sum-of-squares report as JSON")
    p.add_argument("--family", required=True)
    p.add_argument("--gamma", help="target coordinates v1,v2,v3")
    p.add_argument("--cap", type=int, default=8)
    p.add_argument("--output")
    p.set_defaults(func=cmd_pythagoras)

    p = sub.add_parser("scan", help="harvest/expand/classify over a JSON file")
    p.add_argument("--input", required=True)
    p.add_argument("--trace-bound", type=int, default=50)
    p.add_argument("--max-iter", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except MissingUnits as exc:
        print("cubicmcf: %s" % (exc,), file=sys.stderr)
        return 3
    except (OrderError, ValueError, KeyError, OSError,
            json.JSONDecodeError) as exc:
        print("cubicmcf: %s" % (exc,), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
