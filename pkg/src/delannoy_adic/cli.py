"""Command-line front end.

Every command is a pure function of its flags (and seed), so output is
byte-stable: JSON keys are sorted and floats are rounded to 12 significant
digits.  Exit status is 0 on success, 1 on a domain error and 2 on bad
flags; errors go to stderr as one JSON object.

The default output format is per command; ``DELANNOY_ADIC_FORMAT``
overrides it and ``--format`` overrides both.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, List, Optional, Sequence

from . import asymptotics, congruence, dimgroup, measures, numbers, vershik
from .diagram import FinitePath
from .errors import DelannoyError, TruncationExhausted

FORMAT_ENV = "DELANNOY_ADIC_FORMAT"
FORMATS = ("json", "csv", "text")


class UsageError(Exception):
    pass


@dataclass
class Output:
    record: dict
    header: Optional[List[str]] = None
    rows: Optional[List[list]] = None
    lines: Optional[List[str]] = None
    default_format: str = "json"


def _clean(value: Any) -> Any:
    """Make a value JSON-ready and platform-stable."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        if math.isnan(value) or math.isinf(value):
            return str(value)
        return float(f"{value:.12g}")
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_clean(v) for v in value]
    return str(value)


def _cell(value: Any) -> str:
    value = _clean(value)
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def render(out: Output, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_clean(out.record), sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if out.rows is not None:
            w.writerow(out.header)
            for row in out.rows:
                w.writerow([_cell(c) for c in row])
        else:
            w.writerow(["key", "value"])
            for key in sorted(out.record):
                w.writerow([key, _cell(out.record[key])])
        return buf.getvalue()
    if out.lines is not None:
        return "".join(line + "\n" for line in out.lines)
    return "".join(f"{k}: {_cell(out.record[k])}\n" for k in sorted(out.record))


# argument helpers

def _poly(text: str) -> dimgroup.IntPoly:
    body = text.strip().strip("[]").strip()
    if not body:
        return dimgroup.IntPoly()
    try:
        return dimgroup.IntPoly(int(c) for c in body.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"polynomials are comma-separated integers, low degree first: {text!r}"
        ) from None


def _path(text: str) -> FinitePath:
    try:
        return FinitePath.parse(text)
    except DelannoyError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _measure(beta_text: str):
    return measures.measure_from_beta(measures.parse_beta(beta_text))


def _measure_record(p: measures.MeasureParams) -> dict:
    rec = p.to_json()
    if not p.exact:
        rec["approximate"] = True
    return rec


# commands

def cmd_table(a) -> Output:
    kmax = a.nmax if a.kmax is None else a.kmax
    t = numbers.delannoy_table(a.nmax, kmax)
    rows = [[n, k, v] for (n, k), v in t.items()]
    return Output(
        {"nmax": a.nmax, "kmax": kmax, "table": t.as_lists()},
        ["n", "k", "value"],
        rows,
        [" ".join(str(v) for v in r) for r in t.entries],
        "text",
    )


def cmd_closed_forms(a) -> Output:
    forms = numbers.delannoy_closed_forms(a.n, a.k)
    d = numbers.delannoy(a.n, a.k)
    return Output(
        {"n": a.n, "k": a.k, "delannoy": d, "forms": forms, "agree": all(f == d for f in forms)},
        ["form", "value"],
        [[i + 1, f] for i, f in enumerate(forms)],
    )


def cmd_gf(a) -> Output:
    t = numbers.gf_truncation(a.nmax)
    match = all(v == numbers.delannoy(n, k) for (n, k), v in t.items())
    return Output(
        {"order": a.nmax, "coefficients": t.as_lists(), "matches_recurrence": match},
        ["n", "k", "coefficient"],
        [[n, k, v] for (n, k), v in t.items()],
        [" ".join(str(v) for v in r) for r in t.entries],
        "text",
    )


def cmd_orbit(a) -> Output:
    orbit = [str(x) for x in vershik.orbit_enumerate(a.n, a.k)]
    return Output(
        {"n": a.n, "k": a.k, "count": len(orbit), "paths": orbit},
        ["index", "path"],
        [[i, w] for i, w in enumerate(orbit)],
        orbit,
        "text",
    )


def cmd_vershik_step(a) -> Output:
    step = vershik.predecessor if a.inverse else vershik.successor
    result = str(step(a.path))
    return Output(
        {
            "path": str(a.path),
            "direction": "predecessor" if a.inverse else "successor",
            "result": result,
        },
        lines=[result],
        default_format="text",
    )


def cmd_coding(a) -> Output:
    symbols = "".join(m.value for m in vershik.coding_sequence(a.path, a.iterations))
    return Output(
        {"path": str(a.path), "iterations": a.iterations, "coding": symbols},
        lines=[symbols],
        default_format="text",
    )


def cmd_measure_params(a) -> Output:
    p = _measure(a.beta)
    rec = _measure_record(p)
    if p.beta and p.gamma:
        rec["rho"] = measures.slope_and_limit(p)[0]
    return Output(rec)


def cmd_measure_cylinder(a) -> Output:
    p = _measure(a.beta)
    rec = _measure_record(p)
    t = a.path.terminal
    rec.update(
        path=str(a.path),
        terminal=[t.n, t.k],
        measure=measures.cylinder_measure(p, a.path),
    )
    return Output(rec)


def cmd_measure_sample(a) -> Output:
    p = _measure(a.beta)
    x = measures.sample_path(p, a.depth, a.seed)
    rec = _measure_record(p)
    t = x.terminal
    rec.update(seed=a.seed, depth=a.depth, path=str(x), terminal=[t.n, t.k])
    return Output(rec)


def cmd_measure_ratio(a) -> Output:
    p = _measure(a.beta)
    x = measures.sample_path(p, a.depth, a.seed)
    ratios = measures.ergodic_ratio(x, (a.n0, a.k0))
    rec = _measure_record(p)
    rec.update(seed=a.seed, depth=a.depth, v0=[a.n0, a.k0], ratios=ratios)
    rec["final_ratio"] = ratios[-1] if ratios else None
    if p.beta and p.gamma:
        rho, limit = measures.slope_and_limit(p, (a.n0, a.k0))
        rec.update(rho=rho, predicted_ratio=limit)
    return Output(
        rec,
        ["index", "ratio"],
        [[i, r] for i, r in enumerate(ratios)],
    )


def cmd_collide(a) -> Output:
    p = _measure(a.beta)
    stats = measures.collision_experiment(p, a.steps, a.trials, a.seed, coupled=a.coupled)
    rec = _measure_record(p)
    rec.update(stats.to_json())
    rec.update(seed=a.seed, coupled=a.coupled)
    if p.beta and p.gamma:
        rec["rho"] = measures.slope_and_limit(p)[0]
    return Output(rec)


def cmd_cong_lucas(a) -> Output:
    return Output(
        {
            "n": a.n,
            "k": a.k,
            "p": a.p,
            "digits_n": congruence.base_digits(a.n, a.p),
            "digits_k": congruence.base_digits(a.k, a.p),
            "residue": congruence.binom_mod_lucas(a.n, a.k, a.p),
        }
    )


def cmd_cong_lemma(a) -> Output:
    if a.which == "alternating":
        rep = congruence.check_lemma_alternating(a.p, a.r)
    elif a.which == "periodic":
        rep = congruence.check_lemma_periodic(a.p, a.r, a.imax)
    else:
        rep = congruence.check_lemma_vanish(a.p, a.r)
    return Output(rep.to_json())


def cmd_cong_sign(a) -> Output:
    return Output(congruence.check_delannoy_sign(a.p, a.r, a.nmax).to_json())


def cmd_cong_blocking(a) -> Output:
    b = congruence.BlockingSet(a.p, a.max_r)
    hits = congruence.blocking_hits(a.path, b)
    t = a.path.terminal
    return Output(
        {
            "path": str(a.path),
            "p": a.p,
            "max_r": a.max_r,
            "hits": [[v.n, v.k, res] for v, res in hits],
            "all_nonzero": all(res != 0 for _, res in hits),
            "min_expected_hits": b.expected_min_hits(t.n, t.k),
        },
        ["n", "k", "residue"],
        [[v.n, v.k, res] for v, res in hits],
    )


def _pair(r, s) -> dimgroup.PolyPair:
    return dimgroup.PolyPair(r, s)


def cmd_dg_unit(a) -> Output:
    u = dimgroup.order_unit()
    return Output({"unit": u.to_json(), "canonical": dimgroup.canonical_form(u).to_json()})


def cmd_dg_polynomial(a) -> Output:
    poly = dimgroup.delannoy_polynomial(a.n)
    return Output({"n": a.n, "coeffs": list(poly.coeffs)}, lines=[str(poly)])


def cmd_dg_levels(a) -> Output:
    v = dimgroup.level_dimensions(a.level)
    verts = dimgroup.level_vertices(a.level)
    rows = [[i, x.kind.value, x.n, x.k, d] for i, (x, d) in enumerate(zip(verts, v.entries))]
    return Output(
        {
            "level": a.level,
            "dimensions": list(v.entries),
            "pair": dimgroup.vector_to_polypair(v).to_json(),
            "adjacency": dimgroup.adjacency_matrix(a.level),
        },
        ["index", "kind", "n", "k", "dimension"],
        rows,
    )


def cmd_dg_reduce(a) -> Output:
    p = _pair(a.r, a.s)
    c = dimgroup.canonical_form(p)
    return Output({"input": p.to_json(), "canonical": c.to_json()})


def cmd_dg_add(a) -> Output:
    p1, p2 = _pair(a.r1, a.s1), _pair(a.r2, a.s2)
    total = dimgroup.class_add(p1, p2)
    rec = {"sum": total.to_json()}
    if not total.is_zero():
        rec["canonical"] = dimgroup.canonical_form(total).to_json()
    return Output(rec)


def cmd_dg_equal(a) -> Output:
    p1, p2 = _pair(a.r1, a.s1), _pair(a.r2, a.s2)
    return Output({"first": p1.to_json(), "second": p2.to_json(), "equal": dimgroup.class_equal(p1, p2)})


def cmd_dg_positivity(a) -> Output:
    p = _pair(a.r, a.s)
    return Output(
        {"pair": p.to_json(), "bound": a.bound, "positivity": dimgroup.class_positivity(p, a.bound)}
    )


def cmd_asym_compare(a) -> Output:
    if a.kind == "diagonal":
        rows = []
        for n in range(1, a.nmax + 1):
            exact = numbers.delannoy(n, n)
            lg = asymptotics.log_diagonal_asymptotic(n)
            rows.append([n, n, exact, math.exp(lg), asymptotics.relative_error(lg, exact)])
    else:
        pts = [(n, k) for n in range(1, a.nmax + 1) for k in range(1, a.nmax + 1)]
        rows = [
            [r["n"], r["k"], r["exact"], r["approx"], r["rel_error"]]
            for r in asymptotics.compare_table(pts)
        ]
    header = ["n", "k", "exact", "approx", "rel_error"]
    return Output(
        {"kind": a.kind, "rows": [dict(zip(header, r)) for r in rows]},
        header,
        rows,
        default_format="csv",
    )


def cmd_asym_decay(a) -> Output:
    rows = [
        [lv, asymptotics.decay_level_max(lv), asymptotics.decay_antidiagonal_max(lv)]
        for lv in range(a.nmax + 1)
    ]
    header = ["level", "max_ratio", "max_ratio_antidiagonal"]
    return Output(
        {"rows": [dict(zip(header, r)) for r in rows]}, header, rows, default_format="csv"
    )


def cmd_asym_theta(a) -> Output:
    v = asymptotics.theta_functions(a.theta)
    return Output({"theta": a.theta, "A": v.A, "G": v.G, "B": v.B})


def cmd_asym_entropy(a) -> Output:
    h, lam = asymptotics.entropy_lambda(a.epsilon)
    return Output(
        {"epsilon": a.epsilon, "H": h, "lambda": lam, "small_enough": 2 ** (2 * a.epsilon) * lam < 2}
    )


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=FORMATS, default=None)

    parser = _Parser(prog="delannoy-adic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(parent, name, func, help_text):
        p = parent.add_parser(name, help=help_text, parents=[fmt])
        p.set_defaults(func=func)
        return p

    p = add(sub, "table", cmd_table, "Delannoy number grid")
    p.add_argument("--nmax", type=_nonneg, required=True)
    p.add_argument("--kmax", type=_nonneg)

    p = add(sub, "closed-forms", cmd_closed_forms, "six binomial sums for D(n,k), n >= k")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--k", type=_nonneg, required=True)

    p = add(sub, "gf", cmd_gf, "generating-function coefficients up to total degree nmax")
    p.add_argument("--nmax", type=_nonneg, required=True)

    p = add(sub, "orbit", cmd_orbit, "all paths to (n,k) in adic order")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--k", type=_nonneg, required=True)

    p = add(sub, "vershik-step", cmd_vershik_step, "successor (or predecessor) of a path")
    p.add_argument("--path", type=_path, required=True)
    p.add_argument("--inverse", action="store_true")

    p = add(sub, "coding", cmd_coding, "first symbols of the coding sequence")
    p.add_argument("--path", type=_path, required=True)
    p.add_argument("--iterations", type=_nonneg, required=True)

    m = sub.add_parser("measure", help="invariant measures").add_subparsers(
        dest="measure_command", required=True, parser_class=_Parser
    )
    p = add(m, "params", cmd_measure_params, "alpha, beta, gamma from beta")
    p.add_argument("--beta", required=True)
    p = add(m, "cylinder", cmd_measure_cylinder, "measure of a cylinder")
    p.add_argument("--beta", required=True)
    p.add_argument("--path", type=_path, required=True)
    p = add(m, "sample", cmd_measure_sample, "sample a random path")
    p.add_argument("--beta", required=True)
    p.add_argument("--depth", type=_nonneg, required=True)
    p.add_argument("--seed", type=_nonneg, default=0)
    p = add(m, "ergodic-ratio", cmd_measure_ratio, "dim ratios along a sampled path")
    p.add_argument("--beta", required=True)
    p.add_argument("--n0", type=_nonneg, default=1)
    p.add_argument("--k0", type=_nonneg, default=1)
    p.add_argument("--depth", type=_nonneg, required=True)
    p.add_argument("--seed", type=_nonneg, default=0)

    p = add(sub, "collide", cmd_collide, "collision experiment for two walkers")
    p.add_argument("--beta", required=True)
    p.add_argument("--steps", type=_nonneg, required=True)
    p.add_argument("--trials", type=_nonneg, default=1)
    p.add_argument("--seed", type=_nonneg, default=0)
    p.add_argument("--coupled", action="store_true", help="both walkers share one stream")

    c = sub.add_parser("congruence", help="congruences mod p").add_subparsers(
        dest="congruence_command", required=True, parser_class=_Parser
    )
    p = add(c, "lucas", cmd_cong_lucas, "C(n,k) mod p by Lucas' formula")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--p", type=_nonneg, required=True)
    p = add(c, "lemma", cmd_cong_lemma, "verify a binomial congruence")
    p.add_argument("--which", choices=("alternating", "periodic", "vanish"), required=True)
    p.add_argument("--p", type=_nonneg, required=True)
    p.add_argument("--r", type=_nonneg, required=True)
    p.add_argument("--imax", type=_nonneg, default=3)
    p = add(c, "sign", cmd_cong_sign, "verify D(n, p^r - 1) = (-1)^(n mod p^r) mod p")
    p.add_argument("--p", type=_nonneg, required=True)
    p.add_argument("--r", type=_nonneg, required=True)
    p.add_argument("--nmax", type=_nonneg, required=True)
    p = add(c, "blocking", cmd_cong_blocking, "blocking-set hits of a path")
    p.add_argument("--path", type=_path, required=True)
    p.add_argument("--p", type=_nonneg, required=True)
    p.add_argument("--max-r", type=_nonneg, required=True)

    d = sub.add_parser("dimgroup", help="dimension group calculus").add_subparsers(
        dest="dimgroup_command", required=True, parser_class=_Parser
    )
    add(d, "unit", cmd_dg_unit, "order unit and its canonical form")
    p = add(d, "polynomial", cmd_dg_polynomial, "Delannoy polynomial P_n")
    p.add_argument("--n", type=_nonneg, required=True)
    p = add(d, "levels", cmd_dg_levels, "dimensions and adjacency at a level")
    p.add_argument("--level", type=_nonneg, required=True)
    p = add(d, "reduce", cmd_dg_reduce, "canonical representative of (r, s)")
    p.add_argument("--r", type=_poly, required=True)
    p.add_argument("--s", type=_poly, required=True)
    for name, func in (("add", cmd_dg_add), ("equal", cmd_dg_equal)):
        p = add(d, name, func, f"{name} two classes")
        for flag in ("--r1", "--s1", "--r2", "--s2"):
            p.add_argument(flag, type=_poly, required=True)
    p = add(d, "positivity", cmd_dg_positivity, "semi-decide positivity of a class")
    p.add_argument("--r", type=_poly, required=True)
    p.add_argument("--s", type=_poly, required=True)
    p.add_argument("--bound", type=_nonneg, default=64)

    s = sub.add_parser("asymptotics", help="asymptotic formulas").add_subparsers(
        dest="asymptotics_command", required=True, parser_class=_Parser
    )
    p = add(s, "compare", cmd_asym_compare, "exact vs asymptotic values")
    p.add_argument("--nmax", type=_nonneg, required=True)
    p.add_argument("--kind", choices=("pw", "diagonal"), default="pw")
    p = add(s, "nicomachus-decay", cmd_asym_decay, "per-level max of D(n,k)/2^n 3^k")
    p.add_argument("--nmax", type=_nonneg, required=True)
    p = add(s, "theta", cmd_asym_theta, "A, G, B at a direction theta = k/n")
    p.add_argument("--theta", type=float, required=True)
    p = add(s, "entropy", cmd_asym_entropy, "H(eps) and lambda")
    p.add_argument("--epsilon", type=float, required=True)

    return parser


def _emit_error(stream, kind: str, message: str, **extra) -> None:
    payload = {"error": kind, "message": message}
    payload.update(extra)
    stream.write(json.dumps(_clean(payload), sort_keys=True) + "\n")


def main(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        _emit_error(stderr, "UsageError", str(exc))
        return 2
    try:
        out = args.func(args)
    except TruncationExhausted as exc:
        _emit_error(
            stderr,
            "TruncationExhausted",
            str(exc),
            produced="".join(m.value for m in exc.symbols),
        )
        return 1
    except DelannoyError as exc:
        _emit_error(stderr, type(exc).__name__, str(exc))
        return 1
    fmt = args.format or os.environ.get(FORMAT_ENV) or out.default_format
    if fmt not in FORMATS:
        _emit_error(stderr, "UsageError", f"unknown format {fmt!r}")
        return 2
    stdout.write(render(out, fmt))
    return 0


if __name__ == "__main__":
    sys.exit(main())
