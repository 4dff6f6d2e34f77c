"""Command-line front end: ``cubicplane <verb> ...``.

Exit codes: 0 all checks pass, 1 a check failed, 2 bad input,
3 nothing failed but some probe was inconclusive.
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import Iterable, TextIO

from . import __version__
from .cubic.generality import GeneralityReport, check_generality
from .cubic.gram import DegenerateBundleError, discriminant_quintic, discriminant_sextic
from .cubic.probe import BadPrimeError, Status
from .curves.curve import PlaneCurve
from .curves.intersection import CommonComponentError, multiplicity_profile
from .curves.smoothness import is_smooth, rational_singular_points
from .inputdoc import InputDocument, InputError, read_input
from .numerics import InadmissibleK, dimension_tower, mukai_chi
from .poly.multipoly import MultiPoly
from .poly.parser import PolySyntaxError
from .strata import NodalCurveModel, resolution_model, stratify, tangent_decomposition
from .worked import BUILTIN_TEXT, builtin

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class Report:
    """Ordered ``key = value`` lines, printed after a ``#report`` marker."""

    def __init__(self, command: str):
        self.items: list[tuple[str, str]] = [("tool", f"cubicplane {__version__}"), ("command", command)]

    def add(self, key: str, value) -> None:
        text = str(value).replace("\n", " ")
        for k, v in self.items:
            if k == key:
                if v != text:
                    raise ValueError(f"report key {key!r} given twice with different values")
                return
        self.items.append((key, text))

    def render(self) -> str:
        return "\n".join(["#report"] + [f"{k} = {v}" for k, v in self.items]) + "\n"


def factored_display(p: MultiPoly) -> str:
    """Pull the monomial factor out of ``p`` for display."""
    if not p:
        return "0"
    low = [min(e[i] for e in p.terms) for i in range(len(p.vars))]
    if not any(low):
        return str(p)
    mono = MultiPoly({tuple(low): 1}, p.vars, p.field)
    rest = p.exact_div(mono)
    parts = [f"{v}^{a}" if a > 1 else v for v, a in zip(p.vars, low) if a]
    if rest.is_constant():
        c = rest.constant_value()
        return "*".join(parts) if c == 1 else f"{c}*" + "*".join(parts)
    return "*".join(parts) + f"*({rest})"


def _status_exit(status: Status) -> int:
    if status is Status.FAIL:
        return EXIT_FAIL
    if status is Status.INCONCLUSIVE:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _load(args) -> InputDocument:
    if getattr(args, "example", None):
        return builtin(args.example)
    if not getattr(args, "input", None):
        raise InputError("an input file (--input) or a built-in example (--example) is required")
    return read_input(args.input)


def _primes(text: str | None):
    if not text:
        return None
    try:
        return tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise InputError(f"--primes expects integers, got {text!r}") from None


# -- discriminants ------------------------------------------------------------


def _discriminants(doc: InputDocument, rep: Report, out: list[str]) -> int:
    code = EXIT_OK
    rep.add("source", doc.source)
    for key, label, make in (
        ("D6", "sextic discriminant", lambda: discriminant_sextic(doc.cubic)),
        ("D_H", "restricted discriminant", lambda: discriminant_quintic(doc.cubic, doc.hyperplane)),
    ):
        try:
            curve = make()
        except DegenerateBundleError as exc:
            rep.add(key, "degenerate")
            rep.add(f"{key}.error", exc)
            out.append(f"{label} {key}: degenerate ({exc})")
            code = EXIT_FAIL
            continue
        rep.add(key, curve.poly)
        rep.add(f"{key}.degree", curve.degree)
        fac = factored_display(curve.poly)
        if fac != str(curve.poly):
            rep.add(f"{key}.factored", fac)
        out.append(f"{label} {key} (degree {curve.degree}):\n  {curve.poly}")
        if fac != str(curve.poly):
            out.append(f"  = {fac}")
    if doc.hyperplane_given:
        rep.add("hyperplane", doc.hyperplane)
    return code


def cmd_discriminant(args, stdout: TextIO) -> int:
    doc = _load(args)
    rep = Report("discriminant")
    out: list[str] = []
    code = _discriminants(doc, rep, out)
    rep.add("exit_code", code)
    stdout.write(rep.render() if args.format == "report" else "\n".join(out) + "\n")
    return code


# -- generality checks -----------------------------------------------------------


def _report_checks(report: GeneralityReport, rep: Report, timings: bool) -> None:
    for r in report.results:
        rep.add(f"check.{r.name}", r.status.value)
        for k, v in r.detail.items():
            rep.add(f"check.{r.name}.{k}", v)
        if timings and r.status is not Status.SKIPPED:
            rep.add(f"check.{r.name}.seconds", f"{r.seconds:.3f}")
    for cond in ("i", "ii", "iii", "iv"):
        rep.add(f"condition.{cond}", report.condition(cond).value)
    rep.add("overall", report.overall.value)


def _human_checks(report: GeneralityReport, source: str, timings: bool) -> list[str]:
    out = [f"generality checks for {source} (seed {report.seed})"]
    width = max(len(r.name) for r in report.results)
    for r in report.results:
        line = f"  {r.name:<{width}}  {r.status.value}"
        if timings and r.status is not Status.SKIPPED:
            line += f"  [{r.seconds:.2f}s]"
        out.append(line)
        if r.status is Status.SKIPPED:
            continue
        for k, v in r.detail.items():
            out.append(f"      {k}: {v}")
    conds = ", ".join(f"({c}) {report.condition(c).value}" for c in ("i", "ii", "iii", "iv"))
    out.append(f"conditions: {conds}")
    out.append(f"overall: {report.overall.value}")
    return out


def _run_check(doc: InputDocument, args, rep: Report, out: list[str]) -> int:
    opts = doc.options(seed=args.seed, primes=_primes(args.primes))
    report = check_generality(doc.cubic, doc.hyperplane, opts)
    rep.add("source", doc.source)
    rep.add("seed", opts.seed)
    rep.add("primes", ",".join(map(str, opts.primes)))
    rep.add("hyperplane", doc.hyperplane)
    _report_checks(report, rep, args.timings)
    out.extend(_human_checks(report, doc.source, args.timings))
    code = _status_exit(report.overall)
    rep.add("exit_code", code)
    return code


def cmd_check(args, stdout: TextIO) -> int:
    doc = _load(args)
    rep = Report("check")
    out: list[str] = []
    code = _run_check(doc, args, rep, out)
    stdout.write(rep.render() if args.format == "report" else "\n".join(out) + "\n")
    return code


def cmd_example(args, stdout: TextIO) -> int:
    if args.id not in BUILTIN_TEXT:
        raise InputError(f"unknown example {args.id!r}; available: {', '.join(BUILTIN_TEXT)}")
    if args.show_input:
        stdout.write(BUILTIN_TEXT[args.id])
        return EXIT_OK
    doc = builtin(args.id)
    rep = Report("example")
    out: list[str] = []
    _discriminants(doc, rep, out)  # a degenerate discriminant is informative here, not a failure
    out.append("")
    code = _run_check(doc, args, rep, out)
    stdout.write(rep.render() if args.format == "report" else "\n".join(out) + "\n")
    return code


# -- numerics ------------------------------------------------------------------------


def _table(rows: Iterable[tuple], header: tuple) -> list[str]:
    rows = [tuple(str(c) for c in r) for r in rows]
    widths = [max(len(str(h)), *(len(r[i]) for r in rows)) for i, h in enumerate(header)]

    def fmt(r):
        cells = [c.rjust(w) if c.lstrip("-").isdigit() else c.ljust(w) for c, w in zip(r, widths)]
        return "  ".join(cells).rstrip()

    return [fmt(header), fmt(tuple("-" * w for w in widths))] + [fmt(r) for r in rows]


def cmd_dimensions(args, stdout: TextIO) -> int:
    if args.k is None:
        raise InputError("--k is required")
    try:
        t = dimension_tower(args.k)
    except InadmissibleK as exc:
        raise InputError(str(exc)) from None
    chi = mukai_chi(t.k, t.delta)
    rep = Report("dimensions")
    for key, value in (
        ("k", t.k),
        ("dim_linear_system", t.dim_linear_system),
        ("p_a", t.p_a),
        ("delta", t.delta),
        ("dim_V", t.dim_V),
        ("dim_calV", t.dim_calV),
        ("g_normalization", t.g_normalization),
        ("g_plane_curve", t.g_plane_curve),
        ("prym_dim", t.prym_dim),
        ("moduli_dim", t.moduli_dim),
        ("mukai_vector", chi),
        ("chi", chi.chi),
    ):
        rep.add(key, value)
    if args.format == "report":
        stdout.write(rep.render())
        return EXIT_OK
    rows = [
        ("M -> |kH|", t.dim_linear_system, "CPic^0(C)", t.p_a),
        ("N -> V", t.dim_V, "Pic^0(C^nu)", t.g_normalization),
        ("P -> calV", t.dim_calV, "Prym", t.prym_dim),
    ]
    lines = [f"fibration tower for k = {t.k}", ""]
    lines += _table(rows, ("fibration", "base dim", "fibre", "fibre dim"))
    lines += [
        "",
        "fibres: Prym ⊂ Pic^0(C^nu) ⊂ CPic^0(C)",
        f"arithmetic genus p_a = {t.p_a}, nodes delta = {t.delta}",
        f"genus of the normalization = {t.g_normalization}, plane curve genus = {t.g_plane_curve}",
        f"dim M = {t.moduli_dim}, Mukai vector {chi}",
    ]
    stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_strata(args, stdout: TextIO) -> int:
    if args.pa is None or args.delta is None:
        raise InputError("--pa and --delta are required")
    try:
        model = NodalCurveModel(args.pa, args.delta)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    strata = stratify(model)
    res = resolution_model(model)
    rep = Report("strata")
    rep.add("p_a", model.p_a)
    rep.add("delta", model.delta)
    rep.add("g", model.g)
    for s in strata:
        td = tangent_decomposition(model, s.m)
        rep.add(f"stratum.{s.m}", f"count={s.count} dim={s.orbit_dim} codim={s.codim} tangent={s.tangent_dim}")
        rep.add(f"stratum.{s.m}.tangent_split", "+".join(map(str, td.as_tuple())))
        rep.add(f"stratum.{s.m}.local_ring", s.signature)
    rep.add("total_count", sum(s.count for s in strata))
    rep.add("resolution", f"{res.fibre} over dim {res.base_dim}, total {res.total_dim}")
    if args.format == "report":
        stdout.write(rep.render())
        return EXIT_OK
    rows = [
        (s.m, s.count, s.orbit_dim, s.codim, s.tangent_dim, "+".join(map(str, tangent_decomposition(model, s.m).as_tuple())))
        for s in strata
    ]
    lines = [f"compactified Jacobian, p_a = {model.p_a}, delta = {model.delta}, g = {model.g}", ""]
    lines += _table(rows, ("m", "orbits", "dim", "codim", "tangent", "g+2m+(delta-m)"))
    lines += ["", f"resolution: {res.fibre}-fibration over a {res.base_dim}-dimensional base"]
    stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_analyze_curve(args, stdout: TextIO) -> int:
    curves = []
    for text in args.curves:
        try:
            curves.append(PlaneCurve.parse(text))
        except PolySyntaxError as exc:
            raise InputError(f"{exc.message} at column {exc.position + 1} of {text!r}") from None
        except ValueError as exc:
            raise InputError(str(exc)) from None
    rep = Report("analyze-curve")
    rep.add("seed", args.seed or 0)
    out = []
    code = EXIT_OK
    for n, c in enumerate(curves, start=1):
        cert = is_smooth(c, random.Random(args.seed or 0))
        rep.add(f"curve.{n}", c)
        rep.add(f"curve.{n}.degree", c.degree)
        rep.add(f"curve.{n}.smooth", str(cert.smooth).lower())
        out.append(f"curve {n} (degree {c.degree}): {c}")
        out.append(f"  smooth: {'yes' if cert else 'no'}")
        if not cert:
            for k, v in cert.witness.items():
                rep.add(f"curve.{n}.{k}", v)
            sp = rational_singular_points(c, random.Random(args.seed or 0))
            pts = ", ".join(map(str, sp.points)) or "none"
            rep.add(f"curve.{n}.rational_singular_points", pts)
            rep.add(f"curve.{n}.exhaustive", str(sp.exhaustive).lower())
            out.append(f"  rational singular points: {pts}" + ("" if sp.exhaustive else " (possibly more over Qbar)"))
    if len(curves) == 2:
        try:
            prof = multiplicity_profile(curves[0], curves[1], random.Random(args.seed or 0))
            rep.add("profile", prof)
            rep.add("profile.total", prof.total)
            out.append(f"intersection profile: {prof} (total {prof.total})")
        except CommonComponentError as exc:
            rep.add("profile", "common component")
            out.append(f"intersection: {exc}")
            code = EXIT_FAIL
    stdout.write(rep.render() if args.format == "report" else "\n".join(out) + "\n")
    return code


# -- argument parsing ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "report"), default="human")
    common.add_argument("--seed", type=int, default=None, help="random seed (default: from input, else 0)")
    common.add_argument("--primes", help="comma separated primes for the smoothness probes")
    common.add_argument("--timings", action="store_true", help="include per-check timings (not reproducible)")

    src = argparse.ArgumentParser(add_help=False)
    src.add_argument("--input", metavar="FILE")
    src.add_argument("--example", metavar="ID", choices=sorted(BUILTIN_TEXT))

    p = argparse.ArgumentParser(prog="cubicplane", description="Cubic fourfolds containing a plane.")
    p.add_argument("--version", action="version", version=f"cubicplane {__version__}")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("discriminant", parents=[common, src], help="print the discriminant curves")
    s.set_defaults(func=cmd_discriminant)
    s = sub.add_parser("check", parents=[common, src], help="run the generality checks")
    s.set_defaults(func=cmd_check)
    s = sub.add_parser("example", parents=[common], help="run a built-in worked example")
    s.add_argument("id", help=", ".join(BUILTIN_TEXT))
    s.add_argument("--show-input", action="store_true", help="print the example's input document")
    s.set_defaults(func=cmd_example)
    s = sub.add_parser("dimensions", parents=[common], help="dimension tower for |kH|")
    s.add_argument("--k", type=int)
    s.set_defaults(func=cmd_dimensions)
    s = sub.add_parser("strata", parents=[common], help="strata of a compactified Jacobian")
    s.add_argument("--pa", type=int)
    s.add_argument("--delta", type=int)
    s.set_defaults(func=cmd_strata)
    s = sub.add_parser("analyze-curve", parents=[common], help="smoothness and intersection of plane curves")
    s.add_argument("curves", nargs="+", metavar="CURVE", help="one or two homogeneous forms in x, y, z")
    s.set_defaults(func=cmd_analyze_curve)
    return p


def main(argv: list[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    if stdout is None:
        stdout = sys.stdout
        if hasattr(stdout, "reconfigure"):
            stdout.reconfigure(encoding="utf-8")
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.verb == "analyze-curve" and len(args.curves) > 2:
        stderr.write("error: analyze-curve takes one or two curves\n")
        return EXIT_INPUT
    try:
        return args.func(args, stdout)
    except (InputError, BadPrimeError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) else str(exc)
        stderr.write(f"error: {msg}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
