"""Reading cubic-fourfold input documents.

A document is INI-like text::

    [cubic]
    a00 = "0"
    a01 = "z - 2*y"
    ...
    c = "x^3 + y^3 + z^3"

    [hyperplane]        ; optional, default t0 = 0
    l1 = "0"
    l0 = "0"

    [lines]             ; optional, lines tested for tritangency
    L1 = "x"

    [options]           ; optional
    primes = 7, 11
    seed = 0
    checks = iii, iv

Every coefficient of ``[cubic]`` must be present.  Alternatively a
``[gram]`` section may give the upper triangle of the Gram matrix as
``m00 .. m33``.
"""

from __future__ import annotations

import configparser
import re
from dataclasses import dataclass, field

from .cubic.generality import CHECKS, CONDITIONS, CheckOptions
from .cubic.gram import COEFF_DEGREES, STANDARD_HYPERPLANE, GramCubic, HyperplaneSpec, build_cubic
from .cubic.probe import DEFAULT_PRIMES
from .curves.curve import PLANE_VARS, PlaneCurve
from .poly.parser import PolySyntaxError, parse_poly

SECTIONS = ("cubic", "gram", "hyperplane", "lines", "options")
GRAM_KEYS = tuple(f"m{i}{j}" for i in range(4) for j in range(i, 4))


class InputError(ValueError):
    def __init__(self, message: str, source: str | None = None, line: int | None = None):
        self.source, self.line = source, line
        if source is None:
            super().__init__(message)
        else:
            where = f"{source}:{line}" if line is not None else source
            super().__init__(f"{where}: {message}")


@dataclass
class InputDocument:
    cubic: GramCubic
    hyperplane: HyperplaneSpec = STANDARD_HYPERPLANE
    hyperplane_given: bool = False
    lines: list[PlaneCurve] = field(default_factory=list)
    primes: tuple[int, ...] = DEFAULT_PRIMES
    seed: int = 0
    checks: tuple[str, ...] | None = None
    source: str = "<input>"

    def options(self, seed: int | None = None, primes=None) -> CheckOptions:
        return CheckOptions(
            checks=self.checks,
            primes=tuple(primes) if primes else self.primes,
            lines=self.lines,
            seed=self.seed if seed is None else seed,
        )


def _unquote(value: str) -> str:
    value = value.strip()
    if len(value) >= 2 and value[0] == value[-1] and value[0] in "\"'":
        return value[1:-1]
    return value


class _Locator:
    """Maps (section, key) back to line numbers of the raw text."""

    def __init__(self, text: str):
        self.index: dict[tuple[str, str], int] = {}
        self.sections: dict[str, int] = {}
        section = None
        for n, raw in enumerate(text.splitlines(), start=1):
            s = raw.strip()
            m = re.fullmatch(r"\[([^\]]+)\]", s)
            if m:
                section = m.group(1).strip()
                self.sections[section] = n
                continue
            m = re.match(r"([^=:;#\s][^=:]*?)\s*[=:]", s)
            if m and section is not None:
                self.index.setdefault((section, m.group(1).strip()), n)

    def line(self, section: str, key: str | None = None) -> int | None:
        if key is None:
            return self.sections.get(section)
        return self.index.get((section, key), self.sections.get(section))


def parse_input(text: str, source: str = "<input>") -> InputDocument:
    cp = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=(";", "#"))
    cp.optionxform = str
    try:
        cp.read_string(text, source=source)
    except configparser.ParsingError as exc:
        lineno = exc.errors[0][0] if exc.errors else None
        raise InputError("malformed line", source, lineno) from None
    except (configparser.DuplicateOptionError, configparser.DuplicateSectionError) as exc:
        raise InputError(exc.message.split(": ", 1)[-1], source, exc.lineno) from None
    except configparser.Error as exc:
        raise InputError(exc.message, source, 1) from None
    loc = _Locator(text)

    def fail(msg, section, key=None):
        raise InputError(msg, source, loc.line(section, key))

    for name in cp.sections():
        if name not in SECTIONS:
            fail(f"unknown section [{name}]", name)

    def poly(section, key, vars_):
        raw = _unquote(cp[section][key])
        try:
            return parse_poly(raw, vars_)
        except PolySyntaxError as exc:
            fail(f"{key}: {exc.message} at column {exc.position + 1} of {raw!r}", section, key)

    # the cubic
    if cp.has_section("cubic") == cp.has_section("gram"):
        raise InputError("exactly one of [cubic] or [gram] is required", source)
    try:
        if cp.has_section("cubic"):
            keys = list(cp["cubic"])
            for k in keys:
                if k not in COEFF_DEGREES:
                    fail(f"unknown coefficient {k!r}", "cubic", k)
            missing = [k for k in COEFF_DEGREES if k not in keys]
            if missing:
                fail(f"missing coefficients {', '.join(missing)}", "cubic")
            values = {}
            for k in COEFF_DEGREES:
                values[k] = poly("cubic", k, PLANE_VARS)
                p, d = values[k], COEFF_DEGREES[k]
                if p and not p.is_homogeneous(d):
                    fail(f"{k} must be homogeneous of degree {d} in x, y, z, got {p}", "cubic", k)
            cubic = build_cubic(values)
        else:
            keys = list(cp["gram"])
            for k in keys:
                if k not in GRAM_KEYS:
                    fail(f"unknown Gram entry {k!r} (use m00..m33 with i <= j)", "gram", k)
            m = [[None] * 4 for _ in range(4)]
            for i in range(4):
                for j in range(i, 4):
                    k = f"m{i}{j}"
                    if k not in keys:
                        fail(f"missing Gram entry {k}", "gram")
                    m[i][j] = m[j][i] = poly("gram", k, PLANE_VARS)
            try:
                cubic = GramCubic.from_gram_matrix(m)
            except ValueError as exc:
                fail(str(exc), "gram")
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(str(exc), source, loc.line("cubic" if cp.has_section("cubic") else "gram")) from None

    doc = InputDocument(cubic, source=source)

    if cp.has_section("hyperplane"):
        sec = cp["hyperplane"]
        doc.hyperplane_given = True
        for k in sec:
            if k not in ("l1", "l0"):
                fail(f"unknown hyperplane key {k!r}", "hyperplane", k)
        try:
            l1 = poly("hyperplane", "l1", ("t1", "t2")) if "l1" in sec else None
            l0 = poly("hyperplane", "l0", PLANE_VARS) if "l0" in sec else None
            doc.hyperplane = HyperplaneSpec.parse(
                str(l1) if l1 is not None else "0", str(l0) if l0 is not None else "0"
            )
        except InputError:
            raise
        except ValueError as exc:
            fail(str(exc), "hyperplane")

    if cp.has_section("lines"):
        for k in cp["lines"]:
            p = poly("lines", k, PLANE_VARS)
            if not p or not p.is_homogeneous(1):
                fail(f"{k} is not a linear form in x, y, z", "lines", k)
            doc.lines.append(PlaneCurve(p))

    if cp.has_section("options"):
        sec = cp["options"]
        for k in sec:
            if k not in ("primes", "seed", "checks"):
                fail(f"unknown option {k!r}", "options", k)
        if "primes" in sec:
            try:
                doc.primes = tuple(int(t) for t in _unquote(sec["primes"]).replace(",", " ").split())
            except ValueError:
                fail("primes must be a list of integers", "options", "primes")
            if not doc.primes:
                fail("empty prime list", "options", "primes")
        if "seed" in sec:
            try:
                doc.seed = int(_unquote(sec["seed"]))
            except ValueError:
                fail("seed must be an integer", "options", "seed")
        if "checks" in sec:
            names = tuple(t for t in _unquote(sec["checks"]).replace(",", " ").split())
            bad = [t for t in names if t not in CHECKS and t not in CONDITIONS]
            if bad:
                fail(f"unknown checks {', '.join(bad)}", "options", "checks")
            doc.checks = names
    return doc


def read_input(path: str) -> InputDocument:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(exc.strerror or str(exc), path) from None
    return parse_input(text, path)
