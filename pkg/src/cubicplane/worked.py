"""Built-in worked examples, stored as input documents."""

from __future__ import annotations

from .inputdoc import InputDocument, parse_input

# Entries of the first row of ex-5.2.1 are unconstrained; these are one fixed choice.
EX_5_2_1 = """\
; smooth restricted discriminant quintic
[gram]
m00 = "y"
m01 = "z"
m02 = "y"
m03 = "x^2 + y^2"
m11 = "x + y + z"
m12 = "x"
m13 = "0"
m22 = "x"
m23 = "z^2"
m33 = "x^3 + y^3 + z^3"

[hyperplane]
l1 = "0"
l0 = "0"

[options]
checks = iii.DH_smooth
seed = 0
"""

EX_5_2_2 = """\
; the line {x = y = z = t0 = 0} is of the first type
[cubic]
a00 = "0"
a01 = "0"
a02 = "0"
a11 = "x"
a12 = "z"
a22 = "y"
b0 = "0"
b1 = "0"
b2 = "0"
c = "0"

[hyperplane]
l1 = "0"
l0 = "0"

[options]
checks = iii.L_first_type
seed = 0
"""

EX_5_2_3 = """\
; restricted and full discriminants meet with multiplicity 2 everywhere
[gram]
m00 = "0"
m01 = "z - 2*y"
m02 = "z - 2*x"
m03 = "(x - y)*(x - 2*y)"
m11 = "x"
m12 = "0"
m13 = "0"
m22 = "y"
m23 = "0"
m33 = "x^3 + y^3 + z^3"

[hyperplane]
l1 = "0"
l0 = "0"

[options]
checks = iv
seed = 0
"""

BUILTIN_TEXT = {
    "ex-5.2.1": EX_5_2_1,
    "ex-5.2.2": EX_5_2_2,
    "ex-5.2.3": EX_5_2_3,
}


def builtin(name: str) -> InputDocument:
    try:
        text = BUILTIN_TEXT[name]
    except KeyError:
        raise KeyError(f"unknown example {name!r}; available: {', '.join(BUILTIN_TEXT)}") from None
    return parse_input(text, name)
