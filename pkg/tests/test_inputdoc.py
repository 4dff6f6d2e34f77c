import pytest

from cubicplane.cubic.gram import STANDARD_HYPERPLANE
from cubicplane.inputdoc import InputError, parse_input, read_input
from cubicplane.worked import BUILTIN_TEXT, builtin

CUBIC = """\
[cubic]
a00 = "0"
a01 = "z - 2*y"
a02 = "z - 2*x"
a11 = "x"
a12 = "0"
a22 = "y"
b0 = "(x - y)*(x - 2*y)"
b1 = "0"
b2 = "0"
c = "x^3 + y^3 + z^3"
"""


def test_minimal_document():
    doc = parse_input(CUBIC)
    assert doc.hyperplane == STANDARD_HYPERPLANE and not doc.hyperplane_given
    assert doc.primes == (7, 11) and doc.seed == 0 and doc.checks is None
    assert str(doc.cubic.a(0, 1)) == "-2*y + z"


def test_optional_sections():
    text = CUBIC + '\n[hyperplane]\nl1 = "t1 - 1/2*t2"\nl0 = "x"\n\n[lines]\nL1 = "y"\n\n[options]\nprimes = 13, 17\nseed = 4\nchecks = ii, iv.mult_le_2\n'
    doc = parse_input(text)
    assert str(doc.hyperplane) == "t0 = t1 - 1/2*t2 + (x)"
    assert [str(c) for c in doc.lines] == ["y"]
    assert doc.primes == (13, 17) and doc.seed == 4
    assert doc.checks == ("ii", "iv.mult_le_2")
    opts = doc.options(seed=9, primes=[19])
    assert opts.seed == 9 and opts.primes == (19,)


def test_gram_diagonal_is_twice_the_square_coefficient():
    gram = builtin("ex-5.2.3").cubic
    halved = CUBIC.replace('a11 = "x"', 'a11 = "1/2*x"').replace('a22 = "y"', 'a22 = "1/2*y"')
    halved = halved.replace('c = "x^3 + y^3 + z^3"', 'c = "1/2*x^3 + 1/2*y^3 + 1/2*z^3"')
    assert parse_input(halved).cubic == gram
    assert parse_input(CUBIC).cubic.gram_matrix[1, 1] == 2 * gram.gram_matrix[1, 1]


@pytest.mark.parametrize(
    "edit, line, fragment",
    [
        (lambda t: t.replace('a11 = "x"', 'a11 = "x +"'), 5, "a11"),
        (lambda t: t.replace('a11 = "x"', 'a11 = "x^2"'), 5, "homogeneous of degree 1"),
        (lambda t: t.replace('b1 = "0"\n', ""), 1, "missing coefficients b1"),
        (lambda t: t + 'a33 = "x"\n', 12, "unknown coefficient"),
        (lambda t: t + "[bogus]\n", 12, "unknown section"),
        (lambda t: t + "[options]\nseed = many\n", 13, "seed must be an integer"),
        (lambda t: t + "[options]\nchecks = v\n", 13, "unknown checks v"),
        (lambda t: t + "[lines]\nL = \"x^2\"\n", 13, "not a linear form"),
        (lambda t: t + "this is not ini\n", 12, "malformed"),
        (lambda t: t.replace('a00 = "0"', 'a00 = "0"\na00 = "x"'), 3, "a00"),
    ],
)
def test_errors_carry_line_numbers(edit, line, fragment):
    with pytest.raises(InputError) as info:
        parse_input(edit(CUBIC), "doc.ini")
    assert info.value.line == line
    assert str(info.value).startswith(f"doc.ini:{line}: ")
    assert fragment in str(info.value)


def test_needs_exactly_one_cubic_section():
    with pytest.raises(InputError, match="exactly one"):
        parse_input("[options]\nseed = 1\n")
    with pytest.raises(InputError, match="exactly one"):
        parse_input(CUBIC + "\n" + BUILTIN_TEXT["ex-5.2.3"].split("[gram]", 1)[1].join(["[gram]", ""]))


def test_gram_needs_even_diagonal_degrees():
    text = BUILTIN_TEXT["ex-5.2.3"].replace('m11 = "x"', 'm11 = "x^2"')
    with pytest.raises(InputError):
        parse_input(text)


def test_read_input(tmp_path):
    path = tmp_path / "x.ini"
    path.write_text(CUBIC)
    assert read_input(str(path)).source == str(path)
    with pytest.raises(InputError, match="missing.ini"):
        read_input(str(tmp_path / "missing.ini"))


@pytest.mark.parametrize("name", sorted(BUILTIN_TEXT))
def test_builtins_parse(name):
    doc = builtin(name)
    assert doc.source == name
    assert doc.checks
