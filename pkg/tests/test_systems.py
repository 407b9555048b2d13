import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from solvdeg.algebra import Ideal, Polynomial, PolyRing
from solvdeg.errors import (
    EmptySystemError,
    NonPrimeModulusError,
    ParseError,
    UnknownVariableError,
)
from solvdeg.systems import (
    abc_bound,
    abc_fixture,
    add_field_equations,
    cubic_bound,
    fixture_chain,
    fixture_f5,
    format_system,
    macaulay_bound,
    parse_points,
    parse_polynomial,
    parse_system,
    random_system,
)

F5_TEXT = "field 5\nvars x1 x2 x3\nx1^2 - x2\nx2^3 - x3\n"


def test_parse_f5_example():
    I = parse_system(F5_TEXT)
    x1, x2, x3 = I.ring.gens
    assert list(I) == [x1 ** 2 - x2, x2 ** 3 - x3]


def test_parse_syntax_variants():
    R = PolyRing(7, "x y")
    x, y = R.gens
    assert parse_polynomial("3x^2y + 2*(x - y)**2", R) == 3 * x ** 2 * y + 2 * (x - y) ** 2
    assert parse_polynomial("-x - -y", R) == y - x
    I = parse_system("# header\nfield 7\n\nvars x, y\nx*y + 1  # comment\n")
    assert list(I) == [x * y + 1]


@pytest.mark.parametrize("text,error,line", [
    ("field 4\nvars x\nx\n", NonPrimeModulusError, 1),
    ("field 5\nvars x1\nx1 + y\n", UnknownVariableError, 3),
    ("field 5\nvars x\n", EmptySystemError, None),
    ("field 5\nvars x\nx + \n", ParseError, 3),
    ("field 5\nvars x\nx $ 1\n", ParseError, 3),
    ("x\nfield 5\nvars x\n", ParseError, 1),
    ("field 5\nvars x\nx - x\n", ParseError, 3),
    ("field 5\nvars x x\nx\n", ParseError, 2),
])
def test_parse_errors(text, error, line):
    with pytest.raises(error) as info:
        parse_system(text)
    assert info.value.line == line
    if line:
        assert str(info.value).startswith(f"line {line}: ")


def test_distinct_diagnostics():
    kinds = set()
    for text in ("field 4\nvars x\nx\n", "field 5\nvars x1\nx1 + y\n", "field 5\nvars x\n"):
        try:
            parse_system(text)
        except ParseError as exc:
            kinds.add(type(exc))
    assert len(kinds) == 3


@pytest.mark.parametrize("I", [fixture_f5(), fixture_chain(), abc_fixture(),
                               random_system(3, [1, 2, 3], 101, 4)],
                         ids=["f5", "chain", "abc", "random"])
def test_round_trip(I):
    text = format_system(I)
    J = parse_system(text)
    assert list(J) == list(I)
    assert format_system(J) == text


terms = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(1, 10),
                        min_size=1, max_size=5)


@settings(max_examples=60, deadline=None)
@given(t=terms)
def test_round_trip_property(t):
    R = PolyRing(11, "a b")
    f = Polynomial(R, t)
    if f.is_zero():
        return
    text = format_system(Ideal([f]))
    assert list(parse_system(text)) == [f]


def test_field_equations():
    J = add_field_equations(fixture_f5())
    assert len(J) == 5
    assert len(add_field_equations(J)) == 5
    x = PolyRing(2, "x").gens[0]
    assert list(add_field_equations(Ideal([x + 1]))) == [x + 1, x ** 2 - x]


def test_abc_fixture_shape():
    I = abc_fixture()
    assert len(I) == 8 and all(d == 2 for d in I.degrees())
    assert I.ring.p == 2 and I.ring.n == 4


def test_bounds():
    assert macaulay_bound([2, 2]) == 3
    assert [abc_bound(n) for n in (4, 20)] == [6, 22]
    assert [cubic_bound(n) for n in (4, 20)] == [11, 43]


def test_points_file():
    ring, pts = parse_points("field 5\nvars a b\n1 2\n3, -1\n")
    assert ring.names == ("a", "b")
    assert pts == [(1, 2), (3, 4)]
    with pytest.raises(ParseError):
        parse_points("field 5\nvars a b\n1\n")


def test_random_system_reproducible():
    assert list(random_system(2, [2, 3], 31, 9)) == list(random_system(2, [2, 3], 31, 9))
    assert random_system(2, [2, 3], 31, 9).degrees() == [2, 3]
