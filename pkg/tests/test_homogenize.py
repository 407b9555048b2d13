import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from solvdeg.algebra import DRL, Ideal, Polynomial, PolyRing, normal_form
from solvdeg.errors import ZeroPolynomialError
from solvdeg.groebner import buchberger, is_groebner
from solvdeg.homogenize import (
    HomogenizationContext,
    dehomogenize,
    homogenize_poly,
    homogenized_ideal,
    tilde_ideal,
    top_ideal,
    top_part,
)
from solvdeg.systems import fixture_chain


@pytest.fixture
def R():
    return PolyRing(7, "x y")


def test_homogenize_examples(R):
    x, y = R.gens
    assert str(homogenize_poly(x ** 2 - 1)) == "x^2 - t^2"
    assert str(homogenize_poly(x * y + x)) == "x*y + x*t"
    f = x * y + y ** 2
    assert dehomogenize(homogenize_poly(f)) == f
    with pytest.raises(ZeroPolynomialError):
        homogenize_poly(R.zero())


def test_homogeneous_input_only_gains_t(R):
    x, y = R.gens
    F = homogenize_poly(x * y + y ** 2)
    assert {m[:-1] for m in F.terms} == {(1, 1), (0, 2)} and all(m[-1] == 0 for m in F.terms)


def test_dehomogenize_examples():
    S = PolyRing(7, "x y t")
    x, y, t = S.gens
    assert dehomogenize(x ** 2 - t ** 2) == PolyRing(7, "x y")("x^2 - 1")
    assert str(dehomogenize(t * x - x + t * y)) == "y"
    assert dehomogenize(t ** 4) == 1


def test_top_parts(R):
    x, y = R.gens
    assert top_part(x ** 2 - 1) == x ** 2
    assert top_part(x * y + x) == x * y
    I = Ideal([x ** 2, x * y], R)
    assert top_ideal(I) == I


def test_tilde_examples():
    assert str(tilde_ideal(fixture_chain())) == "Ideal([x^2 - t^2, x*y + x*t])"
    R = PolyRing(5, "x1 x2 x3")
    x1, x2, x3 = R.gens
    T = tilde_ideal(Ideal([x1 ** 2 - x2, x2 ** 3 - x3]))
    assert [str(g) for g in T] == ["x1^2 - x2*t", "x2^3 - x3*t^2"]
    assert T.degrees() == [2, 3]


def test_homogenized_ideal_example():
    H = homogenized_ideal(fixture_chain())
    assert sorted(str(g) for g in H) == ["x^2 - t^2", "y + t"]
    assert is_groebner(list(H), DRL)


def test_homogenized_principal(R):
    x, y = R.gens
    f = x ** 2 * y + 3 * x + 1
    H = homogenized_ideal(Ideal([f]))
    assert list(H) == [homogenize_poly(f.monic(DRL))]


def test_context_rejects_clash():
    with pytest.raises(ValueError):
        HomogenizationContext.for_ring(PolyRing(5, "x t"))


terms = st.lists(st.tuples(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(1, 6)),
                 min_size=1, max_size=4)


@settings(max_examples=40, deadline=None)
@given(a=terms, b=terms)
def test_phi_of_companions_generate_I(a, b):
    R = PolyRing(7, "x y")
    gens = [g for g in (Polynomial(R, dict(a)), Polynomial(R, dict(b))) if g]
    if not gens:
        return
    I = Ideal(gens)
    G = list(buchberger(I, DRL))
    T, H = tilde_ideal(I), homogenized_ideal(I)
    for J in (T, H):
        back = [dehomogenize(F) for F in J]
        assert all(normal_form(f, G, DRL).is_zero() for f in back)
        GB = list(buchberger(Ideal([f for f in back if f], R), DRL))
        assert all(normal_form(f, GB, DRL).is_zero() for f in I)
    # I~ is contained in I^h, and the homogenized DRL basis is a basis of I^h
    GH = list(H)
    assert is_groebner(GH, DRL)
    assert all(normal_form(F, GH, DRL).is_zero() for F in T)
