import random

import pytest

from solvdeg.algebra import DRL, LEX, Ideal, PolyRing
from solvdeg.errors import PreconditionError
from solvdeg.groebner import (
    buchberger,
    contains,
    is_groebner,
    is_reduced,
    max_gb_degree,
    same_ideal,
)
from solvdeg.homogenize import dehomogenize, homogenize_poly, tilde_ideal
from solvdeg.macaulay import solving_degree
from solvdeg.systems import abc_fixture, fixture_chain, fixture_f5, random_system

from oracles import package_gb_terms, sympy_gb_terms

ABC_LEX = [
    "x4^3", "x3*x4^2", "x3^2 + x3*x4", "x2*x4 + x3*x4", "x2*x3 + x4^2", "x2^2 + x4^2",
    "x1*x4 + x3*x4 + x4^2", "x1*x3 + x3*x4 + x4^2", "x1*x2 + x4^2", "x1^2",
]


def test_f5_generators_already_basis():
    I = fixture_f5()
    assert is_groebner(list(I), LEX)
    G = buchberger(I, LEX)
    assert sorted(str(g) for g in G) == ["-x1^2 + x2", "-x1^6 + x3"]
    assert same_ideal(list(G), list(I), LEX)


def test_abc_lex_basis():
    G = buchberger(abc_fixture(), LEX)
    assert sorted(str(g) for g in G) == sorted(ABC_LEX)
    assert is_reduced(list(G), LEX)


def test_principal_and_variables():
    R = PolyRing(5, "x y z")
    x, y, z = R.gens
    assert list(buchberger(Ideal([x]), DRL)) == [x]
    assert max_gb_degree(Ideal([x, y, z]), DRL) == 1


def test_is_groebner_examples():
    R = PolyRing(7, "x y")
    x, y = R.gens
    assert not is_groebner([x ** 2 - 1, x * y + x], LEX)
    assert is_groebner([x ** 3 + y], LEX)


def test_max_gb_chain_example():
    I = fixture_chain()
    assert max_gb_degree(I, DRL) == 2
    assert max_gb_degree(tilde_ideal(I), DRL) == 3


def test_max_gb_zero_ideal():
    with pytest.raises(PreconditionError):
        max_gb_degree([], DRL)


def test_unit_ideal():
    R = PolyRing(7, "x y")
    x, y = R.gens
    G = buchberger(Ideal([x, x + 1]), DRL)
    assert G.is_unit()


@pytest.mark.parametrize("seed", range(25))
def test_matches_sympy(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 3)
    I = random_system(n, [rng.randint(1, 3) for _ in range(rng.randint(1, n + 1))], 31, seed)
    for order in ("drl", "lex"):
        G = buchberger(I, DRL if order == "drl" else LEX)
        assert package_gb_terms(G) == sympy_gb_terms(I, order)
        assert is_reduced(list(G), G.order)


@pytest.mark.parametrize("seed", range(15))
def test_transport_between_companions(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 3)
    I = random_system(n, [rng.randint(1, 3) for _ in range(n)], 101, 1000 + seed)
    G = list(buchberger(I, DRL))
    H = [homogenize_poly(g) for g in G]
    assert is_groebner(H, DRL)
    # dehomogenizing a DRL basis of I~ gives a DRL basis of I
    GT = list(buchberger(tilde_ideal(I), DRL))
    back = [dehomogenize(g) for g in GT]
    assert is_groebner([f for f in back if f], DRL)
    assert same_ideal(back, list(I), DRL)
    assert max_gb_degree(I, DRL) <= solving_degree(I, DRL)


@pytest.mark.parametrize("seed", range(10))
def test_homogeneous_maxgb_is_solvdeg(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 3)
    I = random_system(n, [rng.randint(1, 3) for _ in range(n)], 101, seed, homogeneous=True)
    for order in (DRL, LEX):
        assert max_gb_degree(I, order) == solving_degree(I, order)


def test_contains():
    I = fixture_chain()
    G = buchberger(I, DRL)
    x, y = I.ring.gens
    assert contains(G, y + 1, DRL)
    assert not contains(G, y, DRL)
