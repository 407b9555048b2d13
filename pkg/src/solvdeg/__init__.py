"""Groebner bases by Macaulay-matrix elimination, the solving degree, and the
algebraic invariants that bound it, over prime fields."""

from .algebra import (
    DRL,
    DRL_T_LAST,
    LEX,
    Ideal,
    Polynomial,
    PolyRing,
    PrimeField,
    TermOrder,
    bar_sigma,
    compare_terms,
    leading_term,
    normal_form,
)
from .chain import verify_chain
from .errors import (
    DegreeCapError,
    DregUndefinedError,
    NormalPositionError,
    NotUniqueSolutionError,
    ParseError,
    PreconditionError,
    SolvdegError,
)
from .firstfall import first_fall, first_fall_degree, syzygy_dim, trivial_syzygy_dim
from .groebner import GroebnerBasis, buchberger, is_groebner, max_gb_degree
from .homogenize import dehomogenize, homogenize_poly, homogenized_ideal, tilde_ideal, top_ideal
from .invariants import (
    betti_table,
    cm_regularity,
    dreg_faugere,
    hilbert_series,
    index_of_regularity,
    is_zero_dimensional,
    monomial_krull_dim,
    reg_via_initial,
)
from .macaulay import build_macaulay, solving_degree, xl_groebner
from .minrank import gen_instance, linear_pencil, minors, minrank_experiment
from .solver import lex_solve, shape_interpolate, specialize_gb, unique_solve, univariate_roots
from .systems import abc_fixture, add_field_equations, format_system, parse_system

__version__ = "0.1.0"
