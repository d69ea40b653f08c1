"""Multihomogeneous polynomial layer, with sympy as an independent oracle."""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from lgorbit.errors import StructureError
from lgorbit.gaussian import GaussianRational
from lgorbit.poly import MultiHomPoly, jacobian, parse_poly

BLOCKS = (("x", "y"), ("z", "w"))


def v(name):
    return MultiHomPoly.variable(BLOCKS, name)


def const(c):
    return MultiHomPoly.constant(BLOCKS, c)


small_coeff = st.integers(min_value=-4, max_value=4)


@st.composite
def polys(draw):
    names = [n for block in BLOCKS for n in block]
    terms = draw(st.lists(
        st.tuples(st.lists(st.sampled_from(names), max_size=3), small_coeff),
        max_size=4,
    ))
    p = const(0)
    for factors, c in terms:
        t = const(c)
        for name in factors:
            t = t * v(name)
        p = p + t
    return p


@given(polys(), polys(), polys())
@settings(max_examples=60, deadline=None)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + const(0) == p
    assert p * const(1) == p
    assert p - p == const(0)


@given(polys(), polys())
@settings(max_examples=40, deadline=None)
def test_evaluation_is_ring_map(p, q):
    point = {"x": GaussianRational(2), "y": GaussianRational(-1, 1),
             "z": GaussianRational(Fraction(1, 2)), "w": GaussianRational(3)}
    assert (p + q).evaluate(point) == p.evaluate(point) + q.evaluate(point)
    assert (p * q).evaluate(point) == p.evaluate(point) * q.evaluate(point)


@given(polys(), polys())
@settings(max_examples=40, deadline=None)
def test_partial_leibniz(p, q):
    for name in ("x", "z"):
        lhs = (p * q).partial(name)
        rhs = p.partial(name) * q + p * q.partial(name)
        assert lhs == rhs


def _to_sympy(p):
    syms = {n: sympy.Symbol(n) for block in BLOCKS for n in block}
    total = sympy.Integer(0)
    for exps, c in p.terms.items():
        term = sympy.Rational(c.re) + sympy.I * sympy.Rational(c.im)
        for name, e in zip(("x", "y", "z", "w"), exps):
            term *= syms[name] ** e
        total += term
    return sympy.expand(total)


@given(polys(), polys())
@settings(max_examples=40, deadline=None)
def test_product_matches_sympy(p, q):
    assert _to_sympy(p * q) == sympy.expand(_to_sympy(p) * _to_sympy(q))


@given(polys())
@settings(max_examples=40, deadline=None)
def test_partial_matches_sympy(p):
    assert _to_sympy(p.partial("y")) == sympy.diff(_to_sympy(p), sympy.Symbol("y"))


def test_multidegree_homogeneous():
    p = v("x") * v("z") + v("y") * v("w")
    assert p.multidegree == (1, 1)


def test_multidegree_inhomogeneous_block_is_none():
    p = v("x") * v("x") + v("y")
    # first block mixes degrees 2 and 1
    assert p.multidegree[0] is None


def test_substitute_and_partial_commute_on_disjoint_names():
    p = (v("x") + v("z")) * (v("y") + v("w"))
    sub = {"z": const(0)}
    assert p.substitute(sub).partial("x") == p.partial("x").substitute(sub)


def test_substitute_scalar_coercion():
    p = v("x") * v("z")
    q = p.substitute({"x": 2})
    assert q == v("z") * 2
    assert p.substitute({"x": Fraction(1, 2), "z": GaussianRational(4)}) == const(2)


def test_evaluate_needs_every_variable():
    p = v("x") + v("w")
    with pytest.raises(StructureError):
        p.evaluate({"x": GaussianRational(1)})


def test_homogenize():
    p = v("x") * v("x") + const(1)
    h = p.homogenize("y")
    assert h.multidegree == (2, 0)
    assert h.substitute({"y": 1}) == p


def test_homogenize_rejects_occurring_variable():
    p = v("x") * v("x") + v("y")
    with pytest.raises(StructureError, match="already occurs"):
        p.homogenize("y")


def test_scalar_multiple_of():
    p = v("x") * v("z") - v("y") * v("w")
    assert (p * 3).scalar_multiple_of(p) == GaussianRational(3)
    assert (p * Fraction(-1, 2)).scalar_multiple_of(p) == GaussianRational(Fraction(-1, 2))
    assert p.scalar_multiple_of(p + v("x") * v("w")) is None
    # zero is a multiple of nothing but itself; the scale stays meaningful
    assert const(0).scalar_multiple_of(p) is None
    assert const(0).scalar_multiple_of(const(0)) == GaussianRational(1)


def test_scalar_ops_accept_fraction():
    p = v("x") + v("y")
    assert p * Fraction(1, 2) + p * Fraction(1, 2) == p
    assert p + Fraction(0) == p


def test_parse_roundtrip():
    p = v("x") * v("x") * 2 - v("y") * v("w") + const(Fraction(1, 3))
    assert parse_poly(BLOCKS, str(p)) == p


def test_parse_rejects_unknown_variable():
    with pytest.raises(StructureError):
        parse_poly(BLOCKS, "(1)*q^2")


def test_jacobian():
    p = v("x") * v("z")
    q = v("y") * v("w")
    rows = jacobian([p, q], ["x", "y"])
    assert rows[0][0] == v("z")
    assert rows[0][1] == const(0)
    assert rows[1][1] == v("w")
