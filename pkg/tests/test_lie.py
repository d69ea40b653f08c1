"""Critical sets, Morse counts, and exact orbit membership."""

import itertools
import random
from fractions import Fraction

import pytest

from lgorbit.errors import PreconditionError, StructureError
from lgorbit.gaussian import ExactMatrix, GaussianRational
from lgorbit.lie import (
    CartanDiagonal,
    conjugate_exact,
    critical_count,
    critical_points,
    gradient_norm,
    height_of_diagonal,
    hessian_determinant,
    hessian_nondegenerate,
    orbit_contains_exact,
    random_sl_integer,
    sl2_orbit_coordinates,
)

H0_SL2 = CartanDiagonal((1, -1))
H_SL2 = CartanDiagonal((1, -1))


def test_cartan_regularity():
    assert H_SL2.regular
    assert CartanDiagonal((1, 1, -2)).regular is False
    assert CartanDiagonal((3, 1, -4)).regular


def test_cartan_must_be_traceless():
    with pytest.raises(StructureError):
        CartanDiagonal((1, 1))


def test_sl2_critical_set():
    pts = critical_points(H0_SL2, H_SL2)
    assert pts == {(Fraction(1), Fraction(-1)), (Fraction(-1), Fraction(1))}
    coords = {
        tuple(sl2_orbit_coordinates(CartanDiagonal(d).as_exact_matrix()))
        for d in pts
    }
    one, zero = GaussianRational(1), GaussianRational(0)
    assert coords == {(one, zero, zero), (-one, zero, zero)}


def test_sl2_critical_heights():
    heights = {height_of_diagonal(H_SL2, d) for d in critical_points(H0_SL2, H_SL2)}
    assert heights == {Fraction(2), Fraction(-2)}


def test_critical_points_need_regular_height():
    with pytest.raises(PreconditionError):
        critical_points(CartanDiagonal((1, 1, -2)), CartanDiagonal((1, 1, -2)))


def enumerate_critical(h0, h):
    return len(critical_points(h0, h))


def test_counts_match_enumeration():
    h3_reg = CartanDiagonal((2, 1, -3))
    h3_deg = CartanDiagonal((1, 1, -2))
    h4_deg = CartanDiagonal((1, 1, -1, -1))
    h_reg3 = CartanDiagonal((3, -1, -2))
    h_reg4 = CartanDiagonal((5, 1, -2, -4))
    assert critical_count(h3_reg, h_reg3) == 6 == enumerate_critical(h3_reg, h_reg3)
    assert critical_count(h3_deg, h_reg3) == 3 == enumerate_critical(h3_deg, h_reg3)
    assert critical_count(h4_deg, h_reg4) == 6 == enumerate_critical(h4_deg, h_reg4)


def test_count_formula_is_orbit_size():
    # n! over the product of multiplicities counts distinct permutations
    h = CartanDiagonal((1, 1, -2))
    h_reg = CartanDiagonal((3, -1, -2))
    perms = {tuple(p) for p in itertools.permutations((1, 1, -2))}
    assert critical_count(h, h_reg) == len(perms) == 3


def test_hessian_nondegenerate_sl2():
    for point in critical_points(H0_SL2, H_SL2):
        det = hessian_determinant(H0_SL2, H_SL2, point, step=1e-4)
        assert abs(det) >= 0.5
        assert hessian_nondegenerate(H0_SL2, H_SL2, point, step=1e-4)


def test_hessian_nondegenerate_sl3():
    h0 = CartanDiagonal((2, 1, -3))
    h = CartanDiagonal((3, -1, -2))
    for point in critical_points(h0, h):
        assert hessian_nondegenerate(h0, h, point, step=1e-4)


def test_gradient_vanishes_at_critical_points():
    for point in critical_points(H0_SL2, H_SL2):
        assert gradient_norm(H0_SL2, H_SL2, point) < 1e-6


def test_gradient_norm_rejects_sl2_chart_gap():
    with pytest.raises(PreconditionError):
        gradient_norm(H0_SL2, H_SL2, (Fraction(0), Fraction(1), Fraction(0)))


def test_orbit_membership_exact_positive():
    rng = random.Random(7)
    h0 = ExactMatrix.diagonal([1, -1])
    for _ in range(20):
        g = random_sl_integer(2, rng)
        assert orbit_contains_exact(H0_SL2, conjugate_exact(g, h0))


def test_orbit_membership_exact_negative():
    assert not orbit_contains_exact(H0_SL2, ExactMatrix.diagonal([2, -2]))
    # nilpotent: right trace, wrong characteristic polynomial
    nil = ExactMatrix([[0, 1], [0, 0]])
    assert not orbit_contains_exact(H0_SL2, nil)


def test_sl2_orbit_coordinates_roundtrip():
    rng = random.Random(3)
    h0 = ExactMatrix.diagonal([1, -1])
    for _ in range(10):
        a = conjugate_exact(random_sl_integer(2, rng), h0)
        x, y, z = sl2_orbit_coordinates(a)
        assert x * x + y * z == GaussianRational(1)


def test_random_sl_integer_has_det_one():
    rng = random.Random(0)
    for n in (2, 3, 4):
        g = random_sl_integer(n, rng)
        assert g.det() == GaussianRational(1)
