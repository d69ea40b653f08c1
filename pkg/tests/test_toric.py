"""Hirzebruch surfaces: intersection theory, Cech cohomology, hypersurface."""

import pytest

from lgorbit.errors import DiagnosticError, PreconditionError, StructureError
from lgorbit.toric import (
    F2_BLOCKS,
    HirzebruchFan,
    PicClass,
    ToricDivisor,
    canonical_class,
    cohomology_dims,
    divisor_to_pic,
    ext_dims,
    euler_rr,
    f2_chart_count,
    f2_equation,
    intersection,
    is_irreducible_bilinear,
    pic_to_divisor,
    verify_divisor_convention,
    verify_f2_hypersurface,
)
from lgorbit.poly import parse_poly

F0 = HirzebruchFan(0)
F1 = HirzebruchFan(1)
F2 = HirzebruchFan(2)

O = PicClass(0, 0)
E = PicClass(1, 0)
F = PicClass(0, 1)


def test_fan_rejects_bad_parameter():
    with pytest.raises(StructureError):
        HirzebruchFan(-1)
    with pytest.raises(StructureError):
        HirzebruchFan("2")


def test_fan_smoothness():
    for fan in (F0, F1, F2):
        for i, j in fan.cones:
            u, v = fan.rays[i], fan.rays[j]
            assert u[0] * v[1] - u[1] * v[0] == 1


def test_self_intersections_from_wall_relations():
    # the fiber rays square to zero; the section pair squares to -a and +a
    for fan in (F0, F1, F2):
        squares = sorted(fan.ray_self_intersection(i) for i in range(4))
        assert squares == sorted([0, 0, -fan.a, fan.a])


def test_divisor_convention():
    for a in range(4):
        assert verify_divisor_convention(HirzebruchFan(a))


def test_pic_divisor_roundtrip():
    for c in (O, E, F, PicClass(3, -2), PicClass(-1, 5)):
        assert divisor_to_pic(F2, pic_to_divisor(F2, c)) == c


def test_divisor_needs_four_integers():
    with pytest.raises(StructureError):
        ToricDivisor((1, 2, 3))


def test_intersection_numbers():
    for a in range(4):
        assert intersection(E, E, a) == -a
        assert intersection(E, F, a) == 1
        assert intersection(F, F, a) == 0
        k = canonical_class(a)
        assert intersection(k, k, a) == 8


def test_euler_rr_structure_sheaf():
    for a in range(4):
        assert euler_rr(O, a) == 1


def test_structure_sheaf_cohomology():
    assert cohomology_dims(F2, pic_to_divisor(F2, O)).triple == (1, 0, 0)


def test_negative_section_cohomology_on_f2():
    assert cohomology_dims(F2, pic_to_divisor(F2, E)).triple == (1, 1, 0)
    assert cohomology_dims(F2, pic_to_divisor(F2, -E)).triple == (0, 0, 0)


def test_fiber_class_sections():
    for q in range(4):
        got = cohomology_dims(F2, pic_to_divisor(F2, PicClass(0, q)))
        assert got.triple == (q + 1, 0, 0)


def test_f0_kunneth_oracle():
    # on the product of two lines h^0(p,q) factors as (p+1)(q+1)
    for p in range(3):
        for q in range(3):
            got = cohomology_dims(F0, pic_to_divisor(F0, PicClass(p, q)))
            assert got.h0 == (p + 1) * (q + 1)
            assert got.h1 == 0


def test_ext_table_frozen_values():
    n = PicClass(-1, 0)
    assert ext_dims(F2, O, O).triple == (1, 0, 0)
    assert ext_dims(F2, n, n).triple == (1, 0, 0)
    assert ext_dims(F2, n, O).triple == (1, 1, 0)
    assert ext_dims(F2, O, n).triple == (0, 0, 0)


def test_riemann_roch_sweep():
    for fan in (F0, F1, F2):
        for p in range(-4, 5):
            for q in range(-4, 5):
                c = PicClass(p, q)
                got = cohomology_dims(fan, pic_to_divisor(fan, c))
                assert got.euler == euler_rr(c, fan.a)


def test_serre_duality_sweep():
    for fan in (F1, F2):
        k = canonical_class(fan.a)
        for p in range(-2, 3):
            for q in range(-2, 3):
                c = PicClass(p, q)
                d = cohomology_dims(fan, pic_to_divisor(fan, c))
                s = cohomology_dims(fan, pic_to_divisor(fan, k - c))
                assert d.triple == (s.h2, s.h1, s.h0)


def test_box_margin_stability():
    c = PicClass(2, -3)
    a = cohomology_dims(F2, pic_to_divisor(F2, c), box_margin=1)
    b = cohomology_dims(F2, pic_to_divisor(F2, c), box_margin=3)
    assert a.triple == b.triple


def test_box_guard_fires_on_undersized_base():
    # the unscaled heuristic box would use half-width 6 for 5*D4 on a = 2
    d = pic_to_divisor(F2, PicClass(5, 0))
    with pytest.raises(DiagnosticError, match="character box too small"):
        cohomology_dims(F2, d, base_half_width=6)
    assert cohomology_dims(F2, d).triple == cohomology_dims(F2, d, base_half_width=25).triple


def test_box_margin_must_be_nonnegative():
    with pytest.raises(PreconditionError):
        cohomology_dims(F2, pic_to_divisor(F2, O), box_margin=-1)


def test_hypersurface_certificates():
    assert f2_chart_count() == 6
    assert verify_f2_hypersurface()
    assert verify_f2_hypersurface(f2_equation())


def test_hypersurface_controls():
    monomial = parse_poly(F2_BLOCKS, "(1)*x0*y0^2")
    assert not verify_f2_hypersurface(monomial)
    wrong_bidegree = parse_poly(F2_BLOCKS, "(1)*x0*y0 + (-1)*x1*y1")
    assert not verify_f2_hypersurface(wrong_bidegree)
    shared_root = parse_poly(F2_BLOCKS, "(1)*x0*y0^2 + (1)*x1*y0*y1")
    assert not verify_f2_hypersurface(shared_root)


def test_irreducibility_needs_linear_first_block():
    quadratic = parse_poly(F2_BLOCKS, "(1)*x0^2*y0^2")
    with pytest.raises(PreconditionError):
        is_irreducible_bilinear(quadratic)
