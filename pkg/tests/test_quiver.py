"""Path algebras, DG Hom complexes, and the tilting rank chases."""

import pytest

from lgorbit.errors import DiagnosticError, PreconditionError, StructureError
from lgorbit.quiver import (
    INJECTIVE_CONNECTING_ASSUMPTION,
    Arrow,
    QuiverPresentation,
    composition_pattern_check,
    dg_quiver,
    end_algebra_dims_tilting,
    grothendieck_rank,
    hom_complex,
    les_chase,
    ordinary_quiver,
    path_basis,
    semiorthogonal_rank_sum,
)


def test_quiver_validation():
    with pytest.raises(StructureError):
        QuiverPresentation(("v", "v"), ())
    with pytest.raises(StructureError):
        QuiverPresentation(("v",), (Arrow("a", "v", "w"),))
    with pytest.raises(StructureError):
        QuiverPresentation(
            ("v",), (Arrow("a", "v", "v"), Arrow("a", "v", "v"))
        )


def test_differential_must_square_to_zero():
    arrows = (
        Arrow("a", "v", "v", 0),
        Arrow("b", "v", "v", 1),
        Arrow("c", "v", "v", 2),
    )
    with pytest.raises(StructureError, match="square to zero"):
        QuiverPresentation(
            ("v",),
            arrows,
            differential={"a": ((1, ("b",)),), "b": ((1, ("c",)),)},
        )


def test_differential_degree_check():
    arrows = (Arrow("a", "v", "v", 0), Arrow("b", "v", "v", 2))
    with pytest.raises(StructureError, match="raise degree by one"):
        QuiverPresentation(("v",), arrows, differential={"a": ((1, ("b",)),)})


def test_ordinary_path_basis():
    q = ordinary_quiver()
    basis = path_basis(q)
    assert basis.dimension == 5
    dims = {
        (s, t): len(basis.by_endpoints(s, t))
        for s in q.vertices
        for t in q.vertices
    }
    assert dims == {
        ("v0", "v0"): 1,
        ("v0", "v1"): 1,
        ("v1", "v0"): 1,
        ("v1", "v1"): 2,
    }


def test_relation_kills_one_composite_but_not_the_other():
    q = ordinary_quiver()
    words = {p.arrows for p in path_basis(q).paths}
    assert ("beta", "alpha") in words
    assert ("alpha", "beta") not in words
    # the surviving composite squares to zero as a consequence
    assert ("beta", "alpha", "beta", "alpha") not in words


def test_composition_pattern():
    assert composition_pattern_check()


def test_unbounded_basis_raises():
    loop = QuiverPresentation(("v",), (Arrow("a", "v", "v"),))
    with pytest.raises(DiagnosticError, match="still growing"):
        path_basis(loop, length_bound=4)


def test_hom_complex_ordinary():
    q = ordinary_quiver()
    assert hom_complex(q, "v1", "v0").cohomology == {0: 1}
    assert hom_complex(q, "v1", "v1").cohomology == {0: 2}


def test_hom_complex_dg_zero():
    q = dg_quiver("zero")
    assert hom_complex(q, "v0", "v1").cohomology == {0: 1, 1: 1}


def test_hom_complex_dg_literal():
    q = dg_quiver("literal")
    assert hom_complex(q, "v0", "v1").cohomology == {}


def test_dg_quiver_variant_names():
    with pytest.raises(PreconditionError):
        dg_quiver("other")


def test_les_chase_forced_zero_connectings():
    r = les_chase((1, 0, 0, 0, 0, 0))
    assert r.middle == (1, 0, 0)
    assert not r.used_injective_connecting


def test_les_chase_requires_pin_when_free():
    with pytest.raises(DiagnosticError, match="undetermined"):
        les_chase((1, 1, 1, 0, 0, 0))


def test_les_chase_injective_pin():
    r = les_chase((1, 1, 1, 0, 0, 0), "injective")
    assert r.used_injective_connecting
    # the pinned connecting rank eats the whole of A2
    assert r.ranks[2] == 1
    assert r.middle == (1, 0, 0)


def test_les_chase_detects_inconsistency():
    with pytest.raises(DiagnosticError, match="inconsistent"):
        les_chase((1, 2, 1, 0, 0, 0), "injective")


def test_les_chase_zero_endpoint_is_not_inconsistent():
    # a2 > a3 = 0 forces the connecting rank to zero, no pin needed
    r = les_chase((5, 1, 1, 0, 0, 0), "injective")
    assert r.middle == (5, 0, 0) or r.middle[0] == 5


def test_les_chase_input_validation():
    with pytest.raises(PreconditionError):
        les_chase((-1, 0, 0, 0, 0, 0))
    with pytest.raises(PreconditionError):
        les_chase((1, 0, 0, 0, 0, 0), "surjective")


def test_tilting_report():
    report = end_algebra_dims_tilting()
    assert report.hom_dims == (1, 1, 1, 2)
    assert report.total == 5
    assert report.higher_ext_vanish
    assert report.assumptions == (INJECTIVE_CONNECTING_ASSUMPTION,)


def test_tilting_total_matches_quiver_dimension():
    assert end_algebra_dims_tilting().total == path_basis(ordinary_quiver()).dimension


def test_k_theory_ranks():
    assert grothendieck_rank(3) == 3
    assert semiorthogonal_rank_sum((1, 1, 3)) == 5
    with pytest.raises(PreconditionError):
        grothendieck_rank(-1)
    with pytest.raises(PreconditionError):
        semiorthogonal_rank_sum((1, -2))
