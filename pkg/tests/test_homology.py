import pytest
from hypothesis import given, strategies as st

from dirloop.corpus import (
    circle_complex,
    interval_complex,
    point_complex,
    torus_complex,
    two_component_complex,
    wedge_of_circles,
)
from dirloop.cubical import CubicalSet, FaceRef, suspension_model, validate
from dirloop.homology import FieldSpec, GradedDims, RATIONALS, betti, chain_complex, rank


def test_field_spec_parse():
    assert FieldSpec.parse("q") == FieldSpec(0)
    assert FieldSpec.parse("Q") == FieldSpec(0)
    assert FieldSpec.parse("zp:7") == FieldSpec(7)
    for bad in ("zp:4", "zp:1", "zp:x", "real", ""):
        with pytest.raises(ValueError):
            FieldSpec.parse(bad)


def test_prime_field_arithmetic():
    f = FieldSpec(5)
    assert f.mul(f.inv(3), 3) == 1
    assert f.sub(2, 4) == 3
    assert f.is_zero(f.from_int(10))


def test_rank_small_matrices():
    assert rank([]) == 0
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[1, 2], [3, 4]]) == 2
    # rank drops mod 2
    m = [[2, 0], [0, 1]]
    assert rank(m, RATIONALS) == 2
    assert rank(m, FieldSpec(2)) == 1


def test_betti_stock_complexes():
    assert betti(point_complex()).as_tuple() == (1,)
    assert betti(interval_complex()).as_tuple() == (1, 0)
    assert betti(circle_complex()).as_tuple() == (1, 1)
    assert betti(wedge_of_circles(2)).as_tuple() == (1, 2)
    assert betti(torus_complex()).as_tuple() == (1, 2, 1)
    assert betti(two_component_complex()).as_tuple() == (2, 2)


def test_betti_suspensions():
    assert betti(suspension_model(circle_complex()).complex).as_tuple() == (1, 0, 1)
    assert betti(suspension_model(wedge_of_circles(2)).complex).as_tuple() == (1, 0, 2)
    assert betti(suspension_model(torus_complex()).complex).as_tuple() == (1, 0, 2, 1)


def pinched_square() -> CubicalSet:
    # one loop edge, one square glued along it twice with degenerate sides;
    # its middle homology depends on the characteristic
    return CubicalSet(
        {"v": 0, "e": 1, "Q": 2},
        {
            ("e", 1, 0): FaceRef("v"),
            ("e", 1, 1): FaceRef("v"),
            ("Q", 1, 0): FaceRef("e"),
            ("Q", 1, 1): FaceRef("v", (1,)),
            ("Q", 2, 0): FaceRef("v", (1,)),
            ("Q", 2, 1): FaceRef("e"),
        },
        "v",
    )


def test_betti_depends_on_characteristic():
    K = pinched_square()
    assert validate(K) == []
    assert betti(K).as_tuple() == (1, 0, 0)
    assert betti(K, FieldSpec(2)).as_tuple() == (1, 1, 1)
    assert betti(K, FieldSpec(3)).as_tuple() == (1, 0, 0)


def test_chain_complex_drops_degenerate_faces():
    cc = chain_complex(pinched_square())
    # boundary of the square is -2 times the loop edge
    assert cc.boundary[2] == [[-2]]
    assert cc.boundary[1] == [[0]]


def test_graded_dims_helpers():
    g = GradedDims({0: 2, 1: 3, 2: 0}, 2)
    assert g.get(5) == 0
    assert g.nonzero() == [(0, 2), (1, 3)]
    assert g.reduced().as_tuple() == (1, 3, 0)
    assert g.reduced().reduced().get(0) == 0


def test_truncation_extends_with_zeros():
    g = betti(circle_complex(), truncation=4)
    assert g.as_tuple() == (1, 1, 0, 0, 0)


CORPUS = [
    point_complex,
    interval_complex,
    circle_complex,
    lambda: wedge_of_circles(3),
    torus_complex,
    two_component_complex,
    pinched_square,
]


@given(st.sampled_from(CORPUS), st.sampled_from([RATIONALS, FieldSpec(2), FieldSpec(5)]))
def test_euler_characteristic_matches_cube_counts(make, field):
    K = make()
    counts = {}
    for d in K.cubes.values():
        counts[d] = counts.get(d, 0) + 1
    chi_cells = sum((-1) ** k * n for k, n in counts.items())
    b = betti(K, field)
    chi_homology = sum((-1) ** k * b.get(k) for k in range(K.top_dim + 1))
    assert chi_cells == chi_homology
