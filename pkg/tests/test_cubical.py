from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dirloop.corpus import (
    circle_complex,
    interval_complex,
    torus_complex,
    two_component_complex,
    wedge_of_circles,
)
from dirloop.cubical import (
    CubicalSet,
    FaceRef,
    RealizationPoint,
    apply_face,
    boundary_snap,
    compose_degens,
    in_collar,
    insert_degen,
    normalize_point,
    quotient_collapse,
    snap_coordinate,
    suspension_model,
    tensor_product,
    validate,
)

F = Fraction


def test_insert_degen_interchange():
    # s_i s_j = s_{j+1} s_i for i <= j, composition order
    for j in range(1, 5):
        for i in range(1, j + 1):
            assert compose_degens((i,), (j,)) == (j + 1, i)


def test_insert_degen_keeps_normal_form():
    assert insert_degen((3, 1), 1) == (4, 2, 1)
    assert insert_degen((3, 1), 2) == (4, 2, 1)
    assert insert_degen((2,), 5) == (5, 2)
    assert insert_degen((), 1) == (1,)


def test_apply_face_cancels_matching_degeneracy():
    K = circle_complex()
    assert apply_face(K, FaceRef("v", (1,)), 1, 0) == FaceRef("v")
    # d_1 of the degenerate square on e hits e itself
    assert apply_face(K, FaceRef("e", (1,)), 1, 0) == FaceRef("e")
    assert apply_face(K, FaceRef("e", (2,)), 1, 0) == FaceRef("v", (1,))


def test_validate_accepts_stock_complexes():
    for K in (interval_complex(), circle_complex(), wedge_of_circles(3), torus_complex()):
        assert validate(K) == []


def test_validate_accepts_suspension_models():
    for base in (circle_complex(), wedge_of_circles(2), torus_complex()):
        assert validate(suspension_model(base).complex) == []


def test_validate_reports_broken_square():
    faces = {
        ("f", 1, 0): FaceRef("p"),
        ("f", 1, 1): FaceRef("q"),
        ("g", 1, 0): FaceRef("q"),
        ("g", 1, 1): FaceRef("p"),
        ("Q", 1, 0): FaceRef("f"),
        ("Q", 1, 1): FaceRef("f"),
        ("Q", 2, 0): FaceRef("g"),
        ("Q", 2, 1): FaceRef("f"),
    }
    K = CubicalSet({"p": 0, "q": 0, "f": 1, "g": 1, "Q": 2}, faces, "p")
    report = validate(K)
    assert any(v.kind == "relation" and v.cube == "Q" and v.indices == (1, 2, 0, 0) for v in report)


def test_validate_reports_structural_defects():
    K = CubicalSet({"v": 0, "e": 1}, {("e", 1, 0): FaceRef("v")}, "v")
    kinds = {(v.kind, v.cube) for v in validate(K)}
    assert ("structure", "e") in kinds

    K2 = CubicalSet(
        {"v": 0, "e": 1},
        {("e", 1, 0): FaceRef("v"), ("e", 1, 1): FaceRef("ghost")},
        "v",
    )
    assert any("ghost" in v.detail for v in validate(K2))

    # degeneracy word out of normal form
    K3 = CubicalSet(
        {"v": 0, "e": 1, "S": 2},
        {
            ("e", 1, 0): FaceRef("v"),
            ("e", 1, 1): FaceRef("v"),
            ("S", 1, 0): FaceRef("e"),
            ("S", 1, 1): FaceRef("e"),
            ("S", 2, 0): FaceRef("v", (1, 1)),
            ("S", 2, 1): FaceRef("e"),
        },
        "v",
    )
    assert any("not strictly decreasing" in v.detail for v in validate(K3))


def test_basepoint_must_be_a_vertex():
    with pytest.raises(ValueError):
        CubicalSet({"v": 0, "e": 1}, {("e", 1, 0): FaceRef("v"), ("e", 1, 1): FaceRef("v")}, "e")
    with pytest.raises(ValueError):
        CubicalSet({"v": 0}, {}, "missing")


def test_tensor_product_shape():
    T = torus_complex()
    dims = sorted(T.cubes.values())
    assert dims == [0, 1, 1, 2]
    assert T.basepoint == "(v|v)"
    assert validate(T) == []


def test_quotient_collapse_checks_closure():
    K = interval_complex()
    with pytest.raises(ValueError):
        quotient_collapse(K, ["e"])  # endpoints missing
    Q = quotient_collapse(K, ["a", "b", "e"])
    assert Q.cubes == {"*": 0}


def test_quotient_collapse_avoids_name_collision():
    K = CubicalSet(
        {"*": 0, "v": 0, "e": 1},
        {("e", 1, 0): FaceRef("v"), ("e", 1, 1): FaceRef("v")},
        "*",
    )
    Q = quotient_collapse(K, ["v", "e"])
    assert Q.basepoint == "*'"
    assert "*" in Q.cubes


def test_suspension_model_of_circle_counts():
    S = suspension_model(circle_complex())
    by_dim: dict[int, int] = {}
    for d in S.complex.cubes.values():
        by_dim[d] = by_dim.get(d, 0) + 1
    assert by_dim == {0: 1, 1: 1, 2: 2}
    assert S.lower & S.upper == frozenset({S.star, "(mid|e)"})


def test_normalize_point_on_interval():
    K = interval_complex()
    assert normalize_point(K, "e", (F(0),)) == RealizationPoint("a", ())
    assert normalize_point(K, "e", (F(1),)) == RealizationPoint("b", ())
    p = normalize_point(K, "e", (F(1, 2),))
    assert p == RealizationPoint("e", (F(1, 2),))


def test_normalize_point_through_degeneracies():
    S = suspension_model(circle_complex())
    K = S.complex
    sq = "(lo|e)"
    assert normalize_point(K, sq, (F(1, 2), F(0))) == RealizationPoint(S.star, ())
    assert normalize_point(K, sq, (F(0), F(1, 2))) == RealizationPoint(S.star, ())
    assert normalize_point(K, sq, (F(1), F(1, 2))) == RealizationPoint("(mid|e)", (F(1, 2),))


def test_normalize_point_input_checks():
    K = interval_complex()
    with pytest.raises(ValueError):
        normalize_point(K, "nope", ())
    with pytest.raises(ValueError):
        normalize_point(K, "e", ())
    with pytest.raises(ValueError):
        normalize_point(K, "e", (F(3, 2),))


coord = st.sampled_from([F(0), F(1, 4), F(1, 2), F(3, 4), F(1)])


@given(st.tuples(coord, coord))
def test_normalize_point_order_independent_on_torus(coords):
    K = torus_complex()
    direct = normalize_point(K, "(e|e)", coords)
    # strip the *last* boundary slot first, then let normalize finish
    hit = max((i for i, c in enumerate(coords) if c in (0, 1)), default=None)
    if hit is None:
        assert direct == RealizationPoint("(e|e)", coords)
        return
    ref = K.faces[("(e|e)", hit + 1, 0 if coords[hit] == 0 else 1)]
    rest = coords[:hit] + coords[hit + 1:]
    for j in ref.degens:
        rest = rest[: j - 1] + rest[j:]
    assert normalize_point(K, ref.base, rest) == direct


@given(st.tuples(coord, coord))
def test_normalize_point_idempotent(coords):
    S = suspension_model(circle_complex())
    p = normalize_point(S.complex, "(hi|e)", coords)
    assert normalize_point(S.complex, p.cube, p.coords) == p


def test_snap_coordinate_breakpoints():
    assert snap_coordinate(F(1, 3)) == 0
    assert snap_coordinate(F(1, 4)) == 0
    assert snap_coordinate(F(2, 3)) == 1
    assert snap_coordinate(F(3, 4)) == 1
    assert snap_coordinate(F(1, 2)) == F(1, 2)
    assert snap_coordinate(F(5, 12)) == F(1, 4)
    assert snap_coordinate(F(7, 12)) == F(3, 4)


def test_boundary_snap_and_collar():
    K = interval_complex()
    p = RealizationPoint("e", (F(1, 4),))
    assert boundary_snap(K, p) == RealizationPoint("a", ())
    assert in_collar(K, p, {"a"})
    assert not in_collar(K, RealizationPoint("e", (F(1, 2),)), {"a"})
    assert in_collar(K, RealizationPoint("e", (F(5, 6),)), {"b"})


def test_two_component_complex_is_well_formed():
    assert validate(two_component_complex()) == []
