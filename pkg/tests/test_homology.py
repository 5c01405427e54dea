import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from symtor.core import new_sym_ideal, p_vector, partitions_below, plain_ideal, unsymmetrize
from symtor.homology import (
    GF2,
    QQ,
    FieldSpec,
    HomologyProfile,
    SimplicialComplex,
    admissible_cs,
    alexander_dual,
    boundary_matrix,
    delta_complex,
    gamma,
    gamma_complex,
    koszul_lower_complex,
    matrix_rank,
    reduced_homology_dims,
)

RP2 = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
       (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6)]


@st.composite
def complexes(draw, max_vertices=6):
    s = draw(st.integers(0, max_vertices))
    facets = draw(st.lists(st.sets(st.integers(1, s), max_size=s) if s else st.just(set()), max_size=6))
    if draw(st.booleans()) and not facets:
        return SimplicialComplex.void(s)
    return SimplicialComplex.generated_by(s, facets)


def test_field_spec():
    assert FieldSpec(0) == QQ and FieldSpec(2) == GF2
    for bad in (4, 1, -3, 9):
        with pytest.raises(ValueError, match="characteristic must be 0 or prime"):
            FieldSpec(bad)
    assert FieldSpec(5).semisimple_for(4) and not FieldSpec(3).semisimple_for(3)


def test_downward_closure_enforced():
    with pytest.raises(ValueError):
        SimplicialComplex.from_faces(2, [(1, 2), (1,), ()])


def test_void_versus_empty_face():
    void = SimplicialComplex.void(2)
    point = SimplicialComplex.from_faces(2, [()])
    assert void != point
    assert not reduced_homology_dims(void)
    assert reduced_homology_dims(point).reduced(-1) == 1


def test_basic_homology():
    hollow = SimplicialComplex.generated_by(3, [(1, 2), (1, 3), (2, 3)])
    assert reduced_homology_dims(hollow) == HomologyProfile({2: 1})
    cone = SimplicialComplex.generated_by(4, [(1, 2, 3), (1, 4)])
    assert cone.is_cone(1)
    assert not reduced_homology_dims(cone)
    assert not reduced_homology_dims(SimplicialComplex.simplex(3))


def test_field_dependence_on_projective_plane():
    rp2 = SimplicialComplex.generated_by(6, RP2)
    assert not reduced_homology_dims(rp2, QQ)
    gf2 = reduced_homology_dims(rp2, GF2)
    assert gf2.reduced(1) == 1 and gf2.reduced(2) == 1
    assert not reduced_homology_dims(rp2, FieldSpec(3))


def test_boundary_matrix_sign_convention():
    point = SimplicialComplex.from_faces(1, [(), (1,)])
    assert boundary_matrix(point, 0) == [[-1]]
    assert boundary_matrix(SimplicialComplex.void(3), 1) == []
    edge = SimplicialComplex.generated_by(2, [(1, 2)])
    # removing 2 from {1,2} lands on row {1} with sign (-1)^2
    assert boundary_matrix(edge, 1) == [[1], [-1]]


def _matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


@given(complexes())
def test_boundary_squares_to_zero(delta):
    for k in range(delta.vertex_count):
        lower, upper = boundary_matrix(delta, k), boundary_matrix(delta, k + 1)
        if lower and upper and lower[0] and upper[0]:
            assert all(x == 0 for row in _matmul(lower, upper) for x in row)


@given(complexes())
def test_homology_matches_explicit_ranks(delta):
    prof = reduced_homology_dims(delta, QQ)
    for j in range(-1, delta.vertex_count):
        f = len(delta.faces_of_size(j + 1))
        r_lo = matrix_rank(boundary_matrix(delta, j), QQ) if j >= 0 else 0
        r_hi = matrix_rank(boundary_matrix(delta, j + 1), QQ)
        assert prof.reduced(j) == f - r_lo - r_hi


@given(complexes(), st.sampled_from([QQ, GF2, FieldSpec(3)]))
def test_euler_characteristic(delta, k):
    prof = reduced_homology_dims(delta, k)
    alt = sum((-1) ** j * prof.reduced(j) for j in range(-1, delta.vertex_count))
    assert alt == delta.euler_characteristic()


@given(complexes(), st.sampled_from([QQ, GF2]))
def test_alexander_duality_law(delta, k):
    s = delta.vertex_count
    if s == 0:
        # {∅} on no vertices is also the full simplex; the law needs s >= 1
        return
    dual = alexander_dual(delta)
    assert alexander_dual(dual) == delta
    h, hd = reduced_homology_dims(delta, k), reduced_homology_dims(dual, k)
    for i in range(-1, s + 1):
        assert h.reduced(i) == hd.reduced(s - i - 3)


def test_alexander_dual_extremes():
    assert alexander_dual(SimplicialComplex.simplex(3)).is_void
    assert alexander_dual(SimplicialComplex.void(3)) == SimplicialComplex.simplex(3)


def test_delta_complex_examples(worked_ideal):
    d = delta_complex(worked_ideal, (5, 2, 1), (0, 0, 0))
    assert d.face_list() == [(), (1,), (2,), (3,), (1, 2)]
    assert delta_complex(worked_ideal, (5, 5, 1), (1, 0)).face_list() == [(), (1,), (2,)]
    assert delta_complex(worked_ideal, (3, 3, 3), (0,)).is_void
    with pytest.raises(ValueError):
        delta_complex(worked_ideal, (5, 2, 1), (1, 0, 0))


def test_gamma_examples(worked_ideal):
    assert gamma(worked_ideal, (5, 2, 1), (0, 0, 0)) == HomologyProfile({1: 1})
    assert gamma(worked_ideal, (4, 1, 1), (0, 0)) == HomologyProfile({0: 1})
    assert not gamma(worked_ideal, (3, 3, 3), (0,))


def test_delta_complexes_are_downward_closed():
    # construction raises otherwise; sweep a few ideals exhaustively
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(2, 4)
        gens = [tuple(sorted((rng.randint(0, 3) for _ in range(n)), reverse=True)) for _ in range(2)]
        ideal = new_sym_ideal(n, gens)
        for mu in partitions_below((4,) * n):
            for c in admissible_cs(mu):
                delta_complex(ideal, mu, c)


def test_gamma_complex_is_dual(worked_ideal):
    mu, c = (5, 2, 1), (0, 0, 0)
    assert gamma_complex(worked_ideal, mu, c) == alexander_dual(delta_complex(worked_ideal, mu, c))


def test_admissible_cs():
    assert list(admissible_cs((5, 5, 1))) == [(0, 0), (1, 0)]
    assert list(admissible_cs((0, 0))) == [()]
    assert len(list(admissible_cs((2, 2, 1, 1, 1)))) == 2 * 3
    assert all(len(c) == len(p_vector((3, 3, 1))) for c in admissible_cs((3, 3, 1)))


def test_koszul_lower_complex():
    unit = plain_ideal(3, [(0, 0, 0)])
    assert koszul_lower_complex(unit, (1, 1, 1)) == SimplicialComplex.simplex(3)
    zero = plain_ideal(3, [])
    assert koszul_lower_complex(zero, (2, 2, 2)).is_void
    j = unsymmetrize([(4, 1, 1), (5, 2, 0)])
    assert reduced_homology_dims(koszul_lower_complex(j, (5, 2, 1))).reduced(0) == 1
    with pytest.raises(ValueError):
        koszul_lower_complex(j, (5, 2))
