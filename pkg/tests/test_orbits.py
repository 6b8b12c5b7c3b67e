from fractions import Fraction

import pytest

from isograss.arith import Field, I
from isograss.errors import DifferentOrbitsError, InvalidTupleError, WitnessNotFound
from isograss.forms import GroupParams, Subspace, intersect, block_subspace, proj_U, proj_W, radical, standard_space
from isograss.invariants import OrbitParams
from isograss.linalg import Matrix
from isograss.oracle import sample_h, tangent_orbit_dim
from isograss.orbits import (CSV_COLUMNS, IsometryElement, canonical_rep, component_count,
                             component_count_from_cosets, dim_group, dim_orbit, dim_stabilizer, enumerate_orbits,
                             hit_cosets, is_in_stabilizer, open_orbits, open_orbits_closed_form, orbit_witness,
                             stabilizer_formula, unitary_formula_as_printed, valid_tuples, witt_extend)

from conftest import CO, RO, SP, UN

P2211 = GroupParams.signed(2, 2, 1, 1)
P4422 = GroupParams.signed(4, 4, 2, 2)


def T(case, *e):
    return OrbitParams(case, tuple(e))


def test_atlas_ro2211_r1():
    atlas = {i.params.entries: (i.dim_stab, i.dim_orbit, i.is_open, i.component_count)
             for i in enumerate_orbits(RO, P2211, 1)}
    assert atlas == {
        (0, 0, 0, 0, 1): (0, 2, True, 1),
        (0, 0, 0, 1, 0): (0, 2, True, 1),
        (0, 0, 1, 0, 0): (1, 1, False, 4),
        (0, 1, 0, 0, 0): (2, 0, False, 1),
        (1, 0, 0, 0, 0): (2, 0, False, 1),
    }
    infos = enumerate_orbits(RO, P2211, 1)
    assert [i.params.entries for i in infos] == sorted(i.params.entries for i in infos)
    assert all(i.dim_H == 2 for i in infos)
    assert len(infos[0].csv_row()) == len(CSV_COLUMNS)


def test_enumerate_examples():
    got = [i.params.entries for i in enumerate_orbits(RO, P4422, 3) if i.is_open]
    assert got == [(0, 0, 0, 1, 2), (0, 0, 0, 2, 1)]
    sp = [t.entries for t in valid_tuples(SP, GroupParams.split(6, 1), 1)]
    assert sorted(sp) == sorted([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)])
    with pytest.raises(InvalidTupleError):
        enumerate_orbits(RO, P2211, 3)
    zero = enumerate_orbits(RO, P2211, 0)
    assert len(zero) == 1 and zero[0].params.entries == (0,) * 5 and zero[0].component_count == 1


def test_canonical_examples():
    S = canonical_rep(RO, P2211, T(RO, 0, 0, 0, 1, 0))
    assert S.basis == Matrix([[1, 0, 0, 1]], Field.Q)
    C = canonical_rep(CO, GroupParams.split(4, 2), T(CO, 1, 0, 0, 0))
    assert C == Subspace(C.space, [[1, I, 0, 0]])
    Y = canonical_rep(SP, GroupParams.split(2, 1), T(SP, 0, 0, 0, 2))
    # coordinates e1, f1, e2, f2: span(e1 + f2, f1 + e2)
    assert Y == Subspace(Y.space, [[1, 0, 0, 1], [0, 1, 1, 0]])
    with pytest.raises(InvalidTupleError):
        canonical_rep(RO, P2211, T(RO, 2, 0, 0, 0, 0))


def test_dim_group():
    assert dim_group(RO, P2211) == 2
    assert dim_group(UN, P2211) == 8
    assert dim_group(SP, GroupParams.split(2, 1)) == 6
    assert dim_group(CO, GroupParams.split(5, 2)) == 1 + 3


def test_dim_stabilizer_examples():
    assert dim_stabilizer(RO, P2211, T(RO, 0, 0, 1, 0, 0)) == 1
    assert dim_stabilizer(RO, P2211, T(RO, 0, 0, 0, 1, 0)) == 0
    assert dim_stabilizer(UN, P2211, T(UN, 0, 0, 0, 1, 0)) == 3
    assert dim_orbit(UN, P2211, T(UN, 0, 0, 0, 1, 0)) == 5
    co = GroupParams.split(4, 2)
    assert dim_stabilizer(CO, co, T(CO, 0, 0, 0, 1)) == 0
    assert dim_orbit(CO, co, T(CO, 0, 0, 0, 1)) == 2


# Orbit dimensions computed by the tangent-space oracle, frozen.
FROZEN = [
    (RO, GroupParams.signed(3, 2, 1, 1), {(0, 0, 0, 1, 1): 3, (0, 1, 0, 0, 1): 2, (1, 1, 0, 0, 0): 1}),
    (UN, GroupParams.signed(3, 3, 2, 1), {(0, 0, 0, 1, 1): 12, (0, 0, 0, 2, 0): 12, (0, 0, 1, 1, 0): 11,
                                          (0, 1, 0, 1, 0): 8, (1, 0, 0, 1, 0): 8, (1, 1, 0, 0, 0): 6}),
    (CO, GroupParams.split(6, 2), {(0, 1, 0, 2): 3, (1, 2, 0, 0): 1}),
    (SP, GroupParams.split(4, 2), {(0, 0, 1, 2): 12, (0, 1, 0, 2): 10, (1, 0, 0, 2): 10, (1, 1, 1, 0): 9,
                                   (1, 2, 0, 0): 6, (2, 1, 0, 0): 6}),
]


@pytest.mark.parametrize("case,params,dims", FROZEN)
def test_frozen_orbit_dimensions(case, params, dims):
    r = sum(next(iter(dims)))
    assert {t.entries: dim_orbit(case, params, t) for t in valid_tuples(case, params, r)} == dims
    assert {t.entries: tangent_orbit_dim(canonical_rep(case, params, t))
            for t in valid_tuples(case, params, r)} == dims


def test_printed_unitary_formula_is_not_integral():
    t = T(UN, 1, 0, 0, 0, 0)
    assert unitary_formula_as_printed(P2211, t) == Fraction(13, 2)
    assert dim_stabilizer(UN, P2211, t) == 7
    assert tangent_orbit_dim(canonical_rep(UN, P2211, t)) == dim_group(UN, P2211) - 7
    # where the printed form is integral on this space it can still disagree
    t2 = T(UN, 1, 1, 0, 0, 0)
    assert unitary_formula_as_printed(P2211, t2) == 5 != stabilizer_formula(UN, P2211, t2) == 6


def test_open_orbit_spot_values():
    assert [t.entries for t in open_orbits(RO, P4422, 3)] == [(0, 0, 0, 1, 2), (0, 0, 0, 2, 1)]
    assert [t.entries for t in open_orbits(UN, P4422, 3)] == [(0, 0, 0, 1, 2), (0, 0, 0, 2, 1)]
    sp = GroupParams.split(6, 1)
    seq = [open_orbits(SP, sp, r) for r in range(1, 7)]
    assert [[t.entries for t in s] for s in seq] == [
        [(0, 0, 1, 0)], [(0, 0, 0, 2)], [(0, 1, 0, 2)], [(0, 2, 0, 2)], [(0, 3, 0, 2)], [(0, 4, 0, 2)]]


def test_open_orbit_count_example():
    # p1 + q1 + 1 - r open orbits while p1, q1 <= r < p1 + q1 <= p - p1, q - q1
    params = GroupParams.signed(5, 5, 2, 2)
    for r in (2, 3):
        assert len(open_orbits(RO, params, r)) == 2 + 2 + 1 - r


def test_unique_open_orbit_when_r_is_large():
    # p1 + q1 <= r <= p - p1, q - q1 and dim U <= dim W
    params = GroupParams.signed(5, 5, 1, 1)
    for r in (2, 3, 4):
        assert [t.entries for t in open_orbits(RO, params, r)] == [(0, r - 2, 0, 1, 1)]


def test_symplectic_odd_r_open_orbit():
    params = GroupParams.split(5, 2)
    for r in (1, 3):
        assert [t.entries for t in open_orbits_closed_form(SP, params, r)] == [(0, 0, 1, r - 1)]


def test_component_counts():
    assert component_count(RO, P2211, T(RO, 0, 0, 1, 0, 0)) == 4
    assert component_count(CO, GroupParams.split(4, 2), T(CO, 0, 0, 0, 2)) == 2
    assert component_count(CO, GroupParams.split(4, 2), T(CO, 0, 0, 0, 1)) == 1
    for t in valid_tuples(UN, P4422, 2):
        assert component_count(UN, P4422, t) == 1
    for case, params in [(RO, P4422), (RO, GroupParams.signed(4, 2, 2, 1)), (CO, GroupParams.split(6, 3))]:
        for r in range(1, 3):
            for t in valid_tuples(case, params, r):
                N = component_count(case, params, t)
                assert N in ((1, 2, 4) if case is RO else (1, 2))
                assert N == component_count_from_cosets(case, params, t)
    assert hit_cosets(RO, P2211, T(RO, 0, 0, 1, 0, 0)) == {(1, 1)}


def test_witt_extend_examples():
    G = Matrix.diag([1, -1], Field.Q)
    D = Matrix([[1, 0]], Field.Q)
    E = Matrix([[Fraction(5, 3), Fraction(4, 3)]], Field.Q)
    g = witt_extend(G, D, E)
    assert g.T() @ G @ g == G and D @ g.T() == E
    full = Matrix([[Fraction(5, 3), Fraction(4, 3)], [Fraction(4, 3), Fraction(5, 3)]], Field.Q)
    assert witt_extend(G, Matrix.identity(2, Field.Q), full) == full.T()
    with pytest.raises(ValueError):
        witt_extend(G, D, Matrix([[0, 1]], Field.Q))


def test_witt_extend_isotropic_and_alternating():
    G = Matrix.diag([1, 1, -1, -1], Field.Q)
    D = Matrix([[1, 0, 1, 0]], Field.Q)
    E = Matrix([[0, 1, Fraction(3, 5), Fraction(4, 5)]], Field.Q)
    g = witt_extend(G, D, E)
    assert g.T() @ G @ g == G and D @ g.T() == E
    sp = standard_space(SP, GroupParams.split(2, 1))
    D = Matrix([[1, 0, 0, 0], [0, 0, 1, 0]], Field.Q)
    E = Matrix([[1, 0, 1, 0], [0, 0, 1, 0]], Field.Q)
    g = witt_extend(sp.gram, D, E)
    assert g.T() @ sp.gram @ g == sp.gram and D @ g.T() == E
    GH = Matrix.diag([1, -1], Field.QI_HERMITIAN)
    D = Matrix([[1, 0]], Field.QI_HERMITIAN)
    E = Matrix([[Fraction(5, 3), Fraction(4, 3) * I]], Field.QI_HERMITIAN)
    g = witt_extend(GH, D, E)
    assert g.H() @ GH @ g == GH and D @ g.T() == E


def test_witness_examples():
    S = canonical_rep(RO, P2211, T(RO, 0, 0, 0, 1, 0))
    h = orbit_witness(S, S)
    assert h.check(S.space) and is_in_stabilizer(h, S)
    h0 = sample_h(S.space, 7, component=3)
    S2 = h0.apply(S)
    g = orbit_witness(S, S2)
    assert g.check(S.space) and g.apply(S) == S2
    A = Subspace(S.space, [[1, 1, 0, 0]])
    B = Subspace(S.space, [[0, 0, 1, 1]])
    with pytest.raises(DifferentOrbitsError):
        orbit_witness(A, B)


def test_witness_not_found_over_q():
    # same tuple (0,0,0,1,0), but the U parts have norms 1 and 8, which differ by a non-square
    sp = standard_space(RO, P2211)
    S = Subspace(sp, [[1, 0, 0, 1]])
    S2 = Subspace(sp, [[3, 1, 1, 3]])
    with pytest.raises(WitnessNotFound):
        orbit_witness(S, S2)
    # scaling the norm by a square is fine
    g = orbit_witness(S, Subspace(sp, [[5, 4, 4, 5]]))
    assert g.apply(S) == Subspace(sp, [[5, 4, 4, 5]])


def test_is_in_stabilizer():
    S = canonical_rep(RO, P4422, T(RO, 0, 0, 1, 1, 0))
    assert is_in_stabilizer(IsometryElement.identity(S.space), S)
    found_outside = False
    for k in range(5):
        h = sample_h(S.space, k, component=k)
        if h.apply(S) != S:
            assert not is_in_stabilizer(h, S)
            found_outside = True
    assert found_outside
    with pytest.raises(ValueError):
        is_in_stabilizer(IsometryElement.identity(standard_space(RO, P2211)), S)


@pytest.mark.parametrize("case,params", [(RO, P4422), (UN, GroupParams.signed(3, 3, 1, 2)),
                                         (CO, GroupParams.split(6, 2)), (SP, GroupParams.split(4, 2))])
def test_stabilizer_preserves_flags(case, params):
    # elements of H_S (built as witnesses S -> S from conjugated samples) keep the defining flags
    space = standard_space(case, params)
    U, W = block_subspace(space, "U"), block_subspace(space, "W")
    for r in range(1, 3):
        for t in valid_tuples(case, params, r)[:4]:
            S = canonical_rep(case, params, t)
            h = sample_h(space, r * 11 + t.r, component=r)
            S2 = h.apply(S)
            g = orbit_witness(S2, S)
            stab = g @ h
            assert is_in_stabilizer(stab, S)
            for flag in (intersect(S, U), radical(proj_U(S)), proj_U(S), intersect(S, W), radical(proj_W(S)),
                         proj_W(S)):
                assert stab.apply(flag) == flag
