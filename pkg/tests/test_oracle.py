import random

import pytest
from hypothesis import given, strategies as st

from isograss.arith import Field
from isograss.forms import GroupParams, is_isotropic, standard_space
from isograss.group import preserves
from isograss.invariants import OrbitParams
from isograss.linalg import Matrix
from isograss.oracle import (cayley, cayley_sample, component_labels, component_representative, coset, lie_algebra,
                             random_isotropic, sample_h, sign_element, tangent_orbit_dim)
from isograss.orbits import canonical_rep, dim_orbit, valid_tuples

from conftest import CO, RO, SP, UN

P2211 = GroupParams.signed(2, 2, 1, 1)


def test_lie_algebra_dimensions():
    assert len(lie_algebra(standard_space(RO, P2211), "U")) == 1
    assert len(lie_algebra(standard_space(UN, P2211), "U")) == 4
    assert len(lie_algebra(standard_space(SP, GroupParams.split(2, 1)), "U")) == 3
    assert len(lie_algebra(standard_space(CO, GroupParams.split(5, 2)), "W")) == 3
    assert len(lie_algebra(standard_space(RO, GroupParams.signed(3, 2, 1, 1)), "V")) == 10
    with pytest.raises(ValueError):
        lie_algebra(standard_space(RO, P2211), "X")


@pytest.mark.parametrize("case,params", [(RO, GroupParams.signed(3, 2, 2, 1)), (UN, P2211),
                                         (CO, GroupParams.split(4, 1)), (SP, GroupParams.split(3, 1))])
def test_lie_algebra_equation(case, params):
    space = standard_space(case, params)
    for factor in ("U", "W"):
        G = space.factor_gram(factor)
        for A in lie_algebra(space, factor).basis:
            assert (A.H() @ G + G @ A).is_zero()


def test_tangent_examples():
    def tan(case, t, params=P2211):
        return tangent_orbit_dim(canonical_rep(case, params, OrbitParams(case, t)))

    assert tan(RO, (0, 0, 1, 0, 0)) == 1
    assert tan(RO, (0, 0, 0, 1, 0)) == 2
    assert tan(UN, (0, 0, 0, 1, 0)) == 5
    assert tan(CO, (0, 0, 0, 1), GroupParams.split(4, 2)) == 2


def test_cayley_of_zero_is_identity():
    assert cayley(Matrix.zeros(3, 3, Field.Q)) == Matrix.identity(3, Field.Q)


SPACES = [(RO, GroupParams.signed(3, 2, 1, 1)), (UN, GroupParams.signed(2, 3, 1, 2)),
          (CO, GroupParams.split(5, 2)), (SP, GroupParams.split(3, 2))]


@given(st.sampled_from(SPACES), st.integers(0, 10**9), st.sampled_from(["U", "W", "V"]))
def test_cayley_samples_are_isometries(cp, seed, factor):
    space = standard_space(*cp)
    g = cayley_sample(space, factor, seed)
    G = space.gram if factor == "V" else space.factor_gram(factor)
    assert preserves(g, G)


def test_cayley_determinism():
    space = standard_space(UN, P2211)
    assert cayley_sample(space, "U", 5) == cayley_sample(space, "U", 5)
    assert cayley_sample(space, "U", 5) != cayley_sample(space, "U", 6)
    assert sample_h(space, 3, component=1) == sample_h(space, 3, component=1)


def test_sign_elements():
    space = standard_space(RO, P2211)
    h, label = sign_element(space, set())
    assert h.ambient() == Matrix.identity(4, Field.Q) and label == (1, 1, 1, 1)
    h, label = sign_element(space, {2})  # w1+
    assert label == (1, 1, -1, 1)
    h, label = sign_element(space, {0, 3})  # u1+ and w1-
    assert label == (-1, 1, 1, -1)
    assert h.check(space)
    with pytest.raises(IndexError):
        sign_element(space, {4})
    sp = standard_space(SP, GroupParams.split(2, 1))
    with pytest.raises(ValueError):
        sign_element(sp, {0})
    assert sign_element(sp, {0, 1})[0].check(sp)


def test_sign_labels_multiply():
    space = standard_space(RO, GroupParams.signed(4, 3, 2, 1))
    rng = random.Random(1)
    for _ in range(20):
        a = {j for j in range(space.dim) if rng.random() < 0.5}
        b = {j for j in range(space.dim) if rng.random() < 0.5}
        ha, la = sign_element(space, a)
        hb, lb = sign_element(space, b)
        hab, lab = sign_element(space, a ^ b)
        assert (ha @ hb).ambient() == hab.ambient()
        assert lab == tuple(x * y for x, y in zip(la, lb))
    for label in component_labels(space):
        assert sign_element(space, {next(iter(b)) for b, t in zip(_blocks(space), label) if t == -1})[1] == label
        assert component_representative(space, label).check(space)
    assert coset(space, (-1, 1, -1, 1)) == (1, 1)
    assert coset(space, (-1, -1, 1, 1)) == (-1, -1)


def _blocks(space):
    from isograss.oracle import _blocks as blocks
    return blocks(space)


@given(st.sampled_from(SPACES), st.integers(0, 10**6))
def test_tangent_dim_constant_on_orbits(cp, seed):
    case, params = cp
    space = standard_space(case, params)
    rng = random.Random(seed)
    r = rng.randint(1, space.max_isotropic_dim())
    tuples = valid_tuples(case, params, r)
    t = tuples[rng.randrange(len(tuples))]
    S = canonical_rep(case, params, t)
    h = sample_h(space, rng.randrange(10**6), component=rng.randrange(16))
    assert h.check(space)
    assert tangent_orbit_dim(h.apply(S)) == tangent_orbit_dim(S) == dim_orbit(case, params, t)


@given(st.sampled_from(SPACES), st.integers(0, 10**6))
def test_random_isotropic(cp, seed):
    space = standard_space(*cp)
    rng = random.Random(seed)
    r = rng.randint(1, space.max_isotropic_dim())
    S = random_isotropic(space, r, seed)
    assert S.dim == r and is_isotropic(S)
    assert random_isotropic(space, r, seed) == S
