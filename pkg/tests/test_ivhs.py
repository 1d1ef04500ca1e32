import random
from math import factorial

import pytest

from jacring import (QuotientRing, SingularInput, family_extremes, ivhs_step_map, max_yukawa_rank,
                     parse_polynomial, torelli_rank, yukawa_evaluate)
from jacring.ivhs import random_element
from jacring.ring import FamilyTemplate

from conftest import PLANE_CUBIC, QUARTIC_FAMILY, poly


def ell(F):
    return parse_polynomial("+".join(f"x{j}" for j in range(F.ring.num_vars)), F.ring)


def test_step_map_quartic(quartic):
    xi = ell(quartic) ** 4
    M = ivhs_step_map(quartic, 2, xi, 0)
    assert M.shape == (19, 1)
    assert M.rank() == 1
    assert ivhs_step_map(quartic, 2, quartic.ring.zero(), 0).rank() == 0


def test_step_map_cubic_surface_is_empty(cubic_surface):
    M = ivhs_step_map(cubic_surface, 2, ell(cubic_surface) ** 3, 0)
    assert M.shape == (6, 0)
    assert M.rank() == 0


def test_step_map_validation(quartic, nodal_quartic):
    with pytest.raises(ValueError):
        ivhs_step_map(quartic, 2, ell(quartic) ** 3, 0)
    with pytest.raises(ValueError):
        ivhs_step_map(quartic, 2, ell(quartic) ** 4, 2)
    with pytest.raises(SingularInput):
        ivhs_step_map(nodal_quartic, 2, ell(nodal_quartic) ** 4, 0)


def test_yukawa_examples(quartic, quintic):
    y = yukawa_evaluate(quartic, 2, ell(quartic) ** 4)
    assert y.map.rows() == [[2520]] and y.rank == 1
    y = yukawa_evaluate(quintic, 3, ell(quintic) ** 5)
    assert y.map.rows() == [[factorial(15) // factorial(3) ** 5 % quintic.ring.domain.prime]]
    assert y.rank == 1
    # x0^5 is zero in R
    assert yukawa_evaluate(quintic, 3, quintic.ring.variable(0) ** 5).rank == 0


def test_yukawa_expand_equals_compose(quintic):
    rng = random.Random(2)
    Q = QuotientRing.jacobian(quintic)
    xi = random_element(Q, 5, rng)
    a = yukawa_evaluate(quintic, 3, xi, Q, method="expand")
    b = yukawa_evaluate(quintic, 3, xi, Q, method="compose")
    assert a.map == b.map
    assert yukawa_evaluate(quintic, 3, xi, Q, term_limit=0).method == "compose"


def test_max_yukawa_rank_examples(quartic, cubic_surface, quintic):
    rep = max_yukawa_rank(quartic, 2)
    assert (rep.verdict, rep.d_M_lower_bound, rep.theoretical_max) == ("IMaximal", 1, 1)
    assert max_yukawa_rank(cubic_surface, 2).verdict == "Vacuous"
    rep = max_yukawa_rank(quintic, 3, num_samples=2)
    assert (rep.verdict, rep.d_M_lower_bound) == ("IMaximal", 1)
    assert yukawa_evaluate(quintic, 3, rep.witness).rank == 1


def test_max_yukawa_rank_is_deterministic(quartic):
    a = max_yukawa_rank(quartic, 2, num_samples=3, seed=9)
    b = max_yukawa_rank(quartic, 2, num_samples=3, seed=9)
    assert a.sample_ranks == b.sample_ranks and a.witness == b.witness


def test_torelli_examples(quartic, cubic_surface):
    t = torelli_rank(quartic, 2)
    assert (t.rank, t.dim_source, t.injective) == (19, 19, True)
    assert torelli_rank(cubic_surface, 2).rank == 0
    t = torelli_rank(poly(PLANE_CUBIC, 3), 1)
    assert (t.rank, t.dim_source) == (1, 1)


def test_family_extremes(quartic):
    T = FamilyTemplate(QUARTIC_FAMILY, quartic.ring)
    res = family_extremes([T.at(0), T.at(1)], 2, num_samples=2)
    assert res.delta_M == 1
    assert family_extremes([quartic], 2, num_samples=2).delta_M == 1
    res = family_extremes([T.at(0), T.at(2)], 2, num_samples=2)
    assert res.delta_M == 1
    assert [r.singular for r in res.rows] == [False, True]


def test_composition_identity(quartic):
    """x(xi*eta) = x(xi) then x(eta), in every degree."""
    rng = random.Random(4)
    F = parse_polynomial("x0^4+x1^4+x2^4+x3^4 + 3*x0*x1*x2*x3", quartic.ring)
    Q = QuotientRing.jacobian(F)
    xi, eta = random_element(Q, 4, rng), random_element(Q, 2, rng)
    for k in range(5):
        lhs = Q.multiplication_matrix(xi * eta, k, degree=6)
        rhs = Q.multiplication_matrix(eta, k + 4, degree=2) @ Q.multiplication_matrix(xi, k, degree=4)
        assert lhs == rhs


def test_scaling_preserves_rank(quartic):
    rng = random.Random(5)
    Q = QuotientRing.jacobian(quartic)
    xi = random_element(Q, 4, rng)
    r = ivhs_step_map(quartic, 2, xi, 0).rank()
    assert ivhs_step_map(quartic, 2, xi.scale(7), 1).rank() == r
    assert ivhs_step_map(quartic, 2, xi.scale(7), 0).rank() == r


def test_step_maps_are_dual(quartic):
    """The socle pairing makes the two step maps adjoint, so their ranks agree."""
    rng = random.Random(6)
    F = parse_polynomial("x0^4+x1^4+x2^4+x3^4 + x0^2*x1*x2", quartic.ring)
    Q = QuotientRing.jacobian(F)
    for _ in range(5):
        xi = random_element(Q, 4, rng)
        assert ivhs_step_map(F, 2, xi, 0).rank() == ivhs_step_map(F, 2, xi, 1).rank()
