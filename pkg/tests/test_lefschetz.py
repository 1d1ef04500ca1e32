import random

import pytest

from jacring import (Domain, NotArtinian, QuotientRing, RingDescriptor, find_lefschetz_witness,
                     hf_obstruction, lefschetz_check, linear_form, parse_polynomial)
from jacring.lefschetz import WLP, rank_table, sequence_obstruction
from jacring.ring import random_homogeneous

from test_quotient import cyclic, non_gorenstein


def test_cyclic_algebra_is_slp():
    Q = cyclic(4)
    rep = lefschetz_check(Q, Q.ring.variable(0))
    assert rep.is_witness
    assert rep.top_degree == 3


def test_non_gorenstein_fails_via_hf_gate():
    A = non_gorenstein()
    rep = lefschetz_check(A, parse_polynomial("x0+x1", A.ring))
    assert rep.verdict == "Fails"
    assert rep.failed_at == (0, 2)
    assert "NotSymmetric" in rep.reason
    # the reflection x ell^2 : R_0 -> R_2 has maximal rank 1 but is not an isomorphism
    entry = next(e for e in rep.entries if e.kind == "reflection" and e.k == 0)
    assert entry.rank == entry.expected == 1 and not entry.ok


def test_fermat_quartic_slp_witness(quartic):
    Q = QuotientRing.jacobian(quartic)
    rep = lefschetz_check(Q, parse_polynomial("x0+x1+x2+x3", quartic.ring))
    assert rep.is_witness
    reflections = [e for e in rep.entries if e.kind == "reflection"]
    assert [(e.k, e.m) for e in reflections] == [(0, 8), (1, 6), (2, 4), (3, 2), (4, 0)]
    assert all(e.rank == e.source_dim == e.target_dim for e in reflections)


def test_variable_is_not_lefschetz_for_fermat(quartic):
    Q = QuotientRing.jacobian(quartic)
    rep = lefschetz_check(Q, quartic.ring.variable(0))
    assert rep.verdict == "Fails"


def test_witness_search_examples(quartic):
    w = find_lefschetz_witness(cyclic(3))
    assert w.outcome == "Witness" and w.ell == cyclic(3).ring.variable(0)

    w = find_lefschetz_witness(non_gorenstein())
    assert w.outcome == "Obstructed"
    assert (w.obstruction.verdict, w.obstruction.degree) == ("NotSymmetric", 0)
    assert w.obstruction.hilbert_function == (1, 2, 2)
    assert w.candidates_tested == 0

    Q = QuotientRing.jacobian(quartic)
    w = find_lefschetz_witness(Q, num_samples=8, seed=0)
    assert w.outcome == "Witness"
    assert w.ell == parse_polynomial("x0+x1+x2+x3", quartic.ring)


def test_witness_is_replayable(quintic):
    Q = QuotientRing.jacobian(quintic)
    w = find_lefschetz_witness(Q, num_samples=4, seed=7)
    replay = lefschetz_check(QuotientRing.jacobian(quintic), w.ell)
    assert replay.rank_table() == w.report.rank_table()


@pytest.mark.parametrize("h, verdict, k", [
    ((1, 2, 2), "NotSymmetric", 0),
    ((1, 4, 10, 16, 19, 16, 10, 4, 1), "NoObstruction", None),
    ((1, 3, 2, 3, 1), "NotUnimodal", 2),
])
def test_sequence_obstruction(h, verdict, k):
    obs = sequence_obstruction(h)
    assert (obs.verdict, obs.degree) == (verdict, k)


def test_hf_obstruction_on_rings(quartic):
    assert hf_obstruction(non_gorenstein()).verdict == "NotSymmetric"
    assert hf_obstruction(QuotientRing.jacobian(quartic)).verdict == "NoObstruction"


def test_non_artinian_input_raises(nodal_quartic):
    Q = QuotientRing.jacobian(nodal_quartic)
    with pytest.raises(NotArtinian):
        lefschetz_check(Q, parse_polynomial("x0+x1+x2+x3", nodal_quartic.ring), cap=20)
    with pytest.raises(NotArtinian):
        find_lefschetz_witness(Q, cap=20)


def test_obstruction_is_sound_on_non_gorenstein_grid():
    """Without the gate, every ell = a x + b y still fails SLP."""
    p = 101
    A = non_gorenstein(Domain(p))
    for a in range(p):
        for b in ([1] if a else [0, 1]):
            ell = linear_form(A.ring, [a, b])
            if ell.is_zero:
                continue
            rep = lefschetz_check(A, ell, hf_gate=False)
            assert rep.verdict == "Fails", (a, b)


def test_wlp_mode_only_checks_steps(quartic):
    Q = QuotientRing.jacobian(quartic)
    rep = lefschetz_check(Q, parse_polynomial("x0+2*x1+3*x2+5*x3", quartic.ring), WLP)
    assert rep.is_witness
    assert {e.m for e in rep.entries} == {1}
    assert len(rep.entries) == 8


def test_threads_give_identical_tables(quartic):
    Q = QuotientRing.jacobian(quartic)
    ell = parse_polynomial("x0+2*x1+3*x2+5*x3", quartic.ring)
    a = lefschetz_check(Q, ell, threads=1).rank_table()
    b = lefschetz_check(QuotientRing.jacobian(quartic), ell, threads=4).rank_table()
    assert a == b


def test_random_smooth_ternary_is_slp():
    R = RingDescriptor(3)
    F = random_homogeneous(R, 5, random.Random(5))
    w = find_lefschetz_witness(QuotientRing.jacobian(F), num_samples=2, seed=1)
    assert w.outcome == "Witness"


def test_rank_table_matches_direct_power(quartic):
    Q = QuotientRing.jacobian(quartic)
    ell = parse_polynomial("x0+2*x1+3*x2+5*x3", quartic.ring)
    table = rank_table(Q, ell, [(k, m) for k in range(9) for m in range(9 - k)])
    for e in table:
        assert e.rank == Q.multiplication_matrix(ell ** e.m, e.k, degree=e.m).rank()
