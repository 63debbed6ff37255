import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import small_fracs
from hcbimod.charcenter import CentralCharacter, character_from_weight
from hcbimod.errors import NeedMoreOrders, NonIntegerWeight, NotPureExponential, RankExceedsBound
from hcbimod.expsum import (INCONCLUSIVE, NO_WITNESS_WITHIN_BOUND, NONZERO_WITNESS,
                            NOT_EXPONENTIAL_FORM, ExponentialPolynomial, decide_difference,
                            decide_nonvanishing, hankel_rank_and_recurrence,
                            recover_exponential_polynomial, witness_from_exponential_polynomial)
from hcbimod.newton import power_sums_from_poly
from hcbimod.roundtrip import random_witness, roundtrip_case
from hcbimod.series import (MomentSequence, divide_by_expm1, moments_from_witness,
                            multiply_by_expm1, signed_power_sums)
from hcbimod.witness import Witness


def seq(*v):
    return tuple(F(x) for x in v)


def annihilates(q, t):
    rho = len(q) - 1
    qa = q[::-1]
    return all(sum(qa[a] * t[m + a] for a in range(rho + 1)) == 0 for m in range(len(t) - rho))


# -- kernel ------------------------------------------------------------------

def test_kernel_examples():
    k = hankel_rank_and_recurrence(seq(2, 3, 5, 9, 17, 33), 2)
    assert (k.rank, k.q, k.square_free) == (2, (1, -3, 2), True)
    k = hankel_rank_and_recurrence(seq(0, 0, 0, 0), 2)
    assert (k.rank, k.q) == (0, (1,))
    k = hankel_rank_and_recurrence(seq(0, 1, 0, 0, 0, 0), 2)
    assert (k.rank, k.q, k.square_free) == (2, (1, 0, 0), False)


def test_kernel_needs_2L_terms():
    with pytest.raises(NeedMoreOrders) as exc:
        hankel_rank_and_recurrence(seq(1, 2, 3), 2)
    assert exc.value.required == 4


def test_kernel_rank_exceeded():
    k = hankel_rank_and_recurrence(seq(1, 0, 0, 0, 0, 1), 2)
    assert k.exceeds_bound


# -- recovery ----------------------------------------------------------------

def test_recover_examples():
    ep = recover_exponential_polynomial(seq(2, 3, 5, 9), 2)
    assert ep.exact_terms == (((1, -2), 1), ((1, -1), 1))
    ep = recover_exponential_polynomial(seq(0, 5, 15, 65), 2)
    assert witness_from_exponential_polynomial(ep) == Witness((4,), (-1,))
    with pytest.raises(NonIntegerWeight):
        recover_exponential_polynomial(seq(F(1, 2), 0, 0, 0), 1)


def test_recover_errors():
    with pytest.raises(NotPureExponential):
        recover_exponential_polynomial(seq(0, 1, 2, 3, 4, 5), 2)  # t_j = j
    with pytest.raises(RankExceedsBound):
        recover_exponential_polynomial(seq(1, 0, 0, 0, 0, 1), 2)


def test_witness_from_ep_examples():
    ep = ExponentialPolynomial(exact_terms=(((1, -1), 1), ((1, -2), 1)))
    w = witness_from_exponential_polynomial(ep)
    assert (w.B, w.C, w.r, w.s) == ((1, 2), (), 2, 0)
    ep = ExponentialPolynomial(exact_terms=(((1, 0), 2),))
    w = witness_from_exponential_polynomial(ep)
    assert (w.B, w.r) == ((0, 0), 2)


def test_algebraic_nodes_kept_whole():
    # e^{sqrt2 u} + e^{-sqrt2 u}
    t = tuple(power_sums_from_poly((1, 0, -2), 7))
    ep = recover_exponential_polynomial(t, 3)
    assert ep.exact_terms == (((1, 0, -2), 1),)
    w = witness_from_exponential_polynomial(ep)
    assert w.B == () and w.r == 2 and w.algebraic[0].poly == (1, 0, -2)
    dec = decide_difference(multiply_by_expm1(t), 3)
    assert dec.status == NONZERO_WITNESS and dec.witness.algebraic


def test_approx_recovery_float_input():
    t = tuple(complex(3.0 ** j - 0.5 ** j) for j in range(8))
    ep = recover_exponential_polynomial(t, 3)
    nodes = [(round(x.real, 9), m) for x, m in ep.approx_terms]
    assert nodes == [(0.5, -1), (3.0, 1)]


# -- decide ------------------------------------------------------------------

def test_decide_examples():
    chi = CentralCharacter.from_moments([0, 10, 60, 370, 2100])
    psi = CentralCharacter.from_moments([0] * 5)
    dec = decide_nonvanishing(chi, psi, 2)
    assert dec.status == NONZERO_WITNESS
    assert dec.witness == Witness((4,), (-1,))
    assert dec.verified_order == 5


def test_decide_equal_characters():
    chi = character_from_weight((3, 1, 4), 9)
    dec = decide_nonvanishing(chi, chi, 4)
    assert dec.status == NONZERO_WITNESS and dec.witness.is_empty
    assert (dec.witness.r, dec.witness.s) == (0, 0)


def test_decide_bernoulli():
    d = MomentSequence(seq(1, *[0] * 9))
    assert decide_difference(d, 3).status == NO_WITNESS_WITHIN_BOUND


def test_decide_inconclusive_below_2L_plus_1():
    d = MomentSequence(seq(0, 10, 60))
    dec = decide_difference(d, 2)
    assert dec.status == INCONCLUSIVE and dec.witness is None


def test_decide_non_integer_weight():
    d = multiply_by_expm1(seq(F(1, 2), F(1, 2), F(1, 2), F(1, 2), F(1, 2)))
    assert decide_difference(d, 2).status == NOT_EXPONENTIAL_FORM


def test_decide_rejects_float_in_exact_mode():
    with pytest.raises(ValueError):
        decide_difference(MomentSequence((complex(1), complex(2), complex(3))), 1)


def test_decision_json_shape():
    dec = decide_difference(moments_from_witness([4], [-1], 5), 2)
    out = dec.to_json()
    assert out["status"] == NONZERO_WITNESS
    assert out["witness"] == {"B": ["4"], "C": ["-1"], "algebraic": []}
    assert out["verified_order"] == 5 and out["rank"] == 2


# -- properties --------------------------------------------------------------

@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_roundtrip_property(seed):
    w = random_witness(random.Random(seed), nonempty=False)
    dec = roundtrip_case(w)
    assert dec.status == NONZERO_WITNESS
    assert dec.witness == w


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(small_fracs, st.integers(-3, 3)), max_size=5))
def test_rank_bound_and_annihilation(terms):
    nodes = {}
    for x, m in terms:
        nodes[x] = nodes.get(x, 0) + m
    distinct = len(nodes)
    reduced = sum(1 for m in nodes.values() if m)
    t = tuple(sum((m * x ** j for x, m in nodes.items()), F(0)) for j in range(2 * distinct + 2))
    k = hankel_rank_and_recurrence(t, max(distinct, 1))
    assert k.rank <= distinct
    assert k.rank == reduced
    assert annihilates(k.q, t)


def _brute_force_witnesses(L):
    """Integer exponential polynomials with <= L nodes in -3..3, 0 < |weight| <= 2."""
    weights = (-2, -1, 1, 2)
    for size in range(L + 1):
        for nodes in itertools.combinations(range(-3, 4), size):
            for ws in itertools.product(weights, repeat=size):
                yield nodes, ws


def _brute_force_match(t, L):
    for nodes, ws in _brute_force_witnesses(L):
        if all(sum(m * F(x) ** j for x, m in zip(nodes, ws)) == tj for j, tj in enumerate(t)):
            return nodes, ws
    return None


def test_necessity_against_brute_force():
    rng = random.Random(7)
    L = 2
    negatives = positives = 0
    for _ in range(60):
        size = rng.randint(1, 2)
        nodes = rng.sample(range(-3, 4), size)
        ws = [rng.choice((-2, -1, 1, 2)) for _ in nodes]
        t = [sum(m * F(x) ** j for x, m in zip(nodes, ws)) for j in range(2 * L + 2)]
        if rng.random() < 0.6:
            t[rng.randrange(len(t))] += rng.choice((-1, 1, F(1, 2)))
        d = multiply_by_expm1(t)
        dec = decide_difference(d, L)
        found = _brute_force_match(tuple(t), L)
        if dec.status == NONZERO_WITNESS:
            positives += 1
            assert moments_from_witness(dec.witness.B, dec.witness.C, d.order) == d
        else:
            negatives += 1
            assert found is None
        if found is not None:
            assert dec.status == NONZERO_WITNESS
    assert negatives and positives


def test_float_mode_agrees_with_exact():
    rng = random.Random(3)
    for _ in range(25):
        w = random_witness(rng)
        exact = roundtrip_case(w, "exact")
        approx = roundtrip_case(w, "float")
        assert exact.witness == w
        got = approx.witness
        assert len(got.B) == len(w.B) and len(got.C) == len(w.C)
        for a, b in zip(got.B + got.C, w.B + w.C):
            assert abs(complex(a) - complex(b)) <= 1e-9
