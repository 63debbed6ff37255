from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import node_lists, small_fracs
from hcbimod.series import (CHARACTER, DIFFERENCE, MomentSequence, close, divide_by_expm1,
                            format_scalar, moments_from_witness, multiply_by_expm1, parse_scalar,
                            pbar_eval, pk_eval, signed_power_sums)


def test_pk_small_values():
    assert pk_eval(1, F(7, 3)) == 1
    assert pk_eval(0, 11) == 0
    assert pk_eval(2, 3) == 7


def test_pbar_small_values():
    assert pbar_eval(1, F(-2, 5)) == -1
    assert pbar_eval(2, 3) == -5


def test_pbar_is_shifted_pk():
    for k in range(11):
        for c in range(-2, 3):
            assert pbar_eval(k, c) == -pk_eval(k, c - 1)


def test_negative_k_rejected():
    with pytest.raises(ValueError):
        pk_eval(-1, 2)


def test_moments_examples():
    assert moments_from_witness([2], [], 3).values == (1, 5, 19)
    assert moments_from_witness([], [], 4).values == (0, 0, 0, 0)
    assert moments_from_witness([4], [-1], 4).values == (0, 10, 60, 370)


def test_divide_examples():
    d = lambda *v: MomentSequence(v, DIFFERENCE)
    assert divide_by_expm1(d(1, 1, 1, 1)).coeffs == (1, 0, 0, 0)
    assert divide_by_expm1(d(0, 0, 0)).coeffs == (0, 0, 0)
    assert divide_by_expm1(d(0, 10, 60, 370)).coeffs == (0, 5, 15, 65)


def test_divide_needs_difference_kind():
    with pytest.raises(ValueError):
        divide_by_expm1(MomentSequence((1, 2), CHARACTER))


@given(small_fracs, st.integers(1, 12))
def test_egf_identity(b, K):
    d = MomentSequence(tuple(pk_eval(k, b) for k in range(1, K + 1)))
    assert divide_by_expm1(d).coeffs == tuple(b ** j for j in range(K))


@given(small_fracs, st.integers(1, 12))
def test_dual_egf_identity(c, K):
    d = MomentSequence(tuple(pbar_eval(k, c) for k in range(1, K + 1)))
    assert divide_by_expm1(d).coeffs == tuple(-(c - 1) ** j for j in range(K))


@given(node_lists, node_lists, node_lists, node_lists, st.integers(1, 8))
def test_linearity(B1, C1, B2, C2, K):
    whole = moments_from_witness(B1 + B2, C1 + C2, K)
    assert whole == moments_from_witness(B1, C1, K) + moments_from_witness(B2, C2, K)


@given(node_lists, node_lists, st.integers(1, 10))
def test_roundtrip_to_power_sums(B, C, K):
    t = divide_by_expm1(moments_from_witness(B, C, K)).coeffs
    assert t == signed_power_sums(B, C, K)
    assert multiply_by_expm1(t) == moments_from_witness(B, C, K)


@given(node_lists, node_lists, small_fracs, st.integers(1, 8))
def test_cancellation(B, C, x, K):
    assert moments_from_witness(B + [x], C + [x], K) == moments_from_witness(B, C, K)


def test_t0_is_r_minus_s():
    t = divide_by_expm1(moments_from_witness([1, 2, 3], [5], 4))
    assert t[0] == 2


def test_scalar_parsing():
    assert parse_scalar("3/6") == F(1, 2)
    assert parse_scalar(4) == F(4)
    with pytest.raises(TypeError):
        parse_scalar(0.5, "exact")
    assert parse_scalar(0.5, "float") == 0.5
    assert parse_scalar([1.0, 2.0], "float") == complex(1, 2)
    assert parse_scalar("1/3", "float") == F(1, 3)


def test_scalar_formatting():
    assert format_scalar(F(-3, 4)) == "-3/4"
    assert format_scalar(F(6, 2)) == "3"
    assert format_scalar(complex(1.5, 0)) == [1.5, 0.0]


def test_close_mixed():
    assert close(F(1, 3), 1 / 3)
    assert not close(1.0, 1.1)
    assert not close(F(1, 3), F(1, 3) + F(1, 10 ** 12))
