import itertools
import random
from fractions import Fraction as F
from math import comb

import pytest

from hcbimod.charcenter import Weight
from hcbimod.errors import InvalidGenerator, NonGenericWeight
from hcbimod.uea import (UEAElement, casimir2, commutator, gen_index, generators, normal_form,
                         straighten)
from hcbimod.verma import (EXTERIOR, V, V_DUAL, _omega_data, casimir_check, dominates, maximal_weight,
                           omega_operator, omega_spectrum_check, tensor_weight_multiset,
                           verma_action, witness_weight_check)
from hcbimod import linalg


def E(n, i, j):
    return UEAElement.gen(n, i, j)


def test_generator_order():
    assert generators(2) == ((2, 1), (1, 1), (2, 2), (1, 2))
    with pytest.raises(InvalidGenerator):
        gen_index(2, 1, 3)


def test_straighten_examples():
    assert straighten([(1, 2), (2, 1)], 2) == E(2, 2, 1) * E(2, 1, 2) + E(2, 1, 1) - E(2, 2, 2)
    assert straighten([(2, 1), (1, 1)], 2).terms == (((0, 1), 1),)
    assert straighten([(1, 1), (1, 2)], 2) == straighten([(1, 2), (1, 1)], 2) + E(2, 1, 2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_relation_soundness(n):
    for (i, j), (k, l) in itertools.product(generators(n), repeat=2):
        lhs = straighten([(i, j), (k, l)], n) - straighten([(k, l), (i, j)], n)
        rhs = UEAElement.scalar(n, 0)
        if j == k:
            rhs = rhs + E(n, i, l)
        if l == i:
            rhs = rhs - E(n, k, j)
        assert lhs == rhs


@pytest.mark.parametrize("n", [2, 3])
def test_confluence(n):
    rng = random.Random(n)
    for _ in range(80):
        word = tuple(rng.randrange(n * n) for _ in range(rng.randint(0, 4)))
        assert normal_form(n, word, "left") == normal_form(n, word, "right")


def test_casimir_examples():
    assert casimir2(1) == E(1, 1, 1) * E(1, 1, 1)
    assert casimir2(2).as_dict()[()] == F(1, 2)
    c3 = casimir2(3)
    assert c3.as_dict()[()] == 2
    plain = sum((straighten([(i, j), (j, i)], 3) for i in range(1, 4) for j in range(1, 4)),
                UEAElement.scalar(3, 0))
    assert c3 - plain == UEAElement.scalar(3, 2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_casimir_central(n):
    c = casimir2(n)
    for i, j in generators(n):
        assert commutator(c, E(n, i, j)).is_zero()


def test_verma_examples():
    lam = Weight.of(3, 1)
    op = verma_action(lam, 2, E(2, 1, 1))
    basis, mat = op.blocks[(0, 0)]
    assert basis == ((),) and mat == [[F(5, 2)]]
    for _, (_, mat) in verma_action(lam, 3, casimir2(2)).items():
        assert linalg.is_scalar(mat, 10)
    # E_12 . (E_21 v) = v
    op = verma_action(lam, 1, E(2, 1, 2))
    basis, mat = op.blocks[None]
    col = basis.index((0,))
    assert mat[basis.index(())][col] == 1


def test_omega_examples():
    rep = omega_spectrum_check((3, 1), 2, V)
    assert rep["status"] == "pass" and rep["eigenvalues"] == ["1", "3"]
    rep = omega_spectrum_check((3, 1), 2, V_DUAL)
    assert rep["status"] == "pass" and set(rep["eigenvalues"]) <= {"1", "3"}
    rep = omega_spectrum_check((4, 1, 0), 2, V)
    assert rep["status"] == "pass" and rep["eigenvalues"] == ["0", "1", "4"]
    for _, (_, mat) in omega_operator((F(7, 2),), 3, V).items():
        assert linalg.is_scalar(mat, F(7, 2))
    with pytest.raises(NonGenericWeight):
        omega_spectrum_check((1, 1), 1, V)


def test_omega_dual_top_block():
    # on the M_{lambda - e_l} highest vectors, Delta(C_2) - C_2 x 1 = -2 lambda_l + 1
    data = _omega_data(Weight.of(3, 1), 1, V_DUAL)
    for _, (_, _, jump) in data.blocks.items():
        ann = linalg.matmul(linalg.shift(jump, 2 * 3 - 1), linalg.shift(jump, 2 * 1 - 1))
        assert linalg.is_zero(ann)


def test_omega_report_shape():
    rep = omega_spectrum_check((2, 0), 1, V)
    for key in ("check", "n", "lambda", "depth", "status", "detail"):
        assert key in rep
    assert rep["lambda"] == ["2", "0"] and rep["n"] == 2 and rep["depth"] == 1


def test_casimir_check_pass():
    assert casimir_check((3, 1), 2)["status"] == "pass"
    assert casimir_check((2, -1, 5), 2)["eigenvalue"] == "30"


def test_tensor_weight_examples():
    assert tensor_weight_multiset(2, 1, 1) == {(0, 0): 2, (1, -1): 1, (-1, 1): 1}
    assert tensor_weight_multiset(3, 0, 0) == {(0, 0, 0): 1}
    assert tensor_weight_multiset(2, 2, 0) == {(2, 0): 1, (1, 1): 1, (0, 2): 1}


@pytest.mark.parametrize("n,r,s", [(n, r, s) for n in range(1, 5) for r in range(3) for s in range(3)])
def test_tensor_weight_counts(n, r, s):
    ws = tensor_weight_multiset(n, r, s)
    assert sum(ws.values()) == comb(n + r - 1, r) * comb(n + s - 1, s)
    top = tuple([r] + [0] * (n - 2) + [-s]) if n > 1 else (r - s,)
    assert maximal_weight(ws) == top


def test_witness_weight_check_examples():
    for n in range(2, 6):
        mu = tuple(range(n))
        lam = (mu[0] + 1,) + mu[1:-1] + (mu[-1] - 1,)
        assert witness_weight_check(lam, mu, 1, 1)
    assert witness_weight_check((3, 1), (3, 1), 0, 0)
    assert not witness_weight_check((5, 1), (3, 1), 1, 0)
    with pytest.raises(ValueError):
        witness_weight_check((1, 2), (1,), 0, 0)


def test_exterior_variant():
    assert witness_weight_check((1, 1, 0), (0, 0, 0), 2, 0, module=EXTERIOR)
    assert not witness_weight_check((1, 1, 0), (0, 0, 0), 2, 0)
    assert dominates((2, 0), (1, 1)) and not dominates((1, 1), (2, 0))
