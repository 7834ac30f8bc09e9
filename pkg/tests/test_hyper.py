import json
import math
import random
from fractions import Fraction
from itertools import permutations

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hyperjack.exact import ParameterError
from hyperjack.hyper import (
    AlternatingArray,
    FullyAntisymmetricArray,
    HyperArray,
    ValidationError,
    barvinok_hpf,
    cauchy_binet_check,
    cauchy_binet_sides,
    debruijn_check,
    det,
    embed_hdet_to_hpf,
    embed_hpf_to_barvinok,
    hdet,
    hdet_numeric,
    hper,
    hpf,
    paired_column_check,
    perm_sign,
    pfaffian,
    random_alternating,
    random_array,
)

seeds = st.integers(0, 10_000)


def leibniz(mat):
    n = len(mat)
    return sum(perm_sign(p) * math.prod(mat[i][p[i]] for i in range(n)) for p in permutations(range(n)))


def pf_expansion(a):
    """Pfaffian by expansion along the first row."""
    n = len(a)
    if n == 0:
        return 1
    total = 0
    for j in range(1, n):
        if a[0][j] == 0:
            continue
        rest = [k for k in range(1, n) if k != j]
        sub = [[a[r][c] for c in rest] for r in rest]
        total += (-1) ** (j + 1) * a[0][j] * pf_expansion(sub)
    return total


def random_skew(side, rng):
    a = [[Fraction(0)] * side for _ in range(side)]
    for i in range(side):
        for j in range(i + 1, side):
            v = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
            a[i][j], a[j][i] = v, -v
    return a


def test_det_examples():
    assert hdet(HyperArray(2, 2, [1, 2, 3, 4])) == -2
    assert det([[1, 2], [3, 4]]) == -2


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("order", [2, 4])
def test_constant_array_vanishes(n, order):
    assert hdet(HyperArray(order, n, [Fraction(7, 3)] * n**order)) == 0


def test_toeplitz_ones_example():
    A = HyperArray.from_function(4, 2, lambda a, b, c, d: 1)
    assert hdet(A) == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_order_two_is_determinant(n):
    rng = random.Random(n)
    mat = [[Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)] for _ in range(n)]
    A = HyperArray(2, n, [x for row in mat for x in row])
    assert hdet(A) == leibniz(mat)
    assert hdet(A, "collapse") == leibniz(mat)
    if n <= 4:
        assert hdet(A, "naive") == leibniz(mat)


@pytest.mark.parametrize("order,side", [(4, 2), (4, 3), (6, 2)])
@given(seed=seeds)
def test_hdet_methods_agree(order, side, seed):
    A = random_array(order, side, seed)
    naive = hdet(A, "naive")
    assert hdet(A, "fixed") == naive
    assert hdet(A, "collapse") == naive


@given(seed=seeds)
def test_hdet_numeric_matches_exact(seed):
    A = random_array(4, 3, seed)
    exact = hdet(A)
    approx = hdet_numeric(A.to_numpy(float).reshape((3,) * 4))
    assert abs(approx - float(exact)) <= 1e-9 * max(1.0, abs(float(exact)))


@pytest.mark.parametrize("side", [2, 3])
@given(seed=seeds, slot=st.integers(0, 3))
def test_multilinear_in_a_slice(side, seed, slot):
    rng = random.Random(seed)
    A, B = random_array(4, side, seed), random_array(4, side, seed + 1)
    a, b = Fraction(rng.randint(-4, 4), 3), Fraction(rng.randint(-4, 4), 2)
    k = rng.randint(1, side)

    def mix(*idx):
        if idx[slot] == k:
            return a * A[idx] + b * B[idx]
        return A[idx]

    def swap_in(*idx):
        return B[idx] if idx[slot] == k else A[idx]

    lhs = hdet(HyperArray.from_function(4, side, mix))
    rhs = a * hdet(A) + b * hdet(HyperArray.from_function(4, side, swap_in))
    assert lhs == rhs


@pytest.mark.parametrize("side", [2, 3])
@given(seed=seeds)
def test_alternating_in_first_slot(side, seed):
    A = random_array(4, side, seed)
    swap = {1: 2, 2: 1}

    def swapped(i, *rest):
        return A[(swap.get(i, i),) + rest]

    assert hdet(HyperArray.from_function(4, side, swapped)) == -hdet(A)


def test_hper_examples():
    assert hper(HyperArray(2, 2, [1, 2, 3, 4])) == 10
    for order, n in [(1, 3), (2, 3), (3, 2), (4, 2)]:
        assert hper(HyperArray(order, n, [1] * n**order)) == math.factorial(n) ** (order - 1)
    assert hper(HyperArray(1, 3, [2, Fraction(1, 2), 5])) == 5


def test_hpf_small_examples():
    a = Fraction(5, 7)
    assert hpf(AlternatingArray(2, 2, [0, a, -a, 0])) == a
    rng = random.Random(4)
    b = random_skew(4, rng)
    B = AlternatingArray(2, 4, [x for row in b for x in row])
    expect = b[0][1] * b[2][3] - b[0][2] * b[1][3] + b[0][3] * b[1][2]
    assert hpf(B) == expect == hpf(B, "naive")


@pytest.mark.parametrize("side", [2, 4, 6])
@given(seed=seeds)
def test_hpf_order_two_is_pfaffian(side, seed):
    b = random_skew(side, random.Random(seed))
    B = AlternatingArray(2, side, [x for row in b for x in row])
    assert hpf(B) == pf_expansion(b) == pfaffian(b)


@pytest.mark.parametrize("order,side", [(4, 4), (6, 4)])
@given(seed=seeds)
def test_hpf_methods_agree(order, side, seed):
    B = random_alternating(order, side, seed)
    assert hpf(B, "fixed") == hpf(B, "naive")


def test_alternating_validation():
    with pytest.raises(ValidationError):
        AlternatingArray(2, 2, [0, 1, 1, 0])
    with pytest.raises(ValidationError):
        AlternatingArray(2, 2, [1, 0, 0, 0])
    entries = list(random_alternating(2, 6, 0).entries)
    entries[1] += 1
    with pytest.raises(ValidationError):
        AlternatingArray(2, 6, entries)


def test_fully_antisymmetric_validation():
    B = random_alternating(4, 2, 3)
    with pytest.raises(ValidationError):
        FullyAntisymmetricArray(4, 4, [1] * 4**4)
    M = embed_hpf_to_barvinok(B)
    assert isinstance(M, FullyAntisymmetricArray)


def test_embed_smallest():
    a = Fraction(-3, 4)
    B = embed_hdet_to_hpf(HyperArray(2, 1, [a]))
    assert list(B.entries) == [0, a, -a, 0]
    assert hpf(B) == a


@given(seed=seeds)
def test_embed_order_two_is_determinant(seed):
    A = random_array(2, 2, seed)
    assert hpf(embed_hdet_to_hpf(A)) == hdet(A) == A[1, 1] * A[2, 2] - A[1, 2] * A[2, 1]


@pytest.mark.parametrize("order,side", [(4, 2), (2, 3), (6, 1)])
@given(seed=seeds)
def test_embed_hdet_commutes(order, side, seed):
    A = random_array(order, side, seed)
    assert hpf(embed_hdet_to_hpf(A)) == hdet(A, "naive")


def test_barvinok_order_two_is_hpf():
    B = random_alternating(2, 6, 11)
    M = FullyAntisymmetricArray(2, 6, B.entries)
    assert barvinok_hpf(M) == hpf(B)


def test_barvinok_single_block():
    M = embed_hpf_to_barvinok(random_alternating(4, 2, 5))
    assert barvinok_hpf(M) == M[1, 2, 3, 4]


@pytest.mark.parametrize("order,side", [(4, 2), (4, 4)])
@given(seed=seeds)
def test_embed_barvinok_commutes(order, side, seed):
    B = random_alternating(order, side, seed)
    M = embed_hpf_to_barvinok(B)
    assert M.side == order // 2 * side
    assert barvinok_hpf(M) == hpf(B)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_embed_barvinok_order_six(seed):
    B = random_alternating(6, 2, seed)
    assert barvinok_hpf(embed_hpf_to_barvinok(B)) == hpf(B)


def test_barvinok_canonical_matches_full_sum():
    M = embed_hpf_to_barvinok(random_alternating(4, 4, 8))
    assert barvinok_hpf(M, canonical=True) == barvinok_hpf(M, canonical=False)


def test_embed_barvinok_order_two_identity():
    B = random_alternating(2, 4, 2)
    assert embed_hpf_to_barvinok(B).entries == B.entries


def _fn_table(rows, cols, X, rng, bound=3):
    tables = [[{x: rng.randint(-bound, bound) for x in X} for _ in range(cols)] for _ in range(rows)]
    return [[t.__getitem__ for t in row] for row in tables]


def test_cauchy_binet_classical():
    rng = random.Random(0)
    X = range(3)
    phi = _fn_table(2, 2, X, rng, 5)
    lhs, rhs = cauchy_binet_sides(phi, X, 1, 2)
    a = [[phi[0][j](x) for x in X] for j in range(2)]
    b = [[phi[1][j](x) for x in X] for j in range(2)]
    prod_ab = [[sum(a[i][k] * b[j][k] for k in range(3)) for j in range(2)] for i in range(2)]
    assert lhs == rhs == leibniz(prod_ab)


@given(seed=seeds)
def test_cauchy_binet_order_four(seed):
    rng = random.Random(seed)
    X = range(3)
    assert cauchy_binet_check(_fn_table(4, 2, X, rng), X, 2, 2)


def test_cauchy_binet_monomials():
    X = range(4)
    phi = [[(lambda x, j=j: Fraction(x) ** j) for j in range(2)] for _ in range(4)]
    assert cauchy_binet_check(phi, X, 2, 2)


def _eps(X, rng):
    table = {}
    for x in X:
        for y in X:
            if x < y:
                v = rng.randint(-3, 3)
                table[x, y], table[y, x] = v, -v
            elif x == y:
                table[x, y] = 0
    return lambda a, b: table[a, b]


@pytest.mark.parametrize("m,n,size", [(1, 1, 2), (1, 2, 4), (3, 1, 3)])
@given(seed=seeds)
def test_debruijn(m, n, size, seed):
    rng = random.Random(seed)
    X = range(size)
    assert debruijn_check(_fn_table(m, 2 * n, X, rng), _eps(X, rng), X, m, n)


def test_debruijn_rejects_even_m():
    X = range(2)
    rng = random.Random(0)
    with pytest.raises(ParameterError):
        debruijn_check(_fn_table(2, 2, X, rng), _eps(X, rng), X, 2, 1)


def test_debruijn_rejects_symmetric_eps():
    X = range(2)
    with pytest.raises(ValueError):
        debruijn_check(_fn_table(1, 2, X, random.Random(0)), lambda a, b: 1, X, 1, 1)


@pytest.mark.parametrize("m,n,size", [(1, 1, 2), (1, 2, 3), (2, 1, 3)])
@given(seed=seeds)
def test_paired_column(m, n, size, seed):
    rng = random.Random(seed)
    X = range(size)
    assert paired_column_check(_fn_table(2 * m, 2 * n, X, rng), X, m, n)


@given(seed=seeds)
def test_array_json_round_trip(seed):
    A = random_array(4, 2, seed)
    obj = json.loads(json.dumps(A.to_json()))
    assert obj["order"] == 4 and obj["side"] == 2 and len(obj["entries"]) == 16
    assert HyperArray.from_json(obj).entries == A.entries
    B = random_alternating(4, 4, seed)
    assert AlternatingArray.from_json(json.loads(json.dumps(B.to_json()))).entries == B.entries


def test_numpy_round_trip():
    arr = np.arange(16).reshape(2, 2, 2, 2)
    A = HyperArray.from_numpy(arr)
    assert A[1, 2, 1, 2] == arr[0, 1, 0, 1]
    assert (A.to_numpy(int).reshape(arr.shape) == arr).all()


def test_odd_order_rejected():
    with pytest.raises(ValueError):
        hdet(HyperArray(3, 2, [1] * 8))


def test_generic_ring_entries():
    from hyperjack.exact import LaurentPoly

    x = [LaurentPoly.var(i, 4) for i in range(4)]
    A = HyperArray(2, 2, x)
    assert hdet(A) == x[0] * x[3] - x[1] * x[2]
    assert hdet(A, "naive") == hdet(A)
