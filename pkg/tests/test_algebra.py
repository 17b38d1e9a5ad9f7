from itertools import product
from math import gcd

import pytest
import sympy
from sympy.matrices.normalforms import smith_normal_form
from hypothesis import given, strategies as st

from cupcube.algebra import (
    FiniteGroup, GModule, ModuleError, QuotRing, check_generators, gmodule_check, kernel_mod,
    snf, solve_mod, span_mod,
)
from cupcube.algebra.linalg import det, diagonal, matmul, vecmat


def check_snf(A):
    U, S, V = snf(A)
    assert matmul(matmul(U, A), V) == S
    assert abs(det(U)) == 1 and abs(det(V)) == 1
    d = diagonal(S)
    r, c = len(A), len(A[0])
    for i in range(r):
        for j in range(c):
            if i != j:
                assert S[i][j] == 0
    assert all(v >= 0 for v in d)
    for a, b in zip(d, d[1:]):
        assert (b == 0) if a == 0 else b % a == 0
    return d


def brute_kernel(A, n):
    r = len(A)
    c = len(A[0]) if A else 0
    return {x for x in product(range(n), repeat=r)
            if all(sum(x[i] * A[i][j] for i in range(r)) % n == 0 for j in range(c))}


matrices = st.integers(1, 6).flatmap(lambda r: st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(st.integers(-50, 50), min_size=c, max_size=c),
                       min_size=r, max_size=r)))


@pytest.mark.parametrize("A, d", [
    ([[1, 0], [0, 1]], [1, 1]),
    ([[2, 4], [6, 8]], [2, 4]),
    ([[0, 0, 0], [0, 0, 0]], [0, 0]),
])
def test_snf_examples(A, d):
    assert check_snf(A) == d


@given(matrices)
def test_snf_postconditions(A):
    check_snf(A)


@given(matrices)
def test_snf_matches_sympy(A):
    d = check_snf(A)
    ref = smith_normal_form(sympy.Matrix(A), domain=sympy.ZZ)
    want = [abs(int(ref[i, i])) for i in range(min(len(A), len(A[0])))]
    assert sorted(d) == sorted(want)


def test_kernel_examples():
    K = kernel_mod([[2]], 4)
    assert K.gens == [[2]] and K.orders == [2]
    assert kernel_mod([[1, 0], [0, 1]], 7).gens == []
    K = kernel_mod([[1, 1], [1, 1]], 2)
    assert set(map(tuple, K.elements())) == {(0, 0), (1, 1)}
    assert K.orders == [2]


small = st.sampled_from([2, 3, 4, 6]).flatmap(lambda n: st.tuples(
    st.just(n),
    st.integers(1, 3).flatmap(lambda r: st.integers(1, 3).flatmap(
        lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c),
                           min_size=r, max_size=r)))))


@given(small)
def test_kernel_is_brute_force(case):
    n, A = case
    K = kernel_mod(A, n)
    got = {tuple(x) for x in K.elements()}
    assert got == brute_kernel(A, n)
    assert len(got) == K.size
    for x in got:
        assert K.combine(K.coords(list(x))) == list(x)


@given(small)
def test_span_and_solve(case):
    n, A = case
    vectors = [list(row) for row in A]
    dim = len(A[0])
    S = span_mod(vectors, n, dim)
    want = {tuple(sum(c * v[j] for c, v in zip(cs, vectors)) % n for j in range(dim))
            for cs in product(range(n), repeat=len(vectors))}
    assert {tuple(x) for x in S.elements()} == want
    for b in product(range(n), repeat=dim):
        x = solve_mod(A, list(b), n)
        assert (x is not None) == (tuple(b) in want)
        if x is not None:
            assert vecmat(x, A, n) == list(b)


def test_ring_arithmetic():
    R = QuotRing(5)
    assert (R(1, 1) * R(1, 1)) == R.t
    for n in (2, 3, 4, 5, 9):
        R = QuotRing(n)
        assert R.t ** 3 == R.one
    R = QuotRing(2)
    assert R.t * R.t == R(1, 1)


@given(st.integers(2, 12), st.data())
def test_ring_axioms(n, data):
    R = QuotRing(n)
    el = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).map(lambda c: R(*c))
    a, b, c = data.draw(el), data.draw(el), data.draw(el)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert R.galois(a * b) == R.galois(a) * R.galois(b)
    assert R.galois(R.galois(a)) == a
    if a.is_unit():
        assert a * a.inverse() == R.one


def test_units_count():
    # A = F_4 for n = 2, F_3[t]/(t-1)^2 for n = 3, F_25 for n = 5, F_7 x F_7 for n = 7
    assert [len(QuotRing(n).units) for n in (2, 3, 5, 7)] == [3, 6, 24, 36]


def test_mul_matrix_is_multiplication():
    R = QuotRing(4)
    for a, x in product(R.elements(), repeat=2):
        m = R.mul_matrix(a)
        y = vecmat(list(x.coeffs), m, 4)
        assert tuple(y) == (x * a).coeffs


def test_group_tables():
    S3 = FiniteGroup.symmetric(3)
    assert S3.order == 6 and not S3.is_abelian()
    Z3 = FiniteGroup.cyclic(3)
    t = Z3.element("t")
    assert Z3.power(t, 3) == 0 and Z3.is_abelian()
    for g, h in product(range(6), repeat=2):
        assert S3.mul(g, S3.inverse(g)) == 0
        assert S3.conj(g, h) == S3.mul(S3.inverse(h), g, h)


def test_module_examples():
    G = FiniteGroup.cyclic(3)
    assert check_generators(G, 2, 2, {"t": [[0, 1], [1, 1]]}) is None
    assert check_generators(G, 2, 2, {"t": [[1, 0], [0, 1]]}) is None
    err = check_generators(G, 2, 2, {"t": [[1, 1], [0, 1]]})
    assert err and "well defined" in err
    with pytest.raises(ModuleError):
        GModule.from_generators(G, 2, 2, {"t": [[1, 1], [0, 1]]})


def test_permutation_module_is_a_module():
    G = FiniteGroup.from_permutations({"a": (1, 2, 0, 3), "b": (1, 0, 3, 2)})
    assert G.order == 12
    M = GModule.permutation(G, 5)
    assert gmodule_check(M) is None
    for g, h in product(range(G.order), repeat=2):
        x = [1, 2, 3, 4]
        assert M.act(M.act(x, g), h) == M.act(x, G.mul(g, h))


def test_gcd_orders_divide_n():
    K = kernel_mod([[2, 0], [0, 3]], 12)
    assert all(12 % o == 0 for o in K.orders)
    assert K.size == gcd(2, 12) * gcd(3, 12)
