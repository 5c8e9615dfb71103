import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncpascal.algebra import Poly, binomial, commutator, poly_derivative
from ncpascal.copeland import ConfigError, build_S, theorem_rhs
from ncpascal.matrix import INF, mat_mul
from ncpascal.weyl import (
    HEIS,
    A,
    H,
    HeisenbergElem,
    X,
    build_V,
    cor_deriv_ad_check,
    deriv1_check,
    euler_oracle,
    g_of_x,
    heisenberg_mul,
    triv_comm_check,
    verify_copeland,
    verify_u_eq_v,
    weyl_apply,
)

T = Poly.monomial(1)


def mono(i=0, j=0, k=0, c=1):
    return HeisenbergElem.monomial(i, j, k, c)


def closed_form(k, i):
    # a^k x^i = sum_r C(k,r) C(i,r) r! x^(i-r) h^r a^(k-r)
    return HeisenbergElem(
        {(i - r, r, k - r): binomial(k, r) * binomial(i, r) * math.factorial(r) for r in range(min(k, i) + 1)}
    )


def test_defining_relations():
    assert heisenberg_mul(A, X) == X * A + H
    assert A * X * X == X * X * A + 2 * X * H
    assert A * A * X == X * A * A + 2 * H * A
    assert H * A == A * H and H * X == X * H
    assert str(A * X) == "x*a + h"


def test_rendering():
    e = X * X * H * A + 3 * X * H * H
    assert str(e) == "x^2*h*a + 3*x*h^2"
    assert str(HEIS.zero) == "0"
    assert str(HEIS.one - X) == "-x + 1"


def test_reorder_matches_closed_form():
    for k in range(6):
        for i in range(6):
            assert HEIS.pow(A, k) * HEIS.pow(X, i) == closed_form(k, i)


monos = st.tuples(st.integers(0, 3), st.integers(0, 2), st.integers(0, 3))
heis = st.dictionaries(monos, st.integers(-3, 3), max_size=3).map(HeisenbergElem)


@settings(max_examples=120, deadline=None)
@given(heis, heis, heis)
def test_associative_and_distributive(u, v, w):
    assert (u * v) * w == u * (v * w)
    assert u * (v + w) == u * v + u * w
    assert (u + v) * w == u * w + v * w


@settings(max_examples=80, deadline=None)
@given(heis)
def test_h_is_central(u):
    assert H * u == u * H


@settings(max_examples=80, deadline=None)
@given(heis, heis, st.lists(st.integers(-4, 4), max_size=7))
def test_action_is_a_representation(u, v, p):
    q = Poly(tuple(p))
    assert weyl_apply(u * v, q) == weyl_apply(u, weyl_apply(v, q))
    assert weyl_apply(u + v, q) == weyl_apply(u, q) + weyl_apply(v, q)


def test_action_examples():
    assert weyl_apply(A, T**3) == 3 * T**2
    for k in range(7):
        assert weyl_apply(X * A, T**k) == k * T**k
    g = Poly((2, -1, 5))
    assert weyl_apply(H, g) == g


def test_build_V_entries():
    g = Poly((1, 2, 0, 1))
    V = build_V(g, INF)
    assert V.entry(0, 0) == g_of_x(g)
    assert build_V(T**2, 3).entry(2, 0) == 2 * H * H
    assert all(V.entry(i, j) == 0 for i in range(5) for j in range(i + 1, 6))
    assert build_V(T, 2).to_rows() == [[X, 0], [H, X]]


def test_U_equals_V_examples():
    r = verify_u_eq_v(T, 2)
    assert r.ok
    assert verify_u_eq_v(Poly((1,)), 4).ok
    assert build_V(Poly((1,)), 3).to_rows() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    r2 = verify_u_eq_v(T**2, 3)
    assert r2.ok and r2.lhs == r2.rhs == 2 * H * H
    assert verify_u_eq_v(Poly((0, 1, -1, 2)), INF, depth=6).ok


def test_deriv_ad_examples():
    assert cor_deriv_ad_check(T**3, 0).ok
    r = cor_deriv_ad_check(T**3, 1)
    assert r.ok and r.lhs == 3 * X * X * H
    r4 = cor_deriv_ad_check(T**3, 4)
    assert r4.ok and r4.lhs == 0


def test_deriv1_examples():
    assert deriv1_check(T).lhs == X * A + H
    r = deriv1_check(Poly.monomial(0))
    assert r.ok and r.lhs == A
    g = T**2 - 3 * T
    r2 = deriv1_check(g)
    assert r2.ok and r2.rhs == g_of_x(g) * A + (2 * X - 3) * H


def test_triv_comm_examples():
    b = X * X + A
    assert triv_comm_check(b, 0).ok
    r = triv_comm_check(X, 2)
    assert r.ok and r.lhs == H**3
    r2 = triv_comm_check(X * X, 1)
    assert r2.ok and r2.lhs == 2 * X * H * H


def test_ad_of_x_power_by_direct_commutator():
    for i in range(6):
        assert commutator(HEIS, A, HEIS.pow(X, i)) == (i * HEIS.pow(X, i - 1) * H if i else 0)


def test_copeland_examples():
    assert verify_copeland(T, 0, 1).lhs == 1
    r = verify_copeland(T, 2, 3)
    assert r.ok and r.lhs == (X * A) ** 2
    for k in range(9):
        assert weyl_apply(r.rhs, T**k) == k * k * T**k
    r2 = verify_copeland(T**2, 2, 3)
    assert r2.ok and r2.lhs == (X * X * A) ** 2
    r3 = verify_copeland(Poly((1,)), 1, 2)
    assert r3.ok and str(r3.lhs) == str(r3.rhs) == "a"
    with pytest.raises(ConfigError):
        verify_copeland(T, 2, 2)


def test_copeland_infinite_m():
    g = Poly((1, -1, 2))
    V = build_V(g, INF)
    assert theorem_rhs(HEIS, A, V, 3) == HEIS.pow(g_of_x(g) * A, 3)


def test_euler_oracle():
    for n in range(5):
        for k in range(6):
            assert euler_oracle(T, n, T**k) == k**n * T**k
    g = Poly((1, 1))
    assert euler_oracle(g, 1, T**3) == 3 * T**2 + 3 * T**3


def test_VS_is_minus_one_lower_triangular():
    VS = mat_mul(build_V(T**2, INF), build_S(HEIS, INF))
    assert VS.tri_bound == -1
    assert VS.entry(0, 1) == X * X and VS.entry(0, 0) == 0
    assert poly_derivative(T**2, 1) == 2 * T
