"""Seeded random elements and matrices, and the randomized property harnesses.

Every case draws from its own ``random.Random`` seeded by a string built from
the suite seed, the harness name and the case number, so one failing case can
be replayed on its own.
"""

from __future__ import annotations

import random

from .algebra import FreeAlgebra, FreeAlgElem, Poly
from .copeland import build_H, build_S, build_U, direct_power, power_form, rows_equiv
from .matrix import INF, Mat, check_tri_bound, mat_mul, window_eq

ALG = FreeAlgebra(("a", "b", "c"))


def case_rng(seed: int, name: str, case: int) -> random.Random:
    return random.Random(f"{seed}:{name}:{case}")


def random_elem(rng: random.Random, alg: FreeAlgebra = ALG, max_terms: int = 2, max_len: int = 2, coeff: int = 2) -> FreeAlgElem:
    """Small element of the free algebra; may be zero."""
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        w = tuple(rng.randrange(len(alg.names)) for _ in range(rng.randint(0, max_len)))
        terms[w] = terms.get(w, 0) + rng.choice([c for c in range(-coeff, coeff + 1) if c])
    return FreeAlgElem(alg.names, terms)


def random_nonzero_elem(rng: random.Random, alg: FreeAlgebra = ALG, **kw) -> FreeAlgElem:
    while True:
        e = random_elem(rng, alg, **kw)
        if e:
            return e


def random_poly(rng: random.Random, max_deg: int = 4, coeff: int = 3) -> Poly:
    deg = rng.randint(0, max_deg)
    return Poly(tuple(rng.randint(-coeff, coeff) for _ in range(deg + 1)))


def random_dense(rng: random.Random, rows: int, cols: int, alg: FreeAlgebra = ALG) -> Mat:
    return Mat.dense(alg.ops, [[random_elem(rng, alg) for _ in range(cols)] for _ in range(rows)], cols=cols)


def random_lazy(seed: str, k: int, rows=INF, cols=INF, alg: FreeAlgebra = ALG) -> Mat:
    """``k``-lower-triangular matrix whose entries are a pure function of ``(seed, i, j)``."""

    def fn(i, j):
        if i < j + k:
            return alg.zero
        return random_elem(random.Random(f"{seed}:{i}:{j}"), alg)

    return Mat.lazy(alg.ops, rows, cols, fn, tri_bound=k)


def _mutate_tail(rng, A: Mat, first_row: int, alg: FreeAlgebra = ALG) -> Mat:
    """Copy of ``A`` with every row ``>= first_row`` redrawn."""
    data = A.to_rows()
    for u in range(max(first_row, 0), A.rows):
        data[u] = [random_nonzero_elem(rng, alg) + x for x in data[u]]
    return Mat.dense(A.ring, data, cols=A.cols)


# ---------------------------------------------------------------------------
# harnesses: each returns the list of failing case numbers


def harness_equivk_U(seed: int, cases: int = 100) -> list[int]:
    """``A ==_k B`` implies ``U_b A ==_k U_b B``."""
    fails = []
    for c in range(cases):
        rng = case_rng(seed, "equivk_U", c)
        m, k, ell = rng.randint(1, 6), rng.randint(1, 4), rng.randint(1, 3)
        A = random_dense(rng, m, ell)
        B = _mutate_tail(rng, A, m - k + 1)
        a, b = random_elem(rng), random_elem(rng)
        U = build_U(ALG.ops, a, b, m)
        if not (rows_equiv(A, B, k) and rows_equiv(mat_mul(U, A), mat_mul(U, B), k)):
            fails.append(c)
    return fails


def harness_equivk_S(seed: int, cases: int = 100) -> list[int]:
    """``A ==_k B`` implies ``S A ==_{k+1} S B``."""
    fails = []
    for c in range(cases):
        rng = case_rng(seed, "equivk_S", c)
        m, k, ell = rng.randint(1, 6), rng.randint(1, 4), rng.randint(1, 3)
        A = random_dense(rng, m, ell)
        B = _mutate_tail(rng, A, m - k + 1)
        S = build_S(ALG.ops, m)
        if not (rows_equiv(A, B, k) and rows_equiv(mat_mul(S, A), mat_mul(S, B), k + 1)):
            fails.append(c)
    return fails


def harness_equivk_Sc(seed: int, cases: int = 100) -> list[int]:
    """``A ==_k H_c`` implies ``S A ==_{k+1} H_{ac}``."""
    fails = []
    r = ALG.ops
    for c in range(cases):
        rng = case_rng(seed, "equivk_Sc", c)
        m, k = rng.randint(1, 6), rng.randint(1, 4)
        a, cc = random_elem(rng), random_elem(rng)
        Hc = build_H(r, a, cc, m)
        A = _mutate_tail(rng, Hc, m - k + 1)
        ok = rows_equiv(A, Hc, k) and rows_equiv(mat_mul(build_S(r, m), A), build_H(r, a, r.mul(a, cc), m), k + 1)
        if not ok:
            fails.append(c)
    return fails


def harness_genlem(seed: int, cases: int = 100) -> list[int]:
    """``(U_b S)^n H_1 ==_{n+1} H_{(ba)^n}`` for random ``a, b``."""
    fails = []
    r = ALG.ops
    for c in range(cases):
        rng = case_rng(seed, "genlem", c)
        n, m = rng.randint(0, 4), rng.randint(1, 6)
        a, b = random_elem(rng), random_elem(rng)
        left = power_form(r, a, build_U(r, a, b, m), n)
        right = build_H(r, a, direct_power(r, a, b, n), m)
        if not rows_equiv(left, right, n + 1):
            fails.append(c)
    return fails


def _brute_product(A: Mat, B: Mat, i: int, q: int, inner: int):
    """Plain truncated sum over ``j < inner`` of raw entries, no bounds consulted."""
    r = A.ring
    return r.sum(r.mul(A.raw_entry(i, j), B.raw_entry(j, q)) for j in range(inner))


def harness_product_bound(seed: int, cases: int = 100, window: int = 10) -> list[int]:
    """``k``- times ``l``-lower-triangular is ``(k+l)``-lower-triangular.

    The windowed product is compared against a brute-force truncated sum;
    with ``k >= -2`` every nonzero summand of entry ``(i, q)`` has
    ``j <= i + 2``, so ``window + 2`` inner terms cover it.
    """
    fails = []
    for c in range(cases):
        rng = case_rng(seed, "bound", c)
        k, l = rng.randint(-2, 2), rng.randint(-2, 2)
        A = random_lazy(f"{seed}:bound:{c}:A", k)
        B = random_lazy(f"{seed}:bound:{c}:B", l)
        AB = mat_mul(A, B)
        ok = AB.tri_bound == k + l and check_tri_bound(AB, k + l, window)
        for i in range(window):
            for q in range(window):
                brute = _brute_product(A, B, i, q, window + 2)
                if brute != AB.entry(i, q) or (i < q + k + l and brute):
                    ok = False
        if not ok:
            fails.append(c)
    return fails


def harness_associativity(seed: int, cases: int = 100, window: int = 8) -> list[int]:
    """``(AB)C = A(BC)`` on a window, for lazy quasi-lower-triangular triples."""
    fails = []
    for c in range(cases):
        rng = case_rng(seed, "assoc", c)
        ks = [rng.randint(-2, 2) for _ in range(3)]
        A, B, C = (random_lazy(f"{seed}:assoc:{c}:{name}", k) for name, k in zip("ABC", ks))
        left = mat_mul(mat_mul(A, B).memoized(), C)
        right = mat_mul(A, mat_mul(B, C).memoized())
        if not window_eq(left, right, window, window):
            fails.append(c)
    return fails


def _naive_mul(A: Mat, B: Mat) -> Mat:
    r = A.ring
    return Mat.dense(
        r,
        [[_brute_product(A, B, i, q, A.cols) for q in range(B.cols)] for i in range(A.rows)],
        cols=B.cols,
    )


def harness_associativity_finite(seed: int, cases: int = 100, max_dim: int = 5) -> list[int]:
    """Finite shapes up to ``max_dim``; products also checked against the plain triple sum."""
    fails = []
    for c in range(cases):
        rng = case_rng(seed, "assoc_finite", c)
        u, v, w, x = (rng.randint(1, max_dim) for _ in range(4))
        A, B, C = random_dense(rng, u, v), random_dense(rng, v, w), random_dense(rng, w, x)
        AB, BC = mat_mul(A, B), mat_mul(B, C)
        ok = AB == _naive_mul(A, B) and BC == _naive_mul(B, C)
        if not (ok and mat_mul(AB, C) == mat_mul(A, BC)):
            fails.append(c)
    return fails


HARNESSES = {
    "equivk_U": harness_equivk_U,
    "equivk_S": harness_equivk_S,
    "equivk_Sc": harness_equivk_Sc,
    "genlem": harness_genlem,
    "product_bound": harness_product_bound,
    "associativity": harness_associativity,
    "associativity_finite": harness_associativity_finite,
}


def run_property_suite(seed: int, cases: int = 100) -> dict[str, list[int]]:
    return {name: fn(seed, cases) for name, fn in HARNESSES.items()}
