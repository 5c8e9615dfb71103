"""The Heisenberg algebra on ``x, h, a`` with ``[a, x] = h`` and ``h`` central,
its action on ``Z[t]`` (``a = d/dt``, ``x = t*``, ``h = id``), the matrix
``V_g`` and checks of the derivative form of the power identity.

Elements are kept in the PBW basis ``x^i h^j a^k``.
"""

from __future__ import annotations

import time
from functools import lru_cache

from .algebra import Poly, ad_power, commutator, poly_derivative, poly_eval_in_ring, ring_of
from .copeland import (
    DEFAULT_CHECK_DEPTH,
    Check,
    ConfigError,
    VerifyReport,
    build_U,
    lower_from_table,
    theorem_rhs,
)
from .matrix import Mat, dim_str, is_finite

Monomial = tuple[int, int, int]


def _mono_key(mono: Monomial):
    return (-sum(mono), tuple(-e for e in mono))


def _accumulate(out: dict, mono: Monomial, c: int):
    s = out.get(mono, 0) + c
    if s:
        out[mono] = s
    else:
        out.pop(mono, None)


@lru_cache(maxsize=None)
def _a_past_x(i: int) -> tuple[tuple[Monomial, int], ...]:
    """Normal form of ``a x^i``, built from ``a x = x a + h`` one ``x`` at a time.

    ``a x^i = x (a x^{i-1}) + h x^{i-1}``.
    """
    if i == 0:
        return (((0, 0, 1), 1),)
    out: dict = {}
    for (p, q, r), c in _a_past_x(i - 1):
        _accumulate(out, (p + 1, q, r), c)
    _accumulate(out, (i - 1, 1, 0), 1)
    return tuple(out.items())


@lru_cache(maxsize=None)
def _reorder(k: int, i: int) -> tuple[tuple[Monomial, int], ...]:
    """Normal form of ``a^k x^i`` as ``a^{k-1} (a x^i)``."""
    if k == 0 or i == 0:
        return (((i, 0, k), 1),)
    out: dict = {}
    for (p, q, r), c in _a_past_x(i):
        for (p2, q2, r2), c2 in _reorder(k - 1, p):
            _accumulate(out, (p2, q2 + q, r2 + r), c * c2)
    return tuple(out.items())


class HeisenbergElem:
    """Integer combination of normal-ordered monomials ``x^i h^j a^k``."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: dict | None = None):
        self.terms = {tuple(m): int(c) for m, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, i: int = 0, j: int = 0, k: int = 0, coeff: int = 1) -> HeisenbergElem:
        return cls({(i, j, k): coeff})

    @staticmethod
    def _lift(other):
        if isinstance(other, HeisenbergElem):
            return other
        if isinstance(other, int):
            return HeisenbergElem._raw({(0, 0, 0): other} if other else {})
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for mono, c in other.terms.items():
            _accumulate(out, mono, c)
        return HeisenbergElem._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return HeisenbergElem._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return HeisenbergElem._raw({})
            return HeisenbergElem._raw({m: c * other for m, c in self.terms.items()})
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for (i1, j1, k1), c1 in self.terms.items():
            for (i2, j2, k2), c2 in other.terms.items():
                # x^i1 h^j1 (a^k1 x^i2) h^j2 a^k2, h central
                for (p, q, r), c3 in _reorder(k1, i2):
                    _accumulate(out, (i1 + p, j1 + j2 + q, r + k2), c1 * c2 * c3)
        return HeisenbergElem._raw(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        acc = HeisenbergElem._raw({(0, 0, 0): 1})
        for _ in range(n):
            acc = acc * self
        return acc

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _mono_key(t[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j, k), c in self.sorted_terms():
            factors = []
            for sym, e in (("x", i), ("h", j), ("a", k)):
                if e == 1:
                    factors.append(sym)
                elif e > 1:
                    factors.append(f"{sym}^{e}")
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append((c < 0, body))
        out = ("-" if parts[0][0] else "") + parts[0][1]
        for negative, body in parts[1:]:
            out += (" - " if negative else " + ") + body
        return out

    def __repr__(self):
        return f"HeisenbergElem({str(self)!r})"


def heisenberg_mul(u: HeisenbergElem, v: HeisenbergElem) -> HeisenbergElem:
    return u * v


HEIS = ring_of(HeisenbergElem(), HeisenbergElem.monomial(), name="Heisenberg<x,h,a>")
X = HeisenbergElem.monomial(i=1)
H = HeisenbergElem.monomial(j=1)
A = HeisenbergElem.monomial(k=1)


def g_of_x(g: Poly) -> HeisenbergElem:
    return poly_eval_in_ring(g, HEIS, X)


# ---------------------------------------------------------------------------
# action on Z[t]


def weyl_apply(w: HeisenbergElem, p: Poly) -> Poly:
    """Act on ``p``: ``x`` multiplies by ``t``, ``a`` differentiates, ``h`` is the identity."""
    out = Poly(())
    for (i, _, k), c in w.terms.items():
        d = poly_derivative(p, k)
        if d:
            out = out + Poly((0,) * i + tuple(c * v for v in d.coeffs))
    return out


# ---------------------------------------------------------------------------
# V_g and the checks


def build_V(g: Poly, m) -> Mat:
    """``(binom(i,j) g^{(i-j)}(x) h^{i-j})`` below the diagonal, zero above."""
    return lower_from_table(HEIS, m, lambda d: g_of_x(poly_derivative(g, d)) * HEIS.pow(H, d))


def verify_u_eq_v(g: Poly, m, depth: int = DEFAULT_CHECK_DEPTH) -> VerifyReport:
    """``U_{g(x)} = V_g`` entrywise; ``U`` is built from commutators with ``a``."""
    U = build_U(HEIS, A, g_of_x(g), m)
    V = build_V(g, m)
    size = m if is_finite(m) else depth + 1
    checks = []
    for i in range(size):
        for j in range(size):
            u, v = U.entry(i, j), V.entry(i, j)
            checks.append(Check(f"({i},{j})", u, v, u == v))
    lhs = U.entry(size - 1, 0) if size else HEIS.zero
    rhs = V.entry(size - 1, 0) if size else HEIS.zero
    return VerifyReport(
        name="u_eq_v",
        lhs=lhs,
        rhs=rhs,
        equal=lhs == rhs,
        config={"g": str(g), "m": dim_str(m)},
        windowed=not is_finite(m),
        check_depth=depth if not is_finite(m) else None,
        checks=checks,
    )


def cor_deriv_ad_check(g: Poly, p: int) -> VerifyReport:
    """``ad_a^p(g(x)) = g^{(p)}(x) h^p``."""
    lhs = ad_power(HEIS, A, g_of_x(g), p)
    rhs = g_of_x(poly_derivative(g, p)) * HEIS.pow(H, p)
    return VerifyReport("deriv_ad", lhs, rhs, lhs == rhs, {"g": str(g), "p": p})


def deriv1_check(g: Poly) -> VerifyReport:
    """``a g(x) = g(x) a + g'(x) h``."""
    gx = g_of_x(g)
    lhs = A * gx
    rhs = gx * A + g_of_x(poly_derivative(g, 1)) * H
    return VerifyReport("deriv1", lhs, rhs, lhs == rhs, {"g": str(g)})


def triv_comm_check(b: HeisenbergElem, i: int) -> VerifyReport:
    """``ad_a(b h^i) = ad_a(b) h^i``."""
    hi = HEIS.pow(H, i)
    lhs = commutator(HEIS, A, b * hi)
    rhs = commutator(HEIS, A, b) * hi
    return VerifyReport("triv_comm", lhs, rhs, lhs == rhs, {"b": str(b), "i": i})


def euler_oracle(g: Poly, n: int, p: Poly) -> Poly:
    """Apply the operator ``q -> g * q'`` to ``p`` ``n`` times."""
    for _ in range(n):
        p = g * poly_derivative(p, 1)
    return p


def verify_copeland(g: Poly, n: int, m, rep_depth: int = 8) -> VerifyReport:
    """``(g(x) a)^n = e_0^T (V_g S)^n H_1`` in the Heisenberg algebra.

    Both sides are also applied to ``t^k`` for ``k <= rep_depth`` and
    compared with ``n`` direct applications of ``q -> g q'``.
    """
    if not n < m:
        raise ConfigError(f"need n < m, got n={n}, m={dim_str(m)}")
    t0 = time.perf_counter_ns()
    lhs = HEIS.pow(g_of_x(g) * A, n)
    rhs = theorem_rhs(HEIS, A, build_V(g, m), n)
    checks = []
    for k in range(rep_depth + 1):
        tk = Poly.monomial(k)
        want = euler_oracle(g, n, tk)
        got_l = weyl_apply(lhs, tk)
        got_r = weyl_apply(rhs, tk)
        checks.append(Check(f"lhs on t^{k}", got_l, want, got_l == want))
        checks.append(Check(f"rhs on t^{k}", got_r, want, got_r == want))
    return VerifyReport(
        name="copeland",
        lhs=lhs,
        rhs=rhs,
        equal=lhs == rhs,
        config={"g": str(g), "n": n, "m": dim_str(m)},
        windowed=False,
        checks=checks,
        elapsed_ns=time.perf_counter_ns() - t0,
    )

