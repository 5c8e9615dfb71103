"""The matrices S, U_b, H_c, e_j and checks of the identity
``(ba)^n = e_0^T (U_b S)^n H_1`` together with its supporting lemmas."""

from __future__ import annotations

import json
import re
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

from .algebra import FreeAlgebra, RingOps, binomial, commutator
from .matrix import (
    INF,
    Mat,
    ShapeError,
    dim_str,
    is_finite,
    mat_mul,
    mat_pow,
    transpose,
)

DEFAULT_CHECK_DEPTH = 16


class ConfigError(ValueError):
    pass


# ---------------------------------------------------------------------------
# builders


def build_S(r: RingOps, m) -> Mat:
    """Shift matrix ``([j = i+1])``, (-1)-lower-triangular."""
    return Mat.tabulate(r, m, m, lambda i, j: r.one if j == i + 1 else r.zero, tri_bound=-1)


def ad_table(r: RingOps, a, b):
    """Cached ``p -> ad_a^p(b)``."""

    @lru_cache(maxsize=None)
    def ad(p):
        if p == 0:
            return b
        return commutator(r, a, ad(p - 1))

    return ad


def build_U(r: RingOps, a, b, m) -> Mat:
    """``(binom(i,j) ad_a^{i-j}(b))`` below the diagonal, zero above."""
    ad = ad_table(r, a, b)

    def fn(i, j):
        if i < j:
            return r.zero
        return r.times(binomial(i, j), ad(i - j))

    return Mat.tabulate(r, m, m, fn, tri_bound=0)


def lower_from_table(r: RingOps, m, diag_fn) -> Mat:
    """Lower-triangular ``(binom(i,j) f(i-j))`` for a cached ``f``."""
    f = lru_cache(maxsize=None)(diag_fn)
    return Mat.tabulate(r, m, m, lambda i, j: r.zero if i < j else r.times(binomial(i, j), f(i - j)), tri_bound=0)


def build_H(r: RingOps, a, c, m) -> Mat:
    """Column vector ``(a^i c)``."""

    @lru_cache(maxsize=None)
    def apow(i):
        return r.one if i == 0 else r.mul(a, apow(i - 1))

    return Mat.tabulate(r, m, 1, lambda i, _: r.mul(apow(i), c), tri_bound=0)


def build_e(r: RingOps, j: int, m) -> Mat:
    """Standard basis column vector ``e_j`` of size ``m``."""
    if not 0 <= j < m:
        raise IndexError(f"e_{j} does not exist for size {dim_str(m)}")
    return Mat.tabulate(r, m, 1, lambda p, _: r.one if p == j else r.zero, tri_bound=0)


def basis_row(r: RingOps, j: int, m) -> Mat:
    """``e_j^T``; its only nonzero entry sits in column ``j``, so it is (-j)-lower-triangular."""
    return transpose(build_e(r, j, m), tri_bound=-j)


# ---------------------------------------------------------------------------
# reports


@dataclass
class Check:
    label: str
    lhs: Any
    rhs: Any
    equal: bool

    def to_dict(self):
        return {"label": self.label, "lhs": str(self.lhs), "rhs": str(self.rhs), "equal": self.equal}


@dataclass
class VerifyReport:
    """Outcome of comparing two sides of an identity.

    ``equal`` is the ring equality of ``lhs`` and ``rhs``; ``checks`` holds
    any additional per-row or per-input diagnostics, and ``ok`` requires
    all of them.
    """

    name: str
    lhs: Any
    rhs: Any
    equal: bool
    config: dict = field(default_factory=dict)
    windowed: bool = False
    check_depth: int | None = None
    checks: list[Check] = field(default_factory=list)
    elapsed_ns: int = 0

    @property
    def ok(self) -> bool:
        return self.equal and all(c.equal for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "equal": self.equal,
            "ok": self.ok,
            "config": self.config,
            "windowed": self.windowed,
            "check_depth": self.check_depth,
            "checks": [c.to_dict() for c in self.checks],
            "elapsed_ns": self.elapsed_ns,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        cfg = ", ".join(f"{k}={v}" for k, v in self.config.items())
        lines = [
            f"{self.name} ({cfg})",
            f"  lhs   = {self.lhs}",
            f"  rhs   = {self.rhs}",
            f"  equal = {str(self.equal).lower()}",
        ]
        if self.windowed:
            lines.append(f"  windowed check: infinite m inspected to depth {self.check_depth}")
        bad = [c for c in self.checks if not c.equal]
        if self.checks:
            lines.append(f"  diagnostics: {len(self.checks) - len(bad)}/{len(self.checks)} agree")
        for c in bad:
            lines.append(f"    MISMATCH {c.label}: {c.lhs} != {c.rhs}")
        lines.append(f"  result: {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines)


def _report(name, r: RingOps, lhs, rhs, config=None, **kw) -> VerifyReport:
    return VerifyReport(name=name, lhs=lhs, rhs=rhs, equal=r.eq(lhs, rhs), config=config or {}, **kw)


# ---------------------------------------------------------------------------
# row equivalence


def _row_depth(m, k: int, depth: int) -> int:
    """Number of rows ``u in {0, ..., m-k}`` that get inspected."""
    if is_finite(m):
        return max(0, m - k + 1)
    return depth + 1


def row_mismatches(A: Mat, B: Mat, k: int, depth: int = DEFAULT_CHECK_DEPTH) -> list[tuple[int, int]]:
    """Positions ``(u, j)`` with ``u <= m-k`` where ``A`` and ``B`` differ.

    For ``m = INF`` rows ``0..depth`` are inspected; infinite rows are
    compared on columns ``0..depth``.
    """
    if A.shape != B.shape:
        raise ShapeError("rows_equiv needs equal shapes")
    if k < 1:
        raise ValueError("k must be a positive integer")
    eq = A.ring.eq
    ncols = A.cols if is_finite(A.cols) else depth + 1
    out = []
    for u in range(_row_depth(A.rows, k, depth)):
        for j in range(ncols):
            if not eq(A.entry(u, j), B.entry(u, j)):
                out.append((u, j))
    return out


def rows_equiv(A: Mat, B: Mat, k: int, depth: int = DEFAULT_CHECK_DEPTH) -> bool:
    """``A ==_k B``: rows ``0, ..., m-k`` agree (windowed when ``m`` is infinite)."""
    return not row_mismatches(A, B, k, depth)


# ---------------------------------------------------------------------------
# a^i b = sum_j binom(i,j) ad_a^{i-j}(b) a^j


def ada1_check(r: RingOps, a, b, i: int) -> VerifyReport:
    lhs = r.mul(r.pow(a, i), b)
    ad = ad_table(r, a, b)
    rhs = r.sum(r.times(binomial(i, j), r.mul(ad(i - j), r.pow(a, j))) for j in range(i + 1))
    return _report("ada1", r, lhs, rhs, {"i": i})


# ---------------------------------------------------------------------------
# the general identity


@dataclass
class GeneralConfig:
    ring: RingOps
    a: Any
    b: Any
    m: Any
    n: int
    check_depth: int = DEFAULT_CHECK_DEPTH

    def __post_init__(self):
        if self.m != INF and (not isinstance(self.m, int) or self.m < 0):
            raise ConfigError(f"m must be a natural number or INF, got {self.m!r}")
        if not isinstance(self.n, int) or self.n < 0:
            raise ConfigError(f"n must be a natural number, got {self.n!r}")
        if not self.n < self.m:
            raise ConfigError(f"need n < m, got n={self.n}, m={dim_str(self.m)}")
        if self.check_depth < 0:
            raise ConfigError("check_depth must be natural")

    def echo(self) -> dict:
        return {
            "ring": self.ring.name,
            "a": str(self.a),
            "b": str(self.b),
            "m": dim_str(self.m),
            "n": self.n,
        }


def power_form(r: RingOps, a, U: Mat, n: int) -> Mat:
    """``(U S)^n H_1`` as a column vector, with the matrix power taken first."""
    m = U.rows
    US = mat_mul(U, build_S(r, m))
    P = mat_pow(US.memoized(), n, memo=True)
    return mat_mul(P, build_H(r, a, r.one, m))


def fold_form(r: RingOps, a, U: Mat, n: int) -> Mat:
    """``U (S (U (S ... H_1)))``: ``H_1`` pushed through ``S`` then ``U``, ``n`` times."""
    m = U.rows
    S = build_S(r, m)
    v = build_H(r, a, r.one, m)
    for _ in range(n):
        v = mat_mul(U, mat_mul(S, v).memoized()).memoized()
    return v


def theorem_rhs(r: RingOps, a, U: Mat, n: int, fold: bool = False):
    """``e_0^T (U S)^n H_1`` collapsed to a ring element."""
    col = fold_form(r, a, U, n) if fold else power_form(r, a, U, n)
    return mat_mul(basis_row(r, 0, U.rows), col).scalar()


def general_rhs(cfg: GeneralConfig, fold: bool = False):
    """``e_0^T (U_b S)^n H_1`` for the configured ring, ``a``, ``b`` and ``m``."""
    return theorem_rhs(cfg.ring, cfg.a, build_U(cfg.ring, cfg.a, cfg.b, cfg.m), cfg.n, fold=fold)


def direct_power(r: RingOps, a, b, n: int):
    """``(ba)^n`` by repeated multiplication."""
    ba = r.mul(b, a)
    return r.pow(ba, n)


def verify_general(cfg: GeneralConfig, both_paths: bool = True) -> VerifyReport:
    """Compare ``(ba)^n`` (direct) with ``e_0^T (U_b S)^n H_1`` (matrices).

    With ``both_paths`` the fold-form evaluation is also compared against the
    direct side.  For ``m = INF`` the lazy column ``(U_b S)^n H_1`` is
    additionally compared with ``H_{(ba)^n}`` on rows ``0..check_depth``.
    """
    r = cfg.ring
    t0 = time.perf_counter_ns()
    lhs = direct_power(r, cfg.a, cfg.b, cfg.n)
    U = build_U(r, cfg.a, cfg.b, cfg.m)
    rhs = theorem_rhs(r, cfg.a, U, cfg.n)
    checks = []
    windowed = not is_finite(cfg.m)
    if both_paths or windowed:
        col = fold_form(r, cfg.a, U, cfg.n)
    if both_paths:
        folded = mat_mul(basis_row(r, 0, cfg.m), col).scalar()
        checks.append(Check("fold-form", lhs, folded, r.eq(lhs, folded)))
    if windowed:
        H = build_H(r, cfg.a, lhs, cfg.m)
        for u in range(cfg.check_depth + 1):
            x, y = col.entry(u, 0), H.entry(u, 0)
            checks.append(Check(f"row {u}", x, y, r.eq(x, y)))
    elapsed = time.perf_counter_ns() - t0
    return _report(
        "general",
        r,
        lhs,
        rhs,
        cfg.echo(),
        windowed=windowed,
        check_depth=cfg.check_depth if windowed else None,
        checks=checks,
        elapsed_ns=elapsed,
    )


def genlem_check(cfg: GeneralConfig) -> VerifyReport:
    """``(U_b S)^n H_1 ==_{n+1} H_{(ba)^n}``, reported row by row."""
    r = cfg.ring
    U = build_U(r, cfg.a, cfg.b, cfg.m)
    left = power_form(r, cfg.a, U, cfg.n)
    target = direct_power(r, cfg.a, cfg.b, cfg.n)
    right = build_H(r, cfg.a, target, cfg.m)
    k = cfg.n + 1
    checks = []
    for u in range(_row_depth(cfg.m, k, cfg.check_depth)):
        x, y = left.entry(u, 0), right.entry(u, 0)
        checks.append(Check(f"row {u}", x, y, r.eq(x, y)))
    lhs = left.entry(0, 0) if left.rows else r.zero
    rhs = right.entry(0, 0) if right.rows else r.zero
    return _report(
        "genlem",
        r,
        lhs,
        rhs,
        cfg.echo(),
        windowed=not is_finite(cfg.m),
        check_depth=cfg.check_depth if not is_finite(cfg.m) else None,
        checks=checks,
    )


def shift_prop_check(r: RingOps, a, c, m, u: int, depth: int = DEFAULT_CHECK_DEPTH) -> VerifyReport:
    """``e_u^T S = e_{u+1}^T`` and ``e_u^T S H_c = e_u^T H_{ac}`` for ``u + 1 < m``."""
    if not u + 1 < m:
        raise ConfigError(f"need u + 1 < m, got u={u}, m={dim_str(m)}")
    S = build_S(r, m)
    eu = basis_row(r, u, m)
    left_row = mat_mul(eu, S)
    right_row = basis_row(r, u + 1, m)
    ncols = m if is_finite(m) else max(depth, u + 2) + 1
    checks = []
    for j in range(ncols):
        x, y = left_row.entry(0, j), right_row.entry(0, j)
        checks.append(Check(f"(a) col {j}", x, y, r.eq(x, y)))
    lhs = mat_mul(left_row, build_H(r, a, c, m)).scalar()
    rhs = mat_mul(eu, build_H(r, a, r.mul(a, c), m)).scalar()
    return _report(
        "shift",
        r,
        lhs,
        rhs,
        {"m": dim_str(m), "u": u, "a": str(a), "c": str(c)},
        windowed=not is_finite(m),
        check_depth=depth if not is_finite(m) else None,
        checks=checks,
    )


def uh_prop_check(r: RingOps, a, b, c, m, depth: int = DEFAULT_CHECK_DEPTH) -> VerifyReport:
    """``U_b H_c = H_{bc}`` entrywise (to ``depth`` when ``m`` is infinite)."""
    left = mat_mul(build_U(r, a, b, m), build_H(r, a, c, m))
    right = build_H(r, a, r.mul(b, c), m)
    count = m if is_finite(m) else depth + 1
    checks = []
    for u in range(count):
        x, y = left.entry(u, 0), right.entry(u, 0)
        checks.append(Check(f"entry {u}", x, y, r.eq(x, y)))
    lhs = left.entry(0, 0) if count else r.zero
    rhs = right.entry(0, 0) if count else r.zero
    return _report(
        "uh",
        r,
        lhs,
        rhs,
        {"m": dim_str(m), "a": str(a), "b": str(b), "c": str(c)},
        windowed=not is_finite(m),
        check_depth=depth if not is_finite(m) else None,
        checks=checks,
    )


def default_config(n: int, m, check_depth: int = DEFAULT_CHECK_DEPTH, a: str = "a", b: str = "b") -> GeneralConfig:
    """``a`` and ``b`` as expressions in the free algebra on ``a, b`` (plus any other names used)."""
    alg = FreeAlgebra(_alphabet(a, b))
    return GeneralConfig(alg.ops, alg.parse(a), alg.parse(b), m, n, check_depth)


def _alphabet(*exprs: str) -> tuple[str, ...]:
    extra = set()
    for e in exprs:
        extra.update(re.findall(r"[A-Za-z_][A-Za-z_0-9]*", e))
    extra -= {"a", "b"}
    return ("a", "b") + tuple(sorted(extra))
