"""Matrices over a generic ring, finite or infinite.

Rows and columns are 0-indexed.  A dimension is a natural number or ``INF``;
an index range for ``INF`` is all of the naturals.  Finite matrices are held
densely.  Anything with an infinite side is an entry function plus a declared
``tri_bound`` ``k`` certifying that entry ``(i, j)`` vanishes for ``i < j + k``.
Products over an infinite inner dimension only sum the finite window the two
certificates leave open.
"""

from __future__ import annotations

import json
import math
from functools import lru_cache
from typing import Any, Callable

from .algebra import RingOps

INF = math.inf


class ShapeError(ValueError):
    pass


class TamenessError(ValueError):
    """Product over an infinite inner dimension without triangularity bounds."""


def is_finite(d) -> bool:
    return d != INF


def _check_dim(d):
    if d == INF:
        return INF
    if isinstance(d, bool) or not isinstance(d, int) or d < 0:
        raise ShapeError(f"bad dimension {d!r}")
    return d


def dim_str(d) -> str:
    return "inf" if d == INF else str(d)


class Mat:
    """A ``rows x cols`` matrix over ``ring``.

    Build with :meth:`dense` (finite) or :meth:`lazy` (any shape).
    """

    __slots__ = ("ring", "rows", "cols", "tri_bound", "_data", "_fn")

    def __init__(self, ring: RingOps, rows, cols, *, data=None, fn=None, tri_bound=None):
        self.ring = ring
        self.rows = _check_dim(rows)
        self.cols = _check_dim(cols)
        if (data is None) == (fn is None):
            raise ValueError("give exactly one of data / fn")
        if data is not None and not (is_finite(self.rows) and is_finite(self.cols)):
            raise ShapeError("dense storage needs finite dimensions")
        if tri_bound is None and is_finite(self.cols):
            # j <= l-1 for every entry, so i < j + (1-l) never holds
            tri_bound = 1 - self.cols
        self.tri_bound = tri_bound
        self._data = data
        self._fn = fn

    @classmethod
    def dense(cls, ring: RingOps, rows_data, tri_bound=None, cols=None) -> Mat:
        data = tuple(tuple(r) for r in rows_data)
        nrows = len(data)
        ncols = len(data[0]) if data else (cols or 0)
        if any(len(r) != ncols for r in data):
            raise ShapeError("ragged rows")
        m = cls(ring, nrows, ncols, data=data, tri_bound=tri_bound)
        if tri_bound is not None and not check_tri_bound(m, tri_bound, max(nrows, ncols)):
            raise ValueError(f"declared tri_bound {tri_bound} is violated")
        return m

    @classmethod
    def lazy(cls, ring: RingOps, rows, cols, fn: Callable[[int, int], Any], tri_bound=None) -> Mat:
        return cls(ring, rows, cols, fn=fn, tri_bound=tri_bound)

    @classmethod
    def tabulate(cls, ring, rows, cols, fn, tri_bound=None) -> Mat:
        """Dense when both sides are finite, lazy otherwise."""
        if is_finite(rows) and is_finite(cols):
            return cls.dense(
                ring,
                [[fn(i, j) for j in range(cols)] for i in range(rows)],
                tri_bound=tri_bound,
                cols=cols,
            )
        return cls.lazy(ring, rows, cols, fn, tri_bound)

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def is_finite(self) -> bool:
        return is_finite(self.rows) and is_finite(self.cols)

    def entry(self, i: int, j: int):
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) outside {dim_str(self.rows)}x{dim_str(self.cols)}")
        if self._data is not None:
            return self._data[i][j]
        if self.tri_bound is not None and i < j + self.tri_bound:
            return self.ring.zero
        return self._fn(i, j)

    def raw_entry(self, i: int, j: int):
        """Entry straight from storage or the entry function, ignoring the declared bound."""
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) outside {dim_str(self.rows)}x{dim_str(self.cols)}")
        if self._data is not None:
            return self._data[i][j]
        return self._fn(i, j)

    def __getitem__(self, ij):
        i, j = ij
        return self.entry(i, j)

    def window(self, nrows: int, ncols: int) -> list[list]:
        nrows = min(nrows, self.rows)
        ncols = min(ncols, self.cols)
        return [[self.entry(i, j) for j in range(ncols)] for i in range(nrows)]

    def to_rows(self) -> list[list]:
        if not self.is_finite:
            raise ShapeError("infinite matrix; use window()")
        return self.window(self.rows, self.cols)

    def scalar(self):
        """The entry of a 1x1 matrix, which is identified with a ring element."""
        if self.shape != (1, 1):
            raise ShapeError(f"not 1x1: {dim_str(self.rows)}x{dim_str(self.cols)}")
        return self.entry(0, 0)

    def memoized(self) -> Mat:
        """Same matrix with entries cached after first evaluation."""
        if self._data is not None:
            return self
        return Mat(self.ring, self.rows, self.cols, fn=lru_cache(maxsize=None)(self._fn), tri_bound=self.tri_bound)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if not (self.is_finite and other.is_finite):
            raise ShapeError("equality of infinite matrices is undecidable; use window_eq")
        return self.shape == other.shape and window_eq(self, other, self.rows, self.cols)

    __hash__ = None

    def __repr__(self):
        return f"<Mat {dim_str(self.rows)}x{dim_str(self.cols)} tri_bound={self.tri_bound}>"


def _sum_window(A: Mat, B: Mat, i: int, q: int, lo: int, hi: int):
    r = A.ring
    acc = r.zero
    for j in range(lo, hi + 1):
        x = A.entry(i, j)
        if r.is_zero(x):
            continue
        y = B.entry(j, q)
        if r.is_zero(y):
            continue
        acc = r.add(acc, r.mul(x, y))
    return acc


def mat_mul(A: Mat, B: Mat) -> Mat:
    """``(AB)_{i,q} = sum_j A_{i,j} B_{j,q}``.

    Summands outside ``q + tri_bound(B) <= j <= i - tri_bound(A)`` vanish by
    triangularity and are skipped; over an infinite inner dimension that
    window is what makes the sum finite.
    """
    if A.cols != B.rows:
        raise ShapeError(f"cannot multiply {dim_str(A.rows)}x{dim_str(A.cols)} by {dim_str(B.rows)}x{dim_str(B.cols)}")
    inner = A.cols
    ka, kb = A.tri_bound, B.tri_bound
    if not is_finite(inner) and (ka is None or kb is None):
        raise TamenessError("infinite inner dimension needs declared tri_bound on both factors")
    bound = ka + kb if ka is not None and kb is not None else None

    def fn(i, q):
        lo = 0 if kb is None else max(0, q + kb)
        hi = inner - 1 if ka is None else i - ka
        if is_finite(inner):
            hi = min(hi, inner - 1)
        return _sum_window(A, B, i, q, lo, hi)

    if is_finite(A.rows) and is_finite(B.cols):
        data = [[fn(i, q) for q in range(B.cols)] for i in range(A.rows)]
        out = Mat(A.ring, A.rows, B.cols, data=tuple(map(tuple, data)), tri_bound=None)
        if bound is not None:
            out.tri_bound = bound
        return out
    return Mat.lazy(A.ring, A.rows, B.cols, fn, bound)


def identity(r: RingOps, m) -> Mat:
    return Mat.tabulate(r, m, m, lambda i, j: r.one if i == j else r.zero, tri_bound=0)


def mat_pow(A: Mat, n: int, memo: bool = False) -> Mat:
    """``A^n`` as an ``n``-fold product; ``A^0`` is the identity."""
    if A.rows != A.cols:
        raise ShapeError("power of a non-square matrix")
    if n < 0:
        raise ValueError("negative matrix power")
    if n == 0:
        return identity(A.ring, A.rows)
    out = A
    for _ in range(n - 1):
        out = mat_mul(out, A)
        if memo:
            out = out.memoized()
    return out


def mat_add(A: Mat, B: Mat) -> Mat:
    if A.shape != B.shape:
        raise ShapeError("shape mismatch in sum")
    r = A.ring
    bound = None if A.tri_bound is None or B.tri_bound is None else min(A.tri_bound, B.tri_bound)
    return Mat.tabulate(r, A.rows, A.cols, lambda i, j: r.add(A.entry(i, j), B.entry(i, j)), bound)


def mat_scale(c, A: Mat) -> Mat:
    """Left multiplication of every entry by the ring element ``c``."""
    r = A.ring
    return Mat.tabulate(r, A.rows, A.cols, lambda i, j: r.mul(c, A.entry(i, j)), A.tri_bound)


def transpose(A: Mat, tri_bound=None) -> Mat:
    """Transpose; infinite matrices need the new bound declared."""
    if not A.is_finite:
        if tri_bound is None:
            raise TamenessError("transpose of an infinite matrix needs a declared tri_bound")
        return Mat.lazy(A.ring, A.cols, A.rows, lambda i, j: A.entry(j, i), tri_bound)
    return Mat.dense(A.ring, [[A.entry(j, i) for j in range(A.rows)] for i in range(A.cols)], tri_bound, cols=A.rows)


def row(A: Mat, i: int) -> Mat:
    """The ``i``-th row as a ``1 x cols`` matrix (lazy for infinite columns)."""
    if not 0 <= i < A.rows:
        raise IndexError(f"row {i} outside {dim_str(A.rows)} rows")
    bound = None if A.tri_bound is None else A.tri_bound - i
    return Mat.tabulate(A.ring, 1, A.cols, lambda _, j: A.entry(i, j), bound)


def window_eq(A: Mat, B: Mat, rows: int, cols: int) -> bool:
    """Entrywise agreement on the top-left ``rows x cols`` block."""
    if rows > min(A.rows, B.rows) or cols > min(A.cols, B.cols):
        raise ShapeError("window does not fit both matrices")
    eq = A.ring.eq
    return all(eq(A.entry(i, j), B.entry(i, j)) for i in range(rows) for j in range(cols))


def check_tri_bound(A: Mat, k: int, window: int) -> bool:
    """True iff every entry with ``i < j + k`` inside the window is zero.

    Entries are read through :meth:`Mat.raw_entry`, so a lazy matrix's own
    declaration is not taken on trust.
    """
    z = A.ring.is_zero
    for i in range(int(min(window, A.rows))):
        for j in range(int(min(window, A.cols))):
            if i < j + k and not z(A.raw_entry(i, j)):
                return False
    return True


# ---------------------------------------------------------------------------
# rendering


def mat_to_dict(A: Mat, window: int | None = None) -> dict:
    """JSON-ready dict: shape, bound and row-major canonical entry strings."""
    if A.is_finite:
        entries = A.to_rows()
        shown = None
    else:
        if window is None:
            raise ShapeError("infinite matrix needs a window")
        entries = A.window(window, window)
        shown = [len(entries), len(entries[0]) if entries else 0]
    return {
        "rows": dim_str(A.rows),
        "cols": dim_str(A.cols),
        "tri_bound": A.tri_bound,
        "window": shown,
        "entries": [[str(e) for e in r] for r in entries],
    }


def mat_to_json(A: Mat, window: int | None = None) -> str:
    return json.dumps(mat_to_dict(A, window), indent=2, sort_keys=True)


def mat_to_text(A: Mat, window: int | None = None) -> str:
    d = mat_to_dict(A, window)
    cells = d["entries"]
    if not cells:
        return f"({d['rows']}x{d['cols']} empty)"
    width = [max(len(r[j]) for r in cells) for j in range(len(cells[0]))]
    more_cols = d["window"] is not None and d["cols"] == "inf"
    lines = []
    for r in cells:
        body = "  ".join(c.rjust(w) for c, w in zip(r, width))
        lines.append("[ " + body + ("  ..." if more_cols else "") + " ]")
    if d["window"] is not None and d["rows"] == "inf":
        lines.append("  ...")
    return "\n".join(lines)
