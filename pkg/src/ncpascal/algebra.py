"""Exact coefficient arithmetic, the generic ring interface, the free
noncommutative algebra over the integers and univariate integer polynomials."""

from __future__ import annotations

import math
import operator
import re
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence


def binomial(i: int, j: int) -> int:
    """Exact binomial coefficient; zero when ``j > i``."""
    if i < 0 or j < 0:
        raise ValueError("binomial takes natural numbers")
    return math.comb(i, j)


# ---------------------------------------------------------------------------
# ring interface


@dataclass(frozen=True)
class RingOps:
    """The operations a matrix or identity check needs from its scalars.

    Commutativity is never assumed.  ``scale`` (integer times element) is
    optional; without it integer multiples are built by doubling and adding.
    """

    zero: Any
    one: Any
    add: Callable[[Any, Any], Any]
    neg: Callable[[Any], Any]
    mul: Callable[[Any, Any], Any]
    eq: Callable[[Any, Any], bool] = operator.eq
    scale: Callable[[int, Any], Any] | None = None
    name: str = field(default="ring", compare=False)

    def sub(self, u, v):
        return self.add(u, self.neg(v))

    def is_zero(self, u) -> bool:
        return self.eq(u, self.zero)

    def times(self, k: int, u):
        if self.scale is not None:
            return self.scale(k, u)
        if k < 0:
            return self.neg(self.times(-k, u))
        acc, base = self.zero, u
        while k:
            if k & 1:
                acc = self.add(acc, base)
            base = self.add(base, base)
            k >>= 1
        return acc

    def from_int(self, k: int):
        return self.times(k, self.one)

    def pow(self, u, n: int):
        if n < 0:
            raise ValueError("negative power")
        acc = self.one
        for _ in range(n):
            acc = self.mul(acc, u)
        return acc

    def sum(self, items: Iterable):
        acc = self.zero
        for u in items:
            acc = self.add(acc, u)
        return acc

    def product(self, items: Iterable):
        acc = self.one
        for u in items:
            acc = self.mul(acc, u)
        return acc


def ring_of(zero, one, name: str = "ring") -> RingOps:
    """RingOps for element types that overload ``+ - * ==`` and int scaling."""
    return RingOps(
        zero=zero,
        one=one,
        add=operator.add,
        neg=operator.neg,
        mul=operator.mul,
        eq=operator.eq,
        scale=operator.mul,
        name=name,
    )


ZZ = ring_of(0, 1, name="ZZ")


def commutator(r: RingOps, a, b):
    """``[a, b] = ab - ba``."""
    return r.sub(r.mul(a, b), r.mul(b, a))


def ad_power(r: RingOps, a, b, p: int):
    """``ad_a`` applied ``p`` times to ``b``."""
    if p < 0:
        raise ValueError("negative ad power")
    for _ in range(p):
        b = commutator(r, a, b)
    return b


# ---------------------------------------------------------------------------
# free algebra Z<g_1, ..., g_k>


def _word_key(word: tuple[int, ...]):
    return (len(word), word)


class FreeAlgElem:
    """Integer combination of words in noncommuting generators.

    ``terms`` maps words (tuples of generator indices, ``()`` is 1) to
    nonzero integers.  Elements are immutable.
    """

    __slots__ = ("names", "terms", "_hash")

    def __init__(self, names: Sequence[str], terms: dict | None = None):
        self.names = tuple(names)
        clean = {}
        for w, c in (terms or {}).items():
            if c:
                clean[tuple(w)] = int(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, names, terms):
        # terms already canonical
        obj = cls.__new__(cls)
        obj.names = names
        obj.terms = terms
        obj._hash = None
        return obj

    def _coerce(self, other) -> FreeAlgElem:
        if isinstance(other, FreeAlgElem):
            if other.names != self.names:
                raise ValueError(f"alphabet mismatch: {self.names} vs {other.names}")
            return other
        if isinstance(other, int):
            return FreeAlgElem._raw(self.names, {(): other} if other else {})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return FreeAlgElem._raw(self.names, out)

    __radd__ = __add__

    def __neg__(self):
        return FreeAlgElem._raw(self.names, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return FreeAlgElem._raw(self.names, {})
            return FreeAlgElem._raw(self.names, {w: c * other for w, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = out.get(w, 0) + c1 * c2
                if s:
                    out[w] = s
                else:
                    del out[w]
        return FreeAlgElem._raw(self.names, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        acc = FreeAlgElem._raw(self.names, {(): 1})
        for _ in range(n):
            acc = acc * self
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            other = self._coerce(other)
        if not isinstance(other, FreeAlgElem):
            return NotImplemented
        return self.names == other.names and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.names, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _word_key(t[0]))

    def degree(self) -> int | None:
        if not self.terms:
            return None
        return max(len(w) for w in self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            mono = "*".join(self.names[g] for g in w)
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
        return f"FreeAlgElem({str(self)!r})"


def free_mul(u: FreeAlgElem, v: FreeAlgElem) -> FreeAlgElem:
    return u * v


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*^()]))")


class FreeAlgebra:
    """The free algebra on a fixed, ordered list of generator names."""

    def __init__(self, names: Sequence[str] = ("a", "b")):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")
        self.names = names
        self.zero = FreeAlgElem._raw(names, {})
        self.one = FreeAlgElem._raw(names, {(): 1})
        self.ops = ring_of(self.zero, self.one, name="ZZ<" + ",".join(names) + ">")

    def gen(self, name: str) -> FreeAlgElem:
        return FreeAlgElem._raw(self.names, {(self.names.index(name),): 1})

    @property
    def gens(self) -> tuple[FreeAlgElem, ...]:
        return tuple(self.gen(n) for n in self.names)

    def word(self, letters: Iterable[str], coeff: int = 1) -> FreeAlgElem:
        w = tuple(self.names.index(ch) for ch in letters)
        return FreeAlgElem(self.names, {w: coeff})

    def parse(self, text: str) -> FreeAlgElem:
        """Parse expressions such as ``"a*a*b - 2*a*b*a + b*a*a"``.

        Supports ``+ - *``, parentheses, integer literals and ``^`` / ``**``
        with a natural exponent.
        """
        tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse {text!r} at position {pos}")
            pos = m.end()
            num, name, sym = m.groups()
            if num is not None:
                tokens.append(("num", int(num)))
            elif name is not None:
                if name not in self.names:
                    raise ValueError(f"unknown generator {name!r}")
                tokens.append(("gen", name))
            elif sym is not None:
                tokens.append(("op", "^" if sym == "**" else sym))
        parser = _Parser(self, tokens)
        out = parser.expr()
        if parser.i != len(tokens):
            raise ValueError(f"trailing input in {text!r}")
        return out


class _Parser:
    def __init__(self, alg: FreeAlgebra, tokens):
        self.alg = alg
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expr(self):
        sign = 1
        if self.peek() in (("op", "-"), ("op", "+")):
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term() * sign
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.power()
        while self.peek() == ("op", "*"):
            self.take()
            acc = acc * self.power()
        return acc

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise ValueError("exponent must be a natural number")
            base = base**val
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return self.alg.one * val
        if kind == "gen":
            return self.alg.gen(val)
        if (kind, val) == ("op", "("):
            inner = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            return inner
        raise ValueError(f"unexpected token {val!r}")


# ---------------------------------------------------------------------------
# univariate integer polynomials


@dataclass(frozen=True)
class Poly:
    """Integer polynomial in ``t``; ``coeffs[i]`` is the coefficient of ``t^i``."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = [int(v) for v in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> Poly:
        return cls((0,) * k + (coeff,))

    @classmethod
    def parse_list(cls, text: str) -> Poly:
        """``"0,1"`` is ``t``; constant term first."""
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(int(v) for v in text.split(",")))

    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def __bool__(self):
        return bool(self.coeffs)

    def _lift(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Poly(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Poly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return Poly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        acc = Poly((1,))
        for _ in range(n):
            acc = acc * self
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def derivative(self, n: int = 1) -> Poly:
        return poly_derivative(self, n)

    def __call__(self, value: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
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
        return f"Poly({str(self)!r})"


POLY = ring_of(Poly(()), Poly((1,)), name="ZZ[t]")


def poly_derivative(g: Poly, n: int = 1) -> Poly:
    """``n``-th derivative of ``g``."""
    if n < 0:
        raise ValueError("negative derivative order")
    coeffs = g.coeffs
    for _ in range(n):
        coeffs = tuple(i * c for i, c in enumerate(coeffs))[1:]
    return Poly(coeffs)


def poly_eval_in_ring(g: Poly, r: RingOps, x):
    """``sum_i g_i x^i`` computed in ``r`` (Horner's scheme)."""
    acc = r.zero
    for c in reversed(g.coeffs):
        acc = r.add(r.mul(acc, x), r.from_int(c))
    return acc
