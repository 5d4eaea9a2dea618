"""
Exact polynomials in x_1..x_n with integer coefficients and a Laurent parameter t.

Every value produced by the rest of the package (LLT polynomials, partition
functions, the g polynomials of a matching decomposition) is a `Polynomial`.
Only t may carry a negative exponent; the x exponents are nonnegative.
"""

from __future__ import annotations

import json
from collections import defaultdict
from typing import Iterable, Iterator, Mapping, NamedTuple


class AlphabetMismatch(ValueError):
    pass


class Monomial(NamedTuple):
    t_exp: int
    x_exps: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.x_exps)


def _order_key(m: Monomial):
    # graded lex on x (larger first), then t ascending
    return (-m.degree, tuple(-e for e in m.x_exps), m.t_exp)


class Polynomial:
    """
    Immutable polynomial over Z[t, t^-1][x_1, ..., x_n].

    Terms are kept in canonical order: graded-lexicographic on the x exponent
    vector with larger monomials first, ties broken by ascending t exponent.
    Two polynomials compare equal iff their canonical term lists agree.
    """

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        if n < 0:
            raise ValueError("alphabet size must be nonnegative")
        acc: dict[Monomial, int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            mono = Monomial(int(mono[0]), tuple(int(e) for e in mono[1]))
            if len(mono.x_exps) != n:
                raise AlphabetMismatch(f"monomial {mono} does not have {n} x-exponents")
            if any(e < 0 for e in mono.x_exps):
                raise ValueError(f"negative x exponent in {mono}")
            acc[mono] += int(coeff)
        self.n = n
        self._terms = tuple(sorted(((m, c) for m, c in acc.items() if c != 0),
                                   key=lambda mc: _order_key(mc[0])))
        self._hash = None

    # construction helpers

    @classmethod
    def zero(cls, n: int) -> Polynomial:
        return cls(n)

    @classmethod
    def one(cls, n: int) -> Polynomial:
        return cls.monomial(n)

    @classmethod
    def monomial(cls, n: int, t_exp: int = 0, x_exps: Iterable[int] | None = None,
                 coeff: int = 1) -> Polynomial:
        x = tuple(x_exps) if x_exps is not None else (0,) * n
        return cls(n, {Monomial(t_exp, x): coeff})

    @classmethod
    def x(cls, n: int, i: int, power: int = 1) -> Polynomial:
        """The variable x_i (1-based) raised to `power`."""
        if not 1 <= i <= n:
            raise IndexError(f"x{i} is not in an alphabet of size {n}")
        exps = [0] * n
        exps[i - 1] = power
        return cls.monomial(n, 0, exps)

    @classmethod
    def t(cls, n: int, power: int = 1) -> Polynomial:
        return cls.monomial(n, power)

    # access

    @property
    def terms(self) -> tuple[tuple[Monomial, int], ...]:
        return self._terms

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, t_exp: int, x_exps: Iterable[int]) -> int:
        key = Monomial(t_exp, tuple(x_exps))
        for m, c in self._terms:
            if m == key:
                return c
        return 0

    def t_exponents(self) -> set[int]:
        return {m.t_exp for m, _ in self._terms}

    # arithmetic

    def _check(self, other: Polynomial) -> None:
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.n != self.n:
            raise AlphabetMismatch(f"alphabet sizes differ: {self.n} vs {other.n}")

    def __add__(self, other: Polynomial) -> Polynomial:
        if isinstance(other, int):
            other = Polynomial.monomial(self.n, coeff=other)
        self._check(other)
        return Polynomial(self.n, list(self._terms) + list(other._terms))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(self.n, [(m, -c) for m, c in self._terms])

    def __sub__(self, other: Polynomial) -> Polynomial:
        if isinstance(other, int):
            other = Polynomial.monomial(self.n, coeff=other)
        return self + (-other)

    def __rsub__(self, other: int) -> Polynomial:
        return (-self) + other

    def __mul__(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, int):
            return Polynomial(self.n, [(m, c * other) for m, c in self._terms])
        self._check(other)
        acc: dict[Monomial, int] = defaultdict(int)
        for m1, c1 in self._terms:
            for m2, c2 in other._terms:
                x = tuple(a + b for a, b in zip(m1.x_exps, m2.x_exps))
                acc[Monomial(m1.t_exp + m2.t_exp, x)] += c1 * c2
        return Polynomial(self.n, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = Polynomial.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self._terms))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial(n={self.n}, {self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    # t-operations

    def scale_t(self, k: int) -> Polynomial:
        return scale_t(self, k)

    def substitute_t_inverse(self) -> Polynomial:
        return substitute_t_inverse(self)

    def at_t_equals_one(self) -> Polynomial:
        """Collapse the t-grading (evaluate t = 1)."""
        return Polynomial(self.n, [(Monomial(0, m.x_exps), c) for m, c in self._terms])

    # serialization

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"t": m.t_exp, "x": list(m.x_exps), "c": c} for m, c in self._terms],
        }

    @classmethod
    def from_json(cls, data: Mapping | str) -> Polynomial:
        if isinstance(data, str):
            data = json.loads(data)
        n = int(data["n"])
        return cls(n, [(Monomial(term["t"], tuple(term["x"])), term["c"]) for term in data["terms"]])

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for m, c in self._terms:
            factors = []
            if m.t_exp == 1:
                factors.append("t")
            elif m.t_exp != 0:
                factors.append(f"t^{m.t_exp}")
            for i, e in enumerate(m.x_exps, start=1):
                if e == 1:
                    factors.append(f"x{i}")
                elif e > 1:
                    factors.append(f"x{i}^{e}")
            body = "*".join(factors)
            mag = abs(c)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            pieces.append(("-" if c < 0 else "+", text))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out


def _check_pair(p: Polynomial, q: Polynomial) -> None:
    if p.n != q.n:
        raise AlphabetMismatch(f"alphabet sizes differ: {p.n} vs {q.n}")


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    _check_pair(p, q)
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    _check_pair(p, q)
    return p * q


def scale_t(p: Polynomial, k: int) -> Polynomial:
    """Multiply by t^k."""
    if k == 0:
        return p
    return Polynomial(p.n, [(Monomial(m.t_exp + k, m.x_exps), c) for m, c in p.terms])


def substitute_t_inverse(p: Polynomial) -> Polynomial:
    return Polynomial(p.n, [(Monomial(-m.t_exp, m.x_exps), c) for m, c in p.terms])


def equivalence_shift(p: Polynomial, q: Polynomial) -> int | None:
    """
    Return k with p == t^k * q, or None when no such k exists.

    For p == q == 0 every k works and 0 is returned.
    """
    _check_pair(p, q)
    if len(p) != len(q):
        return None
    if not p:
        return 0
    k = p.terms[0][0].t_exp - q.terms[0][0].t_exp
    # the canonical order is t-ascending within an x-monomial, so shifting by k
    # preserves it and a termwise comparison suffices
    for (mp, cp), (mq, cq) in zip(p.terms, q.terms):
        if cp != cq or mp.x_exps != mq.x_exps or mp.t_exp - mq.t_exp != k:
            return None
    return k


def is_symmetric(p: Polynomial) -> bool:
    """True iff p is invariant under every adjacent transposition of x_1..x_n."""
    lookup = {m: c for m, c in p.terms}
    for i in range(p.n - 1):
        for m, c in p.terms:
            x = list(m.x_exps)
            x[i], x[i + 1] = x[i + 1], x[i]
            if lookup.get(Monomial(m.t_exp, tuple(x))) != c:
                return False
    return True


def from_counts(n: int, counts: Mapping[tuple[int, tuple[int, ...]], int]) -> Polynomial:
    """Build a polynomial from a {(t_exp, x_exps): coeff} accumulator."""
    return Polynomial(n, [(Monomial(t, x), c) for (t, x), c in counts.items()])
