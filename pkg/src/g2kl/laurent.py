"""Exact Laurent polynomials over Z in v = q^(1/2).

Sparse representation: a tuple of (exponent, coefficient) pairs with
exponents strictly descending and no zero coefficients; instances are
interned, so equal polynomials are the same object.  Kazhdan-Lusztig
polynomials (honest polynomials in q) live in the same ring with even
v-exponents only; `q_text` renders that view.
"""

from __future__ import annotations

import re

_POOL: dict = {}


class LaurentPoly:
    __slots__ = ("terms",)

    def __new__(cls, terms: tuple):
        cached = _POOL.get(terms)
        if cached is not None:
            return cached
        self = object.__new__(cls)
        object.__setattr__(self, "terms", terms)
        _POOL[terms] = self
        return self

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def from_dict(d: dict) -> "LaurentPoly":
        return LaurentPoly(tuple(sorted(((e, c) for e, c in d.items() if c), reverse=True)))

    @staticmethod
    def zero() -> "LaurentPoly":
        return ZERO

    @staticmethod
    def one() -> "LaurentPoly":
        return ONE

    @staticmethod
    def v(exp: int = 1, coeff: int = 1) -> "LaurentPoly":
        if coeff == 0:
            return ZERO
        return LaurentPoly(((exp, coeff),))

    # -- basic queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exp: int) -> int:
        for e, c in self.terms:
            if e == exp:
                return c
            if e < exp:
                return 0
        return 0

    @property
    def degree(self):
        """Largest v-exponent; None for the zero polynomial."""
        return self.terms[0][0] if self.terms else None

    @property
    def valuation(self):
        """Smallest v-exponent; None for the zero polynomial."""
        return self.terms[-1][0] if self.terms else None

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not self.terms:
            return other
        if not other.terms:
            return self
        d = dict(self.terms)
        for e, c in other.terms:
            nc = d.get(e, 0) + c
            if nc:
                d[e] = nc
            else:
                del d[e]
        return LaurentPoly(tuple(sorted(d.items(), reverse=True)))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not self.terms or not other.terms:
            return ZERO
        d: dict = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                nc = d.get(e, 0) + c1 * c2
                if nc:
                    d[e] = nc
                elif e in d:
                    del d[e]
        return LaurentPoly(tuple(sorted(d.items(), reverse=True)))

    __rmul__ = __mul__

    def scale(self, k: int) -> "LaurentPoly":
        if k == 0:
            return ZERO
        if k == 1:
            return self
        return LaurentPoly(tuple((e, k * c) for e, c in self.terms))

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v^k."""
        if k == 0:
            return self
        return LaurentPoly(tuple((e + k, c) for e, c in self.terms))

    def bar(self) -> "LaurentPoly":
        """Ring involution v -> v^-1."""
        return LaurentPoly(tuple(sorted(((-e, c) for e, c in self.terms), reverse=True)))

    def is_symmetric(self) -> bool:
        return self.bar() is self

    # -- change of basis -------------------------------------------------------

    def to_two_basis(self) -> dict:
        """Write a bar-symmetric polynomial as an integer combination of [2]^k.

        [2] = v + v^-1.  Raises ValueError when the polynomial is not
        bar-symmetric (no such expansion exists).
        """
        if not self.is_symmetric():
            raise ValueError("not bar-symmetric: %s" % self)
        out: dict = {}
        p = self
        while p.terms:
            e, c = p.terms[0]
            if e < 0:
                raise AssertionError("symmetric polynomial with negative top exponent")
            out[e] = c
            p = p - two_power(e).scale(c)
        return out

    # -- text form ---------------------------------------------------------------

    def text(self, var: str = "v") -> str:
        if not self.terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self.terms):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                vp = var if e == 1 else "%s^%d" % (var, e)
                body = vp if mag == 1 else "%d*%s" % (mag, vp)
            if i == 0:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(" %s %s" % (sign, body))
        return "".join(parts)

    def q_text(self) -> str:
        """Render as a polynomial in q = v^2; exponents must all be even."""
        if any(e % 2 for e, _ in self.terms):
            raise ValueError("odd v-exponent present, not a polynomial in q: %s" % self)
        return LaurentPoly(tuple((e // 2, c) for e, c in self.terms)).text("q")

    def __str__(self):
        return self.text()

    def __repr__(self):
        return "LaurentPoly(%s)" % self.text()


ZERO = LaurentPoly(())
ONE = LaurentPoly(((0, 1),))
V = LaurentPoly(((1, 1),))
TWO = LaurentPoly(((1, 1), (-1, 1)))  # [2] = v + v^-1
Q = LaurentPoly(((2, 1),))

_TWO_POWERS = [ONE, TWO]


def two_power(k: int) -> LaurentPoly:
    """[2]^k, cached."""
    while len(_TWO_POWERS) <= k:
        _TWO_POWERS.append(_TWO_POWERS[-1] * TWO)
    return _TWO_POWERS[k]


def from_two_basis(d: dict) -> LaurentPoly:
    """Integer combination of [2]-powers back to a Laurent polynomial."""
    p = ZERO
    for k, c in d.items():
        p = p + two_power(k).scale(c)
    return p


_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
            (?P<coef>\d+)\s*(?:\*\s*(?P<var1>[a-zA-Z])(?:\^(?P<exp1>-?\d+))?)?
          | (?P<var2>[a-zA-Z])(?:\^(?P<exp2>-?\d+))?
        )""",
    re.VERBOSE,
)


def parse(text: str, var: str = "v") -> LaurentPoly:
    """Inverse of text(); accepts exactly the emitted grammar."""
    s = text.strip()
    if s == "0":
        return ZERO
    d: dict = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError("cannot parse %r at position %d" % (text, pos))
        sign = -1 if m.group("sign") == "-" else 1
        if not first and m.group("sign") is None:
            raise ValueError("missing +/- between terms in %r" % text)
        var_s = m.group("var1") or m.group("var2")
        exp_s = m.group("exp1") or m.group("exp2")
        coef = sign * (int(m.group("coef")) if m.group("coef") is not None else 1)
        if var_s is not None and var_s != var:
            raise ValueError("unexpected variable %r in %r" % (var_s, text))
        exp = 0
        if var_s:
            exp = 1 if exp_s is None else int(exp_s)
        d[exp] = d.get(exp, 0) + coef
        pos = m.end()
        first = False
    return LaurentPoly.from_dict(d)


def two_basis_text(d: dict) -> str:
    """Render a [2]-basis expansion the way the product tables print it."""
    if not d:
        return "0"
    parts = []
    for i, (e, c) in enumerate(sorted(d.items(), reverse=True)):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            base = "[2]" if e == 1 else "[2]^%d" % e
            body = base if mag == 1 else "%d%s" % (mag, base)
        if i == 0:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append("%s%s" % (sign, body))
    return "".join(parts)
