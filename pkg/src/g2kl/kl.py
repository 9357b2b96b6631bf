"""Kazhdan-Lusztig polynomials, mu, and canonical-basis products.

P_{u,w} is computed by the descent recursion on the canonical word of w,
peeling one letter (w = s*w' with l(w) = l(w')+1):

    P_{u,w} = q^(1-c) P_{su,w'} + q^c P_{u,w'}
              - sum_{u <= z < w', sz < z} mu(z,w') q^((l(w)-l(z))/2) P_{u,z}

with c = 1 if su < u.  The correction enters with a minus sign; the degree
bound, nonnegativity and P_{w,w} = 1 are asserted on every computed value and
would fail loudly under the plus-sign variant.  Pairs are first normalized by
the descent invariance P_{u,w} = P_{gu,w} (gw < w <= applicable whenever g is
a descent of w but not of u), which leaves exactly the hard pairs for the
recursion.

Canonical-basis products use

    C_g C_w = [2] C_w                        if gw < w
    C_g C_w = C_{gw} + sum_{y<w, gy<y} mu(y,w) C_y   otherwise

linearly extended, and C_x C_y is expanded by peeling the first letter of x.
Everything is memoized; the P-table can be persisted to disk.
"""

from __future__ import annotations

import io
import os

from . import laurent, weyl
from .errors import CacheFormatError, PropositionViolationError, ResourceLimitError
from .laurent import ONE, TWO, ZERO, LaurentPoly
from .weyl import GroupElement

CACHE_MAGIC = "g2kl-klcache"
CACHE_VERSION = "1"
CACHE_FINGERPRINT = "v0=1/4,1/4 gens=r<s<t order=first-letter"


class HeckeCombination:
    """Finite integer-Laurent combination of canonical-basis elements."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict):
        self.terms = {w: p for w, p in terms.items() if not p.is_zero()}

    def __eq__(self, other):
        return isinstance(other, HeckeCombination) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def get(self, w: GroupElement) -> LaurentPoly:
        return self.terms.get(w, ZERO)

    def support(self):
        return sorted(self.terms, key=GroupElement.sort_key, reverse=True)

    def __len__(self):
        return len(self.terms)

    def __add__(self, other: "HeckeCombination") -> "HeckeCombination":
        d = dict(self.terms)
        for w, p in other.terms.items():
            d[w] = d.get(w, ZERO) + p
        return HeckeCombination(d)

    def __sub__(self, other: "HeckeCombination") -> "HeckeCombination":
        d = dict(self.terms)
        for w, p in other.terms.items():
            d[w] = d.get(w, ZERO) - p
        return HeckeCombination(d)

    def scaled(self, p) -> "HeckeCombination":
        if isinstance(p, int):
            p = laurent.ONE.scale(p)
        return HeckeCombination({w: q * p for w, q in self.terms.items()})

    def text(self) -> str:
        """Render with [2]-basis coefficients, longest basis elements first."""
        if not self.terms:
            return "0"
        parts = []
        for w in self.support():
            p = self.terms[w]
            try:
                c = laurent.two_basis_text(p.to_two_basis())
            except ValueError:
                c = "(%s)" % p.text()
            else:
                if ("+" in c[1:]) or ("-" in c[1:]):
                    c = "(%s)" % c
            name = w.digits or "e"
            parts.append("C[%s]" % name if c == "1" else "%s*C[%s]" % (c, name))
        return " + ".join(parts)

    def __repr__(self):
        return "HeckeCombination(%s)" % self.text()


def unit_combination(w: GroupElement) -> HeckeCombination:
    return HeckeCombination({w: ONE})


class KLEngine:
    """Memoized Kazhdan-Lusztig computations for the affine Weyl group of G2."""

    def __init__(self, peel: str = "first", max_operand_length: int = 36,
                 max_support: int = 20000):
        if peel not in ("first", "last"):
            raise ValueError("peel must be 'first' or 'last'")
        self.peel = peel
        self.max_operand_length = max_operand_length
        self.max_support = max_support
        self._kl: dict = {}
        self._mu_lists: dict = {}
        self._below: dict = {}
        self._products: dict = {}

    # -- Bruhat lower sets -----------------------------------------------------

    def below(self, w: GroupElement):
        """All u <= w, via the lifting property along the canonical word."""
        got = self._below.get(w)
        if got is not None:
            return got
        chain = []
        x = w
        while x.length and x not in self._below:
            chain.append(x)
            x = weyl.gen_mult(x.word_bytes[0], x)
        if x.length == 0 and x not in self._below:
            self._below[x] = (weyl.IDENTITY,)
        cur = self._below[x]
        for x in reversed(chain):
            g = x.word_bytes[0]
            acc = set(cur)
            for z in cur:
                acc.add(weyl.gen_mult(g, z))
            cur = tuple(sorted(acc, key=GroupElement.sort_key))
            self._below[x] = cur
        return cur

    # -- P polynomials ----------------------------------------------------------

    def _normalize(self, u: GroupElement, w: GroupElement) -> GroupElement:
        """Raise u using descents of w on both sides; P is unchanged."""
        while u.length < w.length:
            lmask = weyl.left_descent_mask(w) & ~weyl.left_descent_mask(u)
            if lmask:
                g = (lmask & -lmask).bit_length() - 1
                u = weyl.gen_mult(g, u)
                continue
            rmask = weyl.right_descent_mask(w) & ~weyl.right_descent_mask(u)
            if rmask:
                g = (rmask & -rmask).bit_length() - 1
                u = weyl.mult_gen(u, g)
                continue
            break
        return u

    def kl_poly(self, u: GroupElement, w: GroupElement) -> LaurentPoly:
        """P_{u,w} as a polynomial in q = v^2 (even v-exponents)."""
        if u.length > w.length:
            return ZERO
        if u.length == w.length:
            return ONE if u == w else ZERO
        u = self._normalize(u, w)
        gap = w.length - u.length
        if gap == 0:
            return ONE if u == w else ZERO
        if gap <= 2:
            return ONE if weyl.bruhat_leq(u, w) else ZERO
        key = (u, w)
        got = self._kl.get(key)
        if got is not None:
            return got
        if not weyl.bruhat_leq(u, w):
            self._kl[key] = ZERO
            return ZERO

        if self.peel == "first":
            g = w.word_bytes[0]
            w2 = weyl.gen_mult(g, w)
            gu = weyl.gen_mult(g, u)
            c = 1 if (weyl.left_descent_mask(u) >> g) & 1 else 0
        else:
            g = w.word_bytes[-1]
            w2 = weyl.mult_gen(w, g)
            gu = weyl.mult_gen(u, g)
            c = 1 if (weyl.right_descent_mask(u) >> g) & 1 else 0

        p = self.kl_poly(gu, w2).shift(2 * (1 - c)) + self.kl_poly(u, w2).shift(2 * c)
        for z, m in self.mu_list(w2):
            if self.peel == "first":
                if not (weyl.left_descent_mask(z) >> g) & 1:
                    continue
            else:
                if not (weyl.right_descent_mask(z) >> g) & 1:
                    continue
            if z.length < u.length or not weyl.bruhat_leq(u, z):
                continue
            p = p - self.kl_poly(u, z).scale(m).shift(w.length - z.length)

        if p.terms:
            if any(c0 < 0 for _, c0 in p.terms):
                raise PropositionViolationError(
                    "negative KL coefficient for (%s, %s): %s (sign convention broken)"
                    % (u.digits, w.digits, p))
            if p.valuation < 0 or p.degree > gap - 1:
                raise PropositionViolationError(
                    "KL degree bound violated for (%s, %s): %s" % (u.digits, w.digits, p))
        self._kl[key] = p
        return p

    def mu(self, u: GroupElement, w: GroupElement) -> int:
        """Leading coefficient mu(u,w) of P_{u,w}."""
        gap = w.length - u.length
        if gap <= 0 or gap % 2 == 0:
            return 0
        if gap == 1:
            return 1 if weyl.bruhat_leq(u, w) else 0
        # a descent of w that is an ascent of u kills the top coefficient
        if weyl.left_descent_mask(w) & ~weyl.left_descent_mask(u):
            return 0
        if weyl.right_descent_mask(w) & ~weyl.right_descent_mask(u):
            return 0
        return self.kl_poly(u, w).coeff(gap - 1)

    def mu_list(self, w: GroupElement):
        """Sorted tuple of (y, mu(y,w)) over all y < w with mu > 0."""
        got = self._mu_lists.get(w)
        if got is not None:
            return got
        lmask = weyl.left_descent_mask(w)
        rmask = weyl.right_descent_mask(w)
        out = []
        for z in self.below(w):
            gap = w.length - z.length
            if gap <= 0 or gap % 2 == 0:
                continue
            if gap == 1:
                out.append((z, 1))
                continue
            if lmask & ~weyl.left_descent_mask(z):
                continue
            if rmask & ~weyl.right_descent_mask(z):
                continue
            m = self.kl_poly(z, w).coeff(gap - 1)
            if m:
                out.append((z, m))
        result = tuple(out)
        self._mu_lists[w] = result
        return result

    # -- canonical-basis products ---------------------------------------------

    def cs_mul(self, g: int, comb: HeckeCombination, side: str = "left") -> HeckeCombination:
        """C_g times a combination (or times C_g on the right)."""
        acc: dict = {}

        def add(w, p):
            q = acc.get(w)
            acc[w] = p if q is None else q + p

        for w, h in comb.terms.items():
            if side == "left":
                desc = (weyl.left_descent_mask(w) >> g) & 1
            else:
                desc = (weyl.right_descent_mask(w) >> g) & 1
            if desc:
                add(w, h * TWO)
                continue
            nb = weyl.gen_mult(g, w) if side == "left" else weyl.mult_gen(w, g)
            add(nb, h)
            for y, m in self.mu_list(w):
                if side == "left":
                    if (weyl.left_descent_mask(y) >> g) & 1:
                        add(y, h.scale(m))
                else:
                    if (weyl.right_descent_mask(y) >> g) & 1:
                        add(y, h.scale(m))
        return HeckeCombination(acc)

    def c_product(self, x: GroupElement, y: GroupElement) -> HeckeCombination:
        """Full expansion C_x C_y = sum_z h_{x,y,z} C_z."""
        if x.length > self.max_operand_length or y.length > self.max_operand_length:
            raise ResourceLimitError(
                "operand length beyond configured cap %d" % self.max_operand_length)
        return self._c_product(x, y)

    def _c_product(self, x: GroupElement, y: GroupElement) -> HeckeCombination:
        if x.length == 0:
            return unit_combination(y)
        key = (x, y)
        got = self._products.get(key)
        if got is not None:
            return got
        g = x.word_bytes[0]
        x2 = weyl.gen_mult(g, x)
        res = self.cs_mul(g, self._c_product(x2, y), "left")
        for z, m in self.mu_list(x2):
            if (weyl.left_descent_mask(z) >> g) & 1:
                res = res - self._c_product(z, y).scaled(m)
        if len(res) > self.max_support:
            raise ResourceLimitError(
                "support size %d beyond configured cap %d" % (len(res), self.max_support))
        self._products[key] = res
        return res

    def h_coeff(self, x: GroupElement, y: GroupElement, z: GroupElement) -> LaurentPoly:
        """Structure constant h_{x,y,z}."""
        return self.c_product(x, y).get(z)

    def gamma_delta(self, x: GroupElement, y: GroupElement, z: GroupElement,
                    a_z: int) -> tuple:
        """(gamma, delta): coefficients of v^a(z) and v^(a(z)-1) in h_{x,y,z}."""
        h = self.h_coeff(x, y, z)
        if h.terms and h.degree > a_z:
            raise PropositionViolationError(
                "h_{%s,%s,%s} has v-degree %d beyond a(z) = %d"
                % (x.digits, y.digits, z.digits, h.degree, a_z))
        return h.coeff(a_z), h.coeff(a_z - 1)

    # -- persistence -------------------------------------------------------------

    def _header(self) -> str:
        return "%s %s %s peel=%s" % (CACHE_MAGIC, CACHE_VERSION, CACHE_FINGERPRINT, self.peel)

    def cache_store(self, path: str) -> int:
        """Write the P-table; returns the number of records."""
        rows = sorted(
            ((u.digits, w.digits, p.text()) for (u, w), p in self._kl.items()),
            key=lambda r: (len(r[1]), r[1], len(r[0]), r[0]),
        )
        buf = io.StringIO()
        buf.write(self._header() + "\n")
        for u, w, p in rows:
            buf.write("%s\t%s\t%s\n" % (u, w, p))
        tmp = path + ".tmp"
        with open(tmp, "w") as fh:
            fh.write(buf.getvalue())
        os.replace(tmp, path)
        return len(rows)

    def cache_load(self, path: str) -> int:
        """Merge a stored P-table into the memo; returns records loaded."""
        with open(path) as fh:
            header = fh.readline().rstrip("\n")
            if header != self._header():
                raise CacheFormatError(
                    "cache header mismatch: got %r, expected %r" % (header, self._header()))
            n = 0
            for line in fh:
                line = line.rstrip("\n")
                if not line:
                    continue
                try:
                    uw, ww, ptext = line.split("\t")
                    u = weyl.element(uw)
                    w = weyl.element(ww)
                    p = laurent.parse(ptext)
                except (ValueError, KeyError) as exc:
                    raise CacheFormatError("corrupt cache line %r" % line) from exc
                if u.digits != uw or w.digits != ww:
                    raise CacheFormatError("non-canonical word in cache: %r" % line)
                self._kl[(u, w)] = p
                n += 1
        return n
