"""The affine Weyl group of type G2 with generators r, s, t.

Defining relations: r^2 = s^2 = t^2 = e, (st)^6 = (rt)^2 = (rs)^3 = e.
Elements are identified with their orbit point: the group acts simply
transitively on alcoves, so w1(v0) = w2(v0) iff w1 = w2 for the fixed
interior base point v0 = (1/4, 1/4).  Every element is interned by point and
carries its canonical reduced word (greedy smallest-left-descent stripping,
order r < s < t).

Words serialize as digit strings over {0,1,2} with 0=r, 1=s, 2=t; letter
input ("rst") is accepted everywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from . import core
from .errors import ResourceLimitError, WordParseError

R, S, T = 0, 1, 2
GENERATOR_NAMES = "rst"

_LETTER = {"r": 0, "s": 1, "t": 2, "0": 0, "1": 1, "2": 2}

WordLike = Union[str, bytes, Iterable[int], "GroupElement"]


def parse_word(text: WordLike) -> bytes:
    """Parse a word from digits, letters, an int iterable, or an element."""
    if isinstance(text, GroupElement):
        return text.word_bytes
    if isinstance(text, bytes):
        word = text
    elif isinstance(text, str):
        try:
            word = bytes(_LETTER[c] for c in text.strip())
        except KeyError as exc:
            raise WordParseError("invalid generator %r in %r" % (exc.args[0], text)) from None
        return word
    else:
        word = bytes(text)
    if any(g not in (0, 1, 2) for g in word):
        raise WordParseError("generator codes must be 0, 1 or 2: %r" % (text,))
    return word


def word_digits(word: bytes) -> str:
    return "".join(str(g) for g in word)


def word_letters(word: bytes) -> str:
    return "".join(GENERATOR_NAMES[g] for g in word)


class GroupElement:
    """Immutable group element: canonical reduced word plus cached orbit point."""

    __slots__ = ("word_bytes", "point", "_inverse")

    def __init__(self, word_bytes: bytes, point: tuple):
        self.word_bytes = word_bytes
        self.point = point
        self._inverse = None

    @property
    def word(self) -> tuple:
        return tuple(self.word_bytes)

    @property
    def digits(self) -> str:
        return word_digits(self.word_bytes)

    @property
    def letters(self) -> str:
        return word_letters(self.word_bytes)

    @property
    def length(self) -> int:
        return len(self.word_bytes)

    @property
    def rational_point(self) -> tuple:
        a, b = self.point
        return (Fraction(a, 4), Fraction(b, 4))

    def __mul__(self, other):
        if isinstance(other, GroupElement):
            return multiply(self, other)
        return NotImplemented

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.point == other.point

    def __hash__(self):
        return hash(self.point)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (len(self.word_bytes), self.word_bytes)

    def __repr__(self):
        return "W(%s)" % (self.digits or "e")


_BY_POINT: dict = {}


def _intern(point) -> GroupElement:
    elt = _BY_POINT.get(point)
    if elt is None:
        word = core.canonical_from_point(point[0], point[1])
        elt = GroupElement(word, point)
        _BY_POINT[point] = elt
    return elt


IDENTITY = _intern(core.V0)
GEN = tuple(_intern(core.apply_gen(g, 1, 1)) for g in (0, 1, 2))


def act(g: int, p: tuple) -> tuple:
    """Reflection action of one generator on an exact rational point (a, b)."""
    a, b = Fraction(p[0]), Fraction(p[1])
    if g == R:
        return (a, 1 - a - b)
    if g == S:
        return (a + 3 * b, -b)
    if g == T:
        return (-a, a + b)
    raise WordParseError("no generator %r" % (g,))


def evaluate(word: WordLike) -> tuple:
    """Image of v0 = (1/4, 1/4) under the word (leftmost letter acts last)."""
    a, b = core.eval_word(parse_word(word))
    return (Fraction(a, 4), Fraction(b, 4))


def apply_to_point(word: WordLike, p: tuple) -> tuple:
    """Apply a word to an arbitrary exact rational point."""
    a, b = Fraction(p[0]), Fraction(p[1])
    for g in reversed(parse_word(word)):
        a, b = act(g, (a, b))
    return (a, b)


def canonicalize(word: WordLike) -> GroupElement:
    """Group element of a (not necessarily reduced) word."""
    return _intern(core.eval_word(parse_word(word)))


element = canonicalize


def length(e: GroupElement) -> int:
    return e.length


def gen_mult(g: int, e: GroupElement) -> GroupElement:
    """Left multiplication by one generator."""
    return _intern(core.apply_gen(g, e.point[0], e.point[1]))


def mult_gen(e: GroupElement, g: int) -> GroupElement:
    """Right multiplication by one generator."""
    pa, pb = core.apply_gen(g, 1, 1)
    return _intern(core.apply_word(e.word_bytes, pa, pb))


def multiply(a: GroupElement, b: GroupElement) -> GroupElement:
    return _intern(core.apply_word(a.word_bytes, b.point[0], b.point[1]))


def inverse(a: GroupElement) -> GroupElement:
    inv = a._inverse
    if inv is None:
        inv = _intern(core.eval_word(a.word_bytes[::-1]))
        a._inverse = inv
        inv._inverse = a
    return inv


def left_descent_mask(e: GroupElement) -> int:
    return core.descent_mask(e.point[0], e.point[1])


def right_descent_mask(e: GroupElement) -> int:
    p = inverse(e).point
    return core.descent_mask(p[0], p[1])


def _mask_to_set(mask: int) -> frozenset:
    return frozenset(g for g in (0, 1, 2) if mask & (1 << g))


def left_descents(e: GroupElement) -> frozenset:
    """Generators g with l(g*e) < l(e); geometric hyperplane test."""
    return _mask_to_set(left_descent_mask(e))


def right_descents(e: GroupElement) -> frozenset:
    return _mask_to_set(right_descent_mask(e))


def bruhat_leq(u: GroupElement, w: GroupElement) -> bool:
    """Bruhat order via the descent recursion."""
    return core.bruhat_leq(
        u.point[0], u.point[1], u.length, w.point[0], w.point[1], w.length
    )


# --- subword oracle ---------------------------------------------------------

#: Words at most this long are enumerated directly; longer ones are split.
SPLIT_THRESHOLD = 10

_SUBWORD_SETS: dict = {}


def _subword_element_set(word: bytes, max_length: int) -> frozenset:
    """Set of orbit points of all subwords of `word`, split-and-glue for long words."""
    if len(word) > max_length:
        raise ResourceLimitError(
            "subword oracle limited to length %d, got %d" % (max_length, len(word))
        )
    cached = _SUBWORD_SETS.get(word)
    if cached is not None:
        return cached
    if len(word) <= SPLIT_THRESHOLD:
        pts = frozenset(core.subword_points(word))
    else:
        half = len(word) // 2
        left = _subword_element_set(word[:half], max_length)
        right = _subword_element_set(word[half:], max_length)
        # halves deduplicated by element; glue by group multiplication
        lwords = [core.canonical_from_point(a, b) for (a, b) in left]
        glued = set()
        for lw in lwords:
            for (a, b) in right:
                glued.add(core.apply_word(lw, a, b))
        pts = frozenset(glued)
    _SUBWORD_SETS[word] = pts
    return pts


def bruhat_subword_oracle(u: GroupElement, w: GroupElement, max_length: int = 16) -> bool:
    """Bruhat test by exhaustive subword enumeration (subword property)."""
    return u.point in _subword_element_set(w.word_bytes, max_length)


def subword_stats(word: WordLike) -> tuple:
    """(raw subword count, distinct words, distinct elements) for a short word."""
    w = parse_word(word)
    if len(w) > 20:
        raise ResourceLimitError("subword_stats is for short words only")
    raw = 1 << len(w)
    words = set()
    for mask in range(raw):
        words.add(bytes(w[i] for i in range(len(w)) if mask & (1 << i)))
    elements = {core.eval_word(sw) for sw in words}
    return raw, len(words), len(elements)


# --- enumeration ------------------------------------------------------------

def elements_up_to_length(n: int):
    """All elements of length <= n, sorted by (length, canonical word)."""
    if n < 0:
        raise ValueError("length bound must be >= 0")
    seen = {IDENTITY.point}
    frontier = [IDENTITY]
    out = [IDENTITY]
    for _ in range(n):
        nxt = []
        for e in frontier:
            mask = left_descent_mask(e)
            for g in (0, 1, 2):
                if mask & (1 << g):
                    continue
                p = core.apply_gen(g, e.point[0], e.point[1])
                if p not in seen:
                    seen.add(p)
                    nxt.append(_intern(p))
        frontier = nxt
        out.extend(nxt)
    out.sort(key=GroupElement.sort_key)
    return out


# --- named elements ---------------------------------------------------------

W0 = canonicalize("121212")
X_ALPHA = canonicalize("121210")        # ststsr, fundamental translation, length 6
X_BETA = canonicalize("2121021210")     # (tstsr)^2, fundamental translation, length 10
