"""The lowest two-sided cell c0 of the affine Weyl group of type G2.

c0 = {d_u t_lam w0 d_v^-1 : u, v in W0, lam dominant}, a(w) = 6 = l(w0) on
c0.  This module holds the twelve distinguished coset representatives d_u,
translation elements, the cell parametrization and decomposition, the
144-pair delta classification table (classes U1-U4), and the leading
coefficient mu(y,w) computed from delta values and G2 tensor multiplicities,
with the published tables kept as reference data for reproduction checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import rep, weyl
from .errors import (
    AmbiguousDecompositionError,
    NotInLowestCellError,
    PropositionViolationError,
    TableMismatchError,
)
from .kl import HeckeCombination, KLEngine
from .weyl import W0 as W0_ELT
from .weyl import GroupElement, X_ALPHA, X_BETA

#: W0 in the fixed order e, s, t, st, ts, sts, tst, stst, tsts, ststs, tstst, ststst.
W0_WORDS = ("", "1", "2", "12", "21", "121", "212", "1212", "2121",
            "12121", "21212", "121212")

#: Reference d_u words (letters), same order as W0_WORDS.
REFERENCE_D_WORDS = ("e", "tstsr", "ststrstsr", "tstrstsr", "stsr", "tsr",
                     "strstsr", "trstsr", "sr", "r", "rstsr", "rstsrtstsr")

#: Cell parametrization data: v_1..v_12 and the translations x, y.
V_WORDS = ("e", "r", "sr", "tsr", "stsr", "tstsr", "rstsr", "trstsr",
           "strstsr", "tstrstsr", "ststrstsr", "rststrstsr")
PARAM_X_WORD = "rststs"        # inverse of the x_alpha word
PARAM_Y_WORD = "rststrstst"    # (rstst)^2, inverse of the x_beta word

ZERO_WEIGHT = (0, 0)
XA_WEIGHT = (1, 0)
XB_WEIGHT = (0, 1)
Z_WEIGHTS = (ZERO_WEIGHT, XA_WEIGHT, XB_WEIGHT)

#: a-function values by two-sided cell; only a = 6 (c0) has machinery here.
A_VALUES = {"c1": 0, "c2": 1, "c3": 2, "c4": 3, "c0": 6}
A_C0 = 6


def w0_index(word: str) -> int:
    """Index 0..11 into the fixed W0 order."""
    return W0_WORDS.index(weyl.element(word).digits)


def _build_d_elements():
    """Recompute every d_u = u * prod of fundamental translations it inverts.

    u sends the simple root attached to generator g negative exactly when g
    is a right descent of u; generator s pairs with x_alpha, t with x_beta.
    Each recomputed element must match the stored reference word.
    """
    out = []
    for i, w in enumerate(W0_WORDS):
        u = weyl.element(w)
        d = u
        rd = weyl.right_descents(u)
        if 1 in rd:
            d = weyl.multiply(d, X_ALPHA)
        if 2 in rd:
            d = weyl.multiply(d, X_BETA)
        ref = weyl.element(REFERENCE_D_WORDS[i].replace("e", ""))
        if d != ref:
            raise TableMismatchError(
                "d_%s: recomputed %s but reference says %s"
                % (w or "e", d.digits, ref.digits))
        out.append(d)
    return tuple(out)


D_ELEMENTS = _build_d_elements()
V_ELEMENTS = tuple(weyl.element(w.replace("e", "")) for w in V_WORDS)
PARAM_X = weyl.element(PARAM_X_WORD)
PARAM_Y = weyl.element(PARAM_Y_WORD)


def d_element(u) -> GroupElement:
    """d_u for u given as W0 index or word."""
    if isinstance(u, int):
        return D_ELEMENTS[u]
    return D_ELEMENTS[w0_index(u)]


def translation_element(lam) -> GroupElement:
    """x_alpha^na * x_beta^nb; length 6*na + 10*nb."""
    na, nb = lam
    if na < 0 or nb < 0:
        raise ValueError("dominant weight needed: %r" % (lam,))
    e = weyl.IDENTITY
    for _ in range(na):
        e = weyl.multiply(e, X_ALPHA)
    for _ in range(nb):
        e = weyl.multiply(e, X_BETA)
    assert e.length == 6 * na + 10 * nb
    return e


def c0_element(i: int, j: int, a: int, b: int) -> GroupElement:
    """v_i * w0 * x^a * y^b * v_j^-1 with 1-based i, j."""
    if not (1 <= i <= 12 and 1 <= j <= 12):
        raise ValueError("i, j must be in 1..12")
    e = weyl.multiply(V_ELEMENTS[i - 1], W0_ELT)
    for _ in range(a):
        e = weyl.multiply(e, PARAM_X)
    for _ in range(b):
        e = weyl.multiply(e, PARAM_Y)
    return weyl.multiply(e, weyl.inverse(V_ELEMENTS[j - 1]))


@dataclass(frozen=True)
class C0Decomposition:
    """w = d_u * t_lam * w0 * d_v^-1 with additive lengths."""

    u: int
    lam: tuple
    v: int

    def reassemble(self) -> GroupElement:
        e = weyl.multiply(D_ELEMENTS[self.u], translation_element(self.lam))
        e = weyl.multiply(e, W0_ELT)
        return weyl.multiply(e, weyl.inverse(D_ELEMENTS[self.v]))

    def text(self) -> str:
        return "(%s,(%d,%d),%s)" % (W0_WORDS[self.u] or "e", self.lam[0],
                                    self.lam[1], W0_WORDS[self.v] or "e")


# two probe points whose difference avoids every linear reflection mirror
_P1 = (Fraction(1, 4), Fraction(1, 4))
_P2 = (Fraction(5, 4), Fraction(1, 2))

_DECOMPOSE_CACHE: dict = {}


def _translation_weight(m: GroupElement):
    """(na, nb) when m acts as the translation x_alpha^na x_beta^nb, else None."""
    q1 = weyl.apply_to_point(m, _P1)
    q2 = weyl.apply_to_point(m, _P2)
    d1 = (q1[0] - _P1[0], q1[1] - _P1[1])
    d2 = (q2[0] - _P2[0], q2[1] - _P2[1])
    if d1 != d2:
        return None
    # x_alpha translates by (0,-1), x_beta by (-3,0) in pairing coordinates
    da, db = d1
    nb = -da / 3
    na = -db
    if na.denominator != 1 or nb.denominator != 1:
        return None
    na, nb = int(na), int(nb)
    if na < 0 or nb < 0:
        return None
    return (na, nb)


def decompose_c0(w: GroupElement) -> Optional[C0Decomposition]:
    """Unique (u, lam, v) with w = d_u t_lam w0 d_v^-1, or None if w not in c0."""
    if w in _DECOMPOSE_CACHE:
        return _DECOMPOSE_CACHE[w]
    found = []
    for iu, du in enumerate(D_ELEMENTS):
        m1 = weyl.multiply(weyl.inverse(du), w)
        if m1.length != w.length - du.length:
            continue
        for iv, dv in enumerate(D_ELEMENTS):
            m = weyl.multiply(m1, dv)
            if m.length != m1.length - dv.length:
                continue
            t = weyl.multiply(m, W0_ELT)
            if t.length != m.length - 6:
                continue
            lam = _translation_weight(t)
            if lam is None:
                continue
            if t.length != 6 * lam[0] + 10 * lam[1]:
                continue
            found.append(C0Decomposition(iu, lam, iv))
    if len(found) > 1:
        raise AmbiguousDecompositionError(
            "%s decomposes %d ways: %s" % (w.digits, len(found),
                                           [f.text() for f in found]))
    result = found[0] if found else None
    _DECOMPOSE_CACHE[w] = result
    return result


def same_left_cell_c0(y: GroupElement, w: GroupElement) -> bool:
    dy, dw = decompose_c0(y), decompose_c0(w)
    if dy is None or dw is None:
        raise NotInLowestCellError("both elements must lie in the lowest cell")
    return dy.v == dw.v


def same_right_cell_c0(y: GroupElement, w: GroupElement) -> bool:
    dy, dw = decompose_c0(y), decompose_c0(w)
    if dy is None or dw is None:
        raise NotInLowestCellError("both elements must lie in the lowest cell")
    return dy.u == dw.u


@dataclass(frozen=True)
class DeltaRecord:
    """One pair (u, u') with its three delta values and its class tag."""

    u: int
    uprime: int
    deltas: tuple          # (delta at z=0, at z=x_alpha, at z=x_beta)
    klass: str             # "U1" | "U2" | "U3" | "U4" | ""

    @property
    def d_u_word(self) -> str:
        return REFERENCE_D_WORDS[self.u]

    @property
    def d_uprime_word(self) -> str:
        return REFERENCE_D_WORDS[self.uprime]


def _classify(deltas: tuple) -> str:
    nz = tuple(i for i, d in enumerate(deltas) if d)
    if not nz:
        return ""
    if len(nz) == 1:
        return "U1"
    if nz == (0, 1):
        return "U2"
    if nz == (0, 2):
        return "U3"
    if nz == (0, 1, 2):
        return "U4"
    raise PropositionViolationError("unclassifiable delta pattern %r" % (deltas,))


class LowestCell:
    """Delta table and mu values for c0, backed by one KL engine."""

    def __init__(self, engine: Optional[KLEngine] = None):
        self.engine = engine if engine is not None else KLEngine()
        self._z_elements = tuple(
            weyl.multiply(translation_element(z), W0_ELT) for z in Z_WEIGHTS)
        self._records: dict = {}
        self._table = None

    def left_factor(self, u: int) -> GroupElement:
        """w0 * d_u^-1."""
        return weyl.multiply(W0_ELT, weyl.inverse(D_ELEMENTS[u]))

    def right_factor(self, u: int) -> GroupElement:
        """d_u * w0."""
        return weyl.multiply(D_ELEMENTS[u], W0_ELT)

    def pair_product(self, u: int, uprime: int) -> HeckeCombination:
        return self.engine.c_product(self.left_factor(u), self.right_factor(uprime))

    def record(self, u: int, uprime: int) -> DeltaRecord:
        key = (u, uprime)
        got = self._records.get(key)
        if got is not None:
            return got
        comb = self.pair_product(u, uprime)
        deltas = []
        for w, h in comb.terms.items():
            dec = decompose_c0(w)
            if dec is None:
                raise PropositionViolationError(
                    "support element %s of pair (%d,%d) is outside c0"
                    % (w.digits, u, uprime))
            if h.degree > A_C0:
                raise PropositionViolationError(
                    "h at %s has v-degree %d > a = %d" % (w.digits, h.degree, A_C0))
            if h.coeff(A_C0 - 1) and w not in self._z_elements:
                raise PropositionViolationError(
                    "nonzero delta at %s outside {0, x_alpha, x_beta}" % w.digits)
        for zelt in self._z_elements:
            d = comb.get(zelt).coeff(A_C0 - 1)
            if d not in (0, 1):
                raise PropositionViolationError(
                    "delta = %d not in {0,1} at pair (%d,%d)" % (d, u, uprime))
            deltas.append(d)
        rec = DeltaRecord(u, uprime, tuple(deltas), _classify(tuple(deltas)))
        self._records[key] = rec
        return rec

    def delta_triple(self, u, uprime, z) -> int:
        """delta_{w0 d_u^-1, d_u' w0, z w0} for z in {0, x_alpha, x_beta}."""
        iu = u if isinstance(u, int) else w0_index(u)
        iv = uprime if isinstance(uprime, int) else w0_index(uprime)
        return self.record(iu, iv).deltas[Z_WEIGHTS.index(tuple(z))]

    def delta_table(self):
        """All 144 records, row-major in the fixed W0 order."""
        if self._table is None:
            self._table = tuple(self.record(u, v)
                                for u in range(12) for v in range(12))
        return self._table

    def u_class(self, name: str):
        """Members of one class as (u, uprime) index pairs."""
        return tuple((r.u, r.uprime) for r in self.delta_table() if r.klass == name)

    def u1_triples(self):
        """U1 as (u, uprime, z-index) with the unique nonzero z."""
        out = []
        for r in self.delta_table():
            if r.klass == "U1":
                out.append((r.u, r.uprime, r.deltas.index(1)))
        return tuple(out)

    # -- the mu formula ---------------------------------------------------------

    def mu_lowest(self, y: GroupElement, w: GroupElement) -> int:
        """mu(y,w) for y, w in c0 via delta values and tensor multiplicities."""
        dy = decompose_c0(y)
        dw = decompose_c0(w)
        if dy is None or dw is None:
            raise NotInLowestCellError(
                "mu_lowest needs lowest-cell elements, got %s, %s"
                % (y.digits, w.digits))
        same_left = dy.v == dw.v
        same_right = dy.u == dw.u
        if not same_left and not same_right:
            return 0
        if same_left and same_right:
            # same left and right cell: mu vanishes
            return 0
        if same_right:
            # pass to inverses, which share a left cell
            dy = C0Decomposition(dy.v, rep.dual(dy.lam), dy.u)
            dw = C0Decomposition(dw.v, rep.dual(dw.lam), dw.u)
        x = rep.dual(dy.lam)
        xp = dw.lam
        total = 0
        for zi, z in enumerate(Z_WEIGHTS):
            d = self.record(dy.u, dw.u).deltas[zi]
            if d:
                total += rep.tensor_mult(x, xp, rep.dual(z)) * d
        if total > 3:
            raise PropositionViolationError(
                "mu(%s,%s) = %d > 3" % (y.digits, w.digits, total))
        return total

    def mu_by_parts(self, u, x, uprime, xp) -> int:
        """mu for left-cell mates given directly by (u, weight) parts."""
        iu = u if isinstance(u, int) else w0_index(u)
        iv = uprime if isinstance(uprime, int) else w0_index(uprime)
        if iu == iv:
            return 0
        rec = self.record(iu, iv)
        total = 0
        for zi, z in enumerate(Z_WEIGHTS):
            if rec.deltas[zi]:
                total += rep.tensor_mult(rep.dual(tuple(x)), tuple(xp), rep.dual(z))
        if total > 3:
            raise PropositionViolationError(
                "mu at (%d,%r,%d,%r) = %d > 3" % (iu, x, iv, xp, total))
        return total


# --- published classification tables, kept verbatim for reproduction --------

Z_NAMES = ("0", "xa", "xb")

#: Raw printed U1 list (contains duplicates and one malformed token).
REFERENCE_U1_RAW = (
    ("e", "r", "0"), ("r", "e", "0"), ("e", "tstsr", "xa"), ("tstsr", "e", "xa"),
    ("e", "strstsr", "xa"), ("strstsr", "e", "xa"),
    ("sr", "r", "0"), ("r", "trstsr", "xa"), ("trstsr", "r", "xa"),
    ("r", "tstrstsr", "0"), ("tstrstsr", "r", "0"), ("r", "trstsr", "xa"),
    ("trstsr", "r", "xa"), ("r", "sr", "0"), ("sr", "tsr", "0"), ("tsr", "sr", "0"),
    ("sr", "rstsr", "xa"), ("rstsr", "sr", "xa"),
    ("sr", "ststrstsr", "0"), ("ststrstsr", "sr", "0"), ("tsr", "stsr", "0"),
    ("stsr", "tsr", "0"), ("tsr", "rststrstsr", "xa"),
    ("rststrstsr", "tsr", "xa"), ("stsr", "tstsr", "0"), ("tstsr", "stsr", "0"),
    ("stsr", "rstsr", "0"), ("rstsr", "stsr", "0"),
    ("stsr", "ststrstsr", "xa"), ("ststrstsr", "stsr", "xa"),
    ("tstsr", "trstsr", "0"), ("trstsr", "tstsr", "0"),
    ("tstsr", "tstrstsr", "xa"), ("tstrstsr", "tstsr", "xa"),
    ("rstsr", "trstsr", "0"), ("trstsr", "rstsr", "0"),
    ("rstsr", "rststrstsr", "xa"), ("rststrstsr", "rstsr", "xa"),
    ("trstsr", "strstsr", "0"), ("strstsr", "trstsr", "0"),
    ("rstsrts", "tstrstsr", "0"), ("tstrstsr", "strstsr", "0"),
    ("strstsr", "tstrstsr", "0"), ("tstrstsr", "strstsr", "0"),
    ("tstrstsr", "ststrstsr", "0"), ("ststrstsr", "tstrstsr", "0"),
)

REFERENCE_U2 = (
    ("sr", "strstsr"), ("strstsr", "sr"), ("tsr", "trstsr"), ("trstsr", "tsr"),
    ("tsr", "tstrstsr"), ("tstrstsr", "tsr"), ("stsr", "strstsr"),
    ("strstsr", "stsr"),
)
REFERENCE_U3 = (("e", "ststrstsr"), ("ststrstsr", "e"))
REFERENCE_U4 = (("ststrstsr", "rststrstsr"), ("rststrstsr", "ststrstsr"))

_D_BY_ELEMENT = {d: i for i, d in enumerate(D_ELEMENTS)}


def d_word_index(word: str):
    """W0 index of a d-element given by any spelling, or None if not a d-word."""
    try:
        elt = weyl.element(word.replace("e", ""))
    except Exception:
        return None
    return _D_BY_ELEMENT.get(elt)


def reference_pairs(raw):
    """Parse printed (d_u, d_u') pairs to index pairs; drop malformed ones."""
    good, bad = [], []
    for entry in raw:
        iu = d_word_index(entry[0])
        iv = d_word_index(entry[1])
        if iu is None or iv is None:
            bad.append(entry)
        else:
            good.append((iu, iv) + tuple(entry[2:]))
    return good, bad


def compare_u1_with_reference(cell: LowestCell) -> dict:
    """Diff the computed U1 set against the printed list.

    Returns counts plus the surviving discrepancies: entries printed but not
    computed, computed but not printed, and unparseable printed tokens.
    """
    computed = set(cell.u1_triples())
    good, malformed = reference_pairs(REFERENCE_U1_RAW)
    printed = {(iu, iv, Z_NAMES.index(z)) for (iu, iv, z) in good}
    return {
        "computed": len(computed),
        "printed_distinct": len(printed),
        "printed_raw": len(REFERENCE_U1_RAW),
        "missing_from_computed": sorted(printed - computed),
        "extra_in_computed": sorted(computed - printed),
        "malformed": list(malformed),
    }


def u_class_matches_reference(cell: LowestCell, name: str, reference) -> bool:
    want = {tuple(d_word_index(w) for w in pair) for pair in reference}
    return set(cell.u_class(name)) == want


# --- table emission -----------------------------------------------------------

DELTA_COLUMNS = ("u_index", "u_word", "d_u", "uprime_index", "uprime_word",
                 "d_uprime", "delta_0", "delta_xa", "delta_xb", "class")


def delta_rows(cell: LowestCell):
    """Row-major table rows, 1-based W0 indices, words in digit form."""
    rows = []
    for r in cell.delta_table():
        rows.append((
            str(r.u + 1), W0_WORDS[r.u] or "e", r.d_u_word,
            str(r.uprime + 1), W0_WORDS[r.uprime] or "e", r.d_uprime_word,
            str(r.deltas[0]), str(r.deltas[1]), str(r.deltas[2]),
            r.klass or "none",
        ))
    return rows


def mu_rows(cell: LowestCell, bound_a: int, bound_b: int):
    """mu over all same-left-cell pairs with weight coordinates in bounds."""
    weights = [(a, b) for a in range(bound_a + 1) for b in range(bound_b + 1)]
    rows = []
    for u in range(12):
        for x in weights:
            for v in range(12):
                for xp in weights:
                    mu = cell.mu_by_parts(u, x, v, xp) if u != v else 0
                    rows.append((str(u + 1), "(%d,%d)" % x, str(v + 1),
                                 "(%d,%d)" % xp, str(mu)))
    return rows


MU_COLUMNS = ("u_index", "weight", "uprime_index", "weight_prime", "mu")
