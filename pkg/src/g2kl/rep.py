"""Finite-dimensional representation theory of the simple Lie algebra G2.

Weights are integer pairs (n_alpha, n_beta) in the fundamental-weight basis,
the same convention the lowest-cell parametrization uses (x_alpha is the
7-dimensional fundamental, x_beta the 14-dimensional adjoint).  All
arithmetic is exact: the symmetric form is carried 3x-scaled so Freudenthal
runs on integers, and every multiplicity is asserted integral.

dimensions:   weyl_dim           (Weyl dimension formula)
characters:   freudenthal_mults  (Freudenthal recursion)
tensors:      tensor_mult        (Klimyk alternating sum)
oracle:       char_product_oracle (character convolution + highest-weight strip)
"""

from __future__ import annotations

import numpy as np

Weight = tuple

# Positive roots in fundamental-weight coordinates.
POS_ROOTS = ((2, -1), (-3, 2), (-1, 1), (1, 0), (3, -1), (0, 1))
SIMPLE_ALPHA = (2, -1)   # short
SIMPLE_BETA = (-3, 2)    # long
RHO = (1, 1)

# Pairings <lam, gamma_check> with the six positive coroots, as linear forms.
_COROOT_FORMS = ((1, 0), (0, 1), (1, 1), (1, 2), (1, 3), (2, 3))
_RHO_PRODUCTS = 120  # product of the six forms at rho


def form3(lam: Weight, mu: Weight) -> int:
    """3 * (lam, mu) for the W-invariant form normalized by (beta,beta)=2."""
    n1, n2 = lam
    m1, m2 = mu
    return 2 * n1 * m1 + 3 * n1 * m2 + 3 * n2 * m1 + 6 * n2 * m2


def height(lam: Weight) -> int:
    """<lam, rho_check> = half the translation length 3*n_alpha + 5*n_beta."""
    return 3 * lam[0] + 5 * lam[1]


def is_dominant(lam: Weight) -> bool:
    return lam[0] >= 0 and lam[1] >= 0


def _s1(w):
    return (-w[0], w[0] + w[1])


def _s2(w):
    return (w[0] + 3 * w[1], -w[1])


def _weyl_orbit(w):
    orbit = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for x in frontier:
            for y in (_s1(x), _s2(x)):
                if y not in orbit:
                    orbit.add(y)
                    nxt.append(y)
        frontier = nxt
    return orbit


def weyl_group_order() -> int:
    return len(_weyl_orbit(RHO))


def dominant_conjugate(w: Weight) -> tuple:
    """(dominant representative, (-1)^(reflection count) that reaches it)."""
    n1, n2 = w
    sign = 1
    while True:
        if n1 < 0:
            n1, n2 = -n1, n1 + n2
            sign = -sign
        elif n2 < 0:
            n1, n2 = n1 + 3 * n2, -n2
            sign = -sign
        else:
            return (n1, n2), sign


def weyl_dim(lam: Weight) -> int:
    """Dimension of the irreducible module V(lam)."""
    if not is_dominant(lam):
        raise ValueError("weight not dominant: %r" % (lam,))
    n1, n2 = lam[0] + 1, lam[1] + 1
    num = 1
    for c1, c2 in _COROOT_FORMS:
        num *= c1 * n1 + c2 * n2
    assert num % _RHO_PRODUCTS == 0
    return num // _RHO_PRODUCTS


_FREUDENTHAL: dict = {}


def _dominant_weights_below(lam: Weight):
    """Dominant mu with lam - mu a nonnegative root-lattice combination."""
    n1, n2 = lam
    out = []
    for k1 in range(0, 2 * n1 + 3 * n2 + 1):
        for k2 in range(0, n1 + 2 * n2 + 1):
            m1 = n1 - 2 * k1 + 3 * k2
            m2 = n2 + k1 - 2 * k2
            if m1 >= 0 and m2 >= 0:
                out.append(((m1, m2), k1 + k2))
    out.sort(key=lambda p: (p[1], p[0]))
    return [w for w, _ in out]


def freudenthal_mults(lam: Weight) -> dict:
    """All weights of V(lam) with multiplicities, W-orbit expanded."""
    if not is_dominant(lam):
        raise ValueError("weight not dominant: %r" % (lam,))
    cached = _FREUDENTHAL.get(lam)
    if cached is not None:
        return dict(cached)

    lam_rho = (lam[0] + 1, lam[1] + 1)
    norm_top = form3(lam_rho, lam_rho)
    dominant_mults: dict = {}

    def mult_of(w):
        dom, _ = dominant_conjugate(w)
        return dominant_mults.get(dom, 0)

    for mu in _dominant_weights_below(lam):
        if mu == lam:
            dominant_mults[lam] = 1
            continue
        mu_rho = (mu[0] + 1, mu[1] + 1)
        denom = norm_top - form3(mu_rho, mu_rho)
        assert denom > 0
        rhs = 0
        for g in POS_ROOTS:
            k = 1
            while True:
                nu = (mu[0] + k * g[0], mu[1] + k * g[1])
                m = mult_of(nu)
                if m == 0:
                    # weights of V(lam) along mu + N*g form an unbroken string
                    break
                rhs += m * form3(nu, g)
                k += 1
        rhs *= 2
        assert rhs % denom == 0, (lam, mu)
        m = rhs // denom
        if m:
            dominant_mults[mu] = m

    full: dict = {}
    for dom, m in dominant_mults.items():
        for w in _weyl_orbit(dom):
            full[w] = m
    assert sum(full.values()) == weyl_dim(lam)
    _FREUDENTHAL[lam] = dict(full)
    return full


_KLIMYK: dict = {}


def klimyk_decompose(lam: Weight, lam2: Weight) -> dict:
    """Full decomposition of V(lam) (x) V(lam2) by the Klimyk alternating sum."""
    key = (lam, lam2)
    cached = _KLIMYK.get(key)
    if cached is not None:
        return dict(cached)
    acc: dict = {}
    for mu, k in freudenthal_mults(lam).items():
        xi = (mu[0] + lam2[0] + 1, mu[1] + lam2[1] + 1)
        dom, sign = dominant_conjugate(xi)
        if dom[0] == 0 or dom[1] == 0:
            continue
        nu = (dom[0] - 1, dom[1] - 1)
        acc[nu] = acc.get(nu, 0) + sign * k
    out = {nu: m for nu, m in acc.items() if m}
    assert all(m > 0 for m in out.values()), (lam, lam2, out)
    _KLIMYK[key] = dict(out)
    return out


def tensor_mult(lam: Weight, lam2: Weight, nu: Weight) -> int:
    """Multiplicity of V(nu) in V(lam) (x) V(lam2)."""
    for w in (lam, lam2, nu):
        if not is_dominant(w):
            raise ValueError("weight not dominant: %r" % (w,))
    return klimyk_decompose(lam, lam2).get(nu, 0)


def dual(lam: Weight) -> Weight:
    """Highest weight of the dual module, -w0(lam); the identity for G2."""
    w = lam
    # w0 = (s1 s2)^3 acts as -1 on the plane; compute it rather than assume
    for _ in range(3):
        w = _s1(_s2(w))
    assert w == (-lam[0], -lam[1])
    return (-w[0], -w[1])


# --- independent character-product oracle ------------------------------------

def _char_grid(mults: dict):
    """Dense int64 grid of a character, with offsets."""
    lo1 = min(w[0] for w in mults)
    lo2 = min(w[1] for w in mults)
    hi1 = max(w[0] for w in mults)
    hi2 = max(w[1] for w in mults)
    grid = np.zeros((hi1 - lo1 + 1, hi2 - lo2 + 1), dtype=np.int64)
    for (a, b), m in mults.items():
        grid[a - lo1, b - lo2] = m
    return grid, (lo1, lo2)


def char_product_oracle(lam: Weight, lam2: Weight, dim_cap: int = 10**9) -> dict:
    """Decompose V(lam) (x) V(lam2) by brute-force character arithmetic.

    Multiplies the formal characters, then greedily strips the highest
    dominant weight present.  Fully independent of tensor_mult.
    """
    d = weyl_dim(lam) * weyl_dim(lam2)
    if d > dim_cap:
        raise ValueError("product dimension %d exceeds cap %d" % (d, dim_cap))

    g1, off1 = _char_grid(freudenthal_mults(lam))
    g2, off2 = _char_grid(freudenthal_mults(lam2))
    prod = np.zeros((g1.shape[0] + g2.shape[0] - 1, g1.shape[1] + g2.shape[1] - 1),
                    dtype=np.int64)
    nz = np.nonzero(g1)
    for i, j in zip(*nz):
        prod[i:i + g2.shape[0], j:j + g2.shape[1]] += g1[i, j] * g2
    off = (off1[0] + off2[0], off1[1] + off2[1])

    # score = height-major, then lexicographic tiebreak; -1 off the dominant cone
    ii, jj = np.meshgrid(
        np.arange(prod.shape[0]) + off[0],
        np.arange(prod.shape[1]) + off[1],
        indexing="ij",
    )
    dominant = (ii >= 0) & (jj >= 0)
    score = np.where(dominant, ((3 * ii + 5 * jj) << 22) + (ii << 11) + jj, -1)

    out: dict = {}
    while prod.any():
        live = np.where(prod != 0, score, -1)
        k = int(live.argmax())
        if live.ravel()[k] < 0:
            raise AssertionError("nonzero character with no dominant weight left")
        i0, j0 = divmod(k, prod.shape[1])
        w = (i0 + off[0], j0 + off[1])
        m = int(prod[i0, j0])
        assert m > 0, "negative multiplicity during strip: %r -> %d" % (w, m)
        out[w] = m
        comp, coff = _char_grid(freudenthal_mults(w))
        a0 = coff[0] - off[0]
        b0 = coff[1] - off[1]
        assert a0 >= 0 and b0 >= 0
        assert a0 + comp.shape[0] <= prod.shape[0] and b0 + comp.shape[1] <= prod.shape[1]
        prod[a0:a0 + comp.shape[0], b0:b0 + comp.shape[1]] -= m * comp
    assert sum(m * weyl_dim(w) for w, m in out.items()) == d
    return out


def weight_text(lam: Weight) -> str:
    return "(%d,%d)" % (lam[0], lam[1])
