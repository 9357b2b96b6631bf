"""Pure-Python word/point kernels for the affine Weyl group of type G2.

The group is realized on the plane through the pairing coordinates
(a, b) = (<x, alpha_check>, <x, beta_check>), alpha the short and beta the
long simple root.  Points are stored scaled by 4 as integer pairs so that the
base point v0 = (1/4, 1/4) becomes (1, 1) and every generator action is
integer-affine:

    r: (A, B) -> (A, 4 - A - B)     reflection in <x, theta_check> = 1
    s: (A, B) -> (A + 3B, -B)       reflection in b = 0
    t: (A, B) -> (-A, A + B)        reflection in a = 0

Words are ``bytes`` over the generator encoding r=0, s=1, t=2.  Coordinates
grow linearly with word length, so arithmetic never overflows native ints for
any realistic input; this module nevertheless uses Python ints, and the
compiled twin (_core_cy) mirrors the exact same API with C integers.
"""

BACKEND_NAME = "pure"

# v0 = (1/4, 1/4), scaled by 4.
V0 = (1, 1)

R, S, T = 0, 1, 2


def apply_gen(g, a, b):
    """Apply one generator to a scaled point."""
    if g == 0:
        return a, 4 - a - b
    if g == 1:
        return a + 3 * b, -b
    return -a, a + b


def apply_word(word, a, b):
    """Apply a word (leftmost letter acts last) to a scaled point."""
    for g in reversed(word):
        if g == 0:
            a, b = a, 4 - a - b
        elif g == 1:
            a, b = a + 3 * b, -b
        else:
            a, b = -a, a + b
    return a, b


def eval_word(word):
    """Image of the base point under the word."""
    return apply_word(word, 1, 1)


def descent_mask(a, b):
    """Bitmask of left descents (bit 1<<g) read off the point geometrically."""
    m = 0
    if a + 2 * b > 4:
        m |= 1
    if b < 0:
        m |= 2
    if a < 0:
        m |= 4
    return m


def canonical_from_point(a, b):
    """Canonical reduced word: repeatedly strip the smallest left descent."""
    out = bytearray()
    while True:
        if a + 2 * b > 4:
            out.append(0)
            a, b = a, 4 - a - b
        elif b < 0:
            out.append(1)
            a, b = a + 3 * b, -b
        elif a < 0:
            out.append(2)
            a, b = -a, a + b
        else:
            break
    if (a, b) != V0:
        raise AssertionError("point not on the base orbit: %r" % ((a, b),))
    return bytes(out)


def length_from_point(a, b):
    """Coxeter length = number of strip steps back to the base alcove."""
    n = 0
    while True:
        if a + 2 * b > 4:
            a, b = a, 4 - a - b
        elif b < 0:
            a, b = a + 3 * b, -b
        elif a < 0:
            a, b = -a, a + b
        else:
            return n
        n += 1


def bruhat_leq(ua, ub, lu, wa, wb, lw):
    """Bruhat order test on scaled points with known lengths.

    Standard descent recursion: strip the smallest left descent of w, and
    strip it from u too whenever it is also a descent of u.
    """
    if lu > lw:
        return False
    while lw > lu:
        if wa + 2 * wb > 4:
            g = 0
        elif wb < 0:
            g = 1
        else:
            g = 2
        if g == 0:
            if ua + 2 * ub > 4:
                ua, ub = ua, 4 - ua - ub
                lu -= 1
            wa, wb = wa, 4 - wa - wb
        elif g == 1:
            if ub < 0:
                ua, ub = ua + 3 * ub, -ub
                lu -= 1
            wa, wb = wa + 3 * wb, -wb
        else:
            if ua < 0:
                ua, ub = -ua, ua + ub
                lu -= 1
            wa, wb = -wa, wa + wb
        lw -= 1
    return ua == wa and ub == wb


def subword_points(word):
    """Orbit points of all 2^n subwords (binary-tree enumeration)."""
    pts = set()
    n = len(word)
    for mask in range(1 << n):
        a, b = 1, 1
        m = mask
        for i in range(n - 1, -1, -1):
            if m & (1 << i):
                g = word[i]
                if g == 0:
                    a, b = a, 4 - a - b
                elif g == 1:
                    a, b = a + 3 * b, -b
                else:
                    a, b = -a, a + b
        pts.add((a, b))
    return pts
