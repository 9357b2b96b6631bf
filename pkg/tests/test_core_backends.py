"""Compiled and pure word-kernel backends must agree exactly."""

import random

import pytest

from g2kl import _core_py

try:
    from g2kl import _core_cy
except ImportError:
    _core_cy = None

needs_ext = pytest.mark.skipif(_core_cy is None, reason="compiled core not built")


def rand_words(n, maxlen, seed):
    rng = random.Random(seed)
    return [bytes(rng.randint(0, 2) for _ in range(rng.randint(0, maxlen)))
            for _ in range(n)]


@needs_ext
def test_eval_and_canonical_agree():
    for w in rand_words(300, 24, 101):
        assert _core_cy.eval_word(w) == _core_py.eval_word(w)
        a, b = _core_py.eval_word(w)
        assert _core_cy.canonical_from_point(a, b) == _core_py.canonical_from_point(a, b)
        assert _core_cy.descent_mask(a, b) == _core_py.descent_mask(a, b)
        assert _core_cy.length_from_point(a, b) == _core_py.length_from_point(a, b)


@needs_ext
def test_apply_word_agree():
    rng = random.Random(303)
    for w in rand_words(200, 16, 202):
        a = rng.randint(-50, 50)
        b = rng.randint(-50, 50)
        assert _core_cy.apply_word(w, a, b) == _core_py.apply_word(w, a, b)


@needs_ext
def test_bruhat_agree():
    words = rand_words(60, 10, 404)
    pts = [(_core_py.eval_word(w), _core_py.length_from_point(*_core_py.eval_word(w)))
           for w in words]
    for (pu, lu) in pts:
        for (pw, lw) in pts:
            got = _core_cy.bruhat_leq(pu[0], pu[1], lu, pw[0], pw[1], lw)
            want = _core_py.bruhat_leq(pu[0], pu[1], lu, pw[0], pw[1], lw)
            assert got == want


@needs_ext
def test_subword_points_agree():
    for w in rand_words(40, 10, 505):
        assert _core_cy.subword_points(w) == _core_py.subword_points(w)


def test_pure_backend_forced(monkeypatch):
    # core.py honors G2KL_PURE at import; simulate by checking the pure module
    # directly satisfies the same contract on a known value
    assert _core_py.eval_word(b"\x01\x02\x01\x02\x01\x02") == (-1, -1)
    assert _core_py.canonical_from_point(-1, -1) == b"\x01\x02\x01\x02\x01\x02"
