import random

import pytest

from qweb import sergeev as sg
from qweb.scalars import Scalar, ONE


def S(word, n):
    return sg.straighten(word, n)


def test_defining_relations():
    n = 3
    one = sg.one(n)
    for i in (1, 2):
        assert S([("s", i), ("s", i)], n) == one
    assert S([("s", 1), ("s", 2), ("s", 1)], n) == S([("s", 2), ("s", 1), ("s", 2)], n)
    for i in (1, 2, 3):
        assert S([("c", i), ("c", i)], n) == one
    assert S([("c", 1), ("c", 2)], n) == sg.scale(S([("c", 2), ("c", 1)], n), -1)
    assert S([("c", 1), ("x", 1)], n) == sg.scale(S([("x", 1), ("c", 1)], n), -1)
    assert S([("c", 1), ("x", 2)], n) == S([("x", 2), ("c", 1)], n)
    assert S([("x", 1), ("x", 2)], n) == S([("x", 2), ("x", 1)], n)
    assert S([("s", 1), ("c", 1)], n) == S([("c", 2), ("s", 1)], n)
    assert S([("s", 1), ("c", 3)], n) == S([("c", 3), ("s", 1)], n)


def test_mixed_relation():
    # x1 s1 = s1 x2 + 1 - c1 c2 and s1 x1 = x2 s1 + 1 + c1 c2
    n = 2
    lhs = S([("x", 1), ("s", 1)], n)
    rhs = sg.add(
        sg.add(S([("s", 1), ("x", 2)], n), sg.one(n)),
        sg.scale(S([("c", 1), ("c", 2)], n), -1),
    )
    assert lhs == rhs
    lhs = S([("s", 1), ("x", 1)], n)
    rhs = sg.add(
        sg.add(S([("x", 2), ("s", 1)], n), sg.one(n)),
        S([("c", 1), ("c", 2)], n),
    )
    assert lhs == rhs


def test_pbw_output_form():
    rng = random.Random(1)
    for _ in range(150):
        n = rng.choice([2, 3])
        word = []
        for _ in range(rng.randrange(0, 7)):
            kind = rng.choice(["s", "x", "c"])
            idx = rng.randrange(1, n) if kind == "s" else rng.randrange(1, n + 1)
            word.append((kind, idx))
        elem = S(word, n)
        for mon in elem:
            assert sorted(mon.perm) == list(range(1, n + 1))
            assert all(e in (0, 1) for e in mon.cexp)
            assert all(e >= 0 for e in mon.xexp)


def test_multiply_matches_straighten():
    rng = random.Random(2)
    for _ in range(200):
        n = rng.choice([2, 3])
        w1, w2 = [], []
        for _ in range(rng.randrange(0, 4)):
            kind = rng.choice(["s", "x", "c"])
            w1.append((kind, rng.randrange(1, n) if kind == "s" else rng.randrange(1, n + 1)))
        for _ in range(rng.randrange(0, 4)):
            kind = rng.choice(["s", "x", "c"])
            w2.append((kind, rng.randrange(1, n) if kind == "s" else rng.randrange(1, n + 1)))
        assert sg.multiply(S(w1, n), S(w2, n)) == S(w1 + w2, n)


def test_parity_additive():
    n = 2
    u = S([("c", 1)], n)
    v = S([("c", 2), ("x", 1)], n)
    assert sg.parity(u) == 1
    assert sg.parity(sg.multiply(u, v)) == 0


def test_finite_dimension_count():
    # x-degree-zero monomials for n = 2: 2^2 * 2! = 8
    n = 2
    from itertools import permutations, product

    mons = [
        sg.PBWMonomial(p, c, (0, 0))
        for p in permutations((1, 2))
        for c in product((0, 1), repeat=2)
    ]
    assert len(mons) == 8
    seen = set()
    for m in mons:
        elem = sg.multiply({m: ONE}, sg.one(n))
        assert list(elem) == [m]
        seen.add(m)
    assert len(seen) == 8


def test_element_str():
    n = 2
    assert sg.element_str(sg.one(n)) == "1"
    assert sg.element_str({}) == "0"
    s = sg.element_str(S([("x", 1), ("s", 1)], n))
    assert "s1 x2" in s and "c1 c2" in s


def test_word_validation():
    with pytest.raises(ValueError):
        sg.straighten([("s", 2)], 2)
    with pytest.raises(ValueError):
        sg.straighten([("x", 3)], 2)
    with pytest.raises(ValueError):
        sg.straighten([("q", 1)], 2)
