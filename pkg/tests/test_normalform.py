import math
import random

import pytest

from qweb import combinat as cb
from qweb import normalform as nf
from qweb import sergeev as sg
from qweb import webterm as wt
from qweb.scalars import Scalar, ONE


def test_cfd_basis_counts():
    basis = nf.cfd_basis((2,), (2,), 2)
    assert [sum(1 for b in basis if b.degree == d) for d in (0, 1, 2)] == [2, 4, 6]
    assert len(nf.cfd_basis_finite((1, 1), (1, 1))) == 8
    assert nf.cfd_basis((2,), (2,), -1) == []
    assert nf.cfd_basis((2,), (1,), 3) == []


def test_cfd_validation():
    with pytest.raises(ValueError):
        nf.ElementaryCFD((2,), (2,), ((1,),), ((((), ()),),))
    with pytest.raises(ValueError):
        nf.ElementaryCFD((2,), (2,), ((2,),), ((((2, 2), ()),),))
    c = nf.ElementaryCFD((2,), (2,), ((2,),), ((((2, 1), (1, 1)),),))
    assert c.degree == 3 and c.parity == 0


def test_embed_simple():
    ident = nf.ElementaryCFD(
        (1, 1), (1, 1), ((1, 0), (0, 1)), ((((), ()), ((), ())), (((), ()), ((), ())))
    )
    assert nf.embed(ident) == wt.identity((1, 1))
    swap = nf.ElementaryCFD(
        (1, 1), (1, 1), ((0, 1), (1, 0)), ((((), ()), ((), ())), (((), ()), ((), ())))
    )
    assert nf.embed(swap) == wt.cross(1, 1)
    dotted = nf.ElementaryCFD((2,), (2,), ((2,),), ((((1,), ()),),))
    assert nf.embed(dotted) == wt.omega_circ(2, 0)


def test_thin_explode_examples():
    e = nf.thin_explode(wt.identity((2,)))
    n = 2
    mon_1 = sg.identity_monomial(n)
    s1 = sg.PBWMonomial((2, 1), (0, 0), (0, 0))
    assert e == {mon_1: ONE, s1: ONE}
    e = nf.thin_explode(wt.wdot(1))
    assert e == {sg.PBWMonomial((1,), (1,), (0,)): ONE}
    # the dotted balloon explodes to a! times the black dot
    for a in (2, 3):
        from qweb.relations import dotted_balloon

        assert nf.thin_explode(dotted_balloon(a)) == nf.thin_explode(
            math.factorial(a) * wt.bdot(a)
        )


def test_explosion_is_multiplicative():
    # explode(f o g) * (interface factorials) = explode(f) * explode(g)
    f = wt.merge(1, 1)
    g = wt.split(1, 1)
    lhs = sg.scale(
        sg.multiply(nf.thin_explode(f), nf.thin_explode(g)),
        Scalar(1) * 1,
    )
    rhs = sg.scale(nf.thin_explode(wt.compose(f, g)), Scalar.of(1))
    # interface is (1,1): factorial product 1
    assert lhs == rhs
    f2 = wt.split(1, 1)
    g2 = wt.merge(1, 1)
    lhs = sg.multiply(nf.thin_explode(f2), nf.thin_explode(g2))
    rhs = sg.scale(nf.thin_explode(wt.compose(f2, g2)), Scalar.of(2))
    assert lhs == rhs


def test_reduce_examples():
    r = nf.reduce_morphism(wt.compose(wt.merge(1, 1), wt.split(1, 1)))
    ((b, c),) = r.items_sorted()
    assert b.shape == ((2,),) and b.degree == 0 and c == Scalar.of(2)

    for a in (1, 2, 3):
        r = nf.reduce_morphism(wt.compose(wt.wdot(a), wt.wdot(a)))
        ((b, c),) = r.items_sorted()
        assert c == Scalar.of(a) and b.degree == 0 and b.parity == 0

    from qweb.relations import balloon_with

    f = balloon_with(1, 1, left=wt.wdot(1), right=wt.wdot(1))
    assert nf.reduce_morphism(f).is_zero()


def test_reduce_embed_roundtrip():
    for lam, mu, deg in [((2,), (2,), 3), ((1, 1), (2,), 2), ((2, 1), (1, 2), 1)]:
        for b in nf.cfd_basis(lam, mu, deg):
            assert nf.reduce_morphism(nf.embed(b)).coords == {b: ONE}


def test_equal_by_explosion():
    lhs = wt.compose(wt.merge(2, 1), wt.split(2, 1))
    rhs = 3 * wt.identity((3,))
    assert nf.equal_by_explosion(lhs, rhs)
    assert not nf.equal_by_explosion(lhs, 2 * wt.identity((3,)))


def test_push_dot_exact_omega():
    for (a, b, r) in [(1, 1, 1), (1, 2, 1), (2, 1, 2), (2, 2, 1)]:
        lhs, rhs = nf.push_dot_exact("merge", a, b, r, "omega")
        assert nf.equal_by_explosion(lhs, rhs)
        lhs, rhs = nf.push_dot_exact("split", a, b, r, "omega")
        assert nf.equal_by_explosion(lhs, rhs)


def test_push_dot_leading_omegac():
    # the omega-circ push holds up to strictly lower black-dot degree
    for (a, b, r) in [(1, 1, 1), (2, 1, 1), (1, 2, 1)]:
        lhs, rhs = nf.push_dot_exact("merge", a, b, r, "omegac")
        diff = nf.reduce_morphism(lhs - rhs)
        assert diff.degree() < r or diff.is_zero()
    lhs, rhs = nf.push_dot_exact("split", 1, 1, 0, "omegac")
    assert nf.equal_by_explosion(lhs, rhs)


def test_phi_and_decode_roundtrip():
    rng = random.Random(17)
    for _ in range(40):
        n = rng.choice([2, 3])
        word = []
        for _ in range(rng.randrange(0, 6)):
            kind = rng.choice(["s", "x", "c"])
            idx = rng.randrange(1, n) if kind == "s" else rng.randrange(1, n + 1)
            word.append((kind, idx))
        lhs = nf.decode(nf.reduce_morphism(nf.phi_word(word, n)))
        assert lhs == sg.straighten(word, n)


def test_decode_identity():
    nm = nf.reduce_morphism(wt.identity((1, 1)))
    assert nf.decode(nm) == sg.one(2)
    with pytest.raises(ValueError):
        nf.decode(nf.reduce_morphism(wt.identity((2,))))


def test_spanning_random_words():
    rng = random.Random(23)
    for _ in range(25):
        m = rng.choice([2, 3])
        f = wt.random_morphism(rng, m, rng.randrange(1, 6), max_bdot_degree=2)
        nm = nf.reduce_morphism(f)  # must not raise
        g = wt.zero(f.src, f.tgt)
        for b, c in nm.coords.items():
            g = g + c * nf.embed(b)
        assert nf.equal_by_explosion(f, g)


def test_leading_class():
    rep = nf.leading_class(wt.omega(3, 2))
    assert rep["in_D"] and rep["degree"] == 2
    rep = nf.leading_class(wt.compose(wt.omega_circ(3, 1), wt.omega_circ(3, 1)))
    assert rep["in_Z"]
    rep = nf.leading_class(wt.omega_circ(3, 1))
    assert not rep["in_D"]
    with pytest.raises(ValueError):
        nf.leading_class(wt.merge(1, 1))


def test_normal_morphism_json():
    r = nf.reduce_morphism(wt.compose(wt.merge(1, 1), wt.split(1, 1)))
    j = r.to_json()
    assert j["source"] == [2] and j["target"] == [2]
    assert j["terms"][0]["coefficient"] == {"re": "2", "im": "0"}
    assert j["terms"][0]["matrix"] == [[2]]
