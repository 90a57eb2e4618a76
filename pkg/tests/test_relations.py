import pytest

from qweb import normalform as nf
from qweb import relations as rel
from qweb.qrep import Evaluator


EV2 = Evaluator(2)


@pytest.mark.parametrize("suite", rel.SUITES)
def test_suite_holds_under_functor_small(suite):
    for name, lhs, rhs in rel.relation_suite(suite, bound=3):
        assert EV2.equal(lhs, rhs), name


@pytest.mark.parametrize("suite", ["qweb-affine", "char0-affine"])
def test_affine_suites_hold_under_explosion(suite):
    for name, lhs, rhs in rel.relation_suite(suite, bound=3):
        assert nf.equal_by_explosion(lhs, rhs), name


def test_unknown_suite():
    with pytest.raises(ValueError):
        rel.relation_suite("nope")


def test_push_dot_zero_cases():
    lhs, rhs = nf.push_dot_exact("merge", 1, 1, 0, "omega")
    assert lhs == rhs  # r = 0 passes through exactly
    with pytest.raises(ValueError):
        nf.push_dot_exact("sideways", 1, 1, 1, "omega")
