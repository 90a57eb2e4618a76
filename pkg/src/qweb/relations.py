"""The relation library: every defining and derived relation as an
explicit pair (name, lhs, rhs) of morphisms, instantiated over all
thickness choices within a bound.

Suites:
  web-basic     associativity, merge-split, balloon, crossing relations
  qweb-white    the white-dot relations
  qweb-affine   the black-dot relations (dot past crossing etc.)
  derived-exact exact consequences: two-white-kill, four-white-dot,
                dot/ball commutation, exact dot pushes, rung swap
  char0-qweb    the characteristic-zero presentation via rungs and the
                defined thick crossing
  char0-affine  the characteristic-zero affine presentation, black dots
                realized by the dotted balloon over a!
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .scalars import Scalar, rational
from . import webterm as wt
from .webterm import (
    Morphism,
    identity,
    merge,
    split,
    cross,
    wdot,
    bdot,
    compose,
    compose_many,
    tensor,
    tensor_many,
    omega,
    omega_circ,
    zero,
    split_full,
    merge_full,
)

SUITES = (
    "web-basic",
    "qweb-white",
    "qweb-affine",
    "derived-exact",
    "char0-qweb",
    "char0-affine",
)


def _idt(k: int) -> Morphism:
    return identity((k,)) if k else identity(())


def _compositions(total, nparts):
    if nparts == 1:
        yield (total,)
        return
    for first in range(1, total - nparts + 2):
        for rest in _compositions(total - first, nparts - 1):
            yield (first,) + rest


def _pairs(bound):
    for m in range(2, bound + 1):
        yield from _compositions(m, 2)


def _triples(bound):
    for m in range(3, bound + 1):
        yield from _compositions(m, 3)


# ---------------------------------------------------------------------------
# building blocks


def h_rung(a, c, s, t) -> Morphism:
    """Split (s, a-s) and (c-t, t), cross the inner legs, merge (s, c-t) and (a-s, t)."""
    bottom = tensor(wt.split_to((s, a - s)), wt.split_to((c - t, t)))
    top = tensor(wt.merge_to((s, c - t)), wt.merge_to((a - s, t)))
    if a - s and c - t:
        mid = tensor_many(_idt(s), cross(a - s, c - t), _idt(t))
        return compose_many(top, mid, bottom)
    return compose(top, bottom)


def crossing_h(a, b, t) -> Morphism:
    """The t-rung crossing diagram (a,b) -> (b,a); t = 0 is the crossing."""
    if t == 0:
        return cross(a, b)
    bottom = tensor(wt.split_to((t, a - t)), wt.split_to((b - t, t)))
    top = tensor(wt.merge_to((t, b - t)), wt.merge_to((a - t, t)))
    if a - t and b - t:
        mid = tensor_many(_idt(t), cross(a - t, b - t), _idt(t))
        return compose_many(top, mid, bottom)
    return compose(top, bottom)


def crossing_h_dotted(a, b, t, upper: bool, white: bool) -> Morphism:
    """crossing_h with a black dot on a crossing leg.

    upper=False dots the right strand's moving leg below the crossing;
    upper=True dots the left strand's moving leg above it.  white=True
    additionally puts white dots on the two vertical legs (right one
    below the left one, fixing the sign convention of the pair).
    """
    bottom = tensor(wt.split_to((t, a - t)), wt.split_to((b - t, t)))
    top = tensor(wt.merge_to((t, b - t)), wt.merge_to((a - t, t)))
    layers = [bottom]

    def on_leg(idx_widths, leg_index, gen):
        mors = []
        for i, w in enumerate(idx_widths):
            if w == 0:
                continue
            mors.append(gen(w) if i == leg_index else _idt(w))
        return tensor_many(*mors)

    widths = (t, a - t, b - t, t)      # below the crossing
    mid_widths = (t, b - t, a - t, t)  # above the crossing
    if not upper and b - t:
        layers.append(on_leg(widths, 2, bdot))
    if white and t:
        layers.append(on_leg(widths, 3, wdot))
        layers.append(on_leg(widths, 0, wdot))
    if a - t and b - t:
        layers.append(tensor_many(_idt(t), cross(a - t, b - t), _idt(t)))
    if upper and a - t:
        layers.append(on_leg(mid_widths, 2, bdot))
    layers.append(top)
    return compose_many(*reversed(layers))


def transfer_right(a, b, dotted=False) -> Morphism:
    """(a,b) -> (a-1,b+1): split one strand off a and merge it into b."""
    lower = tensor(wt.split_to((a - 1, 1)), _idt(b))
    upper = tensor(_idt(a - 1), wt.merge_to((1, b)))
    if dotted:
        mid = tensor_many(_idt(a - 1), wdot(1), _idt(b))
        return compose_many(upper, mid, lower)
    return compose(upper, lower)


def transfer_left(a, b, dotted=False) -> Morphism:
    """(a,b) -> (a+1,b-1): split one strand off b and merge it into a."""
    lower = tensor(_idt(a), wt.split_to((1, b - 1)))
    upper = tensor(wt.merge_to((a, 1)), _idt(b - 1))
    if dotted:
        mid = tensor_many(_idt(a), wdot(1), _idt(b - 1))
        return compose_many(upper, mid, lower)
    return compose(upper, lower)


def _in_context(f: Morphism, left: int, right: int) -> Morphism:
    return tensor_many(_idt(left), f, _idt(right)) if (left or right) else f


def wpair(a, b) -> Morphism:
    """White dots on both strands of (a,b), left dot on top."""
    return compose(tensor(wdot(a), _idt(b)), tensor(_idt(a), wdot(b)))


def dotted_balloon(a: int) -> Morphism:
    """Full split into thin strands, one black dot each, full merge."""
    dots = tensor_many(*[bdot(1) for _ in range(a)]) if a > 1 else bdot(1)
    return compose_many(merge_full(a), dots, split_full(a))


def balloon_with(a, b, left: Morphism = None, right: Morphism = None) -> Morphism:
    """Split (a,b), apply the given leg endomorphisms, merge back."""
    legl = left if left is not None else _idt(a)
    legr = right if right is not None else _idt(b)
    return compose_many(merge(a, b), tensor(legl, _idt(b)), tensor(_idt(a), legr), split(a, b))


# ---------------------------------------------------------------------------
# the suites


def _web_basic(bound):
    rels = []
    for (a, b, c) in _triples(bound):
        lhs = compose(merge(a + b, c), tensor(merge(a, b), _idt(c)))
        rhs = compose(merge(a, b + c), tensor(_idt(a), merge(b, c)))
        rels.append(("assoc-merge(%d,%d,%d)" % (a, b, c), lhs, rhs))
        lhs = compose(tensor(split(a, b), _idt(c)), split(a + b, c))
        rhs = compose(tensor(_idt(a), split(b, c)), split(a, b + c))
        rels.append(("assoc-split(%d,%d,%d)" % (a, b, c), lhs, rhs))
    for (a, c) in _pairs(bound):
        for b in range(1, a + c):
            d = a + c - b
            lhs = compose(split(b, d), merge(a, c))
            rhs = zero((a, c), (b, d))
            for s in range(0, min(a, b) + 1):
                t = s + d - a
                if 0 <= t <= min(c, d):
                    rhs = rhs + h_rung(a, c, s, t)
            rels.append(("merge-split(%d,%d;%d,%d)" % (a, c, b, d), lhs, rhs))
        lhs = compose(merge(a, c), split(a, c))
        rhs = comb(a + c, a) * identity((a + c,))
        rels.append(("balloon(%d,%d)" % (a, c), lhs, rhs))
        rels.append(
            ("swallow-merge(%d,%d)" % (a, c), compose(merge(c, a), cross(a, c)), merge(a, c))
        )
        rels.append(
            ("swallow-split(%d,%d)" % (a, c), compose(cross(c, a), split(c, a)), split(a, c))
        )
        rels.append(
            (
                "cross-inverse(%d,%d)" % (a, c),
                compose(cross(c, a), cross(a, c)),
                identity((a, c)),
            )
        )
    for (a, b, c) in _triples(bound):
        lhs = compose(cross(a + b, c), tensor(merge(a, b), _idt(c)))
        rhs = compose_many(
            tensor(_idt(c), merge(a, b)),
            tensor(cross(a, c), _idt(b)),
            tensor(_idt(a), cross(b, c)),
        )
        rels.append(("slide-merge(%d,%d,%d)" % (a, b, c), lhs, rhs))
        lhs = compose(cross(c, a + b), tensor(_idt(c), merge(a, b)))
        rhs = compose_many(
            tensor(merge(a, b), _idt(c)),
            tensor(_idt(a), cross(c, b)),
            tensor(cross(c, a), _idt(b)),
        )
        rels.append(("slide-merge-l(%d,%d,%d)" % (a, b, c), lhs, rhs))
        lhs = compose(tensor(_idt(c), split(a, b)), cross(a + b, c))
        rhs = compose_many(
            tensor(cross(a, c), _idt(b)),
            tensor(_idt(a), cross(b, c)),
            tensor(split(a, b), _idt(c)),
        )
        rels.append(("slide-split(%d,%d,%d)" % (a, b, c), lhs, rhs))
        lhs = compose_many(
            tensor(cross(b, c), _idt(a)),
            tensor(_idt(b), cross(a, c)),
            tensor(cross(a, b), _idt(c)),
        )
        rhs = compose_many(
            tensor(_idt(c), cross(a, b)),
            tensor(cross(a, c), _idt(b)),
            tensor(_idt(a), cross(b, c)),
        )
        rels.append(("braid(%d,%d,%d)" % (a, b, c), lhs, rhs))
    return rels


def _qweb_white(bound):
    rels = []
    for (a, b) in _pairs(bound):
        lhs = compose(cross(a, b), tensor(_idt(a), wdot(b)))
        rhs = compose(tensor(wdot(b), _idt(a)), cross(a, b))
        rels.append(("wdot-cross-r(%d,%d)" % (a, b), lhs, rhs))
        lhs = compose(cross(a, b), tensor(wdot(a), _idt(b)))
        rhs = compose(tensor(_idt(b), wdot(a)), cross(a, b))
        rels.append(("wdot-cross-l(%d,%d)" % (a, b), lhs, rhs))
        lhs = compose(split(a, b), wdot(a + b))
        rhs = compose(tensor(wdot(a), _idt(b)), split(a, b)) + compose(
            tensor(_idt(a), wdot(b)), split(a, b)
        )
        rels.append(("wdot-split(%d,%d)" % (a, b), lhs, rhs))
        lhs = compose(wdot(a + b), merge(a, b))
        rhs = compose(merge(a, b), tensor(wdot(a), _idt(b))) + compose(
            merge(a, b), tensor(_idt(a), wdot(b))
        )
        rels.append(("wdot-merge(%d,%d)" % (a, b), lhs, rhs))
    for a in range(1, bound + 1):
        rels.append(
            ("double-wdot(%d)" % a, compose(wdot(a), wdot(a)), a * identity((a,)))
        )
        if a >= 2:
            lhs = balloon_with(1, a - 1, left=wdot(1))
            rels.append(("one-wdot-l(%d)" % a, lhs, wdot(a)))
            rhs = balloon_with(a - 1, 1, right=wdot(1))
            rels.append(("one-wdot-r(%d)" % a, rhs, wdot(a)))
    return rels


def _qweb_affine(bound):
    rels = []
    for (a, b) in _pairs(bound):
        # black dot past the crossing, exact version with rung corrections
        lhs = compose(tensor(bdot(b), _idt(a)), cross(a, b))
        rhs = zero((a, b), (b, a))
        for t in range(0, min(a, b) + 1):
            rhs = rhs + factorial(t) * crossing_h_dotted(a, b, t, upper=False, white=False)
        for t in range(1, min(a, b) + 1):
            rhs = rhs - factorial(t - 1) * crossing_h_dotted(a, b, t, upper=False, white=True)
        rels.append(("bdot-cross-up(%d,%d)" % (a, b), lhs, rhs))

        lhs = compose(cross(b, a), tensor(bdot(b), _idt(a)))
        rhs = zero((b, a), (a, b))
        for t in range(0, min(a, b) + 1):
            rhs = rhs + factorial(t) * crossing_h_dotted(b, a, t, upper=True, white=False)
        for t in range(1, min(a, b) + 1):
            rhs = rhs + factorial(t - 1) * crossing_h_dotted(b, a, t, upper=True, white=True)
        rels.append(("bdot-cross-down(%d,%d)" % (a, b), lhs, rhs))

        lhs = compose(split(a, b), bdot(a + b))
        rhs = compose_many(
            tensor(bdot(a), _idt(b)), tensor(_idt(a), bdot(b)), split(a, b)
        )
        rels.append(("bdot-split(%d,%d)" % (a, b), lhs, rhs))
        lhs = compose(bdot(a + b), merge(a, b))
        rhs = compose_many(
            merge(a, b), tensor(bdot(a), _idt(b)), tensor(_idt(a), bdot(b))
        )
        rels.append(("bdot-merge(%d,%d)" % (a, b), lhs, rhs))
    for a in range(1, bound + 1):
        rels.append(
            ("dotted-balloon(%d)" % a, dotted_balloon(a), factorial(a) * bdot(a))
        )
        lhs = compose(wdot(a), bdot(a))
        rhs = -1 * compose(bdot(a), wdot(a))
        rels.append(("wdot-bdot(%d)" % a, lhs, rhs))
    return rels


def _derived_exact(bound):
    rels = []
    for (a, b) in _pairs(bound):
        lhs = balloon_with(a, b, left=wdot(a), right=wdot(b))
        rels.append(("two-white-kill(%d,%d)" % (a, b), lhs, zero((a + b,), (a + b,))))
    # four white dots on the H diagram
    ms = compose(split(1, 1), merge(1, 1))
    lhs = compose_many(wpair(1, 1), ms, wpair(1, 1))
    rels.append(("four-wdot", lhs, ms - 2 * identity((1, 1))))
    # dot/ball commutations on a single strand
    for k in range(1, bound + 1):
        for a in range(0, k):
            lhs = compose(wdot(k), omega_circ(k, a))
            rhs = compose(omega_circ(k, a), wdot(k))
            rels.append(("wdot-ball(%d;%d)" % (k, a), lhs, rhs))
            lhs = compose(bdot(k), omega_circ(k, a))
            rhs = -1 * compose(omega_circ(k, a), bdot(k))
            rels.append(("bdot-ball(%d;%d)" % (k, a), lhs, rhs))
        for a in range(1, k + 1):
            lhs = compose(wdot(k), omega(k, a))
            rhs = -1 * compose(omega(k, a), wdot(k)) + 2 * omega_circ(k, a)
            rels.append(("wdot-omega(%d;%d)" % (k, a), lhs, rhs))
            for r in range(1, k + 1):
                lhs = compose(omega(k, a), omega(k, r))
                rhs = compose(omega(k, r), omega(k, a))
                rels.append(("omega-commute(%d;%d,%d)" % (k, a, r), lhs, rhs))
    # exact dot pushes through merge and split
    for (a, b) in _pairs(bound):
        for r in range(1, min(a + b, bound) + 1):
            lhs, rhs = push_dot_exact("merge", a, b, r, "omega")
            rels.append(("push-omega-merge(%d,%d;%d)" % (a, b, r), lhs, rhs))
            lhs, rhs = push_dot_exact("split", a, b, r, "omega")
            rels.append(("push-omega-split(%d,%d;%d)" % (a, b, r), lhs, rhs))
    # the general rung swap
    for (a, b) in _pairs(bound):
        for c in range(0, b + 1):
            for d in range(0, a + 1):
                if c == 0 and d == 0:
                    continue
                try:
                    lhs = _updown(a, b, c, d)
                except ValueError:
                    continue
                tgt = tuple(x for x in (a - d + c, b + d - c) if x)
                rhs = zero((a, b), tgt)
                for t in range(0, min(c, d) + 1):
                    coeff = _signed_comb(a - b + c - d, t)
                    if not coeff:
                        continue
                    try:
                        rhs = rhs + Scalar.of(coeff) * _downup(a, b, c - t, d - t)
                    except ValueError:
                        pass
                rels.append(("rung-swap(%d,%d;%d,%d)" % (a, b, c, d), lhs, rhs))
    return rels


def _signed_comb(n, t):
    # binomial with (possibly) negative upper index
    num = 1
    for i in range(t):
        num *= n - i
    return Fraction(num, factorial(t))


def _thick_transfer_up(a, b, d):
    """(a,b) -> (a-d, b+d), moving a d-thick rung to the right."""
    if d == 0:
        return identity(tuple(x for x in (a, b) if x))
    lower = tensor(wt.split_to((a - d, d)), _idt(b))
    upper = tensor(_idt(a - d), wt.merge_to((d, b)))
    return compose(upper, lower)


def _thick_transfer_down(a, b, c):
    """(a,b) -> (a+c, b-c), moving a c-thick rung to the left."""
    if c == 0:
        return identity(tuple(x for x in (a, b) if x))
    lower = tensor(_idt(a), wt.split_to((c, b - c)))
    upper = tensor(wt.merge_to((a, c)), _idt(b - c))
    return compose(upper, lower)


def _updown(a, b, c, d):
    """Up-rung of thickness d, then down-rung of thickness c."""
    if d > a or d < 0 or c > b + d or c < 0:
        raise ValueError("rung too thick")
    f = _thick_transfer_up(a, b, d)
    g = _thick_transfer_down(a - d, b + d, c)
    return compose(g, f)


def _downup(a, b, c, d):
    """Down-rung of thickness c, then up-rung of thickness d."""
    if c > b or c < 0 or d > a + c or d < 0:
        raise ValueError("rung too thick")
    f = _thick_transfer_down(a, b, c)
    g = _thick_transfer_up(a + c, b - c, d)
    return compose(g, f)


def _char0_qweb(bound):
    rels = []
    # thin merge-split with white dots
    ms = compose(split(1, 1), merge(1, 1))
    w4 = compose_many(wpair(1, 1), ms, wpair(1, 1))
    rels.append(("thin-ms-wdots", ms - w4, 2 * identity((1, 1))))
    # thin crossing defined by the H diagram
    rels.append(("thin-crossing", cross(1, 1), ms - identity((1, 1))))
    # thick crossing via full thin explosion
    for (a, b) in _pairs(bound):
        lhs = cross(a, b)
        blocks = tensor(split_full(a), split_full(b))
        tops = tensor(merge_full(b), merge_full(a))
        mid = identity((1,) * (a + b))
        # move the first a thin strands past the last b, one step at a time
        seq = list(range(a + b))
        word = []
        for i in range(a):
            for j in range(b):
                word.append(a - 1 - i + j)
        for posn in word:
            mid = compose(
                tensor_many(
                    identity((1,) * posn), cross(1, 1), identity((1,) * (a + b - posn - 2))
                ),
                mid,
            )
        rhs = Scalar(rational(1, factorial(a) * factorial(b))) * compose_many(
            tops, mid, blocks
        )
        rels.append(("thick-crossing(%d,%d)" % (a, b), lhs, rhs))
    # wdot through merge/split on (1,b)
    for b in range(1, bound):
        lhs = compose(split(1, b), wdot(1 + b))
        rhs = compose(tensor(wdot(1), _idt(b)), split(1, b)) + compose(
            tensor(_idt(1), wdot(b)), split(1, b)
        )
        rels.append(("wdot-split-thin(1,%d)" % b, lhs, rhs))
        lhs = compose(wdot(1 + b), merge(1, b))
        rhs = compose(merge(1, b), tensor(wdot(1), _idt(b))) + compose(
            merge(1, b), tensor(_idt(1), wdot(b))
        )
        rels.append(("wdot-merge-thin(1,%d)" % b, lhs, rhs))
    # rung swap relations
    for (a, b) in _pairs(bound):
        du = compose(transfer_left(a - 1, b + 1), transfer_right(a, b)) if a >= 1 else None
        ud = compose(transfer_right(a + 1, b - 1), transfer_left(a, b)) if b >= 1 else None
        if du is not None and ud is not None:
            rels.append(
                (
                    "rung-one(%d,%d)" % (a, b),
                    du - ud,
                    (a - b) * identity((a, b)),
                )
            )
            # with white dots
            du_w_up = compose(transfer_left(a - 1, b + 1, dotted=True), transfer_right(a, b))
            du_w_dn = compose(transfer_left(a - 1, b + 1), transfer_right(a, b, dotted=True))
            ud_w_dn = compose(transfer_right(a + 1, b - 1), transfer_left(a, b, dotted=True))
            ud_w_up = compose(transfer_right(a + 1, b - 1, dotted=True), transfer_left(a, b))
            target = tensor(wdot(a), _idt(b)) - tensor(_idt(a), wdot(b))
            rels.append(("rung-wdot-a(%d,%d)" % (a, b), du_w_up - ud_w_dn, target))
            rels.append(("rung-wdot-b(%d,%d)" % (a, b), du_w_dn - ud_w_up, target))
    # three-strand rung relations: move 1 from c to b and 1 from b to a,
    # in both orders, with and without white dots on the moving strands
    def rung3(a, b, c, cb_first: bool, dot_cb: bool, dot_ba: bool) -> Morphism:
        if cb_first:
            f = tensor(_idt(a), transfer_left(b, c, dot_cb))
            g = tensor(transfer_left(a, b + 1, dot_ba), _idt(c - 1))
        else:
            f = tensor(transfer_left(a, b, dot_ba), _idt(c))
            g = tensor(_idt(a + 1), transfer_left(b - 1, c, dot_cb))
        return compose(g, f)

    for (a, b, c) in _triples(bound):
        lhs = rung3(a, b, c, True, False, False) - rung3(a, b, c, False, False, False)
        rhs = rung3(a, b, c, True, True, True) + rung3(a, b, c, False, True, True)
        rels.append(("wdot-rung-1(%d,%d,%d)" % (a, b, c), lhs, rhs))
        lhs = rung3(a, b, c, True, True, False) - rung3(a, b, c, False, True, False)
        rhs = rung3(a, b, c, True, False, True) - rung3(a, b, c, False, False, True)
        rels.append(("wdot-rung-2(%d,%d,%d)" % (a, b, c), lhs, rhs))
    for a in range(1, bound + 1):
        rels.append(
            ("double-wdot(%d)" % a, compose(wdot(a), wdot(a)), a * identity((a,)))
        )
    return rels


def _char0_affine(bound):
    """The simplified affine presentation: relations on thin strands plus
    the integral relations with every thick black dot replaced by its
    dotted balloon over a!."""
    rels = []
    s = cross(1, 1)
    x1 = tensor(bdot(1), _idt(1))
    x2 = tensor(_idt(1), bdot(1))
    cc = wpair(1, 1)
    rels.append(
        (
            "thin-bdot-cross-up",
            compose(x1, s),
            compose(s, x2) + identity((1, 1)) - cc,
        )
    )
    rels.append(
        (
            "thin-bdot-cross-down",
            compose(s, x1),
            compose(x2, s) + identity((1, 1)) + cc,
        )
    )
    rels.append(
        (
            "thin-wdot-bdot",
            compose(wdot(1), bdot(1)),
            -1 * compose(bdot(1), wdot(1)),
        )
    )

    def balloon_dot(a):
        if a == 1:
            return bdot(1)
        return Scalar(rational(1, factorial(a))) * dotted_balloon(a)

    def subst(builder):
        return builder(balloon_dot)

    for (a, b) in _pairs(bound):
        lhs = compose(split(a, b), balloon_dot(a + b))
        rhs = compose_many(
            tensor(balloon_dot(a), _idt(b)), tensor(_idt(a), balloon_dot(b)), split(a, b)
        )
        rels.append(("balloon-bdot-split(%d,%d)" % (a, b), lhs, rhs))
        lhs = compose(balloon_dot(a + b), merge(a, b))
        rhs = compose_many(
            merge(a, b), tensor(balloon_dot(a), _idt(b)), tensor(_idt(a), balloon_dot(b))
        )
        rels.append(("balloon-bdot-merge(%d,%d)" % (a, b), lhs, rhs))
    for a in range(1, bound + 1):
        lhs = compose(wdot(a), balloon_dot(a))
        rhs = -1 * compose(balloon_dot(a), wdot(a))
        rels.append(("balloon-wdot-bdot(%d)" % a, lhs, rhs))
    return rels


def push_dot_exact(side: str, a: int, b: int, r: int, kind: str):
    """The exact (omega) or leading-order (omega-circ) dot push.

    Returns the pair (lhs, rhs).  For omega the two sides agree exactly;
    for omega-circ they agree up to diagrams of lower black-dot degree.
    """
    if side not in ("merge", "split"):
        raise ValueError("side must be merge or split")
    if kind == "omega":
        if side == "merge":
            lhs = compose(omega(a + b, r), merge(a, b))
        else:
            lhs = compose(split(a, b), omega(a + b, r))
        rhs = zero(lhs.src, lhs.tgt)
        for c in range(0, r + 1):
            for d in range(0, r - c + 1):
                t = r - c - d
                if c > a or d > b:
                    continue
                if t > a - c or t > b - d:
                    continue
                coeff = factorial(t) * comb(a - c, t) * comb(b - d, t)
                if coeff:
                    legs = compose(
                        tensor(omega(a, c), _idt(b)), tensor(_idt(a), omega(b, d))
                    )
                    if side == "merge":
                        rhs = rhs + coeff * compose(merge(a, b), legs)
                    else:
                        rhs = rhs + coeff * compose(legs, split(a, b))
                if t >= 1 and c <= a - 1 and d <= b - 1:
                    coeff2 = (
                        factorial(t - 1) * comb(a - c - 1, t - 1) * comb(b - d - 1, t - 1)
                    )
                    if coeff2:
                        legs = compose(
                            tensor(omega_circ(a, c), _idt(b)),
                            tensor(_idt(a), omega_circ(b, d)),
                        )
                        if side == "merge":
                            rhs = rhs - coeff2 * compose(merge(a, b), legs)
                        else:
                            rhs = rhs + coeff2 * compose(legs, split(a, b))
        return lhs, rhs
    if kind == "omegac":
        if side == "merge":
            lhs = compose(omega_circ(a + b, r), merge(a, b))
        else:
            lhs = compose(split(a, b), omega_circ(a + b, r))
        rhs = zero(lhs.src, lhs.tgt)
        for c in range(0, r + 1):
            d = r - c
            for legl, legr in ((omega_circ(a, c), omega(b, d)), (omega(a, c), omega_circ(b, d))):
                if legl.is_zero() or legr.is_zero():
                    continue
                legs = compose(tensor(legl, _idt(b)), tensor(_idt(a), legr))
                if side == "merge":
                    rhs = rhs + compose(merge(a, b), legs)
                else:
                    rhs = rhs + compose(legs, split(a, b))
        return lhs, rhs
    raise ValueError("kind must be omega or omegac")


def relation_suite(name: str, bound: int = 3):
    """All relation pairs of the named suite, thickness-bounded."""
    builders = {
        "web-basic": _web_basic,
        "qweb-white": _qweb_white,
        "qweb-affine": _qweb_affine,
        "derived-exact": _derived_exact,
        "char0-qweb": _char0_qweb,
        "char0-affine": _char0_affine,
    }
    if name not in builders:
        raise ValueError("unknown suite %r (choose from %s)" % (name, ", ".join(SUITES)))
    return builders[name](bound)
