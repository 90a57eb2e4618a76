"""Diagram terms for dotted webs of type Q.

Objects are strict compositions (tuples of positive ints); the empty
tuple is the monoidal unit.  A diagram term is a vertical stack of
slices, each holding exactly one generator at a horizontal strand
position, identities elsewhere.  Terms are kept in a canonical slicing:
generators are pushed as low and as far left as commutation allows,
with Koszul signs collected when two odd generators trade places.  Two
diagrams that differ only by such re-slicing therefore compare equal as
Morphism values.

Parity of a term is the number of white dots mod 2; degree is the total
black-dot thickness.  Composition stacks slices; the tensor product
f (x) g applies f on the left block first, then g on the right block.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import Scalar, ONE
from . import combinat


# ---------------------------------------------------------------------------
# generator pieces


@dataclass(frozen=True)
class GeneratorPiece:
    kind: str        # merge | split | cross | wdot | bdot
    params: tuple

    def __post_init__(self):
        if self.kind in ("merge", "split", "cross"):
            a, b = self.params
            if a < 1 or b < 1:
                raise ValueError("thickness must be >= 1: %r" % (self,))
        elif self.kind in ("wdot", "bdot"):
            (a,) = self.params
            if a < 1:
                raise ValueError("thickness must be >= 1: %r" % (self,))
        else:
            raise ValueError("unknown generator kind %r" % self.kind)

    @property
    def src(self) -> tuple:
        a = self.params
        return {
            "merge": lambda: (a[0], a[1]),
            "split": lambda: (a[0] + a[1],),
            "cross": lambda: (a[0], a[1]),
            "wdot": lambda: (a[0],),
            "bdot": lambda: (a[0],),
        }[self.kind]()

    @property
    def tgt(self) -> tuple:
        a = self.params
        return {
            "merge": lambda: (a[0] + a[1],),
            "split": lambda: (a[0], a[1]),
            "cross": lambda: (a[1], a[0]),
            "wdot": lambda: (a[0],),
            "bdot": lambda: (a[0],),
        }[self.kind]()

    @property
    def parity(self) -> int:
        return 1 if self.kind == "wdot" else 0

    @property
    def degree(self) -> int:
        return self.params[0] if self.kind == "bdot" else 0

    def flipped(self) -> "GeneratorPiece":
        if self.kind == "merge":
            return GeneratorPiece("split", self.params)
        if self.kind == "split":
            return GeneratorPiece("merge", self.params)
        if self.kind == "cross":
            a, b = self.params
            return GeneratorPiece("cross", (b, a))
        return self

    def __str__(self):
        return "%s(%s)" % (self.kind, ",".join(str(p) for p in self.params))


# ---------------------------------------------------------------------------
# diagram terms


def _apply_piece(obj: tuple, pos: int, piece: GeneratorPiece) -> tuple:
    src = piece.src
    if obj[pos: pos + len(src)] != src:
        raise ValueError(
            "piece %s does not fit object %r at position %d" % (piece, obj, pos)
        )
    return obj[:pos] + piece.tgt + obj[pos + len(src):]


def _canonicalize(src: tuple, slices):
    """Normal form of a slice list; returns (tuple_of_slices, sign).

    Greedy extraction: among the generators that commute down to the
    bottom, emit the one with the smallest strand position.  Each swap
    of two odd generators flips the sign.
    """
    pending = list(slices)
    sign = 1
    out = []
    obj = src
    while pending:
        best = None  # (bottom_pos, trial_sign, index, trial_list)
        for j in range(len(pending)):
            trial = list(pending)
            tsign = 1
            ok = True
            for step in range(j, 0, -1):
                swapped = _swap_adjacent(trial, step)
                if swapped is None:
                    ok = False
                    break
                tsign *= swapped
            if not ok:
                continue
            pos0 = trial[0][0]
            if best is None or pos0 < best[0]:
                best = (pos0, tsign, trial)
        if best is None:  # cannot happen: pending[0] is always extractable
            raise AssertionError("no extractable generator")
        _, tsign, trial = best
        sign *= tsign
        pos, piece = trial[0]
        obj = _apply_piece(obj, pos, piece)
        out.append((pos, piece))
        pending = trial[1:]
    return tuple(out), sign


def _swap_adjacent(slices, i):
    """Swap slices[i-1] (below) and slices[i] (above) in place if disjoint.

    Returns the Koszul sign, or None if the strand intervals overlap.
    """
    p1, g1 = slices[i - 1]
    p2, g2 = slices[i]
    w1s, w1t = len(g1.src), len(g1.tgt)
    w2s = len(g2.src)
    if p2 + w2s <= p1:
        new_low = (p2, g2)
        new_high = (p1 + len(g2.tgt) - w2s, g1)
    elif p2 >= p1 + w1t:
        new_low = (p2 - w1t + w1s, g2)
        new_high = (p1, g1)
    else:
        return None
    slices[i - 1] = new_low
    slices[i] = new_high
    return -1 if (g1.parity and g2.parity) else 1


@dataclass(frozen=True)
class DiagramTerm:
    src: tuple
    slices: tuple  # ((pos, piece), ...) bottom to top, canonical

    @property
    def tgt(self) -> tuple:
        obj = self.src
        for pos, piece in self.slices:
            obj = _apply_piece(obj, pos, piece)
        return obj

    @property
    def parity(self) -> int:
        return sum(p.parity for _, p in self.slices) % 2

    @property
    def degree(self) -> int:
        return sum(p.degree for _, p in self.slices)

    def text(self) -> str:
        """Canonical text, top slice first (matching the DSL's f;g = f after g)."""
        if not self.slices:
            return "id(%s)" % ",".join(str(x) for x in self.src)
        return " ; ".join("%s@%d" % (piece, pos) for pos, piece in reversed(self.slices))


def _term(src: tuple, slices):
    canon, sign = _canonicalize(tuple(src), slices)
    return DiagramTerm(tuple(src), canon), sign


# ---------------------------------------------------------------------------
# morphisms


class Morphism:
    """Scalar-linear combination of diagram terms with fixed boundaries."""

    __slots__ = ("src", "tgt", "terms")

    def __init__(self, src, tgt, terms=None):
        self.src = tuple(src)
        self.tgt = tuple(tgt)
        self.terms = {}
        if terms:
            for t, c in terms.items():
                c = Scalar.of(c)
                if c:
                    self.terms[t] = c

    def __eq__(self, other):
        return (
            isinstance(other, Morphism)
            and self.src == other.src
            and self.tgt == other.tgt
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.src, self.tgt, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if (self.src, self.tgt) != (other.src, other.tgt):
            raise ValueError("boundary mismatch in sum")
        out = dict(self.terms)
        for t, c in other.terms.items():
            s = out.get(t, Scalar()) + c
            if s:
                out[t] = s
            else:
                out.pop(t, None)
        return Morphism(self.src, self.tgt, out)

    def __neg__(self):
        return Morphism(self.src, self.tgt, {t: -c for t, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        c = Scalar.of(c)
        if not c:
            return Morphism(self.src, self.tgt)
        return Morphism(self.src, self.tgt, {t: v * c for t, v in self.terms.items()})

    __rmul__ = __mul__

    def parity(self):
        ps = {t.parity for t in self.terms}
        return ps.pop() if len(ps) == 1 else (0 if not ps else None)

    def degree(self):
        return max((t.degree for t in self.terms), default=0)

    def degree_component(self, d: int) -> "Morphism":
        return Morphism(
            self.src, self.tgt, {t: c for t, c in self.terms.items() if t.degree == d}
        )


def zero(src, tgt) -> Morphism:
    return Morphism(src, tgt)


def identity(obj) -> Morphism:
    obj = tuple(obj)
    if not combinat.is_strict_composition(obj):
        raise ValueError("object must be a strict composition: %r" % (obj,))
    t, sign = _term(obj, [])
    return Morphism(obj, obj, {t: Scalar.of(sign)})


def make(kind: str, *params) -> Morphism:
    """Single-generator morphism with coefficient 1."""
    piece = GeneratorPiece(kind, tuple(params))
    t, sign = _term(piece.src, [(0, piece)])
    return Morphism(piece.src, piece.tgt, {t: Scalar.of(sign)})


def merge(a, b):
    return make("merge", a, b)


def split(a, b):
    return make("split", a, b)


def cross(a, b):
    return make("cross", a, b)


def wdot(a):
    return make("wdot", a)


def bdot(a):
    return make("bdot", a)


def compose(f: Morphism, g: Morphism) -> Morphism:
    """f after g (source of f must equal target of g)."""
    if f.src != g.tgt:
        raise ValueError("boundary mismatch: compose %r after %r" % (f.src, g.tgt))
    out = {}
    for tg, cg in g.terms.items():
        for tf, cf in f.terms.items():
            term, sign = _term(g.src, list(tg.slices) + list(tf.slices))
            c = cf * cg * sign
            cur = out.get(term)
            s = c if cur is None else cur + c
            if s:
                out[term] = s
            else:
                out.pop(term, None)
    return Morphism(g.src, f.tgt, out)


def compose_many(*fs) -> Morphism:
    """compose_many(f, g, h) = f o g o h."""
    out = fs[-1]
    for f in reversed(fs[:-1]):
        out = compose(f, out)
    return out


def tensor(f: Morphism, g: Morphism) -> Morphism:
    """f (x) g: f applied on the left block first, then g on the right."""
    out = {}
    shift = len(f.tgt)
    src = f.src + g.src
    for tf, cf in f.terms.items():
        for tg, cg in g.terms.items():
            slices = list(tf.slices) + [(p + shift, piece) for p, piece in tg.slices]
            term, sign = _term(src, slices)
            c = cf * cg * sign
            cur = out.get(term)
            s = c if cur is None else cur + c
            if s:
                out[term] = s
            else:
                out.pop(term, None)
    return Morphism(src, f.tgt + g.tgt, out)


def tensor_many(*fs) -> Morphism:
    out = fs[0]
    for f in fs[1:]:
        out = tensor(out, f)
    return out


def flip_div(f: Morphism) -> Morphism:
    """The 180-degree flip about a horizontal axis (an anti-automorphism)."""
    out = {}
    for t, c in f.terms.items():
        slices = [(pos, piece.flipped()) for pos, piece in reversed(t.slices)]
        term, sign = _term(t.tgt, slices)
        s = c * sign
        cur = out.get(term)
        val = s if cur is None else cur + s
        if val:
            out[term] = val
        else:
            out.pop(term, None)
    return Morphism(f.tgt, f.src, out)


# ---------------------------------------------------------------------------
# full splits/merges and dot elements


def split_full(a: int) -> Morphism:
    """(a) -> (1,...,1), peeling single strands from the left."""
    if a == 1:
        return identity((1,))
    out = split(1, a - 1)
    for i in range(1, a - 1):
        step = tensor(identity((1,) * i), split(1, a - 1 - i))
        out = compose(step, out)
    return out


def merge_full(a: int) -> Morphism:
    """(1,...,1) -> (a), the flip of split_full."""
    if a == 1:
        return identity((1,))
    out = merge(1, a - 1)
    for i in range(1, a - 1):
        step = tensor(identity((1,) * i), merge(1, a - 1 - i))
        out = compose(out, step)
    return out


def split_to(shape) -> Morphism:
    """(sum shape) -> shape by splitting off parts from the left."""
    shape = tuple(x for x in shape if x)
    if len(shape) <= 1:
        return identity(shape)
    total = sum(shape)
    first = shape[0]
    rest = split_to(shape[1:])
    return compose(tensor(identity((first,)), rest), split(first, total - first))


def merge_to(shape) -> Morphism:
    """shape -> (sum shape) by merging from the left."""
    shape = tuple(x for x in shape if x)
    if len(shape) <= 1:
        return identity(shape)
    total = sum(shape)
    first = shape[0]
    rest = merge_to(shape[1:])
    return compose(merge(first, total - first), tensor(identity((first,)), rest))


def omega(a: int, r: int) -> Morphism:
    """The thick-strand black dot element: split (r, a-r), dot the r-leg, merge.

    omega_{a,0} is the identity, omega_{a,a} the full black dot, and the
    element vanishes outside 0 <= r <= a.
    """
    if r < 0 or r > a:
        return zero((a,), (a,))
    if r == 0:
        return identity((a,))
    if r == a:
        return bdot(a)
    return compose_many(
        merge(r, a - r),
        tensor(bdot(r), identity((a - r,))),
        split(r, a - r),
    )


def omega_circ(a: int, r: int) -> Morphism:
    """Black dot on the r-leg plus white dot on the complementary leg.

    Zero for r < 0 or r >= a; r = 0 degenerates to the white dot itself.
    """
    if r < 0 or r >= a:
        return zero((a,), (a,))
    if r == 0:
        return wdot(a)
    return compose_many(
        merge(r, a - r),
        tensor(bdot(r), identity((a - r,))),
        tensor(identity((r,)), wdot(a - r)),
        split(r, a - r),
    )


def packet(a: int, nu, eta) -> Morphism:
    """Elementary dot packet g_{nu,eta} on a strand of thickness a.

    nu must be a strict partition with parts <= a, eta a partition with
    parts <= a.  The omega factors sit below; the odd omega-circ factors
    stack above, the nu_1 factor topmost.
    """
    nu, eta = tuple(nu), tuple(eta)
    if not combinat.is_strict_partition(nu) or any(p > a for p in nu):
        raise ValueError("nu must be strict with parts <= %d: %r" % (a, nu))
    if not combinat.is_partition(eta) or any(p > a for p in eta):
        raise ValueError("eta must be a partition with parts <= %d: %r" % (a, eta))
    out = identity((a,))
    for part in reversed(eta):
        out = compose(omega(a, part), out)
    for nb in reversed(combinat.bar_partition(nu)):
        out = compose(omega_circ(a, nb), out)
    return out


def dot_element(kind: str, a: int, data) -> Morphism:
    """omega / omega-circ / packet by name (CLI and test convenience)."""
    if kind == "omega":
        return omega(a, data)
    if kind == "omegac":
        return omega_circ(a, data)
    if kind == "packet":
        nu, eta = data
        return packet(a, nu, eta)
    raise ValueError("unknown dot element kind %r" % kind)


def random_morphism(rng, m: int, n_slices: int, max_bdot_degree=None) -> Morphism:
    """A random single-term morphism with source weight m (test helper)."""
    obj = tuple(rng.choice(list(combinat.compositions_of(m))))
    f = identity(obj)
    degree = 0
    for _ in range(n_slices):
        obj = f.tgt
        choices = []
        for i, a in enumerate(obj):
            if a > 1:
                for cut in range(1, a):
                    choices.append(("split", i, (cut, a - cut)))
            choices.append(("wdot", i, (a,)))
            if max_bdot_degree is None or degree + a <= max_bdot_degree:
                choices.append(("bdot", i, (a,)))
        for i in range(len(obj) - 1):
            choices.append(("merge", i, (obj[i], obj[i + 1])))
            choices.append(("cross", i, (obj[i], obj[i + 1])))
        kind, i, params = rng.choice(choices)
        gen = make(kind, *params)
        if kind == "bdot":
            degree += params[0]
        left = identity(obj[:i])
        right = identity(obj[i + len(gen.src):])
        f = compose(tensor_many(left, gen, right), f)
    return f
