"""Reduction to the elementary chicken-foot-diagram basis.

A basis element is a non-negative integer matrix A with row sums lam
and column sums mu, each nonzero entry a_ij carrying a bi-partition
decoration (nu_ij strict, eta_ij arbitrary, parts <= a_ij).  The
embedded diagram splits each mu_j into the column legs, applies the dot
packet g_{nu,eta} at the bottom of every leg, permutes legs from column
order to row order with crossings, and merges each row into lam_i.

Normalization is exact: a morphism is conjugated by full splits and
merges into the endomorphism algebra of thin strands, which is the
affine Sergeev superalgebra, where PBW normal forms decide everything.
The coordinates in the basis are then the unique solution of an exact
linear system; consistency of that system is the spanning statement and
uniqueness is linear independence, so a failure raises instead of
degrading silently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial

from .scalars import Scalar, ONE, rational
from . import combinat, sergeev, linalg
from . import webterm as wt
from .webterm import Morphism
from .relations import push_dot_exact  # re-exported optimization path

__all__ = [
    "ElementaryCFD",
    "NormalMorphism",
    "cfd_basis",
    "cfd_basis_finite",
    "embed",
    "thin_explode",
    "reduce_morphism",
    "reduce",
    "push_dot_exact",
    "leading_class",
    "decode",
    "phi",
    "phi_word",
]


# ---------------------------------------------------------------------------
# basis elements


@dataclass(frozen=True)
class ElementaryCFD:
    lam: tuple              # row sums (target)
    mu: tuple               # column sums (source)
    shape: tuple            # tuple of rows
    decor: tuple            # tuple of rows of (nu, eta) pairs

    def __post_init__(self):
        rows = len(self.lam)
        cols = len(self.mu)
        if len(self.shape) != rows or any(len(r) != cols for r in self.shape):
            raise ValueError("shape size mismatch")
        for i in range(rows):
            if sum(self.shape[i]) != self.lam[i]:
                raise ValueError("row sum mismatch in row %d" % i)
        for j in range(cols):
            if sum(r[j] for r in self.shape) != self.mu[j]:
                raise ValueError("column sum mismatch in column %d" % j)
        for i in range(rows):
            for j in range(cols):
                a = self.shape[i][j]
                nu, eta = self.decor[i][j]
                if a == 0:
                    if nu or eta:
                        raise ValueError("decoration on zero entry (%d,%d)" % (i, j))
                    continue
                if not combinat.is_strict_partition(nu) or any(p > a for p in nu):
                    raise ValueError("invalid nu at (%d,%d): %r" % (i, j, nu))
                if not combinat.is_partition(eta) or any(p > a for p in eta):
                    raise ValueError("invalid eta at (%d,%d): %r" % (i, j, eta))

    @property
    def degree(self) -> int:
        d = 0
        for row in self.decor:
            for nu, eta in row:
                d += sum(combinat.bar_partition(nu)) + sum(eta)
        return d

    @property
    def parity(self) -> int:
        return sum(len(nu) for row in self.decor for nu, _ in row) % 2

    def sort_key(self):
        return (self.degree, self.shape, self.decor)

    def to_json(self):
        return {
            "matrix": [list(r) for r in self.shape],
            "decorations": [
                [{"nu": list(nu), "eta": list(eta)} for nu, eta in row]
                for row in self.decor
            ],
        }


def _leg_decorations(a: int, maxdeg: int):
    """All (nu, eta) with deg = |bar nu| + |eta| <= maxdeg on an a-strand."""
    out = []
    for nu in combinat.strict_partitions_bounded(a):
        base = sum(combinat.bar_partition(nu))
        if base > maxdeg:
            continue
        for eta in combinat.partitions_bounded(a, maxdeg - base):
            out.append((nu, tuple(eta)))
    return out


def cfd_basis(lam, mu, maxdeg: int):
    """All decorated matrices with degree <= maxdeg, deterministic order."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu) or maxdeg < 0:
        return []
    out = []
    for shape in combinat.enumerate_matrices(lam, mu):
        cells = [
            (i, j)
            for i in range(len(lam))
            for j in range(len(mu))
            if shape[i][j] > 0
        ]
        per_cell = [_leg_decorations(shape[i][j], maxdeg) for (i, j) in cells]
        for picks in itertools.product(*per_cell):
            if sum(
                sum(combinat.bar_partition(nu)) + sum(eta) for nu, eta in picks
            ) > maxdeg:
                continue
            decor = [[((), ())] * len(mu) for _ in lam]
            for (i, j), de in zip(cells, picks):
                decor[i][j] = de
            out.append(
                ElementaryCFD(lam, mu, shape, tuple(tuple(r) for r in decor))
            )
    return sorted(out, key=ElementaryCFD.sort_key)


def cfd_basis_finite(lam, mu):
    """The finite (dot-degree-zero, at most one white dot per leg) basis."""
    return [
        c
        for c in cfd_basis(lam, mu, 0)
        if all(not eta and len(nu) <= 1 for row in c.decor for nu, eta in row)
    ]


# ---------------------------------------------------------------------------
# embedding basis elements as diagrams


def embed(c: ElementaryCFD) -> Morphism:
    """The elementary diagram of a decorated matrix, as a morphism."""
    rows, cols = len(c.lam), len(c.mu)
    legs = []  # (row, col, thickness) in column order
    for j in range(cols):
        for i in range(rows):
            if c.shape[i][j]:
                legs.append((i, j, c.shape[i][j]))
    # bottom: split each column into its legs
    bottom = wt.identity(c.mu) if cols else wt.identity(())
    splitters = [
        wt.split_to(tuple(c.shape[i][j] for i in range(rows) if c.shape[i][j]))
        for j in range(cols)
    ]
    f = wt.tensor_many(*splitters) if splitters else wt.identity(())
    # dot packets on the legs, left to right
    for pos, (i, j, a) in enumerate(legs):
        packet = wt.packet(a, *c.decor[i][j])
        left = wt.identity(tuple(t for (_, _, t) in legs[:pos]))
        right = wt.identity(tuple(t for (_, _, t) in legs[pos + 1:]))
        f = wt.compose(wt.tensor_many(left, packet, right), f)
    # middle: sort legs from column order to row order by adjacent crossings
    keys = [(i, j) for (i, j, _) in legs]
    widths = [t for (_, _, t) in legs]
    order = list(range(len(legs)))
    changed = True
    while changed:
        changed = False
        for p in range(len(order) - 1):
            if keys[order[p]] > keys[order[p + 1]]:
                wa, wb = widths[order[p]], widths[order[p + 1]]
                left = wt.identity(tuple(widths[q] for q in order[:p]))
                right = wt.identity(tuple(widths[q] for q in order[p + 2:]))
                f = wt.compose(wt.tensor_many(left, wt.cross(wa, wb), right), f)
                order[p], order[p + 1] = order[p + 1], order[p]
                changed = True
    # top: merge each row
    mergers = [
        wt.merge_to(tuple(c.shape[i][j] for j in range(cols) if c.shape[i][j]))
        for i in range(rows)
    ]
    g = wt.tensor_many(*mergers) if mergers else wt.identity(())
    return wt.compose(g, f)


# ---------------------------------------------------------------------------
# thin explosion into the affine Sergeev superalgebra


def _sym_sum(n: int, block_sizes) -> dict:
    """Sum over the Young subgroup S_{b1} x S_{b2} x ... inside A_n."""
    blocks = []
    offset = 0
    for b in block_sizes:
        blocks.append(list(itertools.permutations(range(offset + 1, offset + b + 1))))
        offset += b
    out = {}
    for combo in itertools.product(*blocks):
        perm = tuple(x for piece in combo for x in piece)
        out[sergeev.PBWMonomial(perm, (0,) * n, (0,) * n)] = ONE
    return out


def _piece_explosion(piece, n: int, offset: int, total: int) -> dict:
    """Explosion of one generator piece, shifted to strands offset+1.. ."""
    kind = piece.kind

    def shift_perm(p):
        return (
            tuple(range(1, offset + 1))
            + tuple(x + offset for x in p)
            + tuple(range(offset + len(p) + 1, total + 1))
        )

    if kind in ("merge", "split"):
        k = sum(piece.src)
        out = {}
        for p in itertools.permutations(range(1, k + 1)):
            mon = sergeev.PBWMonomial(shift_perm(p), (0,) * total, (0,) * total)
            out[mon] = ONE
        return out
    if kind == "cross":
        a, b = piece.params
        k = a + b
        # block transposition: strand i -> i+b for i <= a, strand a+j -> j
        blockp = tuple(range(b + 1, b + a + 1)) + tuple(range(1, b + 1))
        winv = [0] * k
        for i, v in enumerate(blockp):
            winv[v - 1] = i + 1
        out = {}
        for pb in itertools.permutations(range(1, b + 1)):
            for pa in itertools.permutations(range(b + 1, b + a + 1)):
                top = list(pb) + list(pa)
                comp = tuple(top[blockp[i] - 1] for i in range(k))
                mon = sergeev.PBWMonomial(shift_perm(comp), (0,) * total, (0,) * total)
                out[mon] = out.get(mon, Scalar()) + ONE
        return out
    if kind == "wdot":
        (a,) = piece.params
        out = {}
        for i in range(1, a + 1):
            for p in itertools.permutations(range(1, a + 1)):
                ce = [0] * total
                ce[offset + i - 1] = 1
                mon = sergeev.PBWMonomial(shift_perm(p), tuple(ce), (0,) * total)
                out[mon] = out.get(mon, Scalar()) + ONE
        return out
    if kind == "bdot":
        (a,) = piece.params
        out = {}
        xe = [0] * total
        for i in range(a):
            xe[offset + i] = 1
        for p in itertools.permutations(range(1, a + 1)):
            mon = sergeev.PBWMonomial(shift_perm(p), (0,) * total, tuple(xe))
            out[mon] = ONE
        return out
    raise ValueError("unknown piece kind %r" % kind)


def _identity_explosion(obj, n: int) -> dict:
    return _sym_sum(n, obj)


def thin_explode(f: Morphism) -> dict:
    """Conjugate by full splits and merges into A_m, m the boundary weight.

    The result is exact; composing explosions divides by the factorial
    of each internal interface, which recovers the composite's explosion.
    """
    m = sum(f.src)
    if sum(f.tgt) != m:
        raise ValueError("boundaries have different weights")
    out = {}
    for term, coeff in f.terms.items():
        elem = _explode_term(term, m)
        for mon, c in elem.items():
            cur = out.get(mon)
            s = c * coeff if cur is None else cur + c * coeff
            if s:
                out[mon] = s
            else:
                out.pop(mon, None)
    return out


def _explode_term(term, m: int) -> dict:
    if not term.slices:
        return _identity_explosion(term.src, m)
    obj = term.src
    elem = None
    denom = 1
    for pos, piece in term.slices:
        # slice explosion: generator block plus symmetrizers on the rest
        parts = []
        strand_offset = 0
        for i, a in enumerate(obj):
            if i == pos:
                parts.append(("gen", strand_offset, piece))
                strand_offset += sum(piece.src)
            elif pos < i < pos + len(piece.src):
                continue
            else:
                parts.append(("id", strand_offset, a))
                strand_offset += a
        sl = None
        for tag, off, data in parts:
            if tag == "id":
                block = _sym_sum_shifted(m, off, data)
            else:
                block = _piece_explosion(data, m, off, m)
            sl = block if sl is None else sergeev.multiply(sl, block)
        if elem is None:
            elem = sl
        else:
            elem = sergeev.multiply(sl, elem)
            for a in obj:
                denom *= factorial(a)
        obj = wt._apply_piece(obj, pos, piece)
    if denom != 1:
        elem = sergeev.scale(elem, Scalar(rational(1, denom)))
    return elem


def _sym_sum_shifted(n: int, offset: int, size: int) -> dict:
    out = {}
    for p in itertools.permutations(range(offset + 1, offset + size + 1)):
        perm = (
            tuple(range(1, offset + 1))
            + tuple(p)
            + tuple(range(offset + size + 1, n + 1))
        )
        out[sergeev.PBWMonomial(perm, (0,) * n, (0,) * n)] = ONE
    return out


# ---------------------------------------------------------------------------
# normal morphisms and reduce


class NormalMorphism:
    """Coordinates of a morphism in the elementary diagram basis."""

    def __init__(self, src, tgt, coords=None):
        self.src = tuple(src)
        self.tgt = tuple(tgt)
        self.coords = {}
        if coords:
            for b, c in coords.items():
                c = Scalar.of(c)
                if c:
                    self.coords[b] = c

    def __eq__(self, other):
        return (
            isinstance(other, NormalMorphism)
            and (self.src, self.tgt) == (other.src, other.tgt)
            and self.coords == other.coords
        )

    def is_zero(self):
        return not self.coords

    def degree(self):
        return max((b.degree for b in self.coords), default=0)

    def top_component(self) -> "NormalMorphism":
        if not self.coords:
            return self
        d = self.degree()
        return NormalMorphism(
            self.src, self.tgt, {b: c for b, c in self.coords.items() if b.degree == d}
        )

    def items_sorted(self):
        return sorted(self.coords.items(), key=lambda bc: bc[0].sort_key())

    def to_json(self):
        return {
            "source": list(self.src),
            "target": list(self.tgt),
            "terms": [
                dict(b.to_json(), coefficient={"re": str(c.re), "im": str(c.im)})
                for b, c in self.items_sorted()
            ],
        }


class _BasisSolver:
    """Solves in the exploded-basis coordinates with a cached echelon.

    Equations are indexed by PBW monomials; enough independent ones are
    selected once (their combination bookkeeping kept), after which each
    solve is a cheap evaluation plus one full verification pass.
    """

    def __init__(self, basis, columns):
        self.basis = basis
        self.columns = columns
        ncols = len(columns)
        keys = set()
        for col in columns:
            keys.update(col)
        keys = sorted(keys, key=lambda m: (m.xdegree(), m.perm, m.cexp, m.xexp))
        echelon = []  # [pivot_col, row dict, combo dict]
        for key in keys:
            if len(echelon) == ncols:
                break
            row = {}
            for j, col in enumerate(columns):
                c = col.get(key)
                if c:
                    row[j] = c
            combo = {key: ONE}
            for pj, prow, pcombo in echelon:
                c = row.get(pj)
                if c:
                    for j, v in prow.items():
                        s = row.get(j, Scalar()) - c * v
                        if s:
                            row[j] = s
                        else:
                            row.pop(j, None)
                    for k2, v in pcombo.items():
                        s = combo.get(k2, Scalar()) - c * v
                        if s:
                            combo[k2] = s
                        else:
                            combo.pop(k2, None)
            if row:
                pj = min(row)
                inv = row[pj].inverse()
                row = {j: v * inv for j, v in row.items()}
                combo = {k2: v * inv for k2, v in combo.items()}
                echelon.append([pj, row, combo])
        if len(echelon) < ncols:
            raise RuntimeError("basis explosions are linearly dependent")
        # Jordan pass: make each pivot column exclusive to its row
        for i, (pj, row, combo) in enumerate(echelon):
            for i2, entry in enumerate(echelon):
                if i2 == i:
                    continue
                c = entry[1].get(pj)
                if not c:
                    continue
                for j, v in row.items():
                    s = entry[1].get(j, Scalar()) - c * v
                    if s:
                        entry[1][j] = s
                    else:
                        entry[1].pop(j, None)
                for k2, v in combo.items():
                    s = entry[2].get(k2, Scalar()) - c * v
                    if s:
                        entry[2][k2] = s
                    else:
                        entry[2].pop(k2, None)
        self._echelon = echelon

    def solve(self, target: dict):
        coords = [Scalar()] * len(self.columns)
        for pj, _row, combo in self._echelon:
            val = Scalar()
            for key, c in combo.items():
                t = target.get(key)
                if t:
                    val = val + c * t
            coords[pj] = val
        # exact verification: the combination must reproduce the target
        residue = dict(target)
        for j, c in enumerate(coords):
            if not c:
                continue
            for key, v in self.columns[j].items():
                s = residue.get(key, Scalar()) - c * v
                if s:
                    residue[key] = s
                else:
                    residue.pop(key, None)
        if residue:
            raise RuntimeError("spanning violated: nonzero residue")
        return coords


_SOLVER_CACHE = {}


def _basis_solver(lam, mu, maxdeg) -> _BasisSolver:
    key = (tuple(lam), tuple(mu), maxdeg)
    hit = _SOLVER_CACHE.get(key)
    if hit is None:
        basis = cfd_basis(lam, mu, maxdeg)
        columns = [thin_explode(embed(b)) for b in basis]
        hit = _BasisSolver(basis, columns)
        _SOLVER_CACHE[key] = hit
    return hit


def reduce_morphism(f: Morphism) -> NormalMorphism:
    """Unique coordinates of f in the elementary diagram basis.

    Inconsistency of the linear system would contradict the spanning
    theorem, so it raises rather than returning a best effort.
    """
    if not f.terms:
        return NormalMorphism(f.src, f.tgt)
    maxdeg = f.degree()
    solver = _basis_solver(f.tgt, f.src, maxdeg)
    target = thin_explode(f)
    coeffs = solver.solve(target)
    return NormalMorphism(f.src, f.tgt, dict(zip(solver.basis, coeffs)))


reduce = reduce_morphism


def equal_by_explosion(f: Morphism, g: Morphism) -> bool:
    """Exact equality via the normal-form route, without coordinates.

    Conjugation into thin strands is injective (composing back with the
    full merges and splits rescales by the product of boundary
    factorials), so equality of explosions decides equality.
    """
    if f.src != g.src or f.tgt != g.tgt:
        return False
    diff = f - g
    if diff.is_zero():
        return True
    return not thin_explode(diff)


# ---------------------------------------------------------------------------
# the Sergeev dictionary on thin boundaries


def phi_word(word, n: int) -> Morphism:
    """The thin diagram of a word in the Sergeev generators.

    The word is an algebra product, leftmost letter applied last, so
    letters stack bottom-up in reverse order.
    """
    obj = (1,) * n
    f = wt.identity(obj)
    for kind, idx in word:
        if kind == "x":
            gen = wt.bdot(1)
        elif kind == "c":
            gen = wt.wdot(1)
        elif kind == "s":
            gen = wt.cross(1, 1)
        else:
            raise ValueError("unknown letter %r" % ((kind, idx),))
        pos = idx - 1
        left = wt.identity((1,) * pos)
        right = wt.identity((1,) * (n - pos - len(gen.src)))
        f = wt.compose(f, wt.tensor_many(left, gen, right))
    return f


def phi(kind: str, idx: int, n: int) -> Morphism:
    return phi_word([(kind, idx)], n)


def decode(nm: NormalMorphism) -> dict:
    """Translate a normal form on thin boundaries into the superalgebra.

    Each basis diagram on all-ones boundaries straightens to a single
    PBW monomial up to sign; the sign table is computed, not assumed.
    """
    if any(x != 1 for x in nm.src) or any(x != 1 for x in nm.tgt):
        raise ValueError("decode needs all-ones boundaries")
    n = len(nm.src)
    out = {}
    for b, coeff in nm.coords.items():
        mor = embed(b)
        if len(mor.terms) != 1:
            raise AssertionError("embedded basis diagram is not a single term")
        ((term, tcoeff),) = mor.terms.items()
        letters = []
        for pos, piece in reversed(term.slices):  # topmost factor first
            if piece.kind == "bdot":
                letters.append(("x", pos + 1))
            elif piece.kind == "wdot":
                letters.append(("c", pos + 1))
            elif piece.kind == "cross":
                letters.append(("s", pos + 1))
            else:
                raise AssertionError("non-thin piece in a thin diagram")
        elem = sergeev.straighten(letters, n)
        for mon, c in elem.items():
            cur = out.get(mon)
            s = c * coeff * tcoeff if cur is None else cur + c * coeff * tcoeff
            if s:
                out[mon] = s
            else:
                out.pop(mon, None)
    return out


# ---------------------------------------------------------------------------
# leading-term classification


def leading_class(f: Morphism) -> dict:
    """Classify the top-degree part of an endomorphism of one strand.

    Returns a report with the reduced top component and membership flags
    for the packet spans: D (no white dots), E (all packets, which is
    the whole basis), E^{0,d} (no white dots, degree exactly d) and Z
    (two-white-dot packets with distinct dot indices plus D).
    """
    if len(f.src) != 1 or f.src != f.tgt:
        raise ValueError("leading_class needs an endomorphism of a single strand")
    (a,) = f.src
    nm = reduce_morphism(f)
    top = nm.top_component()
    d = top.degree()
    in_d = all(not b_has_nu(b) for b in top.coords)
    in_e0d = in_d and all(b.degree == d for b in top.coords)
    # Z-span test: top component expressible by omega-circ pairs with
    # distinct indices plus undotted packets, at matching degree
    span_rows = []
    for s in range(0, a):
        for t in range(0, a):
            if s == t or s + t != d:
                continue
            g = wt.compose(wt.omega_circ(a, s), wt.omega_circ(a, t))
            red = reduce_morphism(g).top_component()
            span_rows.append({b: c for b, c in red.coords.items()})
    for eta in combinat.partitions_of(d, a):
        b = ElementaryCFD((a,), (a,), ((a,),), ((((), tuple(eta)),),))
        span_rows.append({b: ONE})
    vec = {b: c for b, c in top.coords.items()}
    in_z = linalg.rank(span_rows) == linalg.rank(span_rows + [vec])
    return {
        "degree": d,
        "top": top,
        "in_D": in_d,
        "in_E": True,
        "in_E0d": in_e0d,
        "in_Z": in_z,
    }


def b_has_nu(b: ElementaryCFD) -> bool:
    return any(nu for row in b.decor for nu, _ in row)
