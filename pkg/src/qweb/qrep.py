"""The representation-functor oracle.

Diagrams act on M (x) S^mu(V) where V is the natural module of the
queer Lie superalgebra inside gl(n|n): V has even basis v_1..v_n and odd
basis v_{1bar}..v_{nbar}.  Basis letters are pairs (i, bar).  Monomials
of the supersymmetric power S^a(V) are stored normal ordered: the even
letters as a sorted multiset, then the odd letters strictly ascending
(odd squares vanish).  All Koszul signs are computed by explicit
odd-transposition counting against this order.

Generator actions: a merge multiplies, a split sums over position
subsets with the reordering sign, a crossing swaps with the parity
sign, a white dot inserts the odd map  c(v) = (-1)^{|v|} sqrt(-1) v-bar
letter by letter, and a black dot on a strand acts as the Casimir-like
operator Omega on (everything to the left) (x) (that strand).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .scalars import Scalar, ONE, I, rational
from .webterm import Morphism
from . import linalg

DEFAULT_DIM_CAP = 20000


class OracleTooLarge(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# letters and monomials

# a letter is (index, bar) with 1 <= index <= n, bar in {0, 1}; parity = bar


def letter_parity(letter) -> int:
    return letter[1]


def normalize_word(letters):
    """Sort a word into (evens multiset, odds ascending); None kills the term.

    Returns (monomial, sign) where the sign counts odd-odd transpositions.
    """
    evens = []
    odds = []
    sign = 1
    seen_odd_positions = []
    for pos, l in enumerate(letters):
        if l[1] == 0:
            evens.append(l)
        else:
            seen_odd_positions.append(l)
    # bubble-count inversions among odd letters only (they anticommute)
    odds = list(seen_odd_positions)
    for i in range(len(odds)):
        for j in range(i + 1, len(odds)):
            if odds[j] < odds[i]:
                sign = -sign
    odds_sorted = sorted(odds)
    for i in range(len(odds_sorted) - 1):
        if odds_sorted[i] == odds_sorted[i + 1]:
            return None, 0
    return (tuple(sorted(evens)), tuple(odds_sorted)), sign


def monomial_word(mon) -> tuple:
    evens, odds = mon
    return evens + odds


def monomial_parity(mon) -> int:
    return len(mon[1]) % 2


def sym_power_basis(a: int, n: int):
    """All normal-ordered monomials of S^a(V), lexicographic."""
    out = []
    for no in range(min(a, n) + 1):
        ne = a - no
        for evens in itertools.combinations_with_replacement(
            [(i, 0) for i in range(1, n + 1)], ne
        ):
            for odds in itertools.combinations([(i, 1) for i in range(1, n + 1)], no):
                out.append((tuple(evens), tuple(odds)))
    return sorted(out)


# ---------------------------------------------------------------------------
# module specs


@dataclass(frozen=True)
class ModuleSpec:
    """Tensor list of atoms: ("V",), ("S", k), or ("triv",)."""

    atoms: tuple

    @staticmethod
    def parse(text: str) -> "ModuleSpec":
        text = text.strip()
        if not text or text == "triv":
            return ModuleSpec((("triv",),) if text == "triv" else ())
        atoms = []
        for bit in text.replace("(x)", "*").replace("⊗", "*").split("*"):
            bit = bit.strip()
            if bit == "V":
                atoms.append(("V",))
            elif bit == "triv":
                atoms.append(("triv",))
            elif bit.startswith("S^") and bit.endswith("(V)"):
                atoms.append(("S", int(bit[2:-3])))
            else:
                raise ValueError("cannot parse module atom %r" % bit)
        return ModuleSpec(tuple(atoms))

    def basis(self, n: int):
        factors = []
        for atom in self.atoms:
            if atom[0] == "V":
                factors.append([((i, b),) for b in (0, 1) for i in range(1, n + 1)])
            elif atom[0] == "triv":
                factors.append([("1",)])
            else:
                factors.append(sym_power_basis(atom[1], n))
        return factors


V_SPEC = ModuleSpec((("V",),))


def _atom_parity(atom, vec) -> int:
    if atom[0] == "V":
        return vec[0][1]
    if atom[0] == "triv":
        return 0
    return monomial_parity(vec)


# ---------------------------------------------------------------------------
# state vectors: dict basis-tuple -> Scalar

# a full basis vector is a tuple: one entry per M-atom, then one monomial
# per strand of the current object.


def _vec_add(acc, key, coeff):
    if not coeff:
        return
    cur = acc.get(key)
    s = coeff if cur is None else cur + coeff
    if s:
        acc[key] = s
    else:
        del acc[key]


class Evaluator:
    """Evaluates morphisms on M (x) S^mu(V) for fixed n and module spec."""

    def __init__(self, n: int, mspec: ModuleSpec = V_SPEC, dim_cap: int = DEFAULT_DIM_CAP):
        self.n = n
        self.mspec = mspec
        self.dim_cap = dim_cap
        self._mfactors = mspec.basis(n)
        self._action_cache = {}

    # -- bases ------------------------------------------------------------

    def space_basis(self, obj):
        factors = list(self._mfactors) + [sym_power_basis(a, self.n) for a in obj]
        dim = 1
        for f in factors:
            dim *= len(f)
        if dim > self.dim_cap:
            raise OracleTooLarge(
                "oracle too large: dim %d exceeds cap %d" % (dim, self.dim_cap)
            )
        return [tuple(v) for v in itertools.product(*factors)]

    def _nm(self) -> int:
        return len(self.mspec.atoms)

    def vec_parity(self, key, obj) -> int:
        p = 0
        for atom, v in zip(self.mspec.atoms, key):
            p += _atom_parity(atom, v)
        for mon in key[self._nm():]:
            p += monomial_parity(mon)
        return p % 2

    def _left_parity(self, key, upto: int) -> int:
        """Parity of the M-part plus strands < upto."""
        p = 0
        for atom, v in zip(self.mspec.atoms, key):
            p += _atom_parity(atom, v)
        for mon in key[self._nm(): self._nm() + upto]:
            p += monomial_parity(mon)
        return p % 2

    # -- gl(V) letters ----------------------------------------------------

    def _factor_types(self, upto: int):
        """Factor type tags for the M-part plus the first `upto` strands."""
        return list(self.mspec.atoms) + [("S",)] * upto

    @staticmethod
    def _factor_parity(tag, vec) -> int:
        if tag[0] == "S":
            return monomial_parity(vec)
        return _atom_parity(tag, vec)

    _E_CACHE = {}

    @classmethod
    def _act_e_on_factor(cls, a, b, tag, vec):
        """Matrix unit e_{a,b} acting on one factor; (vec', sign) pairs."""
        if tag[0] == "triv":
            return ()
        if tag[0] == "V":
            return (((a,), 1),) if vec[0] == b else ()
        key = (a, b, vec)
        hit = cls._E_CACHE.get(key)
        if hit is not None:
            return hit
        # supersymmetric power: derivation over the letters
        word = monomial_word(vec)
        pe = (a[1] + b[1]) % 2
        out = []
        for t, l in enumerate(word):
            if l != b:
                continue
            sign = 1
            if pe and sum(letter_parity(x) for x in word[:t]) % 2:
                sign = -1
            new_word = word[:t] + (a,) + word[t + 1:]
            mon, s2 = normalize_word(new_word)
            if mon is not None:
                out.append((mon, sign * s2))
        out = tuple(out)
        cls._E_CACHE[key] = out
        return out

    def _act_gl_combo(self, pairs, key, upto: int):
        """Act sum(coeff * e_{a,b}) on the left part (M plus strands < upto).

        Super-derivation across the factors; returns dict key -> Scalar.
        """
        tags = self._factor_types(upto)
        out = {}
        for coeff, a, b in pairs:
            pe = (a[1] + b[1]) % 2
            running = 0  # parity of factors strictly left of the current one
            for fi, tag in enumerate(tags):
                vec = key[fi]
                sign = -1 if (pe and running % 2) else 1
                for nv, s in self._act_e_on_factor(a, b, tag, vec):
                    nk = key[:fi] + (nv,) + key[fi + 1:]
                    _vec_add(out, nk, coeff * (sign * s))
                running += self._factor_parity(tag, vec)
        return out

    # -- generator actions on one basis vector -----------------------------

    def apply_piece(self, pos: int, piece, key):
        """Local action of one slice generator, memoized.

        merge/split/cross depend only on the touched monomials; the odd
        white dot additionally on the parity to its left; the black dot
        on the whole prefix (its gl-part acts on everything left).
        """
        nm = self._nm()
        kind = piece.kind
        idx = nm + pos
        w = len(piece.src)
        if kind in ("merge", "split", "cross"):
            ck = (kind, piece.params, key[idx: idx + w])
            hit = self._action_cache.get(ck)
            if hit is None:
                hit = list(self._piece_action(pos, piece, key))
                self._action_cache[ck] = [
                    (nk[idx: idx + len(piece.tgt)], c) for nk, c in hit
                ]
                return hit
            return [
                (key[:idx] + repl + key[idx + w:], c) for repl, c in hit
            ]
        if kind == "wdot":
            lp = self._left_parity(key, pos)
            ck = ("wdot", piece.params, key[idx], lp)
            hit = self._action_cache.get(ck)
            if hit is None:
                hit = list(self._piece_action(pos, piece, key))
                self._action_cache[ck] = [(nk[idx], c) for nk, c in hit]
                return hit
            return [(key[:idx] + (mon,) + key[idx + 1:], c) for mon, c in hit]
        # black dot: cache on the prefix including the dotted strand
        ck = ("bdot", piece.params, key[: idx + 1])
        hit = self._action_cache.get(ck)
        if hit is None:
            hit = list(self._piece_action(pos, piece, key))
            self._action_cache[ck] = [(nk[: idx + 1], c) for nk, c in hit]
            return hit
        return [(pref + key[idx + 1:], c) for pref, c in hit]

    def _piece_action(self, pos: int, piece, key):
        """Uncached slice action; yields (new_key, Scalar)."""
        nm = self._nm()
        kind = piece.kind
        idx = nm + pos
        if kind == "merge":
            w1, w2 = key[idx], key[idx + 1]
            mon, sign = normalize_word(monomial_word(w1) + monomial_word(w2))
            if mon is not None:
                yield key[:idx] + (mon,) + key[idx + 2:], Scalar.of(sign)
            return
        if kind == "split":
            a, b = piece.params
            word = monomial_word(key[idx])
            npos = len(word)
            for subset in itertools.combinations(range(npos), a):
                inset = set(subset)
                left = [word[t] for t in subset]
                right = [word[t] for t in range(npos) if t not in inset]
                # sign: move chosen letters to the front, odd past odd flips
                sign = 1
                for t in subset:
                    for u in range(t):
                        if u not in inset and word[u][1] and word[t][1]:
                            sign = -sign
                ml, s1 = normalize_word(left)
                if ml is None:
                    continue
                mr, s2 = normalize_word(right)
                if mr is None:
                    continue
                yield key[:idx] + (ml, mr) + key[idx + 1:], Scalar.of(sign * s1 * s2)
            return
        if kind == "cross":
            w1, w2 = key[idx], key[idx + 1]
            sign = -1 if (monomial_parity(w1) and monomial_parity(w2)) else 1
            yield key[:idx] + (w2, w1) + key[idx + 2:], Scalar.of(sign)
            return
        if kind == "wdot":
            # odd map: Koszul sign against everything to the left
            prefix = -1 if self._left_parity(key, pos) else 1
            word = monomial_word(key[idx])
            for t, l in enumerate(word):
                lsign = -1 if sum(x[1] for x in word[:t]) % 2 else 1
                csign = -1 if l[1] else 1  # c(v) = (-1)^{|v|} sqrt(-1) v-bar
                new_word = word[:t] + ((l[0], 1 - l[1]),) + word[t + 1:]
                mon, s2 = normalize_word(new_word)
                if mon is None:
                    continue
                coeff = I * (prefix * lsign * csign * s2)
                yield key[:idx] + (mon,) + key[idx + 1:], coeff
            return
        if kind == "bdot":
            a = piece.params[0]
            if a > 1:
                # the thick black dot is the a!-normalized dotted balloon;
                # only the thin dot acts directly as Omega
                for nk, c in self._thick_bdot(a, pos, key).items():
                    yield nk, c
                return
            # Omega(m (x) v) = sum_{i,j} -e0_{ij} m (x) f0_{ji} v
            #                        + (-1)^{|m|} e1_{ij} m (x) f1_{ji} v
            # only indices present in the strand (for f) and in the left
            # part (for e) can contribute
            mpar = self._left_parity(key, pos)
            msign = -1 if mpar else 1
            strand_mon = key[idx]
            strand_bases = {l[0] for l in monomial_word(strand_mon)}
            left_bases = set()
            for tag, vec in zip(self._factor_types(pos), key):
                if tag[0] == "V":
                    left_bases.add(vec[0][0])
                elif tag[0] == "S":
                    left_bases.update(l[0] for l in monomial_word(vec))
            for i in sorted(strand_bases):
                for j in sorted(left_bases):
                    # even part; f0_{ji} = e_{ji} - e_{jbar,ibar}
                    fpairs = [
                        (ONE, (j, 0), (i, 0)),
                        (Scalar.of(-1), (j, 1), (i, 1)),
                    ]
                    for fv, fs in self._strand_act(fpairs, strand_mon):
                        epairs = [
                            (-fs, (i, 0), (j, 0)),
                            (-fs, (i, 1), (j, 1)),
                        ]
                        base = key[:idx] + (fv,) + key[idx + 1:]
                        for nk, c in self._act_gl_combo(epairs, base, pos).items():
                            yield nk, c
                    # odd part; f1_{ji} = e_{jbar,i} - e_{j,ibar}
                    fpairs = [
                        (ONE, (j, 1), (i, 0)),
                        (Scalar.of(-1), (j, 0), (i, 1)),
                    ]
                    for fv, fs in self._strand_act(fpairs, strand_mon):
                        epairs = [
                            (fs * msign, (i, 1), (j, 0)),
                            (fs * msign, (i, 0), (j, 1)),
                        ]
                        base = key[:idx] + (fv,) + key[idx + 1:]
                        for nk, c in self._act_gl_combo(epairs, base, pos).items():
                            yield nk, c
            return
        raise ValueError("unknown piece kind %r" % kind)

    def _strand_act(self, pairs, mon):
        """Act sum(coeff e_{a,b}) on a single strand monomial."""
        out = {}
        for coeff, a, b in pairs:
            for nv, s in self._act_e_on_factor(a, b, ("S", 0), mon):
                _vec_add(out, nv, coeff * s)
        return out.items()

    _balloons = {}

    def _thick_bdot(self, a: int, pos: int, key):
        """Apply the dotted balloon over a! at strand pos."""
        mor = Evaluator._balloons.get(a)
        if mor is None:
            from .relations import dotted_balloon

            mor = Scalar(rational(1, __import__("math").factorial(a))) * dotted_balloon(a)
            Evaluator._balloons[a] = mor
        out = {}
        for term, coeff in mor.terms.items():
            state = {key: coeff}
            for spos, spiece in term.slices:
                new_state = {}
                for k, c in state.items():
                    for nk, s in self.apply_piece(pos + spos, spiece, k):
                        _vec_add(new_state, nk, c * s)
                state = new_state
                if not state:
                    break
            for k, c in state.items():
                _vec_add(out, k, c)
        return out

    # -- morphism evaluation -----------------------------------------------

    def apply_term(self, term, key):
        """Apply one diagram term to a basis vector; returns dict vec->Scalar."""
        state = {key: ONE}
        for pos, piece in term.slices:
            new_state = {}
            for k, c in state.items():
                for nk, s in self.apply_piece(pos, piece, k):
                    _vec_add(new_state, nk, c * s)
            state = new_state
            if not state:
                break
        return state

    def apply_morphism(self, f: Morphism, key):
        out = {}
        for term, coeff in f.terms.items():
            for k, c in self.apply_term(term, key).items():
                _vec_add(out, k, c * coeff)
        return out

    def matrix(self, f: Morphism):
        """Columns of the evaluated map, keyed by source basis vectors."""
        cols = {}
        for key in self.space_basis(f.src):
            col = self.apply_morphism(f, key)
            if col:
                cols[key] = col
        return cols

    def equal(self, f: Morphism, g: Morphism) -> bool:
        if f.src != g.src or f.tgt != g.tgt:
            return False
        for key in self.space_basis(f.src):
            if self.apply_morphism(f, key) != self.apply_morphism(g, key):
                return False
        return True


def eval_morphism(f: Morphism, n: int, mspec="V", dim_cap: int = DEFAULT_DIM_CAP):
    """Evaluate a morphism; returns a SuperLinearMap."""
    if isinstance(mspec, str):
        mspec = ModuleSpec.parse(mspec)
    ev = Evaluator(n, mspec, dim_cap)
    src_basis = ev.space_basis(f.src)
    tgt_basis = ev.space_basis(f.tgt)
    tgt_index = {v: i for i, v in enumerate(tgt_basis)}
    entries = {}
    for ci, key in enumerate(src_basis):
        for nk, c in ev.apply_morphism(f, key).items():
            entries[(tgt_index[nk], ci)] = c
    return SuperLinearMap(
        src_basis, tgt_basis, entries, f.parity() if f.parity() is not None else 0
    )


@dataclass
class SuperLinearMap:
    """Exact matrix between parity-graded based spaces."""

    source: list
    target: list
    entries: dict  # (row, col) -> Scalar
    parity: int = 0

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        return (
            isinstance(other, SuperLinearMap)
            and self.source == other.source
            and self.target == other.target
            and self.entries == other.entries
        )

    def to_json(self):
        items = sorted(self.entries.items())
        return {
            "rows": len(self.target),
            "cols": len(self.source),
            "parity": self.parity,
            "entries": [
                [r, c, str(v.re), str(v.im)] for (r, c), v in items
            ],
        }


def omega_operator(n: int, a: int, mspec="V", dim_cap: int = DEFAULT_DIM_CAP):
    """The black-dot operator on M (x) S^a(V), as a SuperLinearMap."""
    from . import webterm

    return eval_morphism(webterm.bdot(a), n, mspec, dim_cap)


def rank_of(morphisms, n: int, mspec="V", dim_cap=DEFAULT_DIM_CAP, probe_limit=None) -> int:
    """Exact rank of the vectorized evaluated matrices.

    Columns are consumed lazily in doubling batches, most generic source
    vectors (most distinct letters) first; evaluation stops as soon as
    the span has full rank.  A probe_limit caps the scan, turning the
    result into an exact lower bound for cheap screening.
    """
    morphisms = list(morphisms)
    if not morphisms:
        return 0
    if isinstance(mspec, str):
        mspec = ModuleSpec.parse(mspec)
    ev = Evaluator(n, mspec, dim_cap)
    src = morphisms[0].src
    src_basis = ev.space_basis(src)

    def genericity(key):
        bases = []
        for vec in key:
            for part in vec:
                if part == "1":
                    continue
                if isinstance(part, tuple) and part and isinstance(part[0], int):
                    bases.append(part[0])
                elif isinstance(part, tuple):
                    bases.extend(l[0] for l in part)
        return (-len(set(bases)), key)

    src_basis = sorted(src_basis, key=genericity)
    if probe_limit is not None:
        src_basis = src_basis[:probe_limit]
    rows = [dict() for _ in morphisms]
    consumed = 0
    batch = max(4, len(morphisms) // 8)
    best = 0
    while consumed < len(src_basis):
        upto = min(len(src_basis), consumed + batch)
        for key in src_basis[consumed:upto]:
            for ri, f in enumerate(morphisms):
                for nk, c in ev.apply_morphism(f, key).items():
                    rows[ri][(key, nk)] = c
        consumed = upto
        batch *= 2
        best = linalg.rank(rows)
        if best == len(morphisms):
            return best
    return best
