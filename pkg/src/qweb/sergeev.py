"""The affine Sergeev superalgebra A_n and its PBW normal form.

Generators: even s_1..s_{n-1} (transpositions), even x_1..x_n
(polynomial part), odd c_1..c_n (Clifford part).  Defining relations:

    s_i^2 = 1, braid relations, distant s's commute
    x_i s_i = s_i x_{i+1} + 1 - c_i c_{i+1}
    s_i x_i = x_{i+1} s_i + 1 + c_i c_{i+1}
    x's commute, s_i x_j = x_j s_i (j != i, i+1)
    c_i^2 = 1, c_i x_i = -x_i c_i, c_i c_j = -c_j c_i,
    c_i x_j = x_j c_i (i != j)
    s_i c_i = c_{i+1} s_i, s_i c_{i+1} = c_i s_i, s_i c_j = c_j s_i

PBW basis: w c^a x^b with w a permutation, a in {0,1}^n, b in N^n.
Elements are dicts PBWMonomial -> Scalar.  Products are computed by
folding generator letters into the normal form from the right;
multiplication by a permutation letter pushes it through the x-part via
the mixed relation, which terminates because the x-weight next to the
moving s strictly drops.

Permutations are one-line tuples w with w[p-1] the exit position of the
strand entering at p; the algebra product u*v composes u after v.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scalars import Scalar, ONE


@dataclass(frozen=True)
class PBWMonomial:
    perm: tuple       # one-line notation, length n
    cexp: tuple       # 0/1 per index
    xexp: tuple       # non-negative int per index

    @property
    def n(self) -> int:
        return len(self.perm)

    def parity(self) -> int:
        return sum(self.cexp) % 2

    def xdegree(self) -> int:
        return sum(self.xexp)

    def __str__(self):
        return "w=%s c=%s x=%s" % (list(self.perm), tuple(self.cexp), tuple(self.xexp))


def identity_monomial(n: int) -> PBWMonomial:
    return PBWMonomial(tuple(range(1, n + 1)), (0,) * n, (0,) * n)


def one(n: int) -> dict:
    return {identity_monomial(n): ONE}


def _add(acc, mon, coeff):
    if not coeff:
        return
    cur = acc.get(mon)
    s = coeff if cur is None else cur + coeff
    if s:
        acc[mon] = s
    else:
        del acc[mon]


def rmul_x(elem: dict, j: int) -> dict:
    """elem * x_j (j is 1-based)."""
    out = {}
    for m, c in elem.items():
        xe = list(m.xexp)
        xe[j - 1] += 1
        _add(out, PBWMonomial(m.perm, m.cexp, tuple(xe)), c)
    return out


def _cx_insert(perm, cexp, xexp, j):
    """Right-multiply the monomial by c_j; returns (monomial, sign)."""
    sign = -1 if xexp[j - 1] % 2 else 1
    passing = sum(cexp[j:])
    if passing % 2:
        sign = -sign
    ce = list(cexp)
    ce[j - 1] ^= 1
    return PBWMonomial(perm, tuple(ce), xexp), sign


def rmul_c(elem: dict, j: int) -> dict:
    """elem * c_j."""
    out = {}
    for m, c in elem.items():
        mon, sign = _cx_insert(m.perm, m.cexp, m.xexp, j)
        _add(out, mon, c * sign)
    return out


_PUSHX_CACHE = {}


def _push_x_through_s(xexp: tuple, i: int) -> dict:
    """Normal form of x^b s_i, as an element with trivial c-part inputs.

    Recursion on the x-weight at slots i, i+1; the output monomials carry
    permutation id or s_i and possibly a c_i c_{i+1} pair.
    """
    hit = _PUSHX_CACHE.get((xexp, i))
    if hit is not None:
        return hit
    n = len(xexp)
    bi, bj = xexp[i - 1], xexp[i]
    if bi == 0 and bj == 0:
        perm = list(range(1, n + 1))
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
        out = {PBWMonomial(tuple(perm), (0,) * n, xexp): ONE}
        _PUSHX_CACHE[(xexp, i)] = out
        return out
    out = {}
    if bi > 0:
        base = list(xexp)
        base[i - 1] -= 1
        base = tuple(base)
        # x^b s_i = x^{b-e_i} (s_i x_{i+1} + 1 - c_i c_{i+1})
        for m, c in rmul_x(_push_x_through_s(base, i), i + 1).items():
            _add(out, m, c)
        rest = {PBWMonomial(tuple(range(1, n + 1)), (0,) * n, base): ONE}
        for m, c in rest.items():
            _add(out, m, c)
        for m, c in rmul_c(rmul_c(rest, i), i + 1).items():
            _add(out, m, -c)
    else:
        base = list(xexp)
        base[i] -= 1
        base = tuple(base)
        # x^b s_i = x^{b-e_{i+1}} (s_i x_i - 1 - c_i c_{i+1})
        for m, c in rmul_x(_push_x_through_s(base, i), i).items():
            _add(out, m, c)
        rest = {PBWMonomial(tuple(range(1, n + 1)), (0,) * n, base): ONE}
        for m, c in rest.items():
            _add(out, m, -c)
        for m, c in rmul_c(rmul_c(rest, i), i + 1).items():
            _add(out, m, -c)
    _PUSHX_CACHE[(xexp, i)] = out
    return out


def rmul_s(elem: dict, i: int) -> dict:
    """elem * s_i."""
    out = {}
    for m, coeff in elem.items():
        n = m.n
        for piece, pc in _push_x_through_s(m.xexp, i).items():
            # piece = pi c'' x'' with pi in {id, s_i}; assemble w c^a pi c'' x''
            perm = m.perm
            cexp = m.cexp
            sign = 1
            moved = piece.perm != tuple(range(1, n + 1))
            if moved:
                if cexp[i - 1] == 1 and cexp[i] == 1:
                    sign = -sign
                ce = list(cexp)
                ce[i - 1], ce[i] = ce[i], ce[i - 1]
                cexp = tuple(ce)
                pl = list(perm)
                pl[i - 1], pl[i] = pl[i], pl[i - 1]
                perm = tuple(pl)
            cur = {PBWMonomial(perm, cexp, (0,) * n): ONE}
            for j in range(1, n + 1):
                if piece.cexp[j - 1]:
                    cur = rmul_c(cur, j)
            res = {}
            for mm, cc in cur.items():
                _add(res, PBWMonomial(mm.perm, mm.cexp, piece.xexp), cc)
            for mm, cc in res.items():
                _add(out, mm, coeff * pc * cc * sign)
    return out


GEN_KINDS = ("s", "x", "c")

_RMUL_CACHE = {}


def rmul_letter_mon(mon: PBWMonomial, kind: str, idx: int) -> dict:
    """Memoized normal form of (one monomial) * (one generator)."""
    key = (mon, kind, idx)
    hit = _RMUL_CACHE.get(key)
    if hit is None:
        hit = rmul_letter({mon: ONE}, kind, idx)
        _RMUL_CACHE[key] = hit
    return hit


def rmul_letter(elem: dict, kind: str, idx: int) -> dict:
    if kind == "x":
        return rmul_x(elem, idx)
    if kind == "c":
        return rmul_c(elem, idx)
    if kind == "s":
        return rmul_s(elem, idx)
    raise ValueError("unknown generator kind %r" % kind)


def is_x_free(elem: dict) -> bool:
    return all(not any(m.xexp) for m in elem)


def _merge_c(alpha: tuple, beta: tuple):
    """Concatenate two sorted Clifford monomials; returns (cexp, sign)."""
    out = list(alpha)
    sign = 1
    for j in range(len(beta)):
        if beta[j]:
            if sum(out[j + 1:]) % 2:
                sign = -sign
            out[j] ^= 1
    return tuple(out), sign


_RELABEL_CACHE = {}


def _relabel(mon: PBWMonomial, perm2: tuple, cexp2: tuple):
    """Combine (w c^a) with (w' c^{a'}): returns (perm, cexp, sign)."""
    key = (mon, perm2, cexp2)
    hit = _RELABEL_CACHE.get(key)
    if hit is not None:
        return hit
    w = mon.perm
    n = len(w)
    perm = tuple(w[perm2[i] - 1] for i in range(n))
    # c^a passes the permutation by relabeling: c_j emerges as
    # c_{w'^{-1}(j)}; the emerging letters need re-sorting, so count
    # the inversions of the relabeled index sequence
    winv = [0] * n
    for i, v in enumerate(perm2):
        winv[v - 1] = i + 1
    emerged = [winv[j] for j in range(n) if mon.cexp[j]]
    sign = 1
    for i in range(len(emerged)):
        for j in range(i + 1, len(emerged)):
            if emerged[i] > emerged[j]:
                sign = -sign
    moved = tuple(mon.cexp[perm2[i] - 1] for i in range(n))
    cexp, sign2 = _merge_c(moved, cexp2)
    hit = (perm, cexp, sign * sign2)
    _RELABEL_CACHE[key] = hit
    return hit


def left_mul_monomial(mon: PBWMonomial, elem: dict) -> dict:
    """(w c^a) * elem for an x-free monomial, one pass per target term."""
    if any(mon.xexp):
        raise ValueError("left_mul_monomial needs an x-free monomial")
    out = {}
    for m, coeff in elem.items():
        perm, cexp, sign = _relabel(mon, m.perm, m.cexp)
        _add(out, PBWMonomial(perm, cexp, m.xexp), coeff * sign)
    return out


_PERM_WALK_CACHE = {}


def _perm_walk(perm: tuple):
    """Reduced word with prefix and suffix permutations at every cut."""
    hit = _PERM_WALK_CACHE.get(perm)
    if hit is not None:
        return hit
    n = len(perm)
    word = [i for _, i in reduced_word(perm)]
    ident = tuple(range(1, n + 1))

    def times_s(p, i):
        q = list(p)
        q[i - 1], q[i] = q[i], q[i - 1]
        return tuple(q)

    prefixes = [ident]
    for i in word:
        prefixes.append(times_s(prefixes[-1], i))
    suffixes = [ident] * (len(word) + 1)
    for t in range(len(word) - 1, -1, -1):
        i = word[t]
        s_i = times_s(ident, i)
        suffixes[t] = tuple(s_i[suffixes[t + 1][k] - 1] for k in range(n))
    inv_suffixes = []
    for s in suffixes:
        inv = [0] * n
        for i, v in enumerate(s):
            inv[v - 1] = i + 1
        inv_suffixes.append(tuple(inv))
    hit = (word, prefixes, suffixes, inv_suffixes)
    _PERM_WALK_CACHE[perm] = hit
    return hit


def _left_mul_x(j: int, elem: dict) -> dict:
    """x_j * elem, pushing the x through each monomial's permutation."""
    out = {}
    for m, coeff in elem.items():
        n = m.n
        word, prefixes, suffixes, inv_suffixes = _perm_walk(m.perm)
        jcur = j
        for t, i in enumerate(word):
            if jcur not in (i, i + 1):
                continue
            # correction terms replace x s_i at this cut
            pre = prefixes[t]
            suf = suffixes[t + 1]
            inv = inv_suffixes[t + 1]
            whole = tuple(pre[suf[k] - 1] for k in range(n))
            scalar_sign = 1 if jcur == i else -1
            mon1 = PBWMonomial(whole, (0,) * n, (0,) * n)
            for mm, cc in left_mul_monomial(mon1, {m_strip(m): ONE}).items():
                _add(out, mm, coeff * cc * scalar_sign)
            cpair = [0] * n
            cpair[inv[i - 1] - 1] ^= 1
            sign2 = -1
            if inv[i - 1] > inv[i]:
                sign2 = -sign2  # reorder the conjugated pair
            cpair[inv[i] - 1] ^= 1
            mon2 = PBWMonomial(whole, tuple(cpair), (0,) * n)
            for mm, cc in left_mul_monomial(mon2, {m_strip(m): ONE}).items():
                _add(out, mm, coeff * cc * sign2)
            jcur = i + 1 if jcur == i else i
        # main term: x_{jcur} joins the monomial's own c and x parts
        sign = -1 if m.cexp[jcur - 1] else 1
        xe = list(m.xexp)
        xe[jcur - 1] += 1
        _add(out, PBWMonomial(m.perm, m.cexp, tuple(xe)), coeff * sign)
    return out


def m_strip(m: PBWMonomial) -> PBWMonomial:
    """The c- and x-part of a monomial (identity permutation)."""
    return PBWMonomial(tuple(range(1, m.n + 1)), m.cexp, m.xexp)


def left_mul_monomial_any(mon: PBWMonomial, elem: dict) -> dict:
    """mon * elem for an arbitrary PBW monomial."""
    cur = elem
    for jj in range(mon.n, 0, -1):
        for _ in range(mon.xexp[jj - 1]):
            cur = _left_mul_x(jj, cur)
    xfree = PBWMonomial(mon.perm, mon.cexp, (0,) * mon.n)
    return left_mul_monomial(xfree, cur)


def check_word(word, n: int):
    for kind, idx in word:
        if kind == "s":
            if not 1 <= idx <= n - 1:
                raise ValueError("s_%d out of range for n=%d" % (idx, n))
        elif kind in ("x", "c"):
            if not 1 <= idx <= n:
                raise ValueError("%s_%d out of range for n=%d" % (kind, idx, n))
        else:
            raise ValueError("unknown letter %r" % ((kind, idx),))


def straighten(word, n: int) -> dict:
    """PBW normal form of a product of generator letters.

    word: sequence of (kind, index) with kind in {"s", "x", "c"}.
    """
    check_word(word, n)
    elem = one(n)
    for kind, idx in word:
        elem = rmul_letter(elem, kind, idx)
    return elem


def reduced_word(perm: tuple):
    """Adjacent-transposition letters whose product (left to right) is perm."""
    w = list(perm)
    collected = []
    changed = True
    while changed:
        changed = False
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                collected.append(i + 1)
                changed = True
    return [("s", i) for i in reversed(collected)]


def monomial_letters(m: PBWMonomial):
    word = reduced_word(m.perm)
    for j in range(1, m.n + 1):
        if m.cexp[j - 1]:
            word.append(("c", j))
    for j in range(1, m.n + 1):
        word.extend([("x", j)] * m.xexp[j - 1])
    return word


def multiply(u: dict, v: dict) -> dict:
    """Bilinear straightened product in A_n.

    An x-free left factor multiplies by monomial-wise relabeling (one
    pass per term); otherwise the right factor's letters are folded in,
    with per-monomial results memoized.
    """
    if not u or not v:
        return {}
    if is_x_free(u):
        out = {}
        for mu, cu in u.items():
            for m, c in left_mul_monomial(mu, v).items():
                _add(out, m, c * cu)
        return out
    if len(u) <= len(v):
        out = {}
        for mu, cu in u.items():
            for m, c in left_mul_monomial_any(mu, v).items():
                _add(out, m, c * cu)
        return out
    out = {}
    for mv, cv in v.items():
        letters = monomial_letters(mv)
        cur = u
        for kind, idx in letters:
            nxt = {}
            for m, c in cur.items():
                for m2, c2 in rmul_letter_mon(m, kind, idx).items():
                    _add(nxt, m2, c * c2)
            cur = nxt
        for m, c in cur.items():
            _add(out, m, c * cv)
    return out


def scale(elem: dict, c) -> dict:
    c = Scalar.of(c)
    return {m: v * c for m, v in elem.items()} if c else {}


def add(u: dict, v: dict) -> dict:
    out = dict(u)
    for m, c in v.items():
        _add(out, m, c)
    return out


def parity(elem: dict):
    """Parity if homogeneous, else None."""
    ps = {m.parity() for m in elem}
    return ps.pop() if len(ps) == 1 else (0 if not ps else None)


def xdegree(elem: dict) -> int:
    return max((m.xdegree() for m in elem), default=0)


def element_str(elem: dict) -> str:
    if not elem:
        return "0"
    keys = sorted(elem, key=lambda m: (m.xdegree(), m.perm, m.cexp, m.xexp))
    bits = []
    for m in keys:
        c = elem[m]
        body = []
        w = reduced_word(m.perm)
        body.extend("s%d" % i for _, i in w)
        body.extend("c%d" % (j + 1) for j in range(m.n) if m.cexp[j])
        for j in range(m.n):
            if m.xexp[j] == 1:
                body.append("x%d" % (j + 1))
            elif m.xexp[j] > 1:
                body.append("x%d^%d" % (j + 1, m.xexp[j]))
        term = " ".join(body) if body else "1"
        cs = str(c)
        if cs == "1":
            bits.append(term)
        elif cs == "-1":
            bits.append("- %s" % term if term != "1" else "-1")
        else:
            bits.append("%s %s" % (cs if " " not in cs else "(%s)" % cs, term) if term != "1" else cs)
    return " + ".join(bits).replace("+ - ", "- ")
