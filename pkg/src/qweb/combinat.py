"""Partitions, strict compositions, dominance order and the pair
combinatorics driving the independence argument for dot packets.

Conventions.  Partitions are tuples in canonical form (weakly
decreasing, no trailing zeros).  Positional constructions (the profile
``nu`` and its blocks) keep zeros, because the positions matter there.
``bar(lam) = lam - (1,...,1)`` and ``tilde(lam) = bar(lam) - rho_k``
with ``rho_k = (k-1, ..., 1, 0)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


# ---------------------------------------------------------------------------
# basic forms


def is_partition(parts) -> bool:
    parts = tuple(parts)
    return all(p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def is_strict_partition(parts) -> bool:
    parts = tuple(parts)
    return is_partition(parts) and all(
        parts[i] > parts[i + 1] for i in range(len(parts) - 1)
    )


def is_strict_composition(parts) -> bool:
    return all(p >= 1 for p in parts)


def canonical(parts) -> tuple:
    """Drop zeros, keep order (input assumed sorted if a partition is meant)."""
    return tuple(p for p in parts if p != 0)


def sort_desc(alpha) -> tuple:
    """[alpha]: reorder entries decreasingly and drop zeros."""
    if any(a < 0 for a in alpha):
        raise ValueError("negative entry in %r" % (tuple(alpha),))
    return canonical(sorted(alpha, reverse=True))


def union(*parts_seqs) -> tuple:
    """lam cup mu: multiset union by reordering."""
    merged = []
    for seq in parts_seqs:
        merged.extend(seq)
    return sort_desc(merged)


def weight(parts) -> int:
    return sum(parts)


def bar_partition(lam) -> tuple:
    """lam - (1^k); empty input gives the empty output."""
    return tuple(p - 1 for p in lam)


def rho(k: int) -> tuple:
    return tuple(range(k - 1, -1, -1))


def tilde_partition(lam) -> tuple:
    """bar(lam) - rho_k, entrywise (zeros retained)."""
    k = len(lam)
    br = bar_partition(lam)
    return tuple(br[i] - (k - 1 - i) for i in range(k))


def from_tilde(til, k: int) -> tuple:
    """Inverse of tilde_partition for length-k strict partitions."""
    return tuple(til[i] + (k - 1 - i) + 1 for i in range(k))


def dominance_leq(alpha, beta) -> bool:
    """Partial-sum (dominance) order; requires equal weights."""
    alpha, beta = canonical(alpha), canonical(beta)
    if sum(alpha) != sum(beta):
        raise ValueError("incomparable weights: %r vs %r" % (alpha, beta))
    n = max(len(alpha), len(beta))
    sa = sb = 0
    for i in range(n):
        sa += alpha[i] if i < len(alpha) else 0
        sb += beta[i] if i < len(beta) else 0
        if sa > sb:
            return False
    return True


def dominance_lt(alpha, beta) -> bool:
    return canonical(alpha) != canonical(beta) and dominance_leq(alpha, beta)


# ---------------------------------------------------------------------------
# enumeration


def partitions_of(n: int, max_part=None):
    """All partitions of n with parts <= max_part, reverse-lex order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def partitions_bounded(max_part: int, max_weight: int):
    """All partitions with parts <= max_part and weight <= max_weight."""
    for w in range(max_weight + 1):
        yield from partitions_of(w, max_part)


def strict_partitions_bounded(a: int):
    """SPar_a: strict partitions with all parts <= a (as subsets of 1..a)."""
    out = []
    for r in range(a + 1):
        for combo in itertools.combinations(range(a, 0, -1), r):
            out.append(combo)
    return sorted(out, key=lambda p: (len(p), p))


def strict_partitions_fixed_length(a: int, k: int):
    """SPar_{a,k}: strict partitions with parts <= a and exactly k parts."""
    return [p for p in strict_partitions_bounded(a) if len(p) == k]


def compositions_of(m: int, strict=True):
    """Strict compositions of m (all parts >= 1), lexicographic."""
    if m == 0:
        yield ()
        return
    for first in range(1, m + 1):
        for rest in compositions_of(m - first):
            yield (first,) + rest


def raising_pairs(r: int):
    return [(i, j) for i in range(1, r + 1) for j in range(i + 1, r + 1)]


def raising_subsets(r: int):
    """All subsets of {R_{i,j} : i<j<=r}, the correction-operator index set."""
    pairs = raising_pairs(r)
    for mask in range(1 << len(pairs)):
        yield tuple(p for t, p in enumerate(pairs) if mask >> t & 1)


def apply_raising(spec, v) -> tuple:
    """Apply each R_{i,j} in spec once: +1 at slot i, -1 at slot j (1-based).

    Entries may go negative; callers treat e-polynomials with a negative
    index as zero.
    """
    out = list(v)
    for (i, j) in spec:
        if not (1 <= i < j <= len(out)):
            raise ValueError("raising index (%d,%d) out of range" % (i, j))
        out[i - 1] += 1
        out[j - 1] -= 1
    return tuple(out)


def enumerate_matrices(lam, mu):
    """Non-negative integer matrices with row sums lam and column sums mu.

    Row-major lexicographic order; weight mismatch gives an empty list.
    """
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        return []
    out = []

    def fill(rows_left, col_rest, acc):
        if not rows_left:
            if all(c == 0 for c in col_rest):
                out.append(tuple(acc))
            return
        target = rows_left[0]

        def fill_row(j, row, col_rest2, rest):
            if j == len(col_rest2):
                if rest == 0:
                    fill(rows_left[1:], col_rest2, acc + [tuple(row)])
                return
            lo = max(0, rest - sum(col_rest2[j + 1:]))
            hi = min(rest, col_rest2[j])
            for v in range(hi, lo - 1, -1):
                nxt = list(col_rest2)
                nxt[j] -= v
                fill_row(j + 1, row + [v], tuple(nxt), rest - v)

        fill_row(0, [], col_rest, target)

    fill(lam, mu, [])
    return out


# ---------------------------------------------------------------------------
# pair combinatorics for packets


@dataclass(frozen=True)
class PairIndex:
    """A pair (lam strict with k parts <= a, mu with parts <= a)."""

    lam: tuple
    mu: tuple
    a: int

    def __post_init__(self):
        if not is_strict_partition(self.lam):
            raise ValueError("lam must be strict: %r" % (self.lam,))
        if not is_partition(self.mu):
            raise ValueError("mu must be a partition: %r" % (self.mu,))
        if any(p > self.a for p in self.lam) or any(p > self.a for p in self.mu):
            raise ValueError("parts exceed bound a=%d" % self.a)

    @property
    def k(self) -> int:
        return len(self.lam)

    @property
    def d(self) -> int:
        return sum(bar_partition(self.lam)) + sum(self.mu)


def pair_set(a: int, k: int, d: int):
    """C_{k,d}: pairs with |bar lam| + |mu| = d, sorted deterministically."""
    out = []
    for lam in strict_partitions_fixed_length(a, k):
        rest = d - sum(bar_partition(lam))
        if rest < 0:
            continue
        for mu in partitions_of(rest, a):
            out.append(PairIndex(lam, mu, a))
    return sorted(out, key=lambda p: (p.lam, p.mu))


def pair_lt(p: PairIndex, q: PairIndex) -> bool:
    """Strict order on C_{k,d}: dominance of bar(lam) cup mu, then lex on lam."""
    if (p.k, p.d, p.a) != (q.k, q.d, q.a):
        raise ValueError("pairs live in different C_{k,d}")
    up = union(bar_partition(p.lam), p.mu)
    uq = union(bar_partition(q.lam), q.mu)
    if up != uq:
        try:
            return dominance_lt(up, uq)
        except ValueError:
            return False
    return p.lam < q.lam


def gamma_packet(lam, mu, a=None) -> tuple:
    """gamma_{lam,mu} = (k^{d_0}, (k-1)^{d_1}, ..., 0^{d_k}) (canonical form).

    d_i counts the parts of mu lying in the window (bar(lam)_{i+1}, bar(lam)_i]
    with bar(lam)_0 = +infinity and bar(lam)_{k+1} = -1.
    """
    if not is_strict_partition(lam):
        raise ValueError("lam must be strict: %r" % (lam,))
    k = len(lam)
    br = bar_partition(lam)
    gamma = []
    for i in range(k + 1):
        hi = None if i == 0 else br[i - 1]          # bar(lam)_i, open above at i=0
        lo = -1 if i == k else br[i]                # bar(lam)_{i+1}
        d_i = sum(1 for m in mu if m > lo and (hi is None or m <= hi))
        gamma.extend([k - i] * d_i)
    return canonical(gamma)


def _gamma_padded(lam, mu) -> tuple:
    """gamma_{lam,mu} padded with zeros to length l(mu)."""
    g = gamma_packet(lam, mu)
    return g + (0,) * (len(mu) - len(g))


def nu_profile(lam, mu, a=None) -> tuple:
    """The profile nu = tilde(lam) cup (mu - gamma), zeros retained.

    Interleaved positionally: block p_0, tilde(lam)_1, block p_1, ...,
    tilde(lam)_k, block p_k, where block p_i holds mu_j - (k - i) for the
    mu-parts counted by d_i.
    """
    if not is_strict_partition(lam):
        raise ValueError("lam must be strict: %r" % (lam,))
    k = len(lam)
    til = tilde_partition(lam)
    br = bar_partition(lam)
    blocks = []
    j = 0
    for i in range(k + 1):
        hi = None if i == 0 else br[i - 1]
        lo = -1 if i == k else br[i]
        block = []
        while j < len(mu) and mu[j] > lo and (hi is None or mu[j] <= hi):
            block.append(mu[j] - (k - i))
            j += 1
        blocks.append(tuple(block))
    if j != len(mu):
        raise ValueError("mu is not weakly decreasing: %r" % (mu,))
    nu = []
    for i in range(k):
        nu.extend(blocks[i])
        nu.append(til[i])
    nu.extend(blocks[k])
    return tuple(nu)


def _is_submultiset(small, big) -> bool:
    pool = list(big)
    for x in small:
        if x in pool:
            pool.remove(x)
        else:
            return False
    return True


def _multiset_minus(big, small) -> tuple:
    pool = list(big)
    for x in small:
        pool.remove(x)
    return tuple(sorted(pool, reverse=True))


def vertex_set(lam, mu, a: int):
    """V_{lam,mu}: strict alpha with k parts <= a whose tilde embeds in nu."""
    k = len(lam)
    nu = nu_profile(lam, mu)
    verts = []
    for alpha in strict_partitions_fixed_length(a, k):
        if _is_submultiset(tilde_partition(alpha), nu):
            verts.append(alpha)
    return verts


def beta_of(lam, mu, alpha) -> tuple:
    """beta_alpha = (nu minus tilde(alpha)) + gamma_{lam,mu}, entrywise."""
    nu = nu_profile(lam, mu)
    rest = _multiset_minus(nu, tilde_partition(alpha))
    gam = _gamma_padded(lam, mu)
    if len(rest) != len(gam):
        raise ValueError("profile length mismatch")
    beta = tuple(r + g for r, g in zip(rest, gam))
    if not all(beta[i] >= beta[i + 1] for i in range(len(beta) - 1)):
        raise ValueError("beta_alpha is not weakly decreasing: %r" % (beta,))
    return canonical(beta)


def v_graph(lam, mu, a: int):
    """The colored exchange graph on V_{lam,mu}.

    Returns (vertices, edges) with edges as frozensets {alpha, alpha'};
    an edge replaces one tilde-entry by a nu-value adjacent to it among
    the distinct values of nu.
    """
    k = len(lam)
    nu = nu_profile(lam, mu)
    verts = vertex_set(lam, mu, a)
    vset = set(verts)
    values = sorted(set(nu))
    edges = set()
    for alpha in verts:
        til = tilde_partition(alpha)
        for i in range(k):
            cur = til[i]
            if cur not in values:
                continue
            pos = values.index(cur)
            for npos in (pos - 1, pos + 1):
                if not (0 <= npos < len(values)):
                    continue
                val = values[npos]
                cand = tuple(sorted(til[:i] + (val,) + til[i + 1:], reverse=True))
                if not _is_submultiset(cand, nu):
                    continue
                if cand and cand[0] > a - k:
                    continue
                alpha2 = from_tilde(cand, k)
                if alpha2 in vset and alpha2 != alpha:
                    edges.add(frozenset((alpha, alpha2)))
    return verts, edges


def is_connected(verts, edges) -> bool:
    if not verts:
        return True
    adj = {v: set() for v in verts}
    for e in edges:
        u, v = tuple(e)
        adj[u].add(v)
        adj[v].add(u)
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(verts)


def index_tuples(k: int, mu):
    """I_{k,mu}: integer tuples alpha with 0 <= alpha_j <= min(k, mu_j)."""
    ranges = [range(min(k, m) + 1) for m in mu]
    return list(itertools.product(*ranges))
