"""Multivariate polynomials over Gaussian rationals and the symmetric
function calculus used by the dot-packet calculus.

Polynomials live in a fixed number of variables y_1..y_a (index 0-based
internally).  Monomial order for printing and matrix coordinates is
graded lexicographic.

The leading-term model (`LeadingState`, `leading_action`) tracks states
u (x) h (x) v_word where h is a polynomial in the Cartan variables and
the word records, per tensor slot, the base index, bar flag and base
parity.  The value of the slot variable is y = (-1)^(parity+1) z_base,
so barred letters flip the sign of their variable.  The model produces
exactly the top filtration degree of the black-dot action, nothing
below it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .scalars import Scalar, ONE
from . import combinat, linalg


class MultiPoly:
    """Polynomial in nvars variables; terms map exponent tuples to Scalars."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for e, c in terms.items():
                c = Scalar.of(c)
                if c:
                    self.terms[tuple(e)] = c

    @staticmethod
    def constant(nvars: int, c) -> "MultiPoly":
        return MultiPoly(nvars, {(0,) * nvars: Scalar.of(c)})

    @staticmethod
    def variable(nvars: int, i: int) -> "MultiPoly":
        e = [0] * nvars
        e[i] = 1
        return MultiPoly(nvars, {tuple(e): ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, MultiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Scalar()) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        p = MultiPoly(self.nvars)
        p.terms = out
        return p

    def __neg__(self):
        p = MultiPoly(self.nvars)
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            other = Scalar.of(other)
            p = MultiPoly(self.nvars)
            if other:
                p.terms = {e: c * other for e, c in self.terms.items()}
            return p
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e, Scalar()) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        p = MultiPoly(self.nvars)
        p.terms = out
        return p

    __rmul__ = __mul__

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def coefficient_of_power(self, i: int, d: int) -> "MultiPoly":
        """Coefficient of y_i^d (a polynomial in the other variables)."""
        out = {}
        for e, c in self.terms.items():
            if e[i] == d:
                e2 = list(e)
                e2[i] = 0
                out[tuple(e2)] = c
        return MultiPoly(self.nvars, out)

    def max_power(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=0)

    def rescale_variables(self, signs) -> "MultiPoly":
        """Substitute y_i -> signs[i] * y_i (signs are +-1)."""
        out = {}
        for e, c in self.terms.items():
            s = 1
            for i, d in enumerate(e):
                if signs[i] == -1 and d % 2:
                    s = -s
            out[e] = c * s
        return MultiPoly(self.nvars, out)

    def monomials_sorted(self):
        return sorted(self.terms, key=lambda e: (sum(e), tuple(-x for x in e)))

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in self.monomials_sorted():
            c = self.terms[e]
            mono = "*".join(
                "y%d" % (i + 1) if d == 1 else "y%d^%d" % (i + 1, d)
                for i, d in enumerate(e)
                if d
            )
            cs = str(c)
            if mono:
                bits.append("(%s)*%s" % (cs, mono) if ("+" in cs or " " in cs) else "%s*%s" % (cs, mono))
            else:
                bits.append(cs)
        return " + ".join(bits)


# ---------------------------------------------------------------------------
# elementary symmetric machinery


def elem_sym(r: int, values, nvars=None) -> "MultiPoly":
    """e_r of the given values (each a MultiPoly); e_0 = 1, e_r = 0 for r > #values.

    A negative r gives 0, matching the convention for raised indices.
    """
    values = list(values)
    if nvars is None:
        nvars = values[0].nvars if values else 0
    if r == 0:
        return MultiPoly.constant(nvars, 1)
    if r < 0 or r > len(values):
        return MultiPoly(nvars)
    out = MultiPoly(nvars)
    for combo in itertools.combinations(values, r):
        prod = MultiPoly.constant(nvars, 1)
        for v in combo:
            prod = prod * v
        out = out + prod
    return out


def elem_sym_vars(r: int, nvars: int, var_indices) -> MultiPoly:
    """e_r of the named variables inside an nvars-variable ring."""
    vals = [MultiPoly.variable(nvars, i) for i in var_indices]
    if r == 0:
        return MultiPoly.constant(nvars, 1)
    if r < 0 or r > len(vals):
        return MultiPoly(nvars)
    return elem_sym(r, vals)


def elem_sym_partition(mu, nvars: int, var_indices) -> MultiPoly:
    """e_mu = product of e_{mu_i}; zero if any part is negative."""
    out = MultiPoly.constant(nvars, 1)
    for part in mu:
        if part < 0:
            return MultiPoly(nvars)
        out = out * elem_sym_vars(part, nvars, var_indices)
    return out


def vandermonde(nvars: int, var_indices) -> MultiPoly:
    """Product of differences prod_{i<j} (y_i - y_j) in the given order."""
    idx = list(var_indices)
    out = MultiPoly.constant(nvars, 1)
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            out = out * (
                MultiPoly.variable(nvars, idx[i]) - MultiPoly.variable(nvars, idx[j])
            )
    return out


def esym_matrix(nvars: int, var_indices):
    """The matrix B = (e_{j-1} of all-but-the-i-th variable), i,j = 1..s."""
    idx = list(var_indices)
    s = len(idx)
    return [
        [elem_sym_vars(j, nvars, idx[:i] + idx[i + 1:]) for j in range(s)]
        for i in range(s)
    ]


def poly_det(mat) -> MultiPoly:
    """Cofactor-expansion determinant of a square matrix of polynomials."""
    s = len(mat)
    if s == 0:
        return MultiPoly.constant(0, 1)
    nv = mat[0][0].nvars
    if s == 1:
        return mat[0][0]
    out = MultiPoly(nv)
    for i in range(s):
        minor = [row[1:] for r, row in enumerate(mat) if r != i]
        term = mat[i][0] * poly_det(minor)
        out = out + term if i % 2 == 0 else out - term
    return out


def esym_minor(i: int, j: int, s: int, nvars=None, var_indices=None) -> MultiPoly:
    """Closed form of the (i,j)-minor of B: x_i^{s-j} * Delta(all but x_i)."""
    if not (1 <= i <= s and 1 <= j <= s):
        raise ValueError("minor index out of range")
    if nvars is None:
        nvars = s
    if var_indices is None:
        var_indices = list(range(s))
    idx = list(var_indices)
    xi = MultiPoly.variable(nvars, idx[i - 1])
    out = vandermonde(nvars, idx[: i - 1] + idx[i:])
    for _ in range(s - j):
        out = out * xi
    return out


def esym_minor_literal(i: int, j: int, s: int, nvars=None, var_indices=None) -> MultiPoly:
    """The (i,j)-minor computed as a literal determinant (the oracle)."""
    if nvars is None:
        nvars = s
    if var_indices is None:
        var_indices = list(range(s))
    if s == 1:
        return MultiPoly.constant(nvars, 1)
    B = esym_matrix(nvars, var_indices)
    minor = [
        [B[r][c] for c in range(s) if c != j - 1] for r in range(s) if r != i - 1
    ]
    return poly_det(minor)


# ---------------------------------------------------------------------------
# the packet polynomial g_lambda


def g_lambda(lam, k: int, a: int, method: str = "recursive") -> MultiPoly:
    """The packet polynomial of a strict partition with k parts, in y_{k+1}..y_a.

    recursive: bottom-up two-step recursion peeling powers of the next
    variable; raising: sum of e_{R(bar(lam)-rho_k)} over all subsets of
    raising operators, negative-part terms dropped.  The valid variable
    window for the step-r polynomial is y_{r+1}..y_a.
    """
    lam = tuple(lam)
    if not combinat.is_strict_partition(lam) or len(lam) != k:
        raise ValueError("need a strict partition with %d parts" % k)
    if any(p > a for p in lam):
        raise ValueError("parts exceed thickness %d" % a)
    br = combinat.bar_partition(lam)
    if method == "raising":
        tgt = tuple(b - (k - 1 - i) for i, b in enumerate(br))
        out = MultiPoly(a)
        for spec in combinat.raising_subsets(k):
            mu = combinat.apply_raising(spec, tgt)
            out = out + elem_sym_partition(mu, a, range(k, a))
        return out
    if method != "recursive":
        raise ValueError("unknown method %r" % method)
    # g_1 = e_{bar(lam)_k} in y_2..y_a
    g = elem_sym_vars(br[k - 1], a, range(1, a))
    for r in range(1, k):
        pivot = r  # 0-based index of y_{r+1}
        top = g.max_power(pivot)
        coeffs = [g.coefficient_of_power(pivot, d) for d in range(top + 1)]
        nxt = MultiPoly(a)
        for d, A in enumerate(coeffs):
            nxt = nxt + A * elem_sym_vars(br[k - r - 1] + d - r, a, range(r + 1, a))
        g = nxt
    return g


def packet_leading_poly(lam, mu, a: int, k: int, parities=None) -> MultiPoly:
    """Leading coefficient of a dot packet on the first-k-barred word.

    (sqrt-1)^k * prod_t (-1)^{p_1+...+p_t} * Delta(y_1..y_k) *
    g_lam(y_{k+1}..y_a) * e_mu(y_1..y_a), with p the base parities of the
    word (all even by default).
    """
    if k > a:
        raise ValueError("k exceeds thickness")
    lam = tuple(lam)
    if len(lam) != k:
        raise ValueError("lam must have k parts")
    if parities is None:
        parities = [0] * a
    sign = 1
    acc = 0
    for t in range(k):
        acc += parities[t]
        if acc % 2:
            sign = -sign
    coeff = Scalar.of(sign)
    for _ in range(k):
        coeff = coeff * Scalar.i()
    if k == 0:
        out = MultiPoly.constant(a, 1)
    else:
        out = vandermonde(a, range(k)) * g_lambda(lam, k, a)
    out = out * elem_sym_partition(mu, a, range(a))
    return out * coeff


def independence_rank(pairs, a: int, k: int) -> int:
    """Rank of the monomial-coordinate matrix of {g_lam * e_mu}."""
    rows = []
    for p in pairs:
        poly = g_lambda(p.lam, k, a) * elem_sym_partition(p.mu, a, range(a))
        rows.append({e: c for e, c in poly.terms.items()})
    return linalg.rank(rows)


# ---------------------------------------------------------------------------
# leading-term action model


@dataclass(frozen=True, order=True)
class Letter:
    base: int        # 1-based slot index into the variable alphabet
    barred: bool
    parity: int      # base parity of the unbarred letter

    @property
    def eff_parity(self) -> int:
        return (self.parity + (1 if self.barred else 0)) % 2


def standard_word(a: int):
    """The all-even word (1, 2, ..., a)."""
    return tuple(Letter(i + 1, False, 0) for i in range(a))


class LeadingState:
    """Formal sum of (polynomial, word) pairs; nvars = word length."""

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for w, p in terms.items():
                if not p.is_zero():
                    self.terms[w] = p

    @staticmethod
    def pure(word) -> "LeadingState":
        nv = len(word)
        return LeadingState(nv, {tuple(word): MultiPoly.constant(nv, 1)})

    def add_term(self, word, poly):
        if poly.is_zero():
            return
        if word in self.terms:
            s = self.terms[word] + poly
            if s.is_zero():
                del self.terms[word]
            else:
                self.terms[word] = s
        else:
            self.terms[word] = poly

    def __eq__(self, other):
        return isinstance(other, LeadingState) and self.terms == other.terms

    def coefficient(self, word) -> MultiPoly:
        return self.terms.get(tuple(word), MultiPoly(self.nvars))


def _y_value(letter: Letter, nvars: int) -> MultiPoly:
    v = MultiPoly.variable(nvars, letter.base - 1)
    return v if letter.eff_parity == 1 else -v


def leading_action(symbol, state: LeadingState) -> LeadingState:
    """Apply a dot symbol to a leading state (top filtration degree only).

    symbol: ("omega", a, nu) multiplies by e_nu of the word's y-values;
    ("omegac", a, r) is the one-ball sum that bars one letter;
    ("packet", a, nu, eta) composes them in basis order.
    """
    kind = symbol[0]
    a = symbol[1]
    nv = state.nvars
    out = LeadingState(nv)
    if kind == "omega":
        nu = symbol[2]
        for word, poly in state.terms.items():
            if len(word) != a:
                raise ValueError("symbol thickness does not match word length")
            vals = [_y_value(l, nv) for l in word]
            factor = MultiPoly.constant(nv, 1)
            for part in nu:
                factor = factor * elem_sym(part, vals, nv)
            out.add_term(word, poly * factor)
        return out
    if kind == "omegac":
        r = symbol[2]
        if r < 0 or r >= a:
            return out  # zero by convention
        for word, poly in state.terms.items():
            if len(word) != a:
                raise ValueError("symbol thickness does not match word length")
            for t in range(a):
                sign = (-1) ** (sum(l.eff_parity for l in word[: t + 1]) % 2)
                vals = [_y_value(l, nv) for s, l in enumerate(word) if s != t]
                factor = elem_sym(r, vals, nv)
                lt = word[t]
                new_word = word[:t] + (Letter(lt.base, not lt.barred, lt.parity),) + word[t + 1:]
                out.add_term(new_word, poly * factor * (Scalar.i() * sign))
        return out
    if kind == "packet":
        nu, eta = symbol[2], symbol[3]
        cur = state
        for part in reversed(eta):
            cur = leading_action(("omega", a, (part,)), cur)
        for nb in reversed(combinat.bar_partition(nu)):
            cur = leading_action(("omegac", a, nb), cur)
        return cur
    raise ValueError("unknown symbol %r" % (symbol,))
