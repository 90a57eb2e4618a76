"""Exact dense-ish linear algebra over the Gaussian rationals.

Rows are dicts column-key -> Scalar; keys can be any hashable labels
(monomials, basis vectors, matrix positions).  Everything is plain
Gaussian elimination; sizes here are desk scale.
"""

from __future__ import annotations

from .scalars import Scalar


def _prune(row):
    return {k: v for k, v in row.items() if v}


def rank(rows) -> int:
    """Rank of the span of the given sparse rows."""
    basis = []  # list of (pivot_key, row) with row[pivot_key] == 1
    r = 0
    for row in rows:
        row = _prune(dict(row))
        for pk, brow in basis:
            c = row.get(pk)
            if c:
                for k, v in brow.items():
                    row[k] = row.get(k, Scalar()) - c * v
                row = _prune(row)
        if row:
            pk = next(iter(sorted(row, key=repr)))
            inv = row[pk].inverse()
            row = {k: v * inv for k, v in row.items()}
            basis.append((pk, row))
            r += 1
    return r


def solve(columns, target):
    """Solve sum_j x_j * columns[j] == target exactly.

    columns: list of sparse dicts (key -> Scalar); target likewise.
    Returns the coefficient list, or raises ValueError if the system is
    inconsistent or the solution is not unique.
    """
    ncols = len(columns)
    keys = set(target)
    for c in columns:
        keys.update(c)
    keys = sorted(keys, key=repr)
    key_index = {k: i for i, k in enumerate(keys)}

    # build augmented rows indexed by equation (one per key)
    rows = []
    for k in keys:
        row = {}
        for j, col in enumerate(columns):
            v = col.get(k)
            if v:
                row[j] = v
        t = target.get(k)
        if t:
            row["rhs"] = t
        rows.append(row)

    pivots = {}  # col j -> reduced row
    eliminated = []
    for row in rows:
        row = _prune(dict(row))
        for j, prow in pivots.items():
            c = row.get(j)
            if c:
                for k, v in prow.items():
                    row[k] = row.get(k, Scalar()) - c * v
                row = _prune(row)
        if not row:
            continue
        lead = [j for j in row if j != "rhs"]
        if not lead:
            raise ValueError("inconsistent linear system")
        j = min(lead)
        inv = row[j].inverse()
        row = {k: v * inv for k, v in row.items()}
        for jj, prow in pivots.items():
            c = prow.get(j)
            if c:
                for k, v in row.items():
                    prow[k] = prow.get(k, Scalar()) - c * v
                pivots[jj] = _prune(prow)
        pivots[j] = row
        eliminated.append(j)
    if len(pivots) < ncols:
        raise ValueError("underdetermined linear system")
    out = []
    for j in range(ncols):
        out.append(pivots[j].get("rhs", Scalar()))
    return out
