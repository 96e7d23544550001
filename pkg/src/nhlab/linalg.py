"""Exact linear algebra over the rationals.

Rank decisions in this package are exact-zero tests, so everything here
works with ``fractions.Fraction`` (or python ints) and never touches
floating point.  Rank uses fraction-free (Bareiss) elimination on
denominator-cleared integer rows; pivot extraction and solving use plain
rational Gaussian elimination since those matrices are small.
"""

from fractions import Fraction
from math import lcm


def clear_row_denominators(row):
    """Scale a row by the lcm of its denominators, returning ints."""
    mult = 1
    for x in row:
        if isinstance(x, Fraction):
            mult = lcm(mult, x.denominator)
    out = []
    for x in row:
        if isinstance(x, Fraction):
            out.append(int(x * mult))
        else:
            out.append(int(x) * mult)
    return out


def matrix_rank(rows, ncols=None):
    """Exact rank via fraction-free Gaussian elimination.

    ``rows`` is a list of equal-length sequences of Fractions/ints.
    Row scaling preserves rank, so each row is cleared to integers first;
    the Bareiss update keeps every intermediate entry an integer.
    """
    m = [clear_row_denominators(r) for r in rows]
    nrows = len(m)
    if nrows == 0:
        return 0
    if ncols is None:
        ncols = len(m[0])
    if ncols == 0:
        return 0
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        pivval = pr[c]
        for i in range(rank + 1, nrows):
            mi = m[i]
            f = mi[c]
            for cc in range(c + 1, ncols):
                mi[cc] = (mi[cc] * pivval - f * pr[cc]) // prev
            mi[c] = 0
        prev = pivval
        rank += 1
        if rank == nrows:
            break
    return rank


def column_pivots(rows, ncols=None):
    """Return (rank, leftmost linearly independent column indices)."""
    work = [[Fraction(x) for x in r] for r in rows]
    nrows = len(work)
    if ncols is None:
        ncols = len(work[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if work[i][c]:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        prow = work[r]
        inv = 1 / prow[c]
        for i in range(r + 1, nrows):
            f = work[i][c]
            if f:
                f *= inv
                wi = work[i]
                for cc in range(c, ncols):
                    wi[cc] -= f * prow[cc]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return r, pivots


def solve_full_column_rank(rows, rhs):
    """Solve A x = b exactly where A has full column rank.

    ``rows`` are the rows of A (possibly more rows than columns); the
    system must be consistent, which callers guarantee structurally.
    Raises ArithmeticError on an inconsistent system as a safety net.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    aug = [[Fraction(x) for x in rows[i]] + [Fraction(rhs[i])] for i in range(nrows)]
    r = 0
    pivcols = []
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if aug[i][c]:
                piv = i
                break
        if piv is None:
            raise ArithmeticError("matrix does not have full column rank")
        aug[r], aug[piv] = aug[piv], aug[r]
        prow = aug[r]
        inv = 1 / prow[c]
        for i in range(nrows):
            if i != r and aug[i][c]:
                f = aug[i][c] * inv
                ai = aug[i]
                for cc in range(c, ncols + 1):
                    ai[cc] -= f * prow[cc]
        pivcols.append(c)
        r += 1
    for i in range(r, nrows):
        if aug[i][ncols]:
            raise ArithmeticError("inconsistent linear system")
    sol = [Fraction(0)] * ncols
    for k, c in enumerate(pivcols):
        sol[c] = aug[k][ncols] / aug[k][c]
    return sol


def sparse_to_dense(entries, nrows, ncols):
    """Expand a {(row, col): value} dict into a dense row list."""
    m = [[Fraction(0)] * ncols for _ in range(nrows)]
    for (i, j), v in entries.items():
        m[i][j] = v
    return m


def sparse_mul(a, b, inner):
    """Multiply sparse matrices given as {(i, j): value} dicts.

    ``inner`` is the shared dimension; only used to document intent,
    the multiplication itself is index-driven.
    """
    by_row = {}
    for (i, j), v in b.items():
        by_row.setdefault(i, []).append((j, v))
    out = {}
    for (i, k), u in a.items():
        for j, v in by_row.get(k, ()):
            key = (i, j)
            s = out.get(key, 0) + u * v
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return out
