"""Integer linear systems via column Hermite normal form.

solve_integer finds the canonical integral solution of A x = b (free
coordinates zero in HNF coordinates) or reports that none exists.  All
arithmetic is on Python ints, so there is no overflow to worry about.
"""

from __future__ import annotations


def column_hnf(rows: list[list[int]]):
    """Column-style HNF of an integer matrix.

    Returns (h_cols, u_cols): columns of H and of the unimodular U with
    A*U = H; H is in column echelon form with positive pivots and the
    remaining entries of each pivot row reduced modulo the pivot.
    """
    k = len(rows)
    m = len(rows[0]) if k else 0
    cols = [[rows[r][j] for r in range(k)] for j in range(m)]
    u = [[1 if i == j else 0 for i in range(m)] for j in range(m)]
    start = 0
    pivots = []
    for r in range(k):
        live = [j for j in range(start, m) if cols[j][r]]
        if not live:
            continue
        while len(live) > 1:
            live.sort(key=lambda j: abs(cols[j][r]))
            j0 = live[0]
            nxt = [j0]
            for j in live[1:]:
                q = cols[j][r] // cols[j0][r]
                if q:
                    cols[j] = [a - q * b for a, b in zip(cols[j], cols[j0])]
                    u[j] = [a - q * b for a, b in zip(u[j], u[j0])]
                if cols[j][r]:
                    nxt.append(j)
            live = nxt
        j0 = live[0]
        if j0 != start:
            cols[j0], cols[start] = cols[start], cols[j0]
            u[j0], u[start] = u[start], u[j0]
        if cols[start][r] < 0:
            cols[start] = [-a for a in cols[start]]
            u[start] = [-a for a in u[start]]
        piv = cols[start][r]
        for j in range(start):
            q = cols[j][r] // piv
            if q:
                cols[j] = [a - q * b for a, b in zip(cols[j], cols[start])]
                u[j] = [a - q * b for a, b in zip(u[j], u[start])]
        pivots.append((r, start))
        start += 1
    return cols, u, pivots


def solve_integer(rows: list[list[int]], b: list[int]):
    """Canonical integer solution of A x = b, or None.

    The solution is unique given the column order: forward substitution over
    the HNF pivots, with every free coordinate set to zero.
    """
    k = len(rows)
    m = len(rows[0]) if k else 0
    h_cols, u_cols, pivots = column_hnf(rows)
    residual = list(b)
    y = [0] * m
    for r, c in pivots:
        piv = h_cols[c][r]
        if residual[r] % piv:
            return None
        q = residual[r] // piv
        y[c] = q
        if q:
            residual = [a - q * v for a, v in zip(residual, h_cols[c])]
    if any(residual):
        return None
    return [sum(u_cols[c][i] * y[c] for c in range(m)) for i in range(m)]
