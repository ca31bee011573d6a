"""Exact irreducible character values for a finite permutation group.

The table is found modulo a well-chosen prime and then lifted.  Pick p = 1
(mod exponent) with p^2 > 4|G|, split the class-algebra structure matrices
into common eigenvectors over F_p, read off degrees and class values mod p,
and recover each exact value as a nonnegative integer combination of roots of
unity via the discrete Fourier inversion on cyclic subgroups.  Everything the
caller receives has been re-verified exactly: degree count, sum of squares,
and full orthonormality over the cyclotomic field.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclo import CycNum
from .grp import FiniteGroup, perm_inv, perm_mul, perm_order


def _prime_factors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _choose_prime(exponent: int, order: int) -> int:
    p = exponent + 1
    while True:
        if _is_prime(p) and p * p > 4 * order:
            return p
        p += exponent


def _primitive_root(p: int) -> int:
    qs = _prime_factors(p - 1)
    for w in range(2, p):
        if all(pow(w, (p - 1) // q, p) != 1 for q in qs):
            return w
    raise AssertionError("no primitive root found")


# small dense linear algebra over F_p


def _rref_mod(rows, p):
    rows = [list(r) for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if rows[i][c] % p), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def _nullspace_mod(rows, p, ncols):
    red, pivots = _rref_mod(rows, p) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-red[r][fc]) % p
        basis.append(v)
    return basis


def _solve_mod(cols, rhs, p):
    """One solution x of (matrix with the given columns) x = rhs, mod p."""
    n = len(rhs)
    aug = [[cols[j][i] for j in range(len(cols))] + [rhs[i]] for i in range(n)]
    red, pivots = _rref_mod(aug, p)
    x = [0] * len(cols)
    for r, pc in enumerate(pivots):
        if pc == len(cols):
            raise AssertionError("inconsistent modular system")
        x[pc] = red[r][-1]
    return x


def char_table_values(G: FiniteGroup):
    """Exact irreducible character values.

    Returns a list of value rows, one per irreducible character, aligned with
    G.class_reps and sorted by (degree, value ordering key).
    """
    k = len(G.class_reps)
    reps = [r for r, _ in G.class_reps]
    sizes = [s for _, s in G.class_reps]
    order = G.order
    istar = [G.class_index[perm_inv(r)] for r in reps]

    p = _choose_prime(G.exponent(), order)
    w = _primitive_root(p)

    # structure matrices B_i with (B_i)_{jl} = #{x in C_i : x^{-1} z_l in C_j}
    bmats = []
    for i in range(k):
        b = [[0] * k for _ in range(k)]
        for l in range(k):
            z = reps[l]
            for x in G.class_members[i]:
                j = G.class_index[perm_mul(perm_inv(x), z)]
                b[j][l] += 1
        bmats.append(b)

    # split F_p^k into the k common one-dimensional eigenspaces
    spaces = [[tuple(1 if i == j else 0 for i in range(k)) for j in range(k)]]
    for i in range(k):
        if all(len(s) == 1 for s in spaces):
            break
        if sizes[i] == 1 and reps[i] == G.identity():
            continue
        b = bmats[i]
        nxt = []
        for basis in spaces:
            if len(basis) == 1:
                nxt.append(basis)
                continue
            imgs = []
            for v in basis:
                imgs.append([sum(b[r][c] * v[c] for c in range(k)) % p for r in range(k)])
            coords = [_solve_mod(basis, img, p) for img in imgs]
            d = len(basis)
            cmat = [[coords[j][i] % p for j in range(d)] for i in range(d)]
            found = 0
            for lam in range(p):
                shifted = [[(cmat[r][c] - (lam if r == c else 0)) % p for c in range(d)]
                           for r in range(d)]
                eig = [
                    tuple(sum(nv[j] * basis[j][c] for j in range(d)) % p for c in range(k))
                    for nv in _nullspace_mod(shifted, p, d)
                ]
                if eig:
                    nxt.append(eig)
                    found += len(eig)
                if found == d:
                    break
            assert found == d, "class matrix failed to split"
        spaces = nxt

    # normalize each eigenvector to the omega vector (omega at identity = 1)
    ident_idx = next(
        i for i, (r, s) in enumerate(G.class_reps) if s == 1 and r == G.identity()
    )
    rows_mod = []
    for basis in spaces:
        v = list(basis[0])
        assert v[ident_idx] % p, "eigenvector vanishes at the identity class"
        inv = pow(v[ident_idx], p - 2, p)
        omega = [(x * inv) % p for x in v]
        s = sum(omega[l] * omega[istar[l]] * pow(sizes[l], p - 2, p) for l in range(k)) % p
        dsq = order * pow(s, p - 2, p) % p
        d = next(r for r in range(1, p) if r * r % p == dsq and 2 * r < p)
        chi = [d * omega[l] * pow(sizes[l], p - 2, p) % p for l in range(k)]
        rows_mod.append((d, chi))

    # lift to exact cyclotomic numbers
    pow_class = {}
    for l, g in enumerate(reps):
        m = perm_order(g)
        idxs = []
        cur = G.identity()
        for _ in range(m):
            idxs.append(G.class_index[cur])
            cur = perm_mul(cur, g)
        pow_class[l] = (m, idxs)

    tables = []
    for d, chi in rows_mod:
        values = []
        for l in range(k):
            m, idxs = pow_class[l]
            if m == 1:
                values.append(CycNum.rational(Fraction(d)))
                continue
            zm = pow(w, (p - 1) // m, p)
            zm_inv = pow(zm, p - 2, p)
            minv = pow(m, p - 2, p)
            total = CycNum.zero()
            csum = 0
            for j in range(m):
                cj = minv * sum(
                    chi[idxs[s]] * pow(zm_inv, j * s, p) for s in range(m)
                ) % p
                assert 2 * cj < p, "eigenvalue multiplicity out of range"
                csum += cj
                if cj:
                    total = total + CycNum.root_of_unity(m, j) * CycNum.rational(Fraction(cj))
            assert csum == d, "eigenvalue multiplicities do not sum to the degree"
            values.append(total)
        tables.append(values)

    # exact verification of the whole table
    assert len(tables) == k
    assert sum(row[ident_idx].as_fraction() ** 2 for row in tables) == order
    one = CycNum.one()
    zero = CycNum.zero()
    for a in range(k):
        for b in range(a, k):
            ip = CycNum.zero()
            for l in range(k):
                ip = ip + CycNum.rational(Fraction(sizes[l])) * tables[a][l] * tables[b][l].conjugate()
            ip = ip * CycNum.rational(Fraction(1, order))
            assert ip == (one if a == b else zero), "orthogonality failed"

    tables.sort(key=lambda row: (row[ident_idx].as_fraction(),
                                 tuple(v.sort_key() for v in row)))
    return tables
