"""Exact matrices over cyclotomic scalars.

Mat is immutable; entries are CycNum.  Products of matrices whose entries are
all rational run through an integer fast path (numerators over a common
denominator), which keeps large permutation-module computations quick without
giving up exactness anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .cyclo import CycNum, CycPoly

_UNSET = object()


def _to_cyc(x) -> CycNum:
    if isinstance(x, CycNum):
        return x
    return CycNum.rational(x)


class Mat:
    __slots__ = ("rows", "nrows", "ncols", "_intform")

    def __init__(self, rows):
        self.rows = tuple(tuple(_to_cyc(x) for x in row) for row in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")
        self._intform = _UNSET

    # constructors

    @staticmethod
    def identity(r: int) -> "Mat":
        one, zero = CycNum.one(), CycNum.zero()
        return Mat([[one if i == j else zero for j in range(r)] for i in range(r)])

    @staticmethod
    def zero(r: int, c: int) -> "Mat":
        z = CycNum.zero()
        return Mat([[z] * c for _ in range(r)])

    @staticmethod
    def from_cols(cols) -> "Mat":
        return Mat(list(zip(*cols))) if cols else Mat([])

    @staticmethod
    def direct_sum(blocks) -> "Mat":
        blocks = list(blocks)
        n = sum(b.nrows for b in blocks)
        m = sum(b.ncols for b in blocks)
        z = CycNum.zero()
        out = [[z] * m for _ in range(n)]
        i = j = 0
        for b in blocks:
            for r in range(b.nrows):
                for c in range(b.ncols):
                    out[i + r][j + c] = b.rows[r][c]
            i += b.nrows
            j += b.ncols
        return Mat(out)

    # basics

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.rows == other.rows

    def __repr__(self):
        return f"Mat({self.nrows}x{self.ncols})"

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def transpose(self) -> "Mat":
        return Mat(list(zip(*self.rows))) if self.rows else self

    def trace(self) -> CycNum:
        t = CycNum.zero()
        for i in range(self.nrows):
            t = t + self.rows[i][i]
        return t

    def col(self, j: int):
        return tuple(self.rows[i][j] for i in range(self.nrows))

    def entries(self):
        for row in self.rows:
            yield from row

    def __add__(self, other):
        return Mat([
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)
        ])

    def __sub__(self, other):
        return Mat([
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)
        ])

    def scale(self, c) -> "Mat":
        c = _to_cyc(c)
        return Mat([[c * x for x in row] for row in self.rows])

    # fast-path helpers

    def _int_data(self):
        if self._intform is _UNSET:
            if all(x.n == 1 for row in self.rows for x in row):
                fracs = [[x.coeffs.get(0, Fraction(0)) for x in row] for row in self.rows]
                den = 1
                for row in fracs:
                    for f in row:
                        den = den * f.denominator // math.gcd(den, f.denominator)
                ints = tuple(
                    tuple(f.numerator * (den // f.denominator) for f in row)
                    for row in fracs
                )
                self._intform = (ints, den)
            else:
                self._intform = None
        return self._intform

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        a_int, b_int = self._int_data(), other._int_data()
        if a_int is not None and b_int is not None:
            (ra, da), (rb, db) = a_int, b_int
            cols = tuple(zip(*rb)) if rb else ()
            den = da * db
            out = [
                [
                    CycNum.rational(Fraction(sum(x * y for x, y in zip(row, col)), den))
                    for col in cols
                ]
                for row in ra
            ]
            return Mat(out)
        zero = CycNum.zero()
        bt = list(zip(*other.rows)) if other.rows else []
        out = []
        for row in self.rows:
            nz = [(k, x) for k, x in enumerate(row) if not x.is_zero()]
            line = []
            for col in bt:
                acc = zero
                for k, x in nz:
                    y = col[k]
                    if not y.is_zero():
                        acc = acc + x * y
                line.append(acc)
            out.append(line)
        return Mat(out)

    def apply_entrywise(self, fn) -> "Mat":
        return Mat([[fn(x) for x in row] for row in self.rows])

    def mul_vec(self, v):
        zero = CycNum.zero()
        out = []
        for row in self.rows:
            acc = zero
            for x, y in zip(row, v):
                if not x.is_zero() and not y.is_zero():
                    acc = acc + x * y
            out.append(acc)
        return tuple(out)

    # elimination

    def rref(self):
        """Reduced row echelon form; returns (Mat, pivot column list)."""
        rows = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            if r >= len(rows):
                break
            pr = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero()), None)
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            inv = rows[r][c].inverse()
            rows[r] = [x * inv for x in rows[r]]
            for i in range(len(rows)):
                if i != r and not rows[i][c].is_zero():
                    f = rows[i][c]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
        return Mat(rows), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self):
        """Basis vectors (tuples) of the right kernel."""
        red, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        one, zero = CycNum.one(), CycNum.zero()
        for fc in free:
            v = [zero] * self.ncols
            v[fc] = one
            for r, pc in enumerate(pivots):
                v[pc] = -red.rows[r][fc]
            basis.append(tuple(v))
        return basis

    def solve(self, b):
        """One solution x of self @ x = b (vector), or None if inconsistent."""
        aug = Mat([list(row) + [bv] for row, bv in zip(self.rows, b)])
        red, pivots = aug.rref()
        if self.ncols in pivots:
            return None
        zero = CycNum.zero()
        x = [zero] * self.ncols
        for r, pc in enumerate(pivots):
            x[pc] = red.rows[r][self.ncols]
        return tuple(x)

    def inverse(self) -> "Mat":
        if not self.is_square():
            raise ValueError("not square")
        n = self.nrows
        aug = Mat([list(row) + list(Mat.identity(n).rows[i]) for i, row in enumerate(self.rows)])
        red, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            raise ValueError("matrix not invertible")
        return Mat([row[n:] for row in red.rows[:n]])

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.nrows

    # spectral data

    def hessenberg(self) -> "Mat":
        if not self.is_square():
            raise ValueError("not square")
        n = self.nrows
        rows = [list(r) for r in self.rows]
        for j in range(n - 2):
            pr = next((i for i in range(j + 1, n) if not rows[i][j].is_zero()), None)
            if pr is None:
                continue
            if pr != j + 1:
                rows[j + 1], rows[pr] = rows[pr], rows[j + 1]
                for i in range(n):
                    rows[i][j + 1], rows[i][pr] = rows[i][pr], rows[i][j + 1]
            piv_inv = rows[j + 1][j].inverse()
            for i in range(j + 2, n):
                if rows[i][j].is_zero():
                    continue
                f = rows[i][j] * piv_inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[j + 1])]
                for t in range(n):
                    rows[t][j + 1] = rows[t][j + 1] + f * rows[t][i]
        return Mat(rows)

    def charpoly(self) -> CycPoly:
        """Characteristic polynomial det(T*I - M), monic, exact."""
        h = self.hessenberg().rows
        n = self.nrows
        one = CycNum.one()
        polys = [CycPoly([one])]  # p_0
        for m in range(1, n + 1):
            x_minus = CycPoly([-h[m - 1][m - 1], one])
            pm = x_minus * polys[m - 1]
            prod = one
            for i in range(m - 1, 0, -1):
                prod = prod * h[i][i - 1]
                if prod.is_zero():
                    break
                coef = h[i - 1][m - 1] * prod
                if not coef.is_zero():
                    pm = pm - CycPoly([coef]) * polys[i - 1]
            polys.append(pm)
        return polys[n]

    def det(self) -> CycNum:
        p0 = self.charpoly().eval(CycNum.zero())
        return p0 if self.nrows % 2 == 0 else -p0
