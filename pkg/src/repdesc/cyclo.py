"""Exact arithmetic in cyclotomic fields.

Values live in Q(zeta_n) and are stored in the power basis
zeta_n^0 .. zeta_n^(phi(n)-1) modulo the n-th cyclotomic polynomial, with
Fraction coefficients and the conductor always minimized.  Equality is
therefore structural: two values are equal iff their (conductor, coefficient
map) pairs match.  Everything here is immutable and pure.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import DivisionByZero, IncompatibleConductor, ZeroPolynomial

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# integer polynomial helpers for the cyclotomic polynomials


def _int_poly_div(num: list[int], den: list[int]) -> list[int]:
    # exact division of integer polynomials, coefficients ascending
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + len(den) - 1]
        if c % den[-1]:
            raise ArithmeticError("non-exact polynomial division")
        q = c // den[-1]
        out[shift] = q
        if q:
            for i, d in enumerate(den):
                num[shift + i] -= q * d
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    """Integer coefficients (ascending) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("conductor must be positive")
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _int_poly_div(poly, list(cyclotomic_coeffs(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _degree(n: int) -> int:
    return len(cyclotomic_coeffs(n)) - 1


@lru_cache(maxsize=None)
def _reduction_table(n: int) -> tuple[tuple[int, ...], ...]:
    # row e-deg gives the power-basis coordinates of zeta_n^e for e in [deg, n)
    deg = _degree(n)
    phi = cyclotomic_coeffs(n)
    rows = []
    # start from zeta^(deg) = -phi[0..deg-1] (phi monic)
    cur = [-c for c in phi[:deg]]
    rows.append(tuple(cur))
    for _ in range(deg + 1, n):
        # multiply current coords by zeta
        nxt = [0] * deg
        for i in range(deg - 1):
            nxt[i + 1] = cur[i]
        top = cur[deg - 1]
        if top:
            for i in range(deg):
                nxt[i] += top * (-phi[i])
        cur = nxt
        rows.append(tuple(cur))
    return tuple(rows)


@lru_cache(maxsize=None)
def _units(n: int) -> tuple[int, ...]:
    return tuple(k for k in range(1, n + 1) if math.gcd(k, n) == 1) if n > 1 else (1,)


def _canonical_coeffs(n: int, raw: dict[int, Fraction]) -> dict[int, Fraction]:
    # raw maps exponents in [0, n) to Fractions; fold exponents >= deg
    deg = _degree(n)
    table = _reduction_table(n)
    out: dict[int, Fraction] = {}
    for e, c in raw.items():
        if not c:
            continue
        if e < deg:
            out[e] = out.get(e, _ZERO) + c
        else:
            for i, t in enumerate(table[e - deg]):
                if t:
                    out[i] = out.get(i, _ZERO) + c * t
    return {e: c for e, c in out.items() if c}


@lru_cache(maxsize=None)
def _embedding_solver(n: int, m: int):
    """Data for rewriting a conductor-n element in the basis of Q(zeta_m), m | n.

    Returns (transform, pivots, width) where transform is a tuple of rows of a
    matrix T with T*B in reduced echelon form, B the deg(n) x deg(m) matrix
    whose columns are the big-basis coordinates of zeta_m^j.
    """
    deg_n, deg_m = _degree(n), _degree(m)
    step = n // m
    cols = []
    for j in range(deg_m):
        coords = _canonical_coeffs(n, {(j * step) % n: _ONE})
        cols.append([coords.get(i, _ZERO) for i in range(deg_n)])
    # rows of [B | I]
    aug = []
    for i in range(deg_n):
        row = [cols[j][i] for j in range(deg_m)] + [
            _ONE if t == i else _ZERO for t in range(deg_n)
        ]
        aug.append(row)
    pivots = []
    r = 0
    for c in range(deg_m):
        pivot = next((i for i in range(r, deg_n) if aug[i][c]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(deg_n):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    transform = tuple(tuple(row[deg_m:]) for row in aug)
    return transform, tuple(pivots), deg_m, r


def _try_rewrite(n: int, coeffs: dict[int, Fraction], m: int):
    # attempt to express the element in the power basis of Q(zeta_m); None if
    # it does not lie there
    transform, pivots, width, rank = _embedding_solver(n, m)
    deg_n = _degree(n)
    v = [coeffs.get(i, _ZERO) for i in range(deg_n)]
    tv = [sum((row[i] * v[i] for i in range(deg_n) if v[i]), _ZERO) for row in transform]
    if any(tv[rank:]):
        return None
    out = {}
    for idx, c in enumerate(pivots):
        if tv[idx]:
            out[c] = tv[idx]
    return out


def _minimize_conductor(n: int, coeffs: dict[int, Fraction]):
    if not coeffs:
        return 1, {}
    while n > 1:
        if set(coeffs) == {0}:
            return 1, dict(coeffs)
        for p in _prime_factors(n):
            smaller = _try_rewrite(n, coeffs, n // p)
            if smaller is not None:
                n, coeffs = n // p, smaller
                break
        else:
            break
    return n, coeffs


@lru_cache(maxsize=None)
def _prime_factors(n: int) -> tuple[int, ...]:
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
    return tuple(out)


# ---------------------------------------------------------------------------


class CycNum:
    """An element of a cyclotomic field in canonical form."""

    __slots__ = ("n", "coeffs", "_hash")

    def __init__(self, n: int, coeffs: dict[int, Fraction], *, _canonical=False):
        if n < 1:
            raise IncompatibleConductor("conductor must be positive", n=n)
        if not _canonical:
            coeffs = _canonical_coeffs(n, {e % n: Fraction(c) for e, c in coeffs.items()})
            n, coeffs = _minimize_conductor(n, coeffs)
        self.n = n
        self.coeffs = coeffs
        self._hash = None

    # constructors

    @staticmethod
    def rational(q) -> "CycNum":
        q = Fraction(q)
        return CycNum(1, {0: q} if q else {}, _canonical=True)

    @staticmethod
    def zero() -> "CycNum":
        return _CYC_ZERO

    @staticmethod
    def one() -> "CycNum":
        return _CYC_ONE

    @staticmethod
    def root_of_unity(n: int, e: int = 1) -> "CycNum":
        """zeta_n^e."""
        return CycNum(n, {e % n: _ONE})

    # predicates

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return self.n == 1

    def as_fraction(self) -> Fraction:
        if self.n != 1:
            raise IncompatibleConductor("value is not rational", conductor=self.n)
        return self.coeffs.get(0, _ZERO)

    # structural equality / ordering key

    def __eq__(self, other):
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, tuple(sorted(self.coeffs.items()))))
        return self._hash

    def sort_key(self):
        """Deterministic total order key (conductor first, then terms).

        Terms are compared by descending exponent with negated coefficients,
        which puts 1 before -1 and zeta_n before the other primitive roots.
        """
        terms = tuple((e, -self.coeffs[e]) for e in sorted(self.coeffs, reverse=True))
        return (self.n, terms)

    # arithmetic

    def _embedded(self, big: int) -> dict[int, Fraction]:
        if big == self.n:
            return self.coeffs
        step = big // self.n
        raw: dict[int, Fraction] = {}
        for e, c in self.coeffs.items():
            raw[(e * step) % big] = raw.get((e * step) % big, _ZERO) + c
        return _canonical_coeffs(big, raw)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        big = math.lcm(self.n, other.n)
        a, b = self._embedded(big), other._embedded(big)
        merged = dict(a)
        for e, c in b.items():
            merged[e] = merged.get(e, _ZERO) + c
        merged = {e: c for e, c in merged.items() if c}
        return CycNum(*_minimize_conductor(big, merged), _canonical=True)

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.n, {e: -c for e, c in self.coeffs.items()}, _canonical=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_rational():
            q = self.coeffs.get(0)
            if q is None:
                return _CYC_ZERO
            return CycNum(other.n, {e: c * q for e, c in other.coeffs.items()}, _canonical=True)
        if other.is_rational():
            return other * self
        big = math.lcm(self.n, other.n)
        a, b = self._embedded(big), other._embedded(big)
        raw: dict[int, Fraction] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = (e1 + e2) % big
                raw[e] = raw.get(e, _ZERO) + c1 * c2
        canon = _canonical_coeffs(big, raw)
        return CycNum(*_minimize_conductor(big, canon), _canonical=True)

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if self.is_zero():
            raise DivisionByZero("cannot invert zero")
        if self.is_rational():
            return CycNum.rational(1 / self.coeffs[0])
        n, deg = self.n, _degree(self.n)
        a = [self.coeffs.get(i, _ZERO) for i in range(deg)]
        phi = [Fraction(c) for c in cyclotomic_coeffs(n)]
        # extended Euclid in Q[x]: u*a + v*phi = gcd = const
        r0, r1 = phi, a
        s0, s1 = [_ZERO], [_ONE]

        def deg_of(p):
            for i in range(len(p) - 1, -1, -1):
                if p[i]:
                    return i
            return -1

        while deg_of(r1) > 0:
            d0, d1 = deg_of(r0), deg_of(r1)
            q = [_ZERO] * (d0 - d1 + 1)
            rem = list(r0)
            for shift in range(d0 - d1, -1, -1):
                c = rem[shift + d1] / r1[d1]
                q[shift] = c
                if c:
                    for i in range(d1 + 1):
                        rem[shift + i] -= c * r1[i]
            # s_new = s0 - q*s1
            prod = [_ZERO] * (len(q) + len(s1) - 1)
            for i, qc in enumerate(q):
                if qc:
                    for j, sc in enumerate(s1):
                        prod[i + j] += qc * sc
            s_new = [
                (s0[i] if i < len(s0) else _ZERO) - (prod[i] if i < len(prod) else _ZERO)
                for i in range(max(len(s0), len(prod)))
            ]
            r0, r1 = r1, rem
            s0, s1 = s1, s_new
        d = deg_of(r1)
        if d != 0:
            raise DivisionByZero("cannot invert zero")
        c = r1[0]
        inv_coeffs = {i: s / c for i, s in enumerate(s1) if s}
        return CycNum(n, inv_coeffs)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = _CYC_ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "CycNum":
        """Complex conjugation."""
        if self.n <= 2:
            return self
        return galois_apply(GaloisAut(self.n, self.n - 1), self)

    def reduce_conductor(self) -> "CycNum":
        """Canonical form already minimizes the conductor; returns self."""
        return self

    def __repr__(self):
        if self.is_zero():
            return "CycNum(0)"
        if self.is_rational():
            return f"CycNum({self.coeffs[0]})"
        terms = " + ".join(
            f"{c}*z{self.n}^{e}" for e, c in sorted(self.coeffs.items())
        )
        return f"CycNum({terms})"


def _coerce(x):
    if isinstance(x, CycNum):
        return x
    if isinstance(x, (int, Fraction)):
        return CycNum.rational(x)
    return NotImplemented


_CYC_ZERO = CycNum(1, {}, _canonical=True)
_CYC_ONE = CycNum(1, {0: _ONE}, _canonical=True)


# ---------------------------------------------------------------------------


class GaloisAut:
    """The automorphism of Q(zeta_n) sending zeta_n to zeta_n^k, gcd(k,n)=1."""

    __slots__ = ("n", "k")

    def __init__(self, n: int, k: int):
        if n < 1:
            raise IncompatibleConductor("conductor must be positive", n=n)
        k = k % n if n > 1 else 0
        if n > 1 and math.gcd(k, n) != 1:
            raise IncompatibleConductor("unit not coprime to conductor", n=n, k=k)
        self.n = n
        self.k = k if n > 1 else 1

    @staticmethod
    def identity(n: int) -> "GaloisAut":
        return GaloisAut(n, 1)

    def is_identity(self) -> bool:
        return self.k == 1

    def compose(self, other: "GaloisAut") -> "GaloisAut":
        """self after other: acts as zeta -> zeta^(k_self * k_other)."""
        if self.n != other.n:
            raise IncompatibleConductor(
                "cannot compose automorphisms of different conductors",
                left=self.n, right=other.n,
            )
        return GaloisAut(self.n, self.k * other.k % self.n)

    def inverse(self) -> "GaloisAut":
        return GaloisAut(self.n, pow(self.k, -1, self.n) if self.n > 1 else 1)

    def __eq__(self, other):
        if not isinstance(other, GaloisAut):
            return NotImplemented
        return self.n == other.n and self.k == other.k

    def __hash__(self):
        return hash((self.n, self.k))

    def __repr__(self):
        return f"GaloisAut(n={self.n}, k={self.k})"


def galois_apply(s: GaloisAut, a: CycNum) -> CycNum:
    """Apply zeta_n -> zeta_n^k linearly to a.

    The conductor of a must divide the conductor of s; canonical values keep
    conductors minimal, so this holds whenever a lies in Q(zeta_n).
    """
    if a.n == 1:
        return a
    if s.n % a.n != 0:
        raise IncompatibleConductor(
            "value lies outside the automorphism's field", value=a.n, aut=s.n
        )
    k = s.k % a.n
    if math.gcd(k, a.n) != 1:
        raise IncompatibleConductor("restricted unit not coprime", k=k, n=a.n)
    return CycNum(a.n, {(e * k) % a.n: c for e, c in a.coeffs.items()})


def cyc_arith(a: CycNum, b: CycNum, op: str) -> CycNum:
    """Dispatch one binary field operation: add, sub, mul or div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------


class SubfieldSpec:
    """A subfield of Q(zeta_n), given as the fixed field of a unit subgroup.

    The stabilizer is stored closed under multiplication mod n and inverse.
    """

    __slots__ = ("n", "stabilizer")

    def __init__(self, n: int, stabilizer):
        if n < 1:
            raise IncompatibleConductor("conductor must be positive", n=n)
        if n == 1:
            self.n = 1
            self.stabilizer = frozenset({1})
            return
        gens = set()
        for s in stabilizer:
            k = (s.k if isinstance(s, GaloisAut) else s) % n
            if math.gcd(k, n) != 1:
                raise IncompatibleConductor("stabilizer unit not coprime", n=n, k=k)
            gens.add(k)
        closed = {1}
        frontier = set(closed)
        while frontier:
            nxt = set()
            for a in frontier:
                for g in gens | closed:
                    p = (a * g) % n
                    if p not in closed:
                        nxt.add(p)
            closed |= nxt
            frontier = nxt
        self.n = n
        self.stabilizer = frozenset(closed)

    @staticmethod
    def rationals(n: int = 1) -> "SubfieldSpec":
        """Q, presented inside Q(zeta_n)."""
        return SubfieldSpec(n, _units(n))

    @staticmethod
    def full_field(n: int) -> "SubfieldSpec":
        return SubfieldSpec(n, [1])

    def galois_auts(self) -> list[GaloisAut]:
        return [GaloisAut(self.n, k) for k in sorted(self.stabilizer)]

    def lift(self, big: int) -> "SubfieldSpec":
        """The same subfield viewed inside Q(zeta_big), big a multiple of n."""
        if big % self.n:
            raise IncompatibleConductor("not a conductor multiple", small=self.n, big=big)
        if big == self.n:
            return self
        units = _units(big)
        stab = [k for k in units if (k % self.n if self.n > 1 else 1) in self.stabilizer]
        return SubfieldSpec(big, stab)

    def degree_over_rationals(self) -> int:
        return _degree(self.n) // len(self.stabilizer)

    def __eq__(self, other):
        if not isinstance(other, SubfieldSpec):
            return NotImplemented
        return self.n == other.n and self.stabilizer == other.stabilizer

    def __hash__(self):
        return hash((self.n, self.stabilizer))

    def __repr__(self):
        return f"SubfieldSpec(n={self.n}, stabilizer={sorted(self.stabilizer)})"


def in_fixed_field(a: CycNum, k0: SubfieldSpec) -> bool:
    """True iff a lies in the subfield k0 describes."""
    if a.n == 1:
        return True
    if k0.n % a.n != 0:
        return False
    return all(
        galois_apply(GaloisAut(k0.n, k), a) == a for k in k0.stabilizer
    )


# ---------------------------------------------------------------------------


class CycPoly:
    """Polynomial with CycNum coefficients, ascending order, trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [c if isinstance(c, CycNum) else CycNum.rational(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    @staticmethod
    def from_roots(roots) -> "CycPoly":
        out = CycPoly([CycNum.one()])
        for r in roots:
            out = out * CycPoly([-_coerce(r), CycNum.one()])
        return out

    def __eq__(self, other):
        if not isinstance(other, CycPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        size = max(len(a), len(b))
        return CycPoly([
            (a[i] if i < len(a) else _CYC_ZERO) + (b[i] if i < len(b) else _CYC_ZERO)
            for i in range(size)
        ])

    def __neg__(self):
        return CycPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return CycPoly([])
        out = [_CYC_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return CycPoly(out)

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroPolynomial("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return CycPoly([]), self
        quot = [_CYC_ZERO] * (dq + 1)
        lead_inv = other.coeffs[-1].inverse()
        for shift in range(dq, -1, -1):
            c = rem[shift + other.degree]
            if c.is_zero():
                continue
            q = c * lead_inv
            quot[shift] = q
            for i, oc in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - q * oc
        return CycPoly(quot), CycPoly(rem)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "CycPoly") -> bool:
        """True iff self divides other exactly (zero divides only zero)."""
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def derivative(self) -> "CycPoly":
        return CycPoly([
            c * CycNum.rational(i) for i, c in enumerate(self.coeffs) if i > 0
        ])

    def eval(self, x: CycNum) -> CycNum:
        out = _CYC_ZERO
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def root_multiplicity(self, alpha: CycNum) -> int:
        """Exact multiplicity of alpha as a root (0 if not a root)."""
        lin = CycPoly([-alpha, CycNum.one()])
        mult, cur = 0, self
        while not cur.is_zero():
            q, r = divmod(cur, lin)
            if not r.is_zero():
                break
            mult += 1
            cur = q
        return mult

    def __repr__(self):
        return f"CycPoly(degree={self.degree})"


def has_simple_root(f: CycPoly) -> bool:
    """True iff f has a root of multiplicity exactly one.

    Criterion: f does not divide the square of its derivative.  For a
    squarefree nonconstant factor this always holds; a polynomial all of
    whose roots repeat divides (f')^2.
    """
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial has no well-defined roots")
    d = f.derivative()
    return not f.divides(d * d)
