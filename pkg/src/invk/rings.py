"""Exact coefficient domains: QQ, ZZ and GF(p).

Every domain exposes the same small protocol (add/mul/is_zero/...), so the
polynomial and Groebner layers stay generic.  ZZ additionally provides the
Euclidean operations (balanced division with remainder, extended gcd) that
strong Groebner bases and linear-equation solving over the integers need.
All arithmetic is exact; there is no floating point anywhere in the package.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import InputError


def balanced_divmod(a: int, b: int) -> tuple[int, int]:
    """Return (q, r) with a = q*b + r and r in (-|b|/2, |b|/2].

    The tie r = |b|/2 is resolved to the positive remainder, which fixes the
    quotient uniquely and keeps normal forms over ZZ deterministic.
    """
    if b == 0:
        raise ZeroDivisionError("balanced_divmod by zero")
    ab = abs(b)
    r = a % ab
    if 2 * r > ab:
        r -= ab
    q = (a - r) // b
    return q, r


def gcdext(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with g = gcd(a, b) >= 0 and s*a + t*b = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


class Domain:
    """Shared defaults; concrete domains override what differs."""

    is_field = False
    is_euclidean = False
    char = 0
    name = "?"

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a) -> bool:
        return not a

    def eq(self, a, b) -> bool:
        return a == b

    def is_one(self, a) -> bool:
        return a == self.one

    def __repr__(self):
        return self.name

    def format(self, a) -> str:
        return str(a)


class RationalsDomain(Domain):
    is_field = True
    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n: int):
        return Fraction(n)

    def from_fraction(self, num: int, den: int):
        return Fraction(num, den)

    def div(self, a, b):
        return a / b

    def inv(self, a):
        return 1 / Fraction(a)

    def is_unit(self, a) -> bool:
        return bool(a)


class IntegersDomain(Domain):
    is_euclidean = True
    name = "ZZ"
    zero = 0
    one = 1

    def from_int(self, n: int):
        return n

    def from_fraction(self, num: int, den: int):
        if num % den:
            raise InputError("rational literal %d/%d over ZZ" % (num, den))
        return num // den

    def is_unit(self, a) -> bool:
        return a in (1, -1)

    def inv(self, a):
        if a in (1, -1):
            return a
        raise InputError("%d is not a unit in ZZ" % a)

    def divmod_balanced(self, a, b):
        return balanced_divmod(a, b)

    def gcdext(self, a, b):
        return gcdext(a, b)

    def divides(self, a, b) -> bool:
        return a != 0 and b % a == 0

    def exact_div(self, a, b):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("%d does not divide %d" % (b, a))
        return q


class PrimeFieldDomain(Domain):
    is_field = True

    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, int(math.isqrt(p)) + 1)):
            raise InputError("GF(p) needs a prime, got %d" % p)
        self.p = p
        self.char = p
        self.name = "GF(%d)" % p
        self.zero = 0
        self.one = 1 % p

    def from_int(self, n: int):
        return n % self.p

    def from_fraction(self, num: int, den: int):
        return self.mul(num % self.p, self.inv(den % self.p))

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0 in %s" % self.name)
        return pow(a, -1, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def is_unit(self, a) -> bool:
        return a % self.p != 0

    def __eq__(self, other):
        return isinstance(other, PrimeFieldDomain) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalsDomain()
ZZ = IntegersDomain()

_gf_cache: dict[int, PrimeFieldDomain] = {}


def GF(p: int) -> PrimeFieldDomain:
    if p not in _gf_cache:
        _gf_cache[p] = PrimeFieldDomain(p)
    return _gf_cache[p]


def domain_from_descriptor(desc) -> Domain:
    """Map a CLI ring descriptor ("ZZ", "QQ", {"GF": p}) to a domain."""
    if desc == "ZZ":
        return ZZ
    if desc == "QQ":
        return QQ
    if isinstance(desc, dict) and set(desc) == {"GF"}:
        return GF(int(desc["GF"]))
    raise InputError("unknown coefficient ring descriptor: %r" % (desc,))


def _int_row_kernel(a: list[int]) -> tuple[int, list[int], list[list[int]]]:
    """Unimodular column reduction of the row (a_1..a_r).

    Returns (g, bezout, kernel) with g = gcd(a) >= 0, sum(bezout[i]*a[i]) = g,
    and kernel a basis of {c in ZZ^r : sum(c_i a_i) = 0}.
    """
    r = len(a)
    row = list(a)
    # columns of the running unimodular transform
    cols = [[1 if i == j else 0 for i in range(r)] for j in range(r)]
    pivot = -1
    for j in range(r):
        if row[j] == 0:
            continue
        if pivot < 0:
            pivot = j
            continue
        # clear row[j] against row[pivot] by a gcd step
        g, s, t = gcdext(row[pivot], row[j])
        u, v = row[pivot] // g, row[j] // g
        cp, cj = cols[pivot], cols[j]
        new_p = [s * cp[i] + t * cj[i] for i in range(r)]
        new_j = [-v * cp[i] + u * cj[i] for i in range(r)]
        cols[pivot], cols[j] = new_p, new_j
        row[pivot], row[j] = g, 0
    if pivot < 0:
        return 0, [0] * r, cols
    if row[pivot] < 0:
        row[pivot] = -row[pivot]
        cols[pivot] = [-c for c in cols[pivot]]
    kernel = [cols[j] for j in range(r) if j != pivot]
    return row[pivot], cols[pivot], kernel


def solve_linear(domain: Domain, a: list, b) -> tuple[list | None, list[list]]:
    """Solve a_1 c_1 + ... + a_r c_r = b over the domain.

    Returns (particular, syzygies): `particular` is one solution vector or
    None when no solution exists; `syzygies` generate the full solution
    module of the homogeneous equation.  Over a field the syzygies are the
    standard kernel basis; over ZZ they generate the kernel lattice.
    """
    r = len(a)
    if r < 1:
        raise InputError("solve_linear needs at least one coefficient")
    if domain.is_field:
        pivot = next((j for j in range(r) if not domain.is_zero(a[j])), None)
        if pivot is None:
            syz = [[domain.one if i == j else domain.zero for i in range(r)]
                   for j in range(r)]
            part = [domain.zero] * r if domain.is_zero(b) else None
            return part, syz
        part = [domain.zero] * r
        part[pivot] = domain.div(b, a[pivot])
        syz = []
        for j in range(r):
            if j == pivot:
                continue
            v = [domain.zero] * r
            v[j] = domain.one
            v[pivot] = domain.neg(domain.div(a[j], a[pivot]))
            syz.append(v)
        return part, syz
    if domain is ZZ:
        g, bez, kernel = _int_row_kernel(list(a))
        if g == 0:
            part = [0] * r if b == 0 else None
            return part, kernel
        if b % g:
            return None, kernel
        scale = b // g
        return [scale * c for c in bez], kernel
    raise InputError("solve_linear unsupported over %s" % domain.name)
