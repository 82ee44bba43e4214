"""Sparse exact multivariate polynomials over a pluggable coefficient domain.

A polynomial is a dict from exponent tuples to nonzero coefficients; the
ambient PolyRing fixes the domain and the variable names.  Polynomials are
immutable by convention: every operation returns a fresh object and nothing
here mutates shared state, so values can be shared freely across threads.
"""

from __future__ import annotations

import itertools

from .errors import InputError
from .orders import GrevLex, key_function
from .rings import Domain, QQ, ZZ

Monomial = tuple  # exponent tuple; arity fixed by the ambient ring


def mono_mul(s: Monomial, t: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(s, t))


def mono_divides(s: Monomial, t: Monomial) -> bool:
    for a, b in zip(s, t):
        if a > b:
            return False
    return True


def mono_div(s: Monomial, t: Monomial) -> Monomial:
    return tuple(a - b for a, b in zip(s, t))


def mono_lcm(s: Monomial, t: Monomial) -> Monomial:
    return tuple(a if a > b else b for a, b in zip(s, t))


def mono_degree(s: Monomial) -> int:
    return sum(s)


class PolyRing:
    """Ambient ring K[x_1..x_n]: a coefficient domain plus variable names."""

    __slots__ = ("domain", "names", "nvars", "_keycache")

    def __init__(self, domain: Domain, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise InputError("duplicate variable names: %r" % (names,))
        self.domain = domain
        self.names = names
        self.nvars = len(names)
        self._keycache = {}

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and other.domain == self.domain
                and other.names == self.names)

    def __hash__(self):
        return hash((self.domain.name, self.names))

    def __repr__(self):
        return "%s[%s]" % (self.domain.name, ",".join(self.names))

    def key_function(self, order):
        kf = self._keycache.get(order)
        if kf is None:
            kf = key_function(order, self.nvars)
            self._keycache[order] = kf
        return kf

    def zero(self) -> MultiPoly:
        return MultiPoly(self, {})

    def one(self) -> MultiPoly:
        return self.const(self.domain.one)

    def const(self, c) -> MultiPoly:
        if self.domain.is_zero(c):
            return MultiPoly(self, {})
        return MultiPoly(self, {(0,) * self.nvars: c})

    def from_int(self, n: int) -> MultiPoly:
        return self.const(self.domain.from_int(n))

    def var(self, i: int) -> MultiPoly:
        e = [0] * self.nvars
        e[i] = 1
        return MultiPoly(self, {tuple(e): self.domain.one})

    def gens(self) -> list[MultiPoly]:
        return [self.var(i) for i in range(self.nvars)]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InputError("unknown variable %r in %r" % (name, self)) from None

    def extend(self, extra_names) -> PolyRing:
        return PolyRing(self.domain, self.names + tuple(extra_names))

    def monomials_of_degree(self, d: int, weights=None):
        """All exponent tuples of (weighted) total degree exactly d."""
        w = weights if weights is not None else (1,) * self.nvars
        out = []

        def rec(i, left, acc):
            if i == self.nvars - 1:
                if w[i] > 0 and left % w[i] == 0:
                    out.append(tuple(acc + [left // w[i]]))
                elif left == 0:
                    out.append(tuple(acc + [0]))
                return
            if w[i] == 0:
                rec(i + 1, left, acc + [0])
                return
            for e in range(left // w[i] + 1):
                rec(i + 1, left - e * w[i], acc + [e])

        rec(0, d, [])
        return out


class MultiPoly:
    """Sparse polynomial; `terms` maps exponent tuple -> nonzero coefficient."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1
                                  and not any(next(iter(self.terms))))

    def const_value(self):
        if not self.terms:
            return self.ring.domain.zero
        (m, c), = self.terms.items()
        if any(m):
            raise InputError("const_value of a nonconstant polynomial")
        return c

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def weighted_degree(self, weights) -> int:
        if not self.terms:
            return -1
        return max(sum(w * e for w, e in zip(weights, m)) for m in self.terms)

    def degree_in(self, i: int) -> int:
        if not self.terms:
            return -1
        return max(m[i] for m in self.terms)

    def support_vars(self) -> set[int]:
        out: set[int] = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    out.add(i)
        return out

    def is_homogeneous(self, weights=None) -> bool:
        if not self.terms:
            return True
        w = weights if weights is not None else (1,) * self.ring.nvars
        degs = {sum(wi * ei for wi, ei in zip(w, m)) for m in self.terms}
        return len(degs) == 1

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, self.frozen()))

    def frozen(self):
        return tuple(sorted(self.terms.items(), key=lambda kv: kv[0]))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: MultiPoly) -> MultiPoly:
        dom = self.ring.domain
        terms = dict(self.terms)
        for m, c in other.terms.items():
            if m in terms:
                s = dom.add(terms[m], c)
                if dom.is_zero(s):
                    del terms[m]
                else:
                    terms[m] = s
            else:
                terms[m] = c
        return MultiPoly(self.ring, terms)

    def __sub__(self, other: MultiPoly) -> MultiPoly:
        dom = self.ring.domain
        terms = dict(self.terms)
        for m, c in other.terms.items():
            if m in terms:
                s = dom.sub(terms[m], c)
                if dom.is_zero(s):
                    del terms[m]
                else:
                    terms[m] = s
            else:
                terms[m] = dom.neg(c)
        return MultiPoly(self.ring, terms)

    def __neg__(self) -> MultiPoly:
        dom = self.ring.domain
        return MultiPoly(self.ring, {m: dom.neg(c) for m, c in self.terms.items()})

    def __mul__(self, other: MultiPoly) -> MultiPoly:
        dom = self.ring.domain
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        dmul, dadd, dzero = dom.mul, dom.add, dom.is_zero
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = tuple(e1 + e2 for e1, e2 in zip(m1, m2))
                prod = dmul(c1, c2)
                if m in out:
                    s = dadd(out[m], prod)
                    if dzero(s):
                        del out[m]
                    else:
                        out[m] = s
                elif not dzero(prod):
                    out[m] = prod
        return MultiPoly(self.ring, out)

    def scale(self, c) -> MultiPoly:
        dom = self.ring.domain
        if dom.is_zero(c):
            return self.ring.zero()
        return MultiPoly(self.ring, {m: dom.mul(c, v) for m, v in self.terms.items()})

    def mul_term(self, c, mono: Monomial) -> MultiPoly:
        dom = self.ring.domain
        if dom.is_zero(c):
            return self.ring.zero()
        return MultiPoly(self.ring, {
            mono_mul(m, mono): dom.mul(c, v) for m, v in self.terms.items()})

    def __pow__(self, n: int) -> MultiPoly:
        if n < 0:
            raise InputError("negative polynomial power")
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return out

    def derivative(self, i: int) -> MultiPoly:
        dom = self.ring.domain
        out: dict = {}
        for m, c in self.terms.items():
            if m[i]:
                d = dom.mul(dom.from_int(m[i]), c)
                if not dom.is_zero(d):
                    e = list(m)
                    e[i] -= 1
                    out[tuple(e)] = d
        return MultiPoly(self.ring, out)

    # -- order-dependent views -------------------------------------------

    def leading(self, order) -> tuple[Monomial, object]:
        if not self.terms:
            raise InputError("leading term of the zero polynomial")
        kf = self.ring.key_function(order)
        m = max(self.terms, key=kf)
        return m, self.terms[m]

    def sorted_terms(self, order, reverse=True):
        kf = self.ring.key_function(order)
        return sorted(self.terms.items(), key=lambda kv: kf(kv[0]), reverse=reverse)

    # -- structural maps ---------------------------------------------------

    def map_coeffs(self, fn, new_ring: PolyRing | None = None) -> MultiPoly:
        ring = new_ring or self.ring
        dom = ring.domain
        out = {}
        for m, c in self.terms.items():
            v = fn(c)
            if not dom.is_zero(v):
                out[m] = v
        return MultiPoly(ring, out)

    def lift_vars(self, target: PolyRing, var_map: list[int]) -> MultiPoly:
        """Reindex variables: source var i becomes target var var_map[i]."""
        n = target.nvars
        out = {}
        for m, c in self.terms.items():
            e = [0] * n
            for i, ei in enumerate(m):
                if ei:
                    e[var_map[i]] = ei
            out[tuple(e)] = c
        return MultiPoly(target, out)

    def substitute(self, target: PolyRing, images: list[MultiPoly]) -> MultiPoly:
        """Evaluate at images[i] in the target ring (same coefficient domain)."""
        if len(images) != self.ring.nvars:
            raise InputError("substitute needs one image per variable")
        dom = target.domain
        powers: list[dict[int, MultiPoly]] = [{} for _ in range(self.ring.nvars)]

        def power(i, e):
            cache = powers[i]
            got = cache.get(e)
            if got is None:
                got = images[i] ** e
                cache[e] = got
            return got

        acc = target.zero()
        for m, c in self.terms.items():
            piece = target.const(c)
            for i, e in enumerate(m):
                if e:
                    piece = piece * power(i, e)
            acc = acc + piece
        return acc

    def convert(self, target: PolyRing) -> MultiPoly:
        """Coefficient-domain conversion (ZZ -> QQ/GF(p), QQ -> ZZ if integral)."""
        src, dst = self.ring.domain, target.domain
        if self.ring.nvars != target.nvars:
            raise InputError("convert between rings of different arity")
        if src == dst:
            return MultiPoly(target, dict(self.terms))
        out = {}
        for m, c in self.terms.items():
            if src is ZZ:
                v = dst.from_int(c)
            elif src is QQ:
                v = dst.from_fraction(c.numerator, c.denominator)
            else:
                raise InputError("unsupported conversion %s -> %s" % (src, dst))
            if not dst.is_zero(v):
                out[m] = v
        return MultiPoly(target, out)

    # -- integer/rational content helpers ----------------------------------

    def content_primitive(self):
        """Return (content, primitive) with positive-leading primitive part.

        Over QQ the content is the rational making the result an integer
        primitive polynomial; over ZZ it is the integer gcd (signed so the
        grevlex-leading coefficient of the primitive part is positive).
        """
        import math
        from fractions import Fraction

        if not self.terms:
            return self.ring.domain.one, self
        dom = self.ring.domain
        if dom is ZZ:
            g = 0
            for c in self.terms.values():
                g = math.gcd(g, c)
            lead = self.leading(GrevLex())[1]
            if lead < 0:
                g = -g
            prim = MultiPoly(self.ring, {m: c // g for m, c in self.terms.items()})
            return g, prim
        if dom is QQ:
            num_gcd, den_lcm = 0, 1
            for c in self.terms.values():
                num_gcd = math.gcd(num_gcd, c.numerator)
                den_lcm = den_lcm // math.gcd(den_lcm, c.denominator) * c.denominator
            cont = Fraction(num_gcd, den_lcm)
            if self.leading(GrevLex())[1] < 0:
                cont = -cont
            prim = MultiPoly(self.ring, {m: c / cont for m, c in self.terms.items()})
            return cont, prim
        raise InputError("content over %s" % dom.name)

    def monic(self, order=None) -> MultiPoly:
        if not self.terms:
            return self
        order = order or GrevLex()
        lc = self.leading(order)[1]
        dom = self.ring.domain
        if dom.is_field:
            inv = dom.div(dom.one, lc)
            return self.scale(inv)
        raise InputError("monic over %s" % dom.name)

    # -- formatting ---------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return "<%s | %s>" % (format_poly(self), self.ring)


def format_coeff(dom: Domain, c) -> str:
    return dom.format(c)


def _format_mono(names, m) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append("%s^%d" % (name, e))
    return "*".join(parts)


def format_poly(p: MultiPoly, order=None) -> str:
    """Canonical string: grevlex-descending terms, normalized signs."""
    if not p.terms:
        return "0"
    order = order or GrevLex()
    dom = p.ring.domain
    pieces = []
    for m, c in p.sorted_terms(order):
        mono = _format_mono(p.ring.names, m)
        cs = dom.format(c)
        if " " in cs:
            cs = "(%s)" % cs
            neg = False
        else:
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
        if mono:
            body = mono if cs == "1" else "%s*%s" % (cs, mono)
        else:
            body = cs
        if not pieces:
            pieces.append("-" + body if neg else body)
        else:
            pieces.append(("- " if neg else "+ ") + body)
    return " ".join(pieces)


def same_ring(polys) -> PolyRing:
    ring = None
    for p in polys:
        if ring is None:
            ring = p.ring
        elif p.ring != ring:
            raise InputError("polynomials from different rings")
    if ring is None:
        raise InputError("empty polynomial list")
    return ring


def all_monomials_up_to(ring: PolyRing, d: int, weights=None):
    """Exponent tuples of weighted degree <= d, ordered by (degree, tuple)."""
    out = []
    for k in range(d + 1):
        out.extend(sorted(ring.monomials_of_degree(k, weights)))
    return out


def product_exponents(bound_each: list[int]):
    """Cartesian product of exponent ranges, ordered lexicographically."""
    ranges = [range(b) for b in bound_each]
    return itertools.product(*ranges)
