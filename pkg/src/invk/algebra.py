"""Presented algebras R = K[x1..xn]/I and their fraction fields.

FractionElem is the element type of L = Quot(R) for prime_claimed R.  Zero
and equality tests go through ideal membership; no canonical form is assumed
in general.  Fractions ARE put in lowest terms when the algebra is a free
polynomial ring over a field, or a pure Laurent presentation in
characteristic 0 (via the clearing substitution xbar -> 1/x); in other
quotients they are carried unsimplified, since gcds are unavailable there
and the algorithms only ever need zero/equality tests.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import InputError
from .groebner import GroebnerBasis, groebner, membership, normal_form
from .orders import GrevLex
from .poly import MultiPoly, PolyRing, mono_div, mono_divides
from .rings import Domain, QQ, ZZ


class PresentedAlgebra:
    """R = K[x1..xn]/I with a cached Groebner basis of I."""

    __slots__ = ("ring", "relations", "prime_claimed", "degrees",
                 "laurent_pairs", "_gb", "_frac")

    def __init__(self, ring: PolyRing, relations=(), *, prime_claimed=False,
                 degrees=None, laurent_pairs=()):
        self.ring = ring
        self.relations = tuple(r for r in relations if not r.is_zero())
        for r in self.relations:
            if r.ring != ring:
                raise InputError("relation in the wrong ring")
        self.prime_claimed = prime_claimed
        self.degrees = tuple(degrees) if degrees is not None else None
        self.laurent_pairs = tuple(tuple(p) for p in laurent_pairs)
        self._gb = None
        self._frac = None

    @property
    def gb(self) -> GroebnerBasis:
        if self._gb is None:
            self._gb = groebner(list(self.relations), GrevLex(), ring=self.ring)
        return self._gb

    def is_free(self) -> bool:
        return not self.relations

    def is_pure_laurent(self) -> bool:
        """True when the relations are exactly the inversion relations."""
        if not self.laurent_pairs:
            return False
        want = set()
        for i, j in self.laurent_pairs:
            e = [0] * self.ring.nvars
            e[i] += 1
            e[j] += 1
            want.add(tuple(e))
        rels = set()
        for r in self.relations:
            terms = dict(r.terms)
            zero_mono = (0,) * self.ring.nvars
            const = terms.pop(zero_mono, None)
            if len(terms) != 1 or const is None:
                return False
            (m, c), = terms.items()
            dom = self.ring.domain
            if not (dom.is_one(c) and dom.is_zero(dom.add(const, dom.one))):
                return False
            rels.add(m)
        return rels == want

    def nf(self, f: MultiPoly) -> MultiPoly:
        if f.ring != self.ring:
            raise InputError("element from a different ring")
        if not self.relations:
            return f
        return normal_form(f, self.gb)

    def is_zero(self, f: MultiPoly) -> bool:
        return self.nf(f).is_zero()

    def eq(self, f: MultiPoly, g: MultiPoly) -> bool:
        return self.nf(f - g).is_zero()

    def frac_domain(self) -> FracFieldDomain:
        if self._frac is None:
            self._frac = FracFieldDomain(self)
        return self._frac

    def has_canonical_fractions(self) -> bool:
        """True when fractions are reduced to a canonical lowest-terms form,
        so `den == 1` characterizes membership in R."""
        dom = self.ring.domain
        if self.is_free():
            return dom.is_field or dom is ZZ
        return self.is_pure_laurent() and dom in (ZZ, QQ)

    def one(self) -> MultiPoly:
        return self.ring.one()

    def parse(self, text: str) -> MultiPoly:
        from .parse import parse_poly
        return self.nf(parse_poly(text, self.ring))

    def variable_degrees(self):
        return self.degrees if self.degrees is not None else (1,) * self.ring.nvars

    def __eq__(self, other):
        return (isinstance(other, PresentedAlgebra)
                and other.ring == self.ring
                and set(p.frozen() for p in other.relations)
                == set(p.frozen() for p in self.relations))

    def __hash__(self):
        return hash((self.ring, frozenset(p.frozen() for p in self.relations)))

    def __repr__(self):
        if not self.relations:
            return "%r" % self.ring
        return "%r / (%s)" % (self.ring, ", ".join(str(r) for r in self.relations))


def laurent_algebra(domain: Domain, names, *, inverse_suffix="inv") -> PresentedAlgebra:
    """Laurent ring K[x, x^-1] encoded with doubled variables x, xinv."""
    names = tuple(names)
    inv_names = tuple(n + inverse_suffix for n in names)
    clash = set(names) & set(inv_names)
    if clash:
        raise InputError("inverse variable names collide: %r" % sorted(clash))
    ring = PolyRing(domain, names + inv_names)
    n = len(names)
    rels = []
    for i in range(n):
        e = [0] * ring.nvars
        e[i] = 1
        e[n + i] = 1
        rels.append(MultiPoly(ring, {tuple(e): domain.one,
                                     (0,) * ring.nvars: domain.neg(domain.one)}))
    return PresentedAlgebra(ring, rels, prime_claimed=True,
                            laurent_pairs=[(i, n + i) for i in range(n)])


# -- exact division and gcd over fields --------------------------------------


def exact_divide(f: MultiPoly, g: MultiPoly) -> MultiPoly | None:
    """Return f/g when g divides f exactly, else None."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    dom = ring.domain
    kf = ring.key_function(GrevLex())
    glm, glc = g.leading(GrevLex())
    rem = f
    quot: dict = {}
    while not rem.is_zero():
        m, c = rem.leading(GrevLex())
        if not mono_divides(glm, m):
            return None
        if dom.is_field:
            q = dom.div(c, glc)
        else:
            if c % glc:
                return None
            q = c // glc
        mm = mono_div(m, glm)
        quot[mm] = q
        rem = rem - g.mul_term(q, mm)
    return MultiPoly(ring, quot)


def _coeffs_in_var(f: MultiPoly, v: int) -> dict[int, MultiPoly]:
    """f as a univariate polynomial in x_v with MultiPoly coefficients."""
    out: dict[int, dict] = {}
    for m, c in f.terms.items():
        e = m[v]
        mm = list(m)
        mm[v] = 0
        out.setdefault(e, {})[tuple(mm)] = c
    return {e: MultiPoly(f.ring, d) for e, d in out.items()}


def _from_var_coeffs(ring: PolyRing, v: int, coeffs: dict[int, MultiPoly]) -> MultiPoly:
    terms = {}
    for e, p in coeffs.items():
        for m, c in p.terms.items():
            mm = list(m)
            mm[v] = e
            terms[tuple(mm)] = c
    return MultiPoly(ring, terms)


def _int_content(f: MultiPoly) -> int:
    g = 0
    for c in f.terms.values():
        g = math.gcd(g, c)
    return g


_SYMPY_RINGS: dict = {}


def _sympy_poly_ring(names, domain_key):
    got = _SYMPY_RINGS.get((names, domain_key))
    if got is None:
        import sympy
        from sympy.polys.rings import ring as sympy_ring
        dom = sympy.ZZ if domain_key == "ZZ" else sympy.GF(domain_key)
        got = sympy_ring(",".join(names), dom)[0]
        _SYMPY_RINGS[(names, domain_key)] = got
    return got


def _gcd_zz(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Gcd of integer polynomials (sympy's multivariate gcd under the hood)."""
    ring = f.ring
    if f.is_zero():
        return g if _lead_positive(g) else -g
    if g.is_zero():
        return f if _lead_positive(f) else -f
    if f.is_const() and g.is_const():
        return ring.const(math.gcd(f.const_value(), g.const_value()))
    rs = _sympy_poly_ring(ring.names, "ZZ")
    h = rs.from_dict(f.terms).gcd(rs.from_dict(g.terms))
    out = MultiPoly(ring, {tuple(m): int(c) for m, c in h.terms()})
    return out if _lead_positive(out) else -out


def _gcd_zz_prs(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Primitive-PRS gcd of integer polynomials (positive-content result)."""
    ring = f.ring
    if f.is_zero():
        return g if _lead_positive(g) else -g
    if g.is_zero():
        return f if _lead_positive(f) else -f
    vs = sorted(f.support_vars() | g.support_vars())
    if not vs:
        return ring.const(math.gcd(f.const_value(), g.const_value()))
    v = vs[-1]
    fc, gc = _coeffs_in_var(f, v), _coeffs_in_var(g, v)
    cont_f = _gcd_list_zz(list(fc.values()))
    cont_g = _gcd_list_zz(list(gc.values()))
    cont = _gcd_zz(cont_f, cont_g)
    pf = exact_divide(f, cont_f)
    pg = exact_divide(g, cont_g)
    a, b = (pf, pg) if f.degree_in(v) >= g.degree_in(v) else (pg, pf)
    while not b.is_zero():
        r = _pseudo_rem(a, b, v)
        a = b
        if r.is_zero():
            b = r
        else:
            rc = _gcd_list_zz(list(_coeffs_in_var(r, v).values()))
            b = exact_divide(r, rc)
    if not _lead_positive(a):
        a = -a
    return cont * a


def _gcd_list_zz(polys) -> MultiPoly:
    acc = polys[0].ring.zero()
    for p in polys:
        acc = _gcd_zz(acc, p)
        if acc.is_const() and not acc.is_zero() and abs(acc.const_value()) == 1:
            return acc.ring.one()
    return acc


def _lead_positive(p: MultiPoly) -> bool:
    if p.is_zero():
        return True
    return p.leading(GrevLex())[1] > 0


def _pseudo_rem(f: MultiPoly, g: MultiPoly, v: int) -> MultiPoly:
    """Pseudo-remainder of f by g in the main variable v."""
    ring = f.ring
    dg = g.degree_in(v)
    gc = _coeffs_in_var(g, v)[dg]
    while True:
        df = f.degree_in(v)
        if f.is_zero() or df < dg:
            return f
        fc = _coeffs_in_var(f, v)[df]
        shift = [0] * ring.nvars
        shift[v] = df - dg
        f = gc * f - (fc.mul_term(ring.domain.one, tuple(shift))) * g


def gcd_poly(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Monic gcd of multivariate polynomials over a field."""
    ring = f.ring
    if ring != g.ring:
        raise InputError("gcd of polynomials from different rings")
    dom = ring.domain
    if not dom.is_field:
        raise InputError("gcd_poly needs field coefficients")
    if f.is_zero():
        return g.monic() if not g.is_zero() else ring.zero()
    if g.is_zero():
        return f.monic()
    if dom is QQ:
        zring = PolyRing(ZZ, ring.names)
        _, pf = f.content_primitive()
        _, pg = g.content_primitive()
        d = _gcd_zz(pf.convert(zring), pg.convert(zring))
        return d.convert(ring).monic()
    if dom.char:
        rs = _sympy_poly_ring(ring.names, dom.char)
        h = rs.from_dict({m: int(c) for m, c in f.terms.items()}).gcd(
            rs.from_dict({m: int(c) for m, c in g.terms.items()}))
        out = MultiPoly(ring, {tuple(m): dom.from_int(int(c))
                               for m, c in h.terms()})
        return out.monic()
    return _gcd_field(f, g).monic()


def _gcd_field(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    ring = f.ring
    vs = sorted(f.support_vars() | g.support_vars())
    if not vs:
        return ring.one()
    v = vs[-1]
    fc, gc = _coeffs_in_var(f, v), _coeffs_in_var(g, v)
    cont_f = _gcd_list_field(list(fc.values()))
    cont_g = _gcd_list_field(list(gc.values()))
    cont = _gcd_field(cont_f, cont_g)
    pf = exact_divide(f, cont_f)
    pg = exact_divide(g, cont_g)
    a, b = (pf, pg) if f.degree_in(v) >= g.degree_in(v) else (pg, pf)
    while not b.is_zero():
        r = _pseudo_rem(a, b, v)
        a = b
        if r.is_zero():
            b = r
        else:
            rc = _gcd_list_field(list(_coeffs_in_var(r, v).values()))
            b = exact_divide(r, rc)
    ppa = exact_divide(a, _gcd_list_field(list(_coeffs_in_var(a, v).values())))
    return cont * ppa


def _gcd_list_field(polys) -> MultiPoly:
    acc = polys[0].ring.zero()
    for p in polys:
        if acc.is_const() and not acc.is_zero():
            return acc.ring.one()
        acc = _gcd_field(acc, p) if not acc.is_zero() else p
    if acc.is_const() and not acc.is_zero():
        return acc.ring.one()
    return acc


def squarefree_part(f: MultiPoly) -> MultiPoly:
    """Monic product of the distinct irreducible factors of f (char 0 only)."""
    ring = f.ring
    dom = ring.domain
    if dom.char != 0:
        raise InputError("squarefree_part needs characteristic 0")
    if dom is ZZ:
        return squarefree_part(f.convert(PolyRing(QQ, ring.names)))
    if f.is_zero():
        raise InputError("squarefree_part of 0")
    if f.is_const():
        return ring.one()
    g = ring.zero()
    for v in sorted(f.support_vars()):
        g = gcd_poly(g, f.derivative(v)) if not g.is_zero() else f.derivative(v)
    g = gcd_poly(f, g)
    out = exact_divide(f, g)
    if out is None:
        raise ArithmeticError("gcd does not divide its argument")
    return out.monic()


# -- fraction field of a presented algebra ------------------------------------


class FractionElem:
    """num/den over a prime presented algebra; den nonzero modulo I."""

    __slots__ = ("algebra", "num", "den")

    def __init__(self, algebra: PresentedAlgebra, num: MultiPoly,
                 den: MultiPoly | None = None, *, _normalized=False):
        if not algebra.prime_claimed:
            raise InputError("fractions need a prime_claimed algebra")
        if den is None:
            den = algebra.ring.one()
        if _normalized:
            self.algebra, self.num, self.den = algebra, num, den
            return
        num = algebra.nf(num)
        den = algebra.nf(den)
        if den.is_zero():
            raise ZeroDivisionError("denominator lies in the presentation ideal")
        num, den = _simplify_fraction(algebra, num, den)
        self.algebra = algebra
        self.num = num
        self.den = den

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == self.den

    def __add__(self, other: FractionElem) -> FractionElem:
        self._chk(other)
        return FractionElem(self.algebra,
                            self.num * other.den + other.num * self.den,
                            self.den * other.den)

    def __sub__(self, other: FractionElem) -> FractionElem:
        self._chk(other)
        return FractionElem(self.algebra,
                            self.num * other.den - other.num * self.den,
                            self.den * other.den)

    def __mul__(self, other: FractionElem) -> FractionElem:
        self._chk(other)
        return FractionElem(self.algebra, self.num * other.num,
                            self.den * other.den)

    def __neg__(self) -> FractionElem:
        return FractionElem(self.algebra, -self.num, self.den, _normalized=True)

    def invert(self) -> FractionElem:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero fraction")
        return FractionElem(self.algebra, self.den, self.num)

    def __truediv__(self, other: FractionElem) -> FractionElem:
        return self * other.invert()

    def eq(self, other: FractionElem) -> bool:
        self._chk(other)
        if self.num == other.num and self.den == other.den:
            return True
        return self.algebra.is_zero(self.num * other.den - other.num * self.den)

    def __eq__(self, other):
        if not isinstance(other, FractionElem):
            return NotImplemented
        return self.eq(other)

    def __hash__(self):
        raise TypeError("fractions are not hashable; equality is modulo I")

    def scalar_value(self):
        """The element of Quot(K) this fraction equals, or None."""
        dom = self.algebra.ring.domain
        if self.num.is_zero():
            return Fraction(0) if dom is ZZ else dom.zero
        nm, nc = self.num.leading(GrevLex())
        dm, dc = self.den.leading(GrevLex())
        if nm != dm:
            return None
        if dom is ZZ:
            kappa = Fraction(nc, dc)
            probe = self.num.scale(kappa.denominator) - self.den.scale(kappa.numerator)
        else:
            kappa = dom.div(nc, dc)
            probe = self.num - self.den.scale(kappa)
        return kappa if self.algebra.is_zero(probe) else None

    def _chk(self, other: FractionElem):
        if other.algebra != self.algebra:
            raise InputError("fractions over different algebras")

    def __str__(self):
        if self.den.is_const() and self.algebra.ring.domain.is_one(
                self.den.const_value()):
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)

    def __repr__(self):
        return str(self)


def _simplify_fraction(algebra: PresentedAlgebra, num: MultiPoly, den: MultiPoly):
    dom = algebra.ring.domain
    if num.is_zero():
        return num, algebra.ring.one()
    if algebra.is_free():
        if dom.is_field:
            g = gcd_poly(num, den)
            if not (g.is_const()):
                num = exact_divide(num, g)
                den = exact_divide(den, g)
            lc = den.leading(GrevLex())[1]
            inv = dom.div(dom.one, lc)
            return num.scale(inv), den.scale(inv)
        if dom is ZZ:
            return _reduce_zz_pair(num, den)
        return num, den
    if algebra.is_pure_laurent() and dom in (ZZ, QQ):
        return _simplify_laurent(algebra, num, den)
    return num, den


def _reduce_zz_pair(num: MultiPoly, den: MultiPoly):
    """Lowest terms for ZZ numerator/denominator via QQ gcd, primitive output."""
    ring = num.ring
    qring = PolyRing(QQ, ring.names)
    g = _gcd_zz(num, den)
    if not g.is_const() or abs(g.const_value()) != 1:
        num = exact_divide(num, g)
        den = exact_divide(den, g)
    cn, _ = num.content_primitive()
    cd, _ = den.content_primitive()
    c = math.gcd(abs(cn), abs(cd))
    if c > 1:
        num = MultiPoly(ring, {m: v // c for m, v in num.terms.items()})
        den = MultiPoly(ring, {m: v // c for m, v in den.terms.items()})
    if den.leading(GrevLex())[1] < 0:
        num, den = -num, -den
    return num, den


def _laurent_exponent_split(algebra: PresentedAlgebra, p: MultiPoly):
    """NF'd Laurent element -> (ordinary poly in the base vars, shift vector)."""
    pairs = algebra.laurent_pairs
    n = len(pairs)
    base_idx = [i for i, _ in pairs]
    inv_idx = [j for _, j in pairs]
    other = [k for k in range(algebra.ring.nvars)
             if k not in set(base_idx) | set(inv_idx)]
    if other:
        raise InputError("laurent simplification with extra variables")
    shift = [0] * n
    rows = []
    for m, c in p.terms.items():
        ell = [m[base_idx[t]] - m[inv_idx[t]] for t in range(n)]
        rows.append((ell, c))
        for t in range(n):
            shift[t] = min(shift[t], ell[t])
    out = {}
    for ell, c in rows:
        out[tuple(e - s for e, s in zip(ell, shift))] = c
    return out, shift


def _simplify_laurent(algebra: PresentedAlgebra, num: MultiPoly, den: MultiPoly):
    dom = algebra.ring.domain
    pairs = algebra.laurent_pairs
    n = len(pairs)
    base_names = tuple(algebra.ring.names[i] for i, _ in pairs)
    zring = PolyRing(ZZ, base_names)
    nterms, nshift = _laurent_exponent_split(algebra, num)
    dterms, dshift = _laurent_exponent_split(algebra, den)
    if dom is QQ:
        cn, np_ = MultiPoly(PolyRing(QQ, base_names), nterms).content_primitive()
        cd, dp_ = MultiPoly(PolyRing(QQ, base_names), dterms).content_primitive()
        N = np_.convert(zring)
        D = dp_.convert(zring)
        ratio = cn / cd
    else:
        N = MultiPoly(zring, nterms)
        D = MultiPoly(zring, dterms)
        ratio = Fraction(1)
    g = _gcd_zz(N, D)
    if not (g.is_const() and abs(g.const_value()) == 1):
        N = exact_divide(N, g)
        D = exact_divide(D, g)
    # strip shared monomial factors, then re-balance the Laurent shifts
    net = [ns - ds for ns, ds in zip(nshift, dshift)]
    nmin = [min(m[t] for m in N.terms) for t in range(n)]
    dmin = [min(m[t] for m in D.terms) for t in range(n)]
    N = MultiPoly(zring, {tuple(e - b for e, b in zip(m, nmin)): c
                          for m, c in N.terms.items()})
    D = MultiPoly(zring, {tuple(e - b for e, b in zip(m, dmin)): c
                          for m, c in D.terms.items()})
    for t in range(n):
        net[t] += nmin[t] - dmin[t]
    cn2, N = N.content_primitive()
    cd2, D = D.content_primitive()
    ratio *= Fraction(cn2, cd2)
    # move the ratio p/q onto the integer polynomials
    p, q = ratio.numerator, ratio.denominator
    N = N.scale(p)
    D = D.scale(q)
    c = math.gcd(_int_content(N), _int_content(D))
    if c > 1:
        N = MultiPoly(zring, {m: v // c for m, v in N.terms.items()})
        D = MultiPoly(zring, {m: v // c for m, v in D.terms.items()})
    if D.leading(GrevLex())[1] < 0:
        N, D = -N, -D
    num_out = _laurent_rebuild(algebra, N, net)
    den_out = _laurent_rebuild(algebra, D, [0] * n)
    if dom is QQ:
        num_out = num_out.convert(algebra.ring)
        den_out = den_out.convert(algebra.ring)
    return num_out, den_out


def _laurent_rebuild(algebra: PresentedAlgebra, p: MultiPoly, shift):
    """Map an integer poly in the base vars back into the doubled presentation."""
    pairs = algebra.laurent_pairs
    n = len(pairs)
    ring = algebra.ring if algebra.ring.domain is ZZ \
        else PolyRing(ZZ, algebra.ring.names)
    out = {}
    for m, c in p.terms.items():
        e = [0] * ring.nvars
        for t in range(n):
            ell = m[t] + shift[t]
            if ell >= 0:
                e[pairs[t][0]] = ell
            else:
                e[pairs[t][1]] = -ell
        out[tuple(e)] = c
    return MultiPoly(ring, out)


class FracFieldDomain(Domain):
    """Quot(R) as a coefficient domain for polynomial rings over L."""

    is_field = True

    def __init__(self, algebra: PresentedAlgebra):
        self.algebra = algebra
        self.name = "Quot(%r)" % (algebra,)
        self.char = algebra.ring.domain.char
        self.zero = FractionElem(algebra, algebra.ring.zero())
        self.one = FractionElem(algebra, algebra.ring.one())

    def from_int(self, n: int):
        return FractionElem(self.algebra, self.algebra.ring.from_int(n))

    def from_poly(self, p: MultiPoly):
        return FractionElem(self.algebra, p)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        return a / b

    def inv(self, a):
        return a.invert()

    def is_zero(self, a) -> bool:
        return a.is_zero()

    def eq(self, a, b) -> bool:
        return a.eq(b)

    def is_one(self, a) -> bool:
        return a.eq(self.one)

    def is_unit(self, a) -> bool:
        return not a.is_zero()

    def format(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return (isinstance(other, FracFieldDomain)
                and other.algebra == self.algebra)

    def __hash__(self):
        return hash(("Quot", self.algebra))


def clear_denominators(e: FractionElem, a: MultiPoly, k_max: int):
    """Smallest k <= k_max with a^k * e in R, plus that element of R.

    With canonical fractions (free and pure Laurent algebras) this is pure
    fraction arithmetic; otherwise it works by ideal membership of a^k*num
    in I + (den) with the den-cofactor extracted, exact over ZZ as well as
    over fields.
    """
    algebra = e.algebra
    if algebra.is_zero(a):
        raise InputError("clearing element lies in the presentation ideal")
    if algebra.has_canonical_fractions():
        a_frac = FractionElem(algebra, a)
        cur = e
        for k in range(k_max + 1):
            if cur.den.is_const() and algebra.ring.domain.is_one(
                    cur.den.const_value()):
                return k, cur.num
            cur = cur * a_frac
        raise InputError("no power of the localizer up to %d clears the "
                         "fraction" % k_max)
    gens = list(algebra.relations) + [e.den]
    gb = groebner(gens, GrevLex(), ring=algebra.ring, track_cofactors=True)
    power = algebra.ring.one()
    for k in range(k_max + 1):
        target = algebra.nf(power * e.num)
        ok, combo = membership(target, gens, cofactors=True, gb=gb)
        if ok:
            return k, algebra.nf(combo[-1])
        power = algebra.nf(power * a)
    raise InputError("no power of the localizer up to %d clears the fraction"
                     % k_max)
