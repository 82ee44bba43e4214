"""Group actions on presented algebras.

Four kinds: finite automorphism groups (stored extensionally as image
vectors), algebraic groups (I_G plus action polynomials g_i with
sigma^{-1}.a_i = g_i(sigma)), additive-group actions (a single parameter z),
and multiplicative actions of integer matrix groups on Laurent rings.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .algebra import FractionElem, PresentedAlgebra, laurent_algebra
from .errors import InputError
from .groebner import groebner, normal_form
from .orders import GrevLex
from .poly import MultiPoly, PolyRing
from .rings import QQ, ZZ

DEFAULT_CLOSURE_CAP = 100_000


class Automorphism:
    """Algebra automorphism given by the images of the generators."""

    __slots__ = ("algebra", "images", "_key")

    def __init__(self, algebra: PresentedAlgebra, images):
        images = tuple(algebra.nf(p) for p in images)
        if len(images) != algebra.ring.nvars:
            raise InputError("need one image per variable")
        self.algebra = algebra
        self.images = images
        self._key = tuple(p.frozen() for p in images)

    def __call__(self, f: MultiPoly) -> MultiPoly:
        return self.algebra.nf(f.substitute(self.algebra.ring, list(self.images)))

    def apply_fraction(self, e: FractionElem) -> FractionElem:
        return FractionElem(e.algebra, self(e.num), self(e.den))

    def compose(self, other: Automorphism) -> Automorphism:
        """(self o other): first apply other, then self."""
        return Automorphism(self.algebra, [self(im) for im in other.images])

    def is_identity(self) -> bool:
        return self._key == tuple(v.frozen() for v in self.algebra.ring.gens())

    def __eq__(self, other):
        return isinstance(other, Automorphism) and other._key == self._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return "Aut(%s)" % ", ".join(
            "%s->%s" % (n, p) for n, p in zip(self.algebra.ring.names, self.images))


def identity_automorphism(algebra: PresentedAlgebra) -> Automorphism:
    return Automorphism(algebra, algebra.ring.gens())


class FiniteGroupAction:
    """A finite group of automorphisms, element 0 the identity."""

    __slots__ = ("algebra", "elements", "generators")

    def __init__(self, algebra: PresentedAlgebra, elements, generators=None):
        self.algebra = algebra
        self.elements = list(elements)
        self.generators = list(generators) if generators else None
        if not self.elements or not self.elements[0].is_identity():
            raise InputError("element 0 must be the identity")

    def __len__(self):
        return len(self.elements)

    def nonidentity(self):
        return self.elements[1:]

    def with_domain(self, domain) -> FiniteGroupAction:
        """The same action on the coefficient-extended algebra (ZZ -> QQ)."""
        if self.algebra.ring.domain == domain:
            return self
        ring = PolyRing(domain, self.algebra.ring.names)
        alg = PresentedAlgebra(ring, [r.convert(ring) for r in self.algebra.relations],
                               prime_claimed=self.algebra.prime_claimed,
                               degrees=self.algebra.degrees,
                               laurent_pairs=self.algebra.laurent_pairs)
        els = [Automorphism(alg, [p.convert(ring) for p in s.images])
               for s in self.elements]
        gens = None
        if self.generators:
            gens = [Automorphism(alg, [p.convert(ring) for p in s.images])
                    for s in self.generators]
        return FiniteGroupAction(alg, els, gens)


def close_group(generators, cap: int = DEFAULT_CLOSURE_CAP) -> FiniteGroupAction:
    """Close a generator list under composition; identity goes first.

    Each generator must map the relation ideal into itself.  Raises when the
    closure exceeds `cap`.  For closures of moderate size the presence of
    inverses (the group axioms) is verified directly.
    """
    if not generators:
        raise InputError("close_group needs at least one generator")
    algebra = generators[0].algebra
    for g in generators:
        if g.algebra != algebra:
            raise InputError("generators act on different algebras")
        for rel in algebra.relations:
            if not algebra.is_zero(g(rel)):
                raise InputError("generator does not preserve the relation ideal")
    ident = identity_automorphism(algebra)
    seen = {ident._key: ident}
    order = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for s in frontier:
            for g in generators:
                t = g.compose(s)
                if t._key not in seen:
                    if len(seen) >= cap:
                        raise InputError("group closure exceeded cap %d" % cap)
                    seen[t._key] = t
                    order.append(t)
                    nxt.append(t)
        frontier = nxt
    action = FiniteGroupAction(algebra, order, generators)
    if len(order) <= 512:
        _verify_group_axioms(action)
    return action


def _verify_group_axioms(action: FiniteGroupAction):
    keys = {s._key for s in action.elements}
    ident = action.elements[0]
    for s in action.elements:
        if not any(s.compose(t)._key == ident._key for t in action.elements):
            raise InputError("closure is not a group: missing inverse")
        if s.compose(ident)._key != s._key:
            raise InputError("closure is not a group: identity misbehaves")
        for t in action.elements[:4]:
            if s.compose(t)._key not in keys:
                raise InputError("closure is not closed under composition")


def apply(sigma: Automorphism, f):
    """Apply an automorphism to a polynomial or a fraction."""
    if isinstance(f, FractionElem):
        return sigma.apply_fraction(f)
    return sigma(f)


class MultiplicativeActionSpec:
    """Integer matrices in GL_n(ZZ) acting on exponent vectors."""

    __slots__ = ("n", "matrices")

    def __init__(self, matrices):
        matrices = [tuple(tuple(int(x) for x in row) for row in m)
                    for m in matrices]
        if not matrices:
            raise InputError("need at least one matrix")
        n = len(matrices[0])
        for m in matrices:
            if len(m) != n or any(len(row) != n for row in m):
                raise InputError("matrices must be square of equal size")
            if _int_det(m) not in (1, -1):
                raise InputError("matrix determinant must be +-1")
        self.n = n
        self.matrices = matrices


def _int_det(m) -> int:
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * _int_det(minor)
    return total


def _laurent_monomial(algebra: PresentedAlgebra, exps) -> MultiPoly:
    """x^v for v in ZZ^n, negative exponents on the inverse variables."""
    e = [0] * algebra.ring.nvars
    for t, (i, j) in enumerate(algebra.laurent_pairs):
        v = exps[t]
        if v >= 0:
            e[i] = v
        else:
            e[j] = -v
    return MultiPoly(algebra.ring, {tuple(e): algebra.ring.domain.one})


def multiplicative_action(spec: MultiplicativeActionSpec, *, domain=ZZ,
                          names=None, cap: int = DEFAULT_CLOSURE_CAP
                          ) -> FiniteGroupAction:
    """Matrices M act by x^v -> x^(M v); variable x_j maps to column j of M.

    The convention is the column-image one: matrix composition matches map
    composition, compose(sigma_M, sigma_N) = sigma_{M N}.
    """
    n = spec.n
    if names is None:
        names = tuple("x%d" % (i + 1) for i in range(n)) if n != 2 else ("x", "y")
    algebra = laurent_algebra(domain, names)
    gens = []
    for m in spec.matrices:
        images = []
        for j in range(n):
            col = [m[i][j] for i in range(n)]
            images.append(_laurent_monomial(algebra, col))
        for j in range(n):
            col = [-m[i][j] for i in range(n)]
            images.append(_laurent_monomial(algebra, col))
        gens.append(Automorphism(algebra, images))
    return close_group(gens, cap)


def fresh_name(base: str, taken) -> str:
    if base not in taken:
        return base
    k = 0
    while "%s%d" % (base, k) in taken:
        k += 1
    return "%s%d" % (base, k)


def orbit_coefficients(action: FiniteGroupAction, b: MultiPoly):
    """Coefficients [c_0..c_{|G|}] of prod_sigma (t - sigma b), c_top = 1."""
    algebra = action.algebra
    coeffs = [algebra.ring.one()]
    for sigma in action.elements:
        image = sigma(b)
        new = [algebra.ring.zero() for _ in range(len(coeffs) + 1)]
        for k, c in enumerate(coeffs):
            new[k + 1] = algebra.nf(new[k + 1] + c)
            new[k] = algebra.nf(new[k] - c * image)
        coeffs = new
    return coeffs  # index = power of t


def orbit_polynomial(action: FiniteGroupAction, b: MultiPoly, *,
                     var_name: str = "t", verify: bool = True) -> MultiPoly:
    """The orbit polynomial prod_{sigma in G} (t - sigma.b) over R[t]."""
    algebra = action.algebra
    name = fresh_name(var_name, set(algebra.ring.names))
    ext = algebra.ring.extend((name,))
    t_idx = ext.nvars - 1
    coeffs = orbit_coefficients(action, b)
    if verify:
        for c in coeffs[:-1]:
            if not is_invariant(action, c):
                raise InputError("orbit polynomial coefficient is not invariant")
    terms = {}
    for k, c in enumerate(coeffs):
        for m, v in c.terms.items():
            e = list(m) + [0]
            e[t_idx] = k
            terms[tuple(e)] = v
    return MultiPoly(ext, terms)


class AlgebraicGroupAction:
    """G in K^m cut out by I_G, acting via sigma^{-1}.a_i = g_i(sigma)."""

    __slots__ = ("x_algebra", "z_names", "group_ideal", "action_polys",
                 "xz_ring", "z_ring", "_gb_xz", "_gb_z")

    def __init__(self, x_algebra: PresentedAlgebra, z_names, group_ideal,
                 action_polys, *, identity_point=None):
        self.x_algebra = x_algebra
        self.z_names = tuple(z_names)
        clash = set(self.z_names) & set(x_algebra.ring.names)
        if clash:
            raise InputError("z variables collide with x variables: %r"
                             % sorted(clash))
        dom = x_algebra.ring.domain
        self.z_ring = PolyRing(dom, self.z_names)
        self.xz_ring = x_algebra.ring.extend(self.z_names)
        self.group_ideal = tuple(self._to_z(p) for p in group_ideal)
        self.action_polys = tuple(self._to_xz(p) for p in action_polys)
        if len(self.action_polys) != x_algebra.ring.nvars:
            raise InputError("need one action polynomial per x variable")
        self._gb_xz = None
        self._gb_z = None
        if identity_point is not None:
            self._check_identity(identity_point)

    def _to_z(self, p: MultiPoly) -> MultiPoly:
        if p.ring == self.z_ring:
            return p
        if p.ring == self.xz_ring:
            nx = self.x_algebra.ring.nvars
            if any(i < nx for i in p.support_vars()):
                raise InputError("group ideal polynomial involves x variables")
            from .groebner import restrict_poly
            return restrict_poly(p, self.z_ring,
                                 range(nx, self.xz_ring.nvars))
        raise InputError("group ideal polynomial in an unexpected ring")

    def _to_xz(self, p: MultiPoly) -> MultiPoly:
        if p.ring == self.xz_ring:
            return p
        if p.ring == self.x_algebra.ring:
            return p.lift_vars(self.xz_ring, list(range(p.ring.nvars)))
        if p.ring == self.z_ring:
            nx = self.x_algebra.ring.nvars
            return p.lift_vars(self.xz_ring,
                               list(range(nx, self.xz_ring.nvars)))
        raise InputError("action polynomial in an unexpected ring")

    def lift_x(self, p: MultiPoly) -> MultiPoly:
        return self._to_xz(p)

    def congruence_gb(self):
        """GB of I_X + I_G inside K[x, z], for invariance congruences."""
        if self._gb_xz is None:
            gens = [self._to_xz(r) for r in self.x_algebra.relations]
            gens += [self._to_xz(g) for g in self.group_ideal]
            self._gb_xz = groebner(gens, GrevLex(), ring=self.xz_ring)
        return self._gb_xz

    def group_gb(self):
        if self._gb_z is None:
            self._gb_z = groebner(list(self.group_ideal), GrevLex(),
                                  ring=self.z_ring)
        return self._gb_z

    def substitute_action(self, f: MultiPoly) -> MultiPoly:
        """f(g_1..g_n) in K[x, z] for f in K[x]."""
        if f.ring != self.x_algebra.ring:
            raise InputError("expected an element of the x ring")
        return f.substitute(self.xz_ring, list(self.action_polys))

    def _check_identity(self, point):
        dom = self.x_algebra.ring.domain
        nx = self.x_algebra.ring.nvars
        consts = [self.xz_ring.const(dom.from_int(c) if isinstance(c, int) else c)
                  for c in point]
        if len(consts) != len(self.z_names):
            raise InputError("identity point needs one value per z variable")
        images = list(self.xz_ring.gens())[:nx]
        subs = images + consts
        for i, g in enumerate(self.action_polys):
            val = g.substitute(self.xz_ring, subs)
            diff = val - self.xz_ring.var(i)
            back = _project_x(diff, self.x_algebra)
            if not self.x_algebra.is_zero(back):
                raise InputError("identity point does not act trivially")


def _project_x(p: MultiPoly, x_algebra: PresentedAlgebra) -> MultiPoly:
    nx = x_algebra.ring.nvars
    if any(i >= nx for i in p.support_vars()):
        raise InputError("polynomial is not free of the z variables")
    from .groebner import restrict_poly
    return restrict_poly(p, x_algebra.ring, range(nx))


class GaAction:
    """Additive-group action given by g_i(x, z), z the group parameter."""

    __slots__ = ("x_algebra", "z_name", "xz_ring", "action_polys", "degrees",
                 "coeff_arrays")

    def __init__(self, x_algebra: PresentedAlgebra, z_name: str, action_polys):
        self.x_algebra = x_algebra
        if z_name in x_algebra.ring.names:
            raise InputError("z variable collides with an x variable")
        self.z_name = z_name
        self.xz_ring = x_algebra.ring.extend((z_name,))
        polys = []
        for p in action_polys:
            if p.ring == self.xz_ring:
                polys.append(p)
            elif p.ring == x_algebra.ring:
                polys.append(p.lift_vars(self.xz_ring, list(range(p.ring.nvars))))
            else:
                raise InputError("action polynomial in an unexpected ring")
        if len(polys) != x_algebra.ring.nvars:
            raise InputError("need one action polynomial per x variable")
        self.action_polys = tuple(polys)
        z_idx = self.xz_ring.nvars - 1
        self.degrees = tuple(p.degree_in(z_idx) for p in self.action_polys)
        arrays = []
        for i, p in enumerate(polys):
            d = self.degrees[i]
            coeffs = [self.x_algebra.ring.zero() for _ in range(d + 1)]
            for m, c in p.terms.items():
                k = m[z_idx]
                base = tuple(m[:z_idx])
                coeffs[d - k] = coeffs[d - k] + MultiPoly(self.x_algebra.ring,
                                                          {base: c})
            for j, cf in enumerate(coeffs):
                if self.x_algebra.is_zero(cf):
                    raise InputError(
                        "coefficient of z^%d in g_%d lies in I_X; trim the "
                        "degree or renormalize the action input" % (d - j, i + 1))
            arrays.append(tuple(coeffs))
        self.coeff_arrays = tuple(arrays)
        char = x_algebra.ring.domain.char
        ok = any(d >= 1 and (char == 0 or d % char) for d in self.degrees)
        if not ok:
            raise InputError("every z-degree is divisible by the characteristic "
                             "(or the action is trivial)")

    def substitute_action(self, f: MultiPoly) -> MultiPoly:
        if f.ring != self.x_algebra.ring:
            raise InputError("expected an element of the x ring")
        return f.substitute(self.xz_ring, list(self.action_polys))

    def congruence_gb(self):
        gens = [r.lift_vars(self.xz_ring, list(range(self.x_algebra.ring.nvars)))
                for r in self.x_algebra.relations]
        return groebner(gens, GrevLex(), ring=self.xz_ring) if gens else None


def is_invariant(action, f) -> bool:
    """Exact invariance test for polynomials or fractions under any action."""
    if isinstance(action, FiniteGroupAction):
        if isinstance(f, FractionElem):
            return all(sigma.apply_fraction(f).eq(f)
                       for sigma in action.nonidentity())
        g = action.algebra.nf(f)
        return all(action.algebra.eq(sigma(g), g)
                   for sigma in action.nonidentity())
    if isinstance(action, AlgebraicGroupAction):
        gb = action.congruence_gb()
        if isinstance(f, FractionElem):
            num, den = f.num, f.den
            lhs = action.substitute_action(num) * action.lift_x(den)
            rhs = action.lift_x(num) * action.substitute_action(den)
            return normal_form(lhs - rhs, gb).is_zero()
        diff = action.substitute_action(f) - action.lift_x(f)
        return normal_form(diff, gb).is_zero()
    if isinstance(action, GaAction):
        gb = action.congruence_gb()

        def reduce_xz(p):
            return normal_form(p, gb) if gb is not None else p

        if isinstance(f, FractionElem):
            num, den = f.num, f.den
            lift = lambda p: p.lift_vars(action.xz_ring,
                                         list(range(p.ring.nvars)))
            diff = (action.substitute_action(num) * lift(den)
                    - lift(num) * action.substitute_action(den))
            return reduce_xz(diff).is_zero()
        lifted = f.lift_vars(action.xz_ring, list(range(f.ring.nvars)))
        return reduce_xz(action.substitute_action(f) - lifted).is_zero()
    raise InputError("unknown action kind: %r" % (action,))
