"""Derksen ideals, extended Derksen ideals, and their reduced bases over L.

For a finite group the reduced basis is built either from the closed-form
interpolation basis (orbit polynomial of a trivial-stabilizer generator plus
Lagrange expressions for the remaining generators) or by intersecting the
point ideals with the tag-variable method and reducing the result over the
function field.  For algebraic groups everything reduces to eliminations in
K[x, y, z], exactly so the Groebner work happens over K and never over L.
"""

from __future__ import annotations

import random

from .actions import (AlgebraicGroupAction, FiniteGroupAction, is_invariant)
from .algebra import FracFieldDomain, FractionElem, PresentedAlgebra
from .errors import BudgetExhaustedError, ImproperIdealError, InputError
from .groebner import (GroebnerBasis, elimination_ideal, groebner,
                       intersect_ideals, krull_dimension, normal_form,
                       restrict_poly)
from .orders import Block, GrevLex, MonomialOrder, map_order
from .poly import MultiPoly, PolyRing
from .rings import QQ, ZZ


def default_y_order(ny: int, pfinite: bool) -> MonomialOrder:
    """Block [y2..yn] > [y1] for the interpolation basis, grevlex otherwise."""
    if pfinite and ny > 1:
        return Block([GrevLex(tuple(range(1, ny))), GrevLex((0,))])
    return GrevLex()


class ExtendedDerksenGB:
    """Reduced Groebner basis over L = Quot(R) of a (possibly extended)
    Derksen ideal, together with its provenance."""

    __slots__ = ("base", "y_names", "y_ring", "order_y", "basis", "tame",
                 "cross_section", "extension_polys", "gen_reps",
                 "lead_images", "source")

    def __init__(self, base: PresentedAlgebra, y_names, order_y, basis, *,
                 tame, gen_reps, cross_section=None, extension_polys=None,
                 lead_images=None, source=""):
        self.base = base
        self.y_names = tuple(y_names)
        self.y_ring = PolyRing(base.frac_domain(), self.y_names)
        self.order_y = order_y
        self.basis = list(basis)
        self.tame = tame
        self.cross_section = cross_section
        self.extension_polys = extension_polys
        self.gen_reps = list(gen_reps)
        self.lead_images = lead_images
        self.source = source
        for f in self.basis:
            if f.ring != self.y_ring:
                raise InputError("basis polynomial in the wrong ring")
            m, c = f.leading(order_y)
            if not any(m):
                raise ImproperIdealError("extended Derksen ideal is improper")
            if not c.is_one():
                raise InputError("basis is not monic")

    def discriminant(self) -> MultiPoly | None:
        """prod over pairs of (u_a - u_b)^2 for the orbit of the first
        generator; only available on the interpolation route."""
        if not self.lead_images:
            return None
        algebra = self.base
        u = self.lead_images
        disc = algebra.ring.one()
        for a in range(len(u)):
            for b in range(a + 1, len(u)):
                disc = algebra.nf(disc * (u[a] - u[b]))
        return algebra.nf(disc * disc)

    def groebner_object(self) -> GroebnerBasis:
        return GroebnerBasis(self.y_ring, self.order_y, "field", self.basis)

    def coefficients(self):
        """All coefficient fractions of all basis polynomials, in order."""
        out = []
        for f in self.basis:
            for _, c in f.sorted_terms(self.order_y):
                out.append(c)
        return out

    def representative_for(self, b: MultiPoly) -> MultiPoly:
        """A polynomial f in the y variables with f(a_1..a_n) = b.

        Valid because the generator list always contains the ambient
        variables; extra generators (a leading combination) simply stay
        unused in the representative.
        """
        positions = {}
        for pos, rep in enumerate(self.gen_reps):
            sup = rep.support_vars()
            if len(rep.terms) == 1 and len(sup) == 1:
                m, c = next(iter(rep.terms.items()))
                (v,) = sup
                if m[v] == 1 and sum(m) == 1 and self.base.ring.domain.is_one(c):
                    positions.setdefault(v, pos)
        missing = [i for i in range(self.base.ring.nvars) if i not in positions]
        if missing:
            raise InputError("generators do not contain the ambient variables")
        dom = self.y_ring.domain
        out = {}
        for m, c in self.base.nf(b).terms.items():
            e = [0] * len(self.y_names)
            for i, ei in enumerate(m):
                if ei:
                    e[positions[i]] += ei
            e = tuple(e)
            cf = dom.from_poly(self.base.ring.const(c))
            cur = out.get(e)
            out[e] = cf if cur is None else cur + cf
        return MultiPoly(self.y_ring, {m: c for m, c in out.items()
                                       if not c.is_zero()})


def frac_of(base: PresentedAlgebra, num: MultiPoly, den: MultiPoly | None = None
            ) -> FractionElem:
    """Fraction over `base` from numerator/denominator in a compatible ring."""
    ring = base.ring
    if num.ring != ring:
        num = _pull_to(num, ring)
    if den is not None and den.ring != ring:
        den = _pull_to(den, ring)
    return FractionElem(base, num, den)


def _pull_to(p: MultiPoly, ring: PolyRing) -> MultiPoly:
    """Convert a field-lifted polynomial back into `ring` (clearing content)."""
    if p.ring.names != ring.names:
        raise InputError("variable mismatch while converting coefficients")
    if p.ring.domain == ring.domain:
        return MultiPoly(ring, dict(p.terms))
    if p.ring.domain is QQ and ring.domain is ZZ:
        _, prim = p.content_primitive()
        raise InputError("cannot pull a rational polynomial into ZZ exactly")
    return p.convert(ring)


def _field_pair_to_frac(base: PresentedAlgebra, num: MultiPoly, den: MultiPoly
                        ) -> FractionElem:
    """num/den with field coefficients as a fraction over the ZZ/field base."""
    if base.ring.domain is ZZ and num.ring.domain is QQ:
        zr = base.ring
        cn, pn = num.content_primitive()
        cd, pd = den.content_primitive()
        ratio = cn / cd
        n = pn.convert(zr).scale(ratio.numerator)
        d = pd.convert(zr).scale(ratio.denominator)
        return FractionElem(base, n, d)
    return FractionElem(base, num.convert(base.ring), den.convert(base.ring))


# -- finite groups ------------------------------------------------------------


def trivial_stabilizer_generator(action: FiniteGroupAction, trials: int = 200,
                                 coeff_height: int = 5, seed: int = 0):
    """A small K-combination of the generators moved by every sigma != id."""
    algebra = action.algebra
    n = algebra.ring.nvars
    rng = random.Random(seed)

    def moved_by_all(candidate):
        return all(not algebra.eq(sigma(candidate), candidate)
                   for sigma in action.nonidentity())

    tried = set()
    systematic = []
    for i in range(n):
        systematic.append(tuple(1 if j == i else 0 for j in range(n)))
    # small two-term combinations next: they keep the interpolation data small
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for cj in (1, 2, -1):
                systematic.append(tuple(1 if t == i else (cj if t == j else 0)
                                        for t in range(n)))
    systematic.append(tuple(range(1, n + 1)))
    systematic.append(tuple(1 for _ in range(n)))
    for t in range(trials):
        if t < len(systematic):
            coeffs = systematic[t]
        else:
            coeffs = tuple(rng.randint(-coeff_height, coeff_height)
                           for _ in range(n))
        if coeffs in tried or not any(coeffs):
            continue
        tried.add(coeffs)
        cand = algebra.ring.zero()
        for i, c in enumerate(coeffs):
            if c:
                cand = cand + algebra.ring.var(i).scale(
                    algebra.ring.domain.from_int(c))
        if moved_by_all(cand):
            return cand
    return None


def _synthetic_quotient(coeffs, u, algebra):
    """Quotient of a monic polynomial (ascending coefficients) by (t - u)."""
    g = len(coeffs) - 1
    q = [algebra.ring.zero()] * g
    q[g - 1] = coeffs[g]
    for k in range(g - 1, 0, -1):
        q[k - 1] = algebra.nf(coeffs[k] + u * q[k])
    return q  # ascending coefficients of the degree g-1 quotient


def derksen_finite(action: FiniteGroupAction, order_y: MonomialOrder | None = None,
                   *, route: str = "auto", seed: int = 0,
                   y_prefix: str = "y") -> ExtendedDerksenGB:
    """Reduced Groebner basis over L of the Derksen ideal of a finite action.

    route = "pfinite" forces the closed-form interpolation basis (requires a
    trivial-stabilizer generator, adding one as a leading combination when
    needed); "intersect" forces the tag-variable intersection; "auto" prefers
    the closed form and falls back.
    """
    algebra = action.algebra
    if not algebra.prime_claimed:
        raise InputError("Derksen basis over L needs a prime_claimed algebra")
    n = algebra.ring.nvars
    gens = [algebra.ring.var(i) for i in range(n)]

    lead = None
    gen_list = gens
    if route in ("auto", "pfinite"):
        for i in range(n):
            cand = gens[i]
            if all(not algebra.eq(sigma(cand), cand)
                   for sigma in action.nonidentity()):
                lead = cand
                gen_list = [gens[i]] + gens[:i] + gens[i + 1:]
                break
        else:
            combo = trivial_stabilizer_generator(action, seed=seed)
            if combo is not None:
                lead = combo
                gen_list = [combo] + gens
            elif route == "pfinite":
                raise InputError("no trivial-stabilizer generator found")
    if lead is not None:
        # the closed form is a reduced basis only for orders with the
        # orbit-variable block minimal; other orders go through the
        # intersection route, which honours any order
        compatible = (order_y is None
                      or order_y == default_y_order(len(gen_list), True))
        if route == "pfinite" and not compatible:
            raise InputError("the interpolation basis requires the block "
                             "order with the orbit variable minimal")
        if not compatible and route == "auto":
            gen_list = gens
            lead = None
    if route == "intersect":
        # keep the generator list of the closed form so both routes compute
        # the reduced basis of the same ideal
        return _derksen_by_intersection(action, gen_list, order_y, y_prefix)
    if lead is None:
        return _derksen_by_intersection(action, gen_list, order_y, y_prefix)
    return _derksen_pfinite(action, gen_list, order_y, y_prefix)


def _y_names(prefix, count, taken):
    names = []
    k = 1
    while len(names) < count:
        cand = "%s%d" % (prefix, k)
        if cand not in taken:
            names.append(cand)
        k += 1
    return tuple(names)


def _derksen_pfinite(action, gen_list, order_y, y_prefix) -> ExtendedDerksenGB:
    algebra = action.algebra
    m = len(gen_list)
    names = _y_names(y_prefix, m, set(algebra.ring.names))
    order = order_y or default_y_order(m, pfinite=True)
    lead = gen_list[0]
    u = [sigma(lead) for sigma in action.elements]
    g = len(u)
    for a in range(g):
        for b in range(a + 1, g):
            if algebra.is_zero(u[a] - u[b]):
                raise InputError("leading generator does not have trivial "
                                 "stabilizer")
    # orbit polynomial of the lead, ascending coefficients over R
    coeffs = [algebra.ring.one()]
    for ua in u:
        new = [algebra.ring.zero()] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            new[k + 1] = new[k + 1] + c
            new[k] = new[k] - c * ua
        coeffs = [algebra.nf(c) for c in new]
    dom_l = algebra.frac_domain()
    y_ring = PolyRing(dom_l, names)

    def ypoly(coeff_map):
        return MultiPoly(y_ring, {m_: c for m_, c in coeff_map.items()
                                  if not c.is_zero()})

    basis = []
    e0 = [0] * m
    f1_terms = {}
    for k, c in enumerate(coeffs):
        e = list(e0)
        e[0] = k
        f1_terms[tuple(e)] = dom_l.from_poly(c)
    basis.append(ypoly(f1_terms))

    # Newton interpolation through (u_a, sigma_a(gen)): divided differences
    # keep every intermediate fraction small, unlike the Lagrange sum whose
    # partial denominators grow toward the discriminant
    u_frac = [dom_l.from_poly(ua) for ua in u]
    newton = [[dom_l.one]]  # coefficients (ascending in t) of prod (t - u_j)
    for a in range(g - 1):
        prev = newton[-1]
        nxt = [dom_l.zero] * (len(prev) + 1)
        for k, c in enumerate(prev):
            nxt[k + 1] = nxt[k + 1] + c
            nxt[k] = nxt[k] - c * u_frac[a]
        newton.append(nxt)

    for pos in range(1, m):
        gen = gen_list[pos]
        dd = [dom_l.from_poly(algebra.nf(sigma(gen)))
              for sigma in action.elements]
        lead_dd = [dd[0]]
        for k in range(1, g):
            dd = [(dd[a + 1] - dd[a]) * (u_frac[a + k] - u_frac[a]).invert()
                  for a in range(len(dd) - 1)]
            lead_dd.append(dd[0])
        t = [dom_l.zero] * g
        for k in range(g):
            if lead_dd[k].is_zero():
                continue
            for j, c in enumerate(newton[k]):
                t[j] = t[j] + c * lead_dd[k]
        terms = {}
        e = list(e0)
        e[pos] = 1
        terms[tuple(e)] = dom_l.one
        for k in range(g):
            if not t[k].is_zero():
                e = list(e0)
                e[0] = k
                terms[tuple(e)] = -t[k]
        basis.append(ypoly(terms))

    return ExtendedDerksenGB(algebra, names, order, basis, tame=True,
                             gen_reps=gen_list, lead_images=u,
                             source="pfinite")


def _derksen_by_intersection(action, gen_list, order_y, y_prefix
                             ) -> ExtendedDerksenGB:
    algebra = action.algebra
    field_action = action
    if algebra.ring.domain is ZZ:
        field_action = action.with_domain(QQ)
    falg = field_action.algebra
    nx = falg.ring.nvars
    m = len(gen_list)
    freps = [p.convert(falg.ring) if p.ring.domain != falg.ring.domain else p
             for p in gen_list]
    names = _y_names(y_prefix, m, set(falg.ring.names))
    order = order_y or default_y_order(m, pfinite=True)
    ext = falg.ring.extend(names)
    xmap = list(range(nx))
    ideals = []
    for sigma in field_action.elements:
        gens_sigma = [r.lift_vars(ext, xmap) for r in falg.relations]
        for i in range(m):
            img = falg.nf(sigma(freps[i]))
            gens_sigma.append(ext.var(nx + i) - img.lift_vars(ext, xmap))
        ideals.append(gens_sigma)
    mixed = intersect_ideals(ideals)
    y_idx = list(range(nx, nx + m))
    block = Block([map_order(order, y_idx, m), GrevLex(tuple(range(nx)))])
    gb = groebner(mixed, block, ring=ext)
    return reduce_over_function_field(list(gb.generators), falg, algebra,
                                      names, order, gen_reps=gen_list,
                                      x_count=nx, source="intersect")


def reduce_over_function_field(mixed_gens, field_algebra: PresentedAlgebra,
                               out_algebra: PresentedAlgebra, y_names,
                               order_y: MonomialOrder, *, gen_reps,
                               x_count: int, tame=True, cross_section=None,
                               extension_polys=None, source="") -> ExtendedDerksenGB:
    """Split a y>x block basis and interreduce the y-part over L = Quot(R).

    mixed_gens live in K'[x_1..x_nx, y_1..y_ny] with K' a field; the result
    is the reduced monic basis over Quot(out_algebra), with coefficient
    cross-multiplication done fraction-free and every coefficient normalized
    through NF modulo the x-part basis.
    """
    if not mixed_gens:
        return ExtendedDerksenGB(out_algebra, y_names, order_y, [],
                                 tame=tame, gen_reps=gen_reps,
                                 cross_section=cross_section,
                                 extension_polys=extension_polys, source=source)
    ext = mixed_gens[0].ring
    nx = x_count
    ny = ext.nvars - nx
    if ny != len(y_names):
        raise InputError("y variable count mismatch")
    xring = PolyRing(ext.domain, ext.names[:nx])
    g_x, g_y = [], []
    for p in mixed_gens:
        if p.support_vars() <= set(range(nx)):
            g_x.append(restrict_poly(p, xring, range(nx)))
        else:
            g_y.append(p)
    gb_x = groebner(g_x, GrevLex(), ring=xring) if g_x else None

    def nf_x(c: MultiPoly) -> MultiPoly:
        return normal_form(c, gb_x) if gb_x is not None else c

    y_order_key = None

    def split(p: MultiPoly):
        """K'[x,y] polynomial -> dict[y-mono -> x-coefficient], NF'd."""
        parts: dict[tuple, dict] = {}
        for m, c in p.terms.items():
            ym = tuple(m[nx:])
            xm = tuple(m[:nx])
            parts.setdefault(ym, {})[xm] = c
        out = {}
        for ym, d in parts.items():
            cf = nf_x(MultiPoly(xring, d))
            if not cf.is_zero():
                out[ym] = cf
        return out

    from .orders import key_function
    ykey = key_function(order_y, ny)

    def lead_y(fmap):
        return max(fmap, key=ykey)

    work = [split(p) for p in g_y]
    work = [f for f in work if f]

    changed = True
    while changed:
        changed = False
        for idx in range(len(work)):
            f = work[idx]
            if f is None:
                continue
            while True:
                best = None
                for jdx, g in enumerate(work):
                    if jdx == idx or g is None:
                        continue
                    glm = lead_y(g)
                    for m in f:
                        if all(a >= b for a, b in zip(m, glm)):
                            if best is None or ykey(m) > ykey(best[0]):
                                best = (m, jdx)
                if best is None:
                    break
                m, jdx = best
                g = work[jdx]
                glm = lead_y(g)
                glc = g[glm]
                c = f[m]
                shift = tuple(a - b for a, b in zip(m, glm))
                new: dict = {}
                for ym, cf in f.items():
                    new[ym] = cf * glc
                for ym, cf in g.items():
                    tm = tuple(a + b for a, b in zip(ym, shift))
                    cur = new.get(tm)
                    delta = cf * c
                    new[tm] = (cur - delta) if cur is not None else -delta
                f = {}
                for ym, cf in new.items():
                    cf = nf_x(cf)
                    if not cf.is_zero():
                        f[ym] = cf
                changed = True
                if not f:
                    break
            work[idx] = f if f else None
    reduced = [f for f in work if f]

    dom_l = out_algebra.frac_domain()
    y_ring = PolyRing(dom_l, y_names)
    basis = []
    for f in reduced:
        lm = lead_y(f)
        if not any(lm):
            raise ImproperIdealError("extended Derksen ideal is improper")
        lc = f[lm]
        terms = {}
        for ym, cf in f.items():
            if ym == lm:
                terms[ym] = dom_l.one
            else:
                terms[ym] = _field_pair_to_frac(out_algebra, cf, lc)
        basis.append(MultiPoly(y_ring, terms))
    basis.sort(key=lambda p: ykey(p.leading(order_y)[0]))
    return ExtendedDerksenGB(out_algebra, y_names, order_y, basis, tame=tame,
                             gen_reps=gen_reps, cross_section=cross_section,
                             extension_polys=extension_polys, source=source)


# -- algebraic groups ----------------------------------------------------------


def _hat_ring(action: AlgebraicGroupAction, y_names):
    """K[x, y, z] with the block order z > y > x used by the eliminations."""
    xr = action.x_algebra.ring
    nx = xr.nvars
    ny = len(y_names)
    ext = PolyRing(xr.domain, xr.names + tuple(y_names) + action.z_names)
    return ext, nx, ny


def derksen_elimination(action: AlgebraicGroupAction,
                        order_y: MonomialOrder | None = None, *,
                        y_prefix: str = "y", constraints=(),
                        cross_section=None):
    """Eliminate z from (I_X, I_G, y_i - g_i [, constraints]) in K[x,y,z].

    Returns (mixed generators in K[x,y]-part, ExtendedDerksenGB).  The
    tameness flag of the result is the caller's business; the plain Derksen
    ideal (no constraints) is tame by construction.
    """
    xalg = action.x_algebra
    nx = xalg.ring.nvars
    names = _y_names(y_prefix, nx, set(xalg.ring.names) | set(action.z_names))
    order = order_y or GrevLex()
    ext, nx_, ny = _hat_ring(action, names)
    nz = len(action.z_names)
    x_map = list(range(nx))
    y_idx = list(range(nx, nx + ny))
    z_idx = list(range(nx + ny, nx + ny + nz))
    gens = [r.lift_vars(ext, x_map) for r in xalg.relations]
    for p in action.group_ideal:
        gens.append(p.lift_vars(ext, z_idx))
    xz_map = x_map + z_idx
    for i, g in enumerate(action.action_polys):
        gens.append(ext.var(nx + i) - g.lift_vars(ext, xz_map))
    for f in constraints:
        gens.append(f.lift_vars(ext, y_idx))
    block = Block([GrevLex(tuple(z_idx)), map_order(order, y_idx, ny),
                   GrevLex(tuple(x_map))])
    gb = groebner(gens, block, ring=ext)
    keep = set(range(nx + ny))
    mixed_ext = [g for g in gb.generators if g.support_vars() <= keep]
    sub = PolyRing(ext.domain, ext.names[:nx + ny])
    mixed = [restrict_poly(g, sub, range(nx + ny)) for g in mixed_ext]
    edg = reduce_over_function_field(
        mixed, xalg, xalg, names, order,
        gen_reps=[xalg.ring.var(i) for i in range(nx)], x_count=nx,
        tame=not constraints, cross_section=cross_section,
        extension_polys=list(constraints) or None,
        source="elimination")
    return mixed, edg


def verify_tameness(action: AlgebraicGroupAction, f_list) -> bool:
    """Check condition: K[x] part of (I_X, I_G, f_i(g)) is contained in I_X.

    f_list lives in a pure y-ring of the same arity as x.  In the domain
    case this is exactly the density-of-G.Z condition.
    """
    xalg = action.x_algebra
    nx = xalg.ring.nvars
    ext = action.xz_ring
    gens = [r.lift_vars(ext, list(range(nx))) for r in xalg.relations]
    nzoff = nx
    z_idx = list(range(nzoff, ext.nvars))
    for p in action.group_ideal:
        gens.append(p.lift_vars(ext, z_idx))
    images = list(action.action_polys)
    for f in f_list:
        gens.append(f.substitute(ext, images))
    elim = elimination_ideal(gens, list(range(nx)), ring=ext)
    for p in elim:
        q = restrict_poly(p, xalg.ring, range(nx))
        if not xalg.is_zero(q):
            return False
    return True


def extend_with_constraints(action: AlgebraicGroupAction, f_list, *,
                            order_y: MonomialOrder | None = None,
                            y_prefix: str = "y"):
    """Tamely/nontamely extended Derksen ideal from constraints in the y's.

    Returns (edg, tameness_verified).  When tameness fails but the x-part of
    the extension still meets I_X only, the extended ideal is returned with
    tame=False; otherwise the extension is improper and raises.
    """
    f_list = list(f_list)
    if not f_list:
        mixed, edg = derksen_elimination(action, order_y, y_prefix=y_prefix)
        return edg, True
    tame_ok = verify_tameness(action, f_list)
    mixed, edg = derksen_elimination(action, order_y, y_prefix=y_prefix,
                                     constraints=f_list)
    if tame_ok:
        edg.tame = True
        return edg, True
    edg.tame = False
    return edg, False


def cross_section_search(action: AlgebraicGroupAction, d: int, *,
                         eta=None, budget: int = 2000):
    """First (in graded enumeration) index set and constants cutting a
    cross-section: eliminating z from (I_X, I_G, g_{i_j} - beta_j) stays
    inside I_X."""
    if d < 0:
        raise InputError("cross-section dimension must be >= 0")
    if d == 0:
        return (), ()
    xalg = action.x_algebra
    dom = xalg.ring.domain
    if eta is None:
        if dom.char == 0:
            eta = lambda k: dom.from_int(k)
        else:
            eta = lambda k: dom.from_int(k)  # injective only up to p; capped
    n = xalg.ring.nvars
    nx = n
    ext = action.xz_ring
    z_idx = list(range(nx, ext.nvars))
    base_gens = [r.lift_vars(ext, list(range(nx))) for r in xalg.relations]
    base_gens += [p.lift_vars(ext, z_idx) for p in action.group_ideal]
    import itertools
    tried = 0
    for s in itertools.count(0):
        if tried >= budget:
            break
        for comp in _compositions(d, s):
            for indices in itertools.combinations(range(n), d):
                tried += 1
                if tried > budget:
                    raise BudgetExhaustedError(
                        "cross-section search budget exhausted")
                betas = tuple(eta(a) for a in comp)
                gens = list(base_gens)
                ok_zero = True
                for idx, beta in zip(indices, betas):
                    gens.append(action.action_polys[idx] - ext.const(beta))
                elim = elimination_ideal(gens, list(range(nx)), ring=ext)
                for p in elim:
                    q = restrict_poly(p, xalg.ring, range(nx))
                    if not xalg.is_zero(q):
                        ok_zero = False
                        break
                if ok_zero:
                    return indices, betas
    raise BudgetExhaustedError("cross-section search budget exhausted")


def _compositions(d: int, s: int):
    """All tuples of d nonnegative integers summing to s, lexicographic."""
    if d == 0:
        if s == 0:
            yield ()
        return
    for first in range(s + 1):
        for rest in _compositions(d - 1, s - first):
            yield (first,) + rest


def generic_orbit_dimension(action: AlgebraicGroupAction) -> int:
    """Maximal G-orbit dimension: dim of the x,y-elimination minus dim X."""
    xalg = action.x_algebra
    if not xalg.ring.domain.is_field:
        raise InputError("orbit dimension needs field coefficients")
    nx = xalg.ring.nvars
    names = _y_names("y", nx, set(xalg.ring.names) | set(action.z_names))
    ext, nx_, ny = _hat_ring(action, names)
    nz = len(action.z_names)
    x_map = list(range(nx))
    z_idx = list(range(nx + ny, nx + ny + nz))
    gens = [r.lift_vars(ext, x_map) for r in xalg.relations]
    gens += [p.lift_vars(ext, z_idx) for p in action.group_ideal]
    for i, g in enumerate(action.action_polys):
        gens.append(ext.var(nx + i) - g.lift_vars(ext, x_map + z_idx))
    elim = elimination_ideal(gens, list(range(nx + ny)), ring=ext)
    sub = PolyRing(ext.domain, ext.names[:nx + ny])
    elim_sub = [restrict_poly(g, sub, range(nx + ny)) for g in elim]
    dim_total = krull_dimension(elim_sub, ring=sub)
    dim_x = krull_dimension(list(xalg.relations), ring=xalg.ring)
    return dim_total - dim_x


# -- shared checks -------------------------------------------------------------


def coefficients_invariant(edg: ExtendedDerksenGB, action) -> bool:
    """Every basis coefficient is fixed by the group (exact fraction test)."""
    for c in edg.coefficients():
        if not is_invariant(action, c):
            return False
    return True


def derksen_membership_ok(edg: ExtendedDerksenGB, action: FiniteGroupAction) -> bool:
    """Substituting y_i -> sigma(a_i) into every basis element gives zero."""
    algebra = edg.base
    dom_l = algebra.frac_domain()
    for sigma in action.elements:
        images = [dom_l.from_poly(sigma(rep)) for rep in edg.gen_reps]
        for f in edg.basis:
            acc = dom_l.zero
            for m, c in f.terms.items():
                piece = c
                for i, e in enumerate(m):
                    for _ in range(e):
                        piece = piece * images[i]
                acc = acc + piece
            if not acc.is_zero():
                return False
    return True


def edgb_equal(a: ExtendedDerksenGB, b: ExtendedDerksenGB) -> bool:
    """Equality as reduced bases over L (coefficientwise fraction equality)."""
    if a.y_names != b.y_names or len(a.basis) != len(b.basis):
        return False
    for f, g in zip(a.basis, b.basis):
        if set(f.terms) != set(g.terms):
            return False
        for m, c in f.terms.items():
            if not c.eq(g.terms[m]):
                return False
    return True
