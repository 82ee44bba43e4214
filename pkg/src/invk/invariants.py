"""Top-level invariant-theory algorithms.

Everything here composes the Derksen-ideal layer with the Groebner kernel:
invariant fields from tame bases, localized invariant rings, the
unlocalization loop (general and graded), finite-group invariant rings over
Zacharias coefficients, the non-domain construction, additive-group
localizations, the cross-section localization for algebraic groups, and the
reductive master algorithm (character branch excluded by design).
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .actions import (AlgebraicGroupAction, FiniteGroupAction, GaAction,
                      is_invariant)
from .algebra import (FractionElem, PresentedAlgebra, clear_denominators,
                      exact_divide, squarefree_part)
from .derksen import (ExtendedDerksenGB, cross_section_search,
                      derksen_elimination, derksen_finite, frac_of,
                      generic_orbit_dimension, reduce_over_function_field,
                      _y_names)
from .errors import (BudgetExhaustedError, InputError, UnsupportedBranchError)
from .groebner import (GroebnerBasis, elimination_ideal, groebner, membership,
                       normal_form, restrict_poly)
from .linalg import nullspace, solve
from .orders import Block, GrevLex
from .poly import MultiPoly, PolyRing, all_monomials_up_to, mono_divides
from .rings import QQ, ZZ

DEFAULT_UNLOCALIZE_ROUNDS = 64
DEFAULT_GRADED_DEGREE_CAP = 40
DEFAULT_LOCALIZER_DEGREE_CAP = 12
DEFAULT_CLEAR_POWER_CAP = 24


class LocalizedInvariantRing:
    """Invariants a, b_1..b_k with R^G_a = K[a^-1, a, b_1..b_k]."""

    __slots__ = ("algebra", "a", "gens", "source")

    def __init__(self, algebra: PresentedAlgebra, a: MultiPoly, gens, source=""):
        self.algebra = algebra
        self.a = a
        self.gens = list(gens)
        self.source = source

    def __repr__(self):
        return "LocalizedInvariantRing(a=%s, gens=[%s])" % (
            self.a, ", ".join(str(g) for g in self.gens))


class InvariantRingResult:
    """Generators of R^G plus the ideal of relations between them."""

    __slots__ = ("algebra", "gens", "relation_ring", "relations", "minimality")

    def __init__(self, algebra, gens, relation_ring, relations, minimality=False):
        self.algebra = algebra
        self.gens = list(gens)
        self.relation_ring = relation_ring
        self.relations = list(relations)
        self.minimality = minimality

    def __repr__(self):
        return "InvariantRingResult(gens=[%s])" % ", ".join(
            str(g) for g in self.gens)


# -- coefficient algebras and invariant fields --------------------------------


def coefficient_algebra(edg: ExtendedDerksenGB):
    """Non-scalar coefficients of the basis, deduplicated by fraction equality."""
    out = []
    for c in edg.coefficients():
        if c.scalar_value() is not None:
            continue
        if any(c.eq(o) for o in out):
            continue
        out.append(c)
    return out


def invariant_field(edg: ExtendedDerksenGB):
    """Generators of L^G = Quot(A); only certified for tame bases."""
    if not edg.tame:
        raise InputError("invariant_field needs a tamely extended basis")
    return coefficient_algebra(edg)


# -- localized invariant rings (finite route) ----------------------------------


def _orbit_product(action: FiniteGroupAction, h: MultiPoly) -> MultiPoly:
    algebra = action.algebra
    out = algebra.ring.one()
    for sigma in action.elements:
        out = algebra.nf(out * sigma(h))
    return out


def _pair_orbit_factors(action: FiniteGroupAction, lead_images):
    """Invariant divisors of the discriminant: products over G-orbits of the
    pairwise differences, squared when the bare product is not invariant."""
    algebra = action.algebra
    g = len(lead_images)
    diffs = {}
    for a in range(g):
        for b in range(a + 1, g):
            diffs[(a, b)] = algebra.nf(lead_images[a] - lead_images[b])
    # index permutation induced by each sigma on the image list
    key_of = {}
    for i, u in enumerate(lead_images):
        key_of[u.frozen()] = i
    perm_list = []
    for sigma in action.elements:
        perm = []
        for u in lead_images:
            perm.append(key_of[algebra.nf(sigma(u)).frozen()])
        perm_list.append(perm)
    unseen = set(diffs)
    orbits = []
    while unseen:
        seed = min(unseen)
        orbit = set()
        stack = [seed]
        while stack:
            pair = stack.pop()
            if pair in orbit:
                continue
            orbit.add(pair)
            unseen.discard(pair)
            for perm in perm_list:
                a, b = perm[pair[0]], perm[pair[1]]
                stack.append((min(a, b), max(a, b)))
        orbits.append(sorted(orbit))
    factors = []
    for orbit in orbits:
        prod = algebra.ring.one()
        for pair in orbit:
            prod = algebra.nf(prod * diffs[pair])
        if not is_invariant(action, prod):
            prod = algebra.nf(prod * prod)
        factors.append(prod)
    return factors


def _clears_all(coeffs, a, algebra, k_max):
    cleared = []
    for c in coeffs:
        try:
            _, r = clear_denominators(c, a, k_max)
        except InputError:
            return None
        cleared.append(r)
    return cleared


def localized_invariant_ring(edg: ExtendedDerksenGB,
                             action: FiniteGroupAction | None = None, *,
                             supplied_a: MultiPoly | None = None,
                             k_max: int = DEFAULT_CLEAR_POWER_CAP,
                             divisor_search: bool = True) -> LocalizedInvariantRing:
    """Localizer a and cleared generators b_j with R^G_a = K[a^-1, a, b_j].

    Tries a = 1 first (all coefficients already in R); otherwise searches
    invariant divisors built from orbit products of pairwise differences,
    the orbit product of the common denominator, and the full discriminant,
    picking the least-degree candidate that clears every coefficient.
    """
    algebra = edg.base
    coeffs = coefficient_algebra(edg)
    one = algebra.ring.one()
    cleared = _clears_all(coeffs, one, algebra, 0)
    if cleared is not None:
        return LocalizedInvariantRing(algebra, one, _dedup_elems(algebra, cleared),
                                      source=edg.source)
    if supplied_a is not None:
        cleared = _clears_all(coeffs, supplied_a, algebra, k_max)
        if cleared is None:
            raise InputError("supplied localizer does not clear the coefficients")
        return LocalizedInvariantRing(algebra, supplied_a,
                                      _dedup_elems(algebra, cleared),
                                      source=edg.source)
    if action is None:
        raise InputError("need the action (or a supplied localizer) to search")
    candidates = []
    if edg.lead_images is not None and divisor_search:
        for f in _pair_orbit_factors(action, edg.lead_images):
            candidates.append(f)
        for f, g in itertools.combinations(list(candidates), 2):
            candidates.append(algebra.nf(f * g))
    dens = []
    for c in coeffs:
        if not any(algebra.eq(c.den, d) for d in dens):
            dens.append(c.den)
    common = algebra.ring.one()
    for d in dens:
        common = algebra.nf(common * d)
    candidates.append(_orbit_product(action, common))
    if edg.lead_images is not None and len(action) <= 6:
        candidates.append(edg.discriminant())
    seen = set()
    uniq = []
    for cand in candidates:
        cand = algebra.nf(cand)
        if cand.is_zero() or cand.is_const():
            continue
        key = cand.frozen()
        if key in seen:
            continue
        seen.add(key)
        uniq.append(cand)
    uniq.sort(key=lambda p: (p.total_degree(), len(p.terms)))
    for cand in uniq:
        if not is_invariant(action, cand):
            continue
        cleared = _clears_all(coeffs, cand, algebra, k_max)
        if cleared is not None:
            return LocalizedInvariantRing(algebra, cand,
                                          _dedup_elems(algebra, cleared),
                                          source=edg.source)
    raise BudgetExhaustedError(
        "no invariant localizer cleared the coefficients: either "
        "Quot(R^G) != L^G for this action, or the search budget "
        "(k_max=%d) is too small" % k_max)


def _dedup_elems(algebra: PresentedAlgebra, elems):
    dom = algebra.ring.domain
    out = []
    for e in elems:
        e = algebra.nf(e)
        if e.is_zero() or e.is_const():
            continue
        if dom.is_field:
            e = e.monic()
        elif dom is ZZ and e.leading(GrevLex())[1] < 0:
            e = -e
        if any(algebra.eq(e, o) or algebra.eq(-e, o) for o in out):
            continue
        out.append(e)
    return out


# -- invariantization and rewriting --------------------------------------------


class InvariantizationMap:
    """phi sending ring elements to invariants; identity on R^G.

    Groebner flavour: phi(b) = NF(f)(y=0) for any representative f of b.
    Substitution flavour (additive group): a ring homomorphism given by the
    rational images of the variables.
    """

    __slots__ = ("kind", "edg", "images")

    def __init__(self, *, edg: ExtendedDerksenGB | None = None, images=None):
        if edg is not None:
            self.kind = "groebner"
            self.edg = edg
            self.images = None
        elif images is not None:
            self.kind = "substitution"
            self.edg = None
            self.images = list(images)
        else:
            raise InputError("empty invariantization map")

    def apply(self, b: MultiPoly) -> FractionElem:
        if self.kind == "substitution":
            algebra = self.images[0].algebra
            dom = algebra.frac_domain()
            acc = dom.zero
            for m, c in b.terms.items():
                piece = dom.from_poly(algebra.ring.const(c))
                for i, e in enumerate(m):
                    for _ in range(e):
                        piece = piece * self.images[i]
                acc = acc + piece
            return acc
        edg = self.edg
        f = edg.representative_for(b)
        nf = normal_form(f, edg.groebner_object())
        zero_mono = (0,) * len(edg.y_names)
        c = nf.terms.get(zero_mono)
        dom = edg.base.frac_domain()
        return c if c is not None else dom.zero


def invariantize(mapping: InvariantizationMap, b: MultiPoly) -> FractionElem:
    return mapping.apply(b)


class RewriteContext:
    """Data for rewriting invariants as polynomials in named invariants."""

    __slots__ = ("edg", "t_ring", "t_images", "lifted")

    def __init__(self, edg: ExtendedDerksenGB, t_prefix: str = "t"):
        self.edg = edg
        coeffs = coefficient_algebra(edg)
        names = tuple("%s%d" % (t_prefix, i + 1) for i in range(len(coeffs)))
        dom = edg.base.ring.domain
        tdom = QQ if dom is ZZ else dom
        self.t_ring = PolyRing(tdom, names)
        self.t_images = coeffs
        lifted = []
        for f in edg.basis:
            entry = {}
            for m, c in f.terms.items():
                sc = c.scalar_value()
                if sc is not None:
                    val = (Fraction(sc) if tdom is QQ else sc)
                    entry[m] = self.t_ring.const(
                        tdom.from_fraction(val.numerator, val.denominator)
                        if tdom is QQ else val)
                    continue
                pos = next(i for i, img in enumerate(coeffs) if img.eq(c))
                entry[m] = self.t_ring.var(pos)
            lifted.append(entry)
        self.lifted = lifted

    def evaluate(self, g0: MultiPoly) -> FractionElem:
        """psi(g0): substitute the invariant images for the t symbols."""
        dom = self.edg.base.frac_domain()
        acc = dom.zero
        base_ring = self.edg.base.ring
        for m, c in g0.terms.items():
            if base_ring.domain is ZZ:
                piece = FractionElem(self.edg.base,
                                     base_ring.const(c.numerator),
                                     base_ring.const(c.denominator))
            else:
                piece = dom.from_poly(base_ring.const(c))
            for i, e in enumerate(m):
                for _ in range(e):
                    piece = piece * self.t_images[i]
            acc = acc + piece
        return acc


def rewrite_invariant(ctx: RewriteContext, b: MultiPoly):
    """Rewrite b in the named invariants, or report non-invariance.

    Returns ("invariant", g0) with psi(g0) = b exactly, or
    ("not_invariant", phi_value) with the invariantization value as witness.
    """
    edg = ctx.edg
    f_rep = edg.representative_for(b)
    ny = len(edg.y_names)
    ykey = edg.y_ring.key_function(edg.order_y)
    tring = ctx.t_ring

    # f as dict y-mono -> K[t] coefficient
    work: dict[tuple, MultiPoly] = {}
    for m, c in f_rep.terms.items():
        sc = c.scalar_value()
        if sc is None:
            raise InputError("representative has non-scalar coefficients")
        val = Fraction(sc)
        work[m] = tring.const(tring.domain.from_fraction(val.numerator,
                                                         val.denominator))
    lifts = ctx.lifted
    leads = [max(e, key=ykey) for e in lifts]
    while True:
        best = None
        for m in work:
            for gi, glm in enumerate(leads):
                if mono_divides(glm, m):
                    if best is None or ykey(m) > ykey(best[0]):
                        best = (m, gi)
        if best is None:
            break
        m, gi = best
        g = lifts[gi]
        glm = leads[gi]
        c = work[m]
        shift = tuple(a - b_ for a, b_ in zip(m, glm))
        for ym, cf in g.items():
            tm = tuple(a + b_ for a, b_ in zip(ym, shift))
            cur = work.get(tm, tring.zero())
            new = cur - cf * c
            if new.is_zero():
                work.pop(tm, None)
            else:
                work[tm] = new
    zero_mono = (0,) * ny
    g0 = work.get(zero_mono, tring.zero())
    value = ctx.evaluate(g0)
    target = edg.base.frac_domain().from_poly(edg.base.nf(b))
    if value.eq(target):
        return ("invariant", g0)
    return ("not_invariant", value)


# -- unlocalization (general, over Zacharias K) ---------------------------------


def _fresh_names(prefix, count, taken):
    out = []
    k = 1
    while len(out) < count:
        cand = "%s%d" % (prefix, k)
        if cand not in taken:
            out.append(cand)
        k += 1
    return tuple(out)


def unlocalize(algebra: PresentedAlgebra, b_gens, a: MultiPoly, *,
               max_rounds: int = DEFAULT_UNLOCALIZE_ROUNDS,
               z_prefix: str = "z") -> InvariantRingResult:
    """Ascending chain B_{k+1} = <a^-1 B_k ∩ R> until a^-1 B ∩ R ⊆ B.

    Caller contract: R^G_a = B_a (or, in the generalized reading, the result
    is R ∩ B_a provided multiplication by a is injective on R).  Returns the
    final generators and the ideal of relations between them.
    """
    if not algebra.ring.domain.is_field and algebra.ring.domain is not ZZ:
        raise InputError("unlocalize needs a Zacharias coefficient ring")
    gens = _dedup_elems(algebra, list(b_gens))
    a = algebra.nf(a)
    if a.is_zero():
        raise InputError("localizer is zero in R")
    a_const = a.is_const()
    if not a_const and not any(algebra.eq(a, g) for g in gens):
        gens = [a] + gens
    xring = algebra.ring
    nx = xring.nvars
    for _round in range(max_rounds + 1):
        m = len(gens)
        z_names = _fresh_names(z_prefix, m, set(xring.names))
        ext = xring.extend(z_names)
        xmap = list(range(nx))
        lhat = [r.lift_vars(ext, xmap) for r in algebra.relations]
        for i, f in enumerate(gens):
            lhat.append(ext.var(nx + i) - f.lift_vars(ext, xmap))
        order = Block([GrevLex(tuple(range(nx))),
                       GrevLex(tuple(range(nx, ext.nvars)))])
        zring = PolyRing(xring.domain, z_names)

        def zpart(basis):
            keep = set(range(nx, ext.nvars))
            return [restrict_poly(p, zring, range(nx, ext.nvars))
                    for p in basis if p.support_vars() <= keep]

        gb_l = groebner(lhat, order, ring=ext)
        relations = zpart(gb_l.generators)
        if a_const:
            g_poly = zring.const(a.const_value())
        else:
            j = next(i for i, f in enumerate(gens) if algebra.eq(f, a))
            g_poly = zring.var(j)
        mhat = lhat + [g_poly.lift_vars(ext, list(range(nx, ext.nvars)))]
        gb_m = groebner(mhat, order, ring=ext)
        m_gens = zpart(gb_m.generators)
        l_ideal = relations + [g_poly]
        gb_lz = groebner(l_ideal, GrevLex(), ring=zring)
        h_list = [h for h in m_gens if not normal_form(h, gb_lz).is_zero()]
        if not h_list:
            return InvariantRingResult(algebra, gens, zring, relations)
        if _round == max_rounds:
            break
        jprime = list(algebra.relations) + [a]
        gb_j = groebner(jprime, GrevLex(), ring=xring, track_cofactors=True)
        new_gens = []
        for h in h_list:
            hf = h.substitute(xring, [g for g in gens])
            ok, combo = membership(algebra.nf(hf), jprime, cofactors=True,
                                   gb=gb_j)
            if not ok:
                raise RuntimeError("h(f) failed to reduce to zero in J'")
            cand = algebra.nf(combo[-1])
            new_gens.append(cand)
        new_gens = _dedup_elems(algebra, new_gens)
        added = 0
        for cand in new_gens:
            if not any(algebra.eq(cand, g) for g in gens):
                gens.append(cand)
                added += 1
        if added == 0:
            raise RuntimeError("unlocalize made no progress; contract violated")
    raise BudgetExhaustedError(
        "unlocalize did not stabilize in %d rounds (invariant ring possibly "
        "not finitely generated)" % max_rounds)


# -- finite groups --------------------------------------------------------------


def finite_invariant_ring(action: FiniteGroupAction, *,
                          order_y=None, route: str = "auto", seed: int = 0,
                          max_rounds: int = DEFAULT_UNLOCALIZE_ROUNDS,
                          k_max: int = DEFAULT_CLEAR_POWER_CAP
                          ) -> InvariantRingResult:
    """Invariant ring of a finite group acting on a domain over K.

    Derksen basis over L, localizer choice, denominator clearing, then the
    unlocalization loop; termination is guaranteed since R^G is finitely
    generated over a Noetherian K.
    """
    algebra = action.algebra
    if not algebra.prime_claimed:
        raise InputError("finite_invariant_ring needs a prime_claimed algebra")
    edg = derksen_finite(action, order_y, route=route, seed=seed)
    lir = localized_invariant_ring(edg, action, k_max=k_max)
    result = unlocalize(algebra, lir.gens, lir.a, max_rounds=max_rounds)
    for g in result.gens:
        if not is_invariant(action, g):
            raise RuntimeError("output generator failed the invariance check")
    return result


def _products_bounded(algebra: PresentedAlgebra, bound: int):
    """All products prod x_i^{e_i} with 0 <= e_i < bound, constant first."""
    n = algebra.ring.nvars
    out = []
    for expts in itertools.product(range(bound), repeat=n):
        e = tuple(expts)
        out.append((sum(e), e))
    out.sort()
    polys = []
    for _, e in out:
        polys.append(algebra.nf(MultiPoly(algebra.ring,
                                          {e: algebra.ring.domain.one})))
    return polys


class SubalgebraTester:
    """Membership oracle for K[gens] + I inside R; one elimination basis,
    reused across candidates (valid over ZZ via the strong basis)."""

    __slots__ = ("algebra", "ext", "gb", "nx")

    def __init__(self, algebra: PresentedAlgebra, gens, z_prefix: str = "s"):
        xring = algebra.ring
        nx = xring.nvars
        gens = list(gens)
        z_names = _fresh_names(z_prefix, len(gens), set(xring.names))
        ext = xring.extend(z_names)
        xmap = list(range(nx))
        sys = [r.lift_vars(ext, xmap) for r in algebra.relations]
        for i, f in enumerate(gens):
            sys.append(ext.var(nx + i) - f.lift_vars(ext, xmap))
        order = Block([GrevLex(tuple(range(nx))),
                       GrevLex(tuple(range(nx, ext.nvars)))])
        self.algebra = algebra
        self.ext = ext
        self.nx = nx
        self.gb = groebner(sys, order, ring=ext)

    def contains(self, candidate: MultiPoly) -> bool:
        lifted = candidate.lift_vars(self.ext, list(range(self.nx)))
        nf = normal_form(lifted, self.gb)
        return nf.support_vars() <= set(range(self.nx, self.ext.nvars))


def subalgebra_membership(algebra: PresentedAlgebra, gens, candidate: MultiPoly,
                          *, z_prefix: str = "s") -> bool:
    """candidate ∈ K[gens] + I, by tag-variable elimination (valid over ZZ)."""
    return SubalgebraTester(algebra, gens, z_prefix).contains(candidate)


def algebras_equal(algebra: PresentedAlgebra, gens_a, gens_b) -> bool:
    """K[gens_a] = K[gens_b] inside R, by mutual membership."""
    in_b = SubalgebraTester(algebra, gens_b)
    if not all(in_b.contains(g) for g in gens_a):
        return False
    in_a = SubalgebraTester(algebra, gens_a)
    return all(in_a.contains(g) for g in gens_b)


def noether_invariant_ring(action: FiniteGroupAction, *,
                           module_gens=None, extra_primary=None
                           ) -> InvariantRingResult:
    """Invariant ring without the domain hypothesis (Noether, constructive).

    A is generated by orbit-polynomial coefficients (optionally enlarged by
    `extra_primary`); R is an A-module on `module_gens` (default: all
    products of the variables with exponents < |G|); the module kernel of
    (-psi (+) eta^s) yields the missing module generators of R^G.
    """
    algebra = action.algebra
    xring = algebra.ring
    n = xring.nvars
    size = len(action)
    a_gens = []
    for i in range(n):
        from .actions import orbit_coefficients
        coeffs = orbit_coefficients(action, xring.var(i))
        for c in coeffs[:-1]:
            cc = algebra.nf(c)
            if cc.is_zero() or cc.is_const():
                continue
            if not any(algebra.eq(cc, o) for o in a_gens):
                a_gens.append(cc)
    if extra_primary:
        for c in extra_primary:
            cc = algebra.nf(c)
            if not (cc.is_zero() or cc.is_const()
                    or any(algebra.eq(cc, o) for o in a_gens)):
                a_gens.append(cc)
    if module_gens is None:
        c_list = _products_bounded(algebra, size)
    else:
        c_list = [algebra.nf(c) for c in module_gens]
    if not (c_list and c_list[0].is_const()
            and xring.domain.is_one(c_list[0].const_value())):
        raise InputError("module generators must start with 1")
    m = len(a_gens)
    r = len(c_list)
    from .modules import algebra_map_kernel, module_kernel
    eta_gens, _ = algebra_map_kernel(list(algebra.relations), a_gens, c_list,
                                     ring=xring)
    yring = eta_gens[0][0].ring if eta_gens else PolyRing(
        xring.domain, tuple("w%d" % (i + 1) for i in range(m)))
    t0 = len(eta_gens)
    sigmas = getattr(action, "generators", None) or action.nonidentity()
    s = len(sigmas)
    # psi: for each sigma_i and c_j, a preimage of sigma_i(c_j) - c_j
    psi_cols = []  # per j: list over i of vectors length r
    for j in range(r):
        blocks = []
        for sigma in sigmas:
            img = algebra.nf(sigma(c_list[j]))
            _, unit = algebra_map_kernel(list(algebra.relations), a_gens,
                                         c_list + [img], ring=xring)
            if unit is None:
                raise RuntimeError("module generators do not span sigma(c_j)")
            pre = [-unit[k] for k in range(r)]
            pre[j] = pre[j] - yring.one()
            blocks.append(pre)
        psi_cols.append(blocks)
    # kernel of (psi | -eta^(+s)) : P^r (+) P^(t0 s) -> P^(r s)
    rows = []
    for i in range(s):
        for comp in range(r):
            row = []
            for j in range(r):
                row.append(psi_cols[j][i][comp])
            for i2 in range(s):
                for k in range(t0):
                    if i2 == i:
                        row.append(-eta_gens[k][comp])
                    else:
                        row.append(yring.zero())
            rows.append(row)
    new_invariants = []
    if rows and rows[0]:
        kernel = module_kernel(rows)
        for vec in kernel.generators:
            v = vec[:r]
            cand = algebra.ring.zero()
            for k in range(r):
                if not v[k].is_zero():
                    cand = cand + v[k].substitute(xring, a_gens) * c_list[k]
            cand = algebra.nf(cand)
            if cand.is_zero() or cand.is_const():
                continue
            if not is_invariant(action, cand):
                raise RuntimeError("module kernel produced a non-invariant")
            new_invariants.append(cand)
    gens = list(a_gens)
    for cand in new_invariants:
        if not subalgebra_membership(algebra, gens, cand):
            gens.append(cand)
    z_names = _fresh_names("z", len(gens), set(xring.names))
    zring = PolyRing(xring.domain, z_names)
    relations = _subalgebra_relations(algebra, gens, zring)
    return InvariantRingResult(algebra, gens, zring, relations)


def _subalgebra_relations(algebra: PresentedAlgebra, gens, zring: PolyRing):
    xring = algebra.ring
    nx = xring.nvars
    ext = xring.extend(zring.names)
    xmap = list(range(nx))
    sys = [r.lift_vars(ext, xmap) for r in algebra.relations]
    for i, f in enumerate(gens):
        sys.append(ext.var(nx + i) - f.lift_vars(ext, xmap))
    elim = elimination_ideal(sys, list(range(nx, ext.nvars)), ring=ext)
    return [restrict_poly(p, zring, range(nx, ext.nvars)) for p in elim]


# -- additive group -------------------------------------------------------------


def ga_localized(action: GaAction):
    """Localization of the invariant ring of a G_a-action (closed form).

    Returns (LocalizedInvariantRing, InvariantizationMap); the map is a ring
    homomorphism sending x_j to the rational invariant h_j.
    """
    algebra = action.x_algebra
    dom = algebra.ring.domain
    char = dom.char
    pick = None
    for i, d in enumerate(action.degrees):
        if d >= 1 and (char == 0 or d % char):
            pick = i
            break
    if pick is None:
        raise InputError("no admissible index: all degrees divisible by char")
    d_i = action.degrees[pick]
    g_i0 = action.coeff_arrays[pick][0]
    g_i1 = action.coeff_arrays[pick][1] if d_i >= 1 else algebra.ring.zero()
    dom_l = algebra.frac_domain()
    denom = g_i0.scale(dom.from_int(d_i))
    z_value = FractionElem(algebra, -g_i1, denom)
    images = []
    for j in range(algebra.ring.nvars):
        arr = action.coeff_arrays[j]
        d_j = action.degrees[j]
        # arr holds descending z-coefficients; evaluate g_j at z_value by Horner
        val = dom_l.from_poly(arr[0])
        for k in range(1, d_j + 1):
            val = val * z_value + dom_l.from_poly(arr[k])
        images.append(val)
    a = algebra.nf(g_i0)
    b_list = []
    for j, h in enumerate(images):
        d_j = action.degrees[j]
        scaled = dom_l.from_poly(_pow_nf(algebra, a, d_j)) * h
        if not scaled.den.is_const():
            raise RuntimeError("g_i0^d_j h_j failed to clear the denominator")
        b = scaled.num
        if not algebra.ring.domain.is_field:
            b = b
        b_list.append(algebra.nf(b))
    # normalize: squarefree localizer in the free char-0 case, primitive b's
    a_red = a
    if algebra.is_free() and dom.char == 0:
        a_red = squarefree_part(a.convert(PolyRing(QQ, algebra.ring.names)))
        a_red = _to_base(algebra, a_red)
    gens = []
    for j, b in enumerate(b_list):
        if b.is_zero() or b.is_const():
            continue
        bb = b
        if dom.char == 0:
            qb = bb if bb.ring.domain is QQ else bb.convert(
                PolyRing(QQ, bb.ring.names))
            _, prim = qb.content_primitive()
            bb = _to_base(algebra, prim)
        if algebra.eq(bb, a_red) or any(algebra.eq(bb, g) for g in gens):
            continue
        gens.append(bb)
    for g in [a_red] + gens:
        if not is_invariant(action, g):
            raise RuntimeError("ga output failed the invariance check")
    for h in images:
        if not is_invariant(action, h):
            raise RuntimeError("ga invariantization image is not invariant")
    lir = LocalizedInvariantRing(algebra, a_red, gens, source="ga")
    phi = InvariantizationMap(images=images)
    return lir, phi


def _pow_nf(algebra: PresentedAlgebra, p: MultiPoly, e: int) -> MultiPoly:
    out = algebra.ring.one()
    for _ in range(e):
        out = algebra.nf(out * p)
    return out


def _to_base(algebra: PresentedAlgebra, p: MultiPoly) -> MultiPoly:
    if p.ring == algebra.ring:
        return p
    if algebra.ring.domain is ZZ and p.ring.domain is QQ:
        _, prim = p.content_primitive()
        return prim.convert(algebra.ring)
    return p.convert(algebra.ring)


# -- algebraic groups: localization ---------------------------------------------


def localize_invariant_ring_algebraic(action: AlgebraicGroupAction, *,
                                      use_cross_section: bool = True,
                                      d_override: int | None = None,
                                      user_i_z=None,
                                      degree_cap: int = DEFAULT_LOCALIZER_DEGREE_CAP,
                                      eta=None, budget: int = 2000,
                                      want_localizer: bool = True,
                                      order_y=None):
    """aLocalize: invariant field generators and a localized invariant ring.

    Returns (field_gens or None, LocalizedInvariantRing or None, edg).  The
    field generators are only asserted when no nontame extension (user_i_z)
    was used.  The localizer search runs degree by degree up to degree_cap
    and raises BudgetExhaustedError when nothing is found: either
    Quot(K[X]^G) != K(X)^G, or the cap is too small.
    """
    xalg = action.x_algebra
    if not xalg.ring.domain.is_field:
        raise InputError("algebraic localization needs field coefficients")
    constraints = []
    cross = None
    if use_cross_section:
        d = d_override if d_override is not None else \
            generic_orbit_dimension(action)
        if d > 0:
            idx, betas = cross_section_search(action, d, eta=eta, budget=budget)
            cross = (idx, betas)
    nx = xalg.ring.nvars
    names = _y_names("y", nx, set(xalg.ring.names) | set(action.z_names))
    yring = PolyRing(xalg.ring.domain, names)
    if cross:
        for i, beta in zip(cross[0], cross[1]):
            constraints.append(yring.var(i) - yring.const(beta))
    mixed, edg = derksen_elimination(action, order_y, constraints=constraints,
                                     cross_section=cross)
    nontame = False
    if user_i_z:
        nontame = True
        lifted = list(mixed)
        ny = nx
        ext = PolyRing(xalg.ring.domain, xalg.ring.names + names)
        y_idx = list(range(nx, nx + ny))
        for f in user_i_z:
            lifted.append(f.lift_vars(ext, y_idx))
        block = Block([GrevLex(tuple(y_idx)), GrevLex(tuple(range(nx)))])
        gb = groebner(lifted, block, ring=ext)
        for p in gb.generators:
            if p.support_vars() <= set(range(nx)):
                q = restrict_poly(p, xalg.ring, range(nx))
                if not xalg.is_zero(q):
                    raise InputError("improper extension: K[x] part of the "
                                     "extended ideal leaves I_X")
        edg = reduce_over_function_field(
            list(gb.generators), xalg, xalg, names, edg.order_y,
            gen_reps=edg.gen_reps, x_count=nx, tame=False,
            cross_section=cross, extension_polys=list(user_i_z),
            source="nontame")
    field_gens = None if nontame else coefficient_algebra(edg)
    if not want_localizer:
        return field_gens, None, edg
    lir = _localizer_search(action, edg, degree_cap)
    return field_gens, lir, edg


def _standard_monomials_up_to(gb_x: GroebnerBasis | None, ring: PolyRing,
                              r: int):
    """Monomials of degree <= r in normal form w.r.t. the x-part basis."""
    monos = all_monomials_up_to(ring, r)
    if gb_x is None or not gb_x.generators:
        return monos
    leads = [g.leading(gb_x.order)[0] for g in gb_x.generators]
    return [m for m in monos
            if not any(mono_divides(lm, m) for lm in leads)]


def _localizer_search(action: AlgebraicGroupAction, edg: ExtendedDerksenGB,
                      degree_cap: int) -> LocalizedInvariantRing:
    xalg = action.x_algebra
    xring = xalg.ring
    dom = xring.domain
    fractions = coefficient_algebra(edg)
    pairs = [(c.num, c.den) for c in fractions]
    k = len(pairs)
    gb_x = xalg.gb if xalg.relations else None
    gb_g = action.group_gb()
    # invariance data: NF_G(NF_x(m(g) - m)) per standard monomial
    xz = action.xz_ring
    nx = xring.nvars
    lift_xz = lambda p: p.lift_vars(xz, list(range(nx)))
    gb_x_xz = None
    if xalg.relations:
        gb_x_xz = GroebnerBasis(xz, GrevLex(), "field",
                                [lift_xz(g) for g in xalg.gb.generators])
    z_idx = list(range(nx, xz.nvars))
    gb_g_xz = GroebnerBasis(xz, GrevLex(), "field",
                            [p.lift_vars(xz, z_idx)
                             for p in gb_g.generators]) \
        if gb_g.generators else None

    for r in range(degree_cap + 1):
        monos = _standard_monomials_up_to(gb_x, xring, r)
        l = len(monos)
        unknowns = l * (k + 1)  # alphas then betas per fraction

        def alpha(i):
            return i

        def beta(i, j):
            return l + j * l + i

        rows = []
        # fraction-matching equations: sum alpha_i NF(f_j m_i) = sum beta NF(h_j m_i)
        for j, (fj, hj) in enumerate(pairs):
            cols = {}
            for i, m in enumerate(monos):
                mono_poly = MultiPoly(xring, {m: dom.one})
                lhs = xalg.nf(fj * mono_poly)
                rhs = xalg.nf(hj * mono_poly)
                for mm, c in lhs.terms.items():
                    cols.setdefault(mm, {})[alpha(i)] = dom.add(
                        cols.get(mm, {}).get(alpha(i), dom.zero), c)
                for mm, c in rhs.terms.items():
                    cols.setdefault(mm, {})[beta(i, j)] = dom.sub(
                        cols.get(mm, {}).get(beta(i, j), dom.zero), c)
            for mm, entries in sorted(cols.items()):
                row = [dom.zero] * unknowns
                for pos, c in entries.items():
                    row[pos] = c
                rows.append(row)
        # invariance of a = sum alpha_i m_i
        inv_cols: dict = {}
        for i, m in enumerate(monos):
            mono_poly = MultiPoly(xring, {m: dom.one})
            diff = action.substitute_action(mono_poly) - lift_xz(mono_poly)
            if gb_x_xz is not None:
                diff = normal_form(diff, gb_x_xz)
            if gb_g_xz is not None:
                diff = normal_form(diff, gb_g_xz)
            for mm, c in diff.terms.items():
                inv_cols.setdefault(mm, {})[i] = c
        for mm, entries in sorted(inv_cols.items()):
            row = [dom.zero] * unknowns
            for i, c in entries.items():
                row[alpha(i)] = c
            rows.append(row)
        basis = nullspace(rows, unknowns, dom) if rows else []
        if not rows:
            basis = [[dom.one] + [dom.zero] * (unknowns - 1)] if unknowns else []
        for vec in basis:
            if any(not dom.is_zero(vec[alpha(i)]) for i in range(l)):
                a = MultiPoly(xring, {m: vec[alpha(i)]
                                      for i, m in enumerate(monos)
                                      if not dom.is_zero(vec[alpha(i)])})
                bs = []
                for j in range(k):
                    bj = MultiPoly(xring, {m: vec[beta(i, j)]
                                           for i, m in enumerate(monos)
                                           if not dom.is_zero(vec[beta(i, j)])})
                    bs.append(xalg.nf(bj))
                a = xalg.nf(a)
                if a.is_zero():
                    continue
                if not is_invariant(action, a):
                    raise RuntimeError("localizer search produced a "
                                       "non-invariant candidate")
                gens = _dedup_elems(xalg, bs)
                return LocalizedInvariantRing(xalg, a, gens, source="aLocalize")
    raise BudgetExhaustedError(
        "no localizer found up to degree %d: either Quot(K[X]^G) != K(X)^G "
        "for this action, or the degree cap is too small" % degree_cap)


# -- graded machinery (linear actions) -------------------------------------------


def _weighted_degree_of(p: MultiPoly, weights) -> int:
    return p.weighted_degree(weights)


def homogeneous_invariants(action, d: int):
    """K-basis of the degree-d homogeneous invariants of a graded action."""
    if isinstance(action, FiniteGroupAction):
        algebra = action.algebra
        if not algebra.is_free():
            raise InputError("graded invariants need a polynomial algebra")
        ring = algebra.ring
        dom = ring.domain
        if not dom.is_field:
            raise InputError("graded invariants need field coefficients")
        weights = algebra.variable_degrees()
        sigmas = getattr(action, "generators", None) or action.nonidentity()
        for sigma in sigmas:
            for i, img in enumerate(sigma.images):
                if not img.is_homogeneous(weights) or \
                        img.weighted_degree(weights) != weights[i]:
                    raise InputError("action does not preserve the grading")
        monos = sorted(ring.monomials_of_degree(d, weights))
        rows = []
        for sigma in sigmas:
            cols: dict = {}
            for i, m in enumerate(monos):
                img = sigma(MultiPoly(ring, {m: dom.one}))
                img = img - MultiPoly(ring, {m: dom.one})
                for mm, c in img.terms.items():
                    cols.setdefault(mm, {})[i] = c
            for mm, entries in sorted(cols.items()):
                row = [dom.zero] * len(monos)
                for i, c in entries.items():
                    row[i] = c
                rows.append(row)
        sols = nullspace(rows, len(monos), dom) if rows else \
            [[dom.one if i == j else dom.zero for i in range(len(monos))]
             for j in range(len(monos))]
        out = []
        for vec in sols:
            p = MultiPoly(ring, {m: vec[i] for i, m in enumerate(monos)
                                 if not dom.is_zero(vec[i])})
            if not p.is_zero():
                out.append(p)
        return out
    if isinstance(action, AlgebraicGroupAction):
        xalg = action.x_algebra
        if not xalg.is_free():
            raise InputError("graded invariants need a polynomial algebra")
        ring = xalg.ring
        dom = ring.domain
        weights = xalg.variable_degrees()
        for i, g in enumerate(action.action_polys):
            # homogeneity in x of degree deg(x_i), z-part free
            nx = ring.nvars
            degs = set()
            for m, _ in g.terms.items():
                degs.add(sum(w * e for w, e in zip(weights, m[:nx])))
            if degs != {weights[i]}:
                raise InputError("action polynomial g_%d is inhomogeneous in x"
                                 % (i + 1))
        monos = sorted(ring.monomials_of_degree(d, weights))
        gb_g = action.group_gb()
        xz = action.xz_ring
        nx = ring.nvars
        z_idx = list(range(nx, xz.nvars))
        gb_g_xz = GroebnerBasis(xz, GrevLex(), "field",
                                [p.lift_vars(xz, z_idx)
                                 for p in gb_g.generators]) \
            if gb_g.generators else None
        rows_map: dict = {}
        for i, m in enumerate(monos):
            mono_poly = MultiPoly(ring, {m: dom.one})
            diff = action.substitute_action(mono_poly) - \
                mono_poly.lift_vars(xz, list(range(nx)))
            if gb_g_xz is not None:
                diff = normal_form(diff, gb_g_xz)
            for mm, c in diff.terms.items():
                rows_map.setdefault(mm, {})[i] = c
        rows = []
        for mm, entries in sorted(rows_map.items()):
            row = [dom.zero] * len(monos)
            for i, c in entries.items():
                row[i] = c
            rows.append(row)
        sols = nullspace(rows, len(monos), dom) if rows else \
            [[dom.one if i == j else dom.zero for i in range(len(monos))]
             for j in range(len(monos))]
        out = []
        for vec in sols:
            p = MultiPoly(ring, {m: vec[i] for i, m in enumerate(monos)
                                 if not dom.is_zero(vec[i])})
            if not p.is_zero():
                out.append(p)
        return out
    raise InputError("homogeneous_invariants: unsupported action kind")


def _weighted_products(gens, degrees, target: int):
    """Exponent tuples e with sum e_i degrees_i = target."""
    out = []

    def rec(i, left, acc):
        if i == len(gens):
            if left == 0:
                out.append(tuple(acc))
            return
        d = degrees[i]
        if d == 0:
            raise InputError("generator of degree 0 in a graded subalgebra")
        for e in range(left // d + 1):
            rec(i + 1, left - e * d, acc + [e])

    rec(0, target, [])
    return out


def _subalgebra_degree_span(ring: PolyRing, gens, degrees, target: int):
    """Products of the gens of weighted degree `target` (as polynomials)."""
    prods = []
    for e in _weighted_products(gens, degrees, target):
        p = ring.one()
        for g, ei in zip(gens, e):
            for _ in range(ei):
                p = p * g
        prods.append(p)
    return prods


def _in_span(p: MultiPoly, span, dom) -> bool:
    monos = sorted(set(itertools.chain(p.terms,
                                       *(q.terms for q in span))))
    if not monos:
        return p.is_zero()
    rows = [[q.terms.get(m, dom.zero) for q in span] for m in monos]
    rhs = [p.terms.get(m, dom.zero) for m in monos]
    return solve(rows, rhs, dom) is not None


def saturation_test(a_gens, a: MultiPoly, *, weights=None, factors=None) -> bool:
    """True iff a^-1 A ∩ R = A for homogeneous A-generators and a in A."""
    if factors:
        return all(saturation_test(a_gens, f, weights=weights) for f in factors)
    a_gens = [g for g in a_gens if not g.is_zero()]
    ring = a.ring
    dom = ring.domain
    if a.is_const():
        if dom.is_zero(a.const_value()):
            raise InputError("saturation_test needs a nonzero a")
        return True
    if weights is None:
        weights = (1,) * ring.nvars
    for g in a_gens + [a]:
        if not g.is_homogeneous(weights):
            raise InputError("saturation_test needs homogeneous data")
    m = len(a_gens)
    deg = [g.weighted_degree(weights) for g in a_gens]
    deg_a = a.weighted_degree(weights)
    nx = ring.nvars
    z_names = _fresh_names("h", m, set(ring.names))
    ext = ring.extend(z_names)
    xmap = list(range(nx))
    sys = [a.lift_vars(ext, xmap)]
    for i, f in enumerate(a_gens):
        sys.append(ext.var(nx + i) - f.lift_vars(ext, xmap))
    order = Block([GrevLex(tuple(range(nx))),
                   GrevLex(tuple(range(nx, ext.nvars)))])
    gb = groebner(sys, order, ring=ext)
    zring = PolyRing(dom, z_names)
    basis_s = [restrict_poly(p, zring, range(nx, ext.nvars))
               for p in gb.generators
               if p.support_vars() <= set(range(nx, ext.nvars))]
    for h in basis_s:
        hf = h.substitute(ring, list(a_gens))
        if hf.is_zero():
            continue
        target = hf.weighted_degree(weights) - deg_a
        if target < 0:
            return False
        span = [a * q for q in
                _subalgebra_degree_span(ring, a_gens, deg, target)]
        if not _in_span(hf, span, dom):
            return False
    return True


def _b_subset_of(ring, a_gens, degrees, b_gens, weights, dom) -> bool:
    for b in b_gens:
        if b.is_zero():
            continue
        if b.is_const():
            continue
        if not b.is_homogeneous(weights):
            raise InputError("graded unlocalization needs homogeneous input")
        target = b.weighted_degree(weights)
        span = _subalgebra_degree_span(ring, a_gens, degrees, target)
        if not _in_span(b, span, dom):
            return False
    return True


def unlocalize_graded(b_gens, a: MultiPoly, action, *, minimal: bool = True,
                      max_degree: int = DEFAULT_GRADED_DEGREE_CAP,
                      weights=None) -> InvariantRingResult:
    """Degree-by-degree unlocalization for graded actions.

    Caller contract: K[V]^G_a = B_a.  Stops at the first degree where
    B ⊆ A and a^-1 A ∩ K[V] = A; with `minimal`, each degree keeps only
    invariants independent modulo the subalgebra generated so far.
    """
    if isinstance(action, FiniteGroupAction):
        base_alg = action.algebra
    else:
        base_alg = action.x_algebra
    ring = base_alg.ring
    dom = ring.domain
    if weights is None:
        weights = base_alg.variable_degrees()
    b_gens = [g for g in b_gens if not (g.is_zero() or g.is_const())]
    f_gens: list[MultiPoly] = []
    for d in range(1, max_degree + 1):
        degrees = [g.weighted_degree(weights) for g in f_gens]
        if _b_subset_of(ring, f_gens, degrees, b_gens + [a], weights, dom):
            if saturation_test(f_gens, a, weights=weights):
                zring = PolyRing(dom, _fresh_names("z", len(f_gens),
                                                   set(ring.names)))
                rel = _subalgebra_relations(base_alg, f_gens, zring)
                return InvariantRingResult(base_alg, f_gens, zring, rel,
                                           minimality=minimal)
        space = homogeneous_invariants(action, d)
        if minimal and space:
            degrees = [g.weighted_degree(weights) for g in f_gens]
            span = _subalgebra_degree_span(ring, f_gens, degrees, d)
            kept = []
            for spoly in space:
                if not _in_span(spoly, span + kept, dom):
                    kept.append(spoly)
            space = kept
        f_gens.extend(space)
    raise BudgetExhaustedError(
        "graded unlocalization exceeded degree cap %d" % max_degree)


# -- the reductive master algorithm ----------------------------------------------


def master_reductive(action: AlgebraicGroupAction, *, minimal: bool = True,
                     degree_cap: int = DEFAULT_GRADED_DEGREE_CAP,
                     use_cross_section: bool = True,
                     d_override: int | None = None,
                     budget: int = 2000) -> InvariantRingResult:
    """Invariant ring of a (reductive) group on a graded polynomial ring.

    Runs the tame localization, extracts the character of the squarefree
    denominator product, and finishes with the graded unlocalization when
    the character has finite image (J = (y^d - 1)).  The surjective-character
    branch is deliberately unsupported and raises UnsupportedBranchError.
    """
    xalg = action.x_algebra
    dom = xalg.ring.domain
    if not xalg.is_free():
        raise InputError("master algorithm needs a polynomial ring (I_X = 0)")
    if dom.char != 0:
        raise InputError("the squarefree step needs characteristic 0")
    field_gens, _, edg = localize_invariant_ring_algebraic(
        action, use_cross_section=use_cross_section, d_override=d_override,
        budget=budget, want_localizer=False)
    fractions = coefficient_algebra(edg)
    ring = xalg.ring
    prod_h = ring.one()
    for c in fractions:
        prod_h = prod_h * c.den
    a = squarefree_part(prod_h) if not prod_h.is_const() else ring.one()
    # character: c with NF_G(a(g)) = c * a
    gb_g = action.group_gb()
    xz = action.xz_ring
    nx = ring.nvars
    z_idx = list(range(nx, xz.nvars))
    a_g = action.substitute_action(a)
    if gb_g.generators:
        gb_g_xz = GroebnerBasis(xz, GrevLex(), "field",
                                [p.lift_vars(xz, z_idx)
                                 for p in gb_g.generators])
        a_g = normal_form(a_g, gb_g_xz)
    c_poly = exact_divide(a_g, a.lift_vars(xz, list(range(nx))))
    if c_poly is None:
        raise InputError("character extraction failed: the denominator "
                         "product is not a semi-invariant (coprimality "
                         "assumption violated)")
    if not c_poly.support_vars() <= set(z_idx):
        raise InputError("character polynomial involves the x variables")
    # J = K[y] cap (I_G, y - c)
    yname = _fresh_names("u", 1, set(xz.names))[0]
    cz = restrict_poly(c_poly, action.z_ring, z_idx)
    ext = PolyRing(dom, (yname,) + action.z_names)
    zmap = list(range(1, ext.nvars))
    jhat = [p.lift_vars(ext, zmap) for p in action.group_ideal]
    jhat.append(ext.var(0) - cz.lift_vars(ext, zmap))
    j_elim = elimination_ideal(jhat, [0], ring=ext)
    uring = PolyRing(dom, (yname,))
    j_gens = [restrict_poly(p, uring, [0]) for p in j_elim]
    d_char = _character_order(j_gens, uring)
    if d_char is None:
        raise UnsupportedBranchError(
            "multiplicative-character branch (aMaster steps 5-6) unsupported: "
            "the character ideal is not of the form (y^d - 1); the subgroup "
            "H = V(I_G, c - 1) with c = %s would require the recursive "
            "G_m-quotient construction" % cz)
    a_d = a
    for _ in range(d_char - 1):
        a_d = a_d * a
    if not is_invariant(action, a_d):
        raise RuntimeError("a^d is not invariant; character extraction wrong")
    weights = xalg.variable_degrees()
    b_gens = [a_d] if not a_d.is_const() else []
    for c in fractions:
        e = 0
        power = ring.one()
        while True:
            if exact_divide(power, c.den) is not None:
                break
            e += 1
            if e > 200:
                raise RuntimeError("denominator does not divide a power of a")
            power = power * a_d
        g_j = exact_divide(power, c.den) * c.num
        if not is_invariant(action, g_j):
            raise RuntimeError("cleared generator is not invariant")
        if not (g_j.is_zero() or g_j.is_const()):
            b_gens.append(g_j)
    return unlocalize_graded(b_gens, a_d, action, minimal=minimal,
                             max_degree=degree_cap, weights=weights)


def _character_order(j_gens, uring: PolyRing):
    """d when the ideal is exactly (y^d - 1), else None."""
    j_gens = [p for p in j_gens if not p.is_zero()]
    if not j_gens:
        return None
    gb = groebner(j_gens, GrevLex(), ring=uring)
    if len(gb.generators) != 1:
        return None
    p = gb.generators[0]
    d = p.degree_in(0)
    dom = uring.domain
    want = {(d,): dom.one, (0,): dom.neg(dom.one)}
    if d >= 1 and p.terms == want:
        return d
    return None
