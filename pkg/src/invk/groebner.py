"""Buchberger engine: fields, fraction fields, and strong bases over ZZ.

Polynomials enter and leave as MultiPoly; internally a polynomial is a list
of (fused, coeff) pairs in strictly descending order, where `fused` is the
concatenation sortkey(m) + m.  Sort keys are componentwise additive and
injective on monomials, so comparing fused tuples compares monomials and a
term shift is a single elementwise addition.  The euclidean mode (ZZ)
completes with both S- and G-polynomials (gcd combinations of leading
coefficients) and reduces with balanced quotients, which yields strong
bases with unique normal forms and a canonical reduced form once leading
coefficients are normalized positive.

Cofactor tracking is opt-in: every basis element (and every normal form)
can carry its exact representation as a combination of the original input
generators.
"""

from __future__ import annotations

import heapq
import itertools
from operator import add as _add

from .errors import ImproperIdealError, InputError
from .orders import Block, GrevLex, MonomialOrder, elimination_order
from .poly import (MultiPoly, PolyRing, mono_div, mono_divides, mono_lcm,
                   mono_mul, same_ring)
from .rings import ZZ, balanced_divmod, gcdext

FIELD, EUCLIDEAN = "field", "euclidean"


class GroebnerBasis:
    """Result object: reduced basis plus the data needed to reuse it."""

    __slots__ = ("ring", "order", "mode", "generators", "cofactors", "inputs",
                 "_prep")

    def __init__(self, ring, order, mode, generators, cofactors=None, inputs=None):
        self.ring = ring
        self.order = order
        self.mode = mode
        self.generators = generators
        self.cofactors = cofactors
        self.inputs = inputs
        self._prep = None

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def is_improper(self) -> bool:
        return any(g.is_const() and not g.is_zero() and
                   self.ring.domain.is_unit(g.const_value())
                   for g in self.generators)

    def contains_in_kvars(self, keep: set[int]):
        return [g for g in self.generators if g.support_vars() <= keep]


class _Entry:
    __slots__ = ("key", "lm", "lc", "terms", "sugar", "cof", "alive", "mask")

    def __init__(self, key, lm, lc, terms, sugar, cof):
        self.key = key
        self.lm = lm
        self.lc = lc
        self.terms = terms
        self.sugar = sugar
        self.cof = cof
        self.alive = True
        mask = 0
        for i, e in enumerate(lm):
            if e:
                mask |= 1 << i
        self.mask = mask


def _mask_of(m) -> int:
    mask = 0
    for i, e in enumerate(m):
        if e:
            mask |= 1 << i
    return mask


def _mode_for(ring: PolyRing) -> str:
    dom = ring.domain
    if dom.is_field:
        return FIELD
    if dom is ZZ:
        return EUCLIDEAN
    raise InputError("Groebner bases unsupported over %s" % dom.name)


def _to_terms(p: MultiPoly, kf):
    return sorted(((kf(m) + m, c) for m, c in p.terms.items()), reverse=True,
                  key=lambda t: t[0])


def _from_terms(ring: PolyRing, terms, klen: int) -> MultiPoly:
    return MultiPoly(ring, {fused[klen:]: c for fused, c in terms})


def _shift(terms, q, fused_delta, dom):
    """q * x^mono * terms; fused_delta = key(mono) + mono, added entrywise."""
    if dom.is_zero(q):
        return []
    mul = dom.mul
    if any(fused_delta):
        return [(tuple(map(_add, fused, fused_delta)), mul(q, c))
                for fused, c in terms]
    return [(fused, mul(q, c)) for fused, c in terms]


def _merge_sub(f, g, dom):
    """f - g for descending term lists (g already shifted/scaled)."""
    out = []
    i, j, nf, ng = 0, 0, len(f), len(g)
    sub, neg, is_zero = dom.sub, dom.neg, dom.is_zero
    while i < nf and j < ng:
        kf_, kg_ = f[i][0], g[j][0]
        if kf_ > kg_:
            out.append(f[i])
            i += 1
        elif kf_ < kg_:
            t = g[j]
            out.append((t[0], neg(t[1])))
            j += 1
        else:
            c = sub(f[i][1], g[j][1])
            if not is_zero(c):
                out.append((kf_, c))
            i += 1
            j += 1
    if i < nf:
        out.extend(f[i:])
    while j < ng:
        t = g[j]
        out.append((t[0], neg(t[1])))
        j += 1
    return out


class _Engine:
    def __init__(self, ring: PolyRing, order: MonomialOrder, mode: str,
                 track: bool):
        if not order.covers(ring.nvars):
            raise InputError("order %r does not totally order %r" % (order, ring))
        self.ring = ring
        self.order = order
        self.mode = mode
        self.track = track
        self.kf = ring.key_function(order)
        self.dom = ring.domain
        self.klen = len(self.kf((0,) * ring.nvars))

    # -- reduction ---------------------------------------------------------

    def find_reducer(self, m, mmask, c, basis, skip=None):
        dom = self.dom
        inv_mask = ~mmask
        if self.mode == FIELD:
            for b in basis:
                if b.alive and b is not skip and not (b.mask & inv_mask):
                    lm = b.lm
                    for a, bb in zip(lm, m):
                        if a > bb:
                            break
                    else:
                        return b, dom.div(c, b.lc)
            return None, None
        for b in basis:
            if b.alive and b is not skip and not (b.mask & inv_mask):
                lm = b.lm
                for a, bb in zip(lm, m):
                    if a > bb:
                        break
                else:
                    q, _ = balanced_divmod(c, b.lc)
                    if q:
                        return b, q
        return None, None

    # -- normalization -----------------------------------------------------

    def normalize(self, terms, cof):
        """Monic over fields, positive leading coefficient over ZZ."""
        if not terms:
            return terms, cof
        dom = self.dom
        if self.mode == FIELD:
            lc = terms[0][1]
            if dom.is_one(lc):
                return terms, cof
            inv = dom.div(dom.one, lc)
            terms = [(k, dom.mul(inv, c)) for k, c in terms]
            if cof is not None:
                cof = {k: p.scale(inv) for k, p in cof.items()}
            return terms, cof
        if terms[0][1] < 0:
            terms = [(k, -c) for k, c in terms]
            if cof is not None:
                cof = {k: p.scale(-1) for k, p in cof.items()}
        return terms, cof

    def fused(self, mono):
        return self.kf(mono) + mono

    def entry(self, terms, cof=None) -> _Entry:
        fused = terms[0][0]
        lm = fused[self.klen:]
        return _Entry(fused, lm, terms[0][1], terms,
                      _sugar(terms, self.klen), cof)


def _sugar(terms, klen):
    return max((sum(fused[klen:]) for fused, _ in terms), default=-1)


def _spair_parts(a: _Entry, b: _Entry, dom, mode):
    """Multipliers (ca, ma), (cb, mb) with S = ca*x^ma*a - cb*x^mb*b."""
    lcm = mono_lcm(a.lm, b.lm)
    ma, mb = mono_div(lcm, a.lm), mono_div(lcm, b.lm)
    if mode == FIELD:
        ca = dom.div(dom.one, a.lc)
        cb = dom.div(dom.one, b.lc)
        return lcm, (ca, ma), (cb, mb)
    g, _, _ = gcdext(a.lc, b.lc)
    l = a.lc // g * b.lc
    return lcm, (l // a.lc, ma), (l // b.lc, mb)


def _gpair_parts(a: _Entry, b: _Entry):
    """G-polynomial data: gcd combination of the leading coefficients."""
    lcm = mono_lcm(a.lm, b.lm)
    g, s, t = gcdext(a.lc, b.lc)
    return lcm, (s, mono_div(lcm, a.lm)), (t, mono_div(lcm, b.lm)), g


class _Combination:
    """Sparse cofactor vector over the original inputs."""

    @staticmethod
    def unit(ring, idx):
        return {idx: ring.one()}

    @staticmethod
    def combine(ring, ca, ma, cof_a, cb, mb, cof_b):
        out = {}
        for k, p in cof_a.items():
            out[k] = p.mul_term(ca, ma)
        for k, p in cof_b.items():
            delta = p.mul_term(cb, mb)
            cur = out.get(k)
            new = (cur - delta) if cur is not None else -delta
            if new.is_zero():
                out.pop(k, None)
            else:
                out[k] = new
        return out


def groebner(gens, order: MonomialOrder | None = None, *,
             track_cofactors: bool = False,
             ring: PolyRing | None = None) -> GroebnerBasis:
    """Compute a (reduced) Groebner basis of the ideal generated by `gens`.

    Over a field the usual Buchberger completion runs with the sugar
    selection strategy and Gebauer-Moeller pair elimination; over ZZ a
    strong basis is completed with S- and G-polynomials and only safe pair
    skips.  With `track_cofactors`, each output generator carries an exact
    representation over the input generators.
    """
    gens = list(gens)
    if ring is None:
        ring = same_ring(gens) if gens else None
    if ring is None:
        raise InputError("groebner of an empty system needs an explicit ring")
    order = order or GrevLex()
    mode = _mode_for(ring)
    eng = _Engine(ring, order, mode, track_cofactors)
    dom, kf = eng.dom, eng.kf

    basis: list[_Entry] = []
    pairqueue: list = []
    counter = itertools.count()

    def push_pair(kind, i, j):
        a, b = basis[i], basis[j]
        lcm = mono_lcm(a.lm, b.lm)
        sugar = max(a.sugar + sum(mono_div(lcm, a.lm)),
                    b.sugar + sum(mono_div(lcm, b.lm)))
        heapq.heappush(pairqueue, (sugar, kf(lcm), kind, i, j, next(counter)))

    def spair_skippable(i, j):
        a, b = basis[i], basis[j]
        coprime = mono_lcm(a.lm, b.lm) == mono_mul(a.lm, b.lm)
        if not coprime:
            return False
        if mode == FIELD:
            return True
        return gcdext(a.lc, b.lc)[0] == 1

    def gpair_skippable(i, j):
        a, b = basis[i], basis[j]
        return b.lc % a.lc == 0 or a.lc % b.lc == 0

    def add_element(terms, cof):
        terms, cof = eng.normalize(terms, cof)
        idx = len(basis)
        entry = eng.entry(terms, cof)
        basis.append(entry)
        for i in range(idx):
            if not basis[i].alive:
                continue
            if not spair_skippable(i, idx):
                push_pair(1, i, idx)
            if mode == EUCLIDEAN and not gpair_skippable(i, idx):
                push_pair(0, i, idx)
        return entry

    # seed
    for pos, g in enumerate(gens):
        if g.ring != ring:
            raise InputError("generator in the wrong ring")
        if g.is_zero():
            continue
        terms = _to_terms(g, kf)
        cof = _Combination.unit(ring, pos) if track_cofactors else None
        add_element(terms, cof)

    while pairqueue:
        _, _, kind, i, j, _ = heapq.heappop(pairqueue)
        a, b = basis[i], basis[j]
        if not (a.alive and b.alive):
            continue
        if kind == 1:
            lcm, (ca, ma), (cb, mb) = _spair_parts(a, b, dom, mode)
            # Buchberger chain criterion; over ZZ divisibility is on leading
            # TERMS: the middle element must divide both the monomial lcm and
            # the coefficient lcm, with both sub-lcm terms strictly smaller
            if mode == FIELD:
                if any(e.alive and e is not a and e is not b
                       and mono_divides(e.lm, lcm)
                       and mono_lcm(e.lm, a.lm) != lcm
                       and mono_lcm(e.lm, b.lm) != lcm
                       for e in basis):
                    continue
            else:
                lcm_c = a.lc // gcdext(a.lc, b.lc)[0] * b.lc
                skip = False
                for e in basis:
                    if not e.alive or e is a or e is b:
                        continue
                    if lcm_c % e.lc or not mono_divides(e.lm, lcm):
                        continue
                    ta = (mono_lcm(e.lm, a.lm),
                          a.lc // gcdext(e.lc, a.lc)[0] * e.lc)
                    if ta == (lcm, lcm_c):
                        continue
                    tb = (mono_lcm(e.lm, b.lm),
                          b.lc // gcdext(e.lc, b.lc)[0] * e.lc)
                    if tb == (lcm, lcm_c):
                        continue
                    skip = True
                    break
                if skip:
                    continue
            left = _shift(a.terms, ca, eng.fused(ma), dom)
            right = _shift(b.terms, cb, eng.fused(mb), dom)
            s = _merge_sub(left, right, dom)
            cof = (_Combination.combine(ring, ca, ma, a.cof, cb, mb, b.cof)
                   if track_cofactors else None)
        else:
            lcm, (ca, ma), (cb, mb), g = _gpair_parts(a, b)
            left = _shift(a.terms, ca, eng.fused(ma), dom)
            right = _shift(b.terms, dom.neg(cb), eng.fused(mb), dom)
            s = _merge_sub(left, right, dom)
            cof = (_Combination.combine(ring, ca, ma, a.cof,
                                        dom.neg(cb), mb, b.cof)
                   if track_cofactors else None)
        s, reds = _reduce_full(eng, s, basis, track_cofactors)
        if s:
            if track_cofactors:
                cof = _apply_reductions(ring, cof, reds)
            add_element(s, cof)

    if not basis:
        return GroebnerBasis(ring, order, mode, [], [] if track_cofactors else None,
                             gens if track_cofactors else None)

    _interreduce(eng, basis, track_cofactors)
    live = sorted((b for b in basis if b.alive), key=lambda e: e.key)
    generators = [_from_terms(ring, b.terms, eng.klen) for b in live]
    cofactors = None
    if track_cofactors:
        cofactors = []
        for b in live:
            row = [ring.zero()] * len(gens)
            for k, p in b.cof.items():
                row[k] = p
            cofactors.append(row)
    return GroebnerBasis(ring, order, mode, generators, cofactors,
                         list(gens) if track_cofactors else None)


def _reduce_full(eng: _Engine, terms, basis, track):
    """Full normal form; returns (terms, reduction log for cofactors)."""
    out, work, pos = [], terms, 0
    reds = [] if track else None
    find = eng.find_reducer
    klen = eng.klen
    while pos < len(work):
        fused, c = work[pos]
        m = fused[klen:]
        b, q = find(m, _mask_of(m), c, basis)
        if b is None:
            out.append(work[pos])
            pos += 1
            continue
        delta = tuple(map(_sub_op, fused, b.key))
        shifted = _shift(b.terms, q, delta, eng.dom)
        work = _merge_sub(work[pos:] if pos else work, shifted, eng.dom)
        pos = 0
        if track:
            reds.append((b, q, delta[klen:]))
    return out, reds


def _sub_op(a, b):
    return a - b


def _apply_reductions(ring, cof, reds):
    for b, q, mono in reds:
        if b.cof:
            for k, p in b.cof.items():
                delta = p.mul_term(q, mono)
                cur = cof.get(k)
                new = (cur - delta) if cur is not None else -delta
                if new.is_zero():
                    cof.pop(k, None)
                else:
                    cof[k] = new
    return cof


def _interreduce(eng: _Engine, basis, track):
    """Minimalize then tail-reduce to the canonical reduced (strong) basis."""
    live = [b for b in basis if b.alive]
    # minimality: drop entries whose leading term is (strongly) divisible
    for pos, b in enumerate(live):
        for qos, other in enumerate(live):
            if other is b or not other.alive or not b.alive:
                continue
            if mono_divides(other.lm, b.lm):
                if eng.mode == FIELD or b.lc % other.lc == 0:
                    same = other.lm == b.lm and (
                        eng.mode == FIELD or other.lc == b.lc)
                    if same and qos > pos:
                        continue
                    b.alive = False
                    break
    for _ in range(10000):
        changed = False
        live = [b for b in basis if b.alive]
        for b in live:
            if not b.alive:
                continue
            reduced, reds = _reduce_full(eng, b.terms, [e for e in live
                                                        if e is not b and e.alive],
                                         track)
            if reduced == b.terms:
                continue
            changed = True
            if not reduced:
                b.alive = False
                continue
            cof = b.cof
            if track:
                cof = _apply_reductions(eng.ring, dict(cof), reds)
            reduced, cof = eng.normalize(reduced, cof)
            b.terms = reduced
            b.key = reduced[0][0]
            b.lm = b.key[eng.klen:]
            b.lc = reduced[0][1]
            b.mask = _mask_of(b.lm)
            b.sugar = _sugar(reduced, eng.klen)
            b.cof = cof
        if not changed:
            return
    raise RuntimeError("interreduction did not stabilize")


def _prepare(gb: GroebnerBasis):
    if gb._prep is None:
        eng = _Engine(gb.ring, gb.order, gb.mode, False)
        basis = [eng.entry(_to_terms(g, eng.kf)) for g in gb.generators]
        gb._prep = (eng, basis)
    return gb._prep


def normal_form(f: MultiPoly, gb: GroebnerBasis, *, with_cofactors=False):
    """NF of f modulo the basis; linear over the coefficients, idempotent.

    With cofactors: returns (nf, combination over gb.inputs) and requires the
    basis to have been computed with track_cofactors.
    """
    if f.ring != gb.ring:
        raise InputError("normal_form: ring mismatch")
    eng, basis = _prepare(gb)
    terms, reds = _reduce_full(eng, _to_terms(f, eng.kf), basis, with_cofactors)
    nf = _from_terms(gb.ring, terms, eng.klen)
    if not with_cofactors:
        return nf
    if gb.cofactors is None:
        raise InputError("basis was computed without cofactor tracking")
    n_inputs = len(gb.inputs)
    combo = [gb.ring.zero()] * n_inputs
    index_of = {id(b): i for i, b in enumerate(basis)}
    for b, q, mono in reds:
        row = gb.cofactors[index_of[id(b)]]
        for k in range(n_inputs):
            if not row[k].is_zero():
                combo[k] = combo[k] + row[k].mul_term(q, mono)
    return nf, combo


def reduce_basis(gb: GroebnerBasis) -> GroebnerBasis:
    """Recompute the canonical reduced basis of the same ideal."""
    return groebner(gb.generators, gb.order, ring=gb.ring,
                    track_cofactors=False)


def membership(f: MultiPoly, gens, *, cofactors: bool = False,
               gb: GroebnerBasis | None = None):
    """Ideal membership; optionally an exact combination f = sum c_i g_i."""
    if gb is None:
        gb = groebner(gens, GrevLex(), track_cofactors=cofactors)
    if cofactors:
        nf, combo = normal_form(f, gb, with_cofactors=True)
        if nf.is_zero():
            return True, combo
        return False, None
    nf = normal_form(f, gb)
    return nf.is_zero(), None


def elimination_ideal(gens, keep_idx, *, ring: PolyRing | None = None,
                      inner_order: MonomialOrder | None = None):
    """Generators of I ∩ K[keep variables], inside the same ambient ring."""
    gens = list(gens)
    if ring is None:
        ring = same_ring(gens)
    keep = sorted(set(keep_idx))
    elim = [i for i in range(ring.nvars) if i not in set(keep)]
    if not elim:
        return list(groebner(gens, inner_order or GrevLex(), ring=ring).generators)
    order = Block([GrevLex(tuple(elim)),
                   inner_order or GrevLex(tuple(keep))])
    gb = groebner(gens, order, ring=ring)
    keepset = set(keep)
    return [g for g in gb.generators if g.support_vars() <= keepset]


def restrict_poly(p: MultiPoly, target: PolyRing, keep_idx) -> MultiPoly:
    """Project a polynomial supported on keep_idx down to the smaller ring."""
    keep = list(keep_idx)
    out = {}
    for m, c in p.terms.items():
        e = tuple(m[i] for i in keep)
        out[e] = c
    return MultiPoly(target, out)


def intersect_ideals(ideals) -> list[MultiPoly]:
    """Intersection via the tag-variable trick t*I + (1-t)*J, iterated.

    Valid over fields, fraction fields and ZZ; returns the reduced basis of
    the intersection in the common ambient ring.
    """
    ideals = [list(gens) for gens in ideals]
    if not ideals:
        raise InputError("intersect_ideals needs at least one ideal")
    ring = same_ring([g for gens in ideals for g in gens])
    acc = ideals[0]
    for other in ideals[1:]:
        acc = _intersect_pair(ring, acc, other)
    return list(groebner(acc, GrevLex(), ring=ring).generators)


def _intersect_pair(ring: PolyRing, a, b):
    ext = ring.extend(("@t",))
    t_idx = ext.nvars - 1
    var_map = list(range(ring.nvars))
    t = ext.var(t_idx)
    one = ext.one()
    lifted = []
    for f in a:
        lifted.append(t * f.lift_vars(ext, var_map))
    for g in b:
        lifted.append((one - t) * g.lift_vars(ext, var_map))
    keep = list(range(ring.nvars))
    elim = elimination_ideal(lifted, keep, ring=ext)
    return [restrict_poly(p, ring, keep) for p in elim]


def krull_dimension(gens, *, ring: PolyRing | None = None) -> int:
    """Dimension of the quotient ring via maximal LT-independent variable sets.

    Returns -1 for the improper ideal (documented sentinel).
    """
    gens = [g for g in gens if not g.is_zero()]
    if ring is None:
        ring = same_ring(gens) if gens else None
    if ring is None:
        raise InputError("krull_dimension of empty system needs a ring")
    if not ring.domain.is_field:
        raise InputError("krull_dimension needs field coefficients")
    if not gens:
        return ring.nvars
    gb = groebner(gens, GrevLex(), ring=ring)
    if gb.is_improper():
        return -1
    supports = []
    for g in gb.generators:
        m, _ = g.leading(gb.order)
        supports.append(frozenset(i for i, e in enumerate(m) if e))
    supports = sorted(set(supports), key=lambda s: (len(s), sorted(s)))
    n = ring.nvars
    best = 0

    def independent(sset):
        return all(not sup <= sset for sup in supports)

    def search(i, current: set):
        nonlocal best
        if len(current) + (n - i) <= best:
            return
        if i == n:
            best = max(best, len(current))
            return
        current.add(i)
        if independent(current):
            search(i + 1, current)
        current.discard(i)
        search(i + 1, current)

    search(0, set())
    return best


def verify_basis(gb: GroebnerBasis) -> bool:
    """Direct check: every S-polynomial (and G-polynomial over ZZ) reduces to 0."""
    eng, basis = _prepare(gb)
    dom = eng.dom
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            a, b = basis[i], basis[j]
            _, (ca, ma), (cb, mb) = _spair_parts(a, b, dom, gb.mode)
            s = _merge_sub(_shift(a.terms, ca, eng.fused(ma), dom),
                           _shift(b.terms, cb, eng.fused(mb), dom), dom)
            s, _ = _reduce_full(eng, s, basis, False)
            if s:
                return False
            if gb.mode == EUCLIDEAN:
                _, (sa, ma2), (tb, mb2), _ = _gpair_parts(a, b)
                gpol = _merge_sub(
                    _shift(a.terms, sa, eng.fused(ma2), dom),
                    _shift(b.terms, dom.neg(tb), eng.fused(mb2), dom), dom)
                gpol, _ = _reduce_full(eng, gpol, basis, False)
                if gpol:
                    return False
    return True


def assert_proper(gb: GroebnerBasis, what: str):
    if gb.is_improper():
        raise ImproperIdealError("%s is the unit ideal" % what)
