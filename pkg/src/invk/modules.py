"""Groebner bases for submodules of free modules, and two kernel routines.

Vectors are tuples of MultiPoly; internally a module polynomial is a term
list over extended monomials (component, exponent tuple) under a
position-over-term order in which low component indices dominate.  The
euclidean mode mirrors the scalar engine (S- and G-pairs, balanced
reduction), so kernels of maps between free ZZ[y]-modules come out exact.

algebra_map_kernel implements the z-tagged construction for the kernel of
(g_1..g_r) |-> sum g_j(f_1..f_m) h_j modulo I, including the extraction of
a kernel vector with last component 1 when one exists.
"""

from __future__ import annotations

import heapq
import itertools

from .errors import InputError
from .groebner import FIELD, EUCLIDEAN, _mode_for, groebner
from .linalg import solve_in_domain
from .orders import Block, GrevLex, Lex, MonomialOrder, Weight
from .poly import MultiPoly, PolyRing, mono_div, mono_divides, mono_lcm, mono_mul
from .rings import ZZ, balanced_divmod, gcdext


class ModuleGB:
    """Generators of a submodule of P^rank, closed under S/G-reduction."""

    __slots__ = ("ring", "rank", "generators")

    def __init__(self, ring: PolyRing, rank: int, generators):
        self.ring = ring
        self.rank = rank
        self.generators = [tuple(v) for v in generators]

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def _vec_to_terms(vec, kf):
    terms = []
    for comp, p in enumerate(vec):
        for m, c in p.terms.items():
            terms.append(((-comp, kf(m)), comp, m, c))
    terms.sort(key=lambda t: t[0], reverse=True)
    return terms


def _terms_to_vec(ring: PolyRing, rank: int, terms):
    polys = [dict() for _ in range(rank)]
    for _, comp, m, c in terms:
        polys[comp][m] = c
    return tuple(MultiPoly(ring, d) for d in polys)


def _mshift(terms, kf, q, mono, dom):
    if dom.is_zero(q):
        return []
    mul = dom.mul
    out = []
    for _, comp, m, c in terms:
        mm = mono_mul(m, mono)
        out.append(((-comp, kf(mm)), comp, mm, mul(q, c)))
    return out


def _mmerge_sub(f, g, dom):
    out = []
    i, j, nf, ng = 0, 0, len(f), len(g)
    sub, neg, is_zero = dom.sub, dom.neg, dom.is_zero
    while i < nf and j < ng:
        if f[i][0] > g[j][0]:
            out.append(f[i])
            i += 1
        elif f[i][0] < g[j][0]:
            t = g[j]
            out.append((t[0], t[1], t[2], neg(t[3])))
            j += 1
        else:
            c = sub(f[i][3], g[j][3])
            if not is_zero(c):
                out.append((f[i][0], f[i][1], f[i][2], c))
            i += 1
            j += 1
    out.extend(f[i:])
    for t in g[j:]:
        out.append((t[0], t[1], t[2], neg(t[3])))
    return out


class _MEntry:
    __slots__ = ("key", "comp", "lm", "lc", "terms", "alive")

    def __init__(self, terms):
        self.key, self.comp, self.lm, self.lc = (terms[0][0], terms[0][1],
                                                 terms[0][2], terms[0][3])
        self.terms = terms
        self.alive = True


def _module_groebner(ring: PolyRing, rank: int, vectors):
    mode = _mode_for(ring)
    dom = ring.domain
    kf = ring.key_function(GrevLex())

    basis: list[_MEntry] = []
    queue: list = []
    counter = itertools.count()

    def normalize(terms):
        if not terms:
            return terms
        if mode == FIELD:
            lc = terms[0][3]
            if dom.is_one(lc):
                return terms
            inv = dom.div(dom.one, lc)
            return [(k, cp, m, dom.mul(inv, c)) for k, cp, m, c in terms]
        if terms[0][3] < 0:
            return [(k, cp, m, -c) for k, cp, m, c in terms]
        return terms

    def find_reducer(comp, m, c):
        for b in basis:
            if b.alive and b.comp == comp and mono_divides(b.lm, m):
                if mode == FIELD:
                    return b, dom.div(c, b.lc)
                q, _ = balanced_divmod(c, b.lc)
                if q:
                    return b, q
        return None, None

    def reduce_full(terms):
        out, work = [], terms
        while work:
            _, comp, m, c = work[0]
            b, q = find_reducer(comp, m, c)
            if b is None:
                out.append(work[0])
                work = work[1:]
                continue
            shifted = _mshift(b.terms, kf, q, mono_div(m, b.lm), dom)
            work = _mmerge_sub(work, shifted, dom)
        return out

    def push_pairs(idx):
        b = basis[idx]
        for i in range(idx):
            a = basis[i]
            if not a.alive or a.comp != b.comp:
                continue
            lcm = mono_lcm(a.lm, b.lm)
            key = ((-a.comp, kf(lcm)), next(counter))
            heapq.heappush(queue, (key, 1, i, idx))
            if mode == EUCLIDEAN and not (a.lc % b.lc == 0 or b.lc % a.lc == 0):
                heapq.heappush(queue, (key, 0, i, idx))

    def add(terms):
        terms = normalize(terms)
        basis.append(_MEntry(terms))
        push_pairs(len(basis) - 1)

    for v in vectors:
        terms = _vec_to_terms(v, kf)
        if terms:
            add(terms)

    while queue:
        _, kind, i, j = heapq.heappop(queue)
        a, b = basis[i], basis[j]
        if not (a.alive and b.alive):
            continue
        lcm = mono_lcm(a.lm, b.lm)
        ma, mb = mono_div(lcm, a.lm), mono_div(lcm, b.lm)
        if kind == 1:
            if mode == FIELD:
                ca = dom.div(dom.one, a.lc)
                cb = dom.div(dom.one, b.lc)
            else:
                g, _, _ = gcdext(a.lc, b.lc)
                l = a.lc // g * b.lc
                ca, cb = l // a.lc, l // b.lc
            s = _mmerge_sub(_mshift(a.terms, kf, ca, ma, dom),
                            _mshift(b.terms, kf, cb, mb, dom), dom)
        else:
            g, s_, t_ = gcdext(a.lc, b.lc)
            s = _mmerge_sub(_mshift(a.terms, kf, s_, ma, dom),
                            _mshift(b.terms, kf, dom.neg(t_), mb, dom), dom)
        s = reduce_full(s)
        if s:
            add(s)

    # light interreduction: drop strongly-dominated leads, reduce tails
    for b in basis:
        for other in basis:
            if other is b or not (b.alive and other.alive):
                continue
            if other.comp == b.comp and mono_divides(other.lm, b.lm):
                if mode == FIELD or b.lc % other.lc == 0:
                    if other.lm == b.lm and (mode == FIELD or other.lc == b.lc):
                        if basis.index(other) > basis.index(b):
                            continue
                    b.alive = False
                    break
    for _ in range(1000):
        changed = False
        live = [b for b in basis if b.alive]
        for b in live:
            if not b.alive:
                continue
            saved = [e.alive for e in basis]
            b.alive = False
            red = reduce_full(b.terms)
            b.alive = True
            if red != b.terms:
                changed = True
                if not red:
                    b.alive = False
                else:
                    red = normalize(red)
                    b.terms = red
                    b.key, b.comp, b.lm, b.lc = (red[0][0], red[0][1],
                                                 red[0][2], red[0][3])
        if not changed:
            break
    return [b for b in basis if b.alive], kf


def module_groebner(ring: PolyRing, rank: int, vectors) -> ModuleGB:
    entries, _ = _module_groebner(ring, rank, vectors)
    vecs = [_terms_to_vec(ring, rank, b.terms) for b in entries]
    vecs.sort(key=lambda v: tuple(p.frozen() for p in v))
    return ModuleGB(ring, rank, vecs)


def module_kernel(rows) -> ModuleGB:
    """Kernel of v |-> mat . v for an s x r matrix over K[y], K = ZZ or field.

    Computed with tag components: a Groebner basis of the module generated
    by (column_j, e_j) under a POT order in which the image block dominates;
    the tag parts of the elements supported in the tag block generate the
    kernel.
    """
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        raise InputError("module_kernel needs a nonempty matrix")
    ring = rows[0][0].ring
    s, r = len(rows), len(rows[0])
    for row in rows:
        if len(row) != r or any(p.ring != ring for p in row):
            raise InputError("ragged or mixed-ring matrix")
    vectors = []
    for j in range(r):
        vec = [rows[i][j] for i in range(s)]
        tag = [ring.zero()] * r
        tag[j] = ring.one()
        vectors.append(tuple(vec + tag))
    entries, _ = _module_groebner(ring, s + r, vectors)
    kernel = []
    for b in entries:
        if all(comp >= s for _, comp, _, _ in b.terms):
            vec = _terms_to_vec(ring, s + r, b.terms)[s:]
            kernel.append(vec)
    kernel.sort(key=lambda v: tuple(p.frozen() for p in v))
    return ModuleGB(ring, r, kernel)


def matvec(rows, vec):
    out = []
    for row in rows:
        acc = row[0].ring.zero()
        for a, b in zip(row, vec):
            acc = acc + a * b
        out.append(acc)
    return out


def algebra_map_kernel(I_gens, f_list, h_list, *, ring: PolyRing | None = None,
                       y_prefix: str = "w", want_unit_last: bool = True):
    """Kernel of phi: K[y]^r -> K[x]/I, (g_1..g_r) -> sum g_j(f) h_j + I.

    Requires h_1 = 1.  Returns (kernel generators as vectors over K[y_1..y_m],
    unit_last) where unit_last is a kernel vector with last component 1 when
    one exists (None otherwise).
    """
    f_list, h_list = list(f_list), list(h_list)
    if ring is None:
        ring = (f_list + h_list + list(I_gens))[0].ring
    dom = ring.domain
    if not h_list or not (h_list[0].is_const()
                          and dom.is_one(h_list[0].const_value())):
        raise InputError("algebra_map_kernel requires h_1 = 1")
    m, r = len(f_list), len(h_list)
    nx = ring.nvars
    y_names = tuple("%s%d" % (y_prefix, i + 1) for i in range(m))
    z_names = tuple("@z%d" % j for j in range(2, r + 1))
    ext = PolyRing(dom, ring.names + y_names + z_names)
    x_idx = list(range(nx))
    y_idx = list(range(nx, nx + m))
    z_idx = list(range(nx + m, nx + m + r - 1))
    gens = [p.lift_vars(ext, x_idx) for p in I_gens]
    for i, f in enumerate(f_list):
        gens.append(ext.var(y_idx[i]) - f.lift_vars(ext, x_idx))
    for j in range(2, r + 1):
        gens.append(ext.var(z_idx[j - 2]) - h_list[j - 1].lift_vars(ext, x_idx))
    weights = [0] * ext.nvars
    for i in z_idx:
        weights[i] = 1
    parts = [GrevLex(tuple(x_idx)), Weight(tuple(weights))]
    if z_idx:
        parts.append(Lex(tuple(reversed(z_idx))))
    parts.append(GrevLex(tuple(y_idx)))
    order = Block(parts)
    gb = groebner(gens, order, ring=ext)

    yring = PolyRing(dom, y_names)
    from .groebner import restrict_poly

    def to_y(p):
        return restrict_poly(p, yring, y_idx)

    xy_z_free = set(y_idx)
    vecs = []
    raw_for_unit = []
    for g in gb.generators:
        sup = g.support_vars()
        if sup & set(x_idx):
            continue
        zdeg = g.weighted_degree(weights)
        if sup <= xy_z_free:
            # pure y element: contributes z_j * g for each j
            base = to_y(g)
            for j in range(2, r + 1):
                vec = [yring.zero()] * r
                vec[j - 1] = base
                vecs.append(tuple(vec))
            vec = [yring.zero()] * r
            vec[0] = base
            vecs.append(tuple(vec))
        elif zdeg <= 1:
            comp: dict[int, dict] = {}
            for mono, c in g.terms.items():
                zpart = [mono[i] for i in z_idx]
                if sum(zpart) == 0:
                    comp.setdefault(0, {})[mono] = c
                else:
                    j = zpart.index(1) + 2
                    mm = list(mono)
                    mm[z_idx[j - 2]] = 0
                    comp.setdefault(j - 1, {})[tuple(mm)] = c
            vec = [yring.zero()] * r
            for pos, terms in comp.items():
                vec[pos] = to_y(MultiPoly(ext, terms))
            vecs.append(tuple(vec))
            raw_for_unit.append(vecs[-1])
    unit_last = None
    if want_unit_last and r >= 1:
        unit_last = _unit_last_vector(yring, vecs, r)
    dedup = []
    seen = set()
    for v in vecs:
        key = tuple(p.frozen() for p in v)
        if key not in seen and any(not p.is_zero() for p in v):
            seen.add(key)
            dedup.append(v)
    dedup.sort(key=lambda v: tuple(p.frozen() for p in v))
    return dedup, unit_last


def _unit_last_vector(yring: PolyRing, vecs, r):
    """K-linear combination of the vectors whose last component is 1."""
    dom = yring.domain
    monos = sorted({m for v in vecs for m in v[r - 1].terms})
    if not monos:
        return None
    cols = []
    for v in vecs:
        cols.append([v[r - 1].terms.get(m, dom.zero) for m in monos])
    unit_mono = (0,) * yring.nvars
    target = [dom.one if m == unit_mono else dom.zero for m in monos]
    rows = [[cols[j][i] for j in range(len(vecs))] for i in range(len(monos))]
    sol = solve_in_domain(rows, target, dom)
    if sol is None:
        return None
    out = [yring.zero()] * r
    for lam, v in zip(sol, vecs):
        if dom.is_zero(lam):
            continue
        for k in range(r):
            out[k] = out[k] + v[k].scale(lam)
    return tuple(out)
