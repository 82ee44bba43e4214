"""Monomial orders: lex / grevlex / graded-lex atoms, weight vectors, blocks.

An order is a small immutable spec tree.  `key_function(order, nvars)`
compiles it into a closure mapping an exponent tuple to a flat tuple of
integers; larger key <=> larger monomial.  Keys are componentwise additive
(key(s*t) = key(s) + key(t) entrywise), which the Groebner engine exploits
to shift keys instead of recomputing them.  Block composition gives
elimination orders: every monomial touching an earlier block beats all
monomials supported on later blocks only.
"""

from __future__ import annotations

from .errors import InputError

LT, EQ, GT = -1, 0, 1


class MonomialOrder:
    """Base class; subclasses are frozen value objects."""

    def key_parts(self, nvars: int):
        raise NotImplementedError

    def variables(self, nvars: int) -> set[int]:
        raise NotImplementedError

    def covers(self, nvars: int) -> bool:
        return self.variables(nvars) == set(range(nvars))

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def __repr__(self):
        return self.describe()


def _resolve(vars_, nvars):
    if vars_ is None:
        return tuple(range(nvars))
    idx = tuple(vars_)
    if any(i < 0 or i >= nvars for i in idx):
        raise InputError("order references variable outside the ring")
    return idx


class GrevLex(MonomialOrder):
    """Graded reverse lexicographic on a variable subset."""

    def __init__(self, vars_=None):
        self.vars = None if vars_ is None else tuple(vars_)

    def _key(self):
        return self.vars

    def variables(self, nvars):
        return set(_resolve(self.vars, nvars))

    def key_parts(self, nvars):
        idx = _resolve(self.vars, nvars)
        rev = tuple(reversed(idx))

        def part(e, idx=idx, rev=rev):
            out = [sum(e[i] for i in idx)]
            for i in rev:
                out.append(-e[i])
            return tuple(out)

        return [part]

    def describe(self):
        return "grevlex" if self.vars is None else "grevlex%r" % (list(self.vars),)


class Lex(MonomialOrder):
    """Lexicographic on a variable subset (first listed variable strongest)."""

    def __init__(self, vars_=None):
        self.vars = None if vars_ is None else tuple(vars_)

    def _key(self):
        return self.vars

    def variables(self, nvars):
        return set(_resolve(self.vars, nvars))

    def key_parts(self, nvars):
        idx = _resolve(self.vars, nvars)

        def part(e, idx=idx):
            return tuple(e[i] for i in idx)

        return [part]

    def describe(self):
        return "lex" if self.vars is None else "lex%r" % (list(self.vars),)


class DegLex(MonomialOrder):
    """Total degree first, lexicographic tie-break, on a variable subset."""

    def __init__(self, vars_=None):
        self.vars = None if vars_ is None else tuple(vars_)

    def _key(self):
        return self.vars

    def variables(self, nvars):
        return set(_resolve(self.vars, nvars))

    def key_parts(self, nvars):
        idx = _resolve(self.vars, nvars)

        def part(e, idx=idx):
            out = [sum(e[i] for i in idx)]
            for i in idx:
                out.append(e[i])
            return tuple(out)

        return [part]

    def describe(self):
        return "deglex" if self.vars is None else "deglex%r" % (list(self.vars),)


class Weight(MonomialOrder):
    """Compare by a single weight vector; refine with further blocks."""

    def __init__(self, weights):
        self.weights = tuple(weights)

    def _key(self):
        return self.weights

    def variables(self, nvars):
        # a weight alone never separates all monomials
        return set()

    def key_parts(self, nvars):
        if len(self.weights) != nvars:
            raise InputError("weight vector length != number of variables")
        w = self.weights

        def part(e, w=w):
            return (sum(wi * ei for wi, ei in zip(w, e)),)

        return [part]

    def describe(self):
        return "weight%r" % (list(self.weights),)


class Block(MonomialOrder):
    """Block composition: earlier blocks strictly dominate later ones."""

    def __init__(self, parts):
        self.parts = tuple(parts)
        if not self.parts:
            raise InputError("empty block order")

    def _key(self):
        return self.parts

    def variables(self, nvars):
        out: set[int] = set()
        for p in self.parts:
            out |= p.variables(nvars)
        return out

    def key_parts(self, nvars):
        parts = []
        for p in self.parts:
            parts.extend(p.key_parts(nvars))
        return parts

    def describe(self):
        return "block(%s)" % ", ".join(p.describe() for p in self.parts)


def key_function(order: MonomialOrder, nvars: int):
    """Compile the order into a single exponent-tuple -> sort-key closure."""
    parts = order.key_parts(nvars)
    if len(parts) == 1:
        return parts[0]

    def key(e, parts=tuple(parts)):
        out = []
        for p in parts:
            out.extend(p(e))
        return tuple(out)

    return key


def compare(order: MonomialOrder, s: tuple, t: tuple) -> int:
    """Three-way comparison of two monomials of equal arity: LT, EQ or GT."""
    if len(s) != len(t):
        raise InputError("monomial arity mismatch: %d vs %d" % (len(s), len(t)))
    kf = key_function(order, len(s))
    ks, kt = kf(s), kf(t)
    if ks < kt:
        return LT
    if ks > kt:
        return GT
    return EQ


def elimination_order(elim_vars, keep_vars) -> MonomialOrder:
    """Block order making the elim block dominate: computes K[keep] ∩ I."""
    return Block([GrevLex(tuple(elim_vars)), GrevLex(tuple(keep_vars))])


def map_order(order: MonomialOrder, mapping, src_arity: int) -> MonomialOrder:
    """Relabel an order's variable indices via mapping[i] (embedding rings)."""
    if isinstance(order, Block):
        return Block([map_order(p, mapping, src_arity) for p in order.parts])
    if isinstance(order, Weight):
        raise InputError("weight orders cannot be relabelled implicitly")
    idx = _resolve(order.vars, src_arity)
    return type(order)(tuple(mapping[i] for i in idx))


def parse_order(text: str, names: tuple[str, ...]) -> MonomialOrder:
    """Parse a CLI order spec: atom or block(atom[v1,v2], atom[v3], ...)."""
    text = text.strip()

    def atom(tok: str) -> MonomialOrder:
        tok = tok.strip()
        kind, _, rest = tok.partition("[")
        kind = kind.strip()
        vars_ = None
        if rest:
            if not rest.endswith("]"):
                raise InputError("malformed order spec: %r" % tok)
            items = [v.strip() for v in rest[:-1].split(",") if v.strip()]
            try:
                vars_ = tuple(names.index(v) for v in items)
            except ValueError as exc:
                raise InputError("order names unknown variable in %r" % tok) from exc
        if kind == "grevlex":
            return GrevLex(vars_)
        if kind == "lex":
            return Lex(vars_)
        if kind == "deglex":
            return DegLex(vars_)
        raise InputError("unknown order atom: %r" % kind)

    if text.startswith("block(") and text.endswith(")"):
        inner = text[len("block("):-1]
        toks, depth, cur = [], 0, []
        for ch in inner:
            if ch == "[":
                depth += 1
            elif ch == "]":
                depth -= 1
            if ch == "," and depth == 0:
                toks.append("".join(cur))
                cur = []
            else:
                cur.append(ch)
        if cur:
            toks.append("".join(cur))
        return Block([atom(t) for t in toks])
    return atom(text)
