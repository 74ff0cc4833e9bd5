"""Graded free modules, module Groebner bases, and syzygies.

Vectors in a free module S^s are sparse maps (component, monomial) -> coeff.
The module order is grevlex on the monomial with a position tie-break, and
supports a dominant front block of components; computing syzygies is
elimination with the front block dominant.  All input vectors are assumed
homogeneous with respect to the component twists, which is what every
caller in this package produces.
"""

from __future__ import annotations

from .errors import DegreeCapExceeded
from .gb import DEFAULT_DEGREE_CAP
from .poly import Polynomial, _grevlex_key


class FreeModule:
    """S^rank with a generator degree (twist) per component."""

    def __init__(self, ring, twists):
        self.ring = ring
        self.twists = tuple(twists)
        self.rank = len(self.twists)

    def __eq__(self, other):
        return (
            isinstance(other, FreeModule)
            and self.ring == other.ring
            and self.twists == other.twists
        )

    def __repr__(self):
        return f"Free({self.ring}, twists={list(self.twists)})"

    def zero(self):
        return ModVec(self, {})

    def basis_vector(self, i):
        return ModVec(self, {(i, self.ring.one_mono()): 1})

    def from_polys(self, polys):
        """Vector with the given polynomial in each component."""
        terms = {}
        for i, f in enumerate(polys):
            for m, c in f.terms.items():
                terms[(i, m)] = c
        return ModVec(self, terms)


class ModVec:
    """Sparse element of a free module."""

    __slots__ = ("free", "terms")

    def __init__(self, free, terms):
        self.free = free
        self.terms = terms

    @property
    def ring(self):
        return self.free.ring

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, ModVec)
            and self.free == other.free
            and self.terms == other.terms
        )

    def __add__(self, other):
        p = self.ring.p
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = (terms.get(k, 0) + c) % p
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
        return ModVec(self.free, terms)

    def __neg__(self):
        p = self.ring.p
        return ModVec(self.free, {k: p - c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.ring.field.normalize(c)
        if c == 0:
            return self.free.zero()
        p = self.ring.p
        return ModVec(self.free, {k: (v * c) % p for k, v in self.terms.items()})

    def term_mul(self, mono, coeff):
        """Multiply by coeff * x^mono."""
        p = self.ring.p
        terms = {}
        for (i, m), c in self.terms.items():
            terms[(i, self.ring.mono_mul(m, mono))] = (c * coeff) % p
        return ModVec(self.free, terms)

    def poly_mul(self, f):
        out = self.free.zero()
        for m, c in f.terms.items():
            out = out + self.term_mul(m, c)
        return out

    def component_poly(self, i):
        return Polynomial(
            self.ring, {m: c for (j, m), c in self.terms.items() if j == i}
        )

    def degree(self):
        """Common homogeneous degree, or -1 for the zero vector."""
        if not self.terms:
            return -1
        degs = {
            self.ring.mono_degree(m) + self.free.twists[i] for (i, m) in self.terms
        }
        if len(degs) > 1:
            raise ValueError("inhomogeneous module vector")
        return degs.pop()

    def max_mono_degree(self):
        if not self.terms:
            return -1
        return max(self.ring.mono_degree(m) for (_, m) in self.terms)

    def __repr__(self):
        polys = [str(self.component_poly(i)) for i in range(self.free.rank)]
        return "(" + ", ".join(polys) + ")"


class ModOrder:
    """Module term order: front block of components dominates, then grevlex
    on the monomial, then smaller component index wins."""

    def __init__(self, weights, split=0):
        self.weights = weights
        self.split = split

    def key(self, term):
        comp, mono = term
        return (
            1 if comp < self.split else 0,
            _grevlex_key(mono, self.weights),
            -comp,
        )


def leading_mod_term(v, order):
    k = max(v.terms, key=order.key)
    return k, v.terms[k]


def _mod_reduce(v, gens, order, degree_cap=None):
    """Full normal form of a vector against module GB elements."""
    ring = v.ring
    field = ring.field
    lead = [leading_mod_term(g, order) for g in gens]
    rem = v.free.zero()
    h = v
    while not h.is_zero():
        if degree_cap is not None and h.max_mono_degree() > degree_cap:
            raise DegreeCapExceeded("module reduction exceeded the degree cap")
        (comp, mono), c = leading_mod_term(h, order)
        for g, ((gc_comp, gm), gcoef) in zip(gens, lead):
            if gc_comp == comp and ring.mono_divides(gm, mono):
                q = ring.mono_div(mono, gm)
                h = h - g.term_mul(q, c * field.inverse(gcoef))
                break
        else:
            t = ModVec(h.free, {(comp, mono): c})
            rem = rem + t
            h = h - t
    return rem


def module_groebner(vecs, split=0, degree_cap=DEFAULT_DEGREE_CAP):
    """Groebner basis of the submodule generated by `vecs`."""
    ring = vecs[0].ring if vecs else None
    if not vecs:
        return []
    order = ModOrder(ring.weights, split)
    G = [v for v in vecs if not v.is_zero()]
    G = [
        v.scale(ring.field.inverse(leading_mod_term(v, order)[1])) for v in G
    ]
    G.sort(key=lambda v: order.key(leading_mod_term(v, order)[0]))
    leads = [leading_mod_term(g, order)[0] for g in G]
    pairs = {
        (i, j)
        for i in range(len(G))
        for j in range(i + 1, len(G))
        if leads[i][0] == leads[j][0]
    }

    def pair_deg(pr):
        i, j = pr
        return ring.mono_degree(ring.mono_lcm(leads[i][1], leads[j][1]))

    while pairs:
        i, j = min(pairs, key=lambda pr: (pair_deg(pr), pr))
        pairs.discard((i, j))
        mi, mj = leads[i][1], leads[j][1]
        lcm = ring.mono_lcm(mi, mj)
        s = G[i].term_mul(ring.mono_div(lcm, mi), 1) - G[j].term_mul(
            ring.mono_div(lcm, mj), 1
        )
        h = _mod_reduce(s, G, order, degree_cap)
        if h.is_zero():
            continue
        h = h.scale(ring.field.inverse(leading_mod_term(h, order)[1]))
        G.append(h)
        leads.append(leading_mod_term(h, order)[0])
        n = len(G) - 1
        pairs.update((k, n) for k in range(n) if leads[k][0] == leads[n][0])
    return G


def module_member(v, gb, split=0):
    if v.is_zero():
        return True
    if not gb:
        return False
    order = ModOrder(v.ring.weights, split)
    return _mod_reduce(v, gb, order).is_zero()


def syzygies(vecs, degree_cap=DEFAULT_DEGREE_CAP, twists=None):
    """Generators of the syzygy module of the given homogeneous vectors.

    Returns vectors in a free module of rank len(vecs) whose twists are the
    degrees of the inputs (pass `twists` explicitly when some inputs are
    zero vectors, whose degree is ambiguous).
    """
    if not vecs:
        return []
    free = vecs[0].free
    ring = free.ring
    if twists is None:
        twists = [v.degree() for v in vecs]
    ext = FreeModule(ring, list(free.twists) + list(twists))
    lifted = []
    for idx, v in enumerate(vecs):
        terms = {(i, m): c for (i, m), c in v.terms.items()}
        terms[(free.rank + idx, ring.one_mono())] = 1
        lifted.append(ModVec(ext, terms))
    gb = module_groebner(lifted, split=free.rank, degree_cap=degree_cap)
    syz_free = FreeModule(ring, list(twists))
    out = []
    for g in gb:
        if all(i >= free.rank for (i, _) in g.terms):
            out.append(
                ModVec(
                    syz_free,
                    {(i - free.rank, m): c for (i, m), c in g.terms.items()},
                )
            )
    return out


def minimal_generators(vecs, degree_cap=DEFAULT_DEGREE_CAP):
    """Minimal generating subset of a list of homogeneous vectors.

    Processes generators by increasing degree and keeps one exactly when it
    is not a combination of those already kept (graded Nakayama).
    """
    vecs = [v for v in vecs if not v.is_zero()]
    vecs.sort(key=lambda v: (v.degree(), sorted(v.terms.items())))
    kept = []
    gb = []
    for v in vecs:
        if kept and module_member(v, gb):
            continue
        kept.append(v)
        gb = module_groebner(kept, degree_cap=degree_cap)
    return kept


class FPModule:
    """Finitely presented graded module: twists plus relation columns.

    relations are ModVecs in FreeModule(ring, twists); the module is
    F/<relations>.
    """

    def __init__(self, ring, twists, relations=()):
        self.ring = ring
        self.twists = list(twists)
        self.free = FreeModule(ring, self.twists)
        rels = []
        for r in relations:
            if isinstance(r, (list, tuple)):
                r = self.free.from_polys(r)
            if not r.is_zero():
                r.degree()  # raises on inhomogeneous input
                rels.append(r)
        self.relations = rels

    @classmethod
    def free_module(cls, ring, twists=(0,)):
        return cls(ring, twists, [])

    @classmethod
    def zero(cls, ring):
        return cls(ring, [], [])

    @classmethod
    def quotient_ring(cls, presented):
        """S/I as a module over the ambient polynomial ring S."""
        return cls(
            presented.ambient, [0], [[g] for g in presented.defining.elements]
        )

    @classmethod
    def from_ideal(cls, ring_ambient, gens, degree_cap=DEFAULT_DEGREE_CAP):
        """An ideal of S as an S-module: generators plus their syzygies."""
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            return cls.zero(ring_ambient)
        degs = [g.degree() for g in gens]
        # Kernel of the surjection S(-d_i) -> I, e_i -> g_i, gives the
        # relations; the g_i live in the rank-1 free module S.
        one_free = FreeModule(ring_ambient, [0])
        images = [one_free.from_polys([g]) for g in gens]
        rels = syzygies(images, degree_cap)
        return cls(ring_ambient, degs, rels)

    def shift(self, a):
        """M(-a): add a to every generator degree."""
        shifted = FreeModule(self.ring, [t + a for t in self.twists])
        rels = [ModVec(shifted, dict(r.terms)) for r in self.relations]
        return FPModule(self.ring, shifted.twists, rels)

    def is_zero_presentation(self):
        return not self.twists

    def minimal_presentation(self, degree_cap=DEFAULT_DEGREE_CAP):
        """Prune unit relation entries, then minimalize the relation set."""
        ring = self.ring
        twists = list(self.twists)
        rels = [dict(r.terms) for r in self.relations if not r.is_zero()]

        def find_unit():
            one = ring.one_mono()
            for ri, terms in enumerate(rels):
                for (i, m), c in terms.items():
                    if m == one:
                        return ri, i, c
            return None

        while True:
            hit = find_unit()
            if hit is None:
                break
            ri, comp, c = hit
            inv = ring.field.normalize(-pow(c, ring.p - 2, ring.p))
            # e_comp = inv * (relation without its comp entry)
            expr = {
                (i, m): (v * inv) % ring.p
                for (i, m), v in rels[ri].items()
                if i != comp
            }
            new_rels = []
            for rj, terms in enumerate(rels):
                if rj == ri:
                    continue
                out = {k: v for k, v in terms.items() if k[0] != comp}
                for (i, m), v in terms.items():
                    if i != comp:
                        continue
                    for (i2, m2), v2 in expr.items():
                        k = (i2, ring.mono_mul(m, m2))
                        s = (out.get(k, 0) + v * v2) % ring.p
                        if s:
                            out[k] = s
                        else:
                            out.pop(k, None)
                if out:
                    new_rels.append(out)
            # reindex components above `comp`
            remap = {}
            for i in range(len(twists)):
                if i < comp:
                    remap[i] = i
                elif i > comp:
                    remap[i] = i - 1
            twists.pop(comp)
            rels = [
                {(remap[i], m): v for (i, m), v in terms.items()}
                for terms in new_rels
            ]

        free = FreeModule(ring, twists)
        vecs = [ModVec(free, terms) for terms in rels]
        vecs = minimal_generators(vecs, degree_cap)
        return FPModule(ring, twists, vecs)

    def __repr__(self):
        return (
            f"FPModule(twists={self.twists}, {len(self.relations)} relations)"
        )
