"""Buchberger engine and derived ideal operations.

Everything here is deterministic: the S-pair selection uses the normal
strategy (minimal lcm weighted degree, ties by smallest pair index), and
reduced Groebner bases are unique for a fixed ideal and order, so rerunning
the engine reproduces them element for element.
"""

from __future__ import annotations

from .errors import ContextMismatch, DegreeCapExceeded
from .poly import (
    GREVLEX,
    BlockOrder,
    PolyRing,
    Polynomial,
    leading_term,
)

DEFAULT_DEGREE_CAP = 64


class IdealBasis:
    """A generating set of an ideal; the zero ideal is the empty list."""

    def __init__(self, ring, gens):
        self.ring = ring
        self.gens = [g for g in gens if not g.is_zero()]
        for g in self.gens:
            if g.ring != ring:
                raise ContextMismatch("generator in wrong ring")

    @property
    def homogeneous(self):
        return all(g.is_homogeneous() for g in self.gens)

    def is_zero(self):
        return not self.gens

    def __repr__(self):
        if not self.gens:
            return "<0>"
        return "<" + ", ".join(str(g) for g in self.gens) + ">"


class GroebnerBasis:
    """A reduced Groebner basis: monic elements, pairwise fully reduced."""

    def __init__(self, ring, elements, order):
        self.ring = ring
        self.elements = elements
        self.order = order
        self.reduced = True

    def is_zero(self):
        return not self.elements

    def contains_one(self):
        return len(self.elements) == 1 and self.elements[0].degree() == 0

    def leading_monomials(self):
        return [leading_term(g, self.order)[0] for g in self.elements]

    def __repr__(self):
        if not self.elements:
            return "GB<0>"
        return "GB<" + ", ".join(str(g) for g in self.elements) + ">"


def _reduce_full(f, gens, order, degree_cap=None):
    """Full normal form of f against a list of nonzero polynomials."""
    ring = f.ring
    field = ring.field
    lead = [leading_term(g, order) for g in gens]
    remainder = ring.zero()
    h = f
    while not h.is_zero():
        if degree_cap is not None and h.degree() > degree_cap:
            raise DegreeCapExceeded(
                f"intermediate degree {h.degree()} exceeds cap {degree_cap}"
            )
        m, c = leading_term(h, order)
        for g, (gm, gc) in zip(gens, lead):
            if ring.mono_divides(gm, m):
                q = ring.monomial(ring.mono_div(m, gm), c * field.inverse(gc))
                h = h - q * g
                break
        else:
            t = ring.monomial(m, c)
            remainder = remainder + t
            h = h - t
    return remainder


def _spoly(f, g, order):
    ring = f.ring
    field = ring.field
    fm, fc = leading_term(f, order)
    gm, gc = leading_term(g, order)
    lcm = ring.mono_lcm(fm, gm)
    uf = ring.monomial(ring.mono_div(lcm, fm), field.inverse(fc))
    ug = ring.monomial(ring.mono_div(lcm, gm), field.inverse(gc))
    return uf * f - ug * g


def buchberger(basis, order=GREVLEX, degree_cap=DEFAULT_DEGREE_CAP):
    """Reduced Groebner basis of the ideal generated by `basis`."""
    ring = basis.ring
    field = ring.field
    G = []
    for g in sorted(
        basis.gens, key=lambda g: order.key(leading_term(g, order)[0], ring.weights)
    ):
        if not g.is_zero():
            _, c = leading_term(g, order)
            G.append(g.scale(field.inverse(c)))
    if not G:
        return GroebnerBasis(ring, [], order)

    lms = [leading_term(g, order)[0] for g in G]
    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}

    def lcm_deg(pair):
        i, j = pair
        return ring.mono_degree(ring.mono_lcm(lms[i], lms[j]))

    while pairs:
        i, j = min(pairs, key=lambda pr: (lcm_deg(pr), pr))
        pairs.discard((i, j))
        lcm = ring.mono_lcm(lms[i], lms[j])
        # Buchberger's first criterion: coprime leading monomials.
        if lcm == ring.mono_mul(lms[i], lms[j]):
            continue
        # Second (chain) criterion.
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if ring.mono_divides(lms[k], lcm):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a not in pairs and b not in pairs:
                    skip = True
                    break
        if skip:
            continue
        h = _reduce_full(_spoly(G[i], G[j], order), G, order, degree_cap)
        if h.is_zero():
            continue
        if h.degree() > degree_cap:
            raise DegreeCapExceeded(
                f"basis element degree {h.degree()} exceeds cap {degree_cap}"
            )
        _, c = leading_term(h, order)
        h = h.scale(field.inverse(c))
        G.append(h)
        lms.append(leading_term(h, order)[0])
        n = len(G) - 1
        pairs.update((k, n) for k in range(n))

    # Minimalize: drop elements whose leading monomial is divisible by
    # another one.
    minimal = []
    for idx in range(len(G)):
        lm = lms[idx]
        dominated = False
        for k in range(len(G)):
            if k == idx:
                continue
            if ring.mono_divides(lms[k], lm) and (lms[k] != lm or k < idx):
                dominated = True
                break
        if not dominated:
            minimal.append(G[idx])
    # Tail-reduce each survivor against the others.
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        if others:
            g = _reduce_full(g, others, order)
        _, c = leading_term(g, order)
        reduced.append(g.scale(field.inverse(c)))
    reduced.sort(
        key=lambda g: order.key(leading_term(g, order)[0], ring.weights), reverse=True
    )
    return GroebnerBasis(ring, reduced, order)


def normal_form(f, G):
    """Canonical representative of f modulo the ideal of G."""
    if f.ring != G.ring:
        raise ContextMismatch("polynomial and basis in different rings")
    if not G.elements:
        return f
    return _reduce_full(f, G.elements, G.order)


def ideal_member(f, G):
    return normal_form(f, G).is_zero()


def _map_exponents(poly, target_ring, slot_map):
    """Reinterpret `poly` inside `target_ring`, sending variable i of the
    source to variable slot_map[i] of the target."""
    terms = {}
    for m, c in poly.terms.items():
        e = [0] * target_ring.nvars
        for i, exp in enumerate(m):
            if exp:
                e[slot_map[i]] = exp
        terms[tuple(e)] = c
    return Polynomial(target_ring, terms)


def eliminate(basis, front_vars, degree_cap=DEFAULT_DEGREE_CAP):
    """Contract the ideal to the subring on the variables not in front_vars.

    Returns an IdealBasis over a new ring on the retained variables (with
    their weights preserved).  Eliminating nothing returns the input.
    """
    front_vars = list(front_vars)
    if not front_vars:
        return basis
    ring = basis.ring
    front_idx = [ring._index[v] for v in front_vars]
    back_idx = [i for i in range(ring.nvars) if i not in front_idx]
    perm_names = [ring.names[i] for i in front_idx] + [ring.names[i] for i in back_idx]
    perm_weights = [ring.weights[i] for i in front_idx] + [
        ring.weights[i] for i in back_idx
    ]
    perm_ring = PolyRing(ring.field, perm_names, perm_weights)
    slot = {}
    for new, old in enumerate(front_idx + back_idx):
        slot[old] = new
    mapped = [_map_exponents(g, perm_ring, slot) for g in basis.gens]
    order = BlockOrder(len(front_idx))
    G = buchberger(IdealBasis(perm_ring, mapped), order, degree_cap)
    k = len(front_idx)
    sub_ring = PolyRing(
        ring.field,
        [ring.names[i] for i in back_idx],
        [ring.weights[i] for i in back_idx],
    )
    survivors = []
    for g in G.elements:
        if all(all(e == 0 for e in m[:k]) for m in g.terms):
            survivors.append(
                Polynomial(sub_ring, {m[k:]: c for m, c in g.terms.items()})
            )
    return IdealBasis(sub_ring, survivors)


def _extend_ring(ring, extra_names, extra_weights, front=True):
    """New ring with extra variables prepended (front) or appended."""
    if front:
        names = list(extra_names) + list(ring.names)
        weights = list(extra_weights) + list(ring.weights)
        slot = {i: i + len(extra_names) for i in range(ring.nvars)}
    else:
        names = list(ring.names) + list(extra_names)
        weights = list(ring.weights) + list(extra_weights)
        slot = {i: i for i in range(ring.nvars)}
    return PolyRing(ring.field, names, weights), slot


def intersect(I, J, degree_cap=DEFAULT_DEGREE_CAP):
    """Generators of the intersection of two ideals (t-trick + elimination)."""
    if I.ring != J.ring:
        raise ContextMismatch("ideals in different rings")
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return IdealBasis(ring, [])
    ext, slot = _extend_ring(ring, ["@t"], [1], front=True)
    t = ext.var("@t")
    gens = [t * _map_exponents(g, ext, slot) for g in I.gens]
    gens += [(ext.one() - t) * _map_exponents(g, ext, slot) for g in J.gens]
    contracted = eliminate(IdealBasis(ext, gens), ["@t"], degree_cap)
    # The eliminated subring has the same variables as the original ring.
    back = [
        Polynomial(ring, dict(g.terms)) for g in contracted.gens
    ]
    G = buchberger(IdealBasis(ring, back), GREVLEX, degree_cap)
    return IdealBasis(ring, G.elements)


def _exact_div(h, g, order=GREVLEX):
    """Quotient h / g for exact division; raises on nonzero remainder."""
    ring = h.ring
    field = ring.field
    gm, gc = leading_term(g, order)
    gc_inv = field.inverse(gc)
    q = ring.zero()
    r = h
    while not r.is_zero():
        m, c = leading_term(r, order)
        if not ring.mono_divides(gm, m):
            raise ArithmeticError("division is not exact")
        piece = ring.monomial(ring.mono_div(m, gm), c * gc_inv)
        q = q + piece
        r = r - piece * g
    return q


def colon(I, J, degree_cap=DEFAULT_DEGREE_CAP):
    """The quotient ideal (I : J) = {f | f*J inside I}."""
    if I.ring != J.ring:
        raise ContextMismatch("ideals in different rings")
    ring = I.ring
    if J.is_zero():
        return IdealBasis(ring, [ring.one()])
    result = None
    for g in J.gens:
        meet = intersect(I, IdealBasis(ring, [g]), degree_cap)
        quots = [_exact_div(h, g) for h in meet.gens]
        part = IdealBasis(ring, quots)
        result = part if result is None else intersect(result, part, degree_cap)
    G = buchberger(result, GREVLEX, degree_cap)
    return IdealBasis(ring, G.elements)


def kernel_of_map(source_ring, images, target_basis, degree_cap=DEFAULT_DEGREE_CAP):
    """Kernel of k[source] -> k[target]/target_ideal, one image per variable.

    Computed in a joint ring (target variables in the elimination block,
    source variables retained) from target_ideal + <source_i - image_i>.
    """
    target_ring = target_basis.ring
    if len(images) != source_ring.nvars:
        raise ValueError("one image per source variable")
    tnames = [f"@{n}" for n in target_ring.names]
    joint = PolyRing(
        source_ring.field,
        tnames + list(source_ring.names),
        list(target_ring.weights) + list(source_ring.weights),
    )
    t_slot = {i: i for i in range(target_ring.nvars)}
    s_slot = {i: i + target_ring.nvars for i in range(source_ring.nvars)}
    gens = [_map_exponents(g, joint, t_slot) for g in target_basis.gens]
    for i, img in enumerate(images):
        if img.ring != target_ring:
            raise ContextMismatch("image not in target ring")
        gens.append(
            _map_exponents(source_ring.var(source_ring.names[i]), joint, s_slot)
            - _map_exponents(img, joint, t_slot)
        )
    contracted = eliminate(IdealBasis(joint, gens), tnames, degree_cap)
    back = [Polynomial(source_ring, dict(g.terms)) for g in contracted.gens]
    G = buchberger(IdealBasis(source_ring, back), GREVLEX, degree_cap)
    return IdealBasis(source_ring, G.elements)
