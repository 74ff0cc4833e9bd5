"""Finitely presented graded rings, graded homomorphisms, and ideals inside
quotient rings.

A PresentedRing is k[x_1..x_n]/I with positive integer variable weights and
a homogeneous defining ideal stored as a reduced grevlex Groebner basis.
Local statements are modeled at the irrelevant maximal ideal (all
variables), where graded and local notions of depth and dimension agree.
"""

from __future__ import annotations

from .errors import (
    ContextMismatch,
    DegreeMismatch,
    NotHomogeneous,
    NotWellDefined,
    UnitIdeal,
)
from .gb import (
    DEFAULT_DEGREE_CAP,
    GroebnerBasis,
    IdealBasis,
    buchberger,
    kernel_of_map,
    normal_form,
)
from .poly import GREVLEX, PolyRing, parse_poly


class PresentedRing:
    """Quotient of a weighted polynomial ring by a homogeneous ideal."""

    def __init__(self, ambient, generators, degree_cap=DEFAULT_DEGREE_CAP):
        self.ambient = ambient
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = parse_poly(ambient, g)
            if g.ring != ambient:
                raise ContextMismatch("generator in wrong ambient ring")
            if g.is_zero():
                continue
            if not g.is_homogeneous():
                raise NotHomogeneous(f"generator {g} mixes weighted degrees")
            gens.append(g)
        self.defining = buchberger(IdealBasis(ambient, gens), GREVLEX, degree_cap)
        if self.defining.contains_one():
            raise UnitIdeal("1 lies in the defining ideal")
        self.homogeneous = True

    @property
    def p(self):
        return self.ambient.p

    @property
    def names(self):
        return self.ambient.names

    @property
    def weights(self):
        return self.ambient.weights

    def parse(self, text):
        return parse_poly(self.ambient, text)

    def reduce(self, f):
        """Canonical representative of f modulo the defining ideal."""
        return normal_form(f, self.defining)

    def is_polynomial_ring(self):
        return self.defining.is_zero()

    def standard_monomials(self, d):
        """Monomial k-basis of the degree-d graded piece of the quotient."""
        amb = self.ambient
        lead = self.defining.leading_monomials()
        out = []
        for m in amb.monomials_of_degree(d):
            if not any(amb.mono_divides(lm, m) for lm in lead):
                out.append(m)
        return out

    def __repr__(self):
        if self.defining.is_zero():
            return repr(self.ambient)
        return f"{self.ambient}/{self.defining!r}"


def make_ring(p, variables, generators=(), degree_cap=DEFAULT_DEGREE_CAP):
    """Build a presented ring from (name, weight) pairs and generators.

    Generators may be polynomial strings in the display syntax.
    """
    names = [v[0] if isinstance(v, tuple) else v for v in variables]
    weights = [v[1] if isinstance(v, tuple) else 1 for v in variables]
    ambient = PolyRing(p, names, weights)
    return PresentedRing(ambient, list(generators), degree_cap)


class IdealHandle:
    """An ideal of a quotient ring, stored by homogeneous representatives."""

    def __init__(self, ring, generators):
        self.ring = ring
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = parse_poly(ring.ambient, g)
            if g.ring != ring.ambient:
                raise ContextMismatch("generator in wrong ambient ring")
            if not g.is_homogeneous():
                raise NotHomogeneous(f"generator {g} mixes weighted degrees")
            if ring.reduce(g).is_zero():
                continue
            gens.append(g)
        self.generators = gens

    def is_zero(self):
        return not self.generators

    def generator_degrees(self):
        return [g.degree() for g in self.generators]

    def with_defining(self):
        """IdealBasis of defining ideal + handle generators in the ambient."""
        return IdealBasis(
            self.ring.ambient, list(self.ring.defining.elements) + self.generators
        )

    def __repr__(self):
        if not self.generators:
            return "<0>"
        return "<" + ", ".join(str(g) for g in self.generators) + ">"


class RingHom:
    """Graded homomorphism between presented rings, given by variable images."""

    def __init__(self, source, target, images):
        self.source = source
        self.target = target
        imgs = []
        for im in images:
            if isinstance(im, str):
                im = parse_poly(target.ambient, im)
            if im.ring != target.ambient:
                raise ContextMismatch("image not in target ambient ring")
            imgs.append(im)
        if len(imgs) != source.ambient.nvars:
            raise ValueError("one image per source variable")
        self.images = imgs
        self.verified = False

    def apply(self, f):
        """Image of a source polynomial, reduced in the target."""
        if f.ring != self.source.ambient:
            raise ContextMismatch("argument not in source ring")
        tgt = self.target.ambient
        out = tgt.zero()
        for mono, c in f.terms.items():
            term = tgt.const(c)
            for img, e in zip(self.images, mono):
                if e:
                    term = term * img**e
            out = out + term
        return self.target.reduce(out)

    def is_identity(self):
        return self.source is self.target and all(
            img == self.target.ambient.var(n)
            for img, n in zip(self.images, self.source.names)
        )

    def __repr__(self):
        arrows = ", ".join(
            f"{n} -> {img}" for n, img in zip(self.source.names, self.images)
        )
        return f"hom({arrows})"


def hom_check(f):
    """Verify well-definedness and gradedness; returns the hom or raises."""
    src, tgt = f.source, f.target
    for name, w, img in zip(src.names, src.weights, f.images):
        if img.is_zero():
            continue
        if not img.is_homogeneous() or img.degree() != w:
            raise DegreeMismatch(
                f"image of {name} has degree {img.degree()}, expected {w}"
            )
    for g in src.defining.elements:
        if not f.apply(g).is_zero():
            raise NotWellDefined(f"defining relation {g} does not map to 0")
    f.verified = True
    return f


def identity_hom(ring):
    return hom_check(RingHom(ring, ring, [ring.ambient.var(n) for n in ring.names]))


def compose(g, f):
    """g after f."""
    if f.target is not g.source and f.target.ambient != g.source.ambient:
        raise ContextMismatch("homs not composable")
    return RingHom(f.source, g.target, [g.apply(img) for img in f.images])


def contract_ideal(f, J, degree_cap=DEFAULT_DEGREE_CAP):
    """Preimage f^{-1}(J) as an ideal handle in the source ring."""
    if not f.verified:
        hom_check(f)
    if J.ring is not f.target and J.ring.ambient != f.target.ambient:
        raise ContextMismatch("ideal not in target ring")
    ker = kernel_of_map(
        f.source.ambient, f.images, J.with_defining(), degree_cap
    )
    gens = []
    for g in ker.gens:
        r = f.source.reduce(g)
        if not r.is_zero():
            gens.append(r)
    return IdealHandle(f.source, gens)


def hilbert_function(obj, d):
    """dim_k of the degree-d piece of a ring or of an ideal handle.

    For an ideal handle J in R = ambient/I this is the dimension of the
    image of J in R, i.e. HF(ambient/I, d) - HF(ambient/(I + J), d).
    """
    if d < 0:
        return 0
    if isinstance(obj, PresentedRing):
        return len(obj.standard_monomials(d))
    if isinstance(obj, IdealHandle):
        R = obj.ring
        big = PresentedRing(
            R.ambient, list(R.defining.elements) + obj.generators
        )
        return len(R.standard_monomials(d)) - len(big.standard_monomials(d))
    if isinstance(obj, IdealBasis):
        trivial = PresentedRing(obj.ring, [])
        handle = IdealHandle(trivial, obj.gens)
        return hilbert_function(handle, d)
    raise TypeError(f"cannot take a Hilbert function of {type(obj).__name__}")
