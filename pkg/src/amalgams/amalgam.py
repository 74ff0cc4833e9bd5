"""Finite presentations of amalgamated algebras.

Given a graded hom f : A -> B and a homogeneous ideal J of B with listed
generators j_1..j_m, the amalgamated algebra {(a, f(a) + j)} is presented
as C/K with C = k[x's, z_1..z_m] (one z per listed generator, weighted by
its degree) and K the intersection of two explicit kernels:

    K_A = I_A*C + (z_1..z_m)          (kernel over the first factor)
    K_B = ker(C -> B), x -> f(x), z_t -> j_t

The construction never assumes the listed generators are enough to reach
the whole subring: that is certified a posteriori by the exact
Hilbert-series identity HS(C/K) = HS(A) + HS(J), the graded shadow of the
split exact sequence 0 -> J -> (A join J) -> A -> 0.
"""

from __future__ import annotations

from .errors import JUnit, NotHomogeneous, UnitIdeal
from .gb import (
    DEFAULT_DEGREE_CAP,
    IdealBasis,
    buchberger,
    colon,
    intersect,
    kernel_of_map,
)
from .homology import hilbert_series
from .modules import FPModule
from .poly import GREVLEX, PolyRing, Polynomial
from .ring import (
    IdealHandle,
    PresentedRing,
    RingHom,
    hom_check,
    identity_hom,
)


class AmalgamSpec:
    """Input data: rings A, B, a verified graded hom f, and J-generators."""

    def __init__(self, A, B, f, J):
        if not f.verified:
            hom_check(f)
        self.A = A
        self.B = B
        self.f = f
        self.J = J


class CertStatus:
    UNCHECKED = "Unchecked"
    CERTIFIED = "Certified"
    NOT_SURJECTIVE = "NotSurjective"

    def __init__(self, status, witness_degree=None):
        self.status = status
        self.witness_degree = witness_degree

    def is_certified(self):
        return self.status == CertStatus.CERTIFIED

    def __repr__(self):
        if self.status == CertStatus.NOT_SURJECTIVE:
            return f"NotSurjective(witness degree {self.witness_degree})"
        return self.status

    def __eq__(self, other):
        return (
            isinstance(other, CertStatus)
            and self.status == other.status
            and self.witness_degree == other.witness_degree
        )


def _fresh_names(base, count, taken):
    prefix = base
    while any(f"{prefix}{i}" in taken for i in range(1, count + 1)):
        prefix = base + prefix
    return [f"{prefix}{i}" for i in range(1, count + 1)]


class AmalgamPresentation:
    """The presented ring C/K plus the bookkeeping maps."""

    def __init__(self, spec, ring, K_A, K_B, z_names, images):
        self.spec = spec
        self.ring = ring  # PresentedRing C/K
        self.K = ring.defining
        self.K_A = K_A
        self.K_B = K_B
        self.z_names = z_names
        self.images = images  # images of C's variables in B (x -> f(x), z -> j)
        self.certificate = CertStatus(CertStatus.UNCHECKED)

    @property
    def ambient(self):
        return self.ring.ambient

    def z_polys(self):
        return [self.ambient.var(n) for n in self.z_names]

    def projection_to_A(self, g):
        """Image of a representative under C -> A, x -> x, z -> 0."""
        amb_A = self.spec.A.ambient
        n = amb_A.nvars
        terms = {}
        for m, c in g.terms.items():
            if any(e != 0 for e in m[n:]):
                continue
            terms[m[:n]] = c
        return self.spec.A.reduce(Polynomial(amb_A, terms))

    def __repr__(self):
        return f"AmalgamPresentation({self.ring!r}, certificate={self.certificate})"


def amalgam_present(spec, degree_cap=DEFAULT_DEGREE_CAP):
    """Build the presentation C/K = C/(K_A ∩ K_B) of the amalgam."""
    A, B, f, J = spec.A, spec.B, spec.f, spec.J
    jgens = [B.reduce(g) for g in J.generators]
    jgens = [g for g in jgens if not g.is_zero()]
    try:
        PresentedRing(B.ambient, list(B.defining.elements) + jgens, degree_cap)
    except UnitIdeal:
        raise JUnit("the listed generators generate the unit ideal of B")
    m = len(jgens)
    z_names = _fresh_names("z", m, set(A.names))
    z_weights = [g.degree() for g in jgens]
    C = PolyRing(A.ambient.field, list(A.names) + z_names, list(A.weights) + z_weights)

    # K_A = I_A*C + (z's)
    lifted_IA = [
        Polynomial(C, {tuple(mm) + (0,) * m: c for mm, c in g.terms.items()})
        for g in A.defining.elements
    ]
    K_A = IdealBasis(C, lifted_IA + [C.var(n) for n in z_names])

    # K_B = ker(C -> B), x -> f(x), z_t -> j_t
    images = [B.reduce(img) for img in f.images] + jgens
    K_B = kernel_of_map(C, images, IdealBasis(B.ambient, B.defining.elements), degree_cap)

    K = intersect(K_A, K_B, degree_cap)
    presented = PresentedRing(C, K.gens, degree_cap)
    return AmalgamPresentation(spec, presented, K_A, K_B, z_names, images)


def verify_presentation(P, target=None, degree_cap=DEFAULT_DEGREE_CAP):
    """Certify HS(C/K) = HS(A) + HS(J) as exact rational functions.

    `target` may name a different ideal handle in B to compare against
    (e.g. the intended J when the listed generators are suspected to miss
    part of it).  On inequality the smallest degree where the graded
    dimensions differ is reported; the presented ring is then the proper
    subring generated by the images, not the full amalgam.
    """
    spec = P.spec
    J = target if target is not None else spec.J
    hs_left = hilbert_series(P.ring, degree_cap)
    hs_A = hilbert_series(spec.A, degree_cap)
    hs_J = hilbert_series(J, degree_cap)
    hs_right = hs_A + hs_J
    witness = hs_left.first_difference(hs_right)
    if witness is None:
        status = CertStatus(CertStatus.CERTIFIED)
    else:
        status = CertStatus(CertStatus.NOT_SURJECTIVE, witness)
    P.certificate = status
    return status


def duplication(A, I):
    """Amalgamated duplication along an ideal: B = A, f = id, J = I."""
    return AmalgamSpec(A, A, identity_hom(A), I)


def trivial_extension(A, M, degree_cap=DEFAULT_DEGREE_CAP):
    """Idealization of a module: B = A plus square-zero generators for M.

    M is a finitely presented graded module over A's ambient ring with
    positive generator degrees; the result is the amalgam data whose
    presentation realizes the trivial extension.
    """
    if not isinstance(M, FPModule):
        raise TypeError("expected a finitely presented module")
    if M.ring != A.ambient:
        raise NotHomogeneous("module lives over a different ambient ring")
    M = M.minimal_presentation(degree_cap)
    # variable weights must be positive: normalize so the lowest generator
    # sits in degree 1 (a grading shift does not change the ring structure)
    if M.twists and min(M.twists) < 1:
        M = M.shift(1 - min(M.twists))
    degs = list(M.twists)
    s = len(degs)
    e_names = _fresh_names("e", s, set(A.names))
    amb = PolyRing(A.ambient.field, list(A.names) + e_names, list(A.weights) + degs)
    lift = lambda g: Polynomial(
        amb, {tuple(mm) + (0,) * s: c for mm, c in g.terms.items()}
    )
    gens = [lift(g) for g in A.defining.elements]
    evars = [amb.var(n) for n in e_names]
    for rel in M.relations:
        poly = amb.zero()
        for i in range(s):
            poly = poly + lift(rel.component_poly(i)) * evars[i]
        if not poly.is_zero():
            gens.append(poly)
    for i in range(s):
        for j in range(i, s):
            gens.append(evars[i] * evars[j])
    B = PresentedRing(amb, gens, degree_cap)
    f = hom_check(RingHom(A, B, [amb.var(n) for n in A.names]))
    J = IdealHandle(B, evars)
    return AmalgamSpec(A, B, f, J)


def hom_A_into_R(P, degree_cap=DEFAULT_DEGREE_CAP):
    """The ideal (K : (z's))/K of C/K, realizing Hom_R(A, R) = Ann_R(0 x J)."""
    amb = P.ambient
    zs = P.z_polys()
    if not zs:
        return IdealHandle(P.ring, [amb.one()])
    quot = colon(
        IdealBasis(amb, list(P.K.elements)), IdealBasis(amb, zs), degree_cap
    )
    gens = []
    for g in quot.gens:
        r = P.ring.reduce(g)
        if not r.is_zero():
            gens.append(r)
    return IdealHandle(P.ring, gens)


def retraction_ideal_identity(P, degree_cap=DEFAULT_DEGREE_CAP):
    """Check K + (z's) = I_A*C + (z's) as ideals of C (GB equality)."""
    amb = P.ambient
    zs = [amb.var(n) for n in P.z_names]
    left = buchberger(
        IdealBasis(amb, list(P.K.elements) + zs), GREVLEX, degree_cap
    )
    right = buchberger(
        IdealBasis(amb, list(P.K_A.gens)), GREVLEX, degree_cap
    )
    return left.elements == right.elements
