"""Minimal graded free resolutions and derived ring invariants.

All homological algebra happens over the ambient polynomial ring: depth via
the Auslander-Buchsbaum identity (#vars - projective dimension), canonical
modules and the classification predicates via Ext against the ambient ring
and graded local duality.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import ZeroModule
from .gb import (
    DEFAULT_DEGREE_CAP,
    GroebnerBasis,
    IdealBasis,
    buchberger,
    ideal_member,
    intersect,
)
from .modules import (
    FPModule,
    FreeModule,
    ModVec,
    minimal_generators,
    syzygies,
)
from .poly import GREVLEX, leading_term
from .ring import IdealHandle, PresentedRing
from .series import HilbertSeries, lp_add, lp_monomial, lp_neg, lp_zero


class FreeResolution:
    """Minimal graded free resolution F_0 <- F_1 <- ... <- F_c.

    diffs[i] holds the columns of the map F_{i+1} -> F_i as vectors in
    FreeModule(ring, twists[i]).
    """

    def __init__(self, ring, twists, diffs):
        self.ring = ring
        self.twists = twists
        self.diffs = diffs

    @property
    def length(self):
        return len(self.diffs)

    def betti_numbers(self):
        return [len(t) for t in self.twists]

    def betti_string(self):
        return ";".join(str(b) for b in self.betti_numbers())

    def __repr__(self):
        return f"FreeResolution(betti={self.betti_string()})"


def _as_module(obj):
    if isinstance(obj, PresentedRing):
        return FPModule.quotient_ring(obj)
    if isinstance(obj, IdealHandle):
        gens = [obj.ring.reduce(g) for g in obj.generators]
        base = FPModule.from_ideal(obj.ring.ambient, gens)
        return base
    if isinstance(obj, FPModule):
        return obj
    raise TypeError(f"cannot resolve a {type(obj).__name__}")


def free_resolution(obj, degree_cap=DEFAULT_DEGREE_CAP):
    """Minimal free resolution by iterated syzygies of minimal generators.

    Every stage uses a minimal generating set, so no differential carries a
    unit entry and the result is minimal (graded Nakayama).
    """
    M = _as_module(obj).minimal_presentation(degree_cap)
    ring = M.ring
    twists = [list(M.twists)]
    diffs = []
    current = minimal_generators(M.relations, degree_cap)
    while current:
        diffs.append(current)
        twists.append([v.degree() for v in current])
        current = minimal_generators(syzygies(current, degree_cap), degree_cap)
    if len(diffs) > ring.nvars:
        raise AssertionError("resolution longer than the syzygy bound")
    return FreeResolution(ring, twists, diffs)


def hilbert_series(obj, degree_cap=DEFAULT_DEGREE_CAP):
    """Exact rational Hilbert series from the minimal free resolution."""
    if isinstance(obj, IdealHandle):
        # Series of the image of the ideal inside its quotient ring.
        R = obj.ring
        big = PresentedRing(R.ambient, list(R.defining.elements) + obj.generators)
        return hilbert_series(R, degree_cap) - hilbert_series(big, degree_cap)
    if isinstance(obj, IdealBasis):
        trivial = PresentedRing(obj.ring, [])
        return hilbert_series(IdealHandle(trivial, obj.gens), degree_cap)
    res = free_resolution(obj, degree_cap)
    num = lp_zero()
    for i, tw in enumerate(res.twists):
        block = lp_zero()
        for t in tw:
            block = lp_add(block, lp_monomial(t))
        num = lp_add(num, block if i % 2 == 0 else lp_neg(block))
    return HilbertSeries(num, weights=res.ring.weights)


def module_hilbert_function(obj, d, degree_cap=DEFAULT_DEGREE_CAP):
    return hilbert_series(obj, degree_cap).coefficient(d)


def _dim_of_leading_monomials(nvars, lead):
    """Combinatorial Krull dimension of S/(leading ideal).

    The dimension is the largest size of a variable subset U such that no
    leading monomial is supported entirely inside U.
    """
    if any(all(e == 0 for e in m) for m in lead):
        return -1  # unit ideal
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in lead]
    for size in range(nvars, -1, -1):
        for U in combinations(range(nvars), size):
            Uset = set(U)
            if not any(s <= Uset for s in supports):
                return size
    return -1


def krull_dim(obj, degree_cap=DEFAULT_DEGREE_CAP):
    """Krull dimension of a quotient ring or of a finitely presented module."""
    if isinstance(obj, PresentedRing):
        return _dim_of_leading_monomials(
            obj.ambient.nvars, obj.defining.leading_monomials()
        )
    M = _as_module(obj).minimal_presentation(degree_cap)
    if M.is_zero_presentation():
        return -1
    ann = annihilator(M, degree_cap)
    G = buchberger(ann, GREVLEX, degree_cap)
    return _dim_of_leading_monomials(M.ring.nvars, G.leading_monomials())


def depth_ab(obj, degree_cap=DEFAULT_DEGREE_CAP):
    """Depth via Auslander-Buchsbaum: #vars - projective dimension."""
    M = _as_module(obj).minimal_presentation(degree_cap)
    if M.is_zero_presentation():
        raise ZeroModule("depth of the zero module is undefined")
    res = free_resolution(M, degree_cap)
    return M.ring.nvars - res.length


def _dual_columns(res, j):
    """Columns of the dual of d_{j+1}: the map F_j^* -> F_{j+1}^*."""
    ring = res.ring
    target = FreeModule(ring, [-t for t in res.twists[j + 1]])
    cols = []
    for a in range(len(res.twists[j])):
        polys = [
            res.diffs[j][b].component_poly(a)
            for b in range(len(res.twists[j + 1]))
        ]
        cols.append(target.from_polys(polys))
    return cols


def _subquotient(ring, free_twists, ker_gens, im_gens, degree_cap):
    """Present ker/im inside a free module with the given twists."""
    gens = minimal_generators(ker_gens, degree_cap)
    if not gens:
        return FPModule.zero(ring)
    combined = list(gens) + list(im_gens)
    twists = [g.degree() for g in gens] + [g.degree() for g in im_gens]
    syz = syzygies(combined, degree_cap, twists=twists)
    quot_free = FreeModule(ring, [g.degree() for g in gens])
    rels = []
    for s in syz:
        proj = ModVec(
            quot_free,
            {(i, m): c for (i, m), c in s.terms.items() if i < len(gens)},
        )
        if not proj.is_zero():
            rels.append(proj)
    return FPModule(ring, quot_free.twists, rels).minimal_presentation(degree_cap)


def ext_module(obj, j, degree_cap=DEFAULT_DEGREE_CAP):
    """Ext^j against the ambient polynomial ring, as a presented module."""
    M = _as_module(obj)
    ring = M.ring
    if j < 0 or j > ring.nvars:
        raise ValueError("cohomological degree out of range")
    res = free_resolution(M, degree_cap)
    c = res.length
    if j > c or not res.twists[j]:
        return FPModule.zero(ring)
    dual_twists = [-t for t in res.twists[j]]
    if j == c:
        ker_free = FreeModule(ring, dual_twists)
        ker_gens = [ker_free.basis_vector(i) for i in range(ker_free.rank)]
    else:
        cols = _dual_columns(res, j)
        ker_gens = syzygies(cols, degree_cap, twists=dual_twists)
    if j == 0:
        im_gens = []
    else:
        dual_free_j = FreeModule(ring, dual_twists)
        im_gens = []
        for a in range(len(res.twists[j - 1])):
            polys = [
                res.diffs[j - 1][b].component_poly(a)
                for b in range(len(res.twists[j]))
            ]
            v = dual_free_j.from_polys(polys)
            if not v.is_zero():
                im_gens.append(v)
    return _subquotient(ring, dual_twists, ker_gens, im_gens, degree_cap)


def canonical_module(R, degree_cap=DEFAULT_DEGREE_CAP):
    """Graded canonical module: Ext^codim(R, S) twisted by -(sum of weights)."""
    M = _as_module(R)
    ring = M.ring
    c = ring.nvars - krull_dim(R, degree_cap)
    ext = ext_module(M, c, degree_cap)
    return ext.shift(sum(ring.weights))


def hom_modules(M, N, degree_cap=DEFAULT_DEGREE_CAP):
    """Hom(M, N) presented via the kernel of Hom(F0, N) -> Hom(F1, N)."""
    M = _as_module(M).minimal_presentation(degree_cap)
    N = _as_module(N).minimal_presentation(degree_cap)
    ring = M.ring
    if M.is_zero_presentation() or N.is_zero_presentation():
        return FPModule.zero(ring)
    s = len(M.twists)
    u = len(N.twists)
    rel_degs = [r.degree() for r in M.relations]
    r = len(rel_degs)
    src_twists = [
        N.twists[jj] - M.twists[i] for i in range(s) for jj in range(u)
    ]
    src_free = FreeModule(ring, src_twists)
    if r == 0:
        W = [src_free.basis_vector(k) for k in range(src_free.rank)]
    else:
        tgt_twists = [
            N.twists[jj] - rel_degs[k] for k in range(r) for jj in range(u)
        ]
        tgt_free = FreeModule(ring, tgt_twists)
        cols = []
        for i in range(s):
            for jj in range(u):
                # the hom e_i -> eta_jj composes with the relations of M
                terms = {}
                for k in range(r):
                    phi = M.relations[k].component_poly(i)
                    for m, c in phi.terms.items():
                        terms[(k * u + jj, m)] = c
                cols.append(ModVec(tgt_free, terms))
        shifted_rels = []
        for k in range(r):
            for rel in N.relations:
                terms = {
                    (k * u + i, m): c for (i, m), c in rel.terms.items()
                }
                shifted_rels.append(ModVec(tgt_free, terms))
        combined = cols + shifted_rels
        twists = list(src_twists) + [v.degree() for v in shifted_rels]
        syz = syzygies(combined, degree_cap, twists=twists)
        W = []
        for v in syz:
            proj = ModVec(
                src_free,
                {(i, m): c for (i, m), c in v.terms.items() if i < len(cols)},
            )
            if not proj.is_zero():
                W.append(proj)
    im_gens = []
    for i in range(s):
        for rel in N.relations:
            terms = {(i * u + jj, m): c for (jj, m), c in rel.terms.items()}
            im_gens.append(ModVec(src_free, terms))
    return _subquotient(ring, src_twists, W, im_gens, degree_cap)


def annihilator(obj, degree_cap=DEFAULT_DEGREE_CAP):
    """The exact annihilator ideal (0 : M) in the ambient polynomial ring."""
    M = _as_module(obj).minimal_presentation(degree_cap)
    ring = M.ring
    if M.is_zero_presentation():
        return IdealBasis(ring, [ring.one()])
    result = None
    for i in range(len(M.twists)):
        combined = [M.free.basis_vector(i)] + list(M.relations)
        twists = [M.twists[i]] + [r.degree() for r in M.relations]
        syz = syzygies(combined, degree_cap, twists=twists)
        gens = [v.component_poly(0) for v in syz]
        gens = [g for g in gens if not g.is_zero()]
        part = IdealBasis(ring, gens)
        if result is None:
            result = part
        else:
            result = intersect(result, part, degree_cap)
        if result.is_zero():
            return result
    G = buchberger(result, GREVLEX, degree_cap)
    return IdealBasis(ring, G.elements)


@dataclass
class ClassifyReport:
    dim: int
    depth: int
    codim: int
    betti: list
    type: int
    is_cm: bool
    is_gorenstein: bool
    is_quasi_gorenstein: bool
    is_generalized_cm: bool
    serre_level: int
    equidimensional_assumed: bool

    def lines(self):
        def b(v):
            return "true" if v else "false"

        serre = f"S{self.serre_level}"
        if not self.equidimensional_assumed:
            serre += "?"
        return [
            f"dim = {self.dim}",
            f"depth = {self.depth}",
            f"cm = {b(self.is_cm)}",
            f"gorenstein = {b(self.is_gorenstein)}",
            f"quasi_gorenstein = {b(self.is_quasi_gorenstein)}",
            f"generalized_cm = {b(self.is_generalized_cm)}",
            f"serre = {serre}",
            f"type = {self.type}",
            "betti = " + ";".join(str(x) for x in self.betti),
        ]

    def __repr__(self):
        return "\n".join(self.lines())


MAX_SERRE_LEVEL = 4


def classify(R, assume_equidimensional=False, degree_cap=DEFAULT_DEGREE_CAP):
    """Full invariant report for a graded quotient ring.

    The Serre-condition levels use the Ext-dimension criterion, which is
    exact for equidimensional rings and conservative (it may under-report)
    otherwise; the report carries the distinction.
    """
    M = FPModule.quotient_ring(R)
    ring = R.ambient
    n = ring.nvars
    res = free_resolution(M, degree_cap)
    dim = krull_dim(R, degree_cap)
    depth = n - res.length
    codim = n - dim
    betti = res.betti_numbers()
    rtype = betti[-1]
    is_cm = dim == depth
    is_gorenstein = is_cm and rtype == 1

    omega = canonical_module(R, degree_cap)
    mu_omega = len(omega.twists)
    if mu_omega == 1:
        ann = annihilator(omega, degree_cap)
        quasi = all(ideal_member(g, R.defining) for g in ann.gens)
    else:
        quasi = False

    # Dimensions of the nonzero Ext modules above the codimension; zero Ext
    # modules impose no condition.
    ext_dims = {}
    for j in range(codim + 1, n + 1):
        ext = ext_module(M, j, degree_cap)
        if not ext.minimal_presentation(degree_cap).is_zero_presentation():
            ext_dims[j] = krull_dim(ext, degree_cap)
    gcm = all(d <= 0 for d in ext_dims.values())
    serre = 0
    for level in range(1, MAX_SERRE_LEVEL + 1):
        if all(d <= n - j - level for j, d in ext_dims.items()):
            serre = level
        else:
            break

    return ClassifyReport(
        dim=dim,
        depth=depth,
        codim=codim,
        betti=betti,
        type=rtype,
        is_cm=is_cm,
        is_gorenstein=is_gorenstein,
        is_quasi_gorenstein=quasi,
        is_generalized_cm=gcm,
        serre_level=serre,
        equidimensional_assumed=assume_equidimensional,
    )
