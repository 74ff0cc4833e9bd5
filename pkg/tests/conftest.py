"""Shared helpers: random polynomial generators and a degreewise
linear-algebra oracle over GF(p).

The oracle works degree by degree: the span of a homogeneous ideal in
degree d is the row space of all (monomial) x (generator) products of
that degree, so ranks and membership can be checked by Gaussian
elimination independently of any Groebner machinery.
"""

import random

import pytest

from amalgams.poly import PolyRing


def random_poly(ring, rng, max_degree=3, terms=4):
    out = ring.zero()
    for _ in range(terms):
        expts = tuple(rng.randrange(0, max_degree + 1) for _ in range(ring.nvars))
        out = out + ring.monomial(expts, rng.randrange(ring.p))
    return out


def random_homogeneous(ring, rng, degree, terms=3):
    monos = ring.monomials_of_degree(degree)
    if not monos:
        return ring.zero()
    out = ring.zero()
    for _ in range(terms):
        out = out + ring.monomial(rng.choice(monos), rng.randrange(1, ring.p))
    return out


# ---------------------------------------------------------------------------
# GF(p) Gaussian elimination
# ---------------------------------------------------------------------------


def rref(rows, p):
    """Reduced row echelon form over GF(p); returns nonzero rows as tuples."""
    rows = [list(r) for r in rows]
    out = []
    cols = len(rows[0]) if rows else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    for row in rows[:r]:
        out.append(tuple(x % p for x in row))
    return out


def rank(rows, p):
    return len(rref(rows, p))


def poly_vector(f, basis_index):
    vec = [0] * len(basis_index)
    for mono, c in f.terms.items():
        vec[basis_index[mono]] = c
    return vec


def ideal_degree_rows(ring, gens, d):
    """Row vectors spanning the degree-d piece of the ideal (gens)."""
    basis = ring.monomials_of_degree(d)
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    for g in gens:
        if g.is_zero():
            continue
        gd = g.degree()
        if gd > d:
            continue
        for m in ring.monomials_of_degree(d - gd):
            prod = ring.monomial(m, 1) * g
            rows.append(poly_vector(prod, index))
    if not rows:
        rows = [[0] * max(len(basis), 1)]
    return rows, index


def ideal_degree_dim(ring, gens, d):
    rows, _ = ideal_degree_rows(ring, gens, d)
    return rank(rows, ring.p)


def in_span(f, rows, index, p):
    """Membership of a homogeneous polynomial in a row space."""
    space = rref(rows, p)
    vec = poly_vector(f, index)
    augmented = rref(space + [tuple(vec)], p)
    return len(augmented) == len(space)


def oracle_member(ring, gens, f):
    """Ideal membership of a homogeneous f by degreewise linear algebra."""
    if f.is_zero():
        return True
    rows, index = ideal_degree_rows(ring, gens, f.degree())
    return in_span(f, rows, index, ring.p)


@pytest.fixture
def rng():
    return random.Random(20260823)


@pytest.fixture
def kxy():
    return PolyRing(101, ["x", "y"])


@pytest.fixture
def kxyz():
    return PolyRing(101, ["x", "y", "z"])
