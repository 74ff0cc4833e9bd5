import numpy as np
import pytest

from amalgams.errors import NotAHom, NotARing, SizeCap
from amalgams.finite import (
    FiniteAmalgam,
    FiniteIdeal,
    FiniteRing,
    ProductRing,
    all_ideals,
    check_hom,
    classify_primes,
    enumerate_primes,
    find_isomorphism,
    ideal_generated_by,
    quotient_ring,
    zmod,
)


def test_zmod_axioms():
    for n in [1, 2, 6, 12]:
        R = zmod(n)
        assert R.n == n


def test_bad_tables_rejected():
    # swap one multiplication entry of Z/4 to break distributivity
    R = zmod(4)
    mul = R.mul.copy()
    mul[2, 2], mul[2, 3] = mul[2, 3], mul[2, 2]
    mul[3, 2] = mul[2, 3]
    mul[2, 2] = mul[2, 2]
    with pytest.raises(NotARing):
        FiniteRing(R.add, mul)


def test_non_commutative_rejected():
    R = zmod(3)
    mul = R.mul.copy()
    mul[1, 2] = 0
    with pytest.raises(NotARing):
        FiniteRing(R.add, mul)


def test_product_and_quotient():
    P = ProductRing(zmod(4), zmod(2))
    assert P.n == 8
    assert P.pair_index(0, 0) == 0
    assert P.pair_index(1, 1) == 1
    Q = quotient_ring(zmod(8), ideal_generated_by(zmod(8), [4]))
    assert Q.n == 4
    assert find_isomorphism(Q, zmod(4)) is not None
    # Z/2 x Z/3 is isomorphic to Z/6 (CRT)
    P6 = ProductRing(zmod(2), zmod(3))
    assert find_isomorphism(P6, zmod(6)) is not None
    # ... but Z/2 x Z/2 is not isomorphic to Z/4
    assert find_isomorphism(ProductRing(zmod(2), zmod(2)), zmod(4)) is None


def test_ideal_validation():
    R = zmod(6)
    FiniteIdeal(R, [0, 3])
    with pytest.raises(NotARing):
        FiniteIdeal(R, [3])  # missing 0
    with pytest.raises(NotARing):
        FiniteIdeal(R, [0, 1, 3])  # not closed


def test_ideal_lattice():
    # ideals of Z/12 correspond to divisors of 12
    assert len(all_ideals(zmod(12))) == 6
    assert len(all_ideals(zmod(6))) == 4


def test_enumerate_primes():
    assert sorted(sorted(P.elements) for P in enumerate_primes(zmod(6))) == [
        [0, 2, 4],
        [0, 3],
    ]
    assert len(enumerate_primes(zmod(4))) == 1
    assert len(enumerate_primes(ProductRing(zmod(4), zmod(2)))) == 2


def test_size_cap(monkeypatch):
    import amalgams.finite as finite

    monkeypatch.setattr(finite, "SPECTRUM_SIZE_CAP", 4)
    with pytest.raises(SizeCap):
        enumerate_primes(zmod(6))


def test_check_hom():
    check_hom(zmod(6), zmod(6), list(range(6)))
    check_hom(zmod(8), zmod(4), [a % 4 for a in range(8)])
    with pytest.raises(NotAHom):
        check_hom(zmod(8), zmod(4), [a % 4 for a in range(7)])
    with pytest.raises(NotAHom):
        check_hom(zmod(4), zmod(4), [0, 2, 0, 2])  # not unital
    with pytest.raises(NotAHom):
        check_hom(zmod(6), zmod(6), [0, 1, 2, 3, 4, 0])


def test_amalgam_cardinality():
    Z6 = zmod(6)
    J = ideal_generated_by(Z6, [3])
    W = FiniteAmalgam(Z6, Z6, list(range(6)), J)
    assert W.order == 6 * 2
    Z8, Z4 = zmod(8), zmod(4)
    W2 = FiniteAmalgam(Z8, Z4, [a % 4 for a in range(8)], ideal_generated_by(Z4, [2]))
    assert W2.order == 16


def test_classify_primes_duplication_z6():
    Z6 = zmod(6)
    W = FiniteAmalgam(Z6, Z6, list(range(6)), ideal_generated_by(Z6, [3]))
    labels, verdict = classify_primes(W)
    assert verdict
    assert len(enumerate_primes(W.ring)) == 3
    tags = sorted(l.tag for l in labels)
    assert tags == ["FromA", "FromA", "FromB"]


def test_classify_primes_reduction():
    Z8, Z4 = zmod(8), zmod(4)
    W = FiniteAmalgam(Z8, Z4, [a % 4 for a in range(8)], ideal_generated_by(Z4, [2]))
    labels, verdict = classify_primes(W)
    assert verdict
    assert len(enumerate_primes(W.ring)) == 1


def test_classify_primes_product_fixture():
    P = ProductRing(zmod(4), zmod(2))
    J = ideal_generated_by(P, [P.pair_index(2, 0)])
    W = FiniteAmalgam(P, P, list(range(P.n)), J)
    assert W.order == P.n * len(J)
    labels, verdict = classify_primes(W)
    assert verdict


def test_zero_ideal_amalgam_isomorphic_to_A():
    Z6 = zmod(6)
    W = FiniteAmalgam(Z6, Z6, list(range(6)), ideal_generated_by(Z6, [0]))
    assert W.order == 6
    assert find_isomorphism(W.ring, Z6) is not None
    labels, verdict = classify_primes(W)
    assert verdict
    # only FromA candidates: V(J) is everything when J = 0
    assert all(l.tag == "FromA" for l in labels)


def test_embedding_and_retraction():
    """iota_A is injective and P_A (first projection) retracts it."""
    Z6 = zmod(6)
    J = ideal_generated_by(Z6, [3])
    W = FiniteAmalgam(Z6, Z6, list(range(6)), J)
    seen = set()
    for a in range(6):
        idx = W.index[(a, W.f[a])]
        assert idx not in seen
        seen.add(idx)
    for (a, b), idx in W.index.items():
        # the first coordinate recovers a: P_A(iota_A(a)) = a
        if b == W.f[a]:
            assert (a, b) in W.pairs
