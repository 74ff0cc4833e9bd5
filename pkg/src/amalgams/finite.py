"""Brute-force prime spectra of finite commutative rings.

Finite rings are explicit addition/multiplication tables; amalgams are
built as literal subrings of a product ring, so every structural claim
(cardinality, spectrum classification) is checked by exhaustive
enumeration rather than symbolically.
"""

from __future__ import annotations

import random

import numpy as np

from .errors import NotAHom, NotARing, SizeCap

EXHAUSTIVE_CHECK_BOUND = 64
SPECTRUM_SIZE_CAP = 4096
RANDOM_CHECK_SAMPLES = 2000


class FiniteRing:
    """Commutative unital ring on labels 0..n-1 with 0 = zero, 1 = one."""

    def __init__(self, add, mul, name=None, check=True):
        self.add = np.asarray(add, dtype=np.int64)
        self.mul = np.asarray(mul, dtype=np.int64)
        self.n = self.add.shape[0]
        self.name = name
        if self.add.shape != (self.n, self.n) or self.mul.shape != (self.n, self.n):
            raise NotARing("tables must be square and of equal size")
        if check:
            self._check_axioms()

    def _check_axioms(self):
        add, mul, n = self.add, self.mul, self.n
        if np.any(add < 0) or np.any(add >= n) or np.any(mul < 0) or np.any(mul >= n):
            raise NotARing("table entries out of range")
        if not np.array_equal(add, add.T):
            raise NotARing("addition is not commutative")
        if not np.array_equal(mul, mul.T):
            raise NotARing("multiplication is not commutative")
        if not np.array_equal(add[0], np.arange(n)):
            raise NotARing("0 is not an additive identity")
        one = 1 if n > 1 else 0
        if not np.array_equal(mul[one], np.arange(n)):
            raise NotARing("1 is not a multiplicative identity")
        # every element needs an additive inverse
        if not np.array_equal(np.sort(add, axis=1), np.tile(np.arange(n), (n, 1))):
            raise NotARing("addition rows are not permutations")
        if self.n <= EXHAUSTIVE_CHECK_BOUND:
            i = np.arange(n)
            a = i[:, None, None]
            b = i[None, :, None]
            c = i[None, None, :]
            if not np.array_equal(add[add[a, b], c], add[a, add[b, c]]):
                raise NotARing("addition is not associative")
            if not np.array_equal(mul[mul[a, b], c], mul[a, mul[b, c]]):
                raise NotARing("multiplication is not associative")
            if not np.array_equal(mul[a, add[b, c]], add[mul[a, b], mul[a, c]]):
                raise NotARing("distributivity fails")
        else:
            rng = random.Random(0)
            for _ in range(RANDOM_CHECK_SAMPLES):
                a = rng.randrange(n)
                b = rng.randrange(n)
                c = rng.randrange(n)
                if add[add[a, b], c] != add[a, add[b, c]]:
                    raise NotARing("addition is not associative")
                if mul[mul[a, b], c] != mul[a, mul[b, c]]:
                    raise NotARing("multiplication is not associative")
                if mul[a, add[b, c]] != add[mul[a, b], mul[a, c]]:
                    raise NotARing("distributivity fails")

    @property
    def one(self):
        return 1 if self.n > 1 else 0

    def neg(self, a):
        return int(np.nonzero(self.add[a] == 0)[0][0])

    def __repr__(self):
        return self.name or f"FiniteRing(order {self.n})"


def _relabel(add, mul, perm):
    """Apply a label permutation (perm[i] = new label of old element i)."""
    inv = np.empty_like(perm)
    inv[perm] = np.arange(len(perm))
    return perm[add[np.ix_(inv, inv)]], perm[mul[np.ix_(inv, inv)]]


def _normalize_one(add, mul, one_idx):
    n = add.shape[0]
    perm = np.arange(n)
    if n > 1 and one_idx != 1:
        perm[one_idx], perm[1] = 1, one_idx
    return _relabel(add, mul, perm), perm


def zmod(n, name=None):
    """The ring Z/n."""
    if n < 1:
        raise NotARing("order must be positive")
    i = np.arange(n)
    add = (i[:, None] + i[None, :]) % n
    mul = (i[:, None] * i[None, :]) % n
    return FiniteRing(add, mul, name=name or f"Z/{n}")


class ProductRing(FiniteRing):
    """A x B with pair (a, b) <-> index; (0,0) -> 0 and (1,1) -> 1."""

    def __init__(self, A, B, name=None):
        nA, nB = A.n, B.n
        n = nA * nB
        a = np.arange(n) // nB
        b = np.arange(n) % nB
        add = A.add[a[:, None], a[None, :]] * nB + B.add[b[:, None], b[None, :]]
        mul = A.mul[a[:, None], a[None, :]] * nB + B.mul[b[:, None], b[None, :]]
        one_raw = A.one * nB + B.one
        (add, mul), perm = _normalize_one(add, mul, one_raw)
        self.factors = (A, B)
        self._perm = perm  # raw pair index -> label
        super().__init__(add, mul, name=name or f"{A} x {B}")

    def pair_index(self, a, b):
        return int(self._perm[a * self.factors[1].n + b])

    def unpair(self, idx):
        raw = int(np.nonzero(self._perm == idx)[0][0])
        return raw // self.factors[1].n, raw % self.factors[1].n


def quotient_ring(R, I, name=None):
    """R / I with cosets labeled by their smallest representative."""
    elems = sorted(I.elements)
    coset_of = {}
    reps = []
    for a in range(R.n):
        if a in coset_of:
            continue
        coset = sorted(int(R.add[a, i]) for i in elems)
        for c in coset:
            coset_of[c] = len(reps)
        reps.append(coset[0])
    m = len(reps)
    add = np.array([[coset_of[int(R.add[x, y])] for y in reps] for x in reps])
    mul = np.array([[coset_of[int(R.mul[x, y])] for y in reps] for x in reps])
    (add, mul), _ = _normalize_one(add, mul, coset_of[R.one])
    return FiniteRing(add, mul, name=name or f"{R}/I")


class FiniteIdeal:
    """An ideal of a finite ring, stored as a frozen element set."""

    def __init__(self, ring, elements, check=True):
        self.ring = ring
        self.elements = frozenset(int(e) for e in elements)
        if check:
            if 0 not in self.elements:
                raise NotARing("ideal must contain 0")
            for a in self.elements:
                for b in self.elements:
                    if int(ring.add[a, b]) not in self.elements:
                        raise NotARing("not closed under addition")
            for a in self.elements:
                for r in range(ring.n):
                    if int(ring.mul[r, a]) not in self.elements:
                        raise NotARing("not absorbing under multiplication")

    def is_proper(self):
        return self.ring.one not in self.elements

    def __eq__(self, other):
        return (
            isinstance(other, FiniteIdeal)
            and self.ring is other.ring
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash(self.elements)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return "{" + ", ".join(str(e) for e in sorted(self.elements)) + "}"


def ideal_generated_by(R, gens):
    """Smallest ideal containing the given elements."""
    elems = set()
    for g in gens:
        for r in range(R.n):
            elems.add(int(R.mul[r, g]))
    elems.add(0)
    # additive closure (multiples are already closed under scaling)
    frontier = True
    while frontier:
        frontier = False
        for a in list(elems):
            for b in list(elems):
                s = int(R.add[a, b])
                if s not in elems:
                    elems.add(s)
                    frontier = True
    return FiniteIdeal(R, elems, check=False)


def all_ideals(R):
    """The ideal lattice, as the join-closure of all principal ideals."""
    principals = {ideal_generated_by(R, [a]).elements for a in range(R.n)}
    lattice = set(principals)
    frontier = set(principals)
    while frontier:
        new = set()
        for I in frontier:
            for P in principals:
                J = ideal_generated_by(R, I | P).elements
                if J not in lattice:
                    lattice.add(J)
                    new.add(J)
        frontier = new
    return [FiniteIdeal(R, e, check=False) for e in sorted(lattice, key=sorted)]


def enumerate_primes(R):
    """All prime ideals (= maximal ideals in a finite commutative ring)."""
    if R.n > SPECTRUM_SIZE_CAP:
        raise SizeCap(f"|R| = {R.n} exceeds the spectrum cap {SPECTRUM_SIZE_CAP}")
    primes = []
    for I in all_ideals(R):
        if not I.is_proper():
            continue
        outside = [a for a in range(R.n) if a not in I.elements]
        if all(
            int(R.mul[a, b]) not in I.elements for a in outside for b in outside
        ):
            primes.append(I)
    return primes


def check_hom(A, B, images):
    """Verify a unital ring hom A -> B given as an image list, exhaustively."""
    f = [int(x) for x in images]
    if len(f) != A.n:
        raise NotAHom("one image per element")
    if f[0] != 0 or f[A.one] != B.one:
        raise NotAHom("does not preserve 0 and 1")
    for a in range(A.n):
        for b in range(A.n):
            if f[int(A.add[a, b])] != int(B.add[f[a], f[b]]):
                raise NotAHom(f"additivity fails at ({a}, {b})")
            if f[int(A.mul[a, b])] != int(B.mul[f[a], f[b]]):
                raise NotAHom(f"multiplicativity fails at ({a}, {b})")
    return f


class PrimeLabel:
    """A candidate prime of the amalgam, tagged by its source."""

    FROM_A = "FromA"
    FROM_B = "FromB"

    def __init__(self, tag, source, elements):
        self.tag = tag
        self.source = source  # the source prime's element set
        self.elements = elements  # the candidate's element set in the amalgam

    def __repr__(self):
        return f"{self.tag}({sorted(self.source)})"


class FiniteAmalgam:
    """The subring {(a, f(a)+j)} of A x B, with its own tables."""

    def __init__(self, A, B, f, J):
        if A.n * B.n > SPECTRUM_SIZE_CAP:
            raise SizeCap("product ring exceeds the size cap")
        self.A = A
        self.B = B
        self.f = check_hom(A, B, f)
        self.J = J
        pairs = sorted(
            {(a, int(B.add[self.f[a], j])) for a in range(A.n) for j in J.elements}
        )
        if len(pairs) != A.n * len(J.elements):
            raise NotARing(
                "amalgam cardinality differs from |A| * |J|; construction invalid"
            )
        self.pairs = pairs
        index = {p: i for i, p in enumerate(pairs)}
        m = len(pairs)
        add = np.zeros((m, m), dtype=np.int64)
        mul = np.zeros((m, m), dtype=np.int64)
        for i, (a1, b1) in enumerate(pairs):
            for k, (a2, b2) in enumerate(pairs):
                s = (int(A.add[a1, a2]), int(B.add[b1, b2]))
                t = (int(A.mul[a1, a2]), int(B.mul[b1, b2]))
                if s not in index or t not in index:
                    raise NotARing("amalgam subset is not closed in A x B")
                add[i, k] = index[s]
                mul[i, k] = index[t]
        one_idx = index[(A.one, B.one)]
        (add, mul), perm = _normalize_one(add, mul, one_idx)
        self._perm = perm
        self.ring = FiniteRing(add, mul, name="amalgam")
        self.index = {p: int(perm[i]) for p, i in index.items()}

    @property
    def order(self):
        return len(self.pairs)

    def subset_from_A_prime(self, p):
        """p'^f = {(a, f(a)+j) : a in p, j in J}."""
        return frozenset(
            self.index[(a, int(self.B.add[self.f[a], j]))]
            for a in p.elements
            for j in self.J.elements
        )

    def subset_from_B_prime(self, q):
        """q^bar^f = {(a, f(a)+j) : f(a)+j in q}."""
        return frozenset(
            i for (a, b), i in self.index.items() if b in q.elements
        )


def build_amalgam(A, B, f, J):
    return FiniteAmalgam(A, B, f, J)


def classify_primes(W):
    """Compare brute-force Spec(W) with the pullback candidates.

    Candidates are p'^f for p in Spec(A) and q^bar^f for q in Spec(B) not
    containing J; the verdict is exact set equality.
    """
    actual = {P.elements for P in enumerate_primes(W.ring)}
    labels = []
    candidates = set()
    for p in enumerate_primes(W.A):
        s = W.subset_from_A_prime(p)
        labels.append(PrimeLabel(PrimeLabel.FROM_A, p.elements, s))
        candidates.add(s)
    for q in enumerate_primes(W.B):
        if W.J.elements <= q.elements:
            continue  # q contains J: excluded (Spec(B) minus V(J))
        s = W.subset_from_B_prime(q)
        labels.append(PrimeLabel(PrimeLabel.FROM_B, q.elements, s))
        candidates.add(s)
    verdict = candidates == actual
    return labels, verdict


def find_isomorphism(R, S):
    """Backtracking table-isomorphism search; None when not isomorphic."""
    if R.n != S.n:
        return None
    n = R.n
    phi = [None] * n
    used = [False] * n
    phi[0] = 0
    used[0] = True
    if n > 1:
        phi[R.one], used[S.one] = S.one, True

    def consistent(a):
        for b in range(n):
            if phi[b] is None:
                continue
            s = int(R.add[a, b])
            t = int(R.mul[a, b])
            if phi[s] is not None and phi[s] != int(S.add[phi[a], phi[b]]):
                return False
            if phi[s] is None and used[int(S.add[phi[a], phi[b]])]:
                return False
            if phi[t] is not None and phi[t] != int(S.mul[phi[a], phi[b]]):
                return False
        return True

    def backtrack():
        try:
            a = phi.index(None)
        except ValueError:
            # full assignment: verify both tables outright
            for x in range(n):
                for y in range(n):
                    if phi[int(R.add[x, y])] != int(S.add[phi[x], phi[y]]):
                        return False
                    if phi[int(R.mul[x, y])] != int(S.mul[phi[x], phi[y]]):
                        return False
            return True
        for img in range(n):
            if used[img]:
                continue
            phi[a] = img
            used[img] = True
            if consistent(a) and backtrack():
                return True
            phi[a] = None
            used[img] = False
        return False

    return list(phi) if backtrack() else None
