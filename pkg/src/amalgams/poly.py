"""Prime-field coefficients and sparse weighted multivariate polynomials.

Coefficients live in GF(p) and are stored as least non-negative residues.
Monomials are dense exponent tuples; each polynomial carries a reference to
its ambient ring context (variable names, weights, field).  All values are
immutable after construction.
"""

from __future__ import annotations

from .errors import (
    ContextMismatch,
    NotPrime,
    ParseError,
    ZeroInverse,
    ZeroPolynomial,
)

DEFAULT_PRIME = 101


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """Arithmetic in GF(p) on plain integer residues."""

    def __init__(self, p):
        if not (2 <= p < 2**31) or not is_prime(p):
            raise NotPrime(f"{p} is not a prime in [2, 2^31)")
        self.p = p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def normalize(self, a):
        return a % self.p

    def inverse(self, a):
        a %= self.p
        if a == 0:
            raise ZeroInverse("0 has no inverse")
        return pow(a, self.p - 2, self.p)


def field_inverse(a, p):
    """Inverse of a in GF(p); raises ZeroInverse when a = 0 mod p."""
    return PrimeField(p).inverse(a)


# ---------------------------------------------------------------------------
# Monomial orders.  An order supplies a sort key for exponent tuples; bigger
# key means bigger monomial.  All three are multiplicative well-orders.


def _grevlex_key(expts, weights):
    deg = sum(e * w for e, w in zip(expts, weights))
    return (deg,) + tuple(-e for e in reversed(expts))


class GrevlexOrder:
    """Weighted degree first, ties by smallest exponent on the last variable."""

    kind = "grevlex"

    def key(self, expts, weights):
        return _grevlex_key(expts, weights)

    def __repr__(self):
        return "grevlex"

    def __eq__(self, other):
        return isinstance(other, GrevlexOrder)

    def __hash__(self):
        return hash("grevlex")


class LexOrder:
    kind = "lex"

    def key(self, expts, weights):
        return tuple(expts)

    def __repr__(self):
        return "lex"

    def __eq__(self, other):
        return isinstance(other, LexOrder)

    def __hash__(self):
        return hash("lex")


class BlockOrder:
    """Eliminates the first `elim_count` variables.

    Compares the front block by weighted grevlex first, so any monomial
    involving a front variable beats every monomial in the back block
    of the same front part.
    """

    kind = "block"

    def __init__(self, elim_count):
        self.elim_count = elim_count

    def key(self, expts, weights):
        k = self.elim_count
        return (
            _grevlex_key(expts[:k], weights[:k]),
            _grevlex_key(expts[k:], weights[k:]),
        )

    def __repr__(self):
        return f"block({self.elim_count})"

    def __eq__(self, other):
        return isinstance(other, BlockOrder) and self.elim_count == other.elim_count

    def __hash__(self):
        return hash(("block", self.elim_count))


GREVLEX = GrevlexOrder()
LEX = LexOrder()


# ---------------------------------------------------------------------------
# Ring context and polynomials.


class PolyRing:
    """Ambient context: GF(p), variable names, positive integer weights."""

    def __init__(self, p, names, weights=None):
        self.field = p if isinstance(p, PrimeField) else PrimeField(p)
        self.names = tuple(names)
        if weights is None:
            weights = (1,) * len(self.names)
        self.weights = tuple(int(w) for w in weights)
        if len(self.weights) != len(self.names):
            raise ValueError("one weight per variable")
        if any(w < 1 for w in self.weights):
            raise ValueError("weights must be positive")
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.nvars = len(self.names)
        self._index = {n: i for i, n in enumerate(self.names)}

    @property
    def p(self):
        return self.field.p

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.names == other.names
            and self.weights == other.weights
        )

    def __hash__(self):
        return hash((self.field, self.names, self.weights))

    def __repr__(self):
        vs = ", ".join(
            n if w == 1 else f"{n}:{w}" for n, w in zip(self.names, self.weights)
        )
        return f"GF({self.p})[{vs}]"

    # -- monomial helpers (exponent tuples) --

    def mono_degree(self, expts):
        return sum(e * w for e, w in zip(expts, self.weights))

    def mono_mul(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def mono_divides(self, a, b):
        """True when a divides b."""
        return all(x <= y for x, y in zip(a, b))

    def mono_div(self, a, b):
        """a / b, assuming divisibility."""
        return tuple(x - y for x, y in zip(a, b))

    def mono_lcm(self, a, b):
        return tuple(max(x, y) for x, y in zip(a, b))

    def one_mono(self):
        return (0,) * self.nvars

    # -- polynomial constructors --

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        c = self.field.normalize(c)
        if c == 0:
            return self.zero()
        return Polynomial(self, {self.one_mono(): c})

    def var(self, name):
        i = self._index[name]
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): 1})

    def gens(self):
        return [self.var(n) for n in self.names]

    def monomial(self, expts, coeff=1):
        expts = tuple(int(e) for e in expts)
        if len(expts) != self.nvars or any(e < 0 for e in expts):
            raise ValueError("bad exponent vector")
        c = self.field.normalize(coeff)
        if c == 0:
            return self.zero()
        return Polynomial(self, {expts: c})

    def from_terms(self, terms):
        """Build a polynomial from an iterable of (exponent tuple, coeff)."""
        acc = {}
        for expts, c in terms:
            expts = tuple(expts)
            acc[expts] = (acc.get(expts, 0) + c) % self.p
        return Polynomial(self, {m: c for m, c in acc.items() if c})

    def monomials_of_degree(self, d):
        """All exponent tuples of weighted degree exactly d, sorted."""
        out = []

        def rec(i, remaining, prefix):
            if i == self.nvars:
                if remaining == 0:
                    out.append(tuple(prefix))
                return
            w = self.weights[i]
            for e in range(remaining // w + 1):
                rec(i + 1, remaining - e * w, prefix + [e])

        rec(0, d, [])
        out.sort()
        return out


class Polynomial:
    """Sparse polynomial: map from exponent tuple to nonzero residue."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._hash = None

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def _check(self, other):
        if self.ring != other.ring:
            raise ContextMismatch(f"{self.ring} vs {other.ring}")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        self._check(other)
        p = self.ring.p
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = (terms.get(m, 0) + c) % p
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {m: p - c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return self.ring.const(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        self._check(other)
        p = self.ring.p
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = (terms.get(m, 0) + c1 * c2) % p
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c):
        c = self.ring.field.normalize(c)
        if c == 0:
            return self.ring.zero()
        p = self.ring.p
        return Polynomial(self.ring, {m: (v * c) % p for m, v in self.terms.items()})

    def degree(self):
        """Maximal weighted degree among terms; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(self.ring.mono_degree(m) for m in self.terms)

    def is_homogeneous(self):
        degs = {self.ring.mono_degree(m) for m in self.terms}
        return len(degs) <= 1

    def homogeneous_parts(self):
        """Map weighted degree -> homogeneous component."""
        parts = {}
        for m, c in self.terms.items():
            parts.setdefault(self.ring.mono_degree(m), {})[m] = c
        return {d: Polynomial(self.ring, t) for d, t in sorted(parts.items())}

    def sorted_terms(self, order=GREVLEX):
        ws = self.ring.weights
        return sorted(
            self.terms.items(), key=lambda mc: order.key(mc[0], ws), reverse=True
        )

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return format_poly(self)


def leading_term(f, order=GREVLEX):
    """(monomial, coefficient) of the maximal term of f under `order`."""
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial has no leading term")
    ws = f.ring.weights
    m = max(f.terms, key=lambda mono: order.key(mono, ws))
    return m, f.terms[m]


def leading_monomial(f, order=GREVLEX):
    return leading_term(f, order)[0]


# ---------------------------------------------------------------------------
# Display and parsing.  Terms are sorted descending by the active order,
# `*` separates factors, exponents use `^`.  The default style prints
# coefficients as least non-negative residues; the signed style renders
# residues above p/2 with a minus sign, which is what the CLI reports use.


def _mono_str(ring, mono):
    parts = []
    for name, e in zip(ring.names, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(f, order=GREVLEX, signed=False):
    if f.is_zero():
        return "0"
    p = f.ring.p
    pieces = []
    for mono, coeff in f.sorted_terms(order):
        neg = False
        if signed and coeff > p // 2:
            neg = True
            coeff = p - coeff
        ms = _mono_str(f.ring, mono)
        if not ms:
            body = str(coeff)
        elif coeff == 1:
            body = ms
        else:
            body = f"{coeff}*{ms}"
        if not pieces:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append(("- " if neg else "+ ") + body)
    return " ".join(pieces)


class _PolyTokens:
    def __init__(self, text):
        self.toks = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                self.toks.append(("int", int(text[i:j])))
                i = j
            elif ch.isalpha() or ch == "_":
                j = i
                while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                self.toks.append(("name", text[i:j]))
                i = j
            elif ch in "+-*^()":
                self.toks.append((ch, ch))
                i += 1
            else:
                raise ParseError(0, f"bad character {ch!r} in polynomial")
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else (None, None)

    def next(self):
        t = self.peek()
        self.pos += 1
        return t


def parse_poly(ring, text):
    """Parse the display syntax back into a Polynomial of `ring`."""
    toks = _PolyTokens(text)

    def factor():
        kind, val = toks.next()
        if kind == "int":
            base = ring.const(val)
        elif kind == "name":
            if val not in ring._index:
                raise ParseError(0, f"unknown variable {val!r}")
            base = ring.var(val)
        elif kind == "(":
            base = expr()
            if toks.next()[0] != ")":
                raise ParseError(0, "expected ')'")
        elif kind == "-":
            return -factor()
        else:
            raise ParseError(0, f"unexpected token {val!r} in polynomial")
        if toks.peek()[0] == "^":
            toks.next()
            kind, n = toks.next()
            if kind != "int":
                raise ParseError(0, "expected integer exponent after '^'")
            base = base**n
        return base

    def term():
        out = factor()
        while toks.peek()[0] == "*":
            toks.next()
            out = out * factor()
        return out

    def expr():
        sign = 1
        if toks.peek()[0] in ("+", "-"):
            sign = -1 if toks.next()[0] == "-" else 1
        out = term().scale(sign)
        while toks.peek()[0] in ("+", "-"):
            op = toks.next()[0]
            t = term()
            out = out + t if op == "+" else out - t
        return out

    result = expr()
    if toks.peek()[0] is not None:
        raise ParseError(0, f"trailing input in polynomial: {text!r}")
    return result
