"""Exact rational Hilbert series.

A series is stored as numerator / product(1 - t^w) with an integer Laurent
polynomial numerator (dict degree -> coefficient) and a denominator that is
itself expanded to a Laurent polynomial.  Equality is decided by
cross-multiplication, so comparisons are exact rational-function identities.
"""

from __future__ import annotations


def lp_zero():
    return {}


def lp_const(c):
    return {0: c} if c else {}


def lp_monomial(d, c=1):
    return {d: c} if c else {}


def lp_add(a, b):
    out = dict(a)
    for d, c in b.items():
        s = out.get(d, 0) + c
        if s:
            out[d] = s
        else:
            out.pop(d, None)
    return out


def lp_neg(a):
    return {d: -c for d, c in a.items()}

def lp_sub(a, b):
    return lp_add(a, lp_neg(b))


def lp_mul(a, b):
    out = {}
    for d1, c1 in a.items():
        for d2, c2 in b.items():
            d = d1 + d2
            s = out.get(d, 0) + c1 * c2
            if s:
                out[d] = s
            else:
                out.pop(d, None)
    return out


def lp_min_degree(a):
    return min(a) if a else None


def lp_str(a):
    if not a:
        return "0"
    parts = []
    for d in sorted(a):
        c = a[d]
        if d == 0:
            body = str(abs(c))
        else:
            t = "t" if d == 1 else f"t^{d}"
            body = t if abs(c) == 1 else f"{abs(c)}*{t}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def denominator_poly(weights):
    """Expanded product of (1 - t^w) over the given weights."""
    out = lp_const(1)
    for w in weights:
        out = lp_mul(out, lp_add(lp_const(1), lp_monomial(w, -1)))
    return out


class HilbertSeries:
    """numerator / denominator with integer Laurent polynomial parts.

    The denominator must have constant term 1 (products of 1 - t^w do),
    which makes power-series expansion well defined.
    """

    def __init__(self, numerator, denominator=None, weights=None):
        if denominator is None:
            denominator = denominator_poly(weights or [])
        self.num = dict(numerator)
        self.den = dict(denominator)
        if self.den.get(0) != 1:
            raise ValueError("denominator must have constant term 1")

    @classmethod
    def zero(cls):
        return cls(lp_zero(), lp_const(1))

    @classmethod
    def of_free_ring(cls, weights):
        return cls(lp_const(1), weights=weights)

    def __add__(self, other):
        if self.den == other.den:
            return HilbertSeries(lp_add(self.num, other.num), self.den)
        return HilbertSeries(
            lp_add(lp_mul(self.num, other.den), lp_mul(other.num, self.den)),
            lp_mul(self.den, other.den),
        )

    def __sub__(self, other):
        return self + HilbertSeries(lp_neg(other.num), other.den)

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        return lp_mul(self.num, other.den) == lp_mul(other.num, self.den)

    def __hash__(self):
        raise TypeError("unhashable")

    def is_zero(self):
        return not self.num

    def shift(self, a):
        """Multiply by t^a (grading shift)."""
        return HilbertSeries({d + a: c for d, c in self.num.items()}, self.den)

    def coefficients(self, upto):
        """Series coefficients in degrees min_deg..upto as a dict."""
        if not self.num:
            return {}
        lo = min(min(self.num), 0)
        coeffs = {}
        # c[d] satisfies sum_k den[k] * c[d-k] = num[d].
        for d in range(lo, upto + 1):
            s = self.num.get(d, 0)
            for k, dc in self.den.items():
                if k == 0:
                    continue
                s -= dc * coeffs.get(d - k, 0)
            if s:
                coeffs[d] = s
        return coeffs

    def coefficient(self, d):
        return self.coefficients(d).get(d, 0)

    def first_difference(self, other, upto=None):
        """Smallest degree where the two series differ, or None if equal.

        The difference of two unequal rational series with denominators of
        constant term 1 first shows up at the trailing degree of the
        cross-multiplied numerator difference, so the search is finite.
        """
        diff = lp_sub(lp_mul(self.num, other.den), lp_mul(other.num, self.den))
        if not diff:
            return None
        bound = max(diff)
        a = self.coefficients(bound)
        b = other.coefficients(bound)
        lo = min(lp_min_degree(diff), 0)
        for d in range(lo, bound + 1):
            if a.get(d, 0) != b.get(d, 0):
                return d
        raise AssertionError("unequal series with no differing coefficient")

    def __repr__(self):
        return f"({lp_str(self.num)}) / ({lp_str(self.den)})"
