"""Truncated power series over exact rationals.

Series2 is a bivariate series in q1, q2 truncated by total degree.
GradedPoly is a single-variable truncated polynomial used to carry a
formal (cohomological) grading through otherwise numeric computations.
"""

from __future__ import annotations

from fractions import Fraction


class Series2:
    """Bivariate power series, terms q1^d1 q2^d2 with d1 + d2 <= cap."""

    __slots__ = ("cap", "terms")

    def __init__(self, cap, terms=None):
        if cap < 0:
            raise ValueError("cap must be nonnegative")
        self.cap = int(cap)
        pruned = {}
        if terms:
            for (d1, d2), coeff in terms.items():
                if d1 < 0 or d2 < 0:
                    raise ValueError("series exponents must be nonnegative")
                coeff = Fraction(coeff)
                if coeff and d1 + d2 <= cap:
                    pruned[(int(d1), int(d2))] = coeff
        self.terms = pruned

    @classmethod
    def one(cls, cap):
        return cls(cap, {(0, 0): 1})

    @classmethod
    def zero(cls, cap):
        return cls(cap)

    def coeff(self, d1, d2):
        return self.terms.get((d1, d2), Fraction(0))

    def constant_term(self):
        return self.coeff(0, 0)

    def __eq__(self, other):
        if isinstance(other, Series2):
            return self.cap == other.cap and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.cap, frozenset(self.terms.items())))

    def __add__(self, other):
        cap = min(self.cap, other.cap)
        terms = {k: v for k, v in self.terms.items() if k[0] + k[1] <= cap}
        for k, v in other.terms.items():
            if k[0] + k[1] <= cap:
                new = terms.get(k, 0) + v
                if new:
                    terms[k] = new
                else:
                    terms.pop(k, None)
        return Series2(cap, terms)

    def __neg__(self):
        return Series2(self.cap, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Series2(self.cap, {k: v * other for k, v in self.terms.items()})
        cap = min(self.cap, other.cap)
        terms = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                d1, d2 = a1 + a2, b1 + b2
                if d1 + d2 > cap:
                    continue
                key = (d1, d2)
                new = terms.get(key, 0) + c1 * c2
                if new:
                    terms[key] = new
                else:
                    del terms[key]
        return Series2(cap, terms)

    __rmul__ = __mul__

    def log(self):
        """log(s) for a series with constant term 1."""
        if self.constant_term() != 1:
            raise ValueError("non-unit series power")
        x = self - Series2.one(self.cap)
        # log(1+x) = sum (-1)^(k-1) x^k / k; x has positive valuation.
        result = Series2.zero(self.cap)
        power = Series2.one(self.cap)
        for k in range(1, self.cap + 1):
            power = power * x
            if not power.terms:
                break
            result = result + power * Fraction((-1) ** (k - 1), k)
        return result

    def exp(self):
        """exp(s) for a series with constant term 0."""
        if self.constant_term() != 0:
            raise ValueError("exp requires zero constant term")
        result = Series2.one(self.cap)
        power = Series2.one(self.cap)
        fact = 1
        for k in range(1, self.cap + 1):
            power = power * self
            if not power.terms:
                break
            fact *= k
            result = result + power * Fraction(1, fact)
        return result

    def pow(self, r):
        """s^r for rational r, requiring constant term 1."""
        if self.constant_term() != 1:
            raise ValueError("non-unit series power")
        r = Fraction(r)
        if r == 0:
            return Series2.one(self.cap)
        if r.denominator == 1 and abs(r) <= self.cap + 1:
            n = r.numerator
            base = self if n > 0 else self.inverse()
            result = Series2.one(self.cap)
            for _ in range(abs(n)):
                result = result * base
            return result
        return (self.log() * r).exp()

    def inverse(self):
        """1/s for a series with constant term 1, via 1/(1+x) = sum (-x)^k."""
        if self.constant_term() != 1:
            raise ValueError("non-unit series power")
        x = self - Series2.one(self.cap)
        result = Series2.one(self.cap)
        power = Series2.one(self.cap)
        sign = 1
        for _ in range(self.cap):
            power = power * x
            sign = -sign
            if not power.terms:
                break
            result = result + power * sign
        return result

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (d1, d2), c in sorted(self.terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0])):
            mono = []
            if d1:
                mono.append(f"q1^{d1}" if d1 != 1 else "q1")
            if d2:
                mono.append(f"q2^{d2}" if d2 != 1 else "q2")
            if not mono:
                bits.append(str(c))
            else:
                bits.append((f"{c}*" if c != 1 else "") + "*".join(mono))
        return " + ".join(bits)


def binomial_factor_series(d1, d2, r, cap):
    """(1 - q1^d1 q2^d2)^r truncated by total degree, r rational."""
    base = Series2(cap, {(0, 0): 1, (d1, d2): -1})
    return base.pow(r)


def product_formula(factors, cap):
    """Truncated product of families of binomial factors.

    Each entry of `factors` is ((d1, d2), r): it contributes the product
    over n >= 1 of (1 - q1^(d1+n-1) q2^(d2+n-1))^r, i.e. the base monomial
    pushed along the diagonal.  Factors whose monomial exceeds the cap are
    dropped, which is exact for a total-degree truncation.
    """
    result = Series2.one(cap)
    for (d1, d2), r in factors:
        if d1 + d2 <= 0:
            raise ValueError("factor monomials must have positive total degree")
        r = Fraction(r)
        if r == 0:
            continue
        n = 0
        while True:
            e1, e2 = d1 + n, d2 + n
            if e1 + e2 > cap:
                break
            result = result * binomial_factor_series(e1, e2, r, cap)
            n += 1
    return result


class GradedPoly:
    """Truncated polynomial in one formal grading variable.

    coeffs[k] is the (numeric) coefficient in degree k; degrees above cap
    are discarded.
    """

    __slots__ = ("cap", "coeffs")

    def __init__(self, cap, coeffs=None):
        self.cap = int(cap)
        cs = [Fraction(0)] * (self.cap + 1)
        if coeffs is not None:
            for k, c in enumerate(coeffs):
                if k > self.cap:
                    break
                cs[k] = Fraction(c)
        self.coeffs = cs

    @classmethod
    def one(cls, cap):
        g = cls(cap)
        g.coeffs[0] = Fraction(1)
        return g

    def copy(self):
        g = GradedPoly(self.cap)
        g.coeffs = list(self.coeffs)
        return g

    def __eq__(self, other):
        if isinstance(other, GradedPoly):
            return self.cap == other.cap and self.coeffs == other.coeffs
        return NotImplemented

    def __add__(self, other):
        cap = min(self.cap, other.cap)
        g = GradedPoly(cap)
        g.coeffs = [self.coeffs[k] + other.coeffs[k] for k in range(cap + 1)]
        return g

    def __sub__(self, other):
        cap = min(self.cap, other.cap)
        g = GradedPoly(cap)
        g.coeffs = [self.coeffs[k] - other.coeffs[k] for k in range(cap + 1)]
        return g

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            g = GradedPoly(self.cap)
            g.coeffs = [c * other for c in self.coeffs]
            return g
        cap = min(self.cap, other.cap)
        out = [Fraction(0)] * (cap + 1)
        for i, a in enumerate(self.coeffs[: cap + 1]):
            if not a:
                continue
            for j, b in enumerate(other.coeffs[: cap + 1 - i]):
                if b:
                    out[i + j] += a * b
        g = GradedPoly(cap)
        g.coeffs = out
        return g

    __rmul__ = __mul__

    def divide(self, other):
        """Division in the truncated ring; divisor needs a unit constant term."""
        if other.coeffs[0] == 0:
            raise ValueError("division requires unit constant term")
        cap = min(self.cap, other.cap)
        inv0 = 1 / other.coeffs[0]
        out = [Fraction(0)] * (cap + 1)
        for k in range(cap + 1):
            acc = self.coeffs[k]
            for j in range(1, k + 1):
                acc -= other.coeffs[j] * out[k - j]
            out[k] = acc * inv0
        g = GradedPoly(cap)
        g.coeffs = out
        return g

    def __repr__(self):
        return "GradedPoly(" + ", ".join(str(c) for c in self.coeffs) + ")"


def linear_power(weight, mult, cap):
    """(1 + weight * g)^mult as a GradedPoly, mult any integer.

    Negative mult expands the binomial series; truncation at cap.
    """
    out = [Fraction(0)] * (cap + 1)
    out[0] = Fraction(1)
    coeff = Fraction(1)
    wpow = Fraction(1)
    for k in range(1, cap + 1):
        coeff = coeff * Fraction(mult - (k - 1), k)
        if coeff == 0:
            break
        wpow = wpow * weight
        out[k] = coeff * wpow
    g = GradedPoly(cap)
    g.coeffs = out
    return g
