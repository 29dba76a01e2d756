"""Bivariate Laurent polynomials with exact rational coefficients.

Exponent pairs (a, b) index monomials t1^a t2^b.  Zero coefficients are
never stored, so structural equality of the term dictionaries is
mathematical equality.
"""

from __future__ import annotations

from fractions import Fraction


class LaurentPoly:
    """A finite sum of terms c * t1^a * t2^b with c a nonzero Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        pruned = {}
        if terms:
            for exps, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    a, b = exps
                    pruned[(int(a), int(b))] = coeff
        self.terms = pruned

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, a, b, coeff=1):
        return cls({(a, b): coeff})

    @classmethod
    def constant(cls, c):
        return cls({(0, 0): c})

    # -- ring structure ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            new = terms.get(exps, 0) + coeff
            if new:
                terms[exps] = new
            else:
                terms.pop(exps, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly.constant(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            c = Fraction(other)
            if not c:
                return LaurentPoly.zero()
            out = LaurentPoly.__new__(LaurentPoly)
            out.terms = {e: c * v for e, v in self.terms.items()}
            return out
        terms = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                new = terms.get(key, 0) + c1 * c2
                if new:
                    terms[key] = new
                else:
                    del terms[key]
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not defined for LaurentPoly")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- involutions and substitutions -------------------------------------

    def bar(self):
        """Invert both variables: t1 -> 1/t1, t2 -> 1/t2."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {(-a, -b): c for (a, b), c in self.terms.items()}
        return out

    def shift(self, m):
        """Multiply by the monomial t1^m[0] t2^m[1]."""
        da, db = m
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {(a + da, b + db): c for (a, b), c in self.terms.items()}
        return out

    def substitute(self, u, v):
        """Monomial substitution t1 -> t^u, t2 -> t^v for lattice vectors u, v."""
        terms = {}
        for (a, b), c in self.terms.items():
            key = (a * u[0] + b * v[0], a * u[1] + b * v[1])
            new = terms.get(key, 0) + c
            if new:
                terms[key] = new
            else:
                del terms[key]
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = terms
        return out

    # -- evaluation --------------------------------------------------------

    def rank(self):
        """Sum of all coefficients, i.e. the value at t1 = t2 = 1."""
        return sum(self.terms.values(), Fraction(0))

    def coeff(self, a, b):
        return self.terms.get((a, b), Fraction(0))

    def divide_exact(self, divisor, max_steps=100000):
        """Exact division by a LaurentPoly whose lex-least term is a unit.

        Raises ValueError if the division does not come out exact.
        """
        if not divisor.terms:
            raise ZeroDivisionError("division by zero polynomial")
        lead = min(divisor.terms)
        lead_c = divisor.terms[lead]
        remainder = self
        quotient = {}
        steps = 0
        while remainder.terms:
            steps += 1
            if steps > max_steps:
                raise ValueError("division did not terminate; not exact")
            e = min(remainder.terms)
            c = remainder.terms[e] / lead_c
            q = (e[0] - lead[0], e[1] - lead[1])
            quotient[q] = quotient.get(q, 0) + c
            remainder = remainder - LaurentPoly.monomial(q[0], q[1], c) * divisor
        return LaurentPoly(quotient)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (a, b), c in sorted(self.terms.items()):
            mono = []
            if a:
                mono.append(f"t1^{a}" if a != 1 else "t1")
            if b:
                mono.append(f"t2^{b}" if b != 1 else "t2")
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append("*".join(mono))
            else:
                bits.append(f"{c}*" + "*".join(mono))
        return " + ".join(bits)
