"""Per-chart character calculus for the localization formulas.

A Character is a LaurentPoly with integer coefficients read as a virtual
torus representation: the coefficient at (a, b) is the multiplicity of the
weight t1^a t2^b.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .laurent import LaurentPoly
from .partitions import NestedPair, staircase_numerator, z_character
from .series import GradedPoly, linear_power

TRIVIAL = (0, 0)

# (1 - t1)(1 - t2) / (t1 t2), the ubiquitous correction factor.
_CORR = LaurentPoly({(-1, -1): 1, (0, -1): -1, (-1, 0): -1, (0, 0): 1})


class LocalizationError(Exception):
    """Base class for localization failures."""


class TrivialWeightError(LocalizationError):
    """A trivial weight appeared where an Euler class needs pure weights."""


class DegenerateSpecializationError(LocalizationError):
    """The numeric specialization killed a weight; the caller must redraw."""


@lru_cache(maxsize=None)
def block_character(mu_a, mu_b):
    """The two-index block V(I_a, I_b) = chi(R, R) - chi(I_a, I_b).

    Expanded normal form: Z_b + bar(Z_a)/(t1 t2)
    - bar(Z_a) Z_b (1 - t1)(1 - t2)/(t1 t2).
    Its rank is |mu_a| + |mu_b|.
    """
    za = z_character(mu_a)
    zb = z_character(mu_b)
    zabar = za.bar()
    return zb + zabar.shift((-1, -1)) - zabar * zb * _CORR


@lru_cache(maxsize=None)
def _tangent_character(outer, inner):
    return (
        block_character(outer, outer)
        + block_character(inner, inner)
        - block_character(outer, inner)
    )


def virtual_tangent_character(pair: NestedPair):
    """Virtual tangent character of a nested fixed point on one chart.

    Equals Z1 + bar(Z2)/(t1 t2)
    + (bar(Z1) Z2 - bar(Z1) Z1 - bar(Z2) Z2)(1 - t1)(1 - t2)/(t1 t2),
    assembled from the block decomposition; rank is |outer| + |inner|.
    """
    return _tangent_character(pair.outer, pair.inner)


def block_character_resolution(mu_a, mu_b):
    """Independent route to the block character via free resolutions.

    Uses the Taylor-complex numerators P of both ideals and the rational
    form (1 - bar(P_a) P_b)/((1 - t1)(1 - t2)), divided exactly.
    """
    pa = staircase_numerator(mu_a)
    pb = staircase_numerator(mu_b)
    one = LaurentPoly.one()
    numerator = one - pa.bar() * pb
    denom = LaurentPoly({(0, 0): 1, (1, 0): -1, (0, 1): -1, (1, 1): 1})
    return numerator.divide_exact(denom)


def virtual_tangent_character_resolution(pair: NestedPair):
    """Independent oracle for the virtual tangent character.

    Computes -chi(I1,I1) - chi(I2,I2) + chi(I1,I2) + chi(R,R) from the
    Taylor-complex numerators, dividing the combined numerator exactly by
    (1 - t1)(1 - t2).
    """
    p1 = staircase_numerator(pair.outer)
    p2 = staircase_numerator(pair.inner)
    one = LaurentPoly.one()
    numerator = one - p1.bar() * p1 - p2.bar() * p2 + p1.bar() * p2
    denom = LaurentPoly({(0, 0): 1, (1, 0): -1, (0, 1): -1, (1, 1): 1})
    return numerator.divide_exact(denom)


def twist_character(c, m):
    """Tensor by the character t1^m[0] t2^m[1]: shift every weight by m."""
    return c.shift(m)


def substitute_weights(c, u, v):
    """Map chart-local weights into the global lattice: t1 -> t^u, t2 -> t^v."""
    det = u[0] * v[1] - u[1] * v[0]
    if det not in (1, -1):
        raise LocalizationError("singular chart")
    return c.substitute(u, v)


def trivial_multiplicity(c):
    return c.coeff(0, 0)


def euler_class(c, spec):
    """Equivariant Euler class of a character at a numeric specialization.

    Multiplies (a x + b y)^mult over all weights; negative multiplicities
    divide.  Trivial weights are forbidden (they force a vanishing or
    ill-defined class) and zero specialized weights signal a bad draw.
    """
    x, y = spec
    if trivial_multiplicity(c):
        raise TrivialWeightError("trivial weight in Euler class")
    num = Fraction(1)
    den = Fraction(1)
    for (a, b), mult in c.terms.items():
        if (a, b) == TRIVIAL:
            continue
        w = a * x + b * y
        if w == 0:
            raise DegenerateSpecializationError("degenerate specialization")
        if mult > 0:
            num *= w ** mult
        else:
            den *= w ** (-mult)
    if den == 0:
        raise DegenerateSpecializationError("degenerate specialization")
    return num / den


def chern_poly(c, spec, cap):
    """Total equivariant Chern class of a character, graded formally.

    Returns the GradedPoly whose degree-k coefficient is the specialization
    of the k-th Chern class: the product of (1 + g (a x + b y))^mult over
    all weights.  Trivial weights contribute the factor 1, which is what
    makes top Chern classes of classes with trivial summands vanish.
    """
    x, y = spec
    result = GradedPoly.one(cap)
    for (a, b), mult in c.terms.items():
        if (a, b) == TRIVIAL:
            continue
        w = a * x + b * y
        if w == 0:
            raise DegenerateSpecializationError("degenerate specialization")
        result = result * linear_power(w, mult, cap)
    return result
