"""Global fixed-point localization over a toric surface.

Two independent routes compute the same invariants:

* the nested route sums over tuples of nested partition pairs, one per
  chart, weighting total Chern classes of the twisted fiber classes by
  the inverse Euler class of the virtual tangent character;
* the product route sums over all pairs of partition tuples (nested or
  not) on the product of two Hilbert schemes, cutting down to the nested
  locus with the top Chern class of the untwisted fiber class.

All arithmetic is exact; every emitted value is computed at two generic
numeric specializations of the torus weights, which must agree.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .characters import (
    DegenerateSpecializationError,
    LocalizationError,
    block_character,
    chern_poly,
    euler_class,
    substitute_weights,
)
from .partitions import (
    EMPTY,
    NestedPair,
    Partition,
    enumerate_nested_pairs,
    enumerate_partitions,
)
from .series import GradedPoly, Series2, product_formula
from .toric import ToricSurface, builtin_surface, chern_numbers

MAX_REDRAWS = 8


class SpecializationDisagreement(LocalizationError):
    """Two generic specializations gave different values: internal bug."""


# ---------------------------------------------------------------------------
# fixed-point enumeration


@dataclass(frozen=True)
class GlobalFixedPoint:
    """One nested pair per chart of the surface."""

    assignment: tuple  # tuple of NestedPair, indexed like surface.charts

    @property
    def n1(self):
        return sum(p.outer.size for p in self.assignment)

    @property
    def n2(self):
        return sum(p.inner.size for p in self.assignment)


def compositions(n, k):
    """All tuples of k nonnegative integers summing to n."""
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(n + 1):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


def enumerate_global_fixed_points(surface, n1, n2):
    """All distributions of nested pairs over the charts with sizes (n1, n2)."""
    if n1 < n2:
        raise ValueError("empty nesting range")
    k = len(surface.charts)
    points = []
    for comp1 in compositions(n1, k):
        for comp2 in compositions(n2, k):
            if any(c2 > c1 for c1, c2 in zip(comp1, comp2)):
                continue
            choices = [enumerate_nested_pairs(c1, c2) for c1, c2 in zip(comp1, comp2)]
            for assignment in itertools.product(*choices):
                points.append(GlobalFixedPoint(assignment))
    return points


def _partition_tuples(k, n):
    for comp in compositions(n, k):
        for tup in itertools.product(*[enumerate_partitions(c) for c in comp]):
            yield tup


def enumerate_product_fixed_points(surface, n1, n2):
    """All pairs of partition tuples on the product of Hilbert schemes."""
    k = len(surface.charts)
    tups2 = list(_partition_tuples(k, n2))
    for tup1 in _partition_tuples(k, n1):
        for tup2 in tups2:
            yield (tup1, tup2)


# ---------------------------------------------------------------------------
# cached chart-local character assembly


@lru_cache(maxsize=None)
def _global_block(u, v, mu_a, mu_b):
    return substitute_weights(block_character(mu_a, mu_b), u, v)


def _fiber_character(surface, bundle, tup_a, tup_b, swap=False):
    """Global character of the twisted fiber class at a product fixed point.

    With swap=False this is the class with source ideals from tup_a and
    target ideals from tup_b; swap=True exchanges the roles chartwise.
    """
    total = None
    for chart in surface.charts:
        a, b = tup_a[chart.index], tup_b[chart.index]
        if swap:
            a, b = b, a
        block = _global_block(chart.u, chart.v, a, b)
        if bundle is not None:
            block = block.shift(bundle.weights[chart.index])
        total = block if total is None else total + block
    return total


def _nested_tangent(surface, point):
    total = None
    for chart, pair in zip(surface.charts, point.assignment):
        local = (
            _global_block(chart.u, chart.v, pair.outer, pair.outer)
            + _global_block(chart.u, chart.v, pair.inner, pair.inner)
            - _global_block(chart.u, chart.v, pair.outer, pair.inner)
        )
        total = local if total is None else total + local
    return total


def _product_tangent(surface, tup1, tup2):
    total = None
    for chart in surface.charts:
        local = _global_block(chart.u, chart.v, tup1[chart.index], tup1[chart.index]) + _global_block(
            chart.u, chart.v, tup2[chart.index], tup2[chart.index]
        )
        total = local if total is None else total + local
    return total


# ---------------------------------------------------------------------------
# localization sums


def _graded_integrand(chars_num, chars_den, spec, cap):
    integrand = GradedPoly.one(cap)
    for c in chars_num:
        integrand = integrand * chern_poly(c, spec, cap)
    for c in chars_den:
        integrand = integrand.divide(chern_poly(c, spec, cap))
    return integrand


def _nested_sum(surface, nums, dens, n1, n2, spec, points=None):
    cap = n1 + n2
    total = GradedPoly(cap)
    if points is None:
        points = enumerate_global_fixed_points(surface, n1, n2)
    for point in points:
        e = euler_class(_nested_tangent(surface, point), spec)
        outer = tuple(p.outer for p in point.assignment)
        inner = tuple(p.inner for p in point.assignment)
        chars_num = [_fiber_character(surface, m, outer, inner) for m in nums]
        chars_den = [_fiber_character(surface, m, outer, inner) for m in dens]
        total = total + _graded_integrand(chars_num, chars_den, spec, cap) * (1 / e)
    return total


def _product_sum(surface, tops, nums, dens, n1, n2, spec, points=None):
    """Localization sum over the product of Hilbert schemes.

    tops: list of (bundle-or-None, swap) contributing scalar top Chern
    factors of degree n1+n2 each; nums/dens contribute total Chern classes
    tracked in the formal grading.  The grading degree left for extraction
    is (2 - len(tops)) * (n1 + n2).
    """
    cap = max((2 - len(tops)) * (n1 + n2), 0)
    top_degree = n1 + n2
    total = GradedPoly(cap)
    if points is None:
        points = enumerate_product_fixed_points(surface, n1, n2)
    for tup1, tup2 in points:
        scalar = Fraction(1)
        for bundle, swap in tops:
            char = _fiber_character(surface, bundle, tup1, tup2, swap=swap)
            scalar *= chern_poly(char, spec, top_degree).coeffs[top_degree]
            if not scalar:
                break
        if not scalar:
            continue
        e = euler_class(_product_tangent(surface, tup1, tup2), spec)
        chars_num = [_fiber_character(surface, m, tup1, tup2) for m in nums]
        chars_den = [_fiber_character(surface, m, tup1, tup2) for m in dens]
        total = total + _graded_integrand(chars_num, chars_den, spec, cap) * (scalar / e)
    return total


# ---------------------------------------------------------------------------
# parallel helpers

_POOL_STATE = {}


def _init_worker(kind, rays, num_coeffs, den_coeffs, top_items, n1, n2, spec):
    surface = ToricSurface("worker", rays)
    nums = [surface.line_bundle(c) if c is not None else None for c in num_coeffs]
    dens = [surface.line_bundle(c) if c is not None else None for c in den_coeffs]
    tops = [
        (surface.line_bundle(c) if c is not None else None, swap)
        for c, swap in top_items
    ]
    _POOL_STATE.update(
        kind=kind, surface=surface, nums=nums, dens=dens, tops=tops, n1=n1, n2=n2, spec=spec
    )


def _worker_chunk(points):
    s = _POOL_STATE
    if s["kind"] == "nested":
        return _nested_sum(s["surface"], s["nums"], s["dens"], s["n1"], s["n2"], s["spec"], points=points)
    return _product_sum(
        s["surface"], s["tops"], s["nums"], s["dens"], s["n1"], s["n2"], s["spec"], points=points
    )


def _chunked(seq, chunks):
    seq = list(seq)
    size = max(1, (len(seq) + chunks - 1) // chunks)
    return [seq[i : i + size] for i in range(0, len(seq), size)]


def _parallel_sum(kind, surface, tops, nums, dens, n1, n2, spec, jobs):
    if jobs <= 1:
        if kind == "nested":
            return _nested_sum(surface, nums, dens, n1, n2, spec)
        return _product_sum(surface, tops, nums, dens, n1, n2, spec)
    if kind == "nested":
        points = enumerate_global_fixed_points(surface, n1, n2)
    else:
        points = list(enumerate_product_fixed_points(surface, n1, n2))
    init_args = (
        kind,
        tuple(surface.rays),
        [m.coeffs if m is not None else None for m in nums],
        [m.coeffs if m is not None else None for m in dens],
        [(m.coeffs if m is not None else None, swap) for m, swap in tops],
        n1,
        n2,
        spec,
    )
    cap = (n1 + n2) if kind == "nested" else max((2 - len(tops)) * (n1 + n2), 0)
    total = GradedPoly(cap)
    with ProcessPoolExecutor(
        max_workers=jobs, initializer=_init_worker, initargs=init_args
    ) as pool:
        for part in pool.map(_worker_chunk, _chunked(points, jobs * 4)):
            total = total + part
    return total


# ---------------------------------------------------------------------------
# specialization policy


def draw_specialization(rng):
    x = Fraction(rng.randint(1, 97))
    y = Fraction(rng.choice([-1, 1]) * rng.randint(1, 97))
    return (x, y)


def _dual_spec_graded(compute, seed, extract_degree):
    """Run `compute(spec)` at two agreeing generic specializations.

    Retries degenerate draws up to MAX_REDRAWS times each; checks that the
    coefficients below extract_degree vanish and that the extracted value
    is identical at both specializations.
    """
    rng = random.Random(seed)
    values = []
    specs = []
    for _ in range(2):
        for attempt in range(MAX_REDRAWS + 1):
            spec = draw_specialization(rng)
            if spec in specs:
                continue
            try:
                graded = compute(spec)
            except DegenerateSpecializationError:
                if attempt == MAX_REDRAWS:
                    raise
                continue
            specs.append(spec)
            for k in range(extract_degree):
                if graded.coeffs[k] != 0:
                    raise SpecializationDisagreement(
                        f"nonzero sub-degree coefficient at degree {k}"
                    )
            values.append(graded.coeffs[extract_degree])
            break
    if values[0] != values[1]:
        raise SpecializationDisagreement(
            f"specialization disagreement: {values[0]} != {values[1]}"
        )
    return values[0], specs


# ---------------------------------------------------------------------------
# public invariants


@dataclass
class InvariantRecord:
    surface: str
    bundle: str
    n1: int
    n2: int
    route: str
    value: Fraction
    specializations: list = field(default_factory=list)
    agreement: bool = True

    def to_dict(self):
        return {
            "surface": self.surface,
            "bundle": self.bundle,
            "n1": self.n1,
            "n2": self.n2,
            "route": self.route,
            "value": {"num": str(self.value.numerator), "den": str(self.value.denominator)},
            "specializations": [[str(x), str(y)] for x, y in self.specializations],
            "agreement": self.agreement,
        }


def nested_route_invariant(surface, bundle, n1, n2, seed=0, jobs=1):
    """Integral of the total Chern class of the twisted fiber class
    against the virtual class of the nested Hilbert scheme."""
    return multi_bundle_invariant(surface, [bundle], [], n1, n2, seed=seed, jobs=jobs, route="nested")


def product_route_invariant(surface, bundle, n1, n2, seed=0, jobs=1):
    """Same invariant computed on the product of Hilbert schemes, cut down
    by the top Chern class of the untwisted fiber class."""
    return multi_bundle_invariant(surface, [bundle], [], n1, n2, seed=seed, jobs=jobs, route="product")


def multi_bundle_invariant(surface, nums, dens, n1, n2, seed=0, jobs=1, route="nested"):
    """Invariant with integrand prod c(twist by M_i) / prod c(twist by N_j)."""
    if route == "nested":
        if n1 < n2:
            raise ValueError("empty nesting range")

        def compute(spec):
            return _parallel_sum("nested", surface, [], nums, dens, n1, n2, spec, jobs)

        value, _ = _dual_spec_graded(compute, seed, n1 + n2)
        return value
    if route == "product":
        tops = [(None, False)]

        def compute(spec):
            return _parallel_sum("product", surface, tops, nums, dens, n1, n2, spec, jobs)

        value, _ = _dual_spec_graded(compute, seed, n1 + n2)
        return value
    raise ValueError(f"unknown route {route!r}")


def product_route_pairing(surface, bundle1, bundle2, n1, n2, swap_second=True, seed=0, jobs=1):
    """Pairing of two top Chern classes of fiber classes over the product.

    With swap_second=True the second factor uses the chartwise-swapped
    class (source and target ideals exchanged).
    """
    tops = [(bundle1, False), (bundle2, swap_second)]

    def compute(spec):
        return _parallel_sum("product", surface, tops, [], [], n1, n2, spec, jobs)

    value, _ = _dual_spec_graded(compute, seed, 0)
    return value


def invariant_record(surface, bundle, bundle_label, n1, n2, route="nested", seed=0, jobs=1):
    """Compute one invariant and package it with its provenance."""

    if route == "nested":
        kind, tops = "nested", []
    else:
        kind, tops = "product", [(None, False)]

    def compute(spec):
        return _parallel_sum(kind, surface, tops, [bundle], [], n1, n2, spec, jobs)

    value, specs = _dual_spec_graded(compute, seed, n1 + n2)
    return InvariantRecord(
        surface=surface.name,
        bundle=bundle_label,
        n1=n1,
        n2=n2,
        route=route,
        value=value,
        specializations=specs,
        agreement=True,
    )


# ---------------------------------------------------------------------------
# generating series


def z_nest_series(surface, bundle, cap, seed=0, jobs=1, route="nested"):
    """Generating series of the invariants over n1 >= n2 >= 0, n1+n2 <= cap."""
    terms = {}
    for n1 in range(cap + 1):
        for n2 in range(min(n1, cap - n1) + 1):
            terms[(n1, n2)] = multi_bundle_invariant(
                surface, [bundle], [], n1, n2, seed=seed, jobs=jobs, route=route
            )
    return Series2(cap, terms)


def closed_form_series(surface, bundle, cap):
    """Closed product form of the invariant series.

    The product over n > 0 of
    (1 - q2^(n-1) q1^n)^(K.(K-M)) (1 - (q1 q2)^n)^((K-M).M - e(S)),
    with each coefficient then multiplied by (-1)^(n1+n2).
    """
    cn = chern_numbers(surface, bundle)
    a = cn.K_squared - cn.M_dot_K
    b = (cn.M_dot_K - cn.M_squared) - surface.euler_number
    product = product_formula([((1, 0), a), ((1, 1), b)], cap)
    terms = {
        (d1, d2): c * (-1) ** (d1 + d2) for (d1, d2), c in product.terms.items()
    }
    return Series2(cap, terms)


def gottsche_product_coefficients(euler, nmax):
    """Coefficients of prod_{n>0} (1 - q^n)^(-euler) up to q^nmax."""
    coeffs = [Fraction(0)] * (nmax + 1)
    coeffs[0] = Fraction(1)
    for n in range(1, nmax + 1):
        factor = [Fraction(0)] * (nmax + 1)
        # (1 - q^n)^(-euler) expanded
        factor[0] = Fraction(1)
        c = Fraction(1)
        k = 0
        while (k + 1) * n <= nmax:
            k += 1
            c = c * Fraction(euler + k - 1, k)
            factor[k * n] = c
        new = [Fraction(0)] * (nmax + 1)
        for i, a in enumerate(coeffs):
            if not a:
                continue
            for j in range(0, nmax + 1 - i, 1):
                if factor[j]:
                    new[i + j] += a * factor[j]
        coeffs = new
    return [int(c) for c in coeffs]


def gottsche_fixed_point_counts(surface, nmax):
    """Number of partition tuples over the charts with total size n <= nmax."""
    k = len(surface.charts)
    return [sum(1 for _ in _partition_tuples(k, n)) for n in range(nmax + 1)]


def gottsche_series(surface, cap):
    """Euler-characteristic series of the Hilbert schemes of points,
    embedded on the diagonal q = q1 q2."""
    coeffs = gottsche_product_coefficients(surface.euler_number, cap // 2)
    return Series2(cap, {(n, n): c for n, c in enumerate(coeffs)})


# ---------------------------------------------------------------------------
# universality


def cobordism_generators():
    """The four generator pairs spanning surface-plus-bundle cobordism."""
    p2 = builtin_surface("p2")
    p1xp1 = builtin_surface("p1xp1")
    return [
        (p2, p2.structure_sheaf(), "O"),
        (p2, p2.line_bundle([1, 0, 0]), "O(1)"),
        (p1xp1, p1xp1.structure_sheaf(), "O"),
        (p1xp1, p1xp1.line_bundle([1, 0, 0, 0]), "O(1,0)"),
    ]


def universal_series_fit(cap, seed=0, jobs=1):
    """Fit the four universal series from the generator computations."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    b = [
        z_nest_series(surface, bundle, cap, seed=seed, jobs=jobs)
        for surface, bundle, _ in cobordism_generators()
    ]
    a1 = b[0].pow(-1) * b[1] * b[2].pow(Fraction(3, 2)) * b[3].pow(Fraction(-3, 2))
    a2 = b[2].pow(Fraction(1, 2)) * b[3].pow(Fraction(-1, 2))
    # The exponent 1/3 is forced by requiring the fit to reproduce the first
    # generator: with (K^2, c2) = (9, 3) and (8, 4) on the two structure-sheaf
    # generators, a3^9 a4^3 = b1 and a3^8 a4^4 = b3 have the unique solution
    # a3 = b1^(1/3) b3^(-1/4), a4 = b1^(-2/3) b3^(3/4).
    a3 = b[0].pow(Fraction(1, 3)) * b[2].pow(Fraction(-1, 4))
    a4 = b[0].pow(Fraction(-2, 3)) * b[2].pow(Fraction(3, 4))
    return (a1, a2, a3, a4)


def predicted_series(fit, cn):
    """Predict the invariant series of any surface from its Chern numbers."""
    a1, a2, a3, a4 = fit
    return (
        a1.pow(cn.M_squared)
        * a2.pow(cn.M_dot_K)
        * a3.pow(cn.K_squared)
        * a4.pow(cn.c2)
    )
