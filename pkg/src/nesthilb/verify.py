"""Named verification suites shared by the CLI and the test harness.

Each suite runs a battery of exact cross-checks and returns a list of
Check records; a suite passes when every check does.  Failure details
always spell out the counterexample (surface, bundle, indices, both
values) so a red run is actionable on its own.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import engine, fock
from .characters import (
    trivial_multiplicity,
    virtual_tangent_character,
    virtual_tangent_character_resolution,
)
from .laurent import LaurentPoly
from .partitions import Partition, enumerate_nested_pairs
from .toric import builtin_surface, chern_numbers


@dataclass
class Check:
    label: str
    passed: bool
    detail: str = ""


SUITES = ("gottsche", "nestprod", "theorem4", "universality", "fock", "oracle")

_DEFAULT_CAPS = {
    "gottsche": 6,
    "nestprod": 5,
    "theorem4": 5,
    "universality": 4,
    "fock": 3,
    "oracle": 3,
}


def default_cap(suite):
    return _DEFAULT_CAPS[suite]


def _surface_bundles(surface):
    """The standard bundle triple on a builtin surface: O, a hyperplane-type
    bundle, and the canonical bundle."""
    coeffs = [0] * len(surface.rays)
    coeffs[0] = 1
    return [
        ("O", surface.structure_sheaf()),
        ("O(1)" if len(surface.rays) == 3 else "O(1,0)", surface.line_bundle(coeffs)),
        ("K", surface.canonical_bundle()),
    ]


def suite_gottsche(cap=6, seed=0, jobs=1):
    checks = []
    for name in ("p2", "p1xp1", "hirzebruch(1)"):
        surface = builtin_surface(name)
        counts = engine.gottsche_fixed_point_counts(surface, cap)
        product = engine.gottsche_product_coefficients(surface.euler_number, cap)
        checks.append(
            Check(
                f"fixed-point counts match Euler product on {name}",
                counts == product,
                f"counts={counts} product={product}",
            )
        )
    known = [1, 3, 9, 22, 51]
    got = engine.gottsche_product_coefficients(3, 4)
    checks.append(
        Check(
            "first five Euler numbers of point Hilbert schemes of the plane",
            got == known,
            f"got={got} expected={known}",
        )
    )
    return checks


def suite_nestprod(cap=5, seed=0, jobs=1):
    checks = []
    for name in ("p2", "p1xp1"):
        surface = builtin_surface(name)
        for label, bundle in _surface_bundles(surface):
            bad = []
            for n1 in range(cap + 1):
                for n2 in range(min(n1, cap - n1) + 1):
                    a = engine.nested_route_invariant(surface, bundle, n1, n2, seed=seed, jobs=jobs)
                    b = engine.product_route_invariant(surface, bundle, n1, n2, seed=seed, jobs=jobs)
                    if a != b:
                        bad.append(f"({n1},{n2}): nested={a} product={b}")
            checks.append(
                Check(
                    f"route agreement on {name}/{label} up to total degree {cap}",
                    not bad,
                    "; ".join(bad),
                )
            )
    return checks


def suite_theorem4(cap=5, seed=0, jobs=1):
    checks = []
    for name in ("p2", "p1xp1"):
        surface = builtin_surface(name)
        for label, bundle in _surface_bundles(surface):
            direct = engine.z_nest_series(surface, bundle, cap, seed=seed, jobs=jobs)
            closed = engine.closed_form_series(surface, bundle, cap)
            bad = []
            for n1 in range(cap + 1):
                for n2 in range(min(n1, cap - n1) + 1):
                    if direct.coeff(n1, n2) != closed.coeff(n1, n2):
                        bad.append(
                            f"({n1},{n2}): direct={direct.coeff(n1, n2)}"
                            f" closed={closed.coeff(n1, n2)}"
                        )
            checks.append(
                Check(
                    f"series matches closed product on {name}/{label} to degree {cap}",
                    not bad,
                    "; ".join(bad),
                )
            )
    p2 = builtin_surface("p2")
    spot = engine.nested_route_invariant(p2, p2.structure_sheaf(), 1, 0, seed=seed, jobs=jobs)
    checks.append(Check("spot value at (1,0) on the plane equals 9", spot == 9, f"got {spot}"))
    return checks


def suite_universality(cap=4, seed=0, jobs=1):
    checks = []
    fit = engine.universal_series_fit(cap, seed=seed, jobs=jobs)
    f1 = builtin_surface("hirzebruch(1)")
    for label, bundle in (("O", f1.structure_sheaf()), ("O(1,0,2,0)", f1.line_bundle([1, 0, 2, 0]))):
        cn = chern_numbers(f1, bundle)
        pred = engine.predicted_series(fit, cn)
        direct = engine.z_nest_series(f1, bundle, cap, seed=seed, jobs=jobs)
        checks.append(
            Check(
                f"universal fit predicts hirzebruch(1)/{label} to degree {cap}",
                pred.terms == direct.terms,
                f"predicted={pred.terms} direct={direct.terms}",
            )
        )
    return checks


def suite_fock(cap=3, seed=0, jobs=1):
    checks = []
    p2 = fock.p2_lattice()
    quadric = fock.p1xp1_lattice()
    checks.append(
        Check(
            "Heisenberg commutation relations up to grading 4",
            fock.heisenberg_check(p2, min(cap + 1, 4)),
        )
    )
    checks.append(
        Check(
            f"half-vertex exchange relation up to grading {cap}",
            fock.gamma_commutation_check(p2, (0, 1, 0), (1, 2, 0), cap)
            and fock.gamma_commutation_check(quadric, (0, 1, 0, 0), (0, 0, 1, 0), cap),
        )
    )
    checks.append(
        Check(
            "grading-operator conjugation rescales the vertex argument",
            fock.qn_conjugation_check(p2, (0, 1, 0), cap),
        )
    )
    pairs = [
        (p2, "plane", p2.zero(), p2.zero()),
        (p2, "plane", (0, 1, 0), (0, 2, 0)),
        (p2, "plane", (1, 1, 0), (0, 2, 1)),
        (quadric, "quadric", quadric.zero(), (0, 1, 2, 0)),
        (quadric, "quadric", (0, 1, 0, 0), (0, 0, 1, 0)),
    ]
    for lattice, name, m1, m2 in pairs:
        ok = fock.trace_matches_product(lattice, m1, m2, cap)
        checks.append(
            Check(
                f"graded trace equals closed product on {name} lattice, M1={m1} M2={m2}",
                ok,
                "" if ok else f"box={fock.w_trace(lattice, m1, m2, cap)}",
            )
        )
    zero_box = fock.w_trace(p2, p2.zero(), p2.zero(), cap)
    gottsche = engine.gottsche_product_coefficients(p2.euler, cap)
    diag_ok = all(
        zero_box.get((n, n), 0) == gottsche[n] for n in range(cap + 1)
    ) and all(n1 == n2 for n1, n2 in zero_box)
    checks.append(
        Check(
            "untwisted trace degenerates to the Euler-number product",
            diag_ok,
            f"box={zero_box} product={gottsche}",
        )
    )
    return checks


def suite_oracle(cap=3, seed=0, jobs=1):
    checks = []
    bad = []
    for n1 in range(cap + 1):
        for n2 in range(n1 + 1):
            for pair in enumerate_nested_pairs(n1, n2):
                direct = virtual_tangent_character(pair)
                resolved = virtual_tangent_character_resolution(pair)
                if direct != resolved:
                    bad.append(f"{pair}: {direct} != {resolved}")
    checks.append(
        Check(
            f"tangent characters match the free-resolution oracle, outer size <= {cap}",
            not bad,
            "; ".join(bad[:3]),
        )
    )
    spot_bad = []
    for outer in ((4,), (2, 2), (2, 1, 1)):
        for inner in ((2,), (1, 1)):
            mu, nu = Partition(outer), Partition(inner)
            if not mu.contains(nu):
                continue
            from .partitions import NestedPair

            pair = NestedPair(mu, nu)
            if virtual_tangent_character(pair) != virtual_tangent_character_resolution(pair):
                spot_bad.append(repr(pair))
    checks.append(
        Check("spot checks at outer size 4 against the oracle", not spot_bad, "; ".join(spot_bad))
    )
    one = Partition((1,))
    from .partitions import EMPTY, NestedPair

    t_11 = virtual_tangent_character(NestedPair(one, one))
    t_10 = virtual_tangent_character(NestedPair(one, EMPTY))
    checks.append(
        Check(
            "closed forms at one point",
            t_11 == LaurentPoly({(-1, 0): 1, (0, -1): 1})
            and t_10 == LaurentPoly({(-1, 0): 1, (0, -1): 1, (-1, -1): -1}),
            f"(1),(1): {t_11}; (1),(): {t_10}",
        )
    )
    rank_bad = []
    for n1 in range(9):
        for n2 in range(min(n1, 8 - n1) + 1):
            for pair in enumerate_nested_pairs(n1, n2):
                t = virtual_tangent_character(pair)
                if t.rank() != n1 + n2 or trivial_multiplicity(t):
                    rank_bad.append(repr(pair))
    checks.append(
        Check(
            "virtual rank n1+n2 and no trivial weight up to total degree 8",
            not rank_bad,
            "; ".join(rank_bad[:3]),
        )
    )
    return checks


_SUITE_FUNCS = {
    "gottsche": suite_gottsche,
    "nestprod": suite_nestprod,
    "theorem4": suite_theorem4,
    "universality": suite_universality,
    "fock": suite_fock,
    "oracle": suite_oracle,
}


def run_suite(name, cap=None, seed=0, jobs=1):
    if name not in _SUITE_FUNCS:
        raise ValueError(f"unknown suite {name!r}")
    if cap is None:
        cap = default_cap(name)
    return _SUITE_FUNCS[name](cap=cap, seed=seed, jobs=jobs)
