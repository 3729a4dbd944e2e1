#!/usr/bin/env python3
"""Run every verification suite in the package and print a summary.

This drives the same oracles the test suite uses: finite-order table via
coset enumeration, the abelianization table, the four exact quotient-surface
suites, the named plane-curve examples, the torsion-free cover fixture, and
a sweep of hyperbolic triangle representations.
"""

import sys
import time
from fractions import Fraction

from orbicurve import (
    Exceeded,
    OrbSignature,
    abelianization,
    abelianization_of_presentation,
    check_triangle_rep,
    finite_order,
    group_order,
    presentation_of,
    projective_triangle_fixture,
    run_wallpaper_suite,
    torsion_free_subgroup_rank,
    triangle_representation,
    verify_example,
    verify_torsion_free_kernel,
)


def banner(title):
    print(f"\n== {title}")


def main() -> int:
    t0 = time.time()
    failures = 0

    banner("finite orders: enumeration vs closed form")
    sigs = [OrbSignature(0, 0, ()), OrbSignature(0, 1, ())]
    sigs += [OrbSignature(0, 0, (m,)) for m in range(2, 13)]
    sigs += [OrbSignature(0, 1, (m,)) for m in range(2, 13)]
    sigs += [
        OrbSignature(0, 0, (m1, m2))
        for m1 in range(2, 13)
        for m2 in range(m1, 13)
    ]
    sigs += [OrbSignature(0, 0, (2, 2, n)) for n in range(2, 11)]
    sigs += [OrbSignature(0, 0, (2, 3, c)) for c in (3, 4, 5)]
    for sig in sigs:
        expected = finite_order(sig)
        got = group_order(presentation_of(sig), 10_000)
        ok = got == expected
        failures += not ok
        if not ok:
            print(f"  FAIL {sig}: enumerated {got}, formula {expected}")
    print(f"  {len(sigs)} finite signatures certified")

    banner("abelianization: formula route vs presentation route")
    count = 0
    for g in range(3):
        for r in range(3):
            for m in [(), (2,), (3,), (2, 2), (2, 4), (3, 3), (2, 3, 6), (2, 4, 4)]:
                sig = OrbSignature(g, r, m)
                ok = abelianization(sig) == abelianization_of_presentation(
                    presentation_of(sig)
                )
                failures += not ok
                count += 1
    print(f"  {count} signatures compared")

    banner("quotient-surface suites (exact)")
    for k in (2, 3, 4, 6):
        report = run_wallpaper_suite(k, samples=100, seed=42)
        failures += not report.passed
        print(f"  k={k}: {'PASS' if report.passed else 'FAIL'}")

    banner("named examples")
    for name in ("quartic-b3p1", "sextic-b4p1", "quintic-237",
                 "artal(4,1,1)", "artal(5,2,1)", "artal(7,4,1)", "artal(10,7,1)"):
        report = verify_example(name)
        failures += not report.passed
        print(f"  {name}: {'PASS' if report.passed else 'FAIL'}")

    banner("torsion-free cover certification")
    fixture = projective_triangle_fixture()
    sig237 = OrbSignature(0, 0, (2, 3, 7))
    outcome = verify_torsion_free_kernel(sig237, fixture)
    ok = (
        not isinstance(outcome, Exceeded)
        and outcome.verdict == "torsion_free_kernel"
        and outcome.index == 168
    )
    failures += not ok
    report = torsion_free_subgroup_rank(sig237, 168)
    print(f"  (2,3,7) index-168 kernel: {'PASS' if ok else 'FAIL'}, rho = {report.rho}")

    banner("triangle representations")
    triples = [
        (m1, m2, m3)
        for m1 in range(2, 13)
        for m2 in range(m1, 13)
        for m3 in range(m2, 13)
        if Fraction(1, m1) + Fraction(1, m2) + Fraction(1, m3) < 1
    ][:20]
    for triple in triples:
        checks = check_triangle_rep(triangle_representation(*triple))
        failures += not checks.passed
    print(f"  {len(triples)} hyperbolic triples certified")

    print(f"\n{'ALL PASS' if failures == 0 else f'{failures} FAILURES'} "
          f"in {time.time() - t0:.1f}s")
    return 0 if failures == 0 else 3


if __name__ == "__main__":
    sys.exit(main())
