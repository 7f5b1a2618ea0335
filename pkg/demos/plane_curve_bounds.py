"""Certified bounds for plane curves and curves in surfaces of general type.

Run with:  python demos/plane_curve_bounds.py
"""

from fractions import Fraction as F

from orbeuler import (
    canonical_degree_bound,
    check_arrangement,
    check_singularity_budget,
    cusp_count_bound,
    cusp_ratio_optimize,
    max_canonical_degree_extremal,
)

print("== Line arrangements without large pencils ==")
cases = [
    ("complete quadrilateral", 6, {2: 3, 3: 4}),
    ("generic 4 lines", 4, {2: 6}),
    ("Fermat-type, m=5", 15, {3: 25, 5: 3}),
    ("near-pencil (5 lines)", 5, {4: 1, 2: 4}),
]
for name, k, t in cases:
    report = check_arrangement(k, t)
    if report.verdict == "hypothesis-not-met":
        print(f"  {name}: hypothesis not met (a point on {report.large_pencil_r} > 2k/3 lines)")
    else:
        print(
            f"  {name}: {report.verdict};"
            f" sum r t_r = {report.incidence_sum} >= {report.incidence_bound},"
            f" sum r^2 t_r = {report.square_sum} >= {report.square_bound}"
        )

print("\n== How many ordinary cusps can a degree-d plane curve carry? ==")
for degree in (6, 9, 12, 24):
    best = min(
        (cusp_count_bound(degree, F(j, 48)) for j in range(9, 41) if F(j, 48) * degree >= 3),
        default=None,
    )
    print(f"  degree {degree:>2}: at most {best} cusps (best weight on a coarse grid)")

print("\n  the nine-cusped sextic shows the degree-6 bound is sharp:")
report = check_singularity_budget(9, 3, F(1, 2), -18, 36, [(2, F(1, 6))] * 9)
print(f"  budget check at alpha=1/2: {report.lhs} <= {report.rhs} ({report.verdict}, equality)")

print("\n== Asymptotic cusp density ==")
for denominator in (48, 480, 10**4):
    alpha_star, ratio_star = cusp_ratio_optimize(denominator)
    print(
        f"  grid 1/{denominator}: best weight {alpha_star},"
        f" certified limsup s(d)/d^2 <= {float(ratio_star):.7f}"
    )
print("  (strictly between the classical bounds 9/32 = 0.28125 and 5/16 = 0.3125)")

print("\n== Canonical degree of curves in surfaces of general type ==")
for c1_sq, c2, genus, ordinary in ((9, 3, 0, False), (8, 3, 2, False), (9, 3, 2, True)):
    kind = "ordinary singularities" if ordinary else "any curve"
    bound = canonical_degree_bound(c1_sq, c2, genus, ordinary)
    print(f"  c1^2={c1_sq}, c2={c2}, genus {genus} ({kind}): K.C <= {bound}")

print("\n== On an extremal surface (K^2 = 3 c2 > 0) ==")
for genus, points, label in (
    (0, [], "smooth rational curve"),
    (1, [(1, 2)], "elliptic curve with one cusp"),
    (2, [(2, 2)], "genus-2 curve with one node"),
):
    cap = max_canonical_degree_extremal(genus, points)
    verdict = "impossible (K is ample)" if cap < 0 else f"K.C <= {cap}"
    print(f"  {label}: {verdict}")
