"""Fifteen lines, fifteen cubics, and degree-16 curves on a singular quartic.

The story: inside the coordinate-sum-zero hyperplane of projective 5-space,
the quartic cut out by (sum of squares)^2 = 4 * (sum of fourth powers)
is singular exactly along fifteen lines indexed by the pair partitions of
six letters.  The fifteen cubics built from coordinate differences span
only a 5-dimensional space, define a linear system with a rich base locus,
and map the quartic onto a cubic hypersurface; the unique relation among
five basis cubics is computed by exact interpolation.  Finally, rational
normal curves of degree 4 through seven general points pull the quartic
back to a degree-16 form, certified exactly.
"""

import random
from fractions import Fraction

from igusa.geometry import (
    PAIR_PARTITIONS,
    boundary_points,
    canonical_polys,
    cubic_base_locus_check,
    cubic_span,
    degree16_check,
    exact_quartic_composition,
    fifteen_cubics,
    fifteen_lines,
    image_cubic_relation,
    image_relation_equivariance,
    incidence_153,
    poly_is_squarefree,
    quartic_point_composition_check,
    rational_curve_via_frame,
    rnc_through_7,
    s6_equivariance,
    singular_inclusion_check,
)

F = Fraction


def generic_seven(seed=42):
    """Seven random rational points of the coordinate-sum-zero hyperplane."""
    rng = random.Random(seed)
    points = []
    while len(points) < 7:
        first = [F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(5)]
        point = tuple(first) + (-sum(first),)
        if len(set(point)) == 6:
            points.append(point)
    return tuple(points)


def poly_to_str(poly, names):
    pieces = []
    for exps, coeff in sorted(poly.terms.items(), reverse=True):
        mono = "*".join(
            f"{names[i]}^{e}" if e > 1 else names[i]
            for i, e in enumerate(exps) if e
        )
        sign = "+" if coeff > 0 else "-"
        mag = abs(coeff)
        body = mono if mag == 1 and mono else f"{mag}" + (f"*{mono}" if mono else "")
        pieces.append(f"{sign} {body}")
    text = " ".join(pieces)
    return text[2:] if text.startswith("+ ") else text


def main():
    cubic_sum, quartic = canonical_polys()
    print("=== The quartic and its fifteen singular lines ===")
    print(f"quartic at (1,1,1,1,-2,-2): "
          f"{quartic.evaluate((1, 1, 1, 1, -2, -2))}")
    print(f"quartic at (1,-1,0,0,0,0):  "
          f"{quartic.evaluate((1, -1, 0, 0, 0, 0))}")
    print(f"pair partitions of six letters: {len(PAIR_PARTITIONS)}")
    line0 = fifteen_lines()[0]
    print(f"first line, partition {line0.partition}: coordinates "
          "(a, a, b, b, -a-b, -a-b)")
    sing = singular_inclusion_check()
    print(f"lines inside the singular locus: {sing['lines_in_singular_locus']}"
          f" (gradient identity: {sing['gradient_identity']}, "
          f"off-line gradient witnesses: {sing['off_line_witnesses']})")

    print()
    print("=== A (15, 3) incidence configuration ===")
    inc = incidence_153()
    print(f"boundary points: {len(boundary_points())}, "
          f"row sums {sorted(set(inc['row_sums']))}, "
          f"column sums {sorted(set(inc['col_sums']))}")
    header = "      " + " ".join(f"{j:2d}" for j in range(15))
    print(header)
    for i, row in enumerate(inc["matrix"]):
        cells = " ".join(" x" if v else " ." for v in row)
        print(f"  p{i:2d} {cells}")

    print()
    print("=== Fifteen cubics spanning a 5-dimensional system ===")
    span = cubic_span()
    print(f"rank of the 15 x 56 coefficient matrix: {span['rank']}")
    print(f"basis partitions: "
          f"{[PAIR_PARTITIONS[i] for i in span['basis_indices']]}")
    locus = cubic_base_locus_check()
    print(f"base locus: {locus['base_lines']} lines and "
          f"{locus['base_points']} points, quartic vanishing to order "
          f"{locus['vanishing_order']} at the points")

    print()
    print("=== Symmetric-group action ===")
    eq = s6_equivariance()
    s1 = eq["s1"]
    moved = sum(1 for idx, (img, _) in enumerate(s1) if img != idx)
    flipped = sum(1 for _, sign in s1 if sign < 0)
    print(f"adjacent transposition s1 permutes the cubics, moving {moved} "
          f"and flipping the sign of {flipped}")

    print()
    print("=== The image cubic ===")
    relation = image_cubic_relation(samples=60, seed=0)
    names = [f"y{i}" for i in range(5)]
    print("unique cubic relation among the five basis cubics:")
    print(f"  {poly_to_str(relation, names)} = 0")
    signs = image_relation_equivariance(relation)
    print(f"each adjacent transposition rescales it by: "
          f"{sorted(set(signs.values()))} (the sign character)")

    print()
    print("=== Degree-4 curves through seven points ===")
    points = generic_seven()
    print("seven generic rational points on the hyperplane, e.g. the first:")
    print(f"  {tuple(str(c) for c in points[0])}")
    curve = rnc_through_7(points, seed=0)
    print(f"Newton-refined curve residual: {curve.residual:.3e}")
    exact = rational_curve_via_frame(points)
    composed = exact_quartic_composition(exact)
    degree = max(i for i, c in enumerate(composed) if c)
    print(f"exact pullback of the quartic along the curve: "
          f"degree {degree} in the parameter, "
          f"squarefree = {poly_is_squarefree(composed)}")
    check = quartic_point_composition_check(seed=0)
    print(f"interpolation from a point on the quartic gives an exact root: "
          f"constant term zero = {check['constant_term_exact_zero']}, "
          f"degree-16 term nonzero = {check['leading_term_nonzero']}")

    print()
    print("=== Degree-16 certification over random configurations ===")
    result = degree16_check(trials=20, seed=0)
    print(f"  trials: {result['trials']}, successes: {result['successes']} "
          f"(rate {result['success_rate']:.2f})")
    print(f"  discarded degenerate draws: {len(result['discarded'])}")
    print(f"  worst Newton residual: {result['worst_newton_residual']:.3e}")


if __name__ == "__main__":
    main()
