"""Walk through the two lattices and the census of their discriminant classes.

The story: an even lattice L determines a finite quadratic module L*/L.
For the rank-6 ambient lattice the module has 64 classes; sorting them by
the value of the quadratic form and their relationship to the radical class
splits them into six types with counts (1, 15, 15, 1, 20, 12).  The rank-5
member lattice gives 48 classes, counted up to negation as
(1, 15, 15, 1, 6, 10).
"""

from igusa.fqm import (
    TYPE_ORDER_AMBIENT,
    pairing_table,
    radical_class,
    type_census,
)
from igusa.lattices import (
    ambient_lattice,
    determinant,
    discriminant_module,
    restriction_lattice,
    signature,
    smith_normal_form,
)
from igusa.restriction import am_census


def main():
    N = ambient_lattice()
    M = restriction_lattice()
    print("=== The two lattices ===")
    for name, L in (("ambient", N), ("member", M)):
        sig = signature(L)
        _, D, _ = smith_normal_form([list(row) for row in L.gram])
        divisors = [D[i][i] for i in range(L.rank)]
        print(f"{name}: rank {L.rank}, signature {sig}, "
              f"determinant {determinant(L)}, "
              f"gram elementary divisors {divisors}")

    AN = discriminant_module(N)
    AM = discriminant_module(M)
    print()
    print("=== Discriminant modules ===")
    print(f"ambient module: {AN.size} classes, "
          f"all of order <= {max(AN.orders)}")
    print(f"member module:  {AM.size} classes, "
          f"element orders up to {max(AM.orders)}")
    print(f"ambient radical class index: {radical_class(AN)}")

    print()
    print("=== Type census (ambient, 64 classes) ===")
    census = type_census(AN)
    for t in TYPE_ORDER_AMBIENT:
        print(f"  type {t:>4}: {census[t]:3d} classes")

    print()
    print("=== Type census (member, 48 classes up to negation) ===")
    member = am_census()
    for t, count in member.items():
        print(f"  type {t:>4}: {count:3d} classes")

    print()
    print("=== Pairing table (72 entries) ===")
    print("entry (a, b): of the classes with column type, a pair to 0 and")
    print("b pair to 1/2 with any fixed class of the row type")
    table = pairing_table(AN)
    header = " ".join(f"{t:>9}" for t in TYPE_ORDER_AMBIENT)
    print(f"{'':>5} {header}")
    for tu in TYPE_ORDER_AMBIENT:
        cells = " ".join(
            f"({table[tu][tv][0]:2d},{table[tu][tv][1]:2d})"
            for tv in TYPE_ORDER_AMBIENT
        )
        print(f"{tu:>5} {cells}")


if __name__ == "__main__":
    main()
