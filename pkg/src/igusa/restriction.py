"""The signature-(2,3) sublattice, its discriminant combinatorics, and the
hyperplane-restriction case analysis.

The rank-5 lattice sits primitively inside the rank-6 ambient lattice as the
orthogonal complement of the sum of the two root generators.  Restricting
hyperplane divisors from the ambient period domain to the smaller one splits
into finitely many cases indexed by the vector norm; this module enumerates
lattice vectors in coordinate boxes and certifies the case table, and builds
the boundary-component combinatorics on the smaller discriminant group.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import numpy as np

from .fqm import (
    TYPE_ORDER_RESTRICTION,
    element_types,
    isotropic_planes,
    isotropic_vectors,
    radical_class,
    type_census_mod_negation,
)
from .lattices import (
    ambient_lattice,
    determinant,
    discriminant_module,
    restriction_lattice,
    smith_normal_form,
)
from .weil import ambient_module

__all__ = [
    "restriction_module",
    "EmbeddedSublattice",
    "build_embedding",
    "am_census",
    "boundary_configuration",
    "RestrictionCase",
    "restriction_case",
    "heegner_restriction_cases",
    "v_to_v1",
    "all_v1_images",
    "seven_lines",
]


@lru_cache(maxsize=1)
def restriction_module():
    """Discriminant group of the rank-5 lattice, with attached lattice."""
    return discriminant_module(restriction_lattice())


# ---------------------------------------------------------------------------
# The embedding
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EmbeddedSublattice:
    """The rank-5 member lattice inside the rank-6 ambient lattice.

    member_basis holds ambient coordinates of the five basis vectors
    (the two hyperbolic pairs and the difference of the root generators);
    complement_generator is the sum of the root generators."""

    ambient: object
    member_basis: tuple
    complement_generator: tuple

    def embed(self, coords) -> tuple:
        """Ambient coordinates of a member vector given in member coordinates."""
        if len(coords) != len(self.member_basis):
            raise ValueError("member coordinate length mismatch")
        n = self.ambient.rank
        out = [Fraction(0)] * n
        for c, basis_vec in zip(coords, self.member_basis):
            c = Fraction(c)
            for i in range(n):
                out[i] += c * basis_vec[i]
        return tuple(out)

    def split(self, coords):
        """Write an ambient vector r as r1 + (m/2) * complement with r1 in
        the member's rational span; returns (r1 ambient coords, m)."""
        c = self.complement_generator
        c_norm = self.ambient.norm(c)
        m = 2 * self.ambient.ip(coords, c) / c_norm
        if m.denominator != 1:
            raise ValueError("vector does not split with an integer m")
        m = int(m)
        r1 = tuple(
            Fraction(x) - Fraction(m, 2) * Fraction(ci)
            for x, ci in zip(coords, c)
        )
        if self.ambient.ip(r1, c):
            raise AssertionError("split component must be orthogonal")
        return r1, m

    def member_coordinates(self, ambient_coords) -> tuple:
        """Member coordinates of an ambient vector in the member's rational
        span (exact Gaussian solve; raises if outside the span)."""
        basis = self.member_basis
        n = self.ambient.rank
        k = len(basis)
        # augmented system: columns are basis vectors
        rows = [
            [Fraction(basis[j][i]) for j in range(k)] + [Fraction(ambient_coords[i])]
            for i in range(n)
        ]
        pivots = []
        r = 0
        for col in range(k):
            piv = next((i for i in range(r, n) if rows[i][col]), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = 1 / rows[r][col]
            rows[r] = [v * inv for v in rows[r]]
            for i in range(n):
                if i != r and rows[i][col]:
                    f = rows[i][col]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(col)
            r += 1
        if len(pivots) != k:
            raise AssertionError("member basis must have full rank")
        if any(rows[i][k] for i in range(r, n)):
            raise ValueError("vector lies outside the member span")
        sol = [Fraction(0)] * k
        for i, col in enumerate(pivots):
            sol[col] = rows[i][k]
        return tuple(sol)


@lru_cache(maxsize=1)
def build_embedding() -> EmbeddedSublattice:
    """Construct and fully verify the primitive embedding: the member Gram
    matrix matches the abstract rank-5 lattice, the basis is primitive in
    the ambient lattice (all Smith elementary divisors 1), the complement
    generator is orthogonal with norm -4, the index bookkeeping gives
    index 2, and the member discriminant group has orders (2,2,2,2,4)."""
    N = ambient_lattice()
    M = restriction_lattice()
    basis = (
        N.basis_vector("e1"),
        N.basis_vector("f1"),
        N.basis_vector("e2"),
        N.basis_vector("f2"),
        tuple(
            a - b
            for a, b in zip(N.basis_vector("a1"), N.basis_vector("a2"))
        ),
    )
    complement = tuple(
        a + b for a, b in zip(N.basis_vector("a1"), N.basis_vector("a2"))
    )
    emb = EmbeddedSublattice(N, basis, complement)

    gram = [[int(N.ip(u, v)) for v in basis] for u in basis]
    if gram != [list(row) for row in M.gram]:
        raise ValueError("member basis Gram matrix mismatch")
    if gram[4][4] != -4:
        raise ValueError("difference of root generators must have norm -4")
    if N.ip(basis[4], complement):
        raise ValueError("complement generator must be orthogonal to the member")
    if N.norm(complement) != -4:
        raise ValueError("complement generator must have norm -4")

    _, d, _ = smith_normal_form([list(map(int, v)) for v in basis])
    divisors = [d[i][i] for i in range(len(basis))]
    if divisors != [1] * len(basis):
        raise ValueError(f"member basis is not primitive: divisors {divisors}")

    # index bookkeeping: |det member| * |complement norm| = index^2 * |det ambient|
    lhs = abs(determinant(M)) * 4
    rhs = abs(determinant(N))
    if lhs != 4 * rhs or lhs != 256:
        raise ValueError("determinant bookkeeping fails: index is not 2")

    A = restriction_module()
    if A.orders != (2, 2, 2, 2, 4):
        raise ValueError(f"member discriminant group has orders {A.orders}")
    return emb


# ---------------------------------------------------------------------------
# Census of the member discriminant group modulo negation
# ---------------------------------------------------------------------------

_AM_EXPECTED = dict(zip(TYPE_ORDER_RESTRICTION, (1, 15, 15, 1, 6, 10)))


def am_census() -> dict:
    """Classify the 48 negation classes of the member discriminant group by
    type and verify the counts (1, 15, 15, 1, 6, 10), that the quarter-value
    types consist of order-4 elements on which negation acts as translation
    by the radical class, and that negation fixes all 2-torsion."""
    A = restriction_module()
    counts = type_census_mod_negation(A)
    if counts != _AM_EXPECTED:
        raise ValueError(f"census mismatch: {counts}")
    if sum(counts.values()) != 48:
        raise ValueError("negation-class total must be 48")
    labels = element_types(A)
    kappa = radical_class(A)
    for x in A.elements():
        quarter = labels[x] in ("3/4", "7/4")
        if quarter != (A.order_of(x) == 4):
            raise ValueError(f"order/type mismatch at element {x}")
        if quarter:
            if A.neg(x) != A.add(x, kappa):
                raise ValueError(f"negation is not radical translation at {x}")
        elif A.neg(x) != x:
            raise ValueError(f"negation moves the 2-torsion element {x}")
    if A.neg(kappa) != kappa:
        raise ValueError("radical class must be negation-fixed")
    return counts


# ---------------------------------------------------------------------------
# Boundary combinatorics
# ---------------------------------------------------------------------------


def boundary_configuration() -> dict:
    """Isotropic points and lines of the member discriminant group: 15
    nonzero isotropic classes, 15 order-4 totally isotropic subgroups, a
    3-regular incidence both ways, and 7 isotropic classes (self included)
    pairing integrally with any given one."""
    A = restriction_module()
    points = isotropic_vectors(A)
    lines = isotropic_planes(A)
    if len(points) != 15:
        raise ValueError(f"expected 15 isotropic classes, found {len(points)}")
    if len(lines) != 15:
        raise ValueError(f"expected 15 isotropic lines, found {len(lines)}")

    point_set = set(points)
    for line in lines:
        if len(line) != 3 or not set(line) <= point_set:
            raise ValueError(f"line {line} is not three isotropic classes")
    lines_through = {p: sum(1 for line in lines if p in line) for p in points}
    if set(lines_through.values()) != {3}:
        raise ValueError("incidence is not 3-regular on points")

    perp_counts = {}
    for p in points:
        perp = [x for x in points if A.b4[p, x] == 0]
        if p not in perp:
            raise ValueError("a class must pair integrally with itself")
        perp_counts[p] = len(perp)
    if set(perp_counts.values()) != {7}:
        raise ValueError(f"perpendicularity counts {set(perp_counts.values())}")

    return {
        "points": len(points),
        "lines": len(lines),
        "lines_through_each_point": 3,
        "points_on_each_line": 3,
        "perpendicular_isotropic_count": 7,
    }


# ---------------------------------------------------------------------------
# Restriction case analysis
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RestrictionCase:
    """One ambient vector r split as r1 + (m/2) * complement."""

    r: tuple
    r1: tuple  # ambient coordinates, rational
    m: int
    r_norm: Fraction
    r1_norm: Fraction
    ambient_type: str
    beta_type: str


def restriction_case(r) -> RestrictionCase:
    """Split one ambient lattice vector and classify both halves: the class
    of r/2 in the ambient discriminant group and, when r1/2 lies in the
    member dual, the class of r1/2 in the member discriminant group."""
    emb = build_embedding()
    N = emb.ambient
    AN = ambient_module()
    AM = restriction_module()
    r = tuple(Fraction(c) for c in r)
    if any(c.denominator != 1 for c in r):
        raise ValueError("r must be an integral ambient vector")
    r1, m = emb.split(r)
    r_norm = N.norm(r)
    r1_norm = N.norm(r1)
    if r_norm != r1_norm - m * m:
        raise AssertionError("norm bookkeeping r^2 = r1^2 - m^2 fails")
    half = tuple(c / 2 for c in r)
    ambient_type = element_types(AN)[AN.class_of_vector(half)]
    half_m = tuple(c / 2 for c in emb.member_coordinates(r1))
    beta_type = element_types(AM)[AM.class_of_vector(half_m)]
    return RestrictionCase(
        r=tuple(int(c) for c in r),
        r1=r1,
        m=m,
        r_norm=r_norm,
        r1_norm=r1_norm,
        ambient_type=ambient_type,
        beta_type=beta_type,
    )


def _box_rows(bound: int):
    """Integer coordinate vectors with max-norm <= bound, in slices."""
    rng = np.arange(-bound, bound + 1, dtype=np.int64)
    tail = np.stack(
        np.meshgrid(*([rng] * 5), indexing="ij"), axis=-1
    ).reshape(-1, 5)
    for x1 in rng:
        head = np.full((tail.shape[0], 1), x1, dtype=np.int64)
        yield np.concatenate([head, tail], axis=1)


def _vectorized_classes(module, K: np.ndarray) -> np.ndarray:
    """Class indices from integer dual-pairing vectors K (rows of G @ x)."""
    push = np.array(module._push_mat, dtype=np.int64)
    s = K @ push.T
    digits = np.stack(
        [s[:, i] % module.orders[pos] for pos, i in enumerate(module._kept)],
        axis=1,
    )
    return digits @ module._radix


_CASE_NORMS = (-4, -2, -6)


def heegner_restriction_cases(bound: int = 3) -> dict:
    """Enumerate all ambient lattice vectors r in the coordinate box of
    half-width `bound` with r^2 in {-4, -2, -6} (r/2 automatically lies in
    the ambient dual) and verify the restriction case table on the vectors
    whose member component has negative norm:

      r^2 = -4  =>  m = 0,  r1^2 = -4, member class of type (1)
                    (type (10) exactly when the ambient class is the
                    characteristic class)
      r^2 = -2  =>  m = +-1, r1^2 = -1, member class of type (7/4)
      r^2 = -6  =>  m = +-1, r1^2 = -5, member class of type (3/4)

    and that for the odd-m cases the vectors pair off (same member
    component, m = +1 and m = -1), giving each hyperplane multiplicity 2.
    Any violation raises with the witness vector."""
    if bound < 3:
        raise ValueError("bound must be at least 3")
    emb = build_embedding()
    AN = ambient_module()
    AM = restriction_module()
    an_types = element_types(AN)
    am_types = element_types(AM)
    kappa_n = radical_class(AN)

    gram_n = np.array(ambient_lattice().gram, dtype=np.int64)
    gram_m = np.array(restriction_lattice().gram, dtype=np.int64)

    stats = {
        norm: {
            "total": 0,
            "relevant": 0,
            "m_values": set(),
            "r1_norms": set(),
            "ambient_types": set(),
            "beta_types": set(),
            "pairs": {},
        }
        for norm in _CASE_NORMS
    }
    spot_checks = []

    for block in _box_rows(bound):
        norms = (
            4 * (block[:, 0] * block[:, 1] + block[:, 2] * block[:, 3])
            - 2 * (block[:, 4] ** 2 + block[:, 5] ** 2)
        )
        for target in _CASE_NORMS:
            sel = block[norms == target]
            if not sel.size:
                continue
            entry = stats[target]
            entry["total"] += len(sel)
            m = sel[:, 4] + sel[:, 5]
            r1_sq = target + m * m
            relevant = r1_sq < 0
            sel = sel[relevant]
            m = m[relevant]
            r1_sq = r1_sq[relevant]
            if not sel.size:
                continue
            entry["relevant"] += len(sel)
            entry["m_values"].update(int(v) for v in np.unique(m))
            entry["r1_norms"].update(int(v) for v in np.unique(r1_sq))

            # ambient classes of r/2: pairing vector G_N r / 2 is integral
            k_n = sel @ gram_n
            if np.any(k_n % 2):
                bad = sel[np.argwhere((k_n % 2).any(axis=1))[0, 0]]
                raise ValueError(f"r/2 outside the ambient dual at r = {tuple(bad)}")
            classes_n = _vectorized_classes(AN, k_n // 2)

            # member components: doubled member coordinates are integral
            two_r1 = np.concatenate(
                [2 * sel[:, :4], (sel[:, 4:5] - sel[:, 5:6])], axis=1
            )
            t = two_r1 @ gram_m
            if np.any(t % 4):
                bad = sel[np.argwhere((t % 4).any(axis=1))[0, 0]]
                raise ValueError(
                    f"member component outside the member dual at r = {tuple(bad)}"
                )
            classes_m = _vectorized_classes(AM, t // 4)

            for row, mm, cn, cm in zip(sel, m, classes_n, classes_m):
                a_type = an_types[int(cn)]
                b_type = am_types[int(cm)]
                entry["ambient_types"].add(a_type)
                entry["beta_types"].add(b_type)
                witness = tuple(int(v) for v in row)
                if target == -4:
                    if mm != 0:
                        raise ValueError(f"norm -4 case with m != 0: r = {witness}")
                    if (int(cn) == kappa_n) != (b_type == "10"):
                        raise ValueError(
                            f"characteristic-class bookkeeping fails at r = {witness}"
                        )
                    if b_type not in ("1", "10"):
                        raise ValueError(
                            f"norm -4 member class of type {b_type}: r = {witness}"
                        )
                else:
                    if mm not in (-1, 1):
                        raise ValueError(
                            f"norm {target} case with m = {int(mm)}: r = {witness}"
                        )
                    expected = "7/4" if target == -2 else "3/4"
                    if b_type != expected:
                        raise ValueError(
                            f"norm {target} member class of type {b_type}: "
                            f"r = {witness}"
                        )
                    key = tuple(int(v) for v in row[:4]) + (
                        int(row[4]) - int(row[5]),
                    )
                    entry["pairs"].setdefault(key, []).append(int(mm))
                if len(spot_checks) < 60:
                    spot_checks.append((witness, int(mm), a_type, b_type))

    # every odd-m hyperplane is hit by exactly the pair m = +1, m = -1
    for target in (-2, -6):
        for key, ms in stats[target]["pairs"].items():
            if sorted(ms) != [-1, 1]:
                raise ValueError(
                    f"multiplicity pairing fails for member component {key}: "
                    f"m values {sorted(ms)}"
                )

    # exact-arithmetic spot check of the vectorized classification
    for witness, mm, a_type, b_type in spot_checks[::7]:
        case = restriction_case(witness)
        if (case.m, case.ambient_type, case.beta_type) != (mm, a_type, b_type):
            raise AssertionError(
                f"vectorized classification disagrees with the exact path "
                f"at r = {witness}"
            )

    report = {"bound": bound, "cases": {}}
    for target in _CASE_NORMS:
        entry = stats[target]
        report["cases"][target] = {
            "vectors_in_box": entry["total"],
            "relevant": entry["relevant"],
            "m_values": tuple(sorted(entry["m_values"])),
            "r1_norms": tuple(sorted(entry["r1_norms"])),
            "ambient_types": tuple(sorted(entry["ambient_types"])),
            "beta_types": tuple(sorted(entry["beta_types"])),
            "hyperplane_multiplicity": 1 if target == -4 else 2,
            "paired_hyperplanes": len(entry["pairs"]) if target != -4 else None,
        }
    return report


# ---------------------------------------------------------------------------
# Boundary correspondence between the two discriminant groups
# ---------------------------------------------------------------------------


@lru_cache(maxsize=1)
def _norm_minus4_projection() -> dict:
    """For each weight-one ambient class, the member class obtained from the
    relevant norm (-4) representatives: maps class index (ambient) to class
    index (member), verified independent of the representative."""
    emb = build_embedding()
    AN = ambient_module()
    AM = restriction_module()
    N = emb.ambient
    images = {}
    rng = range(-2, 3)
    for x1 in rng:
        for x2 in rng:
            for x3 in rng:
                for x4 in rng:
                    for x5 in rng:
                        for x6 in rng:
                            r = (x1, x2, x3, x4, x5, x6)
                            if N.norm(r) != -4:
                                continue
                            r1, m = emb.split(r)
                            if N.norm(r1) >= 0:
                                continue
                            if m != 0:
                                raise AssertionError(
                                    f"relevant norm -4 vector with m != 0: {r}"
                                )
                            cn = AN.class_of_vector(tuple(Fraction(c, 2) for c in r))
                            half_m = tuple(
                                c / 2 for c in emb.member_coordinates(r1)
                            )
                            cm = AM.class_of_vector(half_m)
                            if cn in images and images[cn] != cm:
                                raise ValueError(
                                    f"projection depends on the representative "
                                    f"for ambient class {cn}: witness {r}"
                                )
                            images[cn] = cm
    return images


def v_to_v1(plane) -> frozenset:
    """Image of an order-8 ambient subgroup (an isotropic plane joined with
    the characteristic class) on the member side: lift each of its three
    weight-one non-characteristic classes to a relevant norm (-4) vector,
    project to the member span, and reduce modulo the member lattice.

    Returns the generated subgroup (8 member classes) after verifying it is
    3-dimensional 2-torsion with identically integral pairing, contains the
    member characteristic class, and that the three images sum to it."""
    AN = ambient_module()
    AM = restriction_module()
    if tuple(sorted(plane)) not in isotropic_planes(AN):
        raise ValueError("input must be one of the 15 isotropic planes")
    kappa_n = radical_class(AN)
    kappa_m = radical_class(AM)
    targets = [AN.add(x, kappa_n) for x in plane]
    an_types = element_types(AN)
    if any(an_types[t] != "1" for t in targets):
        raise AssertionError("translated plane classes must have weight one")

    images = _norm_minus4_projection()
    betas = []
    for t in targets:
        if t not in images:
            raise ValueError(f"no relevant representative found for class {t}")
        betas.append(images[t])

    am_labels = element_types(AM)
    if any(am_labels[b] != "1" for b in betas):
        raise ValueError("projected classes must have weight one on the member side")
    total = 0
    for b in betas:
        total = AM.add(total, b)
    if total != kappa_m:
        raise ValueError("the three projected classes must sum to the "
                         "member characteristic class")

    # subgroup generated by the three images
    v1 = {0}
    for b in betas:
        v1 |= {AM.add(x, b) for x in v1}
    if len(v1) != 8:
        raise ValueError(f"image subgroup has order {len(v1)}, expected 8")
    if any(AM.order_of(x) > 2 for x in v1):
        raise ValueError("image subgroup must be 2-torsion")
    if any(AM.b4[x, y] for x in v1 for y in v1):
        raise ValueError("pairing must be identically integral on the image")
    if kappa_m not in v1:
        raise ValueError("image must contain the member characteristic class")
    if sum(1 for x in v1 if am_labels[x] == "1") != 3:
        raise ValueError("image must contain exactly three weight-one classes")
    return frozenset(v1)


def all_v1_images() -> dict:
    """The images of all 15 planes; verifies they are pairwise distinct."""
    AN = ambient_module()
    images = {plane: v_to_v1(plane) for plane in isotropic_planes(AN)}
    if len(set(images.values())) != 15:
        raise ValueError("plane images are not pairwise distinct")
    return images


def seven_lines(v1) -> frozenset:
    """The isotropic lines of the member discriminant group pairing
    integrally with the weight-one classes of v1: each of the three
    weight-one classes admits exactly three such lines, each containing the
    class shifted by the characteristic class, with one line common to all
    three; the union has exactly 7 members."""
    AM = restriction_module()
    labels = element_types(AM)
    kappa_m = radical_class(AM)
    v1 = frozenset(v1)
    if len(v1) != 8 or 0 not in v1 or kappa_m not in v1:
        raise ValueError("input must be an order-8 subgroup containing 0 "
                         "and the characteristic class")
    betas = [x for x in v1 if labels[x] == "1"]
    if len(betas) != 3:
        raise ValueError("input must contain exactly three weight-one classes")

    lines = isotropic_planes(AM)
    common = tuple(sorted(x for x in v1 if x and AM.q4[x] == 0))
    if common not in lines:
        raise AssertionError("the isotropic part of the subgroup must be a line")
    per_beta = {}
    for b in betas:
        found = [
            line
            for line in lines
            if all(AM.b4[b, y] == 0 for y in line)
        ]
        if len(found) != 3:
            raise ValueError(
                f"class {b} lies on {len(found)} isotropic lines, expected 3"
            )
        if common not in found:
            raise ValueError(f"the common line is missing for class {b}")
        meet = AM.add(b, kappa_m)
        for line in found:
            if meet not in line:
                raise ValueError(
                    f"line {line} misses the shifted class of {b}"
                )
        per_beta[b] = found

    union = set()
    for found in per_beta.values():
        union.update(found)
    extras = [set(found) - {common} for found in per_beta.values()]
    for s1, s2 in combinations(extras, 2):
        if s1 & s2:
            raise ValueError("the per-class line families must be disjoint")
    if len(union) != 7:
        raise ValueError(f"line union has {len(union)} members, expected 7")
    return frozenset(union)
