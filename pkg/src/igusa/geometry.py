"""Exact projective geometry of the singular quartic threefold.

The quartic hypersurface (sum of squares)^2 = 4(sum of fourth powers) inside
the hyperplane where the six coordinates sum to zero has exactly fifteen
singular lines matching the boundary combinatorics of the period-domain
quotient.  The fifteen products of three coordinate differences span a
five-dimensional space of cubics whose induced map has a unique cubic image
relation, and composing the quartic with rational normal curves through the
six distinguished base points certifies that the induced self-map has
degree sixteen.  All structural checks are exact over the rationals; only
the degree count is numeric, with explicit tolerances.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import numpy as np

__all__ = [
    "MultiPoly",
    "ProjPoint",
    "PAIR_PARTITIONS",
    "canonical_polys",
    "hyperplane_poly",
    "hyperplane_evaluate",
    "LineParam",
    "fifteen_lines",
    "boundary_points",
    "incidence_153",
    "singular_inclusion_check",
    "fifteen_cubics",
    "cubic_span",
    "s6_equivariance",
    "image_cubic_relation",
    "base_points",
    "base_lines",
    "ParamCurve",
    "ExactCurve",
    "rational_curve_via_frame",
    "exact_gauge_transport",
    "exact_quartic_composition",
    "poly_is_squarefree",
    "rnc_through_7",
    "curves_agree",
    "cubic_base_locus_check",
    "image_relation_equivariance",
    "quartic_point_composition_check",
    "degree16_check",
]


# ---------------------------------------------------------------------------
# Exact multivariate polynomials
# ---------------------------------------------------------------------------


class MultiPoly:
    """Multivariate polynomial over the rationals: exponent tuple -> coefficient."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = int(nvars)
        clean = {}
        for exps, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if not coeff:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.nvars or any(e < 0 for e in exps):
                raise ValueError("bad exponent vector")
            clean[exps] = clean.get(exps, Fraction(0)) + coeff
        self.terms = {e: c for e, c in clean.items() if c}

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MultiPoly":
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): Fraction(1)})

    # -- ring operations -----------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.nvars, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return MultiPoly(self.nvars, out)

    def __sub__(self, other):
        return self + (-other if isinstance(other, MultiPoly) else -Fraction(other))

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = Fraction(other)
            return MultiPoly(self.nvars, {e: v * c for e, v in self.terms.items()})
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("nonnegative powers only")
        result = MultiPoly.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {len(self.terms)} terms)"

    # -- structure -----------------------------------------------------------

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def evaluate(self, values):
        """Exact for Fraction inputs; works with float/complex as well."""
        if len(values) != self.nvars:
            raise ValueError("value count mismatch")
        total = 0
        for exps, coeff in self.terms.items():
            term = coeff
            for v, e in zip(values, exps):
                if e:
                    term = term * v**e
            total = total + term
        return total

    def partial(self, index: int) -> "MultiPoly":
        out = {}
        for exps, coeff in self.terms.items():
            e = exps[index]
            if not e:
                continue
            new = list(exps)
            new[index] = e - 1
            key = tuple(new)
            out[key] = out.get(key, Fraction(0)) + coeff * e
        return MultiPoly(self.nvars, out)

    def compose(self, substitutions) -> "MultiPoly":
        """Substitute a polynomial (all over a common variable set) for each
        variable."""
        if len(substitutions) != self.nvars:
            raise ValueError("substitution count mismatch")
        nout = substitutions[0].nvars
        if any(s.nvars != nout for s in substitutions):
            raise ValueError("substitutions disagree on variable count")
        total = MultiPoly.zero(nout)
        for exps, coeff in self.terms.items():
            term = MultiPoly.constant(nout, coeff)
            for sub, e in zip(substitutions, exps):
                if e:
                    term = term * sub**e
            total = total + term
        return total


# ---------------------------------------------------------------------------
# Projective points
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ProjPoint:
    """A point of projective 5-space with canonicalized rational coordinates
    (first nonzero coordinate scaled to 1)."""

    coords: tuple

    def __init__(self, coords):
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != 6:
            raise ValueError("six coordinates required")
        pivot = next((c for c in coords if c), None)
        if pivot is None:
            raise ValueError("projective point cannot be zero")
        object.__setattr__(
            self, "coords", tuple(c / pivot for c in coords)
        )


# ---------------------------------------------------------------------------
# Canonical hypersurfaces
# ---------------------------------------------------------------------------


@lru_cache(maxsize=1)
def canonical_polys():
    """(cubic, quartic): the sum of cubes, and (sum of squares)^2 minus four
    times the sum of fourth powers, in six variables over the rationals."""
    xs = [MultiPoly.variable(6, i) for i in range(6)]
    cubes = MultiPoly.zero(6)
    squares = MultiPoly.zero(6)
    fourths = MultiPoly.zero(6)
    for x in xs:
        cubes = cubes + x**3
        squares = squares + x**2
        fourths = fourths + x**4
    quartic = squares**2 - 4 * fourths
    return cubes, quartic


@lru_cache(maxsize=1)
def hyperplane_poly() -> MultiPoly:
    """The sum of the six coordinates."""
    total = MultiPoly.zero(6)
    for i in range(6):
        total = total + MultiPoly.variable(6, i)
    return total


def hyperplane_evaluate(poly: MultiPoly, coords):
    """Evaluate after checking the point lies on the coordinate-sum
    hyperplane."""
    values = [Fraction(c) for c in coords]
    if sum(values) != 0:
        raise ValueError("point is not on the hyperplane")
    return poly.evaluate(values)


# ---------------------------------------------------------------------------
# Pair partitions, singular lines, boundary points
# ---------------------------------------------------------------------------


def _pair_partitions(items):
    items = list(items)
    if not items:
        yield ()
        return
    first = items[0]
    for k in range(1, len(items)):
        pair = (first, items[k])
        rest = items[1:k] + items[k + 1 :]
        for tail in _pair_partitions(rest):
            yield (pair,) + tail


PAIR_PARTITIONS = tuple(sorted(_pair_partitions(range(6))))


@dataclass(frozen=True)
class LineParam:
    """A line with coordinates that are linear forms in two parameters: the
    first pair of the partition carries (1,0), the second (0,1), and the
    third (-1,-1)."""

    partition: tuple
    coefficients: tuple  # six (coeff_a, coeff_b) pairs

    def point(self, a, b) -> tuple:
        return tuple(ca * a + cb * b for ca, cb in self.coefficients)

    def substitutions(self) -> list:
        """The six coordinates as polynomials in the two parameters."""
        pa = MultiPoly.variable(2, 0)
        pb = MultiPoly.variable(2, 1)
        return [ca * pa + cb * pb for ca, cb in self.coefficients]

    def contains(self, point: ProjPoint) -> bool:
        c = point.coords
        return all(
            c[i] == c[j] for i, j in self.partition
        ) and sum(c) == 0


@lru_cache(maxsize=1)
def fifteen_lines() -> tuple:
    """The fifteen lines with coordinates (a, a, b, b, -a-b, -a-b) up to
    permutation, one per partition of the six indices into pairs; each is
    verified to lie identically on the quartic and the hyperplane."""
    _, quartic = canonical_polys()
    lines = []
    for partition in PAIR_PARTITIONS:
        weights = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)),
                   (Fraction(-1), Fraction(-1)))
        coeffs = [None] * 6
        for pair, w in zip(partition, weights):
            for idx in pair:
                coeffs[idx] = w
        line = LineParam(partition, tuple(coeffs))
        subs = line.substitutions()
        total = MultiPoly.zero(2)
        for s in subs:
            total = total + s
        if total:
            raise AssertionError("line leaves the hyperplane")
        if quartic.compose(subs):
            raise AssertionError(f"line {partition} is not on the quartic")
        lines.append(line)
    if len({line.partition for line in lines}) != 15:
        raise AssertionError("the fifteen lines must be pairwise distinct")
    return tuple(lines)


@lru_cache(maxsize=1)
def boundary_points() -> tuple:
    """The fifteen points with four coordinates 1 and two coordinates -2,
    all on the quartic (exact check)."""
    _, quartic = canonical_polys()
    points = []
    for low in combinations(range(6), 2):
        coords = [Fraction(1)] * 6
        for i in low:
            coords[i] = Fraction(-2)
        point = ProjPoint(coords)
        if sum(point.coords) != 0 or quartic.evaluate(point.coords) != 0:
            raise AssertionError(f"boundary point {coords} fails the equations")
        points.append(point)
    return tuple(sorted(points, key=lambda p: p.coords))


def incidence_153() -> dict:
    """Incidence between the fifteen boundary points and fifteen lines:
    a 15 x 15 zero-one matrix with all row and column sums equal to 3."""
    lines = fifteen_lines()
    points = boundary_points()
    matrix = tuple(
        tuple(1 if line.contains(p) else 0 for line in lines) for p in points
    )
    row_sums = [sum(row) for row in matrix]
    col_sums = [sum(row[j] for row in matrix) for j in range(15)]
    if set(row_sums) != {3}:
        raise ValueError(f"point incidence degrees {sorted(set(row_sums))}")
    if set(col_sums) != {3}:
        raise ValueError(f"line incidence degrees {sorted(set(col_sums))}")
    return {
        "matrix": matrix,
        "row_sums": tuple(row_sums),
        "col_sums": tuple(col_sums),
        "points": points,
        "lines": tuple(line.partition for line in lines),
    }


def singular_inclusion_check() -> dict:
    """Certify the fifteen lines lie in the singular locus of the quartic
    surface cut on the hyperplane: along each line, identically in the two
    parameters, the quartic vanishes and its gradient is proportional to the
    all-ones hyperplane gradient.  Also exhibits quartic points off the
    lines where the gradient is not proportional."""
    _, quartic = canonical_polys()
    grad = [quartic.partial(i) for i in range(6)]
    for line in fifteen_lines():
        subs = line.substitutions()
        restricted = [g.compose(subs) for g in grad]
        for i in range(1, 6):
            if restricted[i] != restricted[0]:
                raise ValueError(
                    f"gradient not proportional to all-ones on {line.partition}"
                )

    # rational quartic points off every line must have non-constant gradient
    witnesses = []
    lines = fifteen_lines()
    for head in combinations_with_small_entries():
        coords = head + (-sum(head),)
        if all(c == 0 for c in coords):
            continue
        if quartic.evaluate(coords) != 0:
            continue
        point = ProjPoint(coords)
        if any(line.contains(point) for line in lines):
            continue
        values = [g.evaluate(coords) for g in grad]
        if len(set(values)) == 1:
            raise ValueError(f"smooth witness {coords} has proportional gradient")
        witnesses.append(point)
    if not witnesses:
        raise ValueError("no off-line quartic witness found in the search box")
    return {
        "lines_in_singular_locus": 15,
        "gradient_identity": "symbolic",
        "off_line_witnesses": len(witnesses),
    }


def combinations_with_small_entries():
    """Integer 5-tuples with entries in [-2, 2] (the sixth coordinate closes
    the hyperplane sum)."""
    rng = range(-2, 3)
    for a in rng:
        for b in rng:
            for c in rng:
                for d in rng:
                    for e in rng:
                        yield (
                            Fraction(a),
                            Fraction(b),
                            Fraction(c),
                            Fraction(d),
                            Fraction(e),
                        )


# ---------------------------------------------------------------------------
# The fifteen cubics and their five-dimensional span
# ---------------------------------------------------------------------------


@lru_cache(maxsize=1)
def fifteen_cubics() -> tuple:
    """The products of the three coordinate differences of a pair partition,
    with the sign convention: pairs sorted by least element (so the first
    factor involves the first coordinate), minuend the smaller index."""
    xs = [MultiPoly.variable(6, i) for i in range(6)]
    cubics = []
    for partition in PAIR_PARTITIONS:
        poly = MultiPoly.constant(6, 1)
        for i, j in partition:
            poly = poly * (xs[i] - xs[j])
        cubics.append(poly)
    return tuple(cubics)


def _degree3_monomials():
    monos = sorted(
        e
        for e in _compositions(3, 6)
    )
    if len(monos) != 56:
        raise AssertionError("six-variable cubic monomial count must be 56")
    return monos


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def _coeff_vector(poly: MultiPoly, monomials) -> tuple:
    return tuple(poly.terms.get(m, Fraction(0)) for m in monomials)


def _exact_rank_with_pivots(rows):
    mat = [list(r) for r in rows]
    if not mat:
        return 0, []
    ncols = len(mat[0])
    rank = 0
    pivot_rows = []
    used = [False] * len(mat)
    for col in range(ncols):
        piv = next(
            (i for i in range(len(mat)) if not used[i] and mat[i][col]), None
        )
        if piv is None:
            continue
        used[piv] = True
        pivot_rows.append(piv)
        inv = 1 / mat[piv][col]
        mat[piv] = [v * inv for v in mat[piv]]
        for i in range(len(mat)):
            if i != piv and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[piv])]
        rank += 1
    return rank, pivot_rows


def _solve_in_span(basis_vectors, target):
    """Coefficients expressing target as a combination of the basis rows;
    raises if the system is inconsistent."""
    k = len(basis_vectors)
    n = len(target)
    # normal-equations-free exact solve: row-reduce the transpose
    rows = [[basis_vectors[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    r = 0
    pivots = []
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
        raise ValueError("basis rows are dependent")
    if any(rows[i][k] for i in range(r, n)):
        raise ValueError("target outside the span")
    sol = [Fraction(0)] * k
    for i, col in enumerate(pivots):
        sol[col] = rows[i][k]
    return tuple(sol)


@lru_cache(maxsize=1)
def cubic_span() -> dict:
    """Exact linear algebra on the 15 x 56 coefficient matrix of the fifteen
    cubics: rank 5, a greedy independent basis, and the expansion of every
    cubic in that basis (each expansion verified by exact solve)."""
    cubics = fifteen_cubics()
    monomials = _degree3_monomials()
    vectors = [_coeff_vector(c, monomials) for c in cubics]
    rank, pivot_rows = _exact_rank_with_pivots(vectors)
    if rank != 5:
        raise ValueError(f"cubic span has rank {rank}, expected 5")
    basis_indices = tuple(sorted(pivot_rows))
    basis_vectors = [vectors[i] for i in basis_indices]
    expansions = tuple(
        _solve_in_span(basis_vectors, v) for v in vectors
    )
    return {
        "rank": rank,
        "basis_indices": basis_indices,
        "expansions": expansions,
        "monomials": tuple(monomials),
        "vectors": tuple(vectors),
    }


@lru_cache(maxsize=1)
def base_points() -> tuple:
    """The six points with one coordinate -5 and the rest 1; all lie on the
    hyperplane and none lies on the quartic (exact)."""
    _, quartic = canonical_polys()
    points = []
    for i in range(6):
        coords = [Fraction(1)] * 6
        coords[i] = Fraction(-5)
        if sum(coords) != 0:
            raise AssertionError("base point must lie on the hyperplane")
        if quartic.evaluate(coords) == 0:
            raise AssertionError("base point must avoid the quartic")
        points.append(ProjPoint(coords))
    return tuple(points)


@lru_cache(maxsize=1)
def base_lines() -> tuple:
    """The fifteen base lines of the cubic system: four coordinates equal,
    intersected with the hyperplane; parametrized by (common value, one free
    coordinate)."""
    lines = []
    pa = MultiPoly.variable(2, 0)
    pb = MultiPoly.variable(2, 1)
    for four in combinations(range(6), 4):
        rest = [i for i in range(6) if i not in four]
        subs = [None] * 6
        for i in four:
            subs[i] = pa
        subs[rest[0]] = pb
        subs[rest[1]] = -4 * pa - pb
        lines.append((four, tuple(subs)))
    return tuple(lines)


def cubic_base_locus_check() -> dict:
    """Every one of the fifteen cubics vanishes identically on every base
    line, and vanishes with identically zero gradient at every base point."""
    cubics = fifteen_cubics()
    for four, subs in base_lines():
        for cubic in cubics:
            if cubic.compose(list(subs)):
                raise ValueError(f"cubic does not vanish on base line {four}")
    for point in base_points():
        for cubic in cubics:
            if cubic.evaluate(point.coords) != 0:
                raise ValueError(f"cubic does not vanish at {point.coords}")
            for i in range(6):
                if cubic.partial(i).evaluate(point.coords) != 0:
                    raise ValueError(
                        f"cubic gradient does not vanish at {point.coords}"
                    )
    return {"base_lines": 15, "base_points": 6, "vanishing_order": 2}


# ---------------------------------------------------------------------------
# Symmetric-group action with signs
# ---------------------------------------------------------------------------


def _apply_permutation(poly: MultiPoly, perm) -> MultiPoly:
    """Relabel variables: x_i -> x_perm[i]."""
    out = {}
    for exps, coeff in poly.terms.items():
        new = [0] * poly.nvars
        for i, e in enumerate(exps):
            new[perm[i]] = e
        key = tuple(new)
        out[key] = out.get(key, Fraction(0)) + coeff
    return MultiPoly(poly.nvars, out)


def _partition_image(partition, perm):
    pairs = [tuple(sorted((perm[i], perm[j]))) for i, j in partition]
    return tuple(sorted(pairs))


@lru_cache(maxsize=1)
def s6_equivariance() -> dict:
    """The five adjacent transpositions act on the fifteen cubics as signed
    permutations; the permutation part agrees with the pair-partition
    action, the signs satisfy the symmetric-group relations, and the action
    is transitive."""
    cubics = fifteen_cubics()
    index_of = {partition: i for i, partition in enumerate(PAIR_PARTITIONS)}

    def signed_matrix(table):
        mat = np.zeros((15, 15), dtype=np.int64)
        for src, (dst, sign) in enumerate(table):
            mat[dst, src] = sign
        return mat

    tables = {}
    for k in range(5):
        perm = list(range(6))
        perm[k], perm[k + 1] = perm[k + 1], perm[k]
        table = []
        for i, cubic in enumerate(cubics):
            moved = _apply_permutation(cubic, perm)
            target = index_of[_partition_image(PAIR_PARTITIONS[i], perm)]
            if moved == cubics[target]:
                sign = 1
            elif moved == -cubics[target]:
                sign = -1
            else:
                raise ValueError(
                    f"permuted cubic {i} is not pm the partition image"
                )
            table.append((target, sign))
        tables[f"s{k + 1}"] = tuple(table)

    mats = {name: signed_matrix(t) for name, t in tables.items()}
    identity = np.eye(15, dtype=np.int64)
    names = [f"s{k + 1}" for k in range(5)]
    for a in range(5):
        if not np.array_equal(mats[names[a]] @ mats[names[a]], identity):
            raise ValueError(f"{names[a]} squared is not the identity")
        for b in range(a + 1, 5):
            prod = mats[names[a]] @ mats[names[b]]
            power = np.linalg.matrix_power(prod, 3 if b == a + 1 else 2)
            if not np.array_equal(power, identity):
                raise ValueError(f"braid relation fails for {names[a]},{names[b]}")

    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for i in frontier:
            for t in tables.values():
                j = t[i][0]
                if j not in seen:
                    seen.add(j)
                    nxt.append(j)
        frontier = nxt
    if len(seen) != 15:
        raise ValueError("the action is not transitive on the cubics")
    return tables


# ---------------------------------------------------------------------------
# The image cubic relation
# ---------------------------------------------------------------------------


def _random_hyperplane_point(rng) -> tuple:
    head = [
        Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(5)
    ]
    return tuple(head) + (-sum(head),)


def _image_coordinates(point) -> tuple:
    span = cubic_span()
    cubics = fifteen_cubics()
    return tuple(cubics[i].evaluate(point) for i in span["basis_indices"])


def image_cubic_relation(samples: int = 60, seed: int = 0) -> MultiPoly:
    """The unique (up to scale) cubic relation among the five basis cubics:
    evaluates the basis at random rational hyperplane points, solves the
    exact nullspace of the samples x 35 monomial matrix, asserts nullity 1,
    validates the relation on 50 fresh holdout samples, and returns the
    relation with primitive integer coefficients."""
    if samples < 60:
        raise ValueError("at least 60 samples required")
    rng = random.Random(seed)
    monomials = sorted(_compositions(3, 5))
    if len(monomials) != 35:
        raise AssertionError("five-variable cubic monomial count must be 35")

    def monomial_row(y):
        return [
            Fraction(
                np_prod_exact(y, exps)
            )
            for exps in monomials
        ]

    def np_prod_exact(y, exps):
        acc = Fraction(1)
        for v, e in zip(y, exps):
            if e:
                acc *= v**e
        return acc

    rows = []
    while len(rows) < samples:
        point = _random_hyperplane_point(rng)
        y = _image_coordinates(point)
        if not any(y):
            continue
        rows.append(monomial_row(y))

    # exact nullspace of the sample matrix
    mat = [list(r) for r in rows]
    ncols = 35
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    if len(free) != 1:
        raise ValueError(
            f"cubic-relation nullity is {len(free)}, expected exactly 1"
        )
    fc = free[0]
    coeffs = [Fraction(0)] * ncols
    coeffs[fc] = Fraction(1)
    for i, col in enumerate(pivots):
        coeffs[col] = -mat[i][fc]

    # primitive integer scaling
    denom = 1
    for c in coeffs:
        denom = denom * c.denominator // _gcd(denom, c.denominator)
    ints = [c * denom for c in coeffs]
    g = 0
    for c in ints:
        g = _gcd(g, int(c))
    ints = [c / g for c in ints]
    relation = MultiPoly(5, dict(zip(monomials, ints)))

    # holdout validation on fresh samples
    for _ in range(50):
        point = _random_hyperplane_point(rng)
        y = _image_coordinates(point)
        if relation.evaluate(y) != 0:
            raise ValueError(f"holdout sample violates the relation: {point}")
    return relation


def _gcd(a, b):
    a, b = abs(int(a)), abs(int(b))
    while b:
        a, b = b, a % b
    return a


def image_relation_equivariance(relation: MultiPoly) -> dict:
    """The induced action of each adjacent transposition on the five basis
    coordinates preserves the relation up to sign."""
    span = cubic_span()
    tables = s6_equivariance()
    basis = span["basis_indices"]
    expansions = span["expansions"]
    outcomes = {}
    ys = [MultiPoly.variable(5, i) for i in range(5)]
    for name, table in tables.items():
        # basis cubic b maps to sign * cubic[target]; expand the target back
        subs = []
        for b in basis:
            target, sign = table[b]
            combo = MultiPoly.zero(5)
            for pos, coeff in enumerate(expansions[target]):
                if coeff:
                    combo = combo + (sign * coeff) * ys[pos]
            subs.append(combo)
        moved = relation.compose(subs)
        if moved == relation:
            outcomes[name] = 1
        elif moved == -relation:
            outcomes[name] = -1
        else:
            raise ValueError(f"relation is not sign-invariant under {name}")
    return outcomes


# ---------------------------------------------------------------------------
# Rational normal curves and the degree-16 count
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ParamCurve:
    """A degree-4 rational curve in the hyperplane chart: five coordinate
    polynomials (rows of `coeffs`, ascending powers), the interpolation
    parameters, and the achieved relative residual."""

    coeffs: object  # (5, 5) complex ndarray, coeffs[i, k] multiplies t^k
    parameters: tuple
    scales: tuple
    residual: float

    def chart_point(self, t: complex):
        powers = np.array([t**k for k in range(5)], dtype=complex)
        return self.coeffs @ powers

    def ambient_polys(self):
        """Six rows of polynomial coefficients (ascending powers)."""
        top = np.asarray(self.coeffs)
        last = -top.sum(axis=0, keepdims=True)
        return np.concatenate([top, last], axis=0)


def _chart(point) -> np.ndarray:
    """First five coordinates (the sixth is minus their sum)."""
    coords = [complex(c) for c in point]
    if abs(sum(coords)) > 1e-12 * max(1.0, max(abs(c) for c in coords)):
        raise ValueError("point is not on the hyperplane")
    return np.array(coords[:5], dtype=complex)


def _general_position_rank_check(points) -> None:
    """Every 6-subset of the 7 rational points must span the chart."""
    rows = [[Fraction(c) for c in p[:5]] for p in points]
    for skip in range(7):
        subset = [rows[i] for i in range(7) if i != skip]
        rank, _ = _exact_rank_with_pivots(subset)
        if rank != 5:
            raise ValueError(
                f"points are not in general position (subset without {skip})"
            )


def _exact_inverse(matrix):
    """Inverse of a square matrix of Fractions via Gauss-Jordan."""
    n = len(matrix)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


@dataclass(frozen=True)
class ExactCurve:
    """A degree-4 rational curve with exact rational chart coefficients:
    coeffs[i][k] multiplies t^k in the i-th chart coordinate; parameters are
    the exact parameter values of the seven interpolated points."""

    coeffs: tuple  # 5 rows of 5 Fractions, ascending powers
    parameters: tuple  # 7 Fractions

    def chart_point(self, t):
        return tuple(
            sum(row[k] * t**k for k in range(5)) for row in self.coeffs
        )

    def to_param_curve(self, charts) -> ParamCurve:
        scales = []
        for t, chart in zip(self.parameters, charts):
            value = self.chart_point(t)
            k = max(range(5), key=lambda i: abs(chart[i]))
            scales.append(complex(value[k] / chart[k]))
        return ParamCurve(
            coeffs=np.array([[complex(c) for c in row] for row in self.coeffs]),
            parameters=tuple(complex(t) for t in self.parameters),
            scales=tuple(scales),
            residual=0.0,
        )


def rational_curve_via_frame(points) -> ExactCurve:
    """Exact degree-4 rational normal curve through 7 rational hyperplane
    points in general position, by the classical frame construction: send
    points 2..6 to the five coordinate points and point 7 to the unit point;
    in that frame the curve through the coordinate points has reciprocal
    coordinates, and the remaining two interpolation conditions solve in
    closed form.  The interpolation is verified exactly before returning."""
    if len(points) != 7:
        raise ValueError("exactly 7 points required")
    charts = [tuple(Fraction(c) for c in p[:5]) for p in points]
    for p, chart in zip(points, charts):
        if sum(Fraction(c) for c in p) != 0:
            raise ValueError("points must lie on the hyperplane")
    _general_position_rank_check(points)
    # frame: columns are the charts of points 1..5; unit point is points[6]
    M = [[charts[1 + j][i] for j in range(5)] for i in range(5)]
    Minv = _exact_inverse(M)
    d = [sum(Minv[i][j] * charts[6][j] for j in range(5)) for i in range(5)]
    if any(v == 0 for v in d):
        raise ValueError("unit point is not in general position")
    MD = [[M[i][j] * d[j] for j in range(5)] for i in range(5)]
    T = _exact_inverse(MD)
    q = [sum(T[i][j] * charts[0][j] for j in range(5)) for i in range(5)]
    if any(v == 0 for v in q):
        raise ValueError("seventh point is not in general position")
    # rescale q so that the interpolation parameters a_i = 1/(1 - q_i) are
    # finite and pairwise distinct (a gauge choice)
    rho = None
    for cand in (Fraction(1), Fraction(2), Fraction(1, 2), Fraction(3),
                 Fraction(1, 3), Fraction(5), Fraction(2, 5)):
        scaled = [cand * v for v in q]
        if all(v != 1 for v in scaled) and len(set(scaled)) == 5:
            rho = cand
            break
    if rho is None:
        raise ValueError("could not normalize the frame coordinates")
    q = [rho * v for v in q]
    a = [1 / (1 - v) for v in q]
    if len(set(a)) != 5 or any(v in (0, 1) for v in a):
        raise ValueError("degenerate interpolation parameters")
    c = [-q[i] * a[i] for i in range(5)]
    # y_i(t) = c_i * prod_{j != i} (t - a_j), expanded exactly
    y_rows = []
    for i in range(5):
        poly = [c[i]]
        for j in range(5):
            if j == i:
                continue
            poly = [
                (poly[k - 1] if k else Fraction(0))
                - a[j] * (poly[k] if k < len(poly) else Fraction(0))
                for k in range(len(poly) + 1)
            ]
        y_rows.append(poly + [Fraction(0)] * (5 - len(poly)))
    # back to the original chart: x = (M D) y
    x_rows = [
        [sum(MD[i][j] * y_rows[j][k] for j in range(5)) for k in range(5)]
        for i in range(5)
    ]
    curve = ExactCurve(
        coeffs=tuple(tuple(row) for row in x_rows),
        parameters=(Fraction(0),) + tuple(a) + (Fraction(1),),
    )
    # exact verification: the curve hits every input point projectively
    for t, chart in zip(curve.parameters, charts):
        value = curve.chart_point(t)
        if all(v == 0 for v in value):
            raise AssertionError("curve evaluates to zero at a node")
        for r in range(5):
            for s in range(r + 1, 5):
                if value[r] * chart[s] != value[s] * chart[r]:
                    raise AssertionError("frame curve misses an input point")
    return curve


def _conv_frac(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _exact_mobius_through(pairs):
    """2x2 rational matrix of the Mobius map sending three source values to
    three targets."""
    (s0, t0), (s1, t1), (s2, t2) = [
        (Fraction(a), Fraction(b)) for a, b in pairs
    ]

    def basis(z0, z1, z2):
        # sends z0, z1, z2 to 0, 1, infinity
        return ((z1 - z2, -z0 * (z1 - z2)), (z1 - z0, -z2 * (z1 - z0)))

    src = basis(s0, s1, s2)
    (a, b), (c, d) = basis(t0, t1, t2)
    inv = ((d, -b), (-c, a))
    m = tuple(
        tuple(sum(inv[i][k] * src[k][j] for k in range(2)) for j in range(2))
        for i in range(2)
    )
    if m[0][0] * m[1][1] - m[0][1] * m[1][0] == 0:
        raise ValueError("gauge triple is degenerate")
    return m


def exact_gauge_transport(curve: ExactCurve, charts, gauge):
    """Reparametrize an exact curve so its first three interpolation
    parameters take the requested rational values, normalizing the first
    scale to 1; returns (curve, scales), both exact and exactly verified."""
    g = [Fraction(v) for v in gauge]
    mob = _exact_mobius_through(tuple(zip(curve.parameters[:3], g)))
    (m00, m01), (m10, m11) = mob
    params = []
    for s in curve.parameters:
        den = m10 * s + m11
        if den == 0:
            raise ValueError("a parameter is transported to infinity")
        params.append((m00 * s + m01) / den)
    # x_new(s) = (gamma s + delta)^4 * x((alpha s + beta)/(gamma s + delta))
    alpha, beta, gamma, delta = m11, -m01, -m10, m00
    rows = []
    for row in curve.coeffs:
        acc = [Fraction(0)] * 5
        for k in range(5):
            if not row[k]:
                continue
            term = [Fraction(1)]
            for _ in range(k):
                term = _conv_frac(term, [beta, alpha])
            for _ in range(4 - k):
                term = _conv_frac(term, [delta, gamma])
            for j, c in enumerate(term):
                acc[j] += row[k] * c
        rows.append(acc)
    scales = []
    for t, chart in zip(params, charts):
        value = [sum(rows[i][k] * t**k for k in range(5)) for i in range(5)]
        k = max(range(5), key=lambda i: abs(chart[i]))
        scales.append(value[k] / chart[k])
    if scales[0] == 0:
        raise ValueError("degenerate gauge normalization")
    s0 = scales[0]
    rows = [[c / s0 for c in row] for row in rows]
    scales = [s / s0 for s in scales]
    for t, chart, lam in zip(params, charts, scales):
        for i in range(5):
            value_i = sum(rows[i][k] * t**k for k in range(5))
            if value_i != lam * chart[i]:
                raise AssertionError("gauge transport verification failed")
    transported = ExactCurve(
        coeffs=tuple(tuple(r) for r in rows), parameters=tuple(params)
    )
    return transported, tuple(scales)


def _frame_initializer(points, charts, gauge) -> np.ndarray:
    """Initial Newton vector from the exact frame construction, transported
    to the requested gauge by an exact Mobius reparametrization."""
    exact_curve = rational_curve_via_frame(points)
    charts_exact = [tuple(Fraction(c) for c in p[:5]) for p in points]
    gauge_fracs = []
    for gv in gauge:
        if isinstance(gv, (int, Fraction)):
            gauge_fracs.append(Fraction(gv))
            continue
        z = complex(gv)
        if z.imag != 0:
            raise ValueError("exact transport needs a real rational gauge")
        gauge_fracs.append(Fraction(z.real))
    transported, scales = exact_gauge_transport(
        exact_curve, charts_exact, gauge_fracs
    )
    A = np.array([[complex(c) for c in row] for row in transported.coeffs])
    targets = np.array([complex(t) for t in transported.parameters])
    lams = np.array([complex(s) for s in scales])
    return np.concatenate([A.reshape(-1), targets[3:], lams[1:]])


def rnc_through_7(
    points,
    seed: int = 0,
    gauge=(0.0, 1.0, -1.0),
    residual_tol: float = 1e-9,
    max_restarts: int = 200,
) -> ParamCurve:
    """Degree-4 rational normal curve through 7 hyperplane points via damped
    Newton on the square interpolation system A v(t_i) = lambda_i p_i with
    the first three parameters gauge-fixed and the first scale set to 1.

    Rational inputs get an exact general-position check first.  Raises if no
    restart converges to the requested relative residual."""
    if len(points) != 7:
        raise ValueError("exactly 7 points required")
    exact = all(
        all(isinstance(c, (int, Fraction)) for c in p) for p in points
    )
    if exact:
        _general_position_rank_check(points)
    charts = [_chart(p) for p in points]
    rng = random.Random(seed)
    g0, g1, g2 = (complex(g) for g in gauge)
    if len({g0, g1, g2}) != 3:
        raise ValueError("gauge parameters must be distinct")

    chart_mag = max(float(np.max(np.abs(c))) for c in charts)

    def unpack(u):
        A = u[:25].reshape(5, 5)
        ts = np.concatenate([[g0, g1, g2], u[25:29]])
        lams = np.concatenate([[1.0 + 0j], u[29:35]])
        return A, ts, lams

    def system_scale(u):
        """Magnitude of the interpolation system at the iterate: the fixed
        gauge can force large coefficients, so residuals are judged
        relative to this."""
        A, _, lams = unpack(u)
        return max(
            1.0,
            float(np.max(np.abs(A))),
            float(np.max(np.abs(lams))) * chart_mag,
        )

    def residual_vec(u):
        A, ts, lams = unpack(u)
        out = np.empty(35, dtype=complex)
        for i in range(7):
            v = np.array([ts[i] ** k for k in range(5)], dtype=complex)
            out[5 * i : 5 * i + 5] = A @ v - lams[i] * charts[i]
        return out

    def jacobian(u):
        A, ts, lams = unpack(u)
        J = np.zeros((35, 35), dtype=complex)
        for i in range(7):
            v = np.array([ts[i] ** k for k in range(5)], dtype=complex)
            for r in range(5):
                J[5 * i + r, 5 * r : 5 * r + 5] = v
            if i >= 3:
                dv = np.array(
                    [k * ts[i] ** (k - 1) if k else 0.0 for k in range(5)],
                    dtype=complex,
                )
                J[5 * i : 5 * i + 5, 25 + (i - 3)] = A @ dv
            if i >= 1:
                J[5 * i : 5 * i + 5, 29 + (i - 1)] = -charts[i]
        return J

    frame_start = None
    gauge_rational = all(complex(g).imag == 0 for g in gauge)
    if exact and gauge_rational:
        # for exact inputs the frame construction either produces the unique
        # interpolating curve or proves that none exists, so its failure is
        # final rather than a reason to burn random restarts
        try:
            frame_start = _frame_initializer(points, charts, (g0, g1, g2))
        except (ValueError, AssertionError, ZeroDivisionError) as err:
            raise RuntimeError(
                f"interpolation is degenerate for these points: {err}"
            ) from err

    best = None
    for restart in range(max_restarts):
        if frame_start is not None and restart % 3 != 2:
            # educated start from the exact frame construction (random
            # perturbation grows with the restart count)
            if restart == 0:
                u = frame_start.copy()
            else:
                noise = np.array(
                    [complex(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(35)]
                )
                level = 10.0 ** (-8 + restart / 8)
                u = frame_start * (1 + level * noise) + level * noise
        else:
            ts_free = np.array(
                [
                    complex(rng.uniform(-2.5, 2.5), rng.uniform(-2.5, 2.5))
                    for _ in range(4)
                ]
            )
            ts_all = np.concatenate([[g0, g1, g2], ts_free])
            if np.min(
                np.abs(ts_all[:, None] - ts_all[None, :]) + np.eye(7)
            ) < 0.2:
                continue
            lams = np.ones(7, dtype=complex)
            V = np.vander(ts_all, 5, increasing=True).T  # (5, 7)
            P = np.stack([lams[i] * charts[i] for i in range(7)], axis=1)
            A0 = P @ np.linalg.pinv(V)
            u = np.concatenate([A0.reshape(-1), ts_free, lams[1:]])

        f = residual_vec(u)
        norm = np.max(np.abs(f))
        converged = False
        for _ in range(120):
            sys = system_scale(u)
            if norm <= residual_tol * sys * 1e-3 or norm < 1e-13 * sys:
                converged = True
                break
            try:
                step = np.linalg.solve(jacobian(u), -f)
            except np.linalg.LinAlgError:
                break
            if not np.all(np.isfinite(step)):
                break
            alpha = 1.0
            improved = False
            for _ in range(25):
                cand = u + alpha * step
                fc = residual_vec(cand)
                nc = np.max(np.abs(fc))
                if nc < (1 - 1e-4 * alpha) * norm:
                    u, f, norm = cand, fc, nc
                    improved = True
                    break
                alpha *= 0.5
            if not improved:
                break
        final_scale = system_scale(u)
        if norm <= residual_tol * final_scale:
            converged = True
        if converged and norm <= residual_tol * final_scale:
            A, ts, lams_full = unpack(u)
            # reject collapsed solutions: the seven parameters must stay
            # distinct (a fixed gauge can legitimately squeeze them close,
            # so only near-exact collisions are rejected), and each
            # interpolation condition must be non-vacuous (the curve's
            # vector at t_i sits far above the residual, so a vanishing
            # scale cannot fake a hit) and projectively on its target point
            spread = float(np.max(np.abs(ts)))
            if np.min(
                np.abs(ts[:, None] - ts[None, :]) + np.eye(7)
            ) < 1e-12 * max(1.0, spread):
                continue
            genuine = True
            for i in range(7):
                v = np.array([ts[i] ** k for k in range(5)], dtype=complex)
                value = A @ v
                mag = float(np.linalg.norm(value))
                if mag <= 1e3 * norm + 1e-12:
                    genuine = False
                    break
                overlap = abs(np.vdot(value, charts[i])) / (
                    mag * float(np.linalg.norm(charts[i]))
                )
                if overlap < 1 - 1e-7:
                    genuine = False
                    break
            if not genuine:
                continue
            lead = np.max(np.abs(A[:, 4]))
            if lead <= 1e-8 * np.max(np.abs(A)):
                continue  # degenerate: not genuinely degree 4
            if _coordinate_common_root(A):
                continue  # base point on the parameter line
            curve = ParamCurve(
                coeffs=A,
                parameters=tuple(ts),
                scales=tuple(lams_full),
                residual=float(norm / final_scale),
            )
            if best is None or curve.residual < best.residual:
                best = curve
            if best.residual <= residual_tol:
                return best
    if best is not None:
        return best
    raise RuntimeError("no Newton restart converged for the interpolation")


def _coordinate_common_root(A) -> bool:
    """Whether the five coordinate polynomials share a root (the
    parametrization would pass through the zero vector).  A common root is
    in particular a root of the largest coordinate, so only those roots are
    tested."""
    mags = np.max(np.abs(A), axis=1)
    i0 = int(np.argmax(mags))
    row = A[i0]
    deg = 4
    while deg > 0 and abs(row[deg]) <= 1e-12 * mags[i0]:
        deg -= 1
    if deg == 0:
        return False  # an effectively constant nonzero coordinate
    scale = float(np.max(np.abs(A)))
    # Threshold at roundoff level: a collapsed solution vanishes there to the
    # Newton residual (~1e-13 relative), while a genuine curve squeezed by an
    # ill-placed gauge stays several orders above it.
    for t in np.roots(row[: deg + 1][::-1]):
        v = np.array([t**k for k in range(5)], dtype=complex)
        if np.max(np.abs(A @ v)) <= 1e-10 * scale * max(1.0, abs(t)) ** 4:
            return True
    return False


def _mobius_through(pairs):
    """The Mobius transformation sending three source parameters to three
    targets, as a 2x2 complex matrix."""
    (s0, t0), (s1, t1), (s2, t2) = pairs

    def basis_map(z0, z1, z2):
        # sends 0, 1, infinity-free triple: standard cross-ratio construction
        a = z1 - z2
        b = -z0 * (z1 - z2)
        c = z1 - z0
        d = -z2 * (z1 - z0)
        return np.array([[a, b], [c, d]], dtype=complex)

    src = basis_map(s0, s1, s2)
    dst = basis_map(t0, t1, t2)
    return np.linalg.inv(dst) @ src


def _fubini_study(u, v) -> float:
    nu = np.linalg.norm(u)
    nv = np.linalg.norm(v)
    if nu == 0 or nv == 0:
        return 1.0
    overlap = abs(np.vdot(u, v)) / (nu * nv)
    return float(np.sqrt(max(0.0, 1.0 - min(1.0, overlap) ** 2)))


def curves_agree(c1: ParamCurve, c2: ParamCurve, samples: int = 100) -> float:
    """Maximum projective distance between the two curves along the Mobius
    reparametrization matching their gauge triples."""
    pairs = list(zip(c1.parameters[:3], c2.parameters[:3]))
    mob = _mobius_through(pairs)
    worst = 0.0
    for k in range(samples):
        theta = 2 * np.pi * k / samples
        t = 1.7 * np.exp(1j * theta) + 0.1
        num = mob[0, 0] * t + mob[0, 1]
        den = mob[1, 0] * t + mob[1, 1]
        if abs(den) < 1e-9:
            continue
        s = num / den
        worst = max(worst, _fubini_study(c1.chart_point(t), c2.chart_point(s)))
    return worst


def exact_quartic_composition(curve: ExactCurve) -> tuple:
    """Exact rational coefficients (ascending, length 17) of the quartic
    evaluated along the curve's six ambient coordinate polynomials."""
    rows = [list(r) for r in curve.coeffs]
    rows.append([-sum(col) for col in zip(*rows)])
    s2 = [Fraction(0)] * 9
    s4 = [Fraction(0)] * 17
    for row in rows:
        sq = _conv_frac(row, row)
        for i, v in enumerate(sq):
            s2[i] += v
        f4 = _conv_frac(sq, sq)
        for i, v in enumerate(f4):
            s4[i] += v
    return tuple(
        a - 4 * b for a, b in zip(_conv_frac(s2, s2), s4)
    )


def _poly_degree(p) -> int:
    d = len(p) - 1
    while d >= 0 and not p[d]:
        d -= 1
    return d


def poly_is_squarefree(poly) -> bool:
    """Exact squarefree test over the rationals: gcd with the derivative is
    constant.  Squarefree is equivalent to all complex roots distinct."""
    a = [Fraction(c) for c in poly]
    b = [i * a[i] for i in range(1, len(a))]
    da, db = _poly_degree(a), _poly_degree(b)
    if da <= 0:
        return da == 0
    while db >= 0:
        # a mod b
        while da >= db:
            f = a[da] / b[db]
            for i in range(db + 1):
                a[da - db + i] -= f * b[i]
            a[da] = Fraction(0)
            da = _poly_degree(a)
            if da < 0:
                break
        a, b = b, a
        da, db = _poly_degree(a), _poly_degree(b)
    return da == 0


def _compose_quartic_with_curve(curve: ParamCurve) -> np.ndarray:
    """Coefficients (ascending) of the quartic evaluated along the curve."""
    ambient = curve.ambient_polys()
    squares = None
    fourths = None
    for row in ambient:
        sq = np.convolve(row, row)
        squares = sq if squares is None else squares + sq
        f4 = np.convolve(sq, sq)
        fourths = f4 if fourths is None else fourths + f4
    return np.convolve(squares, squares) - 4 * fourths


def quartic_point_composition_check(seed: int = 0) -> dict:
    """Consistency witness: interpolating from a rational point ON the
    quartic, the composed degree-16 polynomial has a root at that point's
    parameter (the curve's origin).  The vanishing is certified exactly on
    the frame curve (zero constant term, nonzero degree-16 term) and
    confirmed numerically along the Newton route."""
    on_quartic = (-8, -7, 0, 3, 5, 7)
    _, quartic = canonical_polys()
    if quartic.evaluate([Fraction(c) for c in on_quartic]) != 0:
        raise AssertionError("the witness must lie on the quartic")
    pts = [on_quartic] + [p.coords for p in base_points()]
    exact_curve = rational_curve_via_frame(pts)
    poly = exact_quartic_composition(exact_curve)
    if poly[0] != 0:
        raise ValueError("exact composition does not vanish at the witness")
    if poly[16] == 0:
        raise ValueError("exact composition drops below degree 16")
    curve = rnc_through_7(pts, seed=seed)
    npoly = _compose_quartic_with_curve(curve)
    value = np.polyval(npoly[::-1], curve.parameters[0])
    bound = 1e-9 * max(1.0, float(np.sum(np.abs(npoly))))
    if abs(value) > bound:
        raise ValueError(f"composition does not vanish at the witness: {value}")
    return {
        "constant_term_exact_zero": True,
        "leading_term_nonzero": True,
        "witness_residual": float(abs(value)),
        "bound": float(bound),
    }


def degree16_check(
    trials: int = 20,
    seed: int = 0,
    residual_tol: float = 1e-9,
    separation_tol: float = 1e-6,
) -> dict:
    """Monte Carlo certification that composing the quartic with rational
    normal curves through the six base points and a random rational seventh
    point yields a degree-16 polynomial with 16 distinct roots.  Non-generic
    draws are discarded with a recorded cause; the report carries the
    success count."""
    if trials < 1:
        raise ValueError("at least one trial required")
    _, quartic = canonical_polys()
    bases = [p.coords for p in base_points()]
    rng = random.Random(seed)
    successes = 0
    discarded = []
    worst_newton = 0.0
    for trial in range(trials):
        cause = "no_generic_point"
        exact_curve = None
        newton = None
        charts_exact = None
        for _ in range(8):
            cand = _random_hyperplane_point(rng)
            if quartic.evaluate(cand) == 0:
                continue
            values = sorted(cand)
            if any(
                values[i] == values[i + 3] for i in range(3)
            ):  # four equal coordinates: on a base line
                continue
            try:
                candidate_curve = rational_curve_via_frame([cand] + bases)
            except (ValueError, AssertionError):
                continue  # non-generic draw for the interpolation
            try:
                newton = rnc_through_7(
                    [cand] + bases,
                    seed=rng.randrange(1 << 30),
                    residual_tol=residual_tol,
                )
            except RuntimeError:
                cause = "newton_failed"
                continue
            exact_curve = candidate_curve
            charts_exact = [
                tuple(Fraction(c) for c in p[:5]) for p in [cand] + bases
            ]
            break
        if exact_curve is None:
            discarded.append((trial, cause))
            continue
        worst_newton = max(worst_newton, newton.residual)
        # exact certification on the frame curve, then the numeric criteria;
        # the parametrization is a gauge choice, so a failed numeric
        # criterion earns a fresh exact reparametrization before giving up
        succeeded = False
        cause = None
        current = exact_curve
        for attempt in range(3):
            if attempt:
                while True:
                    triple = tuple(
                        Fraction(rng.randint(-6, 6), rng.randint(1, 3))
                        for _ in range(3)
                    )
                    if len(set(triple)) == 3:
                        break
                try:
                    current, _ = exact_gauge_transport(
                        exact_curve, charts_exact, triple
                    )
                except (ValueError, AssertionError):
                    continue
            poly = exact_quartic_composition(current)
            if poly[16] == 0:
                cause = "degree_drop_exact"
                continue
            if not poly_is_squarefree(poly):
                cause = "repeated_roots_exact"
                break  # gauge-invariant: the 16 intersections collide
            cmax = max(abs(c) for c in poly)
            coeffs = np.array([float(c / cmax) for c in poly])
            if abs(coeffs[16]) <= 1e-8 * float(np.max(np.abs(coeffs))):
                cause = "degree_drop"
                continue
            roots = np.roots(coeffs[::-1])
            # polish with a few Newton steps on the univariate polynomial
            p1 = np.poly1d(coeffs[::-1])
            dpoly = np.polyder(p1)
            for _ in range(3):
                vals = p1(roots)
                dvals = dpoly(roots)
                ok = np.abs(dvals) > 1e-14
                roots[ok] = roots[ok] - vals[ok] / dvals[ok]
            if len(roots) != 16:
                cause = "degree_drop"
                continue
            sep = np.min(
                np.abs(roots[:, None] - roots[None, :]) + np.eye(16) * 1e9
            )
            if sep <= separation_tol:
                cause = "root_clustering"
                continue
            succeeded = True
            break
        if succeeded:
            successes += 1
        else:
            discarded.append((trial, cause))
    report = {
        "trials": trials,
        "successes": successes,
        "success_rate": successes / trials,
        "discarded": tuple(discarded),
        "residual_tol": residual_tol,
        "separation_tol": separation_tol,
        "worst_newton_residual": worst_newton,
    }
    if successes == 0:
        raise ValueError(f"degree-16 verification failed in every trial: {report}")
    return report
