"""The Weil representation attached to the rank-6 ambient discriminant form.

The metaplectic generators act on the 64-dimensional group ring of the
discriminant module: T acts diagonally by e^{pi i q(alpha)}, S acts by the
normalized discrete Fourier transform (i/8) * [e^{-2 pi i b(beta, alpha)}].
The image is the full level-4 special linear group (order 48); its character
theory singles out a 5-dimensional subspace W spanned by signed theta vectors
indexed by the 15 isotropic planes, and a 1-dimensional subspace W0.

All arithmetic is exact over the conductor-24 cyclotomic field.
"""

from fractions import Fraction
from functools import lru_cache

import numpy as np

from .exact import (
    CYC_I,
    CYC_ONE,
    CYC_ZERO,
    Cyclotomic,
    CycMatrix,
    field_rref,
)
from .fqm import (
    FqmAutomorphism,
    isotropic_planes,
    orthogonal_group,
    radical_class,
    reflection,
)
from .lattices import ambient_lattice, discriminant_module

__all__ = [
    "GroupRingVector",
    "RepElement",
    "ambient_module",
    "ambient_orthogonal_group",
    "weil_generator",
    "image_group",
    "conjugacy_classes",
    "conjugacy_traces",
    "CLASS_ORDER",
    "CHARACTER_TABLE",
    "character_degrees",
    "verify_character_table",
    "decompose_character",
    "conjugate_decomposition",
    "class_sizes",
    "isotypic_projector",
    "isotypic_subspace",
    "theta_vector",
    "theta_vectors",
    "theta_span_rank",
    "w_basis",
    "w0_vector",
    "irreducibility_check",
    "permutation_commutes_with_rep",
]


# ---------------------------------------------------------------------------
# Shared context
# ---------------------------------------------------------------------------


@lru_cache(maxsize=1)
def ambient_module():
    """The discriminant module of the signature-(2,4) ambient lattice."""
    return discriminant_module(ambient_lattice())


@lru_cache(maxsize=1)
def ambient_orthogonal_group():
    return orthogonal_group(ambient_module())


# ---------------------------------------------------------------------------
# Group ring vectors
# ---------------------------------------------------------------------------


class GroupRingVector:
    """A vector in the group ring of the discriminant module, with exact
    cyclotomic coefficients stored densely."""

    __slots__ = ("module", "dense")

    def __init__(self, module, dense):
        if len(dense) != module.size:
            raise ValueError("coefficient length mismatch")
        self.module = module
        self.dense = tuple(
            c if isinstance(c, Cyclotomic) else Cyclotomic.coerce(c) for c in dense
        )

    @classmethod
    def from_dict(cls, module, coefficients) -> "GroupRingVector":
        dense = [CYC_ZERO] * module.size
        for elem, coeff in coefficients.items():
            dense[elem] = Cyclotomic.coerce(coeff)
        return cls(module, dense)

    @property
    def coefficients(self) -> dict:
        """Nonzero coefficients keyed by element index."""
        return {i: c for i, c in enumerate(self.dense) if c}

    @property
    def support(self) -> frozenset:
        return frozenset(i for i, c in enumerate(self.dense) if c)

    def __bool__(self):
        return any(self.dense)

    def __eq__(self, other):
        return (
            isinstance(other, GroupRingVector)
            and self.module is other.module
            and self.dense == other.dense
        )

    def __hash__(self):
        return hash(self.dense)

    def __add__(self, other):
        return GroupRingVector(
            self.module, [a + b for a, b in zip(self.dense, other.dense)]
        )

    def __sub__(self, other):
        return GroupRingVector(
            self.module, [a - b for a, b in zip(self.dense, other.dense)]
        )

    def __neg__(self):
        return GroupRingVector(self.module, [-a for a in self.dense])

    def scale(self, factor) -> "GroupRingVector":
        factor = Cyclotomic.coerce(factor)
        return GroupRingVector(self.module, [a * factor for a in self.dense])

    def apply(self, matrix: CycMatrix) -> "GroupRingVector":
        return GroupRingVector(self.module, matrix.apply(list(self.dense)))

    def permute(self, aut: FqmAutomorphism) -> "GroupRingVector":
        """The permutation action g . e_alpha = e_{g(alpha)}."""
        out = [CYC_ZERO] * self.module.size
        for alpha, coeff in enumerate(self.dense):
            if coeff:
                out[aut(alpha)] = coeff
        return GroupRingVector(self.module, out)

    def __repr__(self):
        items = ", ".join(f"{i}: {c!r}" for i, c in self.coefficients.items())
        return f"GroupRingVector({{{items}}})"


# ---------------------------------------------------------------------------
# Generators and the image group
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def weil_generator(name: str) -> CycMatrix:
    """The exact 64x64 matrix of a metaplectic generator ("S" or "T")."""
    A = ambient_module()
    n = A.size
    if name == "T":
        diag = [Cyclotomic.e_half(A.q(alpha)) for alpha in A.elements()]
        return CycMatrix.diagonal(diag)
    if name == "S":
        scale = CYC_I * Fraction(1, 8)
        rows = []
        for delta in A.elements():
            row = []
            for alpha in A.elements():
                # e^{-2 pi i b(delta, alpha)} with b in {0, 1/2}
                row.append(scale * Cyclotomic.e(-A.b(delta, alpha)))
            rows.append(row)
        return CycMatrix.from_rows(rows)
    raise ValueError(f"unknown generator {name!r}")


_SL2_S = ((0, 3), (1, 0))
_SL2_T = ((1, 1), (0, 1))
_SL2_E = ((1, 0), (0, 1))


def _sl2_mul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(2)) % 4 for j in range(2))
        for i in range(2)
    )


def _sl2_inv(a):
    ((p, q), (r, s)) = a
    # determinant 1 mod 4: adjugate is the inverse
    return ((s % 4, (-q) % 4), ((-r) % 4, p % 4))


class RepElement:
    """An element of the image group: a word in the generators, the exact
    matrix, and the tracked level-4 integer matrix."""

    __slots__ = ("word", "matrix", "sl2", "trace")

    def __init__(self, word, matrix, sl2):
        self.word = word
        self.matrix = matrix
        self.sl2 = sl2
        self.trace = matrix.trace()

    def __repr__(self):
        return f"RepElement({self.word!r})"


@lru_cache(maxsize=1)
def image_group() -> tuple:
    """Closure of the two generator matrices under multiplication; each
    element tagged by its word and level-4 matrix. Errors out if the closure
    exceeds 96 elements."""
    S = weil_generator("S")
    T = weil_generator("T")
    ident = CycMatrix.identity(64)
    start = RepElement("E", ident, _SL2_E)
    seen = {ident.key(): start}
    frontier = [start]
    gens = [("S", S, _SL2_S), ("T", T, _SL2_T)]
    while frontier:
        new = []
        for el in frontier:
            for letter, mat, tag in gens:
                prod = el.matrix @ mat
                key = prod.key()
                if key not in seen:
                    if len(seen) >= 96:
                        raise RuntimeError("image group closure exceeded 96 elements")
                    word = letter if el.word == "E" else el.word + letter
                    nxt = RepElement(word, prod, _sl2_mul(el.sl2, tag))
                    seen[key] = nxt
                    new.append(nxt)
        frontier = new
    elements = tuple(seen.values())
    # the level-4 tags must be pairwise distinct: the action is faithful
    if len({el.sl2 for el in elements}) != len(elements):
        raise AssertionError("level-4 tags are not distinct: action not faithful")
    return elements


CLASS_ORDER = ("E", "-E", "S", "-S", "T", "-T", "T^2", "-T^2", "ST", "(ST)^2")


def _class_representative_tags():
    mE = _sl2_mul(_SL2_S, _SL2_S)
    T2 = _sl2_mul(_SL2_T, _SL2_T)
    ST = _sl2_mul(_SL2_S, _SL2_T)
    return {
        "E": _SL2_E,
        "-E": mE,
        "S": _SL2_S,
        "-S": _sl2_mul(mE, _SL2_S),
        "T": _SL2_T,
        "-T": _sl2_mul(mE, _SL2_T),
        "T^2": T2,
        "-T^2": _sl2_mul(mE, T2),
        "ST": ST,
        "(ST)^2": _sl2_mul(ST, ST),
    }


@lru_cache(maxsize=1)
def conjugacy_classes() -> dict:
    """Partition of the image group into its 10 conjugacy classes, keyed by
    class name in CLASS_ORDER. Conjugation is computed on the level-4 tags."""
    group = image_group()
    by_tag = {el.sl2: el for el in group}
    tags = list(by_tag)
    reps = _class_representative_tags()
    classes = {}
    covered = set()
    for name in CLASS_ORDER:
        rep = reps[name]
        orbit = {_sl2_mul(_sl2_mul(g, rep), _sl2_inv(g)) for g in tags}
        members = [by_tag[t] for t in sorted(orbit)]
        # all members of one class must share their trace
        t0 = members[0].trace
        for m in members:
            if m.trace != t0:
                raise AssertionError(f"trace not constant on class {name}")
        if covered & orbit:
            raise AssertionError(f"conjugacy class {name} overlaps a previous one")
        covered |= orbit
        classes[name] = members
    if len(covered) != len(group):
        raise AssertionError("conjugacy classes do not partition the image group")
    return classes


def conjugacy_traces() -> list:
    """Traces of the representation on the 10 class representatives."""
    classes = conjugacy_classes()
    return [classes[name][0].trace for name in CLASS_ORDER]


# ---------------------------------------------------------------------------
# Character table of the image group (transcribed fixture, machine-verified)
# ---------------------------------------------------------------------------

_I = CYC_I
_1 = CYC_ONE

CHARACTER_TABLE = (
    (_1, _1, _1, _1, _1, _1, _1, _1, _1, _1),
    (_1, _1, -_1, -_1, -_1, -_1, _1, _1, _1, _1),
    (_1, -_1, _I, -_I, _I, -_I, -_1, _1, -_1, _1),
    (_1, -_1, -_I, _I, -_I, _I, -_1, _1, -_1, _1),
    (2 * _1, 2 * _1, CYC_ZERO, CYC_ZERO, CYC_ZERO, CYC_ZERO, 2 * _1, 2 * _1, -_1, -_1),
    (2 * _1, -2 * _1, CYC_ZERO, CYC_ZERO, CYC_ZERO, CYC_ZERO, -2 * _1, 2 * _1, _1, -_1),
    (3 * _1, 3 * _1, _1, _1, -_1, -_1, -_1, -_1, CYC_ZERO, CYC_ZERO),
    (3 * _1, 3 * _1, -_1, -_1, _1, _1, -_1, -_1, CYC_ZERO, CYC_ZERO),
    (3 * _1, -3 * _1, -_I, _I, _I, -_I, _1, -_1, CYC_ZERO, CYC_ZERO),
    (3 * _1, -3 * _1, _I, -_I, -_I, _I, _1, -_1, CYC_ZERO, CYC_ZERO),
)


def character_degrees() -> list:
    return [int(row[0].as_rational()) for row in CHARACTER_TABLE]


def class_sizes() -> list:
    classes = conjugacy_classes()
    return [len(classes[name]) for name in CLASS_ORDER]


def verify_character_table() -> None:
    """Row orthonormality under the class-size weighting, and the column
    relation sum_i |chi_i(g)|^2 * |class(g)| = group order; raises on any
    transcription mismatch."""
    sizes = class_sizes()
    order = sum(sizes)
    nchar = len(CHARACTER_TABLE)
    for i in range(nchar):
        for j in range(nchar):
            acc = CYC_ZERO
            for c in range(len(CLASS_ORDER)):
                acc = acc + sizes[c] * CHARACTER_TABLE[i][c] * CHARACTER_TABLE[j][c].conjugate()
            expected = order * CYC_ONE if i == j else CYC_ZERO
            if acc != expected:
                raise AssertionError(f"character rows {i + 1}, {j + 1} not orthonormal")
    for c in range(len(CLASS_ORDER)):
        acc = CYC_ZERO
        for i in range(nchar):
            acc = acc + CHARACTER_TABLE[i][c] * CHARACTER_TABLE[i][c].conjugate()
        if acc * sizes[c] != order * CYC_ONE:
            raise AssertionError(f"character column {CLASS_ORDER[c]} norm mismatch")


def decompose_character(traces=None) -> list:
    """Multiplicities of the 10 irreducible characters in the representation
    with the given class traces (default: the Weil representation itself).
    Non-integer or negative multiplicities raise."""
    verify_character_table()
    if traces is None:
        traces = conjugacy_traces()
    sizes = class_sizes()
    order = sum(sizes)
    mults = []
    for row in CHARACTER_TABLE:
        acc = CYC_ZERO
        for c in range(len(CLASS_ORDER)):
            acc = acc + sizes[c] * traces[c] * row[c].conjugate()
        acc = acc * Fraction(1, order)
        if not acc.is_rational:
            raise ValueError("non-rational multiplicity: transcription bug")
        val = acc.as_rational()
        if val.denominator != 1 or val < 0:
            raise ValueError(f"invalid multiplicity {val}: transcription bug")
        mults.append(int(val))
    return mults


def conjugate_decomposition() -> list:
    """Decomposition of the entrywise-conjugated (dual) representation."""
    return decompose_character([t.conjugate() for t in conjugacy_traces()])


# ---------------------------------------------------------------------------
# Isotypic subspaces
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def isotypic_projector(character_index: int) -> CycMatrix:
    """Exact projector (deg/|G|) * sum_g conj(chi(g)) rho(g) onto the
    chi-isotypic component. character_index is 1-based."""
    classes = conjugacy_classes()
    row = CHARACTER_TABLE[character_index - 1]
    deg = row[0].as_rational()
    order = sum(len(v) for v in classes.values())
    acc = None
    for cname, chi_val in zip(CLASS_ORDER, row):
        weight = chi_val.conjugate()
        for el in classes[cname]:
            term = el.matrix.scale(weight)
            acc = term if acc is None else acc + term
    proj = acc.scale(Fraction(deg, order))
    if not (proj @ proj) == proj:
        raise AssertionError("isotypic projector is not idempotent")
    return proj


def isotypic_subspace(character_index: int, expected_dim=None) -> list:
    """A basis of the chi-isotypic component, as GroupRingVectors, obtained
    from the projector's column space by incremental exact elimination."""
    A = ambient_module()
    proj = isotypic_projector(character_index)
    mults = decompose_character()
    degs = character_degrees()
    dim = mults[character_index - 1] * degs[character_index - 1]
    if expected_dim is not None and dim != expected_dim:
        raise ValueError(
            f"isotypic dimension is {dim}, expected {expected_dim}"
        )
    cols = proj.rows()  # row i of transpose = column i; use columns below
    n = A.size
    basis_rows = []  # rows in reduced form for the membership test
    basis_vectors = []
    for j in range(n):
        col = [cols[i][j] for i in range(n)]
        red = list(col)
        for prow in basis_rows:
            lead = next(k for k, v in enumerate(prow) if v)
            if red[lead]:
                factor = red[lead]
                red = [a - factor * b for a, b in zip(red, prow)]
        if any(red):
            lead = next(k for k, v in enumerate(red) if v)
            inv = red[lead].inverse()
            red = [a * inv for a in red]
            basis_rows.append(red)
            basis_vectors.append(GroupRingVector(A, col))
            if len(basis_vectors) == dim:
                break
    if len(basis_vectors) != dim:
        raise AssertionError(
            f"projector column space has rank {len(basis_vectors)}, expected {dim}"
        )
    return basis_vectors


# ---------------------------------------------------------------------------
# Theta vectors
# ---------------------------------------------------------------------------


def _coords_key(A, x):
    return A.coords(x)


def theta_vector(plane) -> GroupRingVector:
    """The signed sum over the two cosets attached to an isotropic plane.

    plane: a tuple of the three nonzero elements of an order-4 totally
    isotropic subgroup I. V = <I, kappa>. The base point alpha_0 has
    q(alpha_0) = 3/2 and pairs to 0 with I; it is unique modulo V, and the
    lexicographically least candidate (in generator coordinates) is chosen,
    which fixes the overall sign.
    """
    A = ambient_module()
    kappa = radical_class(A)
    I = [0] + sorted(plane)
    if len(I) != 4:
        raise ValueError("plane must have exactly three nonzero elements")
    for c in I:
        if A.q4[c] != 0:
            raise ValueError("plane is not isotropic")
    V = sorted({A.add(c, k) for c in I for k in (0, kappa)})
    if len(V) != 8:
        raise AssertionError("V = <I, kappa> must have order 8")
    candidates = [
        x
        for x in A.elements()
        if A.q4[x] == 6 and all(A.b4[x, c] == 0 for c in I)
    ]
    if not candidates:
        raise ValueError("no admissible base point for this plane")
    # uniqueness modulo V: the candidates form exactly one V-coset
    cosets = {frozenset(A.add(x, v) for v in V) for x in candidates}
    if len(cosets) != 1 or len(candidates) != 8:
        raise AssertionError("base point is not unique modulo V")
    alpha0 = min(candidates, key=lambda x: _coords_key(A, x))
    m_plus = [A.add(alpha0, c) for c in I]
    m_minus = [A.add(x, kappa) for x in m_plus]
    dense = [CYC_ZERO] * A.size
    for x in m_plus:
        dense[x] = CYC_ONE
    for x in m_minus:
        dense[x] = -CYC_ONE
    return GroupRingVector(A, dense)


@lru_cache(maxsize=1)
def theta_vectors() -> tuple:
    """The 15 theta vectors, one per isotropic plane, in plane order."""
    A = ambient_module()
    return tuple(theta_vector(p) for p in isotropic_planes(A))


def theta_span_rank() -> int:
    vectors = theta_vectors()
    rows = [[c.as_rational() for c in v.dense] for v in vectors]
    pivots = []
    reduced = []
    for row in rows:
        red = list(row)
        for prow in reduced:
            lead = next(k for k, v in enumerate(prow) if v)
            if red[lead]:
                f = red[lead]
                red = [a - f * b for a, b in zip(red, prow)]
        if any(red):
            lead = next(k for k, v in enumerate(red) if v)
            inv = Fraction(1) / red[lead]
            reduced.append([a * inv for a in red])
    return len(reduced)


def w_basis() -> list:
    """A basis of the 5-dimensional subspace W spanned by the theta vectors
    (equal to the chi_4-isotypic component)."""
    vectors = theta_vectors()
    basis = []
    reduced = []
    for v in vectors:
        red = [c.as_rational() for c in v.dense]
        for prow in reduced:
            lead = next(k for k, val in enumerate(prow) if val)
            if red[lead]:
                f = red[lead]
                red = [a - f * b for a, b in zip(red, prow)]
        if any(red):
            lead = next(k for k, val in enumerate(red) if val)
            inv = Fraction(1) / red[lead]
            reduced.append([a * inv for a in red])
            basis.append(v)
    if len(basis) != 5:
        raise AssertionError(f"theta vectors span rank {len(basis)}, expected 5")
    return basis


@lru_cache(maxsize=1)
def w0_vector() -> GroupRingVector:
    """A generator of the 1-dimensional chi_3-isotypic subspace W0,
    normalized to integer coefficients of content 1 with positive leading
    coefficient."""
    from math import gcd, lcm

    basis = isotypic_subspace(3, expected_dim=1)
    v = basis[0]
    lead = next(c for c in v.dense if c)
    v = v.scale(lead.inverse())  # the line is spanned by a rational vector
    vals = [c.as_rational() for c in v.dense]
    denom = lcm(*[x.denominator for x in vals]) if vals else 1
    ints = [int(x * denom) for x in vals]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    first = next(x for x in ints if x)
    if first < 0:
        ints = [-x for x in ints]
    return GroupRingVector(ambient_module(), [Cyclotomic(x) for x in ints])


# ---------------------------------------------------------------------------
# O(q)-action: commutation and irreducibility
# ---------------------------------------------------------------------------


def permutation_commutes_with_rep(aut: FqmAutomorphism) -> bool:
    """Whether the permutation action of one automorphism commutes with both
    generator matrices (checked by exact array reindexing)."""
    S = weil_generator("S")
    T = weil_generator("T")
    p = aut.perm
    ok_s = np.array_equal(S.num[np.ix_(p, p)], S.num)
    ok_t = np.array_equal(T.num[np.ix_(p, p)], T.num)
    return bool(ok_s and ok_t)


def _character_value(proj: CycMatrix, perm) -> Cyclotomic:
    """trace(Perm_g . P) = sum_alpha P[g(alpha), alpha], exactly."""
    sel = proj.num[perm, np.arange(len(perm)), :]
    total = sel.sum(axis=0)
    coeffs = [Fraction(int(v), proj.den) for v in total]
    return Cyclotomic(tuple(coeffs))


def irreducibility_check() -> dict:
    """Certificate that W is irreducible under the full orthogonal group:
    the exact Frobenius norm of its character equals 1, and the central
    involution acts by the scalar -1."""
    A = ambient_module()
    G = ambient_orthogonal_group()
    proj = isotypic_projector(4)
    norm_acc = CYC_ZERO
    identity_value = None
    for g in G.elements:
        chi = _character_value(proj, g.perm)
        norm_acc = norm_acc + chi * chi.conjugate()
        if g.is_identity():
            identity_value = chi
    norm = norm_acc * Fraction(1, G.order)
    kappa = radical_class(A)
    t_kappa = reflection(A, kappa)
    central_minus = np.array_equal(proj.num[t_kappa.perm, :, :], -proj.num)
    return {
        "frobenius_norm": norm,
        "is_irreducible": norm == CYC_ONE,
        "identity_character": identity_value,
        "central_involution_is_minus_one": bool(central_minus),
    }
