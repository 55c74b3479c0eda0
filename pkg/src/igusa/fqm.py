"""Finite quadratic modules: torsion quadratic forms on finite abelian groups.

A module is presented by generator orders (d_1, ..., d_k), the quadratic form
q with values in Q/2Z, and the associated bilinear form b with values in Q/Z.
Internally q is stored as 4q mod 8 and b as 4b mod 4 in small integer tables,
which covers every module arising from the even lattices used in this package
(all q-values lie in (1/4)Z).

Elements are plain integers 0..size-1 in mixed-radix coordinates with respect
to the generators.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd, prod

import numpy as np

__all__ = [
    "FiniteQuadraticModule",
    "FqmAutomorphism",
    "AutomorphismGroup",
    "direct_sum",
    "type_census",
    "type_census_mod_negation",
    "radical_class",
    "pairing_table",
    "isotropic_vectors",
    "isotropic_planes",
    "reflection",
    "orthogonal_group",
    "find_isomorphism",
    "TYPE_ORDER_AMBIENT",
    "TYPE_ORDER_RESTRICTION",
]

# Fixed display/census order for the six element types of the rank-6 ambient
# discriminant form, and for the five types of the rank-5 restriction form
# counted modulo negation.
TYPE_ORDER_AMBIENT = ("00", "0", "1", "10", "3/2", "1/2")
TYPE_ORDER_RESTRICTION = ("00", "0", "1", "10", "3/4", "7/4")


class FiniteQuadraticModule:
    """A finite abelian group with a Q/2Z-valued quadratic form."""

    def __init__(self, orders, q4_gen, b4_gen):
        orders = tuple(int(d) for d in orders)
        if any(d < 2 for d in orders):
            raise ValueError("generator orders must be >= 2")
        k = len(orders)
        q4_gen = tuple(int(v) % 8 for v in q4_gen)
        b4_gen = tuple(tuple(int(v) % 4 for v in row) for row in b4_gen)
        if len(q4_gen) != k or len(b4_gen) != k or any(len(r) != k for r in b4_gen):
            raise ValueError("generator data shape mismatch")
        for i in range(k):
            for j in range(k):
                if b4_gen[i][j] != b4_gen[j][i]:
                    raise ValueError("bilinear form data not symmetric")
                # d_i * b(g_i, g_j) must vanish in Q/Z
                if (orders[i] * b4_gen[i][j]) % 4 != 0:
                    raise ValueError("bilinear form incompatible with orders")
            if b4_gen[i][i] % 4 != q4_gen[i] % 4:
                raise ValueError("b(g,g) must equal q(g) mod 1")
            # well-definedness of q on Z/d_i: (2cd + d^2) q(g) = 0 in Q/2Z
            d = orders[i]
            if (d * d * q4_gen[i]) % 8 != 0 or (2 * d * q4_gen[i]) % 8 != 0:
                raise ValueError("quadratic form incompatible with orders")

        self.orders = orders
        self.q4_gen = q4_gen
        self.b4_gen = b4_gen
        self.size = prod(orders) if orders else 1

        # mixed-radix coordinate table
        radix = np.ones(k, dtype=np.int64)
        for i in range(1, k):
            radix[i] = radix[i - 1] * orders[i - 1]
        self._radix = radix
        idx = np.arange(self.size, dtype=np.int64)
        coords = np.empty((self.size, k), dtype=np.int64)
        rem = idx.copy()
        for i in range(k):
            coords[:, i] = rem % orders[i]
            rem //= orders[i]
        self._coords = coords

        bmat = np.array(b4_gen, dtype=np.int64).reshape(k, k)
        qvec = np.array(q4_gen, dtype=np.int64)
        # 4*b(x,y) mod 4 for all pairs
        full = coords @ bmat @ coords.T
        self.b4 = (full % 4).astype(np.int16)
        # 4*q(x) mod 8: sum c_i^2 q_i + sum_{i != j} c_i c_j b_ij
        sq = coords * coords
        diag_part = sq @ qvec
        cross = np.einsum("xi,ij,xj->x", coords, bmat, coords) - sq @ np.diag(bmat)
        self.q4 = ((diag_part + cross) % 8).astype(np.int16)

        # addition and negation tables
        ords = np.array(orders, dtype=np.int64)
        summed = (coords[:, None, :] + coords[None, :, :]) % ords
        self.add_table = (summed @ radix).astype(np.int32)
        self.neg_table = (((-coords) % ords) @ radix).astype(np.int32)

        # element orders
        elt_orders = np.ones(self.size, dtype=np.int64)
        for i in range(k):
            di = orders[i]
            ci = coords[:, i]
            oi = np.array([di // gcd(int(c), di) for c in ci], dtype=np.int64)
            elt_orders = np.lcm(elt_orders, oi)
        self.element_orders = elt_orders

        # optional lattice provenance (set by lattice_core.discriminant_module)
        self._lattice = None
        self._push_mat = None
        self._kept = None
        self._gen_vectors = None

    # -- basic structure ---------------------------------------------------

    def coords(self, x: int):
        return tuple(int(c) for c in self._coords[x])

    def from_coords(self, coords) -> int:
        coords = [int(c) % d for c, d in zip(coords, self.orders)]
        return int(sum(c * r for c, r in zip(coords, self._radix)))

    def elements(self):
        return range(self.size)

    def add(self, x: int, y: int) -> int:
        return int(self.add_table[x, y])

    def neg(self, x: int) -> int:
        return int(self.neg_table[x])

    def sub(self, x: int, y: int) -> int:
        return int(self.add_table[x, self.neg_table[y]])

    def scalar_mul(self, n: int, x: int) -> int:
        coords = [(n * c) % d for c, d in zip(self.coords(x), self.orders)]
        return self.from_coords(coords)

    def order_of(self, x: int) -> int:
        return int(self.element_orders[x])

    def q(self, x: int) -> Fraction:
        """q(x) as a canonical representative in [0, 2)."""
        return Fraction(int(self.q4[x]), 4)

    def b(self, x: int, y: int) -> Fraction:
        """b(x, y) as a canonical representative in [0, 1)."""
        return Fraction(int(self.b4[x, y]), 4)

    # -- lattice provenance -------------------------------------------------

    def attach_lattice(self, lattice, push_mat, kept, gen_vectors):
        """Record how this module arose as (dual lattice)/(lattice).

        push_mat: integer matrix sending G*x (x a dual vector in lattice
        coordinates) to Smith coordinates; kept: indices of the nontrivial
        Smith factors; gen_vectors: rational lattice coordinates of the
        chosen generators.
        """
        self._lattice = lattice
        self._push_mat = push_mat
        self._kept = kept
        self._gen_vectors = gen_vectors

    @property
    def lattice(self):
        return self._lattice

    def class_of_vector(self, coords) -> int:
        """The class of a dual-lattice vector given in lattice coordinates."""
        if self._lattice is None:
            raise ValueError("module has no attached lattice")
        x = [Fraction(c) for c in coords]
        gram = self._lattice.gram
        n = len(gram)
        if len(x) != n:
            raise ValueError("coordinate length mismatch")
        k = [sum(Fraction(gram[i][j]) * x[j] for j in range(n)) for i in range(n)]
        if any(v.denominator != 1 for v in k):
            raise ValueError("vector is not in the dual lattice")
        s = [
            sum(self._push_mat[i][j] * int(k[j]) for j in range(n))
            for i in range(n)
        ]
        digits = [s[i] % self.orders[pos] for pos, i in enumerate(self._kept)]
        return self.from_coords(digits)

    def lift_vector(self, x: int):
        """A dual-lattice representative (lattice coordinates) of the class x."""
        if self._lattice is None:
            raise ValueError("module has no attached lattice")
        n = len(self._lattice.gram)
        acc = [Fraction(0)] * n
        for c, gen in zip(self.coords(x), self._gen_vectors):
            for i in range(n):
                acc[i] += c * gen[i]
        return tuple(acc)

    # -- misc ----------------------------------------------------------------

    def __repr__(self):
        return f"FiniteQuadraticModule(orders={self.orders}, size={self.size})"

    def same_presentation(self, other) -> bool:
        return (
            isinstance(other, FiniteQuadraticModule)
            and self.orders == other.orders
            and self.q4_gen == other.q4_gen
            and self.b4_gen == other.b4_gen
        )


def direct_sum(*modules: FiniteQuadraticModule) -> FiniteQuadraticModule:
    """Orthogonal direct sum of finite quadratic modules."""
    if not modules:
        raise ValueError("direct_sum needs at least one summand")
    orders = []
    q4 = []
    for m in modules:
        orders.extend(m.orders)
        q4.extend(m.q4_gen)
    k = len(orders)
    b4 = [[0] * k for _ in range(k)]
    off = 0
    for m in modules:
        kk = len(m.orders)
        for i in range(kk):
            for j in range(kk):
                b4[off + i][off + j] = m.b4_gen[i][j]
        off += kk
    return FiniteQuadraticModule(orders, q4, b4)


# ---------------------------------------------------------------------------
# Type census
# ---------------------------------------------------------------------------


def radical_class(A: FiniteQuadraticModule) -> int:
    """The unique nonzero 2-torsion class with integral q pairing integrally
    with every integral-q 2-torsion class.

    For the rank-6 ambient discriminant form this is the radical of the
    index-2 subgroup of integral-norm classes; for the restriction form it is
    the radical of the whole 2-torsion subgroup. Raises if no such class or
    more than one exists.
    """
    two_torsion = [x for x in A.elements() if A.order_of(x) <= 2]
    S = [x for x in two_torsion if A.q4[x] % 4 == 0]
    radicals = [
        x for x in S if x != 0 and all(A.b4[x, y] == 0 for y in S)
    ]
    if len(radicals) != 1:
        raise ValueError(
            f"radical is not unique: found {len(radicals)} candidate classes"
        )
    return radicals[0]


def _type_label(A: FiniteQuadraticModule, x: int, kappa: int) -> str:
    if x == 0:
        return "00"
    q4 = int(A.q4[x])
    if q4 == 0:
        return "0"
    if q4 == 4:
        return "10" if x == kappa else "1"
    table = {6: "3/2", 2: "1/2", 3: "3/4", 7: "7/4"}
    if q4 in table:
        return table[q4]
    raise ValueError(f"element with unsupported q-value {Fraction(q4, 4)}")


def element_types(A: FiniteQuadraticModule) -> list:
    """Type label of every element, indexed by element."""
    kappa = radical_class(A)
    return [_type_label(A, x, kappa) for x in A.elements()]


def type_census(A: FiniteQuadraticModule, order=TYPE_ORDER_AMBIENT) -> dict:
    """Count elements of each type, keyed in the given label order."""
    labels = element_types(A)
    counts = {t: 0 for t in order}
    for lab in labels:
        if lab not in counts:
            raise ValueError(f"unexpected type {lab} for this census order")
        counts[lab] += 1
    return counts


def type_census_mod_negation(
    A: FiniteQuadraticModule, order=TYPE_ORDER_RESTRICTION
) -> dict:
    """Count {x, -x} classes of each type."""
    labels = element_types(A)
    counts = {t: 0 for t in order}
    for x in A.elements():
        if x <= A.neg(x):  # canonical representative of the pair
            lab = labels[x]
            if lab not in counts:
                raise ValueError(f"unexpected type {lab} for this census order")
            counts[lab] += 1
    return counts


# ---------------------------------------------------------------------------
# Pairing table
# ---------------------------------------------------------------------------


def pairing_table(A: FiniteQuadraticModule) -> dict:
    """For each ordered pair of types (t_u, t_v) and j in {0, 1}: the number
    of elements v of type t_v with b(u, v) = j/2, for u of type t_u.

    The count is verified to be independent of the representative u; a
    representative-dependent count raises ValueError.
    """
    labels = element_types(A)
    types = sorted(set(labels), key=lambda t: TYPE_ORDER_AMBIENT.index(t))
    members = {t: [x for x in A.elements() if labels[x] == t] for t in types}
    table = {}
    for tu in types:
        row = None
        for u in members[tu]:
            this = {}
            for tv in types:
                b_vals = A.b4[u, members[tv]]
                if not np.all((b_vals == 0) | (b_vals == 2)):
                    raise ValueError("pairing values outside {0, 1/2}")
                m1 = int(np.count_nonzero(b_vals))
                this[tv] = (len(members[tv]) - m1, m1)
            if row is None:
                row = this
            elif row != this:
                raise ValueError(
                    f"pairing counts depend on the representative of type {tu}"
                )
        table[tu] = row
    return table


# ---------------------------------------------------------------------------
# Isotropic structure
# ---------------------------------------------------------------------------


def isotropic_vectors(A: FiniteQuadraticModule) -> list:
    """Nonzero classes with q = 0."""
    return [x for x in A.elements() if x != 0 and A.q4[x] == 0]


def isotropic_planes(A: FiniteQuadraticModule) -> list:
    """Order-4 subgroups on which q vanishes identically and b vanishes on
    all pairs. Returned as sorted tuples of the three nonzero elements."""
    iso = isotropic_vectors(A)
    found = set()
    # Klein four-groups {0, a, b, a+b}
    for a, b_ in combinations(iso, 2):
        if A.order_of(a) != 2 or A.order_of(b_) != 2:
            continue
        if A.b4[a, b_] != 0:
            continue
        c = A.add(a, b_)
        if c == 0:
            continue
        if A.q4[c] != 0:
            raise AssertionError("q(a+b) must vanish when b(a,b) = 0")
        found.add(tuple(sorted((a, b_, c))))
    # cyclic groups of order 4
    for x in iso:
        if A.order_of(x) == 4 and A.q4[A.scalar_mul(2, x)] == 0:
            members = {x, A.scalar_mul(2, x), A.scalar_mul(3, x)}
            if all(A.b4[u, v] == 0 for u in members for v in members):
                found.add(tuple(sorted(members)))
    return sorted(found)


# ---------------------------------------------------------------------------
# Automorphisms
# ---------------------------------------------------------------------------


class FqmAutomorphism:
    """A q-preserving group automorphism, stored as a permutation of element
    indices."""

    __slots__ = ("module", "perm", "_key")

    def __init__(self, module: FiniteQuadraticModule, perm):
        self.module = module
        self.perm = np.asarray(perm, dtype=np.int32)
        self._key = self.perm.tobytes()

    def __call__(self, x: int) -> int:
        return int(self.perm[x])

    def __mul__(self, other: "FqmAutomorphism") -> "FqmAutomorphism":
        # (f * g)(x) = f(g(x))
        return FqmAutomorphism(self.module, self.perm[other.perm])

    def inverse(self) -> "FqmAutomorphism":
        inv = np.empty_like(self.perm)
        inv[self.perm] = np.arange(len(self.perm), dtype=np.int32)
        return FqmAutomorphism(self.module, inv)

    def __eq__(self, other):
        return isinstance(other, FqmAutomorphism) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    @property
    def key(self) -> bytes:
        return self._key

    def is_identity(self) -> bool:
        return bool(np.all(self.perm == np.arange(len(self.perm))))

    def order(self) -> int:
        p = self.perm
        acc = p.copy()
        n = 1
        ident = np.arange(len(p))
        while not np.array_equal(acc, ident):
            acc = p[acc]
            n += 1
            if n > len(p) ** 2:
                raise RuntimeError("order computation runaway")
        return n

    def moved_points(self) -> int:
        return int(np.count_nonzero(self.perm != np.arange(len(self.perm))))

    def preserves_form(self) -> bool:
        """Exhaustive check that q and b are preserved on all pairs."""
        A = self.module
        p = self.perm
        if not np.array_equal(A.q4[p], A.q4):
            return False
        return bool(np.array_equal(A.b4[np.ix_(p, p)], A.b4))

    def is_group_homomorphism(self) -> bool:
        A = self.module
        p = self.perm
        return bool(np.array_equal(p[A.add_table], A.add_table[np.ix_(p, p)]))


def reflection(A: FiniteQuadraticModule, alpha: int) -> FqmAutomorphism:
    """The involution x -> x + (2 b(x, alpha)) alpha for a class with
    q(alpha) = 1; the coefficient 2 b(x, alpha) must be an integer."""
    if int(A.q4[alpha]) != 4:
        raise ValueError(f"reflection requires q(alpha) = 1, got {A.q(alpha)}")
    perm = np.empty(A.size, dtype=np.int32)
    for x in A.elements():
        b4 = int(A.b4[x, alpha])
        if b4 % 2 != 0:
            raise ValueError("reflection coefficient 2 b(x, alpha) is not integral")
        c = b4 // 2
        perm[x] = A.add(x, A.scalar_mul(c, alpha))
    t = FqmAutomorphism(A, perm)
    if not (t * t).is_identity():
        raise AssertionError("reflection must be an involution")
    if not t.preserves_form():
        raise AssertionError("reflection must preserve the quadratic form")
    return t


class AutomorphismGroup:
    """The full orthogonal group of a finite quadratic module, as an explicit
    element list with a multiplication oracle."""

    def __init__(self, module, elements):
        self.module = module
        self.elements = elements
        self._index = {g.key: i for i, g in enumerate(elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        return isinstance(g, FqmAutomorphism) and g.key in self._index

    def multiply(self, g, h) -> FqmAutomorphism:
        out = g * h
        if out.key not in self._index:
            raise ValueError("product left the group: closure violated")
        return out

    def is_closed(self) -> bool:
        """Full closure check: every pairwise product is a member."""
        perms = np.stack([g.perm for g in self.elements])
        keys = set(self._index)
        for g in self.elements:
            prods = perms[:, g.perm]  # each row: h(g(x)) = (h * g)
            for row in prods:
                if row.tobytes() not in keys:
                    return False
        return True

    def generating_set(self) -> list:
        """A small generating subset, found greedily."""
        target = self.order
        gens = []
        ident = FqmAutomorphism(self.module, np.arange(self.module.size))
        closure = {ident.key}
        for cand in self.elements:
            if cand.key in closure:
                continue
            gens.append(cand)
            # re-close
            group = {ident.key: ident}
            frontier = [ident]
            while frontier:
                new = []
                for g in frontier:
                    for s in gens:
                        for prod in (g * s, s * g):
                            if prod.key not in group:
                                group[prod.key] = prod
                                new.append(prod)
                frontier = new
            closure = set(group)
            if len(closure) == target:
                break
        return gens

    def center(self) -> list:
        gens = self.generating_set()
        out = []
        for g in self.elements:
            if all((g * s).key == (s * g).key for s in gens):
                out.append(g)
        return out


def orthogonal_group(
    A: FiniteQuadraticModule, node_budget: int = 5_000_000
) -> AutomorphismGroup:
    """The full orthogonal group of a 2-elementary module of dimension <= 6,
    by backtracking over generator images constrained by q-values and
    pairwise b-values."""
    if any(d != 2 for d in A.orders):
        raise ValueError("orthogonal_group supports 2-elementary modules only")
    k = len(A.orders)
    if k > 6:
        raise ValueError("orthogonal_group supports dimension <= 6 only")
    gens = [A.from_coords([1 if i == j else 0 for j in range(k)]) for i in range(k)]
    # for all orders 2 the mixed-radix index is a bitmask and addition is XOR
    assert all(g == 1 << i for i, g in enumerate(gens))

    q4 = A.q4
    b4 = A.b4
    cands = [[x for x in range(1, A.size) if q4[x] == q4[g]] for g in gens]

    sols = []
    nodes = 0

    def reduce_mod(x, echelon):
        for pivot_bit, row in echelon:
            if (x >> pivot_bit) & 1:
                x ^= row
        return x

    def place(i, imgs, echelon):
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise RuntimeError(f"orthogonal group search exceeded {node_budget} nodes")
        if i == k:
            sols.append(list(imgs))
            return
        gi = gens[i]
        for x in cands[i]:
            red = reduce_mod(x, echelon)
            if red == 0:
                continue  # not independent from placed images
            ok = True
            for j in range(i):
                if b4[x, imgs[j]] != b4[gi, gens[j]]:
                    ok = False
                    break
            if not ok:
                continue
            pivot_bit = red.bit_length() - 1
            place(i + 1, imgs + [x], echelon + [(pivot_bit, red)])

    place(0, [], [])

    elements = []
    indices = np.arange(A.size)
    for sol in sols:
        perm = np.zeros(A.size, dtype=np.int32)
        for i, im in enumerate(sol):
            sel = ((indices >> i) & 1).astype(bool)
            perm[sel] ^= im
        elements.append(FqmAutomorphism(A, perm))

    group = AutomorphismGroup(A, elements)
    # exhaustive q/b preservation for every member (vectorized)
    perms = np.stack([g.perm for g in elements])
    if not np.all(q4[perms] == q4[None, :]):
        raise AssertionError("an automorphism candidate fails to preserve q")
    for g in elements:
        if not np.array_equal(b4[np.ix_(g.perm, g.perm)], b4):
            raise AssertionError("an automorphism candidate fails to preserve b")
    return group


# ---------------------------------------------------------------------------
# Isomorphism testing
# ---------------------------------------------------------------------------


def find_isomorphism(A: FiniteQuadraticModule, B: FiniteQuadraticModule):
    """A form-preserving group isomorphism A -> B as an array over elements of
    A, or None. Backtracks over images of A's defining generators."""
    if A.size != B.size:
        return None
    k = len(A.orders)
    gens = [A.from_coords([1 if i == j else 0 for j in range(k)]) for i in range(k)]

    def build_map(imgs):
        out = np.zeros(A.size, dtype=np.int32)
        for x in A.elements():
            acc = 0
            for c, im in zip(A.coords(x), imgs):
                acc = B.add(acc, B.scalar_mul(c, im))
            out[x] = acc
        return out

    cand_pool = [
        [
            y
            for y in B.elements()
            if B.order_of(y) == A.order_of(g) and B.q4[y] == A.q4[g]
        ]
        for g in gens
    ]

    result = None

    def place(i, imgs):
        nonlocal result
        if result is not None:
            return
        if i == k:
            mapping = build_map(imgs)
            if len(set(mapping.tolist())) != A.size:
                return
            if not np.array_equal(B.q4[mapping], A.q4):
                return
            if not np.array_equal(B.b4[np.ix_(mapping, mapping)], A.b4):
                return
            result = mapping
            return
        for y in cand_pool[i]:
            if any(B.b4[y, imgs[j]] != A.b4[gens[i], gens[j]] for j in range(i)):
                continue
            place(i + 1, imgs + [y])

    place(0, [])
    return result
