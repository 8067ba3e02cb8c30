"""Finite commutative rings with unity, on elements encoded as integers.

Every ring enumerates its elements as indices 0..size-1 through a
mixed-radix encoding of coordinate tuples; index 0 is always the additive
zero. Three concrete kinds exist: Z_n, direct products, and rings given by
structure constants over a finite basis. All bulk queries (unit scan,
zero-product relation, nilpotent scan) are vectorized over numpy so that
graphs of rings up to the size cap build quickly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    CapacityError,
    DescriptorError,
    ElementError,
    InvalidModulusError,
    NotARingError,
    PreconditionError,
)

DEFAULT_SIZE_CAP = 4096
DEFAULT_VALIDATION_CAP = 64

# Full add/mul tables are materialized below this size; above it, bulk
# queries fall back to blocked vector kernels.
_TABLE_CAP = 1024
_BLOCK = 256


class FiniteRing:
    """Base interface: commutative ring with unity on indices 0..size-1."""

    kind: str
    size: int
    unity: int
    name: str | None = None

    # -- scalar arithmetic ------------------------------------------------

    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        raise NotImplementedError

    def square(self, a: int) -> int:
        return self.mul(a, a)

    # -- vector arithmetic (index arrays in, index arrays out) ------------

    def add_many(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def mul_many(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    # -- element presentation ---------------------------------------------

    def coords(self, a: int):
        """Decoded coordinate form (int for Z_n, tuple otherwise)."""
        raise NotImplementedError

    def element_str(self, a: int) -> str:
        raise NotImplementedError

    def elements(self) -> range:
        return range(self.size)

    def _check(self, a: int) -> int:
        if not 0 <= a < self.size:
            raise ElementError(f"element index {a} outside [0, {self.size})")
        return a

    def __repr__(self) -> str:
        return self.name or f"{self.kind}[{self.size}]"

    # -- cached bulk predicates -------------------------------------------

    @cached_property
    def mul_table(self) -> np.ndarray | None:
        if self.size > _TABLE_CAP:
            return None
        v = np.arange(self.size, dtype=np.int64)
        return self.mul_many(v[:, None], v[None, :])

    def _mul_rows(self, rows: np.ndarray) -> np.ndarray:
        """Products rows x all-elements, shape (len(rows), size)."""
        if self.mul_table is not None:
            return self.mul_table[rows]
        v = np.arange(self.size, dtype=np.int64)
        return self.mul_many(rows[:, None], v[None, :])

    @cached_property
    def zero_rel_matrix(self) -> np.ndarray:
        """Boolean matrix Z[a, b] = (a*b == 0), diagonal included."""
        n = self.size
        out = np.empty((n, n), dtype=bool)
        for lo in range(0, n, _BLOCK):
            hi = min(lo + _BLOCK, n)
            out[lo:hi] = self._mul_rows(np.arange(lo, hi, dtype=np.int64)) == 0
        return out

    @cached_property
    def unit_mask(self) -> np.ndarray:
        """unit_mask[a] iff some b has a*b = unity (exhaustive partner scan)."""
        n = self.size
        out = np.empty(n, dtype=bool)
        for lo in range(0, n, _BLOCK):
            hi = min(lo + _BLOCK, n)
            out[lo:hi] = (self._mul_rows(np.arange(lo, hi, dtype=np.int64)) == self.unity).any(axis=1)
        return out

    @cached_property
    def zero_divisor_mask(self) -> np.ndarray:
        """a != 0 annihilated by some nonzero b (b = a allowed)."""
        z = self.zero_rel_matrix.copy()
        z[:, 0] = False
        mask = z.any(axis=1)
        mask[0] = False
        return mask

    @cached_property
    def square_zero_mask(self) -> np.ndarray:
        return self.zero_rel_matrix.diagonal().copy()

    @cached_property
    def nilpotent_mask(self) -> np.ndarray:
        # x nilpotent iff x^(2^k) = 0 once 2^k >= size; log2 squaring rounds.
        v = np.arange(self.size, dtype=np.int64)
        rounds = max(1, (self.size - 1).bit_length())
        for _ in range(rounds):
            v = self.mul_many(v, v)
        return v == 0

    def units(self) -> frozenset[int]:
        return frozenset(np.flatnonzero(self.unit_mask).tolist())

    def zero_divisors(self) -> frozenset[int]:
        return frozenset(np.flatnonzero(self.zero_divisor_mask).tolist())

    # -- predicates ---------------------------------------------------------

    def is_unit(self, a: int) -> bool:
        return bool(self.unit_mask[self._check(a)])

    def is_zero_divisor(self, a: int) -> bool:
        return bool(self.zero_divisor_mask[self._check(a)])

    def is_nilpotent(self, a: int) -> bool:
        """Power iteration until 0 (nilpotent) or a repeated value (not)."""
        self._check(a)
        seen = set()
        x = a
        while x not in seen:
            if x == 0:
                return True
            seen.add(x)
            x = self.mul(x, a)
        return x == 0

    @cached_property
    def _local(self) -> bool:
        nonunits = np.flatnonzero(~self.unit_mask).astype(np.int64)
        sums = self.add_many(nonunits[:, None], nonunits[None, :])
        return not self.unit_mask[sums].any()

    def is_local(self) -> bool:
        """Non-units closed under addition (absorption is automatic)."""
        return self._local

    def is_reduced(self) -> bool:
        return int(self.nilpotent_mask.sum()) == 1

    def nilradical(self) -> "NilradicalProfile":
        return _nilradical_profile(self)

    # -- axiom validation ---------------------------------------------------

    def validate(self, cap: int | None = None) -> None:
        """Exhaustive O(size^3) ring-axiom check; raises NotARingError.

        `cap` refuses the check above a given size (None = no refusal).
        """
        n = self.size
        if cap is not None and n > cap:
            raise CapacityError(f"validation refused: size {n} > cap {cap}")
        v = np.arange(n, dtype=np.int64)
        add = self.add_many(v[:, None], v[None, :])
        mul = self.mul_many(v[:, None], v[None, :])
        if not np.array_equal(add, add.T):
            a, b = _first_2d(add != add.T)
            raise NotARingError("additive commutativity", (self.element_str(a), self.element_str(b)))
        if not np.array_equal(add[0], v):
            a = int(np.flatnonzero(add[0] != v)[0])
            raise NotARingError("additive zero", (self.element_str(a),))
        if not np.array_equal(mul, mul.T):
            a, b = _first_2d(mul != mul.T)
            raise NotARingError("commutativity", (self.element_str(a), self.element_str(b)))
        if not np.array_equal(mul[self.unity], v):
            a = int(np.flatnonzero(mul[self.unity] != v)[0])
            raise NotARingError("unity", (self.element_str(a),))
        if not np.array_equal(mul[0], np.zeros(n, dtype=np.int64)):
            a = int(np.flatnonzero(mul[0])[0])
            raise NotARingError("zero annihilation", (self.element_str(a),))
        # chunk over the first operand to keep memory at O(n^2)
        for a in range(n):
            left = mul[mul[a], :]
            right = mul[a][mul]
            if not np.array_equal(left, right):
                b, c = _first_2d(left != right)
                raise NotARingError(
                    "associativity",
                    (self.element_str(a), self.element_str(b), self.element_str(c)),
                )
            dist_l = mul[a][add]
            dist_r = add[mul[a][:, None], mul[a][None, :]]
            if not np.array_equal(dist_l, dist_r):
                b, c = _first_2d(dist_l != dist_r)
                raise NotARingError(
                    "distributivity",
                    (self.element_str(a), self.element_str(b), self.element_str(c)),
                )


def _first_2d(bad: np.ndarray) -> tuple[int, int]:
    i, j = np.argwhere(bad)[0]
    return int(i), int(j)


# ---------------------------------------------------------------------------
# concrete kinds
# ---------------------------------------------------------------------------


class ZmodRing(FiniteRing):
    """Integers modulo n."""

    kind = "zmod"

    def __init__(self, n: int, size_cap: int = DEFAULT_SIZE_CAP):
        if n == 0:
            raise InvalidModulusError("Z_0 is not a ring with unity")
        if n < 0:
            raise InvalidModulusError(f"modulus must be positive, got {n}")
        if n > size_cap:
            raise CapacityError(f"ring size {n} exceeds cap {size_cap}")
        self.n = n
        self.size = n
        self.unity = 1 % n
        self.name = f"Z{n}"

    def add(self, a, b):
        return (self._check(a) + self._check(b)) % self.n

    def mul(self, a, b):
        return (self._check(a) * self._check(b)) % self.n

    def neg(self, a):
        return (-self._check(a)) % self.n

    def add_many(self, a, b):
        return (np.asarray(a, dtype=np.int64) + np.asarray(b, dtype=np.int64)) % self.n

    def mul_many(self, a, b):
        return (np.asarray(a, dtype=np.int64) * np.asarray(b, dtype=np.int64)) % self.n

    def coords(self, a):
        return self._check(a)

    def element_str(self, a):
        return str(self._check(a))


class ProductRing(FiniteRing):
    """Direct product with componentwise arithmetic.

    Encoding is mixed-radix with factor 1 fastest-varying:
    index = a_1 + |R_1| * (a_2 + |R_2| * (...)).
    """

    kind = "product"

    def __init__(self, factors: list[FiniteRing], size_cap: int = DEFAULT_SIZE_CAP):
        if not factors:
            raise DescriptorError("product of zero rings is rejected")
        size = math.prod(f.size for f in factors)
        if size > size_cap:
            raise CapacityError(f"product size {size} exceeds cap {size_cap}")
        self.factors = list(factors)
        self.size = size
        self.strides = []
        s = 1
        for f in factors:
            self.strides.append(s)
            s *= f.size
        self.unity = self.encode(tuple(f.unity for f in factors))
        self.name = " x ".join(repr(f) for f in factors)

    def encode(self, parts: tuple[int, ...]) -> int:
        return sum(p * s for p, s in zip(parts, self.strides))

    def decode(self, a: int) -> tuple[int, ...]:
        out = []
        for f in self.factors:
            a, r = divmod(a, f.size)
            out.append(r)
        return tuple(out)

    def project(self, a: int, i: int) -> int:
        return self.decode(self._check(a))[i]

    def add(self, a, b):
        pa, pb = self.decode(self._check(a)), self.decode(self._check(b))
        return self.encode(tuple(f.add(x, y) for f, x, y in zip(self.factors, pa, pb)))

    def mul(self, a, b):
        pa, pb = self.decode(self._check(a)), self.decode(self._check(b))
        return self.encode(tuple(f.mul(x, y) for f, x, y in zip(self.factors, pa, pb)))

    def neg(self, a):
        pa = self.decode(self._check(a))
        return self.encode(tuple(f.neg(x) for f, x in zip(self.factors, pa)))

    def _vec(self, op, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = 0
        for f, s in zip(self.factors, self.strides):
            fa = (a // s) % f.size
            fb = (b // s) % f.size
            out = out + s * op(f, fa, fb)
        return out

    def add_many(self, a, b):
        return self._vec(lambda f, x, y: f.add_many(x, y), a, b)

    def mul_many(self, a, b):
        return self._vec(lambda f, x, y: f.mul_many(x, y), a, b)

    def coords(self, a):
        return self.decode(self._check(a))

    def element_str(self, a):
        parts = self.decode(self._check(a))
        return "(" + ",".join(f.element_str(p) for f, p in zip(self.factors, parts)) + ")"


class StructureRing(FiniteRing):
    """Ring presented by structure constants over a finite additive basis.

    Elements are coordinate tuples (c_1, ..., c_k) with c_i modulo the i-th
    additive order; multiplication extends the basis-pair table bilinearly.
    The table itself need not define a ring: validation is exhaustive for
    sizes up to `validation_cap` and raises NotARingError naming a failing
    triple otherwise.
    """

    kind = "structure"

    def __init__(
        self,
        additive_orders: list[int] | tuple[int, ...],
        unity_coords: tuple[int, ...],
        products: dict,
        name: str | None = None,
        size_cap: int = DEFAULT_SIZE_CAP,
        validation_cap: int = DEFAULT_VALIDATION_CAP,
    ):
        orders = tuple(int(o) for o in additive_orders)
        if not orders or any(o < 1 for o in orders):
            raise DescriptorError(f"additive orders must be positive: {orders}")
        k = len(orders)
        size = math.prod(orders)
        if size > size_cap:
            raise CapacityError(f"ring size {size} exceeds cap {size_cap}")
        self.orders = orders
        self.k = k
        self.size = size
        self.strides = []
        s = 1
        for o in orders:
            self.strides.append(s)
            s *= o
        if len(unity_coords) != k:
            raise DescriptorError(f"unity has {len(unity_coords)} coords, expected {k}")
        table = {}
        for i in range(k):
            for j in range(i, k):
                key = (i, j) if (i, j) in products else (j, i)
                if key not in products:
                    raise DescriptorError(f"missing structure constant for basis pair ({i}, {j})")
                val = tuple(int(c) for c in products[key])
                if len(val) != k:
                    raise DescriptorError(f"structure constant for {key} has arity {len(val)}")
                table[(i, j)] = tuple(c % o for c, o in zip(val, orders))
        self._table = table
        # tensor T[i, j, l] = l-th coordinate of e_i * e_j
        t = np.zeros((k, k, k), dtype=np.int64)
        for (i, j), val in table.items():
            t[i, j] = val
            t[j, i] = val
        self._tensor = t
        self._orders_arr = np.array(orders, dtype=np.int64)
        self._strides_arr = np.array(self.strides, dtype=np.int64)
        self.unity = self.encode(tuple(c % o for c, o in zip(unity_coords, orders)))
        self.name = name
        if size <= validation_cap:
            self.validate()

    def encode(self, coords: tuple[int, ...]) -> int:
        return sum(c * s for c, s in zip(coords, self.strides))

    def decode(self, a: int) -> tuple[int, ...]:
        out = []
        for o in self.orders:
            a, r = divmod(a, o)
            out.append(r)
        return tuple(out)

    def add(self, a, b):
        pa, pb = self.decode(self._check(a)), self.decode(self._check(b))
        return self.encode(tuple((x + y) % o for x, y, o in zip(pa, pb, self.orders)))

    def neg(self, a):
        pa = self.decode(self._check(a))
        return self.encode(tuple((-x) % o for x, o in zip(pa, self.orders)))

    def mul(self, a, b):
        pa, pb = self.decode(self._check(a)), self.decode(self._check(b))
        acc = [0] * self.k
        for i, x in enumerate(pa):
            if x == 0:
                continue
            for j, y in enumerate(pb):
                if y == 0:
                    continue
                t = self._table[(i, j) if i <= j else (j, i)]
                c = x * y
                for l, tl in enumerate(t):
                    if tl:
                        acc[l] += c * tl
        return self.encode(tuple(c % o for c, o in zip(acc, self.orders)))

    def _decode_many(self, a: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        return (a[..., None] // self._strides_arr) % self._orders_arr

    def add_many(self, a, b):
        coords = (self._decode_many(a) + self._decode_many(b)) % self._orders_arr
        return coords @ self._strides_arr

    def mul_many(self, a, b):
        ca, cb = self._decode_many(a), self._decode_many(b)
        coords = np.einsum("...i,...j,ijl->...l", ca, cb, self._tensor) % self._orders_arr
        return coords @ self._strides_arr

    def coords(self, a):
        return self.decode(self._check(a))

    def element_str(self, a):
        return "(" + ",".join(str(c) for c in self.decode(self._check(a))) + ")"


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def make_zmod(n: int, size_cap: int = DEFAULT_SIZE_CAP) -> ZmodRing:
    """Z_n; for n = 1 the zero ring, whose unity is the zero element."""
    return ZmodRing(n, size_cap=size_cap)


def make_product(factors: list[FiniteRing], size_cap: int = DEFAULT_SIZE_CAP) -> ProductRing:
    return ProductRing(factors, size_cap=size_cap)


def make_structure_ring(
    additive_orders,
    unity_coords,
    products,
    name: str | None = None,
    size_cap: int = DEFAULT_SIZE_CAP,
    validation_cap: int = DEFAULT_VALIDATION_CAP,
) -> StructureRing:
    return StructureRing(
        additive_orders, unity_coords, products,
        name=name, size_cap=size_cap, validation_cap=validation_cap,
    )


def make_quotient(n: int, poly: tuple[int, ...], name: str | None = None,
                  size_cap: int = DEFAULT_SIZE_CAP) -> StructureRing:
    """Z_n[t] / (f) for a monic f, as a structure ring on basis 1, t, ..., t^(d-1).

    `poly` lists coefficients c_0..c_d ascending with c_d = 1 and d >= 1.
    """
    if n == 0:
        raise InvalidModulusError("Z_0[t] is not a ring")
    coeffs = tuple(c % n for c in poly)
    d = len(coeffs) - 1
    if d < 1:
        raise DescriptorError("quotient polynomial must have degree >= 1")
    if n > 1 and coeffs[d] != 1:
        raise DescriptorError(f"quotient polynomial must be monic, leading coefficient {coeffs[d]}")
    # rep[e] = coordinates of t^e in the basis, for e up to 2(d-1)
    rep = [[0] * d for _ in range(2 * d - 1)]
    for e in range(min(d, 2 * d - 1)):
        rep[e][e] = 1
    for e in range(d, 2 * d - 1):
        # t^e = t * t^(e-1); shifting, then t^d -> -(c_0 + ... + c_{d-1} t^{d-1})
        prev = rep[e - 1]
        cur = [0] * d
        for i in range(d - 1):
            cur[i + 1] = prev[i]
        top = prev[d - 1]
        if top:
            for i in range(d):
                cur[i] = (cur[i] - top * coeffs[i]) % n
        rep[e] = cur
    products = {(i, j): tuple(rep[i + j]) for i in range(d) for j in range(i, d)}
    unity = tuple([1 % n] + [0] * (d - 1))
    return StructureRing((n,) * d, unity, products, name=name, size_cap=size_cap)


def make_anderson_naseer(z_squared: int, size_cap: int = DEFAULT_SIZE_CAP) -> StructureRing:
    """The 32-element local ring on basis 1, x, y, z over orders (4, 2, 2, 2).

    Products: x^2 = y^2 = 2, z^2 = `z_squared` (0 or 2), xy = xz = 0, yz = 2.
    Both z^2 choices yield valid local rings with 16 units; which one has
    clique number 5 and chromatic number 6 is decided by computation, not
    assumed (see catalog.canonical_anderson_naseer).
    """
    if z_squared not in (0, 2):
        raise DescriptorError(f"z_squared must be 0 or 2, got {z_squared}")
    zero = (0, 0, 0, 0)
    two = (2, 0, 0, 0)
    products = {
        (0, 0): (1, 0, 0, 0),
        (0, 1): (0, 1, 0, 0),
        (0, 2): (0, 0, 1, 0),
        (0, 3): (0, 0, 0, 1),
        (1, 1): two,
        (1, 2): zero,
        (1, 3): zero,
        (2, 2): two,
        (2, 3): two,
        (3, 3): (z_squared, 0, 0, 0),
    }
    return StructureRing((4, 2, 2, 2), (1, 0, 0, 0), products,
                         name=f"AN{z_squared}", size_cap=size_cap)


# ---------------------------------------------------------------------------
# ideals
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Ideal:
    ring: FiniteRing
    elements: frozenset[int]
    generators: tuple[int, ...]

    def __contains__(self, a: int) -> bool:
        return a in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def sorted_elements(self) -> list[int]:
        return sorted(self.elements)


@dataclass(frozen=True)
class NilradicalProfile:
    ideal: Ideal
    index_of_nilpotency: int
    power_sizes: tuple[int, ...]


def _additive_closure(ring: FiniteRing, seeds: set[int]) -> frozenset[int]:
    closed: set[int] = {0}
    for t in sorted(seeds):
        if t in closed:
            continue
        # extend the subgroup by the full cyclic orbit of t
        orbit = [0]
        c = t
        while c != 0:
            orbit.append(c)
            c = ring.add(c, t)
        closed = {ring.add(s, u) for s in closed for u in orbit}
    return frozenset(closed)


def ideal_generate(ring: FiniteRing, gens) -> Ideal:
    """Smallest additively closed, multiplication-absorbing set containing gens."""
    gens = tuple(sorted({ring._check(g) for g in gens}))
    multiples: set[int] = set()
    v = np.arange(ring.size, dtype=np.int64)
    for g in gens:
        multiples.update(ring.mul_many(v, np.int64(g)).tolist())
    return Ideal(ring, _additive_closure(ring, multiples), gens)


def ideal_product(i: Ideal, j: Ideal) -> Ideal:
    if i.ring is not j.ring:
        raise PreconditionError("ideal product requires ideals of the same ring")
    ring = i.ring
    ga = i.generators if i.generators else tuple(i.elements)
    gb = j.generators if j.generators else tuple(j.elements)
    prods = {ring.mul(a, b) for a in ga for b in gb}
    return ideal_generate(ring, prods)


def ideal_power(i: Ideal, k: int) -> Ideal:
    if k < 1:
        raise PreconditionError(f"ideal power requires k >= 1, got {k}")
    out = i
    for _ in range(k - 1):
        out = ideal_product(out, i)
    return out


def _minimal_generators(ring: FiniteRing, members: list[int]) -> tuple[int, ...]:
    gens: list[int] = []
    covered: frozenset[int] = frozenset({0})
    for x in sorted(members):
        if x not in covered:
            gens.append(x)
            covered = ideal_generate(ring, gens).elements
    return tuple(gens)


def _nilradical_profile(ring: FiniteRing) -> NilradicalProfile:
    members = np.flatnonzero(ring.nilpotent_mask).tolist()
    gens = _minimal_generators(ring, members)
    j = Ideal(ring, frozenset(members), gens)
    sizes = [len(j)]
    power = j
    while len(power) > 1:
        power = ideal_product(power, j)
        sizes.append(len(power))
    return NilradicalProfile(j, len(sizes), tuple(sizes))


# ---------------------------------------------------------------------------
# reduced-ring factor count
# ---------------------------------------------------------------------------


def field_factor_count(ring: FiniteRing) -> int:
    """Number of field factors of a finite reduced ring.

    Counts primitive idempotents: nonzero idempotents e admitting no split
    e = e1 + e2 with e1*e2 = 0 and e1, e2 nonzero idempotents.
    """
    if not ring.is_reduced():
        raise PreconditionError("field_factor_count requires a reduced ring")
    v = np.arange(ring.size, dtype=np.int64)
    idem = np.flatnonzero(ring.mul_many(v, v) == v).tolist()
    nonzero = [e for e in idem if e != 0]
    count = 0
    for e in nonzero:
        splittable = any(
            ring.mul(e1, e2) == 0 and ring.add(e1, e2) == e
            for e1 in nonzero
            for e2 in nonzero
        )
        if not splittable:
            count += 1
    return count
