"""Finite group construction with 0-based element indices.

Every group lives on the index set 0..size-1 with the identity at index 0.
Abelian groups are built structurally from prime-power cyclic factors
(mixed-radix element encoding, most significant factor first); cyclic groups
use plain residue arithmetic so that element i times element j is element
(i + j) mod n; dihedral and generalized quaternion groups are backed by an
explicit, validated multiplication table.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from math import lcm, prod

from .bitsets import iter_bits
from .numtheory import factorize, is_prime, p_adic_valuation

_ASSOC_SAMPLE_TRIPLES = 2000
_ASSOC_FULL_LIMIT = 64


class UnsupportedStructureError(ValueError):
    """Raised when an operation needs group structure that is not present."""


@dataclass(frozen=True)
class AbelianSpec:
    """A direct product of prime-power cyclic factors, canonically ordered.

    Two specs with the same multiset of (prime, exponent) factors compare
    equal; factors are stored sorted by (prime, exponent).
    """

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        factors = tuple(sorted((int(p), int(e)) for p, e in self.factors))
        if not factors:
            raise ValueError("abelian spec needs at least one factor")
        for p, e in factors:
            if not is_prime(p):
                raise ValueError(f"factor base {p} is not prime")
            if e < 1:
                raise ValueError(f"factor exponent must be >= 1, got {e}")
        object.__setattr__(self, "factors", factors)

    @property
    def order(self) -> int:
        return prod(p**e for p, e in self.factors)

    @property
    def label(self) -> str:
        return "x".join(f"C{p**e}" for p, e in self.factors)


@dataclass(frozen=True)
class SylowDecomposition:
    """Sylow subgroups of a nilpotent group plus per-element projections.

    ``subgroups[i]`` is the Sylow subgroup for ``primes[i]`` as an element
    set; ``components[g][i]`` is the projection of element g onto it, and the
    projections of g multiply back to g.
    """

    primes: tuple[int, ...]
    subgroups: tuple[frozenset[int], ...]
    components: tuple[tuple[int, ...], ...]

    def subgroup(self, p: int) -> frozenset[int]:
        try:
            return self.subgroups[self.primes.index(p)]
        except ValueError:
            raise ValueError(f"{p} does not divide the group order") from None

    def project(self, g: int) -> tuple[int, ...]:
        return self.components[g]


class Group:
    """Base class: a finite group on indices 0..size-1 with identity 0."""

    name: str
    size: int

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def inverse(self, a: int) -> int:
        raise NotImplementedError

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r}, size={self.size})"

    def elements(self) -> range:
        return range(self.size)

    def _check_index(self, g: int) -> None:
        if not 0 <= g < self.size:
            raise ValueError(f"element index {g} out of range [0, {self.size})")

    def power(self, g: int, k: int) -> int:
        """g**k by square-and-multiply (k may be any integer)."""
        k %= self.element_order(g)
        acc, base = 0, g
        while k:
            if k & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            k >>= 1
        return acc

    @cached_property
    def closure_masks(self) -> tuple[int, ...]:
        """Per element, the cyclic closure <g> as a vertex bitmask."""
        masks = []
        for g in range(self.size):
            m = 1  # identity
            x = g
            while x != 0:
                m |= 1 << x
                x = self.mul(x, g)
            masks.append(m)
        return tuple(masks)

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self.closure_masks)

    def element_order(self, g: int) -> int:
        self._check_index(g)
        return self.element_orders[g]

    def closure_mask(self, g: int) -> int:
        self._check_index(g)
        return self.closure_masks[g]

    def cyclic_closure(self, g: int) -> frozenset[int]:
        """The set {g**k : k >= 0}; its size is the order of g."""
        return frozenset(iter_bits(self.closure_mask(g)))

    def generator_class(self, g: int) -> frozenset[int]:
        """All elements generating the same cyclic subgroup as g."""
        m = self.closure_mask(g)
        return frozenset(h for h in iter_bits(m) if self.closure_masks[h] == m)

    @cached_property
    def generator_classes(self) -> tuple[frozenset[int], ...]:
        """The partition of the group into generator classes, by least element."""
        by_mask: dict[int, list[int]] = {}
        for g in range(self.size):
            by_mask.setdefault(self.closure_masks[g], []).append(g)
        return tuple(frozenset(c) for c in sorted(by_mask.values(), key=min))

    @cached_property
    def is_abelian(self) -> bool:
        return all(
            self.mul(a, b) == self.mul(b, a)
            for a in range(self.size)
            for b in range(a + 1, self.size)
        )

    @cached_property
    def is_cyclic(self) -> bool:
        return self.size == 1 or max(self.element_orders) == self.size

    @cached_property
    def exponent(self) -> int:
        return lcm(*self.element_orders) if self.size > 1 else 1

    @cached_property
    def is_nilpotent(self) -> bool:
        """True iff for every prime p the p-elements number exactly |Sylow_p|.

        The p-elements of a group are the union of its Sylow p-subgroups, so
        this count criterion is equivalent to every Sylow subgroup being
        normal (unique), i.e. to nilpotency for finite groups.
        """
        orders = self.element_orders
        for p, e in factorize(self.size):
            count = sum(1 for o in orders if o == p ** p_adic_valuation(o, p))
            if count != p**e:
                return False
        return True

    def sylow_decomposition(self) -> SylowDecomposition:
        """Sylow subgroups and element projections; the group must be nilpotent."""
        orders = self.element_orders
        factors = factorize(self.size)
        primes = tuple(p for p, _ in factors)
        subgroups = []
        for p, e in factors:
            members = frozenset(
                g for g, o in enumerate(orders) if o == p ** p_adic_valuation(o, p)
            )
            if len(members) != p**e:
                raise UnsupportedStructureError(
                    f"{self.name}: Sylow {p}-subgroup is not normal "
                    f"({len(members)} {p}-elements, expected {p**e})"
                )
            subgroups.append(members)
        components = []
        for g in range(self.size):
            n = orders[g]
            comps = []
            for p in primes:
                a = p_adic_valuation(n, p)
                if a == 0:
                    comps.append(0)
                else:
                    q = n // p**a
                    comps.append(self.power(g, q * pow(q, -1, p**a)))
            rebuilt = 0
            for c in comps:
                rebuilt = self.mul(rebuilt, c)
            if rebuilt != g:
                raise UnsupportedStructureError(
                    f"{self.name}: Sylow projections of element {g} do not "
                    "multiply back to it"
                )
            components.append(tuple(comps))
        return SylowDecomposition(primes, tuple(subgroups), tuple(components))


class CyclicGroup(Group):
    """C_n with residue arithmetic: element k is the k-th power of a generator."""

    def __init__(self, n: int, name: str | None = None):
        if n < 1:
            raise ValueError(f"cyclic group order must be >= 1, got {n}")
        self.size = n
        self.name = name or f"C{n}"

    def mul(self, a: int, b: int) -> int:
        return (a + b) % self.size

    def inverse(self, a: int) -> int:
        return -a % self.size

    @cached_property
    def is_abelian(self) -> bool:
        return True

    @cached_property
    def is_cyclic(self) -> bool:
        return True


class StructuredAbelianGroup(Group):
    """Direct product of prime-power cyclic factors, mixed-radix indexed."""

    def __init__(self, spec: AbelianSpec, name: str | None = None):
        self.spec = spec
        self._radices = tuple(p**e for p, e in spec.factors)
        self.size = prod(self._radices)
        self.name = name or spec.label

    def decode(self, a: int) -> tuple[int, ...]:
        self._check_index(a)
        out = []
        for r in reversed(self._radices):
            a, x = divmod(a, r)
            out.append(x)
        return tuple(reversed(out))

    def encode(self, coords: tuple[int, ...]) -> int:
        a = 0
        for x, r in zip(coords, self._radices):
            a = a * r + x % r
        return a

    def mul(self, a: int, b: int) -> int:
        return self.encode(tuple(x + y for x, y in zip(self.decode(a), self.decode(b))))

    def inverse(self, a: int) -> int:
        return self.encode(tuple(-x for x in self.decode(a)))

    @cached_property
    def is_abelian(self) -> bool:
        return True


class CayleyTableGroup(Group):
    """Group given by an explicit multiplication table.

    The table is validated on construction: identity row/column at index 0,
    two-sided inverses, and associativity (all triples up to size 64, a
    seeded 2000-triple sample above that).
    """

    def __init__(self, name: str, table: list[list[int]] | tuple[tuple[int, ...], ...]):
        n = len(table)
        if n < 1:
            raise ValueError("multiplication table must be non-empty")
        rows = tuple(tuple(int(x) for x in row) for row in table)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"table row {i} has length {len(row)}, expected {n}")
            for x in row:
                if not 0 <= x < n:
                    raise ValueError(f"table entry {x} out of range [0, {n})")
        self.name = name
        self.size = n
        self._table = rows
        self._validate()

    def _validate(self) -> None:
        n = self.size
        tab = self._table
        if tab[0] != tuple(range(n)) or any(tab[a][0] != a for a in range(n)):
            raise ValueError(f"{self.name}: index 0 is not a two-sided identity")
        inverses = []
        for a in range(n):
            try:
                inverses.append(tab[a].index(0))
            except ValueError:
                raise ValueError(f"{self.name}: element {a} has no right inverse") from None
            if tab[inverses[a]][a] != 0:
                raise ValueError(f"{self.name}: element {a} has no two-sided inverse")
        self._inverses = tuple(inverses)
        if n <= _ASSOC_FULL_LIMIT:
            triples = (
                (a, b, c) for a in range(n) for b in range(n) for c in range(n)
            )
        else:
            rng = random.Random(0x5EED)
            triples = (
                (rng.randrange(n), rng.randrange(n), rng.randrange(n))
                for _ in range(_ASSOC_SAMPLE_TRIPLES)
            )
        for a, b, c in triples:
            if tab[tab[a][b]][c] != tab[a][tab[b][c]]:
                raise ValueError(f"{self.name}: not associative at ({a}, {b}, {c})")

    def mul(self, a: int, b: int) -> int:
        return self._table[a][b]

    def inverse(self, a: int) -> int:
        self._check_index(a)
        return self._inverses[a]


def make_cyclic(n: int) -> Group:
    """The cyclic group of order n >= 1."""
    if n < 1:
        raise ValueError(f"cyclic group order must be >= 1, got {n}")
    return CyclicGroup(n)


def make_abelian(spec: AbelianSpec | list[tuple[int, int]] | tuple[tuple[int, int], ...]) -> Group:
    """Abelian group as a direct product of prime-power cyclic factors."""
    if not isinstance(spec, AbelianSpec):
        spec = AbelianSpec(tuple(spec))
    return StructuredAbelianGroup(spec)


def make_dihedral(order: int) -> Group:
    """Dihedral group of the given even order 2n, n >= 3.

    Elements 0..n-1 are the rotations r**i; elements n..2n-1 are the
    reflections s*r**i.
    """
    if order % 2 != 0 or order < 6:
        raise ValueError(f"dihedral order must be even and >= 6, got {order}")
    n = order // 2
    table = [[0] * order for _ in range(order)]
    for e1 in (0, 1):
        for i1 in range(n):
            for e2 in (0, 1):
                for i2 in range(n):
                    e = (e1 + e2) % 2
                    i = (i2 + i1) % n if e2 == 0 else (i2 - i1) % n
                    table[e1 * n + i1][e2 * n + i2] = e * n + i
    return CayleyTableGroup(f"D{order}", table)


def make_generalized_quaternion(order: int) -> Group:
    """Generalized quaternion group of order 2**m, m >= 3.

    Presentation with a of order 2**(m-1) and b satisfying b*b = a**(2**(m-2))
    and b*a*b**-1 = a**-1. Elements 0..N-1 are a**i (N = order/2); elements
    N..order-1 are a**i * b.
    """
    f = factorize(order) if order >= 2 else ()
    if len(f) != 1 or f[0][0] != 2 or order < 8:
        raise ValueError(f"generalized quaternion order must be 2**m with m >= 3, got {order}")
    half = order // 2
    twist = order // 4  # b*b = a**twist
    table = [[0] * order for _ in range(order)]
    for i1 in range(half):
        for e1 in (0, 1):
            for i2 in range(half):
                for e2 in (0, 1):
                    if e1 == 0:
                        i, e = (i1 + i2) % half, e2
                    elif e2 == 0:
                        i, e = (i1 - i2) % half, 1
                    else:
                        i, e = (i1 - i2 + twist) % half, 0
                    table[e1 * half + i1][e2 * half + i2] = e * half + i
    return CayleyTableGroup(f"Q{order}", table)


def direct_product(g1: Group, g2: Group, name: str | None = None) -> Group:
    """Direct product as a table group; index of (a, b) is a*|g2| + b."""
    n1, n2 = g1.size, g2.size
    n = n1 * n2
    table = [[0] * n for _ in range(n)]
    for a1 in range(n1):
        for b1 in range(n2):
            row = table[a1 * n2 + b1]
            for a2 in range(n1):
                pa = g1.mul(a1, a2) * n2
                for b2 in range(n2):
                    row[a2 * n2 + b2] = pa + g2.mul(b1, b2)
    return CayleyTableGroup(name or f"{g1.name}x{g2.name}", table)
