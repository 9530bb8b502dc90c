"""Finite algebras (semigroups, monoids, groups) given by Cayley tables."""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product as iter_product

MAX_ORDER = 1024
ASSOC_EXHAUSTIVE_LIMIT = 64
ASSOC_SAMPLE_COUNT = 4096
SUBGROUP_ENUM_MAX_ORDER = 64
GENERATING_ENUM_MAX_ORDER = 36


class SpecParseError(ValueError):
    """Raised when an algebra spec string does not parse."""


class GuardExceeded(RuntimeError):
    """Raised when an input exceeds a documented enumeration or size guard."""


class FiniteAlgebra:
    """A finite set with an associative binary operation, stored as a table.

    table[a][b] is the index of a*b.  Associativity is checked exhaustively
    up to order 64 and by fixed-seed sampling above that.  The kind tag is
    detected from the table: "group" when a two-sided identity and all
    inverses exist, "monoid" with only the identity, "semigroup" otherwise.
    """

    def __init__(self, table, labels, name: str = ""):
        self.table = tuple(tuple(row) for row in table)
        self.labels = tuple(str(x) for x in labels)
        self.name = name
        n = len(self.table)
        if n == 0:
            raise ValueError("empty algebra")
        if n > MAX_ORDER:
            raise GuardExceeded(f"order {n} exceeds cap {MAX_ORDER}")
        if len(self.labels) != n:
            raise ValueError("label count does not match order")
        if len(set(self.labels)) != n:
            raise ValueError("labels must be pairwise distinct")
        for row in self.table:
            if len(row) != n or any(not (0 <= v < n) for v in row):
                raise ValueError("table is not a square over element indices")
        self._check_associativity()
        self.identity = self._find_identity()
        self.inverses = self._find_inverses() if self.identity is not None else None
        if self.inverses is not None:
            self.kind = "group"
        elif self.identity is not None:
            self.kind = "monoid"
        else:
            self.kind = "semigroup"
        self._extend_cache: dict[tuple[frozenset[int], int], frozenset[int]] = {}
        self._powers_cache: dict[int, frozenset[int]] = {}

    # -- construction helpers -------------------------------------------------

    def _check_associativity(self) -> None:
        n = len(self.table)
        t = self.table
        if n <= ASSOC_EXHAUSTIVE_LIMIT:
            triples = iter_product(range(n), repeat=3)
        else:
            rng = random.Random(1729)
            triples = (
                (rng.randrange(n), rng.randrange(n), rng.randrange(n))
                for _ in range(ASSOC_SAMPLE_COUNT)
            )
        for a, b, c in triples:
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise ValueError(f"operation is not associative at ({a}, {b}, {c})")

    def _find_identity(self) -> int | None:
        n = len(self.table)
        for e in range(n):
            if all(self.table[e][a] == a and self.table[a][e] == a for a in range(n)):
                return e
        return None

    def _find_inverses(self) -> tuple[int, ...] | None:
        e = self.identity
        out = []
        for a in range(self.order):
            inv = next(
                (b for b in range(self.order)
                 if self.table[a][b] == e and self.table[b][a] == e),
                None,
            )
            if inv is None:
                return None
            out.append(inv)
        return tuple(out)

    # -- basic accessors -------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.table)

    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def commutes(self, a: int, b: int) -> bool:
        return self.table[a][b] == self.table[b][a]

    def label(self, a: int) -> str:
        return self.labels[a]

    def index(self, label: str) -> int:
        return self.labels.index(label)

    @property
    def is_group(self) -> bool:
        return self.kind == "group"

    @cached_property
    def is_abelian(self) -> bool:
        n = self.order
        return all(self.commutes(a, b) for a in range(n) for b in range(a + 1, n))

    def __repr__(self) -> str:
        return f"FiniteAlgebra({self.name or 'anonymous'}, order={self.order}, kind={self.kind})"

    # -- element operations ----------------------------------------------------

    def power(self, a: int, m: int) -> int:
        """a raised to the m-th power by repeated squaring; m = 0 needs an identity."""
        if m < 0:
            raise ValueError("exponent must be nonnegative")
        if m == 0:
            if self.identity is None:
                raise ValueError("zeroth power undefined without an identity")
            return self.identity
        acc = None
        base = a
        while m:
            if m & 1:
                acc = base if acc is None else self.table[acc][base]
            base = self.table[base][base]
            m >>= 1
        return acc

    def element_order(self, a: int) -> int:
        if not self.is_group:
            raise ValueError("element order requires a group")
        x = a
        m = 1
        while x != self.identity:
            x = self.table[x][a]
            m += 1
        return m

    def powers_of(self, a: int) -> frozenset[int]:
        """The subsemigroup {a^m : m >= 1}, i.e. the closure of {a}."""
        hit = self._powers_cache.get(a)
        if hit is not None:
            return hit
        seen = {a}
        x = a
        while True:
            x = self.table[x][a]
            if x in seen:
                break
            seen.add(x)
        result = frozenset(seen)
        self._powers_cache[a] = result
        return result

    def idempotents(self) -> tuple[int, ...]:
        return tuple(a for a in self.elements() if self.table[a][a] == a)

    def eventual_idempotent(self, a: int) -> int:
        """The unique idempotent among the powers of a."""
        found = [x for x in self.powers_of(a) if self.table[x][x] == x]
        if len(found) != 1:
            raise RuntimeError(f"expected one idempotent among powers of {a}, got {found}")
        return found[0]

    def centralizer(self, a: int) -> frozenset[int]:
        return frozenset(x for x in self.elements() if self.commutes(a, x))

    def is_abelian_subset(self, xs) -> bool:
        xs = list(xs)
        return all(self.commutes(a, b) for i, a in enumerate(xs) for b in xs[i + 1:])

    # -- closures ----------------------------------------------------------------

    def closure_extend(self, closed: frozenset[int], x: int) -> frozenset[int]:
        """Closure of closed | {x} under the operation, given closed is closed."""
        if x in closed:
            return closed
        key = (closed, x)
        hit = self._extend_cache.get(key)
        if hit is not None:
            return hit
        members = set(closed)
        members.add(x)
        todo = [x]
        order_list = list(closed) + [x]
        while todo:
            t = todo.pop()
            for s in list(order_list):
                for p in (self.table[t][s], self.table[s][t]):
                    if p not in members:
                        members.add(p)
                        order_list.append(p)
                        todo.append(p)
        result = frozenset(members)
        self._extend_cache[key] = result
        return result

    def closure(self, xs) -> frozenset[int]:
        """Smallest subset containing xs closed under the operation.

        closure of the empty set is {identity} when one exists, else empty.
        """
        items = sorted(set(xs))
        if not items:
            return frozenset() if self.identity is None else frozenset({self.identity})
        acc: frozenset[int] = frozenset()
        for x in items:
            acc = self.closure_extend(acc, x)
        return acc

    def generates(self, xs) -> bool:
        return len(self.closure(xs)) == self.order

    @cached_property
    def _is_cyclic(self) -> bool:
        return any(len(self.powers_of(a)) == self.order for a in self.elements())

    def is_cyclic(self) -> bool:
        return self.is_group and self._is_cyclic

    def maximal_cyclic_subgroups(self) -> tuple[frozenset[int], ...]:
        """Inclusion-maximal subgroups of the form <a>, for a group."""
        if not self.is_group:
            raise ValueError("maximal cyclic subgroups require a group")
        distinct = {self.powers_of(a) for a in self.elements()}
        by_size = sorted(distinct, key=lambda h: (-len(h), sorted(h)))
        kept: list[frozenset[int]] = []
        for h in by_size:
            if not any(h < k for k in kept):
                kept.append(h)
        assert frozenset().union(*kept) == frozenset(self.elements())
        return tuple(sorted(kept, key=sorted))


# -- subgroup machinery ----------------------------------------------------------


def all_subgroups(g: FiniteAlgebra) -> tuple[frozenset[int], ...]:
    """Every subgroup of g, found by closing subgroups under one extra generator."""
    if not g.is_group:
        raise ValueError("subgroup enumeration requires a group")
    if g.order > SUBGROUP_ENUM_MAX_ORDER:
        raise GuardExceeded(
            f"subgroup enumeration capped at order {SUBGROUP_ENUM_MAX_ORDER}")
    trivial = frozenset({g.identity})
    seen = {trivial}
    frontier = [trivial]
    while frontier:
        nxt = []
        for h in frontier:
            for x in g.elements():
                if x in h:
                    continue
                k = g.closure_extend(h, x)
                if k not in seen:
                    seen.add(k)
                    nxt.append(k)
        frontier = nxt
    return tuple(sorted(seen, key=lambda h: (len(h), sorted(h))))


def maximal_subgroups(g: FiniteAlgebra) -> tuple[frozenset[int], ...]:
    """Maximal proper subgroups of g."""
    full = frozenset(g.elements())
    proper = [h for h in all_subgroups(g) if h != full]
    return tuple(h for h in proper if not any(h < k for k in proper))


def _prime_power(n: int) -> tuple[int, int] | None:
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            break
        p += 1
    else:
        p = n
    k = 0
    m = n
    while m % p == 0:
        m //= p
        k += 1
    return (p, k) if m == 1 else None


def frattini_subgroup(g: FiniteAlgebra) -> frozenset[int]:
    """Intersection of the maximal subgroups; order 1 gives the whole (trivial) group.

    For p-groups the closure of p-th powers and commutators is computed as well
    and the two must agree; past the subgroup-enumeration cap only that formula
    is available.
    """
    if not g.is_group:
        raise ValueError("Frattini subgroup requires a group")
    if g.order == 1:
        return frozenset({g.identity})
    pk = _prime_power(g.order)
    formula = None
    if pk is not None:
        p = pk[0]
        gens = {g.power(a, p) for a in g.elements()}
        inv = g.inverses
        gens.update(
            g.mul(g.mul(a, b), g.mul(inv[a], inv[b]))
            for a in g.elements() for b in g.elements()
        )
        formula = g.closure(gens)
    if g.order > SUBGROUP_ENUM_MAX_ORDER:
        if formula is None:
            raise GuardExceeded(
                f"Frattini subgroup needs order <= {SUBGROUP_ENUM_MAX_ORDER} unless the group is a p-group")
        return formula
    result = frozenset(g.elements())
    for h in maximal_subgroups(g):
        result &= h
    if formula is not None and formula != result:
        raise RuntimeError("p-th power formula disagrees with maximal-subgroup intersection")
    return result


def is_normal_subgroup(g: FiniteAlgebra, members) -> bool:
    h = frozenset(members)
    if g.identity not in h:
        return False
    if any(g.mul(a, b) not in h for a in h for b in h):
        return False
    inv = g.inverses
    return all(g.mul(g.mul(x, a), inv[x]) in h for x in g.elements() for a in h)


def quotient_group(g: FiniteAlgebra, members) -> tuple[FiniteAlgebra, tuple[int, ...]]:
    """Quotient of g by a normal subgroup; returns (quotient, projection)."""
    if not g.is_group:
        raise ValueError("quotient requires a group")
    h = frozenset(members)
    if not is_normal_subgroup(g, h):
        raise ValueError("not a normal subgroup")
    coset_of: dict[int, int] = {}
    reps: list[int] = []
    for a in g.elements():
        if a in coset_of:
            continue
        members_a = sorted(g.mul(a, x) for x in h)
        rep = members_a[0]
        idx = len(reps)
        reps.append(rep)
        for m in members_a:
            coset_of[m] = idx
    table = [
        [coset_of[g.mul(reps[i], reps[j])] for j in range(len(reps))]
        for i in range(len(reps))
    ]
    labels = [f"[{g.label(r)}]" for r in reps]
    q = FiniteAlgebra(table, labels, name=f"{g.name or 'group'} mod N")
    projection = tuple(coset_of[a] for a in g.elements())
    return q, projection


@dataclass(frozen=True)
class ZeroDivisorReport:
    zero: int
    pairs: tuple[tuple[int, int], ...]


def zero_and_zero_divisors(s: FiniteAlgebra) -> ZeroDivisorReport | None:
    """Two-sided zero and its divisor pairs, if the table has one; groups report none."""
    if s.is_group:
        return None
    zero = next(
        (z for z in s.elements()
         if all(s.mul(z, a) == z and s.mul(a, z) == z for a in s.elements())),
        None,
    )
    if zero is None:
        return None
    pairs = tuple(
        (a, b)
        for a in s.elements() if a != zero
        for b in s.elements() if b != zero and s.mul(a, b) == zero
    )
    return ZeroDivisorReport(zero, pairs)


# -- constructors ----------------------------------------------------------------


def cyclic(n: int) -> FiniteAlgebra:
    """The cyclic group of order n under addition mod n."""
    if n < 1:
        raise ValueError("cyclic group needs order >= 1")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteAlgebra(table, [str(i) for i in range(n)], name=f"cyclic:{n}")


def direct_product(a: FiniteAlgebra, b: FiniteAlgebra) -> FiniteAlgebra:
    """Componentwise product; element (i, j) sits at index i*|b| + j."""
    nb = b.order
    if a.order * nb > MAX_ORDER:
        raise GuardExceeded(f"product order {a.order * nb} exceeds cap {MAX_ORDER}")

    def enc(i: int, j: int) -> int:
        return i * nb + j

    table = [
        [enc(a.mul(i, k), b.mul(j, l)) for k in range(a.order) for l in range(nb)]
        for i in range(a.order) for j in range(nb)
    ]
    labels = [
        f"({a.label(i)},{b.label(j)})" for i in range(a.order) for j in range(nb)
    ]
    return FiniteAlgebra(table, labels, name=f"product:({a.name}),({b.name})")


_QUATERNION_SYMBOL_MUL = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (2, 0): (1, 2), (3, 0): (1, 3),
    (1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
    (1, 2): (1, 3), (2, 1): (-1, 3),
    (2, 3): (1, 1), (3, 2): (-1, 1),
    (3, 1): (1, 2), (1, 3): (-1, 2),
}


def quaternion() -> FiniteAlgebra:
    """The quaternion group {1, -1, i, -i, j, -j, k, -k}."""
    labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]

    def unpack(x: int) -> tuple[int, int]:
        return (-1 if x % 2 else 1, x // 2)

    def pack(sign: int, sym: int) -> int:
        return 2 * sym + (0 if sign == 1 else 1)

    table = []
    for x in range(8):
        sx, mx = unpack(x)
        row = []
        for y in range(8):
            sy, my = unpack(y)
            sp, mp = _QUATERNION_SYMBOL_MUL[(mx, my)]
            row.append(pack(sx * sy * sp, mp))
        table.append(row)
    return FiniteAlgebra(table, labels, name="quaternion")


def klein() -> FiniteAlgebra:
    """The Klein four-group {e, a, b, c} with every non-identity element an involution."""
    table = [
        [0, 1, 2, 3],
        [1, 0, 3, 2],
        [2, 3, 0, 1],
        [3, 2, 1, 0],
    ]
    return FiniteAlgebra(table, ["e", "a", "b", "c"], name="klein")


def _cycle_notation(perm: tuple[int, ...]) -> str:
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        x = perm[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = perm[x]
        parts.append("(" + " ".join(str(v) for v in cyc) + ")")
    return "".join(parts) or "()"


def symmetric(n: int) -> FiniteAlgebra:
    """The symmetric group on n points, n <= 6, elements in one-line lexicographic order."""
    if not 1 <= n <= 6:
        raise ValueError("symmetric group supported for 1 <= n <= 6")
    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(p[q[x]] for x in range(n))] for q in perms]
        for p in perms
    ]
    return FiniteAlgebra(table, [_cycle_notation(p) for p in perms], name=f"sym:{n}")


def dihedral(n: int) -> FiniteAlgebra:
    """Dihedral group of order 2n, n >= 1: maps x -> (-1)^s * x + a on Z_n."""
    if n < 1:
        raise ValueError("dihedral group needs n >= 1")
    if 2 * n > MAX_ORDER:
        raise GuardExceeded(f"order {2 * n} exceeds cap {MAX_ORDER}")

    def enc(s: int, a: int) -> int:
        return s * n + a

    table = []
    for s1 in range(2):
        for a1 in range(n):
            row = []
            for s2 in range(2):
                for a2 in range(n):
                    sign = -1 if s1 else 1
                    row.append(enc(s1 ^ s2, (sign * a2 + a1) % n))
            table.append(row)
    labels = [f"r{a}" for a in range(n)] + [f"s{a}" for a in range(n)]
    return FiniteAlgebra(table, labels, name=f"dihedral:{n}")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def elementary_abelian(p: int, k: int) -> FiniteAlgebra:
    """The group (Z_p)^k of vectors over F_p under componentwise addition."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1 or p ** k > MAX_ORDER:
        raise ValueError(f"need k >= 1 and p^k <= {MAX_ORDER}")
    vectors = list(iter_product(range(p), repeat=k))
    index = {v: i for i, v in enumerate(vectors)}
    table = [
        [index[tuple((u[t] + v[t]) % p for t in range(k))] for v in vectors]
        for u in vectors
    ]
    labels = ["(" + ",".join(str(c) for c in v) + ")" for v in vectors]
    return FiniteAlgebra(table, labels, name=f"elemab:{p}:{k}")


def mult_mod(n: int) -> FiniteAlgebra:
    """The monoid {0, ..., n-1} under multiplication mod n."""
    if n < 1:
        raise ValueError("multiplicative monoid needs n >= 1")
    if n > MAX_ORDER:
        raise GuardExceeded(f"order {n} exceeds cap {MAX_ORDER}")
    table = [[(i * j) % n for j in range(n)] for i in range(n)]
    return FiniteAlgebra(table, [str(i) for i in range(n)], name=f"multmod:{n}")


def full_transformation(n: int) -> FiniteAlgebra:
    """All self-maps of an n-point set under composition, n <= 4."""
    if not 1 <= n <= 4:
        raise ValueError("full transformation monoid supported for 1 <= n <= 4")
    maps = list(iter_product(range(n), repeat=n))
    index = {f: i for i, f in enumerate(maps)}
    table = [
        [index[tuple(f[g[x]] for x in range(n))] for g in maps]
        for f in maps
    ]
    labels = ["".join(str(v) for v in f) for f in maps]
    return FiniteAlgebra(table, labels, name=f"fulltrans:{n}")


# -- spec grammar ------------------------------------------------------------------

_ATOM_RE = re.compile(r"[a-z]+(?::\d+)*")


def _build_atom(token: str) -> FiniteAlgebra:
    head, _, rest = token.partition(":")
    args = rest.split(":") if rest else []
    try:
        nums = [int(x) for x in args]
    except ValueError:
        raise SpecParseError(f"bad numeric argument in {token!r}") from None
    try:
        if head == "cyclic" and len(nums) == 1:
            return cyclic(nums[0])
        if head == "dihedral" and len(nums) == 1:
            return dihedral(nums[0])
        if head == "quaternion" and not nums:
            return quaternion()
        if head == "klein" and not nums:
            return klein()
        if head == "sym" and len(nums) == 1:
            return symmetric(nums[0])
        if head == "elemab" and len(nums) == 2:
            return elementary_abelian(nums[0], nums[1])
        if head == "multmod" and len(nums) == 1:
            return mult_mod(nums[0])
        if head == "fulltrans" and len(nums) == 1:
            return full_transformation(nums[0])
    except ValueError as exc:
        raise SpecParseError(f"{token!r}: {exc}") from None
    raise SpecParseError(f"unknown constructor {token!r}")


def _parse(text: str, pos: int) -> tuple[FiniteAlgebra, int]:
    if text.startswith("product:(", pos):
        pos += len("product:(")
        left, pos = _parse(text, pos)
        if not text.startswith("),(", pos):
            raise SpecParseError(f"expected '),(' at position {pos} in {text!r}")
        pos += 3
        right, pos = _parse(text, pos)
        if not text.startswith(")", pos):
            raise SpecParseError(f"expected ')' at position {pos} in {text!r}")
        return direct_product(left, right), pos + 1
    m = _ATOM_RE.match(text, pos)
    if m is None:
        raise SpecParseError(f"expected a constructor at position {pos} in {text!r}")
    return _build_atom(m.group(0)), m.end()


def from_spec(text: str) -> FiniteAlgebra:
    """Build an algebra from a spec string such as 'product:(cyclic:2),(cyclic:3)'."""
    alg, pos = _parse(text.strip(), 0)
    if pos != len(text.strip()):
        raise SpecParseError(f"unexpected trailing text {text.strip()[pos:]!r}")
    return alg
