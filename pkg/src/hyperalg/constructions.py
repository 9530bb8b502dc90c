"""Hypergraphs attached to a finite algebra.

Each construction takes a :class:`~hyperalg.algebra.FiniteAlgebra` and returns
a :class:`~hyperalg.hypergraph.Hypergraph` on the same vertex set, with the
algebra's element labels carried over.  The five families:

* ``commuting``: maximal sets of pairwise commuting elements.
* ``power``: maximal cliques of the power graph (x ~ y when one is a
  positive power of the other).
* ``epower``: maximal cyclic subgroups (groups only).
* ``generating``: minimal generating sets.
* ``identity_max`` / ``identity_min``: subsets of an abelian group whose
  product is the identity, maximal or minimal under inclusion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm

from .algebra import (
    GENERATING_ENUM_MAX_ORDER,
    FiniteAlgebra,
    GuardExceeded,
    zero_and_zero_divisors,
)
from .hypergraph import (
    ComponentPartition,
    Graph,
    Hypergraph,
    bits,
    connected_components,
    is_connected,
    maximal_cliques,
)

HYPERGRAPH_KINDS = ("commuting", "power", "epower", "generating",
                    "identity_max", "identity_min")

IDENTITY_ENUM_MAX_ORDER = 16
GENERATING_NODE_GUARD = 2_000_000


class IncompatibleKindError(TypeError):
    """The requested construction is not defined for this kind of algebra."""


# ---------------------------------------------------------------------------
# commuting


def commuting_graph(s: FiniteAlgebra) -> Graph:
    """Graph on the elements of ``s`` joining x and y when xy = yx."""
    n = s.order
    masks = [0] * n
    for a in range(n):
        for b in range(a + 1, n):
            if s.table[a][b] == s.table[b][a]:
                masks[a] |= 1 << b
                masks[b] |= 1 << a
    return Graph(n, masks, s.labels)


def commuting_hypergraph(s: FiniteAlgebra) -> Hypergraph:
    """Maximal sets of pairwise commuting elements of ``s``."""
    return maximal_cliques(commuting_graph(s))


# ---------------------------------------------------------------------------
# power


def power_graph(s: FiniteAlgebra) -> Graph:
    """Graph joining distinct x, y when x^m = y or y^m = x for some m >= 1."""
    n = s.order
    masks = [0] * n
    for a in range(n):
        for b in s.powers_of(a):
            if b != a:
                masks[a] |= 1 << b
                masks[b] |= 1 << a
    return Graph(n, masks, s.labels)


def power_hypergraph(s: FiniteAlgebra) -> Hypergraph:
    """Maximal cliques of the power graph of ``s``."""
    return maximal_cliques(power_graph(s))


# ---------------------------------------------------------------------------
# enhanced power


def cyclic_pair_graph(g: FiniteAlgebra) -> Graph:
    """Graph joining distinct x, y of a group when <x, y> is cyclic.

    <x, y> is cyclic exactly when both lie in a common cyclic subgroup, so
    adjacency is read off the subgroups <c> without closing each pair.
    """
    if not g.is_group:
        raise IncompatibleKindError("cyclic pair graph requires a group")
    n = g.order
    masks = [0] * n
    for c in range(n):
        members = g.powers_of(c)
        mask = 0
        for v in members:
            mask |= 1 << v
        for v in members:
            masks[v] |= mask
    for v in range(n):
        masks[v] &= ~(1 << v)
    return Graph(n, masks, g.labels)


def enhanced_power_hypergraph(g: FiniteAlgebra) -> Hypergraph:
    """Maximal cyclic subgroups of ``g``.

    Built two independent ways, as subgroup enumeration and as maximal
    cliques of the cyclic pair graph, and cross-checked before returning.
    """
    if not g.is_group:
        raise IncompatibleKindError("enhanced power hypergraph requires a group")
    from_subgroups = Hypergraph(g.order, [tuple(sorted(h)) for h in
                                          g.maximal_cyclic_subgroups()], g.labels)
    from_cliques = maximal_cliques(cyclic_pair_graph(g))
    if from_subgroups != from_cliques:
        raise RuntimeError(
            "maximal cyclic subgroups disagree with cliques of the cyclic "
            f"pair graph on {g.name or 'the given group'}")
    return from_cliques


@dataclass(frozen=True)
class ProbeReport:
    """Pairwise analogue of the enhanced power construction on a semigroup."""

    hypergraph: Hypergraph
    edges_are_cyclic: bool


def epower_pairwise_probe(s: FiniteAlgebra) -> ProbeReport:
    """Maximal sets in which every pair lies in a common monogenic subsemigroup.

    For groups this reproduces the enhanced power hypergraph.  For proper
    semigroups the edges need not themselves be monogenic;
    ``edges_are_cyclic`` records whether every edge equals <c> for one of
    its own members.
    """
    n = s.order
    masks = [0] * n
    for c in range(n):
        members = s.powers_of(c)
        mask = 0
        for v in members:
            mask |= 1 << v
        for v in members:
            masks[v] |= mask
    for v in range(n):
        masks[v] &= ~(1 << v)
    h = maximal_cliques(Graph(n, masks, s.labels))
    cyclic = all(
        any(s.powers_of(c) == frozenset(edge) for c in edge)
        for edge in h.edges)
    return ProbeReport(h, cyclic)


# ---------------------------------------------------------------------------
# generating


def generating_hypergraph(s: FiniteAlgebra) -> Hypergraph:
    """Minimal generating sets of ``s``, as edges of a hypergraph.

    Breadth-first over subset sizes.  Elements with no factorization x = ab
    sit in every generating set, so the search only branches over the rest.
    Minimality of a generating k-set is decided against the generating
    (k-1)-sets found one level earlier; the sizes of minimal generating
    sets of a finite algebra form an interval, so the search stops at the
    first size past that interval.
    """
    n = s.order
    if n > GENERATING_ENUM_MAX_ORDER:
        raise GuardExceeded(
            f"generating-set enumeration is capped at order "
            f"{GENERATING_ENUM_MAX_ORDER}, got {n}")
    labels = s.labels
    if n == 1:
        # the lone element is idempotent, so the empty set generates
        return Hypergraph(1, [()], labels)
    products = {s.table[a][b] for a in range(n) for b in range(n)}
    forced = tuple(sorted(set(range(n)) - products))
    base = s.closure(forced) if forced else frozenset()
    if len(base) == n:
        return Hypergraph(n, [forced], labels)
    candidates = [x for x in range(n) if x not in base]

    budget = GENERATING_NODE_GUARD
    frontier: list[tuple[tuple[int, ...], frozenset[int]]] = [((), base)]
    edges: list[tuple[int, ...]] = []
    gen_prev: set[frozenset[int]] = set()
    found = False
    while frontier:
        next_frontier: list[tuple[tuple[int, ...], frozenset[int]]] = []
        gen_now: set[frozenset[int]] = set()
        minimal_now: list[tuple[int, ...]] = []
        for positions, closed in frontier:
            start = positions[-1] + 1 if positions else 0
            for pos in range(start, len(candidates)):
                x = candidates[pos]
                if x in closed:
                    # closure is monotone, so x would be redundant here and
                    # in every extension of this subset
                    continue
                budget -= 1
                if budget < 0:
                    raise GuardExceeded(
                        "generating-set search exceeded its node guard")
                grown = s.closure_extend(closed, x)
                taken = positions + (pos,)
                if len(grown) == n:
                    key = frozenset(taken)
                    gen_now.add(key)
                    if all(key - {p} not in gen_prev for p in taken):
                        minimal_now.append(taken)
                else:
                    next_frontier.append((taken, grown))
        if minimal_now:
            found = True
            for taken in minimal_now:
                members = forced + tuple(candidates[p] for p in taken)
                edges.append(tuple(sorted(members)))
        elif found:
            break
        frontier = next_frontier
        gen_prev = gen_now
    return Hypergraph(n, edges, labels)


# ---------------------------------------------------------------------------
# identity


def identity_hypergraph(g: FiniteAlgebra, maximal: bool) -> Hypergraph:
    """Subsets of an abelian group whose product is the identity.

    With ``maximal`` true, keeps the subsets maximal under inclusion among
    such subsets; otherwise the minimal nonempty ones.  Subset products are
    well defined only when the group is abelian.
    """
    if not (g.is_group and g.is_abelian):
        raise IncompatibleKindError(
            "identity hypergraphs require an abelian group")
    n = g.order
    if n > IDENTITY_ENUM_MAX_ORDER:
        raise GuardExceeded(
            f"identity-hypergraph enumeration is capped at order "
            f"{IDENTITY_ENUM_MAX_ORDER}, got {n}")
    e = g.identity
    size = 1 << n
    prod = [e] * size
    for mask in range(1, size):
        low = mask & -mask
        prod[mask] = g.table[prod[mask ^ low]][low.bit_length() - 1]
    # contains_unit[m]: some nonempty subset of m multiplies to the identity
    contains_unit = [False] * size
    for mask in range(1, size):
        if prod[mask] == e:
            contains_unit[mask] = True
            continue
        rest = mask
        while rest:
            low = rest & -rest
            if contains_unit[mask ^ low]:
                contains_unit[mask] = True
                break
            rest ^= low
    full = size - 1
    chosen: list[int] = []
    for mask in range(1, size):
        if prod[mask] != e:
            continue
        if maximal:
            # prod over a disjoint union splits, so a strict superset works
            # exactly when the complement holds an identity-product subset
            if not contains_unit[full ^ mask]:
                chosen.append(mask)
        else:
            rest = mask
            minimal = True
            while rest:
                low = rest & -rest
                if contains_unit[mask ^ low]:
                    minimal = False
                    break
                rest ^= low
            if minimal:
                chosen.append(mask)
    return Hypergraph(n, [tuple(bits(m)) for m in chosen], g.labels)


# ---------------------------------------------------------------------------
# dispatch


def build_hypergraph(s: FiniteAlgebra, kind: str) -> Hypergraph:
    """Build the hypergraph of the given kind on ``s``.

    Raises :class:`IncompatibleKindError` when the kind is not defined for
    the algebra, and :class:`ValueError` for an unknown kind name.
    """
    if kind == "commuting":
        return commuting_hypergraph(s)
    if kind == "power":
        return power_hypergraph(s)
    if kind == "epower":
        return enhanced_power_hypergraph(s)
    if kind == "generating":
        return generating_hypergraph(s)
    if kind == "identity_max":
        return identity_hypergraph(s, maximal=True)
    if kind == "identity_min":
        return identity_hypergraph(s, maximal=False)
    raise ValueError(f"unknown hypergraph kind {kind!r}; "
                     f"expected one of {', '.join(HYPERGRAPH_KINDS)}")


# ---------------------------------------------------------------------------
# structural checks


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one structural check on one algebra."""

    name: str
    passed: bool
    skipped: bool = False
    messages: tuple[str, ...] = field(default_factory=tuple)


def _power_index_period(s: FiniteAlgebra, a: int) -> tuple[list[int], int, int]:
    """Powers a^1, a^2, ... until repetition, with index and period.

    Returns ``(seq, index, period)`` where ``seq[m-1] == a^m`` for
    ``1 <= m <= len(seq)`` and a^m for larger m repeats with the given
    period starting at exponent ``index``.
    """
    seq: list[int] = []
    seen: dict[int, int] = {}
    x = a
    m = 1
    while x not in seen:
        seen[x] = m
        seq.append(x)
        x = s.table[x][a]
        m += 1
    index = seen[x]
    period = m - index
    return seq, index, period


def _eventually_equal_powers(s: FiniteAlgebra, a: int, b: int) -> bool:
    """Whether a^m = b^m for some m >= 1, by direct scan."""
    seq_a, idx_a, per_a = _power_index_period(s, a)
    seq_b, idx_b, per_b = _power_index_period(s, b)

    def power(seq: list[int], idx: int, per: int, m: int) -> int:
        if m <= len(seq):
            return seq[m - 1]
        return seq[idx - 1 + (m - idx) % per]

    # past both indices the pair of power sequences is periodic with period
    # lcm(per_a, per_b), so one window of that length decides the question
    limit = max(idx_a, idx_b) + lcm(per_a, per_b)
    return any(
        power(seq_a, idx_a, per_a, m) == power(seq_b, idx_b, per_b, m)
        for m in range(1, limit + 1))


def rho_partition(s: FiniteAlgebra) -> ComponentPartition:
    """Partition of ``s`` into classes with a common eventual idempotent.

    Two elements are related when some power of one equals the same power
    of the other; each class is keyed by the unique idempotent among the
    powers of its members.  For small algebras the classes are re-derived
    from that pairwise definition as a self-check.
    """
    n = s.order
    component_of = tuple(s.eventual_idempotent(a) for a in range(n))
    keys = sorted(set(component_of))
    renumber = {k: i for i, k in enumerate(keys)}
    part = ComponentPartition(tuple(renumber[k] for k in component_of),
                              len(keys))
    if n <= 64:
        if s.is_group:
            # a^|G| is the identity for every a, so one class
            assert part.count == 1
        else:
            for a in range(n):
                for b in range(a + 1, n):
                    direct = _eventually_equal_powers(s, a, b)
                    assert direct == (component_of[a] == component_of[b]), (
                        f"eventual-power relation disagrees on "
                        f"({s.label(a)}, {s.label(b)})")
    return part


def verify_component_structure(s: FiniteAlgebra) -> CheckReport:
    """Check how the power hypergraph decomposes into components.

    The connected components must coincide with the classes of the
    eventual-power relation, connectivity must be equivalent to having a
    single idempotent, and every element must be adjacent or equal to
    exactly one idempotent in the power graph.
    """
    messages: list[str] = []
    h = power_hypergraph(s)
    comp = connected_components(h)
    rho = rho_partition(s)
    if comp.class_sets() != rho.class_sets():
        messages.append("components differ from eventual-power classes")
    idem = s.idempotents()
    if is_connected(h) != (len(idem) == 1):
        messages.append(
            f"connectivity does not match idempotent count {len(idem)}")
    if s.is_group and not is_connected(h):
        messages.append("power hypergraph of a group must be connected")
    pg = power_graph(s)
    for v in range(s.order):
        near = sum(1 for f in idem if f == v or pg.adjacent(v, f))
        if near != 1:
            messages.append(
                f"{s.label(v)} is adjacent or equal to {near} idempotents")
            break
    return CheckReport("component-structure", not messages,
                       messages=tuple(messages))


def verify_degree_not_two(s: FiniteAlgebra) -> CheckReport:
    """Check that no vertex of the commuting hypergraph has degree two.

    The claim assumes no zero divisors; when a zero and divisors of it are
    present the check is reported as skipped rather than pass or fail.
    """
    report = zero_and_zero_divisors(s)
    if report is not None and report.pairs:
        a, b = report.pairs[0]
        return CheckReport(
            "degree-not-two", True, skipped=True,
            messages=(f"zero divisors present: {s.label(a)}*{s.label(b)} = "
                      f"{s.label(report.zero)}",))
    h = commuting_hypergraph(s)
    bad = [v for v in range(s.order) if h.degree(v) == 2]
    messages = tuple(f"{s.label(v)} lies in exactly two maximal commuting sets"
                     for v in bad)
    return CheckReport("degree-not-two", not bad, messages=messages)
