"""Hypergraphs in canonical form, plus graphs, cliques, components and walks."""
from __future__ import annotations

from dataclasses import dataclass

DEFAULT_NODE_BUDGET = 10_000_000


class SearchBudgetExceeded(RuntimeError):
    """Raised when a backtracking search runs out of its node budget."""


def _default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


class Hypergraph:
    """A finite vertex set 0..n-1 with a family of hyperedges.

    The stored family is canonical: every edge is a strictly increasing tuple,
    duplicates are dropped, and edges are sorted lexicographically.
    """

    def __init__(self, vertex_count: int, edges, labels=None):
        if vertex_count < 0:
            raise ValueError("vertex count must be nonnegative")
        self.vertex_count = vertex_count
        self.labels = tuple(labels) if labels is not None else _default_labels(vertex_count)
        if len(self.labels) != vertex_count:
            raise ValueError("label count does not match vertex count")
        canon = set()
        for edge in edges:
            members = sorted(set(edge))
            if members and not (0 <= members[0] and members[-1] < vertex_count):
                raise ValueError(f"edge {members} out of vertex range")
            canon.add(tuple(members))
        self.edges = tuple(sorted(canon))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Hypergraph)
            and self.vertex_count == other.vertex_count
            and self.labels == other.labels
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.labels, self.edges))

    def __repr__(self) -> str:
        return f"Hypergraph(vertices={self.vertex_count}, edges={len(self.edges)})"

    def edge_count(self) -> int:
        return len(self.edges)

    def edge_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(e) for e in self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees listed in vertex order (a multiset presented positionally)."""
        counts = [0] * self.vertex_count
        for e in self.edges:
            for v in e:
                counts[v] += 1
        return tuple(counts)

    def edge_sizes(self) -> tuple[int, ...]:
        return tuple(sorted(len(e) for e in self.edges))

    def is_regular(self) -> bool:
        return len(set(self.degree_sequence())) <= 1

    def uniform_size(self) -> int | None:
        """Common edge cardinality, or None when sizes are mixed or no edges exist."""
        sizes = {len(e) for e in self.edges}
        return sizes.pop() if len(sizes) == 1 else None

    def open_neighborhood(self, v: int) -> frozenset[int]:
        out: set[int] = set()
        for e in self.edges:
            if v in e:
                out.update(e)
        out.discard(v)
        return frozenset(out)

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.open_neighborhood(v) | {v}

    def is_antichain(self) -> bool:
        sets = self.edge_sets()
        return not any(
            a < b for i, a in enumerate(sets) for j, b in enumerate(sets) if i != j
        )

    def incidence_masks(self) -> tuple[int, ...]:
        """For each vertex, a bitmask over edge indices containing it."""
        masks = [0] * self.vertex_count
        for i, e in enumerate(self.edges):
            for v in e:
                masks[v] |= 1 << i
        return tuple(masks)

    def two_section(self) -> "Graph":
        """Graph joining vertices that share at least one edge."""
        masks = [0] * self.vertex_count
        for e in self.edges:
            for a in e:
                for b in e:
                    if a != b:
                        masks[a] |= 1 << b
        return Graph(self.vertex_count, masks, self.labels)


class Graph:
    """Simple undirected graph over 0..n-1 stored as adjacency bitmasks."""

    def __init__(self, vertex_count: int, masks, labels=None):
        self.vertex_count = vertex_count
        self.masks = tuple(masks)
        self.labels = tuple(labels) if labels is not None else _default_labels(vertex_count)
        if len(self.masks) != vertex_count or len(self.labels) != vertex_count:
            raise ValueError("mask or label count does not match vertex count")
        for v, m in enumerate(self.masks):
            if m & (1 << v):
                raise ValueError(f"vertex {v} is self-adjacent")
            if m >> vertex_count:
                raise ValueError(f"adjacency of vertex {v} out of range")
        for v, m in enumerate(self.masks):
            rest = m
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                if not self.masks[u] & (1 << v):
                    raise ValueError(f"adjacency not symmetric between {v} and {u}")
                rest ^= low

    @classmethod
    def from_edges(cls, vertex_count: int, pairs, labels=None) -> "Graph":
        masks = [0] * vertex_count
        for a, b in pairs:
            if a == b:
                raise ValueError("loops are not allowed")
            masks[a] |= 1 << b
            masks[b] |= 1 << a
        return cls(vertex_count, masks, labels)

    def adjacent(self, a: int, b: int) -> bool:
        return bool(self.masks[a] & (1 << b))

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.masks[v]))

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def edge_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (v, u)
            for v in range(self.vertex_count)
            for u in bits(self.masks[v])
            if u > v
        )


def bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def maximal_cliques(g: Graph) -> Hypergraph:
    """All maximal cliques of g (Bron-Kerbosch with pivoting), as a hypergraph.

    Isolated vertices yield singleton cliques, so every vertex is covered.
    """
    n = g.vertex_count
    adj = g.masks
    found: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            found.append(r)
            return
        pivot = -1
        best = -1
        scan = p | x
        while scan:
            low = scan & -scan
            u = low.bit_length() - 1
            score = (p & adj[u]).bit_count()
            if score > best:
                best = score
                pivot = u
            scan ^= low
        cand = p & ~adj[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            expand(r | low, p & adj[v], x & adj[v])
            p ^= low
            x |= low
            cand ^= low

    if n:
        expand(0, (1 << n) - 1, 0)
    h = Hypergraph(n, [tuple(bits(m)) for m in found], g.labels)
    assert h.is_antichain()
    return h


def neighborhood_coincidence(g: Graph, h: Hypergraph, v: int) -> bool:
    """Whether v has the same open neighborhood in g and in h."""
    if g.vertex_count != h.vertex_count:
        raise ValueError("graph and hypergraph have different vertex sets")
    return g.neighbors(v) == h.open_neighborhood(v)


def neighborhoods_coincide(g: Graph, h: Hypergraph) -> bool:
    return all(neighborhood_coincidence(g, h, v) for v in range(g.vertex_count))


@dataclass(frozen=True)
class ComponentPartition:
    """Connected components; ids are assigned in order of first vertex occurrence."""
    component_of: tuple[int, ...]
    count: int

    def classes(self) -> tuple[tuple[int, ...], ...]:
        groups: list[list[int]] = [[] for _ in range(self.count)]
        for v, c in enumerate(self.component_of):
            groups[c].append(v)
        return tuple(tuple(g) for g in groups)

    def class_sets(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(c) for c in self.classes())


def connected_components(h: Hypergraph) -> ComponentPartition:
    parent = list(range(h.vertex_count))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in h.edges:
        for a, b in zip(e, e[1:]):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[rb] = ra

    relabel: dict[int, int] = {}
    out = []
    for v in range(h.vertex_count):
        r = find(v)
        if r not in relabel:
            relabel[r] = len(relabel)
        out.append(relabel[r])
    return ComponentPartition(tuple(out), len(relabel))


def is_connected(h: Hypergraph) -> bool:
    return connected_components(h).count <= 1


def _check_walk(walk, h: Hypergraph, strict: bool) -> None:
    k = len(walk.vertices)
    if k == 0:
        raise ValueError("walk has no vertices")
    if len(set(walk.vertices)) != k:
        raise ValueError("walk vertices repeat")
    expected_hops = k if walk.closed else k - 1
    if len(walk.edge_choices) != expected_hops:
        raise ValueError("edge choice count does not match hop count")
    if walk.closed and k < 3:
        raise ValueError("a closed walk needs at least 3 vertices")
    if strict and len(set(walk.edge_choices)) != len(walk.edge_choices):
        raise ValueError("walk reuses an edge")
    for i, eid in enumerate(walk.edge_choices):
        a = walk.vertices[i]
        b = walk.vertices[(i + 1) % k]
        if not 0 <= eid < len(h.edges):
            raise ValueError(f"edge id {eid} out of range")
        edge = h.edges[eid]
        if a not in edge or b not in edge:
            raise ValueError(f"hop {i}: edge {eid} does not contain both {a} and {b}")


@dataclass(frozen=True)
class LooseWalk:
    """Vertex sequence with one covering edge per hop; edges may repeat."""
    vertices: tuple[int, ...]
    edge_choices: tuple[int, ...]
    closed: bool

    def validate(self, h: Hypergraph) -> None:
        _check_walk(self, h, strict=False)

    def spans(self, h: Hypergraph) -> bool:
        return len(set(self.vertices)) == h.vertex_count


@dataclass(frozen=True)
class StrictWalk:
    """Vertex sequence with pairwise distinct covering edges."""
    vertices: tuple[int, ...]
    edge_choices: tuple[int, ...]
    closed: bool

    def validate(self, h: Hypergraph) -> None:
        _check_walk(self, h, strict=True)

    def spans(self, h: Hypergraph) -> bool:
        return len(set(self.vertices)) == h.vertex_count


class _Budget:
    def __init__(self, limit: int):
        self.left = limit

    def spend(self) -> None:
        if self.left <= 0:
            raise SearchBudgetExceeded("node budget exhausted")
        self.left -= 1


def _hamiltonian_vertex_order(adj, n: int, budget: _Budget) -> list[int] | None:
    """Exhaustive DFS for a Hamiltonian cycle on an adjacency-mask graph.

    Candidates are tried fewest-onward-moves first; a branch is cut when some
    unvisited vertex can no longer be reached.
    """
    full = (1 << n) - 1
    path = [0]

    def step(current: int, visited: int) -> bool:
        budget.spend()
        if visited == full:
            return bool(adj[current] & 1)
        rest = full & ~visited
        scan = rest
        while scan:
            low = scan & -scan
            u = low.bit_length() - 1
            if not adj[u] & (rest ^ low) and not adj[u] & (1 << current):
                return False
            scan ^= low
        cand = adj[current] & rest
        ordered = sorted(bits(cand), key=lambda v: (adj[v] & rest).bit_count())
        for v in ordered:
            path.append(v)
            if step(v, visited | (1 << v)):
                return True
            path.pop()
        return False

    return path if step(0, 1) else None


def find_hamiltonian_cycle_loose(
    h: Hypergraph, budget: int = DEFAULT_NODE_BUDGET
) -> LooseWalk | None:
    """A spanning closed loose walk, if one exists within the node budget.

    Returns None when provably absent; raises SearchBudgetExceeded otherwise.
    Hops may reuse edges, so the search runs on the two-section graph.
    """
    n = h.vertex_count
    if n < 3:
        return None
    degs = h.degree_sequence()
    if any(d == 0 for d in degs):
        return None
    if connected_components(h).count != 1:
        return None
    g = h.two_section()
    order = _hamiltonian_vertex_order(g.masks, n, _Budget(budget))
    if order is None:
        return None
    inc = h.incidence_masks()
    choices = []
    for i, a in enumerate(order):
        b = order[(i + 1) % n]
        common = inc[a] & inc[b]
        choices.append((common & -common).bit_length() - 1)
    walk = LooseWalk(tuple(order), tuple(choices), closed=True)
    walk.validate(h)
    return walk


def find_hamiltonian_cycle_strict(
    h: Hypergraph, budget: int = DEFAULT_NODE_BUDGET
) -> StrictWalk | None:
    """A spanning closed walk with pairwise distinct edges, if one exists.

    A spanning cycle on n vertices uses n distinct edges, so families with
    fewer edges than vertices are rejected outright.
    """
    n = h.vertex_count
    if n < 3:
        return None
    if len(h.edges) < n:
        return None
    if any(d == 0 for d in h.degree_sequence()):
        return None
    inc = h.incidence_masks()
    tracker = _Budget(budget)
    full = (1 << n) - 1
    path = [0]
    used_edges: list[int] = []

    def step(current: int, visited: int, used: int) -> bool:
        tracker.spend()
        if visited == full:
            closing = inc[current] & inc[0] & ~used
            if closing:
                used_edges.append((closing & -closing).bit_length() - 1)
                return True
            return False
        for v in bits(full & ~visited):
            options = inc[current] & inc[v] & ~used
            while options:
                low = options & -options
                eid = low.bit_length() - 1
                path.append(v)
                used_edges.append(eid)
                if step(v, visited | (1 << v), used | low):
                    return True
                path.pop()
                used_edges.pop()
                options ^= low
        return False

    if not step(0, 1, 0):
        return None
    walk = StrictWalk(tuple(path), tuple(used_edges), closed=True)
    walk.validate(h)
    return walk
