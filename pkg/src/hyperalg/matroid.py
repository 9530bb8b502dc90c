"""Exchange-axiom checking and the matroid structure of generating sets.

A family of equal-size sets is the basis family of a matroid exactly when
it satisfies the exchange axiom: for bases A, B and any b in B \\ A there
is some a in A \\ B with (A \\ {a}) | {b} again a basis.  This module
checks that axiom exhaustively, builds small reference matroids, and ties
minimal generating sets of a p-group to bases of the quotient by its
Frattini subgroup.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .algebra import (
    FiniteAlgebra,
    GuardExceeded,
    frattini_subgroup,
    quotient_group,
    symmetric,
    _prime_power,
)
from .constructions import IncompatibleKindError, generating_hypergraph
from .hypergraph import Hypergraph, bits

EXCHANGE_FAMILY_CAP = 10_000


@dataclass(frozen=True)
class ExchangeReport:
    """Result of an exchange-axiom check.

    ``witness`` is the first failing triple (A, B, b) in canonical order:
    no a in A \\ B keeps (A \\ {a}) | {b} inside the family.
    ``checked_pairs`` counts the ordered (A, B) pairs examined.
    """

    holds: bool
    witness: tuple[tuple[int, ...], tuple[int, ...], int] | None
    checked_pairs: int


def _canonical_family(family) -> list[tuple[int, ...]]:
    edges = sorted({tuple(sorted(set(e))) for e in family})
    for e in edges:
        if e and e[0] < 0:
            raise ValueError("edge members must be non-negative indices")
    return edges


def check_exchange_axiom(family) -> ExchangeReport:
    """Exhaustively test the exchange axiom over all (A, B, b) triples.

    Iterates edges in canonical sorted order so the returned witness is
    deterministic.  Edges are handled as bitmasks; the family is capped at
    10^4 edges to bound the quadratic pair scan.
    """
    edges = _canonical_family(family)
    if not edges:
        raise ValueError("exchange axiom needs at least one basis")
    if len(edges) > EXCHANGE_FAMILY_CAP:
        raise GuardExceeded(
            f"exchange check is capped at {EXCHANGE_FAMILY_CAP} edges, "
            f"got {len(edges)}")
    masks = []
    for e in edges:
        m = 0
        for v in e:
            m |= 1 << v
        masks.append(m)
    member = set(masks)
    checked = 0
    for i, a_mask in enumerate(masks):
        for j, b_mask in enumerate(masks):
            if i == j:
                continue
            checked += 1
            gained = b_mask & ~a_mask
            while gained:
                b_low = gained & -gained
                swap_in = a_mask | b_low
                lost = a_mask & ~b_mask
                ok = False
                while lost:
                    a_low = lost & -lost
                    if swap_in ^ a_low in member:
                        ok = True
                        break
                    lost ^= a_low
                if not ok:
                    witness = (edges[i], edges[j], b_low.bit_length() - 1)
                    return ExchangeReport(False, witness, checked)
                gained ^= b_low
    return ExchangeReport(True, None, checked)


def verify_exchange_witness(family, a_edge, b_edge, b: int) -> bool:
    """Re-check a claimed exchange failure independently of the search.

    True when A and B belong to the family, b lies in B \\ A, and no
    a in A \\ B puts (A \\ {a}) | {b} back into the family.
    """
    edges = {frozenset(e) for e in family}
    a_set = frozenset(a_edge)
    b_set = frozenset(b_edge)
    if a_set not in edges or b_set not in edges:
        return False
    if b not in b_set - a_set:
        return False
    return all((a_set - {a}) | {b} not in edges for a in a_set - b_set)


def is_basis_family(h: Hypergraph) -> tuple[bool, ExchangeReport | None]:
    """Whether the edge family forms the bases of a matroid.

    True needs a nonempty family satisfying exchange; equal edge sizes then
    follow, and are re-checked rather than assumed.
    """
    if not h.edges:
        return False, None
    report = check_exchange_axiom(h.edges)
    if report.holds and len({len(e) for e in h.edges}) != 1:
        raise RuntimeError("exchange holds on a family with mixed edge sizes")
    return report.holds, report


# ---------------------------------------------------------------------------
# reference matroids


@dataclass(frozen=True)
class ReferenceMatroid:
    """Explicit basis family on ground elements 0..ground_size-1."""

    ground_size: int
    bases: tuple[tuple[int, ...], ...]

    def loops(self) -> tuple[int, ...]:
        used = set()
        for b in self.bases:
            used.update(b)
        return tuple(v for v in range(self.ground_size) if v not in used)


def reference_matroid(k: int, m: int, loops: int = 0,
                      split_parallel: int | None = None) -> ReferenceMatroid:
    """U_{k,m}, optionally with one element split into a parallel pair
    and with loops appended after all other elements.

    Splitting element x adds a copy with the next free id; bases containing
    x are duplicated with the copy, and {x, copy} never co-occur.  Loops
    take the highest ids and appear in no basis.  The result is self-checked
    against the exchange axiom.
    """
    if k > m:
        raise ValueError("uniform matroid needs k <= m")
    if k < 0 or m < 0 or loops < 0:
        raise ValueError("matroid parameters must be non-negative")
    bases = [tuple(c) for c in combinations(range(m), k)]
    ground = m
    if split_parallel is not None:
        if not 0 <= split_parallel < m:
            raise ValueError("element to split must lie in the ground set")
        copy = ground
        ground += 1
        bases += [tuple(sorted(set(b) - {split_parallel} | {copy}))
                  for b in bases if split_parallel in b]
    ground += loops
    model = ReferenceMatroid(ground, tuple(sorted(bases)))
    if not check_exchange_axiom(model.bases).holds:
        raise RuntimeError("reference matroid fails its own exchange check")
    return model


def s3_reference_model() -> ReferenceMatroid:
    """U_{2,4} with one element doubled and a loop added: 9 bases on 6."""
    return reference_matroid(2, 4, loops=1, split_parallel=3)


@dataclass(frozen=True)
class S3ModelReport:
    """Match between a generating hypergraph and the 9-basis reference."""

    matched: bool
    mapping: tuple[int, ...] | None
    group_edges: int
    model_bases: int
    detail: str = ""


def match_s3_model(g: FiniteAlgebra | None = None) -> S3ModelReport:
    """Match Gen_H(g) against U_{2,4} + parallel pair + loop.

    The intended fit is the symmetric group on 3 letters: identity to the
    loop, the two 3-cycles to the parallel pair, transpositions to the
    three plain elements.  The mapping is recovered structurally (the loop
    is the unique vertex in no edge, the parallel pair the unique pair
    never sharing an edge) and then checked by transporting the whole edge
    family.  Any group can be passed as a negative control.
    """
    if g is None:
        g = symmetric(3)
    model = s3_reference_model()
    h = generating_hypergraph(g)
    count = len(h.edges)
    if g.order != model.ground_size:
        return S3ModelReport(False, None, count, len(model.bases),
                             f"order {g.order} != ground {model.ground_size}")
    isolated = [v for v in range(g.order) if h.degree(v) == 0]
    if len(isolated) != 1:
        return S3ModelReport(False, None, count, len(model.bases),
                             f"{len(isolated)} isolated vertices, need 1")
    loop_vertex = isolated[0]
    covered = [v for v in range(g.order) if v != loop_vertex]
    together = {frozenset(p) for e in h.edges for p in combinations(e, 2)}
    apart = [p for p in combinations(covered, 2)
             if frozenset(p) not in together]
    if len(apart) != 1:
        return S3ModelReport(False, None, count, len(model.bases),
                             f"{len(apart)} never-adjacent pairs, need 1")
    pair = sorted(apart[0])
    plain = [v for v in covered if v not in pair]
    # the model is symmetric under permuting {0,1,2} and swapping the
    # parallel pair {3,4}, so one structural assignment decides the match
    mapping = [0] * g.order
    for image, v in enumerate(plain):
        mapping[v] = image
    mapping[pair[0]] = 3
    mapping[pair[1]] = 4
    mapping[loop_vertex] = 5
    transported = {tuple(sorted(mapping[v] for v in e)) for e in h.edges}
    if transported != set(model.bases):
        return S3ModelReport(False, None, count, len(model.bases),
                             "edge family differs from the model bases")
    return S3ModelReport(True, tuple(mapping), count, len(model.bases))


# ---------------------------------------------------------------------------
# p-groups


BURNSIDE_SUBSET_CAP = 2_000_000


@dataclass(frozen=True)
class BurnsideReport:
    """Minimal generating sets of a p-group against bases of G/Phi(G)."""

    prime: int
    frattini_order: int
    quotient_order: int
    rank: int
    group_edges: int
    quotient_edges: int
    formula_holds: bool
    subsets_checked: int
    subsets_agree: bool

    @property
    def passed(self) -> bool:
        return self.formula_holds and self.subsets_agree


def burnside_correspondence(g: FiniteAlgebra) -> BurnsideReport:
    """Check both faces of the basis correspondence for a p-group.

    A subset is a minimal generating set exactly when it maps injectively
    onto a minimal generating set of G/Phi(G); a repeated image can never
    be independent there, so the size condition is part of the test.  The
    lift count |edges(G)| = |edges(G/Phi)| * |Phi|^rank is checked as well,
    and every subset of size up to rank+1 is swept for the pointwise claim.
    """
    pp = _prime_power(g.order)
    if not g.is_group or pp is None:
        raise IncompatibleKindError(
            "the basis correspondence applies to p-groups only")
    p, _ = pp
    phi = frattini_subgroup(g)
    quotient, projection = quotient_group(g, phi)
    h_group = generating_hypergraph(g)
    h_quotient = generating_hypergraph(quotient)
    quotient_edge_set = set(h_quotient.edge_sets())
    sizes = {len(e) for e in h_quotient.edges}
    if len(sizes) != 1:
        raise RuntimeError("quotient generating sets are not equal-sized")
    rank = sizes.pop()
    formula = len(h_group.edges) == len(h_quotient.edges) * len(phi) ** rank

    group_edge_set = set(h_group.edge_sets())
    agree = True
    swept = 0
    for size in range(1, rank + 2):
        total = comb(g.order, size)
        if swept + total > BURNSIDE_SUBSET_CAP:
            raise GuardExceeded("burnside subset sweep exceeds its cap")
        for subset in combinations(range(g.order), size):
            swept += 1
            image = frozenset(projection[x] for x in subset)
            lifted = len(image) == size and image in quotient_edge_set
            if (frozenset(subset) in group_edge_set) != lifted:
                agree = False
                break
        if not agree:
            break
    return BurnsideReport(p, len(phi), quotient.order, rank,
                          len(h_group.edges), len(h_quotient.edges),
                          formula, swept, agree)
