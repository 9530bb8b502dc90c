"""Divisor-lattice chains of an integer and the related counting formulas."""
from __future__ import annotations

import math

from .algebra import GuardExceeded
from .hypergraph import Hypergraph

MAX_CHAIN_N = 10 ** 9
CHAIN_MATERIALIZE_LIMIT = 10 ** 6
MAX_SEARCH_BOUND = 10 ** 12
MAX_PREDICT_N = 100_000

_SEARCH_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization as ((p, exponent), ...) with primes ascending."""
    if n < 1:
        raise ValueError("factorization needs n >= 1")
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            out.append((p, k))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return tuple(out)


def euler_phi(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def count_chains_from_exponents(exponents) -> int:
    """Multinomial (sum a_i)! / prod a_i! counting maximal divisor chains."""
    exps = list(exponents)
    if any(a < 1 for a in exps):
        raise ValueError("exponents must be >= 1")
    total = math.factorial(sum(exps))
    for a in exps:
        total //= math.factorial(a)
    return total


def count_maximal_chains(n: int) -> int:
    """Number of maximal chains in the divisor lattice of n, by the recurrence
    N(1) = 1, N(n) = sum of N(n/p) over prime divisors p."""
    _check_chain_n(n)
    memo: dict[int, int] = {1: 1}

    def rec(m: int) -> int:
        hit = memo.get(m)
        if hit is not None:
            return hit
        total = sum(rec(m // p) for p, _ in factorize(m))
        memo[m] = total
        return total

    return rec(n)


def _check_chain_n(n: int) -> None:
    if not 1 <= n <= MAX_CHAIN_N:
        raise GuardExceeded(f"n must satisfy 1 <= n <= {MAX_CHAIN_N}")


def maximal_chains(n: int) -> tuple[tuple[int, ...], ...]:
    """All maximal chains 1 = n_0 | n_1 | ... | n_s = n, sorted lexicographically.

    Each step multiplies by a single prime.  Refuses to materialize more than
    CHAIN_MATERIALIZE_LIMIT chains; use count_maximal_chains for bare counts.
    """
    _check_chain_n(n)
    expected = count_chains_from_exponents([a for _, a in factorize(n)] or [1]) if n > 1 else 1
    if expected > CHAIN_MATERIALIZE_LIMIT:
        raise GuardExceeded(
            f"{expected} chains exceed the materialization limit {CHAIN_MATERIALIZE_LIMIT}")
    memo: dict[int, tuple[tuple[int, ...], ...]] = {1: ((1,),)}

    def rec(m: int) -> tuple[tuple[int, ...], ...]:
        hit = memo.get(m)
        if hit is not None:
            return hit
        chains = tuple(
            chain + (m,)
            for p, _ in factorize(m)
            for chain in rec(m // p)
        )
        memo[m] = chains
        return chains

    return tuple(sorted(rec(n)))


def chain_edge_cardinality(chain) -> int:
    """Sum of Euler phi over the chain members, the size of the matching hyperedge."""
    return sum(euler_phi(m) for m in chain)


def predicted_power_hypergraph(n: int) -> Hypergraph:
    """Power hypergraph of the cyclic group of order n, built from divisor chains.

    One edge per maximal chain, collecting the elements whose order lies on
    the chain.  Must agree with the clique construction on the actual group.
    """
    _check_chain_n(n)
    if n > MAX_PREDICT_N:
        raise GuardExceeded(f"prediction capped at n <= {MAX_PREDICT_N}")
    orders = [n // math.gcd(i, n) for i in range(n)]
    edges = []
    for chain in maximal_chains(n):
        members = set(chain)
        edges.append(tuple(i for i in range(n) if orders[i] in members))
    return Hypergraph(n, edges, [str(i) for i in range(n)])


def smallest_n_exceeding_chain_count(bound: int) -> int | None:
    """Least n <= bound whose divisor lattice has more than n maximal chains.

    Only exponent tuples assigned non-increasingly to the smallest primes are
    walked: the chain count depends on the exponent multiset alone, and the
    smallest realization of any multiset has that shape.
    """
    if not 2 <= bound <= MAX_SEARCH_BOUND:
        raise GuardExceeded(f"bound must satisfy 2 <= bound <= {MAX_SEARCH_BOUND}")
    best: int | None = None

    def walk(idx: int, max_exp: int, n: int, exponents: list[int]) -> None:
        nonlocal best
        p = _SEARCH_PRIMES[idx]
        value = n * p
        exp = 1
        while exp <= max_exp and value <= bound:
            exponents.append(exp)
            if (best is None or value < best) and count_chains_from_exponents(exponents) > value:
                best = value
            if idx + 1 < len(_SEARCH_PRIMES):
                walk(idx + 1, exp, value, exponents)
            exponents.pop()
            value *= p
            exp += 1

    walk(0, bound.bit_length(), 1, [])
    return best
