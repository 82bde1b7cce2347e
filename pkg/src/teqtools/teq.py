"""Tournament equilibrium set (TEQ) and retentive-set machinery.

TEQ(T) is the union of all inclusion-minimal TEQ-retentive sets of T, where a
nonempty S is TEQ-retentive if TEQ(dominators(x)) stays inside S for every
x in S that has dominators. The computation builds the relation graph with an
edge x -> y whenever y is in TEQ(dominators(x)); the minimal retentive sets
are exactly the terminal strongly connected components of that graph, so the
recursion only ever descends into dominator subsets (which never contain x).

A memo table keyed by subset bitmask makes repeated dominator subsets cheap;
``teq_bruteforce`` is an independent oracle that transcribes the definition
literally (subset enumeration, no SCC shortcut).
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .core import AltSet, Tournament, full_set, iter_members, members

BRUTEFORCE_MAX_ORDER = 12


class DeadlineExceeded(Exception):
    """A TEQ computation ran past the deadline set on its cache."""


class TeqCache:
    """Memo table mapping subsets of one base tournament to their TEQ.

    A subset of a fixed base fully determines the induced subtournament, so
    the bitmask is a sound memo key. Never share a cache across different
    base tournaments; a cache is confined to one computation at a time.
    ``hits``/``misses`` count top-level queries, not internal recursion.
    """

    __slots__ = ("base", "table", "hits", "misses", "deadline")

    def __init__(self, base: Tournament, deadline: float | None = None):
        self.base = base
        self.table: dict[AltSet, AltSet] = {}
        self.hits = 0
        self.misses = 0
        self.deadline = deadline  # time.monotonic() cutoff, None = unlimited


@dataclass
class RelationGraph:
    """Successor structure: successors[x] = TEQ(dominators of x in universe)."""

    universe: AltSet
    successors: dict[int, AltSet]


def _terminal_scc_masks(succ: dict[int, AltSet]) -> list[AltSet]:
    """Terminal SCCs (no outgoing edges) of the graph, as bitmasks.

    Iterative Tarjan; succ must have a key for every vertex. Output sorted by
    smallest member.
    """
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    sccs: list[AltSet] = []
    counter = 0

    for root in succ:
        if root in index:
            continue
        work = [(root, members(succ[root]), 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, targets, i = work.pop()
            advanced = False
            while i < len(targets):
                w = targets[i]
                i += 1
                if w not in index:
                    work.append((v, targets, i))
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, members(succ[w]), 0))
                    advanced = True
                    break
                if w in on_stack and index[w] < low[v]:
                    low[v] = index[w]
            if not advanced:
                if low[v] == index[v]:
                    comp = 0
                    while True:
                        w = stack.pop()
                        on_stack.discard(w)
                        comp |= 1 << w
                        if w == v:
                            break
                    sccs.append(comp)
                if work:
                    parent = work[-1][0]
                    if low[v] < low[parent]:
                        low[parent] = low[v]

    out = []
    for comp in sccs:
        reachable = 0
        for v in iter_members(comp):
            reachable |= succ[v]
        if reachable & ~comp == 0:
            out.append(comp)
    out.sort(key=lambda m: m & -m)
    return out


def terminal_sccs(g: RelationGraph) -> list[AltSet]:
    """Terminal SCCs of a relation graph, ordered by smallest vertex."""
    for v, s in g.successors.items():
        if s & ~g.universe or (s >> v) & 1:
            raise ValueError(f"successors of {v} leave the universe or contain {v}")
    return _terminal_scc_masks(g.successors)


def _teq_rec(dom_of: tuple[AltSet, ...], table: dict[AltSet, AltSet], subset: AltSet,
             deadline: float | None) -> AltSet:
    cached = table.get(subset)
    if cached is not None:
        return cached
    if subset & (subset - 1) == 0:
        table[subset] = subset
        return subset
    if deadline is not None and time.monotonic() >= deadline:
        raise DeadlineExceeded
    succ: dict[int, AltSet] = {}
    rest = subset
    while rest:
        lowbit = rest & -rest
        v = lowbit.bit_length() - 1
        rest ^= lowbit
        d = dom_of[v] & subset
        succ[v] = _teq_rec(dom_of, table, d, deadline) if d else 0
    result = 0
    for comp in _terminal_scc_masks(succ):
        result |= comp
    table[subset] = result
    return result


def teq_of_subset(cache: TeqCache, subset: AltSet) -> AltSet:
    """TEQ of the subtournament induced by ``subset``, in base indices.

    Equals teq(restrict(base, subset)) lifted back through the index mapping;
    memoized in the cache.
    """
    if not subset:
        raise ValueError("empty subset")
    if subset & ~full_set(cache.base.order):
        raise ValueError("subset contains out-of-range alternatives")
    cached = cache.table.get(subset)
    if cached is not None:
        cache.hits += 1
        return cached
    cache.misses += 1
    return _teq_rec(cache.base.dom_of, cache.table, subset, cache.deadline)


def teq(t: Tournament) -> AltSet:
    """The tournament equilibrium set of t. Nonempty for every tournament."""
    return teq_of_subset(TeqCache(t), full_set(t.order))


def relation_graph(cache: TeqCache, universe: AltSet | None = None) -> RelationGraph:
    """Build the relation graph x -> TEQ(dominators of x) over ``universe``.

    Vertices whose dominator set within the universe is empty get no
    successors.
    """
    base = cache.base
    if universe is None:
        universe = full_set(base.order)
    if not universe:
        raise ValueError("empty universe")
    if universe & ~full_set(base.order):
        raise ValueError("universe contains out-of-range alternatives")
    succ = {}
    for v in iter_members(universe):
        d = base.dom_of[v] & universe
        succ[v] = teq_of_subset(cache, d) if d else 0
    return RelationGraph(universe=universe, successors=succ)


def is_retentive(cache: TeqCache, x_set: AltSet) -> bool:
    """Whether x_set is TEQ-retentive in the cache's base tournament.

    True iff TEQ(dominators(x)) is contained (non-strictly) in x_set for every
    member x with a nonempty dominator set.
    """
    if not x_set:
        raise ValueError("empty set")
    if x_set & ~full_set(cache.base.order):
        raise ValueError("set contains out-of-range alternatives")
    dom_of = cache.base.dom_of
    for v in iter_members(x_set):
        d = dom_of[v]
        if d and teq_of_subset(cache, d) & ~x_set:
            return False
    return True


def minimal_retentive_sets(t: Tournament, cache: TeqCache | None = None) -> list[AltSet]:
    """All inclusion-minimal TEQ-retentive sets of t, ordered by smallest member.

    These are the terminal SCCs of the relation graph over the full universe;
    they are pairwise disjoint and their union is teq(t).
    """
    if cache is None:
        cache = TeqCache(t)
    g = relation_graph(cache)
    return _terminal_scc_masks(g.successors)


def bruteforce_minimal_retentive_sets(t: Tournament) -> list[AltSet]:
    """Minimal retentive sets by literal definition; independent of the SCC path.

    Enumerates every nonempty subset and tests retentiveness directly, with
    inner TEQ values computed by the same brute-force recursion (memoized).
    Guarded to order <= 12.
    """
    if t.order > BRUTEFORCE_MAX_ORDER:
        raise ValueError(f"brute force is limited to order {BRUTEFORCE_MAX_ORDER}, got {t.order}")
    memo: dict[AltSet, AltSet] = {}
    minimal = _bf_minimal_sets(t.dom_of, memo, full_set(t.order))
    return sorted(minimal, key=lambda m: m & -m)


def teq_bruteforce(t: Tournament) -> AltSet:
    """TEQ by literal definition: union of the brute-force minimal sets."""
    result = 0
    for s in bruteforce_minimal_retentive_sets(t):
        result |= s
    return result


def _bf_minimal_sets(dom_of, memo, subset):
    # inner TEQ value per member; None marks an empty dominator set (vacuous)
    inner = {}
    rest = subset
    while rest:
        lowbit = rest & -rest
        v = lowbit.bit_length() - 1
        rest ^= lowbit
        d = dom_of[v] & subset
        inner[v] = _bf_teq(dom_of, memo, d) if d else None

    retentive = []
    x = subset
    while x:
        ok = True
        rest = x
        while rest:
            lowbit = rest & -rest
            v = lowbit.bit_length() - 1
            rest ^= lowbit
            iv = inner[v]
            if iv is not None and iv & ~x:
                ok = False
                break
        if ok:
            retentive.append(x)
        x = (x - 1) & subset

    retentive.sort(key=int.bit_count)
    minimal = []
    for r in retentive:
        if not any(m & ~r == 0 for m in minimal):
            minimal.append(r)
    return minimal


def _bf_teq(dom_of, memo, subset):
    cached = memo.get(subset)
    if cached is not None:
        return cached
    if subset & (subset - 1) == 0:
        memo[subset] = subset
        return subset
    result = 0
    for m in _bf_minimal_sets(dom_of, memo, subset):
        result |= m
    memo[subset] = result
    return result
