"""Maximal IASF-graphs, the IASFL admissibility search, and the brute-force oracle.

The oracle (:func:`enumerate_labelings`) shares nothing with the search
beyond :func:`~iasfl.labeling.classify`: it walks every injective
assignment of non-empty subsets and asks the classifier.  The search
instead maps the input graph onto the maximal graph of each candidate
ground set.  Their agreement is a test, not an assumption.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .errors import InputError, ScaleGuardError
from .graph import Graph
from .labeling import PREDICATES, Labeling, classify
from .setcore import ZERO, IntSet, canonical_sorted, subsets

ORACLE_MAX_VERTICES = 6
ORACLE_MAX_GROUND = 4


def build_max_iasf_graph(x: IntSet) -> tuple[Graph, Labeling]:
    """Graph on all 0-containing subsets of ``x``, with every edge whose sumset stays in ``x``.

    Vertices are named by their label (``{0,1,2}`` -> ``0_1_2``) and listed
    in canonical set order, so ``{0}`` comes first.
    """
    if 0 not in x:
        raise InputError(f"ground set {x} must contain 0")
    if len(x) < 2:
        raise InputError(f"ground set {x} needs at least two elements")
    labels = list(subsets(x, ZERO))
    names = [s.name() for s in labels]
    edges = [
        (names[i], names[j])
        for i, j in combinations(range(len(labels)), 2)
        if (labels[i] + labels[j]) <= x
    ]
    return Graph(tuple(names), tuple(edges)), Labeling(dict(zip(names, labels)), x)


def power_of_two_exponent(order: int) -> int | None:
    """Return n >= 2 with order == 2**(n-1), else None."""
    if order < 2 or order & (order - 1):
        return None
    return order.bit_length()


@dataclass
class SearchResult:
    status: str  # "SAT" or "UNSAT"
    witness: Labeling | None = None
    explored: int = 0
    searched_universe: str = ""
    reason: str | None = None

    @property
    def sat(self) -> bool:
        return self.status == "SAT"

    def to_dict(self) -> dict:
        out = {
            "status": self.status,
            "explored": self.explored,
            "searched_universe": self.searched_universe,
            "reason": self.reason,
            "witness": None,
        }
        if self.witness is not None:
            out["witness"] = {
                "ground": self.witness.ground.literal(),
                "labels": {v: s.literal() for v, s in self.witness.assignment.items()},
            }
        return out


def _degree_dominated(small: list[int], big: list[int]) -> bool:
    return all(a <= b for a, b in zip(sorted(small, reverse=True), sorted(big, reverse=True)))


def _search_ground(g: Graph, x: IntSet, stats: list[int]) -> Labeling | None:
    """Canonically least bijection of V(g) onto the 0-subsets of x that respects edges, if any."""
    host, host_lab = build_max_iasf_graph(x)
    if host.order != g.order or len(g.edges) > len(host.edges):
        return None
    hlabels = [host_lab[v] for v in host.vertices]
    hidx = {v: i for i, v in enumerate(host.vertices)}
    hadj = [frozenset(hidx[w] for w in host.neighbors(v)) for v in host.vertices]
    hdeg = [len(a) for a in hadj]
    n = g.order
    gnbrs = [[g.index(w) for w in g.neighbors(v)] for v in g.vertices]
    gdeg = [len(a) for a in gnbrs]
    if not _degree_dominated(gdeg, hdeg):
        return None
    top = x.max
    carries_top = [top in s for s in hlabels]  # adjacent only to {0} in the host

    assign: list[int | None] = [None] * n
    used = [False] * len(hlabels)
    zero_owner: list[int | None] = [None]

    def extend(i: int) -> bool:
        stats[0] += 1
        if i == n:
            return True
        nb = gnbrs[i]
        for h in range(len(hlabels)):
            if used[h] or gdeg[i] > hdeg[h]:
                continue
            if any(assign[w] is not None and assign[w] not in hadj[h] for w in nb):
                continue
            # the {0}-image must dominate every vertex carrying max(X)
            if carries_top[h] and zero_owner[0] is not None and zero_owner[0] not in nb:
                continue
            if h == 0 and any(assign[w] is not None and carries_top[assign[w]] and w not in nb for w in range(i)):
                continue
            assign[i] = h
            used[h] = True
            if h == 0:
                zero_owner[0] = i
            if extend(i + 1):
                return True
            assign[i] = None
            used[h] = False
            if h == 0:
                zero_owner[0] = None
        return False

    if not extend(0):
        return None
    return Labeling({v: hlabels[assign[i]] for i, v in enumerate(g.vertices)}, x)


def candidate_grounds(size: int, bound: int) -> Iterator[IntSet]:
    """Ground sets ``X`` with ``0 in X``, ``|X| = size``, ``X <= {0..bound}``, ascending."""
    for rest in combinations(range(1, bound + 1), size - 1):
        yield IntSet((0,) + rest)


def search_iasfl(g: Graph, universe_bound: int = 8) -> SearchResult:
    """Decide whether ``g`` admits an IASFL over some ground set inside ``{0..universe_bound}``."""
    if universe_bound < 1:
        raise InputError("universe bound must be at least 1")
    n = power_of_two_exponent(g.order)
    if n is None:
        return SearchResult(
            "UNSAT",
            searched_universe="none (order rejected)",
            reason=f"order {g.order} is not 2^{{n-1}}",
        )
    if universe_bound + 1 < n:
        raise InputError(f"bound {universe_bound} admits no {n}-element ground set")
    stats = [0]
    count = 0
    for x in candidate_grounds(n, universe_bound):
        count += 1
        w = _search_ground(g, x, stats)
        if w is not None:
            return SearchResult("SAT", w, stats[0], f"X = {x}")
    return SearchResult(
        "UNSAT",
        explored=stats[0],
        searched_universe=f"X <= {{0..{universe_bound}}}, 0 in X, |X| = {n} ({count} ground sets)",
        reason=f"no IASFL over any of {count} ground sets",
    )


def search_on_ground(g: Graph, x: IntSet) -> SearchResult:
    """Same decision procedure restricted to one ground set."""
    if 0 not in x or power_of_two_exponent(g.order) != len(x):
        return SearchResult("UNSAT", searched_universe=f"X = {x}", reason="order does not match 2^(|X|-1)")
    stats = [0]
    w = _search_ground(g, x, stats)
    return SearchResult("SAT" if w else "UNSAT", w, stats[0], f"X = {x}")


@dataclass
class OracleResult:
    count: int
    labelings: list[Labeling] = field(default_factory=list)


def iter_labelings(g: Graph, x: IntSet) -> Iterator[Labeling]:
    """Every injective labeling by non-empty subsets of ``x`` whose edge labels stay in ``x``.

    Yields in canonical order: vertex order of ``g``, then canonical set order.
    """
    pool = list(subsets(x))
    n = g.order
    nbrs = [[g.index(w) for w in g.neighbors(v) if g.index(w) < i] for i, v in enumerate(g.vertices)]
    assign: list[IntSet | None] = [None] * n
    used: set[IntSet] = set()

    def rec(i: int) -> Iterator[Labeling]:
        if i == n:
            yield Labeling(dict(zip(g.vertices, assign)), x)
            return
        for s in pool:
            if s in used:
                continue
            if any(not (s + assign[w]) <= x for w in nbrs[i]):
                continue
            assign[i] = s
            used.add(s)
            yield from rec(i + 1)
            used.discard(s)
        assign[i] = None

    yield from rec(0)


def enumerate_labelings(
    g: Graph,
    x: IntSet,
    predicate: str,
    *,
    collect: bool = True,
    override_guard: bool = False,
) -> OracleResult:
    """Brute-force count of labelings of ``g`` over ``x`` satisfying ``predicate``."""
    if predicate not in PREDICATES:
        raise InputError(f"unknown predicate {predicate!r}; choose from {', '.join(PREDICATES)}")
    if not override_guard and (g.order > ORACLE_MAX_VERTICES or len(x) > ORACLE_MAX_GROUND):
        raise ScaleGuardError(
            f"oracle limited to |V| <= {ORACLE_MAX_VERTICES} and |X| <= {ORACLE_MAX_GROUND} "
            f"(got |V| = {g.order}, |X| = {len(x)}); pass an explicit override to proceed"
        )
    result = OracleResult(0)
    for f in iter_labelings(g, x):
        if getattr(classify(g, f), predicate).holds:
            result.count += 1
            if collect:
                result.labelings.append(f)
    return result


def small_graphs(max_order: int, min_order: int = 2) -> Iterator[Graph]:
    """All labeled graphs on ``v0..v{n-1}`` without isolated vertices, ``min_order <= n <= max_order``."""
    for n in range(min_order, max_order + 1):
        names = tuple(f"v{i}" for i in range(n))
        pairs = list(combinations(names, 2))
        for mask in range(1, 1 << len(pairs)):
            edges = tuple(p for k, p in enumerate(pairs) if mask >> k & 1)
            touched = {v for e in edges for v in e}
            if len(touched) == n:
                yield Graph(names, edges)


def iter_iasfls(x: IntSet) -> Iterator[tuple[Graph, Labeling]]:
    """Every IASFL over ``x`` up to renaming vertices.

    Such a labeling is a bijection onto the 0-subsets of ``x`` whose edges
    are sumset-compatible, so it is a spanning subgraph of the maximal
    graph (without isolated vertices) carrying the identity labeling.
    """
    host, lab = build_max_iasf_graph(x)
    edges = host.edges
    for mask in range(1, 1 << len(edges)):
        chosen = tuple(e for k, e in enumerate(edges) if mask >> k & 1)
        if len({v for e in chosen for v in e}) == host.order:
            yield Graph(host.vertices, chosen), lab


def label_graph_key(g: Graph, f: Labeling) -> frozenset:
    """Vertex-name-free fingerprint: the set of labeled edges."""
    return frozenset(frozenset((f[u], f[v])) for u, v in g.edges)


def canonical_witness_key(g: Graph, f: Labeling) -> tuple:
    return (f.ground.canonical_key(), tuple(f[v].canonical_key() for v in g.vertices))


__all__ = [
    "SearchResult",
    "OracleResult",
    "build_max_iasf_graph",
    "search_iasfl",
    "search_on_ground",
    "enumerate_labelings",
    "iter_labelings",
    "iter_iasfls",
    "small_graphs",
    "candidate_grounds",
    "label_graph_key",
    "canonical_witness_key",
    "power_of_two_exponent",
    "canonical_sorted",
]
