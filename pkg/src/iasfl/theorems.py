"""Machine check of the IASFL results at desk scale.

``run_theorem_suite`` evaluates ten items for every ground set
``X = {0, ..., k-1}``, ``2 <= k <= max_ground_size``.  Two corpora feed it:

* small graphs: every labeled graph on at most four vertices with every
  ground-respecting injective labeling over ``X`` (only while ``|X| <= 4``);
* IASFLs: every spanning subgraph of the maximal IASF-graph of ``X`` with the
  identity labeling (``|X| <= 4``), or for ``|X| = 5`` the maximal graph,
  its single non-leaf-edge deletions and its star skeleton.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field, replace
from itertools import combinations

from .errors import InputError
from .graph import Graph, graph_shape
from .labeling import ClassificationReport, Labeling, classify, extract_chain, induced_edge_labels
from .search import build_max_iasf_graph, iter_iasfls, iter_labelings, search_iasfl, small_graphs
from .setcore import ZERO, IntSet, difference_set, subsets, sumset


@dataclass
class SuiteConfig:
    max_ground_size: int = 4
    small_graph_order: int = 4
    small_graph_ground_cap: int = 4
    full_iasfl_ground_cap: int = 4
    pair_range: int = 8
    random_graphs: int = 1000
    seed: int = 20161


@dataclass
class SuiteItem:
    number: int
    description: str
    passed: bool = True
    witness: str | None = None
    checked: int = 0

    def fail(self, witness: str) -> None:
        if self.passed:
            self.passed = False
            self.witness = witness

    def line(self) -> str:
        if self.passed:
            return f"PASS item-{self.number} {self.description} ({self.checked} checks)"
        return f"FAIL item-{self.number} {self.description}: {self.witness}"


@dataclass
class SuiteReport:
    max_ground_size: int
    items: list[SuiteItem] = field(default_factory=list)
    facts: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(i.passed for i in self.items)

    def lines(self) -> list[str]:
        return [i.line() for i in self.items]

    def to_json(self) -> str:
        return json.dumps(
            {
                "max_ground_size": self.max_ground_size,
                "passed": self.passed,
                "items": [asdict(i) for i in self.items],
                "facts": self.facts,
            },
            indent=2,
            sort_keys=True,
        )


def random_graph(rng: random.Random, order: int, p: float = 0.4, prefix: str = "v") -> Graph:
    """Random graph on ``order`` vertices; isolated vertices get one random edge."""
    names = [f"{prefix}{i}" for i in range(order)]
    edges = {(a, b) for a, b in combinations(names, 2) if rng.random() < p}
    for v in names:
        if not any(v in e for e in edges):
            w = rng.choice([u for u in names if u != v])
            edges.add((v, w) if names.index(v) < names.index(w) else (w, v))
    return Graph(tuple(names), tuple(sorted(edges)))


def random_labeled_graphs(count: int, seed: int, max_element: int = 12, max_order: int = 8):
    """Seeded random graphs with injective labels drawn from subsets of ``{0..max_element}``.

    Label sizes favour singletons and pairs so that weak and strong labelings
    both occur with reasonable frequency.
    """
    rng = random.Random(seed)
    pool = list(range(max_element + 1))
    for _ in range(count):
        g = random_graph(rng, rng.randint(2, max_order))
        labels: set[IntSet] = set()
        while len(labels) < g.order:
            labels.add(IntSet(rng.sample(pool, rng.choice((1, 1, 2, 2, 3, 4)))))
        ordered = sorted(labels, key=lambda s: rng.random())
        yield g, Labeling(dict(zip(g.vertices, ordered)))


def lemma_pair_mismatches(limit: int) -> tuple[int, int, list[str]]:
    """Compare both sumset-cardinality lemmas over all pairs of non-empty subsets of ``{0..limit}``."""
    sets = list(subsets(IntSet(range(limit + 1))))
    diffs = [difference_set(s) for s in sets]
    sizes = [len(s) for s in sets]
    checked = 0
    bad: list[str] = []
    for i, a in enumerate(sets):
        for j, b in enumerate(sets):
            n = len(sumset(a, b))
            checked += 1
            weak = n == max(sizes[i], sizes[j])
            if weak != (min(sizes[i], sizes[j]) == 1):
                bad.append(f"weak {a},{b}")
            strong = n == sizes[i] * sizes[j]
            if strong != (not (diffs[i] & diffs[j])):
                bad.append(f"strong {a},{b}")
    return checked, len(bad), bad[:5]


def chain_problems(f: Labeling, a: IntSet) -> str | None:
    chain = extract_chain(f, a)
    labels = set(f.labels())
    if chain[0] != ZERO or chain[-1] != f.ground:
        return f"chain for {a} does not run from {{0}} to X"
    if a not in chain:
        return f"chain misses {a}"
    for c, d in zip(chain, chain[1:]):
        if not (c < d and len(d) == len(c) + 1):
            return f"chain for {a} not saturated at {c} -> {d}"
    for c in chain:
        if c not in labels:
            return f"chain member {c} not a vertex label"
    return None


def _degraded(g: Graph, f: Labeling) -> list[tuple[Graph, Labeling]]:
    """Single non-leaf-edge deletions of ``g``."""
    out = []
    for u, v in g.edges:
        if g.degree(u) > 1 and g.degree(v) > 1:
            out.append((g.remove_edge(u, v), f))
    return out


def _star_of(g: Graph, f: Labeling) -> tuple[Graph, Labeling]:
    z = next(v for v in g.vertices if f[v] == ZERO)
    return Graph(g.vertices, tuple((z, v) for v in g.vertices if v != z)), f


def _iasfl_corpus(x: IntSet, cfg: SuiteConfig) -> list[tuple[Graph, Labeling]]:
    if len(x) <= cfg.full_iasfl_ground_cap:
        return list(iter_iasfls(x))
    g, f = build_max_iasf_graph(x)
    return [(g, f), _star_of(g, f)] + _degraded(g, f)


def run_theorem_suite(max_ground_size: int, config: SuiteConfig | None = None) -> SuiteReport:
    if not 2 <= max_ground_size <= 5:
        raise InputError(f"max ground size must be between 2 and 5, got {max_ground_size}")
    cfg = replace(config or SuiteConfig(), max_ground_size=max_ground_size)
    rep = SuiteReport(max_ground_size)
    items = {
        1: SuiteItem(1, "IASFL and EIASL characterizations agree with definitions"),
        2: SuiteItem(2, "maximal graph has 2^(|X|-1) vertices and >= 2^(|X|-2) pendants on {0}"),
        3: SuiteItem(3, "edge labels of an IASFL are vertex labels"),
        4: SuiteItem(4, "an IASFL has exactly one singleton label, {0}"),
        5: SuiteItem(5, "every vertex label lies on a saturated chain from {0} to X"),
        6: SuiteItem(6, "IASFL implies EIASL, TIASL, not IASGL, not IASSL, not arithmetic"),
        7: SuiteItem(7, "IASFL and WIASL iff star; strong IASFL has adjacent intersections {0}"),
        8: SuiteItem(8, "non-leaf edge removal keeps IASFL; leaf vertex removal can break it"),
        9: SuiteItem(9, "odd-order graphs admit no IASFL"),
        10: SuiteItem(10, "WIASL and SIASL lemma characterizations agree with definitions"),
    }
    non_hereditary: list[str] = []

    for k in range(2, max_ground_size + 1):
        x = IntSet(range(k))
        small: list[tuple[Graph, Labeling, ClassificationReport]] = []
        if k <= cfg.small_graph_ground_cap:
            for g in small_graphs(cfg.small_graph_order):
                for f in iter_labelings(g, x):
                    small.append((g, f, classify(g, f)))
        corpus = [(g, f, classify(g, f)) for g, f in _iasfl_corpus(x, cfg)]
        iasfls = corpus + [t for t in small if t[2].iasfl]

        # 1
        for g, f, r in small + corpus:
            items[1].checked += 1
            if r.iasfl.holds != r.iasfl_by_characterization.holds:
                items[1].fail(f"iasfl mismatch on {f}")
            if r.eiasl.holds != r.eiasl_by_characterization.holds:
                items[1].fail(f"eiasl mismatch on {f}")

        # 2
        host, hl = build_max_iasf_graph(x)
        pend = [v for v in host.vertices if host.degree(v) == 1]
        zero = ZERO.name()
        rep.facts[f"max_graph_{k}"] = {"vertices": host.order, "edges": len(host.edges), "pendants": len(pend)}
        items[2].checked += 1
        if host.order != 2 ** (k - 1):
            items[2].fail(f"|X|={k}: {host.order} vertices")
        if len(pend) < 2 ** (k - 2):
            items[2].fail(f"|X|={k}: only {len(pend)} pendants")
        for v in host.vertices:
            if x.max in hl[v] and host.neighbors(v) != {zero}:
                items[2].fail(f"|X|={k}: {v} carries max(X) but has neighbors {sorted(host.neighbors(v))}")
        if not classify(host, hl).iasfl:
            items[2].fail(f"|X|={k}: maximal graph is not an IASFL")

        for g, f, r in iasfls:
            labels = set(f.labels())
            # 3
            items[3].checked += 1
            for (u, v), s in induced_edge_labels(g, f).items():
                if s not in labels:
                    items[3].fail(f"edge {u}-{v} label {s} not a vertex label in {f}")
            # 4
            items[4].checked += 1
            singles = [s for s in f.labels() if len(s) == 1]
            if singles != [ZERO]:
                items[4].fail(f"singleton labels {singles} in {f}")
            # 6
            items[6].checked += 1
            if not (r.eiasl and r.tiasl and r.iasgl.holds is False and r.iassl.holds is False
                    and r.arithmetic.holds is False):
                items[6].fail(f"relation broken on {f}")
            # 7
            items[7].checked += 1
            if bool(r.wiasl) != graph_shape(g).is_star:
                items[7].fail(f"wiasl={r.wiasl.holds} but star={graph_shape(g).is_star} on {f}")
            if r.siasl:
                for u, v in g.edges:
                    if f[u] & f[v] != ZERO:
                        items[7].fail(f"strong IASFL edge {u}-{v} meets in {f[u] & f[v]}")
            # 9
            items[9].checked += 1
            if g.order != 2 ** (len(f.ground) - 1) or g.order % 2:
                items[9].fail(f"IASFL on {g.order} vertices with |X|={len(f.ground)}")

        # 5
        for f in {hl.key(): hl, **{t[1].key(): t[1] for t in small if t[2].iasfl}}.values():
            for a in f.labels():
                items[5].checked += 1
                problem = chain_problems(f, a)
                if problem:
                    items[5].fail(problem)

        # 8
        for g2, f2 in _degraded(host, hl):
            items[8].checked += 1
            if not classify(g2, f2).iasfl:
                items[8].fail(f"|X|={k}: removing a non-leaf edge broke IASFL ({g2.edges})")
        if k >= 3:
            for v in pend:
                items[8].checked += 1
                g2 = host.remove_vertex(v)
                if not classify(g2, hl.restrict(g2.vertices)).iasfl:
                    non_hereditary.append(f"|X|={k} minus {v}")

        # 9 (oracle side): odd-order small graphs never classify as IASFL
        for g, f, r in small:
            if g.order % 2:
                items[9].checked += 1
                if r.iasfl:
                    items[9].fail(f"odd-order IASFL {f}")

        # 10 (graph level)
        for g, f, r in small:
            items[10].checked += 1
            if r.wiasl.holds != r.wiasl_by_characterization.holds:
                items[10].fail(f"wiasl mismatch on {f}")
            if r.siasl.holds != r.siasl_by_characterization.holds:
                items[10].fail(f"siasl mismatch on {f}")

    if max_ground_size >= 3 and not non_hereditary:
        items[8].fail("no leaf-vertex deletion broke the IASFL")
    rep.facts["non_hereditary_examples"] = non_hereditary[:4]

    # 9 (search side)
    for g in small_graphs(5, min_order=3):
        if g.order % 2:
            items[9].checked += 1
            if search_iasfl(g, 4).sat:
                items[9].fail(f"search found an IASFL on odd-order graph {g.edges}")

    # 10 (set level and random graphs)
    checked, nbad, bad = lemma_pair_mismatches(cfg.pair_range)
    items[10].checked += checked
    if nbad:
        items[10].fail(f"{nbad} pair mismatches, e.g. {bad[0]}")
    for g, f in random_labeled_graphs(cfg.random_graphs, cfg.seed):
        items[10].checked += 1
        r = classify(g, f)
        if r.wiasl.holds != r.wiasl_by_characterization.holds or r.siasl.holds != r.siasl_by_characterization.holds:
            items[10].fail(f"random graph mismatch on {f}")

    rep.items = [items[i] for i in sorted(items)]
    return rep
