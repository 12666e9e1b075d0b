"""Set-labelings of graphs, induced edge labels, and the labeling classifiers.

Every characterised labeling type is evaluated twice, once from its
definition and once from its characterisation, with no shortcut from one
to the other.  The equivalences are what the test-suite checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from typing import Iterator, Mapping

from .errors import GroundViolation, InputError, NotAnIASFL, NotAnIASL
from .graph import Graph
from .setcore import (
    EMPTY,
    ZERO,
    IntSet,
    SetFamily,
    Verdict,
    difference_set,
    is_ap_set,
    is_filter,
    is_topology,
    subsets,
    sumset,
)

Edge = tuple[str, str]


@dataclass(frozen=True)
class Labeling:
    """Vertex → set assignment with an optional ground set.

    Construction does not enforce injectivity or non-emptiness; those are
    reported by :func:`validate_iasl` so that bad labelings can be diagnosed.
    """

    assignment: Mapping[str, IntSet]
    ground: IntSet | None = None

    def __getitem__(self, v: str) -> IntSet:
        return self.assignment[v]

    def labels(self) -> list[IntSet]:
        return list(self.assignment.values())

    def key(self) -> tuple:
        return (self.ground, tuple(sorted(self.assignment.items())))

    def restrict(self, vertices) -> "Labeling":
        return Labeling({v: self.assignment[v] for v in vertices}, self.ground)

    def to_text(self, order=None) -> str:
        order = order if order is not None else list(self.assignment)
        head = f"ground: {self.ground.literal()}\n" if self.ground is not None else ""
        return head + "".join(f"{v}: {self.assignment[v].literal()}\n" for v in order)

    def __str__(self) -> str:
        body = ", ".join(f"{v}={s}" for v, s in self.assignment.items())
        if self.ground is not None:
            body += f"; X={self.ground}"
        return body


def parse_labeling(text: str | bytes, g: Graph, source: str | None = None) -> Labeling:
    """Parse ``ground: <set>`` (optional, first) then ``<vertex>: <set>`` lines."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InputError(f"not UTF-8: {exc}", source) from None
    ground = None
    assignment: dict[str, IntSet] = {}
    seen_body = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, sep, rest = line.partition(":")
        name = name.strip()
        if not sep:
            raise InputError(f"expected '<vertex>: <set>', got {line!r}", source, lineno)
        try:
            s = IntSet.parse(rest)
        except InputError as exc:
            raise InputError(exc.message, source, lineno) from None
        if name == "ground" and "ground" not in g.vertices:
            if seen_body or ground is not None:
                raise InputError("ground header must come first and only once", source, lineno)
            ground = s
            continue
        seen_body = True
        if name not in g.vertices:
            raise InputError(f"unknown vertex {name!r}", source, lineno)
        if name in assignment:
            raise InputError(f"vertex {name!r} labeled twice", source, lineno)
        assignment[name] = s
    missing = [v for v in g.vertices if v not in assignment]
    if missing:
        raise InputError(f"missing label for vertex {missing[0]!r}", source)
    return Labeling({v: assignment[v] for v in g.vertices}, ground)


def induced_edge_labels(g: Graph, f: Labeling, *, check_ground: bool = True) -> dict[Edge, IntSet]:
    """Map every edge ``uv`` to ``f(u) + f(v)``."""
    for v in g.vertices:
        if v not in f.assignment:
            raise InputError(f"vertex {v!r} has no label")
    out = {}
    for u, v in g.edges:
        s = sumset(f[u], f[v])
        if check_ground and f.ground is not None and not s <= f.ground:
            raise GroundViolation((u, v), s, f.ground)
        out[(u, v)] = s
    return out


@dataclass(frozen=True)
class IASLVerdict:
    iasl: Verdict
    iasi: Verdict


def validate_iasl(g: Graph, f: Labeling) -> IASLVerdict:
    def fail(w: str) -> IASLVerdict:
        return IASLVerdict(Verdict.false(w), Verdict.false(w))

    for v in g.vertices:
        if v not in f.assignment:
            return fail(f"vertex {v} unlabeled")
    for v in g.vertices:
        if not f[v]:
            return fail(f"vertex {v} has the empty label")
    owner: dict[IntSet, str] = {}
    for v in g.vertices:
        if f[v] in owner:
            return fail(f"vertices {owner[f[v]]} and {v} share label {f[v]}")
        owner[f[v]] = v
    if f.ground is not None:
        for v in g.vertices:
            if not f[v] <= f.ground:
                return fail(f"vertex {v} label {f[v]} not a subset of X={f.ground}")
    edge_labels = induced_edge_labels(g, f, check_ground=False)
    if f.ground is not None:
        for (u, v), s in edge_labels.items():
            if not s <= f.ground:
                return fail(f"edge {u}-{v} label {s} not a subset of X={f.ground}")
    seen: dict[IntSet, Edge] = {}
    for e, s in edge_labels.items():
        if s in seen:
            d = seen[s]
            return IASLVerdict(
                Verdict.true(),
                Verdict.false(f"edges {d[0]}-{d[1]} and {e[0]}-{e[1]} share label {s}"),
            )
        seen[s] = e
    return IASLVerdict(Verdict.true(), Verdict.true())


@dataclass(frozen=True)
class ClassificationReport:
    iasl: Verdict
    iasi: Verdict
    iasfl: Verdict
    iasfl_by_characterization: Verdict
    eiasl: Verdict
    eiasl_by_characterization: Verdict
    tiasl: Verdict
    iasgl: Verdict
    iassl: Verdict
    wiasl: Verdict
    wiasl_by_characterization: Verdict
    siasl: Verdict
    siasl_by_characterization: Verdict
    arithmetic: Verdict
    uniform_k: int | None = None

    @classmethod
    def field_names(cls) -> list[str]:
        return [f.name for f in fields(cls)]

    def verdicts(self) -> Iterator[tuple[str, Verdict]]:
        for name in self.field_names():
            value = getattr(self, name)
            if isinstance(value, Verdict):
                yield name, value

    def to_dict(self) -> dict:
        out: dict = {}
        for name, v in self.verdicts():
            out[name] = {"holds": v.holds, "witness": v.witness}
        out["uniform_k"] = self.uniform_k
        return out

    def to_lines(self) -> list[str]:
        lines = []
        for name, v in self.verdicts():
            if v.holds is None:
                lines.append(f"{name}: not-applicable")
            elif v.holds:
                lines.append(f"{name}: true")
            else:
                lines.append(f"{name}: false ({v.witness})")
        k = "absent" if self.uniform_k is None else str(self.uniform_k)
        lines.append(f"uniform_k: {k}")
        return lines


PREDICATES = tuple(n for n in ClassificationReport.field_names() if n != "uniform_k")


def _edge(e: Edge) -> str:
    return f"{e[0]}-{e[1]}"


def _exhausts(family: set[IntSet], x: IntSet) -> Verdict:
    """Does ``family`` equal P(X) minus {empty, {0}}?"""
    target_size = (1 << len(x)) - 1 - (1 if 0 in x else 0)
    if ZERO in family:
        return Verdict.false("{0} is used")
    for s in family:
        if not s <= x:
            return Verdict.false(f"{s} not a subset of X")
    if len(family) != target_size:
        # walk P(X) in canonical order until the first gap; at most |family|+2 steps
        for s in subsets(x):
            if s != ZERO and s not in family:
                return Verdict.false(f"{s} missing")
    return Verdict.true()


def _iasfl_characterization(f: Labeling, order: tuple[str, ...]) -> Verdict:
    x = f.ground
    if 0 not in x:
        return Verdict.false("0 not in X", "i")
    labels = set(f.labels())
    for s in subsets(x, ZERO):
        if s not in labels:
            return Verdict.false(f"{s} is not a vertex label", "ii")
    for v in order:
        if 0 not in f[v]:
            return Verdict.false(f"vertex {v} label {f[v]} lacks 0", "iii")
    return Verdict.true()


def classify(g: Graph, f: Labeling) -> ClassificationReport:
    """Evaluate every labeling type on an IASL.

    Ground-relative types (iasfl, tiasl, iasgl, iassl) are not-applicable
    when ``f`` has no ground set.
    """
    base = validate_iasl(g, f)
    if not base.iasl:
        raise NotAnIASL(base.iasl.witness)
    order = g.vertices
    edge_labels = induced_edge_labels(g, f)
    vlabels = [f[v] for v in order]

    if f.ground is not None:
        x = f.ground
        iasfl = is_filter(SetFamily(tuple(vlabels), x))
        iasfl_c = _iasfl_characterization(f, order)
        tiasl = is_topology(SetFamily(tuple(vlabels) + (EMPTY,), x))
        iasgl = _exhausts(set(edge_labels.values()), x)
        iassl = _exhausts(set(vlabels) | set(edge_labels.values()), x)
    else:
        iasfl = iasfl_c = tiasl = iasgl = iassl = Verdict.not_applicable()

    eiasl = Verdict.true()
    for e, s in edge_labels.items():
        u, v = e
        if not (f[u] <= s and f[v] <= s):
            bad = u if not f[u] <= s else v
            eiasl = Verdict.false(f"edge {_edge(e)}: f({bad})={f[bad]} not inside {s}")
            break
    eiasl_c = Verdict.true()
    for v in order:
        if 0 not in f[v]:
            eiasl_c = Verdict.false(f"vertex {v} label {f[v]} lacks 0")
            break

    wiasl = Verdict.true()
    wiasl_c = Verdict.true()
    siasl = Verdict.true()
    siasl_c = Verdict.true()
    for e, s in edge_labels.items():
        a, b = f[e[0]], f[e[1]]
        if wiasl and len(s) != max(len(a), len(b)):
            wiasl = Verdict.false(f"edge {_edge(e)}: |{s}| != max(|{a}|, |{b}|)")
        if wiasl_c and len(a) != 1 and len(b) != 1:
            wiasl_c = Verdict.false(f"edge {_edge(e)}: no mono-indexed end vertex")
        if siasl and len(s) != len(a) * len(b):
            siasl = Verdict.false(f"edge {_edge(e)}: |{s}| != |{a}|*|{b}|")
        if siasl_c:
            common = difference_set(a) & difference_set(b)
            if common:
                siasl_c = Verdict.false(f"edge {_edge(e)}: difference sets share {common}")

    arithmetic = Verdict.true()
    for v in order:
        if not is_ap_set(f[v]):
            arithmetic = Verdict.false(f"vertex {v} label {f[v]} is not an AP-set")
            break
    else:
        for e, s in edge_labels.items():
            if not is_ap_set(s):
                arithmetic = Verdict.false(f"edge {_edge(e)} label {s} is not an AP-set")
                break

    sizes = {len(s) for s in edge_labels.values()}
    return ClassificationReport(
        iasl=base.iasl,
        iasi=base.iasi,
        iasfl=iasfl,
        iasfl_by_characterization=iasfl_c,
        eiasl=eiasl,
        eiasl_by_characterization=eiasl_c,
        tiasl=tiasl,
        iasgl=iasgl,
        iassl=iassl,
        wiasl=wiasl,
        wiasl_by_characterization=wiasl_c,
        siasl=siasl,
        siasl_by_characterization=siasl_c,
        arithmetic=arithmetic,
        uniform_k=sizes.pop() if len(sizes) == 1 else None,
    )


def extract_chain(f: Labeling, a: IntSet) -> list[IntSet]:
    """Saturated chain ``{0} = C1 < C2 < ... < Cr = X`` through ``a`` inside f(V).

    Each step adds the smallest element that keeps the chain inside f(V)
    and still comparable with ``a``.
    """
    if f.ground is None:
        raise NotAnIASFL("labeling has no ground set")
    labels = set(f.labels())
    if a not in labels:
        raise NotAnIASFL(f"{a} is not a vertex label")
    if ZERO not in labels or not is_filter(SetFamily(tuple(labels), f.ground)):
        raise NotAnIASFL("vertex labels do not form a filter containing {0}")
    chain = [ZERO]
    cur = ZERO
    while cur != f.ground:
        for x in f.ground - cur:
            nxt = cur | IntSet([x])
            if nxt in labels and (nxt <= a or a <= nxt):
                break
        else:  # pragma: no cover - unreachable for a filter containing {0}
            raise NotAnIASFL(f"no saturated step above {cur}")
        chain.append(nxt)
        cur = nxt
    return chain


def make_trivial_iasl(g: Graph, mode: str = "plain") -> Labeling:
    """Singleton labeling of every graph: ``{i+1}`` (plain) or ``{2**i}`` (indexer)."""
    if mode == "plain":
        labels = [IntSet([i + 1]) for i in range(g.order)]
    elif mode == "indexer":
        labels = [IntSet([1 << i]) for i in range(g.order)]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    f = Labeling(dict(zip(g.vertices, labels)))
    # edge labels must sit inside X too, so X covers vertex and edge labels
    ground = EMPTY
    for s in labels + list(induced_edge_labels(g, f).values()):
        ground = ground | s
    return Labeling(f.assignment, ground)
