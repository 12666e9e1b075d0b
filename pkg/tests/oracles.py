"""Independent brute-force reference implementations.

Plain ``frozenset`` arithmetic only; nothing here imports ``iasfl`` so the
checks cannot share a bug with the code under test.
"""

from itertools import chain, combinations, permutations


def powerset(xs, nonempty=False):
    xs = sorted(xs)
    start = 1 if nonempty else 0
    return [frozenset(c) for c in chain.from_iterable(combinations(xs, k) for k in range(start, len(xs) + 1))]


def sumset(a, b):
    return frozenset(x + y for x in a for y in b)


def difference_set(a):
    return frozenset(abs(x - y) for x in a for y in a if x != y)


def is_ap(a):
    xs = sorted(a)
    if len(xs) < 3:
        return False
    return len({y - x for x, y in zip(xs, xs[1:])}) == 1


def is_filter(family, universe):
    fam = set(family)
    if frozenset(universe) not in fam or frozenset() in fam:
        return False
    if any(a & b not in fam for a in fam for b in fam):
        return False
    subs = powerset(universe, nonempty=True)
    return all(b in fam for a in fam for b in subs if a <= b)


def is_topology(family, universe):
    fam = set(family)
    if frozenset() not in fam or frozenset(universe) not in fam:
        return False
    members = list(fam)
    # arbitrary unions and intersections via every subfamily
    for k in range(1, len(members) + 1):
        for sub in combinations(members, k):
            if frozenset().union(*sub) not in fam:
                return False
            if frozenset.intersection(*sub) not in fam:
                return False
    return True


def max_graph(universe):
    """Vertices (0-subsets) and edges (pairs whose sumset stays in X) of the maximal graph."""
    verts = [s for s in powerset(universe, nonempty=True) if 0 in s]
    edges = {frozenset((a, b)) for a, b in combinations(verts, 2) if sumset(a, b) <= frozenset(universe)}
    return verts, edges


def labelings(vertices, edges, universe):
    """All injective non-empty labelings whose edge sums stay inside ``universe``."""
    pool = powerset(universe, nonempty=True)
    u = frozenset(universe)
    for combo in permutations(pool, len(vertices)):
        f = dict(zip(vertices, combo))
        if all(sumset(f[a], f[b]) <= u for a, b in edges):
            yield f


def iasfl_brute(vertices, edges, universe):
    """IASFL straight from the definition: IASL whose vertex labels form a proper filter."""
    return [f for f in labelings(vertices, edges, universe) if is_filter(f.values(), universe)]
