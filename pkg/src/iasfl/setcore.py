"""Finite sets of non-negative integers, sumsets, filters and topologies.

An :class:`IntSet` is backed by a Python ``int`` used as a bit mask, so
sumsets, subset tests and intersections are a handful of integer ops and
there is no word-size ceiling.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import EmptyLabelError, InputError


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class IntSet:
    """Immutable finite set of non-negative integers.

    Comparison operators follow ``frozenset`` (``<=`` is subset); use
    :meth:`canonical_key` to sort.  ``a + b`` is the sumset.
    """

    __slots__ = ("mask",)

    def __init__(self, elements: Iterable[int] = ()):
        mask = 0
        for x in elements:
            if isinstance(x, bool) or not isinstance(x, int):
                raise TypeError(f"IntSet elements must be int, got {x!r}")
            if x < 0:
                raise ValueError(f"IntSet elements must be non-negative, got {x}")
            mask |= 1 << x
        object.__setattr__(self, "mask", mask)

    @classmethod
    def from_mask(cls, mask: int) -> "IntSet":
        if mask < 0:
            raise ValueError("mask must be non-negative")
        s = cls.__new__(cls)
        object.__setattr__(s, "mask", mask)
        return s

    @classmethod
    def parse(cls, text: str) -> "IntSet":
        """Parse a set literal such as ``0,1,3``.  Duplicates are rejected."""
        text = text.strip()
        if not text:
            raise InputError("empty set literal")
        seen: list[int] = []
        for tok in text.split(","):
            tok = tok.strip()
            if not tok.isdigit() or not tok.isascii():
                raise InputError(f"bad set literal element {tok!r} in {text!r}")
            x = int(tok)
            if x in seen:
                raise InputError(f"duplicate element {x} in set literal {text!r}")
            seen.append(x)
        return cls(seen)

    def __setattr__(self, name, value):
        raise AttributeError("IntSet is immutable")

    # --- container protocol -------------------------------------------------

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(_bits(self.mask))

    def __iter__(self) -> Iterator[int]:
        return _bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, x: object) -> bool:
        return isinstance(x, int) and x >= 0 and bool(self.mask >> x & 1)

    @property
    def max(self) -> int:
        if not self.mask:
            raise ValueError("max of empty IntSet")
        return self.mask.bit_length() - 1

    @property
    def min(self) -> int:
        if not self.mask:
            raise ValueError("min of empty IntSet")
        return (self.mask & -self.mask).bit_length() - 1

    # --- equality, hashing, ordering -----------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntSet):
            return self.mask == other.mask
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.mask)

    def __le__(self, other: "IntSet") -> bool:
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "IntSet") -> bool:
        return self.mask != other.mask and self <= other

    def __ge__(self, other: "IntSet") -> bool:
        return other <= self

    def __gt__(self, other: "IntSet") -> bool:
        return other < self

    def canonical_key(self) -> tuple[int, tuple[int, ...]]:
        """Shorter sets first, ties broken lexicographically."""
        return (len(self), self.elements)

    # --- set algebra ----------------------------------------------------------

    def __and__(self, other: "IntSet") -> "IntSet":
        return IntSet.from_mask(self.mask & other.mask)

    def __or__(self, other: "IntSet") -> "IntSet":
        return IntSet.from_mask(self.mask | other.mask)

    def __sub__(self, other: "IntSet") -> "IntSet":
        return IntSet.from_mask(self.mask & ~other.mask)

    def __add__(self, other: "IntSet") -> "IntSet":
        if not isinstance(other, IntSet):
            return NotImplemented
        return sumset(self, other)

    # --- text ----------------------------------------------------------------

    def literal(self) -> str:
        return ",".join(map(str, self))

    def name(self) -> str:
        """Vertex-name form, e.g. ``0_1_2``."""
        return "_".join(map(str, self))

    def __str__(self) -> str:
        return "{" + self.literal() + "}"

    def __repr__(self) -> str:
        return f"IntSet({str(self)})"


EMPTY = IntSet()
ZERO = IntSet([0])


def canonical_sorted(sets: Iterable[IntSet]) -> list[IntSet]:
    return sorted(sets, key=IntSet.canonical_key)


def subsets(universe: IntSet, containing: IntSet = EMPTY, *, nonempty: bool = True) -> Iterator[IntSet]:
    """Subsets of ``universe`` that contain ``containing``, in canonical order."""
    if not containing <= universe:
        return
    free = (universe - containing).elements
    base = containing.mask
    for k in range(len(free) + 1):
        for combo in combinations(free, k):
            mask = base
            for x in combo:
                mask |= 1 << x
            if nonempty and not mask:
                continue
            yield IntSet.from_mask(mask)
    # combinations over ascending ``free`` plus a fixed base gives lexicographic
    # order within each size, so the stream is canonical.


def sumset(a: IntSet, b: IntSet) -> IntSet:
    """``{x + y : x in a, y in b}``."""
    if not a or not b:
        raise EmptyLabelError()
    if len(a) > len(b):
        a, b = b, a
    mask = 0
    for x in a:
        mask |= b.mask << x
    return IntSet.from_mask(mask)


def difference_set(a: IntSet) -> IntSet:
    """All positive differences between elements of ``a``."""
    if not a:
        raise EmptyLabelError("difference set of an empty set")
    mask = 0
    for x in a:
        mask |= a.mask >> x
    return IntSet.from_mask(mask & ~1)


def is_ap_set(a: IntSet) -> bool:
    """True iff ``a`` has at least three elements in arithmetic progression."""
    if not a:
        raise EmptyLabelError("AP test on an empty set")
    xs = a.elements
    if len(xs) < 3:
        return False
    step = xs[1] - xs[0]
    return all(xs[i + 1] - xs[i] == step for i in range(len(xs) - 1))


@dataclass(frozen=True)
class Verdict:
    """Outcome of a predicate.

    ``holds`` is ``None`` when the predicate does not apply (for example a
    ground-relative labeling type on a labeling without a ground set).
    """

    holds: bool | None
    axiom: str | None = None
    witness: str | None = None

    def __bool__(self) -> bool:
        return bool(self.holds)

    @classmethod
    def true(cls) -> "Verdict":
        return cls(True)

    @classmethod
    def false(cls, witness: str, axiom: str | None = None) -> "Verdict":
        return cls(False, axiom, witness)

    @classmethod
    def not_applicable(cls) -> "Verdict":
        return cls(None)


@dataclass(frozen=True)
class SetFamily:
    """Distinct subsets of ``universe``, stored in canonical order."""

    members: tuple[IntSet, ...]
    universe: IntSet

    def __post_init__(self):
        members = canonical_sorted(self.members)
        for m in members:
            if not m <= self.universe:
                raise InputError(f"family member {m} is not a subset of {self.universe}")
        for a, b in zip(members, members[1:]):
            if a == b:
                raise InputError(f"duplicate family member {a}")
        object.__setattr__(self, "members", tuple(members))

    def __contains__(self, s: IntSet) -> bool:
        return s in self._index

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[IntSet]:
        return iter(self.members)

    @property
    def _index(self) -> frozenset[IntSet]:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = frozenset(self.members)
            object.__setattr__(self, "_idx", idx)
        return idx


def _missing_superset(fam: SetFamily, a: IntSet) -> IntSet | None:
    for b in subsets(fam.universe, a):
        if b != a and b not in fam:
            return b
    return None


def is_filter(fam: SetFamily) -> Verdict:
    """Proper filter test on a finite universe.

    Axioms are checked in order (i) universe present, (ii) pairwise
    intersections, (iii) no empty member, (iv) up-closure.  The first
    failing axiom is reported with its canonically smallest witness.
    """
    if not fam.universe:
        raise InputError("filter universe must be non-empty")
    if fam.universe not in fam:
        return Verdict.false(f"{fam.universe} missing", "i")
    ms = fam.members
    for i, a in enumerate(ms):
        for b in ms[i + 1:]:
            c = a & b
            if c not in fam:
                return Verdict.false(f"{a} & {b} = {c} missing", "ii")
    if EMPTY in fam:
        return Verdict.false("{} is a member", "iii")
    # one-step up-closure is equivalent to full up-closure on a finite universe
    closed = all(
        IntSet.from_mask(a.mask | 1 << x) in fam
        for a in ms
        for x in fam.universe - a
    )
    if not closed:
        for a in ms:
            b = _missing_superset(fam, a)
            if b is not None:
                return Verdict.false(f"{a} < {b} missing", "iv")
    return Verdict.true()


def is_topology(fam: SetFamily) -> Verdict:
    """Topology test: contains empty set and universe, closed under pairwise union and intersection."""
    if not fam.universe:
        raise InputError("topology universe must be non-empty")
    if EMPTY not in fam:
        return Verdict.false("{} missing", "empty")
    if fam.universe not in fam:
        return Verdict.false(f"{fam.universe} missing", "universe")
    ms = fam.members
    for i, a in enumerate(ms):
        for b in ms[i + 1:]:
            u = a | b
            if u not in fam:
                return Verdict.false(f"{a} | {b} = {u} missing", "union")
            c = a & b
            if c not in fam:
                return Verdict.false(f"{a} & {b} = {c} missing", "intersection")
    return Verdict.true()
