"""Finite posets, monotone maps, and reflexive relations.

All values are immutable after construction and every operation is a pure
function, so everything here is safe to share between concurrent readers.
Subsets of a carrier are plain frozensets of labels, which makes set
equality structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Mapping, Optional

from .errors import InputError

Label = Hashable


@dataclass(frozen=True)
class FinPoset:
    """A finite partial order: unique element labels plus an up-set table.

    ``up[i]`` holds the indices of every element above element ``i``,
    including ``i`` itself.  The relation must be reflexive, transitive and
    antisymmetric; this is checked at construction time.
    """

    elements: tuple
    up: tuple

    def __post_init__(self):
        n = len(self.elements)
        if len(set(self.elements)) != n:
            raise InputError("poset labels must be unique")
        if len(self.up) != n:
            raise InputError("up-set table does not match carrier")
        for i, ups in enumerate(self.up):
            if i not in ups:
                raise InputError(f"relation not reflexive at {self.elements[i]!r}")
            for j in ups:
                if not 0 <= j < n:
                    raise InputError("up-set index out of range")
                if i != j and i in self.up[j]:
                    raise InputError(
                        f"antisymmetry fails between {self.elements[i]!r} "
                        f"and {self.elements[j]!r}"
                    )
                if not self.up[j] <= ups:
                    raise InputError(
                        f"transitivity fails at {self.elements[i]!r} <= {self.elements[j]!r}"
                    )

    @classmethod
    def from_pairs(cls, elements: Iterable, pairs: Iterable, complete: bool = False):
        """Build a poset from ``a <= b`` label pairs.

        With ``complete=True`` the reflexive-transitive closure of the pairs
        is taken first, so inputs may omit implied pairs (this is the JSON
        convention).  Antisymmetry is always enforced.
        """
        elems = tuple(elements)
        index = {e: i for i, e in enumerate(elems)}
        ups = [set([i]) for i in range(len(elems))]
        for a, b in pairs:
            if a not in index or b not in index:
                raise InputError(f"pair ({a!r}, {b!r}) mentions unknown element")
            ups[index[a]].add(index[b])
        if complete:
            ups = _transitive_close_sets(ups)
        return cls(elems, tuple(frozenset(u) for u in ups))

    @classmethod
    def discrete(cls, elements: Iterable):
        elems = tuple(elements)
        return cls(elems, tuple(frozenset([i]) for i in range(len(elems))))

    @classmethod
    def chain(cls, elements: Iterable):
        elems = tuple(elements)
        n = len(elems)
        return cls(elems, tuple(frozenset(range(i, n)) for i in range(n)))

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, label) -> int:
        return self.elements.index(label)

    def leq(self, a, b) -> bool:
        return self.index(b) in self.up[self.index(a)]

    def leq_idx(self, i: int, j: int) -> bool:
        return j in self.up[i]

    def pairs(self) -> Iterator[tuple]:
        for i, ups in enumerate(self.up):
            for j in sorted(ups):
                yield (self.elements[i], self.elements[j])

    def up_set(self, label) -> frozenset:
        return frozenset(self.elements[j] for j in self.up[self.index(label)])

    def down_set(self, label) -> frozenset:
        i = self.index(label)
        return frozenset(e for j, e in enumerate(self.elements) if i in self.up[j])

    def covers(self) -> list:
        """Cover pairs (a, b) with a < b and nothing strictly between."""
        out = []
        for i, ups in enumerate(self.up):
            for j in sorted(ups):
                if j == i:
                    continue
                if any(k != i and k != j and k in ups and j in self.up[k] for k in ups):
                    continue
                out.append((self.elements[i], self.elements[j]))
        return out


def up_closure(x: FinPoset, s: Iterable) -> frozenset:
    """Smallest up-closed superset of ``s`` in ``x``."""
    out = set()
    for label in s:
        out |= {x.elements[j] for j in x.up[x.index(label)]}
    return frozenset(out)


def down_closure(x: FinPoset, s: Iterable) -> frozenset:
    labels = set(s)
    idxs = {x.index(v) for v in labels}
    out = set(labels)
    for j, e in enumerate(x.elements):
        if x.up[j] & idxs:
            out.add(e)
    return frozenset(out)


def is_upset(x: FinPoset, s: Iterable) -> bool:
    s = frozenset(s)
    return up_closure(x, s) == s


def discrete(labels: Iterable) -> FinPoset:
    return FinPoset.discrete(labels)


@dataclass(frozen=True)
class MonotoneMap:
    """A monotone function between finite posets, stored by source index."""

    source: FinPoset
    target: FinPoset
    assignment: tuple

    def __post_init__(self):
        if len(self.assignment) != len(self.source):
            raise InputError("assignment does not cover the source")
        for i, ups in enumerate(self.source.up):
            fi = self.assignment[i]
            for j in ups:
                if self.assignment[j] not in self.target.up[fi]:
                    raise InputError(
                        f"map not monotone at {self.source.elements[i]!r} "
                        f"<= {self.source.elements[j]!r}"
                    )

    @classmethod
    def of_dict(cls, source: FinPoset, target: FinPoset, mapping: Mapping):
        assignment = tuple(target.index(mapping[e]) for e in source.elements)
        return cls(source, target, assignment)

    def of(self, label):
        return self.target.elements[self.assignment[self.source.index(label)]]

    def as_dict(self) -> dict:
        return {e: self.target.elements[self.assignment[i]]
                for i, e in enumerate(self.source.elements)}

    def then(self, other: "MonotoneMap") -> "MonotoneMap":
        """Composite ``other after self``."""
        if self.target is not other.source and self.target != other.source:
            raise InputError("maps do not compose")
        return MonotoneMap(self.source, other.target,
                           tuple(other.assignment[i] for i in self.assignment))


@dataclass(frozen=True)
class Preorder:
    """A reflexive relation on an explicitly indexed carrier.

    Not necessarily transitive or antisymmetric; this is the raw material
    of quotient constructions.  ``rel`` holds index pairs.
    """

    carrier: tuple
    rel: frozenset

    def __post_init__(self):
        n = len(self.carrier)
        for i in range(n):
            if (i, i) not in self.rel:
                raise InputError("preorder must be reflexive")
        for i, j in self.rel:
            if not (0 <= i < n and 0 <= j < n):
                raise InputError("relation index out of range")

    def holds(self, a, b) -> bool:
        return (self.carrier.index(a), self.carrier.index(b)) in self.rel

    def is_transitive(self) -> bool:
        succ = _successor_sets(self)
        return all(succ[j] <= succ[i] for i in range(len(self.carrier)) for j in succ[i])

    def is_antisymmetric(self) -> bool:
        return all(i == j or (j, i) not in self.rel for i, j in self.rel)


def _successor_sets(r: Preorder) -> list:
    succ = [set() for _ in r.carrier]
    for i, j in r.rel:
        succ[i].add(j)
    return succ


def _transitive_close_sets(succ: list) -> list:
    """Close successor sets under reachability (in place on copies)."""
    succ = [set(s) for s in succ]
    for i in range(len(succ)):
        frontier = set(succ[i])
        seen = set(succ[i]) | {i}
        while frontier:
            k = frontier.pop()
            new = succ[k] - seen
            seen |= new
            frontier |= new
        succ[i] = seen | succ[i] | {i}
    return succ


def transitive_closure(r: Preorder) -> Preorder:
    """Smallest transitive relation containing ``r``; idempotent."""
    succ = _transitive_close_sets(_successor_sets(r))
    rel = frozenset((i, j) for i, s in enumerate(succ) for j in s)
    return Preorder(r.carrier, rel)


def poset_quotient(r: Preorder) -> tuple:
    """Quotient a reflexive transitive relation to a poset.

    Returns ``(poset, projection)`` where ``projection[i]`` is the index in
    the result of class ``[carrier[i]]``.  Classes of ``r & r^-1`` are
    labelled by their least-index member, so output is deterministic.
    """
    if not r.is_transitive():
        raise InputError("quotient requires a transitive relation")
    n = len(r.carrier)
    succ = _successor_sets(r)
    rep = list(range(n))
    for i in range(n):
        for j in succ[i]:
            if j > i and i in succ[j] and rep[j] == j:
                rep[j] = rep[i]
    class_reps = sorted(set(rep))
    pos_of = {c: k for k, c in enumerate(class_reps)}
    projection = tuple(pos_of[rep[i]] for i in range(n))
    ups = [set() for _ in class_reps]
    for k, c in enumerate(class_reps):
        ups[k] = {pos_of[rep[j]] for j in succ[c]} | {k}
    poset = FinPoset(tuple(r.carrier[c] for c in class_reps),
                     tuple(frozenset(u) for u in ups))
    return poset, projection


def cotensor2(x: FinPoset) -> tuple:
    """The poset of comparable pairs ``{(a, b) | a <= b}`` of ``x``.

    Ordered componentwise; returns ``(poset, first, second)`` with the two
    projection maps.  The diagonal ``a -> (a, a)`` is a common section of
    both projections (see :func:`diagonal_section`).
    """
    pairs = [(i, j) for i in range(len(x)) for j in sorted(x.up[i])]
    labels = tuple((x.elements[i], x.elements[j]) for i, j in pairs)
    ups = []
    for i, j in pairs:
        ups.append(frozenset(k for k, (a, b) in enumerate(pairs)
                             if a in x.up[i] and b in x.up[j]))
    poset = FinPoset(labels, tuple(ups))
    first = MonotoneMap(poset, x, tuple(i for i, _ in pairs))
    second = MonotoneMap(poset, x, tuple(j for _, j in pairs))
    return poset, first, second


def diagonal_section(x: FinPoset, xsq: FinPoset) -> MonotoneMap:
    return MonotoneMap.of_dict(x, xsq, {e: (e, e) for e in x.elements})


def connected_components(x: FinPoset) -> tuple:
    """Components of the comparability graph.

    Returns ``(component_labels, component_of)`` where each component is
    labelled by its least-index member and ``component_of`` maps every
    element label to its component label.
    """
    n = len(x)
    neighbours = [set() for _ in range(n)]
    for i in range(n):
        for j in x.up[i]:
            neighbours[i].add(j)
            neighbours[j].add(i)
    comp = [-1] * n
    reps = []
    for i in range(n):
        if comp[i] != -1:
            continue
        reps.append(i)
        stack = [i]
        comp[i] = i
        while stack:
            k = stack.pop()
            for m in neighbours[k]:
                if comp[m] == -1:
                    comp[m] = i
                    stack.append(m)
    labels = tuple(x.elements[r] for r in reps)
    component_of = {x.elements[i]: x.elements[comp[i]] for i in range(n)}
    return labels, component_of


def poset_isomorphism(p: FinPoset, q: FinPoset) -> Optional[dict]:
    """An order isomorphism ``p -> q`` as a label dict, or None.

    Brute-force backtracking with colour refinement, adequate for the
    small posets produced here (a few hundred nodes at most, usually far
    fewer).
    """
    n = len(p)
    if n != len(q):
        return None

    def refine(poset):
        down = [sum(1 for u in poset.up if i in u) for i in range(len(poset))]
        colours = [(len(poset.up[i]), down[i]) for i in range(len(poset))]
        while True:
            sig = [
                (colours[i],
                 tuple(sorted(colours[j] for j in poset.up[i])),
                 tuple(sorted(colours[j] for j in range(len(poset))
                              if i in poset.up[j])))
                for i in range(len(poset))
            ]
            canon = {s: k for k, s in enumerate(sorted(set(sig)))}
            new = [canon[s] for s in sig]
            if new == colours:
                return tuple(new)
            colours = new

    cp, cq = refine(p), refine(q)
    if sorted(cp) != sorted(cq):
        return None
    candidates = [[j for j in range(n) if cq[j] == cp[i]] for i in range(n)]
    order = sorted(range(n), key=lambda i: len(candidates[i]))
    assigned: dict = {}
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        i = order[k]
        for j in candidates[i]:
            if used[j]:
                continue
            ok = True
            for i2, j2 in assigned.items():
                if (i2 in p.up[i]) != (j2 in q.up[j]) or (i in p.up[i2]) != (j in q.up[j2]):
                    ok = False
                    break
            if ok:
                assigned[i] = j
                used[j] = True
                if extend(k + 1):
                    return True
                del assigned[i]
                used[j] = False
        return False

    if not extend(0):
        return None
    return {p.elements[i]: q.elements[j] for i, j in assigned.items()}


def enumerate_posets(labels: tuple) -> Iterator[FinPoset]:
    """All partial orders on the given labels (meant for n <= 4)."""
    n = len(labels)
    if n == 0:
        yield FinPoset((), ())
        return
    offdiag = [(i, j) for i in range(n) for j in range(n) if i != j]
    for mask in range(1 << len(offdiag)):
        ups = [set([i]) for i in range(n)]
        for b, (i, j) in enumerate(offdiag):
            if mask >> b & 1:
                ups[i].add(j)
        ok = True
        for i in range(n):
            for j in ups[i]:
                if i != j and i in ups[j]:
                    ok = False
                    break
                if not ups[j] <= ups[i]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield FinPoset(labels, tuple(frozenset(u) for u in ups))
