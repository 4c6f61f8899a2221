"""Negation-free liftings of Boolean syntax functors to distributive
lattices.

The general construction embeds a lattice into its free Boolean envelope,
applies the syntax functor to the two comparisons coming from the ordered
double of the lattice, and carves out the sublattice on which the first
image lies below the second.  Closed forms exist for the two logics of
interest (normal modal logic, and the free unary-modality logic) and are
checked against the inserter computation rather than trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .algebra import (BAHom, FinBoolAlg, FinDistLattice, LatticeHom,
                      SubLattice, assert_sublattice, ba_inserter,
                      boolean_as_lattice, free_ba, free_ba_generator,
                      free_ba_map, free_over_dl_G, g_of_hom, kernel_K,
                      lattice_from_elements, tensor2, up_algebra)
from .errors import (DEFAULT_MAX_ENUM, DEFAULT_MAX_GENERATORS,
                     check_enum_budget)
from .functors import SetFunctor, pow_functor
from .posetify import posetify_powerset


@dataclass(frozen=True)
class BAFunctor:
    """A syntax-building endofunctor of finite Boolean algebras.

    ``diamond``/``box`` optionally give the action of the modality
    generators on elements of the argument algebra; they are used to track
    modal operators through the lifting.
    """

    name: str
    on_obj: Callable[[FinBoolAlg], FinBoolAlg]
    on_mor: Callable[[BAHom], BAHom]
    diamond: Optional[Callable[[FinBoolAlg, frozenset], frozenset]] = None
    box: Optional[Callable[[FinBoolAlg, frozenset], frozenset]] = None


def semantic_l(t: SetFunctor, max_enum: int = DEFAULT_MAX_ENUM) -> BAFunctor:
    """The semantically presented syntax functor: powerset of the functor
    applied to the atom set.

    With the powerset functor this is normal modal logic in its finite
    semantic form; the diamond of an element collects the successor sets
    meeting it, the box those contained in it.
    """

    def on_obj(b: FinBoolAlg) -> FinBoolAlg:
        check_enum_budget(t.size_estimate(len(b.atoms)), max_enum,
                          f"{t.name} on an atom set")
        return FinBoolAlg(atoms=t.on_obj(b.atoms))

    def on_mor(h: BAHom) -> BAHom:
        src = on_obj(h.source)
        dst = on_obj(h.target)
        act = t.on_mor({a: h.dual_of(a) for a in h.target.atoms},
                       h.target.atoms, h.source.atoms)
        return BAHom(src, dst, tuple(act(c) for c in dst.atoms))

    diamond = box = None
    if t.name == "pow":
        def diamond(b: FinBoolAlg, x: frozenset) -> frozenset:
            return frozenset(c for c in on_obj(b).atoms if c & x)

        def box(b: FinBoolAlg, x: frozenset) -> frozenset:
            return frozenset(c for c in on_obj(b).atoms if c <= x)

    return BAFunctor(f"semantic:{t.name}", on_obj, on_mor, diamond, box)


def free_l(max_generators: int = DEFAULT_MAX_GENERATORS,
           max_enum: int = DEFAULT_MAX_ENUM) -> BAFunctor:
    """One unary modality obeying no equations: the free Boolean algebra
    over the carrier, with the box generator given by the unit."""

    def gens_of(b: FinBoolAlg) -> tuple:
        return tuple(b.carrier(max_enum))

    def on_obj(b: FinBoolAlg) -> FinBoolAlg:
        return free_ba(gens_of(b), max_generators)

    def on_mor(h: BAHom) -> BAHom:
        f = {x: h.apply(x) for x in gens_of(h.source)}
        return free_ba_map(gens_of(h.source), gens_of(h.target), f,
                           max_generators)

    def box(b: FinBoolAlg, x: frozenset) -> frozenset:
        return free_ba_generator(on_obj(b), x)

    return BAFunctor("free", on_obj, on_mor, diamond=None, box=box)


@dataclass(eq=False)
class Positivication:
    """The lifted syntax functor evaluated at one lattice.

    ``result`` is the lifted lattice over its own spectrum; ``members``
    are the same elements inside the ambient algebra (the syntax functor
    applied to the free Boolean envelope), with ``embed``/``restrict``
    translating between the two views.  ``box_of``/``diamond_of`` map an
    element of the argument lattice to its modal image in the ambient
    algebra; membership of that image is a property of the logic, not a
    given (see ``is_member``).
    """

    result: FinDistLattice
    members: tuple
    embed: dict
    restrict: dict
    ambient: FinBoolAlg
    galg: FinBoolAlg
    unit: LatticeHom
    h1: BAHom
    h2: BAHom
    box_of: Optional[Callable[[frozenset], frozenset]] = None
    diamond_of: Optional[Callable[[frozenset], frozenset]] = None

    def is_member(self, candidate: frozenset) -> bool:
        return self.h1.apply(candidate) <= self.h2.apply(candidate)

    def member_set(self) -> frozenset:
        return frozenset(self.members)


def positivize(l: BAFunctor, a: FinDistLattice,
               max_enum: int = DEFAULT_MAX_ENUM) -> Positivication:
    """Compute the lifted functor at ``a`` by the inserter construction.

    When the two comparison homs coincide (exactly the Boolean case, where
    the ordered double collapses), the inserter is the whole ambient
    algebra and the sweep is skipped.
    """
    galg, unit = free_over_dl_G(a)
    t2 = tensor2(a)
    gh1 = g_of_hom(t2.in1)
    gh2 = g_of_hom(t2.in2)
    lga = l.on_obj(galg)
    lh1 = l.on_mor(gh1)
    lh2 = l.on_mor(gh2)
    if lh1 == lh2:
        members = tuple(lga.carrier(max_enum))
        wl = boolean_as_lattice(lga)
        ident = {m: m for m in members}
        sub = SubLattice(wl, members, dict(ident), dict(ident))
    else:
        members = ba_inserter(lh1, lh2, max_enum)
        check_enum_budget(len(members) ** 2, max_enum, "sublattice audit")
        assert_sublattice(members, lga)
        sub = lattice_from_elements(members, max_enum)
    box_of = (lambda x: l.box(galg, unit.apply(x))) if l.box else None
    diamond_of = (lambda x: l.diamond(galg, unit.apply(x))) if l.diamond else None
    return Positivication(sub.lattice, sub.members, sub.embed, sub.restrict,
                          lga, galg, unit, lh1, lh2, box_of, diamond_of)


def positivize_mor(l: BAFunctor, h: LatticeHom,
                   p_src: Positivication, p_dst: Positivication) -> dict:
    """The lifted functor on a hom, by restricting the ambient action.

    Well-definedness (the image of a member is a member) is asserted; a
    failure here means the lifting is not natural for this instance and is
    reported, not repaired.
    """
    lgh = l.on_mor(g_of_hom(h))
    target = p_dst.member_set()
    out = {}
    for m in p_src.members:
        img = lgh.apply(m)
        if img not in target:
            raise AssertionError(
                f"lifted hom leaves the target sublattice at {m!r}")
        out[m] = img
    return out


@dataclass(frozen=True, eq=False)
class Beta:
    """The comparison between lifting-then-including and including-then-
    applying on a Boolean algebra; in this representation it is witnessed
    by an identity of carriers, which is verified rather than assumed."""

    source: FinDistLattice
    target: FinDistLattice

    def apply(self, x: frozenset) -> frozenset:
        return x

    def inverse(self, x: frozenset) -> frozenset:
        return x


def beta(l: BAFunctor, b: FinBoolAlg,
         max_enum: int = DEFAULT_MAX_ENUM) -> Beta:
    """The isomorphism between the lifting at ``W b`` and ``W (l b)``.

    The free Boolean envelope of a Boolean lattice is the algebra itself
    under the atom encoding used here, so the lifted lattice and the
    included image have literally equal carriers; this is checked element
    by element.
    """
    p = positivize(l, boolean_as_lattice(b), max_enum)
    lb = l.on_obj(b)
    wlb = boolean_as_lattice(lb)
    if p.ambient != lb:
        raise AssertionError("envelope of a Boolean lattice did not collapse")
    if p.result != wlb:
        raise AssertionError("lifting at a Boolean lattice is not the inclusion")
    for relem, member in p.embed.items():
        if relem != member:
            raise AssertionError("comparison is not the identity on elements")
    return Beta(p.result, wlb)


def closed_form_dunn(a: FinDistLattice,
                     max_enum: int = DEFAULT_MAX_ENUM) -> FinDistLattice:
    """Closed form for the lifting of normal modal logic: upsets of the
    convex-powerset lifting of the spectrum."""
    return up_algebra(posetify_powerset(a.spectrum, max_enum).result)


def closed_form_fu(a: FinDistLattice,
                   max_enum: int = DEFAULT_MAX_ENUM,
                   max_generators: int = DEFAULT_MAX_GENERATORS) -> FinDistLattice:
    """Closed form for the lifting of the free unary-modality logic: the
    free Boolean algebra over the carrier of the largest Boolean
    subalgebra, included back into lattices."""
    k, _ = kernel_K(a, max_enum)
    gens = tuple(k.carrier(max_enum))
    return boolean_as_lattice(free_ba(gens, max_generators))


DUNN_AXIOMS = (
    "box-preserves-meet",
    "box-preserves-top",
    "diamond-preserves-join",
    "diamond-preserves-bottom",
    "box-meet-diamond-below-diamond-meet",
    "box-join-below-box-or-diamond",
    "box-monotone",
    "diamond-monotone",
)


@dataclass(frozen=True)
class DunnReport:
    ok: bool
    failures: tuple
    pairs_checked: int


def dunn_axiom_check(a: FinDistLattice,
                     max_enum: int = DEFAULT_MAX_ENUM) -> DunnReport:
    """Exhaustively verify the positive modal axioms inside the lifted
    lattice of normal modal logic over ``a``.

    The box and diamond of every element must land in the lifted
    sublattice; the (in)equations are then evaluated with ambient set
    operations, which agree with the sublattice ones.
    """
    l = semantic_l(pow_functor(), max_enum)
    p = positivize(l, a, max_enum)
    members = p.member_set()
    failures = []
    elems = a.carrier(max_enum)
    box = {x: p.box_of(x) for x in elems}
    dia = {x: p.diamond_of(x) for x in elems}
    for x in elems:
        if box[x] not in members:
            failures.append(("box-membership", x))
        if dia[x] not in members:
            failures.append(("diamond-membership", x))
    top_a = p.ambient.top
    bot_a = p.ambient.bot
    if box[a.top] != top_a:
        failures.append(("box-preserves-top", a.top))
    if dia[a.bot] != bot_a:
        failures.append(("diamond-preserves-bottom", a.bot))
    pairs = 0
    for x in elems:
        for y in elems:
            pairs += 1
            if box[x & y] != box[x] & box[y]:
                failures.append(("box-preserves-meet", (x, y)))
            if dia[x | y] != dia[x] | dia[y]:
                failures.append(("diamond-preserves-join", (x, y)))
            if not (box[x] & dia[y]) <= dia[x & y]:
                failures.append(("box-meet-diamond-below-diamond-meet", (x, y)))
            if not box[x | y] <= (box[x] | dia[y]):
                failures.append(("box-join-below-box-or-diamond", (x, y)))
            if x <= y:
                if not box[x] <= box[y]:
                    failures.append(("box-monotone", (x, y)))
                if not dia[x] <= dia[y]:
                    failures.append(("diamond-monotone", (x, y)))
    return DunnReport(not failures, tuple(failures), pairs)
