"""Named verification suites.

Every check exercises one of the core properties of the constructions
(closure laws, duality round trips, oracle equivalence of the generic and
closed-form liftings, transfer of injectivity) by exhaustive computation
at desk scale.  Checks return ``(ok, detail)``; the CLI prints one line
per check and fails the process if any check fails.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from . import algebra as alg
from . import semantics as sem
from .errors import DEFAULT_MAX_ENUM
from .functors import (lift_relation_generic, mnb_functor, multiset_functor,
                       nb_functor, poly_functor, pow_functor, powerset)
from .order import (FinPoset, Preorder, connected_components, cotensor2,
                    diagonal_section, discrete, enumerate_posets,
                    poset_isomorphism, poset_quotient, transitive_closure,
                    up_closure)
from .posetify import (convex_closure, cross_check, egli_milner_leq,
                       posetify_generic, posetify_mnb, posetify_nb,
                       posetify_powerset)
from .positivize import (beta, closed_form_dunn, closed_form_fu,
                         dunn_axiom_check, free_l, positivize, positivize_mor,
                         semantic_l)

LABELS = ("a", "b", "c", "d")


@lru_cache(maxsize=None)
def small_posets(max_size: int) -> tuple:
    out = []
    for n in range(max_size + 1):
        out.extend(enumerate_posets(LABELS[:n]))
    return tuple(out)


@lru_cache(maxsize=None)
def iso_representatives(max_size: int) -> tuple:
    reps: list = []
    for p in small_posets(max_size):
        if not any(len(q) == len(p) and poset_isomorphism(p, q) for q in reps):
            reps.append(p)
    return tuple(reps)


def two_chain() -> FinPoset:
    return FinPoset.chain(("p", "q"))


def three_chain_lattice() -> alg.FinDistLattice:
    """The three-element lattice bottom < middle < top."""
    return alg.up_algebra(two_chain())


# ------------------------------------------------------------------ order

def check_closure_laws(max_enum=DEFAULT_MAX_ENUM):
    rels3 = _reflexive_relations(3)
    for r in rels3:
        c = transitive_closure(r)
        if transitive_closure(c).rel != c.rel:
            return False, f"closure not idempotent on {r.rel}"
    for r in rels3:
        for extra in [(0, 1), (2, 0), (1, 2)]:
            bigger = Preorder(r.carrier, r.rel | {extra})
            if not transitive_closure(r).rel <= transitive_closure(bigger).rel:
                return False, f"closure not monotone on {r.rel} + {extra}"
    rng = random.Random(7)
    for _ in range(40):
        r = _random_reflexive_relation(4, rng)
        c = transitive_closure(r)
        if transitive_closure(c).rel != c.rel:
            return False, f"closure not idempotent on {r.rel}"
        extra = (rng.randrange(4), rng.randrange(4))
        bigger = Preorder(r.carrier, r.rel | {extra})
        if not c.rel <= transitive_closure(bigger).rel:
            return False, "closure not monotone on a sampled relation"
    return True, f"{len(rels3)} relations on 3 elements, 40 sampled on 4"


def _reflexive_relations(n: int) -> list:
    carrier = tuple(LABELS[:n])
    diag = frozenset((i, i) for i in range(n))
    offdiag = [(i, j) for i in range(n) for j in range(n) if i != j]
    out = []
    for mask in range(1 << len(offdiag)):
        extra = frozenset(p for k, p in enumerate(offdiag) if mask >> k & 1)
        out.append(Preorder(carrier, diag | extra))
    return out


def _random_reflexive_relation(n: int, rng) -> Preorder:
    carrier = tuple(LABELS[:n])
    rel = {(i, i) for i in range(n)}
    for i in range(n):
        for j in range(n):
            if i != j and rng.random() < 0.3:
                rel.add((i, j))
    return Preorder(carrier, frozenset(rel))


def check_quotient(max_enum=DEFAULT_MAX_ENUM):
    count = 0
    for r in _reflexive_relations(3):
        c = transitive_closure(r)
        poset, proj = poset_quotient(c)
        for i, j in c.rel:
            if not poset.leq_idx(proj[i], proj[j]):
                return False, f"projection drops a pair of {c.rel}"
            mutual = (j, i) in c.rel
            if (proj[i] == proj[j]) != mutual:
                return False, f"classes of {c.rel} disagree with the relation"
        count += 1
    return True, f"{count} quotients on 3-element carriers"


def check_cotensor(max_enum=DEFAULT_MAX_ENUM):
    for p in small_posets(3):
        xsq, p0, p1 = cotensor2(p)
        expected = [(a, b) for a in p.elements for b in p.elements if p.leq(a, b)]
        if sorted(map(str, xsq.elements)) != sorted(map(str, expected)):
            return False, f"pair carrier wrong on {p.elements}"
        for (a, b) in xsq.elements:
            for (c, d) in xsq.elements:
                want = p.leq(a, c) and p.leq(b, d)
                if xsq.leq((a, b), (c, d)) != want:
                    return False, "componentwise order wrong"
        i = diagonal_section(p, xsq)
        for e in p.elements:
            if p0.of(i.of(e)) != e or p1.of(i.of(e)) != e:
                return False, "diagonal is not a common section"
    return True, f"{len(small_posets(3))} posets checked"


def check_components(max_enum=DEFAULT_MAX_ENUM):
    for p in small_posets(3):
        comps, comp_of = connected_components(p)
        xsq, p0, p1 = cotensor2(p)
        for w in xsq.elements:
            if comp_of[w[0]] != comp_of[w[1]]:
                return False, "collapse does not coequalise the projections"
        # independent route: symmetrise the order and quotient
        n = len(p)
        rel = {(i, j) for i in range(n) for j in p.up[i]}
        rel |= {(j, i) for i, j in rel}
        q, proj = poset_quotient(transitive_closure(Preorder(p.elements, frozenset(rel))))
        if len(q) != len(comps):
            return False, f"component count differs on {p.elements}"
        for a in p.elements:
            for b in p.elements:
                same = comp_of[a] == comp_of[b]
                if same != (proj[p.index(a)] == proj[p.index(b)]):
                    return False, "component partition differs"
    return True, "components match the symmetrised quotient"


# ---------------------------------------------------------------- algebra

def check_birkhoff(max_enum=DEFAULT_MAX_ENUM):
    posets = list(small_posets(3)) + [p for p in iso_representatives(4) if len(p) == 4]
    for p in posets:
        a = alg.up_algebra(p)
        pf = alg.prime_filter_poset(a, max_enum)
        if poset_isomorphism(p, pf) is None:
            return False, f"spectrum round trip fails on {p.elements}"
        b = alg.up_algebra(pf)
        if alg.lattice_isomorphic(a, b) is None:
            return False, f"lattice round trip fails on {p.elements}"
    return True, f"{len(posets)} posets round-tripped"


def check_free_ba(max_enum=DEFAULT_MAX_ENUM):
    for n in range(4):
        gens = LABELS[:n]
        fb = alg.free_ba(gens)
        if fb.size() != 1 << (1 << n):
            return False, f"size wrong on {n} generators"
        for g in gens:
            e = alg.free_ba_generator(fb, g)
            if e & fb.neg(e) != fb.bot or e | fb.neg(e) != fb.top:
                return False, "generator embedding is not Boolean"
    return True, "sizes 2^2^n for n <= 3"


def check_nbhd_iso(max_enum=DEFAULT_MAX_ENUM):
    nb = nb_functor()
    for n in range(3):
        xs = LABELS[:n]
        fams = nb.on_obj(xs)
        images = set()
        for fam in fams:
            e = alg.nbhd_to_free(xs, fam)
            if e != frozenset(fam):
                return False, f"translation is not the identity encoding at {fam}"
            images.add(e)
        if len(images) != len(fams):
            return False, "translation is not injective"
    # naturality against the two morphism actions
    for src_n in (1, 2):
        for dst_n in (1, 2):
            xs, ys = LABELS[:src_n], LABELS[:dst_n]
            for f in _all_functions(xs, ys):
                act = nb.on_mor(f, xs, ys)
                hom = alg.free_ba_map(xs, ys, f)
                for fam in nb.on_obj(xs):
                    if alg.nbhd_to_free(ys, act(fam)) != hom.apply(alg.nbhd_to_free(xs, fam)):
                        return False, f"naturality fails at {f}"
    return True, "bijective and natural on sets of size <= 2"


def _all_functions(xs: tuple, ys: tuple) -> list:
    if not xs:
        return [{}]
    out = []
    rest = _all_functions(xs[1:], ys)
    for y in ys:
        for f in rest:
            g = dict(f)
            g[xs[0]] = y
            out.append(g)
    return out


def check_kernel(max_enum=DEFAULT_MAX_ENUM):
    posets = list(small_posets(3)) + [p for p in iso_representatives(4) if len(p) == 4]
    for p in posets:
        a = alg.up_algebra(p)
        k, embed = alg.kernel_K(a, max_enum)
        comps, comp_of = connected_components(p)
        if (1 << len(comps)) != (1 << len(k.atoms)):
            return False, f"kernel size wrong on {p.elements}"
        comp_sets = {frozenset(e for e in p.elements if comp_of[e] == c)
                     for c in comps}
        atom_sets = {embed[frozenset([at])] for at in k.atoms}
        if comp_sets != atom_sets:
            return False, f"kernel atoms differ from components on {p.elements}"
    return True, f"{len(posets)} lattices"


def check_gw_collapse(max_enum=DEFAULT_MAX_ENUM):
    for n in range(4):
        b = alg.FinBoolAlg(atoms=LABELS[:n])
        g, unit = alg.free_over_dl_G(alg.boolean_as_lattice(b))
        if g != b:
            return False, f"free envelope of a Boolean lattice moved ({n} atoms)"
        for x in b.carrier(max_enum):
            if unit.apply(x) != x:
                return False, "unit is not the identity on a Boolean lattice"
    return True, "collapse is the identity for <= 3 atoms"


def check_tensor2(max_enum=DEFAULT_MAX_ENUM):
    for p in small_posets(3):
        a = alg.up_algebra(p)
        t2 = alg.tensor2(a)
        k, embed = alg.kernel_K(a, max_enum)
        complemented = set(embed.values())
        for u in a.carrier(max_enum):
            x1, x2 = t2.in1.apply(u), t2.in2.apply(u)
            if not x1 <= x2:
                return False, f"left copy not below right copy at {u}"
            if (x1 == x2) != (u in complemented):
                return False, f"copies collide off the Boolean kernel at {u}"
            if t2.retract.apply(x1) != u or t2.retract.apply(x2) != u:
                return False, "retraction fails"
    a = three_chain_lattice()
    four_chain = alg.up_algebra(FinPoset.chain(("x", "y", "z")))
    if alg.lattice_isomorphic(alg.tensor2(a).lattice, four_chain) is None:
        return False, "ordered double of the 3-element chain is not the 4-chain"
    return True, "ordered double checked on all spectra <= 3"


def check_dl_inserter(max_enum=DEFAULT_MAX_ENUM):
    for p in small_posets(3):
        a = alg.up_algebra(p)
        galg, unit = alg.free_over_dl_G(a)
        t2 = alg.tensor2(a)
        h1 = alg.g_of_hom(t2.in1)
        h2 = alg.g_of_hom(t2.in2)
        sub = alg.dl_inserter(h1, h2, max_enum)
        expected = {unit.apply(u) for u in a.carrier(max_enum)}
        if set(sub.members) != expected:
            return False, f"inserter members differ on {p.elements}"
        if alg.lattice_isomorphic(sub.lattice, a) is None:
            return False, f"inserter lattice not isomorphic on {p.elements}"
    return True, "upset image recovered on all spectra <= 3"


def check_reflexive_pairs(max_enum=DEFAULT_MAX_ENUM):
    b = alg.FinBoolAlg(atoms=("a1", "a2"))
    prod = alg.product_ba(b, b)
    diag = {prod.pair(x, x) for x in b.carrier(max_enum)}
    count = 0
    for sub in alg.subalgebras(prod.algebra):
        if not diag <= sub:
            continue
        count += 1
        if not alg.reflexive_pair_swap_check(prod, sub):
            return False, f"swap closure fails on a subalgebra of size {len(sub)}"
    return True, f"{count} diagonal-containing subalgebras, all symmetric"


def check_dual_composition(max_enum=DEFAULT_MAX_ENUM):
    two = alg.up_algebra(FinPoset.discrete(("s",)))
    three = three_chain_lattice()
    from .order import MonotoneMap
    f = alg.LatticeHom(two, three,
                       MonotoneMap.of_dict(three.spectrum, two.spectrum,
                                           {"p": "s", "q": "s"}))
    four = alg.up_algebra(FinPoset.chain(("x", "y", "z")))
    g = alg.LatticeHom(three, four,
                       MonotoneMap.of_dict(four.spectrum, three.spectrum,
                                           {"x": "p", "y": "p", "z": "q"}))
    gf = alg.lattice_compose(g, f)
    for u in two.carrier(max_enum):
        if gf.apply(u) != g.apply(f.apply(u)):
            return False, "element action of a composite differs"
    for t in four.spectrum.elements:
        if gf.dual.of(t) != f.dual.of(g.dual.of(t)):
            return False, "duals do not compose contravariantly"
    return True, "composite checked elementwise"


# --------------------------------------------------------------- posetify

def _oracle_functors():
    return (pow_functor(), multiset_functor(3),
            poly_functor([("f", 2, ("k",))]), mnb_functor())


def check_posetify_oracles(max_enum=DEFAULT_MAX_ENUM):
    checked = 0
    for t in _oracle_functors():
        for p in small_posets(3):
            r = cross_check(t, p, max_enum)
            if not r.ok:
                return False, f"{t.name} on {p.elements}: {r.detail}"
            checked += 1
    nb = nb_functor()
    for p in small_posets(3):
        xsq, _, _ = cotensor2(p)
        if len(xsq) > 3:
            continue
        r = cross_check(nb, p, max_enum)
        if not r.ok:
            return False, f"nb on {p.elements}: {r.detail}"
        checked += 1
    return True, f"{checked} functor/poset pairs agree"


def check_powerset_closed_form(max_enum=DEFAULT_MAX_ENUM):
    chain3 = FinPoset.chain(("p", "q", "r"))
    pos = posetify_powerset(chain3, max_enum)
    expected = {frozenset(), frozenset("p"), frozenset("q"), frozenset("r"),
                frozenset("pq"), frozenset("qr"), frozenset("pqr")}
    if set(pos.result.elements) != expected or len(pos.result) != 7:
        return False, "convex subsets of the 3-chain are wrong"
    if pos.e[frozenset("pr")] != frozenset("pqr"):
        return False, "convex closure of the gap set is wrong"
    for n in range(1, 5):
        chain = FinPoset.chain(LABELS[:n])
        for s in powerset(chain.elements):
            c = convex_closure(chain, s)
            if convex_closure(chain, c) != c:
                return False, "convex closure is not idempotent"
            if not (egli_milner_leq(chain, s, c) and egli_milner_leq(chain, c, s)):
                return False, "a set is not equivalent to its convex closure"
    return True, "7 convex sets on the 3-chain; closure laws on chains <= 4"


def check_analytic_antisymmetry(max_enum=DEFAULT_MAX_ENUM):
    for t in (multiset_functor(3), poly_functor([("f", 2, ("k",))])):
        for p in small_posets(3):
            r = lift_relation_generic(t, p, max_enum)
            if not r.is_antisymmetric():
                return False, f"{t.name} lifting not antisymmetric on {p.elements}"
            pos = posetify_generic(t, p, max_enum)
            if len(pos.result) != len(r.carrier):
                return False, f"{t.name} quotient is not the identity on {p.elements}"
    return True, "lifted relations antisymmetric; quotient trivial"


def check_mnb_order(max_enum=DEFAULT_MAX_ENUM):
    x = two_chain()
    pos = posetify_mnb(x, max_enum)
    fam_a = frozenset([frozenset(["p", "q"])])
    fam_b = frozenset([frozenset(["q"]), frozenset(["p", "q"])])
    a_cls, b_cls = pos.e[fam_a], pos.e[fam_b]
    if a_cls == b_cls or not pos.result.leq(a_cls, b_cls) or \
            pos.result.leq(b_cls, a_cls):
        return False, "the two-chain example is not strictly ordered"
    for p in small_posets(3):
        direct = posetify_mnb(p, max_enum).witness
        generic = transitive_closure(lift_relation_generic(mnb_functor(), p, max_enum))
        if direct.carrier != generic.carrier or direct.rel != generic.rel:
            return False, f"family comparison differs from the closure on {p.elements}"
    return True, "strict example holds; comparison equals the closure"


def check_nb_collapse(max_enum=DEFAULT_MAX_ENUM):
    pos = posetify_nb(two_chain(), max_enum)
    if len(pos.result) != 4 or pos.result.covers():
        return False, "two-chain collapse is not 4 discrete points"
    for p in iso_representatives(4):
        comps, _ = connected_components(p)
        pos = posetify_nb(p, max_enum)
        if len(pos.result) != 1 << (1 << len(comps)):
            return False, f"size wrong on {p.elements}"
        if pos.result.covers():
            return False, f"result not discrete on {p.elements}"
    return True, "2^2^components for all posets <= 4 (up to iso)"


def check_discrete_identity(max_enum=DEFAULT_MAX_ENUM):
    functors = list(_oracle_functors()) + [nb_functor()]
    for t in functors:
        for n in range(4):
            p = discrete(LABELS[:n])
            pos = posetify_generic(t, p, max_enum)
            if pos.result.covers():
                return False, f"{t.name} on a discrete set is not discrete"
            if len(pos.result) != len(pos.e):
                return False, f"{t.name} projection not bijective on discrete"
    return True, "all functors are unchanged on discrete posets"


def check_pow_transitive(max_enum=DEFAULT_MAX_ENUM):
    for p in small_posets(3):
        r = lift_relation_generic(pow_functor(), p, max_enum)
        if transitive_closure(r).rel != r.rel:
            return False, f"one-step powerset lifting not transitive on {p.elements}"
    return True, "one-step lifting already transitive"


def check_mnb_transitivity_probe(max_enum=DEFAULT_MAX_ENUM):
    """Informational: does the one-step lifting for up-closed families ever
    fail transitivity at this scale?  The outcome is recorded either way."""
    failures = []
    for p in small_posets(3):
        r = lift_relation_generic(mnb_functor(), p, max_enum)
        if transitive_closure(r).rel != r.rel:
            failures.append(p.elements)
    if failures:
        return True, f"non-transitive one-step lifting found on {len(failures)} posets"
    return True, "one-step lifting transitive on every poset <= 3"


# -------------------------------------------------------------- positivize

def check_dunn_closed_form(max_enum=DEFAULT_MAX_ENUM):
    l = semantic_l(pow_functor(), max_enum)
    for p in small_posets(3):
        a = alg.up_algebra(p)
        got = positivize(l, a, max_enum).result
        want = closed_form_dunn(a, max_enum)
        if alg.lattice_isomorphic(got, want) is None:
            return False, f"lifted lattice differs on spectrum {p.elements}"
    size = positivize(l, three_chain_lattice(), max_enum).result.size(max_enum)
    if size != 8:
        return False, f"lifting of the 3-element chain has {size} elements, not 8"
    return True, "inserter matches the convex closed form on spectra <= 3"


def check_dunn_axioms(max_enum=DEFAULT_MAX_ENUM):
    for p in small_posets(3):
        report = dunn_axiom_check(alg.up_algebra(p), max_enum)
        if not report.ok:
            return False, f"axiom failures on spectrum {p.elements}: {report.failures[:3]}"
    return True, "all interaction laws hold on spectra <= 3"


def check_fu_closed_form(max_enum=DEFAULT_MAX_ENUM):
    l = free_l()
    for p in small_posets(2):
        a = alg.up_algebra(p)
        got = positivize(l, a, max_enum).result
        want = closed_form_fu(a, max_enum)
        if alg.lattice_isomorphic(got, want) is None:
            return False, f"free-modality lifting differs on spectrum {p.elements}"
    size = positivize(l, three_chain_lattice(), max_enum).result.size(max_enum)
    if size != 16:
        return False, f"lifting of the 3-element chain has {size} elements, not 16"
    return True, "inserter matches the kernel closed form on spectra <= 2"


def check_fu_box_side_condition(max_enum=DEFAULT_MAX_ENUM):
    a = three_chain_lattice()
    p = positivize(free_l(), a, max_enum)
    middle = frozenset(["q"])
    if p.is_member(p.box_of(middle)):
        return False, "box of the non-complemented middle element slipped in"
    if not (p.is_member(p.box_of(a.bot)) and p.is_member(p.box_of(a.top))):
        return False, "box of a complemented element was rejected"
    if p.box_of(middle) in p.member_set():
        return False, "membership check disagrees with the member list"
    return True, "box is only defined on the Boolean kernel"


def check_beta(max_enum=DEFAULT_MAX_ENUM):
    for l in (semantic_l(pow_functor(), max_enum), free_l()):
        for n in range(3):
            b = alg.FinBoolAlg(atoms=LABELS[:n])
            bta = beta(l, b, max_enum)
            lb_size = l.on_obj(b).size()
            if len(bta.source.carrier(max_enum)) != lb_size:
                return False, f"{l.name}: lifting at a {n}-atom algebra has the wrong size"
    return True, "lifting agrees with inclusion on Boolean algebras <= 2 atoms"


def check_positivize_mor(max_enum=DEFAULT_MAX_ENUM):
    from .order import MonotoneMap
    l = semantic_l(pow_functor(), max_enum)
    two = alg.up_algebra(FinPoset.discrete(("s",)))
    three = three_chain_lattice()
    h = alg.LatticeHom(two, three,
                       MonotoneMap.of_dict(three.spectrum, two.spectrum,
                                           {"p": "s", "q": "s"}))
    p_two = positivize(l, two, max_enum)
    p_three = positivize(l, three, max_enum)
    action = positivize_mor(l, h, p_two, p_three)
    ident = positivize_mor(l, alg.lattice_identity(three), p_three, p_three)
    if any(k != v for k, v in ident.items()):
        return False, "identity hom does not act as the identity"
    if action[p_two.ambient.bot] != p_three.ambient.bot or \
            action[p_two.ambient.top] != p_three.ambient.top:
        return False, "bounds are not tracked"
    collapse = alg.LatticeHom(three, two,
                              MonotoneMap.of_dict(two.spectrum, three.spectrum,
                                                  {"s": "q"}))
    positivize_mor(l, collapse, p_three, p_two)
    return True, "lifted homs stay inside the target sublattice"


# -------------------------------------------------------------- semantics

def check_delta_pow_injective(max_enum=DEFAULT_MAX_ENUM):
    for n in range(4):
        ok, cex = sem.delta_pow_injective(LABELS[:n], max_enum)
        if not ok:
            return False, f"not injective at a {n}-element set: {cex}"
    return True, "injective at all sets <= 3"


def check_delta_prime_injective(max_enum=DEFAULT_MAX_ENUM):
    for p in small_posets(3):
        ok, cex = sem.delta_prime_injective(p, max_enum)
        if not ok:
            return False, f"not injective at {p.elements}: {cex}"
    return True, "injective at all posets <= 3 (saturation asserted throughout)"


def _monotone_coalgebras(p: FinPoset, pos, limit: int = 64) -> list:
    convex = pos.result.elements
    out = []

    def extend(i: int, chosen: dict):
        if len(out) >= limit:
            return
        if i == len(p.elements):
            out.append(sem.Coalgebra.of(p, dict(chosen)))
            return
        x = p.elements[i]
        for c in convex:
            ok = True
            for y, cy in chosen.items():
                if p.leq(y, x) and not egli_milner_leq(p, cy, c):
                    ok = False
                elif p.leq(x, y) and not egli_milner_leq(p, c, cy):
                    ok = False
                if not ok:
                    break
            if ok:
                chosen[x] = c
                extend(i + 1, chosen)
                del chosen[x]

    extend(0, {})
    return out


def _upsets(p: FinPoset) -> list:
    return [u for u in powerset(p.elements)
            if up_closure(p, u) == u]


def _linear_formulas(depth: int, variables: tuple) -> list:
    atoms = [sem.var(v) for v in variables] + [sem.TOP, sem.BOT]
    level = list(atoms)
    out = list(atoms)
    for _ in range(depth):
        nxt = []
        for f in level:
            nxt.append(sem.box(f))
            nxt.append(sem.dia(f))
            for a in atoms:
                nxt.append(sem.conj(f, a))
                nxt.append(sem.disj(a, f))
        out.extend(nxt)
        level = nxt
    return out


def check_semantics_coherence(max_enum=DEFAULT_MAX_ENUM):
    # modal predicates agree for every upset, independently of any coalgebra
    for p in small_posets(3):
        pos, lifted, dprime = sem._positive_context(p, max_enum)
        for u in _upsets(p):
            dia_direct = frozenset(c for c in pos.result.elements if c & u)
            box_direct = frozenset(c for c in pos.result.elements if c <= u)
            if dprime.apply(lifted.diamond_of(u)) != dia_direct:
                return False, f"diamond predicates differ at {p.elements}, {u}"
            if dprime.apply(lifted.box_of(u)) != box_direct:
                return False, f"box predicates differ at {p.elements}, {u}"
    # end-to-end on sampled coalgebras and a structured formula family
    formulas = _linear_formulas(2, ("v",))
    deep = [sem.box(sem.dia(sem.box(sem.var("v")))),
            sem.dia(sem.conj(sem.var("v"), sem.dia(sem.var("v")))),
            sem.conj(sem.disj(sem.var("v"), sem.TOP), sem.box(sem.var("v")))]
    formulas = formulas + deep
    for p in iso_representatives(3):
        if len(p) == 0:
            continue
        pos = sem._pow_lifting(p, max_enum)
        for c in _monotone_coalgebras(p, pos, limit=6):
            for u in _upsets(p)[:4]:
                val = {"v": u}
                for f in formulas:
                    direct = sem.interpret_positive(c, val, f, "direct", max_enum)
                    ref = sem.interpret_positive(c, val, f, "delta", max_enum)
                    if direct != ref:
                        return False, f"routes differ on {p.elements}: {f}"
    return True, "direct and reference semantics agree on all posets <= 3"


def check_discrete_agreement(max_enum=DEFAULT_MAX_ENUM):
    formulas = _linear_formulas(2, ("v",))
    for n in (1, 2):
        p = discrete(LABELS[:n])
        subsets = list(powerset(p.elements))
        structures = _all_functions(p.elements, tuple(subsets))
        for st in structures:
            c = sem.Coalgebra.of(p, st)
            for u in subsets:
                val = {"v": u}
                for f in formulas:
                    if not f.is_positive:
                        continue
                    if sem.interpret_boolean(c, val, f, max_enum) != \
                            sem.interpret_positive(c, val, f, "direct", max_enum):
                        return False, f"semantics differ on a discrete {n}-set: {f}"
    return True, "boolean and positive semantics agree on discrete carriers"


# ------------------------------------------------------------------ suite

SUITES = {
    "order": (
        ("closure-laws", check_closure_laws),
        ("quotient-poset", check_quotient),
        ("comparable-pairs", check_cotensor),
        ("connected-components", check_components),
    ),
    "algebra": (
        ("duality-round-trip", check_birkhoff),
        ("free-boolean-algebra", check_free_ba),
        ("family-term-translation", check_nbhd_iso),
        ("boolean-kernel", check_kernel),
        ("envelope-collapse", check_gw_collapse),
        ("ordered-double", check_tensor2),
        ("inserter-presentation", check_dl_inserter),
        ("reflexive-pairs-symmetric", check_reflexive_pairs),
        ("dual-composition", check_dual_composition),
    ),
    "posetify": (
        ("lifting-oracle-equivalence", check_posetify_oracles),
        ("convex-powerset-form", check_powerset_closed_form),
        ("analytic-antisymmetry", check_analytic_antisymmetry),
        ("family-order", check_mnb_order),
        ("neighbourhood-collapse", check_nb_collapse),
        ("discrete-identity", check_discrete_identity),
        ("powerset-step-transitive", check_pow_transitive),
        ("family-step-transitivity-probe", check_mnb_transitivity_probe),
    ),
    "positivize": (
        ("normal-modal-closed-form", check_dunn_closed_form),
        ("positive-modal-axioms", check_dunn_axioms),
        ("free-modality-closed-form", check_fu_closed_form),
        ("free-modality-side-condition", check_fu_box_side_condition),
        ("boolean-agreement", check_beta),
        ("lifted-hom-action", check_positivize_mor),
    ),
    "semantics": (
        ("component-injective", check_delta_pow_injective),
        ("lifted-component-injective", check_delta_prime_injective),
        ("semantics-coherence", check_semantics_coherence),
        ("discrete-agreement", check_discrete_agreement),
    ),
}


@dataclass(frozen=True)
class CheckOutcome:
    suite: str
    name: str
    ok: bool
    detail: str


def run_suite(name: str, max_enum: int = DEFAULT_MAX_ENUM) -> list:
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise KeyError(name)
    out = []
    for suite in names:
        for check_name, fn in SUITES[suite]:
            try:
                ok, detail = fn(max_enum)
            except AssertionError as exc:
                ok, detail = False, f"assertion: {exc}"
            out.append(CheckOutcome(suite, check_name, ok, detail))
    return out
