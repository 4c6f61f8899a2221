"""Syntax liftings to distributive lattices and their closed forms."""

import pytest

from poslog.algebra import (FinBoolAlg, LatticeHom, boolean_as_lattice,
                            lattice_identity, lattice_isomorphic, up_algebra)
from poslog.errors import BudgetExceeded
from poslog.functors import mnb_functor, pow_functor
from poslog.order import FinPoset, MonotoneMap, discrete, enumerate_posets
from poslog.positivize import (beta, closed_form_dunn, closed_form_fu,
                               dunn_axiom_check, free_l, positivize,
                               positivize_mor, semantic_l)


def chain(*labels):
    return FinPoset.chain(labels)


def three_chain():
    return up_algebra(chain("p", "q"))


def two_lattice():
    return up_algebra(discrete(("s",)))


def small_spectra(n):
    out = []
    for k in range(n + 1):
        out.extend(enumerate_posets(("a", "b", "c")[:k]))
    return out


class TestSemanticFunctor:
    def test_on_objects_is_powerset_of_functor(self):
        l = semantic_l(pow_functor())
        b = FinBoolAlg(atoms=("x", "y"))
        lb = l.on_obj(b)
        assert len(lb.atoms) == 4  # subsets of a 2-set

    def test_functor_laws_on_sample_homs(self):
        from poslog.algebra import BAHom, ba_compose, ba_identity
        for l in (semantic_l(pow_functor()), free_l()):
            b = FinBoolAlg(atoms=("x", "y"))
            c = FinBoolAlg(atoms=("z",))
            ident = l.on_mor(ba_identity(b))
            for e in l.on_obj(b).carrier():
                assert ident.apply(e) == e
            f = BAHom(b, c, ("x",))
            g = BAHom(c, b, ("z", "z"))
            lhs = l.on_mor(ba_compose(g, f))
            rhs_f, rhs_g = l.on_mor(f), l.on_mor(g)
            for e in l.on_obj(b).carrier():
                assert lhs.apply(e) == rhs_g.apply(rhs_f.apply(e))


class TestPositivize:
    def test_boolean_input_collapses_to_whole_algebra(self):
        l = semantic_l(pow_functor())
        b = FinBoolAlg(atoms=("x", "y"))
        p = positivize(l, boolean_as_lattice(b))
        assert len(p.members) == l.on_obj(b).size()

    def test_dunn_three_chain_is_eight(self):
        p = positivize(semantic_l(pow_functor()), three_chain())
        assert len(p.members) == 8
        want = closed_form_dunn(three_chain())
        assert lattice_isomorphic(p.result, want) is not None

    def test_dunn_matches_closed_form_on_small_spectra(self):
        l = semantic_l(pow_functor())
        for sp in small_spectra(3):
            a = up_algebra(sp)
            p = positivize(l, a)
            assert lattice_isomorphic(p.result, closed_form_dunn(a)) is not None

    def test_free_three_chain_is_sixteen(self):
        p = positivize(free_l(), three_chain())
        assert len(p.members) == 16
        assert lattice_isomorphic(p.result, closed_form_fu(three_chain())) is not None

    def test_free_matches_closed_form_on_small_spectra(self):
        l = free_l()
        for sp in small_spectra(2):
            a = up_algebra(sp)
            p = positivize(l, a)
            assert lattice_isomorphic(p.result, closed_form_fu(a)) is not None

    def test_free_box_side_condition(self):
        a = three_chain()
        p = positivize(free_l(), a)
        assert not p.is_member(p.box_of(frozenset(["q"])))
        assert p.box_of(frozenset(["q"])) not in p.member_set()
        assert p.is_member(p.box_of(a.bot))
        assert p.is_member(p.box_of(a.top))

    def test_embedding_is_injective_lattice_map(self):
        p = positivize(semantic_l(pow_functor()), three_chain())
        pairs = list(p.embed.items())
        assert len({m for _, m in pairs}) == len(pairs)
        for r1, m1 in pairs:
            for r2, m2 in pairs:
                assert (r1 <= r2) == (m1 <= m2)

    def test_mnb_syntax_runs(self):
        p = positivize(semantic_l(mnb_functor()), three_chain())
        assert len(p.members) >= 2

    def test_free_budget_refusal_on_large_spectrum(self):
        # a 4-point spectrum gives a 16-element envelope carrier: too many
        # generators for the free syntax functor at the default budget
        a = up_algebra(discrete(("a", "b", "c", "d")))
        with pytest.raises(BudgetExceeded):
            positivize(free_l(), a)


class TestClosedForms:
    def test_dunn_sizes(self):
        assert len(closed_form_dunn(three_chain()).carrier()) == 8
        boolean2 = boolean_as_lattice(FinBoolAlg(atoms=("x", "y")))
        assert len(closed_form_dunn(boolean2).carrier()) == 16
        assert len(closed_form_dunn(two_lattice()).carrier()) == 4

    def test_fu_sizes(self):
        assert len(closed_form_fu(three_chain()).carrier()) == 16
        boolean1 = boolean_as_lattice(FinBoolAlg(atoms=("x",)))
        assert len(closed_form_fu(boolean1).carrier()) == 16
        assert len(closed_form_fu(two_lattice()).carrier()) == 16


class TestBeta:
    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_dunn_instance(self, n):
        l = semantic_l(pow_functor())
        b = FinBoolAlg(atoms=("x", "y")[:n])
        bt = beta(l, b)
        assert len(bt.source.carrier()) == l.on_obj(b).size()
        e = l.on_obj(b).carrier()[1]
        assert bt.inverse(bt.apply(e)) == e

    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_free_instance(self, n):
        l = free_l()
        b = FinBoolAlg(atoms=("x", "y")[:n])
        bt = beta(l, b)
        assert len(bt.source.carrier()) == l.on_obj(b).size()


class TestDunnAxioms:
    @pytest.mark.parametrize("a", [two_lattice(), three_chain(),
                                   boolean_as_lattice(FinBoolAlg(atoms=("x", "y")))],
                             ids=["two", "three-chain", "boolean"])
    def test_axioms_hold(self, a):
        report = dunn_axiom_check(a)
        assert report.ok, report.failures[:5]
        assert report.pairs_checked == len(a.carrier()) ** 2

    def test_boolean_case_matches_classical_duality(self):
        # on a Boolean lattice the diamond is the dual of the box
        b = FinBoolAlg(atoms=("x", "y"))
        a = boolean_as_lattice(b)
        p = positivize(semantic_l(pow_functor()), a)
        for x in a.carrier():
            dual = p.ambient.neg(p.box_of(b.neg(x)))
            assert p.diamond_of(x) == dual


class TestHomAction:
    def test_identity_and_tracking(self):
        l = semantic_l(pow_functor())
        p3 = positivize(l, three_chain())
        ident = positivize_mor(l, lattice_identity(three_chain()), p3, p3)
        assert all(k == v for k, v in ident.items())

        p2 = positivize(l, two_lattice())
        h = LatticeHom(two_lattice(), three_chain(),
                       MonotoneMap.of_dict(three_chain().spectrum,
                                           two_lattice().spectrum,
                                           {"p": "s", "q": "s"}))
        action = positivize_mor(l, h, p2, p3)
        assert action[p2.ambient.bot] == p3.ambient.bot
        assert action[p2.ambient.top] == p3.ambient.top

    def test_composition_law_on_samples(self):
        l = semantic_l(pow_functor())
        p2 = positivize(l, two_lattice())
        p3 = positivize(l, three_chain())
        h = LatticeHom(two_lattice(), three_chain(),
                       MonotoneMap.of_dict(three_chain().spectrum,
                                           two_lattice().spectrum,
                                           {"p": "s", "q": "s"}))
        back = LatticeHom(three_chain(), two_lattice(),
                          MonotoneMap.of_dict(two_lattice().spectrum,
                                              three_chain().spectrum,
                                              {"s": "q"}))
        f1 = positivize_mor(l, h, p2, p3)
        f2 = positivize_mor(l, back, p3, p2)
        from poslog.algebra import lattice_compose
        composite = positivize_mor(l, lattice_compose(back, h), p2, p2)
        for m in p2.members:
            assert composite[m] == f2[f1[m]]
