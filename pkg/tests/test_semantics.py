"""Formulas, interpretation, the semantic component and its lifting."""

import pytest

from poslog.errors import InputError
from poslog.functors import powerset
from poslog.order import FinPoset, discrete, enumerate_posets, up_closure
from poslog.posetify import egli_milner_leq
from poslog.semantics import (BOT, TOP, Coalgebra, box, conj, delta_pow,
                              delta_pow_injective, delta_prime_injective,
                              dia, disj, interpret_boolean,
                              interpret_positive, neg, parse_formula, var,
                              _positive_context)


def chain(*labels):
    return FinPoset.chain(labels)


class TestFormulas:
    def test_parse_and_print_round_trip(self):
        for text in ["(dia (or p q))", "(box p)", "(not p)", "top",
                     "(and p (dia top))"]:
            f = parse_formula(text)
            assert parse_formula(str(f)) == f

    def test_nary_connectives_fold(self):
        f = parse_formula("(and p q r)")
        assert f == conj(var("p"), var("q"), var("r"))

    def test_positivity_and_depth(self):
        assert parse_formula("(dia (or p q))").is_positive
        assert not parse_formula("(not p)").is_positive
        assert parse_formula("(box (dia p))").depth == 2
        assert TOP.depth == 0

    @pytest.mark.parametrize("bad", ["", "(dia)", "(not p q)", "(frob p)",
                                     "(and p", "p q", "box"])
    def test_parse_errors(self, bad):
        with pytest.raises(InputError):
            parse_formula(bad)


class TestCoalgebra:
    def test_total_structure_required(self):
        with pytest.raises(InputError):
            Coalgebra.of(discrete(("x", "y")), {"x": ["y"]})

    def test_successors_must_stay_inside(self):
        with pytest.raises(InputError):
            Coalgebra.of(discrete(("x",)), {"x": ["z"]})

    def test_non_monotone_rejected_by_positive_interpretation(self):
        c = Coalgebra.of(chain("x", "y"), {"x": ["y"], "y": []})
        with pytest.raises(InputError):
            interpret_positive(c, {"p": ["y"]}, var("p"))

    def test_non_convex_successor_rejected(self):
        c = Coalgebra.of(chain("x", "y", "z"), {"x": ["x", "z"],
                                                "y": ["x", "z"],
                                                "z": ["x", "z"]})
        with pytest.raises(InputError):
            interpret_positive(c, {}, TOP)


class TestDeltaComponent:
    def test_diamond_of_empty_is_empty(self):
        dp = delta_pow(("p", "q"))
        assert dp.apply(dp.diamond(frozenset())) == frozenset()

    def test_diamond_of_everything_is_nonempty_sets(self):
        dp = delta_pow(("p", "q"))
        want = frozenset(s for s in powerset(("p", "q")) if s)
        assert dp.apply(dp.diamond(frozenset(["p", "q"]))) == want

    def test_diamond_of_singleton(self):
        dp = delta_pow(("p", "q"))
        got = dp.apply(dp.diamond(frozenset(["p"])))
        assert got == frozenset([frozenset(["p"]), frozenset(["p", "q"])])

    def test_box_is_dual(self):
        dp = delta_pow(("p", "q"))
        u = frozenset(["q"])
        box_img = dp.apply(dp.box(u))
        assert box_img == frozenset([frozenset(), frozenset(["q"])])

    @pytest.mark.parametrize("n", [0, 1, 2, 3])
    def test_injective(self, n):
        ok, cex = delta_pow_injective(("a", "b", "c")[:n])
        assert ok, cex


class TestDeltaPrime:
    def test_two_chain_examples(self):
        pos, lifted, dprime = _positive_context(chain("x", "y"), 1 << 20)
        up_y = frozenset(["y"])
        dia_pred = dprime.apply(lifted.diamond_of(up_y))
        assert dia_pred == frozenset([frozenset(["y"]), frozenset(["x", "y"])])
        box_pred = dprime.apply(lifted.box_of(up_y))
        assert box_pred == frozenset([frozenset(), frozenset(["y"])])
        top_pred = dprime.apply(lifted.ambient.top)
        assert top_pred == frozenset(pos.result.elements)

    def test_predicates_are_upsets_in_lifted_order(self):
        pos, lifted, dprime = _positive_context(chain("x", "y"), 1 << 20)
        for member, pred in dprime.table.items():
            for c in pred:
                for d in pos.result.elements:
                    if pos.result.leq(c, d):
                        assert d in pred

    @pytest.mark.parametrize("n", [0, 1, 2, 3])
    def test_injective_on_small_posets(self, n):
        for p in enumerate_posets(("a", "b", "c")[:n]):
            ok, cex = delta_prime_injective(p)
            assert ok, (p.elements, cex)


class TestBooleanInterpretation:
    def setup_method(self):
        self.c = Coalgebra.of(discrete(("x", "y")), {"x": ["y"], "y": []})
        self.v = {"p": ["y"]}

    def test_constants(self):
        assert interpret_boolean(self.c, self.v, TOP) == {"x", "y"}
        assert interpret_boolean(self.c, self.v, BOT) == frozenset()

    def test_one_step_diamond(self):
        assert interpret_boolean(self.c, self.v, dia(var("p"))) == {"x"}

    def test_deadlock_states(self):
        assert interpret_boolean(self.c, self.v, neg(dia(TOP))) == {"y"}
        # the deadlock convention: empty successor set satisfies every box
        assert interpret_boolean(self.c, self.v, box(BOT)) == {"y"}

    def test_unbound_variable(self):
        with pytest.raises(InputError):
            interpret_boolean(self.c, {}, var("p"))


class TestPositiveInterpretation:
    def setup_method(self):
        self.c = Coalgebra.of(chain("x", "y"), {"x": ["y"], "y": ["y"]})
        self.v = {"p": ["y"]}

    @pytest.mark.parametrize("text,want", [
        ("(dia p)", {"x", "y"}),
        ("(box p)", {"x", "y"}),
        ("(and p (dia p))", {"y"}),
    ])
    def test_examples_both_routes(self, text, want):
        f = parse_formula(text)
        assert interpret_positive(self.c, self.v, f, "direct") == want
        assert interpret_positive(self.c, self.v, f, "delta") == want

    def test_negation_rejected(self):
        with pytest.raises(InputError):
            interpret_positive(self.c, self.v, neg(var("p")))

    def test_non_upset_valuation_rejected(self):
        with pytest.raises(InputError):
            interpret_positive(self.c, {"p": ["x"]}, var("p"))

    def test_results_are_upsets(self):
        for text in ["(dia p)", "(box p)", "(or p (box (dia p)))"]:
            got = interpret_positive(self.c, self.v, parse_formula(text))
            assert up_closure(self.c.carrier, got) == got


def monotone_coalgebras(p, convex, limit=10):
    out = []

    def extend(i, chosen):
        if len(out) >= limit:
            return
        if i == len(p.elements):
            out.append(Coalgebra.of(p, dict(chosen)))
            return
        x = p.elements[i]
        for c in convex:
            if all((not p.leq(y, x) or egli_milner_leq(p, cy, c)) and
                   (not p.leq(x, y) or egli_milner_leq(p, c, cy))
                   for y, cy in chosen.items()):
                chosen[x] = c
                extend(i + 1, chosen)
                del chosen[x]

    extend(0, {})
    return out


class TestCoherence:
    def test_modal_predicates_agree_for_every_upset(self):
        # gamma-independent form of route agreement: the predicate computed
        # by the lifted component equals the direct clause on every upset
        for n in range(4):
            for p in enumerate_posets(("a", "b", "c")[:n]):
                pos, lifted, dprime = _positive_context(p, 1 << 20)
                upsets = [u for u in powerset(p.elements)
                          if up_closure(p, u) == u]
                for u in upsets:
                    dia_direct = frozenset(c for c in pos.result.elements if c & u)
                    box_direct = frozenset(c for c in pos.result.elements if c <= u)
                    assert dprime.apply(lifted.diamond_of(u)) == dia_direct
                    assert dprime.apply(lifted.box_of(u)) == box_direct

    def test_formula_level_agreement_on_sampled_models(self):
        p = chain("x", "y", "z")
        pos, _, _ = _positive_context(p, 1 << 20)
        formulas = [dia(var("p")), box(var("p")),
                    box(dia(var("p"))), conj(var("p"), dia(var("p"))),
                    disj(box(var("p")), dia(box(var("p"))))]
        upsets = [u for u in powerset(p.elements) if up_closure(p, u) == u]
        for c in monotone_coalgebras(p, pos.result.elements, limit=8):
            for u in upsets:
                val = {"p": u}
                for f in formulas:
                    assert interpret_positive(c, val, f, "direct") == \
                        interpret_positive(c, val, f, "delta")


class TestDiscreteAgreement:
    def test_boolean_equals_positive_on_discrete(self):
        p = discrete(("x", "y"))
        subsets = list(powerset(p.elements))
        formulas = [var("p"), dia(var("p")), box(var("p")),
                    conj(dia(TOP), var("p")), disj(box(BOT), var("p")),
                    box(dia(var("p")))]
        for sx in subsets:
            for sy in subsets:
                c = Coalgebra.of(p, {"x": sx, "y": sy})
                for u in subsets:
                    val = {"p": u}
                    for f in formulas:
                        assert interpret_boolean(c, val, f) == \
                            interpret_positive(c, val, f, "direct")
