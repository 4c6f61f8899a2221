"""Modal formulas, coalgebras, and their interpretation.

Boolean Kripke semantics runs over set-based successor coalgebras; the
positive side runs over monotone coalgebras for the convex-powerset
lifting, where satisfaction sets are upsets.  Both a direct recursion and
a reference route through the lifted semantic transformation are provided;
the two are kept in agreement by the verification suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Optional

from .algebra import up_algebra
from .errors import DEFAULT_MAX_ENUM, InputError, check_enum_budget
from .functors import pow_functor, powerset
from .order import FinPoset, is_upset
from .posetify import Posetification, egli_milner_leq, posetify_powerset
from .positivize import Positivication, positivize, semantic_l


# ----------------------------------------------------------------- syntax

@dataclass(frozen=True)
class Formula:
    op: str
    args: tuple = ()
    name: Optional[str] = None

    def __str__(self) -> str:
        if self.op == "var":
            return self.name
        if self.op in ("top", "bot"):
            return self.op
        return "(" + " ".join([self.op] + [str(a) for a in self.args]) + ")"

    @property
    def is_positive(self) -> bool:
        return self.op != "not" and all(a.is_positive for a in self.args)

    @property
    def depth(self) -> int:
        return (1 + max(a.depth for a in self.args)) if self.args else 0

    def variables(self) -> frozenset:
        if self.op == "var":
            return frozenset([self.name])
        out = frozenset()
        for a in self.args:
            out |= a.variables()
        return out


def var(name: str) -> Formula:
    return Formula("var", name=name)


TOP = Formula("top")
BOT = Formula("bot")


def neg(f: Formula) -> Formula:
    return Formula("not", (f,))


def conj(*fs: Formula) -> Formula:
    if not fs:
        return TOP
    out = fs[0]
    for f in fs[1:]:
        out = Formula("and", (out, f))
    return out


def disj(*fs: Formula) -> Formula:
    if not fs:
        return BOT
    out = fs[0]
    for f in fs[1:]:
        out = Formula("or", (out, f))
    return out


def box(f: Formula) -> Formula:
    return Formula("box", (f,))


def dia(f: Formula) -> Formula:
    return Formula("dia", (f,))


def _tokenize(text: str) -> list:
    return text.replace("(", " ( ").replace(")", " ) ").split()


def parse_formula(text: str) -> Formula:
    """Parse an s-expression formula: ``(dia (or p q))``, ``(box p)``,
    ``(not p)``, ``(and p q r)``, with ``top``/``bot`` constants."""
    tokens = _tokenize(text)
    if not tokens:
        raise InputError("empty formula")
    pos = 0

    def read() -> Formula:
        nonlocal pos
        if pos >= len(tokens):
            raise InputError("unexpected end of formula")
        tok = tokens[pos]
        pos += 1
        if tok == ")":
            raise InputError("unexpected ')'")
        if tok != "(":
            if tok == "top":
                return TOP
            if tok == "bot":
                return BOT
            if tok in ("and", "or", "not", "box", "dia"):
                raise InputError(f"operator {tok!r} needs parentheses")
            return var(tok)
        if pos >= len(tokens):
            raise InputError("unexpected end of formula")
        head = tokens[pos]
        pos += 1
        args = []
        while pos < len(tokens) and tokens[pos] != ")":
            args.append(read())
        if pos >= len(tokens):
            raise InputError("missing ')'")
        pos += 1
        if head in ("not", "box", "dia"):
            if len(args) != 1:
                raise InputError(f"{head!r} takes exactly one argument")
            return Formula(head, tuple(args))
        if head in ("and", "or"):
            if len(args) < 2:
                raise InputError(f"{head!r} takes at least two arguments")
            out = args[0]
            for a in args[1:]:
                out = Formula(head, (out, a))
            return out
        raise InputError(f"unknown operator {head!r}")

    out = read()
    if pos != len(tokens):
        raise InputError("trailing input after formula")
    return out


# -------------------------------------------------------------- coalgebras

@dataclass(frozen=True, eq=False)
class Coalgebra:
    """A successor-set coalgebra over a poset carrier.

    A plain set carrier is the discrete poset.  For positive semantics the
    structure map must be monotone for the lifted order and land on convex
    sets; this is checked by :func:`check_positive_coalgebra` at
    interpretation time, not at construction.
    """

    carrier: FinPoset
    structure: dict

    def __post_init__(self):
        elems = set(self.carrier.elements)
        for x in self.carrier.elements:
            if x not in self.structure:
                raise InputError(f"structure map undefined at {x!r}")
            if not frozenset(self.structure[x]) <= elems:
                raise InputError(f"successors of {x!r} leave the carrier")

    @classmethod
    def of(cls, carrier: FinPoset, structure: dict) -> "Coalgebra":
        return cls(carrier, {x: frozenset(vs) for x, vs in structure.items()})

    def gamma(self, x) -> frozenset:
        return self.structure[x]


def check_positive_coalgebra(c: Coalgebra,
                             pos: Posetification) -> None:
    """Structure values must be lifted-carrier elements (convex sets) and
    the map must be monotone for the lifted order."""
    convex = set(pos.result.elements)
    for x in c.carrier.elements:
        if c.gamma(x) not in convex:
            raise InputError(f"successor set of {x!r} is not convex")
    for x in c.carrier.elements:
        for y in c.carrier.elements:
            if c.carrier.leq(x, y) and \
                    not egli_milner_leq(c.carrier, c.gamma(x), c.gamma(y)):
                raise InputError(
                    f"structure map is not monotone between {x!r} and {y!r}")


def check_valuation(valuation: dict, carrier: FinPoset,
                    positive: bool) -> dict:
    out = {}
    elems = set(carrier.elements)
    for name, s in valuation.items():
        s = frozenset(s)
        if not s <= elems:
            raise InputError(f"valuation of {name!r} leaves the carrier")
        if positive and not is_upset(carrier, s):
            raise InputError(f"valuation of {name!r} is not an upset")
        out[name] = s
    return out


# ------------------------------------------------- the semantic component

@dataclass(frozen=True, eq=False)
class DeltaPow:
    """The semantic component over one finite set: it sends a modal-algebra
    element (a set of successor sets) to the predicate on successor sets it
    denotes.

    The map is generated from the diamond clause "the successor sets
    meeting the argument" and extended to the whole algebra through the
    atom decomposition, so totality is by construction, not stipulation.
    """

    states: tuple
    atom_image: dict

    def diamond(self, u: frozenset) -> frozenset:
        return frozenset(c for c in powerset(self.states) if c & u)

    def box(self, u: frozenset) -> frozenset:
        return frozenset(c for c in powerset(self.states) if c <= u)

    def apply(self, phi: frozenset) -> frozenset:
        out = frozenset()
        for c in phi:
            out |= self.atom_image[c]
        return out

    def domain(self, max_enum: int = DEFAULT_MAX_ENUM) -> list:
        subsets = powerset(self.states)
        check_enum_budget(1 << len(subsets), max_enum,
                          "semantic component domain")
        return [frozenset(subsets[k] for k in range(len(subsets))
                          if mask >> k & 1)
                for mask in range(1 << len(subsets))]


def delta_pow(states: tuple, max_enum: int = DEFAULT_MAX_ENUM) -> DeltaPow:
    states = tuple(states)
    check_enum_budget((1 << len(states)) ** 2, max_enum,
                      "semantic component construction")
    subsets = powerset(states)
    all_v = frozenset(subsets)
    atom_image = {}
    for c in subsets:
        img = all_v
        for u in c:
            img &= frozenset(v for v in subsets if u in v)
        rest = frozenset(states) - c
        dia_rest = frozenset(v for v in subsets if v & rest)
        img &= all_v - dia_rest
        atom_image[c] = img
    return DeltaPow(states, atom_image)


def injectivity_check(domain: Iterable, fn: Callable) -> tuple:
    """Exhaustive injectivity test; returns (ok, counterexample_or_None)."""
    seen: dict = {}
    for x in domain:
        y = fn(x)
        if y in seen and seen[y] != x:
            return False, (seen[y], x)
        seen[y] = x
    return True, None


# ----------------------------------------------- the lifted semantic map

@dataclass(frozen=True, eq=False)
class DeltaPrime:
    """The lifted semantic component at one poset.

    For every element of the lifted modal algebra, push it through the
    boolean component over the underlying set and transfer the resulting
    saturated predicate along the projection.  Saturation (the predicate
    is an up-closed union of classes) is asserted for every element, as is
    uniqueness of the transfer.
    """

    pos: Posetification
    lifted: Positivication
    table: dict

    def apply(self, member: frozenset) -> frozenset:
        return self.table[member]


def delta_prime(t, l, delta_factory, x: FinPoset,
                max_enum: int = DEFAULT_MAX_ENUM,
                pos: Posetification = None,
                lifted: Positivication = None) -> DeltaPrime:
    if pos is None:
        from .posetify import closed_form
        pos = closed_form(t, x, max_enum)
    if lifted is None:
        lifted = positivize(l, up_algebra(x), max_enum)
    dp = delta_factory(x.elements)
    if tuple(lifted.ambient.atoms) != tuple(t.on_obj(x.elements)):
        raise AssertionError("ambient algebra does not match the component domain")
    if pos.witness is None:
        raise InputError("lifting carries no witness relation to saturate against")
    carrier = pos.witness.carrier
    idx = {v: k for k, v in enumerate(carrier)}
    succ = [set() for _ in carrier]
    for i, j in pos.witness.rel:
        succ[i].add(j)
    table = {}
    for m in lifted.members:
        s = dp.apply(m)
        for v in s:
            for j in succ[idx[v]]:
                if carrier[j] not in s:
                    raise AssertionError(
                        "semantic image is not saturated for the lifted order")
        u = frozenset(pos.e[v] for v in s)
        if frozenset(v for v in carrier if pos.e[v] in u) != s:
            raise AssertionError("saturated image transfers to more than one upset")
        if not is_upset(pos.result, u):
            raise AssertionError("transferred predicate is not an upset")
        table[m] = u
    return DeltaPrime(pos, lifted, table)


# ----------------------------------------------------------- interpreters

def interpret_boolean(c: Coalgebra, valuation: dict, phi: Formula,
                      max_enum: int = DEFAULT_MAX_ENUM) -> frozenset:
    """Kripke semantics over a set-based successor coalgebra.

    Modal clauses go through the semantic component: a state satisfies the
    formula when its successor set lands in the component's image of the
    subformula's modal predicate.  An empty successor set therefore
    refutes every diamond and satisfies every box.
    """
    states = c.carrier.elements
    vals = check_valuation(valuation, c.carrier, positive=False)
    dp = delta_pow(states, max_enum)
    allstates = frozenset(states)

    def rec(f: Formula) -> frozenset:
        if f.op == "var":
            if f.name not in vals:
                raise InputError(f"unbound variable {f.name!r}")
            return vals[f.name]
        if f.op == "top":
            return allstates
        if f.op == "bot":
            return frozenset()
        if f.op == "not":
            return allstates - rec(f.args[0])
        if f.op == "and":
            return rec(f.args[0]) & rec(f.args[1])
        if f.op == "or":
            return rec(f.args[0]) | rec(f.args[1])
        if f.op in ("dia", "box"):
            u = rec(f.args[0])
            elem = dp.diamond(u) if f.op == "dia" else dp.box(u)
            pred = dp.apply(elem)
            return frozenset(x for x in states if c.gamma(x) in pred)
        raise InputError(f"unknown connective {f.op!r}")

    return rec(phi)


@lru_cache(maxsize=64)
def _pow_lifting(carrier: FinPoset, max_enum: int) -> Posetification:
    return posetify_powerset(carrier, max_enum)


@lru_cache(maxsize=64)
def _positive_context(carrier: FinPoset, max_enum: int):
    """Shared machinery for the reference route over one poset."""
    pos = _pow_lifting(carrier, max_enum)
    lifted = positivize(semantic_l(pow_functor(), max_enum),
                        up_algebra(carrier), max_enum)
    dprime = delta_prime(pow_functor(), None, delta_pow, carrier,
                         max_enum, pos=pos, lifted=lifted)
    return pos, lifted, dprime


def interpret_positive(c: Coalgebra, valuation: dict, phi: Formula,
                       method: str = "direct",
                       max_enum: int = DEFAULT_MAX_ENUM) -> frozenset:
    """Negation-free semantics over a monotone convex-successor coalgebra.

    ``method='direct'`` uses the one-step clauses (diamond: successor set
    meets the subformula; box: successor set contained in it).
    ``method='delta'`` routes every modal step through the lifted semantic
    component; it is the reference implementation the direct clauses are
    checked against.  Both return upsets.
    """
    if not phi.is_positive:
        raise InputError("positive interpretation needs a negation-free formula")
    if method not in ("direct", "delta"):
        raise InputError(f"unknown method {method!r}")
    vals = check_valuation(valuation, c.carrier, positive=True)
    if method == "delta":
        pos, lifted, dprime = _positive_context(c.carrier, max_enum)
    else:
        pos = _pow_lifting(c.carrier, max_enum)
        lifted = dprime = None
    check_positive_coalgebra(c, pos)
    states = c.carrier.elements
    allstates = frozenset(states)

    def modal_direct(op: str, u: frozenset) -> frozenset:
        if op == "dia":
            return frozenset(x for x in states if c.gamma(x) & u)
        return frozenset(x for x in states if c.gamma(x) <= u)

    def modal_delta(op: str, u: frozenset) -> frozenset:
        elem = lifted.diamond_of(u) if op == "dia" else lifted.box_of(u)
        if elem not in dprime.table:
            raise AssertionError("modal image left the lifted algebra")
        pred = dprime.apply(elem)
        return frozenset(x for x in states if c.gamma(x) in pred)

    modal = modal_direct if method == "direct" else modal_delta

    def rec(f: Formula) -> frozenset:
        if f.op == "var":
            if f.name not in vals:
                raise InputError(f"unbound variable {f.name!r}")
            return vals[f.name]
        if f.op == "top":
            return allstates
        if f.op == "bot":
            return frozenset()
        if f.op == "and":
            return rec(f.args[0]) & rec(f.args[1])
        if f.op == "or":
            return rec(f.args[0]) | rec(f.args[1])
        if f.op in ("dia", "box"):
            return modal(f.op, rec(f.args[0]))
        raise InputError(f"unknown connective {f.op!r}")

    out = rec(phi)
    if not is_upset(c.carrier, out):
        raise AssertionError("positive satisfaction set is not an upset")
    return out


def delta_pow_injective(states: tuple,
                        max_enum: int = DEFAULT_MAX_ENUM) -> tuple:
    dp = delta_pow(tuple(states), max_enum)
    return injectivity_check(dp.domain(), dp.apply)


def delta_prime_injective(x: FinPoset,
                          max_enum: int = DEFAULT_MAX_ENUM) -> tuple:
    _, _, dprime = _positive_context(x, max_enum)
    return injectivity_check(list(dprime.table), dprime.apply)
