"""JSON formats and Graphviz export.

Poset JSON may omit reflexive and transitive pairs; they are completed on
load.  DOT output draws the Hasse diagram only (cover relation) and is
deterministic byte for byte for a fixed input.
"""

from __future__ import annotations

import json
from typing import Any

from .algebra import FinBoolAlg, FinDistLattice, boolean_as_lattice, up_algebra
from .errors import DEFAULT_MAX_ENUM, InputError
from .order import FinPoset
from .semantics import Coalgebra


def load_poset(data: Any) -> FinPoset:
    if not isinstance(data, dict) or "elements" not in data:
        raise InputError("poset JSON needs an 'elements' list")
    elements = data["elements"]
    if not isinstance(elements, list):
        raise InputError("'elements' must be a list")
    pairs = data.get("leq", [])
    if not isinstance(pairs, list) or \
            any(not isinstance(p, list) or len(p) != 2 for p in pairs):
        raise InputError("'leq' must be a list of [a, b] pairs")
    return FinPoset.from_pairs(elements, [tuple(p) for p in pairs],
                               complete=True)


def poset_to_dict(p: FinPoset) -> dict:
    return {
        "elements": [format_label(e) for e in p.elements],
        "leq": [[format_label(a), format_label(b)] for a, b in p.covers()],
    }


def load_lattice(data: Any):
    if not isinstance(data, dict) or "type" not in data:
        raise InputError("lattice JSON needs a 'type' of 'dl' or 'ba'")
    kind = data["type"]
    if kind == "dl":
        if "spectrum" not in data:
            raise InputError("'dl' lattice JSON needs a 'spectrum' poset")
        return up_algebra(load_poset(data["spectrum"]))
    if kind == "ba":
        atoms = data.get("atoms")
        if not isinstance(atoms, list):
            raise InputError("'ba' lattice JSON needs an 'atoms' list")
        return FinBoolAlg(atoms=tuple(atoms))
    raise InputError(f"unknown lattice type {kind!r}")


def as_lattice(obj) -> FinDistLattice:
    return boolean_as_lattice(obj) if isinstance(obj, FinBoolAlg) else obj


def load_coalgebra(data: Any) -> Coalgebra:
    if not isinstance(data, dict) or "carrier" not in data or \
            "structure" not in data:
        raise InputError("coalgebra JSON needs 'carrier' and 'structure'")
    carrier = data["carrier"]
    if isinstance(carrier, list):
        poset = FinPoset.discrete(carrier)
    else:
        poset = load_poset(carrier)
    structure = data["structure"]
    if not isinstance(structure, dict):
        raise InputError("'structure' must map states to successor lists")
    try:
        return Coalgebra.of(poset,
                            {x: frozenset(vs) for x, vs in structure.items()})
    except TypeError as exc:
        raise InputError("successor lists must be lists of states") from exc


def load_valuation(data: Any) -> dict:
    if not isinstance(data, dict):
        raise InputError("valuation JSON must map variables to state lists")
    out = {}
    for name, states in data.items():
        if not isinstance(states, list):
            raise InputError(f"valuation of {name!r} must be a list")
        out[name] = frozenset(states)
    return out


def read_json(path: str) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def format_label(label) -> str:
    """Human-readable, deterministic rendering of nested set labels."""
    if isinstance(label, frozenset):
        return "{" + ",".join(sorted(format_label(v) for v in label)) + "}"
    if isinstance(label, tuple):
        return "(" + ",".join(format_label(v) for v in label) + ")"
    return str(label)


def _dot_lines(elements, covers, title) -> str:
    names = {e: f"n{k}" for k, e in enumerate(elements)}
    lines = ["digraph hasse {"]
    if title:
        lines.append(f'  label="{title}";')
    lines.append("  rankdir=BT;")
    lines.append('  node [shape=box, fontsize=10];')
    for e in elements:
        lines.append(f'  {names[e]} [label="{format_label(e)}"];')
    for a, b in covers:
        lines.append(f"  {names[a]} -> {names[b]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_dot(p: FinPoset, title: str = "") -> str:
    return _dot_lines(p.elements, p.covers(), title)


def lattice_dot(lat: FinDistLattice, title: str = "",
                max_enum: int = DEFAULT_MAX_ENUM) -> str:
    """Hasse diagram of the element order of a lattice."""
    elems = lat.carrier(max_enum)
    order = FinPoset(tuple(elems),
                     tuple(frozenset(j for j, f in enumerate(elems) if e <= f)
                           for e in elems))
    return _dot_lines(order.elements, order.covers(), title)
