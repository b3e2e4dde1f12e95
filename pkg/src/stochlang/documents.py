"""Text document format for automata, and a companion format for DFAs.

Documents are JSON with a fixed key set. All weights are rational strings
"p" or "p/q" with decimal integers and q > 0; omitted entries mean weight
zero. Serialization is canonical: parsing a document and serialising the
result is byte-identical once weights are in lowest terms.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .automata import MultiplicityAutomaton
from .classify import Dfa

_RATIONAL_RE = re.compile(r"^-?\d+(?:/\d+)?$")


class DocumentError(ValueError):
    """A document failed validation; the message names the offending item."""


def format_rational(value: Fraction) -> str:
    return str(value)


def parse_rational(text: object, where: str) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise DocumentError(f"{where}: malformed rational {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise DocumentError(f"{where}: malformed rational {text!r} (zero denominator)")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def _require_keys(data: dict, allowed: set[str], required: set[str], what: str) -> None:
    unknown = set(data) - allowed
    if unknown:
        raise DocumentError(f"{what}: unknown key {sorted(unknown)[0]!r}")
    missing = required - set(data)
    if missing:
        raise DocumentError(f"{what}: missing key {sorted(missing)[0]!r}")


def _name_list(data: object, what: str, forbid_dots: bool = False) -> list[str]:
    if not isinstance(data, list) or not all(isinstance(x, str) and x for x in data):
        raise DocumentError(f"{what} must be a list of non-empty strings")
    if len(set(data)) != len(data):
        raise DocumentError(f"duplicate entry in {what}")
    if forbid_dots:
        for x in data:
            if "." in x or x == "@":
                raise DocumentError(f"{what}: name {x!r} is reserved for word syntax")
    return data


def parse_automaton(text: str) -> MultiplicityAutomaton:
    """Parse an automaton document, rejecting anything structurally unsound."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid document: {exc}") from None
    if not isinstance(data, dict):
        raise DocumentError("document must be a JSON object")
    _require_keys(data, {"alphabet", "states", "initial", "final", "transitions"},
                  {"alphabet", "states"}, "document")
    alphabet = _name_list(data["alphabet"], "alphabet", forbid_dots=True)
    states = _name_list(data["states"], "states")
    state_set = set(states)
    letter_set = set(alphabet)

    def weight_map(key: str) -> dict[str, Fraction]:
        raw = data.get(key, {})
        if not isinstance(raw, dict):
            raise DocumentError(f"{key} must be an object mapping states to rationals")
        out = {}
        for q, w in raw.items():
            if q not in state_set:
                raise DocumentError(f"{key}[{q!r}]: unknown state")
            out[q] = parse_rational(w, f"{key}[{q!r}]")
        return out

    iota = weight_map("initial")
    tau = weight_map("final")

    raw_transitions = data.get("transitions", [])
    if not isinstance(raw_transitions, list):
        raise DocumentError("transitions must be a list")
    phi: dict[tuple[str, str, str], Fraction] = {}
    for item in raw_transitions:
        if (not isinstance(item, list) or len(item) != 4
                or not all(isinstance(x, str) for x in item[:3])):
            raise DocumentError(f"transition {item!r} must be [from, letter, to, weight]")
        q, x, r, w = item
        where = f"transition [{q!r}, {x!r}, {r!r}]"
        if q not in state_set:
            raise DocumentError(f"{where}: unknown source state {q!r}")
        if r not in state_set:
            raise DocumentError(f"{where}: unknown target state {r!r}")
        if x not in letter_set:
            raise DocumentError(f"{where}: unknown letter {x!r}")
        if (q, x, r) in phi:
            raise DocumentError(f"duplicate {where}")
        phi[(q, x, r)] = parse_rational(w, where)
    return MultiplicityAutomaton(alphabet, states, iota, tau, phi)


def serialize_automaton(a: MultiplicityAutomaton) -> str:
    """Canonical document text for an automaton."""
    letter_index = {x: i for i, x in enumerate(a.alphabet)}
    state_index = {q: i for i, q in enumerate(a.states)}
    transitions = sorted(
        a.phi.items(),
        key=lambda item: (state_index[item[0][0]], letter_index[item[0][1]],
                          state_index[item[0][2]]))
    doc = {
        "alphabet": list(a.alphabet),
        "states": list(a.states),
        "initial": {q: format_rational(a.iota[q]) for q in a.states if q in a.iota},
        "final": {q: format_rational(a.tau[q]) for q in a.states if q in a.tau},
        "transitions": [[q, x, r, format_rational(w)] for (q, x, r), w in transitions],
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_dfa(text: str) -> Dfa:
    """Parse a DFA document: keys alphabet, states, initial, finals, transitions."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid document: {exc}") from None
    if not isinstance(data, dict):
        raise DocumentError("document must be a JSON object")
    _require_keys(data, {"alphabet", "states", "initial", "finals", "transitions"},
                  {"alphabet", "states", "initial"}, "document")
    alphabet = _name_list(data["alphabet"], "alphabet", forbid_dots=True)
    states = _name_list(data["states"], "states")
    state_set = set(states)
    initial = data["initial"]
    if initial not in state_set:
        raise DocumentError(f"initial: unknown state {initial!r}")
    finals = data.get("finals", [])
    if not isinstance(finals, list) or not all(q in state_set for q in finals):
        raise DocumentError("finals must list declared states")
    raw_transitions = data.get("transitions", [])
    if not isinstance(raw_transitions, list):
        raise DocumentError("transitions must be a list")
    delta: dict[tuple[str, str], str] = {}
    for item in raw_transitions:
        if not isinstance(item, list) or len(item) != 3 or not all(
                isinstance(x, str) for x in item):
            raise DocumentError(f"transition {item!r} must be [from, letter, to]")
        q, x, r = item
        where = f"transition [{q!r}, {x!r}, {r!r}]"
        if q not in state_set or r not in state_set:
            raise DocumentError(f"{where}: unknown state")
        if x not in set(alphabet):
            raise DocumentError(f"{where}: unknown letter {x!r}")
        if (q, x) in delta:
            raise DocumentError(f"{where}: second transition for this state and letter")
        delta[(q, x)] = r
    return Dfa(tuple(alphabet), tuple(states), initial, frozenset(finals), delta)


def serialize_dfa(d: Dfa) -> str:
    letter_index = {x: i for i, x in enumerate(d.alphabet)}
    state_index = {q: i for i, q in enumerate(d.states)}
    transitions = sorted(d.delta.items(),
                         key=lambda item: (state_index[item[0][0]], letter_index[item[0][1]]))
    doc = {
        "alphabet": list(d.alphabet),
        "states": list(d.states),
        "initial": d.initial,
        "finals": [q for q in d.states if q in d.finals],
        "transitions": [[q, x, r] for (q, x), r in transitions],
    }
    return json.dumps(doc, indent=2) + "\n"
