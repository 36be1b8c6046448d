"""Parsing and formatting for semigroups, patterns, and variety trees.

Text forms:
  semigroup   "<5,6,8,9>" (generators) or "gaps:1,2,3,4,7" (complement)
  pattern     "x1+x2-1", "2x1-6", "3*x1" or machine form "coeffs=1,1;const=-1"
  tree        JSON {"nodes":[{"id","gens","genus","parent","removed"},...]}
              or DOT with node labels "<gens>" and edge labels "-removed"

All formatters are deterministic: equal inputs give byte-equal output.
"""

from __future__ import annotations

import json
import re

from .core import (
    DEFAULT_CONDUCTOR_LIMIT,
    NumericalSemigroup,
    from_gaps,
    from_generators,
)
from .errors import InputError, ParseError
from .patterns import Pattern
from .variety import TreeNode, VarietyTree


def format_semigroup(sg: NumericalSemigroup) -> str:
    return "<" + ",".join(str(g) for g in sg.minimal_generators()) + ">"


def _parse_int_list(body: str, what: str) -> list[int]:
    items = []
    for tok in body.split(","):
        tok = tok.strip()
        try:
            items.append(int(tok))
        except ValueError:
            raise ParseError(f"bad integer {tok!r} in {what}") from None
    return items


def parse_semigroup(
    text: str, *, conductor_limit: int = DEFAULT_CONDUCTOR_LIMIT
) -> NumericalSemigroup:
    t = text.strip()
    if t.startswith("gaps:"):
        body = t[len("gaps:"):].strip()
        gaps = _parse_int_list(body, "gap list") if body else []
        return from_gaps(gaps, conductor_limit=conductor_limit)
    for opener, closer in (("<", ">"), ("⟨", "⟩")):
        if t.startswith(opener) and t.endswith(closer) and len(t) > 2:
            body = t[len(opener) : -len(closer)].strip()
            if not body:
                raise ParseError("empty generator list")
            gens = _parse_int_list(body, "generator list")
            return from_generators(gens, conductor_limit=conductor_limit)
    raise ParseError(
        f"cannot parse semigroup {text!r}; expected <g1,g2,...> or gaps:g1,g2,..."
    )


_TERM = re.compile(r"^([+-]?)(?:(\d+)\*?)?x(\d+)$")
_CONST = re.compile(r"^[+-]?\d+$")


def _parse_machine_pattern(t: str) -> Pattern:
    fields = t.split(";")
    if not fields[0].startswith("coeffs="):
        raise ParseError(f"machine pattern must start with coeffs=, got {t!r}")
    coeffs = _parse_int_list(fields[0][len("coeffs="):], "coefficient list")
    const = 0
    if len(fields) == 2:
        if not fields[1].startswith("const="):
            raise ParseError(f"second machine pattern field must be const=, got {t!r}")
        const_body = fields[1][len("const="):]
        if not _CONST.match(const_body):
            raise ParseError(f"bad constant {const_body!r}")
        const = int(const_body)
    elif len(fields) > 2:
        raise ParseError(f"too many fields in machine pattern {t!r}")
    try:
        return Pattern(tuple(coeffs), const)
    except InputError as exc:
        raise ParseError(str(exc)) from None


def parse_pattern(text: str) -> Pattern:
    t = "".join(text.split())
    if not t:
        raise ParseError("empty pattern")
    if t.startswith("coeffs="):
        return _parse_machine_pattern(t)
    coeffs: dict[int, int] = {}
    const = 0
    terms = re.findall(r"[+-]?[^+-]+", t)
    if "".join(terms) != t:
        raise ParseError(f"cannot parse pattern {text!r}")
    for term in terms:
        mt = _TERM.match(term)
        if mt:
            sign, mag, idx = mt.groups()
            coeff = int(mag) if mag else 1
            if sign == "-":
                coeff = -coeff
            i = int(idx)
            if i in coeffs:
                raise ParseError(f"duplicate variable x{i} in pattern {text!r}")
            coeffs[i] = coeff
        elif _CONST.match(term):
            const += int(term)
        else:
            raise ParseError(f"cannot parse term {term!r} in pattern {text!r}")
    if not coeffs:
        raise ParseError(f"pattern {text!r} has no variable term")
    n = max(coeffs)
    if sorted(coeffs) != list(range(1, n + 1)):
        raise ParseError(
            f"pattern {text!r} must use variables x1..xn with no index gaps"
        )
    try:
        return Pattern(tuple(coeffs[i] for i in range(1, n + 1)), const)
    except InputError as exc:
        raise ParseError(str(exc)) from None


def format_pattern(pattern: Pattern) -> str:
    return str(pattern)


def format_pattern_machine(pattern: Pattern) -> str:
    coeffs = ",".join(str(a) for a in pattern.coefficients)
    return f"coeffs={coeffs};const={pattern.constant}"


def tree_to_json(tree: VarietyTree) -> str:
    nodes = []
    for i, node in enumerate(tree.nodes):
        nodes.append(
            {
                "id": i,
                "gens": list(node.semigroup.minimal_generators()),
                "genus": node.semigroup.genus,
                "parent": node.parent,
                "removed": node.removed,
            }
        )
    return json.dumps({"nodes": nodes}, separators=(",", ":"))


def tree_from_json(
    text: str, *, conductor_limit: int = DEFAULT_CONDUCTOR_LIMIT
) -> VarietyTree:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad tree JSON: {exc}") from None
    if not isinstance(data, dict) or not isinstance(data.get("nodes"), list):
        raise ParseError('tree JSON must be an object with a "nodes" list')
    nodes: list[TreeNode] = []
    for i, raw in enumerate(data["nodes"]):
        if not isinstance(raw, dict):
            raise ParseError(f"node {i} is not an object")
        if raw.get("id") != i:
            raise ParseError(f"node ids must be sequential from 0, got {raw.get('id')!r}")
        gens = raw.get("gens")
        if not isinstance(gens, list) or not gens:
            raise ParseError(f"node {i} has no generator list")
        sg = from_generators(gens, conductor_limit=conductor_limit)
        if list(sg.minimal_generators()) != gens:
            raise ParseError(f"node {i} generator list {gens} is not minimal")
        if raw.get("genus") != sg.genus:
            raise ParseError(
                f"node {i} genus {raw.get('genus')!r} does not match {sg.genus}"
            )
        parent = raw.get("parent")
        removed = raw.get("removed")
        if (parent is None) != (removed is None):
            raise ParseError(f"node {i} must have parent and removed together")
        if parent is not None:
            if not isinstance(parent, int) or not 0 <= parent < i:
                raise ParseError(f"node {i} parent {parent!r} out of range")
            if not isinstance(removed, int):
                raise ParseError(f"node {i} removed {removed!r} is not an integer")
        nodes.append(TreeNode(sg, parent, removed))
    return VarietyTree(tuple(nodes))


def tree_to_dot(tree: VarietyTree) -> str:
    lines = ["digraph variety {"]
    for i, node in enumerate(tree.nodes):
        lines.append(f'  n{i} [label="{format_semigroup(node.semigroup)}"];')
    for i, node in enumerate(tree.nodes):
        if node.parent is not None:
            lines.append(f"  n{node.parent} -> n{i} [label=\"-{node.removed}\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"
