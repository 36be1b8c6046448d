"""Families of semigroups admitting a pattern, organized as a removal tree.

For a strongly admissible pattern p and an admissible multiplicity m, the
multiplicity-m semigroups admitting p form a variety: the family is closed
under intersection and under adjoining the Frobenius number, and it has the
ordinary semigroup as its maximum. That structure supports a genus-layered
tree rooted at ordinary(m) whose edges remove one effective generator at a
time, a closure operator generated by subsets of {0} union [m, infinity),
and minimal generating systems for individual members.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .admission import (
    DEFAULT_SEARCH_CEILING,
    admits,
    is_minimal_v_generator,
    violating_sequence,
)
from .core import (
    DEFAULT_CONDUCTOR_LIMIT,
    NumericalSemigroup,
    _normalize,
    from_generators,
    ordinary,
)
from .errors import (
    ConductorLimitExceeded,
    ElementBelowMultiplicity,
    GcdIsOne,
    InputError,
    NodeCeilingExceeded,
    PreconditionViolated,
)
from .patterns import Pattern, admissible_multiplicities, is_strongly_admissible

DEFAULT_NODE_CEILING = 10**6


@dataclass(frozen=True)
class TreeNode:
    """One tree entry: the semigroup, its parent's index, and the removed
    generator (both are None exactly at the root)."""

    semigroup: NumericalSemigroup
    parent: Optional[int]
    removed: Optional[int]


@dataclass(frozen=True)
class VarietyTree:
    nodes: tuple[TreeNode, ...]

    def __len__(self) -> int:
        return len(self.nodes)

    def semigroups(self) -> tuple[NumericalSemigroup, ...]:
        return tuple(node.semigroup for node in self.nodes)

    @property
    def root(self) -> Optional[NumericalSemigroup]:
        return self.nodes[0].semigroup if self.nodes else None


def _require_pattern_multiplicity(pattern: Pattern, multiplicity: int) -> None:
    # shared preconditions for every variety operation
    if not isinstance(multiplicity, int) or isinstance(multiplicity, bool):
        raise InputError(f"multiplicity must be an integer, got {multiplicity!r}")
    if multiplicity < 1:
        raise InputError("multiplicity must be positive")
    if not is_strongly_admissible(pattern):
        raise PreconditionViolated(f"pattern {pattern} is not strongly admissible")
    if multiplicity not in admissible_multiplicities(pattern):
        raise PreconditionViolated(
            f"multiplicity {multiplicity} is not admissible for pattern {pattern}"
        )


def _child_edges(
    sg: NumericalSemigroup, pattern: Pattern, ceiling: int
) -> list[tuple[int, NumericalSemigroup]]:
    """(removed generator, child) pairs, ascending by removed generator.

    Children arise by deleting a minimal generator above the Frobenius
    number (removing anything below it would not leave a semigroup with the
    same multiplicity in the family; removing m would change multiplicity).
    """
    out = []
    frob = sg.frobenius
    for x in sg.minimal_generators():
        if x <= frob or x == sg.multiplicity:
            continue
        cand = sg.remove_element(x)
        if admits(cand, pattern, ceiling=ceiling):
            out.append((x, cand))
    return out


def children(
    sg: NumericalSemigroup,
    pattern: Pattern,
    *,
    ceiling: int = DEFAULT_SEARCH_CEILING,
) -> list[NumericalSemigroup]:
    """Semigroups directly below sg in its variety, sorted by the removed
    generator (ascending).

    Requires pattern strongly admissible, the multiplicity admissible for
    it, and sg itself admitting the pattern.
    """
    _require_pattern_multiplicity(pattern, sg.multiplicity)
    if not admits(sg, pattern, ceiling=ceiling):
        raise PreconditionViolated(
            f"{sg!r} does not admit {pattern}, so it is outside the variety"
        )
    return [child for _, child in _child_edges(sg, pattern, ceiling)]


def tree_enumerate(
    pattern: Pattern,
    multiplicity: int,
    max_genus: Optional[int] = None,
    *,
    node_ceiling: int = DEFAULT_NODE_CEILING,
    ceiling: int = DEFAULT_SEARCH_CEILING,
) -> VarietyTree:
    """Enumerate the variety tree rooted at ordinary(multiplicity).

    max_genus=None means exhaustive enumeration; that terminates exactly
    when the variety is finite, and otherwise raises NodeCeilingExceeded
    once node_ceiling nodes have been produced. Each genus layer is emitted
    in generator-list order, so the node sequence is deterministic.
    """
    _require_pattern_multiplicity(pattern, multiplicity)
    if max_genus is not None:
        if not isinstance(max_genus, int) or isinstance(max_genus, bool):
            raise InputError(f"max_genus must be an integer, got {max_genus!r}")
        if max_genus < 0:
            raise InputError("max_genus must be nonnegative")
    root = ordinary(multiplicity)
    if max_genus is not None and root.genus > max_genus:
        return VarietyTree(())
    nodes: list[TreeNode] = [TreeNode(root, None, None)]
    frontier = [0]
    while frontier:
        layer: list[tuple[tuple[int, ...], int, int, NumericalSemigroup]] = []
        for idx in frontier:
            sg = nodes[idx].semigroup
            if max_genus is not None and sg.genus >= max_genus:
                continue
            for removed, child in _child_edges(sg, pattern, ceiling):
                layer.append((child.minimal_generators(), idx, removed, child))
        layer.sort(key=lambda item: item[0])
        frontier = []
        for _, parent_idx, removed, child in layer:
            if len(nodes) >= node_ceiling:
                raise NodeCeilingExceeded(
                    f"variety tree for {pattern} at multiplicity {multiplicity} "
                    f"exceeded {node_ceiling} nodes"
                )
            frontier.append(len(nodes))
            nodes.append(TreeNode(child, parent_idx, removed))
    return VarietyTree(tuple(nodes))


def is_variety_finite(pattern: Pattern, multiplicity: int) -> bool:
    """Whether the multiplicity-m variety of the pattern has finitely many
    members. Decided by whether the multiplicity is coprime to the constant
    term; requires a nonzero constant term."""
    _require_pattern_multiplicity(pattern, multiplicity)
    if pattern.constant == 0:
        raise PreconditionViolated(
            "finiteness criterion requires a nonzero constant term"
        )
    return math.gcd(multiplicity, pattern.constant) == 1


def infinite_family_witness(
    pattern: Pattern,
    multiplicity: int,
    k: int,
    *,
    conductor_limit: int = DEFAULT_CONDUCTOR_LIMIT,
) -> NumericalSemigroup:
    """A member of an infinite family inside the variety, parameterized by
    the conductor-controlling threshold k >= multiplicity.

    With d = gcd(multiplicity, constant) > 1 the semigroup consists of 0,
    the multiples of d from the multiplicity up to k, and everything from k
    on. Distinct k above multiplicity + 1 give distinct members whenever
    they avoid each other's tails, so the family is infinite. Raises
    GcdIsOne when d = 1 (the variety is finite then, so no such family).
    """
    _require_pattern_multiplicity(pattern, multiplicity)
    d = math.gcd(multiplicity, pattern.constant)
    if d == 1:
        raise GcdIsOne(
            "multiplicity and constant term are coprime; the variety is finite"
        )
    if not isinstance(k, int) or isinstance(k, bool):
        raise InputError(f"k must be an integer, got {k!r}")
    if k < multiplicity:
        raise InputError("k must be at least the multiplicity")
    if k + 1 > conductor_limit:
        raise ConductorLimitExceeded(
            f"threshold {k} exceeds the conductor limit {conductor_limit}"
        )
    bits = 1 | (1 << k)
    for x in range(multiplicity, k, d):
        bits |= 1 << x
    return _normalize(bits, k + 1)


@dataclass(frozen=True)
class SubmonoidRep:
    """A pattern-closed submonoid, stored as scale * core.

    The closure of a finite generating set need not be cofinite in the
    nonnegative integers: when every generator shares a common divisor d,
    the closure lives inside the multiples of d. The cofinite part is the
    core (a numerical semigroup); the represented set is scale * core.
    """

    scale: int
    core: NumericalSemigroup

    def contains(self, x: int) -> bool:
        return x % self.scale == 0 and self.core.contains(x // self.scale)

    def __contains__(self, x: int) -> bool:
        return isinstance(x, int) and not isinstance(x, bool) and self.contains(x)

    def members_up_to(self, bound: int) -> list[int]:
        return [self.scale * x for x in self.core.members_up_to(bound // self.scale)]

    def is_semigroup(self) -> bool:
        return self.scale == 1


def v_closure(
    pattern: Pattern,
    multiplicity: int,
    elements: Iterable[int],
    *,
    ceiling: int = DEFAULT_SEARCH_CEILING,
    conductor_limit: int = DEFAULT_CONDUCTOR_LIMIT,
) -> SubmonoidRep:
    """Smallest pattern-closed submonoid containing the elements and the
    multiplicity.

    Saturation loop: take the monoid generated so far, reduce by the gcd of
    its generators, and look for a violating application of the reduced
    pattern. Each violation found is adjoined and the search repeats; it
    terminates because every step either shrinks the gcd or fills a gap of
    the core. Elements must be 0 or at least the multiplicity.
    """
    _require_pattern_multiplicity(pattern, multiplicity)
    gens = {multiplicity}
    for e in elements:
        if not isinstance(e, int) or isinstance(e, bool) or e < 0:
            raise InputError(f"elements must be nonnegative integers, got {e!r}")
        if e == 0:
            continue
        if e < multiplicity:
            raise ElementBelowMultiplicity(
                f"element {e} is below the multiplicity {multiplicity}"
            )
        gens.add(e)
    total = pattern.partial_sums()[-1]
    while True:
        scale = 0
        for g in gens:
            scale = math.gcd(scale, g)
        core = from_generators(
            sorted(g // scale for g in gens), conductor_limit=conductor_limit
        )
        if pattern.constant % scale != 0:
            # the constant sequence at the multiplicity lands off-scale,
            # so its value is missing; adjoining it shrinks the gcd
            gens.add(total * multiplicity + pattern.constant)
            continue
        reduced = Pattern(pattern.coefficients, pattern.constant // scale)
        witness = violating_sequence(core, reduced, ceiling=ceiling)
        if witness is None:
            return SubmonoidRep(scale, core)
        gens.add(scale * witness.value)


def minimal_v_generating_system(
    sg: NumericalSemigroup,
    pattern: Pattern,
    *,
    full_sweep: bool = False,
    ceiling: int = DEFAULT_SEARCH_CEILING,
) -> tuple[int, ...]:
    """The minimal generators of sg with respect to pattern closure,
    sorted ascending. The multiplicity itself is never in the system (it is
    supplied by the closure operator), and the full set needs nothing.

    full_sweep=True additionally recomputes the system by sweeping every
    nonzero member x below conductor + 2*multiplicity and testing whether
    the closure of all the other members recovers x; members beyond that
    bound split as (x - m) + m with both parts in the pool, so they are
    never needed. A mismatch between the sweep and the per-element test is
    raised rather than resolved silently.
    """
    system = tuple(
        x
        for x in sg.minimal_generators()
        if is_minimal_v_generator(sg, pattern, x, ceiling=ceiling)
    )
    if full_sweep:
        m = sg.multiplicity
        pool = [x for x in sg.members_up_to(sg.conductor + 2 * m - 1) if x != 0]
        swept = []
        for x in pool:
            rest = [y for y in pool if y != x]
            closure = v_closure(pattern, m, rest, ceiling=ceiling)
            if not closure.contains(x):
                swept.append(x)
        if tuple(swept) != system:
            raise RuntimeError(
                f"minimal system disagreement for {sg!r} under {pattern}: "
                f"generator test gave {system}, full sweep gave {tuple(swept)}"
            )
    return system
