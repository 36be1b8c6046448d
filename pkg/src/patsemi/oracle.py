"""Slow reference implementations used to cross-check the fast paths.

Everything here favors directness over speed: semigroups are enumerated by
walking the removal tree, and admission questions are answered by literally
generating sequences and testing values. None of it shares logic with the
step-vector reduction in the admission module, which is the point.
"""

from __future__ import annotations

from typing import Sequence, Union

from .admission import Witness
from .core import NumericalSemigroup, ordinary
from .errors import InputError
from .patterns import Pattern, ceil_div

# Number of numerical semigroups of each genus, starting at genus 0.
GENUS_COUNTS = (1, 1, 2, 4, 7, 12, 23, 39)


def enumerate_semigroups(
    max_genus: int, multiplicity: Union[int, None] = None
) -> list[NumericalSemigroup]:
    """Every semigroup of genus at most max_genus, level by level.

    Children in the removal tree drop one minimal generator above the
    Frobenius number, so each semigroup appears exactly once. With a fixed
    multiplicity the walk starts at the ordinary semigroup and never drops
    the multiplicity itself.
    """
    if max_genus < 0:
        return []
    if multiplicity is None:
        frontier = [ordinary(1)]
        fixed = False
    else:
        if not isinstance(multiplicity, int) or multiplicity < 1:
            raise InputError("multiplicity must be a positive integer")
        if multiplicity == 1:
            return [ordinary(1)]
        if multiplicity - 1 > max_genus:
            return []
        frontier = [ordinary(multiplicity)]
        fixed = True
    out: list[NumericalSemigroup] = []
    while frontier:
        out.extend(frontier)
        nxt = []
        for sg in frontier:
            if sg.genus >= max_genus:
                continue
            frob = sg.frobenius
            for x in sg.minimal_generators():
                if x <= frob or (fixed and x == sg.multiplicity):
                    continue
                nxt.append(sg.remove_element(x))
        frontier = nxt
    return out


def naive_admits(sg: NumericalSemigroup, pattern: Pattern, s1_bound: int) -> bool:
    """Test every nonincreasing sequence of nonzero members with top entry
    at most s1_bound, directly."""
    members = [x for x in sg.members_up_to(s1_bound) if x > 0]
    if not members:
        return True
    coeffs = pattern.coefficients
    n = pattern.length

    def rec(j: int, max_idx: int, partial: int) -> bool:
        if j == n:
            return sg.contains(partial)
        for idx in range(max_idx + 1):
            if not rec(j + 1, idx, partial + coeffs[j] * members[idx]):
                return False
        return True

    return rec(0, len(members) - 1, pattern.constant)


def find_violation(
    sg: NumericalSemigroup, pattern: Pattern, s1_bound: int
):
    """A verified violating sequence with top entry at most s1_bound, or
    None when no such sequence exists.

    Cheap probes run first (constant sequences, two-level sequences headed
    by small Apery elements, the long-head sequence that a negative partial
    sum makes negative); every probe is checked by direct evaluation, so a
    hit is always genuine. The exhaustive scan only runs when all probes
    miss.
    """
    coeffs = pattern.coefficients
    n = pattern.length
    m = sg.multiplicity
    if m > s1_bound:
        return None
    members = [x for x in sg.members_up_to(s1_bound) if x > 0]

    def checked(seq):
        value = pattern.evaluate(seq)
        if sg.contains(value):
            return None
        return Witness(tuple(seq), value)

    for t in members[:40]:
        hit = checked((t,) * n)
        if hit:
            return hit
    heads = set()
    for d in range(1, 9):
        e = d * m
        if sg.contains(e):
            for x in sg.apery(e):
                if 0 < x <= s1_bound:
                    heads.add(x)
    for x in sorted(heads):
        for j in range(1, n):
            hit = checked((x,) * j + (m,) * (n - j))
            if hit:
                return hit
    psums = pattern.partial_sums()
    for j, s in enumerate(psums):
        if s >= 0:
            continue
        tail = sum(coeffs[i] for i in range(j + 1, n)) * m + pattern.constant
        head = max(m, ceil_div(tail + 1, -s))
        while not sg.contains(head):
            head += 1
        if head <= s1_bound:
            hit = checked((head,) * (j + 1) + (m,) * (n - j - 1))
            if hit:
                return hit
        break
    seq = [0] * n

    def rec(j: int, max_idx: int, partial: int):
        if j == n:
            if sg.contains(partial):
                return None
            return Witness(tuple(seq), partial)
        for idx in range(max_idx + 1):
            seq[j] = members[idx]
            found = rec(j + 1, idx, partial + coeffs[j] * members[idx])
            if found:
                return found
        return None

    return rec(0, len(members) - 1, pattern.constant)


def valueset_profile(
    sg: NumericalSemigroup,
    coefficients: Sequence[int],
    s1_bounds: Sequence[int],
):
    """Bitmask of every coefficient-weighted sum over nonincreasing
    sequences of nonzero members, snapshotted at several top-entry bounds.

    Returns (offset, masks); bit k of masks[i] is set exactly when
    k - offset equals sum(coefficients[j] * s_j) for some nonincreasing
    sequence of nonzero members with s_1 <= s1_bounds[i]. Bounds must be
    ascending. Layer j of the accumulator holds the shifted sums of every
    suffix starting at j whose entries are members processed so far;
    feeding members in ascending order keeps the sequences nonincreasing.
    """
    bounds = list(s1_bounds)
    if any(b1 > b2 for b1, b2 in zip(bounds, bounds[1:])):
        raise InputError("s1_bounds must be ascending")
    coeffs = list(coefficients)
    n = len(coeffs)
    if n == 0:
        raise InputError("at least one coefficient is required")
    b_max = bounds[-1] if bounds else 0
    offs = [max(0, -a) * b_max for a in coeffs]
    offset = sum(offs)
    layers = [0] * n + [1]
    masks = []
    i = 0
    for t in [x for x in sg.members_up_to(b_max) if x > 0]:
        while i < len(bounds) and bounds[i] < t:
            masks.append(layers[0])
            i += 1
        for j in range(n - 1, -1, -1):
            layers[j] |= layers[j + 1] << (coeffs[j] * t + offs[j])
    while i < len(bounds):
        masks.append(layers[0])
        i += 1
    return offset, tuple(masks)


def profile_admits(
    sg: NumericalSemigroup, constant: int, offset: int, mask: int
) -> bool:
    """Decide admission from a value-set mask: bit k of the mask stands for
    the value k - offset, which must land in the semigroup once the
    pattern constant is added."""
    width = mask.bit_length()
    if width == 0:
        return True
    shift = offset - constant
    lam = sg._extended_bits(width + max(0, -shift) + 1)
    allowed = lam << shift if shift >= 0 else lam >> -shift
    return mask & ~allowed == 0
