"""Exact decision procedure for pattern admission.

A semigroup admits a pattern when applying it to every nonincreasing
sequence of nonzero members lands in the semigroup. Writing a sequence as
s_i = m + d_i + d_{i+1} + ... + d_n with nonnegative steps d_j turns the
pattern value into (sum of partial_sum_j * d_j) + total*m + a0, so once all
partial sums are nonnegative the value is monotone in every step. A
violating value must be at most the Frobenius number, which bounds each
step with a positive partial sum by the slack F - total*m - a0; steps with
a zero partial sum do not move the value and can be capped at the conductor
(pushing any entry past the conductor keeps it a member). That reduces
admission to a finite box scan, searched here in lexicographic step order
so the returned witness is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import NumericalSemigroup
from .errors import NotMember, PreconditionViolated, SearchTooLarge
from .patterns import (
    Pattern,
    admissible_multiplicities,
    ceil_div,
    is_strongly_admissible,
)

DEFAULT_SEARCH_CEILING = 10 ** 9

_SMALL_SCAN = 2048
_CHUNK = 1 << 16


@dataclass(frozen=True)
class Witness:
    """A sequence whose pattern value escapes the semigroup."""

    sequence: tuple[int, ...]
    value: int


def _negative_sum_witness(
    sg: NumericalSemigroup, pattern: Pattern, j: int
) -> Witness:
    # With partial sum j negative, a long enough constant head drives the
    # value below zero: seq = (l, ..., l, m, ..., m) with l on the first
    # j+1 positions has value psums[j]*l + tail.
    psums = pattern.partial_sums()
    m = sg.multiplicity
    n = pattern.length
    tail = sum(pattern.coefficients[i] for i in range(j + 1, n)) * m + pattern.constant
    lower = max(m, ceil_div(tail + 1, -psums[j]))
    head = lower
    while not sg.contains(head):
        head += 1
    seq = (head,) * (j + 1) + (m,) * (n - j - 1)
    return Witness(seq, pattern.evaluate(seq))


def _member_lookup(sg: NumericalSemigroup, size: int) -> np.ndarray:
    # lookup[i] == (i in sg) for 0 <= i < size
    if size <= 0:
        return np.zeros(0, dtype=bool)
    c = sg.conductor
    if c == 0:
        return np.ones(size, dtype=bool)
    raw = np.frombuffer(sg.bits.to_bytes((c + 7) // 8, "little"), dtype=np.uint8)
    low = np.unpackbits(raw, bitorder="little")[:c].astype(bool)
    if size <= c:
        return low[:size].copy()
    return np.concatenate([low, np.ones(size - c, dtype=bool)])


def _scan_small(sg, psums, caps, m, base, slack):
    n = len(psums)
    steps = [0] * n

    def rec(j: int, weighted: int):
        if j == n:
            value = base + weighted
            if sg.contains(value):
                return None
            seq = [0] * n
            suffix = 0
            for i in range(n - 1, -1, -1):
                suffix += steps[i]
                seq[i] = m + suffix
            if all(sg.contains(e) for e in seq):
                return Witness(tuple(seq), value)
            return None
        for d in range(caps[j] + 1):
            w = weighted + psums[j] * d
            if psums[j] >= 1 and w > slack:
                break
            steps[j] = d
            found = rec(j + 1, w)
            if found is not None:
                return found
        steps[j] = 0
        return None

    return rec(0, 0)


def _scan_chunked(sg, psums, caps, m, base):
    n = len(psums)
    sizes = [cap + 1 for cap in caps]
    volume = 1
    for s in sizes:
        volume *= s
    strides = [0] * n
    acc = 1
    for j in range(n - 1, -1, -1):
        strides[j] = acc
        acc *= sizes[j]
    lks = _member_lookup(sg, m + sum(caps) + 1)
    vmax = base + sum(p * cap for p, cap in zip(psums, caps) if p >= 1)
    lkv = np.zeros(vmax - base + 1, dtype=bool)
    if vmax >= 0:
        pos = _member_lookup(sg, vmax + 1)
        start = max(base, 0)
        lkv[start - base:] = pos[start:]
    psums_arr = np.asarray(psums, dtype=np.int64)
    for lo in range(0, volume, _CHUNK):
        hi = min(volume, lo + _CHUNK)
        flat = np.arange(lo, hi, dtype=np.int64)
        ds = [(flat // strides[j]) % sizes[j] for j in range(n)]
        ok = np.ones(hi - lo, dtype=bool)
        vals = np.full(hi - lo, base, dtype=np.int64)
        suffix = np.zeros(hi - lo, dtype=np.int64)
        for j in range(n - 1, -1, -1):
            suffix = suffix + ds[j]
            ok &= lks[m + suffix]
            vals += psums_arr[j] * ds[j]
        bad = ok & ~lkv[vals - base]
        if bad.any():
            i = int(np.argmax(bad))
            seq = [0] * n
            acc = 0
            for j in range(n - 1, -1, -1):
                acc += int(ds[j][i])
                seq[j] = m + acc
            return Witness(tuple(seq), int(vals[i]))
    return None


def violating_sequence(
    sg: NumericalSemigroup,
    pattern: Pattern,
    *,
    ceiling: int = DEFAULT_SEARCH_CEILING,
):
    """First violating sequence in lexicographic step order, or None.

    Raises SearchTooLarge when the box volume exceeds ``ceiling``.
    """
    psums = pattern.partial_sums()
    for j, s in enumerate(psums):
        if s < 0:
            return _negative_sum_witness(sg, pattern, j)
    m = sg.multiplicity
    total = psums[-1]
    base = total * m + pattern.constant
    slack = sg.frobenius - base
    if slack < 0:
        return None
    caps = [slack // s if s >= 1 else sg.conductor for s in psums]
    volume = 1
    for cap in caps:
        volume *= cap + 1
    if volume > ceiling:
        raise SearchTooLarge(
            f"admission scan needs {volume} step vectors, over the ceiling {ceiling}"
        )
    if volume <= _SMALL_SCAN:
        return _scan_small(sg, psums, caps, m, base, slack)
    return _scan_chunked(sg, psums, caps, m, base)


def admits(
    sg: NumericalSemigroup,
    pattern: Pattern,
    *,
    ceiling: int = DEFAULT_SEARCH_CEILING,
) -> bool:
    """True when every pattern application lands in the semigroup."""
    return violating_sequence(sg, pattern, ceiling=ceiling) is None


def is_minimal_v_generator(
    sg: NumericalSemigroup,
    pattern: Pattern,
    element: int,
    *,
    ceiling: int = DEFAULT_SEARCH_CEILING,
) -> bool:
    """Is the element needed in every generating system under the pattern?

    The closure operation may combine members additively or through pattern
    applications, with the multiplicity always available. An element is a
    minimal generator for that closure when it is a classical minimal
    generator other than the multiplicity and no pattern application built
    from members distinct from it produces it.
    """
    if not is_strongly_admissible(pattern):
        raise PreconditionViolated("pattern must be strongly admissible")
    if sg.multiplicity not in admissible_multiplicities(pattern):
        raise PreconditionViolated(
            f"multiplicity {sg.multiplicity} is outside the pattern's range"
        )
    if not admits(sg, pattern, ceiling=ceiling):
        raise PreconditionViolated("semigroup does not admit the pattern")
    if element < 1 or not sg.contains(element):
        raise NotMember(f"{element} is not a nonzero member")
    m = sg.multiplicity
    if element == m:
        return False
    if element not in sg.minimal_generators():
        return False
    psums = pattern.partial_sums()
    target = element - psums[-1] * m - pattern.constant
    if target < 0:
        return True
    n = pattern.length
    # Strong admissibility gives psums[j] >= 1, so the pattern value is at
    # least the top entry; a sequence producing the element therefore has
    # all entries at most element, i.e. step sum at most element - m.
    budget = element - m
    steps = [0] * n
    nodes = 0

    def rec(j: int, rem: int, used: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > ceiling:
            raise SearchTooLarge(
                f"generator scan visited more than {ceiling} nodes"
            )
        if j == n:
            if rem != 0:
                return False
            seq = [0] * n
            suffix = 0
            for i in range(n - 1, -1, -1):
                suffix += steps[i]
                seq[i] = m + suffix
            return all(sg.contains(e) and e != element for e in seq)
        cap = min(rem // psums[j], budget - used)
        for d in range(cap + 1):
            steps[j] = d
            if rec(j + 1, rem - psums[j] * d, used + d):
                return True
        steps[j] = 0
        return False

    return not rec(0, target, 0)
