"""Numerical semigroup arithmetic on compact bitmap representations.

A numerical semigroup is a cofinite additive submonoid of the nonnegative
integers. Instances are immutable and store only the membership bitmap below
the conductor; every integer at or above the conductor is a member by
definition, so the bitmap plus the conductor determines the whole set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    ConductorLimitExceeded,
    InputError,
    IsFullSet,
    NotCofinite,
    NotMember,
    NotMinimalGenerator,
)

DEFAULT_CONDUCTOR_LIMIT = 2 ** 20


def _check_positive_ints(values: Iterable[int], what: str) -> None:
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise InputError(f"{what} must be positive integers, got {v!r}")


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup.

    Fields are derived, not chosen: ``bits`` holds membership for the
    interval [0, conductor) with bit i set when i is a member, and the
    full set of nonnegative integers is the unique instance with
    conductor 0. Use the module constructors instead of instantiating
    directly.
    """

    conductor: int
    bits: int
    multiplicity: int
    genus: int

    @property
    def frobenius(self) -> int:
        """Largest non-member; -1 for the full set."""
        return self.conductor - 1

    @property
    def is_full(self) -> bool:
        return self.conductor == 0

    def contains(self, x: int) -> bool:
        if x < 0:
            return False
        if x >= self.conductor:
            return True
        return (self.bits >> x) & 1 == 1

    def __contains__(self, x: int) -> bool:
        return self.contains(x)

    def members_up_to(self, bound: int) -> list[int]:
        """All members x with 0 <= x <= bound, ascending."""
        return [x for x in range(bound + 1) if self.contains(x)]

    def gaps(self) -> list[int]:
        """All non-members, ascending."""
        return [x for x in range(self.conductor) if not self.contains(x)]

    def apery(self, element: int) -> tuple[int, ...]:
        """Smallest members in each residue class modulo a nonzero member.

        Returns the set {s in S : s - element not in S}, ascending. Has
        exactly ``element`` entries, one per residue class.
        """
        if element < 1 or not self.contains(element):
            raise NotMember(f"{element} is not a nonzero member")
        out = []
        for s in range(self.conductor + element):
            if self.contains(s) and not self.contains(s - element):
                out.append(s)
        return tuple(out)

    def minimal_generators(self) -> tuple[int, ...]:
        """The unique minimal generating system, ascending.

        A nonzero member is a minimal generator when it is not the sum of
        two nonzero members. Candidates other than the multiplicity all lie
        in the Apery set of the multiplicity, and a decomposition w = u + v
        with w in that Apery set forces u into it as well, so the check
        below is exact.
        """
        if self.conductor == 0:
            return (1,)
        m = self.multiplicity
        ap = [w for w in self.apery(m) if w != 0]
        gens = [m]
        for w in ap:
            if not any(self.contains(w - u) for u in ap if u < w):
                gens.append(w)
        return tuple(gens)

    def embedding_dimension(self) -> int:
        return len(self.minimal_generators())

    def is_med(self) -> bool:
        """Maximal embedding dimension: as many minimal generators as the
        multiplicity allows."""
        return self.embedding_dimension() == self.multiplicity

    def _extended_bits(self, window: int) -> int:
        # membership bitmap over [0, window), filled above the conductor
        if window <= self.conductor:
            return self.bits & ((1 << max(window, 0)) - 1)
        high = ((1 << (window - self.conductor)) - 1) << self.conductor
        return self.bits | high

    def intersect(self, other: "NumericalSemigroup") -> "NumericalSemigroup":
        w = max(self.conductor, other.conductor)
        return _normalize(self._extended_bits(w) & other._extended_bits(w), w)

    def adjoin_frobenius(self) -> "NumericalSemigroup":
        """The semigroup obtained by filling the largest gap."""
        if self.conductor == 0:
            raise IsFullSet("the full set has no Frobenius number")
        return _normalize(self.bits | (1 << (self.conductor - 1)), self.conductor)

    def remove_element(self, element: int) -> "NumericalSemigroup":
        """Drop a minimal generator; the result is again a semigroup."""
        if element < 1 or not self.contains(element):
            raise NotMember(f"{element} is not a nonzero member")
        if element not in self.minimal_generators():
            raise NotMinimalGenerator(
                f"{element} is a sum of nonzero members; removing it would "
                f"break additive closure"
            )
        w = max(self.conductor, element + 2)
        return _normalize(self._extended_bits(w) & ~(1 << element), w)

    def quotient(self, divisor: int) -> "NumericalSemigroup":
        """{x >= 0 : divisor * x is a member}."""
        if not isinstance(divisor, int) or divisor < 1:
            raise InputError(f"divisor must be a positive integer, got {divisor!r}")
        if divisor == 1 or self.conductor == 0:
            return self
        w = (self.conductor + divisor - 1) // divisor + 1
        bits = 0
        for x in range(w):
            if self.contains(divisor * x):
                bits |= 1 << x
        return _normalize(bits, w)

    def validate(self) -> bool:
        """Check internal consistency; raises InputError on any defect."""
        c, b, m, g = self.conductor, self.bits, self.multiplicity, self.genus
        if c == 0:
            if (b, m, g) != (0, 1, 0):
                raise InputError("full set must be (0, 0, 1, 0)")
            return True
        if c < 2 or b & 1 == 0 or b >> c:
            raise InputError("bitmap malformed or zero missing")
        if (b >> (c - 1)) & 1:
            raise InputError("conductor is not minimal")
        above = b >> 1
        low = (above & -above).bit_length() if above else c
        if low != m:
            raise InputError("multiplicity mismatch")
        if g != c - b.bit_count():
            raise InputError("genus mismatch")
        for a in range(m, c):
            if not self.contains(a):
                continue
            for d in range(a, c - a + 1):
                if self.contains(d) and not self.contains(a + d):
                    raise InputError(f"not closed: {a} + {d} is a gap")
        return True

    def __repr__(self) -> str:
        if self.conductor > 4096:
            return (
                f"NumericalSemigroup(multiplicity={self.multiplicity}, "
                f"genus={self.genus}, conductor={self.conductor})"
            )
        gens = ",".join(map(str, self.minimal_generators()))
        return f"NumericalSemigroup<{gens}>"


_FULL = NumericalSemigroup(0, 0, 1, 0)


def _normalize(bits: int, window: int) -> NumericalSemigroup:
    """Build a semigroup from a membership bitmap.

    ``bits`` covers [0, window); every integer >= window is taken to be a
    member. The represented set must already be additively closed with
    cofinite complement; this only locates the conductor and derived stats.
    """
    if window < 0:
        window = 0
    mask = (1 << window) - 1
    bits = (bits | 1) & mask
    gap_bits = ~bits & mask
    if gap_bits == 0:
        return _FULL
    frob = gap_bits.bit_length() - 1
    c = frob + 1
    low = bits & ((1 << c) - 1)
    above = low >> 1
    m = (above & -above).bit_length() if above else c
    return NumericalSemigroup(c, low, m, c - low.bit_count())


def _closure_bits(gens: list[int], window: int) -> int:
    # Additive closure of sorted generators, truncated to [0, window).
    # Shift doubling closes each generator in O(log window) bigint ops.
    mask = (1 << window) - 1
    bits = 1
    for g in gens:
        if g >= window:
            break
        shift = g
        while shift < window:
            bits |= (bits << shift) & mask
            shift <<= 1
    return bits


def from_generators(
    generators: Iterable[int], *, conductor_limit: int = DEFAULT_CONDUCTOR_LIMIT
) -> NumericalSemigroup:
    """Smallest numerical semigroup containing the given positive integers.

    The generators must be coprime overall, otherwise no cofinite monoid
    contains them. Raises ConductorLimitExceeded when the resulting
    conductor would exceed ``conductor_limit``.
    """
    gens = sorted(set(generators))
    if not gens:
        raise NotCofinite("at least one generator is required")
    _check_positive_ints(gens, "generators")
    if math.gcd(*gens) != 1:
        raise NotCofinite(f"generators share the common factor {math.gcd(*gens)}")
    if gens[0] == 1:
        return _FULL
    m = gens[0]
    small = [g for g in gens if g <= conductor_limit + m]
    if len(small) < len(gens):
        # A generator beyond conductor_limit + m only matters when the rest
        # is not coprime, and then every witness of coprimality sits above
        # the limit, so the conductor does too.
        if not small or math.gcd(*small) != 1:
            raise ConductorLimitExceeded(
                f"conductor exceeds {conductor_limit}: an essential generator "
                f"lies beyond the limit"
            )
        gens = small
    hard_cap = conductor_limit + m + 2
    window = min(hard_cap, max(64, 2 * gens[-1]))
    while True:
        bits = _closure_bits(gens, window)
        run = bits
        for i in range(1, m):
            run &= bits >> i
        run &= (1 << max(0, window - m + 1)) - 1
        if run:
            c = (run & -run).bit_length() - 1
            if c > conductor_limit:
                raise ConductorLimitExceeded(
                    f"conductor {c} exceeds the limit {conductor_limit}"
                )
            return _normalize(bits, c)
        if window >= hard_cap:
            raise ConductorLimitExceeded(
                f"conductor exceeds the limit {conductor_limit}"
            )
        window = min(hard_cap, window * 2)


def ordinary(multiplicity: int) -> NumericalSemigroup:
    """{0} together with every integer >= multiplicity."""
    if not isinstance(multiplicity, int) or multiplicity < 1:
        raise InputError(f"multiplicity must be a positive integer, got {multiplicity!r}")
    if multiplicity == 1:
        return _FULL
    return NumericalSemigroup(multiplicity, 1, multiplicity, multiplicity - 1)


def from_gaps(
    gaps: Iterable[int], *, conductor_limit: int = DEFAULT_CONDUCTOR_LIMIT
) -> NumericalSemigroup:
    """Semigroup whose non-members are exactly the given finite set.

    Raises InputError when the complement is not additively closed.
    """
    gap_list = sorted(set(gaps))
    if not gap_list:
        return _FULL
    _check_positive_ints(gap_list, "gaps")
    frob = gap_list[-1]
    if frob + 1 > conductor_limit:
        raise ConductorLimitExceeded(
            f"conductor {frob + 1} exceeds the limit {conductor_limit}"
        )
    window = frob + 1
    bits = (1 << window) - 1
    for x in gap_list:
        bits &= ~(1 << x)
    sg = _normalize(bits, window)
    members = [x for x in range(1, window) if sg.contains(x)]
    for i, a in enumerate(members):
        for d in members[i:]:
            if a + d > frob:
                break
            if not sg.contains(a + d):
                raise InputError(
                    f"complement is not additively closed: "
                    f"{a} + {d} = {a + d} is a gap"
                )
    return sg
