"""Linear patterns with integer coefficients and a constant term.

A pattern p(x1, ..., xn) = a1*x1 + ... + an*xn + a0 is applied to
nonincreasing sequences of nonzero semigroup members. A semigroup admits a
pattern when every such application lands back in the semigroup. The
classification here sorts patterns by which semigroups can admit them at
all, without deciding admission for any particular semigroup.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import InputError, NegativeLead, NotAdmissible


def ceil_div(a: int, b: int) -> int:
    """Ceiling division for positive b."""
    return -(-a // b)


@dataclass(frozen=True)
class Pattern:
    """p(x1, ..., xn) = a1*x1 + ... + an*xn + a0, all ai nonzero."""

    coefficients: tuple[int, ...]
    constant: int = 0

    def __post_init__(self) -> None:
        coeffs = tuple(self.coefficients)
        if not coeffs:
            raise InputError("a pattern needs at least one coefficient")
        for a in coeffs:
            if not isinstance(a, int) or isinstance(a, bool):
                raise InputError(f"coefficients must be integers, got {a!r}")
            if a == 0:
                raise InputError("coefficients must be nonzero")
        if not isinstance(self.constant, int) or isinstance(self.constant, bool):
            raise InputError(f"constant must be an integer, got {self.constant!r}")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def length(self) -> int:
        return len(self.coefficients)

    def evaluate(self, sequence: Sequence[int]) -> int:
        if len(sequence) != self.length:
            raise InputError(
                f"expected {self.length} arguments, got {len(sequence)}"
            )
        return sum(a * s for a, s in zip(self.coefficients, sequence)) + self.constant

    def partial_sums(self) -> tuple[int, ...]:
        """(a1, a1+a2, ..., a1+...+an)."""
        out = []
        acc = 0
        for a in self.coefficients:
            acc += a
            out.append(acc)
        return tuple(out)

    def __str__(self) -> str:
        parts = []
        for i, a in enumerate(self.coefficients, start=1):
            if a < 0:
                sign, mag = "-", -a
            else:
                sign, mag = "+", a
            coeff = "" if mag == 1 else str(mag)
            parts.append((sign, f"{coeff}x{i}"))
        if self.constant != 0:
            sign = "-" if self.constant < 0 else "+"
            parts.append((sign, str(abs(self.constant))))
        first_sign, first_term = parts[0]
        text = ("-" if first_sign == "-" else "") + first_term
        for sign, term in parts[1:]:
            text += sign + term
        return text


class PatternClass(enum.Enum):
    EMPTY = "empty"
    EXACTLY_N0 = "exactly-N0"
    ADMISSIBLE = "admissible"


def classify(pattern: Pattern) -> PatternClass:
    """Which semigroups can admit the pattern, in broad strokes.

    EMPTY: no numerical semigroup admits it. EXACTLY_N0: only the full set
    does. ADMISSIBLE: some semigroup other than the full set admits it.
    """
    psums = pattern.partial_sums()
    total = psums[-1]
    a0 = pattern.constant
    if any(s < 0 for s in psums):
        return PatternClass.EMPTY
    if total <= 0 and a0 < 0:
        return PatternClass.EMPTY
    if total == 1 and a0 <= -2:
        return PatternClass.EMPTY
    if total == 1 and a0 == -1:
        return PatternClass.EXACTLY_N0
    return PatternClass.ADMISSIBLE


@dataclass(frozen=True)
class MultiplicityRange:
    """Multiplicities whose ordinary semigroup admits a pattern.

    ``upper`` is None for an unbounded range. The range may be empty
    (upper < lower), which happens only for zero-sum patterns with
    constant 0.
    """

    lower: int
    upper: Union[int, None]

    def contains(self, m: int) -> bool:
        if m < self.lower:
            return False
        return self.upper is None or m <= self.upper

    def __contains__(self, m: int) -> bool:
        return self.contains(m)


def admissible_multiplicities(pattern: Pattern) -> MultiplicityRange:
    """Range of multiplicities m for which ordinary(m) admits the pattern.

    Only defined for admissible patterns; raises NotAdmissible otherwise.
    """
    if classify(pattern) is not PatternClass.ADMISSIBLE:
        raise NotAdmissible(f"{pattern} is not admissible")
    total = pattern.partial_sums()[-1]
    a0 = pattern.constant
    if total > 1:
        return MultiplicityRange(max(1, ceil_div(-a0, total - 1)), None)
    if total == 1:
        return MultiplicityRange(1, None)
    return MultiplicityRange(1, a0)


def derived_pattern(pattern: Pattern) -> Union[Pattern, int]:
    """Decrement the leading coefficient, dropping it at zero.

    For the single-variable pattern x1 + a0 the result degenerates to the
    bare constant a0. Requires a positive leading coefficient.
    """
    coeffs = pattern.coefficients
    if coeffs[0] < 1:
        raise NegativeLead("derived pattern needs a positive leading coefficient")
    if coeffs[0] > 1:
        return Pattern((coeffs[0] - 1,) + coeffs[1:], pattern.constant)
    if len(coeffs) == 1:
        return pattern.constant
    return Pattern(coeffs[1:], pattern.constant)


def is_strongly_admissible(pattern: Pattern) -> bool:
    """Admissible, and still viable after decrementing the lead.

    Equivalent to: admissible with every partial sum at least 1. The
    degenerate derived constant counts as viable.
    """
    if classify(pattern) is not PatternClass.ADMISSIBLE:
        return False
    if pattern.coefficients[0] < 1:
        return False
    derived = derived_pattern(pattern)
    if isinstance(derived, int):
        return True
    return all(s >= 0 for s in derived.partial_sums())


@dataclass(frozen=True)
class KmCheckResult:
    applicable: bool
    ordinary_admits: bool


def km_pattern_check(
    coefficients: Sequence[int], k: int, multiplicity: int
) -> KmCheckResult:
    """Does ordinary(multiplicity) admit the pattern with constant
    k * multiplicity?

    When k == -1 or some partial sum equals 1, a closed form answers this
    for every multiplicity at once: the pattern is admitted exactly when
    all partial sums are nonnegative and the total sum plus k is at least 1
    (and then some multiplicity-m semigroup admits it, namely the ordinary
    one). Outside that regime the closed form does not apply and the answer
    is computed directly; ``applicable`` reports which happened.
    """
    if not isinstance(k, int) or k == 0:
        raise InputError("k must be a nonzero integer")
    if not isinstance(multiplicity, int) or multiplicity <= 1:
        raise InputError("multiplicity must be an integer greater than 1")
    pattern = Pattern(tuple(coefficients), k * multiplicity)
    psums = pattern.partial_sums()
    applicable = k == -1 or 1 in psums
    if applicable:
        verdict = all(s >= 0 for s in psums) and psums[-1] + k >= 1
        return KmCheckResult(True, verdict)
    from .admission import admits
    from .core import ordinary

    return KmCheckResult(False, admits(ordinary(multiplicity), pattern))


def med_pattern(multiplicity: int) -> Pattern:
    """x1 + x2 - m; admitted by a semigroup of multiplicity m exactly when
    it has maximal embedding dimension."""
    if multiplicity < 1:
        raise InputError("multiplicity must be positive")
    return Pattern((1, 1), -multiplicity)


def gm_pattern(q: int, multiplicity: int) -> Pattern:
    """q*x1 - q*m, the pattern behind the Geil-Matsumoto bound."""
    if q < 1 or multiplicity < 1:
        raise InputError("q and multiplicity must be positive")
    return Pattern((q,), -q * multiplicity)


def br_pattern(q: int, multiplicity: int) -> Pattern:
    """(q-1)*x1 - (q-1)*m, the pattern behind the sharper bound at
    factor q - 1; needs q >= 2."""
    if q < 2 or multiplicity < 1:
        raise InputError("q must be at least 2 and multiplicity positive")
    return Pattern((q - 1,), -(q - 1) * multiplicity)


def config_pattern(n: int) -> Pattern:
    """x1 + x2 - n for an arbitrary integer n."""
    return Pattern((1, 1), -n)


def arf_pattern() -> Pattern:
    """x1 + x2 - x3."""
    return Pattern((1, 1, -1), 0)
