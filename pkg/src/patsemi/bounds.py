"""Bounds on the number of rational places via semigroup data.

Three classical bounds attached to a numerical semigroup and an integer
q >= 2: the set-theoretic bound counting members outside q*(nonzero
members) + members, the multiplicity-only bound 1 + q*m, and the variant
with q - 1 in place of q. The coincidence question for the first two
reduces to a generator test, which is cross-checked here against both the
raw counts and a quotient-semigroup condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import NumericalSemigroup
from .errors import InputError


def _check_q(q: int) -> None:
    if not isinstance(q, int) or isinstance(q, bool):
        raise InputError(f"q must be an integer, got {q!r}")
    if q < 2:
        raise InputError("q must be at least 2")


def _survivors(
    sg: NumericalSemigroup, factor: int, window: Optional[int] = None
) -> list[int]:
    """Members x with no decomposition x = factor*lam + mu, lam and mu
    members, lam nonzero.

    Any member >= factor*m + c decomposes (take lam = m), so the survivors
    all lie below that; window widening beyond it cannot change the result.
    """
    if window is None:
        window = factor * sg.multiplicity + sg.conductor
    members = sg.members_up_to(window - 1)
    out = []
    for x in members:
        lim = x // factor
        covered = False
        for lam in members:
            if lam == 0:
                continue
            if lam > lim:
                break
            if sg.contains(x - factor * lam):
                covered = True
                break
        if not covered:
            out.append(x)
    return out


def gm_bound(sg: NumericalSemigroup, q: int) -> int:
    _check_q(q)
    return len(_survivors(sg, q)) + 1


def lewittes_bound(sg: NumericalSemigroup, q: int) -> int:
    _check_q(q)
    return 1 + q * sg.multiplicity


def br_bound(sg: NumericalSemigroup, q: int) -> int:
    _check_q(q)
    return len(_survivors(sg, q - 1)) + 1


def gm_equals_lewittes(sg: NumericalSemigroup, q: int) -> tuple[bool, Optional[int]]:
    """Whether the set-theoretic bound collapses to 1 + q*m, decided by the
    generator criterion: q*x - q*m must be a member for every minimal
    generator x. Returns the verdict and the first failing generator.

    The verdict is cross-validated against the bound values themselves and
    against the quotient condition (every nonzero member x has x - m in the
    quotient by q); a disagreement would mean a bug and raises.
    """
    _check_q(q)
    m = sg.multiplicity
    failing = None
    for x in sg.minimal_generators():
        if not sg.contains(q * x - q * m):
            failing = x
            break
    by_generators = failing is None

    by_bounds = gm_bound(sg, q) == lewittes_bound(sg, q)

    quot = sg.quotient(q)
    by_quotient = True
    # x >= m + conductor(quot) has x - m in the quotient automatically
    for x in sg.members_up_to(m + quot.conductor - 1):
        if x == 0:
            continue
        if not quot.contains(x - m):
            by_quotient = False
            break

    if not (by_generators == by_bounds == by_quotient):
        raise RuntimeError(
            f"coincidence criteria disagree for {sg!r} at q={q}: "
            f"generators={by_generators} bounds={by_bounds} "
            f"quotient={by_quotient}"
        )
    return by_generators, failing


@dataclass(frozen=True)
class BoundReport:
    gm: int
    lewittes: int
    br: int
    coincide_gm_lewittes: bool
    coincide_br: bool
    failing_generator: Optional[int]


def bound_report(sg: NumericalSemigroup, q: int) -> BoundReport:
    """All three bounds plus the coincidence verdicts. coincide_br compares
    the (q-1)-variant against its own multiplicity-only value."""
    _check_q(q)
    gm = gm_bound(sg, q)
    lw = lewittes_bound(sg, q)
    br = br_bound(sg, q)
    coincide, failing = gm_equals_lewittes(sg, q)
    return BoundReport(
        gm=gm,
        lewittes=lw,
        br=br,
        coincide_gm_lewittes=coincide,
        coincide_br=br == 1 + (q - 1) * sg.multiplicity,
        failing_generator=failing,
    )
