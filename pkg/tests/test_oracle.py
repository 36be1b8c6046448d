import itertools

from patsemi.admission import admits
from patsemi.core import from_generators, ordinary
from patsemi.oracle import (
    GENUS_COUNTS,
    enumerate_semigroups,
    find_violation,
    naive_admits,
    profile_admits,
    valueset_profile,
)
from patsemi.patterns import Pattern


def test_genus_counts_match_enumeration(universe10):
    by_genus = {}
    for sg in universe10:
        by_genus[sg.genus] = by_genus.get(sg.genus, 0) + 1
    for g, expected in enumerate(GENUS_COUNTS):
        assert by_genus.get(g, 0) == expected
    # the next three values of the count sequence
    assert by_genus[8] == 67 and by_genus[9] == 118 and by_genus[10] == 204


def test_enumerate_small_sets_exact():
    got = {sg for sg in enumerate_semigroups(2)}
    want = {
        ordinary(1),
        ordinary(2),
        ordinary(3),
        from_generators([2, 5]),
    }
    assert got == want


def test_enumerate_fixed_multiplicity(universe8):
    for m in (2, 3, 4):
        direct = sorted(
            enumerate_semigroups(8, multiplicity=m),
            key=lambda s: (s.genus, s.minimal_generators()),
        )
        filtered = sorted(
            (sg for sg in universe8 if sg.multiplicity == m),
            key=lambda s: (s.genus, s.minimal_generators()),
        )
        assert direct == filtered


def test_naive_admits_pinned():
    assert naive_admits(from_generators([3, 7, 8]), Pattern((2,), -6), 60)
    assert not naive_admits(ordinary(3), Pattern((2,), -4), 60)
    assert naive_admits(ordinary(4), Pattern((1, 1), -4), 60)
    assert not naive_admits(ordinary(4), Pattern((1, 1), -5), 60)


def test_find_violation_pinned():
    w = find_violation(ordinary(3), Pattern((2,), -4), 60)
    assert w is not None
    assert Pattern((2,), -4).evaluate(w.sequence) == w.value
    assert not ordinary(3).contains(w.value)
    assert find_violation(from_generators([3, 7, 8]), Pattern((2,), -6), 60) is None


def test_find_violation_matches_decision(universe8):
    coeff_range = [a for a in range(-2, 3) if a != 0]
    pats = []
    for n in (1, 2):
        for coeffs in itertools.product(coeff_range, repeat=n):
            for a0 in (-4, -2, -1, 0, 1, 3):
                pats.append(Pattern(coeffs, a0))
    slice8 = [sg for sg in universe8 if sg.multiplicity <= 4][::3]
    for sg in slice8:
        for p in pats[::4]:
            w = find_violation(sg, p, 3 * (max(sg.frobenius, 1) + 8))
            if w is None:
                assert admits(sg, p), (sg, p)
            else:
                seq = w.sequence
                assert list(seq) == sorted(seq, reverse=True)
                for e in seq:
                    assert e != 0 and sg.contains(e)
                assert p.evaluate(seq) == w.value
                assert not sg.contains(w.value)
                assert not admits(sg, p), (sg, p)


def test_valueset_profile_consistency():
    sg = from_generators([5, 6, 8, 9])
    coeffs = (1, 1)
    offset, masks = valueset_profile(sg, coeffs, [10, 20, 40])
    assert len(masks) == 3
    # deeper scans only add values
    for small, big in zip(masks, masks[1:]):
        assert small & big == small
    # profile verdict equals the naive decision for a spread of constants
    for a0 in range(-12, 5):
        p = Pattern(coeffs, a0)
        want = naive_admits(sg, p, 40)
        got = profile_admits(sg, a0, offset, masks[-1])
        assert got == want, a0


def test_profile_matches_naive_grid(universe8):
    slice8 = [sg for sg in universe8 if sg.multiplicity <= 4 and sg.genus <= 6][::5]
    for sg in slice8:
        for coeffs in ((1,), (2,), (1, 1), (2, -1)):
            bound = 3 * (sg.conductor + 10)
            offset, masks = valueset_profile(sg, coeffs, [bound])
            for a0 in range(-6, 4):
                want = naive_admits(sg, Pattern(coeffs, a0), bound)
                assert profile_admits(sg, a0, offset, masks[0]) == want
