from fractions import Fraction
from itertools import product

import pytest

from cosetkit.errors import BadIndex
from cosetkit.minimal_model import (
    MinimalLabel,
    central_charge,
    conformal_weight,
    corollary_2_11_box,
    corollary_2_11_vanishes,
    fusion_dim,
    fusion_report,
    fusion_rules,
    is_admissible,
    labels,
    minimal_character,
    tensor_fusion_dim,
)

ORDER = 16


def su2_fusion(level, a, b, c):
    """Integrable su(2) fusion with labels given as dimensions 1..level+1."""
    return int(
        abs(a - b) + 1 <= c <= min(a + b - 1, 2 * (level + 2) - a - b - 1)
        and (a + b + c) % 2 == 1
    )


def coset_fusion(m, left, right, out):
    """Fusion of the (p, p') = (m+2, m+3) model as a product of two su(2) fusions."""
    p, pp = m + 2, m + 3
    (r1, s1), (r2, s2), (r3, s3) = left, right, out
    direct = su2_fusion(p - 2, r1, r2, r3) * su2_fusion(pp - 2, s1, s2, s3)
    twisted = su2_fusion(p - 2, r1, r2, p - r3) * su2_fusion(pp - 2, s1, s2, pp - s3)
    return direct + twisted


def ising():
    return {h: lab for lab in labels(1) for h in [lab.weight]}


def test_central_charges():
    assert central_charge(1) == Fraction(1, 2)
    assert central_charge(2) == Fraction(7, 10)
    assert central_charge(3) == Fraction(4, 5)
    assert central_charge(4) == Fraction(6, 7)


def test_conformal_weights_ising_and_tricritical():
    assert sorted(lab.weight for lab in labels(1)) == [0, Fraction(1, 16), Fraction(1, 2)]
    assert sorted(lab.weight for lab in labels(2)) == [
        0, Fraction(3, 80), Fraction(1, 10), Fraction(7, 16), Fraction(3, 5), Fraction(3, 2)
    ]


def test_kac_identification():
    for m in range(1, 8):
        for r, s in product(range(1, m + 2), range(1, m + 3)):
            assert conformal_weight((m, r, s)) == conformal_weight((m, m + 2 - r, m + 3 - s))
            assert MinimalLabel(m, r, s) == MinimalLabel(m, m + 2 - r, m + 3 - s)
        assert len(labels(m)) == (m + 1) * (m + 2) // 2


@pytest.mark.parametrize("m", range(1, 9))
def test_weights_separate_classes(m):
    seen = {}
    for lab in labels(m):
        assert lab.weight not in seen, (lab, seen.get(lab.weight))
        seen[lab.weight] = lab


@pytest.mark.parametrize("m", range(1, 9))
def test_top_weight_is_maximal(m):
    top = conformal_weight((m, 1, m + 2))
    for lab in labels(m):
        if lab != MinimalLabel(m, 1, m + 2):
            assert lab.weight < top


def test_range_errors():
    with pytest.raises(BadIndex):
        conformal_weight((1, 3, 1))
    with pytest.raises(BadIndex):
        is_admissible(1, (1, 1), (1, 1), (1, 4))
    with pytest.raises(BadIndex):
        labels(0)


def test_admissible_examples():
    assert is_admissible(1, (2, 2), (2, 2), (1, 1))
    assert not is_admissible(1, (2, 2), (2, 2), (2, 2))
    assert is_admissible(1, (1, 3), (1, 3), (1, 1))
    assert not is_admissible(1, (1, 3), (1, 3), (1, 3))
    assert is_admissible(2, (1, 2), (1, 2), (1, 3))
    assert is_admissible(2, (1, 1), (1, 1), (1, 1))


def test_ising_fusion_lines():
    by_h = ising()
    vac, eps, sig = by_h[0], by_h[Fraction(1, 2)], by_h[Fraction(1, 16)]
    assert fusion_dim(1, vac, eps, eps) == 1
    assert fusion_dim(1, eps, eps, eps) == 0
    assert fusion_dim(1, sig, eps, eps) == 0
    assert fusion_dim(1, sig, eps, sig) == 1
    assert fusion_dim(1, vac, eps, sig) == 0
    assert fusion_dim(1, eps, eps, sig) == 0
    rules = fusion_rules(1)
    assert rules[(sig, sig)] == sorted([vac, eps])


@pytest.mark.parametrize("m", range(1, 6))
def test_fusion_matches_su2_coset_oracle(m):
    for a, b, c in product(labels(m), repeat=3):
        assert fusion_dim(m, c, a, b) == coset_fusion(m, a.pair, b.pair, c.pair), (a, b, c)


@pytest.mark.parametrize("m", range(1, 5))
def test_fusion_symmetric_with_vacuum_unit(m):
    report = fusion_report(m)
    assert report["ok"]
    vac = MinimalLabel(m, 1, 1)
    for a in labels(m):
        for b in labels(m):
            assert fusion_dim(m, a, vac, b) == int(a == b)


@pytest.mark.parametrize("n", range(1, 7))
def test_vanishing_box(n):
    box = list(corollary_2_11_box(n))
    assert box
    assert all(corollary_2_11_vanishes(n, *params) for params in box)


def test_diagonal_can_be_nonzero():
    # l1 == l2 lies outside the vanishing box; the predicate must be able to return nonzero there
    assert not corollary_2_11_vanishes(2, 0, 0, 0, 1, 1)


def test_tensor_fusion():
    assert tensor_fusion_dim([1, 1, 0]) == 0
    assert tensor_fusion_dim([1, 1]) == 1


def test_ising_characters_against_fermions():
    # L(1/2,0) + L(1/2,1/2) = prod_{n>=1} (1 + q^{n-1/2}); in units of q^{1/2}
    order = ORDER
    half = [0] * (2 * order + 1)
    half[0] = 1
    for n in range(1, 2 * order + 1, 2):
        for d in range(2 * order, n - 1, -1):
            half[d] += half[d - n]
    vac = minimal_character((1, 1, 1), order)
    eps = minimal_character((1, 1, 3), order)
    assert vac.offset == 0 and eps.offset == Fraction(1, 2)
    combined = [0] * (2 * order + 1)
    for d in range(order + 1):
        combined[2 * d] += int(vac.coeffs[d])
        if 2 * d + 1 <= 2 * order:
            combined[2 * d + 1] += int(eps.coeffs[d])
    assert combined == half
    # L(1/2,1/16) = q^{1/16} prod_{n>=1} (1 + q^n)
    full = [0] * (order + 1)
    full[0] = 1
    for n in range(1, order + 1):
        for d in range(order, n - 1, -1):
            full[d] += full[d - n]
    sig = minimal_character((1, 2, 2), order)
    assert sig.offset == Fraction(1, 16)
    assert [int(c) for c in sig.coeffs] == full


@pytest.mark.parametrize("m", range(1, 5))
def test_characters_nonnegative_and_start_at_one(m):
    for lab in labels(m):
        ch = minimal_character(lab, 12)
        assert ch.offset == lab.weight
        assert ch.coeffs[0] == 1
        assert all(c >= 0 and c.denominator == 1 for c in ch.coeffs)


def test_vacuum_has_no_level_one_state():
    for m in range(1, 6):
        ch = minimal_character((m, 1, 1), 4)
        assert ch.coeffs[1] == 0 and ch.coeffs[2] == 1
