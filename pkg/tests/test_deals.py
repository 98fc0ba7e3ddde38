import itertools
from math import comb, gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zolotarev.deals import (
    MAX_CELLS,
    Deal,
    GridSpec,
    alpha,
    below_left_pairs,
    beta,
    column_deal,
    deal_permutation,
    diagonal_deal,
    diagonal_deal_by_residues,
    gamma,
    gamma_inversion_pairs,
    gamma_sign_formula,
    gamma_sign_odd_formula,
    make_deal,
    modified_zigzag_deal,
    reverse_columns,
    row_deal,
    supplement_column_deal,
    supplement_row_deal,
    swap_rows,
    zigzag_deal,
)
from zolotarev.errors import (
    CapacityError,
    DealMismatch,
    EvenDimension,
    EvenOrSmallModulus,
    NonCoprimeDimensions,
)
from zolotarev.perms import compose, count_inversions_naive, identity, inverse, sign_via_cycles
from zolotarev.symbols import zolotarev_symbol

dims = st.tuples(st.integers(1, 12), st.integers(1, 12))
odd = st.integers(0, 15).map(lambda k: 2 * k + 1)
odd_coprime = st.tuples(odd, odd).filter(lambda t: gcd(*t) == 1)
odd_modulus = st.integers(1, 200).map(lambda k: 2 * k + 1)


def walk(m, n, order):
    """Place cards 0.. on the grid in the given order of positions."""
    grid = [[None] * n for _ in range(m)]
    for card, (i, j) in enumerate(order):
        grid[i][j] = card
    return [list(r) for r in grid]


def test_row_deal_examples():
    assert row_deal(GridSpec(3, 5)).as_lists() == [[0, 1, 2, 3, 4], [5, 6, 7, 8, 9], [10, 11, 12, 13, 14]]
    assert row_deal(GridSpec(1, 4)).as_lists() == [[0, 1, 2, 3]]
    assert row_deal(GridSpec(2, 2)).as_lists() == [[0, 1], [2, 3]]


def test_column_deal_examples():
    col_walk = walk(3, 5, [(i, j) for j in range(5) for i in range(3)])
    assert column_deal(GridSpec(3, 5)).as_lists() == col_walk == [
        [0, 3, 6, 9, 12],
        [1, 4, 7, 10, 13],
        [2, 5, 8, 11, 14],
    ]
    assert column_deal(GridSpec(3, 1)).as_lists() == [[0], [1], [2]]
    assert column_deal(GridSpec(2, 2)).as_lists() == [[0, 2], [1, 3]]


def test_diagonal_deal_examples():
    expected = [[0, 6, 12, 3, 9], [10, 1, 7, 13, 4], [5, 11, 2, 8, 14]]
    assert diagonal_deal(GridSpec(3, 5)).as_lists() == expected
    # independent residue search
    assert [[next(t for t in range(15) if t % 3 == i and t % 5 == j) for j in range(5)] for i in range(3)] == expected
    assert diagonal_deal(GridSpec(1, 4)) == row_deal(GridSpec(1, 4))
    with pytest.raises(NonCoprimeDimensions):
        diagonal_deal(GridSpec(3, 6))


@given(dims.filter(lambda t: gcd(*t) == 1))
def test_diagonal_walk_matches_residue_construction(mn):
    spec = GridSpec(*mn)
    d = diagonal_deal(spec)
    assert d == diagonal_deal_by_residues(spec)
    m, n = mn
    for i, j in itertools.product(range(m), range(n)):
        assert d[i, j] % m == i and d[i, j] % n == j


def test_zigzag_examples():
    assert zigzag_deal(5).as_lists() == [[2, 4], [1, 3]]
    assert zigzag_deal(3).as_lists() == [[2], [1]]
    assert zigzag_deal(7).as_lists() == [[2, 4, 6], [1, 3, 5]]
    assert swap_rows(supplement_column_deal(5)).as_lists() == [[2, 4], [1, 3]]


@given(odd_modulus)
def test_zigzag_is_column_deal_with_swapped_columns(n):
    assert zigzag_deal(n) == swap_rows(supplement_column_deal(n))


def test_modified_zigzag_examples():
    assert modified_zigzag_deal(5).as_lists() == [[4, 3], [2, 1]]
    assert modified_zigzag_deal(3).as_lists() == [[2], [1]]
    assert modified_zigzag_deal(7).as_lists() == [[6, 5, 4], [3, 2, 1]]


@given(odd_modulus)
def test_modified_zigzag_is_reversed_then_swapped_row_deal(n):
    assert modified_zigzag_deal(n) == swap_rows(reverse_columns(supplement_row_deal(n)))


def test_literal_modified_zigzag_walk_is_not_negation():
    # walking from the lower-right corner does not realise x -> n - x;
    # this is why the reverse-then-swap construction is used instead
    n, m = 5, 2
    order = []
    for j in range(m - 1, -1, -1):
        order += [(1, j), (0, j)]
    grid = [[0] * m for _ in range(2)]
    for card, (i, j) in enumerate(order, start=1):
        grid[i][j] = card
    literal = Deal(GridSpec(2, m), tuple(map(tuple, grid)), label_base=1)
    p = deal_permutation(supplement_row_deal(n), literal)
    assert [p(x) + 1 for x in range(n - 1)] != [n - (x + 1) for x in range(n - 1)]


@pytest.mark.parametrize("bad", [1, 2, 4, 0, -3])
def test_supplement_deals_reject_bad_modulus(bad):
    for build in (zigzag_deal, modified_zigzag_deal, supplement_row_deal):
        with pytest.raises(EvenOrSmallModulus):
            build(bad)


def test_deal_validation():
    with pytest.raises(DealMismatch):
        Deal(GridSpec(1, 2), ((0, 0),))
    with pytest.raises(DealMismatch):
        Deal(GridSpec(1, 2), ((0, 1, 2),))
    with pytest.raises(ValueError):
        GridSpec(0, 3)
    with pytest.raises(CapacityError):
        GridSpec(MAX_CELLS, 2)


def test_deal_permutation_examples():
    spec = GridSpec(3, 5)
    g = deal_permutation(row_deal(spec), column_deal(spec))
    assert {x: g(x) for x in (0, 1, 2, 5, 7, 14)} == {0: 0, 1: 3, 2: 6, 5: 1, 7: 7, 14: 14}
    a = deal_permutation(row_deal(spec), diagonal_deal(spec))
    assert {x: a(x) for x in (1, 2, 6, 7)} == {1: 6, 2: 12, 6: 1, 7: 7}
    d = diagonal_deal(spec)
    assert deal_permutation(d, d) == identity(15)


def test_deal_permutation_mismatches():
    with pytest.raises(DealMismatch):
        deal_permutation(row_deal(GridSpec(2, 3)), row_deal(GridSpec(3, 2)))
    with pytest.raises(DealMismatch):
        deal_permutation(row_deal(GridSpec(2, 2)), row_deal(GridSpec(2, 2), label_base=1))


def test_gamma_sign_formula_examples():
    assert gamma_sign_formula(GridSpec(3, 5)) == 1
    assert count_inversions_naive(gamma(GridSpec(3, 5))) % 2 == 0
    assert gamma_sign_formula(GridSpec(3, 3)) == -1
    assert gamma_sign_formula(GridSpec(2, 2)) == -1
    assert gamma(GridSpec(2, 2)).image == (0, 2, 1, 3)


def test_gamma_sign_odd_formula_examples():
    assert gamma_sign_odd_formula(GridSpec(5, 7)) == 1
    assert gamma_sign_odd_formula(GridSpec(3, 3)) == -1
    assert gamma_sign_odd_formula(GridSpec(1, 9)) == 1
    with pytest.raises(EvenDimension):
        gamma_sign_odd_formula(GridSpec(2, 3))


@given(st.integers(1, 200), st.integers(1, 200))
def test_gamma_formula_matches_big_integer_power(m, n):
    assert gamma_sign_formula(GridSpec(m, n)) == (-1) ** (comb(m, 2) * comb(n, 2))
    if m % 2 and n % 2:
        assert gamma_sign_odd_formula(GridSpec(m, n)) == (-1) ** ((m - 1) * (n - 1) // 4)


def test_gamma_inversion_pairs_examples():
    assert gamma_inversion_pairs(GridSpec(3, 5)) == 30
    assert gamma_inversion_pairs(GridSpec(1, 7)) == 0
    assert gamma_inversion_pairs(GridSpec(2, 2)) == 1


@given(st.tuples(st.integers(1, 8), st.integers(1, 8)))
def test_inversions_of_gamma_are_exactly_below_left_pairs(mn):
    spec = GridSpec(*mn)
    g = gamma(spec)
    inversions = {(x, y) for x, y in itertools.combinations(range(g.degree), 2) if g(x) > g(y)}
    assert inversions == below_left_pairs(spec)
    assert len(inversions) == gamma_inversion_pairs(spec) == comb(mn[0], 2) * comb(mn[1], 2)


@given(dims.filter(lambda t: gcd(*t) == 1))
def test_beta_alpha_factorisation(mn):
    spec = GridSpec(*mn)
    assert compose(beta(spec), alpha(spec)) == gamma(spec)


@given(odd_coprime)
def test_alpha_inverse_closed_form_and_column_stability(mn):
    m, n = mn
    spec = GridSpec(m, n)
    a = alpha(spec)
    assert inverse(a).image == tuple(n * (t % m) + t % n for t in range(m * n))
    assert all(a(t) % n == t % n for t in range(m * n))
    z = zolotarev_symbol(n, m)
    for j in range(n):
        rows = [a(n * i + j) // n for i in range(m)]
        assert sorted(rows) == list(range(m))
        from zolotarev.perms import Permutation

        assert sign_via_cycles(Permutation(rows)) == z


@given(odd_coprime)
def test_alpha_beta_signs(mn):
    m, n = mn
    spec = GridSpec(m, n)
    assert sign_via_cycles(alpha(spec)) == zolotarev_symbol(n, m)
    assert sign_via_cycles(beta(spec)) == zolotarev_symbol(m, n)


@given(odd_modulus)
def test_supplement_permutations(n):
    m = (n - 1) // 2
    R, C, Z, M = supplement_row_deal(n), supplement_column_deal(n), zigzag_deal(n), modified_zigzag_deal(n)
    a = deal_permutation(R, Z)
    assert [a(x) + 1 for x in range(n - 1)] == [2 * (x + 1) % n for x in range(n - 1)]
    assert sign_via_cycles(deal_permutation(Z, C)) == (-1) ** m
    d = deal_permutation(R, M)
    assert [d(x) + 1 for x in range(n - 1)] == [n - (x + 1) for x in range(n - 1)]
    assert sign_via_cycles(d) == (-1) ** m


def test_make_deal_dispatch():
    assert make_deal("row", 3, 5) == row_deal(GridSpec(3, 5))
    assert make_deal("col", modulus=7) == supplement_column_deal(7)
    assert make_deal("zigzag", modulus=7) == zigzag_deal(7)
    with pytest.raises(EvenOrSmallModulus):
        make_deal("modzigzag", 2, 3)
    with pytest.raises(ValueError):
        make_deal("diag", 3)
