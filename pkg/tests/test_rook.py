from math import comb, isqrt

import pytest

import oracles
from conftest import BAR, GOLDEN_RANK8, L_TROMINO, PLUS, rectangle
from cellrook.errors import (CellNotInCollection, InvalidConfig, KOutOfRange,
                             NotCanonical, NotDominoStable, NotSquareBoard)
from cellrook.geometry import Cell, normalize, rect, stable_squares
from cellrook.rook import (SwitchClasses, SwitchingPolynomial, attacking,
                           canonical_in_rectangle, canonicalize, class_count,
                           configs, rook_number, square_complement,
                           switch_neighbors, switching_polynomial, top_config)


def cfg(*cells):
    return tuple(sorted(Cell(*c) for c in cells))


class TestAttacking:
    def test_same_run(self):
        assert attacking(rectangle(3, 1), Cell(1, 1), Cell(3, 1))

    def test_gap(self):
        assert not attacking(normalize([(1, 1), (3, 1)]), Cell(1, 1), Cell(3, 1))

    def test_diagonal(self):
        assert not attacking(rectangle(2, 2), Cell(1, 1), Cell(2, 2))

    def test_missing_cell(self):
        with pytest.raises(CellNotInCollection):
            attacking(BAR, Cell(1, 1), Cell(1, 2))


class TestRookNumber:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_square(self, n):
        assert rook_number(rectangle(n, n)) == n

    @pytest.mark.parametrize("k", range(1, 6))
    def test_bar(self, k):
        assert rook_number(rectangle(k, 1)) == 1

    def test_plus(self):
        assert rook_number(PLUS) == oracles.rook_number(set(PLUS.cells)) == 2


class TestConfigs:
    def test_diagonals(self):
        assert list(configs(rectangle(2, 2), 2)) == [cfg((1, 1), (2, 2)), cfg((1, 2), (2, 1))]

    @pytest.mark.parametrize("P", [BAR, L_TROMINO, PLUS, rectangle(3, 3)])
    def test_empty_config(self, P):
        assert list(configs(P, 0)) == [()]

    def test_singletons(self):
        assert len(list(configs(rectangle(3, 3), 1))) == 9

    def test_out_of_range(self):
        with pytest.raises(KOutOfRange):
            list(configs(BAR, 2))
        with pytest.raises(KOutOfRange):
            list(configs(BAR, -1))

    def test_lexicographic_and_complete(self):
        P = GOLDEN_RANK8
        for k in range(rook_number(P) + 1):
            got = list(configs(P, k))
            assert got == sorted(got)
            assert {frozenset(f) for f in got} == set(oracles.k_configs(set(P.cells), k))


class TestSwitchNeighbors:
    def test_square(self):
        assert switch_neighbors(rectangle(2, 2), cfg((1, 1), (2, 2))) == [cfg((1, 2), (2, 1))]

    def test_l_tromino(self):
        assert switch_neighbors(L_TROMINO, cfg((2, 1), (1, 2))) == []

    def test_too_few_rooks(self):
        assert switch_neighbors(PLUS, cfg((2, 2))) == []
        assert switch_neighbors(PLUS, ()) == []

    def test_invalid(self):
        with pytest.raises(InvalidConfig):
            switch_neighbors(BAR, cfg((1, 1), (2, 1)))


class TestClassCount:
    @pytest.mark.parametrize("m", range(1, 5))
    @pytest.mark.parametrize("n", range(1, 5))
    def test_rectangle_formula(self, m, n):
        P = rectangle(m, n)
        for k in range(min(m, n) + 1):
            assert class_count(P, k) == comb(m, k) * comb(n, k)

    def test_two_diagonals_one_class(self):
        assert class_count(rectangle(2, 2), 2) == 1

    @pytest.mark.parametrize("P", [BAR, L_TROMINO, PLUS, GOLDEN_RANK8])
    def test_singletons_are_cells(self, P):
        assert class_count(P, 1) == P.rank

    def test_out_of_range(self):
        with pytest.raises(KOutOfRange):
            class_count(PLUS, 3)


class TestPolynomial:
    def test_small(self):
        assert switching_polynomial(rectangle(2, 2)).to_list() == [1, 4, 1]
        assert switching_polynomial(rectangle(3, 3)).to_list() == [1, 9, 9, 1]

    # values frozen from oracles.polynomial
    @pytest.mark.parametrize("P, expected", [
        (L_TROMINO, [1, 3, 1]),
        (PLUS, [1, 5, 4]),
        (BAR, [1, 2]),
        (normalize([(1, 1), (2, 2)]), [1, 2, 1]),
        (normalize([(1, 1), (3, 1)]), [1, 2, 1]),
    ])
    def test_frozen(self, P, expected):
        assert switching_polynomial(P).to_list() == expected

    def test_rank8_golden_value(self):
        # a rank-8 polyomino realizing 1 + 8t + 19t^2 + 14t^3 + 3t^4
        p = switching_polynomial(GOLDEN_RANK8)
        assert p.to_list() == [1, 8, 19, 14, 3]
        assert p.to_list() == oracles.polynomial(set(GOLDEN_RANK8.cells))

    def test_str(self):
        assert str(SwitchingPolynomial((1, 4, 1))) == "1 + 4t + t^2"
        assert str(SwitchingPolynomial((1, 8, 19, 14, 3))) == "1 + 8t + 19t^2 + 14t^3 + 3t^4"
        assert str(SwitchingPolynomial((1,))) == "1"


class TestCanonical:
    def test_anti_diagonal(self):
        assert canonical_in_rectangle(rect(1, 1, 2, 2), cfg((1, 2), (2, 1))) == cfg((1, 1), (2, 2))

    def test_idempotent(self):
        c = cfg((1, 1), (2, 2))
        assert canonical_in_rectangle(rect(1, 1, 2, 2), c) == c

    def test_sort_and_pair(self):
        got = canonical_in_rectangle(rect(1, 1, 3, 3), cfg((1, 3), (2, 1), (3, 2)))
        assert got == cfg((1, 1), (2, 2), (3, 3))

    def test_outside(self):
        with pytest.raises(InvalidConfig):
            canonical_in_rectangle(rect(1, 1, 2, 2), cfg((3, 3)))

    def test_single_rectangle_matches(self):
        P = rectangle(3, 3)
        for f in configs(P, 2):
            assert canonicalize(P, f) == canonical_in_rectangle(rect(1, 1, 3, 3), f)

    def test_equivalent(self):
        P = GOLDEN_RANK8
        for k in range(rook_number(P) + 1):
            sc = SwitchClasses(P, k)
            for n in range(len(sc.configs)):
                f = sc.config(n)
                g = canonicalize(P, f)
                assert sc.same_class(f, g)
                assert canonicalize(P, g) == g

    def test_invalid(self):
        with pytest.raises(InvalidConfig):
            canonicalize(BAR, cfg((1, 1), (2, 1)))


class TestSquareComplement:
    def test_worked_example(self):
        got = square_complement(8, cfg((1, 2), (6, 4), (7, 6)))
        assert got == cfg((2, 1), (3, 3), (4, 5), (5, 7), (8, 8))

    def test_empty(self):
        assert square_complement(2, ()) == cfg((1, 1), (2, 2))

    def test_full(self):
        assert square_complement(2, cfg((1, 1), (2, 2))) == ()

    def test_not_canonical(self):
        with pytest.raises(NotCanonical):
            square_complement(2, cfg((1, 2), (2, 1)))

    def test_off_board(self):
        with pytest.raises(NotSquareBoard):
            square_complement(2, cfg((3, 1)))
        with pytest.raises(NotSquareBoard):
            square_complement(0, ())

    @pytest.mark.parametrize("n", range(1, 6))
    def test_involution_on_classes(self, n):
        P = rectangle(n, n)
        box = rect(1, 1, n, n)
        for k in range(n + 1):
            sc = SwitchClasses(P, k)
            images = set()
            for group in sc.classes():
                f = canonical_in_rectangle(box, group[0])
                g = square_complement(n, f)
                assert square_complement(n, g) == f
                images.add(g)
            # canonical forms are unique per class in a square, so this counts classes
            assert len(images) == sc.count == class_count(P, n - k)


class TestTopConfig:
    @pytest.mark.parametrize("n", range(1, 5))
    def test_square_diagonal(self, n):
        assert top_config(rectangle(n, n)) == tuple(Cell(i, i) for i in range(1, n + 1))

    def test_two_unit_squares(self):
        assert top_config(L_TROMINO) == cfg((1, 2), (2, 1))

    def test_not_stable(self):
        with pytest.raises(NotDominoStable):
            top_config(PLUS)

    def test_size_is_rook_number(self):
        from cellrook.enumerate import enumerate_polyominoes
        from cellrook.geometry import is_domino_stable
        for n in range(1, 7):
            for P in enumerate_polyominoes(n):
                if is_domino_stable(P)[0]:
                    T = top_config(P)
                    d = rook_number(P)
                    assert len(T) == d
                    assert d == sum(isqrt(g.size) for _, g in stable_squares(P))
                    assert class_count(P, d, d) == 1
