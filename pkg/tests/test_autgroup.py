import pytest

from pgext import (
    AutMatrix,
    BoundExceededError,
    IntMatrix,
    PGroupType,
    ValidationError,
    aut_matrices,
    aut_search_space,
    conjugate_by_p_powers,
    enumerate_auts,
    is_valid_aut,
)

from oracles import count_automorphisms

P = PGroupType
M = IntMatrix

CLOSURE_CASES = [(2, (1,)), (2, (2,)), (2, (1, 1)), (2, (2, 1))]


def _reduce_rows(matrix, p, tau):
    return M(
        [[x % p**ti for x in row] for row, ti in zip(matrix.data, tau.parts)],
        cols=matrix.cols,
    )


class TestIsValidAut:
    def test_identity_always_valid(self):
        for p, parts in [(2, (1,)), (2, (3, 2, 1)), (3, (2, 2)), (5, ())]:
            assert is_valid_aut(M.identity(len(parts)), p, P(parts))

    def test_divisibility_violation(self):
        assert not is_valid_aut(M([[1, 1], [0, 1]]), 2, P((2, 1)))

    def test_valid_example(self):
        assert is_valid_aut(M([[1, 2], [1, 1]]), 2, P((2, 1)))

    def test_det_divisible_by_p(self):
        assert not is_valid_aut(M([[2]]), 2, P((1,)))
        assert not is_valid_aut(M([[1, 1], [1, 1]]), 2, P((1, 1)))

    def test_size_mismatch(self):
        with pytest.raises(ValidationError):
            is_valid_aut(M([[1]]), 2, P((1, 1)))


class TestEnumeration:
    @pytest.mark.parametrize(
        "p,parts,expected",
        [
            (2, (1,), 1),
            (2, (2,), 2),
            (2, (1, 1), 6),
            (2, (2, 1), 8),
            (3, (1,), 2),
            (3, (1, 1), 48),
        ],
    )
    def test_counts_match_brute_force(self, p, parts, expected):
        tau = P(parts)
        auts = aut_matrices(p, tau)
        assert len(auts) == expected
        orders = tuple(p**e for e in parts)
        assert count_automorphisms(orders) == expected

    def test_stream_matches_list(self):
        tau = P((2, 1))
        assert tuple(enumerate_auts(2, tau)) == aut_matrices(2, tau)

    def test_lexicographic_order(self):
        flats = [a.matrix.flatten() for a in aut_matrices(2, P((1, 1)))]
        assert flats == sorted(flats)
        assert flats[0] == (0, 1, 1, 0)

    def test_all_yielded_are_valid_canonical(self):
        for p, parts in CLOSURE_CASES:
            tau = P(parts)
            for a in aut_matrices(p, tau):
                assert is_valid_aut(a.matrix, p, tau)
                for row, ti in zip(a.matrix.data, parts):
                    assert all(0 <= x < p**ti for x in row)

    def test_empty_type(self):
        auts = aut_matrices(2, P(()))
        assert len(auts) == 1
        assert auts[0].matrix.shape == (0, 0)

    def test_search_space_formula(self):
        assert aut_search_space(2, P((2, 1))) == 2 ** (2 * 3)
        assert aut_search_space(3, P((1, 1))) == 3**4

    def test_bound_exceeded(self):
        with pytest.raises(BoundExceededError):
            list(enumerate_auts(2, P((2, 2, 2)), max_candidates=100))

    def test_not_prime(self):
        with pytest.raises(ValidationError):
            aut_matrices(6, P((1,)))


class TestAutMatrixType:
    def test_identity_constructor(self):
        a = AutMatrix.identity(3, P((2, 1)))
        assert a.matrix == M.identity(2)

    def test_accepts_any_valid_representative(self):
        a = AutMatrix(2, P((2,)), M([[5]]))
        assert a.canonical().matrix == M([[1]])

    def test_rejects_invalid(self):
        with pytest.raises(ValidationError):
            AutMatrix(2, P((1,)), M([[0]]))
        with pytest.raises(ValidationError):
            AutMatrix(2, P((2, 1)), M([[1, 1], [0, 1]]))


class TestConjugation:
    def test_identity_fixed(self):
        a = AutMatrix.identity(2, P((2, 1)))
        assert conjugate_by_p_powers(a) == M.identity(2)

    def test_example(self):
        a = AutMatrix(2, P((2, 1)), M([[1, 0], [2, 1]]))
        assert conjugate_by_p_powers(a) == M([[1, 0], [4, 1]])

    def test_diagonal_fixed(self):
        a = AutMatrix(3, P((2, 1)), M([[2, 0], [0, 2]]))
        assert conjugate_by_p_powers(a) == M([[2, 0], [0, 2]])

    def test_integral_and_invertible(self):
        for p, parts in CLOSURE_CASES:
            for a in aut_matrices(p, P(parts)):
                conj = conjugate_by_p_powers(a)
                assert all(isinstance(x, int) for x in conj.flatten())
                assert conj.det() % p != 0


class TestGroupStructure:
    def test_closed_under_product(self):
        for p, parts in CLOSURE_CASES:
            tau = P(parts)
            auts = aut_matrices(p, tau)
            table = {a.matrix for a in auts}
            for a in auts:
                for b in auts:
                    prod = _reduce_rows(a.matrix @ b.matrix, p, tau)
                    assert prod in table

    def test_every_element_has_inverse(self):
        for p, parts in CLOSURE_CASES:
            tau = P(parts)
            auts = aut_matrices(p, tau)
            ident = M.identity(len(parts))
            for a in auts:
                assert any(
                    _reduce_rows(a.matrix @ b.matrix, p, tau) == ident for b in auts
                )

    def test_transposed_condition_gives_same_count(self):
        # reading the compatibility pattern with the exponents swapped
        # (divisibility forced on the lower rather than the upper cells)
        # describes a set of the same size
        from itertools import product as iproduct

        for p, parts in CLOSURE_CASES:
            t = len(parts)
            cells = [
                range(0, p ** parts[i], p ** max(0, parts[j] - parts[i]))
                for i in range(t)
                for j in range(t)
            ]
            count = 0
            for flat in iproduct(*cells):
                m = M([flat[i * t : (i + 1) * t] for i in range(t)], cols=t)
                if m.det() % p != 0:
                    count += 1
            assert count == len(aut_matrices(p, P(parts)))
