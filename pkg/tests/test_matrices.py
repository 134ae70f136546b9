"""Matrix layer: unit algebra, corners, commutators, the Jordan product,
symmetry predicates, and the shift probe."""

import random

import pytest

from derivring import (
    DomainError,
    Matrix,
    PolyRing,
    SymmetricMatrix,
    Zmod,
    commutator,
    corner,
    jordan_mul,
    jordan_unit,
    matrix_unit,
    probe_x0,
)
from derivring.sampling import random_matrix, random_symmetric

Z5 = Zmod(5)
Z9 = Zmod(9)
P5 = PolyRing(Z5)


def ref_matmul(rows_a, rows_b, m):
    """Schoolbook reference multiply over Z_m, independent of Matrix."""
    n = len(rows_a)
    return [
        [sum(rows_a[i][k] * rows_b[k][j] for k in range(n)) % m for j in range(n)]
        for i in range(n)
    ]


class TestUnits:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_unit_algebra_exhaustive(self, n):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                eij = matrix_unit(Z5, n, i, j)
                for k in range(1, n + 1):
                    for l in range(1, n + 1):
                        ekl = matrix_unit(Z5, n, k, l)
                        if j == k:
                            assert eij * ekl == matrix_unit(Z5, n, i, l)
                        else:
                            assert (eij * ekl).is_zero()

    def test_unit_products(self):
        assert matrix_unit(Z5, 2, 1, 2) * matrix_unit(Z5, 2, 2, 1) == matrix_unit(
            Z5, 2, 1, 1
        )
        assert (matrix_unit(Z5, 2, 1, 2) * matrix_unit(Z5, 2, 1, 2)).is_zero()

    def test_diagonal_completeness(self):
        total = Matrix.zero(Z5, 3)
        for i in range(1, 4):
            total = total + matrix_unit(Z5, 3, i, i)
        assert total == Matrix.identity(Z5, 3)

    def test_index_out_of_range(self):
        with pytest.raises(DomainError):
            matrix_unit(Z5, 2, 0, 1)
        with pytest.raises(DomainError):
            matrix_unit(Z5, 2, 1, 3)


class TestArithmetic:
    def test_matmul_frozen(self):
        a_rows = [[1, 2], [3, 4]]
        b_rows = [[0, 1], [1, 0]]
        expected = ref_matmul(a_rows, b_rows, 5)
        assert expected == [[2, 1], [4, 3]]
        a = Matrix.from_rows(Z5, a_rows)
        b = Matrix.from_rows(Z5, b_rows)
        assert a * b == Matrix.from_rows(Z5, expected)

    def test_identity_neutral(self):
        rng = random.Random(11)
        eye = Matrix.identity(Z9, 3)
        for _ in range(50):
            a = random_matrix(Z9, 3, rng)
            assert a * eye == a
            assert eye * a == a

    def test_distributivity(self):
        rng = random.Random(12)
        for _ in range(500):
            a = random_matrix(Z5, 2, rng)
            b = random_matrix(Z5, 2, rng)
            c = random_matrix(Z5, 2, rng)
            assert (a + b) * c == a * c + b * c

    def test_decomposition_identity(self):
        rng = random.Random(13)
        a = random_matrix(Z9, 4, rng)
        total = Matrix.zero(Z9, 4)
        for i in range(1, 5):
            for j in range(1, 5):
                total = total + matrix_unit(Z9, 4, i, j) * a.entry(i, j)
        assert total == a

    def test_shape_and_ring_mismatch(self):
        with pytest.raises(DomainError):
            Matrix.zero(Z5, 2) + Matrix.zero(Z5, 3)
        with pytest.raises(DomainError):
            Matrix.zero(Z5, 2) * Matrix.zero(Z9, 2)

    def test_entry_bounds(self):
        with pytest.raises(DomainError):
            Matrix.zero(Z5, 2).entry(3, 1)

    def test_from_rows_must_be_square(self):
        with pytest.raises(DomainError):
            Matrix.from_rows(Z5, [[1, 2], [3]])
        with pytest.raises(DomainError):
            Matrix.from_rows(Z5, [])

    def test_equality_and_hash(self):
        a = Matrix.from_rows(Z5, [[1, 2], [3, 4]])
        b = Matrix.from_rows(Z5, [[1, 2], [3, 4]])
        assert a == b
        assert hash(a) == hash(b)
        assert a != Matrix.from_rows(Z5, [[1, 2], [3, 0]])


class TestCommutator:
    def test_unit_relation(self):
        e12 = matrix_unit(Z5, 2, 1, 2)
        e21 = matrix_unit(Z5, 2, 2, 1)
        expected = matrix_unit(Z5, 2, 1, 1) - matrix_unit(Z5, 2, 2, 2)
        assert commutator(e12, e21) == expected

    def test_antisymmetry_and_center(self):
        rng = random.Random(14)
        eye = Matrix.identity(Z9, 3)
        for _ in range(50):
            a = random_matrix(Z9, 3, rng)
            assert commutator(a, a).is_zero()
            assert commutator(a, eye).is_zero()

    def test_commutator_of_symmetric_is_skew(self):
        rng = random.Random(15)
        for _ in range(1000):
            a = random_symmetric(Z9, 3, rng)
            b = random_symmetric(Z9, 3, rng)
            assert commutator(a, b).is_skew()


class TestCorner:
    def test_single_entry(self):
        a = Matrix.from_rows(Z5, [[1, 2], [3, 4]])
        assert corner(a, 1, 2) == Matrix.from_rows(Z5, [[0, 2], [0, 0]])

    def test_matches_unit_products(self):
        rng = random.Random(16)
        a = random_matrix(Z9, 4, rng)
        for i in range(1, 5):
            for j in range(1, 5):
                eii = matrix_unit(Z9, 4, i, i)
                ejj = matrix_unit(Z9, 4, j, j)
                assert corner(a, i, j) == eii * a * ejj

    def test_peirce_decomposition(self):
        rng = random.Random(17)
        a = random_matrix(Z5, 3, rng)
        total = Matrix.zero(Z5, 3)
        for i in range(1, 4):
            for j in range(1, 4):
                total = total + corner(a, i, j)
        assert total == a

    def test_central_offdiagonal_corners_vanish(self):
        z = Matrix.scalar(Z5.element(3), 3)
        for i in range(1, 4):
            for j in range(1, 4):
                if i != j:
                    assert corner(z, i, j).is_zero()

    def test_bounds(self):
        with pytest.raises(DomainError):
            corner(Matrix.zero(Z5, 2), 1, 3)


class TestJordan:
    def test_unit_times_jordan_unit(self):
        e11 = matrix_unit(Z5, 2, 1, 1)
        eb12 = jordan_unit(Z5, 2, 1, 2)
        # 1/2 = 3 over Z_5
        assert jordan_mul(e11, eb12) == eb12 * Z5.element(3)

    def test_commutative(self):
        rng = random.Random(18)
        for _ in range(500):
            a = random_matrix(Z5, 2, rng)
            b = random_matrix(Z5, 2, rng)
            assert jordan_mul(a, b) == jordan_mul(b, a)

    def test_identity_is_unit(self):
        rng = random.Random(19)
        eye = Matrix.identity(Z9, 3)
        for _ in range(50):
            a = random_matrix(Z9, 3, rng)
            assert jordan_mul(eye, a) == a

    def test_closure_on_symmetric(self):
        rng = random.Random(20)
        for _ in range(1000):
            a = random_symmetric(Z9, 3, rng)
            b = random_symmetric(Z9, 3, rng)
            prod = jordan_mul(a, b)
            assert prod.is_symmetric()
            assert isinstance(prod, SymmetricMatrix)

    def test_jordan_unit(self):
        assert jordan_unit(Z5, 2, 1, 2) == Matrix.from_rows(Z5, [[0, 1], [1, 0]])
        eb13 = jordan_unit(Z5, 3, 1, 3)
        assert eb13.transpose() == eb13
        assert jordan_unit(Z5, 3, 1, 2) == jordan_unit(Z5, 3, 2, 1)
        with pytest.raises(DomainError):
            jordan_unit(Z5, 3, 2, 2)


class TestPredicates:
    def test_transpose(self):
        a = Matrix.from_rows(Z5, [[1, 2], [3, 4]])
        assert a.transpose() == Matrix.from_rows(Z5, [[1, 3], [2, 4]])

    def test_symmetric_identity(self):
        assert Matrix.identity(Z5, 3).is_symmetric()

    def test_symmetric_wrapper_validates(self):
        with pytest.raises(DomainError):
            SymmetricMatrix.of(Matrix.from_rows(Z5, [[0, 1], [2, 0]]))
        sym = SymmetricMatrix.of(Matrix.from_rows(Z5, [[0, 1], [1, 0]]))
        assert sym == jordan_unit(Z5, 2, 1, 2)

    def test_skew(self):
        assert Matrix.from_rows(Z5, [[0, 1], [4, 0]]).is_skew()
        assert not Matrix.from_rows(Z5, [[0, 1], [1, 0]]).is_skew()
        # over these rings skewness forces a zero diagonal
        assert not Matrix.from_rows(Z5, [[1, 0], [0, 4]]).is_skew()


class TestShiftProbe:
    def test_small_cases(self):
        assert probe_x0(Z5, 2) == matrix_unit(Z5, 2, 1, 2)
        assert probe_x0(Z5, 3) == matrix_unit(Z5, 3, 1, 2) + matrix_unit(Z5, 3, 2, 3)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_nilpotent(self, n):
        x0 = probe_x0(Z9, n)
        power = Matrix.identity(Z9, n)
        for _ in range(n):
            power = power * x0
        assert power.is_zero()

    def test_needs_n_at_least_two(self):
        with pytest.raises(DomainError):
            probe_x0(Z5, 1)


class TestPolynomialEntries:
    def test_matmul_over_poly_ring(self):
        t = P5.t
        a = Matrix.from_rows(P5, [[t, (1,)], [(0,), t * t]])
        b = Matrix.identity(P5, 2)
        assert a * b == a
        assert (a * a).entry(1, 1) == t * t
