import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liestab.linalg import (
    Matrix,
    Subspace,
    associative_closure,
    kernel,
    kernel_sparse,
    rank,
    rref,
)

small_entries = st.integers(min_value=-6, max_value=6)


def small_matrix(max_side=5):
    return st.integers(1, max_side).flatmap(
        lambda r: st.integers(1, max_side).flatmap(
            lambda c: st.lists(
                st.lists(small_entries, min_size=c, max_size=c), min_size=r, max_size=r
            )
        )
    )


class TestMatrix:
    def test_shapes_and_entries(self):
        m = Matrix([[1, 2, 3], [4, 5, 6]])
        assert (m.nrows, m.ncols) == (2, 3)
        assert m[1, 2] == 6
        assert not m.is_square

    def test_ragged_rows_rejected(self):
        with pytest.raises(ValueError):
            Matrix([[1, 2], [3]])

    def test_product_and_commutator(self):
        a = Matrix([[1, 1], [0, 1]])
        b = Matrix([[1, 0], [1, 1]])
        assert a * b == Matrix([[2, 1], [1, 1]])
        assert a.commutator(b) == Matrix([[1, 0], [0, -1]])

    def test_incompatible_product(self):
        with pytest.raises(ValueError):
            Matrix([[1, 2]]) * Matrix([[1, 2]])

    def test_trace_requires_square(self):
        with pytest.raises(ValueError):
            Matrix([[1, 2, 3]]).trace()

    def test_flatten_roundtrip(self):
        m = Matrix([[1, 2], [3, 4]])
        assert Matrix.from_flat(m.flatten(), 2) == m

    def test_apply(self):
        m = Matrix([[1, 2], [3, 4]])
        assert m.apply((1, 1)) == (3, 7)


class TestKernelAndRank:
    def test_kernel_of_identity_is_zero(self):
        assert kernel(Matrix.identity(3)) == Subspace.zero(3)

    def test_kernel_of_zero_map_is_everything(self):
        assert kernel(Matrix.zeros(2, 5)).dim == 5

    def test_kernel_rank_one_matrix(self):
        # hand elimination: x + 2y = 0, so the kernel is the line through (-2, 1)
        k = kernel(Matrix([[1, 2], [2, 4]]))
        assert k.dim == 1
        assert k == Subspace.from_vectors([(-2, 1)])

    def test_rank_examples(self):
        assert rank(Matrix.identity(4)) == 4
        assert rank(Matrix([[1, 2], [2, 4]])) == 1
        assert rank(Matrix.zeros(3, 3)) == 0

    def test_empty_matrix_gives_full_ambient(self):
        m = Matrix([])
        assert m.nrows == 0

    @settings(max_examples=60, deadline=None)
    @given(small_matrix())
    def test_kernel_rank_duality(self, rows):
        m = Matrix(rows)
        assert kernel(m).dim + rank(m) == m.ncols

    @settings(max_examples=40, deadline=None)
    @given(small_matrix())
    def test_kernel_vectors_are_annihilated(self, rows):
        m = Matrix(rows)
        for vec in kernel(m).basis:
            assert all(not x for x in m.apply(vec))

    @settings(max_examples=40, deadline=None)
    @given(small_matrix())
    def test_sparse_kernel_matches_dense(self, rows):
        m = Matrix(rows)
        sparse_rows = [
            {j: v for j, v in enumerate(row) if v} for row in m.rows
        ]
        got = kernel_sparse(sparse_rows, m.ncols)
        assert tuple(got) == kernel(m).basis


class TestRref:
    def test_canonical_and_idempotent(self):
        rows, pivots = rref([[2, 4, 6], [1, 2, 4]])
        again, _ = rref(rows)
        assert rows == again
        assert pivots == [0, 2]
        for row, p in zip(rows, pivots):
            assert row[p] == 1

    def test_field_exactness_no_tolerance(self):
        # tiny pivots that would be lost in floating point
        rows, _ = rref([[Fraction(1, 10**40), 1], [0, 1]])
        assert rows == [(1, 0), (0, 1)]


class TestSubspace:
    def test_intersect_idempotent(self):
        a = Subspace.from_vectors([(1, 2, 0), (0, 0, 1)])
        assert a.intersect(a) == a

    def test_complementary_lines(self):
        a = Subspace.from_vectors([(1, 0)])
        b = Subspace.from_vectors([(0, 1)])
        assert a.intersect(b) == Subspace.zero(2)

    def test_coordinate_planes_meet_in_axis(self):
        xy = Subspace.from_vectors([(1, 0, 0), (0, 1, 0)])
        yz = Subspace.from_vectors([(0, 1, 0), (0, 0, 1)])
        assert xy.intersect(yz) == Subspace.from_vectors([(0, 1, 0)])

    def test_ambient_mismatch(self):
        with pytest.raises(ValueError):
            Subspace.full(2).intersect(Subspace.full(3))

    def _random_subspace(self, rng, n):
        k = rng.randint(0, n)
        vecs = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(k)]
        return Subspace.from_vectors(vecs, n)

    def test_intersection_properties(self):
        rng = random.Random(12)
        for _ in range(30):
            n = rng.randint(1, 6)
            a = self._random_subspace(rng, n)
            b = self._random_subspace(rng, n)
            c = self._random_subspace(rng, n)
            assert a.intersect(b) == b.intersect(a)
            assert a.intersect(b).intersect(c) == a.intersect(b.intersect(c))
            # monotone under inclusion
            assert (a + b).intersect(a) == a
            # dimension formula
            assert a.dim + b.dim == a.intersect(b).dim + (a + b).dim

    def test_contains(self):
        a = Subspace.from_vectors([(1, 2, 0), (0, 0, 1)])
        assert a.contains((2, 4, 7))
        assert not a.contains((1, 0, 0))

    def test_matrices_requires_square_ambient(self):
        with pytest.raises(ValueError):
            Subspace.full(3).matrices()

    def test_matrices_reshape(self):
        mats = Subspace.full(4).matrices()
        assert len(mats) == 4
        assert all(m.nrows == 2 for m in mats)


class TestAssociativeClosure:
    def test_identity_alone(self):
        assert associative_closure([Matrix.identity(3)]).dim == 1

    def test_diagonal_generator(self):
        # powers of diag(1, -1) span {diag(1,-1), identity}
        d = Matrix([[1, 0], [0, -1]])
        closure = associative_closure([d])
        assert closure.dim == 2
        assert closure.contains(Matrix.identity(2).flatten())
        assert closure.contains(d.flatten())

    def test_nilpotent_generator(self):
        e = Matrix.single_entry(2, 0, 1)
        assert associative_closure([e]).dim == 1

    def test_matrix_units_generate_everything(self):
        gens = [Matrix.single_entry(2, 0, 1), Matrix.single_entry(2, 1, 0)]
        assert associative_closure(gens).dim == 4

    def test_contains_span_and_idempotent(self):
        gens = [Matrix([[1, 1], [0, 0]]), Matrix([[0, 0], [1, 1]])]
        closure = associative_closure(gens)
        for m in gens:
            assert closure.contains(m.flatten())
        again = associative_closure(closure.matrices())
        assert again == closure

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            associative_closure([Matrix.identity(2), Matrix.identity(3)])
        with pytest.raises(ValueError):
            associative_closure([])
