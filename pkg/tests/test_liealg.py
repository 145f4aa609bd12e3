import random
from fractions import Fraction

import pytest

from liestab.liealg import (
    LieAlgebra,
    ad_subalgebra,
    build,
    center_of_subalgebra,
    is_irreducible,
    is_semisimple,
    killing_form,
    structure_constants_in,
    supported,
)
from liestab.linalg import Matrix, Subspace, rank

ALL_SMALL = [("A", 1), ("A", 2), ("B", 2), ("C", 3), ("D", 4), ("G", 2)]

EXPECTED_DIMS = {"A1": 3, "A2": 8, "B2": 10, "C3": 21, "D4": 28, "G2": 14}


def random_vector(g, rng):
    return tuple(Fraction(rng.randint(-5, 5)) for _ in range(g.dim))


class TestBuild:
    def test_sl2_bracket_table(self, sl2):
        # basis H, X, Y with [H,X] = 2X, [H,Y] = -2Y, [X,Y] = H
        assert sl2.dim == 3
        assert sl2.bracket_basis(0, 1) == {1: 2}
        assert sl2.bracket_basis(0, 2) == {2: -2}
        assert sl2.bracket_basis(1, 2) == {0: 1}

    @pytest.mark.parametrize("series,rk", ALL_SMALL)
    def test_dimensions(self, series, rk):
        g = build(series, rk)
        assert g.dim == EXPECTED_DIMS[g.name]
        assert len(g.labels) == g.dim

    @pytest.mark.parametrize(
        "series,rk", [("A", 0), ("B", 1), ("C", 2), ("D", 3), ("G", 3), ("E", 6)]
    )
    def test_unsupported(self, series, rk):
        assert not supported(series, rk)
        with pytest.raises(ValueError, match="unsupported"):
            build(series, rk)

    @pytest.mark.parametrize("series,rk", ALL_SMALL)
    def test_jacobi_and_antisymmetry(self, series, rk):
        g = build(series, rk)
        g.validate()
        rng = random.Random(5)
        for _ in range(10):
            x, y = random_vector(g, rng), random_vector(g, rng)
            assert g.bracket(x, y) == tuple(-v for v in g.bracket(y, x))
        zero = (Fraction(0),) * g.dim
        x = random_vector(g, rng)
        assert g.bracket(x, x) == zero

    def test_cartan_generators_act_diagonally(self, so5):
        # basis ordering puts the Cartan subalgebra first
        for i in range(2):
            ad = so5.ad_basis(i)
            assert all(not v for r, c, v in ad.nonzero_entries() if r != c)


class TestAdjoint:
    def test_ad_of_zero(self, sl2):
        assert sl2.ad((0, 0, 0)) == Matrix.zeros(3, 3)

    def test_ad_of_cartan_is_diagonal(self, sl2):
        assert sl2.ad_basis(0) == Matrix([[0, 0, 0], [0, 2, 0], [0, 0, -2]])

    def test_ad_agrees_with_bracket(self, sl3):
        rng = random.Random(9)
        for _ in range(10):
            x, y = random_vector(sl3, rng), random_vector(sl3, rng)
            assert sl3.ad(x).apply(y) == sl3.bracket(x, y)

    @pytest.mark.parametrize("series,rk", ALL_SMALL)
    def test_ad_is_homomorphism(self, series, rk):
        g = build(series, rk)
        rng = random.Random(11)
        for _ in range(5):
            x, y = random_vector(g, rng), random_vector(g, rng)
            assert g.ad(g.bracket(x, y)) == g.ad(x).commutator(g.ad(y))

    @pytest.mark.parametrize("series,rk", ALL_SMALL)
    def test_ad_traceless(self, series, rk):
        g = build(series, rk)
        for i in range(g.dim):
            assert g.ad_basis(i).trace() == 0

    @pytest.mark.parametrize("series,rk", ALL_SMALL)
    def test_brackets_span_everything(self, series, rk):
        # [g, g] = g for a simple algebra, by rank of the span of all brackets
        g = build(series, rk)
        vectors = []
        for i in range(g.dim):
            for j in range(i + 1, g.dim):
                expansion = g.bracket_basis(i, j)
                if expansion:
                    row = [Fraction(0)] * g.dim
                    for k, c in expansion.items():
                        row[k] = c
                    vectors.append(row)
        assert Subspace.from_vectors(vectors, g.dim).dim == g.dim

    def test_ad_subalgebra_dims(self, sl2, sl3):
        assert ad_subalgebra(sl2).dim == 3
        assert ad_subalgebra(sl3).dim == 8

    def test_ad_subalgebra_is_traceless(self, sl3):
        for m in ad_subalgebra(sl3).matrices():
            assert m.trace() == 0


class TestKillingForm:
    def test_sl2_values(self, sl2):
        b = killing_form(sl2)
        assert b[0, 0] == 8  # B(H, H)
        assert b[1, 2] == 4  # B(X, Y)
        assert b[0, 1] == 0  # B(H, X)

    @pytest.mark.parametrize("series,rk", ALL_SMALL)
    def test_nondegenerate(self, series, rk):
        g = build(series, rk)
        assert rank(killing_form(g)) == g.dim

    def test_symmetry_and_invariance(self, sl3):
        b = killing_form(sl3)
        assert b == b.transpose()
        rng = random.Random(3)

        def pair(x, y):
            return sum(
                xi * b[i, j] * yj
                for i, xi in enumerate(x)
                if xi
                for j, yj in enumerate(y)
                if yj
            )

        for _ in range(5):
            x, y, z = (random_vector(sl3, rng) for _ in range(3))
            assert pair(x, y) == pair(y, x)
            assert pair(sl3.bracket(z, x), y) == -pair(x, sl3.bracket(z, y))


class TestCenter:
    def test_identity_is_its_own_center(self):
        c = center_of_subalgebra([Matrix.identity(2)])
        assert c.dim == 1
        assert c.contains(Matrix.identity(2).flatten())

    def test_adjoint_image_has_zero_center(self, sl2):
        assert center_of_subalgebra(sl2.ad_matrices()).dim == 0

    def test_full_gl_center_is_scalars(self):
        units = [Matrix.single_entry(2, i, j) for i in range(2) for j in range(2)]
        c = center_of_subalgebra(units)
        assert c.dim == 1
        assert c.basis[0] == Matrix.identity(2).flatten()


class TestSemisimplicity:
    def test_adjoint_image_is_semisimple(self, sl3):
        assert is_semisimple(sl3.ad_matrices())

    def test_single_nilpotent_is_not(self):
        assert not is_semisimple([Matrix.single_entry(2, 0, 1)])

    def test_scalars_are_not(self):
        assert not is_semisimple([Matrix.identity(3)])

    def test_unclosed_basis_reports_witness_pair(self):
        basis = [Matrix.single_entry(2, 0, 1), Matrix.single_entry(2, 1, 0)]
        # [E01, E10] = E00 - E11 is outside the span
        with pytest.raises(ValueError, match=r"pair \(0, 1\)"):
            is_semisimple(basis)

    def test_dependent_basis_rejected(self):
        m = Matrix.identity(2)
        with pytest.raises(ValueError, match="dependent"):
            is_semisimple([m, m.scale(2)])

    def test_structure_constants_of_adjoint_match_original(self, sl2):
        # ad is faithful, so the abstract constants agree with the table
        assert structure_constants_in(sl2.ad_matrices()) == sl2.brackets


class TestIrreducibility:
    def test_adjoint_generators_act_irreducibly(self, sl2):
        assert is_irreducible(sl2.ad_matrices())

    def test_identity_alone_is_reducible(self):
        assert not is_irreducible([Matrix.identity(2)])

    def test_block_diagonal_is_reducible(self):
        gens = [
            Matrix([[1, 2, 0], [3, 4, 0], [0, 0, 5]]),
            Matrix([[0, 1, 0], [1, 1, 0], [0, 0, 2]]),
        ]
        assert not is_irreducible(gens)


class TestG2Table:
    def test_builds_and_validates(self, g2):
        assert g2.dim == 14
        g2.validate()

    def test_killing_rank(self, g2):
        assert rank(killing_form(g2)) == 14

    def test_cartan_eigenvalues_are_integers(self, g2):
        for i in (0, 1):
            ad = g2.ad_basis(i)
            for j in range(14):
                assert ad[j, j].denominator == 1

    def test_ad_injective(self, g2):
        assert ad_subalgebra(g2).dim == 14
