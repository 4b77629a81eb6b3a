"""Truncated Fock representation: exact and numeric checks."""

import pytest

from qdisc.scalar import ZERO, ONE, q_pow
from qdisc.modalg import ExtElement
from qdisc.fock import (
    weight, FockMatrix, fock_matrix,
    relation_defect_zero, relation_defect_float, adjoint_transpose_check,
    adjoint_check_exact, vacuum_kernel_dim, vacuum_vectors, monomial_rank,
    commutant_dim, faithfulness_check, irreducibility_check,
    adjointness_check,
)


class TestWeights:
    def test_values(self):
        assert weight(0) == ONE
        assert weight(1) == ONE - q_pow(2)
        assert weight(2) == (ONE - q_pow(2)) * (ONE - q_pow(4))

    def test_recursion(self):
        for n in range(1, 8):
            assert weight(n) == weight(n - 1) * (ONE - q_pow(2 * n))


class TestMatrices:
    def test_z_shifts_up(self):
        Z = fock_matrix(ExtElement.pol_mono(1, 0), 4)
        assert Z.entries == {(n + 1, n): ONE for n in range(4)}
        assert Z.boundary == 1

    def test_zstar_shifts_down(self):
        Zs = fock_matrix(ExtElement.pol_mono(0, 1), 4)
        assert Zs.entries == {(n - 1, n): ONE - q_pow(2 * n) for n in range(1, 5)}

    def test_f0_projects(self):
        P = fock_matrix(ExtElement.fin_mono(0, 0), 4)
        assert P.entries == {(0, 0): ONE}

    def test_fin_mono_single_entry(self):
        M = fock_matrix(ExtElement.fin_mono(2, 1), 6)
        assert M.entries == {(2, 1): weight(1)}

    def test_matrix_of_product_matches_product_of_matrices(self):
        N = 10
        e1 = ExtElement.pol_mono(1, 1)
        e2 = ExtElement.pol_mono(0, 1) + ExtElement.fin_mono(1, 0)
        lhs = fock_matrix(e1 * e2, N)
        rhs = fock_matrix(e1, N) * fock_matrix(e2, N)
        assert lhs.equal_on_reliable(rhs)

    def test_boundary_addition(self):
        N = 6
        a = fock_matrix(ExtElement.pol_mono(1, 0), N)
        assert (a * a).boundary == 2


class TestRelation:
    @pytest.mark.parametrize("N", [8, 32])
    def test_exact(self, N):
        assert relation_defect_zero(N)

    @pytest.mark.parametrize("q0", [0.25, 0.5, 0.9])
    def test_numeric(self, q0):
        assert relation_defect_float(32, q0) < 1e-12

    @pytest.mark.parametrize("q0", [0.25, 0.9])
    def test_adjoint_numeric(self, q0):
        assert adjoint_transpose_check(32, q0) < 1e-12

    def test_adjoint_exact(self):
        assert adjoint_check_exact(16)


class TestStructure:
    def test_vacuum_kernel(self):
        for N in (1, 2, 5, 16):
            assert vacuum_kernel_dim(N) == 1

    def test_monomial_rank(self):
        assert monomial_rank(2, 6) == 9
        assert monomial_rank(3, 8) == 16

    def test_monomial_rank_rejects_small_truncation(self):
        with pytest.raises(ValueError):
            monomial_rank(3, 5)

    @pytest.mark.parametrize("q0", [0.5, 0.9])
    def test_commutant_trivial(self, q0):
        assert commutant_dim(8, q0) == 1


class TestReports:
    def test_vacuum_vectors_span_e0(self):
        vs = vacuum_vectors(6)
        assert len(vs) == 1
        v = vs[0]
        assert v[0]
        assert all(not c for c in v[1:])

    def test_faithfulness(self):
        rep = faithfulness_check(3, 8)
        assert rep.ok
        assert rep.checked == 16

    def test_faithfulness_needs_room(self):
        with pytest.raises(ValueError):
            faithfulness_check(3, 5)

    def test_irreducibility(self):
        assert irreducibility_check(8, 0.5).ok

    def test_adjointness(self):
        rep = adjointness_check(12)
        assert rep.ok
        assert rep.checked == 13 ** 2
