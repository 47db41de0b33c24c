from fractions import Fraction as F

import pytest

from derleib.algebra import Algebra
from derleib.catalog import (
    INTERLEAVED,
    dieudonne,
    heisenberg_leibniz,
    heisenberg_lie,
    jordan,
    kronecker,
)
from derleib.claims import heis_grouped_gens
from derleib.derivations import (
    ClosureError,
    GenusError,
    MatrixLieAlgebra,
    almost_inner_genus1,
    almost_inner_sample,
    commutator,
    der_algebra,
    induced_structure,
    inner_derivations,
    is_derivation,
)
from derleib.exactlin import Mat, Q, ShapeMismatch


class TestIsDerivation:
    def test_zero_map(self):
        assert is_derivation(Mat.zero(3, 3), heisenberg_lie(1))

    def test_identity_fails_on_graded_algebra(self):
        # z sits in degree two, so the identity map is not a derivation
        assert not is_derivation(Mat.identity(3), heisenberg_lie(1))

    def test_named_generators_are_derivations(self):
        for n, a in ((1, F(2)), (2, F(2)), (3, F(-3))):
            alg = heisenberg_leibniz(n, jordan(a, n))
            for name, m in heis_grouped_gens(n).items():
                assert is_derivation(m, alg), name

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            is_derivation(Mat.zero(2, 2), heisenberg_lie(1))


class TestDerAlgebra:
    def test_abelian_full_endomorphisms(self):
        for k in (1, 2, 3):
            assert der_algebra(Algebra.abelian(k)).dim == k * k

    def test_catalog_dimensions(self):
        assert der_algebra(dieudonne(1)).dim == 6
        assert der_algebra(heisenberg_leibniz(2, jordan(F(2), 2))).dim == 7

    def test_closure_and_induced_structure(self):
        der = der_algebra(heisenberg_leibniz(2, jordan(F(2), 2)))
        assert der.closure_verified
        struct = induced_structure(der)
        assert struct.kind.lie
        # induced tensor reproduces the matrix commutators
        for s in (0, 3, 5):
            for t in (1, 2, 6):
                comm = commutator(der.basis[s], der.basis[t])
                via_tensor = struct.bracket(struct.basis_vector(s),
                                            struct.basis_vector(t))
                rebuilt = Mat.zero(5, 5, Q)
                for k, cf in enumerate(via_tensor):
                    if cf:
                        rebuilt = rebuilt + der.basis[k].scale(cf)
                assert rebuilt == comm

    def test_commuting_family_abelian(self):
        mats = [Mat.unit(3, 3, 0, 0), Mat.unit(3, 3, 1, 1)]
        mla = MatrixLieAlgebra.from_matrices(mats, 3, Q)
        struct = induced_structure(mla)
        full = struct.full_space()
        assert struct.product_space(full, full).is_zero()

    def test_non_closed_family_raises(self):
        with pytest.raises(ClosureError):
            MatrixLieAlgebra.from_matrices(
                [Mat.unit(2, 2, 0, 1), Mat.unit(2, 2, 1, 0)], 2, Q)

    def test_a_independence(self):
        subs = {der_algebra(heisenberg_leibniz(2, jordan(a, 2))).subspace
                for a in (F(2), F(1, 2), F(-3))}
        assert len(subs) == 1

    def test_intersection_identity(self):
        # Der(J_0) meet Der(kronecker) = Der(J_a) inside 5x5 matrices
        d_j0 = der_algebra(heisenberg_leibniz(2, jordan(F(0), 2))).subspace
        d_k = der_algebra(kronecker(2)).subspace
        d_ja = der_algebra(heisenberg_leibniz(2, jordan(F(2), 2))).subspace
        assert d_j0.intersect(d_k) == d_ja


class TestInner:
    def test_abelian_trivial(self):
        assert inner_derivations(Algebra.abelian(3)).dim == 0

    def test_exceptional_drop(self):
        assert inner_derivations(heisenberg_leibniz(2, jordan(F(1), 2))).dim == 3
        assert inner_derivations(heisenberg_leibniz(2, jordan(F(-1), 2))).dim == 3

    def test_kronecker_rank(self):
        for n in (1, 2, 3):
            assert inner_derivations(kronecker(n)).dim == 2 * n

    def test_requires_left_leibniz(self):
        right_only = Algebra.from_brackets(Q, ["x", "y"], {(1, 0): [(1, 1)]})
        with pytest.raises(ValueError):
            inner_derivations(right_only)

    def test_inner_is_ideal_of_der(self):
        alg = heisenberg_leibniz(2, jordan(F(2), 2))
        der = der_algebra(alg)
        inn = inner_derivations(alg)
        assert der.subspace.contains(inn.subspace)
        for d in der.basis:
            for w in inn.basis:
                assert inn.contains(commutator(d, w))

    def test_derivations_preserve_commutator_ideal(self):
        for alg in (kronecker(2), dieudonne(2),
                    heisenberg_leibniz(2, jordan(F(1), 2))):
            comm = alg.product_space(alg.full_space(), alg.full_space())
            for d in der_algebra(alg).basis:
                for v in comm.basis:
                    assert comm.contains(d.apply(v))


class TestAlmostInner:
    def test_generic_equals_inner(self):
        alg = heisenberg_leibniz(2, jordan(F(2), 2))
        assert almost_inner_genus1(alg).subspace == \
            inner_derivations(alg).subspace

    def test_exceptional_strictly_larger(self):
        alg = heisenberg_leibniz(2, jordan(F(1), 2))
        aid = almost_inner_genus1(alg)
        inn = inner_derivations(alg)
        assert aid.dim == 4 and inn.dim == 3
        assert aid.subspace.contains(inn.subspace)

    def test_dieudonne_dimension(self):
        for n in (1, 2):
            assert almost_inner_genus1(dieudonne(n)).dim == 2 * n + 1

    def test_requires_genus_one(self):
        with pytest.raises(GenusError):
            almost_inner_genus1(Algebra.abelian(2))

    def test_inclusion_chain(self):
        for alg in (kronecker(2), dieudonne(2),
                    heisenberg_leibniz(2, jordan(F(-1), 2))):
            der = der_algebra(alg)
            aid = almost_inner_genus1(alg)
            inn = inner_derivations(alg)
            assert der.subspace.contains(aid.subspace)
            assert aid.subspace.contains(inn.subspace)


class TestAlmostInnerSample:
    def test_inner_always_passes(self):
        alg = kronecker(2)
        ad = alg.adjoint(alg.basis_vector(0), "left")
        assert almost_inner_sample(ad, alg, trials=25, seed=1) is None

    def test_exceptional_witnessless_map_passes(self):
        # bottom-row unit in the first column, pairwise basis, a = 1
        alg = heisenberg_leibniz(2, jordan(F(1), 2), INTERLEAVED)
        d = Mat.unit(5, 5, 4, 0)
        assert is_derivation(d, alg)
        assert not inner_derivations(alg).contains(d)
        assert almost_inner_sample(d, alg, trials=40, seed=2) is None

    def test_diagonal_derivation_is_falsified(self):
        alg = heisenberg_leibniz(2, jordan(F(2), 2))
        gens = heis_grouped_gens(2)
        witness = almost_inner_sample(gens["x"], alg, trials=40, seed=3)
        assert witness is not None
        # the witness certifies: x-image escapes the bracket span of witness
        assert any(gens["x"].apply(witness))

    def test_non_derivation_rejected(self):
        with pytest.raises(ValueError):
            almost_inner_sample(Mat.identity(3), heisenberg_lie(1))
