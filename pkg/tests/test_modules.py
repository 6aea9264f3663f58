"""Representations, homomorphisms, radicals, tops, kernels."""

import pytest

from quivermag.linalg import Matrix
from quivermag.modules import (ModuleMap, Representation, direct_sum, kernel,
                               radical, simple_module, top, zero_module)
from quivermag.path_algebra import enumerate_paths, projective_module


class TestRepresentation:
    def test_simple_modules(self, a2):
        s1 = simple_module(a2, "1")
        assert s1.dims == (1, 0)
        assert simple_module(a2, "2").dims == (0, 1)

    def test_sum_of_simples_has_all_ones_dimension_vector(self, bound_chain):
        total = direct_sum(bound_chain, [simple_module(bound_chain, v)
                                         for v in bound_chain.quiver.vertices])
        assert total.dims == (1, 1, 1)

    def test_simples_satisfy_relations_vacuously(self, bound_chain):
        for v in bound_chain.quiver.vertices:
            simple_module(bound_chain, v)  # construction validates

    def test_relation_violation_rejected(self, bound_chain):
        maps = {"a": Matrix([[1]]), "b": Matrix([[1]])}
        with pytest.raises(ValueError, match="violate the relation"):
            Representation(bound_chain, (1, 1, 1), maps)

    def test_wrong_shape_rejected(self, a2):
        with pytest.raises(ValueError, match="shape"):
            Representation(a2, (1, 1), {"a": Matrix.zeros(2, 1)})

    def test_zero_module(self, a2):
        z = zero_module(a2)
        assert z.is_zero() and z.total_dim == 0


class TestModuleMap:
    def test_naturality_enforced(self, a2):
        pb = enumerate_paths(a2)
        p1 = projective_module(a2, pb, "1")
        s1 = simple_module(a2, "1")
        # projecting onto the top of P_1 is natural...
        ModuleMap(p1, s1, [Matrix([[1]]), Matrix.zeros(0, 1)])
        # ...but an arbitrary nonzero block at vertex 2 is not
        s2 = simple_module(a2, "2")
        with pytest.raises(ValueError, match="naturality"):
            ModuleMap(p1, s2, [Matrix.zeros(0, 1), Matrix.zeros(1, 1)])

    def test_compose_and_rank(self, a2):
        s1 = simple_module(a2, "1")
        ident = ModuleMap(s1, s1, [Matrix.identity(1), Matrix.zeros(0, 0)])
        assert ident.compose(ident).rank() == 1
        assert not ident.is_zero()


class TestRadicalAndTop:
    def test_radical_of_simple_is_zero(self, a2):
        rad, incl = radical(simple_module(a2, "1"))
        assert rad.is_zero()
        assert incl.is_zero()

    def test_radical_of_p1_a2(self, a2):
        pb = enumerate_paths(a2)
        rad, incl = radical(projective_module(a2, pb, "1"))
        assert rad.dims == (0, 1)
        assert incl.blocks[1] == Matrix([[1]])

    def test_radical_of_p1_bound_chain(self, bound_chain):
        pb = enumerate_paths(bound_chain)
        rad, _ = radical(projective_module(bound_chain, pb, "1"))
        assert rad.dims == (0, 1, 0)

    def test_top_of_projectives_is_one_simple(self, bound_chain):
        pb = enumerate_paths(bound_chain)
        for i, v in enumerate(bound_chain.quiver.vertices):
            expected = tuple(1 if k == i else 0 for k in range(3))
            assert top(projective_module(bound_chain, pb, v)) == expected

    def test_top_of_simple(self, a2):
        assert top(simple_module(a2, "1")) == (1, 0)

    def test_top_is_additive(self, a2):
        pb = enumerate_paths(a2)
        p1 = projective_module(a2, pb, "1")
        assert top(direct_sum(a2, [p1, p1])) == (2, 0)


class TestKernel:
    def test_kernel_of_identity_is_zero(self, a2):
        s1 = simple_module(a2, "1")
        ident = ModuleMap(s1, s1, [Matrix.identity(1), Matrix.zeros(0, 0)])
        ker, _ = kernel(ident)
        assert ker.is_zero()

    def test_kernel_of_projection_p1_onto_s1(self, a2):
        pb = enumerate_paths(a2)
        p1 = projective_module(a2, pb, "1")
        s1 = simple_module(a2, "1")
        projection = ModuleMap(p1, s1, [Matrix([[1]]), Matrix.zeros(0, 1)])
        ker, incl = kernel(projection)
        assert ker.dims == (0, 1)  # a copy of S_2
        assert incl.blocks[1] == Matrix([[1]])

    def test_kernel_dims_by_rank_nullity(self, bound_chain):
        pb = enumerate_paths(bound_chain)
        p1 = projective_module(bound_chain, pb, "1")
        s1 = simple_module(bound_chain, "1")
        projection = ModuleMap(p1, s1, [Matrix([[1]]), Matrix.zeros(0, 1), Matrix.zeros(0, 0)])
        ker, _ = kernel(projection)
        for i in range(3):
            from quivermag.linalg import rank
            assert ker.dims[i] == p1.dims[i] - rank(projection.blocks[i])
