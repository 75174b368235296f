import pytest

from convlab.families import ValidationError
from convlab.functors import (
    COREFLECTORS,
    HANDLES,
    REFLECTORS,
    Selector,
    check_functor_laws,
    class_filter_masks,
    countable_character_coreflect,
    handle,
    is_pretopology,
    is_pseudotopology,
    is_topology,
    locally_compactoid_coreflect,
    pretopologize,
    pseudotopologize,
    reflect,
    seq_coreflect,
    topologize,
)
from convlab.spaces import discrete, finer
from convlab.enumerate import all_convergences, all_topologies, default_carrier
from convlab.zoo import ABC, chain_pretopology, two_point_non_pseudo


@pytest.fixture(scope="module")
def p3():
    return chain_pretopology()


class TestReflect:
    def test_pretopology_is_S0_fixed(self, p3):
        assert reflect(Selector.F0, p3).table == p3.table

    def test_discrete_fixed_by_every_selector(self):
        d = discrete(ABC)
        for sel in Selector:
            assert reflect(sel, d).table == d.table

    def test_closed_class_reflection_of_chain(self, p3):
        t = reflect(Selector.F0_CLOSED, p3)
        assert t.table[ABC.mask_of("c")] == ABC.full
        # the open sets of the reflection are those of the original space
        from convlab.spaces import open_masks
        assert set(open_masks(t)) == set(open_masks(p3)) == {
            0, ABC.mask_of("c"), ABC.mask_of("bc"), ABC.full}

    def test_topologize_idempotent_on_topologies(self):
        for top in all_topologies(default_carrier(3)):
            assert topologize(top).table == top.table

    def test_contractive_and_idempotent_sampled(self):
        for conv in all_convergences(default_carrier(3))[::97]:
            t = topologize(conv)
            assert finer(conv, t)
            assert topologize(t).table == t.table


class TestSelectors:
    def test_class_enumerations_coincide_finitely(self, p3):
        f0 = class_filter_masks(Selector.F0, p3)
        f1 = class_filter_masks(Selector.F1, p3)
        fa = class_filter_masks(Selector.F_ALL, p3)
        assert f0 == f1 == fa == tuple(range(1, 8))

    def test_closed_class_is_a_subset(self, p3):
        closed = class_filter_masks(Selector.F0_CLOSED, p3)
        assert set(closed) <= set(class_filter_masks(Selector.F0, p3))
        assert set(closed) == {ABC.mask_of("a"), ABC.mask_of("ab"), ABC.full}

    def test_closed_class_monotone_in_the_convergence(self):
        # coarser convergence -> fewer opens -> fewer closed sets
        for conv in all_convergences(default_carrier(2)):
            t = topologize(conv)
            assert set(class_filter_masks(Selector.F0_CLOSED, conv)) == \
                set(class_filter_masks(Selector.F0_CLOSED, t))


class TestCoreflectors:
    def test_all_identity_on_chain(self, p3):
        assert seq_coreflect(p3).table == p3.table
        assert countable_character_coreflect(p3).table == p3.table
        assert locally_compactoid_coreflect(p3).table == p3.table

    def test_identity_on_discrete(self):
        d = discrete(ABC)
        assert locally_compactoid_coreflect(d).table == d.table


class TestClassPredicates:
    def test_chain_is_pretopology_not_topology(self, p3):
        assert is_pretopology(p3)
        assert not is_topology(p3)
        assert is_pseudotopology(p3)

    def test_two_point_non_pseudotopology(self):
        conv = two_point_non_pseudo()
        assert not is_pseudotopology(conv)
        s = pseudotopologize(conv)
        assert s.table[conv.carrier.full] == conv.carrier.mask_of("b")

    def test_every_topology_passes_all_three(self):
        for top in all_topologies(default_carrier(3)):
            assert is_topology(top)
            assert is_pretopology(top)
            assert is_pseudotopology(top)


class TestHandles:
    def test_registry(self):
        assert handle("T").kind == "reflector"
        assert handle("Seq").kind == "coreflector"
        assert handle("I").kind == "identity"
        with pytest.raises(ValidationError):
            handle("Q")

    def test_identity_functor_trivially_lawful(self):
        rep = check_functor_laws(
            HANDLES["I"], list(all_convergences(default_carrier(2))))
        assert rep.ok

    def test_selector_of_coreflector_raises(self):
        with pytest.raises(ValidationError):
            HANDLES["Seq"].selector


class TestOrdering:
    def test_pointwise_chain_on_the_chain_pretopology(self, p3):
        t, s0 = topologize(p3), pretopologize(p3)
        assert finer(s0, t) and finer(p3, s0)

    def test_reflections_are_valid_convergences(self):
        from convlab.spaces import validate_table
        for conv in all_convergences(default_carrier(2)):
            for r in REFLECTORS + COREFLECTORS:
                out = r(conv)
                assert validate_table(out.carrier, out.table) == []
