import functools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tetra_subgroups import enumerator, perms, presentations, stabilizer, words

from .conftest import make_assignment


@functools.cache
def small_index_reps(entry_id: str, group: presentations.Group) -> tuple[perms.Assignment, ...]:
    pres = presentations.presentation_for(presentations.lookup(entry_id).symbol, group)
    return tuple(cls.rep.assignment for n in (2, 3, 4) for cls in enumerator.enumerate_classes(pres, n))


def formatted(pres: presentations.Presentation, ws: tuple[words.Word, ...]) -> list[str]:
    return [pres.format_word(w) for w in ws]


class TestCosetTable:
    def test_single_reflection(self, t10_full):
        rep = enumerator.TransitiveRep(t10_full, make_assignment(t10_full, 2, S="(12)"))
        table = stabilizer.build_coset_table(rep)
        assert formatted(t10_full, table.transversal) == ["", "S"]
        assert table.rows == ((1, 1, 1, 2), (2, 2, 2, 1))

    def test_trivial(self, t10_full):
        rep = enumerator.TransitiveRep(t10_full, make_assignment(t10_full, 1))
        table = stabilizer.build_coset_table(rep)
        assert table.transversal == (words.EMPTY,)
        assert table.n == 1

    def test_transversal_reaches_every_point(self, t10_full, t10_kleinian):
        for pres in (t10_full, t10_kleinian):
            for n in (2, 3, 4):
                for cls in enumerator.enumerate_classes(pres, n):
                    table = stabilizer.build_coset_table(cls.rep)
                    assert table.transversal[0] == words.EMPTY
                    for point, w in enumerate(table.transversal, start=1):
                        assert perms.evaluate_word(w, cls.rep.assignment)(1) == point
                    assert max(len(w) for w in table.transversal) <= n - 1


class TestSchreierGenerators:
    def test_single_reflection(self, t10_full):
        rep = enumerator.TransitiveRep(t10_full, make_assignment(t10_full, 2, S="(12)"))
        gens = stabilizer.schreier_generators(stabilizer.build_coset_table(rep))
        assert formatted(t10_full, gens.reduced) == ["P", "Q", "R", "SPS", "SQS", "SRS"]
        assert formatted(t10_full, gens.simplified) == ["P", "Q", "R", "SRS"]

    def test_two_reflections_drop_inverse(self, t19_full):
        rep = enumerator.TransitiveRep(t19_full, make_assignment(t19_full, 2, R="(12)", S="(12)"))
        gens = stabilizer.schreier_generators(stabilizer.build_coset_table(rep))
        assert formatted(t19_full, gens.reduced) == ["P", "Q", "SR", "RPR", "RQR"]

    def test_index_1_gives_the_generators(self, t10_full):
        rep = enumerator.TransitiveRep(t10_full, make_assignment(t10_full, 1))
        gens = stabilizer.schreier_generators(stabilizer.build_coset_table(rep))
        assert formatted(t10_full, gens.reduced) == ["P", "Q", "R", "S"]

    @pytest.mark.parametrize("entry_id", ["t1", "t10", "t19", "t32"])
    def test_generators_fix_point_1(self, entry_id):
        sym = presentations.lookup(entry_id).symbol
        for group in presentations.Group:
            pres = presentations.presentation_for(sym, group)
            k = pres.n_generators
            for n in (1, 2, 3, 4):
                for cls in enumerator.enumerate_classes(pres, n):
                    gens = stabilizer.stabilizer_words(cls)
                    assert stabilizer.stabilizer_fixes_point(gens, cls.rep.assignment)
                    assert len(gens.raw) == n * k
                    assert sum(1 for w in gens.raw if not w) == n - 1
                    assert len(gens.reduced) <= n * k - (n - 1)


class TestSimplifyWord:
    def test_commuting_reflections(self, t10_full):
        assert t10_full.format_word(stabilizer.simplify_word(t10_full.parse_word("SPS"), t10_full)) == "P"
        assert t10_full.format_word(stabilizer.simplify_word(t10_full.parse_word("PSP"), t10_full)) == "S"

    def test_no_rule_applies(self, t10_full):
        assert t10_full.format_word(stabilizer.simplify_word(t10_full.parse_word("SRS"), t10_full)) == "SRS"

    def test_involution_and_relator(self, t10_full, t10_kleinian):
        assert stabilizer.simplify_word(t10_full.parse_word("PP"), t10_full) == words.EMPTY
        assert stabilizer.simplify_word(t10_full.parse_word("QPQPQP"), t10_full) == words.EMPTY
        simplified = stabilizer.simplify_word(t10_kleinian.parse_word("caaab"), t10_kleinian)
        assert t10_kleinian.format_word(simplified) == "cb"
        assert stabilizer.simplify_word(t10_kleinian.parse_word("AAA"), t10_kleinian) == words.EMPTY

    @pytest.mark.parametrize("group", list(presentations.Group))
    @pytest.mark.parametrize("entry_id", [entry.id for entry in presentations.catalog()])
    @settings(max_examples=100, deadline=None)
    @given(data=st.data())
    def test_preserves_the_permutation(self, entry_id, group, data):
        pres = presentations.presentation_for(presentations.lookup(entry_id).symbol, group)
        letter = st.tuples(st.integers(min_value=0, max_value=pres.n_generators - 1), st.sampled_from([1, -1]))
        w = words.word(*data.draw(st.lists(letter, max_size=14)))
        simplified = stabilizer.simplify_word(w, pres)
        assert len(simplified) <= len(w)
        assert stabilizer.simplify_word(simplified, pres) == simplified
        for a in small_index_reps(entry_id, group):
            assert perms.evaluate_word(simplified, a) == perms.evaluate_word(w, a)


class TestSameSubgroup:
    def test_itself_and_point_fixing_conjugate(self, t10_full):
        (cls,) = enumerator.enumerate_classes(t10_full, 3)
        conjugate = perms.conjugate_assignment(cls.rep.assignment, perms.parse_cycles("(23)", 3))
        assert stabilizer.same_subgroup(cls.rep, cls.rep)
        assert stabilizer.same_subgroup(cls.rep, enumerator.TransitiveRep(t10_full, conjugate))

    def test_distinct_index_2_subgroups(self, t10_full):
        reflection_s = enumerator.TransitiveRep(t10_full, make_assignment(t10_full, 2, S="(12)"))
        pqr = make_assignment(t10_full, 2, P="(12)", Q="(12)", R="(12)")
        reflections_pqr = enumerator.TransitiveRep(t10_full, pqr)
        assert not stabilizer.same_subgroup(reflection_s, reflections_pqr)

    def test_degree_mismatch(self, t10_full):
        (index_2, *_) = enumerator.enumerate_classes(t10_full, 2)
        (index_3,) = enumerator.enumerate_classes(t10_full, 3)
        with pytest.raises(ValueError):
            stabilizer.same_subgroup(index_2.rep, index_3.rep)
