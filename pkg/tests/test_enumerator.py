import math

import pytest

from tetra_subgroups import enumerator, perms, presentations

from .conftest import make_assignment

# 2-colorings: images of P, Q, R, S followed by the derived PQ, QR, RS, PR, PS, QS
TWO_COLORINGS = [
    "(12) (1) (1) (1) (12) (1) (1) (12) (12) (1)",
    "(1) (12) (1) (1) (12) (12) (1) (1) (1) (12)",
    "(1) (1) (12) (1) (1) (12) (12) (12) (1) (1)",
    "(1) (1) (1) (12) (1) (1) (12) (1) (12) (12)",
    "(1) (1) (12) (12) (1) (12) (1) (12) (12) (12)",
    "(1) (12) (1) (12) (12) (12) (12) (1) (12) (1)",
    "(1) (12) (12) (1) (12) (1) (12) (12) (1) (12)",
    "(12) (12) (1) (1) (1) (12) (1) (12) (12) (12)",
    "(12) (1) (12) (1) (12) (12) (12) (1) (12) (1)",
    "(12) (1) (1) (12) (12) (1) (12) (12) (1) (12)",
    "(1) (12) (12) (12) (12) (1) (1) (12) (12) (1)",
    "(12) (1) (12) (12) (12) (12) (1) (1) (1) (12)",
    "(12) (12) (1) (12) (1) (12) (12) (12) (1) (1)",
    "(12) (12) (12) (1) (1) (1) (12) (1) (12) (12)",
    "(12) (12) (12) (12) (1) (1) (1) (1) (1) (1)",
]


class TestCandidates:
    def test_stage_sizes(self, t10_full, t10_kleinian):
        assert len(enumerator.enumerate_candidates(t10_full, 2, enumerator.Stage.all)) == 16
        assert len(enumerator.enumerate_candidates(t10_full, 2, enumerator.Stage.nontrivial)) == 15
        assert len(enumerator.enumerate_candidates(t10_kleinian, 3, enumerator.Stage.all)) == 216
        # P = Q = R forced by the odd orders of PQ and QR, S free
        assert len(enumerator.enumerate_candidates(t10_full, 2, enumerator.Stage.relator_filtered)) == 4
        assert len(enumerator.enumerate_candidates(t10_full, 2, enumerator.Stage.transitive)) == 3

    def test_two_colorings_and_their_pair_images(self, t10_full):
        candidates = enumerator.enumerate_candidates(t10_full, 2, enumerator.Stage.nontrivial)
        names = t10_full.generator_names
        listed = {}
        for row in TWO_COLORINGS:
            cycles = row.split()
            a = perms.parse_assignment(dict(zip(names, cycles[:4], strict=True)), names, 2)
            listed[a] = cycles[4:]
        assert set(candidates) == set(listed)
        for a, derived in listed.items():
            images = enumerator.angle_images(a, t10_full)
            assert [perms.format_cycles(images[label]) for label in presentations.ANGLE_LABELS] == derived

    def test_transitive_candidates_satisfy_relators(self, t19_full):
        for a in enumerator.enumerate_candidates(t19_full, 3):
            assert enumerator.satisfies_relators(a, t19_full)
            assert perms.is_transitive(a)

    def test_relator_search_matches_plain_filter(self, t10_kleinian):
        everything = enumerator.enumerate_candidates(t10_kleinian, 3, enumerator.Stage.all)
        filtered = sorted(a for a in everything if enumerator.satisfies_relators(a, t10_kleinian))
        assert enumerator.enumerate_candidates(t10_kleinian, 3, enumerator.Stage.relator_filtered) == filtered

    def test_parallel_search_gives_the_same_order(self, t10_full):
        sequential = enumerator.enumerate_candidates(t10_full, 3, jobs=1)
        assert enumerator.enumerate_candidates(t10_full, 3, jobs=2) == sequential

    def test_degree_cap(self, t10_full):
        with pytest.raises(perms.DegreeCapError):
            enumerator.enumerate_candidates(t10_full, perms.MAX_DEGREE + 1)
        with pytest.raises(ValueError):
            enumerator.enumerate_classes(t10_full, 0)


class TestTransitiveRep:
    def test_rejects_relator_violation(self, t10_full):
        with pytest.raises(ValueError):
            enumerator.TransitiveRep(t10_full, make_assignment(t10_full, 2, P="(12)"))

    def test_rejects_intransitive(self, t10_full):
        with pytest.raises(ValueError):
            enumerator.TransitiveRep(t10_full, make_assignment(t10_full, 3, S="(12)"))

    def test_printed_index_4_row_is_not_a_representation(self, t10_kleinian):
        a = make_assignment(t10_kleinian, 4, a="(234)", b="(143)", c="(13)")
        assert not enumerator.satisfies_relators(a, t10_kleinian)


class TestCanonicalForm:
    def test_idempotent_and_constant_on_orbits(self, t10_full, t10_kleinian):
        for pres in (t10_full, t10_kleinian):
            for n in (2, 3, 4):
                for a in enumerator.enumerate_candidates(pres, n):
                    canonical = enumerator.canonical_form(a)
                    assert enumerator.canonical_form(canonical) == canonical
                    assert canonical <= a
                for cls in enumerator.enumerate_classes(pres, n):
                    forms = {enumerator.canonical_form(b) for b in enumerator.iter_conjugates(cls.rep.assignment)}
                    assert forms == {cls.rep.assignment}

    def test_orbit_size_times_centralizer(self, t10_full):
        for cls in enumerator.enumerate_classes(t10_full, 4):
            assert cls.labeled_orbit_size * enumerator.centralizer_size(cls.rep.assignment) == math.factorial(4)


class TestWorkedExample:
    def test_class_counts(self, t10_full, t10_kleinian):
        assert [len(enumerator.enumerate_classes(t10_full, n)) for n in (1, 2, 3, 4)] == [1, 3, 1, 2]
        assert [len(enumerator.enumerate_classes(t10_kleinian, n)) for n in (1, 2, 3, 4)] == [1, 1, 1, 1]

    def test_index_2(self, t10_full):
        classes = enumerator.enumerate_classes(t10_full, 2)
        assert [str(cls.rep.assignment) for cls in classes] == [
            "P:(1) Q:(1) R:(1) S:(12)",
            "P:(12) Q:(12) R:(12) S:(1)",
            "P:(12) Q:(12) R:(12) S:(12)",
        ]
        assert all(cls.image_type == "S2" for cls in classes)
        assert all(cls.labeled_orbit_size == 1 and cls.subgroup_count == 1 for cls in classes)

    def test_index_3(self, t10_full):
        (cls,) = enumerator.enumerate_classes(t10_full, 3)
        assert cls.image_type == "S3"
        assert cls.labeled_orbit_size == 6
        assert cls.subgroup_count == 3
        assert enumerator.count_distinct_subgroups(t10_full, 3) == 3

    def test_index_4_image_types(self, t10_full):
        classes = enumerator.enumerate_classes(t10_full, 4)
        assert enumerator.classes_by_image_type(classes) == {"V": 1, "S4": 1}

    def test_kleinian_reps(self, t10_kleinian):
        (index_2,) = enumerator.enumerate_classes(t10_kleinian, 2)
        assert index_2.rep.assignment == make_assignment(t10_kleinian, 2, c="(12)")

        (index_3,) = enumerator.enumerate_classes(t10_kleinian, 3)
        assert index_3.image_type == "S3"
        listed = make_assignment(t10_kleinian, 3, a="(123)", b="(132)", c="(23)")
        assert enumerator.canonical_form(listed) == index_3.rep.assignment

        (index_4,) = enumerator.enumerate_classes(t10_kleinian, 4)
        assert index_4.image_type == "S4"
        valid = make_assignment(t10_kleinian, 4, a="(123)", b="(124)", c="(24)")
        assert enumerator.canonical_form(valid) == index_4.rep.assignment

    def test_pair_images(self, t10_kleinian):
        (cls,) = enumerator.enumerate_classes(t10_kleinian, 3)
        images = enumerator.pair_images(cls.rep)
        assert set(images) == set(presentations.ANGLE_LABELS)
        # PR, PS and QS are involutions
        assert all(perms.order(images[label]) in (1, 2) for label in ("PR", "PS", "QS"))
        assert perms.order(images["RS"]) in (1, 2, 3, 6)


class TestPublishedCounts:
    @pytest.mark.parametrize(
        ("entry_id", "full", "kleinian"),
        [("t1", 3, 1), ("t10", 3, 1), ("t19", 15, 7), ("t25", 15, 7), ("t31", 15, 7), ("t32", 1, 0)],
    )
    def test_index_2(self, entry_id, full, kleinian):
        sym = presentations.lookup(entry_id).symbol
        assert len(enumerator.enumerate_classes(presentations.full_presentation(sym), 2)) == full
        assert len(enumerator.enumerate_classes(presentations.kleinian_presentation(sym), 2)) == kleinian

    def test_t19_has_no_index_3(self, t19_full):
        assert enumerator.enumerate_classes(t19_full, 3) == []

    def test_t32(self):
        sym = presentations.lookup("t32").symbol
        full = presentations.full_presentation(sym)
        kleinian = presentations.kleinian_presentation(sym)
        assert len(enumerator.enumerate_classes(full, 3)) == 13
        assert len(enumerator.enumerate_classes(kleinian, 3)) == 13
        # the published 86 disagrees with exhaustive search
        assert len(enumerator.enumerate_classes(full, 4)) == 6


def test_trivial_symbol_index_1():
    pres = presentations.full_presentation(presentations.parse_symbol("2,2,2,2,2,2"))
    (cls,) = enumerator.enumerate_classes(pres, 1)
    assert cls.image_type == "1"
    assert cls.subgroup_count == 1


def test_larger_index_warns(t10_kleinian, caplog):
    enumerator.enumerate_classes(t10_kleinian, 5)
    assert "oracle cross-checks only run" in caplog.text


def test_conjugation_preserves_relators(t10_full, t10_kleinian):
    for pres in (t10_full, t10_kleinian):
        for a in enumerator.enumerate_candidates(pres, 3, enumerator.Stage.all):
            satisfied = enumerator.satisfies_relators(a, pres)
            for b in enumerator.iter_conjugates(a):
                assert enumerator.satisfies_relators(b, pres) == satisfied


@pytest.mark.parametrize("entry", presentations.catalog(), ids=lambda entry: entry.id)
def test_index_2_classes_are_labeled_reps(entry):
    for group in presentations.Group:
        pres = presentations.presentation_for(entry.symbol, group)
        classes = enumerator.enumerate_classes(pres, 2)
        assert len(classes) == len(enumerator.enumerate_candidates(pres, 2))
        assert all(cls.labeled_orbit_size == 1 for cls in classes)
