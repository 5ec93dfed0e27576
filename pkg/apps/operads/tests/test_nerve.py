"""
Tests for operad nerves and the labelled partition complex.
"""

from django.test import SimpleTestCase

from apps.core.exceptions import ArityOverflow
from apps.operads.nerve import labelled_complex, labellings, nerve, restrict, verify_labelled_comparison
from apps.operads.operads import assoc, comm
from apps.operads.serializers import LabelledReportSerializer
from apps.partitions.partitions import LeafSet, partition_poset
from apps.posets.posets import order_complex
from apps.trees.trees import corolla, enumerate_trees, validate

THREE = LeafSet.of_size(3)
FOUR = LeafSet.of_size(4)


class NerveTests(SimpleTestCase):
    def test_comm_sections_are_singletons(self):
        F = nerve(comm(4), FOUR)
        self.assertEqual(len(F.poset), 26)
        self.assertTrue(all(len(s) == 1 for s in F.sections))

    def test_assoc_corolla(self):
        self.assertEqual(len(labellings(assoc(3), corolla(THREE))), 6)

    def test_assoc_cherry_restricts_to_adjacent_orders(self):
        O = assoc(3)
        T = validate(["abc", "ab"], THREE)
        sections = labellings(O, T)
        self.assertEqual(len(sections), 4)
        restricted = {restrict(O, T, labelling, corolla(THREE)) for labelling in sections}
        self.assertEqual(restricted, {("012",), ("102",), ("201",), ("210",)})

    def test_contraction_order_does_not_matter(self):
        O = assoc(4)
        for T in enumerate_trees(FOUR).trees:
            missing = [v for v in T.vertices() if v != T.root]
            for labelling in labellings(O, T):
                forward = restrict(O, T, labelling, corolla(FOUR), order=missing)
                backward = restrict(O, T, labelling, corolla(FOUR), order=list(reversed(missing)))
                self.assertEqual(forward, backward)

    def test_restrictions_compose(self):
        nerve(assoc(4), FOUR).validate()

    def test_arity_overflow(self):
        with self.assertRaises(ArityOverflow):
            nerve(comm(3), FOUR)


class LabelledComplexTests(SimpleTestCase):
    def test_comm_reproduces_partition_complex(self):
        for leaves in (THREE, FOUR):
            X, _, _ = labelled_complex(comm(4), leaves)
            self.assertEqual(X.f_vector, order_complex(partition_poset(leaves)).f_vector)

    def test_comm_target_has_every_tree(self):
        _, E, _ = labelled_complex(comm(4), FOUR)
        self.assertEqual(len(E), 25)

    def test_assoc_three_leaves(self):
        X, E, _ = labelled_complex(assoc(3), THREE)
        self.assertEqual(X.f_vector, (12,))
        self.assertEqual(len(E), 12)

    def test_comm_comparison(self):
        report = verify_labelled_comparison(comm(4), FOUR)
        self.assertTrue(report.passed)
        self.assertEqual(report.complex_homology.nonzero(), {1: (6, ())})

    def test_assoc_comparison(self):
        report = verify_labelled_comparison(assoc(3), THREE)
        self.assertTrue(report.passed)
        self.assertEqual(report.complex_homology.nonzero(), {0: (11, ())})

    def test_assoc_comparison_four_leaves(self):
        report = verify_labelled_comparison(assoc(4), FOUR)
        self.assertTrue(report.passed)
        self.assertTrue(report.initiality.consequence["match"])

    def test_report_serializes(self):
        data = LabelledReportSerializer(verify_labelled_comparison(comm(3), THREE)).data
        self.assertTrue(data["passed"])
        self.assertEqual(data["f_vector"], [3])
        self.assertEqual(data["complex_homology"]["summary"], "H~_0 = Z^2")
