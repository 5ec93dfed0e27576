"""
Tests for the campaign management commands and their exit codes.
"""

import os
import tempfile
from unittest import mock

from django.test import SimpleTestCase

from apps.core.exceptions import EXIT_FAILED, EXIT_OK, EXIT_USAGE

from .helpers import run_command, run_json, swapped_vertex_check


class EnumerationCommandTests(SimpleTestCase):
    def test_partitions(self):
        code, report, _ = run_json("partitions", "--n", "3")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report["leaves"], ["a", "b", "c"])
        self.assertEqual(len(report["partitions"]), 3)
        self.assertEqual(report["poset"]["size"], 3)

    def test_partitions_dot(self):
        code, out, _ = run_command("partitions", "--n", "3", "--format", "dot")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(out.startswith("digraph partitions {"))

    def test_trees_counts(self):
        _, report, _ = run_json("trees", "--n", "4")
        self.assertEqual(len(report["trees"]), 26)
        _, report, _ = run_json("trees", "--n", "4", "--plus")
        self.assertEqual(len(report["trees"]), 25)
        self.assertTrue(report["plus"])

    def test_trees_text_with_labels(self):
        code, out, _ = run_command("trees", "--labels", "x,y,z", "--format", "text")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("{xyz, xy}", out)
        self.assertIn("4 trees", out)

    def test_tree_bound(self):
        code, _, error = run_json("trees", "--n", "8")
        self.assertEqual(code, EXIT_USAGE)
        self.assertEqual(error["code"], "config_error")
        self.assertIn("MAX_TREE_LEAVES", error["message"])


class HomologyCommandTests(SimpleTestCase):
    def test_partition_complex(self):
        code, report, _ = run_json("homology", "np", "--n", "4")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report["homology"]["summary"], "H~_1 = Z^6")
        self.assertEqual(report["expected"], {"1": 6})

    def test_partition_complex_text(self):
        code, out, _ = run_command("homology", "np", "--n", "5", "--format", "text")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("rank", out)
        self.assertIn("H~_2 = Z^24", out)

    def test_tplus_matches_partition_complex(self):
        _, report, _ = run_json("homology", "tplus", "--n", "4")
        self.assertEqual(report["homology"]["summary"], "H~_1 = Z^6")

    def test_full_tree_poset_is_contractible(self):
        code, report, _ = run_json("homology", "t", "--n", "4")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report["homology"]["summary"], "acyclic")

    def test_two_leaves_give_the_empty_complex(self):
        code, report, _ = run_json("homology", "np", "--n", "2")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(report["homology"]["empty"])

    def test_unknown_model(self):
        code, _, error = run_json("homology", "xyz", "--n", "3")
        self.assertEqual(code, EXIT_USAGE)
        self.assertEqual(error["errors"], {"model": "xyz"})


class VerifyTheoremCommandTests(SimpleTestCase):
    def test_four_leaves(self):
        code, report, _ = run_json("verify_theorem", "--n", "4")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(report["passed"])
        self.assertEqual(report["checked"], 25)
        self.assertEqual(report["failures"], [])

    def test_two_leaves_are_vacuous(self):
        code, report, _ = run_json("verify_theorem", "--n", "2")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(report["vacuous"])
        self.assertEqual(report["checked"], 0)

    def test_single_tree(self):
        code, report, _ = run_json("verify_theorem", "--n", "3", "--tree", "ab")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual([item["key"] for item in report["trees"]], ["{abc, ab}"])

    def test_initiality(self):
        code, report, _ = run_json("verify_theorem", "--n", "3", "--initiality")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(report["initiality"]["passed"])

    def test_reports_do_not_depend_on_jobs(self):
        _, serial, _ = run_command("verify_theorem", "--n", "4", "--jobs", "1")
        _, parallel, _ = run_command("verify_theorem", "--n", "4", "--jobs", "2")
        self.assertEqual(serial, parallel)

    def test_repeated_runs_are_identical(self):
        _, first, _ = run_command("verify_theorem", "--n", "4", "--max-cone-subset", "2")
        _, second, _ = run_command("verify_theorem", "--n", "4", "--max-cone-subset", "2")
        self.assertEqual(first, second)

    def test_corrupted_face_map_fails_with_counterexample(self):
        with mock.patch("apps.comparison.layerings.check_simplicial_iso", side_effect=swapped_vertex_check):
            code, report, _ = run_json("verify_theorem", "--n", "4")
        self.assertEqual(code, EXIT_FAILED)
        self.assertFalse(report["passed"])
        self.assertTrue(report["failures"])
        failing = next(item for item in report["trees"] if item["key"] == report["failures"][0])
        counterexamples = [cone["counterexample"] for cone in failing["cones"] if not cone["ok"]]
        self.assertEqual(counterexamples[0]["reason"], "face mismatch")

    def test_usage_errors(self):
        for args in (
            ("--n", "7"),
            ("--n", "3", "--labels", "a,b,c"),
            ("--labels", "a"),
            ("--n", "3", "--ring", "r"),
            ("--n", "3", "--format", "dot"),
            ("--n", "3", "--jobs", "0"),
            ("--n", "3", "--max-cone-subset", "-1"),
            ("--n", "3", "--tree", "ab|bc"),
        ):
            with self.subTest(args=args):
                code, _, error = run_json("verify_theorem", *args)
                self.assertEqual(code, EXIT_USAGE)
                self.assertEqual(error["code"], "config_error")

    def test_out_file(self):
        _, expected, _ = run_command("verify_theorem", "--n", "3")
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "report.json")
            code, out, _ = run_command("verify_theorem", "--n", "3", "--out", path)
            with open(path, encoding="utf-8") as handle:
                written = handle.read()
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, "")
        self.assertEqual(written, expected)


class InitialityCommandTests(SimpleTestCase):
    def test_zeta(self):
        code, report, _ = run_json("verify_zeta", "--n", "3")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(report["passed"])
        self.assertEqual(report["checked"], 3)

    def test_labelled_comm(self):
        code, report, _ = run_json("verify_labelled", "comm", "--n", "3")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report["operad"], "comm")
        self.assertEqual(report["complex_homology"]["summary"], "H~_0 = Z^2")

    def test_labelled_assoc(self):
        code, report, _ = run_json("verify_labelled", "assoc", "--n", "3")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report["f_vector"], [12])

    def test_labelled_errors(self):
        code, _, error = run_json("verify_labelled", "lie", "--n", "3")
        self.assertEqual(code, EXIT_USAGE)
        self.assertEqual(error["code"], "config_error")
        code, _, error = run_json("verify_labelled", "comm", "--n", "5")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("MAX_LABELLED_LEAVES", error["message"])


class BarCompareCommandTests(SimpleTestCase):
    def test_comm_three_leaves(self):
        code, report, _ = run_json("bar_compare", "comm", "--n", "3")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual([row["ring"] for row in report["rings"]], ["z", "q"])
        for row in report["rings"]:
            self.assertEqual(row["bar"]["summary"], "H_2 = Z^2")
            self.assertEqual(row["tree"]["summary"], "H_2 = Z^2")

    def test_text_table(self):
        code, out, _ = run_command("bar_compare", "assoc", "--n", "3", "--format", "text")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("tree", out)
        self.assertIn("assoc on 3 leaves: pass", out)


class ExportCommandTests(SimpleTestCase):
    SIX = ("--labels", "a,b,c,d,e,f")

    def test_tree_dot(self):
        code, out, _ = run_command("export", "tree", "--n", "5", "--tree", "ab|cde", "--format", "dot")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("digraph tree {", out)

    def test_layerings_of_worked_tree(self):
        code, report, _ = run_json("export", "layerings", *self.SIX, "--tree", "abcde|ab|cde")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(report["layerings"]), 2)
        self.assertTrue(all(item["elementary"] for item in report["layerings"]))

    def test_layerings_dot(self):
        _, out, _ = run_command("export", "layerings", *self.SIX, "--tree", "abcde|ab|cde", "--format", "dot")
        self.assertIn("digraph layering0 {", out)
        self.assertIn("digraph layering1 {", out)

    def test_chain(self):
        code, report, _ = run_json("export", "chain", *self.SIX, "--chain", "(abcde)(f);(ab)(cde)(f)")
        self.assertEqual(code, EXIT_OK)
        self.assertFalse(report["elementary"])
        self.assertEqual(
            sorted(map(tuple, report["tree"]["family"])),
            sorted([("a", "b", "c", "d", "e", "f"), ("a", "b", "c", "d", "e"), ("a", "b"), ("c", "d", "e")]),
        )

    def test_chain_must_refine(self):
        code, _, error = run_json("export", "chain", *self.SIX, "--chain", "(ab)(cde)(f);(abcde)(f)")
        self.assertEqual(code, EXIT_USAGE)
        self.assertEqual(error["code"], "config_error")

    def test_poset_dot(self):
        code, out, _ = run_command("export", "poset", "--n", "3", "--poset", "t", "--format", "dot")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("digraph t {", out)

    def test_bad_requests(self):
        self.assertEqual(run_command("export", "forest", "--n", "3")[0], EXIT_USAGE)
        self.assertEqual(run_command("export", "tree", "--n", "3")[0], EXIT_USAGE)
        self.assertEqual(run_command("export", "tree", "--n", "3", "--tree", "ab", "--format", "text")[0], EXIT_USAGE)
