"""
Tests for run configuration.
"""

from django.conf import settings
from django.test import SimpleTestCase, override_settings

from apps.core.exceptions import EXIT_USAGE, ConfigError
from apps.core.runconfig import RunConfig


class RunConfigTests(SimpleTestCase):
    def test_defaults_from_settings(self):
        config = RunConfig.from_options({"n": 4})
        self.assertEqual(config.leaves.labels, ("a", "b", "c", "d"))
        self.assertEqual(config.ring, "z")
        self.assertEqual(config.jobs, 1)
        self.assertEqual(config.output_format, "json")
        self.assertEqual(config.max_cone_subset, 0)
        self.assertFalse(config.record)

    def test_labels(self):
        config = RunConfig.from_options({"labels": "x1,x2,x3", "ring": "q", "jobs": 3})
        self.assertEqual(config.leaves.labels, ("x1", "x2", "x3"))
        self.assertEqual(config.ring, "q")
        self.assertEqual(config.jobs, 3)

    def test_operad_arity_covers_the_leaf_set(self):
        self.assertEqual(RunConfig.from_options({"n": 3}).operad_max_arity, 4)
        self.assertEqual(RunConfig.from_options({"n": 5}).operad_max_arity, 5)

    def test_parameters_leave_out_output_options(self):
        a = RunConfig.from_options({"n": 3, "jobs": 2, "format": "text", "out": "x.txt"})
        b = RunConfig.from_options({"n": 3})
        self.assertEqual(a.parameters, b.parameters)

    def test_bounds(self):
        with self.assertRaises(ConfigError) as caught:
            RunConfig.from_options({"n": 7}, bound="MAX_THEOREM_LEAVES")
        self.assertEqual(caught.exception.exit_code, EXIT_USAGE)
        self.assertEqual(caught.exception.context, {"leaves": 7, "bound": "MAX_THEOREM_LEAVES"})
        RunConfig.from_options({"n": 7}, bound="MAX_TREE_LEAVES")

    @override_settings(PARTCX={**settings.PARTCX, "MAX_THEOREM_LEAVES": 3})
    def test_bound_follows_settings(self):
        with self.assertRaises(ConfigError):
            RunConfig.from_options({"n": 4}, bound="MAX_THEOREM_LEAVES")

    @override_settings(PARTCX={**settings.PARTCX, "CAMPAIGN_BACKEND": "spark"})
    def test_unknown_backend(self):
        with self.assertRaises(ConfigError):
            RunConfig.from_options({"n": 3})

    def test_invalid_options(self):
        for options in (
            {},
            {"n": 3, "labels": "a,b,c"},
            {"n": 0},
            {"n": 1},
            {"labels": "a,a"},
            {"n": 3, "ring": "r"},
            {"n": 3, "jobs": -1},
            {"n": 3, "format": "xml"},
            {"n": 3, "max_cone_subset": -2},
        ):
            with self.subTest(options=options):
                with self.assertRaises(ConfigError):
                    RunConfig.from_options(options)
