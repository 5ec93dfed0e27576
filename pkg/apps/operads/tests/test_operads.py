"""
Tests for operad tables, their validation and the table loader.
"""

import json
import tempfile
from pathlib import Path
from unittest import mock

from django.test import SimpleTestCase

from apps.core.exceptions import ArityOverflow, ConfigError, OperadAxiomViolation, OperadFormatError
from apps.operads.loader import load_operad, parse_operad, resolve_operad
from apps.operads.operads import (
    IDENTITY,
    FiniteOperad,
    assoc,
    block_permutation,
    comm,
    compose_permutations,
    insert_permutation,
)
from apps.operads.serializers import OperadSummarySerializer, OperadTableSerializer


def comm_table():
    return {
        "name": "small-comm",
        "operations": {"2": ["m2"], "3": ["m3"]},
        "compositions": [["m2", 0, "m2", "m3"], ["m2", 1, "m2", "m3"]],
    }


class PermutationTests(SimpleTestCase):
    def test_composition_applies_right_factor_first(self):
        self.assertEqual(compose_permutations((1, 2, 0), (1, 0, 2)), (2, 1, 0))

    def test_block_permutation_moves_blocks(self):
        # swap two inputs where the first one is a block of size two
        self.assertEqual(block_permutation((1, 0), [2, 1]), (1, 2, 0))

    def test_insert_permutation(self):
        self.assertEqual(insert_permutation(4, 1, (1, 0)), (0, 2, 1, 3))


class BuiltinTests(SimpleTestCase):
    def test_comm_sizes(self):
        O = comm(4)
        self.assertEqual(O.size(), {2: 1, 3: 1, 4: 1})
        self.assertEqual(O.compose("m2", ["m2", "m2"]), "m4")
        O.validate()

    def test_assoc_sizes(self):
        self.assertEqual(assoc(4).size(), {2: 2, 3: 6, 4: 24})

    def test_assoc_substitutes_words(self):
        O = assoc(4)
        self.assertEqual(O.compose_at("10", 0, "01"), "201")
        self.assertEqual(O.compose_at("10", 1, "10"), "210")
        self.assertEqual(O.compose_at("021", 1, "10"), "0321")

    def test_assoc_action_relabels_inputs(self):
        O = assoc(3)
        self.assertEqual(O.act("012", (1, 0, 2)), "102")
        self.assertEqual(O.act("01", (1, 0)), "10")

    def test_assoc_is_valid(self):
        assoc(4).validate()

    def test_identity_is_a_unit(self):
        O = assoc(3)
        self.assertEqual(O.compose_at(IDENTITY, 0, "10"), "10")
        self.assertEqual(O.compose("10", [IDENTITY, IDENTITY]), "10")
        self.assertEqual(O.ops(1), (IDENTITY,))

    def test_arity_bound(self):
        O = comm(3)
        with self.assertRaises(ArityOverflow):
            O.ops(4)
        with self.assertRaises(ArityOverflow):
            O.compose_at("m3", 0, "m2")

    def test_builtins_are_validated_once_per_bound(self):
        comm.cache_clear()
        self.addCleanup(comm.cache_clear)
        with mock.patch.object(FiniteOperad, "validate") as validate:
            first = comm(3)
            second = comm(3)
        self.assertIs(first, second)
        validate.assert_called_once_with()

    def test_unknown_builtin(self):
        with self.assertRaises(ConfigError):
            resolve_operad("lie", 3)

    def test_summary(self):
        data = OperadSummarySerializer(assoc(3)).data
        self.assertEqual(data["sizes"], {"2": 2, "3": 6})


class LoaderTests(SimpleTestCase):
    def write(self, data):
        directory = tempfile.TemporaryDirectory()
        self.addCleanup(directory.cleanup)
        path = Path(directory.name) / "operad.json"
        path.write_text(json.dumps(data), encoding="utf-8")
        return path

    def test_loads_commutative_table(self):
        O = load_operad(self.write(comm_table()))
        self.assertEqual(O.name, "small-comm")
        self.assertEqual(O.max_arity, 3)
        self.assertEqual(O.act("m3", (2, 0, 1)), "m3")

    def test_file_prefix(self):
        O = resolve_operad(f"file:{self.write(comm_table())}", 4)
        self.assertEqual(O.size(), {2: 1, 3: 1})

    def test_actions_are_closed_from_generators(self):
        data = {
            "operations": {"2": ["x", "y"], "3": ["012", "021", "102", "120", "201", "210"]},
            "actions": [["x", [1, 0], "y"], ["y", [1, 0], "x"]]
            + [[w, [1, 0, 2], "".join(str([1, 0, 2][int(c)]) for c in w)] for w in ["012", "021", "102", "120", "201", "210"]]
            + [[w, [0, 2, 1], "".join(str([0, 2, 1][int(c)]) for c in w)] for w in ["012", "021", "102", "120", "201", "210"]],
            "compositions": [],
        }
        reference = assoc(3)
        rename = {"x": "01", "y": "10"}
        for (mu, i, nu), result in reference.compositions.items():
            back = {v: k for k, v in rename.items()}
            data["compositions"].append([back[mu], i, back[nu], result])
        O = parse_operad(data)
        O.validate()
        self.assertEqual(O.act("120", (2, 1, 0)), reference.act("120", (2, 1, 0)))

    def test_equivariance_violation(self):
        data = {
            "operations": {"2": ["x"], "3": ["p", "q"]},
            "compositions": [["x", 0, "x", "p"], ["x", 1, "x", "q"]],
        }
        with self.assertRaises(OperadAxiomViolation):
            load_operad(self.write(data))

    def test_incomplete_table(self):
        data = comm_table()
        data["compositions"] = data["compositions"][:1]
        with self.assertRaises(OperadFormatError):
            load_operad(self.write(data))

    def test_wrong_result_arity(self):
        data = comm_table()
        data["compositions"].append(["m2", 0, "m2", "m2"])
        with self.assertRaises(OperadFormatError):
            parse_operad(data)

    def test_missing_file(self):
        with self.assertRaises(OperadFormatError):
            load_operad("/nonexistent/operad.json")

    def test_invalid_json(self):
        directory = tempfile.TemporaryDirectory()
        self.addCleanup(directory.cleanup)
        path = Path(directory.name) / "broken.json"
        path.write_text("{", encoding="utf-8")
        with self.assertRaises(OperadFormatError):
            load_operad(path)

    def test_table_must_be_an_object(self):
        with self.assertRaises(OperadFormatError) as ctx:
            parse_operad(["m2"])
        self.assertIn("non_field_errors", ctx.exception.context)

    def test_arity_sections_are_integers(self):
        data = comm_table()
        data["operations"]["two"] = ["m"]
        with self.assertRaises(OperadFormatError) as ctx:
            parse_operad(data)
        self.assertIn("operations", ctx.exception.context)

    def test_action_permutation_must_match_arity(self):
        data = comm_table()
        data["actions"] = [["m2", [0, 2], "m2"]]
        with self.assertRaises(OperadFormatError) as ctx:
            parse_operad(data)
        self.assertIn("actions", ctx.exception.context)

    def test_composition_entries_have_four_parts(self):
        data = comm_table()
        data["compositions"].append(["m2", 0, "m2"])
        with self.assertRaises(OperadFormatError) as ctx:
            parse_operad(data)
        self.assertIn("compositions", ctx.exception.context)


class OperadTableSerializerTests(SimpleTestCase):
    def test_validated_table_is_ready_for_construction(self):
        serializer = OperadTableSerializer(data=comm_table())
        self.assertTrue(serializer.is_valid(), serializer.errors)
        table = serializer.validated_data
        self.assertEqual(table["operations"], {2: ("m2",), 3: ("m3",)})
        self.assertEqual(table["compositions"], {("m2", 0, "m2"): "m3", ("m2", 1, "m2"): "m3"})
        self.assertEqual(table["actions"], [])

    def test_unknown_operation_in_composition(self):
        data = comm_table()
        data["compositions"].append(["m2", 0, "m9", "m3"])
        serializer = OperadTableSerializer(data=data)
        self.assertFalse(serializer.is_valid())
        self.assertIn("compositions", serializer.errors)
