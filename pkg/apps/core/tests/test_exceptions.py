"""Tests for command-level error handling."""

import json

from django.test import SimpleTestCase
from django.utils.functional import Promise

from apps.core.exceptions import (
    EXIT_FAILED,
    EXIT_USAGE,
    GENERIC_MESSAGE,
    NotLaminar,
    WitnessFailed,
    handle_command_error,
)


class HandleCommandErrorTests(SimpleTestCase):
    def test_domain_error_keeps_code_and_context(self):
        exc = NotLaminar(members=[{"b", "a"}, ("c", "d")])
        payload, code = handle_command_error(exc, {"command": "trees"})
        self.assertEqual(code, EXIT_USAGE)
        self.assertEqual(payload["code"], "not_laminar")
        self.assertEqual(payload["message"], "Family contains two overlapping members.")
        self.assertEqual(payload["errors"], {"members": [["a", "b"], ["c", "d"]]})

    def test_verification_failure_exit_code(self):
        _, code = handle_command_error(WitnessFailed(tree="{abc, ab}"))
        self.assertEqual(code, EXIT_FAILED)

    def test_custom_message(self):
        payload, _ = handle_command_error(NotLaminar("ab and bc overlap."))
        self.assertEqual(payload, {"code": "not_laminar", "message": "ab and bc overlap."})

    def test_unexpected_error_is_generic(self):
        payload, code = handle_command_error(KeyError("secret internals"))
        self.assertEqual(code, EXIT_FAILED)
        self.assertEqual(payload["code"], "internal_error")
        self.assertNotIn("secret", payload["message"])

    def test_default_messages_are_translatable(self):
        self.assertIsInstance(NotLaminar.default_message, Promise)
        self.assertIsInstance(GENERIC_MESSAGE, Promise)
        payload, _ = handle_command_error(NotLaminar())
        self.assertIs(type(payload["message"]), str)
        self.assertEqual(json.loads(json.dumps(payload))["message"], "Family contains two overlapping members.")
