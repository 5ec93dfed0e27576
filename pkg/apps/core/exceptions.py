"""
Exception hierarchy and command-level error handling for partcx.
"""

from __future__ import annotations

import logging
from typing import Any

from django.utils.translation import gettext_lazy as _

logger = logging.getLogger("partcx.exceptions")

GENERIC_MESSAGE = _("An unexpected error occurred while running the command.")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class PartcxError(Exception):
    """
    Base class for all domain errors.

    Mirrors the shape of a REST framework API exception: a stable machine
    readable ``default_code``, a human ``default_message`` and optional
    structured ``context`` that ends up in the ``errors`` part of a payload.
    """

    default_code = "error"
    default_message = _("Invalid input.")
    exit_code = EXIT_USAGE

    def __init__(self, message: str | None = None, *, code: str | None = None, **context: Any):
        self.message = message or self.default_message
        self.code = code or self.default_code
        self.context = context
        super().__init__(self.message)


# simplicial -----------------------------------------------------------------
class IdentityViolation(PartcxError):
    default_code = "identity_violation"
    default_message = _("Face data violates the simplicial identities.")


class DanglingFace(PartcxError):
    default_code = "dangling_face"
    default_message = _("A face refers to a simplex that does not exist.")


class NotAComplex(PartcxError):
    default_code = "not_a_complex"
    default_message = _("Boundary maps do not compose to zero.")


class NotChainMap(PartcxError):
    default_code = "not_chain_map"
    default_message = _("Map does not commute with the differentials.")


# posets ---------------------------------------------------------------------
class InvalidPoset(PartcxError):
    default_code = "invalid_poset"
    default_message = _("Relation is not a partial order.")


class ElementNotFound(PartcxError):
    default_code = "element_not_found"
    default_message = _("Element is not in the poset.")


class NotMonotone(PartcxError):
    default_code = "not_monotone"
    default_message = _("Map does not preserve the order.")


class InvalidPresheaf(PartcxError):
    default_code = "invalid_presheaf"
    default_message = _("Restriction maps are not functorial.")


# partitions -----------------------------------------------------------------
class LeafSetMismatch(PartcxError):
    default_code = "leaf_set_mismatch"
    default_message = _("Objects live over different leaf sets.")


class TooSmall(PartcxError):
    default_code = "too_small"
    default_message = _("Leaf set is too small.")


class TooLarge(PartcxError):
    default_code = "too_large"
    default_message = _("Leaf set exceeds the configured bound.")


# trees ----------------------------------------------------------------------
class NotLaminar(PartcxError):
    default_code = "not_laminar"
    default_message = _("Family contains two overlapping members.")


class MissingRoot(PartcxError):
    default_code = "missing_root"
    default_message = _("Family does not contain the full leaf set.")


class SmallBlock(PartcxError):
    default_code = "small_block"
    default_message = _("Every member of a tree family needs at least two leaves.")


class NotLeafVertex(PartcxError):
    default_code = "not_leaf_vertex"
    default_message = _("Vertex is not a leaf vertex of the tree.")


class LeafNotFound(PartcxError):
    default_code = "leaf_not_found"
    default_message = _("Leaf is not in the leaf set.")


class LabelClash(PartcxError):
    default_code = "label_clash"
    default_message = _("Leaf labels collide.")


# comparison -----------------------------------------------------------------
class NotInTPlus(PartcxError):
    default_code = "not_in_tplus"
    default_message = _("The corolla has no layerings.")


class WitnessFailed(PartcxError):
    default_code = "witness_failed"
    default_message = _("Cone witness is not a simplicial isomorphism.")
    exit_code = EXIT_FAILED


# operads --------------------------------------------------------------------
class ArityOverflow(PartcxError):
    default_code = "arity_overflow"
    default_message = _("Tree needs operations above the operad's maximal arity.")


class OperadAxiomViolation(PartcxError):
    default_code = "operad_axiom_violation"
    default_message = _("Composition table violates an operad axiom.")


class OperadFormatError(PartcxError):
    default_code = "operad_format_error"
    default_message = _("Operad table file is malformed.")


# cli ------------------------------------------------------------------------
class ConfigError(PartcxError):
    default_code = "config_error"
    default_message = _("Invalid run configuration.")


def handle_command_error(exc: Exception, context: dict[str, Any] | None = None) -> tuple[dict[str, Any], int]:
    """
    Convert an exception raised by a command into a payload and an exit code.

    * Domain errors keep their code and message and expose their context.
    * Anything else is logged with its traceback and reported generically.
    """

    metadata = dict(context or {})

    if isinstance(exc, PartcxError):
        logger.warning("Command failed", extra={"command": metadata, "code": exc.code})
        payload: dict[str, Any] = {"code": exc.code, "message": str(exc.message)}
        errors = _normalize_errors(exc.context)
        if errors:
            payload["errors"] = errors
        return payload, exc.exit_code

    logger.exception("Unhandled exception", extra={"command": metadata})
    return {"code": "internal_error", "message": str(GENERIC_MESSAGE)}, EXIT_FAILED


def _normalize_errors(data: Any) -> Any:
    """
    Recursively convert context values into JSON primitives.
    """

    if data is None:
        return None
    if isinstance(data, (list, tuple, set, frozenset)):
        items = [_normalize_errors(item) for item in data]
        return sorted(items, key=str) if isinstance(data, (set, frozenset)) else items
    if isinstance(data, dict):
        return {str(key): _normalize_errors(value) for key, value in data.items()}
    if isinstance(data, (bool, int, float, str)):
        return data
    return str(data)
