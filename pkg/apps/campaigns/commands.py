"""
Shared plumbing for the campaign management commands: common options, run
configuration, rendering and the exit-code contract (0 pass, 1 failed
verification, 2 usage or configuration error).
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import pandas as pd
from django.core.management.base import BaseCommand, CommandError

from apps.core.exceptions import EXIT_FAILED, ConfigError, handle_command_error
from apps.core.runconfig import RunConfig

logger = logging.getLogger("partcx.campaigns")


@dataclass
class Outcome:
    """What a command produced: the JSON report plus optional text and DOT renderings."""
    passed: bool
    report: dict[str, Any]
    rows: list[dict[str, Any]] = field(default_factory=list)
    summary: str = ""
    dot: str | None = None


def render_json(report: dict[str, Any]) -> str:
    return json.dumps(report, sort_keys=True, indent=2)


def render_table(rows: list[dict[str, Any]], summary: str = "") -> str:
    table = pd.DataFrame(rows).to_string(index=False) if rows else "(no rows)"
    return f"{table}\n{summary}" if summary else table


class CampaignCommand(BaseCommand):
    """
    Base class for the partcx commands.

    Subclasses set ``bound`` (the ``PARTCX`` key limiting the leaf set),
    ``formats`` and implement ``run(config, options)``.
    """

    bound = "MAX_LEAVES"
    formats = ("json", "text")
    resumable = False

    def add_arguments(self, parser):
        self.add_command_arguments(parser)
        parser.add_argument('--n', type=int, help='Number of leaves, labelled a, b, c, ...')
        parser.add_argument('--labels', type=str, help='Comma separated leaf labels, e.g. a,b,c')
        parser.add_argument('--ring', type=str, help='Coefficient ring: z (integers) or q (rationals)')
        parser.add_argument('--jobs', type=int, help='Worker processes')
        parser.add_argument('--format', type=str, default='json', help='Output format: json, text or dot')
        parser.add_argument('--max-cone-subset', type=int, help='Largest leaf-vertex subset to cone (0 = all)')
        parser.add_argument('--out', type=str, help='Write the report to this file instead of stdout')
        if self.resumable:
            parser.add_argument('--record', action='store_true', help='Persist every finished item')
            parser.add_argument('--resume', type=int, help='Resume the recorded run with this id')

    def add_command_arguments(self, parser):
        pass

    def run(self, config: RunConfig, options: dict[str, Any]) -> Outcome:
        raise NotImplementedError

    @property
    def command_name(self) -> str:
        return self.__module__.rsplit(".", 1)[-1]

    def handle(self, *args, **options):
        try:
            config = RunConfig.from_options(options, bound=self.bound)
            if config.output_format not in self.formats:
                raise ConfigError(
                    f"--format {config.output_format} is not available here; use {' or '.join(self.formats)}.",
                    format=config.output_format,
                )
            outcome = self.run(config, options)
        except Exception as exc:
            payload, code = handle_command_error(exc, {"command": self.command_name})
            self.stderr.write(render_json(payload))
            raise CommandError(payload["message"], returncode=code) from exc

        self.emit(config, self.render(config, outcome))
        if not outcome.passed:
            logger.warning("Verification failed", extra={"command": self.command_name})
            raise CommandError("Verification failed; see the report for counterexamples.", returncode=EXIT_FAILED)

    def render(self, config: RunConfig, outcome: Outcome) -> str:
        if config.output_format == "text":
            return render_table(outcome.rows, outcome.summary)
        if config.output_format == "dot":
            return outcome.dot or ""
        return render_json(outcome.report)

    def emit(self, config: RunConfig, text: str) -> None:
        if config.out:
            Path(config.out).write_text(text + "\n", encoding="utf-8")
            logger.info("Wrote report", extra={"command": self.command_name, "path": config.out})
        else:
            self.stdout.write(text)
