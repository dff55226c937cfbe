"""
``surge`` command group.

Exit codes: 0 success, 1 usage error, 2 config or schema error,
3 infeasible result or capacity refusal.
"""

import logging

import click
from pydantic import ValidationError

from app.cli.commands import analysis, planning, service, simulation
from app.cli.errors import EXIT_SCHEMA, EXIT_USAGE, CommandError
from app.config.settings import settings
from app.core.exceptions import AppException
from app.core.utils.logging import setup_logging

logger = logging.getLogger(__name__)


class SurgeGroup(click.Group):
    """Maps application exceptions to the documented exit codes."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = EXIT_USAGE
            raise
        except AppException as e:
            logger.debug(f"{e.__class__.__name__}: {e.details}")
            raise CommandError(e.message, e.exit_code) from e
        except ValidationError as e:
            err = e.errors()[0] if e.errors() else {}
            field = ".".join(str(p) for p in err.get("loc", ())) or e.title
            raise CommandError(f"invalid {e.title}: {field}: {err.get('msg', str(e))}", EXIT_SCHEMA) from e


@click.group(cls=SurgeGroup)
@click.option("-v", "--verbose", is_flag=True, help="Debug logging.")
@click.version_option(settings.TOOL_VERSION, prog_name="surge")
def cli(verbose: bool) -> None:
    """Plan and evaluate salvage-memory traffic splits."""
    setup_logging(verbose)


for module in (analysis, planning, simulation, service):
    for command in module.COMMANDS:
        cli.add_command(command)


def main() -> None:
    cli(prog_name="surge")


if __name__ == "__main__":
    main()
