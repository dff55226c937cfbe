import click

EXIT_USAGE = 1
EXIT_SCHEMA = 2
EXIT_INFEASIBLE = 3


class CommandError(click.ClickException):
    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code
