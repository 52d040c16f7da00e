'''
Exception hierarchy for linper.

Every error carries the process exit code the CLI uses when it escapes a
subcommand: 1 for domain and configuration problems, 2 for bad input.
'''


class LinperError(Exception):
    exit_code = 1


class InvalidInputError(LinperError):
    exit_code = 2


class ExpressionSyntaxError(InvalidInputError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownLineError(InvalidInputError):
    def __init__(self, line_id: str):
        super().__init__(f'Unknown cuspidal line "{line_id}"')
        self.line_id = line_id


class InvariantError(InvalidInputError):
    pass


class UniverseError(LinperError):
    exit_code = 1


class DomainError(LinperError):
    exit_code = 1


class SizeMismatchError(DomainError):
    pass
