"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class BoxikitError(Exception):
    exit_code = 1


class InputError(BoxikitError, ValueError):
    """Malformed or out-of-contract input (CLI exit code 2)."""

    exit_code = 2


class CapacityError(BoxikitError):
    """A search would exceed a configured size cap (CLI exit code 3)."""

    exit_code = 3

    def __init__(self, message, **state):
        super().__init__(message)
        self.state = state


class VerificationError(BoxikitError):
    """A constructed certificate failed its exact re-check (CLI exit code 1)."""

    exit_code = 1

    def __init__(self, message, **state):
        super().__init__(message)
        self.state = state
