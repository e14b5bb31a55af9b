"""Exception types shared across the package."""

from __future__ import annotations


class KatebError(Exception):
    """Base class for all package-specific errors."""

    code = "error"


class ValidationError(KatebError):
    """A caller-supplied value violates a documented precondition."""

    code = "validation_error"


class NotFoundError(KatebError):
    """Lookup of a user, prompt, essay, or revision failed."""

    code = "not_found"


class UnscorableInputError(KatebError):
    """Text contains no word tokens, so no features can be extracted."""

    code = "unscorable_input"


class BackendUnavailableError(KatebError):
    """A remote detection or scoring endpoint could not be reached."""

    code = "backend_unavailable"


class MalformedScriptError(KatebError):
    """An edit script does not fit the text it is being applied to."""

    code = "malformed_script"


class ParseError(KatebError):
    """A serialized corpus file is malformed.

    Carries the 1-based line number of the offending line when known.
    """

    code = "parse_error"

    def __init__(self, message: str, line_no: int | None = None):
        super().__init__(message if line_no is None else f"line {line_no}: {message}")
        self.line_no = line_no


class ConfigError(KatebError):
    """A scoring or service configuration file is invalid."""

    code = "config_error"


class AlreadySeededError(KatebError):
    """Default prompts were requested on a store that already has prompts."""

    code = "already_seeded"
