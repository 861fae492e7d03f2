"""Exception types shared across the package.

Every error carries a stable machine-readable code so HTTP surfaces and the
message log can report failures uniformly.
"""

from __future__ import annotations


class IntentMeshError(Exception):
    code = "INTERNAL"

    def __init__(self, message: str = "", **details):
        super().__init__(message or self.code)
        self.details = details


class EmptyCorpusError(IntentMeshError):
    code = "EMPTY_CORPUS"


class ConfigInvalidError(IntentMeshError):
    code = "CONFIG_INVALID"


class EmptyInputError(IntentMeshError):
    code = "EMPTY_INPUT"


class CorpusInvalidError(IntentMeshError):
    code = "CORPUS_INVALID"

    def __init__(self, line_no: int, message: str = ""):
        super().__init__(message or f"malformed corpus line {line_no}", line_no=line_no)
        self.line_no = line_no


class MissingPlaceholderError(IntentMeshError):
    code = "MISSING_PLACEHOLDER"

    def __init__(self, name: str):
        super().__init__(f"prompt context missing placeholder {name!r}", name=name)
        self.name = name


class BackendUnreachableError(IntentMeshError):
    code = "BACKEND_UNREACHABLE"


class BackendTimeoutError(IntentMeshError):
    code = "BACKEND_TIMEOUT"


class BackendHttpError(IntentMeshError):
    code = "BACKEND_HTTP_ERROR"

    def __init__(self, status: int, message: str = ""):
        super().__init__(message or f"backend returned HTTP {status}", status=status)
        self.status = status


class NoJsonFoundError(IntentMeshError):
    code = "NO_JSON_FOUND"


class MissingFieldError(IntentMeshError):
    code = "MISSING_FIELD"

    def __init__(self, name: str):
        super().__init__(f"structured output missing field {name!r}", name=name)
        self.name = name


class UnknownAgentError(IntentMeshError):
    code = "UNKNOWN_AGENT"


class TransportFailureError(IntentMeshError):
    code = "TRANSPORT_FAILURE"


class RemoteError(IntentMeshError):
    """Peer answered with an ERROR envelope; its payload is carried through."""

    code = "REMOTE_ERROR"

    def __init__(self, remote_code: str, payload: dict, message: str = ""):
        super().__init__(message or f"peer returned error {remote_code}", remote_code=remote_code)
        self.remote_code = remote_code
        self.payload = payload


class PortInUseError(IntentMeshError):
    code = "PORT_IN_USE"


class IntentEmptyError(IntentMeshError):
    code = "INTENT_EMPTY"


class BadSizeError(IntentMeshError):
    code = "BAD_SIZE"


class IntentMismatchError(IntentMeshError):
    code = "INTENT_MISMATCH"


class ValidationExhaustedError(IntentMeshError):
    code = "VALIDATION_EXHAUSTED"

    def __init__(self, reports, message: str = ""):
        super().__init__(message or f"validation exhausted after {len(reports)} attempts")
        self.reports = list(reports)


class StateUnavailableError(IntentMeshError):
    code = "STATE_UNAVAILABLE"


class NoTopologyError(IntentMeshError):
    code = "NO_TOPOLOGY"


class DuplicateDomainError(IntentMeshError):
    code = "DUPLICATE_DOMAIN_ID"


class UnreachableNodeError(IntentMeshError):
    code = "UNREACHABLE"


class BrokenPathError(IntentMeshError):
    code = "BROKEN_PATH"


class InstantiationFailedError(IntentMeshError):
    code = "INSTANTIATION_FAILED"

    def __init__(self, failed_instruction_index: int, reason: str):
        super().__init__(
            f"instantiation failed at instruction {failed_instruction_index}: {reason}",
            failed_instruction_index=failed_instruction_index,
            reason=reason,
        )
        self.failed_instruction_index = failed_instruction_index
        self.reason = reason


class NoRecordsError(IntentMeshError):
    code = "NO_RECORDS"


class FleetUnreachableError(IntentMeshError):
    code = "FLEET_UNREACHABLE"
