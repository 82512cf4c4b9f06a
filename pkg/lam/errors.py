from __future__ import annotations

from typing import Any, Optional


class LamError(Exception):
    pass


class ConfigError(LamError):
    pass


class LamParseError(LamError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.message = message
        self.line = line
        self.column = column
        if line is not None and column is not None:
            super().__init__(f"{message} at line {line}, column {column}")
        else:
            super().__init__(message)


class UnboundIdentifierError(LamParseError):
    def __init__(self, name: str, line: int, column: int):
        self.name = name
        super().__init__(f"unbound identifier {name!r}", line, column)


class WrongCalculusError(LamParseError):
    def __init__(
        self,
        constructor: str,
        system: Any,
        line: Optional[int] = None,
        column: Optional[int] = None,
    ):
        self.constructor = constructor
        self.system = system
        tag = getattr(system, "value", system)
        super().__init__(f"constructor {constructor!r} is not part of system {str(tag).upper()}", line, column)


class IllTypedError(LamError):
    def __init__(self, message: str, subject: Any = None, rule: str = "unknown"):
        self.message = message
        self.subject = subject
        self.rule = rule
        super().__init__(f"{message} (rule: {rule})")


class IllFormedContextError(IllTypedError):
    def __init__(self, index: int, name: str, reason: str):
        self.index = index
        self.name = name
        self.reason = reason
        super().__init__(f"context entry #{index} {name!r} is ill-formed: {reason}", rule="context")


class FuelExhaustedError(LamError):
    def __init__(self, fuel: int, steps: int):
        self.fuel = fuel
        self.steps = steps
        super().__init__(f"fuel exhausted after {steps} steps (fuel={fuel})")


class SolverFuelExhaustedError(FuelExhaustedError):
    """``candidate`` is None when the right-hand side itself ran out of fuel."""

    def __init__(self, candidate: Optional[int], fuel: int, steps: int):
        self.candidate = candidate
        super().__init__(fuel, steps)
        where = "the right-hand side" if candidate is None else f"candidate {candidate}"
        self.args = (f"fuel exhausted on {where} after {steps} steps (fuel={fuel})",)


class PreconditionError(LamError):
    pass


class ArityError(LamError):
    pass
