"""Uniform diagnostic records shared by every analysis phase.

Every checker reports findings as :class:`Diagnostic` values instead of
raising; an Error-severity diagnostic makes its owning phase fail.  Codes
are a stable flat namespace (``KML-<PHASE>-<NNN>``) so golden tests survive
message rewording.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Optional


class Severity(enum.Enum):
    ERROR = "error"
    WARNING = "warning"
    INFO = "info"


class Phase(enum.Enum):
    PARSE = "parse"
    STATIC = "static"
    CONSISTENCY = "consistency"
    COMPLIANCE = "compliance"
    BEHAVIOR = "behavior"
    FUNCTIONAL = "functional"
    EXTRACT = "extract"


@dataclass(frozen=True)
class Location:
    """1-based position inside a source unit (or a model path when col == 0)."""

    unit: str
    line: int = 0
    col: int = 0

    def __str__(self) -> str:
        if self.line:
            return f"{self.unit}:{self.line}:{self.col}"
        return self.unit


# Parse / resolve phase.
LEXICAL_ERROR = "KML-PAR-001"
GRAMMAR_ERROR = "KML-PAR-002"
DUPLICATE_DECLARATION = "KML-PAR-003"
DUPLICATE_PREDICATE_LABEL = "KML-PAR-004"
UNKNOWN_SUBLINK = "KML-PAR-005"
UNRESOLVED_COMPONENT = "KML-PAR-006"
UNKNOWN_SERVICE = "KML-PAR-007"
DUPLICATE_UNIT = "KML-PAR-008"
UNRESOLVED_IDENTIFIER = "KML-PAR-009"
TYPE_ERROR = "KML-PAR-010"
UNKNOWN_TYPE = "KML-PAR-011"
LINK_KIND_MISMATCH = "KML-PAR-012"
MIXED_RESULT_CASE = "KML-PAR-013"
SUBLINK_CYCLE = "KML-PAR-014"

# Static interoperability phase.
ARITY_MISMATCH = "KML-STA-001"
PARAM_TYPE_MISMATCH = "KML-STA-002"
RETURN_TYPE_MISMATCH = "KML-STA-003"
MISSING_SUBLINK = "KML-STA-004"
DANGLING_SUBLINK = "KML-STA-005"
STRUCTURE_MISMATCH = "KML-STA-006"
UNUSED_SUBPROVIDE = "KML-STA-007"
UNAVAILABLE_INTERNAL_SERVICE = "KML-STA-008"
UNDECLARED_EXTERNAL_REQUIREMENT = "KML-STA-009"
UNDEFINED_SUBSERVICE = "KML-STA-010"
DEPENDENCY_CYCLE = "KML-STA-011"
NON_OBSERVABLE_REFERENCE = "KML-STA-012"

# Component consistency phase.
INIT_VIOLATES_INVARIANT = "KML-CON-001"
INVARIANT_NOT_PRESERVED = "KML-CON-002"
OBLIGATION_HOLDS = "KML-CON-003"
POSSIBLY_UNINITIALIZED = "KML-CON-004"

# Assembly compliance phase.
PRECONDITION_NOT_STRONGER = "KML-CMP-001"
POSTCONDITION_NOT_WEAKER = "KML-CMP-002"
INCOMPLETE_CONTEXT_MAPPING = "KML-CMP-003"
COMPLIANCE_HOLDS = "KML-CMP-004"

# Behavioural compatibility phase.
DEADLOCK = "KML-BHV-001"
MESSAGE_ARITY_MISMATCH = "KML-BHV-002"
UNMATCHED_EMISSION = "KML-BHV-003"
UNMATCHED_RECEPTION = "KML-BHV-004"
UNREACHABLE_FINAL = "KML-BHV-005"
MISSING_BEHAVIOR = "KML-BHV-006"

# Functional correctness phase.
POST_VIOLATION = "KML-FUN-001"
DEPTH_EXHAUSTED = "KML-FUN-002"
NO_TERMINATING_PATH = "KML-FUN-003"
SEARCH_SPACE_EXCEEDED = "KML-FUN-004"

# Extraction phase.
NO_TERMINATING_BEHAVIOR = "KML-EXT-001"
NO_FINAL_STATE = "KML-EXT-002"

# Driver.
PHASE_SKIPPED = "KML-DRV-001"


@dataclass(frozen=True)
class Diagnostic:
    """One finding: ``severity code location message`` plus an optional witness.

    ``counterexample`` carries either a Valuation (assertion phases) or a
    Trace (behaviour phase); both expose ``to_json()``.
    """

    severity: Severity
    phase: Phase
    code: str
    location: Location
    message: str
    counterexample: Optional[Any] = field(default=None, compare=False)

    def sort_key(self) -> tuple:
        return (self.location.unit, self.location.line, self.location.col, self.code, self.message)

    def to_json(self) -> dict:
        entry: dict[str, Any] = {
            "severity": self.severity.value,
            "code": self.code,
            "phase": self.phase.value,
            "location": {
                "file": self.location.unit,
                "line": self.location.line,
                "col": self.location.col,
            },
            "message": self.message,
        }
        if self.counterexample is not None:
            entry["counterexample"] = self.counterexample.to_json()
        return entry

    def render(self) -> str:
        text = f"{self.severity.value}: {self.code} {self.location}: {self.message}"
        if self.counterexample is not None:
            text += f"\n    witness: {self.counterexample}"
        return text


def sort_diagnostics(diags: list[Diagnostic]) -> list[Diagnostic]:
    """Deterministic report order: by unit, position, then code."""
    return sorted(diags, key=Diagnostic.sort_key)


def has_errors(diags: list[Diagnostic]) -> bool:
    return any(d.severity is Severity.ERROR for d in diags)
