"""
Report and run-config models
"""

from .reports import (
    CellResult, ClassReport, MembershipReport, OutputFormat, PresentationReport,
    RunConfig, VerifyKind, VerifyReport
)

__all__ = [
    "CellResult",
    "ClassReport",
    "MembershipReport",
    "OutputFormat",
    "PresentationReport",
    "RunConfig",
    "VerifyKind",
    "VerifyReport",
]
