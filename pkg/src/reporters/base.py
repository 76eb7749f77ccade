"""Base reporter class and the report payloads shared by every format."""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, List, Optional, TextIO, Union

from ..errors import RegMatchError
from ..models.graph import Matching
from ..models.report import (
    SCHEMA_VERSION,
    ConstructionReport,
    DecompositionReport,
    OracleVerdict,
    ScanRecord,
    ScanSummary,
    VerifyReport,
)
from ..models.structure import GallaiEdmonds

Reportable = Union[ConstructionReport, DecompositionReport, VerifyReport, OracleVerdict]


def _pairs(matching: Optional[Matching]) -> Optional[List[List[int]]]:
    if matching is None:
        return None
    return [list(pair) for pair in matching.sorted_pairs()]


def _decomposition(ge: GallaiEdmonds) -> Dict[str, Any]:
    return {
        "n": ge.n,
        "nu": ge.nu,
        "deficiency": ge.deficiency,
        "D": list(ge.D),
        "A": list(ge.A),
        "C": list(ge.C),
        "components": [list(component) for component in ge.components],
        "edges_to_a": list(ge.edge_counts),
    }


class BaseReporter(ABC):
    """Abstract base class for reporters."""

    def __init__(self, file: Optional[TextIO] = None):
        """Initialize reporter.

        Args:
            file: Stream to print to; stdout when omitted.
        """
        self.file = file

    @abstractmethod
    def generate_report(self, result: Reportable, output_path: Optional[Path] = None) -> str:
        """Generate a report for one command result.

        Args:
            result: Construction, decomposition, verification or oracle result.
            output_path: Optional path to write the report file.

        Returns:
            Report string.
        """
        pass

    @abstractmethod
    def generate_scan_report(
        self,
        records: List[ScanRecord],
        summary: ScanSummary,
        output_path: Optional[Path] = None,
    ) -> str:
        """Generate a report for a scan."""
        pass

    def _build_payload(self, result: Reportable) -> Dict[str, Any]:
        """Plain-data view of a result, without timings so reruns compare equal.

        Raises:
            TypeError: Unknown result type.
        """
        payload: Dict[str, Any] = {"schema": SCHEMA_VERSION}
        if isinstance(result, ConstructionReport):
            plan = result.plan
            payload.update(
                kind="construct",
                regime=result.regime.value,
                k=result.k,
                size=len(result.matching),
                property_holds=result.property_holds,
                matching=_pairs(result.matching),
                unsaturated=list(result.unsaturated),
                decomposition=_decomposition(result.decomposition),
                components=[choice.model_dump(mode="json") for choice in result.components],
                plan=None
                if plan is None
                else {
                    "X": list(plan.X),
                    "threshold": plan.threshold,
                    "beta": plan.beta,
                    "aux_matching": _pairs(plan.h_matching_aux),
                },
            )
        elif isinstance(result, DecompositionReport):
            payload.update(
                kind="decompose",
                k=result.k,
                decomposition=_decomposition(result.decomposition),
                components=[choice.model_dump(mode="json") for choice in result.components],
            )
        elif isinstance(result, VerifyReport):
            payload.update(kind="verify", **result.model_dump(mode="json"))
        elif isinstance(result, OracleVerdict):
            payload.update(
                kind="oracle",
                nu=result.nu,
                maximum_matching_count=result.maximum_matching_count,
                good_exists=result.good_exists,
                witness=_pairs(result.witness),
            )
        else:
            raise TypeError(f"cannot report {type(result).__name__}")
        return payload

    @staticmethod
    def error_payload(error: RegMatchError) -> Dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "kind": "error",
            "error": type(error).__name__,
            "exit_code": error.exit_code,
            "message": error.message,
            "witness": error.witness,
        }
