"""JSON reporter for machine-readable output."""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional

from ..models.report import SCHEMA_VERSION, ScanRecord, ScanSummary
from .base import BaseReporter, Reportable


def dumps(payload: Dict[str, Any], indent: Optional[int] = 2) -> str:
    """Deterministic JSON text: sorted keys, no timestamps."""
    return json.dumps(payload, indent=indent, sort_keys=True, default=str)


class JSONReporter(BaseReporter):
    """Reporter that outputs JSON; scans become JSON lines."""

    def generate_report(self, result: Reportable, output_path: Optional[Path] = None) -> str:
        """Generate a JSON report.

        Args:
            result: Command result.
            output_path: Optional path to write the JSON file.

        Returns:
            JSON string ending in a newline.
        """
        json_output = dumps(self._build_payload(result)) + "\n"
        self._write(json_output, output_path)
        return json_output

    def generate_scan_report(
        self,
        records: List[ScanRecord],
        summary: ScanSummary,
        output_path: Optional[Path] = None,
    ) -> str:
        """One line per scanned graph in index order, then a summary line."""
        lines = [
            dumps({"schema": SCHEMA_VERSION, "kind": "scan-record", **record.model_dump()}, None)
            for record in sorted(records, key=lambda record: record.index)
        ]
        lines.append(
            dumps({"schema": SCHEMA_VERSION, "kind": "scan-summary", **summary.model_dump()}, None)
        )
        json_output = "\n".join(lines) + "\n"
        self._write(json_output, output_path)
        return json_output

    def _write(self, text: str, output_path: Optional[Path]) -> None:
        if output_path:
            with open(output_path, "w") as f:
                f.write(text)
        elif self.file is not None:
            self.file.write(text)
