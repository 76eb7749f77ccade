"""Console reporter for terminal output."""

from pathlib import Path
from typing import Any, Dict, List, Optional

from ..models.report import ScanRecord, ScanSummary
from .base import BaseReporter, Reportable


class ConsoleReporter(BaseReporter):
    """Reporter that outputs to the console with rich formatting."""

    ICONS = {
        "pass": "✓",
        "fail": "✗",
        "skip": "•",
    }

    COLORS = {
        "pass": "green",
        "fail": "red",
        "skip": "yellow",
    }

    def generate_report(self, result: Reportable, output_path: Optional[Path] = None) -> str:
        """Print a human-readable report.

        Args:
            result: Command result.
            output_path: Ignored for console reporter.

        Returns:
            Empty string (the report is printed directly).
        """
        from rich import box
        from rich.console import Console
        from rich.table import Table

        console = Console(file=self.file, highlight=False)
        payload = self._build_payload(result)
        kind = payload["kind"]

        console.print(f"\n[bold]{kind.capitalize()} report[/bold]\n")

        summary_table = Table(box=box.SIMPLE, show_header=False)
        summary_table.add_column("Metric", style="cyan")
        summary_table.add_column("Value", style="magenta")
        for label, value in self._summary_rows(payload):
            summary_table.add_row(label, value)
        console.print(summary_table)

        if payload.get("components"):
            components_table = Table(box=box.SIMPLE)
            for column in ("Q", "vertices", "|[Q,A]|", "class", "good", "avoid"):
                components_table.add_column(column)
            for choice in payload["components"]:
                components_table.add_row(
                    str(choice["index"]),
                    " ".join(map(str, choice["vertices"])),
                    str(choice["edges_to_a"]),
                    choice["degree_class"],
                    " ".join(map(str, choice["good_vertices"])) or "-",
                    "-" if choice["avoid"] is None else str(choice["avoid"]),
                )
            console.print(components_table)

        verdict = self._verdict(payload)
        if verdict is not None:
            key = "pass" if verdict else "fail"
            console.print(f"[{self.COLORS[key]}]{self.ICONS[key]} property holds: {verdict}[/]")
        console.print()
        return ""

    def generate_scan_report(
        self,
        records: List[ScanRecord],
        summary: ScanSummary,
        output_path: Optional[Path] = None,
    ) -> str:
        """Print scan totals and every discrepancy."""
        from rich import box
        from rich.console import Console
        from rich.table import Table

        console = Console(file=self.file, highlight=False)
        console.print(f"\n[bold]Scan report ({summary.mode})[/bold]\n")

        summary_table = Table(box=box.SIMPLE, show_header=False)
        summary_table.add_column("Metric", style="cyan")
        summary_table.add_column("Value", style="magenta")
        summary_table.add_row("k", str(summary.k))
        summary_table.add_row("Simple", str(summary.simple))
        summary_table.add_row("Max order", str(summary.n_max))
        summary_table.add_row("Graphs", str(summary.total))
        summary_table.add_row("Discrepancies", str(summary.discrepancy_count))
        for regime, count in summary.regimes.items():
            summary_table.add_row(f"Regime {regime}", str(count))
        console.print(summary_table)

        for record in records:
            if record.discrepancies:
                console.print(
                    f"{self.ICONS['fail']} [red]graph {record.index}[/red] "
                    f"(n={record.n}): {'; '.join(record.discrepancies)}"
                )
        key = "fail" if summary.discrepancy_count else "pass"
        console.print(f"[{self.COLORS[key]}]{self.ICONS[key]} {summary.total} graphs scanned[/]\n")
        return ""

    @staticmethod
    def _summary_rows(payload: Dict[str, Any]) -> List[tuple]:
        kind = payload["kind"]
        if kind == "construct":
            ge = payload["decomposition"]
            return [
                ("Regime", payload["regime"]),
                ("k", str(payload["k"])),
                ("Vertices", str(ge["n"])),
                ("Matching size", str(payload["size"])),
                ("Deficiency", str(ge["deficiency"])),
                ("|D| / |A| / |C|", f"{len(ge['D'])} / {len(ge['A'])} / {len(ge['C'])}"),
                ("Unsaturated", " ".join(map(str, payload["unsaturated"])) or "-"),
                ("Matching", " ".join(f"{u}-{v}" for u, v in payload["matching"]) or "-"),
            ]
        if kind == "decompose":
            ge = payload["decomposition"]
            return [
                ("k", str(payload["k"])),
                ("nu", str(ge["nu"])),
                ("Deficiency", str(ge["deficiency"])),
                ("D", " ".join(map(str, ge["D"])) or "-"),
                ("A", " ".join(map(str, ge["A"])) or "-"),
                ("C", " ".join(map(str, ge["C"])) or "-"),
            ]
        if kind == "verify":
            shared = payload["shared_neighbor"]
            return [
                ("Size", str(payload["size"])),
                ("nu", str(payload["nu"])),
                ("Maximum", str(payload["is_maximum"])),
                ("Unsaturated", " ".join(map(str, payload["unsaturated"])) or "-"),
                (
                    "Shared neighbor",
                    "-" if shared is None else "{} and {} share {}".format(*shared),
                ),
            ]
        witness = payload["witness"]
        return [
            ("nu", str(payload["nu"])),
            ("Maximum matchings", str(payload["maximum_matching_count"])),
            ("Good matching exists", str(payload["good_exists"])),
            ("Witness", "-" if witness is None else " ".join(f"{u}-{v}" for u, v in witness)),
        ]

    @staticmethod
    def _verdict(payload: Dict[str, Any]) -> Optional[bool]:
        if payload["kind"] in ("construct", "verify"):
            return payload["property_holds"]
        if payload["kind"] == "oracle":
            return payload["good_exists"]
        return None
