"""Graph loading with format resolution by extension or content."""

import sys
from pathlib import Path
from typing import Optional, TextIO, Union

from ..errors import InputError
from ..models.graph import Multigraph
from ..models.report import GraphFormat
from .graph6 import parse_graph6
from .mel import parse_mel


class GraphLoader:
    """Load graphs from files, streams or strings."""

    SUPPORTED_FORMATS = {
        ".g6": GraphFormat.GRAPH6,
        ".graph6": GraphFormat.GRAPH6,
        ".mel": GraphFormat.MEL,
    }

    def resolve_format(
        self,
        source: Optional[str] = None,
        text: Optional[str] = None,
    ) -> GraphFormat:
        """Pick a format from a path suffix, falling back to sniffing the text.

        MEL text starts (after comments) with ``n <count>``; anything else is
        treated as graph6.
        """
        if source and source != "-":
            suffix = Path(source).suffix.lower()
            if suffix in self.SUPPORTED_FORMATS:
                return self.SUPPORTED_FORMATS[suffix]
        if text is not None:
            for raw in text.splitlines():
                content = raw.split("#", 1)[0].strip()
                if content:
                    return GraphFormat.MEL if content.split()[0] == "n" else GraphFormat.GRAPH6
        if source and source != "-":
            raise InputError(
                f"Cannot resolve graph format for {source}. "
                f"Supported extensions: {sorted(self.SUPPORTED_FORMATS)}"
            )
        return GraphFormat.GRAPH6

    def load(
        self,
        source: Union[str, Path],
        fmt: Optional[GraphFormat] = None,
        stdin: Optional[TextIO] = None,
    ) -> Multigraph:
        """Load a graph from a path, or from stdin when the path is ``-``.

        Args:
            source: File path or ``-``.
            fmt: Explicit format; resolved automatically when None.
            stdin: Stream used for ``-`` (defaults to sys.stdin).

        Returns:
            Parsed Multigraph.
        """
        source = str(source)
        if source == "-":
            text = (stdin or sys.stdin).read()
        else:
            path = Path(source)
            if not path.exists():
                raise InputError(f"Graph file not found: {path}")
            text = path.read_text()
        return self.load_from_string(text, fmt or self.resolve_format(source, text))

    def load_from_string(self, text: str, fmt: Optional[GraphFormat] = None) -> Multigraph:
        """Parse graph text in the given (or sniffed) format."""
        fmt = fmt or self.resolve_format(text=text)
        if fmt == GraphFormat.MEL:
            return parse_mel(text)
        lines = [line for line in text.splitlines() if line.strip()]
        if len(lines) > 1:
            raise InputError("graph6 input must hold exactly one graph")
        return parse_graph6(lines[0] if lines else "")
