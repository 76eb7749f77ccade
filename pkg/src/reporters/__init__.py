"""Reporter factory and registry."""

from typing import Any, Dict, Tuple, Type

from .base import BaseReporter
from .console import ConsoleReporter
from .json_reporter import JSONReporter


_REPORTERS: Dict[str, Tuple[Type[BaseReporter], str]] = {
    "console": (ConsoleReporter, "Rich tables on the terminal"),
    "json": (JSONReporter, "Deterministic JSON; JSON lines for scans"),
}


def get_reporter(reporter_type: str, **options: Any) -> BaseReporter:
    """Get a reporter instance by type.

    Args:
        reporter_type: 'console' or 'json', case-insensitive.
        **options: Passed to the reporter constructor (e.g. ``file``).

    Raises:
        ValueError: If reporter type is not supported.
    """
    entry = _REPORTERS.get(reporter_type.lower())
    if entry is None:
        raise ValueError(
            f"Unsupported reporter type: {reporter_type}. "
            f"Supported types: {sorted(_REPORTERS)}"
        )
    reporter_class, _ = entry
    return reporter_class(**options)


def reporter_for(json_output: bool, **options: Any) -> BaseReporter:
    """The reporter a CLI invocation writes with."""
    return get_reporter("json" if json_output else "console", **options)


def list_reporters() -> Dict[str, str]:
    """Reporter types mapped to a one-line description."""
    return {name: description for name, (_, description) in _REPORTERS.items()}
