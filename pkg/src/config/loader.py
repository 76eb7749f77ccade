"""Configuration loader for run tunables."""

import logging
from pathlib import Path
from typing import Any, Dict, Union

import yaml

from ..models.report import RunConfig

logger = logging.getLogger(__name__)

# section -> {yaml key: RunConfig field}
SECTIONS: Dict[str, Dict[str, str]] = {
    "oracle": {
        "enumeration_edge_budget": "enumeration_edge_budget",
        "fallback_max_n": "oracle_fallback_max_n",
    },
    "generator": {
        "retry_budget": "generator_retry_budget",
    },
    "scan": {
        "workers": "scan_workers",
        "trials": "scan_trials",
        "seed": "scan_seed",
        "dedupe_isomorphs": "dedupe_isomorphs",
    },
    "logging": {
        "level": "log_level",
    },
}


class ConfigLoader:
    """Load and save RunConfig files."""

    SUPPORTED_FORMATS = (".yaml", ".yml")

    def load(self, config_path: Union[str, Path]) -> RunConfig:
        """Load run configuration from a YAML file.

        Args:
            config_path: Path to the configuration file.

        Returns:
            RunConfig with file values over the defaults.

        Raises:
            FileNotFoundError: The file does not exist.
            ValueError: Unsupported suffix or invalid values.
        """
        config_path = Path(config_path)

        if not config_path.exists():
            raise FileNotFoundError(f"Configuration file not found: {config_path}")

        if config_path.suffix not in self.SUPPORTED_FORMATS:
            raise ValueError(
                f"Unsupported config format: {config_path.suffix}. "
                f"Supported formats: {self.SUPPORTED_FORMATS}"
            )

        with open(config_path, "r") as f:
            raw_config = yaml.safe_load(f)

        if not raw_config:
            return RunConfig()

        return self._parse_config(raw_config)

    def load_default(self) -> RunConfig:
        return RunConfig()

    def load_from_string(self, config_string: str) -> RunConfig:
        """Load run configuration from a YAML string."""
        raw_config = yaml.safe_load(config_string)
        if not raw_config:
            return RunConfig()
        return self._parse_config(raw_config)

    def _parse_config(self, raw_config: Any) -> RunConfig:
        """Flatten the sectioned YAML mapping into RunConfig fields.

        Raises:
            ValueError: The document is not a mapping of mappings, or a value is invalid.
        """
        if not isinstance(raw_config, dict):
            raise ValueError("configuration must be a mapping of sections")

        values: Dict[str, Any] = {}
        for section, entries in raw_config.items():
            fields = SECTIONS.get(section)
            if fields is None:
                logger.warning("ignoring unknown configuration section %r", section)
                continue
            if not isinstance(entries, dict):
                raise ValueError(f"section {section!r} must be a mapping")
            for key, value in entries.items():
                field = fields.get(key)
                if field is None:
                    logger.warning("ignoring unknown key %s.%s", section, key)
                    continue
                values[field] = value

        return RunConfig(**values)

    def generate_example(self, example_type: str = "basic") -> Dict[str, Any]:
        """Generate an example configuration.

        Args:
            example_type: 'basic' (scan settings only) or 'full' (every section).

        Returns:
            Example configuration dictionary.
        """
        full = self._serialize_config(RunConfig())
        if example_type == "basic":
            return {"scan": full["scan"]}
        return full

    def save(self, config: RunConfig, output_path: Path) -> None:
        """Save a configuration to a YAML file."""
        raw_config = self._serialize_config(config)
        with open(output_path, "w") as f:
            yaml.dump(raw_config, f, default_flow_style=False, indent=2)

    def _serialize_config(self, config: RunConfig) -> Dict[str, Any]:
        return {
            section: {key: getattr(config, field) for key, field in fields.items()}
            for section, fields in SECTIONS.items()
        }
