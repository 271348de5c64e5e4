import json
import os
from pathlib import Path

from pydantic import BaseModel, Field, ValidationError

from utils.logging import get_logger

logger = get_logger(__name__)

DEFAULT_CONFIG_FILE = Path(__file__).with_name("user_config.json")

# environment variable -> settings field
ENV_OVERRIDES = {
    "CARTWIDTH_EXACT_CEILING": "exact_ceiling",
    "CARTWIDTH_BANDWIDTH_CEILING": "bandwidth_ceiling",
    "CARTWIDTH_BUDGET_MS": "budget_ms",
}


class SolverSettings(BaseModel):
    """Limits and defaults shared by the exact solvers and the CLI."""

    exact_ceiling: int = Field(25, ge=1, le=64)
    bandwidth_ceiling: int = Field(12, ge=1)
    budget_ms: int = Field(60_000, ge=1)
    max_states: int = Field(5_000_000, ge=1)
    hitting_set_nodes: int = Field(2_000_000, ge=1)
    family_limit: int = Field(5000, ge=1)
    default_seed: int = Field(0, ge=0)


class UserConfig:
    """
    Loads solver settings from a JSON file, merged over the defaults and
    then over environment overrides. A missing file is created with the
    defaults; an unreadable one is logged and ignored.
    """

    def __init__(self, config_file: str | Path | None = None):
        self.config_file = Path(config_file) if config_file else DEFAULT_CONFIG_FILE
        self._config = self._load_config_from_file()
        self.settings = self._build_settings()

    def _load_config_from_file(self) -> dict:
        default_config = SolverSettings().model_dump()
        if os.path.exists(self.config_file):
            try:
                with open(self.config_file, "r") as f:
                    config = json.load(f)
                if not isinstance(config, dict):
                    raise ValueError("top level must be an object")
                for key, value in default_config.items():
                    config.setdefault(key, value)
                logger.info(f"Solver configuration loaded from {self.config_file}.")
                return config
            except json.JSONDecodeError as e:
                logger.error(f"Error decoding {self.config_file}: {e}. Using defaults.")
                return default_config
            except (OSError, ValueError) as e:
                logger.error(f"Error loading {self.config_file}: {e}. Using defaults.")
                return default_config
        logger.info(f"{self.config_file} not found. Creating it with defaults.")
        self._save_config(default_config)
        return default_config

    def _save_config(self, config_data: dict) -> None:
        try:
            with open(self.config_file, "w") as f:
                json.dump(config_data, f, indent=4)
        except OSError as e:
            logger.error(f"Error saving solver configuration: {e}")

    def _build_settings(self) -> SolverSettings:
        merged = dict(self._config)
        for env, key in ENV_OVERRIDES.items():
            raw = os.getenv(env)
            if raw is None:
                continue
            try:
                merged[key] = int(raw)
            except ValueError:
                logger.warning(f"Ignoring {env}={raw!r}: not an integer.")
        try:
            return SolverSettings(**merged)
        except ValidationError as e:
            logger.error(f"Invalid solver configuration: {e}. Using defaults.")
            return SolverSettings()

    def override(self, **values) -> SolverSettings:
        """Apply command-line values (``None`` means not given)."""
        given = {k: v for k, v in values.items() if v is not None}
        self.settings = self.settings.model_copy(update=given)
        return self.settings
