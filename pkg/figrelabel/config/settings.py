"""
Configuration management

YAML file + environment overrides, validated with pydantic.
"""

from enum import Enum
from typing import Literal, Optional
import os
import re

import yaml
from pydantic import BaseModel, ConfigDict, Field, field_validator

from figrelabel.core.constants import DEFAULT_MAX_STEPS, ENV_PREFIX


class SaveRestoreMode(str, Enum):
    """How save/restore behave inside the VM"""
    FAITHFUL = "faithful"
    NEUTERED = "neutered"


class UnknownOperatorMode(str, Enum):
    """What happens when an executable name resolves to nothing"""
    ERROR = "error"
    PERMISSIVE_NOOP = "permissive_noop"


class VmConfig(BaseModel):
    """Interpreter configuration"""
    model_config = ConfigDict(extra="forbid", frozen=True)

    save_restore_mode: SaveRestoreMode = Field(
        SaveRestoreMode.FAITHFUL,
        description="faithful: restore rolls back graphics state; neutered: save pushes false, restore pops",
    )
    unknown_operator_mode: UnknownOperatorMode = Field(
        UnknownOperatorMode.ERROR,
        description="error: undefined names are fatal; permissive_noop: warn and skip",
    )
    max_steps: int = Field(DEFAULT_MAX_STEPS, description="Execution step budget", gt=0)


class AppConfig(BaseModel):
    """Application configuration"""
    model_config = ConfigDict(extra="forbid")

    log_level: str = Field("WARNING", description="Log level")
    log_file: Optional[str] = Field(None, description="Log file path", max_length=512)
    colored_log: bool = Field(True, description="Enable colored logs")
    listing_format: Literal["tsv", "json"] = Field("tsv", description="Default extract output format")
    vm: VmConfig = Field(default_factory=VmConfig, description="Interpreter settings")

    @field_validator('log_level')
    @classmethod
    def validate_log_level(cls, v):
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if v.upper() not in valid_levels:
            raise ValueError(f'log_level must be one of {valid_levels}')
        return v.upper()

    @classmethod
    def load(cls, path: Optional[str] = None) -> 'AppConfig':
        """
        Load configuration from an explicit path, FIGRELABEL_CONFIG, or defaults

        Args:
            path: YAML file path (optional)

        Returns:
            AppConfig instance
        """
        path = path or os.getenv(f"{ENV_PREFIX}CONFIG")
        if path:
            return cls.from_yaml(path)
        return cls(**cls._apply_env_overrides({}))

    @classmethod
    def from_yaml(cls, path: str) -> 'AppConfig':
        """
        Load configuration from a YAML file

        Args:
            path: YAML file path

        Returns:
            AppConfig instance
        """
        if not os.path.exists(path):
            raise FileNotFoundError(f"Config file not found: {path}")

        with open(path, 'r', encoding='utf-8') as f:
            data = yaml.safe_load(f) or {}

        data = cls._apply_env_overrides(data)
        return cls(**data)

    @classmethod
    def _apply_env_overrides(cls, data: dict) -> dict:
        """Apply FIGRELABEL_* environment overrides."""
        def _set_nested(target: dict, keys: list[str], value: str):
            current = target
            for key in keys[:-1]:
                if key not in current or not isinstance(current[key], dict):
                    current[key] = {}
                current = current[key]
            current[keys[-1]] = value

        env_map = {
            f"{ENV_PREFIX}MAX_STEPS": ["vm", "max_steps"],
            f"{ENV_PREFIX}LOG_LEVEL": ["log_level"],
            f"{ENV_PREFIX}LOG_FILE": ["log_file"],
        }

        for env_key, path_keys in env_map.items():
            env_value = os.getenv(env_key)
            if env_value:
                _set_nested(data, path_keys, env_value)

        return cls._replace_env_placeholders(data)

    @classmethod
    def _replace_env_placeholders(cls, data):
        """Replace ${VAR_NAME} or ${VAR_NAME:-default} placeholders recursively."""
        if isinstance(data, dict):
            return {key: cls._replace_env_placeholders(value) for key, value in data.items()}
        if isinstance(data, list):
            return [cls._replace_env_placeholders(item) for item in data]
        if isinstance(data, str):
            for match in re.findall(r'\$\{([^}]+)\}', data):
                if ':-' in match:
                    var_name, default_val = match.split(':-', 1)
                else:
                    var_name, default_val = match, None

                env_value = os.getenv(var_name.strip())
                if env_value is not None:
                    data = data.replace(f'${{{match}}}', env_value)
                elif default_val is not None:
                    data = data.replace(f'${{{match}}}', default_val)
            return data
        return data

    def to_yaml(self, path: str) -> None:
        """
        Save configuration to a YAML file

        Args:
            path: YAML file path
        """
        dirname = os.path.dirname(path)
        if dirname:
            os.makedirs(dirname, exist_ok=True)
        with open(path, 'w', encoding='utf-8') as f:
            yaml.dump(self.model_dump(mode="json"), f, allow_unicode=True, default_flow_style=False)
