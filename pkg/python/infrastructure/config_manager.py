"""
配置管理器
加载 configs/prefixlab_config.json，jsonschema 校验，环境变量覆盖
"""
import json
import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Dict, Optional

import jsonschema

from .log_manager import get_logger

DEFAULT_CEILING = 1 << 22
HARD_CEILING = 1 << 30

CEILING_ENV = "PREFIXLAB_CEILING"
LOG_LEVEL_ENV = "PREFIXLAB_LOG_LEVEL"

DEFAULT_CONFIG_PATH = Path(__file__).parent.parent.parent / "configs" / "prefixlab_config.json"


@dataclass(frozen=True)
class LabConfig:
    """运行配置 (预算、上限、日志)"""
    max_len: int = 12
    max_steps: int = 1000
    ceiling: int = DEFAULT_CEILING
    workers: int = 1
    budget: int = 8
    max_n: int = 12
    n0: int = 0
    log_level: str = "INFO"
    log_file: Optional[str] = None

    def with_overrides(self, **overrides: Any) -> 'LabConfig':
        """返回应用了非 None 覆盖项的新配置"""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


class ConfigManager:
    """配置加载器"""

    SCHEMA = {
        "type": "object",
        "properties": {
            "enumeration": {
                "type": "object",
                "properties": {
                    "maxLen": {"type": "integer", "minimum": 0},
                    "maxSteps": {"type": "integer", "minimum": 0},
                    "ceiling": {"type": "integer", "minimum": 1},
                    "workers": {"type": "integer", "minimum": 1}
                }
            },
            "transform": {
                "type": "object",
                "properties": {
                    "budget": {"type": "integer", "minimum": 1}
                }
            },
            "census": {
                "type": "object",
                "properties": {
                    "maxN": {"type": "integer", "minimum": 0},
                    "n0": {"type": "integer", "minimum": 0}
                }
            },
            "logging": {
                "type": "object",
                "properties": {
                    "level": {"enum": ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]},
                    "file": {"type": ["string", "null"]}
                }
            }
        }
    }

    def __init__(self, config_path: Optional[str] = None):
        self.logger = get_logger("ConfigManager")
        self.config_path = Path(config_path) if config_path else DEFAULT_CONFIG_PATH

    def load(self) -> LabConfig:
        """加载配置：文件 -> 环境变量"""
        data = self._load_file()
        enumeration = data.get("enumeration", {})
        transform = data.get("transform", {})
        census = data.get("census", {})
        logging_section = data.get("logging", {})

        defaults = LabConfig()
        config = LabConfig(
            max_len=enumeration.get("maxLen", defaults.max_len),
            max_steps=enumeration.get("maxSteps", defaults.max_steps),
            ceiling=enumeration.get("ceiling", defaults.ceiling),
            workers=enumeration.get("workers", defaults.workers),
            budget=transform.get("budget", defaults.budget),
            max_n=census.get("maxN", defaults.max_n),
            n0=census.get("n0", defaults.n0),
            log_level=logging_section.get("level", defaults.log_level),
            log_file=logging_section.get("file", defaults.log_file),
        )
        config = self._apply_environment(config)
        return config.with_overrides(ceiling=self.clamp_ceiling(config.ceiling))

    def _load_file(self) -> Dict[str, Any]:
        if not self.config_path.exists():
            self.logger.warning(f"Config file not found: {self.config_path}, using defaults")
            return {}
        try:
            with open(self.config_path, 'r', encoding='utf-8') as f:
                data = json.load(f)
            jsonschema.validate(instance=data, schema=self.SCHEMA)
            return data
        except json.JSONDecodeError as e:
            self.logger.warning(f"Failed to parse config: {e}, using defaults")
        except jsonschema.ValidationError as e:
            self.logger.warning(
                f"Config validation failed at path '{'.'.join(str(p) for p in e.path)}': {e.message}, using defaults"
            )
        return {}

    def _apply_environment(self, config: LabConfig) -> LabConfig:
        ceiling = os.getenv(CEILING_ENV)
        if ceiling:
            try:
                value = int(ceiling)
                if value < 1:
                    raise ValueError(ceiling)
                config = config.with_overrides(ceiling=value)
            except ValueError:
                self.logger.warning(f"Ignoring invalid {CEILING_ENV}={ceiling!r}")
        level = os.getenv(LOG_LEVEL_ENV)
        if level:
            config = config.with_overrides(log_level=level.upper())
        return config

    def clamp_ceiling(self, ceiling: int) -> int:
        """超过硬上限的 ceiling 截断并告警"""
        if ceiling > HARD_CEILING:
            self.logger.warning(f"Ceiling {ceiling} exceeds hard maximum {HARD_CEILING}, clamping")
            return HARD_CEILING
        return ceiling
