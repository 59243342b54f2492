"""
基础设施层
提供日志管理、配置管理、原子文件写入等基础功能
"""

from .log_manager import LogManager, get_logger
from .config_manager import ConfigManager, LabConfig
from .file_writer import write_atomic

__all__ = [
    "LogManager",
    "get_logger",
    "ConfigManager",
    "LabConfig",
    "write_atomic",
]
