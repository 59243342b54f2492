"""
原子文件写入
先写同目录临时文件，再 os.replace 覆盖目标
"""
import os
import tempfile
from pathlib import Path
from typing import Union

from .log_manager import get_logger

logger = get_logger("FileWriter")


def write_atomic(path: Union[str, Path], content: str) -> Path:
    """
    原子地写入文本文件 (UTF-8, LF 换行)

    Args:
        path: 目标路径
        content: 文件内容

    Returns:
        Path: 写入的目标路径
    """
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, temp_name = tempfile.mkstemp(prefix=f".{target.name}.", suffix=".tmp", dir=target.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as f:
            f.write(content)
        os.replace(temp_name, target)
    except Exception:
        Path(temp_name).unlink(missing_ok=True)
        raise
    logger.debug(f"Wrote {len(content)} chars to {target}")
    return target
