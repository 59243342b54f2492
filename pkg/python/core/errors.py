"""
领域异常定义
CLI 根据异常类型映射稳定的退出码
"""
from typing import Optional, Tuple


class PrefixLabError(Exception):
    """所有领域异常的基类"""


class GraphParseError(PrefixLabError, ValueError):
    """机器图文件解析失败"""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class InvalidMachineError(PrefixLabError, ValueError):
    """机器表示不满足不变量"""


class DuplicateCodewordError(InvalidMachineError):
    """同一码字出现两次"""

    def __init__(self, codeword):
        self.codeword = codeword
        super().__init__(f"duplicate codeword {codeword}")


class PrefixViolationError(InvalidMachineError):
    """码字集合不是前缀无关的"""

    def __init__(self, pair: Tuple):
        self.pair = pair
        prefix, extension = pair
        super().__init__(f"prefix violation: {prefix} is a prefix of {extension}")


class EnumerationCeilingError(PrefixLabError, RuntimeError):
    """枚举候选数超过上限"""

    def __init__(self, requested: int, ceiling: int):
        self.requested = requested
        self.ceiling = ceiling
        super().__init__(f"enumeration of {requested} candidates exceeds ceiling {ceiling}")


class NoDuplicatePreimageError(PrefixLabError, ValueError):
    """没有任何符号拥有两个以上的码字"""

    def __init__(self):
        super().__init__("no symbol has a preimage with at least two codewords")
