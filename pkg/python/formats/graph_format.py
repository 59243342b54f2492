"""
机器图文件格式
UTF-8，每行 `<码字>\t<符号>`，"-" 表示 λ，"#" 开头为注释，行序即枚举顺序
"""
from pathlib import Path
from typing import List, Union

from core.bitstring import BitString
from core.errors import GraphParseError
from core.machine import Entry, MachineGraph
from infrastructure.log_manager import get_logger

logger = get_logger("GraphFormat")


def _parse_token(token: str, line_number: int) -> BitString:
    try:
        return BitString.parse(token)
    except ValueError as e:
        raise GraphParseError(f"bad token {token!r}: {e}", line_number) from e


def parse_entries(text: Union[str, bytes]) -> List[Entry]:
    """解析条目，不做不变量校验"""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise GraphParseError(f"not UTF-8: {e}") from e

    entries: List[Entry] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r")
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise GraphParseError(f"expected '<codeword>\\t<symbol>', got {line!r}", line_number)
        codeword, symbol = fields
        entries.append((_parse_token(codeword, line_number), _parse_token(symbol, line_number)))
    return entries


def load_graph(text: Union[str, bytes]) -> MachineGraph:
    """
    解析并校验机器图

    Raises:
        GraphParseError: 行格式错误或出现 {0,1,-} 之外的字符
        DuplicateCodewordError: 码字重复
        PrefixViolationError: 违反前缀无关性（异常中带有冲突对）
    """
    return MachineGraph(parse_entries(text))


def dump_graph(graph: MachineGraph) -> str:
    return "".join(f"{p.text}\t{s.text}\n" for p, s in graph)


def read_graph_file(path: Union[str, Path], validate: bool = True) -> MachineGraph:
    """从文件读取机器图；validate=False 时返回未校验的表示"""
    data = Path(path).read_bytes()
    entries = parse_entries(data)
    logger.debug(f"Read {len(entries)} entries from {path}")
    return MachineGraph(entries) if validate else MachineGraph.unchecked(entries)
