"""
前缀无关机器的有限表示
MachineGraph 保存按枚举顺序排列的 (码字, 符号) 对
"""
from __future__ import annotations

import math
from collections import Counter
from typing import Dict, Iterable, Iterator, List, Optional, Tuple, Union

from .bitstring import BitString
from .dyadic import Dyadic
from .errors import DuplicateCodewordError, PrefixViolationError
from .prefix_trie import find_prefix_violation

Entry = Tuple[BitString, BitString]
Complexity = Union[int, float]  # 自然数或 math.inf

INFINITY = math.inf


def kraft_sum(codewords: Iterable[BitString]) -> Dyadic:
    """精确计算 Σ 2^{-|p|}"""
    by_length = Counter(len(p) for p in codewords)
    if not by_length:
        return Dyadic()
    top = max(by_length)
    return Dyadic(sum(count << (top - length) for length, count in by_length.items()), top)


class MachineGraph:
    """
    前缀无关机器的有限表示

    条目顺序即枚举顺序 (p_1,s_1),(p_2,s_2),…，各变换依赖该顺序。
    构造时校验码字互异且前缀无关。
    """

    def __init__(self, entries: Iterable[Entry] = ()):
        self._entries: Tuple[Entry, ...] = tuple(entries)
        self._by_codeword: Dict[BitString, BitString] = {}
        self._by_symbol: Dict[BitString, List[BitString]] = {}
        self._index()
        self.validate()

    @classmethod
    def unchecked(cls, entries: Iterable[Entry]) -> MachineGraph:
        """不做校验地构造，仅供校验套件检查非法文件"""
        graph = cls.__new__(cls)
        graph._entries = tuple(entries)
        graph._by_codeword = {}
        graph._by_symbol = {}
        graph._index()
        return graph

    def _index(self):
        for codeword, symbol in self._entries:
            self._by_codeword.setdefault(codeword, symbol)
            self._by_symbol.setdefault(symbol, []).append(codeword)

    def duplicate_codeword(self) -> Optional[BitString]:
        if len(self._by_codeword) == len(self._entries):
            return None
        seen = set()
        for codeword, _ in self._entries:
            if codeword in seen:
                return codeword
            seen.add(codeword)
        return None

    def prefix_violation(self) -> Optional[Tuple[BitString, BitString]]:
        return find_prefix_violation(self._by_codeword)

    def validate(self):
        """
        校验不变量

        Raises:
            DuplicateCodewordError: 码字重复
            PrefixViolationError: 码字集合不是前缀无关的
        """
        duplicate = self.duplicate_codeword()
        if duplicate is not None:
            raise DuplicateCodewordError(duplicate)
        violation = self.prefix_violation()
        if violation is not None:
            raise PrefixViolationError(violation)

    @property
    def entries(self) -> Tuple[Entry, ...]:
        return self._entries

    def __iter__(self) -> Iterator[Entry]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MachineGraph):
            return NotImplemented
        return self._entries == other._entries

    def __repr__(self) -> str:
        return f"MachineGraph({len(self._entries)} entries)"

    def codewords(self) -> List[BitString]:
        return [p for p, _ in self._entries]

    def range(self) -> List[BitString]:
        """值域中的符号，按首次出现顺序"""
        return list(self._by_symbol)

    def max_codeword_length(self) -> int:
        return max((len(p) for p, _ in self._entries), default=0)

    def evaluate(self, p: BitString) -> Optional[BitString]:
        """C(p)，p 不是码字时返回 None"""
        return self._by_codeword.get(p)

    def preimage(self, s: BitString) -> List[BitString]:
        """C^{-1}(s)，按枚举顺序"""
        return list(self._by_symbol.get(s, ()))

    def complexity_of(self, s: BitString) -> Complexity:
        """H_C(s)，值域外为 math.inf"""
        return min((len(p) for p in self._by_symbol.get(s, ())), default=INFINITY)

    def canonical_program(self, s: BitString) -> Optional[BitString]:
        """长度-字典序最小的码字 s*"""
        return min(self._by_symbol.get(s, ()), default=None)

    def kraft_sum(self) -> Dyadic:
        return kraft_sum(self._by_codeword)

    def count_below(self, n: int) -> int:
        """#{s : H_C(s) < n}"""
        return sum(1 for s in self._by_symbol if self.complexity_of(s) < n)

    def subset_of(self, other: MachineGraph) -> bool:
        return set(self._entries) <= set(other._entries)

