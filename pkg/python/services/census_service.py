"""
码字普查服务
S_C(n,s) 计数表、按长度切片、定义域计数以及探索性包络报告
"""
import hashlib
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

import numpy as np

from core.bitstring import BitString, pair, rank_of, string_of
from core.machine import Complexity, MachineGraph
from formats.graph_format import dump_graph
from infrastructure.log_manager import get_logger
from services.universal_service import BudgetedUniversal

NON_NORMATIVE_NOTE = (
    "non-normative: H~ is an upper bound on H, so n - H~ underestimates n - H; "
    "these rows track empirical slack only and cannot falsify any bound"
)


def machine_id(graph: MachineGraph) -> str:
    """机器图规范文本的 SHA-256"""
    return hashlib.sha256(dump_graph(graph).encode("utf-8")).hexdigest()


@dataclass
class CensusTable:
    """
    普查表

    counts 只保存计数大于零的 (n, s)，slices 保存每个精确长度的计数。
    """
    counts: Dict[Tuple[int, BitString], int]
    slices: Dict[Tuple[int, BitString], int]
    max_n: int
    machine_id: str
    symbols: List[BitString] = field(default_factory=list)

    def count(self, n: int, s: BitString) -> int:
        """#S_C(n,s)"""
        if n <= self.max_n:
            return self.counts.get((n, s), 0)
        return sum(c for (l, sym), c in self.slices.items() if sym == s and l <= n)

    def slice(self, l: int, s: BitString) -> int:
        return self.slices.get((l, s), 0)

    def domain_count(self, n: int) -> int:
        return sum(self.count(n, s) for s in self.symbols)

    def rows(self) -> List[Tuple[int, BitString, int]]:
        """按 (n, rank(s)) 排序的非零行"""
        ordered = sorted(self.counts.items(), key=lambda item: (item[0][0], rank_of(item[0][1])))
        return [(n, s, count) for (n, s), count in ordered]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "machine": self.machine_id,
            "maxN": self.max_n,
            "rows": [{"n": n, "s": s.text, "count": count} for n, s, count in self.rows()],
        }


@dataclass
class EnvelopeRow:
    """包络报告行：log₂#S_C(n,s) - (n - H̃(n,s))"""
    n: int
    symbol: BitString
    count: int
    h_upper: Complexity
    log_ratio: float


@dataclass
class DomainRow:
    """定义域计数报告行"""
    n: int
    domain_count: int
    h_upper: Complexity
    exponent: float
    log_ratio: float


class CensusService:
    """码字普查服务"""

    def __init__(self):
        self.logger = get_logger("CensusService")

    def build(self, c: MachineGraph, max_n: int) -> CensusTable:
        """
        构建普查表 counts(n,s) = #S_C(n,s)，n ≤ max_n

        值域外的符号不出现（隐式为零）。
        """
        if max_n < 0:
            raise ValueError(f"max_n must be non-negative, got {max_n}")
        c.validate()
        counts: Dict[Tuple[int, BitString], int] = {}
        slices: Dict[Tuple[int, BitString], int] = {}
        for s in c.range():
            lengths = np.fromiter((len(p) for p in c.preimage(s)), dtype=np.int64)
            histogram = np.bincount(lengths, minlength=max_n + 1)
            for l in np.flatnonzero(histogram):
                slices[(int(l), s)] = int(histogram[l])
            cumulative = np.cumsum(histogram[: max_n + 1])
            for n in np.flatnonzero(cumulative):
                counts[(int(n), s)] = int(cumulative[n])
        table = CensusTable(counts=counts, slices=slices, max_n=max_n,
                            machine_id=machine_id(c), symbols=c.range())
        self.logger.info(f"Census of {len(c)} entries up to n={max_n}: {len(counts)} non-zero rows")
        return table

    @staticmethod
    def slice_counts(c: MachineGraph, l: int, s: BitString) -> int:
        """#\\overline{S_C}(l,s)：长度恰为 l 的码字数"""
        return sum(1 for p in c.preimage(s) if len(p) == l)

    @staticmethod
    def domain_count(c: MachineGraph, n: int) -> int:
        """#{p ∈ Dom C : |p| ≤ n}"""
        return sum(1 for p in c.codewords() if len(p) <= n)

    def envelope_report(self, u: BudgetedUniversal, c: MachineGraph, max_n: int) -> List[EnvelopeRow]:
        """
        每个 counts(n,s) > 0 的 (n,s)：计数、H̃(n,s) 及 log₂count - (n - H̃)

        H̃ 取自 u 的物化图，报告是非规范性的。
        """
        table = self.build(c, max_n)
        rows = []
        for n, s, count in table.rows():
            h_upper = u.graph.complexity_of(pair(string_of(n), s))
            rows.append(EnvelopeRow(n=n, symbol=s, count=count, h_upper=h_upper,
                                    log_ratio=float(np.log2(count) - (n - h_upper))))
        return rows

    def domain_report(self, u: BudgetedUniversal, c: MachineGraph, max_n: int) -> List[DomainRow]:
        """定义域计数与 n - H̃(n) 的对照 (非规范性)"""
        table = self.build(c, max_n)
        rows = []
        for n in range(max_n + 1):
            count = table.domain_count(n)
            h_upper = u.graph.complexity_of(string_of(n))
            exponent = n - h_upper
            # 计数为零时比值记为 -inf
            log_ratio = float(np.log2(count)) - exponent if count else float("-inf")
            rows.append(DomainRow(n=n, domain_count=count, h_upper=h_upper,
                                  exponent=exponent, log_ratio=log_ratio))
        return rows
