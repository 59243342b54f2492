"""
机器构造服务
在有限表示上精确执行的四种图到图变换

所有输出仅相对于输入的枚举顺序是规范的。
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from core.bitstring import BitString, pair, pair_index, rank_of, string_of, unpair
from core.dyadic import Dyadic
from core.errors import EnumerationCeilingError, NoDuplicatePreimageError
from core.machine import Complexity, Entry, MachineGraph
from infrastructure.config_manager import DEFAULT_CEILING
from infrastructure.log_manager import get_logger
from services.census_service import CensusService
from services.universal_service import BudgetedUniversal


@dataclass(frozen=True)
class FinitePreimageResult:
    """有限原像构造的结果：机器 D 与上界函数 f"""
    machine: MachineGraph
    bound: Dict[BitString, int]


@dataclass(frozen=True)
class CensusSemiMeasure:
    """f(b(n,s)) = #S_C(n,s)·2^{-n-1} 及其伸缩求和恒等式的各项"""
    values: Dict[BitString, Dyadic]
    truncated_total: Dyadic
    tail: Dyadic
    kraft: Dyadic

    def identity_holds(self) -> bool:
        return self.truncated_total + self.tail == self.kraft


@dataclass
class WitnessRow:
    """最优性见证报告的一行"""
    symbol: BitString
    h_upper: Complexity
    limit: Complexity
    witness: Optional[BitString]
    complexity: Complexity

    @property
    def found(self) -> bool:
        return self.witness is not None


@dataclass(frozen=True)
class InfinitePreimageChoice:
    """选中的 s₀ 及其两个码字 q (长度-字典序最大) 和 r (最小)"""
    symbol: BitString
    q: BitString
    r: BitString


class TransformService:
    """机器构造服务"""

    def __init__(self, ceiling: int = DEFAULT_CEILING, census_service: Optional[CensusService] = None):
        self.logger = get_logger("TransformService")
        self.ceiling = ceiling
        self.census_service = census_service or CensusService()

    def finite_preimage(self, c: MachineGraph) -> FinitePreimageResult:
        """
        由 C 构造 D：只保留 |p_i| ≤ |p_{g(s_i)}| 的条目

        g(s) 为符号 s 首次出现的下标。H_D = H_C，Dom D ⊆ Dom C，
        且 #D^{-1}(s) ≤ 2^{|p_{g(s)}|+1} - 1。
        """
        c.validate()
        first_length: Dict[BitString, int] = {}
        kept: List[Entry] = []
        for p, s in c:
            cap = first_length.setdefault(s, len(p))
            if len(p) <= cap:
                kept.append((p, s))
        bound = {s: (1 << (length + 1)) - 1 for s, length in first_length.items()}
        dropped = len(c) - len(kept)
        self.logger.info(f"Finite-preimage transform kept {len(kept)} entries, dropped {dropped}")
        return FinitePreimageResult(machine=MachineGraph(kept), bound=bound)

    def optimal_finite_preimage(self, u: BudgetedUniversal) -> FinitePreimageResult:
        """作用于 U 的物化图（最优机器版本，最优性本身不做断言）"""
        return self.finite_preimage(u.graph)

    @staticmethod
    def choose_duplicate(v: MachineGraph) -> InfinitePreimageChoice:
        """按枚举顺序取第一个原像至少有两个码字的符号"""
        for s in v.range():
            codewords = v.preimage(s)
            if len(codewords) >= 2:
                return InfinitePreimageChoice(symbol=s, q=max(codewords), r=min(codewords))
        raise NoDuplicatePreimageError()

    def infinite_preimage(self, v: MachineGraph, per_symbol_budget: int) -> MachineGraph:
        """
        由 V 构造 W：每个值域符号获得 per_symbol_budget 个新增码字 q0^{b(s,i)}1

        s₀ 去掉 q 并加入 i = 0..budget-1 的全部族成员；其余符号只接纳
        满足 H_V(s) ≤ |q| + b(s,i) + 1 的成员 (集合 T(s))。

        Raises:
            NoDuplicatePreimageError: 所有原像都是单元素
            ValueError: per_symbol_budget < 1
        """
        if per_symbol_budget < 1:
            raise ValueError(f"per-symbol budget must be >= 1, got {per_symbol_budget}")
        v.validate()
        choice = self.choose_duplicate(v)
        q = choice.q.bits

        entries: List[Entry] = [(p, s) for p, s in v if p != choice.q]
        for s in v.range():
            if s == choice.symbol:
                indices = range(per_symbol_budget)
            else:
                indices = self._admitted_indices(s, len(q), v.complexity_of(s), per_symbol_budget)
            for i in indices:
                zeros = pair_index(s, i)
                entries.append((BitString(q + "0" * zeros + "1"), s))

        self.logger.info(
            f"Infinite-preimage transform: s0={choice.symbol}, q={choice.q}, r={choice.r}, "
            f"{len(entries)} entries at budget {per_symbol_budget}"
        )
        return MachineGraph(entries)

    @staticmethod
    def _admitted_indices(s: BitString, q_length: int, complexity: Complexity, budget: int) -> List[int]:
        admitted: List[int] = []
        i = 0
        while len(admitted) < budget:
            if complexity <= q_length + pair_index(s, i) + 1:
                admitted.append(i)
            i += 1
        return admitted

    def dense_optimal(self, u: BudgetedUniversal, max_codeword_length: int) -> MachineGraph:
        """
        V(qt) = s 当且仅当 U(q) = b(|qt|, s)

        对 U 的每个条目 (q, y)，若 unpair(y) = (n, s) 且 |q| ≤ n ≤ max_codeword_length，
        则加入全部 2^{n-|q|} 个码字 q·t。

        Raises:
            EnumerationCeilingError: 填充族总数超过上限
        """
        seeds = []
        total = 0
        for q, y in u.graph:
            first, s = unpair(y)
            n = rank_of(first)
            if len(q) <= n <= max_codeword_length:
                seeds.append((q, n, s))
                total += 1 << (n - len(q))
                if total > self.ceiling:
                    raise EnumerationCeilingError(total, self.ceiling)

        entries: List[Entry] = []
        for q, n, s in seeds:
            for t in BitString.of_length(n - len(q)):
                entries.append((q + t, s))
        self.logger.info(f"Dense construction planted {len(entries)} codewords from {len(seeds)} seeds")
        return MachineGraph(entries)

    def semi_measure_of_census(self, c: MachineGraph, max_n: int) -> CensusSemiMeasure:
        """
        f(b(n,s)) = #S_C(n,s)·2^{-n-1}，n ≤ max_n

        尾项 Σ_{s,l} slice(l,s)·2^{-max(l, max_n+1)} 使截断和精确等于 Kraft 和；
        当 max_n 不小于最长码字时即为 Σ_s #S_C(max_n,s)·2^{-max_n-1}。
        """
        c.validate()
        table = self.census_service.build(c, max_n)
        values: Dict[BitString, Dyadic] = {}
        truncated = Dyadic()
        for s in c.range():
            for n in range(max_n + 1):
                value = Dyadic.power_of_half(n + 1).scale(table.count(n, s))
                values[pair(string_of(n), s)] = value
                truncated = truncated + value

        tail = Dyadic.sum(
            Dyadic.power_of_half(max(len(p), max_n + 1)) for p in c.codewords()
        )
        return CensusSemiMeasure(values=values, truncated_total=truncated, tail=tail, kraft=c.kraft_sum())

    def optimality_witness_report(self, c: MachineGraph, u: BudgetedUniversal, n0: int) -> List[WitnessRow]:
        """
        对 U 值域中的每个 s，寻找 C 中 |p| ≤ H̃(s) + n0 的码字 (非规范性诊断)

        n0 由调用方给出。
        """
        table = self.census_service.build(c, u.graph.max_codeword_length() + n0)
        rows = []
        for s in sorted(u.graph.range(), key=rank_of):
            h_upper = u.graph.complexity_of(s)
            limit = h_upper + n0
            witness = None
            if table.count(limit, s) > 0:
                witness = min(p for p in c.preimage(s) if len(p) <= limit)
            rows.append(WitnessRow(symbol=s, h_upper=h_upper, limit=limit,
                                   witness=witness, complexity=c.complexity_of(s)))
        found = sum(1 for row in rows if row.found)
        self.logger.info(f"Optimality witness report: {found}/{len(rows)} symbols witnessed at n0={n0}")
        return rows
