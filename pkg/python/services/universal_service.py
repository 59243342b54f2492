"""
通用机器服务
具体的通用前缀无关机器 U、按预算枚举停机程序、H 的上界与 m 的下界
"""
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from core.bitstring import BitString, pair, string_of
from core.desk_machine import DeskMachine, Status
from core.dyadic import Dyadic
from core.errors import EnumerationCeilingError, InvalidMachineError
from core.machine import INFINITY, Complexity, MachineGraph
from infrastructure.config_manager import DEFAULT_CEILING
from infrastructure.log_manager import get_logger


@dataclass(frozen=True, order=True)
class Budgets:
    """枚举预算：最大程序长度 (位) 与解释器步数"""
    max_program_length: int
    max_steps: int

    def __post_init__(self):
        if self.max_program_length < 0 or self.max_steps < 0:
            raise ValueError(f"budgets must be non-negative: {self}")

    def covers(self, other: 'Budgets') -> bool:
        return self.max_program_length >= other.max_program_length and self.max_steps >= other.max_steps


@dataclass(frozen=True)
class RunResult:
    """runU 的结果"""
    halted: bool
    output: Optional[BitString]
    bits_read: int
    steps: int = 0


@dataclass(frozen=True)
class BudgetedUniversal:
    """U 与其在给定预算下物化的有限表示"""
    budgets: Budgets
    graph: MachineGraph
    steps: Dict[BitString, int] = field(default_factory=dict, compare=False, repr=False)

    @property
    def max_program_length(self) -> int:
        return self.budgets.max_program_length

    @property
    def max_steps(self) -> int:
        return self.budgets.max_steps

    @classmethod
    def from_graph(cls, graph: MachineGraph, budgets: Budgets) -> 'BudgetedUniversal':
        """包装从文件读入的 U 图"""
        return cls(budgets=budgets, graph=graph)


@dataclass(frozen=True)
class ComplexityEstimate:
    """H_U(s) 的上界及其见证程序"""
    upper_bound: Complexity
    witness: Optional[BitString]
    budgets: Budgets


@dataclass(frozen=True)
class SemiMeasureEstimate:
    """按预算得到的普适半测度下界"""
    mass: Dict[BitString, Dyadic]
    budgets: Budgets

    def of(self, s: BitString) -> Dyadic:
        return self.mass.get(s, Dyadic())

    def total(self) -> Dyadic:
        return Dyadic.sum(self.mass.values())


def run_u(p: BitString, max_steps: int) -> RunResult:
    """
    在 U 上运行程序 p

    仅当解释器在 max_steps 内恰好读完 |p| 位后停机时 U(p) 有定义。
    """
    machine = DeskMachine()
    bits = p.bits
    while True:
        status = machine.advance(max_steps)
        if status is Status.NEED_BIT:
            if machine.bits_read >= len(bits):
                return RunResult(False, None, machine.bits_read, machine.steps)
            machine.feed(1 if bits[machine.bits_read] == "1" else 0)
            continue
        if status is Status.HALTED and machine.bits_read == len(bits):
            return RunResult(True, BitString(machine.output_bits()), machine.bits_read, machine.steps)
        return RunResult(False, None, machine.bits_read, machine.steps)


def _explore(root: DeskMachine, prefix: str, budgets: Budgets) -> List[Tuple[int, str, str]]:
    """深度优先搜索程序树，在每次请求输入位时分叉"""
    found: List[Tuple[int, str, str]] = []
    pending = [(root, prefix)]
    while pending:
        machine, bits = pending.pop()
        status = machine.advance(budgets.max_steps)
        if status is Status.HALTED:
            found.append((machine.steps, bits, machine.output_bits()))
        elif status is Status.NEED_BIT and len(bits) < budgets.max_program_length:
            for bit in (1, 0):
                child = machine.fork()
                child.feed(bit)
                pending.append((child, bits + str(bit)))
    return found


class UniversalService:
    """
    通用机器服务
    负责枚举、缓存和基于枚举结果的估计
    """

    def __init__(self, ceiling: int = DEFAULT_CEILING, workers: int = 1):
        """
        初始化通用机器服务

        Args:
            ceiling: 枚举候选程序数上限 (2^{L+1} 不得超过)
            workers: 并行搜索子树的线程数
        """
        self.logger = get_logger("UniversalService")
        self.ceiling = ceiling
        self.workers = max(1, workers)
        self._cache: Dict[Budgets, BudgetedUniversal] = {}
        self._lock = threading.Lock()

    def enumerate(self, max_program_length: int, max_steps: int) -> BudgetedUniversal:
        """
        枚举所有 |p| ≤ max_program_length 且在 max_steps 内停机的程序

        顺序为 (步数, 长度-字典序)。

        Raises:
            EnumerationCeilingError: 2^{L+1} 超过上限
        """
        budgets = Budgets(max_program_length, max_steps)
        with self._lock:
            cached = self._cache.get(budgets)
        if cached is not None:
            return cached

        candidates = 1 << (max_program_length + 1)
        if candidates > self.ceiling:
            raise EnumerationCeilingError(candidates, self.ceiling)

        found = self._search(budgets)
        found.sort(key=lambda item: (item[0], len(item[1]), item[1]))
        entries = [(BitString(p), BitString(out)) for _, p, out in found]
        graph = MachineGraph.unchecked(entries)
        try:
            graph.validate()
        except InvalidMachineError as e:
            # 读满 |p| 位即停机的约定保证不会发生
            self.logger.error(f"Enumerated graph failed validation: {e}")
            raise
        universal = BudgetedUniversal(
            budgets=budgets,
            graph=graph,
            steps={BitString(p): steps for steps, p, _ in found},
        )
        self.logger.info(
            f"Enumerated U at maxLen={max_program_length}, maxSteps={max_steps}: {len(graph)} halting programs"
        )
        with self._lock:
            self._cache[budgets] = universal
        return universal

    def _search(self, budgets: Budgets) -> List[Tuple[int, str, str]]:
        root = DeskMachine()
        if self.workers == 1 or budgets.max_program_length == 0:
            return _explore(root, "", budgets)

        # 在通道位处拆分为两棵互不相交的子树
        status = root.advance(budgets.max_steps)
        if status is not Status.NEED_BIT:
            return _explore(root, "", budgets)
        subtrees = []
        for bit in (0, 1):
            child = root.fork()
            child.feed(bit)
            subtrees.append((child, str(bit)))
        with ThreadPoolExecutor(max_workers=min(self.workers, len(subtrees))) as pool:
            results = pool.map(lambda item: _explore(item[0], item[1], budgets), subtrees)
        return [found for chunk in results for found in chunk]

    def approx_h(self, s: BitString, budgets: Budgets) -> ComplexityEstimate:
        """H_U(s) 的上界 H̃(s)，无见证时为无穷"""
        universal = self.enumerate(budgets.max_program_length, budgets.max_steps)
        witness = universal.graph.canonical_program(s)
        if witness is None:
            return ComplexityEstimate(INFINITY, None, budgets)
        return ComplexityEstimate(len(witness), witness, budgets)

    def approx_joint_h(self, n: int, s: BitString, budgets: Budgets) -> ComplexityEstimate:
        """H̃(n, s) = H̃(b(n, s))"""
        return self.approx_h(pair(string_of(n), s), budgets)

    def approx_m(self, budgets: Budgets) -> SemiMeasureEstimate:
        """m̃(s) = Σ_{U(p)=s} 2^{-|p|}，对枚举到的程序精确求和"""
        universal = self.enumerate(budgets.max_program_length, budgets.max_steps)
        mass: Dict[BitString, Dyadic] = {}
        for p, s in universal.graph:
            mass[s] = mass.get(s, Dyadic()) + Dyadic.power_of_half(len(p))
        return SemiMeasureEstimate(mass=mass, budgets=budgets)
