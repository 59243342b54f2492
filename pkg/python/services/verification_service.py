"""
校验服务
对机器图运行各模块的不变量检查，每项检查给出通过/失败及说明
"""
from dataclasses import dataclass
from typing import List, Optional

from core.bitstring import BitString
from core.dyadic import Dyadic
from core.machine import MachineGraph
from infrastructure.log_manager import get_logger
from services.census_service import CensusService

COUNTING_BOUND_MAX_N = 16
NAIVE_RESCAN_MAX_LENGTH = 12


@dataclass(frozen=True)
class CheckResult:
    """单项检查结果"""
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}" + (f": {self.detail}" if self.detail else "")


class VerificationService:
    """不变量校验套件"""

    def __init__(self, census_service: Optional[CensusService] = None, max_n: int = 12):
        self.logger = get_logger("VerificationService")
        self.census_service = census_service or CensusService()
        self.max_n = max_n

    def verify(self, machine: MachineGraph, source: Optional[MachineGraph] = None) -> List[CheckResult]:
        """
        运行全部检查

        Args:
            machine: 待检机器（可以是未校验的表示）
            source: 变换前的机器；给出时额外检查 H 保持
        """
        results = [self.check_distinct(machine), self.check_prefix_free(machine)]
        if all(r.passed for r in results):
            results.append(self.check_kraft(machine))
            results.append(self.check_census(machine))
            results.append(self.check_counting_bound(machine))
            if source is not None:
                results.append(self.check_complexity_preserved(machine, source))
        else:
            results.append(CheckResult("kraft", False, "requires a valid prefix-free machine"))

        failed = [r.name for r in results if not r.passed]
        if failed:
            self.logger.warning(f"Verification failed: {', '.join(failed)}")
        else:
            self.logger.info(f"Verification passed: {len(results)} checks")
        return results

    @staticmethod
    def check_distinct(machine: MachineGraph) -> CheckResult:
        duplicate = machine.duplicate_codeword()
        if duplicate is not None:
            return CheckResult("distinct-codewords", False, f"duplicate codeword {duplicate}")
        return CheckResult("distinct-codewords", True, f"{len(machine)} entries")

    @staticmethod
    def check_prefix_free(machine: MachineGraph) -> CheckResult:
        violation = machine.prefix_violation()
        if violation is not None:
            prefix, extension = violation
            return CheckResult("prefix-free", False, f"{prefix} is a prefix of {extension}")
        return CheckResult("prefix-free", True)

    @staticmethod
    def check_kraft(machine: MachineGraph) -> CheckResult:
        total = machine.kraft_sum()
        return CheckResult("kraft", total <= Dyadic(1), f"sum = {total}")

    def check_census(self, machine: MachineGraph) -> CheckResult:
        """普查表与 Kraft 和、定义域计数、朴素重扫的一致性"""
        top = machine.max_codeword_length()
        max_n = max(self.max_n, top)
        table = self.census_service.build(machine, max_n)
        symbols = machine.range()

        from_slices = Dyadic.sum(
            Dyadic.power_of_half(l).scale(count) for (l, _), count in table.slices.items()
        )
        if from_slices != machine.kraft_sum():
            return CheckResult("census", False, f"slice Kraft sum {from_slices} != {machine.kraft_sum()}")

        for n in range(max_n + 1):
            if table.domain_count(n) != self.census_service.domain_count(machine, n):
                return CheckResult("census", False, f"domain count mismatch at n={n}")
        for s in symbols:
            counts = [table.count(n, s) for n in range(max_n + 1)]
            if any(a > b for a, b in zip(counts, counts[1:])):
                return CheckResult("census", False, f"counts for {s} decrease in n")
            if counts[-1] != len(machine.preimage(s)):
                return CheckResult("census", False, f"final count for {s} != preimage size")

        if top <= NAIVE_RESCAN_MAX_LENGTH:
            mismatch = self._naive_rescan(machine, table, top)
            if mismatch:
                return CheckResult("census", False, mismatch)
        return CheckResult("census", True, f"{len(table.counts)} rows reconciled")

    @staticmethod
    def _naive_rescan(machine: MachineGraph, table, top: int) -> str:
        """逐个枚举长度 ≤ top 的串并求值，与普查表对比"""
        running = {}
        for n in range(top + 1):
            for p in BitString.of_length(n):
                s = machine.evaluate(p)
                if s is not None:
                    running[s] = running.get(s, 0) + 1
            for s in machine.range():
                if table.count(n, s) != running.get(s, 0):
                    return f"naive rescan disagrees at n={n}, s={s}"
        return ""

    @staticmethod
    def check_counting_bound(machine: MachineGraph) -> CheckResult:
        """#{s : H_C(s) < n} ≤ 2^n - 1，n ≤ 16"""
        for n in range(COUNTING_BOUND_MAX_N + 1):
            count = machine.count_below(n)
            if count > (1 << n) - 1:
                return CheckResult("counting-bound", False, f"{count} symbols with H < {n}")
        return CheckResult("counting-bound", True)

    @staticmethod
    def check_complexity_preserved(machine: MachineGraph, source: MachineGraph) -> CheckResult:
        """变换前后值域相同且每个符号的 H 相同"""
        if set(machine.range()) != set(source.range()):
            return CheckResult("complexity-preserved", False, "ranges differ")
        for s in source.range():
            before, after = source.complexity_of(s), machine.complexity_of(s)
            if before != after:
                return CheckResult("complexity-preserved", False, f"H({s}) changed from {before} to {after}")
        return CheckResult("complexity-preserved", True, f"{len(source.range())} symbols")
