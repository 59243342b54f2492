"""机器构造测试：有限原像、无限原像、稠密最优机器与普查半测度"""
import random
import sys
import unittest
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from core.bitstring import LAMBDA, BitString, pair, pair_index, rank_of, string_of, unpair
from core.dyadic import Dyadic
from core.errors import EnumerationCeilingError, NoDuplicatePreimageError
from core.machine import MachineGraph
from core.prefix_trie import check_prefix_free
from services.census_service import CensusService
from services.transform_service import TransformService
from services.universal_service import Budgets, BudgetedUniversal, UniversalService

from helpers import graph, random_machine, random_machine_with_duplicate

SMALL_SYMBOLS = [LAMBDA, BitString("0"), BitString("1")]


class TestFinitePreimage(unittest.TestCase):
    """H 保持且原像有限的机器 D"""

    def setUp(self):
        self.service = TransformService()

    def test_keeps_equal_length(self):
        result = self.service.finite_preimage(graph("00", "-", "01", "-", "1", "0"))
        self.assertEqual(result.machine, graph("00", "-", "01", "-", "1", "0"))
        self.assertEqual(result.bound, {LAMBDA: 7, BitString("0"): 3})

    def test_drops_longer(self):
        result = self.service.finite_preimage(graph("0", "-", "10", "-"))
        self.assertEqual(result.machine, graph("0", "-"))
        self.assertEqual(result.bound, {LAMBDA: 3})

    def test_distinct_symbols_unchanged(self):
        c = graph("0", "-", "10", "0", "11", "1")
        self.assertEqual(self.service.finite_preimage(c).machine, c)

    def test_random_machines(self):
        """200 台随机机器：H 保持、定义域包含、原像界、幂等"""
        rng = random.Random(2024)
        for _ in range(200):
            c = random_machine(rng, max_entries=64, max_length=12)
            result = self.service.finite_preimage(c)
            d = result.machine
            self.assertEqual(d.range(), c.range())
            for s in c.range():
                self.assertEqual(d.complexity_of(s), c.complexity_of(s))
                self.assertLessEqual(len(d.preimage(s)), result.bound[s])
                first_length = len(c.preimage(s)[0])
                self.assertEqual(result.bound[s], (1 << (first_length + 1)) - 1)
            self.assertTrue(d.subset_of(c))
            self.assertEqual(self.service.finite_preimage(d).machine, d)
            for n in range(17):
                self.assertLessEqual(d.count_below(n), (1 << n) - 1)

    def test_on_universal(self):
        u = UniversalService().enumerate(8, 100)
        result = self.service.optimal_finite_preimage(u)
        for s in u.graph.range():
            self.assertEqual(result.machine.complexity_of(s), u.graph.complexity_of(s))
            self.assertLessEqual(len(result.machine.preimage(s)), result.bound[s])
        self.assertTrue(result.machine.subset_of(u.graph))


class TestInfinitePreimage(unittest.TestCase):
    """每个值域符号获得无穷原像族 (截断到预算)"""

    def setUp(self):
        self.service = TransformService()

    def test_two_entry_example(self):
        w = self.service.infinite_preimage(graph("00", "-", "01", "-"), 2)
        self.assertEqual(pair_index(LAMBDA, 0), 0)
        expected = graph(
            "00", "-",
            "011", "-",
            "01" + "0" * pair_index(LAMBDA, 1) + "1", "-",
        )
        self.assertEqual(w, expected)

    def test_choice(self):
        choice = self.service.choose_duplicate(graph("1", "0", "01", "-", "000", "-", "001", "-"))
        self.assertEqual(choice.symbol, LAMBDA)
        self.assertEqual(choice.q, BitString("001"))
        self.assertEqual(choice.r, BitString("01"))

    def test_guard_set(self):
        """非 s₀ 符号只接纳 H_V(s) ≤ |q| + b(s,i) + 1 的成员"""
        v = graph("00", "-", "01", "-", "1", "0")
        w = self.service.infinite_preimage(v, 3)
        added = [p for p in w.preimage(BitString("0")) if p.bits.startswith("01")]
        self.assertEqual(len(added), 3)
        for p in added:
            self.assertGreaterEqual(len(p), v.complexity_of(BitString("0")))
            index = len(p) - 3
            self.assertIn(index, [pair_index(BitString("0"), i) for i in range(10)])

    def test_requires_duplicate(self):
        with self.assertRaises(NoDuplicatePreimageError):
            self.service.infinite_preimage(graph("0", "-", "1", "0"), 2)

    def test_rejects_zero_budget(self):
        with self.assertRaises(ValueError):
            self.service.infinite_preimage(graph("00", "-", "01", "-"), 0)

    def test_high_rank_symbol(self):
        """秩 30 的符号：族成员的 0 串长度为 b(s,i)，预算 100"""
        s = string_of(30)
        v = graph("00", "-", "01", "-", "1", s.text)
        w = self.service.infinite_preimage(v, 100)
        self.assertTrue(check_prefix_free(w.codewords()))
        self.assertEqual(w.complexity_of(s), 1)
        self.assertEqual(w.complexity_of(LAMBDA), 2)
        added = [p for p in w.preimage(s) if p != BitString("1")]
        self.assertEqual(len(added), 100)
        self.assertEqual([len(p) - 3 for p in added], [pair_index(s, i) for i in range(100)])
        for p in added:
            self.assertTrue(p.bits.startswith("01") and p.bits.endswith("1"))
            self.assertEqual(p.bits[2:-1], "0" * (len(p) - 3))

    def test_random_machines(self):
        """50 台随机机器，预算 100：前缀无关、H 保持、s₀ 原像 ≥ 100、随预算单调"""
        rng = random.Random(77)
        for _ in range(50):
            v = random_machine_with_duplicate(rng, max_entries=8, max_length=6, symbols=SMALL_SYMBOLS)
            choice = self.service.choose_duplicate(v)
            w = self.service.infinite_preimage(v, 100)
            self.assertTrue(check_prefix_free(w.codewords()))
            self.assertEqual(set(w.range()), set(v.range()))
            for s in v.range():
                self.assertEqual(w.complexity_of(s), v.complexity_of(s))
            self.assertGreaterEqual(len(w.preimage(choice.symbol)), 100)
            self.assertLessEqual(w.kraft_sum(), Dyadic(1))
            for n in range(17):
                self.assertLessEqual(w.count_below(n), (1 << n) - 1)
            larger = self.service.infinite_preimage(v, 200)
            self.assertTrue(w.subset_of(larger))


class TestDenseOptimal(unittest.TestCase):
    """V(qt) = s 当且仅当 U(q) = b(|qt|, s)"""

    def setUp(self):
        self.service = TransformService()

    def test_empty(self):
        u = BudgetedUniversal.from_graph(MachineGraph(), Budgets(0, 0))
        self.assertEqual(len(self.service.dense_optimal(u, 10)), 0)

    def test_padding_family(self):
        seed = pair(string_of(4), BitString("1"))
        u = BudgetedUniversal.from_graph(graph("01", seed.text, "1", pair(string_of(0), LAMBDA).text), Budgets(2, 10))
        v = self.service.dense_optimal(u, 6)
        self.assertEqual(v.preimage(BitString("1")), [BitString("01" + t.bits) for t in BitString.of_length(2)])
        # n = 0 < |"1"|，不种植
        self.assertEqual(len(v), 4)

    def test_length_cap(self):
        seed = pair(string_of(9), LAMBDA)
        u = BudgetedUniversal.from_graph(graph("0", seed.text), Budgets(1, 10))
        self.assertEqual(len(self.service.dense_optimal(u, 8)), 0)
        self.assertEqual(len(self.service.dense_optimal(u, 9)), 1 << 8)

    def test_ceiling(self):
        seed = pair(string_of(12), LAMBDA)
        u = BudgetedUniversal.from_graph(graph("0", seed.text), Budgets(1, 10))
        with self.assertRaises(EnumerationCeilingError):
            TransformService(ceiling=1000).dense_optimal(u, 12)

    def test_lower_bound_on_enumerated_universal(self):
        """U 取 (14, 10^4)：每个 n - H̃(n,s) ≥ 0 的 (n,s) 都有 #S_V(n,s) ≥ 2^{n - H̃(n,s)}"""
        u = UniversalService().enumerate(14, 10_000)
        v = self.service.dense_optimal(u, 14)
        self.assertTrue(check_prefix_free(v.codewords()))
        table = CensusService().build(v, 14)
        checked = 0
        for y in u.graph.range():
            first, s = unpair(y)
            n = rank_of(first)
            if n > 14:
                continue
            h_upper = u.graph.complexity_of(pair(first, s))
            if n - h_upper >= 0:
                self.assertGreaterEqual(table.count(n, s), 1 << (n - h_upper))
                checked += 1
        self.assertGreater(checked, 0)
        for n in range(17):
            self.assertLessEqual(v.count_below(n), (1 << n) - 1)


class TestCensusSemiMeasure(unittest.TestCase):
    """截断和 + 尾项 = Kraft 和"""

    def setUp(self):
        self.service = TransformService()

    def test_single_entry(self):
        measure = self.service.semi_measure_of_census(graph("0", "-"), 3)
        self.assertEqual(measure.values[pair(string_of(0), LAMBDA)], Dyadic())
        for n in range(1, 4):
            self.assertEqual(measure.values[pair(string_of(n), LAMBDA)], Dyadic.power_of_half(n + 1))
        self.assertEqual(measure.truncated_total, Dyadic(7, 4))
        self.assertEqual(measure.tail, Dyadic.power_of_half(4))
        self.assertEqual(measure.kraft, Dyadic.power_of_half(1))
        self.assertTrue(measure.identity_holds())

    def test_empty(self):
        measure = self.service.semi_measure_of_census(MachineGraph(), 5)
        self.assertEqual(measure.values, {})
        self.assertEqual(measure.truncated_total, Dyadic())
        self.assertTrue(measure.identity_holds())

    def test_random_machines(self):
        """100 台随机机器，含码字长于 max_n 的情形"""
        rng = random.Random(8)
        for i in range(100):
            c = random_machine(rng, max_entries=64, max_length=12)
            measure = self.service.semi_measure_of_census(c, i % 15)
            self.assertTrue(measure.identity_holds())
            self.assertLessEqual(measure.truncated_total, Dyadic(1))


class TestOptimalityWitness(unittest.TestCase):
    """对 U 值域中每个符号在 C 中寻找足够短的码字"""

    def test_universal_witnesses_itself(self):
        u = UniversalService().enumerate(8, 100)
        rows = TransformService().optimality_witness_report(u.graph, u, 0)
        self.assertEqual(len(rows), len(u.graph.range()))
        self.assertTrue(all(row.found for row in rows))
        self.assertEqual([rank_of(r.symbol) for r in rows], sorted(rank_of(r.symbol) for r in rows))

    def test_missing_witness(self):
        u = UniversalService().enumerate(6, 100)
        rows = TransformService().optimality_witness_report(graph("0", "-"), u, 1)
        by_symbol = {row.symbol: row for row in rows}
        self.assertTrue(by_symbol[LAMBDA].found)
        self.assertEqual(by_symbol[LAMBDA].witness, BitString("0"))
        self.assertFalse(by_symbol[BitString("0")].found)
        self.assertEqual(by_symbol[BitString("0")].complexity, float("inf"))


if __name__ == '__main__':
    unittest.main()
