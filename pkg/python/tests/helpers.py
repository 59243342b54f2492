"""测试辅助：可复现的随机码本与随机机器"""
import random
import sys
from pathlib import Path
from typing import List, Optional, Sequence

sys.path.insert(0, str(Path(__file__).parent.parent))

from core.bitstring import BitString
from core.machine import MachineGraph


def random_codebook(rng: random.Random, size: int, max_length: int, allow_empty: bool = False) -> List[BitString]:
    """从随机生长的二叉树取叶子，得到前缀无关码本"""
    leaves = [""] if allow_empty else ["0", "1"]
    while len(leaves) < size:
        growable = [i for i, w in enumerate(leaves) if len(w) < max_length]
        if not growable:
            break
        word = leaves.pop(rng.choice(growable))
        leaves.extend([word + "0", word + "1"])
    rng.shuffle(leaves)
    return [BitString(w) for w in leaves[:size]]


def mutate_codebook(rng: random.Random, codebook: List[BitString]) -> List[BitString]:
    """加入一个与已有码字构成前缀关系的码字"""
    victim = rng.choice(codebook).bits
    if victim and rng.random() < 0.5:
        extra = victim[: rng.randrange(len(victim))]
    else:
        extra = victim + "".join(rng.choice("01") for _ in range(rng.randint(1, 3)))
    mutated = list(codebook) + [BitString(extra)]
    rng.shuffle(mutated)
    return mutated


def pairwise_prefix_free(codewords: Sequence[BitString]) -> bool:
    """O(k²) 的定义式判定"""
    words = list(codewords)
    for i, a in enumerate(words):
        for j, b in enumerate(words):
            if i != j and b.bits.startswith(a.bits):
                return False
    return True


def random_machine(rng: random.Random, max_entries: int = 64, max_length: int = 12,
                   symbols: Optional[Sequence[BitString]] = None) -> MachineGraph:
    """随机有限机器：随机码本配上随机符号，条目顺序随机"""
    if symbols is None:
        symbols = [BitString(format(i, "b")[1:]) for i in range(1, 16)]
    size = rng.randint(1, max_entries)
    codebook = random_codebook(rng, size, max_length)
    return MachineGraph((p, rng.choice(symbols)) for p in codebook)


def random_machine_with_duplicate(rng: random.Random, max_entries: int, max_length: int,
                                  symbols: Sequence[BitString]) -> MachineGraph:
    """至少有一个符号拥有两个码字的随机机器"""
    while True:
        machine = random_machine(rng, max_entries, max_length, symbols)
        if any(len(machine.preimage(s)) >= 2 for s in machine.range()):
            return machine


def graph(*pairs: str) -> MachineGraph:
    """由文本对构造机器，例如 graph("00", "-", "01", "-")"""
    it = iter(pairs)
    return MachineGraph((BitString.parse(p), BitString.parse(s)) for p, s in zip(it, it))
