"""
二进制串
长度-字典序与自然数的双射 φ(s)=1s-1，以及配对函数 b
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterator, Tuple

Rank = int

EMPTY_TEXT = "-"
_BINARY = frozenset("01")


@total_ordering
@dataclass(frozen=True, slots=True)
class BitString:
    """不可变的有限二进制串，空串 λ 以 "-" 书写"""
    bits: str = ""

    def __post_init__(self):
        if not isinstance(self.bits, str):
            raise TypeError(f"BitString expects str, got {type(self.bits).__name__}")
        if self.bits and not _BINARY.issuperset(self.bits):
            raise ValueError(f"not a binary string: {self.bits!r}")

    @classmethod
    def parse(cls, text: str) -> BitString:
        """从文本编码解析 ("-" 表示 λ)"""
        if text == EMPTY_TEXT:
            return cls("")
        if not text:
            raise ValueError("empty token; write '-' for the empty string")
        return cls(text)

    @classmethod
    def of_length(cls, n: int) -> Iterator[BitString]:
        """按字典序生成所有长度为 n 的串"""
        if n == 0:
            yield cls("")
            return
        for i in range(1 << n):
            yield cls(format(i, f"0{n}b"))

    @property
    def text(self) -> str:
        return self.bits if self.bits else EMPTY_TEXT

    def __str__(self) -> str:
        return self.text

    def __len__(self) -> int:
        return len(self.bits)

    def __add__(self, other: BitString) -> BitString:
        return BitString(self.bits + other.bits)

    def __lt__(self, other: BitString) -> bool:
        if not isinstance(other, BitString):
            return NotImplemented
        return (len(self.bits), self.bits) < (len(other.bits), other.bits)

    def startswith(self, other: BitString) -> bool:
        return self.bits.startswith(other.bits)


LAMBDA = BitString("")


def rank_of(s: BitString) -> Rank:
    """φ(s) = 1s - 1，λ 的秩为 0"""
    return int("1" + s.bits, 2) - 1


def string_of(n: Rank) -> BitString:
    """rank_of 的逆映射"""
    if n < 0:
        raise ValueError(f"rank must be non-negative, got {n}")
    return BitString(bin(n + 1)[3:])


def cantor(m: int, n: int) -> int:
    return (m + n) * (m + n + 1) // 2 + n


def uncantor(z: int) -> Tuple[int, int]:
    """用三角根反解 cantor"""
    w = (math.isqrt(8 * z + 1) - 1) // 2
    n = z - w * (w + 1) // 2
    return w - n, n


def pair(s: BitString, t: BitString) -> BitString:
    """配对函数 b(s,t)：经秩提升的 Cantor 配对"""
    return string_of(cantor(rank_of(s), rank_of(t)))


def unpair(u: BitString) -> Tuple[BitString, BitString]:
    m, n = uncantor(rank_of(u))
    return string_of(m), string_of(n)


def pair_index(s: BitString, i: int) -> int:
    """b(s, i) 作为自然数的取值，即 rank_of(pair(s, string_of(i)))"""
    return rank_of(pair(s, string_of(i)))
