"""
精确二进有理数
numerator / 2^exponent，规范形式下分子为奇数或零
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Any, Dict, Iterable


def _normalize(numerator: int, exponent: int):
    if numerator == 0:
        return 0, 0
    shift = min((numerator & -numerator).bit_length() - 1, exponent)
    return numerator >> shift, exponent - shift


@total_ordering
@dataclass(frozen=True, slots=True)
class Dyadic:
    """非负二进有理数，加法与比较均精确"""
    numerator: int = 0
    exponent: int = 0

    def __post_init__(self):
        if self.numerator < 0 or self.exponent < 0:
            raise ValueError(f"Dyadic must be non-negative: {self.numerator}/2^{self.exponent}")
        num, exp = _normalize(self.numerator, self.exponent)
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "exponent", exp)

    @classmethod
    def power_of_half(cls, k: int) -> Dyadic:
        """2^{-k}"""
        return cls(1, k)

    @classmethod
    def sum(cls, values: Iterable[Dyadic]) -> Dyadic:
        total = cls()
        for value in values:
            total = total + value
        return total

    def __add__(self, other: Dyadic) -> Dyadic:
        if not isinstance(other, Dyadic):
            return NotImplemented
        exp = max(self.exponent, other.exponent)
        num = (self.numerator << (exp - self.exponent)) + (other.numerator << (exp - other.exponent))
        return Dyadic(num, exp)

    def scale(self, count: int) -> Dyadic:
        """乘以非负整数"""
        return Dyadic(self.numerator * count, self.exponent)

    def _cross(self, other: Dyadic):
        exp = max(self.exponent, other.exponent)
        return (self.numerator << (exp - self.exponent),
                other.numerator << (exp - other.exponent))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Dyadic):
            return (self.numerator, self.exponent) == (other.numerator, other.exponent)
        if isinstance(other, (int, Fraction)):
            return self.to_fraction() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.to_fraction())

    def __lt__(self, other: object) -> bool:
        if isinstance(other, Dyadic):
            left, right = self._cross(other)
            return left < right
        if isinstance(other, (int, Fraction)):
            return self.to_fraction() < other
        return NotImplemented

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def to_dict(self) -> Dict[str, Any]:
        """JSON 编码 {"num": str, "exp": int}"""
        return {"num": str(self.numerator), "exp": self.exponent}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> Dyadic:
        return cls(int(data["num"]), int(data["exp"]))

    def __str__(self) -> str:
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/2^{self.exponent}"
