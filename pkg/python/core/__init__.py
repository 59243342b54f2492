"""
核心类型与纯算法
"""
from .bitstring import BitString, LAMBDA, pair, rank_of, string_of, unpair
from .dyadic import Dyadic
from .machine import INFINITY, MachineGraph, kraft_sum
from .prefix_trie import PrefixTrie, check_prefix_free, find_prefix_violation

__all__ = [
    "BitString", "LAMBDA", "pair", "rank_of", "string_of", "unpair",
    "Dyadic",
    "INFINITY", "MachineGraph", "kraft_sum",
    "PrefixTrie", "check_prefix_free", "find_prefix_violation",
]
