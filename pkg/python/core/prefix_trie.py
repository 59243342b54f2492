"""
路径压缩二叉前缀树
用于前缀无关性检查；边标签为子串，长码字（如 q0^k1 族）只占少量节点
"""
from typing import Dict, Iterable, List, Optional, Tuple

from .bitstring import BitString


class _Node:
    __slots__ = ("edges", "word")

    def __init__(self, word: Optional[str] = None):
        # 首字符 -> [边标签, 子节点]
        self.edges: Dict[str, List] = {}
        self.word = word


def _common_prefix_length(word: str, pos: int, label: str) -> int:
    """word[pos:] 与 label 的最长公共前缀长度（首字符已知相同）"""
    lo, hi = 1, min(len(label), len(word) - pos)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if word.startswith(label[:mid], pos):
            lo = mid
        else:
            hi = mid - 1
    return lo


class PrefixTrie:
    """码字集合的前缀树，插入时报告冲突码字"""

    def __init__(self):
        self._root = _Node()
        self._size = 0

    def __len__(self) -> int:
        return self._size

    def insert(self, codeword: BitString) -> Optional[BitString]:
        """
        插入码字

        Returns:
            None 表示成功；否则返回与之冲突（相等或构成前缀关系）的已有码字
        """
        conflict = self._insert(codeword.bits)
        if conflict is None:
            self._size += 1
            return None
        return BitString(conflict)

    def _insert(self, word: str) -> Optional[str]:
        node = self._root
        pos = 0
        while True:
            if node.word is not None:
                return node.word
            if pos == len(word):
                if node.edges:
                    return self._any_word(node)
                node.word = word
                return None
            edge = node.edges.get(word[pos])
            if edge is None:
                node.edges[word[pos]] = [word[pos:], _Node(word)]
                return None
            label, child = edge
            if word.startswith(label, pos):
                pos += len(label)
                node = child
                continue
            k = _common_prefix_length(word, pos, label)
            if pos + k == len(word):
                # word 是已有路径的真前缀
                return self._any_word(child)
            middle = _Node()
            middle.edges[label[k]] = [label[k:], child]
            middle.edges[word[pos + k]] = [word[pos + k:], _Node(word)]
            node.edges[word[pos]] = [label[:k], middle]
            return None

    @staticmethod
    def _any_word(node: _Node) -> str:
        while node.word is None:
            node = next(iter(node.edges.values()))[1]
        return node.word


def find_prefix_violation(codewords: Iterable[BitString]) -> Optional[Tuple[BitString, BitString]]:
    """
    返回第一个违反前缀无关性的 (前缀, 扩展) 对，按插入顺序检测

    相同码字返回 (w, w)。
    """
    trie = PrefixTrie()
    for codeword in codewords:
        conflict = trie.insert(codeword)
        if conflict is not None:
            if len(conflict) <= len(codeword):
                return conflict, codeword
            return codeword, conflict
    return None


def check_prefix_free(codewords: Iterable[BitString]) -> bool:
    return find_prefix_violation(codewords) is None
