"""
桌面规模的通用前缀无关机器 U 的解释器

输入逐位按需读取：只有在解释器请求时才提供下一位。
首位 1 为字面通道 1·γ(|s|+1)·s；首位 0 为字节码通道，3 位操作码：

    000 HALT     停机，输出即结果
    001 READBIT  读入一位并压栈
    010 OUT0     输出追加 0
    011 OUT1     输出追加 1
    100 DUPTOP   复制栈顶
    101 JNZ      弹出栈顶，若为 1 跳回循环头（前一个 JNZ 之后的指令，或 0 号指令）
    110 PUSH0    压入 0
    111 FLIPTOP  栈顶取反

空栈上的 DUPTOP/JNZ/FLIPTOP 为故障，视作不停机。
"""
from __future__ import annotations

from enum import Enum
from typing import List, Optional

HALT, READBIT, OUT0, OUT1, DUPTOP, JNZ, PUSH0, FLIPTOP = range(8)


class Status(Enum):
    """一次 advance 的结束原因"""
    HALTED = 0
    NEED_BIT = 1
    TIMEOUT = 2
    FAULT = 3


class Phase(Enum):
    CHANNEL = 0
    GAMMA_ZEROS = 1
    GAMMA_BITS = 2
    LITERAL = 3
    BYTECODE = 4
    DONE = 5


def elias_gamma(n: int) -> str:
    """γ(n)：⌊log₂n⌋ 个 0 后接 n 的二进制，长度 2⌊log₂n⌋+1"""
    if n < 1:
        raise ValueError(f"gamma code needs n >= 1, got {n}")
    body = bin(n)[2:]
    return "0" * (len(body) - 1) + body


class DeskMachine:
    """
    可分叉的解释器状态

    advance() 运行到停机、故障、超时或需要下一位为止；
    feed() 提供请求的位；fork() 复制状态用于程序树搜索。
    """

    def __init__(self):
        self.phase = Phase.CHANNEL
        self.steps = 0
        self.bits_read = 0
        self._pending: Optional[int] = None

        # 字面通道
        self._gamma_zeros = 0
        self._gamma_value = 0
        self._gamma_remaining = 0
        self._literal_remaining = 0

        # 字节码通道
        self._fetch: List[int] = []
        self.code: List[int] = []
        self.pc = 0
        self.stack: List[int] = []

        self.output: List[str] = []

    def fork(self) -> DeskMachine:
        twin = DeskMachine.__new__(DeskMachine)
        twin.__dict__.update(self.__dict__)
        twin._fetch = list(self._fetch)
        twin.code = list(self.code)
        twin.stack = list(self.stack)
        twin.output = list(self.output)
        return twin

    def feed(self, bit: int):
        if self._pending is not None:
            raise RuntimeError("previous bit not consumed")
        self._pending = bit

    def output_bits(self) -> str:
        return "".join(self.output)

    def _take(self) -> Optional[int]:
        bit = self._pending
        if bit is not None:
            self._pending = None
            self.bits_read += 1
        return bit

    def advance(self, max_steps: int) -> Status:
        """运行直到需要外部动作"""
        while True:
            if self.phase is Phase.DONE:
                return Status.HALTED
            if self.steps >= max_steps:
                return Status.TIMEOUT
            if self.phase is Phase.BYTECODE:
                status = self._execute()
            else:
                status = self._literal_step()
            if status is not None:
                return status

    def _literal_step(self) -> Optional[Status]:
        phase = self.phase
        if phase is Phase.LITERAL and self._literal_remaining == 0:
            self.steps += 1
            self.phase = Phase.DONE
            return None
        bit = self._take()
        if bit is None:
            return Status.NEED_BIT
        self.steps += 1
        if phase is Phase.CHANNEL:
            self.phase = Phase.GAMMA_ZEROS if bit else Phase.BYTECODE
        elif phase is Phase.GAMMA_ZEROS:
            if bit:
                self._gamma_value = 1
                self._gamma_remaining = self._gamma_zeros
                self._finish_gamma_if_ready()
            else:
                self._gamma_zeros += 1
        elif phase is Phase.GAMMA_BITS:
            self._gamma_value = (self._gamma_value << 1) | bit
            self._gamma_remaining -= 1
            self._finish_gamma_if_ready()
        else:
            self.output.append("1" if bit else "0")
            self._literal_remaining -= 1
        return None

    def _finish_gamma_if_ready(self):
        if self._gamma_remaining == 0:
            self._literal_remaining = self._gamma_value - 1
            self.phase = Phase.LITERAL
        else:
            self.phase = Phase.GAMMA_BITS

    def _execute(self) -> Optional[Status]:
        if self.pc == len(self.code):
            while len(self._fetch) < 3:
                bit = self._take()
                if bit is None:
                    return Status.NEED_BIT
                self._fetch.append(bit)
            a, b, c = self._fetch
            self.code.append((a << 2) | (b << 1) | c)
            self._fetch = []
        op = self.code[self.pc]
        stack = self.stack

        if op == READBIT:
            bit = self._take()
            if bit is None:
                return Status.NEED_BIT
            stack.append(bit)
        elif op in (DUPTOP, JNZ, FLIPTOP) and not stack:
            self.steps += 1
            return Status.FAULT
        elif op == DUPTOP:
            stack.append(stack[-1])
        elif op == FLIPTOP:
            stack[-1] ^= 1
        elif op == PUSH0:
            stack.append(0)
        elif op == OUT0:
            self.output.append("0")
        elif op == OUT1:
            self.output.append("1")

        self.steps += 1
        if op == HALT:
            self.phase = Phase.DONE
            return Status.HALTED
        if op == JNZ and stack.pop():
            self.pc = self._loop_head()
        else:
            self.pc += 1
        return None

    def _loop_head(self) -> int:
        for index in range(self.pc - 1, -1, -1):
            if self.code[index] == JNZ:
                return index + 1
        return 0


def assemble(opcodes: List[int]) -> str:
    """把操作码序列编码成字节码通道程序（含首位 0）"""
    return "0" + "".join(format(op, "03b") for op in opcodes)


def literal_program(bits: str) -> str:
    """字面通道程序 1·γ(|s|+1)·s"""
    return "1" + elias_gamma(len(bits) + 1) + bits
