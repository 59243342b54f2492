"""
命令行层
子命令：enumerate, transform, census, envelope, witness, verify
"""
from .app import main

__all__ = ["main"]
