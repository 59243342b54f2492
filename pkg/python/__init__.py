"""
Python 包初始化文件
"""

__version__ = "1.0.0"
__author__ = "PrefixLab Team"
