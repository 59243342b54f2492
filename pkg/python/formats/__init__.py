"""
文件格式层
机器图文本格式与报告编码
"""
from .graph_format import dump_graph, load_graph, parse_entries, read_graph_file

__all__ = ["dump_graph", "load_graph", "parse_entries", "read_graph_file"]
