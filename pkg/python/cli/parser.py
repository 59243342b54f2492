"""
命令行参数定义
"""
import argparse

TRANSFORM_KINDS = ("finite-preimage", "infinite-preimage", "dense-optimal")


def natural(text: str) -> int:
    """非负整数参数"""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def positive(text: str) -> int:
    value = natural(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _add_budget_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--max-len", type=natural, help="maximum program length in bits")
    parser.add_argument("--max-steps", type=natural, help="interpreter step budget")
    parser.add_argument("--ceiling", type=positive, help="enumeration ceiling (candidate programs)")
    parser.add_argument("--workers", type=positive, help="threads for the program-tree search")


def _add_output_flag(parser: argparse.ArgumentParser):
    parser.add_argument("-o", "--output", help="output path (default: standard output)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prefixlab",
        description="Workbench for prefix-free machines as instantaneous codes",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--config", help="configuration file (JSON)")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    enumerate_cmd = sub.add_parser("enumerate", help="enumerate the halting programs of U")
    _add_budget_flags(enumerate_cmd)
    _add_output_flag(enumerate_cmd)

    transform_cmd = sub.add_parser("transform", help="apply a machine construction")
    transform_cmd.add_argument("--kind", choices=TRANSFORM_KINDS, required=True)
    transform_cmd.add_argument("input", nargs="?", help="input machine graph (U graph for dense-optimal)")
    transform_cmd.add_argument("--budget", type=positive, help="per-symbol budget (infinite-preimage)")
    transform_cmd.add_argument("--max-n", type=natural, help="maximum codeword length (dense-optimal)")
    _add_budget_flags(transform_cmd)
    _add_output_flag(transform_cmd)

    census_cmd = sub.add_parser("census", help="codeword census table and its semi-measure")
    census_cmd.add_argument("input", help="machine graph")
    census_cmd.add_argument("--max-n", type=natural, help="largest n in the table")
    _add_output_flag(census_cmd)

    envelope_cmd = sub.add_parser("envelope", help="exploratory census envelope report (TSV)")
    envelope_cmd.add_argument("input", help="machine graph")
    envelope_cmd.add_argument("--universal", help="materialized U graph (default: enumerate)")
    envelope_cmd.add_argument("--max-n", type=natural, help="largest n in the report")
    envelope_cmd.add_argument("--domain", action="store_true", help="report domain counts instead")
    _add_budget_flags(envelope_cmd)
    _add_output_flag(envelope_cmd)

    witness_cmd = sub.add_parser("witness", help="optimality witness diagnostic (TSV)")
    witness_cmd.add_argument("input", help="machine graph")
    witness_cmd.add_argument("--universal", help="materialized U graph (default: enumerate)")
    witness_cmd.add_argument("--n0", type=natural, help="additive slack n0")
    _add_budget_flags(witness_cmd)
    _add_output_flag(witness_cmd)

    verify_cmd = sub.add_parser("verify", help="run the invariant suite")
    verify_cmd.add_argument("inputs", nargs="+", metavar="input",
                            help="machine graph, optionally followed by its transform source")
    verify_cmd.add_argument("--max-n", type=natural, help="census depth for reconciliation")

    return parser
