"""
命令行应用
负责配置装配、依赖注入和退出码映射
"""
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from core.errors import (
    EnumerationCeilingError, GraphParseError, InvalidMachineError, NoDuplicatePreimageError,
)
from core.machine import MachineGraph
from formats.graph_format import dump_graph, read_graph_file
from formats.report_format import encode_bounds, encode_dyadic_map, to_json, to_tsv
from infrastructure.config_manager import ConfigManager, LabConfig
from infrastructure.file_writer import write_atomic
from infrastructure.log_manager import LogManager, get_logger
from services.census_service import NON_NORMATIVE_NOTE, CensusService, machine_id
from services.transform_service import TransformService
from services.universal_service import Budgets, BudgetedUniversal, UniversalService
from services.verification_service import VerificationService

from .parser import build_parser

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_CEILING = 3
EXIT_INPUT = 4
EXIT_PRECONDITION = 5


class PrefixLabApp:
    """
    应用容器
    持有配置与各服务实例，分发子命令
    """

    def __init__(self, config: LabConfig):
        self.config = config
        self.logger = get_logger("PrefixLabApp")
        self.universal_service = UniversalService(ceiling=config.ceiling, workers=config.workers)
        self.census_service = CensusService()
        self.transform_service = TransformService(ceiling=config.ceiling, census_service=self.census_service)
        self.verification_service = VerificationService(self.census_service, max_n=config.max_n)

    def budgets(self) -> Budgets:
        return Budgets(self.config.max_len, self.config.max_steps)

    def _emit(self, output: Optional[str], content: str):
        if output:
            write_atomic(output, content)
            self.logger.info(f"Wrote {output}")
        else:
            sys.stdout.write(content)

    def _universal(self, path: Optional[str]) -> BudgetedUniversal:
        if path:
            return BudgetedUniversal.from_graph(read_graph_file(path), self.budgets())
        return self.universal_service.enumerate(self.config.max_len, self.config.max_steps)

    def cmd_enumerate(self, args) -> int:
        universal = self._universal(None)
        self._emit(args.output, dump_graph(universal.graph))
        return EXIT_OK

    def cmd_transform(self, args) -> int:
        if args.kind == "dense-optimal":
            universal = self._universal(args.input)
            machine = self.transform_service.dense_optimal(universal, self.config.max_n)
            self._emit(args.output, dump_graph(machine))
            return EXIT_OK

        if not args.input:
            self.logger.error(f"transform --kind {args.kind} needs an input graph")
            return EXIT_USAGE
        source = read_graph_file(args.input)
        if args.kind == "finite-preimage":
            result = self.transform_service.finite_preimage(source)
            self._emit(args.output, dump_graph(result.machine))
            if args.output:
                self._emit(f"{args.output}.bounds.json", to_json(encode_bounds(result.bound)))
            return EXIT_OK

        machine = self.transform_service.infinite_preimage(source, self.config.budget)
        self._emit(args.output, dump_graph(machine))
        return EXIT_OK

    def cmd_census(self, args) -> int:
        machine = read_graph_file(args.input)
        table = self.census_service.build(machine, self.config.max_n)
        self._emit(args.output, to_json(table.to_dict()))
        if args.output:
            measure = self.transform_service.semi_measure_of_census(machine, self.config.max_n)
            sidecar = {
                "machine": table.machine_id,
                "maxN": self.config.max_n,
                "values": encode_dyadic_map(measure.values),
                "truncated": measure.truncated_total.to_dict(),
                "tail": measure.tail.to_dict(),
                "kraft": measure.kraft.to_dict(),
            }
            self._emit(f"{args.output}.semimeasure.json", to_json(sidecar))
        return EXIT_OK

    def cmd_envelope(self, args) -> int:
        machine = read_graph_file(args.input)
        universal = self._universal(args.universal)
        if args.universal:
            budgets = f"budgets: from file {machine_id(universal.graph)}"
        else:
            budgets = f"budgets maxLen={universal.max_program_length} maxSteps={universal.max_steps}"
        header = [NON_NORMATIVE_NOTE, f"machine {machine_id(machine)}", budgets]
        if args.domain:
            rows = self.census_service.domain_report(universal, machine, self.config.max_n)
            content = to_tsv(header, ["n", "domain_count", "H_upper", "n_minus_H", "log_ratio"],
                             [(r.n, r.domain_count, r.h_upper, r.exponent, r.log_ratio) for r in rows])
        else:
            rows = self.census_service.envelope_report(universal, machine, self.config.max_n)
            content = to_tsv(header, ["n", "s", "count", "H_upper", "log_ratio"],
                             [(r.n, r.symbol, r.count, r.h_upper, r.log_ratio) for r in rows])
        self._emit(args.output, content)
        return EXIT_OK

    def cmd_witness(self, args) -> int:
        machine = read_graph_file(args.input)
        universal = self._universal(args.universal)
        rows = self.transform_service.optimality_witness_report(machine, universal, self.config.n0)
        header = [NON_NORMATIVE_NOTE, f"n0 {self.config.n0}"]
        content = to_tsv(header, ["s", "H_upper", "limit", "witness", "H_C"],
                         [(r.symbol, r.h_upper, r.limit, r.witness.text if r.witness else "none", r.complexity)
                          for r in rows])
        self._emit(args.output, content)
        return EXIT_OK

    def cmd_verify(self, args) -> int:
        if len(args.inputs) > 2:
            self.logger.error("verify takes a machine and at most one source machine")
            return EXIT_USAGE
        machine = read_graph_file(args.inputs[0], validate=False)
        source = None
        if len(args.inputs) == 2:
            source = read_graph_file(args.inputs[1], validate=False)
        results = self.verification_service.verify(machine, source)
        for result in results:
            print(result.line())
        return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY_FAILED

    def dispatch(self, args) -> int:
        handler = getattr(self, f"cmd_{args.command}")
        return handler(args)


def _configure(args) -> LabConfig:
    config = ConfigManager(args.config).load()
    overrides = {
        "max_len": getattr(args, "max_len", None),
        "max_steps": getattr(args, "max_steps", None),
        "ceiling": getattr(args, "ceiling", None),
        "workers": getattr(args, "workers", None),
        "budget": getattr(args, "budget", None),
        "max_n": getattr(args, "max_n", None),
        "n0": getattr(args, "n0", None),
    }
    if args.verbose:
        overrides["log_level"] = "DEBUG"
    return config.with_overrides(**overrides)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """主函数"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    config = _configure(args)
    log_manager = LogManager(log_file=config.log_file, level=config.log_level)
    log_manager.set_level(config.log_level)
    config = config.with_overrides(ceiling=ConfigManager(args.config).clamp_ceiling(config.ceiling))
    logger = get_logger("main")

    app = PrefixLabApp(config)
    try:
        return app.dispatch(args)
    except EnumerationCeilingError as e:
        logger.error(str(e))
        return EXIT_CEILING
    except NoDuplicatePreimageError as e:
        logger.error(str(e))
        return EXIT_PRECONDITION
    except (GraphParseError, InvalidMachineError) as e:
        logger.error(f"Invalid input: {e}")
        return EXIT_INPUT
    except OSError as e:
        logger.error(f"Cannot read input: {e}")
        return EXIT_INPUT
