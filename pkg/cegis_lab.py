"""
命令行子命令：run 单次运行、demo 演示、table 汇总报告
"""
import argparse
import json
import sys
from pathlib import Path

import config
from core.errors import CegisLabError, ConfigError
from core.trace import trace_generate
from engines.cegis import run_engine
from engines.generalizers import build_generalizer, default_generalizer_name
from engines.records import EngineVariant
from families import build_family, parse_target
from harness.demos import DEMOS
from harness.report import JsonlSink, record_line, render_table, write_jsonl, write_report
from harness.verdict import RunStatus, convergence_verdict, default_budget
from utils import logger
from utils.run_config import RunConfig, dump_run_config, load_run_config
from verifiers.strategy import CexStrategy

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_STALLED = 2
EXIT_BUDGET_EXHAUSTED = 3
EXIT_WRONG_LIMIT = 4


class LabArgumentParser(argparse.ArgumentParser):
    """参数错误按配置错误处理（退出码1），不走 argparse 默认的退出码2"""

    def error(self, message):
        raise ConfigError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = LabArgumentParser(prog="cegis-lab", description="CEGIS 变体对比实验室")
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="执行一次引擎运行")
    run.add_argument("--config", help="TOML 或 JSON 配置文件，命令行参数覆盖其中的值")
    run.add_argument("--family", help="chain / rectangle / diagonal / gold")
    run.add_argument("--target", help="目标，例如 5、-1,1,-1,1、[[0,2],[1,7]]、full")
    run.add_argument("--engine", help="cegis / mincegis / hcegis / simulated-mincegis")
    run.add_argument("--generalizer", help="缺省按族和引擎选择")
    run.add_argument("--strategy", help="first-found / seeded-random / adversarial-max / consistent-avoiding:e1,e2")
    run.add_argument("--seed", type=int)
    run.add_argument("--budget", type=int)
    run.add_argument("--universe-bound", dest="universe_bound", type=int)
    run.add_argument("--schedule", help="canonical / seeded-random / padded-seeded")
    run.add_argument("--initial", help="链族初始猜测: auto / bottom / top")
    run.add_argument("--out", help=f"输出目录，缺省读环境变量 {config.OUTPUT_DIR_ENV}")

    demo = commands.add_parser("demo", help="运行一个演示并写出报告")
    demo.add_argument("name", help=", ".join(DEMOS))
    demo.add_argument("--imax", type=int, help="lemma1 的最大下标")
    demo.add_argument("--budget", type=int)
    demo.add_argument("--seed", type=int, action="append", dest="seeds", help="theorem1 的种子，可重复")
    demo.add_argument("--out")

    table = commands.add_parser("table", help="把输出目录里的 JSON 报告汇总成 Markdown 表")
    table.add_argument("--out")
    return parser


def _output_dir(out: str | None) -> Path:
    return RunConfig(out=out).output_dir()


@logger.log_function_call()
def cmd_run(run_config: RunConfig) -> int:
    """
    执行一次运行，写出 JSONL 迭代日志和摘要
    Args:
        run_config: 已合并命令行覆盖的配置

    Returns:
        int: 退出码
    """
    run_config.validate()
    family = build_family(run_config.family, run_config.universe_bound)
    index = parse_target(family, run_config.target)
    target = family.language(index)
    variant = EngineVariant(run_config.engine)
    generalizer_name = run_config.generalizer or default_generalizer_name(family.name, variant.value)
    generalizer = build_generalizer(generalizer_name, family, run_config.chain_initial())
    budget = default_budget(family) if run_config.budget is None else run_config.budget
    trace = trace_generate(target, run_config.schedule, seed=run_config.seed, length=budget)
    strategy = CexStrategy.parse(run_config.strategy, run_config.seed)

    run = run_engine(variant, family, target, trace, generalizer, strategy, budget)
    verdict = convergence_verdict(run, target)

    out_dir = run_config.output_dir()
    name = run_config.run_name()
    write_jsonl(out_dir / f"{name}.jsonl", (record_line(family, record) for record in run.records))
    dump_run_config(run_config, out_dir / f"{name}.toml")
    summary = {
        "verdict": verdict.label(),
        "final": family.describe(run.final),
        "semantic_match": verdict.semantic_match,
        "queries": run.queries,
        "iterations": run.iterations,
        "counterexamples": len(run.counterexamples),
        "target": target.descriptor,
        "engine": variant.value,
        "generalizer": generalizer.name,
        "strategy": strategy.describe(),
    }
    (out_dir / f"{name}.summary.json").write_text(json.dumps(summary, ensure_ascii=False, indent=2),
                                                  encoding="utf-8")
    logger.info(f"运行 {name}: {verdict.label()} 语义匹配={verdict.semantic_match} 查询 {run.queries}")
    print(json.dumps(summary, ensure_ascii=False))

    if verdict.status == RunStatus.STALLED:
        return EXIT_STALLED
    if verdict.status == RunStatus.BUDGET_EXHAUSTED:
        return EXIT_BUDGET_EXHAUSTED
    return EXIT_OK if verdict.semantic_match else EXIT_WRONG_LIMIT


@logger.log_function_call()
def cmd_demo(name: str, out: str | None = None, imax: int | None = None, budget: int | None = None,
             seeds: list[int] | None = None) -> int:
    """
    运行演示，写出 <name>.jsonl / <name>.json / <name>.md
    Returns:
        int: 演示结论成立返回0，否则返回1
    """
    if name not in DEMOS:
        raise ConfigError(f"未知的演示: {name!r}，可选 {', '.join(DEMOS)}")
    out_dir = _output_dir(out)
    sink = JsonlSink(out_dir / f"{name}.jsonl")
    options = {"sink": sink}
    if budget is not None:
        options["budget"] = budget
    if name == "lemma1" and imax is not None:
        options["i_max"] = imax
    if name == "theorem1" and seeds:
        options["seeds"] = seeds

    report = DEMOS[name](**options)
    json_path, md_path = write_report(report, out_dir)
    logger.info(f"演示 {name}: {report.conclusion}，报告 {json_path}, {md_path}，日志 {sink.lines} 行")
    print(report.to_markdown())
    return EXIT_OK if report.passed else EXIT_FAILURE


def cmd_table(out: str | None = None) -> int:
    out_dir = _output_dir(out)
    reports = []
    for path in sorted(out_dir.glob("*.json")):
        if path.name.endswith(".summary.json"):
            continue
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as e:
            logger.warning(f"跳过无法解析的报告 {path}: {e}")
            continue
        if isinstance(data, dict) and "kind" in data:
            reports.append(data)
    if not reports:
        raise ConfigError(f"{out_dir} 下没有演示报告")
    table = render_table(reports)
    (out_dir / "table.md").write_text(table, encoding="utf-8")
    print(table)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    """
    解析命令行并分派子命令
    Returns:
        int: 退出码
    """
    try:
        args = build_parser().parse_args(argv)
        if args.command == "run":
            base = load_run_config(args.config) if args.config else RunConfig()
            run_config = base.with_overrides(
                family=args.family, target=args.target, engine=args.engine, generalizer=args.generalizer,
                strategy=args.strategy, seed=args.seed, budget=args.budget, universe_bound=args.universe_bound,
                schedule=args.schedule, initial=args.initial, out=args.out,
            )
            return cmd_run(run_config)
        if args.command == "demo":
            return cmd_demo(args.name, args.out, args.imax, args.budget, args.seeds)
        return cmd_table(args.out)
    except CegisLabError as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"错误: {e}", file=sys.stderr)
        return EXIT_FAILURE
