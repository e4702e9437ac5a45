"""
演示报告与运行产物：JSONL迭代日志、Markdown表格、JSON报告
"""
import json
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Iterable

from core.family import IndexedFamily
from engines.records import EngineRun, IterationRecord
from harness.verdict import RunStatus, RunVerdict


def record_line(family: IndexedFamily, record: IterationRecord) -> dict[str, Any]:
    """
    一条迭代记录对应的 JSONL 行；配对编码的族同时给出解码后的元组
    """
    cex = record.verdict.counterexample if record.verdict is not None else None
    line = {
        "iter": record.iteration,
        "event": record.event.value,
        "trace_entry": record.trace_entry,
        "trace_entry_decoded": None if record.trace_entry is None else family.describe_example(record.trace_entry),
        "candidate": record.candidate,
        "verdict": None if record.verdict is None else record.verdict.label(),
        "cex": cex,
        "cex_decoded": None if cex is None else family.describe_example(cex),
    }
    if record.note:
        line["state"] = record.note
    return line


def dump_line(line: dict) -> str:
    return json.dumps(line, ensure_ascii=False)


def run_log_text(run: EngineRun) -> str:
    """整次运行的 JSONL 文本，相同配置重放时逐字节一致"""
    return "".join(dump_line(record_line(run.family, record)) + "\n" for record in run.records)


def write_jsonl(path: Path, lines: Iterable[dict]) -> int:
    path.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for line in lines:
            f.write(dump_line(line) + "\n")
            count += 1
    return count


class JsonlSink:
    """
    演示用的日志汇：每跑完一次运行就把它的记录追加到同一个 JSONL 文件，每行带上运行编号
    """

    def __init__(self, path: Path):
        self.path = Path(path)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self.path.write_text("", encoding="utf-8")
        self.lines = 0

    def __call__(self, run_id: str, run: EngineRun):
        with open(self.path, "a", encoding="utf-8", newline="\n") as f:
            for record in run.records:
                f.write(dump_line({"run": run_id, **record_line(run.family, record)}) + "\n")
                self.lines += 1


@dataclass
class RunRow:
    family: str
    target: str
    variant: str
    status: str
    converged_at: int | None
    semantic_match: bool
    queries: int
    counterexamples: int
    final: str
    seed: int | None = None
    ok: bool = True
    detail: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def of(cls, run: EngineRun, target: str, verdict: RunVerdict, variant: str | None = None,
           seed: int | None = None, **detail) -> "RunRow":
        return cls(
            family=run.family.name, target=target, variant=variant or run.variant.value,
            status=verdict.status.value, converged_at=verdict.converged_at,
            semantic_match=verdict.semantic_match, queries=run.queries,
            counterexamples=len(run.counterexamples), final=run.family.describe(run.final),
            seed=seed, detail=detail,
        )

    @property
    def identified(self) -> bool:
        return self.status == RunStatus.CONVERGED.value and self.semantic_match


@dataclass
class PairRow:
    """同一目标、同一条迹上直接 MinCEGIS 与模拟的对照"""
    family: str
    target: str
    seed: int | None
    direct: RunRow
    simulated: RunRow
    finals_equal: bool

    @property
    def statuses_equal(self) -> bool:
        return self.direct.status == self.simulated.status

    @property
    def ok(self) -> bool:
        return self.finals_equal and self.statuses_equal


@dataclass
class IndistinguishabilityRow:
    base: list[int]
    z1: int
    z2: int
    target_d: str
    target_d_prime: str
    logs_identical: bool = False
    targets_differ: bool = False
    match_d: bool = False
    match_d_prime: bool = False
    final_d: str = ""
    final_d_prime: str = ""
    skipped: str | None = None

    @property
    def ok(self) -> bool:
        """两条日志一致、目标在 <0, z2> 上不同，所以至少一边没学对"""
        if self.skipped is not None:
            return True
        return self.logs_identical and self.targets_differ and not (self.match_d and self.match_d_prime)


@dataclass
class SeparationReport:
    """
    expected 是 变体 -> 是否应当识别该族；结论完全由行计算
    min_pairs 是至少要有几组没跳过的不可区分对
    """
    name: str
    family: str
    rows: list[RunRow] = field(default_factory=list)
    expected: dict[str, bool] = field(default_factory=dict)
    pairs: list[IndistinguishabilityRow] = field(default_factory=list)
    min_pairs: int = 0

    @property
    def completed_pairs(self) -> int:
        return sum(1 for pair in self.pairs if pair.skipped is None)

    def variants(self) -> list[str]:
        seen = []
        for row in self.rows:
            if row.variant not in seen:
                seen.append(row.variant)
        return seen

    def identified(self, variant: str) -> bool:
        rows = [row for row in self.rows if row.variant == variant]
        return bool(rows) and all(row.identified for row in rows)

    @property
    def conclusion(self) -> str:
        parts = []
        for variant in self.variants():
            parts.append(f"{variant} {'识别了' if self.identified(variant) else '未能识别'} {self.family} 族")
        return "；".join(parts)

    @property
    def passed(self) -> bool:
        if not self.rows or not all(row.ok for row in self.rows):
            return False
        if not all(pair.ok for pair in self.pairs):
            return False
        if self.completed_pairs < self.min_pairs:
            return False
        return all(self.identified(variant) == want for variant, want in self.expected.items())

    def to_dict(self) -> dict:
        return {
            "name": self.name, "kind": "separation", "family": self.family, "passed": self.passed,
            "conclusion": self.conclusion, "expected": self.expected,
            "min_pairs": self.min_pairs, "completed_pairs": self.completed_pairs,
            "rows": [asdict(row) for row in self.rows],
            "pairs": [{**asdict(pair), "ok": pair.ok} for pair in self.pairs],
        }

    def to_markdown(self) -> str:
        lines = [f"## {self.name}", "", f"族: {self.family}", "",
                 "| 目标 | 变体 | 结果 | 语义匹配 | 查询数 | 反例数 | 最终程序 |",
                 "|---|---|---|---|---|---|---|"]
        for row in self.rows:
            status = f"converged({row.converged_at})" if row.converged_at else row.status
            lines.append(f"| {row.target} | {row.variant} | {status} | {_yes(row.semantic_match)} "
                         f"| {row.queries} | {row.counterexamples} | {row.final} |")
        if self.pairs:
            lines += ["", "| base | z1 | z2 | 日志一致 | 目标不同 | L^d 匹配 | L^d' 匹配 | 备注 |",
                      "|---|---|---|---|---|---|---|---|"]
            for pair in self.pairs:
                lines.append(f"| {pair.base} | {pair.z1} | {pair.z2} | {_yes(pair.logs_identical)} "
                             f"| {_yes(pair.targets_differ)} | {_yes(pair.match_d)} | {_yes(pair.match_d_prime)} "
                             f"| {pair.skipped or ''} |")
        lines += ["", f"结论: {self.conclusion}", f"通过: {_yes(self.passed)}", ""]
        return "\n".join(lines)


@dataclass
class EquivalenceReport:
    name: str
    pairs: list[PairRow] = field(default_factory=list)
    notes: dict[str, Any] = field(default_factory=dict)
    extra_checks: dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.pairs) and all(pair.ok for pair in self.pairs) and all(self.extra_checks.values())

    @property
    def conclusion(self) -> str:
        equal = sum(1 for pair in self.pairs if pair.ok)
        return f"{equal}/{len(self.pairs)} 组直接 MinCEGIS 与模拟结果一致"

    def to_dict(self) -> dict:
        return {
            "name": self.name, "kind": "equivalence", "passed": self.passed, "conclusion": self.conclusion,
            "notes": self.notes, "checks": self.extra_checks,
            "pairs": [{**asdict(pair), "statuses_equal": pair.statuses_equal, "ok": pair.ok}
                      for pair in self.pairs],
        }

    def to_markdown(self) -> str:
        lines = [f"## {self.name}", "",
                 "| 族 | 目标 | 种子 | MinCEGIS | 模拟 | 最终程序相同 | 查询数(直接/模拟) |",
                 "|---|---|---|---|---|---|---|"]
        for pair in self.pairs:
            lines.append(f"| {pair.family} | {pair.target} | {pair.seed} | {pair.direct.status} "
                         f"| {pair.simulated.status} | {_yes(pair.finals_equal)} "
                         f"| {pair.direct.queries}/{pair.simulated.queries} |")
        lines.append("")
        for key, value in self.notes.items():
            lines.append(f"- {key}: {value}")
        for key, value in self.extra_checks.items():
            lines.append(f"- {key}: {_yes(value)}")
        lines += ["", f"结论: {self.conclusion}", f"通过: {_yes(self.passed)}", ""]
        return "\n".join(lines)


def _yes(flag: bool) -> str:
    return "是" if flag else "否"


def write_report(report, out_dir: Path) -> tuple[Path, Path]:
    """
    写出 <name>.json 和 <name>.md
    Returns:
        (json路径, markdown路径)
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    json_path = out_dir / f"{report.name}.json"
    md_path = out_dir / f"{report.name}.md"
    json_path.write_text(json.dumps(report.to_dict(), ensure_ascii=False, indent=2), encoding="utf-8")
    md_path.write_text(report.to_markdown(), encoding="utf-8")
    return json_path, md_path


def render_table(reports: list[dict]) -> str:
    """把若干 JSON 报告汇总成一张 Markdown 表"""
    lines = ["| 报告 | 类型 | 通过 | 结论 |", "|---|---|---|---|"]
    for report in reports:
        lines.append(f"| {report.get('name', '?')} | {report.get('kind', '?')} "
                     f"| {_yes(bool(report.get('passed')))} | {report.get('conclusion', '')} |")
    return "\n".join(lines) + "\n"
