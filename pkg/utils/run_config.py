"""
单次运行的配置：扁平键值文件（TOML 或 JSON），命令行参数可以逐项覆盖
"""
import json
import os
import re
import tomllib
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path

import config
from core.errors import ConfigError
from core.trace import Schedule
from engines.generalizers import GENERALIZERS
from engines.records import EngineVariant
from families import FAMILY_NAMES
from verifiers.strategy import CexStrategy

CHAIN_INITIALS = ("auto", "bottom", "top")


@dataclass(frozen=True)
class RunConfig:
    family: str = "chain"
    target: str = "0"
    engine: str = "cegis"
    generalizer: str | None = None
    strategy: str = "first-found"
    seed: int = 0
    budget: int | None = None
    universe_bound: int | None = None
    schedule: str = "canonical"
    # 链族初始猜测，auto 表示 hcegis 从 ℕ 出发、其余从 L_0 出发
    initial: str = "auto"
    out: str | None = None

    def validate(self) -> "RunConfig":
        if self.family not in FAMILY_NAMES:
            raise ConfigError(f"未知的族: {self.family!r}，可选 {', '.join(FAMILY_NAMES)}")
        try:
            EngineVariant(self.engine)
        except ValueError:
            raise ConfigError(f"未知的引擎: {self.engine!r}，可选 {', '.join(v.value for v in EngineVariant)}") from None
        if self.generalizer is not None and self.generalizer not in GENERALIZERS:
            raise ConfigError(f"未知的泛化器: {self.generalizer!r}，可选 {', '.join(GENERALIZERS)}")
        try:
            Schedule(self.schedule)
        except ValueError:
            raise ConfigError(f"未知的迹生成方式: {self.schedule!r}") from None
        if self.initial not in CHAIN_INITIALS:
            raise ConfigError(f"initial 只能是 {', '.join(CHAIN_INITIALS)}，实际为 {self.initial!r}")
        if self.budget is not None and self.budget < 0:
            raise ConfigError(f"预算必须是自然数，实际为 {self.budget}")
        CexStrategy.parse(self.strategy, self.seed)
        return self

    def with_overrides(self, **overrides) -> "RunConfig":
        """值为 None 的覆盖项忽略"""
        known = {f.name for f in fields(self)}
        unknown = set(overrides) - known
        if unknown:
            raise ConfigError(f"未知的配置项: {', '.join(sorted(unknown))}")
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})

    def chain_initial(self) -> str:
        if self.initial != "auto":
            return self.initial
        return "top" if self.engine == EngineVariant.HCEGIS.value else "bottom"

    def output_dir(self) -> Path:
        return Path(self.out or os.environ.get(config.OUTPUT_DIR_ENV) or config.DEFAULT_OUTPUT_DIR)

    def run_name(self) -> str:
        target = re.sub(r"[^0-9A-Za-z]+", "_", str(self.target)).strip("_") or "target"
        return f"{self.family}-{target}-{self.engine}-seed{self.seed}"

    def to_toml(self) -> str:
        """每行 key = <JSON字面量>，None 省略；JSON 字面量都是合法的 TOML 值"""
        lines = []
        for key, value in asdict(self).items():
            if value is not None:
                lines.append(f"{key} = {json.dumps(value, ensure_ascii=False)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        known = {f.name: f for f in fields(cls)}
        unknown = set(data) - set(known)
        if unknown:
            raise ConfigError(f"配置文件含未知项: {', '.join(sorted(unknown))}")
        values = dict(data)
        # target 接受数字或数组，统一成字符串
        if "target" in values and not isinstance(values["target"], str):
            values["target"] = json.dumps(values["target"])
        return cls(**values)


def config_text_to_dict(text: str, content_type: str) -> dict:
    """
    按内容类型把配置文本转换为dict，目前只支持 toml, json
    Args:
        text: 配置文件内容
        content_type: "toml" 或 "json"

    Returns:
        dict
    """
    try:
        if content_type == "toml":
            return tomllib.loads(text)
        if content_type == "json":
            data = json.loads(text)
            if not isinstance(data, dict):
                raise ConfigError("JSON 配置必须是一个对象")
            return data
    except (tomllib.TOMLDecodeError, json.JSONDecodeError) as e:
        raise ConfigError(f"配置文件解析失败: {e}") from None
    raise ConfigError(f"不支持的配置格式: {content_type!r}")


def load_run_config(path: str | Path) -> RunConfig:
    """
    读取配置文件，按后缀判断格式
    Args:
        path: .toml 或 .json 文件

    Returns:
        RunConfig
    """
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"配置文件不存在: {path}")
    content_type = path.suffix.lstrip(".").lower()
    return RunConfig.from_dict(config_text_to_dict(path.read_text(encoding="utf-8"), content_type))


def dump_run_config(run_config: RunConfig, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(run_config.to_toml(), encoding="utf-8")
    return path
