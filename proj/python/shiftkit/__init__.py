"""Exact homological invariants of finite-dimensional bound quiver algebras."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any, Optional, Union

from . import _core
from ._core import AdmissibilityError, ParseError, PreconditionError, VerificationError

__all__ = [
    "AdmissibilityError",
    "ParseError",
    "PreconditionError",
    "Report",
    "VerificationError",
    "analyze",
    "corpus",
    "corpus_dir",
    "endcheck",
    "mechanism",
    "order",
    "parse",
    "run",
    "selftest",
    "shift",
]

Source = Union[str, Path]


@dataclass(frozen=True)
class Report:
    """A command report: the JSON record, its aggregate verdict and the matching exit code."""

    record: dict[str, Any]
    verdict: str
    exit_code: int
    text: str

    def table(self) -> str:
        return _core.render_table(self.text)


def _report(result: tuple[str, str, int]) -> Report:
    text, verdict, code = result
    return Report(json.loads(text), verdict, code, text)


def _text(source: Source) -> str:
    """Algebra file contents from a path or from literal JSON text."""
    if isinstance(source, Path):
        return source.read_text()
    if source.lstrip().startswith("{"):
        return source
    return Path(source).read_text()


def corpus_dir() -> Path:
    """Directory of the bundled example algebras."""
    return Path(str(resources.files(__package__) / "corpus"))


def run(*args: str) -> tuple[int, str, str]:
    """Run the command line in process; returns (exit code, stdout, stderr)."""
    return _core.run(list(args))


def parse(source: Source) -> str:
    return _core.parse(_text(source), str(source) if isinstance(source, Path) else "<input>")


def analyze(source: Source, *, field: Optional[str] = None, cap: int = 24, seed: int = 0) -> Report:
    return _report(_core.analyze(_text(source), field=field, cap=cap, seed=seed))


def shift(source: Source, level: int, *, field: Optional[str] = None, cap: int = 24, seed: int = 0) -> Report:
    return _report(_core.shift(_text(source), level, field=field, cap=cap, seed=seed))


def order(
    source: Source, krull: int, level: int = 1, *, field: Optional[str] = None, cap: int = 24, seed: int = 0
) -> Report:
    return _report(_core.order(_text(source), krull, level, field=field, cap=cap, seed=seed))


def endcheck(source: Source, module: str, *, field: Optional[str] = None, cap: int = 24, seed: int = 0) -> Report:
    return _report(_core.endcheck(_text(source), module, field=field, cap=cap, seed=seed))


def mechanism(
    source: Source,
    level: int,
    simple: Optional[int] = None,
    *,
    field: Optional[str] = None,
    cap: int = 24,
    seed: int = 0,
) -> Report:
    """Checks for every simple of the shifted algebra, or only simple number `simple` (1-based)."""
    if simple is not None and simple < 1:
        raise ValueError("simple is 1-based")
    index = None if simple is None else simple - 1
    return _report(_core.mechanism(_text(source), level, index, field=field, cap=cap, seed=seed))


def corpus(directory: Optional[Source] = None, *, field: Optional[str] = None, cap: int = 24, seed: int = 0) -> Report:
    return _report(_core.corpus(str(directory or corpus_dir()), field=field, cap=cap, seed=seed))


def selftest(directory: Optional[Source] = None, *, cap: int = 24, seed: int = 0) -> Report:
    return _report(_core.selftest(str(directory or corpus_dir()), cap=cap, seed=seed))
