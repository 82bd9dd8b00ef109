"""Loader and checker for the worked-example corpus (``data/fixtures.yaml``)."""
from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import yaml

from .bsdh import classify
from .rootsys import DynkinType, build_root_system
from .weyl import Word, first_cancellation

_FLAGS = ("globally_generated", "very_ample", "fano", "weak_fano_certified", "big")


@dataclass(frozen=True)
class Fixture:
    name: str
    type: DynkinType
    word: Word
    expected_m: tuple[int, ...] | None = None
    expected_flags: dict = field(default_factory=dict)
    source: str = ""

    def __post_init__(self):
        if self.expected_m is not None and len(self.expected_m) != len(self.word):
            raise ValueError(f"fixture {self.name}: expected_m length does not match the word")
        unknown = set(self.expected_flags) - set(_FLAGS)
        if unknown:
            raise ValueError(f"fixture {self.name}: unknown flags {sorted(unknown)}")


def default_path() -> Path:
    return Path(str(resources.files("bottsamelson") / "data" / "fixtures.yaml"))


def load_fixtures(path: str | Path | None = None) -> list[Fixture]:
    path = Path(path) if path is not None else default_path()
    records = yaml.safe_load(path.read_text(encoding="utf-8")) or []
    out = []
    for rec in records:
        m = rec.get("expected_m")
        out.append(Fixture(
            name=rec["name"],
            type=DynkinType.parse(rec["type"]),
            word=tuple(rec["word"]),
            expected_m=tuple(m) if m is not None else None,
            expected_flags=dict(rec.get("expected_flags") or {}),
            source=rec.get("source", ""),
        ))
    return out


def check_fixture(fx: Fixture) -> list[str]:
    rs = build_root_system(fx.type)
    k = first_cancellation(rs, fx.word)
    if k is not None:
        return [f"word is not reduced (position {k})"]
    result = classify(rs, fx.word)
    failures = []
    if fx.expected_m is not None and result.m.coeffs != fx.expected_m:
        failures.append(f"m = {list(result.m.coeffs)}, expected {list(fx.expected_m)}")
    for flag, want in fx.expected_flags.items():
        got = getattr(result, flag)
        if got != want:
            failures.append(f"{flag} = {got}, expected {want}")
    return failures
