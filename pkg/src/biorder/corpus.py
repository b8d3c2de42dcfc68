"""Bundled knot presentations with expected verdicts for self-test."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .presentation import PresentationFile, parse_presentation
from .verdict import KnotRecord

CORPUS_NAMES = ("trefoil", "figure8", "6_2", "7_6")

_EXPECTED = {
    "trefoil": ("NOT_BIORDERABLE", "R1", 0),
    "figure8": ("BIORDERABLE", "R4", 0),
    "6_2": ("NOT_BIORDERABLE", "R3", 1),
    "7_6": ("NOT_BIORDERABLE", "R3", 1),
}


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    presentation: PresentationFile
    record: KnotRecord
    expected_outcome: str
    expected_rule: str
    expected_level: int


def corpus_text(name: str) -> str:
    if name not in CORPUS_NAMES:
        raise KeyError(f"unknown corpus knot {name!r}; available: {', '.join(CORPUS_NAMES)}")
    return (resources.files(__package__) / "data" / f"{name}.knot").read_text()


def corpus_entry(name: str) -> CorpusEntry:
    pf = parse_presentation(corpus_text(name))
    outcome, rule, level = _EXPECTED[name]
    return CorpusEntry(name=name, presentation=pf, record=pf.record(),
                       expected_outcome=outcome, expected_rule=rule,
                       expected_level=level)


def corpus_entries() -> list[CorpusEntry]:
    return [corpus_entry(name) for name in CORPUS_NAMES]
