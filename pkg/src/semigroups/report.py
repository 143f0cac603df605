"""
Deterministic JSON reports. Keys are sorted and numpy values converted, so
two runs on the same input give the same bytes outside the "timing" block.
"""
from __future__ import annotations

import json
import logging
import time
from contextlib import contextmanager
from dataclasses import dataclass, field

import numpy as np

from . import __version__

logger = logging.getLogger(__name__)

TIMING = "timing"


def to_jsonable(value):
    if hasattr(value, "to_dict"):
        return to_jsonable(value.to_dict())
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [to_jsonable(v) for v in value]
        return sorted(items, key=repr) if isinstance(value, (set, frozenset)) else items
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    return value


def dumps(report: dict, indent: int | None = 4) -> str:
    return json.dumps(to_jsonable(report), sort_keys=True, ensure_ascii=False, indent=indent)


def dumps_line(record: dict) -> str:
    """One NDJSON line."""
    return json.dumps(to_jsonable(record), sort_keys=True, ensure_ascii=False, separators=(",", ":"))


def strip_timing(report):
    """The report with every timing block removed, for comparing runs."""
    if isinstance(report, dict):
        return {k: strip_timing(v) for k, v in report.items() if k != TIMING}
    if isinstance(report, list):
        return [strip_timing(v) for v in report]
    return report


@dataclass
class Stopwatch:
    """Wall time per named stage, in milliseconds."""
    stages: dict = field(default_factory=dict)

    @contextmanager
    def stage(self, name: str):
        start = time.perf_counter()
        try:
            yield
        finally:
            self.stages[name] = round((time.perf_counter() - start) * 1000.0, 3)
            logger.debug(f"stage {name} took {self.stages[name]} ms")

    def to_dict(self) -> dict:
        return dict(self.stages)


def analysis_report(input_descriptor: dict, results: dict, stopwatch: Stopwatch | None = None) -> dict:
    report = {"input": input_descriptor, "results": results, "version": __version__}
    if stopwatch is not None:
        report[TIMING] = stopwatch.to_dict()
    return report
