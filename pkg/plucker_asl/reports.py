"""Verification reports and their text, JSON and CSV renderings.

The JSON document is versioned::

    {"schema": "plucker_asl.report", "version": 1, "reports": [...]}

where each report carries ``check``, ``parameters``, ``verdict``,
``witness``, ``elapsed``, ``notes`` and ``value`` (the number a counting
check computed, otherwise null).
"""

import json
import time
from contextlib import contextmanager
from enum import Enum
from functools import wraps
from typing import Iterable, Iterator, List, Optional

import attr
import tablib
from typing_extensions import Self

REPORT_SCHEMA = "plucker_asl.report"
REPORT_SCHEMA_VERSION = 1
HEADERS = ("check", "parameters", "verdict", "witness", "elapsed", "notes", "value")


def builder(func):
    """Make a mutating method return its instance, for chaining."""

    @wraps(func)
    def wrapper(self, *args, **kwargs):
        func(self, *args, **kwargs)
        return self

    return wrapper


class Verdict(Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


def _parameters_text(parameters: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in sorted(parameters.items()))


@attr.s(frozen=True, eq=True, hash=False)
class VerificationReport:
    """The outcome of one check. A failure always names a witness."""

    check: str = attr.ib()
    parameters: dict = attr.ib(converter=dict, factory=dict)
    verdict: Verdict = attr.ib(default=Verdict.PASS, converter=Verdict)
    witness: Optional[str] = attr.ib(default=None)
    elapsed: float = attr.ib(default=0.0, eq=False)
    notes: tuple = attr.ib(converter=tuple, factory=tuple)
    #: The computed number for counting checks
    value: Optional[int] = attr.ib(default=None)

    def __attrs_post_init__(self):
        if self.verdict == Verdict.FAIL and not self.witness:
            raise ValueError(f"failed check {self.check} needs a witness")

    @property
    def passed(self) -> bool:
        return self.verdict != Verdict.FAIL

    @property
    def sort_key(self):
        return (self.check, json.dumps(self.parameters, sort_keys=True, default=str))

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "parameters": self.parameters,
            "verdict": self.verdict.value,
            "witness": self.witness,
            "elapsed": round(self.elapsed, 6),
            "notes": list(self.notes),
            "value": self.value,
        }

    def to_row(self) -> tuple:
        return (
            self.check,
            _parameters_text(self.parameters),
            self.verdict.value,
            self.witness or "",
            f"{self.elapsed:.3f}",
            "; ".join(self.notes),
            "" if self.value is None else self.value,
        )

    def to_text(self) -> str:
        line = f"{self.verdict.value.upper():7} {self.check}"
        if self.parameters:
            line += f" [{_parameters_text(self.parameters)}]"
        line += f" ({self.elapsed:.2f}s)"
        extra = []
        if self.value is not None:
            extra.append(f"    value: {self.value}")
        if self.witness:
            extra.append(f"    witness: {self.witness}")
        extra.extend(f"    note: {note}" for note in self.notes)
        return "\n".join([line] + extra)


@contextmanager
def timed() -> Iterator[dict]:
    """Measure wall time into ``elapsed`` of the yielded dict."""
    clock = {"elapsed": 0.0}
    start = time.perf_counter()
    try:
        yield clock
    finally:
        clock["elapsed"] = time.perf_counter() - start


class ReportSet:
    """Reports from one run, listed by check id and parameters."""

    def __init__(self, reports: Iterable[VerificationReport] = ()):
        self._reports: List[VerificationReport] = list(reports)

    @builder
    def add(self, report: VerificationReport) -> Self:
        self._reports.append(report)

    @builder
    def extend(self, reports: Iterable[VerificationReport]) -> Self:
        self._reports.extend(reports)

    @property
    def reports(self) -> List[VerificationReport]:
        return sorted(self._reports, key=lambda r: r.sort_key)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self._reports)

    @property
    def failures(self) -> List[VerificationReport]:
        return [r for r in self.reports if not r.passed]

    def __len__(self) -> int:
        return len(self._reports)

    def __iter__(self) -> Iterator[VerificationReport]:
        return iter(self.reports)

    @property
    def dataset(self) -> tablib.Dataset:
        rows = [r.to_row() for r in self.reports]
        return tablib.Dataset(*rows, headers=list(HEADERS))

    def to_json(self) -> str:
        document = {
            "schema": REPORT_SCHEMA,
            "version": REPORT_SCHEMA_VERSION,
            "reports": [r.to_dict() for r in self.reports],
        }
        return json.dumps(document, indent=2, sort_keys=True, default=str)

    def to_csv(self) -> str:
        return self.dataset.export("csv")

    def to_text(self) -> str:
        lines = [r.to_text() for r in self.reports]
        failed = len(self.failures)
        lines.append(f"{len(self) - failed} passed, {failed} failed")
        return "\n".join(lines)

    def render(self, fmt: str = "text") -> str:
        renderers = {"text": self.to_text, "json": self.to_json, "csv": self.to_csv}
        try:
            return renderers[fmt]()
        except KeyError:
            raise ValueError(f"unknown report format {fmt!r}") from None
