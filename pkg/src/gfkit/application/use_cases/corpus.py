"""Use-cases: ListSuites and RunSuites – the named end-to-end corpus."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any

from gfkit.application.corpus import list_suites, run_suite
from gfkit.application.ports import Clock, Logger, ReportStore
from gfkit.domain.errors import SuiteFailure, UsageError
from gfkit.domain.reports import Scale, SuiteReport


@dataclass
class ListSuitesResponse:
    names: list[str]

    def to_dict(self) -> dict[str, Any]:
        return {"suites": self.names}


class ListSuites:
    def __init__(self, logger: Logger) -> None:
        self._log = logger

    def execute(self) -> ListSuitesResponse:
        names = list_suites()
        self._log.debug(f"{len(names)} suites registered")
        return ListSuitesResponse(names)


# ---------------------------------------------------------------------------
# Running
# ---------------------------------------------------------------------------
@dataclass
class RunSuitesRequest:
    names: list[str]
    scale: Scale = Scale.DEFAULT
    jobs: int = 1
    include_timing: bool = False
    save: bool = False
    report_path: str | None = None


@dataclass
class RunSuitesResponse:
    reports: list[SuiteReport]
    include_timing: bool = False
    saved_to: str | None = None
    checks_total: int = field(init=False)

    def __post_init__(self) -> None:
        self.checks_total = sum(len(r.checks) for r in self.reports)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def to_dict(self) -> dict[str, Any]:
        return {
            "pass": self.passed,
            "checks": self.checks_total,
            "suites": [r.to_dict(include_timing=self.include_timing) for r in self.reports],
        }


def timed_suite(name: str, scale: Scale, clock: Clock) -> SuiteReport:
    """Run one suite and stamp its wall time; module level so worker processes can pickle it."""
    start = clock.monotonic()
    report = run_suite(name, scale)
    report.timing = clock.monotonic() - start
    return report


class RunSuites:
    """Run suites (optionally in worker processes) and merge the reports in name order.

    A run with a failing check raises ``SuiteFailure`` after the report is saved.
    """

    def __init__(self, store: ReportStore, clock: Clock, logger: Logger) -> None:
        self._store = store
        self._clock = clock
        self._log = logger

    def execute(self, request: RunSuitesRequest) -> RunSuitesResponse:
        if not request.names:
            raise UsageError("no suite named; pass a suite name or --all")
        if request.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        known = set(list_suites())
        unknown = [n for n in request.names if n not in known]
        if unknown:
            raise UsageError(f"unknown suite(s): {', '.join(unknown)}")
        names = sorted(set(request.names))

        if request.jobs == 1 or len(names) == 1:
            reports = [timed_suite(n, request.scale, self._clock) for n in names]
        else:
            self._log.debug("Running suites in worker processes", jobs=request.jobs)
            with ProcessPoolExecutor(max_workers=request.jobs) as pool:
                futures = [pool.submit(timed_suite, n, request.scale, self._clock) for n in names]
                reports = [f.result() for f in futures]

        for r in reports:
            log = self._log.info if r.passed else self._log.warn
            log(
                f"Suite {r.suite}: {'pass' if r.passed else 'FAIL'}",
                checks=len(r.checks),
                seconds=round(r.timing, 3),
            )

        response = RunSuitesResponse(reports, include_timing=request.include_timing)
        if request.save or request.report_path is not None:
            data = RunSuitesResponse(reports, include_timing=True).to_dict()
            response.saved_to = self._store.save_report(data, request.report_path)
            self._log.info(f"Report written to {response.saved_to}")
        failed = [r.suite for r in reports if not r.passed]
        if failed:
            raise SuiteFailure(
                f"{len(failed)} of {len(reports)} suites failed: {', '.join(failed)}", reports=reports, response=response
            )
        return response
