"""Enumerate-and-certify sweeps over all instances up to an edge budget."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .driver import strongly_antimagic_label
from .labeling import verify_bijection, verify_strongly_antimagic
from .oracle import SearchBudget, find_strongly_antimagic
from .spiders import CanonicalDoubleSpider, CaseTag, classify, derive_parameters, enumerate_instances


@dataclass(frozen=True)
class SweepRecord:
    instance: CanonicalDoubleSpider
    m: int
    tag: CaseTag
    ok: bool
    detail: str
    elapsed: float

    @property
    def key(self) -> tuple:
        # Everything that determinism guarantees; elapsed is measurement noise.
        return (self.instance, self.m, self.tag, self.ok, self.detail)


@dataclass(frozen=True)
class SweepReport:
    max_edges: int
    records: tuple[SweepRecord, ...]

    @property
    def total(self) -> int:
        return len(self.records)

    @property
    def failures(self) -> tuple[SweepRecord, ...]:
        return tuple(r for r in self.records if not r.ok)

    @property
    def all_ok(self) -> bool:
        return not self.failures


def check_instance(c: CanonicalDoubleSpider, oracle_max: int | None = None) -> SweepRecord:
    """Label one instance and certify the result (optionally against the oracle)."""
    p = derive_parameters(c)
    tag = classify(p)
    start = time.perf_counter()
    ok, detail = True, ""
    try:
        lt = strongly_antimagic_label(c)
        if not verify_bijection(lt.labeling):
            ok, detail = False, "labels are not a bijection"
        else:
            report = verify_strongly_antimagic(lt.spider, lt.labeling)
            if not report.strong_ok:
                ok, detail = False, report.violation.describe()
        if ok and oracle_max is not None and p.m <= oracle_max:
            result = find_strongly_antimagic(lt.spider.tree, SearchBudget(max_edges=oracle_max))
            if not result.found:
                ok, detail = False, f"oracle disagrees: {result.status}"
    except Exception as exc:  # a construction bug, not a property failure
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return SweepRecord(c, p.m, tag, ok, detail, time.perf_counter() - start)


def _check_star(args: tuple[CanonicalDoubleSpider, int | None]) -> SweepRecord:
    return check_instance(*args)


def run_sweep(max_edges: int, oracle_max: int | None = None, workers: int = 1) -> SweepReport:
    """Certify every instance with at most max_edges edges, in canonical order."""
    if max_edges < 5:
        raise ValueError("max_edges must be at least 5")
    instances = list(enumerate_instances(max_edges))
    if workers <= 1:
        records = [check_instance(c, oracle_max) for c in instances]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_check_star, [(c, oracle_max) for c in instances], chunksize=16))
    return SweepReport(max_edges=max_edges, records=tuple(records))


def format_report(report: SweepReport, include_timing: bool = False) -> str:
    """Render the sweep report; timing is opt-in so the text stays run-stable."""
    lines = [f"max_edges = {report.max_edges}", f"instances = {report.total}",
             f"failures = {len(report.failures)}"]
    for r in report.records:
        left = ",".join(map(str, r.instance.left_lengths))
        right = ",".join(map(str, r.instance.right_lengths))
        line = (f"instance core={r.instance.core_length} left={left} right={right} "
                f"m={r.m} case={r.tag.value} result={'pass' if r.ok else 'FAIL'}")
        if r.detail:
            line += f" detail={r.detail}"
        if include_timing:
            line += f" elapsed={r.elapsed:.6f}s"
        lines.append(line)
    return "\n".join(lines) + "\n"
