"""Statistics and tables over run records.

A utility fails when any of its runs crashed or hung.  Utilities whose
every run was a setup error were never really tested and are left out of
the counts.  Rates are integer percentages rounded half up, which matches
TeX's ``\\numexpr`` integer division.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .outcome import CRASH, HANG, PASS, SETUP_ERROR, SEVERITY
from .records import RunRecord, load_records

CATEGORIES = ("ReturnValues", "PointersAndArrays", "ErrorHandling",
              "SubProcess", "ComplexState", "Other")
CATEGORY_TITLES = {
    "ReturnValues": "Return Values",
    "PointersAndArrays": "Pointers and Arrays",
    "ErrorHandling": "Error Handling",
    "SubProcess": "Sub-Process",
    "ComplexState": "Complex State",
    "Other": "Other",
}

MARK_CRASH = "●"
MARK_HANG = "○"
MARK_FIXED = "▼"
MARK_REGRESSED = "▲"
MARK_UNAVAILABLE = "−"


def failure_rate(failed: int, tested: int) -> int:
    """Failed share of tested as an integer percent, rounded half up.

    >>> failure_rate(9, 74), failure_rate(15, 78), failure_rate(12, 76)
    (12, 19, 16)
    """
    if tested <= 0:
        raise ValueError("tested must be positive")
    if not 0 <= failed <= tested:
        raise ValueError("failed must lie in [0, tested]")
    return (200 * failed + tested) // (2 * tested)


@dataclass
class SummaryStats:
    platform: str
    worst: dict[str, str] = field(default_factory=dict)  # utility -> outcome kind
    untested: set[str] = field(default_factory=set)

    @property
    def tested(self) -> int:
        return len(self.worst)

    @property
    def failing(self) -> set[str]:
        return {u for u, k in self.worst.items() if k in (CRASH, HANG)}

    @property
    def failed(self) -> int:
        return len(self.failing)

    @property
    def rate(self) -> int | None:
        return failure_rate(self.failed, self.tested) if self.tested else None


def _worst(kinds: Iterable[str]) -> str:
    return max(kinds, key=SEVERITY.__getitem__)


def summarize(records: Iterable[RunRecord], platform: str | None = None) -> SummaryStats:
    """Reduce records to per-utility worst outcomes (crash > hang > pass)."""
    kinds: dict[str, list[str]] = defaultdict(list)
    labels = set()
    for r in records:
        kinds[r.utility].append(r.outcome.kind)
        labels.add(r.platform)
    if platform is None:
        platform = ",".join(sorted(labels))
    stats = SummaryStats(platform)
    for utility, ks in kinds.items():
        real = [k for k in ks if k != SETUP_ERROR]
        if real:
            stats.worst[utility] = _worst(real)
        else:
            stats.untested.add(utility)
    return stats


def summarize_by_platform(records: Iterable[RunRecord]) -> dict[str, SummaryStats]:
    groups: dict[str, list[RunRecord]] = defaultdict(list)
    for r in records:
        groups[r.platform].append(r)
    return {p: summarize(rs, p) for p, rs in groups.items()}


@dataclass
class Comparison:
    old: SummaryStats
    new: SummaryStats
    fixed: set[str] = field(default_factory=set)
    regressed: set[str] = field(default_factory=set)
    still: set[str] = field(default_factory=set)
    never: set[str] = field(default_factory=set)
    unavailable: set[str] = field(default_factory=set)

    def status(self, utility: str) -> str:
        for label in ("fixed", "regressed", "still", "never", "unavailable"):
            if utility in getattr(self, label):
                return label
        raise KeyError(utility)


def compare_campaigns(old: SummaryStats, new: SummaryStats) -> Comparison:
    """Partition the union of utility names by how their status changed."""
    c = Comparison(old, new)
    names = set(old.worst) | set(new.worst) | old.untested | new.untested
    for u in names:
        if u not in old.worst or u not in new.worst:
            c.unavailable.add(u)
            continue
        was, now = u in old.failing, u in new.failing
        if was and now:
            c.still.add(u)
        elif was:
            c.fixed.add(u)
        elif now:
            c.regressed.add(u)
        else:
            c.never.add(u)
    return c


# ---------------------------------------------------------------- rendering

def _render(header: Sequence[str], rows: Sequence[Sequence[str]], fmt: str) -> str:
    if fmt == "tsv":
        buf = io.StringIO()
        w = csv.writer(buf, delimiter="\t", lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    if fmt != "markdown":
        raise ValueError(f"unknown format {fmt!r}")

    def line(cells):
        return "| " + " | ".join(c.replace("|", "\\|") for c in cells) + " |"

    out = [line(header), "|" + "|".join("---" for _ in header) + "|"]
    out += [line(r) for r in rows]
    return "\n".join(out) + "\n"


def render_stats(stats: Sequence[SummaryStats], fmt: str = "markdown") -> str:
    """Tested / failed / rate per platform, one column per platform label (ascending)."""
    cols = sorted(stats, key=lambda s: s.platform)
    header = ["Platform", *[s.platform for s in cols]]
    if not cols:
        return _render(header, [], fmt)
    rows = [
        ["# tested", *[str(s.tested) for s in cols]],
        ["# failed", *[str(s.failed) for s in cols]],
        ["% failed", *["-" if s.rate is None else f"{s.rate}%" for s in cols]],
    ]
    return _render(header, rows, fmt)


def _mark(kind: str | None) -> str:
    return {CRASH: MARK_CRASH, HANG: MARK_HANG, PASS: "", None: MARK_UNAVAILABLE}[kind]


def render_results(stats: Sequence[SummaryStats], fmt: str = "markdown") -> str:
    """Per-utility outcome matrix: crash, hang, blank for pass, dash when not tested there."""
    cols = sorted(stats, key=lambda s: s.platform)
    names = sorted(set().union(*[set(s.worst) | s.untested for s in cols])) if cols else []
    rows = [[u, *[_mark(s.worst.get(u)) for s in cols]] for u in names]
    return _render(["Utility", *[s.platform for s in cols]], rows, fmt)


def render_comparison(c: Comparison, fmt: str = "markdown") -> str:
    """Old vs new for every utility that failed in either campaign."""
    header = ["Utility", c.old.platform or "old", c.new.platform or "new", "Status"]
    rows = []
    names = sorted(c.fixed | c.regressed | c.still
                   | {u for u in c.unavailable if u in c.old.failing or u in c.new.failing})
    for u in names:
        old_cell = _mark(c.old.worst.get(u))
        new_cell = _mark(c.new.worst.get(u))
        if u in c.fixed:
            old_cell = MARK_FIXED
        if u in c.regressed:
            new_cell = MARK_REGRESSED
        rows.append([u, old_cell, new_cell, c.status(u)])
    return _render(header, rows, fmt)


@dataclass(frozen=True)
class CategoryAnnotation:
    utility: str
    platform: str
    categories: frozenset[str]
    note: str = ""

    def __post_init__(self):
        if not self.categories:
            raise ValueError(f"{self.utility}: at least one category required")
        bad = set(self.categories) - set(CATEGORIES)
        if bad:
            raise ValueError(f"{self.utility}: unknown categories {sorted(bad)}")


def load_annotations(text: str) -> list[CategoryAnnotation]:
    """Parse a TSV of ``utility, platform, categories (comma separated), note``."""
    out = []
    for row in csv.reader(io.StringIO(text), delimiter="\t"):
        if not row or row[0].startswith("#") or row[0] == "utility":
            continue
        utility, plat, cats = row[0], row[1], row[2]
        note = row[3] if len(row) > 3 else ""
        out.append(CategoryAnnotation(
            utility, plat, frozenset(c.strip() for c in cats.split(",") if c.strip()), note))
    return out


def render_categories(annotations: Sequence[CategoryAnnotation], fmt: str = "markdown") -> str:
    """One row per utility; each cell concatenates the platform initials for that cause.

    Initials appear in the order their platforms first occur in ``annotations``.
    """
    order: dict[str, int] = {}
    for a in annotations:
        order.setdefault(a.platform, len(order))
    cells: dict[str, dict[str, set[str]]] = defaultdict(lambda: defaultdict(set))
    for a in annotations:
        for cat in a.categories:
            cells[a.utility][cat].add(a.platform)
    rows = []
    for u in sorted(cells):
        row = [u]
        for cat in CATEGORIES:
            plats = sorted(cells[u][cat], key=order.__getitem__)
            row.append("".join(p[:1].upper() for p in plats))
        rows.append(row)
    return _render(["Utility", *[CATEGORY_TITLES[c] for c in CATEGORIES]], rows, fmt)


def campaign_report(record_sets: Sequence[Sequence[RunRecord]], fmt: str = "markdown",
                    annotations: Sequence[CategoryAnnotation] = (),
                    baseline: Sequence[RunRecord] | None = None) -> str:
    stats = []
    for recs in record_sets:
        stats.extend(summarize_by_platform(recs).values())
    parts = ["## Test statistics\n", render_stats(stats, fmt),
             "\n## Results by utility\n", render_results(stats, fmt)]
    if baseline is not None:
        old = summarize(baseline)
        for s in sorted(stats, key=lambda s: s.platform):
            parts += [f"\n## Comparison: {old.platform} vs {s.platform}\n",
                      render_comparison(compare_campaigns(old, s), fmt)]
    if annotations:
        parts += ["\n## Failures by cause\n", render_categories(annotations, fmt)]
    return "".join(parts)


def main(argv: Sequence[str] | None = None) -> int:
    p = argparse.ArgumentParser(prog="refuzz-report", description="Summarize campaign results.")
    p.add_argument("result_dirs", nargs="+", metavar="RESULT_DIR")
    p.add_argument("--annotations", help="TSV: utility, platform, categories, note")
    p.add_argument("--compare", metavar="OLD_DIR", help="earlier campaign to compare against")
    p.add_argument("--format", choices=("markdown", "tsv"), default="markdown")
    ns = p.parse_args(None if argv is None else list(argv))
    record_sets = []
    for d in ns.result_dirs:
        recs = load_records(d)
        for r in recs:
            r.platform = r.platform or Path(d).name
        record_sets.append(recs)
    ann = load_annotations(Path(ns.annotations).read_text()) if ns.annotations else ()
    baseline = load_records(ns.compare) if ns.compare else None
    sys.stdout.write(campaign_report(record_sets, ns.format, ann, baseline))
    return 0


if __name__ == "__main__":
    sys.exit(main())
