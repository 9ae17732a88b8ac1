"""
Rates and comparison tables
===========================

Rates are integer percents rounded half up.  12 of 76 is 15.79%, which
prints as 16%.
"""

from refuzz.report import (
    compare_campaigns, failure_rate, load_annotations, render_categories,
    render_comparison, summarize,
)
from refuzz.config import ConfigEntry
from refuzz.outcome import TestOutcome
from refuzz.records import RunRecord

for failed, tested in [(9, 74), (15, 78), (12, 76)]:
    print(f"{failed}/{tested} -> {failure_rate(failed, tested)}%")


def records(platform, outcomes):
    return [RunRecord(ConfigEntry("stdin", u), [u], ["in"], [], "", 0.0, o, platform=platform)
            for u, o in outcomes.items()]


crash, hang, ok = TestOutcome.crashed(11), TestOutcome.hung(2.0), TestOutcome.passed(0)
old = summarize(records("1995", {"as": crash, "bc": hang, "col": crash, "diff": ok}))
new = summarize(records("2020", {"as": ok, "bc": hang, "col": crash, "diff": crash}))
print(render_comparison(compare_campaigns(old, new)))

print(render_categories(load_annotations(
    "col\tLinux\tPointersAndArrays\n"
    "col\tMacOS\tPointersAndArrays,ErrorHandling\n"
    "bc\tFreeBSD\tComplexState\n")))
