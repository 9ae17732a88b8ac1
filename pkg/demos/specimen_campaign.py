"""
A campaign against known-buggy specimens
========================================

Each specimen carries one of the classic bugs: an unchecked buffer, an
ignored return value, a loop that never terminates.  Running the random
corpus against them shows what a campaign looks like end to end.
"""

import tempfile
from pathlib import Path

from refuzz.corpus import CorpusPlan, build_corpus
from refuzz.report import campaign_report
from refuzz.runner import CampaignSettings, run_campaign
from refuzz.specimens import CAMPAIGN_SUITE, SPECIMENS, build

work = Path(tempfile.mkdtemp(prefix="refuzz-demo-"))
bins = build(work / "bin")
build_corpus(CorpusPlan(["small"], files_per_category=1, base_seed=1990,
                        output_dir=work / "corpus"))

for name in CAMPAIGN_SUITE:
    print(f"{name:22} {SPECIMENS[name].trigger}")

config = "\n".join(f"stdin {bins[n]} [-a -b]" for n in CAMPAIGN_SUITE)
settings = CampaignSettings(timeout=2, workers=4, campaign_seed=7, platform="Linux")
summary = run_campaign(config, work / "corpus", work / "results", settings)

for r in sorted(summary.records, key=lambda r: r.name):
    if r.outcome.failed:
        print(f"{r.name:55} {r.outcome.describe()}")

print(campaign_report([summary.records]))
print("orphans left behind:", summary.orphans)
