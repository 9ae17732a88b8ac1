"""
A small test corpus
===================

Corpus files come from the size x charset x newline matrix.  Every file
is reproducible from the manifest line that describes it.
"""

import tempfile
from pathlib import Path

from refuzz.corpus import CorpusPlan, build_corpus, verify_corpus

out = Path(tempfile.mkdtemp(prefix="refuzz-corpus-"))
manifest = build_corpus(CorpusPlan(["small", "medium"], files_per_category=2,
                                   base_seed=2020, output_dir=out))

for e in manifest.entries[:6]:
    print(f"{e.path:38} {e.size:8}  {e.spec.render()}")
print("...", len(manifest.entries), "files in", out)

# Re-reading the manifest checks every digest
print("problems:", verify_corpus(out))

# Flip one byte and verification notices
victim = out / manifest.entries[0].path
raw = bytearray(victim.read_bytes())
raw[0] ^= 0xFF
victim.write_bytes(bytes(raw))
print("after tampering:", verify_corpus(out))
