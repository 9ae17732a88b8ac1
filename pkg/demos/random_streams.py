"""
Random input streams
====================

The generator turns a 64-bit seed into a byte stream.  Same seed, same
bytes, on any machine.
"""

import numpy as np

from refuzz.generator import GenSpec, generate_bytes, parse_gen_cli

# Command-line form and the parsed spec are interchangeable
spec = parse_gen_cli(["40", "-p", "-s", "42"])
print(spec)
print(generate_bytes(spec))

# Line mode: length counts lines, each at most -l bytes before its newline
lines = generate_bytes(GenSpec(5, "printable", line_mode_max=20, seed=3))
for line in lines.splitlines():
    print(len(line), line)

# Byte histogram of a million bytes from the full 8-bit set (no NUL)
data = np.frombuffer(generate_bytes(GenSpec(10**6, seed=1)), dtype=np.uint8)
counts = np.bincount(data, minlength=256)
print("NUL count:", counts[0])
print("min/max count over 1..255:", counts[1:].min(), counts[1:].max())
