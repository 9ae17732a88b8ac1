"""spec-crash-bounds: fixed-capacity line buffer with no bound check.

Trigger: any line (newline excluded) longer than 256 bytes.
Outcome: SIGABRT, standing in for the write past the end of the buffer.
Category: pointers and arrays.
"""

import os
import sys

CAPACITY = 256


def read_input(argv):
    args = [a for a in argv[1:] if not a.startswith("-")]
    if args:
        with open(args[-1], "rb") as fh:
            return fh.read()
    return sys.stdin.buffer.read()


def main():
    data = read_input(sys.argv)
    buf = bytearray(CAPACITY)
    for line in data.split(b"\n"):
        if len(line) > CAPACITY:
            os.abort()
        buf[:len(line)] = line
    sys.exit(0)


if __name__ == "__main__":
    main()
