"""spec-hang-noadvance: scanner whose cursor does not advance past NUL.

Trigger: leading 0x00 byte.  Outcome: spins forever.
Category: complex state.
"""

import sys


def read_input(argv):
    args = [a for a in argv[1:] if not a.startswith("-")]
    if args:
        with open(args[-1], "rb") as fh:
            return fh.read()
    return sys.stdin.buffer.read()


def main():
    data = read_input(sys.argv)
    # NUL is only treated as a token separator at the start of the buffer,
    # and the separator branch forgets to step past it.
    pos = 0
    while pos < len(data):
        if pos == 0 and data[pos] == 0:
            continue
        pos += 1
    sys.exit(0)


if __name__ == "__main__":
    main()
