"""spec-cat: copy the input to standard output and exit 0.

Control specimen; never fails on any input.
"""

import os
import sys


def read_input(argv):
    args = [a for a in argv[1:] if not a.startswith("-")]
    if args:
        with open(args[-1], "rb") as fh:
            return fh.read()
    return sys.stdin.buffer.read()


def main():
    data = read_input(sys.argv)
    try:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    except BrokenPipeError:
        pass
    os._exit(0)


if __name__ == "__main__":
    main()
