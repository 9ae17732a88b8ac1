"""spec-crash-retval: an unchecked error return from the tokenizer.

Trigger: first input byte is a single quote (an unmatched quote makes the
tokenizer fail; the failure code is ignored and the unset token list is
used).  Outcome: SIGABRT.  Category: return values.
"""

import os
import sys


def read_input(argv):
    args = [a for a in argv[1:] if not a.startswith("-")]
    if args:
        with open(args[-1], "rb") as fh:
            return fh.read()
    return sys.stdin.buffer.read()


def tokenize(line):
    if line[:1] == b"'":
        return -1, None
    return 0, line.split()


def main():
    data = read_input(sys.argv)
    _status, tokens = tokenize(data)
    if tokens is None:
        os.abort()
    sys.exit(0)


if __name__ == "__main__":
    main()
