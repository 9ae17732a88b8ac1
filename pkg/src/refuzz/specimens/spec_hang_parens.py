"""spec-hang-parens: macro expander that loops on unbalanced parentheses.

Trigger: more '(' than ')' in the whole input.  Outcome: spins forever.
Category: pointers and arrays.
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
    depth = data.count(b"(") - data.count(b")")
    while depth > 0:
        # searches for the closing parenthesis that never comes
        depth = depth + 0
    sys.exit(0)


if __name__ == "__main__":
    main()
