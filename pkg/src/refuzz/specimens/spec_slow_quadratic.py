"""spec-slow-quadratic: per-line work quadratic in the line length.

Not a true hang: finishes quickly on short lines but a single line of a
few hundred thousand bytes outlasts any practical timeout.
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
    total = 0
    for line in data.split(b"\n"):
        for i in range(len(line)):
            # compares every suffix with every earlier position
            for j in range(i):
                total += line[i] == line[j]
    sys.stdout.write(f"{total}\n")
    sys.exit(0)


if __name__ == "__main__":
    main()
