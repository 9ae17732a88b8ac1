"""spec-editor: interactive target that quits only on ESC : q !

Puts its terminal in raw mode, echoes what it reads, and exits 0 as soon
as the four bytes ESC ':' 'q' '!' arrive in sequence.  It never exits on
end of input; without the quit sequence it waits forever.
"""

import os
import sys
import time

QUIT = b"\x1b:q!"


def wait_forever():
    while True:
        time.sleep(3600)


def main():
    args = [a for a in sys.argv[1:] if not a.startswith("-")]
    if args:
        with open(args[-1], "rb") as fh:
            data = fh.read()
        if QUIT in data:
            os._exit(0)
        wait_forever()

    fd = sys.stdin.fileno()
    if os.isatty(fd):
        import termios
        import tty
        # TCSANOW: keep bytes already queued by the line discipline
        tty.setraw(fd, termios.TCSANOW)
    seen = b""
    while True:
        try:
            chunk = os.read(fd, 4096)
        except OSError:
            chunk = b""
        if not chunk:
            wait_forever()
        try:
            os.write(1, chunk)
        except OSError:
            pass
        seen = (seen + chunk)[-(len(chunk) + len(QUIT)):]
        if QUIT in seen:
            os._exit(0)


if __name__ == "__main__":
    main()
