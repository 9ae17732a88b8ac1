"""Straight-line reference for the byte stream.

Deliberately scalar and dependency-free; it shares no code with the
package so it can check the vectorized generator.
"""

MASK = (1 << 64) - 1


def splitmix64(state):
    """Return (new_state, output)."""
    state = (state + 0x9E3779B97F4A7C15) & MASK
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return state, z ^ (z >> 31)


def pick(state, k):
    limit = ((1 << 64) // k) * k
    while True:
        state, u = splitmix64(state)
        if u < limit:
            return state, u % k


def charset(printable, nul):
    body = list(range(0x20, 0x7F)) if printable else list(range(0x01, 0x100))
    return ([0] if nul else []) + body


def stream(length, printable=False, nul=False, line_max=None, seed=0, modulus=None):
    if modulus is not None:
        seed %= modulus
    cs = charset(printable, nul)
    if line_max is not None:
        cs = [b for b in cs if b != 0x0A]
    state = seed
    out = bytearray()
    if line_max is None:
        for _ in range(length):
            state, i = pick(state, len(cs))
            out.append(cs[i])
    else:
        for _ in range(length):
            state, n = pick(state, line_max + 1)
            for _ in range(n):
                state, i = pick(state, len(cs))
                out.append(cs[i])
            out.append(0x0A)
    return bytes(out)


def raw_draws(seed, n):
    state = seed
    out = []
    for _ in range(n):
        state, u = splitmix64(state)
        out.append(u)
    return out
