"""Pure-Python integer polynomial kernels.

Same signatures as the compiled ``_kernels`` extension. Coefficient lists
hold Python ints in ascending order of powers.
"""


def convolve(a, b):
    """Product of two integer coefficient lists."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def taylor_shift(a, c):
    """Coefficients of P(x + c) for an integer shift ``c``."""
    out = list(a)
    n = len(out)
    if c == 0 or n < 2:
        return out
    # repeated synthetic division
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] += c * out[j + 1]
    return out


def horner(a, p, q):
    """Numerator of P(p/q) scaled by q**(len(a)-1)."""
    acc = 0
    qpow = 1
    for ai in reversed(a):
        acc = acc * p + ai * qpow
        qpow *= q
    return acc


def binomial_row(m, jmax):
    """[binomial(m, j) for j in 0..jmax] with any integer upper index m."""
    row = [1]
    cur = 1
    for j in range(1, jmax + 1):
        cur = cur * (m - j + 1) // j
        row.append(cur)
    return row
