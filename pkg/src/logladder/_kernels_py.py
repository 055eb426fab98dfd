"""Pure-Python kernels: the hot inner loops, arithmetic-only.

This module is the fallback twin of the compiled ``_kernels`` extension.
Both implementations perform the identical sequence of float operations,
so results are bit-for-bit equal regardless of which one is active.

Nothing here may call a host square root, exp, log or fractional power;
the only operations used are +, -, *, / and comparisons (the source audit
in the test suite enforces this).
"""


def default_guess(x):
    """Starting point for the square-root iteration.

    The root of a d-digit number has about d/2 digits, so for x >= 1 the
    guess is 10 raised to floor(d / 2), built by repeated multiplication;
    for x < 1 the guess is 1.  Always lands within roughly one order of
    magnitude of the root (and the iteration converges from any positive
    start anyway); x = 1 starts exactly on its own root.
    """
    if x < 1.0:
        return 1.0
    n = int(x)
    d = 0
    while n:
        d += 1
        n //= 10
    g = 1.0
    for _ in range(d // 2):
        g *= 10.0
    return g


def heron_pairs(x, guess, rel_tol, max_iterations):
    """Run the divide-and-average square-root iteration.

    Returns ``(pairs, result, converged)`` where ``pairs`` is the list of
    (x_k, y_k) iterates actually visited, y_k = x / x_k, and the next
    iterate is their mean.  Stops when consecutive iterates agree to
    ``rel_tol`` (relative), or exactly coincide, whichever happens first.
    """
    pairs = []
    xk = guess
    for _ in range(max_iterations):
        yk = x / xk
        pairs.append((xk, yk))
        xn = (xk + yk) / 2.0
        if xn == xk or abs(xn - xk) <= rel_tol * xn:
            return pairs, xn, True
        xk = xn
    return pairs, xk, False


def ladder_rungs(base, depth, rel_tol, max_iterations):
    """Repeated square roots of ``base``: rungs[j] = base^(1/2^j).

    Each rung is the converged square root of the previous one; if any
    rung fails to converge the whole build reports failure (second return
    value False).
    """
    rungs = [base]
    for _ in range(depth):
        _, r, ok = heron_pairs(rungs[-1], default_guess(rungs[-1]),
                               rel_tol, max_iterations)
        if not ok:
            return rungs, False
        rungs.append(r)
    return rungs, True


def log_split(y, base, rungs):
    """Characteristic plus greedy dyadic mantissa extraction.

    Scales y by whole powers of ``base`` until the residual sits in
    [1, base), then walks the rung list: whenever the residual still
    exceeds rungs[j] it is divided out and bit j of the mantissa is set.
    Returns ``(characteristic, mantissa_numerator, residual)`` with the
    numerator on the 2^-depth grid and 1 <= residual < rungs[depth].
    """
    c = 0
    r = y
    while r >= base:
        r /= base
        c += 1
    while r < 1.0:
        r *= base
        c -= 1
    k = 0
    depth = len(rungs) - 1
    for j in range(1, depth + 1):
        k <<= 1
        if r >= rungs[j]:
            r /= rungs[j]
            k |= 1
    return c, k, r


def mantissa_product(numerator, level, rungs):
    """Product of the rungs selected by the bits of ``numerator``.

    Bit j (counted from the most significant of ``level`` bits) selects
    rungs[j], i.e. the exponent contribution 2^-j.  The empty selection
    returns exactly 1.
    """
    v = 1.0
    for j in range(1, level + 1):
        if (numerator >> (level - j)) & 1:
            v *= rungs[j]
    return v


def int_pow(b, m):
    """b multiplied by itself m times (square-and-multiply), m >= 0."""
    r = 1.0
    f = b
    while m:
        if m & 1:
            r *= f
        m >>= 1
        if m:
            f *= f
    return r


def table_values(rungs, level):
    """Antilog values base^(k/2^level) for every k in [0, 2^level).

    Each entry is the direct product of the rungs picked out by the bits
    of k, so entry errors stay at a few rounding units instead of drifting
    along the table.
    """
    out = []
    for k in range(1 << level):
        v = 1.0
        for j in range(1, level + 1):
            if (k >> (level - j)) & 1:
                v *= rungs[j]
        out.append(v)
    return out


def trapezoid_recip(x, steps):
    """Trapezoid sum of 1/t over [1, x] with ``steps`` uniform panels."""
    if x == 1.0:
        return 0.0
    h = (x - 1.0) / steps
    s = 0.5 * (1.0 + 1.0 / x)
    for i in range(1, steps):
        s += 1.0 / (1.0 + i * h)
    return s * h
