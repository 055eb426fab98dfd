# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: same contract, same float-operation order as
``_kernels_py``.  Built with -ffp-contract=off so no FMA contraction can
perturb the bit-identical guarantee.

Arithmetic-only: nothing in this file touches libm.
"""


def default_guess(double x):
    """Starting point for the square-root iteration (see _kernels_py)."""
    if x < 1.0:
        return 1.0
    n = int(x)
    d = 0
    while n:
        d += 1
        n //= 10
    cdef double g = 1.0
    cdef Py_ssize_t i
    for i in range(d // 2):
        g *= 10.0
    return g


def heron_pairs(double x, double guess, double rel_tol, int max_iterations):
    """Divide-and-average square-root iteration; see _kernels_py."""
    cdef list pairs = []
    cdef double xk = guess
    cdef double yk, xn
    cdef int i
    for i in range(max_iterations):
        yk = x / xk
        pairs.append((xk, yk))
        xn = (xk + yk) / 2.0
        if xn == xk or abs(xn - xk) <= rel_tol * xn:
            return pairs, xn, True
        xk = xn
    return pairs, xk, False


def ladder_rungs(double base, int depth, double rel_tol, int max_iterations):
    """Repeated square roots of ``base``; see _kernels_py."""
    cdef list rungs = [base]
    cdef double prev = base
    cdef int j
    for j in range(depth):
        _, r, ok = heron_pairs(prev, default_guess(prev),
                               rel_tol, max_iterations)
        if not ok:
            return rungs, False
        rungs.append(r)
        prev = r
    return rungs, True


def log_split(double y, double base, tuple rungs):
    """Characteristic plus greedy dyadic mantissa; see _kernels_py."""
    cdef long long c = 0
    cdef double r = y
    while r >= base:
        r /= base
        c += 1
    while r < 1.0:
        r *= base
        c -= 1
    cdef long long k = 0
    cdef int depth = len(rungs) - 1
    cdef int j
    cdef double rung
    for j in range(1, depth + 1):
        k <<= 1
        rung = rungs[j]
        if r >= rung:
            r /= rung
            k |= 1
    return c, k, r


def mantissa_product(long long numerator, int level, tuple rungs):
    """Product of the rungs selected by the numerator bits; see _kernels_py."""
    cdef double v = 1.0
    cdef int j
    for j in range(1, level + 1):
        if (numerator >> (level - j)) & 1:
            v *= <double> rungs[j]
    return v


def int_pow(double b, m):
    """Square-and-multiply integer power; see _kernels_py."""
    cdef double r = 1.0
    cdef double f = b
    while m:
        if m & 1:
            r *= f
        m >>= 1
        if m:
            f *= f
    return r


def table_values(tuple rungs, int level):
    """Antilog table values on the 2^-level grid; see _kernels_py."""
    cdef double ladder[64]
    cdef int j
    for j in range(1, level + 1):
        ladder[j] = rungs[j]
    cdef list out = []
    cdef long long k
    cdef double v
    for k in range(1 << level):
        v = 1.0
        for j in range(1, level + 1):
            if (k >> (level - j)) & 1:
                v *= ladder[j]
        out.append(v)
    return out


def trapezoid_recip(double x, long long steps):
    """Trapezoid sum of 1/t over [1, x]; see _kernels_py."""
    if x == 1.0:
        return 0.0
    cdef double h = (x - 1.0) / steps
    cdef double s = 0.5 * (1.0 + 1.0 / x)
    cdef long long i
    for i in range(1, steps):
        s += 1.0 / (1.0 + i * h)
    return s * h
