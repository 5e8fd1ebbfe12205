# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; same contract as qtcat._kernels_py."""

from math import gcd

BACKEND = "c"

# static buffer size: path length (s or ell+1) must stay below this
MAXLEN = 128


def rational_census(long n, long s):
    """Count the paths of slope n/s by (degr, area); see _kernels_py."""
    if gcd(n, s) != 1:
        raise ValueError("slope %d/%d is not coprime" % (n, s))
    cdef long ell = s - 1
    if ell >= 128:
        raise ValueError("slope denominator too large for compiled kernel")
    cdef long M = 0
    cdef long i
    for i in range(ell):
        M += n * (i + 1) // s

    all_counts = {}
    max_counts = {}
    if ell == 0:
        all_counts[(0, 0)] = 1
        max_counts[(0, 0)] = 1
        return all_counts, max_counts

    cdef long xs[128]
    cdef long pref[128]
    cdef long darr[128]
    cdef long warr[128]
    cdef long slk[128]
    cdef long room[128]
    cdef long dd, w, total, nu, k, x, g, slack, minslack
    cdef long depth = 0
    pref[0] = 0
    xs[0] = -1
    room[0] = n // s
    darr[0] = 0
    warr[0] = 0
    slk[0] = n * s

    # iterative depth-first walk over x_0..x_{ell-1}; x_ell is forced
    while depth >= 0:
        xs[depth] = xs[depth] + 1
        x = xs[depth]
        if x > room[depth]:
            depth -= 1
            continue
        total = pref[depth] + x
        dd = darr[depth]
        if depth >= 1:
            # gamma_{k depth} for k in 1..depth, via scaled beta numerators
            for k in range(1, depth + 1):
                nu = s * (total - pref[k]) - n * (depth - k + 1)
                if nu > 0:
                    g = nu // s
                    if xs[k] < g:
                        g = xs[k]
                    dd += g
                elif nu < 0:
                    g = (-nu) // s
                    if xs[k - 1] < g:
                        g = xs[k - 1]
                    dd += g
                else:
                    raise AssertionError("beta = 0 for coprime slope")
        slack = n * (depth + 1) - s * total
        minslack = slk[depth]
        if slack < minslack:
            minslack = slack
        w = warr[depth] + (ell - depth) * x
        if depth == ell - 1:
            key = (dd, M - w)
            if key in all_counts:
                all_counts[key] += 1
            else:
                all_counts[key] = 1
            if minslack == 1:
                if key in max_counts:
                    max_counts[key] += 1
                else:
                    max_counts[key] = 1
            continue
        depth += 1
        pref[depth] = total
        xs[depth] = -1
        room[depth] = n * (depth + 1) // s - total
        darr[depth] = dd
        warr[depth] = w
        slk[depth] = minslack
    return all_counts, max_counts


cdef inline long _alpha(long a, long b, long m) noexcept:
    cdef long d
    if a <= b:
        d = b - a
    else:
        d = a - b - 1
    return d if d < m else m


def ellm_census_bounded(long ell, long m, long dstar):
    """Count (ell, m)-paths with degr <= dstar by (degr, area); see
    _kernels_py."""
    if dstar < 0:
        raise ValueError("dstar must be >= 0")
    if ell + 1 >= 128:
        raise ValueError("ell too large for compiled kernel")
    all_counts = {}
    max_counts = {}

    cdef long a[128]
    cdef long dacc[128]
    cdef long aacc[128]
    cdef long k, v, dd
    cdef long depth = 1
    a[0] = 0
    dacc[1] = 0
    aacc[1] = 0
    a[1] = m + 1  # pre-decrement form: a_1 runs m..0, step-lex order
    while depth >= 1:
        a[depth] = a[depth] - 1
        v = a[depth]
        if v < 0:
            depth -= 1
            continue
        dd = dacc[depth] - (v - m if v > m else 0)
        for k in range(1, depth):
            dd += _alpha(a[k], v, m)
        if dd > dstar:
            continue
        if depth == ell:
            key = (dd, aacc[depth] + v)
            if key in all_counts:
                all_counts[key] += 1
            else:
                all_counts[key] = 1
            if a[1] == 0:
                if key in max_counts:
                    max_counts[key] += 1
                else:
                    max_counts[key] = 1
            continue
        dacc[depth + 1] = dd
        aacc[depth + 1] = aacc[depth] + v
        depth += 1
        a[depth] = v + m + 1
    return all_counts, max_counts


def ellm_maximal_bounded(long ell, long m, long dstar):
    """List of (degr, positions) over maximal (ell, m)-paths with
    degr <= dstar; see _kernels_py."""
    if dstar < 0:
        raise ValueError("dstar must be >= 0")
    if ell + 1 >= 128:
        raise ValueError("ell too large for compiled kernel")
    out = []
    if ell < 1:
        return out
    if ell == 1:
        out.append((0, (0, 0)))
        return out

    cdef long a[128]
    cdef long dacc[128]
    cdef long k, v, dd
    cdef long depth = 2
    a[0] = 0
    a[1] = 0  # maximal paths only
    dacc[2] = 0
    a[2] = m + 1
    while depth >= 2:
        a[depth] = a[depth] - 1
        v = a[depth]
        if v < 0:
            depth -= 1
            continue
        dd = dacc[depth] - (v - m if v > m else 0)
        for k in range(1, depth):
            dd += _alpha(a[k], v, m)
        if dd > dstar:
            continue
        if depth == ell:
            out.append((dd, tuple([a[k] for k in range(ell + 1)])))
            continue
        dacc[depth + 1] = dd
        depth += 1
        a[depth] = v + m + 1
    return out
