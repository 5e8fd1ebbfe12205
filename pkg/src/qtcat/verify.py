"""Verification drivers: conjecture checks, base-case computations, and the
string / projection consistency harnesses.

Everything here reduces to exact integer identities; a report either passes
or carries a concrete counterexample witness.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import gcd

from qtcat import cycles, kernels
from qtcat.bijections import (
    BoundedPartition,
    bounded_partitions,
    f,
    g,
    height_from_path,
)
from qtcat.paths import (
    PositionPath,
    degr_alpha,
    enumerate_positions,
    max_area,
    max_area_rational,
)
from qtcat.qtpoly import QtPolynomial, sym


@dataclass
class VerificationReport:
    params: dict
    verdict: bool
    lhs: QtPolynomial | None = None
    rhs: QtPolynomial | None = None
    witness: object = None
    counts: dict = field(default_factory=dict)

    def to_obj(self):
        return {
            "params": self.params,
            "verdict": "pass" if self.verdict else "fail",
            "lhs": self.lhs.to_obj() if self.lhs is not None else None,
            "rhs": self.rhs.to_obj() if self.rhs is not None else None,
            "witness": self.witness,
            "counts": self.counts,
        }


# ---------------------------------------------------------------------------
# conjecture: both sides, slice by slice


def _slices_from_census(all_counts, max_counts, M):
    """Per-degree (lhs, rhs) polynomials from (degr, area) count tables."""
    lhs = {}
    rhs = {}
    for (d, a), c in all_counts.items():
        lhs.setdefault(d, {})[(a, M - d - a)] = c
    for d in list(lhs):
        lhs[d] = QtPolynomial(lhs[d])
    for (d, a), c in max_counts.items():
        term = sym(a, M - d - a)
        acc = rhs.get(d, QtPolynomial())
        for _ in range(c):
            acc = acc + term
        rhs[d] = acc
    return lhs, rhs


def catalan_slice(n, s, d):
    """Sum of q^area t^(M-d-area) over the degree-d paths of slope n/s."""
    if gcd(n, s) != 1:
        raise ValueError("slope %d/%d is not coprime" % (n, s))
    if d < 0:
        raise ValueError("d must be >= 0")
    all_counts, _ = kernels.rational_census(n, s)
    M = max_area_rational(n, s)
    terms = {}
    for (dd, a), c in all_counts.items():
        if dd == d:
            terms[(a, M - d - a)] = c
    return QtPolynomial(terms)


def conjecture_rhs_slice(n, s, d):
    """Sum of sym(area, M-d-area) over the maximal degree-d paths."""
    if gcd(n, s) != 1:
        raise ValueError("slope %d/%d is not coprime" % (n, s))
    _, max_counts = kernels.rational_census(n, s)
    M = max_area_rational(n, s)
    acc = QtPolynomial()
    for (dd, a), c in max_counts.items():
        if dd == d:
            term = sym(a, M - d - a)
            for _ in range(c):
                acc = acc + term
    return acc


def catalan_poly(n, s):
    """The full polynomial: sum of q^area t^dinv over all paths."""
    if gcd(n, s) != 1:
        raise ValueError("slope %d/%d is not coprime" % (n, s))
    all_counts, _ = kernels.rational_census(n, s)
    M = max_area_rational(n, s)
    terms = {}
    for (d, a), c in all_counts.items():
        key = (a, M - d - a)
        terms[key] = terms.get(key, 0) + c
    return QtPolynomial(terms)


def check_conjecture(n, s):
    """Compare both sides of the conjecture slice by slice over one sweep."""
    if gcd(n, s) != 1:
        raise ValueError("slope %d/%d is not coprime" % (n, s))
    t0 = time.perf_counter()
    all_counts, max_counts = kernels.rational_census(n, s)
    M = max_area_rational(n, s)
    lhs_by_d, rhs_by_d = _slices_from_census(all_counts, max_counts, M)
    witness = None
    verdict = True
    for d in sorted(set(lhs_by_d) | set(rhs_by_d)):
        lhs = lhs_by_d.get(d, QtPolynomial())
        rhs = rhs_by_d.get(d, QtPolynomial())
        if lhs != rhs:
            verdict = False
            witness = {"d": d, "difference": (lhs - rhs).to_obj()}
            break
    total_lhs = QtPolynomial()
    total_rhs = QtPolynomial()
    for p in lhs_by_d.values():
        total_lhs = total_lhs + p
    for p in rhs_by_d.values():
        total_rhs = total_rhs + p
    return VerificationReport(
        params={"n": n, "s": s},
        verdict=verdict,
        lhs=total_lhs,
        rhs=total_rhs,
        witness=witness,
        counts={
            "paths": sum(all_counts.values()),
            "maximal": sum(max_counts.values()),
            "runtime": round(time.perf_counter() - t0, 3),
        },
    )


# ---------------------------------------------------------------------------
# base-case computations


def lstar(m, dstar):
    """min { ell : m(ell-1) > dstar }."""
    return dstar // m + 2


def computation1(m, dstar):
    """Orbit-length bound for every maximal path at ell* = lstar(m, dstar).

    For each maximal x with degr <= dstar, checks
    area(lowest(x)) <= M - height(x) - degr(x).
    """
    t0 = time.perf_counter()
    ell = lstar(m, dstar)
    M = max_area(ell, m)
    checked = 0
    witness = None
    for d, a in kernels.ellm_maximal_bounded(ell, m, dstar):
        checked += 1
        h = height_from_path(PositionPath(m, a))
        low = cycles.lowest_tuple(a, m)
        if sum(low) > M - h - d:
            witness = {"positions": list(a), "degr": d, "lowest_area": sum(low)}
            break
    return VerificationReport(
        params={"m": m, "dstar": dstar, "lstar": ell},
        verdict=witness is None,
        witness=witness,
        counts={
            "maximal_paths": checked,
            "runtime": round(time.perf_counter() - t0, 3),
        },
    )


def computation2(m, dstar):
    """Slice identity for every ell <= lstar(m, dstar) and every d <= dstar."""
    t0 = time.perf_counter()
    witness = None
    paths = maximal = 0
    for ell in range(1, lstar(m, dstar) + 1):
        all_counts, max_counts = kernels.ellm_census_bounded(ell, m, dstar)
        paths += sum(all_counts.values())
        maximal += sum(max_counts.values())
        M = max_area(ell, m)
        lhs_by_d, rhs_by_d = _slices_from_census(all_counts, max_counts, M)
        for d in range(dstar + 1):
            lhs = lhs_by_d.get(d, QtPolynomial())
            rhs = rhs_by_d.get(d, QtPolynomial())
            if lhs != rhs:
                witness = {"ell": ell, "d": d, "difference": (lhs - rhs).to_obj()}
                break
        if witness is not None:
            break
    return VerificationReport(
        params={"m": m, "dstar": dstar, "lstar": lstar(m, dstar)},
        verdict=witness is None,
        witness=witness,
        counts={
            "paths": paths,
            "maximal": maximal,
            "runtime": round(time.perf_counter() - t0, 3),
        },
    )


def basecase(m_values, dstar, jobs=1):
    """computations 1 and 2 across a range of m; overall report."""
    m_values = list(m_values)
    if jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            r1 = pool.starmap(computation1, [(m, dstar) for m in m_values])
            r2 = pool.starmap(computation2, [(m, dstar) for m in m_values])
    else:
        r1 = [computation1(m, dstar) for m in m_values]
        r2 = [computation2(m, dstar) for m in m_values]
    verdict = all(r.verdict for r in r1 + r2)
    witness = None
    for r in r1 + r2:
        if not r.verdict:
            witness = {"params": r.params, "witness": r.witness}
            break
    return VerificationReport(
        params={"m_values": m_values, "dstar": dstar},
        verdict=verdict,
        witness=witness,
        counts={
            "computation1": [r.counts for r in r1],
            "computation2": [r.counts for r in r2],
        },
    )


# ---------------------------------------------------------------------------
# strings and projection


def verify_string_partition(ell, m, d):
    """The connected degree-d paths are the disjoint union of the strings."""
    if d >= (ell - 1) * m:
        raise ValueError("need d < (ell-1)m")
    t0 = time.perf_counter()
    connected = set()
    disconnected = set()
    for p in enumerate_positions(ell, m):
        if degr_alpha(p) != d:
            continue
        if cycles.is_connected(p):
            connected.add(p.positions)
        else:
            disconnected.add(p.positions)
    strings = []
    covered = set()
    witness = None
    for lam in bounded_partitions(d, ell - 1):
        st = cycles.string_of(lam, m)
        elems = {p.positions for p in st.elements}
        if covered & elems:
            witness = {
                "reason": "strings overlap",
                "partition": list(lam.parts),
                "overlap": sorted(covered & elems),
            }
            break
        covered |= elems
        strings.append(st)
    if witness is None and covered != connected:
        witness = {
            "reason": "string union differs from connected set",
            "missing": sorted(connected - covered)[:5],
            "extra": sorted(covered - connected)[:5],
        }
    return VerificationReport(
        params={"ell": ell, "m": m, "d": d},
        verdict=witness is None,
        witness=witness,
        counts={
            "strings": len(strings),
            "connected": len(connected),
            "disconnected": len(disconnected),
            "runtime": round(time.perf_counter() - t0, 3),
        },
    )


def verify_projection(lam: BoundedPartition, m):
    """Dropping the multiplicity p_0 shifts the lowest path uniformly.

    With lam = [p_0, ..., p_{ell-2}] and mu = [p_1, ..., p_{ell-2}]:
    lowest(f(g(lam))) = [0, a_1, ..., a_ell] forces a_1 = m - p_0 and
    lowest(f(g(mu))) = [a_1 - (m - p_0), ..., a_ell - (m - p_0)].
    """
    ell = lam.bound + 1
    if lam.size() >= (ell - 2) * m:
        raise ValueError("need |lam| < (ell-2)m")
    ps = lam.multiplicities()
    p0 = ps[0]
    mu = BoundedPartition.from_multiplicities(ps[1:])
    low_lam = cycles.lowest(f(g(lam, m))).positions
    low_mu = cycles.lowest(f(g(mu, m))).positions
    shift = m - p0
    expected_mu = tuple(v - shift for v in low_lam[1:])
    ok = low_lam[1] == shift and low_mu == expected_mu
    witness = None
    if not ok:
        witness = {
            "lam": list(lam.parts),
            "mu": list(mu.parts),
            "lowest_lam": list(low_lam),
            "lowest_mu": list(low_mu),
            "expected_mu": list(expected_mu),
        }
    return VerificationReport(
        params={"lam": list(lam.parts), "m": m, "ell": ell},
        verdict=ok,
        witness=witness,
        counts={},
    )
