"""Cycle maps on position-coordinate paths, strings, and connectivity.

right and left are mutually inverse maps that keep degr fixed and move area
by +1 / -1.  Iterating right from a maximal path until it becomes unrightable
produces the path's string; iterating left classifies a path as connected
(reaches a maximal path) or disconnected (hits an unleftable path first).
"""

from __future__ import annotations

from dataclasses import dataclass

from qtcat.paths import PositionPath, max_area


# ---------------------------------------------------------------------------
# raw-tuple helpers (used by the heavier verification loops)


def point_tuple(a, m):
    """Minimal r <= ell with a_r - a_ell > -m."""
    last = a[-1]
    for r, ai in enumerate(a):
        if ai - last > -m:
            return r
    raise AssertionError("unreachable: a_ell - a_ell = 0 > -m")


def pair_tuple(a, m):
    """Minimal r < ell with a_r - a_{r+2} >= -m (a_s = 0 for s > ell)."""
    ell = len(a) - 1
    for r in range(ell - 1):
        if a[r] - a[r + 2] >= -m:
            return r
    return ell - 1  # a_{ell-1} - 0 >= -m always holds


def cycleright_tuple(i, a):
    """[a_0..a_i, a_ell + 1, a_{i+1}..a_{ell-1}]."""
    return a[: i + 1] + (a[-1] + 1,) + a[i + 1 : len(a) - 1]


def cycleleft_tuple(i, a):
    """[a_0..a_i, a_{i+2}..a_ell, a_{i+1} - 1]."""
    return a[: i + 1] + a[i + 2 :] + (a[i + 1] - 1,)


def right_tuple(a, m):
    """cycleright at the point, or None when unrightable."""
    r = point_tuple(a, m)
    ell = len(a) - 1
    if r == ell or r > pair_tuple(a, m) + 1:
        return None
    return cycleright_tuple(r, a)


def left_tuple(a, m):
    """cycleleft at the pair, or None when unleftable.

    Callers must not pass a maximal tuple (a_1 == 0); see left().
    """
    r = pair_tuple(a, m)
    if a[r + 1] - a[-1] > m + 1:
        return None
    return cycleleft_tuple(r, a)


def lowest_tuple(a, m):
    """Iterate right until unrightable."""
    ell = len(a) - 1
    cap = max_area(ell, m) + 1
    for _ in range(cap):
        b = right_tuple(a, m)
        if b is None:
            return a
        a = b
    raise RuntimeError("right-orbit exceeded the area range; implementation bug")


def is_connected_tuple(a, m):
    """True when iterated left reaches a maximal tuple (a_1 == 0)."""
    ell = len(a) - 1
    cap = max_area(ell, m) + 1
    for _ in range(cap):
        if a[1] == 0:
            return True
        b = left_tuple(a, m)
        if b is None:
            return False
        a = b
    raise RuntimeError("left-orbit exceeded the area range; implementation bug")


# ---------------------------------------------------------------------------
# public operations on PositionPath


def point(p: PositionPath) -> int:
    return point_tuple(p.positions, p.m)


def pair(p: PositionPath) -> int:
    return pair_tuple(p.positions, p.m)


def right(p: PositionPath):
    """One right step, or None when unrightable."""
    b = right_tuple(p.positions, p.m)
    if b is None:
        return None
    return PositionPath(p.m, b)


def left(p: PositionPath):
    """One left step, or None when unleftable.

    Maximal paths (a_1 = 0) are a precondition violation, not "unleftable":
    the map is only defined off the maximal set.
    """
    if p.positions[1] == 0:
        raise ValueError("left is undefined on maximal paths")
    b = left_tuple(p.positions, p.m)
    if b is None:
        return None
    return PositionPath(p.m, b)


def lowest(p: PositionPath) -> PositionPath:
    return PositionPath(p.m, lowest_tuple(p.positions, p.m))


def is_connected(p: PositionPath) -> bool:
    return is_connected_tuple(p.positions, p.m)


# ---------------------------------------------------------------------------
# strings


@dataclass(frozen=True)
class PathString:
    """The right-orbit of a maximal path, indexed by its partition."""

    source: object  # BoundedPartition
    elements: tuple  # of PositionPath

    def areas(self):
        from qtcat.paths import area

        return [area(p) for p in self.elements]


def string_of(lam, m) -> PathString:
    """The string of the partition lam: the right-orbit of f(g(lam)).

    Requires |lam| < (ell - 1) m where ell - 1 is the partition's part bound.
    """
    from qtcat.bijections import f, g

    ell = lam.bound + 1
    if lam.size() >= (ell - 1) * m:
        raise ValueError("partition size must be < (ell-1)m")
    v = f(g(lam, m))
    elems = [v]
    cap = max_area(ell, m) + 1
    for _ in range(cap):
        nxt = right(elems[-1])
        if nxt is None:
            return PathString(source=lam, elements=tuple(elems))
        elems.append(nxt)
    raise RuntimeError("right-orbit exceeded the area range; implementation bug")
