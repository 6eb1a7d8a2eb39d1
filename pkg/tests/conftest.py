"""Shared oracles and helpers, independent of the library's own arithmetic."""

from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest
from hypothesis import settings

import eudoxos as E

settings.register_profile("suite", max_examples=60, deadline=None)
settings.load_profile("suite")


def bisect_root(square: Fraction, digits: int) -> tuple[Fraction, Fraction]:
    """Bisection oracle for sqrt(square): rational bracket of width 10^-digits.

    Uses only exact comparisons of squares, nothing from the library.
    """
    square = Fraction(square)
    lo, hi = Fraction(0), max(Fraction(1), square)
    eps = Fraction(1, 10**digits)
    while hi - lo > eps:
        mid = (lo + hi) / 2
        if mid * mid <= square:
            lo = mid
        else:
            hi = mid
    return lo, hi


def assert_contains_value(iv, target_float: float, slack: float = 1e-9):
    """The enclosure must contain the oracle value up to float slack."""
    assert float(iv.lo) - slack <= target_float <= float(iv.hi) + slack, (
        f"{target_float} outside [{float(iv.lo)}, {float(iv.hi)}]"
    )


def assert_contains_fraction(iv, target: Fraction):
    assert iv.lo <= target <= iv.hi, f"{target} outside {iv}"


def random_fraction(rng: random.Random, max_num: int = 50) -> Fraction:
    return Fraction(rng.randint(1, max_num), rng.randint(1, max_num))


def random_convex_polygon(rng: random.Random, sides: int = 6, scale: int = 5) -> E.Polygon:
    """Convex lattice polygon from edge vectors sorted by angle."""
    while True:
        vecs = []
        for _ in range(sides):
            v = (rng.randint(-scale, scale), rng.randint(-scale, scale))
            if v != (0, 0):
                vecs.append(v)
        if len(vecs) < 3:
            continue
        sx = sum(v[0] for v in vecs)
        sy = sum(v[1] for v in vecs)
        vecs[-1] = (vecs[-1][0] - sx, vecs[-1][1] - sy)
        if vecs[-1] == (0, 0):
            continue
        vecs.sort(key=lambda v: math.atan2(v[1], v[0]))
        pts = []
        x = y = 0
        for v in vecs:
            x += v[0]
            y += v[1]
            pts.append((x, y))
        try:
            poly = E.Polygon(pts)
        except E.EudoxosError:
            continue
        # fan triangulation must be non-degenerate for the additivity test
        v0 = poly.vertices[0]
        ok = True
        for i in range(1, len(poly.vertices) - 1):
            a, b = poly.vertices[i], poly.vertices[i + 1]
            if (a[0] - v0[0]) * (b[1] - v0[1]) == (a[1] - v0[1]) * (b[0] - v0[0]):
                ok = False
        if ok:
            return poly


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260809)
