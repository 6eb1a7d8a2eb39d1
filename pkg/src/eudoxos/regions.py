"""Regions generated by polygons and circular sectors; certified pi; XII.2.

A region is a finite essentially-disjoint union of generators.  Sector
start/extent are exact rational fractions of a full turn; their content and
arc length route through the certified pi enclosure, which is itself the
inscribed/circumscribed polygon computation.  Arcs subtending a point-triple
angle instead use chord and tangent sums on the halved-cosine recurrence.

Disjointness is certified conservatively (exact polygon predicates, bounding
boxes with shared boundaries allowed, same-disk angular ranges, disk-disk
separation); undecidable placements are rejected by the constructor.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from .archimedes import (
    PiEnclosure,
    arc_length_bounds,
    inscribed_outer_bounds,
    pi_enclosure,
    pi_interval,
    pi_real,
    precision_denominator,
)
from .angles import Angle, _cos_interval_of_dir
from .enclosures import RealEnclosure
from .errors import EmptyArcError, NotDisjointError, ZeroMagnitudeError
from .intervals import Interval
from .kinds import KindId, KindOps, Magnitude, register_kind
from .polygons import Point, Polygon, content, parse_coordinate

__all__ = [
    "PiEnclosure",
    "pi_enclosure",
    "pi_interval",
    "pi_real",
    "inscribed_outer_bounds",
    "Sector",
    "Arc",
    "Region",
    "arc_sup_b",
    "sector_content",
    "region_content",
    "region_eta",
    "EtaResult",
    "xii2_verify",
    "Xii2Record",
    "parse_region",
    "region_magnitude",
]


@dataclass(frozen=True)
class Sector:
    """Circular sector: center, radius, start and extent in turns (0..1]."""

    center: Point
    radius: Fraction
    start: Fraction
    extent: Fraction

    def __post_init__(self):
        object.__setattr__(self, "center", (Fraction(self.center[0]), Fraction(self.center[1])))
        object.__setattr__(self, "radius", Fraction(self.radius))
        object.__setattr__(self, "start", Fraction(self.start) % 1)
        object.__setattr__(self, "extent", Fraction(self.extent))
        if self.radius <= 0:
            raise ValueError("sector radius must be positive")
        if not (0 < self.extent <= 1):
            raise ValueError("sector extent must lie in (0, 1] turns")

    @property
    def is_full_disk(self) -> bool:
        return self.extent == 1


def disk(center, radius) -> Sector:
    return Sector(center, radius, Fraction(0), Fraction(1))


def sector_content(s: Sector) -> RealEnclosure:
    """Content enclosure: extent * pi * r^2 (2 * sector = r * arc throughout)."""
    factor = s.extent * s.radius * s.radius
    return RealEnclosure(lambda d: pi_interval(d).scale(factor), name="sector")


@dataclass(frozen=True)
class Arc:
    """Arc of a circle of radius r: rational turns, or a point-triple angle."""

    radius: Fraction
    turns: Optional[Fraction] = None
    angle: Optional[Angle] = None

    def __post_init__(self):
        object.__setattr__(self, "radius", Fraction(self.radius))
        if self.radius <= 0:
            raise ValueError("arc radius must be positive")
        if (self.turns is None) == (self.angle is None):
            raise ValueError("give exactly one of turns or angle")
        if self.turns is not None:
            object.__setattr__(self, "turns", Fraction(self.turns))
            if self.turns <= 0:
                raise EmptyArcError("arc extent must be positive")

    @staticmethod
    def from_turns(radius, turns) -> "Arc":
        return Arc(radius=Fraction(radius), turns=Fraction(turns))

    @staticmethod
    def from_angle(radius, angle: Angle) -> "Arc":
        return Arc(radius=Fraction(radius), angle=angle)


def arc_sup_b(c: Arc) -> RealEnclosure:
    """Enclosure of the arc-length supremum (inscribed chord sums below,
    circumscribed tangent sums above); finitely additive over enclosures."""
    r = c.radius
    if c.turns is not None:
        factor = 2 * r * c.turns
        return RealEnclosure(lambda d: pi_interval(d).scale(factor), name="arc")
    angle = c.angle
    direction = angle.direction()

    def refine(d: int) -> Interval:
        total = pi_interval(d).scale(2 * r * angle.windings)
        if direction is not None:
            den = precision_denominator(d)
            total = total + arc_length_bounds(_cos_interval_of_dir(direction, den), r, d)
        return total

    return RealEnclosure(refine, name="arc")


RegionPart = Union[Polygon, Sector]


def _bbox(part: RegionPart) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    if isinstance(part, Polygon):
        xs = [v[0] for v in part.vertices]
        ys = [v[1] for v in part.vertices]
        return (min(xs), min(ys), max(xs), max(ys))
    cx, cy = part.center
    r = part.radius
    return (cx - r, cy - r, cx + r, cy + r)


def _boxes_separated(a, b) -> bool:
    ax0, ay0, ax1, ay1 = a
    bx0, by0, bx1, by1 = b
    return ax1 <= bx0 or bx1 <= ax0 or ay1 <= by0 or by1 <= ay0


def _point_strictly_inside_polygon(pt: Point, poly: Polygon) -> bool:
    # Exact crossing-number test; boundary points count as outside.
    x, y = pt
    verts = poly.vertices
    n = len(verts)
    inside = False
    for i in range(n):
        (x1, y1), (x2, y2) = verts[i], verts[(i + 1) % n]
        if (min(x1, x2) <= x <= max(x1, x2)) and (min(y1, y2) <= y <= max(y1, y2)):
            cross = (x2 - x1) * (y - y1) - (y2 - y1) * (x - x1)
            if cross == 0:
                return False  # on the boundary
        if (y1 > y) != (y2 > y):
            # x-coordinate of the edge at height y, exactly
            t = (y - y1) / (y2 - y1)
            xi = x1 + t * (x2 - x1)
            if xi == x:
                return False
            if xi > x:
                inside = not inside
    return inside


def _dist_sq(p: Point, q: Point) -> Fraction:
    return (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2


def _segment_dist_sq_at_least(p1: Point, p2: Point, c: Point, rsq: Fraction) -> bool:
    """Exact test: squared distance from segment p1p2 to c is >= rsq."""
    dx, dy = p2[0] - p1[0], p2[1] - p1[1]
    length_sq = dx * dx + dy * dy
    t_num = (c[0] - p1[0]) * dx + (c[1] - p1[1]) * dy
    if t_num <= 0:
        return _dist_sq(p1, c) >= rsq
    if t_num >= length_sq:
        return _dist_sq(p2, c) >= rsq
    # perpendicular distance^2 = cross^2 / |p2-p1|^2
    cross = dx * (c[1] - p1[1]) - dy * (c[0] - p1[0])
    return cross * cross >= rsq * length_sq


def _polygon_overlaps_polygon(a: Polygon, b: Polygon) -> bool:
    for i in range(len(a.vertices)):
        p1, p2 = a.vertices[i], a.vertices[(i + 1) % len(a.vertices)]
        for j in range(len(b.vertices)):
            q1, q2 = b.vertices[j], b.vertices[(j + 1) % len(b.vertices)]
            d1 = (q2[0] - q1[0]) * (p1[1] - q1[1]) - (q2[1] - q1[1]) * (p1[0] - q1[0])
            d2 = (q2[0] - q1[0]) * (p2[1] - q1[1]) - (q2[1] - q1[1]) * (p2[0] - q1[0])
            d3 = (p2[0] - p1[0]) * (q1[1] - p1[1]) - (p2[1] - p1[1]) * (q1[0] - p1[0])
            d4 = (p2[0] - p1[0]) * (q2[1] - p1[1]) - (p2[1] - p1[1]) * (q2[0] - p1[0])
            if ((d1 > 0) != (d2 > 0)) and d1 != 0 and d2 != 0 and (
                (d3 > 0) != (d4 > 0)
            ) and d3 != 0 and d4 != 0:
                return True  # proper crossing
    for pt in a.vertices:
        if _point_strictly_inside_polygon(pt, b):
            return True
    for pt in b.vertices:
        if _point_strictly_inside_polygon(pt, a):
            return True
    for i in range(len(a.vertices)):
        p1, p2 = a.vertices[i], a.vertices[(i + 1) % len(a.vertices)]
        mid = ((p1[0] + p2[0]) / 2, (p1[1] + p2[1]) / 2)
        if _point_strictly_inside_polygon(mid, b):
            return True
    for j in range(len(b.vertices)):
        q1, q2 = b.vertices[j], b.vertices[(j + 1) % len(b.vertices)]
        mid = ((q1[0] + q2[0]) / 2, (q1[1] + q2[1]) / 2)
        if _point_strictly_inside_polygon(mid, a):
            return True
    return False


def _angular_ranges_disjoint(a: Sector, b: Sector) -> bool:
    # start values normalized into [0, 1); ranges may wrap.
    def covers(s: Sector):
        end = s.start + s.extent
        if end <= 1:
            return [(s.start, end)]
        return [(s.start, Fraction(1)), (Fraction(0), end - 1)]

    for (a0, a1) in covers(a):
        for (b0, b1) in covers(b):
            if a0 < b1 and b0 < a1:
                return False
    return True


def _certify_disjoint(a: RegionPart, b: RegionPart) -> None:
    if _boxes_separated(_bbox(a), _bbox(b)):
        return
    if isinstance(a, Polygon) and isinstance(b, Polygon):
        if _polygon_overlaps_polygon(a, b):
            raise NotDisjointError("polygon parts overlap")
        raise NotDisjointError(
            "disjointness of these polygons is undecidable for this constructor"
        )
    if isinstance(a, Sector) and isinstance(b, Sector):
        if a.center == b.center and a.radius == b.radius:
            if _angular_ranges_disjoint(a, b):
                return
            raise NotDisjointError("sectors of the same disk overlap")
        if _dist_sq(a.center, b.center) >= (a.radius + b.radius) ** 2:
            return
        if a.is_full_disk and b.is_full_disk:
            raise NotDisjointError("disks overlap")
        raise NotDisjointError("sector placement undecidable for this constructor")
    poly, sect = (a, b) if isinstance(a, Polygon) else (b, a)
    rsq = sect.radius * sect.radius
    outside = all(
        _segment_dist_sq_at_least(
            poly.vertices[i],
            poly.vertices[(i + 1) % len(poly.vertices)],
            sect.center,
            rsq,
        )
        for i in range(len(poly.vertices))
    )
    if outside and not _point_strictly_inside_polygon(sect.center, poly):
        return
    if sect.is_full_disk:
        for pt in poly.vertices:
            if _dist_sq(pt, sect.center) < rsq:
                raise NotDisjointError("polygon vertex inside the disk")
        if _point_strictly_inside_polygon(sect.center, poly):
            raise NotDisjointError("disk center inside the polygon")
    raise NotDisjointError("polygon/sector placement undecidable for this constructor")


class Region:
    """Finite essentially-disjoint union of polygons and sectors."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(parts)
        if not parts:
            raise ZeroMagnitudeError("region needs at least one part")
        for p in parts:
            if not isinstance(p, (Polygon, Sector)):
                raise TypeError(f"unsupported region part {p!r}")
        for i in range(len(parts)):
            for j in range(i + 1, len(parts)):
                _certify_disjoint(parts[i], parts[j])
        self.parts = parts

    def __repr__(self) -> str:
        return f"Region({len(self.parts)} parts)"


def region_content(x: Region) -> RealEnclosure:
    """Sum of part contents; a point enclosure for purely polygonal regions."""
    exact = Fraction(0)
    all_polygonal = True
    factor = Fraction(0)
    for p in x.parts:
        if isinstance(p, Polygon):
            exact += content(p)
        else:
            all_polygonal = False
            factor += p.extent * p.radius * p.radius
    if all_polygonal:
        return RealEnclosure.from_fraction(exact, name="region")
    return RealEnclosure(
        lambda d: pi_interval(d).scale(factor).shift(exact), name="region"
    )


class EtaResult(Enum):
    LEQ_CERTIFIED = "leq-certified"
    GT_CERTIFIED = "gt-certified"
    UNDECIDED = "undecided"


def region_eta(x: Region, y: Region, depth: int) -> EtaResult:
    """Certify the inner/outer-polygon pre-order: content(x) <= content(y)."""
    cx, cy = region_content(x), region_content(y)
    for d in range(depth + 1):
        ix, iy = cx.at(d), cy.at(d)
        if ix.hi <= iy.lo:
            return EtaResult.LEQ_CERTIFIED
        if ix.lo > iy.hi:
            return EtaResult.GT_CERTIFIED
    return EtaResult.UNDECIDED


class _RegionClassesOps(KindOps):
    kind = KindId.REGION_CLASSES

    def validate(self, payload):
        if not isinstance(payload, _RegionClassValue):
            raise ZeroMagnitudeError("region payload must come from region_magnitude")
        return payload

    def add(self, a, b):
        # classes add without placement: disjoint representatives always
        # exist after translation
        return _RegionClassValue(
            a.exact + b.exact, a.pi_factor + b.pi_factor, a.generators + b.generators
        )

    def kmul(self, n, a):
        return _RegionClassValue(n * a.exact, n * a.pi_factor, a.generators * n)

    def sub(self, a, b, res):
        from .kinds import Comparison

        if self.compare(a, b, res) is not Comparison.GREATER:
            raise ZeroMagnitudeError("region minuend not certified greater")
        return _RegionClassValue(a.exact - b.exact, a.pi_factor - b.pi_factor, ())

    def enclosure(self, a):
        return RealEnclosure(
            lambda d: pi_interval(d).scale(a.pi_factor).shift(a.exact),
            exact=a.exact if a.pi_factor == 0 else None,
        )

    def exact(self, a):
        return a.exact if a.pi_factor == 0 else None


@dataclass(frozen=True)
class _RegionClassValue:
    """Content as exact + pi_factor * pi, with generator provenance.

    The (exact, pi_factor) pair is closed under addition and integer
    multiples; subtraction keeps the value but drops the generator list.
    """

    exact: Fraction
    pi_factor: Fraction
    generators: tuple = ()


register_kind(_RegionClassesOps())


def region_magnitude(x: Region) -> Magnitude:
    exact = Fraction(0)
    factor = Fraction(0)
    for p in x.parts:
        if isinstance(p, Polygon):
            exact += content(p)
        else:
            factor += p.extent * p.radius * p.radius
    return Magnitude(KindId.REGION_CLASSES, _RegionClassValue(exact, factor, x.parts))


# -- XII.2 --------------------------------------------------------------------


@dataclass(frozen=True)
class BranchScan:
    branch: str
    witnesses: tuple[tuple[int, int], ...]
    refuted_exact: int
    refuted_by_enclosure: int
    undecided: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Xii2Record:
    r1: Fraction
    r2: Fraction
    squares_ratio: Fraction
    contains_at_every_depth: bool
    ratio_interval: Interval
    branches: tuple[BranchScan, ...]
    exhaustion_steps: int
    search_bound: int

    @property
    def passed(self) -> bool:
        return self.contains_at_every_depth and all(
            not b.witnesses and not b.undecided for b in self.branches
        )

    @property
    def undecided(self) -> bool:
        return any(b.undecided for b in self.branches)

    def lines(self) -> list[str]:
        out = [
            f"circles r1={self.r1}, r2={self.r2}; squares-on-diameters ratio "
            f"{self.squares_ratio}",
            f"content-ratio enclosure {self.ratio_interval} contains it at every "
            f"refinement <= {self.exhaustion_steps}: {self.contains_at_every_depth}",
        ]
        for b in self.branches:
            out.append(
                f"branch {b.branch}: witnesses={list(b.witnesses)} "
                f"(refuted exactly: {b.refuted_exact}, by enclosure: "
                f"{b.refuted_by_enclosure}, undecided: {list(b.undecided)})"
            )
        return out


def xii2_verify(r1, r2, depth: int = 10, search_bound: int = 100) -> Xii2Record:
    """Verify Proposition XII.2 computationally for two circles.

    Certifies that the enclosure of the content ratio c1:c2 contains the
    exact squares-on-diameters ratio s1:s2 at every refinement up to depth,
    and scans the four contradiction branches for integer pairs (n1, n2)
    with n1+n2 <= search_bound: a pair is a witness only when the exact
    square comparison holds and the content enclosures positively assert the
    strict circle inequality.  Similar inscribed polygons carry the exact
    ratio s1:s2 at every depth, which refutes equality branches exactly.
    """
    r1, r2 = Fraction(r1), Fraction(r2)
    if r1 <= 0 or r2 <= 0:
        raise ValueError("radii must be positive")
    s1, s2 = 4 * r1 * r1, 4 * r2 * r2  # squares on the diameters
    target = s1 / s2
    contains = True
    for d in range(depth + 1):
        pi_iv = pi_interval(d)
        c1 = pi_iv.scale(r1 * r1)
        c2 = pi_iv.scale(r2 * r2)
        ratio_iv = c1 / c2
        if not ratio_iv.contains(target):
            contains = False
    final_pi = pi_interval(depth)
    c1 = final_pi.scale(r1 * r1)
    c2 = final_pi.scale(r2 * r2)
    ratio_iv = c1 / c2

    # Trichotomy of n1*c2 vs n2*c1: the exact route compares n1*r2^2 with
    # n2*r1^2 (similar inscribed/circumscribed polygons scale exactly, the
    # XII.1 step), the enclosure route requires interval separation.  A pair
    # witnesses a branch only if the intervals positively assert its strict
    # circle inequality (or its exact equality).
    def scan(branch: str, s_cond, c_sign_needed: int) -> BranchScan:
        witnesses = []
        refuted_exact = 0
        refuted_enc = 0
        undecided = []
        for n1 in range(1, search_bound):
            for n2 in range(1, search_bound - n1 + 1):
                if not s_cond(n1, n2):
                    continue
                diff = n1 * r2 * r2 - n2 * r1 * r1  # sign of n1*c2 - n2*c1
                lhs = c2.scale(n1)
                rhs = c1.scale(n2)
                sep_gt = lhs.lo > rhs.hi
                sep_lt = lhs.hi < rhs.lo
                if c_sign_needed > 0:
                    if sep_gt:
                        witnesses.append((n1, n2))
                    elif diff <= 0:
                        refuted_exact += 1
                    elif sep_lt:
                        refuted_enc += 1
                    else:
                        undecided.append((n1, n2))
                elif c_sign_needed < 0:
                    if sep_lt:
                        witnesses.append((n1, n2))
                    elif diff >= 0:
                        refuted_exact += 1
                    elif sep_gt:
                        refuted_enc += 1
                    else:
                        undecided.append((n1, n2))
                else:
                    if diff == 0:
                        witnesses.append((n1, n2))
                    elif sep_gt or sep_lt:
                        refuted_enc += 1
                    else:
                        undecided.append((n1, n2))
        return BranchScan(
            branch, tuple(witnesses), refuted_exact, refuted_enc, tuple(undecided)
        )

    branches = (
        scan("(i)  n1*c2 > n2*c1 and n1*s2 <= n2*s1",
             lambda n1, n2: n1 * s2 <= n2 * s1, +1),
        scan("(ii) n2*c1 > n1*c2 and n2*s1 <= n1*s2",
             lambda n1, n2: n2 * s1 <= n1 * s2, -1),
        scan("(iii) n1*c2 = n2*c1 and n1*s2 < n2*s1",
             lambda n1, n2: n1 * s2 < n2 * s1, 0),
        scan("(iv) n2*c1 = n1*c2 and n2*s1 < n1*s2",
             lambda n1, n2: n2 * s1 < n1 * s2, 0),
    )
    return Xii2Record(
        r1=r1,
        r2=r2,
        squares_ratio=target,
        contains_at_every_depth=contains,
        ratio_interval=ratio_iv,
        branches=branches,
        exhaustion_steps=depth,
        search_bound=search_bound,
    )


# -- region file format --------------------------------------------------------


def parse_region(text: str) -> Region:
    """One generator per line: "polygon: (x,y) (x,y) ..." or
    "sector: cx,cy,r,start,extent" with exact rational fields."""
    parts: list[RegionPart] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        head, _, rest = line.partition(":")
        head = head.strip().lower()
        if head == "polygon":
            verts = []
            for chunk in rest.replace("(", " ").replace(")", " ").split():
                x, _, y = chunk.partition(",")
                verts.append((parse_coordinate(x), parse_coordinate(y)))
            parts.append(Polygon(verts))
        elif head == "sector":
            fields = [parse_coordinate(tok) for tok in rest.split(",")]
            if len(fields) != 5:
                raise ValueError("sector line needs cx,cy,r,start,extent")
            cx, cy, r, start, extent = fields
            parts.append(Sector((cx, cy), r, start, extent))
        else:
            raise ValueError(f"unknown region generator {head!r}")
    return Region(parts)


def format_enclosure(iv: Interval) -> str:
    return f"[{iv.lo}, {iv.hi}] (width {iv.width})"
