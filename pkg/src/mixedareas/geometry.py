"""Exact planar convex-body primitives.

Everything is computed over rationals: convex hulls, Minkowski sums, support
values, widths, areas, and mixed areas.  The mixed area is available through
two independent routes, the polarization identity

    V(A, B) = (area(A + B) - area(A) - area(B)) / 2

and a support-function sum over the edges of the second body; both are exact
and must always agree.  Directions are arbitrary nonzero rational vectors;
formulas usually stated with unit normals are used in length-weighted form so
that no square roots appear.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateBody, ZeroDirection
from .exact import as_fraction
from .pluecker import PlueckerVector


@dataclass(frozen=True)
class Vec2:
    """A point or direction with exact rational coordinates."""

    x: Fraction
    y: Fraction

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Vec2":
        return Vec2(-self.x, -self.y)

    def scale(self, f) -> "Vec2":
        f = as_fraction(f)
        return Vec2(self.x * f, self.y * f)

    def dot(self, other: "Vec2") -> Fraction:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Vec2") -> Fraction:
        return self.x * other.y - self.y * other.x

    def rot90(self) -> "Vec2":
        """Counterclockwise quarter turn."""
        return Vec2(-self.y, self.x)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def primitive(self) -> "Vec2":
        """The integer-coordinate primitive vector with the same direction."""
        if self.is_zero():
            raise ZeroDirection("zero vector has no direction")
        from math import gcd, lcm

        den = lcm(self.x.denominator, self.y.denominator)
        ix, iy = int(self.x * den), int(self.y * den)
        g = gcd(ix, iy)
        return Vec2(Fraction(ix // g), Fraction(iy // g))

    def sort_key(self) -> tuple[Fraction, Fraction]:
        return (self.x, self.y)


def vec(x, y) -> Vec2:
    return Vec2(as_fraction(x), as_fraction(y))


def cross3(o: Vec2, a: Vec2, b: Vec2) -> Fraction:
    """Signed parallelogram area of (a-o, b-o): >0 means left turn."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


class ConvexBody:
    """A point, segment, or convex polygon given by its ordered vertex list.

    Invariants: vertices are distinct; polygons are in strictly
    counterclockwise convex position (no three consecutive vertices
    collinear) and start at the lexicographically smallest vertex.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices):
        verts = tuple(vertices)
        if not verts:
            raise ValueError("a body needs at least one vertex")
        if len(set((v.x, v.y) for v in verts)) != len(verts):
            raise ValueError("duplicate vertices")
        if len(verts) >= 3:
            n = len(verts)
            for i in range(n):
                if cross3(verts[i], verts[(i + 1) % n], verts[(i + 2) % n]) <= 0:
                    raise ValueError("vertices are not in strict counterclockwise convex position")
            start = min(range(n), key=lambda i: verts[i].sort_key())
            verts = verts[start:] + verts[:start]
        elif len(verts) == 2 and verts[1].sort_key() < verts[0].sort_key():
            verts = (verts[1], verts[0])
        self.vertices = verts

    def __eq__(self, other):
        return isinstance(other, ConvexBody) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        pts = ", ".join(f"({v.x},{v.y})" for v in self.vertices)
        return f"ConvexBody[{pts}]"

    def is_point(self) -> bool:
        return len(self.vertices) == 1

    def is_segment(self) -> bool:
        return len(self.vertices) == 2

    def translate(self, t: Vec2) -> "ConvexBody":
        return ConvexBody(v + t for v in self.vertices)

    def scale(self, f) -> "ConvexBody":
        f = as_fraction(f)
        if f == 0:
            return ConvexBody([Vec2(Fraction(0), Fraction(0))])
        if f < 0:
            raise ValueError("scale factor must be nonnegative")
        return ConvexBody(v.scale(f) for v in self.vertices)

    def anchored(self) -> "ConvexBody":
        """Translate so the lexicographically smallest vertex is the origin."""
        return self.translate(-self.vertices[0])

    def edge_vectors(self) -> list[Vec2]:
        """Edge vectors in counterclockwise cyclic order.

        A segment contributes its two opposite traversal directions, so that
        every body with at least two vertices has a closed edge cycle.
        """
        v = self.vertices
        if len(v) == 1:
            return []
        if len(v) == 2:
            return [v[1] - v[0], v[0] - v[1]]
        return [v[(i + 1) % len(v)] - v[i] for i in range(len(v))]


def convex_hull(points) -> ConvexBody:
    """Convex hull with collinear and duplicate points removed (monotone chain)."""
    pts = sorted(set((p.x, p.y) for p in points))
    pts = [Vec2(x, y) for x, y in pts]
    if not pts:
        raise ValueError("empty point set")
    if len(pts) == 1:
        return ConvexBody(pts)
    lower: list[Vec2] = []
    for p in pts:
        while len(lower) >= 2 and cross3(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Vec2] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross3(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        hull = hull[:1]
    return ConvexBody(hull)


def _angle_halfplane(d: Vec2) -> int:
    # 0 for directions with angle in [0, pi), 1 for [pi, 2*pi)
    return 0 if (d.y > 0 or (d.y == 0 and d.x > 0)) else 1


def _edge_order(a: Vec2, b: Vec2) -> int:
    ha, hb = _angle_halfplane(a), _angle_halfplane(b)
    if ha != hb:
        return -1 if ha < hb else 1
    c = a.cross(b)
    return 0 if c == 0 else (-1 if c > 0 else 1)


def merge_edge_cycles(edges_a: list[Vec2], edges_b: list[Vec2]) -> list[Vec2]:
    """Merge two angle-sorted edge cycles, combining parallel edges."""
    merged: list[Vec2] = []
    for e in sorted(edges_a + edges_b, key=functools.cmp_to_key(_edge_order)):
        if merged and _edge_order(merged[-1], e) == 0:
            merged[-1] = merged[-1] + e
        else:
            merged.append(e)
    return [e for e in merged if not e.is_zero()]


def _bottom_left_start(body: ConvexBody) -> tuple[Vec2, list[Vec2]]:
    """Start vertex by (y, x) order and the edge cycle from that vertex."""
    v = body.vertices
    start = min(range(len(v)), key=lambda i: (v[i].y, v[i].x))
    rotated = v[start:] + v[:start]
    if len(rotated) == 1:
        return rotated[0], []
    if len(rotated) == 2:
        return rotated[0], [rotated[1] - rotated[0], rotated[0] - rotated[1]]
    return rotated[0], [rotated[(i + 1) % len(rotated)] - rotated[i] for i in range(len(rotated))]


def minkowski_sum(a: ConvexBody, b: ConvexBody) -> ConvexBody:
    """Exact Minkowski sum.

    Nondegenerate inputs go through the edge-vector merge; anything involving
    a point or segment falls back to the hull of pairwise vertex sums.
    """
    if a.is_point():
        return b.translate(a.vertices[0])
    if b.is_point():
        return a.translate(b.vertices[0])
    if a.is_segment() or b.is_segment():
        return minkowski_sum_bruteforce(a, b)
    pa, ea = _bottom_left_start(a)
    pb, eb = _bottom_left_start(b)
    points = [pa + pb]
    for e in merge_edge_cycles(ea, eb):
        points.append(points[-1] + e)
    return convex_hull(points)


def minkowski_sum_bruteforce(a: ConvexBody, b: ConvexBody) -> ConvexBody:
    """Hull of all pairwise vertex sums; the independent reference route."""
    return convex_hull(va + vb for va in a.vertices for vb in b.vertices)


def area(body: ConvexBody) -> Fraction:
    """Exact area via the shoelace sum; zero for points and segments."""
    v = body.vertices
    if len(v) < 3:
        return Fraction(0)
    total = Fraction(0)
    for i in range(len(v)):
        j = (i + 1) % len(v)
        total += v[i].x * v[j].y - v[j].x * v[i].y
    return total / 2


def support(body: ConvexBody, d: Vec2) -> Fraction:
    """max <d, v> over the body; positively homogeneous of degree 1 in d."""
    if d.is_zero():
        raise ZeroDirection("support direction must be nonzero")
    return max(d.dot(v) for v in body.vertices)


def width(body: ConvexBody, d: Vec2) -> Fraction:
    """Length-weighted width: support(body, d) + support(body, -d)."""
    if d.is_zero():
        raise ZeroDirection("width direction must be nonzero")
    return support(body, d) + support(body, -d)


def mixed_area(a: ConvexBody, b: ConvexBody) -> Fraction:
    """Mixed area by polarization; symmetric, nonnegative, V(A,A)=area(A)."""
    return (area(minkowski_sum(a, b)) - area(a) - area(b)) / 2


def mixed_area_support(k: ConvexBody, p: ConvexBody) -> Fraction:
    """Mixed area as a support sum over the edges of ``p``.

    2 V(K, P) = sum over edges e of P of h_K(n_e), where n_e is the outward
    normal of e scaled to the edge's length.  Requires P to have at least one
    edge; route points through :func:`mixed_area` instead.
    """
    if p.is_point():
        raise DegenerateBody("support-sum formula needs a body with edges")
    total = Fraction(0)
    for e in p.edge_vectors():
        outward = -e.rot90()  # (dy, -dx): outward for counterclockwise traversal
        total += support(k, outward)
    return total / 2


@dataclass(frozen=True)
class MixedConfigVector:
    """All areas and pairwise mixed areas of an n-tuple of bodies."""

    n: int
    diagonal: tuple[Fraction, ...]
    off_diagonal: PlueckerVector

    def __post_init__(self):
        assert len(self.diagonal) == self.n
        assert self.off_diagonal.n == self.n


def config_vector(bodies) -> MixedConfigVector:
    bodies = list(bodies)
    n = len(bodies)
    if n < 1:
        raise ValueError("need at least one body")
    diag = tuple(area(b) for b in bodies)
    entries = {
        (i + 1, j + 1): mixed_area(bodies[i], bodies[j])
        for i, j in itertools.combinations(range(n), 2)
    }
    return MixedConfigVector(n, diag, PlueckerVector(n, entries))


def equal_up_to_translation(a: ConvexBody, b: ConvexBody) -> bool:
    return a.anchored() == b.anchored()


def lattice_points(body: ConvexBody) -> list[Vec2]:
    """All integer points inside a body with integer vertices."""
    v = body.vertices
    if any(p.x.denominator != 1 or p.y.denominator != 1 for p in v):
        raise ValueError("lattice point enumeration needs integer vertices")
    xs = [int(p.x) for p in v]
    ys = [int(p.y) for p in v]
    out = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            p = vec(x, y)
            if _contains(body, p):
                out.append(p)
    return out


def _contains(body: ConvexBody, p: Vec2) -> bool:
    v = body.vertices
    if len(v) == 1:
        return p == v[0]
    if len(v) == 2:
        if cross3(v[0], v[1], p) != 0:
            return False
        return min(v[0].sort_key(), v[1].sort_key()) <= p.sort_key() <= max(
            v[0].sort_key(), v[1].sort_key()
        )
    return all(cross3(v[i], v[(i + 1) % len(v)], p) >= 0 for i in range(len(v)))
