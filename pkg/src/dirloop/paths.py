"""Exact Moore paths in the directed suspension of a pointed complex.

A point of the suspension is either the collapsed cone point ``STAR`` or a
height in (-1, 1) paired with a point of the base; heights -1 and +1 and
the whole column over the base's own basepoint all land on ``STAR``.

Paths are finite strings of affine segments with rational data.  Every
constructor funnels through :meth:`Suspension.path`, which canonicalizes
(drops empty segments, strips constant boundary coordinates, converts
segments stuck at the cone point into pauses, merges collinear neighbours)
and rejects discontinuous junctions.  Two paths are therefore equal as
maps exactly when they are equal as values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .cubical import (
    CubicalSet,
    RealizationPoint,
    boundary_snap,
    normalize_point,
    snap_coordinate,
)

_THIRD = Fraction(1, 3)


class _StarType:
    """The collapsed cone point.  A single shared instance, ``STAR``."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Star"


STAR = _StarType()


@dataclass(frozen=True)
class Interior:
    """A suspension point away from the cone point: height plus base point."""

    height: Fraction
    point: RealizationPoint


def classify_point(p) -> str:
    """One of ``"star"``, ``"lower"``, ``"middle"``, ``"upper"``."""
    if p is STAR or isinstance(p, _StarType):
        return "star"
    if p.height < 0:
        return "lower"
    if p.height > 0:
        return "upper"
    return "middle"


@dataclass(frozen=True)
class StarSeg:
    """A pause at the cone point."""

    duration: Fraction


@dataclass(frozen=True)
class TrackSeg:
    """An affine stretch inside one base cube.

    Height runs from ``h0`` to ``h1`` and the base coordinates from ``c0``
    to ``c1``, all linearly in time.
    """

    duration: Fraction
    h0: Fraction
    h1: Fraction
    cube: str
    c0: tuple[Fraction, ...]
    c1: tuple[Fraction, ...]


@dataclass(frozen=True)
class MoorePath:
    """A canonical segment string; ``empty_at`` locates a zero length path."""

    segments: tuple = ()
    empty_at: object = STAR

    @property
    def duration(self) -> Fraction:
        return sum((s.duration for s in self.segments), Fraction(0))


def is_strictly_increasing(path: MoorePath) -> bool:
    """True when every track gains height; pauses at the cone point are fine."""
    return all(
        seg.h1 > seg.h0 for seg in path.segments if isinstance(seg, TrackSeg)
    )


def star_measure(path: MoorePath) -> Fraction:
    """Total time the path spends parked at the cone point."""
    return sum(
        (s.duration for s in path.segments if isinstance(s, StarSeg)), Fraction(0)
    )


def _lerp(a: Fraction, b: Fraction, s: Fraction) -> Fraction:
    return a + (b - a) * s


def _lerp_coords(c0, c1, s):
    return tuple(_lerp(a, b, s) for a, b in zip(c0, c1))


def _drop_slots(coords, hit, degens):
    rest = coords[:hit] + coords[hit + 1:]
    for j in degens:
        rest = rest[: j - 1] + rest[j:]
    return rest


def _sub_segment(seg, sa: Fraction, sb: Fraction):
    d = seg.duration * (sb - sa)
    if isinstance(seg, StarSeg):
        return StarSeg(d)
    return TrackSeg(
        d,
        _lerp(seg.h0, seg.h1, sa),
        _lerp(seg.h0, seg.h1, sb),
        seg.cube,
        _lerp_coords(seg.c0, seg.c1, sa),
        _lerp_coords(seg.c0, seg.c1, sb),
    )


def _clamped_track(seg: TrackSeg, g0: Fraction, g1: Fraction) -> list:
    """Pieces of a track whose new heights g0..g1 may overshoot the poles.

    The overshoot is clamped: stretches at or beyond a pole become pauses
    at the cone point, with exact cuts at the crossing times.
    """
    if g0 == g1:
        if g0 <= -1 or g0 >= 1:
            return [StarSeg(seg.duration)]
        return [TrackSeg(seg.duration, g0, g1, seg.cube, seg.c0, seg.c1)]
    cuts = {Fraction(0), Fraction(1)}
    for level in (Fraction(-1), Fraction(1)):
        s = (level - g0) / (g1 - g0)
        if 0 < s < 1:
            cuts.add(s)
    ordered = sorted(cuts)
    out = []
    for sa, sb in zip(ordered, ordered[1:]):
        mid = _lerp(g0, g1, (sa + sb) / 2)
        if mid <= -1 or mid >= 1:
            out.append(StarSeg(seg.duration * (sb - sa)))
        else:
            out.append(
                TrackSeg(
                    seg.duration * (sb - sa),
                    _lerp(g0, g1, sa),
                    _lerp(g0, g1, sb),
                    seg.cube,
                    _lerp_coords(seg.c0, seg.c1, sa),
                    _lerp_coords(seg.c0, seg.c1, sb),
                )
            )
    return out


def _snap_height(h: Fraction) -> Fraction:
    if h <= -2 * _THIRD:
        return Fraction(-1)
    if h <= -_THIRD:
        return 3 * h + 1
    if h < _THIRD:
        return Fraction(0)
    if h < 2 * _THIRD:
        return 3 * h - 1
    return Fraction(1)


class Suspension:
    """Path calculus over the directed suspension of a fixed base complex."""

    def __init__(self, base: CubicalSet):
        self.base = base
        self.origin = RealizationPoint(base.basepoint, ())

    # ------------------------------------------------------------------
    # points

    def point(self, height, cube: str, coords=()):
        """Suspension point for a height and base location, as Star or Interior."""
        h = Fraction(height)
        if h < -1 or h > 1:
            raise ValueError(f"height {h} outside [-1, 1]")
        p = normalize_point(self.base, cube, coords)
        if h == -1 or h == 1 or p == self.origin:
            return STAR
        return Interior(h, p)

    def _seg_start(self, seg):
        if isinstance(seg, StarSeg):
            return STAR
        return self.point(seg.h0, seg.cube, seg.c0)

    def _seg_end(self, seg):
        if isinstance(seg, StarSeg):
            return STAR
        return self.point(seg.h1, seg.cube, seg.c1)

    # ------------------------------------------------------------------
    # construction

    def _canonical_track(self, seg: TrackSeg):
        K = self.base
        d = Fraction(seg.duration)
        h0, h1 = Fraction(seg.h0), Fraction(seg.h1)
        if not (-1 <= h0 <= 1 and -1 <= h1 <= 1):
            raise ValueError("track heights must lie in [-1, 1]")
        if seg.cube not in K.cubes:
            raise ValueError(f"unknown cube {seg.cube!r}")
        c0 = tuple(Fraction(c) for c in seg.c0)
        c1 = tuple(Fraction(c) for c in seg.c1)
        n = K.cubes[seg.cube]
        if len(c0) != n or len(c1) != n:
            raise ValueError(f"cube {seg.cube!r} needs {n} coordinates")
        if any(c < 0 or c > 1 for c in c0 + c1):
            raise ValueError("coordinates must lie in [0, 1]")
        cube = seg.cube
        while True:
            hit = next(
                (
                    i
                    for i in range(len(c0))
                    if c0[i] == c1[i] and (c0[i] == 0 or c0[i] == 1)
                ),
                None,
            )
            if hit is None:
                break
            ref = K.faces[(cube, hit + 1, 0 if c0[hit] == 0 else 1)]
            c0 = _drop_slots(c0, hit, ref.degens)
            c1 = _drop_slots(c1, hit, ref.degens)
            cube = ref.base
        if cube == K.basepoint or (h0 == h1 and (h0 == -1 or h0 == 1)):
            return StarSeg(d)
        return TrackSeg(d, h0, h1, cube, c0, c1)

    def _push(self, out: list, seg) -> None:
        if not out:
            out.append(seg)
            return
        prev = out[-1]
        if isinstance(prev, StarSeg) and isinstance(seg, StarSeg):
            out[-1] = StarSeg(prev.duration + seg.duration)
            return
        if (
            isinstance(prev, TrackSeg)
            and isinstance(seg, TrackSeg)
            and prev.cube == seg.cube
            and prev.h1 == seg.h0
            and prev.c1 == seg.c0
            and (prev.h1 - prev.h0) * seg.duration == (seg.h1 - seg.h0) * prev.duration
            and all(
                (p1 - p0) * seg.duration == (q1 - q0) * prev.duration
                for p0, p1, q0, q1 in zip(prev.c0, prev.c1, seg.c0, seg.c1)
            )
        ):
            out[-1] = TrackSeg(
                prev.duration + seg.duration, prev.h0, seg.h1, prev.cube, prev.c0, seg.c1
            )
            return
        if self._seg_end(prev) != self._seg_start(seg):
            raise ValueError("discontinuous junction between path segments")
        out.append(seg)

    def path(self, segments: Iterable, empty_at=STAR) -> MoorePath:
        """Build the canonical path through the given segments.

        Zero length segments are dropped, segments pinned to the cone point
        become pauses, collinear neighbours merge, and any discontinuous
        junction raises ``ValueError``.
        """
        canon: list = []
        for seg in segments:
            d = Fraction(seg.duration)
            if d < 0:
                raise ValueError("segment durations must be nonnegative")
            if d == 0:
                continue
            if isinstance(seg, StarSeg):
                piece = StarSeg(d)
            else:
                piece = self._canonical_track(
                    TrackSeg(d, seg.h0, seg.h1, seg.cube, seg.c0, seg.c1)
                )
            self._push(canon, piece)
        if not canon:
            if not (empty_at is STAR or isinstance(empty_at, Interior)):
                raise ValueError("empty_at must be a suspension point")
            return MoorePath((), empty_at)
        return MoorePath(tuple(canon), STAR)

    def concat(self, *paths: MoorePath) -> MoorePath:
        if not paths:
            return MoorePath((), STAR)
        for a, b in zip(paths, paths[1:]):
            if self.end_point(a) != self.start_point(b):
                raise ValueError("paths do not meet end to start")
        segs = [s for p in paths for s in p.segments]
        return self.path(segs, empty_at=self.start_point(paths[0]))

    # ------------------------------------------------------------------
    # inspection

    def evaluate(self, path: MoorePath, t):
        tt = Fraction(t)
        if tt < 0 or tt > path.duration:
            raise ValueError(f"time {tt} outside [0, {path.duration}]")
        if not path.segments:
            return path.empty_at
        acc = Fraction(0)
        for seg in path.segments:
            if tt <= acc + seg.duration:
                if isinstance(seg, StarSeg):
                    return STAR
                s = (tt - acc) / seg.duration
                return self.point(
                    _lerp(seg.h0, seg.h1, s), seg.cube, _lerp_coords(seg.c0, seg.c1, s)
                )
            acc += seg.duration
        return self._seg_end(path.segments[-1])

    def start_point(self, path: MoorePath):
        return self._seg_start(path.segments[0]) if path.segments else path.empty_at

    def end_point(self, path: MoorePath):
        return self._seg_end(path.segments[-1]) if path.segments else path.empty_at

    def is_loop(self, path: MoorePath) -> bool:
        return self.start_point(path) is STAR and self.end_point(path) is STAR

    def verify_directed(self, path: MoorePath, x_structure: str = "total") -> list[str]:
        """Report directedness defects; an empty list means directed.

        With ``x_structure="total"`` only heights must not decrease within a
        segment; ``"directed"`` additionally requires every base coordinate
        to be nondecreasing.
        """
        if x_structure not in ("directed", "total"):
            raise ValueError("x_structure must be 'directed' or 'total'")
        out = []
        for k, seg in enumerate(path.segments):
            if not isinstance(seg, TrackSeg):
                continue
            if seg.h0 > seg.h1:
                out.append(f"segment {k}: height decreases from {seg.h0} to {seg.h1}")
            if x_structure == "directed":
                for i, (a, b) in enumerate(zip(seg.c0, seg.c1)):
                    if a > b:
                        out.append(
                            f"segment {k}: coordinate {i + 1} decreases from {a} to {b}"
                        )
        return out

    # ------------------------------------------------------------------
    # reparametrization

    def slice_path(self, path: MoorePath, t0, t1) -> MoorePath:
        a, b = Fraction(t0), Fraction(t1)
        if not 0 <= a <= b <= path.duration:
            raise ValueError("slice bounds out of order or out of range")
        segs = []
        acc = Fraction(0)
        for seg in path.segments:
            d = seg.duration
            lo, hi = max(acc, a), min(acc + d, b)
            if lo < hi:
                segs.append(_sub_segment(seg, (lo - acc) / d, (hi - acc) / d))
            acc += d
        return self.path(segs, empty_at=self.evaluate(path, a))

    def truncate_path(self, path: MoorePath, fraction) -> MoorePath:
        f = Fraction(fraction)
        if not 0 <= f <= 1:
            raise ValueError("fraction must lie in [0, 1]")
        return self.slice_path(path, 0, f * path.duration)

    def scale_time(self, path: MoorePath, factor) -> MoorePath:
        f = Fraction(factor)
        if f <= 0:
            raise ValueError("time scale must be positive")
        segs = [
            StarSeg(s.duration * f)
            if isinstance(s, StarSeg)
            else TrackSeg(s.duration * f, s.h0, s.h1, s.cube, s.c0, s.c1)
            for s in path.segments
        ]
        return self.path(segs, empty_at=path.empty_at)

    def reparam(self, path: MoorePath, table: Sequence) -> MoorePath:
        """Run the path on a new clock given (new_time, old_time) breakpoints.

        The table must start at (0, 0), end with the old duration, increase
        strictly in new time and weakly in old time; flat spans hold the
        current point still.
        """
        pts = [(Fraction(n), Fraction(o)) for n, o in table]
        if len(pts) < 2 or pts[0] != (Fraction(0), Fraction(0)):
            raise ValueError("table must start at (0, 0)")
        if pts[-1][1] != path.duration:
            raise ValueError("table must end at the old duration")
        segs = []
        for (n0, o0), (n1, o1) in zip(pts, pts[1:]):
            if n1 <= n0:
                raise ValueError("new times must strictly increase")
            if o1 < o0:
                raise ValueError("old times must not decrease")
            if o0 == o1:
                at = self.evaluate(path, o0)
                if at is STAR:
                    segs.append(StarSeg(n1 - n0))
                else:
                    segs.append(
                        TrackSeg(
                            n1 - n0,
                            at.height,
                            at.height,
                            at.point.cube,
                            at.point.coords,
                            at.point.coords,
                        )
                    )
            else:
                piece = self.slice_path(path, o0, o1)
                f = (n1 - n0) / (o1 - o0)
                segs.extend(
                    StarSeg(s.duration * f)
                    if isinstance(s, StarSeg)
                    else TrackSeg(s.duration * f, s.h0, s.h1, s.cube, s.c0, s.c1)
                    for s in piece.segments
                )
        return self.path(segs, empty_at=self.start_point(path))

    # ------------------------------------------------------------------
    # height deformations

    def height_affine(self, path: MoorePath, scale, offset) -> MoorePath:
        """Compose all heights with an affine map, clamping at the poles.

        The map must send the poles outward (scale > 0, -scale+offset <= -1,
        scale+offset >= 1) so that it descends to the suspension quotient.
        """
        a, b = Fraction(scale), Fraction(offset)
        if a <= 0:
            raise ValueError("height scale must be positive")
        if -a + b > -1 or a + b < 1:
            raise ValueError("affine height map must cover [-1, 1]")
        segs = []
        for seg in path.segments:
            if isinstance(seg, StarSeg):
                segs.append(seg)
            else:
                segs.extend(_clamped_track(seg, a * seg.h0 + b, a * seg.h1 + b))
        empty = path.empty_at
        if not path.segments and isinstance(empty, Interior):
            g = a * empty.height + b
            empty = STAR if (g <= -1 or g >= 1) else Interior(g, empty.point)
        return self.path(segs, empty_at=empty)

    def shift_heights(self, path: MoorePath, delta) -> MoorePath:
        """Clamped vertical translation.

        Not a quotient map in general: a path that re-enters from the pole
        being pushed away can come apart, in which case the junction check
        raises.  Meant for single excursions during straightening.
        """
        dd = Fraction(delta)
        segs = []
        for seg in path.segments:
            if isinstance(seg, StarSeg):
                segs.append(seg)
            else:
                segs.extend(_clamped_track(seg, seg.h0 + dd, seg.h1 + dd))
        empty = path.empty_at
        if not path.segments and isinstance(empty, Interior):
            g = empty.height + dd
            empty = STAR if (g <= -1 or g >= 1) else Interior(g, empty.point)
        return self.path(segs, empty_at=empty)

    def shrink_cone(self, path: MoorePath, side: str, t) -> MoorePath:
        """Push one half cone into its pole; at t=1 that half is fully absorbed."""
        tt = Fraction(t)
        if not 0 <= tt <= 1:
            raise ValueError("cone parameter must lie in [0, 1]")
        if side == "lower":
            return self.height_affine(path, 1 + tt, -tt)
        if side == "upper":
            return self.height_affine(path, 1 + tt, tt)
        raise ValueError("side must be 'lower' or 'upper'")

    def make_increasing(self, path: MoorePath, eps) -> MoorePath:
        """Tilt heights forward in time by a strictening shear.

        On a directed loop the result has strictly rising tracks, the same
        duration, and the same crossing letters when the base location is
        constant along each excursion.
        """
        e = Fraction(eps)
        if not 0 < e < 1:
            raise ValueError("tilt must lie strictly between 0 and 1")
        T = path.duration
        if T == 0:
            return path
        segs = []
        acc = Fraction(0)
        for seg in path.segments:
            if isinstance(seg, StarSeg):
                segs.append(seg)
            else:
                g0 = (seg.h0 + e * acc / T) / (1 - e)
                g1 = (seg.h1 + e * (acc + seg.duration) / T) / (1 - e)
                segs.extend(_clamped_track(seg, g0, g1))
            acc += seg.duration
        return self.path(segs, empty_at=path.empty_at)

    # ------------------------------------------------------------------
    # ramps and the letter maps

    def _ramp_segments(self, x: RealizationPoint, a: Fraction, b: Fraction) -> list:
        # unit speed in height; the parts beyond the poles ride at the cone point
        if a == b:
            return []
        segs = []
        lo, hi = max(a, Fraction(-1)), min(b, Fraction(1))
        if a < -1:
            segs.append(StarSeg(min(b, Fraction(-1)) - a))
        if lo < hi:
            segs.append(TrackSeg(hi - lo, lo, hi, x.cube, x.coords, x.coords))
        if b > 1:
            segs.append(StarSeg(b - max(a, Fraction(1))))
        return segs

    def ramp(self, x: RealizationPoint, a, b) -> MoorePath:
        """Constant base location, height climbing from ``a`` to ``b``.

        Heights beyond the poles are allowed and spend their time at the
        cone point, so the duration is always ``b - a``.
        """
        aa, bb = Fraction(a), Fraction(b)
        if aa >= bb:
            raise ValueError("ramp needs a strictly increasing height interval")
        x = normalize_point(self.base, x.cube, x.coords)
        return self.path(self._ramp_segments(x, aa, bb))

    def basic_loop(self, x: RealizationPoint) -> MoorePath:
        """The loop threading the suspension once over the base point ``x``."""
        return self.ramp(x, -1, 1)

    def attach_letter(self, x: RealizationPoint, loop: MoorePath) -> MoorePath:
        """Extend a loop by a half climb to the middle slice over ``x``."""
        if not self.is_loop(loop):
            raise ValueError("attach_letter needs a loop at the cone point")
        x = normalize_point(self.base, x.cube, x.coords)
        return self.path(
            tuple(loop.segments) + tuple(self._ramp_segments(x, Fraction(-1), Fraction(0)))
        )

    def detach_letter(self, path: MoorePath):
        """Split off the final letter: the middle slice point and a loop.

        Inverse direction to :meth:`attach_letter` up to homotopy; the path
        must end on the middle slice or at the cone point.
        """
        end = self.end_point(path)
        if end is STAR:
            x = self.origin
        elif classify_point(end) == "middle":
            x = end.point
        else:
            raise ValueError("path must end on the middle slice or at the cone point")
        return x, self.shrink_cone(path, "lower", 1)

    def attach_then_detach(self, x: RealizationPoint, loop: MoorePath, t) -> MoorePath:
        """Loop part of the attach/detach round trip at stage ``t`` in [0, 1].

        Stage 0 returns the loop unchanged; stage 1 returns the round trip.
        """
        tt = Fraction(t)
        if not 0 <= tt <= 1:
            raise ValueError("stage must lie in [0, 1]")
        if not self.is_loop(loop):
            raise ValueError("attach_then_detach needs a loop at the cone point")
        x = normalize_point(self.base, x.cube, x.coords)
        c = (tt - 1) / (1 + tt)
        grown = self.path(
            tuple(loop.segments) + tuple(self._ramp_segments(x, Fraction(-1), c)),
            empty_at=self.start_point(loop),
        )
        return self.shrink_cone(grown, "lower", tt)

    def detach_then_attach(self, path: MoorePath, t) -> MoorePath:
        """Detach/attach round trip at stage ``t`` on a path into the middle slice.

        Stage 0 is the identity; stage 1 lands on the attach of the detach.
        """
        tt = Fraction(t)
        if not 0 <= tt <= 1:
            raise ValueError("stage must lie in [0, 1]")
        end = self.end_point(path)
        if end is STAR:
            x = self.origin
        elif classify_point(end) == "middle":
            x = end.point
        else:
            raise ValueError("path must end on the middle slice or at the cone point")
        shrunk = self.shrink_cone(path, "lower", tt)
        tail = self._ramp_segments(x, -tt, Fraction(0))
        return self.path(
            tuple(shrunk.segments) + tuple(tail), empty_at=self.end_point(shrunk)
        )

    # ------------------------------------------------------------------
    # pauses, excursions, crossings

    def pauses_and_runs(self, path: MoorePath):
        """Alternate pause durations with maximal track stretches.

        Returns ``(pauses, runs)`` with one more pause than runs; a touch of
        the cone point between two tracks counts as a pause of duration 0.
        """
        pauses = [Fraction(0)]
        runs = []
        cur: list = []
        for seg in path.segments:
            if isinstance(seg, StarSeg):
                if cur:
                    runs.append(tuple(cur))
                    cur = []
                    pauses.append(Fraction(0))
                pauses[-1] += seg.duration
            else:
                if cur and self._seg_end(cur[-1]) is STAR:
                    runs.append(tuple(cur))
                    cur = []
                    pauses.append(Fraction(0))
                cur.append(seg)
        if cur:
            runs.append(tuple(cur))
            pauses.append(Fraction(0))
        return pauses, runs

    def middle_crossings(self, path: MoorePath) -> list:
        """Upward passages through the middle slice, as (time, base point).

        A track level with the middle slice is ambiguous and raises; apply
        :meth:`make_increasing` first.  Passages that happen at the cone
        point do not count.
        """
        out = []
        acc = Fraction(0)
        for seg in path.segments:
            if isinstance(seg, TrackSeg) and seg.h0 <= 0 <= seg.h1:
                if seg.h0 == seg.h1:
                    raise ValueError(
                        "height plateau on the middle slice; apply make_increasing first"
                    )
                s = -seg.h0 / (seg.h1 - seg.h0)
                t = acc + seg.duration * s
                pt = self.point(Fraction(0), seg.cube, _lerp_coords(seg.c0, seg.c1, s))
                if isinstance(pt, Interior) and (not out or out[-1][0] != t):
                    out.append((t, pt.point))
            acc += seg.duration
        return out

    # ------------------------------------------------------------------
    # truncation near the cone point

    def truncate_near_basepoint(self, path: MoorePath, delta=None) -> MoorePath:
        """Silence the part of the path close to the cone point.

        With ``delta`` set, whole excursions that stay within ``delta`` of a
        pole are replaced by pauses.  Without it, the path is composed with
        the thirds retraction of the suspension, which collapses the collar
        of the cone point exactly and stretches the rest outward.
        """
        if delta is None:
            return self._truncate_collar(path)
        dd = Fraction(delta)
        if not 0 < dd < 1:
            raise ValueError("delta must lie strictly between 0 and 1")
        pauses, runs = self.pauses_and_runs(path)
        segs: list = [StarSeg(pauses[0])]
        for run, pause in zip(runs, pauses[1:]):
            if (
                self._seg_start(run[0]) is STAR
                and self._seg_end(run[-1]) is STAR
                and all(self._near_pole(tr, dd) for tr in run)
            ):
                segs.append(StarSeg(sum((s.duration for s in run), Fraction(0))))
            else:
                segs.extend(run)
            segs.append(StarSeg(pause))
        return self.path(segs, empty_at=path.empty_at)

    @staticmethod
    def _near_pole(seg: TrackSeg, delta: Fraction) -> bool:
        return min(seg.h0, seg.h1) > 1 - delta or max(seg.h0, seg.h1) < -(1 - delta)

    def _snap_suspension_point(self, p):
        if p is STAR:
            return STAR
        snapped = boundary_snap(self.base, p.point)
        h = _snap_height(p.height)
        if h == -1 or h == 1 or snapped == self.origin:
            return STAR
        return Interior(h, snapped)

    def _truncate_collar(self, path: MoorePath) -> MoorePath:
        segs = []
        for seg in path.segments:
            if isinstance(seg, StarSeg):
                segs.append(seg)
                continue
            cuts = {Fraction(0), Fraction(1)}
            if seg.h0 != seg.h1:
                for level in (-2 * _THIRD, -_THIRD, _THIRD, 2 * _THIRD):
                    s = (level - seg.h0) / (seg.h1 - seg.h0)
                    if 0 < s < 1:
                        cuts.add(s)
            for a0, a1 in zip(seg.c0, seg.c1):
                if a0 != a1:
                    for level in (_THIRD, 2 * _THIRD):
                        s = (level - a0) / (a1 - a0)
                        if 0 < s < 1:
                            cuts.add(s)
            ordered = sorted(cuts)
            for sa, sb in zip(ordered, ordered[1:]):
                sm = (sa + sb) / 2
                hm = _lerp(seg.h0, seg.h1, sm)
                cm = _lerp_coords(seg.c0, seg.c1, sm)
                snapped_mid = boundary_snap(self.base, RealizationPoint(seg.cube, cm))
                if hm <= -2 * _THIRD or hm >= 2 * _THIRD or snapped_mid == self.origin:
                    segs.append(StarSeg(seg.duration * (sb - sa)))
                else:
                    segs.append(
                        TrackSeg(
                            seg.duration * (sb - sa),
                            _snap_height(_lerp(seg.h0, seg.h1, sa)),
                            _snap_height(_lerp(seg.h0, seg.h1, sb)),
                            seg.cube,
                            tuple(snap_coordinate(c) for c in _lerp_coords(seg.c0, seg.c1, sa)),
                            tuple(snap_coordinate(c) for c in _lerp_coords(seg.c0, seg.c1, sb)),
                        )
                    )
        return self.path(segs, empty_at=self._snap_suspension_point(path.empty_at))
