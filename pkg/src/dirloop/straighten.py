"""Straightening directed loops into word loops, and contracting the words.

A directed loop decomposes into pauses at the cone point and star to star
excursions.  An excursion with exactly one passage through the middle
slice deforms, crossing pinned, into the standard climb over the crossing
point; pauses shrink away.  The result of the full deformation is the word
loop of the crossing word, reached through exact sampled frames.  On a
connected base the word can then be walked letter by letter into the
basepoint along the one skeleton, ending at the constant loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cubical import CubicalSet, RealizationPoint, normalize_point
from .homology import betti
from .paths import MoorePath, STAR, StarSeg, Suspension, TrackSeg

DEFAULT_SAMPLES = (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))


@dataclass(frozen=True)
class ChainDecomposition:
    """A loop cut into pauses and excursions, one more pause than excursions."""

    pauses: tuple[Fraction, ...]
    excursions: tuple[MoorePath, ...]


def chain_split(sus: Suspension, loop: MoorePath) -> ChainDecomposition:
    """Cut a loop at the cone point into its pause/excursion chain."""
    if not sus.is_loop(loop):
        raise ValueError("chain split needs a loop at the cone point")
    pauses, runs = sus.pauses_and_runs(loop)
    return ChainDecomposition(tuple(pauses), tuple(sus.path(r) for r in runs))


def assemble(sus: Suspension, chain: ChainDecomposition) -> MoorePath:
    """Inverse of :func:`chain_split`."""
    if len(chain.pauses) != len(chain.excursions) + 1:
        raise ValueError("chain needs one more pause than excursions")
    segs: list = [StarSeg(chain.pauses[0])]
    for exc, pause in zip(chain.excursions, chain.pauses[1:]):
        segs.extend(exc.segments)
        segs.append(StarSeg(pause))
    return sus.path(segs)


def _unique_crossing(sus: Suspension, run: MoorePath):
    crossings = sus.middle_crossings(run)
    if len(crossings) != 1:
        raise ValueError(
            f"excursion crosses the middle slice {len(crossings)} times; "
            "straightening needs exactly one"
        )
    return crossings[0]


def _lower_step(sus: Suspension, pre: MoorePath, xb: RealizationPoint, t: Fraction) -> MoorePath:
    # heights before the crossing never exceed 0, so pushing down by t and
    # refilling with a climb from -t keeps both ends fixed
    a = pre.duration
    segs = list(sus.shift_heights(pre, -t).segments)
    if t > 0:
        segs.append(TrackSeg(t * a, -t, Fraction(0), xb.cube, xb.coords, xb.coords))
    return sus.scale_time(sus.path(segs), Fraction(1) / (1 + t))


def _upper_step(sus: Suspension, post: MoorePath, xb: RealizationPoint, t: Fraction) -> MoorePath:
    a = post.duration
    segs: list = []
    if t > 0:
        segs.append(TrackSeg(t * a, Fraction(0), t, xb.cube, xb.coords, xb.coords))
    segs.extend(sus.shift_heights(post, t).segments)
    return sus.scale_time(sus.path(segs), Fraction(1) / (1 + t))


def straighten_step(sus: Suspension, run: MoorePath, t) -> MoorePath:
    """Deform an excursion toward the standard climb, stage ``t`` in [0, 1].

    The single middle slice crossing stays pinned; duration is preserved.
    """
    tt = Fraction(t)
    if not 0 <= tt <= 1:
        raise ValueError("stage must lie in [0, 1]")
    b, xb = _unique_crossing(sus, run)
    pre = sus.slice_path(run, 0, b)
    post = sus.slice_path(run, b, run.duration)
    return sus.concat(_lower_step(sus, pre, xb, tt), _upper_step(sus, post, xb, tt))


def _late_frame(sus: Suspension, run: MoorePath, u) -> MoorePath:
    # from the half straightened shape to the single full climb: the four
    # phase breakpoints move affinely while the profile stays -1, 0, 1
    uu = Fraction(u)
    b, xb = _unique_crossing(sus, run)
    a = run.duration
    p = (1 - uu) * b / 2
    q = (1 - uu) * b + uu * a / 2
    r = (1 - uu) * (a + b) / 2 + uu * a
    return sus.path(
        [
            StarSeg(p),
            TrackSeg(q - p, Fraction(-1), Fraction(0), xb.cube, xb.coords, xb.coords),
            TrackSeg(r - q, Fraction(0), Fraction(1), xb.cube, xb.coords, xb.coords),
            StarSeg(a - r),
        ]
    )


def full_straighten(sus: Suspension, loop: MoorePath, samples=DEFAULT_SAMPLES):
    """Deform a directed loop into the word loop of its crossing word.

    Returns ``(result, frames)``: the final word loop and one exact frame
    per requested sample of the deformation clock.  Stage 1/2 finishes the
    per excursion straightening, the rest of the clock evens out the climbs
    while the pauses shrink away.
    """
    if not sus.is_loop(loop):
        raise ValueError("straightening needs a loop at the cone point")
    problems = sus.verify_directed(loop, "total")
    if problems:
        raise ValueError("loop is not directed: " + problems[0])
    stages = [Fraction(s) for s in samples]
    if any(not 0 <= s <= 1 for s in stages):
        raise ValueError("samples must lie in [0, 1]")
    pauses, runs = sus.pauses_and_runs(loop)
    run_paths = [sus.path(r) for r in runs]
    for rp in run_paths:
        _unique_crossing(sus, rp)

    def frame(t: Fraction) -> MoorePath:
        segs: list = [StarSeg(pauses[0] * (1 - t))]
        for rp, pause in zip(run_paths, pauses[1:]):
            if t <= Fraction(1, 2):
                sub = straighten_step(sus, rp, 2 * t)
            else:
                sub = _late_frame(sus, rp, 2 * t - 1)
            segs.extend(sub.segments)
            segs.append(StarSeg(pause * (1 - t)))
        return sus.path(segs)

    return frame(Fraction(1)), [frame(s) for s in stages]


def _edge_path_to_basepoint(K: CubicalSet, start: str) -> list:
    """Hops (edge, far vertex) from a vertex to the basepoint, by BFS."""
    if start == K.basepoint:
        return []
    adj: dict[str, list] = {}
    for e in sorted(c for c, d in K.cubes.items() if d == 1):
        a = K.faces[(e, 1, 0)].base
        b = K.faces[(e, 1, 1)].base
        adj.setdefault(a, []).append((b, e))
        adj.setdefault(b, []).append((a, e))
    parent: dict[str, tuple] = {start: ()}
    queue = [start]
    while queue:
        v = queue.pop(0)
        if v == K.basepoint:
            break
        for w, e in sorted(adj.get(v, [])):
            if w not in parent:
                parent[w] = (v, e)
                queue.append(w)
    if K.basepoint not in parent:
        raise ValueError(f"no edge path from {start!r} to the basepoint")
    hops = []
    v = K.basepoint
    while parent[v]:
        prev, e = parent[v]
        hops.append((e, v))
        v = prev
    hops.reverse()
    return hops


def contract_to_constant(sus: Suspension, loop: MoorePath, samples=DEFAULT_SAMPLES) -> list:
    """Deformation trail from a directed loop all the way to the constant loop.

    Straightens first, then walks each letter of the word into the
    basepoint along the one skeleton, and finally drops the leftover
    pauses.  The base must be connected or there is nowhere to walk.
    """
    if betti(sus.base).get(0) != 1:
        raise ValueError("base complex is not connected; contraction needs a connected base")
    result, frames = full_straighten(sus, loop, samples)
    trail = list(frames)
    _, runs = sus.pauses_and_runs(result)
    state: list = []
    for run in runs:
        (tr,) = run
        state.append(["letter", tr.duration, RealizationPoint(tr.cube, tr.c0)])

    def emit() -> None:
        segs = []
        for kind, d, *rest in state:
            if kind == "pause":
                segs.append(StarSeg(d))
            else:
                pos = rest[0]
                segs.append(TrackSeg(d, Fraction(-1), Fraction(1), pos.cube, pos.coords, pos.coords))
        trail.append(sus.path(segs))

    K = sus.base
    for entry in state:
        pos = entry[2]
        entry[2] = normalize_point(K, pos.cube, tuple(c / 2 for c in pos.coords))
        emit()
        entry[2] = normalize_point(K, pos.cube, (Fraction(0),) * len(pos.coords))
        emit()
        for edge, far in _edge_path_to_basepoint(K, entry[2].cube):
            entry[2] = normalize_point(K, edge, (Fraction(1, 2),))
            emit()
            entry[2] = RealizationPoint(far, ())
            emit()
        entry[0] = "pause"
        del entry[2:]
        emit()

    empty = MoorePath((), STAR)
    trail.append(empty)
    out = [trail[0]]
    for fr in trail[1:]:
        if fr != out[-1]:
            out.append(fr)
    return out
