"""JSON formats for complexes, paths and words.

Rationals travel as strings ("1/3", "-2") so nothing ever rounds.  Dumps
are canonical: loading what was dumped gives back an equal value, and
equal values dump to identical text.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .cubical import CubicalSet, FaceRef, RealizationPoint, normalize_point
from .paths import MoorePath, StarSeg, Suspension, TrackSeg

_FACE_KEY = re.compile(r"^d([01])_([1-9][0-9]*)$")


class FormatError(ValueError):
    """Malformed input data, as opposed to a violated domain precondition."""


def parse_rational(value) -> Fraction:
    if isinstance(value, bool):
        raise FormatError(f"expected a rational, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"malformed rational {value!r}") from None
    raise FormatError(f"rationals must be strings or integers, got {value!r}")


def rational_str(value) -> str:
    return str(Fraction(value))


def _require(obj, key: str, where: str):
    if not isinstance(obj, dict) or key not in obj:
        raise FormatError(f"{where} is missing {key!r}")
    return obj[key]


def dump_complex(K: CubicalSet) -> dict:
    cubes = []
    for name in sorted(K.cubes, key=lambda c: (K.cubes[c], c)):
        dim = K.cubes[name]
        faces = {}
        for i in range(1, dim + 1):
            for eps in (0, 1):
                ref = K.faces[(name, i, eps)]
                faces[f"d{eps}_{i}"] = {"base": ref.base, "degens": list(ref.degens)}
        cubes.append({"id": name, "dim": dim, "faces": faces})
    return {"basepoint": K.basepoint, "cubes": cubes}


def load_complex(obj) -> CubicalSet:
    basepoint = _require(obj, "basepoint", "complex")
    raw_cubes = _require(obj, "cubes", "complex")
    if not isinstance(basepoint, str):
        raise FormatError("basepoint must be a cube id string")
    if not isinstance(raw_cubes, list):
        raise FormatError("cubes must be a list")
    cubes: dict[str, int] = {}
    faces: dict[tuple, FaceRef] = {}
    for entry in raw_cubes:
        name = _require(entry, "id", "cube entry")
        dim = _require(entry, "dim", f"cube {name!r}")
        if not isinstance(name, str):
            raise FormatError(f"cube id must be a string, got {name!r}")
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
            raise FormatError(f"cube {name!r} has malformed dimension {dim!r}")
        if name in cubes:
            raise FormatError(f"duplicate cube id {name!r}")
        cubes[name] = dim
        raw_faces = entry.get("faces", {})
        if not isinstance(raw_faces, dict):
            raise FormatError(f"cube {name!r} faces must be an object")
        for key, ref in raw_faces.items():
            m = _FACE_KEY.match(key)
            if not m:
                raise FormatError(f"cube {name!r} has malformed face key {key!r}")
            eps, i = int(m.group(1)), int(m.group(2))
            if i > dim:
                raise FormatError(f"cube {name!r} face {key!r} exceeds its dimension")
            base = _require(ref, "base", f"face {key!r} of {name!r}")
            degens = ref.get("degens", [])
            if not isinstance(base, str):
                raise FormatError(f"face {key!r} of {name!r} has malformed base")
            if not isinstance(degens, list) or any(
                not isinstance(j, int) or isinstance(j, bool) or j < 1 for j in degens
            ):
                raise FormatError(f"face {key!r} of {name!r} has malformed degeneracies")
            faces[(name, i, eps)] = FaceRef(base, tuple(degens))
    for entry in raw_cubes:
        name, dim = entry["id"], entry["dim"]
        for i in range(1, dim + 1):
            for eps in (0, 1):
                if (name, i, eps) not in faces:
                    raise FormatError(f"cube {name!r} is missing face d{eps}_{i}")
    for (name, i, eps), ref in faces.items():
        if ref.base not in cubes:
            raise FormatError(f"face d{eps}_{i} of {name!r} references unknown cube {ref.base!r}")
    if basepoint not in cubes:
        raise FormatError(f"basepoint {basepoint!r} is not a declared cube")
    return CubicalSet(cubes, faces, basepoint)


def dump_path(path: MoorePath) -> dict:
    segments = []
    for seg in path.segments:
        if isinstance(seg, StarSeg):
            segments.append({"kind": "star", "dur": rational_str(seg.duration)})
        else:
            segments.append(
                {
                    "kind": "track",
                    "dur": rational_str(seg.duration),
                    "h": [rational_str(seg.h0), rational_str(seg.h1)],
                    "cube": seg.cube,
                    "c0": [rational_str(c) for c in seg.c0],
                    "c1": [rational_str(c) for c in seg.c1],
                }
            )
    return {"segments": segments}


def load_path(sus: Suspension, obj) -> MoorePath:
    raw = _require(obj, "segments", "path")
    if not isinstance(raw, list):
        raise FormatError("segments must be a list")
    segs = []
    for k, entry in enumerate(raw):
        kind = _require(entry, "kind", f"segment {k}")
        dur = parse_rational(_require(entry, "dur", f"segment {k}"))
        if kind == "star":
            segs.append(StarSeg(dur))
        elif kind == "track":
            cube = _require(entry, "cube", f"segment {k}")
            if cube not in sus.base.cubes:
                raise FormatError(f"segment {k} references unknown cube {cube!r}")
            h = _require(entry, "h", f"segment {k}")
            if not isinstance(h, list) or len(h) != 2:
                raise FormatError(f"segment {k} needs a two element height list")
            c0 = _require(entry, "c0", f"segment {k}")
            c1 = _require(entry, "c1", f"segment {k}")
            dim = sus.base.cubes[cube]
            for label, coords in (("c0", c0), ("c1", c1)):
                if not isinstance(coords, list) or len(coords) != dim:
                    raise FormatError(
                        f"segment {k} field {label} needs {dim} coordinates for cube {cube!r}"
                    )
            segs.append(
                TrackSeg(
                    dur,
                    parse_rational(h[0]),
                    parse_rational(h[1]),
                    cube,
                    tuple(parse_rational(c) for c in c0),
                    tuple(parse_rational(c) for c in c1),
                )
            )
        else:
            raise FormatError(f"segment {k} has unknown kind {kind!r}")
    return sus.path(segs)


def dump_word(word) -> list:
    return [
        {"cube": pt.cube, "coords": [rational_str(c) for c in pt.coords]} for pt in word
    ]


def load_word(K: CubicalSet, obj) -> tuple[RealizationPoint, ...]:
    if not isinstance(obj, list):
        raise FormatError("word must be a list of letters")
    letters = []
    for k, entry in enumerate(obj):
        cube = _require(entry, "cube", f"letter {k}")
        coords = _require(entry, "coords", f"letter {k}")
        if cube not in K.cubes:
            raise FormatError(f"letter {k} references unknown cube {cube!r}")
        if not isinstance(coords, list) or len(coords) != K.cubes[cube]:
            raise FormatError(f"letter {k} needs {K.cubes[cube]} coordinates")
        letters.append(normalize_point(K, cube, tuple(parse_rational(c) for c in coords)))
    return tuple(letters)
