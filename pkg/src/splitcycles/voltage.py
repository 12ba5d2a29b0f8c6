"""One-vertex voltage base maps over Z_n and their derived embeddings.

A base map is stored purely as the cyclic sequence of dart voltages at its
single vertex (the injective-voltage property makes this lossless). The
derived map puts vertex set Z_n with the rotation at i equal to the base
sequence translated by i; a base face with voltages (a, b, c), a+b+c = 0,
lifts to the n triangles (i, i+a, i+a+b).
"""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .errors import (NonTriangularFace, NonzeroFaceSum, DerivedNotTriangular,
                     DerivedNotSimple, SOutOfRange, ParamOutOfRange,
                     ParseError, VoltageError)
from .map_core import RotationMap


@dataclass(frozen=True)
class VoltageBaseMap:
    """Cyclic voltage sequence of a one-vertex base map over Z_n."""
    n: int
    sequence: tuple

    def __post_init__(self):
        if self.n % 2 == 0 or self.n < 3:
            raise VoltageError(f"modulus {self.n} must be odd and >= 3")
        seq = tuple(int(a) % self.n for a in self.sequence)
        if sorted(seq) != list(range(1, self.n)):
            raise VoltageError(
                "sequence must contain each nonzero residue exactly once")
        object.__setattr__(self, "sequence", seq)

    @property
    def s(self):
        """Family parameter when n = 12s + 7, else None."""
        if (self.n - 7) % 12 == 0:
            return (self.n - 7) // 12
        return None


def base_faces(base: VoltageBaseMap):
    """Faces of the base map as ordered voltage triples.

    The face successor of the dart with voltage a is the voltage following
    -a in the sequence (the map tracing convention read at the single
    vertex). Raises unless every face is a zero-sum triangle.
    """
    n = base.n
    seq = base.sequence
    m = len(seq)
    pos = {a: i for i, a in enumerate(seq)}
    succ = {a: seq[(pos[n - a] + 1) % m] for a in seq}
    out = []
    seen = set()
    for a in seq:
        if a in seen:
            continue
        face = [a]
        seen.add(a)
        b = succ[a]
        while b != a:
            face.append(b)
            seen.add(b)
            b = succ[b]
        if len(face) != 3:
            raise NonTriangularFace(
                f"base face {tuple(face)} has length {len(face)}")
        if sum(face) % n != 0:
            raise NonzeroFaceSum(
                f"base face {tuple(face)} sums to {sum(face) % n} mod {n}")
        out.append(tuple(face))
    return out


def derive(base: VoltageBaseMap) -> RotationMap:
    """The n-fold covering embedding: rotation at i is i + sequence."""
    try:
        base_faces(base)
    except NonTriangularFace as exc:
        raise DerivedNotTriangular(str(exc))
    except NonzeroFaceSum as exc:
        raise DerivedNotTriangular(str(exc))
    n = base.n
    rots = [[(i + a) % n for a in base.sequence] for i in range(n)]
    try:
        m = RotationMap(rots)
    except Exception as exc:
        raise DerivedNotSimple(str(exc))
    if not m.is_simplicial_triangulation():
        raise DerivedNotTriangular("derived map is not a triangulation")
    return m


def gross_tucker_base(s: int) -> VoltageBaseMap:
    """The triangular-embedding base for K_{12s+7}, genus 1 + s(12s+7).

    The sequence consists of two zigzag runs and two weave runs joined by
    single connectors (signed residues mod n):

      zig over -[4s+3 .. 6s+3], then -(2s+1),
      zig over  [2s+2 .. 4s+2], then 5s+3,
      weave 2j-1, -(3s+2-j), 2j, 5s+3+j       for j = 1..s,
      then 2s+1, -(3s+2),
      weave -(2j-1), 5s+3-j, -2j, -(3s+2+j)    for j = 1..s.
    """
    if s < 1:
        raise SOutOfRange(f"family parameter s = {s} must be >= 1")
    n = 12 * s + 7
    seq = []

    def zig(top, bot, count):
        vals = []
        for m in range(count):
            if m % 2 == 0:
                vals.append(top)
                top -= 1
            else:
                vals.append(bot)
                bot += 1
        return vals

    seq.extend(-v for v in zig(6 * s + 3, 4 * s + 3, 2 * s + 1))
    seq.append(-(2 * s + 1))
    seq.extend(zig(4 * s + 2, 2 * s + 2, 2 * s + 1))
    seq.append(5 * s + 3)
    for j in range(1, s + 1):
        seq.extend([2 * j - 1, -(3 * s + 2 - j), 2 * j, 5 * s + 3 + j])
    seq.extend([2 * s + 1, -(3 * s + 2)])
    for j in range(1, s + 1):
        seq.extend([-(2 * j - 1), 5 * s + 3 - j, -2 * j, -(3 * s + 2 + j)])
    return VoltageBaseMap(n, tuple(x % n for x in seq))


_BUNDLED = ("A", "B", "C")


def bundled_base(name: str) -> VoltageBaseMap:
    """One of the three genus-2 base maps over Z_19 shipped as data files.

    B coincides with gross_tucker_base(1) up to rotation of the sequence.
    """
    if name not in _BUNDLED:
        raise ParamOutOfRange(f"unknown bundled base {name!r}; "
                              f"choose from {_BUNDLED}")
    data = resources.files("splitcycles.data").joinpath(
        f"base_{name}.voltmap").read_text(encoding="utf-8")
    return parse_voltmap(data)


def check_translation_automorphism(map: RotationMap) -> bool:
    """True iff i -> i+1 (mod V) maps the rotation system to itself."""
    n = map.vertex_count
    for v in range(n):
        shifted = tuple((u + 1) % n for u in map.rotations[v])
        target = map.rotations[(v + 1) % n]
        d = len(target)
        if len(shifted) != d:
            return False
        if shifted[0] not in target:
            return False
        k = target.index(shifted[0])
        if any(shifted[i] != target[(k + i) % d] for i in range(d)):
            return False
    return True


# -- voltmap text format ------------------------------------------------------

VOLTMAP_MAGIC = "voltmap 1"


def format_voltmap(base: VoltageBaseMap) -> str:
    return (f"{VOLTMAP_MAGIC}\n"
            f"n {base.n}\n"
            "rotation: " + " ".join(str(a) for a in base.sequence) + "\n")


def parse_voltmap(text: str) -> VoltageBaseMap:
    lines = text.splitlines()
    if not lines or lines[0].strip() != VOLTMAP_MAGIC:
        raise ParseError("line 1: expected header 'voltmap 1'")
    if len(lines) < 2 or not lines[1].strip().startswith("n "):
        raise ParseError("line 2: expected 'n <modulus>'")
    try:
        n = int(lines[1].split()[1])
    except (IndexError, ValueError):
        raise ParseError("line 2: malformed modulus")
    if len(lines) < 3 or not lines[2].strip().startswith("rotation:"):
        raise ParseError("line 3: expected 'rotation: a1 a2 ...'")
    try:
        seq = [int(x) for x in lines[2].split(":", 1)[1].split()]
    except ValueError:
        raise ParseError("line 3: malformed residues")
    try:
        return VoltageBaseMap(n, tuple(seq))
    except VoltageError as exc:
        raise ParseError(f"line 3: {exc}")


def read_voltmap(path) -> VoltageBaseMap:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_voltmap(fh.read())


def write_voltmap(base: VoltageBaseMap, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_voltmap(base))
