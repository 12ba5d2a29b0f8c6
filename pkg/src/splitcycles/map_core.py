"""Orientable combinatorial maps as rotation systems.

A map is stored as one cyclic neighbor sequence per vertex. Faces are
traced with a fixed convention: the successor of the dart (u -> v) is the
dart (v -> w) where w immediately follows u in the rotation at v. Rotation
order is interpreted as counterclockwise, which makes "left of a directed
path" well defined for the cycle search.
"""
from __future__ import annotations

from dataclasses import dataclass
from collections import defaultdict

from .errors import (AsymmetricAdjacency, RepeatedNeighbor, EmptyRotation,
                     OddChi, NotACycle, EdgeMissing, NotAFace,
                     ResultNotSimple, NotContractible, IsK4Sphere,
                     ParseError)


@dataclass(frozen=True)
class Dart:
    """A directed edge; its opposite runs head to tail."""
    tail: int
    head: int

    def opposite(self) -> "Dart":
        return Dart(self.head, self.tail)


@dataclass(frozen=True)
class Subsurface:
    """One side of a cut: face set plus the Euler data of its closure."""
    faces: tuple
    boundary_cycles: int
    chi: int
    genus: int
    vertex_count: int
    edge_count: int
    face_count: int


class RotationMap:
    """A validated rotation system. Immutable after construction."""

    def __init__(self, rotations):
        rots = tuple(tuple(r) for r in rotations)
        V = len(rots)
        for v, r in enumerate(rots):
            if len(r) == 0:
                raise EmptyRotation(f"vertex {v} has an empty rotation")
            if len(set(r)) != len(r):
                raise RepeatedNeighbor(f"vertex {v} repeats a neighbor")
            for u in r:
                if not (0 <= u < V):
                    raise AsymmetricAdjacency(
                        f"vertex {v} lists unknown neighbor {u}")
                if u == v:
                    raise RepeatedNeighbor(f"vertex {v} lists itself")
        pos = [dict() for _ in range(V)]
        for v, r in enumerate(rots):
            for i, u in enumerate(r):
                pos[v][u] = i
        for v, r in enumerate(rots):
            for u in r:
                if v not in pos[u]:
                    raise AsymmetricAdjacency(
                        f"vertex {v} lists {u} but {u} omits {v}")
        self._rotations = rots
        self._pos = pos
        self._faces = None

    @property
    def rotations(self):
        return self._rotations

    @property
    def vertex_count(self) -> int:
        return len(self._rotations)

    @property
    def edge_count(self) -> int:
        return sum(len(r) for r in self._rotations) // 2

    def degree(self, v: int) -> int:
        return len(self._rotations[v])

    def position(self, v: int, u: int) -> int:
        """Index of u in the rotation at v; -1 when not adjacent."""
        return self._pos[v].get(u, -1)

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._pos[u]

    def is_complete(self) -> bool:
        n = self.vertex_count
        return all(len(r) == n - 1 for r in self._rotations)

    # -- faces and genus ---------------------------------------------------

    def face_successor(self, u: int, v: int):
        """The dart after (u -> v) in its face."""
        r = self._rotations[v]
        w = r[(self._pos[v][u] + 1) % len(r)]
        return (v, w)

    def faces(self):
        """All faces as vertex cycles; each dart lies in exactly one."""
        if self._faces is not None:
            return self._faces
        seen = set()
        out = []
        for v, r in enumerate(self._rotations):
            for u in r:
                if (v, u) in seen:
                    continue
                face = []
                a, b = v, u
                while (a, b) not in seen:
                    seen.add((a, b))
                    face.append(a)
                    a, b = self.face_successor(a, b)
                out.append(tuple(face))
        self._faces = tuple(out)
        return self._faces

    @property
    def face_count(self) -> int:
        return len(self.faces())

    def euler_characteristic(self) -> int:
        return self.vertex_count - self.edge_count + self.face_count

    def genus(self) -> int:
        chi = self.euler_characteristic()
        if chi % 2 != 0:
            raise OddChi(f"chi = {chi} is odd; rotation table corrupted")
        return (2 - chi) // 2

    def is_simplicial_triangulation(self) -> bool:
        """All faces triangles, the graph simple, and not the 3-cycle on
        the sphere (which is excluded as a triangulation)."""
        if self.vertex_count == 3 and self.edge_count == 3:
            return False
        return all(len(f) == 3 for f in self.faces())

    def face_of_corner(self, a: int, b: int, c: int) -> bool:
        """Whether the triangle (a, b, c) is a face of the map, i.e. the
        consecutive edges (a,b),(b,c) bound a common triangle."""
        if not (self.adjacent(a, b) and self.adjacent(b, c)):
            return False
        rb = self._rotations[b]
        t1 = rb[(self._pos[b][a] + 1) % len(rb)]
        ra = self._rotations[a]
        t2 = ra[(self._pos[a][b] + 1) % len(ra)]
        return c == t1 or c == t2

    # -- cut oracle ---------------------------------------------------------

    def cut_along(self, cycle):
        """Cut along a simple cycle: connected components of the face
        adjacency graph crossing only non-cycle edges. The cycle is
        separating iff there are at least two components."""
        cycle = list(cycle)
        if len(cycle) < 3 or len(set(cycle)) != len(cycle):
            raise NotACycle(f"not a simple cycle: {cycle}")
        L = len(cycle)
        cyc_edges = set()
        for i in range(L):
            a, b = cycle[i], cycle[(i + 1) % L]
            if not self.adjacent(a, b):
                raise EdgeMissing(f"({a},{b}) is not an edge of the map")
            cyc_edges.add((min(a, b), max(a, b)))
        if len(cyc_edges) != L:
            raise NotACycle("cycle repeats an edge")
        faces = self.faces()
        edge2faces = defaultdict(list)
        for fi, f in enumerate(faces):
            k = len(f)
            for i in range(k):
                a, b = f[i], f[(i + 1) % k]
                edge2faces[(min(a, b), max(a, b))].append(fi)
        comp = [-1] * len(faces)
        ncomp = 0
        for f0 in range(len(faces)):
            if comp[f0] != -1:
                continue
            stack = [f0]
            comp[f0] = ncomp
            while stack:
                f = stack.pop()
                fc = faces[f]
                k = len(fc)
                for i in range(k):
                    a, b = fc[i], fc[(i + 1) % k]
                    e = (min(a, b), max(a, b))
                    if e in cyc_edges:
                        continue
                    for g in edge2faces[e]:
                        if comp[g] == -1:
                            comp[g] = ncomp
                            stack.append(g)
            ncomp += 1
        out = []
        for c in range(ncomp):
            fs = [fi for fi in range(len(faces)) if comp[fi] == c]
            verts = set()
            edges = set()
            for fi in fs:
                f = faces[fi]
                k = len(f)
                for i in range(k):
                    verts.add(f[i])
                    a, b = f[i], f[(i + 1) % k]
                    edges.add((min(a, b), max(a, b)))
            Vp, Ep, Fp = len(verts), len(edges), len(fs)
            chi = Vp - Ep + Fp
            # a separating cut leaves one boundary cycle per side; the
            # single component of a non-separating cut gets both copies
            b = 1 if ncomp >= 2 else 2
            out.append(Subsurface(faces=tuple(fs), boundary_cycles=b,
                                  chi=chi, genus=(2 - chi - b) // 2,
                                  vertex_count=Vp, edge_count=Ep,
                                  face_count=Fp))
        return out

    # -- surgery -------------------------------------------------------------

    def contractible_edges(self):
        """Edges whose two incident faces are the only 3-cycles through
        them; empty exactly when the triangulation is irreducible."""
        out = []
        seen = set()
        for v, r in enumerate(self._rotations):
            for u in r:
                e = (min(u, v), max(u, v))
                if e in seen:
                    continue
                seen.add(e)
                if self._edge_contractible(e[0], e[1]):
                    out.append(e)
        return out

    def _edge_contractible(self, u, v):
        common = set(self._rotations[u]) & set(self._rotations[v])
        if len(common) != 2:
            return False
        if self.vertex_count == 4 and self.edge_count == 6:
            return False  # K_4 on the sphere admits no contraction
        return True

    def contract_edge(self, edge) -> "RotationMap":
        """Contract a contractible edge; the result lives on the same
        surface and remains a simplicial triangulation."""
        u, v = edge
        if not self.adjacent(u, v):
            raise EdgeMissing(f"({u},{v}) is not an edge")
        if self.vertex_count == 4 and self.edge_count == 6:
            raise IsK4Sphere("cannot contract an edge of K_4 on the sphere")
        common = set(self._rotations[u]) & set(self._rotations[v])
        if len(common) != 2:
            raise NotContractible(
                f"edge ({u},{v}) lies in {len(common)} 3-cycles")
        rv = self._rotations[v]
        dv = len(rv)
        pu = self._pos[v][u]
        # rot(v) = (..., c2, u, c1, z_1..z_m, ...): splice z's into rot(u)
        c1 = rv[(pu + 1) % dv]
        c2 = rv[(pu - 1) % dv]
        zs = []
        i = (pu + 2) % dv
        while rv[i] != c2:
            zs.append(rv[i])
            i = (i + 1) % dv
        ru = self._rotations[u]
        new_u = []
        for w in ru:
            if w == v:
                new_u.extend(zs)
            else:
                new_u.append(w)
        rots = []
        for w, r in enumerate(self._rotations):
            if w == v:
                continue
            if w == u:
                rots.append(new_u)
            elif w in (c1, c2):
                rots.append([x for x in r if x != v])
            else:
                rots.append([u if x == v else x for x in r])
        # compact labels: drop vertex v
        relabel = {}
        nxt = 0
        for w in range(self.vertex_count):
            if w == v:
                continue
            relabel[w] = nxt
            nxt += 1
        rots = [[relabel[x] for x in r] for r in rots]
        result = RotationMap(rots)
        if not result.is_simplicial_triangulation():
            raise NotContractible(
                f"contracting ({u},{v}) does not yield a triangulation")
        return result


def build_map(rotations) -> RotationMap:
    return RotationMap(rotations)


def faces(map: RotationMap):
    return map.faces()


def genus(map: RotationMap) -> int:
    return map.genus()


def is_simplicial_triangulation(map: RotationMap) -> bool:
    return map.is_simplicial_triangulation()


def cut_along(map: RotationMap, cycle):
    return map.cut_along(cycle)


def contract_edge(map: RotationMap, edge) -> RotationMap:
    return map.contract_edge(edge)


def contractible_edges(map: RotationMap):
    return map.contractible_edges()


def glue_along_triangle(map_a: RotationMap, face_a,
                        map_b: RotationMap, face_b) -> RotationMap:
    """Remove a facial triangle from each map and identify the boundaries
    with opposite orientations. B's vertices are relabeled after A's; the
    result's genus is the sum of the parts'."""
    fa = tuple(face_a)
    fb = tuple(face_b)
    for m, f, name in ((map_a, fa, "A"), (map_b, fb, "B")):
        cands = {tuple(x) for x in m.faces() if len(x) == 3}
        rots = {f, (f[1], f[2], f[0]), (f[2], f[0], f[1])}
        if not (rots & cands):
            raise NotAFace(f"face {f} is not a facial triangle of map {name}")
    na = map_a.vertex_count
    a1, a2, a3 = fa
    b1, b2, b3 = fb
    # orientation-reversing identification: a1=b1, a2=b3, a3=b2
    ident = {b1: a1, b3: a2, b2: a3}

    def map_b_vertex(w):
        if w in ident:
            return ident[w]
        offset = w - sum(1 for x in (b1, b2, b3) if x < w)
        return na + offset

    rots = [list(r) for r in map_a.rotations]

    def splice(av, bv):
        """Insert B's fan at the merged vertex between its two seam
        neighbors in A's rotation."""
        ra = rots[av]
        rb = map_b.rotations[bv]
        # in face (a1,a2,a3) the corner at a1 sits between the darts
        # toward a3 and a2: a3 immediately precedes a2 in rot(a1)
        idx = fa.index(av)
        nxt = fa[(idx + 1) % 3]
        prv = fa[(idx - 1) % 3]
        # B side: at bv, corner of face fb: prv_b precedes nxt_b
        idxb = fb.index(bv)
        nxtb = fb[(idxb + 1) % 3]
        prvb = fb[(idxb - 1) % 3]
        # walk B's rotation from nxt_b around to prv_b (exclusive ends)
        db = len(rb)
        start = rb.index(nxtb)
        fan = []
        i = (start + 1) % db
        while rb[i] != prvb:
            fan.append(map_b_vertex(rb[i]))
            i = (i + 1) % db
        pa = ra.index(prv)
        out = []
        for k in range(len(ra)):
            w = ra[(pa + k) % len(ra)]
            out.append(w)
            if w == prv:
                out.extend(fan)
        rots[av] = out

    splice(a1, b1)
    splice(a2, b3)
    splice(a3, b2)
    for w in range(map_b.vertex_count):
        if w in (b1, b2, b3):
            continue
        rots.append([map_b_vertex(x) for x in map_b.rotations[w]])
    try:
        result = RotationMap(rots)
    except (RepeatedNeighbor, AsymmetricAdjacency) as exc:
        raise ResultNotSimple(f"gluing created a non-simple map: {exc}")
    if not result.is_simplicial_triangulation():
        raise ResultNotSimple("glued map is not a simplicial triangulation")
    return result


# -- rotmap text format -------------------------------------------------------

ROTMAP_MAGIC = "rotmap 1"


def format_rotmap(map: RotationMap) -> str:
    lines = [ROTMAP_MAGIC, f"vertices {map.vertex_count}"]
    for v, r in enumerate(map.rotations):
        lines.append(f"{v}: " + " ".join(str(u) for u in r))
    return "\n".join(lines) + "\n"


def parse_rotmap(text: str) -> RotationMap:
    lines = text.splitlines()
    if not lines or lines[0].strip() != ROTMAP_MAGIC:
        raise ParseError("line 1: expected header 'rotmap 1'")
    if len(lines) < 2 or not lines[1].strip().startswith("vertices "):
        raise ParseError("line 2: expected 'vertices <V>'")
    try:
        V = int(lines[1].split()[1])
    except (IndexError, ValueError):
        raise ParseError("line 2: malformed vertex count")
    rotations = [None] * V
    ln = 2
    for raw in lines[2:]:
        ln += 1
        line = raw.strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError(f"line {ln}: expected '<v>: n1 n2 ...'")
        head, _, tail = line.partition(":")
        try:
            v = int(head)
            neigh = [int(x) for x in tail.split()]
        except ValueError:
            raise ParseError(f"line {ln}: malformed integers")
        if not (0 <= v < V):
            raise ParseError(f"line {ln}: vertex {v} out of range")
        if rotations[v] is not None:
            raise ParseError(f"line {ln}: duplicate rotation for vertex {v}")
        rotations[v] = neigh
    missing = [v for v in range(V) if rotations[v] is None]
    if missing:
        raise ParseError(f"missing rotation lines for vertices {missing}")
    try:
        m = RotationMap(rotations)
    except (AsymmetricAdjacency, RepeatedNeighbor, EmptyRotation) as exc:
        raise type(exc)(str(exc))
    if m.vertex_count == 3 and m.edge_count == 3:
        raise ParseError("the 3-cycle embedded in a sphere is rejected")
    return m


def read_rotmap(path) -> RotationMap:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_rotmap(fh.read())


def write_rotmap(map: RotationMap, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_rotmap(map))
