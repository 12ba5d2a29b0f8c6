"""Pruned cycle-tree search for splitting cycles.

The DFS walks simple paths from a root vertex, coloring the darts around
each interior path vertex red/blue by side and pruning with four local
tests; closing a path applies the partially-monochromatic criterion and
the side-genus formula. A stepwise SearchState mirrors the same kernels
for unit-level use; enumerate_cycles drives the compiled kernel over the
whole tree (optionally split over worker processes by the first two path
vertices).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, asdict

import numpy as np

from . import _kernels as K
from .backend import get_backend
from .errors import (NotAdjacent, AlreadyOnPath, PathTooShort, NotClosable,
                     NonIntegralGenus, NotTriangulation, NotTransitive)
from .map_core import RotationMap
from .voltage import check_translation_automorphism


def map_arrays(map: RotationMap):
    """Numpy bundle (rot, pos, deg, logdeg) for the kernels."""
    n = map.vertex_count
    maxdeg = max(map.degree(v) for v in range(n))
    rot = np.full((n, maxdeg), -1, dtype=np.int32)
    pos = np.full((n, n), -1, dtype=np.int32)
    deg = np.zeros(n, dtype=np.int32)
    for v in range(n):
        r = map.rotations[v]
        deg[v] = len(r)
        for i, u in enumerate(r):
            rot[v, i] = u
            pos[v, u] = i
    logdeg = np.array([int(d).bit_length() - 1 for d in deg],
                      dtype=np.int32)
    return rot, pos, deg, logdeg


@dataclass(frozen=True)
class SplitVerdict:
    """Outcome of closing a cycle."""
    separating: bool
    side_genus: int = -1
    side_arcs: int = -1
    type: int = -1
    contractible: bool = False


@dataclass
class SearchOptions:
    max_length: int = 0          # 0 = unbounded
    use_test4: bool = True
    use_remark2: bool = True
    seam_remark2: bool = True
    assume_transitive: bool = False
    workers: int = 1
    backend: str | None = None
    collect_closed: bool = False
    collect_capacity: int = 1 << 20


@dataclass(frozen=True)
class TypeRow:
    type: int
    nsc: int
    min_length: int | None


@dataclass
class TypeTable:
    n: int
    genus: int
    root: int
    rows: tuple
    visited: int
    contractible_directed: int
    splitting_directed: int
    closed_cycles: list = field(default_factory=list, repr=False)

    def nsc(self, t: int) -> int:
        return self.rows[t - 1].nsc

    def min_length(self, t: int):
        return self.rows[t - 1].min_length


class SearchState:
    """Stepwise cycle-tree node: path, colored-arc ledgers, undo journal.

    Single-owner mutable; share the underlying map, not the state.
    """

    def __init__(self, map: RotationMap, root: int,
                 options: SearchOptions | None = None):
        self.map = map
        self.options = options or SearchOptions()
        self._arr = map_arrays(map)
        n = map.vertex_count
        maxdeg = int(max(self._arr[2]))
        (self.cell, self.bit, self.cntc, self.alt, self.totals,
         self.on_path, self.jw, self.jp, self.jd) = K.alloc_state(n, maxdeg)
        self.jtop = 0
        self.path = [root]
        self.on_path[root] = 1
        self._frames = [0]
        self.genus = map.genus()
        self._complete = map.is_complete()

    # -- operations ---------------------------------------------------------

    def extend(self, v: int) -> bool:
        """Try to extend the path by v; False means pruned (rolled back)."""
        rot, pos, deg, logdeg = self._arr
        vk = self.path[-1]
        if pos[vk, v] < 0:
            raise NotAdjacent(f"{v} is not adjacent to {vk}")
        if self.on_path[v]:
            raise AlreadyOnPath(f"{v} is already on the path")
        k = len(self.path) - 1
        if k >= 1 and self.options.use_remark2 and \
                self.map.face_of_corner(self.path[-2], vk, v):
            return False
        mark = self.jtop
        if k >= 1:
            ok, self.jtop = K.extend_colors(
                rot, pos, deg, logdeg, self.cell, self.bit, self.cntc,
                self.alt, self.totals, self.jw, self.jp, self.jd, self.jtop,
                self.path[-2], vk, v, self.options.use_test4)
            if not ok:
                self.jtop = K.uncolor_to(
                    self.cell, self.bit, self.cntc, self.alt, self.totals,
                    deg, self.jw, self.jp, self.jd, self.jtop, mark)
                return False
        self._frames.append(mark)
        self.path.append(v)
        self.on_path[v] = 1
        return True

    def retract(self):
        if len(self.path) < 2:
            raise PathTooShort("cannot retract a length-1 path")
        rot, pos, deg, logdeg = self._arr
        v = self.path.pop()
        self.on_path[v] = 0
        mark = self._frames.pop()
        self.jtop = K.uncolor_to(self.cell, self.bit, self.cntc, self.alt,
                                 self.totals, deg, self.jw, self.jp, self.jd,
                                 self.jtop, mark)
        return self

    def close(self) -> SplitVerdict | None:
        """Close the path into a cycle; None when the temp tests or the
        seam filter reject it."""
        rot, pos, deg, logdeg = self._arr
        L = len(self.path)
        root = self.path[0]
        if L < 3 or pos[self.path[-1], root] < 0:
            raise NotClosable(f"path of length {L} cannot close onto "
                              f"vertex {root}")
        patharr = np.array(self.path, dtype=np.int32)
        code, g1, a1, self.jtop = K.close_verdict(
            rot, pos, deg, logdeg, self.cell, self.bit, self.cntc, self.alt,
            self.totals, self.on_path, patharr, L, self.genus,
            self.jw, self.jp, self.jd, self.jtop,
            self.options.use_test4, self.options.seam_remark2,
            self._complete, self.map.vertex_count)
        if code == K.V_REJECTED:
            return None
        if code == K.V_ERR_INTEGRAL:
            raise NonIntegralGenus(
                f"side formula did not divide for cycle {self.path}")
        if code == K.V_MIXED:
            # two monochromatic classes on a non-complete map: settle by
            # cutting; both sides keep interior vertices here
            comps = self.map.cut_along(self.path)
            if len(comps) < 2:
                return SplitVerdict(separating=False)
            g1 = min(c.genus for c in comps)
            t = min(g1, self.genus - g1)
            return SplitVerdict(separating=True, side_genus=g1, side_arcs=-1,
                                type=t, contractible=(t == 0))
        if code == K.V_NOT_SEP:
            return SplitVerdict(separating=False)
        t = min(g1, self.genus - g1)
        return SplitVerdict(separating=True, side_genus=int(g1),
                            side_arcs=int(a1), type=t,
                            contractible=(t == 0))

    # -- test hooks ----------------------------------------------------------

    def ledger_snapshot(self):
        """Byte-level copy of the mutable coloring state."""
        return (self.cell.tobytes(), self.bit.tobytes(),
                self.cntc.tobytes(), self.alt.tobytes(),
                self.totals.tobytes(), self.on_path.tobytes(), self.jtop)

    def ledgers_empty(self) -> bool:
        return (self.totals[K.RED] == 0 and self.totals[K.BLUE] == 0
                and not self.cell.any())


def no_interior_bound(g_side: int) -> int:
    """Minimum length of a cycle bounding an interior-vertex-free
    orientable side of the given genus in a complete-graph triangulation:
    the smallest k with 2k - 3 + 6g <= k(k-1)/2."""
    if g_side < 0:
        raise ValueError("side genus must be nonnegative")
    k = max(3, math.isqrt(48 * g_side + 1) // 2)
    while 2 * k - 3 + 6 * g_side > k * (k - 1) // 2:
        k += 1
    return k


def _run_kernel(map, arrays, prefix, options, close_prefix_node, backend,
                genus, collect_all):
    rot, pos, deg, logdeg = arrays
    n = map.vertex_count
    Lmax = options.max_length if options.max_length else n
    cap = options.collect_capacity if collect_all else 4096
    coll = np.zeros((cap, Lmax + 3), dtype=np.int32)
    out = backend.enumerate_tree(
        rot, pos, deg, logdeg, n, genus,
        np.array(prefix, dtype=np.int32),
        options.max_length, options.use_test4, options.use_remark2,
        options.seam_remark2, map.is_complete(), close_prefix_node,
        collect_all, coll)
    (visited, contractible, splitting, nsc_dir, minlen, closed,
     error_flag, coll_used) = out
    return (int(visited), int(contractible), int(splitting),
            nsc_dir.copy(), minlen.copy(), int(closed), int(error_flag),
            coll[:coll_used].copy())


_WORKER_CTX = {}


def _worker_init(rotations, options_dict):
    from .map_core import RotationMap as RM
    m = RM(rotations)
    _WORKER_CTX["map"] = m
    _WORKER_CTX["arrays"] = map_arrays(m)
    _WORKER_CTX["options"] = SearchOptions(**options_dict)
    _WORKER_CTX["backend"] = get_backend(_WORKER_CTX["options"].backend)
    _WORKER_CTX["genus"] = m.genus()


def _worker_task(prefix):
    return _run_kernel(_WORKER_CTX["map"], _WORKER_CTX["arrays"], prefix,
                       _WORKER_CTX["options"], True,
                       _WORKER_CTX["backend"], _WORKER_CTX["genus"],
                       _WORKER_CTX["options"].collect_closed)


def enumerate_cycles(map: RotationMap, root: int = 0,
                     options: SearchOptions | None = None) -> TypeTable:
    """DFS the cycle tree rooted at `root`, returning per-type counts of
    splitting cycles with minimum lengths and traversal statistics."""
    options = options or SearchOptions()
    if not map.is_simplicial_triangulation():
        raise NotTriangulation("search requires a simplicial triangulation")
    if options.assume_transitive and not check_translation_automorphism(map):
        raise NotTransitive("translation automorphism check failed")
    genus = map.genus()
    arrays = map_arrays(map)
    backend = get_backend(options.backend)

    results = []
    if options.workers <= 1:
        results.append(_run_kernel(map, arrays, [root], options, True,
                                   backend, genus, options.collect_closed))
        pre_visited = 0
    else:
        pre_visited, prefixes = _depth2_prefixes(map, root, options)
        import multiprocessing as mp
        ctx = mp.get_context("spawn")
        opt_dict = asdict(options)
        with ctx.Pool(options.workers, initializer=_worker_init,
                      initargs=(map.rotations, opt_dict)) as pool:
            results = pool.map(_worker_task, prefixes)

    half_g = genus // 2
    nsc_dir = np.zeros(half_g + 1, dtype=np.int64)
    minlen = np.full(half_g + 1, np.int64(1) << 40, dtype=np.int64)
    visited = pre_visited
    contractible = 0
    splitting = 0
    mixed_rows = []
    closed_rows = []
    for (vis, ctr, spl, nd, ml, closed, err, coll) in results:
        if err == 1:
            raise NonIntegralGenus("side formula failed during enumeration")
        if err == 3:
            raise RuntimeError("collect buffer overflow; raise "
                               "collect_capacity")
        visited += vis
        contractible += ctr
        splitting += spl
        nsc_dir += nd
        minlen = np.minimum(minlen, ml)
        for row in coll:
            L = int(row[0])
            code = int(row[1])
            cyc = tuple(int(x) for x in row[3:3 + L])
            if code == K.V_MIXED:
                mixed_rows.append(cyc)
            else:
                closed_rows.append((cyc, code == K.V_SEP, int(row[2])))

    for cyc in mixed_rows:
        comps = map.cut_along(cyc)
        sep = len(comps) >= 2
        if sep:
            g1 = min(c.genus for c in comps)
            t = min(g1, genus - g1)
            if t == 0:
                contractible += 1
            else:
                splitting += 1
                nsc_dir[t] += 1
                if len(cyc) < minlen[t]:
                    minlen[t] = len(cyc)
        if options.collect_closed:
            closed_rows.append((cyc, sep,
                                min(c.genus for c in comps) if sep else -1))

    rows = []
    for t in range(1, half_g + 1):
        d = int(nsc_dir[t])
        if d % 2 != 0:
            raise RuntimeError(f"odd directed count for type {t}; "
                               "direction symmetry violated")
        ml = int(minlen[t])
        rows.append(TypeRow(type=t, nsc=d // 2,
                            min_length=None if ml >= (1 << 40) else ml))
    return TypeTable(n=map.vertex_count, genus=genus, root=root,
                     rows=tuple(rows), visited=visited,
                     contractible_directed=contractible,
                     splitting_directed=splitting,
                     closed_cycles=closed_rows)


def _depth2_prefixes(map, root, options):
    """Visited counts for depths 1-2 plus the depth-2 task prefixes.

    Depth-1 extensions color nothing and depth-2 colorings meet an empty
    ledger, so no test can fail; only the facial-corner filter applies.
    """
    visited = 0
    prefixes = []
    for v1 in map.rotations[root]:
        visited += 1
        if options.max_length and options.max_length < 3:
            continue
        for v2 in map.rotations[v1]:
            if v2 == root:
                continue
            if options.use_remark2 and map.face_of_corner(root, v1, v2):
                continue
            visited += 1
            prefixes.append([root, v1, v2])
    return visited, prefixes


def verify_cycle(map: RotationMap, cycle, options: SearchOptions | None = None):
    """Fast-path verdict for one cycle (replayed coloring) next to the
    cut oracle verdict. Returns (fast, oracle) where fast is None when the
    pruned search would never reach the cycle."""
    options = options or SearchOptions()
    cycle = [int(v) for v in cycle]
    comps = map.cut_along(cycle)  # validates the cycle
    if len(comps) >= 2:
        g1 = min(c.genus for c in comps)
        t = min(g1, map.genus() - g1)
        oracle = SplitVerdict(separating=True, side_genus=g1, type=t,
                              contractible=(t == 0))
    else:
        oracle = SplitVerdict(separating=False)

    fast = None
    if not _remark2_blocked(map, cycle, options):
        rot, pos, deg, logdeg = map_arrays(map)
        backend = get_backend(options.backend)
        code, g1, a1 = backend.replay_cycle(
            rot, pos, deg, logdeg, map.vertex_count, map.genus(),
            np.array(cycle, dtype=np.int32), options.use_test4,
            options.seam_remark2, map.is_complete())
        if code == K.V_ERR_INTEGRAL:
            raise NonIntegralGenus(f"side formula failed for {cycle}")
        if code == K.V_MIXED:
            fast = oracle  # settled by the same cut; fast path defers
        elif code == K.V_SEP:
            t = min(int(g1), map.genus() - int(g1))
            fast = SplitVerdict(separating=True, side_genus=int(g1),
                                side_arcs=int(a1), type=t,
                                contractible=(t == 0))
        elif code == K.V_NOT_SEP:
            fast = SplitVerdict(separating=False)
    return fast, oracle


def _remark2_blocked(map, cycle, options):
    """Whether the DFS would skip the cycle at an interior path corner.

    The two seam corners are the closure step's concern (seam_remark2)."""
    if not options.use_remark2:
        return False
    L = len(cycle)
    for i in range(L - 2):
        if map.face_of_corner(cycle[i], cycle[i + 1], cycle[i + 2]):
            return True
    return False
