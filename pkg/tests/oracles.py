"""Independent slow-path oracles used only by the tests.

These deliberately avoid the package's ledgers and journals: coloring
conditions are recomputed from scratch with plain dict scans, and cycles
are enumerated by a naive DFS.
"""


def simple_cycles_through(map, root, max_len):
    """All directed simple cycles through root with length <= max_len."""
    out = []
    path = [root]
    on = {root}

    def rec():
        last = path[-1]
        for w in map.rotations[last]:
            if w == root and len(path) >= 3:
                out.append(tuple(path))
            if w in on or len(path) >= max_len:
                continue
            path.append(w)
            on.add(w)
            rec()
            on.discard(w)
            path.pop()

    rec()
    return out


def remark2_reduced(map, cycle, seam=True):
    """True when no corner of the cycle bounds a face of the map."""
    L = len(cycle)
    last = L if seam else L - 2
    for i in range(last):
        a, b, c = cycle[i], cycle[(i + 1) % L], cycle[(i + 2) % L]
        if map.face_of_corner(a, b, c):
            return False
    return True


def _alternations(colors_cyclic):
    seq = [c for c in colors_cyclic if c is not None]
    if len(seq) < 2:
        return 0
    return sum(1 for i in range(len(seq))
               if seq[i] != seq[(i + 1) % len(seq)])


def replay_conditions(map, path, use_t4=True):
    """Re-run the four coloring tests for every prefix of the path using
    plain scans; True iff the path survives them all."""
    colors = {}
    for k in range(1, len(path) - 1):
        vprev, vk, vnext = path[k - 1], path[k], path[k + 1]
        if not _color_vertex(map, colors, vprev, vk, vnext, use_t4):
            return False
    return True


def _color_vertex(map, colors, vprev, vk, vnext, use_t4):
    r = map.rotations[vk]
    m = len(r)
    pv = r.index(vnext)
    pp = r.index(vprev)
    span = (pp - pv) % m
    for t in range(1, m):
        i = (pv + t) % m
        if i == pp:
            continue
        w = r[i]
        c = "R" if t < span else "B"
        prev_opp = colors.get((w, vk))
        if prev_opp is not None and prev_opp != c:
            return False
        rw = map.rotations[w]
        p = rw.index(vk)
        for q in ((p - 1) % len(rw), (p + 1) % len(rw)):
            cq = colors.get((rw[q], w))
            if cq is not None and cq != c:
                return False
        colors[(vk, w)] = c
        if use_t4:
            around = [colors.get((u, w)) for u in rw]
            if _alternations(around) > 2:
                return False
    return True
