"""Hot kernels of the cycle-tree search, written against numpy arrays.

Every function here is plain-Python numba-compatible source; the backend
module compiles them with @njit when enabled and runs them as-is otherwise.

State layout, per map with n vertices and max degree D:
  cell[v, p]   color of the inward dart (rot[v][p] -> v): 0, RED or BLUE
  bit[v, .]    Fenwick tree over colored positions at v (any color)
  cntc[v, c]   colored inward darts at v per color
  alt[v]       color alternations around v in cyclic position order
  totals[c]    globally colored darts per color
  journal      (vertex, position, alt-delta) records per coloring step

The four tests guard the two invariants a splitting cycle's side coloring
must satisfy: opposite darts agree, and the colored darts at each vertex
form at most two monochromatic cyclic blocks with no adjacent-slot color
clash. Closure applies the partially-monochromatic criterion and the side
genus formula g' = (A_c - 2L + 6) / 12.
"""
import numpy as np

RED = 1
BLUE = 2

V_REJECTED = 0
V_NOT_SEP = 1
V_SEP = 2
V_MIXED = 3           # partially monochromatic but two vertex classes
V_ERR_INTEGRAL = -1


def bit_add(bit, v, p, delta, m):
    i = p + 1
    while i <= m:
        bit[v, i] += delta
        i += i & (-i)


def bit_prefix(bit, v, k):
    s = 0
    i = k
    while i > 0:
        s += bit[v, i]
        i -= i & (-i)
    return s


def bit_select(bit, v, m, k, logm):
    # 0-indexed position of the k-th colored slot, k >= 1
    idx = 0
    rem = k
    bm = 1 << logm
    while bm > 0:
        nxt = idx + bm
        if nxt <= m and bit[v, nxt] < rem:
            idx = nxt
            rem -= bit[v, nxt]
        bm >>= 1
    return idx


def pred_colored(bit, v, p, total, m, logm):
    if total == 0:
        return -1
    c = bit_prefix(bit, v, p)
    if c > 0:
        return bit_select(bit, v, m, c, logm)
    return bit_select(bit, v, m, total, logm)


def succ_colored(bit, v, p, total, m, logm):
    if total == 0:
        return -1
    c = bit_prefix(bit, v, p + 1)
    if c < total:
        return bit_select(bit, v, m, c + 1, logm)
    return bit_select(bit, v, m, 1, logm)


def color_dart(rot, pos, deg, logdeg, cell, bit, cntc, alt, totals,
               jw, jp, jd, jtop, u, w, c, use_t4):
    """Color dart (u -> w) with c, running the four tests.

    Returns (ok, jtop'). On failure the caller unwinds to its frame mark;
    the dart may already sit in the journal.
    """
    p = pos[w, u]
    op = cell[u, pos[u, w]]
    if op != 0 and op != c:
        return False, jtop             # test 1: opposite dart disagrees
    m = deg[w]
    q = p - 1
    if q < 0:
        q = m - 1
    x = cell[w, q]
    if x != 0 and x != c:
        return False, jtop             # test 2: preceding slot clashes
    q2 = p + 1
    if q2 >= m:
        q2 = 0
    x2 = cell[w, q2]
    if x2 != 0 and x2 != c:
        return False, jtop             # test 3: following slot clashes
    tot = cntc[w, RED] + cntc[w, BLUE]
    dalt = 0
    if tot == 1:
        a = pred_colored(bit, w, p, tot, m, logdeg[w])
        if cell[w, a] != c:
            dalt = 2
    elif tot >= 2:
        a = pred_colored(bit, w, p, tot, m, logdeg[w])
        b = succ_colored(bit, w, p, tot, m, logdeg[w])
        ca = cell[w, a]
        cb = cell[w, b]
        dalt = (1 if ca != c else 0) + (1 if c != cb else 0) \
            - (1 if ca != cb else 0)
    alt[w] += dalt
    cell[w, p] = c
    bit_add(bit, w, p, 1, m)
    cntc[w, c] += 1
    totals[c] += 1
    jw[jtop] = w
    jp[jtop] = p
    jd[jtop] = dalt
    jtop += 1
    if use_t4 and alt[w] > 2:
        return False, jtop             # test 4: more than two blocks
    return True, jtop


def uncolor_to(cell, bit, cntc, alt, totals, deg, jw, jp, jd, jtop, mark):
    while jtop > mark:
        jtop -= 1
        w = jw[jtop]
        p = jp[jtop]
        c = cell[w, p]
        cell[w, p] = 0
        bit_add(bit, w, p, -1, deg[w])
        cntc[w, c] -= 1
        totals[c] -= 1
        alt[w] -= jd[jtop]
    return jtop


def extend_colors(rot, pos, deg, logdeg, cell, bit, cntc, alt, totals,
                  jw, jp, jd, jtop, vprev, vk, vnext, use_t4):
    """Color all darts out of vk except toward vprev/vnext.

    Darts strictly between the dart toward vnext and the dart toward vprev
    in positive rotation order are RED (left of the directed subpath),
    the rest BLUE. Returns (ok, jtop')."""
    m = deg[vk]
    pv = pos[vk, vnext]
    pp = pos[vk, vprev]
    span = pp - pv
    if span < 0:
        span += m
    for i in range(m):
        if i == pv or i == pp:
            continue
        w = rot[vk, i]
        t = i - pv
        if t < 0:
            t += m
        c = RED if t < span else BLUE
        ok, jtop = color_dart(rot, pos, deg, logdeg, cell, bit, cntc, alt,
                              totals, jw, jp, jd, jtop, vk, w, c, use_t4)
        if not ok:
            return False, jtop
    return True, jtop


def close_verdict(rot, pos, deg, logdeg, cell, bit, cntc, alt, totals,
                  on_path, path, L, genus, jw, jp, jd, jtop, use_t4,
                  seam_r2, is_complete, n):
    """Close the path into a cycle: temp-color both seam corners, rerun
    the tests, then the partially-monochromatic scan and genus formula.

    Returns (code, side_genus, side_arcs, jtop); temp colors are removed
    before returning."""
    v0 = path[0]
    vk = path[L - 1]
    v1 = path[1]
    vk1 = path[L - 2]
    if seam_r2:
        t1 = rot[vk, (pos[vk, vk1] + 1) % deg[vk]]
        t2 = rot[vk1, (pos[vk1, vk] + 1) % deg[vk1]]
        if t1 == v0 or t2 == v0:
            return V_REJECTED, -1, -1, jtop
        t1 = rot[v0, (pos[v0, vk] + 1) % deg[v0]]
        t2 = rot[vk, (pos[vk, v0] + 1) % deg[vk]]
        if t1 == v1 or t2 == v1:
            return V_REJECTED, -1, -1, jtop
    mark = jtop
    ok, jtop = extend_colors(rot, pos, deg, logdeg, cell, bit, cntc, alt,
                             totals, jw, jp, jd, jtop, vk1, vk, v0, use_t4)
    if ok:
        ok, jtop = extend_colors(rot, pos, deg, logdeg, cell, bit, cntc, alt,
                                 totals, jw, jp, jd, jtop, vk, v0, v1,
                                 use_t4)
    if not ok:
        jtop = uncolor_to(cell, bit, cntc, alt, totals, deg,
                          jw, jp, jd, jtop, mark)
        return V_REJECTED, -1, -1, jtop
    nred = 0
    nblue = 0
    bad = False
    for w in range(n):
        if on_path[w] != 0:
            continue
        r = cntc[w, RED] > 0
        b = cntc[w, BLUE] > 0
        if r and b:
            bad = True
            break
        if r:
            nred += 1
        elif b:
            nblue += 1
    code = V_NOT_SEP
    side_genus = -1
    side_arcs = -1
    if bad:
        code = V_NOT_SEP
    elif nred > 0 and nblue > 0:
        # two monochromatic classes: in a complete graph some edge joins
        # them, so the cycle cannot separate; otherwise defer to an oracle
        code = V_NOT_SEP if is_complete else V_MIXED
    elif nred == 0 and nblue == 0:
        # Hamiltonian closure: both sides are interior-free
        ar = totals[RED]
        ab = totals[BLUE]
        gr = ar - 2 * L + 6
        gb = ab - 2 * L + 6
        if gr % 12 != 0 or gb % 12 != 0:
            code = V_ERR_INTEGRAL
        else:
            gr //= 12
            gb //= 12
            if gr < 0 or gb < 0 or gr + gb != genus:
                code = V_ERR_INTEGRAL
            else:
                code = V_SEP
                if gr <= gb:
                    side_genus = gr
                    side_arcs = ar
                else:
                    side_genus = gb
                    side_arcs = ab
    else:
        c = BLUE if nred > 0 else RED
        ac = totals[c]
        num = ac - 2 * L + 6
        if num % 12 != 0:
            code = V_ERR_INTEGRAL
        else:
            g1 = num // 12
            if g1 < 0 or g1 > genus:
                code = V_ERR_INTEGRAL
            else:
                code = V_SEP
                side_genus = g1
                side_arcs = ac
    jtop = uncolor_to(cell, bit, cntc, alt, totals, deg,
                      jw, jp, jd, jtop, mark)
    return code, side_genus, side_arcs, jtop


def alloc_state(n, maxdeg):
    cell = np.zeros((n, maxdeg), dtype=np.int8)
    bit = np.zeros((n, maxdeg + 1), dtype=np.int32)
    cntc = np.zeros((n, 3), dtype=np.int32)
    alt = np.zeros(n, dtype=np.int32)
    totals = np.zeros(3, dtype=np.int64)
    on_path = np.zeros(n, dtype=np.int8)
    jcap = (n + 2) * maxdeg + 16
    jw = np.zeros(jcap, dtype=np.int32)
    jp = np.zeros(jcap, dtype=np.int32)
    jd = np.zeros(jcap, dtype=np.int32)
    return cell, bit, cntc, alt, totals, on_path, jw, jp, jd


def enumerate_tree(rot, pos, deg, logdeg, n, genus, prefix,
                   max_length, use_t4, use_r2, seam_r2, is_complete,
                   close_prefix_node, collect_all, coll_buf):
    """Iterative DFS over the cycle tree below `prefix` (root first).

    Closure of the prefix node itself runs only when close_prefix_node,
    letting a parallel driver own each node exactly once. Mixed-class
    verdicts (non-complete maps) are always written to the collect buffer
    with code V_MIXED so the caller can settle them with the cut oracle;
    when collect_all, every issued verdict is recorded.

    Returns (visited, contractible_dir, splitting_dir, nsc_dir, minlen,
    closed, error_flag, coll_used).
    """
    maxdeg = 0
    for v in range(n):
        if deg[v] > maxdeg:
            maxdeg = deg[v]
    half_g = genus // 2
    nsc_dir = np.zeros(half_g + 1, dtype=np.int64)
    minlen = np.full(half_g + 1, np.int64(1) << 40, dtype=np.int64)
    visited = 0
    contractible = 0
    splitting = 0
    closed = 0
    error_flag = 0
    coll_used = 0
    coll_cap = coll_buf.shape[0]

    (cell, bit, cntc, alt, totals, on_path, jw, jp, jd) = \
        alloc_state(n, maxdeg)
    jtop = 0

    Lmax = max_length if max_length > 0 else n
    path = np.zeros(Lmax + 2, dtype=np.int32)
    frame = np.zeros(Lmax + 2, dtype=np.int32)
    cand = np.zeros(Lmax + 2, dtype=np.int32)

    plen = len(prefix)
    k = 0
    path[0] = prefix[0]
    on_path[prefix[0]] = 1
    frame[0] = 0
    ok_prefix = True
    for idx in range(1, plen):
        v = prefix[idx]
        vk = path[k]
        frame[k + 1] = jtop
        if k >= 1:
            ok, jtop = extend_colors(rot, pos, deg, logdeg, cell, bit, cntc,
                                     alt, totals, jw, jp, jd, jtop,
                                     path[k - 1], vk, v, use_t4)
            if not ok:
                ok_prefix = False
                break
        k += 1
        path[k] = v
        on_path[v] = 1

    if ok_prefix:
        depth0 = k
        cand[k] = 0
        while k >= depth0:
            vk = path[k]
            if cand[k] == 0:
                L = k + 1
                attempt = L >= 3 and pos[vk, path[0]] >= 0
                if attempt and k == depth0 and not close_prefix_node:
                    attempt = False
                if attempt:
                    code, g1, a1, jtop = close_verdict(
                        rot, pos, deg, logdeg, cell, bit, cntc, alt, totals,
                        on_path, path, L, genus, jw, jp, jd, jtop,
                        use_t4, seam_r2, is_complete, n)
                    if code == V_ERR_INTEGRAL:
                        error_flag = 1
                    if code == V_SEP or code == V_NOT_SEP:
                        closed += 1
                    record = (code == V_MIXED) or \
                        (collect_all and (code == V_SEP or code == V_NOT_SEP))
                    if record:
                        if coll_used < coll_cap:
                            coll_buf[coll_used, 0] = L
                            coll_buf[coll_used, 1] = code
                            coll_buf[coll_used, 2] = g1
                            for ii in range(L):
                                coll_buf[coll_used, 3 + ii] = path[ii]
                            coll_used += 1
                        else:
                            error_flag = 3
                    if code == V_SEP:
                        t = g1 if g1 <= genus - g1 else genus - g1
                        if t == 0:
                            contractible += 1
                        else:
                            splitting += 1
                            nsc_dir[t] += 1
                            if L < minlen[t]:
                                minlen[t] = L
            adv = False
            i = cand[k]
            while i < deg[vk]:
                w = rot[vk, i]
                i += 1
                if on_path[w] != 0:
                    continue
                if k + 2 > Lmax:
                    continue
                if k >= 1 and use_r2:
                    vprev = path[k - 1]
                    t1 = rot[vk, (pos[vk, vprev] + 1) % deg[vk]]
                    t2 = rot[vprev, (pos[vprev, vk] + 1) % deg[vprev]]
                    if w == t1 or w == t2:
                        continue
                frame[k + 1] = jtop
                okx = True
                if k >= 1:
                    okx, jtop = extend_colors(rot, pos, deg, logdeg, cell,
                                              bit, cntc, alt, totals,
                                              jw, jp, jd, jtop,
                                              path[k - 1], vk, w, use_t4)
                    if not okx:
                        jtop = uncolor_to(cell, bit, cntc, alt, totals, deg,
                                          jw, jp, jd, jtop, frame[k + 1])
                if okx:
                    cand[k] = i
                    k += 1
                    path[k] = w
                    on_path[w] = 1
                    cand[k] = 0
                    visited += 1
                    adv = True
                    break
            if not adv:
                on_path[vk] = 0
                jtop = uncolor_to(cell, bit, cntc, alt, totals, deg,
                                  jw, jp, jd, jtop, frame[k])
                k -= 1
                if k < depth0:
                    break
    while k >= 0:
        on_path[path[k]] = 0
        jtop = uncolor_to(cell, bit, cntc, alt, totals, deg,
                          jw, jp, jd, jtop, frame[k])
        k -= 1
    return (visited, contractible, splitting, nsc_dir, minlen, closed,
            error_flag, coll_used)


def replay_cycle(rot, pos, deg, logdeg, n, genus, cycle,
                 use_t4, seam_r2, is_complete):
    """Walk a full cycle through extend steps and close it.

    Returns (code, side_genus, side_arcs). code is V_REJECTED when some
    extension step fails (the cycle is unreachable for the pruned search),
    with the closure codes otherwise. The facial-corner filter is not
    applied along the path (the caller decides reachability policy); the
    coloring tests are.
    """
    maxdeg = 0
    for v in range(n):
        if deg[v] > maxdeg:
            maxdeg = deg[v]
    (cell, bit, cntc, alt, totals, on_path, jw, jp, jd) = \
        alloc_state(n, maxdeg)
    jtop = 0
    L = len(cycle)
    for i in range(L):
        on_path[cycle[i]] = 1
    ok = True
    for k in range(1, L):
        if k >= 2:
            okx, jtop = extend_colors(rot, pos, deg, logdeg, cell, bit,
                                      cntc, alt, totals, jw, jp, jd, jtop,
                                      cycle[k - 2], cycle[k - 1], cycle[k],
                                      use_t4)
            if not okx:
                ok = False
                break
    if not ok:
        return V_REJECTED, -1, -1
    code, g1, a1, jtop = close_verdict(
        rot, pos, deg, logdeg, cell, bit, cntc, alt, totals,
        on_path, cycle, L, genus, jw, jp, jd, jtop,
        use_t4, seam_r2, is_complete, n)
    return code, g1, a1
