"""Compiled inner loops for strand extraction and partitioning.

Everything here operates on flat arrays (CSR adjacency plus per-vertex
state) so numba can compile it; with ``NUMBA_DISABLE_JIT=1`` the same code
runs as plain Python.  The Python-facing modules wrap these kernels.

State conventions:
  alive[v]   -- vertex is present in the working subgraph
  smem[v]    -- vertex belongs to the current structure S
  nxt/prv[v] -- linked-list order of S (cycles wrap around), -1 outside
  rmem[v]    -- vertex is currently a removable candidate
  stampbuf   -- shared visited-marks; callers thread a monotone stamp
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(fn):
            return fn

        return wrap


# Move codes shared between the choosers and the main loop.
# 0: saturated; 1/2: prepend/append y; 3: close cycle with y;
# 4/5: drop head/tail, close cycle with a; 6/7: drop head, add chain b-a
# (path/cycle); 8/9: same at tail; 10/11: cycle opened at x, chain added at
# the prv/nxt side (path); 12/13: cycle opened at x, one vertex per side
# (path/cycle).


@njit(cache=True)
def _heap_push(heap, hp, val):
    if hp >= heap.size:
        bigger = np.empty(heap.size * 2, np.int64)
        bigger[:hp] = heap[:hp]
        heap = bigger
    heap[hp] = val
    i = hp
    hp += 1
    while i > 0:
        p = (i - 1) >> 1
        if heap[p] <= heap[i]:
            break
        t = heap[p]
        heap[p] = heap[i]
        heap[i] = t
        i = p
    return heap, hp


@njit(cache=True)
def _heap_pop(heap, hp):
    top = heap[0]
    hp -= 1
    heap[0] = heap[hp]
    i = 0
    while True:
        l = 2 * i + 1
        r = l + 1
        m = i
        if l < hp and heap[l] < heap[m]:
            m = l
        if r < hp and heap[r] < heap[m]:
            m = r
        if m == i:
            break
        t = heap[m]
        heap[m] = heap[i]
        heap[i] = t
        i = m
    return top, hp


@njit(cache=True)
def _pot_removable(indptr, indices, alive, smem, w):
    """Does removing w let S grow by two fresh vertices?

    Requires w to have exactly two neighbors xm, xp inside S.  Pattern one
    hangs a fresh 2-chain off xm or xp; pattern two attaches one fresh
    vertex to each.  Fresh vertices may be adjacent to w itself.
    """
    if not smem[w]:
        return False
    c = 0
    xm = -1
    xp = -1
    for k in range(indptr[w], indptr[w + 1]):
        z = indices[k]
        if alive[z] and smem[z]:
            if c == 0:
                xm = z
            elif c == 1:
                xp = z
            c += 1
    if c != 2:
        return False
    for side in range(2):
        e = xm if side == 0 else xp
        for ka in range(indptr[e], indptr[e + 1]):
            a = indices[ka]
            if not alive[a] or smem[a]:
                continue
            ok = True
            for kz in range(indptr[a], indptr[a + 1]):
                z = indices[kz]
                if alive[z] and smem[z] and z != w and z != e:
                    ok = False
                    break
            if not ok:
                continue
            for kb in range(indptr[a], indptr[a + 1]):
                b = indices[kb]
                if not alive[b] or smem[b]:
                    continue
                okb = True
                for kz in range(indptr[b], indptr[b + 1]):
                    z = indices[kz]
                    if alive[z] and smem[z] and z != w:
                        okb = False
                        break
                if okb:
                    return True
    has_a = False
    for ka in range(indptr[xm], indptr[xm + 1]):
        a = indices[ka]
        if not alive[a] or smem[a]:
            continue
        ok = True
        for kz in range(indptr[a], indptr[a + 1]):
            z = indices[kz]
            if alive[z] and smem[z] and z != w and z != xm:
                ok = False
                break
        if ok:
            has_a = True
            break
    if not has_a:
        return False
    for kb in range(indptr[xp], indptr[xp + 1]):
        b = indices[kb]
        if not alive[b] or smem[b]:
            continue
        ok = True
        for kz in range(indptr[b], indptr[b + 1]):
            z = indices[kz]
            if alive[z] and smem[z] and z != w and z != xp:
                ok = False
                break
        if ok:
            return True
    return False


@njit(cache=True)
def _path_move(indptr, indices, alive, smem, nxt, prv, head, tail, size):
    """Pick the extension move for an induced path, or report saturation."""
    best_y = -1
    best_code = 0
    for side in range(2):
        e = head if side == 0 else tail
        if side == 1 and tail == head:
            break
        for k in range(indptr[e], indptr[e + 1]):
            y = indices[k]
            if not alive[y] or smem[y]:
                continue
            adj_h = False
            adj_t = False
            bad = False
            for k2 in range(indptr[y], indptr[y + 1]):
                z = indices[k2]
                if alive[z] and smem[z]:
                    if z == head:
                        adj_h = True
                    elif z == tail:
                        adj_t = True
                    else:
                        bad = True
                        break
            if bad:
                continue
            if adj_h and adj_t and head != tail:
                code = 3
            elif adj_h:
                code = 1
            else:
                code = 2
            if best_y < 0 or y < best_y:
                best_y = y
                best_code = code
    if best_y >= 0:
        return best_code, best_y, -1

    if size >= 3:
        for side in range(2):
            if side == 0:
                x = head
                q = nxt[head]
                far = tail
            else:
                x = tail
                q = prv[tail]
                far = head
            besta = -1
            for k in range(indptr[q], indptr[q + 1]):
                a = indices[k]
                if not alive[a] or smem[a]:
                    continue
                ok = True
                saw_far = False
                for k2 in range(indptr[a], indptr[a + 1]):
                    z = indices[k2]
                    if alive[z] and smem[z] and z != x:
                        if z == q:
                            pass
                        elif z == far:
                            saw_far = True
                        else:
                            ok = False
                            break
                if ok and saw_far:
                    if besta < 0 or a < besta:
                        besta = a
            if besta >= 0:
                return (4 if side == 0 else 5), besta, -1

    if size >= 2:
        for side in range(2):
            if side == 0:
                x = head
                q = nxt[head]
                far = tail
            else:
                x = tail
                q = prv[tail]
                far = head
            besta = -1
            bestb = -1
            bestcyc = False
            for k in range(indptr[q], indptr[q + 1]):
                a = indices[k]
                if not alive[a] or smem[a]:
                    continue
                ok = True
                for k2 in range(indptr[a], indptr[a + 1]):
                    z = indices[k2]
                    if alive[z] and smem[z] and z != x and z != q:
                        ok = False
                        break
                if not ok:
                    continue
                for k2 in range(indptr[a], indptr[a + 1]):
                    b = indices[k2]
                    if not alive[b] or smem[b]:
                        continue
                    okb = True
                    b_far = False
                    for k3 in range(indptr[b], indptr[b + 1]):
                        z = indices[k3]
                        if alive[z] and smem[z] and z != x:
                            if z == far:
                                b_far = True
                            else:
                                okb = False
                                break
                    if not okb:
                        continue
                    if besta < 0 or a < besta or (a == besta and b < bestb):
                        besta = a
                        bestb = b
                        bestcyc = b_far
            if besta >= 0:
                if side == 0:
                    return (7 if bestcyc else 6), besta, bestb
                return (9 if bestcyc else 8), besta, bestb
    return 0, -1, -1


@njit(cache=True)
def _cycle_move(indptr, indices, alive, smem, nxt, prv, x):
    """Pick the extension move for an induced cycle with removable x."""
    xm = prv[x]
    xp = nxt[x]
    besta = -1
    bestb = -1
    bestside = 0
    for side in range(2):
        e = xm if side == 0 else xp
        for k in range(indptr[e], indptr[e + 1]):
            a = indices[k]
            if not alive[a] or smem[a]:
                continue
            ok = True
            for k2 in range(indptr[a], indptr[a + 1]):
                z = indices[k2]
                if alive[z] and smem[z] and z != x and z != e:
                    ok = False
                    break
            if not ok:
                continue
            for k2 in range(indptr[a], indptr[a + 1]):
                b = indices[k2]
                if not alive[b] or smem[b]:
                    continue
                okb = True
                for k3 in range(indptr[b], indptr[b + 1]):
                    z = indices[k3]
                    if alive[z] and smem[z] and z != x:
                        okb = False
                        break
                if okb:
                    if besta < 0 or a < besta or (a == besta and b < bestb):
                        besta = a
                        bestb = b
                        bestside = side
    if besta >= 0:
        return (10 if bestside == 0 else 11), besta, bestb

    besta = -1
    bestb = -1
    bestcyc = False
    for k in range(indptr[xm], indptr[xm + 1]):
        a = indices[k]
        if not alive[a] or smem[a]:
            continue
        ok = True
        for k2 in range(indptr[a], indptr[a + 1]):
            z = indices[k2]
            if alive[z] and smem[z] and z != x and z != xm:
                ok = False
                break
        if not ok:
            continue
        for k2 in range(indptr[xp], indptr[xp + 1]):
            b = indices[k2]
            if not alive[b] or smem[b] or b == a:
                continue
            okb = True
            for k3 in range(indptr[b], indptr[b + 1]):
                z = indices[k3]
                if alive[z] and smem[z] and z != x and z != xp:
                    okb = False
                    break
            if not okb:
                continue
            ab = False
            for k3 in range(indptr[a], indptr[a + 1]):
                if indices[k3] == b:
                    ab = True
                    break
            if besta < 0 or a < besta or (a == besta and b < bestb):
                besta = a
                bestb = b
                bestcyc = ab
    if besta >= 0:
        return (13 if bestcyc else 12), besta, bestb
    return -1, -1, -1


@njit(cache=True)
def _retest_ball(indptr, indices, alive, smem, rmem, p0, p1, p2,
                 heap, hp, stampbuf, stamp, ball):
    """Re-test removability around the participants of a move.

    A vertex's removability reads memberships along w - e - a - b chains
    (e its structure neighbor, a/b the fresh pattern vertices), so a
    membership change at participant p can only affect: p itself, its
    structure neighbors, and structure vertices w reached backwards through
    a candidate position q in {p} union N(p) via e in N(q) (or via
    a in N(q), e in N(a)).  All such w lie within distance 4 of p.
    """
    touched = 0
    stamp += 1
    cn = 0
    for pi in range(3):
        p = p0 if pi == 0 else (p1 if pi == 1 else p2)
        if p < 0:
            continue
        if stampbuf[p] != stamp:
            stampbuf[p] = stamp
            ball[cn] = p
            cn += 1
        for k in range(indptr[p], indptr[p + 1]):
            w = indices[k]
            if alive[w] and smem[w] and stampbuf[w] != stamp:
                stampbuf[w] = stamp
                ball[cn] = w
                cn += 1
        # q ranges over p plus its fresh neighbors; q = p stays in even when
        # p just entered S (it may have been a candidate before the move)
        for kq in range(indptr[p] - 1, indptr[p + 1]):
            if kq < indptr[p]:
                q = p
            else:
                q = indices[kq]
                if not alive[q] or smem[q]:
                    continue
            for ka in range(indptr[q], indptr[q + 1]):
                e = indices[ka]
                if not alive[e]:
                    continue
                if smem[e]:
                    # q in the a position: structure vertices behind e
                    for kw in range(indptr[e], indptr[e + 1]):
                        w = indices[kw]
                        if alive[w] and smem[w] and stampbuf[w] != stamp:
                            stampbuf[w] = stamp
                            ball[cn] = w
                            cn += 1
                else:
                    # q in the b position behind candidate a = e
                    a = e
                    for ke in range(indptr[a], indptr[a + 1]):
                        e2 = indices[ke]
                        if not alive[e2] or not smem[e2]:
                            continue
                        for kw in range(indptr[e2], indptr[e2 + 1]):
                            w = indices[kw]
                            if alive[w] and smem[w] and stampbuf[w] != stamp:
                                stampbuf[w] = stamp
                                ball[cn] = w
                                cn += 1
    for i in range(cn):
        w = ball[i]
        if smem[w]:
            touched += 1
            t = _pot_removable(indptr, indices, alive, smem, w)
            if t and not rmem[w]:
                rmem[w] = 1
                heap, hp = _heap_push(heap, hp, w)
            elif not t and rmem[w]:
                rmem[w] = 0
    return heap, hp, stamp, touched


@njit(cache=True)
def _find_strand(indptr, indices, alive, smem, nxt, prv, rmem,
                 stampbuf, stamp, seed, seed_kind, order_out, ever):
    """Grow the seed into a saturated induced cycle or path.

    Returns (size, kind, iters, max_touched, stamp, status) and writes the
    final order into order_out.  kind: 0 path, 1 cycle.  status: 0 ok,
    1 safety iteration cap hit, 2 no move for a removable vertex.
    """
    n = indptr.size - 1
    heap = np.empty(256, np.int64)
    hp = 0
    ball = np.empty(1024, np.int32)
    ne = 0
    slen = seed.size
    kind = seed_kind
    for i in range(slen):
        v = seed[i]
        smem[v] = 1
        ever[ne] = v
        ne += 1
    if slen == 1:
        head = seed[0]
        tail = seed[0]
        nxt[head] = -1
        prv[head] = -1
    else:
        for i in range(slen):
            v = seed[i]
            w = seed[(i + 1) % slen]
            nxt[v] = w
            prv[w] = v
        head = seed[0]
        tail = seed[slen - 1]
        if kind == 0:
            nxt[tail] = -1
            prv[head] = -1
    size = slen
    for i in range(slen):
        v = seed[i]
        if _pot_removable(indptr, indices, alive, smem, v):
            rmem[v] = 1
            heap, hp = _heap_push(heap, hp, v)
    iters = 0
    max_touch = 0
    status = 0
    while True:
        iters += 1
        if iters > 2 * n + 8:
            status = 1
            break
        p0 = -1
        p1 = -1
        p2 = -1
        if kind == 1:
            x = -1
            while hp > 0:
                cand, hp = _heap_pop(heap, hp)
                if rmem[cand] == 1:
                    x = int(cand)
                    break
            if x < 0:
                break
            code, a, b = _cycle_move(indptr, indices, alive, smem, nxt, prv, x)
            if code < 0:
                status = 2
                break
            xm = prv[x]
            xp = nxt[x]
            smem[x] = 0
            rmem[x] = 0
            nxt[x] = -1
            prv[x] = -1
            if code == 10:
                nxt[xm] = a
                prv[a] = xm
                nxt[a] = b
                prv[b] = a
                nxt[b] = -1
                prv[xp] = -1
                head = xp
                tail = b
                kind = 0
            elif code == 11:
                nxt[b] = a
                prv[a] = b
                nxt[a] = xp
                prv[xp] = a
                prv[b] = -1
                nxt[xm] = -1
                head = b
                tail = xm
                kind = 0
            elif code == 12:
                nxt[b] = xp
                prv[xp] = b
                prv[b] = -1
                nxt[xm] = a
                prv[a] = xm
                nxt[a] = -1
                head = b
                tail = a
                kind = 0
            else:
                nxt[xm] = a
                prv[a] = xm
                nxt[a] = b
                prv[b] = a
                nxt[b] = xp
                prv[xp] = b
                head = xp
                tail = xm
                kind = 1
            smem[a] = 1
            ever[ne] = a
            ne += 1
            smem[b] = 1
            ever[ne] = b
            ne += 1
            size += 1
            p0 = x
            p1 = a
            p2 = b
        else:
            code, w1, w2 = _path_move(indptr, indices, alive, smem, nxt, prv,
                                      head, tail, size)
            if code == 0:
                break
            if code == 1:
                y = w1
                prv[y] = -1
                nxt[y] = head
                prv[head] = y
                head = y
                smem[y] = 1
                ever[ne] = y
                ne += 1
                size += 1
                p0 = y
            elif code == 2:
                y = w1
                nxt[y] = -1
                prv[y] = tail
                nxt[tail] = y
                tail = y
                smem[y] = 1
                ever[ne] = y
                ne += 1
                size += 1
                p0 = y
            elif code == 3:
                y = w1
                nxt[tail] = y
                prv[y] = tail
                nxt[y] = head
                prv[head] = y
                kind = 1
                smem[y] = 1
                ever[ne] = y
                ne += 1
                size += 1
                p0 = y
            elif code == 4 or code == 5:
                a = w1
                if code == 4:
                    x = head
                    q = nxt[head]
                    prv[q] = -1
                    head = q
                else:
                    x = tail
                    q = prv[tail]
                    nxt[q] = -1
                    tail = q
                smem[x] = 0
                rmem[x] = 0
                nxt[x] = -1
                prv[x] = -1
                nxt[tail] = a
                prv[a] = tail
                nxt[a] = head
                prv[head] = a
                kind = 1
                smem[a] = 1
                ever[ne] = a
                ne += 1
                p0 = x
                p1 = a
            else:
                a = w1
                b = w2
                if code <= 7:
                    x = head
                    q = nxt[head]
                    prv[q] = -1
                    head = q
                else:
                    x = tail
                    q = prv[tail]
                    nxt[q] = -1
                    tail = q
                smem[x] = 0
                rmem[x] = 0
                nxt[x] = -1
                prv[x] = -1
                if code == 6:
                    nxt[b] = a
                    prv[a] = b
                    nxt[a] = head
                    prv[head] = a
                    prv[b] = -1
                    head = b
                elif code == 7:
                    nxt[b] = a
                    prv[a] = b
                    nxt[a] = head
                    prv[head] = a
                    nxt[tail] = b
                    prv[b] = tail
                    kind = 1
                elif code == 8:
                    nxt[tail] = a
                    prv[a] = tail
                    nxt[a] = b
                    prv[b] = a
                    nxt[b] = -1
                    tail = b
                else:
                    nxt[tail] = a
                    prv[a] = tail
                    nxt[a] = b
                    prv[b] = a
                    nxt[b] = head
                    prv[head] = b
                    kind = 1
                smem[a] = 1
                ever[ne] = a
                ne += 1
                smem[b] = 1
                ever[ne] = b
                ne += 1
                size += 1
                p0 = x
                p1 = a
                p2 = b
        heap, hp, stamp, touched = _retest_ball(
            indptr, indices, alive, smem, rmem, p0, p1, p2,
            heap, hp, stampbuf, stamp, ball)
        if touched > max_touch:
            max_touch = touched
    v = head
    for i in range(size):
        order_out[i] = v
        v = nxt[v]
    for i in range(ne):
        v = ever[i]
        smem[v] = 0
        rmem[v] = 0
        nxt[v] = -1
        prv[v] = -1
    return size, kind, iters, max_touch, stamp, status


@njit(cache=True)
def _comp_at_least(indptr, indices, alive, start, k, stampbuf, stamp, queue):
    """BFS capped at k vertices; True if the alive component reaches k."""
    stamp += 1
    stampbuf[start] = stamp
    queue[0] = start
    qh = 0
    qt = 1
    cnt = 1
    while qh < qt and cnt < k:
        v = queue[qh]
        qh += 1
        for kk in range(indptr[v], indptr[v + 1]):
            w = indices[kk]
            if alive[w] and stampbuf[w] != stamp:
                stampbuf[w] = stamp
                queue[qt] = w
                qt += 1
                cnt += 1
                if cnt >= k:
                    break
    return cnt >= k, stamp


@njit(cache=True)
def _induced_cycle(indptr, indices, alive, start, parent, depth, pos,
                   stampbuf, stamp, queue, out):
    """Find an induced cycle in the alive component of start, or length 0.

    BFS stops at the first non-tree edge; the tree cycle through the lowest
    common ancestor is then shortcut along chords until chordless.
    """
    stamp += 1
    stampbuf[start] = stamp
    parent[start] = -1
    depth[start] = 0
    queue[0] = start
    qh = 0
    qt = 1
    ea = -1
    eb = -1
    while qh < qt and ea < 0:
        v = queue[qh]
        qh += 1
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if not alive[w]:
                continue
            if stampbuf[w] != stamp:
                stampbuf[w] = stamp
                parent[w] = v
                depth[w] = depth[v] + 1
                queue[qt] = w
                qt += 1
            elif w != parent[v]:
                ea = v
                eb = w
                break
    if ea < 0:
        return 0, stamp
    aa = ea
    bb = eb
    while depth[aa] > depth[bb]:
        aa = parent[aa]
    while depth[bb] > depth[aa]:
        bb = parent[bb]
    while aa != bb:
        aa = parent[aa]
        bb = parent[bb]
    lca = aa
    ln = 0
    v = ea
    while v != lca:
        out[ln] = v
        ln += 1
        v = parent[v]
    out[ln] = lca
    ln += 1
    st = ln
    v = eb
    while v != lca:
        out[ln] = v
        ln += 1
        v = parent[v]
    i = st
    j = ln - 1
    while i < j:
        t = out[i]
        out[i] = out[j]
        out[j] = t
        i += 1
        j -= 1
    changed = True
    while changed:
        changed = False
        stamp += 1
        for i in range(ln):
            pos[out[i]] = i
            stampbuf[out[i]] = stamp
        for i in range(ln):
            v = out[i]
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if not alive[w] or stampbuf[w] != stamp:
                    continue
                j = pos[w]
                d = j - i if j > i else i - j
                if d <= 1 or d == ln - 1:
                    continue
                lo = i if i < j else j
                hi = j if j > i else i
                inner = hi - lo + 1
                outer = ln - (hi - lo) + 1
                if inner <= outer:
                    for t in range(inner):
                        out[t] = out[lo + t]
                    ln = inner
                else:
                    c = 0
                    for t in range(hi, ln):
                        queue[c] = out[t]
                        c += 1
                    for t in range(lo + 1):
                        queue[c] = out[t]
                        c += 1
                    for t in range(c):
                        out[t] = queue[t]
                    ln = c
                changed = True
                break
            if changed:
                break
    return ln, stamp


@njit(cache=True)
def _remove_and_boundary(indptr, indices, alive, strand, length,
                         stampbuf, stamp, removed, boundary):
    """Kill strand plus its alive neighborhood; report surviving boundary."""
    rn = 0
    stamp += 1
    for i in range(length):
        v = strand[i]
        if stampbuf[v] != stamp:
            stampbuf[v] = stamp
            removed[rn] = v
            rn += 1
    for i in range(length):
        v = strand[i]
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if alive[w] and stampbuf[w] != stamp:
                stampbuf[w] = stamp
                removed[rn] = w
                rn += 1
    for i in range(rn):
        alive[removed[i]] = 0
    bn = 0
    stamp += 1
    for i in range(rn):
        v = removed[i]
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if alive[w] and stampbuf[w] != stamp:
                stampbuf[w] = stamp
                boundary[bn] = w
                bn += 1
    return rn, bn, stamp


@njit(cache=True)
def _fine_partition(indptr, indices, in_n1, in_a1):
    """Split the fringe into anchors/links and the remnant into buffers/loose.

    Scans fringe vertices in ascending id; a vertex with two unbuffered
    remnant neighbors becomes an anchor and claims those neighbors (plus
    their unbuffered remnant neighbors) as buffers.
    """
    n = indptr.size - 1
    in_r = np.zeros(n, np.uint8)
    in_b = np.zeros(n, np.uint8)
    x1a = np.full(n, -1, np.int32)
    x1b = np.full(n, -1, np.int32)
    x2a = np.full(n, -1, np.int32)
    x2b = np.full(n, -1, np.int32)
    err = 0
    err_v = -1
    for v in range(n):
        if not in_n1[v]:
            continue
        c = 0
        w1 = -1
        w2 = -1
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if in_a1[w] and not in_b[w]:
                if c == 0:
                    w1 = w
                elif c == 1:
                    w2 = w
                c += 1
        if c == 2:
            in_r[v] = 1
            x1a[v] = w1
            x1b[v] = w2
            for t in range(2):
                xx = w1 if t == 0 else w2
                found = -1
                cnt2 = 0
                for k in range(indptr[xx], indptr[xx + 1]):
                    z = indices[k]
                    if in_a1[z] and not in_b[z] and z != w1 and z != w2:
                        found = z
                        cnt2 += 1
                if cnt2 > 1 and err == 0:
                    err = 1
                    err_v = xx
                if found >= 0:
                    if t == 0:
                        x2a[v] = found
                    else:
                        x2b[v] = found
            in_b[w1] = 1
            in_b[w2] = 1
            if x2a[v] >= 0:
                in_b[x2a[v]] = 1
            if x2b[v] >= 0:
                in_b[x2b[v]] = 1
        elif c > 2 and err == 0:
            err = 2
            err_v = v
    return in_r, in_b, x1a, x1b, x2a, x2b, err, err_v


@njit(cache=True)
def _chain_components(indptr, indices, mask, in_n, order, starts, kinds, tmp):
    """Order every component of the masked subgraph (max degree 2).

    Paths run from their smaller-id endpoint.  Alternating cycles start at
    the smallest masked-N vertex, toward its smaller neighbor.  Mixed cycles
    are rotated so the lexicographically smallest adjacent N-N pair becomes
    (last, first).  kinds: 0 path, 1 alternating cycle, 2 mixed cycle.
    Returns (ncomp, total, err, err_v).
    """
    n = indptr.size - 1
    seen = np.zeros(n, np.uint8)
    ncomp = 0
    pos = 0
    for v0 in range(n):
        if not mask[v0] or seen[v0]:
            continue
        d0 = 0
        nb1 = -1
        for k in range(indptr[v0], indptr[v0 + 1]):
            w = indices[k]
            if mask[w]:
                if d0 == 0:
                    nb1 = w
                d0 += 1
        if d0 > 2:
            return ncomp, pos, 1, v0
        start = pos
        if d0 == 0:
            order[pos] = v0
            seen[v0] = 1
            pos += 1
            starts[ncomp] = start
            kinds[ncomp] = 0
            ncomp += 1
            continue
        # probe one direction to find an endpoint or come back around
        prev = v0
        cur = nb1
        is_cycle = False
        endpoint = -1
        while True:
            if cur == v0:
                is_cycle = True
                break
            step = -1
            d = 0
            for k in range(indptr[cur], indptr[cur + 1]):
                w = indices[k]
                if mask[w]:
                    d += 1
                    if w != prev:
                        step = w
            if d > 2:
                return ncomp, pos, 1, cur
            if step < 0:
                endpoint = cur
                break
            prev = cur
            cur = step
        if not is_cycle:
            # v0 itself may be the other endpoint or an interior vertex;
            # walk from the found endpoint to record the full path
            e2 = endpoint
            prev = -1
            cur = e2
            while True:
                order[pos] = cur
                seen[cur] = 1
                pos += 1
                step = -1
                for k in range(indptr[cur], indptr[cur + 1]):
                    w = indices[k]
                    if mask[w] and w != prev and not seen[w]:
                        step = w
                        break
                if step < 0:
                    break
                prev = cur
                cur = step
            length = pos - start
            if order[start] > order[pos - 1]:
                i = start
                j = pos - 1
                while i < j:
                    t = order[i]
                    order[i] = order[j]
                    order[j] = t
                    i += 1
                    j -= 1
            starts[ncomp] = start
            kinds[ncomp] = 0
            ncomp += 1
            continue
        # record the cycle from v0 in the probed direction
        order[pos] = v0
        seen[v0] = 1
        pos += 1
        prev = v0
        cur = nb1
        while cur != v0:
            order[pos] = cur
            seen[cur] = 1
            pos += 1
            step = -1
            for k in range(indptr[cur], indptr[cur + 1]):
                w = indices[k]
                if mask[w] and w != prev:
                    step = w
                    break
            prev = cur
            cur = step
        length = pos - start
        alt = True
        for i in range(length):
            a = order[start + i]
            b = order[start + (i + 1) % length]
            if in_n[a] == in_n[b]:
                alt = False
                break
        if alt:
            best = -1
            bi = -1
            for i in range(length):
                v = order[start + i]
                if in_n[v] and (best < 0 or v < best):
                    best = v
                    bi = i
            if best < 0:
                return ncomp, pos, 2, order[start]
            left = order[start + (bi - 1) % length]
            right = order[start + (bi + 1) % length]
            forward = right < left
            for t in range(length):
                if forward:
                    tmp[t] = order[start + (bi + t) % length]
                else:
                    tmp[t] = order[start + (bi - t) % length]
            for t in range(length):
                order[start + t] = tmp[t]
            starts[ncomp] = start
            kinds[ncomp] = 1
            ncomp += 1
        else:
            bct = -1
            bc1 = -1
            bi = -1
            bdir = 0
            for i in range(length):
                a = order[start + i]
                b = order[start + (i + 1) % length]
                if in_n[a] and in_n[b]:
                    if bct < 0 or a < bct or (a == bct and b < bc1):
                        bct = a
                        bc1 = b
                        bi = i
                        bdir = 1
                    if b < bct or (b == bct and a < bc1):
                        bct = b
                        bc1 = a
                        bi = i
                        bdir = -1
            if bct < 0:
                return ncomp, pos, 3, order[start]
            for t in range(length):
                if bdir == 1:
                    tmp[t] = order[start + (bi + 1 + t) % length]
                else:
                    tmp[t] = order[start + (bi - t + 2 * length) % length]
            for t in range(length):
                order[start + t] = tmp[t]
            starts[ncomp] = start
            kinds[ncomp] = 2
            ncomp += 1
    starts[ncomp] = pos
    return ncomp, pos, 0, -1


@njit(cache=True)
def _unique_neighbor_in(indptr, indices, src, dst, lo, hi):
    """For each src vertex, its neighbor count and last neighbor inside dst."""
    n = indptr.size - 1
    out = np.full(n, -1, np.int32)
    bad = -1
    for v in range(n):
        if not src[v]:
            continue
        c = 0
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if dst[w]:
                out[v] = w
                c += 1
        if (c < lo or c > hi) and bad < 0:
            bad = v
    return out, bad


@njit(cache=True)
def _pi_a(indptr, indices, in_a):
    """Rank loose vertices 1..|A| keeping edge partners consecutive."""
    n = indptr.size - 1
    rank = np.zeros(n, np.int64)
    partner = np.full(n, -1, np.int32)
    bad = -1
    for v in range(n):
        if not in_a[v]:
            continue
        c = 0
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if in_a[w]:
                partner[v] = w
                c += 1
        if c > 1 and bad < 0:
            bad = v
    nxt_rank = 1
    for v in range(n):
        if not in_a[v] or rank[v]:
            continue
        rank[v] = nxt_rank
        nxt_rank += 1
        p = partner[v]
        if p >= 0 and rank[p] == 0:
            rank[p] = nxt_rank
            nxt_rank += 1
    return rank, partner, nxt_rank - 1, bad


@njit(cache=True)
def _cycle_start_index(flat, starts, keys, nbig):
    """Per cycle, index of the vertex minimizing (key, id)."""
    m = starts.size - 1
    out = np.empty(m, np.int64)
    for c in range(m):
        lo = starts[c]
        hi = starts[c + 1]
        bi = lo
        bv = flat[lo]
        bk = keys[bv]
        for i in range(lo + 1, hi):
            v = flat[i]
            kk = keys[v]
            if kk < bk or (kk == bk and v < bv):
                bk = kk
                bv = v
                bi = i
        out[c] = bi
    return out


@njit(cache=True)
def _has_edge(indptr, indices, u, v):
    lo = indptr[u]
    hi = indptr[u + 1]
    while lo < hi:
        mid = (lo + hi) >> 1
        w = indices[mid]
        if w == v:
            return True
        if w < v:
            lo = mid + 1
        else:
            hi = mid
    return False


@njit(cache=True)
def _class_counts(indptr, indices, classes):
    """counts[v, c] = number of neighbors of v in class c (degree <= 3)."""
    n = indptr.size - 1
    counts = np.zeros((n, 10), np.int8)
    for v in range(n):
        for k in range(indptr[v], indptr[v + 1]):
            counts[v, classes[indices[k]]] += 1
    return counts


@njit(cache=True)
def _check_nonadj(eu, ev, classes, forbidden):
    """First edge whose endpoint classes are a forbidden pair, else -1."""
    for i in range(eu.size):
        if forbidden[classes[eu[i]], classes[ev[i]]]:
            return i
    return -1


@njit(cache=True)
def _fill_comp_ids(flat, starts, comp_id):
    for c in range(starts.size - 1):
        for i in range(starts[c], starts[c + 1]):
            comp_id[flat[i]] = c


@njit(cache=True)
def _check_flat_shapes(indptr, indices, flat, starts, is_cycle, comp_id):
    """Each component must induce exactly a path (or cycle) in its order.

    Checks consecutive adjacency, the cycle-closing edge, and that no
    member has extra neighbors inside its own component.  Returns the id
    of an offending vertex, else -1.
    """
    for c in range(starts.size - 1):
        lo = starts[c]
        hi = starts[c + 1]
        ln = hi - lo
        for i in range(lo, hi - 1):
            if not _has_edge(indptr, indices, flat[i], flat[i + 1]):
                return flat[i]
        if is_cycle[c]:
            if ln < 3 or not _has_edge(indptr, indices, flat[hi - 1], flat[lo]):
                return flat[lo]
        for i in range(lo, hi):
            v = flat[i]
            internal = 0
            for k in range(indptr[v], indptr[v + 1]):
                if comp_id[indices[k]] == c:
                    internal += 1
            want = 2
            if not is_cycle[c] and (i == lo or i == hi - 1):
                want = 1
            if ln == 1:
                want = 0
            if ln == 2:
                want = 1
            if internal != want:
                return v
    return -1


@njit(cache=True)
def _rank_chains(flat, starts, kinds, comp_order, n,
                 chain_rank, ch_kind, ch_first, ch_last, ch_c1rank, ch_ctrank):
    r = 1
    for oi in range(comp_order.size):
        c = comp_order[oi]
        lo = starts[c]
        hi = starts[c + 1]
        for i in range(lo, hi):
            v = flat[i]
            chain_rank[v] = r + (i - lo)
            ch_kind[v] = kinds[c]
            ch_c1rank[v] = r
            ch_ctrank[v] = r + (hi - lo) - 1
        ch_first[flat[lo]] = 1
        ch_last[flat[hi - 1]] = 1
        r += hi - lo
    return r - 1


@njit(cache=True)
def _rank_strands(flat, starts, kinds, comp_order, link_of, linkkey, n,
                  strand_rank, st_pos, st_len, st_head, rot_flat):
    """Assign strand ranks; cycles are rotated to their entry vertex (the
    member whose link neighbor has the smallest x start, ties by id).
    Writes the rotated order into rot_flat (same segment layout)."""
    r = 1
    for oi in range(comp_order.size):
        c = comp_order[oi]
        lo = starts[c]
        hi = starts[c + 1]
        ln = hi - lo
        shift = 0
        if kinds[c] == 1:
            bk = np.int64(0)
            bv = -1
            for i in range(lo, hi):
                v = flat[i]
                kk = linkkey[link_of[v]]
                if bv < 0 or kk < bk or (kk == bk and v < bv):
                    bk = kk
                    bv = v
                    shift = i - lo
        for t in range(ln):
            v = flat[lo + (shift + t) % ln]
            rot_flat[lo + t] = v
            strand_rank[v] = r + t
            st_pos[v] = t
            st_len[v] = ln
        head = rot_flat[lo]
        for t in range(ln):
            st_head[rot_flat[lo + t]] = head
        r += ln
    return r - 1


@njit(cache=True)
def _intervals_x_kernel(classes, loose_rank, loose_partner, loose_count,
                        chain_rank, ch_kind, ch_first, ch_last,
                        ch_c1rank, ch_ctrank,
                        strand_rank, st_pos, st_len, st_head,
                        link_of, fringe_of, loose_of, lo, hi):
    n = classes.size
    TEN = 10
    # loose vertices, then chain members (phase 1)
    for v in range(n):
        c = classes[v]
        if c == 9:
            if loose_partner[v] < 0:
                pt = TEN * (2 * n + loose_rank[v])
                lo[v] = pt
                hi[v] = pt
            elif loose_rank[v] < loose_rank[loose_partner[v]]:
                lo[v] = TEN * (2 * n + loose_rank[v])
                hi[v] = lo[v] + 5
            else:
                hi[v] = TEN * (2 * n + loose_rank[v])
                lo[v] = hi[v] - 5
    for v in range(n):
        k = ch_kind[v]
        if k < 0:
            continue
        r = chain_rank[v]
        c = classes[v]
        link = c == 4 or c == 5
        if k == 0:
            if ch_first[v]:
                lo[v] = TEN * r
                hi[v] = TEN * ch_ctrank[v]
            elif ch_last[v]:
                lo[v] = TEN * r
                hi[v] = TEN * r + 5
            else:
                lo[v] = TEN * r
                hi[v] = TEN * r + TEN
        elif k == 1:
            if ch_first[v]:
                lo[v] = TEN * (n + r)
                hi[v] = TEN * (n + ch_ctrank[v])
            elif ch_last[v]:
                lo[v] = TEN * (n + r)
                hi[v] = TEN * (n + r) + 5
            elif link:
                lo[v] = TEN * (n + r)
                hi[v] = TEN * (n + r) + TEN
            else:
                lo[v] = TEN * n
                hi[v] = TEN * (n + r) + TEN
        else:
            if ch_first[v] or ch_last[v]:
                lo[v] = TEN * (n + r)
                if loose_of[v] >= 0:
                    hi[v] = lo[loose_of[v]]
                else:
                    hi[v] = TEN * 2 * n
            elif link:
                lo[v] = TEN * (n + r)
                hi[v] = TEN * (n + r) + TEN
            else:
                lo[v] = TEN * n
                hi[v] = TEN * (n + r) + TEN
    # dependents (phase 2), then strand cycles (phase 3)
    for v in range(n):
        c = classes[v]
        if c == 7:
            lo[v] = 0
            hi[v] = lo[link_of[v]]
        elif c == 2:
            lo[v] = -TEN
            hi[v] = lo[link_of[v]]
        elif c == 6:
            lo[v] = -TEN
            hi[v] = TEN * n
        elif c == 3:
            f = fringe_of[v]
            lo[v] = -TEN
            if classes[f] == 6:
                hi[v] = -TEN
            else:
                hi[v] = lo[f]
    for v in range(n):
        if classes[v] == 0:
            left = lo[link_of[st_head[v]]]
            own = lo[link_of[v]]
            pos = st_pos[v]
            ln = st_len[v]
            if pos == 0:
                lo[v] = left
                hi[v] = left
            elif pos == 1 or pos == ln - 1:
                lo[v] = left
                hi[v] = own + 5
            else:
                lo[v] = left + 5
                hi[v] = own + 5
    return 0


@njit(cache=True)
def _intervals_y_kernel(classes, loose_rank, loose_rev, loose_partner,
                        strand_rank, st_pos, st_len,
                        cl_anchor, cl_x1, cl_x1p, cl_x2, cl_x2p, cl_shape,
                        inner_of, loose_of, lo, hi):
    n = classes.size
    TEN = 10
    for v in range(n):
        c = classes[v]
        if c == 9:
            if loose_partner[v] < 0:
                pt = TEN * (n + loose_rev[v])
                lo[v] = pt
                hi[v] = pt
            elif loose_rank[v] < loose_rank[loose_partner[v]]:
                hi[v] = TEN * (n + loose_rev[v])
                lo[v] = hi[v] - 5
            else:
                lo[v] = TEN * (n + loose_rev[v])
                hi[v] = lo[v] + 5
    for v in range(n):
        c = classes[v]
        if c == 4 or c == 5:
            lo[v] = 0
            if loose_of[v] >= 0:
                hi[v] = lo[loose_of[v]]
            else:
                hi[v] = TEN * n
        elif st_len[v] > 0:
            r = strand_rank[v]
            if c == 0 and st_pos[v] == 0:
                lo[v] = TEN * r
                hi[v] = TEN * (r + st_len[v] - 1)
            elif st_pos[v] == st_len[v] - 1:
                lo[v] = TEN * r
                hi[v] = TEN * r + 5
            else:
                lo[v] = TEN * r
                hi[v] = TEN * r + TEN
    for i in range(cl_anchor.size):
        u = cl_anchor[i]
        base = TEN * strand_rank[inner_of[u]]
        s = cl_shape[i]
        if s == 0:
            lo[u] = base + 3
            hi[u] = base + 7
            lo[cl_x1[i]] = base + 2
            hi[cl_x1[i]] = base + 5
            lo[cl_x1p[i]] = base + 5
            hi[cl_x1p[i]] = base + 8
        else:
            lo[u] = base + 4
            hi[u] = base + 6
            lo[cl_x1[i]] = base + 2
            hi[cl_x1[i]] = base + 4
            lo[cl_x1p[i]] = base + 6
            hi[cl_x1p[i]] = base + 8
            if cl_x2[i] >= 0:
                lo[cl_x2[i]] = base + 1
                hi[cl_x2[i]] = base + 2
            if cl_x2p[i] >= 0:
                lo[cl_x2p[i]] = base + 8
                hi[cl_x2p[i]] = base + 9
    return 0


@njit(cache=True)
def _intervals_z_kernel(classes, chain_rank, ch_kind, ch_first, ch_last,
                        ch_c1rank, ch_ctrank, link_of, fringe_of, lo, hi):
    n = classes.size
    TEN = 10
    for v in range(n):
        k = ch_kind[v]
        if k < 0:
            continue
        r = chain_rank[v]
        c = classes[v]
        link = c == 4 or c == 5
        if k == 0:
            if ch_last[v]:
                lo[v] = TEN * (ch_c1rank[v] + 1)
                hi[v] = TEN * n if c == 8 else TEN * (n + 1)
            elif link:
                lo[v] = TEN * r
                hi[v] = TEN * r + TEN
            elif c == 8:
                lo[v] = TEN * r
                hi[v] = TEN * n
            else:
                lo[v] = TEN * r
                hi[v] = TEN * (n + 1)
        elif k == 1:
            if ch_first[v]:
                lo[v] = TEN * r
                hi[v] = TEN * r + TEN
            elif ch_last[v]:
                lo[v] = TEN * (ch_c1rank[v] + 1)
                hi[v] = TEN * ch_ctrank[v] + 5
            elif link:
                lo[v] = TEN * r
                hi[v] = TEN * r + TEN
            elif c == 8:
                lo[v] = TEN * r
                hi[v] = TEN * n
            else:
                lo[v] = TEN * r
                hi[v] = TEN * (n + 1)
        else:
            if ch_last[v]:
                lo[v] = TEN * r
                hi[v] = TEN * r + 5
            elif link:
                lo[v] = TEN * r
                hi[v] = TEN * r + TEN
            elif c == 8:
                lo[v] = TEN * r
                hi[v] = TEN * n
            else:
                lo[v] = TEN * r
                hi[v] = TEN * (n + 1)
    for v in range(n):
        c = classes[v]
        if c == 0 or c == 2:
            lo[v] = hi[link_of[v]]
            hi[v] = TEN * (n + 1)
        elif c == 7:
            lo[v] = hi[link_of[v]]
            hi[v] = TEN * n
        elif c == 3:
            f = fringe_of[v]
            hi[v] = TEN * (n + 1)
            if classes[f] == 6:
                lo[v] = TEN * (n + 1)
            else:
                lo[v] = hi[f]
        elif c == 6:
            lo[v] = TEN * n
            hi[v] = TEN * (n + 1)
        elif c == 9:
            lo[v] = TEN
            hi[v] = TEN * (n + 1)
    return 0


@njit(cache=True)
def _verify_pairs(blo, bhi, edge_keys, n):
    """Brute-force pairwise scan against the expected sorted edge keys.

    Pairs (u, v) with u < v are visited in the lexicographic order of their
    keys u*n+v, matching edge_keys.  Returns (missing, extra, nontouch,
    sup0, sup1, sup2): expected edges whose boxes miss, unexpected
    intersecting pairs, edges without an exact endpoint contact, and
    per-axis supergraph flags.
    """
    missing = 0
    extra = 0
    nontouch = 0
    sup = np.ones(3, np.uint8)
    m = edge_keys.size
    ptr = 0
    for u in range(n):
        for v in range(u + 1, n):
            ov = True
            touch = False
            for ax in range(3):
                a1 = blo[u, ax]
                b1 = bhi[u, ax]
                a2 = blo[v, ax]
                b2 = bhi[v, ax]
                if a1 > b2 or a2 > b1:
                    ov = False
                if a1 == b2 or a2 == b1:
                    touch = True
            key = np.int64(u) * n + v
            if ptr < m and edge_keys[ptr] == key:
                ptr += 1
                for ax in range(3):
                    if blo[u, ax] > bhi[v, ax] or blo[v, ax] > bhi[u, ax]:
                        sup[ax] = 0
                if not ov:
                    missing += 1
                elif not touch:
                    nontouch += 1
            elif ov:
                extra += 1
    return missing, extra, nontouch, sup[0], sup[1], sup[2]


@njit(cache=True)
def _check_counts(classes, counts):
    """Per-vertex neighbor-count contracts.  Returns (rule, vertex) of the
    first violation, or (0, -1).  Class codes as in the partition module."""
    n = classes.size
    for v in range(n):
        c = classes[v]
        link = counts[v, 4] + counts[v, 5]
        anchor = counts[v, 6]
        fringe = link + anchor
        strand = counts[v, 0] + counts[v, 1] + counts[v, 2] + counts[v, 3]
        interior = counts[v, 0] + counts[v, 2] + counts[v, 3]
        remnant = counts[v, 7] + counts[v, 8] + counts[v, 9]
        partners = counts[v, 8] + counts[v, 1]
        buffers = counts[v, 7] + counts[v, 8]
        if c == 4 or c == 5:
            if counts[v, 9] > 1:
                return 1, v
            if c == 5 and counts[v, 9] != 0:
                return 2, v
            if interior < 1:
                return 13, v
            if partners == 2 and counts[v, 3] < 1:
                return 14, v
        elif c == 7:
            if link != 1:
                return 3, v
            if remnant > 1:
                return 12, v
        elif c == 8:
            if link != 2:
                return 4, v
            if remnant > 1:
                return 12, v
        elif c == 0 or c == 2:
            if link != 1:
                return 5, v
            if fringe < 1:
                return 11, v
        elif c == 1:
            if link != 2:
                return 6, v
            if fringe < 1:
                return 11, v
        elif c == 3:
            if fringe != 1:
                return 7, v
        elif c == 6:
            if counts[v, 3] != 1:
                return 8, v
            if strand != 1:
                return 9, v
            if buffers != 2:
                return 10, v
            if interior < 1:
                return 13, v
        elif c == 9:
            if remnant > 1:
                return 12, v
    return 0, -1


@njit(cache=True)
def _check_chain_types(flat, starts, kinds, classes):
    """Chain component typing rules.  Returns (rule, vertex) or (0, -1)."""
    for i in range(starts.size - 1):
        lo = starts[i]
        hi = starts[i + 1]
        if kinds[i] == 0:
            if classes[flat[lo]] != 4 or classes[flat[hi - 1]] != 4:
                return 1, flat[lo]
            for t in range(lo + 1, hi - 1):
                if classes[flat[t]] == 4:
                    return 2, flat[t]
        else:
            ln = hi - lo
            for t in range(lo, hi):
                if classes[flat[t]] == 4:
                    return 3, flat[t]
            alternating = True
            for t in range(ln):
                a = classes[flat[lo + t]] == 5
                b = classes[flat[lo + (t + 1) % ln]] == 5
                if a == b:
                    alternating = False
                    break
            if kinds[i] == 1:
                if not alternating or classes[flat[lo]] != 5:
                    return 4, flat[lo]
            else:
                if alternating:
                    return 5, flat[lo]
                if classes[flat[lo]] != 5 or classes[flat[hi - 1]] != 5:
                    return 6, flat[lo]
    return 0, -1


@njit(cache=True)
def _check_cluster_shapes(indptr, indices, classes,
                          cl_anchor, cl_x1, cl_x1p, cl_x2, cl_x2p, cl_shape,
                          cluster_id):
    """Exact edge patterns of the five cluster shapes plus closure.

    cluster_id must be prefilled with -1; it is populated here.  Returns
    (rule, vertex) or (0, -1).
    """
    m = cl_anchor.size
    for i in range(m):
        for j in range(5):
            v = cl_anchor[i] if j == 0 else (
                cl_x1[i] if j == 1 else (
                    cl_x1p[i] if j == 2 else (
                        cl_x2[i] if j == 3 else cl_x2p[i])))
            if v >= 0:
                if cluster_id[v] >= 0:
                    return 1, v
                cluster_id[v] = i
    for i in range(m):
        u = cl_anchor[i]
        a = cl_x1[i]
        b = cl_x1p[i]
        c = cl_x2[i]
        d = cl_x2p[i]
        if not _has_edge(indptr, indices, u, a):
            return 2, u
        if not _has_edge(indptr, indices, u, b):
            return 2, u
        pair_adj = _has_edge(indptr, indices, a, b)
        if (cl_shape[i] == 0) != pair_adj:
            return 3, u
        if c >= 0 and not _has_edge(indptr, indices, c, a):
            return 4, u
        if d >= 0 and not _has_edge(indptr, indices, d, b):
            return 4, u
        if c >= 0 and _has_edge(indptr, indices, c, b):
            return 5, u
        if d >= 0 and _has_edge(indptr, indices, d, a):
            return 5, u
        if c >= 0 and _has_edge(indptr, indices, c, u):
            return 5, u
        if d >= 0 and _has_edge(indptr, indices, d, u):
            return 5, u
        if c >= 0 and d >= 0 and _has_edge(indptr, indices, c, d):
            return 5, u
        for j in range(5):
            v = u if j == 0 else (a if j == 1 else (
                b if j == 2 else (c if j == 3 else d)))
            if v < 0:
                continue
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                cw = classes[w]
                if cw == 6 or cw == 7 or cw == 8:
                    if cluster_id[w] != i:
                        return 6, v
    return 0, -1


@njit(cache=True)
def _mask_neighbor_any(indptr, indices, mask, out):
    """out[v] = 1 iff v has a neighbor inside mask."""
    n = indptr.size - 1
    for v in range(n):
        hit = 0
        for k in range(indptr[v], indptr[v + 1]):
            if mask[indices[k]]:
                hit = 1
                break
        out[v] = hit


@njit(cache=True)
def _count_in_mask(indptr, indices, mask, out):
    """out[v] = number of neighbors of v inside mask."""
    n = indptr.size - 1
    for v in range(n):
        c = 0
        for k in range(indptr[v], indptr[v + 1]):
            if mask[indices[k]]:
                c += 1
        out[v] = c
