"""Inner loops: bitvector rank/select, wavelet matrix queries, LCP and
suffix-tree topology, and level-wise node-string derivation.

All functions take plain numpy arrays and scalars so that they run both
under ``numba.njit`` and as ordinary Python (see ``_accel``). Bitvectors are
stored as rows of 2D arrays so a wavelet matrix is one set of arrays indexed
by level:

* ``words[lev, w]``  -- uint64, bit ``i`` lives at bit ``i & 63`` of word ``i >> 6``
* ``supers[lev, k]`` -- int64, ones before word ``8 * k``
* ``blocks[lev, w]`` -- uint16, ones from the start of ``w``'s superblock to ``w``

Positions are 0-based and ranges half-open throughout this module.
"""

import numpy as np

from ._accel import njit

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_ONE = np.uint64(1)
_U1 = np.uint64(1)
_U2 = np.uint64(2)
_U4 = np.uint64(4)
_U8 = np.uint64(8)
_U16 = np.uint64(16)
_U32 = np.uint64(32)
_LOW7 = np.uint64(0x7F)


@njit
def popcount64(x):
    # multiplication-free SWAR so the numpy fallback never wraps
    x = x - ((x >> _U1) & _M1)
    x = (x & _M2) + ((x >> _U2) & _M2)
    x = (x + (x >> _U4)) & _M4
    x = x + (x >> _U8)
    x = x + (x >> _U16)
    x = x + (x >> _U32)
    return np.int64(x & _LOW7)


@njit
def rank1(words, supers, blocks, lev, i):
    """Number of set bits in ``[0, i)`` of row ``lev``."""
    w = i >> 6
    r = supers[lev, w >> 3] + np.int64(blocks[lev, w])
    b = i & 63
    if b:
        mask = (_ONE << np.uint64(b)) - _ONE
        r += popcount64(words[lev, w] & mask)
    return r


@njit
def bit_at(words, lev, i):
    return np.int64((words[lev, i >> 6] >> np.uint64(i & 63)) & _ONE)


@njit
def _kth_set_bit(word, k):
    # position of the k-th (1-based) set bit of ``word``
    for b in range(64):
        if (word >> np.uint64(b)) & _ONE:
            k -= 1
            if k == 0:
                return b
    return -1


@njit
def select1(words, supers, blocks, lev, nsuper, j):
    """Position of the ``j``-th (1-based) set bit of row ``lev``."""
    lo = 0
    hi = nsuper - 1
    while lo < hi:
        mid = (lo + hi + 1) >> 1
        if supers[lev, mid] < j:
            lo = mid
        else:
            hi = mid - 1
    nwords = words.shape[1]
    w = lo << 3
    end = min(w + 8, nwords)
    while w + 1 < end and supers[lev, lo] + np.int64(blocks[lev, w + 1]) < j:
        w += 1
    rest = j - supers[lev, lo] - np.int64(blocks[lev, w])
    return (w << 6) + _kth_set_bit(words[lev, w], rest)


@njit
def select0(words, supers, blocks, lev, nsuper, j):
    """Position of the ``j``-th (1-based) clear bit of row ``lev``."""
    lo = 0
    hi = nsuper - 1
    while lo < hi:
        mid = (lo + hi + 1) >> 1
        if (mid << 9) - supers[lev, mid] < j:
            lo = mid
        else:
            hi = mid - 1
    nwords = words.shape[1]
    w = lo << 3
    end = min(w + 8, nwords)
    while w + 1 < end and ((w + 1) << 6) - supers[lev, lo] - np.int64(blocks[lev, w + 1]) < j:
        w += 1
    rest = j - ((w << 6) - supers[lev, lo] - np.int64(blocks[lev, w]))
    return (w << 6) + _kth_set_bit(~words[lev, w], rest)


@njit
def wm_rank(words, supers, blocks, zeros, nlev, c, i):
    """Occurrences of value ``c`` in ``[0, i)``; ``c`` must fit in ``nlev`` bits."""
    s = 0
    e = i
    for lev in range(nlev):
        if (c >> (nlev - 1 - lev)) & 1:
            s = zeros[lev] + rank1(words, supers, blocks, lev, s)
            e = zeros[lev] + rank1(words, supers, blocks, lev, e)
        else:
            s = s - rank1(words, supers, blocks, lev, s)
            e = e - rank1(words, supers, blocks, lev, e)
    return e - s


@njit
def wm_select(words, supers, blocks, zeros, nlev, nsuper, c, j):
    """Position of the ``j``-th (1-based) occurrence of ``c``; caller checks ``j``."""
    s = 0
    for lev in range(nlev):
        if (c >> (nlev - 1 - lev)) & 1:
            s = zeros[lev] + rank1(words, supers, blocks, lev, s)
        else:
            s = s - rank1(words, supers, blocks, lev, s)
    p = s + j - 1
    for lev in range(nlev - 1, -1, -1):
        if (c >> (nlev - 1 - lev)) & 1:
            p = select1(words, supers, blocks, lev, nsuper, p - zeros[lev] + 1)
        else:
            p = select0(words, supers, blocks, lev, nsuper, p + 1)
    return p


@njit
def wm_access(words, supers, blocks, zeros, nlev, i):
    c = 0
    for lev in range(nlev):
        b = bit_at(words, lev, i)
        if b:
            i = zeros[lev] + rank1(words, supers, blocks, lev, i)
        else:
            i = i - rank1(words, supers, blocks, lev, i)
        c = (c << 1) | b
    return c


@njit
def wm_count_less(words, supers, blocks, zeros, nlev, s, e, v):
    """Entries in positions ``[s, e)`` whose value is ``< v``."""
    if v <= 0 or e <= s:
        return 0
    if v >= (1 << nlev):
        return e - s
    res = 0
    for lev in range(nlev):
        r1s = rank1(words, supers, blocks, lev, s)
        r1e = rank1(words, supers, blocks, lev, e)
        if (v >> (nlev - 1 - lev)) & 1:
            res += (e - r1e) - (s - r1s)
            s = zeros[lev] + r1s
            e = zeros[lev] + r1e
        else:
            s = s - r1s
            e = e - r1e
    return res


@njit
def wm_quantile(words, supers, blocks, zeros, nlev, s, e, k):
    """The ``k``-th smallest (0-based) value in positions ``[s, e)``."""
    c = 0
    for lev in range(nlev):
        r1s = rank1(words, supers, blocks, lev, s)
        r1e = rank1(words, supers, blocks, lev, e)
        nz = (e - r1e) - (s - r1s)
        if k < nz:
            s = s - r1s
            e = e - r1e
            c = c << 1
        else:
            k -= nz
            s = zeros[lev] + r1s
            e = zeros[lev] + r1e
            c = (c << 1) | 1
    return c


@njit
def kasai_lcp(t, sa):
    """``lcp[i]`` = longest common prefix of suffixes ``sa[i-1]`` and ``sa[i]``."""
    n = t.shape[0]
    rank = np.empty(n, np.int64)
    for i in range(n):
        rank[sa[i]] = i
    lcp = np.zeros(n, np.int64)
    h = 0
    for i in range(n):
        r = rank[i]
        if r > 0:
            j = sa[r - 1]
            while i + h < n and j + h < n and t[i + h] == t[j + h]:
                h += 1
            lcp[r] = h
            if h > 0:
                h -= 1
        else:
            h = 0
    return lcp


@njit
def lcp_intervals(lcp):
    """Internal nodes of the suffix tree as (lo, hi, string depth) SA intervals.

    ``hi`` is inclusive. The root ``(0, n - 1, 0)`` is always emitted last.
    """
    n = lcp.shape[0]
    out_lo = np.empty(n + 1, np.int64)
    out_hi = np.empty(n + 1, np.int64)
    out_d = np.empty(n + 1, np.int64)
    st_d = np.empty(n + 1, np.int64)
    st_lb = np.empty(n + 1, np.int64)
    top = 0
    st_d[0] = 0
    st_lb[0] = 0
    k = 0
    for i in range(1, n + 1):
        h = lcp[i] if i < n else 0
        lb = i - 1
        while h < st_d[top]:
            lb = st_lb[top]
            out_lo[k] = lb
            out_hi[k] = i - 1
            out_d[k] = st_d[top]
            k += 1
            top -= 1
        if h > st_d[top]:
            top += 1
            st_d[top] = h
            st_lb[top] = lb
    out_lo[k] = 0
    out_hi[k] = n - 1
    out_d[k] = 0
    k += 1
    return out_lo[:k], out_hi[:k], out_d[:k]


@njit
def preorder_parents(lo, hi):
    """Parent of each node given intervals already sorted in preorder."""
    m = lo.shape[0]
    parent = np.full(m, -1, np.int64)
    stack = np.empty(m, np.int64)
    top = -1
    for v in range(m):
        while top >= 0 and hi[stack[top]] < lo[v]:
            top -= 1
        if top >= 0:
            parent[v] = stack[top]
        top += 1
        stack[top] = v
    return parent


@njit
def find_child(child_ptr, child_char, v, c):
    lo = child_ptr[v]
    hi = child_ptr[v + 1] - 1
    while lo <= hi:
        mid = (lo + hi) >> 1
        x = child_char[mid]
        if x == c:
            return mid
        if x < c:
            lo = mid + 1
        else:
            hi = mid - 1
    return -1


@njit
def derive_level(chars, pos, owner, child_ptr, child_char, child_id, stored,
                 depth, t, sigma, node_off, node_len, node_base):
    """Derive every stored child string from one level's concatenated strings.

    ``chars``/``pos``/``owner`` describe the level: entry ``j`` belongs to node
    ``owner[j]``, holds character ``chars[j]`` found at text position
    ``pos[j]``. Each entry whose child (via its character) is ``stored`` is
    moved to that child with its position advanced by the edge length.
    Children are laid out in node-id order, entries keep their relative order.
    Fills ``node_off``/``node_len`` for the new level and ``node_base`` with the
    count of the edge character in the level before the parent's block.
    """
    n = chars.shape[0]
    nnodes = depth.shape[0]
    cnt = np.zeros(nnodes, np.int64)
    target = np.full(n, -1, np.int64)
    for j in range(n):
        v = owner[j]
        k = find_child(child_ptr, child_char, v, chars[j])
        if k >= 0:
            w = child_id[k]
            if stored[w]:
                target[j] = w
                cnt[w] += 1
    total = 0
    for w in range(nnodes):
        if cnt[w] > 0:
            node_off[w] = total
            node_len[w] = cnt[w]
            total += cnt[w]
    new_chars = np.empty(total, np.int64)
    new_pos = np.empty(total, np.int64)
    new_owner = np.empty(total, np.int64)
    fill = np.zeros(nnodes, np.int64)
    seen = np.zeros(sigma + 1, np.int64)
    prev = -1
    for j in range(n):
        v = owner[j]
        if v != prev:
            for k in range(child_ptr[v], child_ptr[v + 1]):
                w = child_id[k]
                if stored[w]:
                    node_base[w] = seen[child_char[k]]
            prev = v
        seen[chars[j]] += 1
        w = target[j]
        if w >= 0:
            q = pos[j] + depth[w] - depth[v]
            at = node_off[w] + fill[w]
            fill[w] += 1
            new_pos[at] = q
            new_chars[at] = t[q]
            new_owner[at] = w
    return new_chars, new_pos, new_owner
