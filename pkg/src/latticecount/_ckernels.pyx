# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the loops in ``_pykernels``.

Counts are arbitrary-precision Python ints, so values stay ``object``;
the gain comes from typed indices and direct list access.
"""


def delannoy_grid(Py_ssize_t n_max, Py_ssize_t k_max):
    cdef Py_ssize_t n, k
    cdef list prev, row, grid
    prev = [1] * (k_max + 1)
    grid = [prev]
    for n in range(n_max):
        row = [1] * (k_max + 1)
        for k in range(1, k_max + 1):
            row[k] = prev[k] + row[k - 1] + prev[k - 1]
        grid.append(row)
        prev = row
    return grid


def central_grid(Py_ssize_t n_max):
    cdef Py_ssize_t n, k
    cdef list prev, row, out
    out = [1]
    prev = [1] * (n_max + 1)
    for n in range(1, n_max + 1):
        row = [0] * (n_max + 1)
        row[n] = prev[n] + prev[n] + prev[n - 1]
        for k in range(n + 1, n_max + 1):
            row[k] = prev[k] + row[k - 1] + prev[k - 1]
        out.append(row[n])
        prev = row
    return out


def delannoy_binomial_sum(Py_ssize_t n, Py_ssize_t k):
    cdef Py_ssize_t i, m = min(n, k)
    cdef object cn = 1, ck = 1, p2 = 1, total = 1
    for i in range(m):
        cn = cn * (n - i) // (i + 1)
        ck = ck * (k - i) // (i + 1)
        p2 = p2 << 1
        total += cn * ck * p2
    return total


def central_recurrence(Py_ssize_t n_max):
    cdef Py_ssize_t n
    cdef list out = [1, 3][: n_max + 1]
    cdef object num, q, r
    for n in range(n_max - 1):
        num = (6 * n + 9) * out[n + 1] - (n + 1) * out[n]
        q, r = divmod(num, n + 2)
        if r:
            raise ArithmeticError(f"non-integral term at index {n + 2}")
        out.append(q)
    return out


def walk_layers(jumps, Py_ssize_t length, Py_ssize_t lo, Py_ssize_t hi):
    cdef Py_ssize_t width = hi - lo + 1
    cdef Py_ssize_t t, t2, i, tl, dh, src_lo, src_hi
    cdef list layers, cur, nxt
    cdef list js = [(int(a), int(b)) for a, b in jumps]
    cdef object c
    layers = [[0] * width for _ in range(length + 1)]
    layers[0][-lo] = 1
    for t in range(length + 1):
        cur = layers[t]
        for tl, dh in js:
            t2 = t + tl
            if t2 > length:
                continue
            nxt = layers[t2]
            src_lo = max(0, -dh)
            src_hi = min(width, width - dh)
            for i in range(src_lo, src_hi):
                c = cur[i]
                if c:
                    nxt[i + dh] += c
    return layers


def strip_absorption(Py_ssize_t n, Py_ssize_t horizon):
    cdef Py_ssize_t width = 2 * n - 1
    cdef Py_ssize_t m, i
    cdef list cur, nxt, up, down
    cdef object c
    cur = [0] * width
    cur[n - 1] = 1
    up = [0] * (horizon + 1)
    down = [0] * (horizon + 1)
    for m in range(1, horizon + 1):
        nxt = [0] * width
        for i in range(width):
            c = cur[i]
            if not c:
                continue
            if i + 1 < width:
                nxt[i + 1] += c
            else:
                up[m] += c
            if i > 0:
                nxt[i - 1] += c
            else:
                down[m] += c
        cur = nxt
    return up, down, sum(cur)
