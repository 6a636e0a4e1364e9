"""Pure-Python hot loops. ``_ckernels.pyx`` mirrors these signatures exactly."""


def delannoy_grid(n_max, k_max):
    """Rows ``grid[n][k]`` of the Delannoy array for 0 <= n <= n_max, 0 <= k <= k_max."""
    prev = [1] * (k_max + 1)
    grid = [prev]
    for _ in range(n_max):
        row = [1] * (k_max + 1)
        for k in range(1, k_max + 1):
            row[k] = prev[k] + row[k - 1] + prev[k - 1]
        grid.append(row)
        prev = row
    return grid


def central_grid(n_max):
    """d_0..d_n_max from the grid recurrence, keeping only the upper triangle row by row."""
    out = [1]
    # row[k] holds D(n, k) for k >= n; the lower triangle follows by symmetry
    prev = [1] * (n_max + 1)
    for n in range(1, n_max + 1):
        row = [0] * (n_max + 1)
        # D(n, n-1) = D(n-1, n) = prev[n]
        row[n] = prev[n] + prev[n] + prev[n - 1]
        for k in range(n + 1, n_max + 1):
            row[k] = prev[k] + row[k - 1] + prev[k - 1]
        out.append(row[n])
        prev = row
    return out


def delannoy_binomial_sum(n, k):
    """sum_i C(n,i) C(k,i) 2^i with incrementally updated binomials."""
    m = min(n, k)
    cn = 1
    ck = 1
    p2 = 1
    total = 1
    for i in range(m):
        cn = cn * (n - i) // (i + 1)
        ck = ck * (k - i) // (i + 1)
        p2 <<= 1
        total += cn * ck * p2
    return total


def central_recurrence(n_max):
    """d_0..d_n_max from (n+2) d_{n+2} = (6n+9) d_{n+1} - (n+1) d_n."""
    out = [1, 3][: n_max + 1]
    for n in range(n_max - 1):
        num = (6 * n + 9) * out[n + 1] - (n + 1) * out[n]
        q, r = divmod(num, n + 2)
        if r:
            raise ArithmeticError(f"non-integral term at index {n + 2}")
        out.append(q)
    return out


def walk_layers(jumps, length, lo, hi):
    """Count jump sequences by elapsed time and height.

    ``layers[t][h - lo]`` is the number of sequences of total time ``t``
    that start at 0 and visit only heights in [lo, hi] at jump endpoints.
    """
    width = hi - lo + 1
    layers = [[0] * width for _ in range(length + 1)]
    layers[0][-lo] = 1
    for t in range(length + 1):
        cur = layers[t]
        for tl, dh in jumps:
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


def strip_absorption(n, horizon):
    """Fair +/-1 walk from 0 absorbed at +n or -n.

    Returns ``(up, down, alive)``: path counts first hitting +n and -n at
    each step 0..horizon (index 0 unused) and the number of paths still
    inside (-n, n) after ``horizon`` steps. Probabilities are counts / 2^m.
    """
    width = 2 * n - 1
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
