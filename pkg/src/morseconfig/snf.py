"""Exact integer elimination for sparse boundary matrices.

Matrices are lists of sparse columns ``{row: value}``.  Unit pivots are
eliminated first with a Markowitz-style choice; whatever is left (columns
without a unit entry) is finished densely, either by Smith normal form or
by fraction-free rank.
"""

from __future__ import annotations

import heapq


def _unit_eliminate(columns: list[dict]) -> tuple[int, list[dict]]:
    """Pivot on ±1 entries until none remain.

    Returns the number of unit pivots and the leftover non-empty columns.
    Every pivot contributes an invariant factor of 1.
    """
    cols = {c: dict(col) for c, col in enumerate(columns) if col}
    rows: dict[int, set] = {}
    for c, col in cols.items():
        for r in col:
            rows.setdefault(r, set()).add(c)
    heap = [(len(col), c) for c, col in cols.items()]
    heapq.heapify(heap)
    hard: set = set()
    pivots = 0
    while heap:
        size, c = heapq.heappop(heap)
        col = cols.get(c)
        if col is None or len(col) != size:
            continue
        best = None
        for r, v in col.items():
            if v == 1 or v == -1:
                rl = len(rows[r])
                if best is None or rl < best[0]:
                    best = (rl, r, v)
                    if rl == 1:
                        break
        if best is None:
            hard.add(c)
            continue
        _, pr, pv = best
        hard.discard(c)
        for c2 in list(rows[pr]):
            if c2 == c:
                continue
            col2 = cols[c2]
            f = col2[pr] * pv
            for r, v in col.items():
                nv = col2.get(r, 0) - f * v
                if nv:
                    if r not in col2:
                        rows[r].add(c2)
                    col2[r] = nv
                else:
                    del col2[r]
                    rows[r].discard(c2)
            hard.discard(c2)
            if col2:
                heapq.heappush(heap, (len(col2), c2))
            else:
                del cols[c2]
        for r in col:
            rows[r].discard(c)
        del cols[c]
        pivots += 1
    return pivots, [cols[c] for c in sorted(cols)]


def _to_dense(columns: list[dict]) -> list[list[int]]:
    row_ids = sorted({r for col in columns for r in col})
    idx = {r: k for k, r in enumerate(row_ids)}
    dense = [[0] * len(columns) for _ in row_ids]
    for c, col in enumerate(columns):
        for r, v in col.items():
            dense[idx[r]][c] = v
    return dense


def dense_smith(a: list[list[int]]) -> list[int]:
    """Nonzero invariant factors of a dense integer matrix (positive, each
    dividing the next).  Pivot = entry of least absolute value."""
    a = [row[:] for row in a]
    m = len(a)
    n = len(a[0]) if m else 0
    factors = []
    t = 0
    while t < m and t < n:
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (piv is None or abs(a[i][j]) < piv[0]):
                    piv = (abs(a[i][j]), i, j)
        if piv is None:
            break
        _, pi, pj = piv
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            done = True
            p = a[t][t]
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        ri, rt = a[i], a[t]
                        for j in range(t, n):
                            ri[j] -= q * rt[j]
                    if a[i][t]:
                        done = False
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for i in range(t, m):
                            a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        done = False
            if done:
                # pivot must divide the rest of the block
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if a[i][j] % p), None)
                if bad is None:
                    break
                i = bad[0]
                for j in range(t, n):
                    a[t][j] += a[i][j]
                continue
            # move the smallest nonzero entry of row/column t to the pivot
            best = (abs(a[t][t]), t, t)
            for i in range(t + 1, m):
                if a[i][t] and abs(a[i][t]) < best[0]:
                    best = (abs(a[i][t]), i, t)
            for j in range(t + 1, n):
                if a[t][j] and abs(a[t][j]) < best[0]:
                    best = (abs(a[t][j]), t, j)
            _, bi, bj = best
            a[t], a[bi] = a[bi], a[t]
            for row in a:
                row[t], row[bj] = row[bj], row[t]
        factors.append(abs(a[t][t]))
        t += 1
    return factors


def bareiss_rank(a: list[list[int]]) -> int:
    """Rank by fraction-free Gaussian elimination."""
    a = [row[:] for row in a]
    m = len(a)
    n = len(a[0]) if m else 0
    rank = 0
    prev = 1
    for j in range(n):
        piv = next((i for i in range(rank, m) if a[i][j]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][j]
        for i in range(rank + 1, m):
            ai = a[i]
            f = ai[j]
            for k in range(j + 1, n):
                ai[k] = (p * ai[k] - f * a[rank][k]) // prev
            ai[j] = 0
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def invariant_factors(columns: list[dict]) -> list[int]:
    """All nonzero invariant factors, including the 1s."""
    ones, rest = _unit_eliminate(columns)
    tail = dense_smith(_to_dense(rest)) if rest else []
    return [1] * ones + tail


def rank(columns: list[dict]) -> int:
    ones, rest = _unit_eliminate(columns)
    return ones + (bareiss_rank(_to_dense(rest)) if rest else 0)
