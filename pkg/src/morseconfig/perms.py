"""Permutations as 0-based one-line tuples.

``p[k]`` is the image of ``k``.  A critical 0-cell ``(a_1, ..., a_n)`` of
D^n is a rearrangement of ``0..n-1`` and is read directly as the
permutation ``k -> a_{k+1}`` (the 1-based reading is ``i -> a_i + 1``).
Products compose right to left: ``compose(s, t)[k] == s[t[k]]``.
"""

from __future__ import annotations

from itertools import permutations

Perm = tuple


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(s: Perm, t: Perm) -> Perm:
    return tuple(s[k] for k in t)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for k, v in enumerate(p):
        inv[v] = k
    return tuple(inv)


def is_perm(p) -> bool:
    return sorted(p) == list(range(len(p)))


def all_perms(n: int) -> list[Perm]:
    return list(permutations(range(n)))


def cycle(n: int, elements) -> Perm:
    """The cycle ``e0 -> e1 -> ... -> e_last -> e0`` (0-based elements)."""
    p = list(range(n))
    els = list(elements)
    for a, b in zip(els, els[1:] + els[:1]):
        p[a] = b
    return tuple(p)


def sublevel_cycle(n: int, i: int, j: int) -> Perm:
    """``n-i+1 -> n-i+2 -> ... -> n-i+j -> n-i+1`` written 1-based."""
    if not 2 <= j <= i <= n:
        raise ValueError(f"need 2 <= j <= i <= n, got i={i}, j={j}, n={n}")
    start = n - i
    return cycle(n, range(start, start + j))


def cycles(p: Perm) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for s in range(len(p)):
        if s in seen:
            continue
        c = [s]
        seen.add(s)
        k = p[s]
        while k != s:
            c.append(k)
            seen.add(k)
            k = p[k]
        out.append(tuple(c))
    return out


def one_line(p: Perm) -> str:
    """Compact label such as ``"201"``; comma separated once n > 10."""
    if len(p) <= 10:
        return "".join(str(x) for x in p)
    return ",".join(str(x) for x in p)


def parse_one_line(text: str) -> Perm:
    if "," in text:
        return tuple(int(x) for x in text.split(","))
    return tuple(int(c) for c in text)
