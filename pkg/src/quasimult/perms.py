"""Permutations as 1-based image tuples: sigma maps slot k to image sigma[k-1]."""

from __future__ import annotations

import itertools

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def all_perms(n: int) -> list[Perm]:
    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


def is_perm(p) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def apply(p: Perm, items):
    """Permuted arrangement: result[k] = items[p(k)]."""
    if len(items) != len(p):
        raise ValueError(f"permutation of size {len(p)} applied to {len(items)} items")
    return tuple(items[s - 1] for s in p)


def compose(p: Perm, q: Perm) -> Perm:
    """(p o q)(k) = p(q(k))."""
    return tuple(p[s - 1] for s in q)


def invert(p: Perm) -> Perm:
    out = [0] * len(p)
    for k, s in enumerate(p, start=1):
        out[s - 1] = k
    return tuple(out)
