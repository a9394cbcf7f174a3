"""Brute-force ground truth computed directly on Young diagrams.

Nothing here imports the abacus, runner or Frobenius-symbol code.  Cores come
from repeated rim-hook removal, hooks from arm + leg + 1 on the diagram, and
quotients from classical beta-numbers.  The Scopes brute-force solvers scan
integer boxes directly.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from math import comb
from typing import Iterator, Sequence

Partition = tuple[int, ...]


def _partitions_lex(n: int, cap: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(1, min(n, cap) + 1):
        for rest in _partitions_lex(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_partitions_lex(n, n))


def partition_count(n: int) -> int:
    """``p(n)`` by Euler's pentagonal-number recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def conjugate_parts(parts: Sequence[int]) -> Partition:
    """Column lengths of the diagram."""
    if not parts:
        return ()
    return tuple(sum(1 for x in parts if x > j) for j in range(parts[0]))


def diagram_hooks(parts: Sequence[int]) -> Counter[int]:
    """Multiset of hook lengths ``λ_i + λ'_j - i - j + 1`` over the diagram."""
    conj = conjugate_parts(parts)
    return Counter(
        parts[i] + conj[j] - i - j - 1 for i in range(len(parts)) for j in range(parts[i])
    )


def hook_at(parts: Sequence[int], row: int, col: int) -> int:
    """Hook length at 1-indexed cell ``(row, col)``."""
    conj = conjugate_parts(parts)
    return parts[row - 1] + conj[col - 1] - row - col + 1


def removable_rim_hooks(parts: Sequence[int], t: int) -> list[tuple[int, int]]:
    """0-indexed cells whose hook has length exactly ``t``."""
    conj = conjugate_parts(parts)
    return [
        (i, j)
        for i in range(len(parts))
        for j in range(parts[i])
        if parts[i] + conj[j] - i - j - 1 == t
    ]


def remove_rim_hook(parts: Sequence[int], i: int, j: int) -> Partition:
    """Remove the rim hook whose hook is based at 0-indexed cell ``(i, j)``."""
    lam = list(parts)
    conj = conjugate_parts(parts)
    leg = conj[j] - i - 1
    for r in range(i, i + leg):
        lam[r] = lam[r + 1] - 1
    lam[i + leg] = j
    return tuple(x for x in lam if x > 0)


def strip_core(parts: Sequence[int], t: int, rng: random.Random | None = None) -> Partition:
    """Remove ``t``-rim-hooks until none remain.

    Args:
        parts: The partition.
        t: Hook length to strip.
        rng: If given, the hook removed at each step is chosen at random;
            otherwise the first one in reading order is taken.
    """
    if t < 1:
        raise ValueError("t must be positive")
    lam = tuple(parts)
    while True:
        cells = removable_rim_hooks(lam, t)
        if not cells:
            return lam
        i, j = rng.choice(cells) if rng is not None else cells[0]
        lam = remove_rim_hook(lam, i, j)


def beta_quotient(parts: Sequence[int], t: int) -> list[Partition]:
    """A ``t``-quotient read from beta-numbers ``λ_i + N - i`` with ``t | N``.

    Runner order follows the classical convention, which may permute the
    entries relative to other conventions; only order-free data should be
    compared.
    """
    n_beads = len(parts) + (-len(parts)) % t
    lam = list(parts) + [0] * (n_beads - len(parts))
    beta = [lam[i] + n_beads - 1 - i for i in range(n_beads)]
    out = []
    for r in range(t):
        pos = sorted((b // t for b in beta if b % t == r), reverse=True)
        k = len(pos)
        out.append(tuple(x for x in (pos[i] - (k - 1 - i) for i in range(k)) if x > 0))
    return out


def quotient_size_check(parts: Sequence[int], t: int) -> bool:
    """Check core/quotient size bookkeeping through the diagram alone.

    True iff the number of ``t``-divisible hooks equals ``(|λ| - |core|)/t``
    and those hooks divided by ``t`` form the union of the quotient's hook
    multisets.
    """
    hooks = diagram_hooks(parts)
    divisible = Counter({h // t: m for h, m in hooks.items() if h % t == 0})
    core = strip_core(parts, t)
    weight, rem = divmod(sum(parts) - sum(core), t)
    if rem or sum(divisible.values()) != weight:
        return False
    union: Counter[int] = Counter()
    for q in beta_quotient(parts, t):
        union += diagram_hooks(q)
    return union == divisible


def is_core(parts: Sequence[int], t: int) -> bool:
    return all(h % t for h in diagram_hooks(parts))


# --------------------------------------------------------------------------
# Scopes systems by exhaustive search
# --------------------------------------------------------------------------


def _box(p: int, bound: int) -> Iterator[tuple[int, ...]]:
    for head in itertools.product(range(-bound, bound + 1), repeat=p - 1):
        last = -sum(head)
        if -bound <= last <= bound:
            yield head + (last,)


def ancestors_bruteforce(p: int, w: int, bound: int | None = None) -> list[tuple[int, ...]]:
    """Integer solutions of the ancestor inequalities with ``|c_j| ≤ bound`` (default ``pw``)."""
    bound = p * w if bound is None else bound
    return sorted(
        c
        for c in _box(p, bound)
        if all(c[j] - c[j - 1] <= w - 1 for j in range(1, p)) and c[0] - c[p - 1] <= w
    )


def coancestors_bruteforce(p: int, w: int, bound: int | None = None) -> list[tuple[int, ...]]:
    """Integer solutions of the coancestor inequalities with ``|c_j| ≤ bound``."""
    bound = p * w if bound is None else bound
    return sorted(
        c
        for c in _box(p, bound)
        if all(c[j - 1] - c[j] <= w - 1 for j in range(1, p)) and c[p - 1] - c[0] <= w - 2
    )


def singleton_count_alternating(p: int, w: int) -> int:
    """Singleton Scopes families via an inclusion-exclusion binomial sum.

    Counts compositions of ``p(w-1)+1`` into ``p`` parts in ``[0, 2w-2]`` and
    divides by ``p``.
    """
    target = p * (w - 1) + 1
    width = 2 * w - 1
    total = 0
    for j in range(p + 1):
        rest = target - j * width
        if rest < 0:
            break
        total += (-1) ** j * comb(p, j) * comb(rest + p - 1, p - 1)
    return total // p
