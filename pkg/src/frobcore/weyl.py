"""Level-h affine Weyl action on partitions and Scopes moves on characteristic vectors.

The generator ``w_j`` acts on integer bead labels: labels congruent to
``(j-1)h - e`` modulo ``t`` move up by ``h`` and labels congruent to
``jh - e`` move down by ``h``, where ``e = (t-1)(h-1)/2``.  Applied to the
black beads of a partition this gives another partition.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from math import comb, gcd, isqrt
from typing import Sequence

from frobcore.abacus import SparseAbacus, push
from frobcore.decomposition import CharVector, RunnerSplit, split
from frobcore.errors import DomainError
from frobcore.partition_core import FrobeniusSymbol


# --------------------------------------------------------------------------
# Weyl action
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class WeylParams:
    """Derived data of the generator ``w_j`` at level ``h`` on ``t`` runners."""

    t: int
    h: int
    j: int

    def __post_init__(self) -> None:
        if self.t < 2:
            raise DomainError(f"t must be at least 2, got {self.t}")
        if gcd(self.h, self.t) != 1:
            raise DomainError(f"h={self.h} must be coprime to t={self.t}")
        if not 0 <= self.j < self.t:
            raise DomainError(f"generator index must lie in 0..{self.t - 1}, got {self.j}")
        if (self.t - 1) * (self.h - 1) % 2:
            raise DomainError("(t-1)(h-1) must be even")

    @property
    def shift(self) -> int:
        return (self.t - 1) * (self.h - 1) // 2

    @property
    def alpha(self) -> int:
        return self.h // self.t

    @property
    def r(self) -> int:
        return self.h % self.t

    @property
    def down_residue(self) -> int:
        """Residue ``r_j`` whose labels move down by ``h``."""
        return (self.j * self.h - self.shift) % self.t

    @property
    def up_residue(self) -> int:
        """Residue ``r'_j`` whose labels move up by ``h``."""
        return ((self.j - 1) * self.h - self.shift) % self.t

    @property
    def d(self) -> int:
        return self.alpha if self.down_residue - self.r >= 0 else self.alpha + 1

    @property
    def epsilon(self) -> CharVector:
        """Push vector: ``-d`` on the up residue, ``+d`` on the down residue."""
        eps = [0] * self.t
        eps[self.up_residue] -= self.d
        eps[self.down_residue] += self.d
        return tuple(eps)

    def act(self, z: int) -> int:
        """Image of a single integer label."""
        res = z % self.t
        if res == self.up_residue:
            return z + self.h
        if res == self.down_residue:
            return z - self.h
        return z


def weyl_apply(f: FrobeniusSymbol, t: int, h: int, j: int) -> FrobeniusSymbol:
    """Apply ``w_j`` at level ``h`` by moving black bead labels.

    Raises:
        DomainError: if ``gcd(h, t) != 1`` or ``j`` is out of range.
    """
    wp = WeylParams(t, h, j)
    reach = abs(h)
    ab = SparseAbacus.from_symbol(f)
    lo = -max(ab.neg_white, default=-1) - 2 - 2 * reach
    hi = max(ab.pos_black, default=-1) + 2 + 2 * reach
    # outside [lo - reach, hi + reach) every slot is vacuum, so the window image is exact
    black = ab.black_z(lo - reach, hi + reach)
    moved = {wp.act(z) for z in black}
    image = SparseAbacus.from_black_z((z for z in moved if lo <= z < hi), lo, hi)
    return image.to_symbol()


def weyl_apply_runners(f: FrobeniusSymbol, t: int, h: int, j: int) -> FrobeniusSymbol:
    """Apply ``w_j`` by swapping two runners and pushing them by ``ε_j``.

    Independent of :func:`weyl_apply`; kept as a cross-check.
    """
    wp = WeylParams(t, h, j)
    runners = list(split(f, t).runners)
    rd, ru, d = wp.down_residue, wp.up_residue, wp.d
    new = list(runners)
    new[ru] = push(runners[rd], -d)
    new[rd] = push(runners[ru], d)
    return RunnerSplit(t, tuple(new)).assemble()


# --------------------------------------------------------------------------
# Scopes moves
# --------------------------------------------------------------------------


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, isqrt(n) + 1))


@dataclass(frozen=True)
class ScopesContext:
    """A number of runners ``p`` and a weight ``w``.

    Args:
        p: Number of runners; must be prime unless ``require_prime`` is false.
        w: Weight, at least 1.
    """

    p: int
    w: int
    require_prime: bool = True

    def __post_init__(self) -> None:
        if self.p < 2:
            raise DomainError(f"p must be at least 2, got {self.p}")
        if self.require_prime and not is_prime(self.p):
            raise DomainError(f"p={self.p} is not prime")
        if self.w < 1:
            raise DomainError(f"weight must be at least 1, got {self.w}")


def _check_vec(c: Sequence[int], ctx: ScopesContext) -> CharVector:
    c = tuple(c)
    if len(c) != ctx.p or sum(c) != 0:
        raise DomainError(f"{c} is not a characteristic vector of length {ctx.p}")
    return c


def sc_allowed(c: Sequence[int], ctx: ScopesContext, j: int) -> bool:
    """Whether the move ``sc_j`` is allowed at weight ``ctx.w``."""
    c = _check_vec(c, ctx)
    if j == 0:
        return c[0] - c[-1] > ctx.w
    return c[j] - c[j - 1] >= ctx.w


def sc_apply(c: Sequence[int], j: int) -> CharVector:
    """The Scopes map ``sc_j``: swap ``c_{j-1}, c_j``, or for ``j = 0`` wrap around with a shift."""
    c = list(c)
    p = len(c)
    if not 0 <= j < p:
        raise DomainError(f"move index must lie in 0..{p - 1}, got {j}")
    if j == 0:
        c[0], c[-1] = c[-1] + 1, c[0] - 1
    else:
        c[j - 1], c[j] = c[j], c[j - 1]
    return tuple(c)


def is_ancestor(c: Sequence[int], ctx: ScopesContext) -> bool:
    """No move out of ``c`` is allowed."""
    c = _check_vec(c, ctx)
    return all(c[j] - c[j - 1] <= ctx.w - 1 for j in range(1, ctx.p)) and c[0] - c[-1] <= ctx.w


def is_coancestor(c: Sequence[int], ctx: ScopesContext) -> bool:
    """No move into ``c`` is allowed."""
    c = _check_vec(c, ctx)
    return (
        all(c[j - 1] - c[j] <= ctx.w - 1 for j in range(1, ctx.p))
        and c[-1] - c[0] <= ctx.w - 2
    )


def _compositions(total: int, parts: int):
    """Compositions of ``total`` into ``parts`` non-negative integers, lexicographic."""
    for cuts in itertools.combinations(range(total + parts - 1), parts - 1):
        prev = -1
        out = []
        for x in cuts:
            out.append(x - prev - 1)
            prev = x
        out.append(total + parts - 2 - prev)
        yield tuple(out)


def ancestors(ctx: ScopesContext) -> list[CharVector]:
    """All ancestors, one per Scopes family, in lexicographic order.

    Each ancestor comes from a composition ``k`` of ``pw-(p-1)`` into ``p``
    parts with ``Σ i·k_i ≡ j0 (mod p)``, where ``j0 = (w-1)p(p+1)/2 mod p``.
    """
    p, w = ctx.p, ctx.w
    base = (w - 1) * p * (p + 1) // 2
    j0 = base % p
    found = set()
    for k in _compositions(p * w - (p - 1), p):
        weighted = sum(i * ki for i, ki in enumerate(k, start=1))
        if (weighted - j0) % p:
            continue
        c0 = (base - weighted) // p + 1
        c = [c0]
        acc = 0
        for j in range(1, p):
            acc += k[j - 1]
            c.append(c0 + j * (w - 1) - acc)
        found.add(tuple(c))
    return sorted(found)


def coancestors(ctx: ScopesContext) -> list[CharVector]:
    """All coancestors in lexicographic order.

    A coancestor is determined by a composition ``k`` of ``p(w-1)-1`` into
    ``p`` parts through ``c_j = c_0 - j(w-1) + Σ_{i≤j} k_i``.
    """
    p, w = ctx.p, ctx.w
    total = p * (w - 1) - 1
    if total < 0:
        return []
    found = set()
    for k in _compositions(total, p):
        # Σ c_j = 0 fixes c_0
        num = sum((p - i) * (w - 1 - k[i - 1]) for i in range(1, p))
        if num % p:
            continue
        c0 = num // p
        c = [c0]
        acc = 0
        for j in range(1, p):
            acc += k[j - 1]
            c.append(c0 - j * (w - 1) + acc)
        found.add(tuple(c))
    return sorted(found)


def count_families(ctx: ScopesContext) -> int:
    """Number of Scopes families, ``C(pw, p-1)/p``."""
    return comb(ctx.p * ctx.w, ctx.p - 1) // ctx.p


def count_finite_families(ctx: ScopesContext) -> int:
    """Number of finite Scopes families, ``C(pw-2, p-1)/p``."""
    n = ctx.p * ctx.w - 2
    return comb(n, ctx.p - 1) // ctx.p if n >= 0 else 0


def count_singleton_families(ctx: ScopesContext) -> int:
    """Number of one-element families.

    This is ``1/p`` times the coefficient of ``x^{p(w-1)+1}`` in
    ``(1 + x + … + x^{2w-2})^p``, computed by exact polynomial expansion.
    """
    p, w = ctx.p, ctx.w
    poly = [1]
    factor = [1] * (2 * w - 1)
    for _ in range(p):
        nxt = [0] * (len(poly) + len(factor) - 1)
        for i, a in enumerate(poly):
            for k, b in enumerate(factor):
                nxt[i + k] += a * b
        poly = nxt
    deg = p * (w - 1) + 1
    coeff = poly[deg] if deg < len(poly) else 0
    return coeff // p


def family_members(
    c: Sequence[int], ctx: ScopesContext, cap: int = 1000
) -> tuple[frozenset[CharVector], bool]:
    """Breadth-first closure of ``c`` under allowed moves and their inverses.

    Returns:
        The vectors found and whether the whole family was exhausted before
        reaching ``cap`` members.
    """
    start = _check_vec(c, ctx)
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        nbrs = []
        for j in range(ctx.p):
            if sc_allowed(cur, ctx, j):
                nbrs.append(sc_apply(cur, j))
            # every sc_j is an involution, so the preimage is sc_j(cur) as well
            prev = sc_apply(cur, j)
            if sc_allowed(prev, ctx, j):
                nbrs.append(prev)
        for nb in nbrs:
            if nb not in seen:
                if len(seen) >= cap:
                    return frozenset(seen), False
                seen.add(nb)
                queue.append(nb)
    return frozenset(seen), True
