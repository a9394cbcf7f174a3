"""Hooks divisible by t, the quotient-box to hook correspondence, and related checks.

A box of the quotient partition ``λ^j`` with bead pair ``(B, W)`` corresponds
to the box of ``λ`` with bead pair ``((B + c_j)t + j, (W + c_j)t + j)``.  Its
hook is exactly ``t`` times longer.  Every hook of ``λ`` of length divisible
by ``t`` arises this way exactly once.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Any

from frobcore.decomposition import Decomposition, core
from frobcore.errors import DomainError
from frobcore.partition_core import (
    FrobeniusSymbol,
    FrobLabel,
    Kind,
    hook_multiset,
    is_box,
    iter_boxes,
    label_from_beads,
)


@dataclass(frozen=True)
class HookWitness:
    """A box ``source`` of quotient runner ``runner`` and its image ``target`` in ``λ``."""

    runner: int
    source: FrobLabel
    target: FrobLabel
    k: int
    t: int

    @property
    def hook(self) -> int:
        return self.k * self.t

    def to_json(self) -> dict[str, Any]:
        return {
            "label": str(self.target),
            "hook": self.hook,
            "k": self.k,
            "source": {"runner": self.runner, "label": str(self.source)},
        }


def hooks_divisible_by(f: FrobeniusSymbol, t: int) -> list[tuple[FrobLabel, int]]:
    """Boxes whose hook length is a multiple of ``t``, with the quotient ``k``."""
    if t < 1:
        raise DomainError(f"t must be positive, got {t}")
    out = []
    for b in iter_boxes(f):
        black, white = b.beads()
        if (black - white) % t == 0:
            out.append((b, (black - white) // t))
    return sorted(out, key=lambda pair: pair[0].sort_key())


def olsson_map(dec: Decomposition, j: int, b: FrobLabel) -> HookWitness:
    """Image in ``λ`` of box ``b`` of the quotient partition ``λ^j``.

    Raises:
        DomainError: if ``j`` is out of range or ``b`` is not a box of ``λ^j``.
    """
    t = dec.t
    if not 0 <= j < t:
        raise DomainError(f"runner index must lie in 0..{t - 1}, got {j}")
    if not is_box(dec.quotient[j], b):
        raise DomainError(f"{b} is not a box of {dec.quotient[j]}")
    c = dec.charvec[j]
    black, white = b.beads()
    target = label_from_beads((black + c) * t + j, (white + c) * t + j)
    return HookWitness(j, b, target, black - white, t)


def olsson_preimage(dec: Decomposition, target: FrobLabel) -> HookWitness:
    """Inverse of :func:`olsson_map` on boxes whose hook is divisible by ``t``.

    Raises:
        DomainError: if the hook of ``target`` is not a multiple of ``t``.
    """
    t = dec.t
    black, white = target.beads()
    if (black - white) % t:
        raise DomainError(f"hook of {target} is not divisible by {t}")
    j = black % t
    c = dec.charvec[j]
    src = label_from_beads((black - j) // t - c, (white - j) // t - c)
    return HookWitness(j, src, target, (black - white) // t, t)


def olsson_table(t: int, c: int, j: int, b: FrobLabel) -> FrobLabel:
    """Image label by explicit case analysis on the kind of ``b`` and the sign of ``c``.

    Shares no bead arithmetic with :func:`olsson_map`; used as a cross-check.
    """
    a, l = b.a, b.l

    def up(x: int) -> int:
        return x * t + j

    def dn(x: int) -> int:
        return x * t + t - j - 1

    PP, PM, MP = Kind.DURFEE_PP, Kind.ARM_COLEG_PM, Kind.LEG_COARM_MP
    m = -c
    if b.kind is PP:
        if c >= 0:
            if l <= c - 1:
                return FrobLabel(up(a + c), up(c - l - 1), PM)
            return FrobLabel(up(a + c), dn(l - c), PP)
        if a >= m:
            return FrobLabel(up(a - m), dn(l + m), PP)
        return FrobLabel(dn(m - a - 1), dn(m + l), MP)
    if b.kind is MP:
        if c < 0:
            return FrobLabel(dn(m + a), dn(m + l), MP)
        if l <= c - 1:
            return FrobLabel(up(c - a - 1), up(c - l - 1), PM)
        if a <= c - 1:
            return FrobLabel(up(c - a - 1), dn(l - c), PP)
        return FrobLabel(dn(a - c), dn(l - c), MP)
    if c >= 0:
        return FrobLabel(up(a + c), up(c + l), PM)
    if a <= m - 1:
        return FrobLabel(dn(m - a - 1), dn(m - l - 1), MP)
    if l <= m - 1:
        return FrobLabel(up(a - m), dn(m - l - 1), PP)
    return FrobLabel(up(a - m), up(l - m), PM)


def all_witnesses(dec: Decomposition) -> list[HookWitness]:
    """Images of every quotient box, ordered by target label."""
    out = [olsson_map(dec, j, b) for j, q in enumerate(dec.quotient) for b in iter_boxes(q)]
    return sorted(out, key=lambda w: w.target.sort_key())


def core_hook_containment(f: FrobeniusSymbol, t: int) -> tuple[bool, Counter[int]]:
    """Whether the hooks of the ``t``-core form a sub-multiset of the hooks of ``f``.

    Returns:
        The verdict and the residual multiset ``hooks(f) - hooks(core)``.
    """
    whole = hook_multiset(f)
    part = hook_multiset(core(f, t))
    contained = all(whole[h] >= m for h, m in part.items())
    return contained, whole - part


def diagonal_hooks_selfconj(dec: Decomposition) -> frozenset[int]:
    """Hook lengths of the diagonal boxes of a self-conjugate partition.

    Raises:
        DomainError: if ``dec`` does not describe a self-conjugate partition.
    """
    if not dec.is_selfconjugate():
        raise DomainError("decomposition is not self-conjugate")
    return frozenset(2 * a + 1 for a in dec.symbol().arms)
