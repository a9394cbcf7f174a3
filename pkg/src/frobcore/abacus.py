"""Sparse pointed abacus: push, balance and the bar involution.

A bead abacus is stored as two finite sets.  ``pos_black`` lists the positive
slots holding black beads (every other positive slot is white) and
``neg_white`` lists the negative slots holding white beads (every other negative
slot is black).  Slots are numbered from the fence outward, starting at 0 on
both sides.

Under the integer labelling, positive slot ``x`` sits at ``x`` and negative
slot ``x`` sits at ``-x-1``.  A push by ``δ`` shifts every bead by ``δ``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from frobcore.partition_core import FrobeniusSymbol


def slot_to_z(x: int, positive: bool) -> int:
    """Integer label of a slot: positive ``x`` is ``x``, negative ``x`` is ``-x-1``."""
    return x if positive else -x - 1


def z_to_slot(z: int) -> tuple[int, bool]:
    """Inverse of :func:`slot_to_z`; returns ``(slot, is_positive)``."""
    return (z, True) if z >= 0 else (-z - 1, False)


@dataclass(frozen=True)
class SparseAbacus:
    """A pointed abacus differing from the vacuum in finitely many slots."""

    pos_black: frozenset[int]
    neg_white: frozenset[int]

    def __init__(self, pos_black: Iterable[int] = (), neg_white: Iterable[int] = ()):
        object.__setattr__(self, "pos_black", frozenset(pos_black))
        object.__setattr__(self, "neg_white", frozenset(neg_white))

    @classmethod
    def from_symbol(cls, f: FrobeniusSymbol) -> SparseAbacus:
        return cls(f.arms, f.legs)

    @property
    def charge(self) -> int:
        """``|pos_black| - |neg_white|``; zero exactly when balanced."""
        return len(self.pos_black) - len(self.neg_white)

    def is_balanced(self) -> bool:
        return self.charge == 0

    def to_symbol(self) -> FrobeniusSymbol:
        """The Frobenius symbol of a balanced abacus.

        Raises:
            DomainError: if the abacus is not balanced.
        """
        return FrobeniusSymbol(tuple(self.neg_white), tuple(self.pos_black))

    def black_z(self, lo: int, hi: int) -> set[int]:
        """Integer labels of black beads in ``[lo, hi)``."""
        out = {z for z in self.pos_black if lo <= z < hi}
        out.update(z for z in range(lo, min(hi, 0)) if -z - 1 not in self.neg_white)
        return out

    @classmethod
    def from_black_z(cls, black: Iterable[int], lo: int, hi: int) -> SparseAbacus:
        """Build an abacus from black labels inside ``[lo, hi)``.

        Slots below ``lo`` are taken black and slots at or above ``hi`` white.
        """
        bset = set(black)
        pos = [z for z in bset if 0 <= z < hi]
        neg = [-z - 1 for z in range(lo, 0) if z not in bset]
        return cls(pos, neg)

    def render(self) -> str:
        """Two-column text listing black positive and white negative slots."""
        pb = ",".join(str(x) for x in sorted(self.pos_black)) or "-"
        nw = ",".join(str(x) for x in sorted(self.neg_white)) or "-"
        return f"black+ : {pb}\nwhite- : {nw}"


def _push_up_once(ab: SparseAbacus) -> SparseAbacus:
    pos = {a + 1 for a in ab.pos_black}
    if 0 not in ab.neg_white:
        pos.add(0)
    neg = {l - 1 for l in ab.neg_white if l >= 1}
    return SparseAbacus(pos, neg)


def _push_down_once(ab: SparseAbacus) -> SparseAbacus:
    neg = {l + 1 for l in ab.neg_white}
    if 0 not in ab.pos_black:
        neg.add(0)
    pos = {a - 1 for a in ab.pos_black if a >= 1}
    return SparseAbacus(pos, neg)


def push_iterated(ab: SparseAbacus, delta: int) -> SparseAbacus:
    """Push by ``delta`` as ``|delta|`` single-slot pushes (reference implementation)."""
    step = _push_up_once if delta > 0 else _push_down_once
    for _ in range(abs(delta)):
        ab = step(ab)
    return ab


def push(ab: SparseAbacus, delta: int) -> SparseAbacus:
    """Shift every bead ``delta`` slots across the fence.

    Examples:
        >>> push(SparseAbacus({0}, {0, 1}), 1) == SparseAbacus({1}, {0})
        True
    """
    if delta == 0:
        return ab
    # beads whose label lands on the other side of the fence change role
    black = {z + delta for z in ab.pos_black}
    white_neg = {-l - 1 + delta for l in ab.neg_white}
    pos, neg = set(), set()
    for z in black:
        if z >= 0:
            pos.add(z)
    for z in white_neg:
        if z < 0:
            neg.add(-z - 1)
    if delta > 0:
        # vacuum black beads at -1..-delta move to 0..delta-1 unless they were white
        for z in range(-delta, 0):
            if -z - 1 not in ab.neg_white:
                pos.add(z + delta)
    else:
        # vacuum white beads at 0..|delta|-1 move below the fence unless they were black
        for z in range(0, -delta):
            if z not in ab.pos_black:
                neg.add(-(z + delta) - 1)
    return SparseAbacus(pos, neg)


def balance(ab: SparseAbacus) -> tuple[FrobeniusSymbol, int]:
    """Push until balanced; returns the resulting symbol and the shift used."""
    delta = len(ab.neg_white) - len(ab.pos_black)
    return push(ab, delta).to_symbol(), delta


def bar(ab: SparseAbacus) -> SparseAbacus:
    """Reflect across the fence and flip colours; on partitions this is conjugation."""
    return SparseAbacus(ab.neg_white, ab.pos_black)
