"""Runner splits, characteristic vectors, cores and quotients.

A symbol is split onto ``t`` runners: arm ``a`` goes to runner ``a mod t`` at
height ``a // t`` and leg ``l`` goes to runner ``t-1-(l mod t)`` at depth
``l // t``.  The bead imbalance of runner ``j`` is ``c_j``; pushing each runner
by ``-c_j`` balances it and yields the quotient partition ``λ^j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from frobcore.abacus import SparseAbacus, push
from frobcore.errors import DomainError
from frobcore.partition_core import (
    FrobeniusSymbol,
    conjugate,
    format_partition,
    partition_of,
    size,
)

CharVector = tuple[int, ...]


def _check_t(t: int) -> None:
    if not isinstance(t, int) or t < 1:
        raise DomainError(f"t must be a positive integer, got {t!r}")


def _check_charvec(c: Sequence[int]) -> CharVector:
    c = tuple(c)
    if not c:
        raise DomainError("characteristic vector must be non-empty")
    if sum(c) != 0:
        raise DomainError(f"characteristic vector must sum to 0, got {c}")
    return c


def _check_quotient(c: CharVector, quot: Sequence[FrobeniusSymbol]) -> tuple[FrobeniusSymbol, ...]:
    quot = tuple(quot)
    if len(quot) != len(c):
        raise DomainError(f"quotient must have {len(c)} entries, got {len(quot)}")
    return quot


def format_charvec(c: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in c) + ")"


@dataclass(frozen=True)
class RunnerSplit:
    """A symbol distributed over ``t`` runners."""

    t: int
    runners: tuple[SparseAbacus, ...]

    def assemble(self) -> FrobeniusSymbol:
        """Reassemble the runners into a single symbol.

        Raises:
            DomainError: if the total bead counts do not balance.
        """
        t = self.t
        arms = [q * t + j for j, r in enumerate(self.runners) for q in r.pos_black]
        legs = [q * t + t - 1 - j for j, r in enumerate(self.runners) for q in r.neg_white]
        return FrobeniusSymbol(tuple(legs), tuple(arms))


def split(f: FrobeniusSymbol, t: int) -> RunnerSplit:
    """Distribute arms and legs of ``f`` onto ``t`` runners."""
    _check_t(t)
    pos: list[list[int]] = [[] for _ in range(t)]
    neg: list[list[int]] = [[] for _ in range(t)]
    for a in f.arms:
        pos[a % t].append(a // t)
    for l in f.legs:
        neg[t - 1 - l % t].append(l // t)
    return RunnerSplit(t, tuple(SparseAbacus(p, n) for p, n in zip(pos, neg)))


def char_vector(f: FrobeniusSymbol, t: int) -> CharVector:
    """Per-runner bead imbalance ``c_j = |arms on j| - |legs on j|``."""
    return tuple(r.charge for r in split(f, t).runners)


def quotient(f: FrobeniusSymbol, t: int) -> tuple[FrobeniusSymbol, ...]:
    """The ``t``-quotient, obtained by balancing every runner with a push."""
    return tuple(push(r, -r.charge).to_symbol() for r in split(f, t).runners)


def quotient_closed_form(f: FrobeniusSymbol, t: int) -> tuple[FrobeniusSymbol, ...]:
    """The ``t``-quotient from explicit arm/leg formulas, with no abacus pushes.

    Used to cross-check :func:`quotient`.
    """
    _check_t(t)
    arm_set, leg_set = set(f.arms), set(f.legs)
    out = []
    for j in range(t):
        rj = t - 1 - j
        a_pos = [a // t for a in f.arms if a % t == j]
        l_pos = [l // t for l in f.legs if l % t == rj]
        c = len(a_pos) - len(l_pos)
        if c >= 0:
            # extended colegs of λ (naturals that are not arms) on residue j
            l_neg = [q for q in range(c) if q * t + j not in arm_set]
            arms = [a - c for a in a_pos if a >= c]
            legs = [l + c for l in l_pos] + [c - l - 1 for l in l_neg]
        else:
            m = -c
            # extended coarms of λ (naturals that are not legs) on residue t-1-j
            a_neg = [q for q in range(m) if q * t + rj not in leg_set]
            arms = [a + m for a in a_pos] + [m - a - 1 for a in a_neg]
            legs = [l - m for l in l_pos if l >= m]
        out.append(FrobeniusSymbol(tuple(legs), tuple(arms)))
    return tuple(out)


def core_of_charvec(c: Sequence[int]) -> FrobeniusSymbol:
    """The ``t``-core with characteristic vector ``c`` (``t = len(c)``)."""
    c = _check_charvec(c)
    t = len(c)
    arms = [q * t + j for j, cj in enumerate(c) if cj > 0 for q in range(cj)]
    legs = [q * t + t - j - 1 for j, cj in enumerate(c) if cj < 0 for q in range(-cj)]
    return FrobeniusSymbol(tuple(legs), tuple(arms))


def core(f: FrobeniusSymbol, t: int) -> FrobeniusSymbol:
    """The ``t``-core of ``f``."""
    return core_of_charvec(char_vector(f, t))


def core_size(c: Sequence[int], t: int | None = None) -> int:
    """Size of the core with characteristic vector ``c``: ``(t/2)Σc² + Σ j·c_j``."""
    c = _check_charvec(c)
    if t is not None and t != len(c):
        raise DomainError(f"vector of length {len(c)} given for t={t}")
    t = len(c)
    # Σc² has the parity of Σc = 0, so the halving is exact
    return t * sum(x * x for x in c) // 2 + sum(j * x for j, x in enumerate(c))


def symmetric_vector(half: Sequence[int], t: int) -> CharVector:
    """Assemble ``(-c_m,…,-c_1,[0,]c_1,…,c_m)`` from ``half = (c_1,…,c_m)``."""
    half = tuple(half)
    if t < 2 or len(half) != t // 2:
        raise DomainError(f"half vector for t={t} must have {t // 2} entries, got {len(half)}")
    neg = tuple(-x for x in reversed(half))
    mid = (0,) if t % 2 else ()
    return neg + mid + half


def half_vector(c: Sequence[int]) -> tuple[int, ...]:
    """Inverse of :func:`symmetric_vector`.

    Raises:
        DomainError: if ``c`` is not of symmetric shape.
    """
    c = tuple(c)
    t = len(c)
    half = c[(t + 1) // 2 :]
    if symmetric_vector(half, t) != c:
        raise DomainError(f"{c} is not a self-conjugate characteristic vector")
    return half


def selfconj_core_size(half: Sequence[int], t: int) -> int:
    """Size of the self-conjugate ``t``-core with half vector ``half``.

    Odd ``t``: ``tΣc_j² + Σ 2j·c_j``; even ``t``: ``tΣc_j² + Σ (2j-1)·c_j``,
    with ``j`` running from 1.
    """
    half = tuple(half)
    if t < 2 or len(half) != t // 2:
        raise DomainError(f"half vector for t={t} must have {t // 2} entries, got {len(half)}")
    sq = t * sum(x * x for x in half)
    if t % 2:
        return sq + sum(2 * j * x for j, x in enumerate(half, start=1))
    return sq + sum((2 * j - 1) * x for j, x in enumerate(half, start=1))


def reconstruct(c: Sequence[int], quot: Sequence[FrobeniusSymbol]) -> FrobeniusSymbol:
    """Rebuild a symbol from its characteristic vector and quotient.

    Raises:
        DomainError: if ``c`` does not sum to zero or the lengths disagree.
    """
    c = _check_charvec(c)
    quot = _check_quotient(c, quot)
    t = len(c)
    arms: list[int] = []
    legs: list[int] = []
    for j, (cj, q) in enumerate(zip(c, quot)):
        rj = t - j - 1
        leg_set, arm_set = set(q.legs), set(q.arms)
        if cj >= 0:
            legs += [(l - cj) * t + rj for l in q.legs if l >= cj]
            arms += [(a + cj) * t + j for a in q.arms]
            arms += [(cj - a - 1) * t + j for a in range(cj) if a not in leg_set]
        else:
            m = -cj
            legs += [(l + m) * t + rj for l in q.legs]
            legs += [(m - l - 1) * t + rj for l in range(m) if l not in arm_set]
            arms += [(a - m) * t + j for a in q.arms if a >= m]
    return FrobeniusSymbol(tuple(legs), tuple(arms))


def durfee_from_decomposition(
    c: Sequence[int], quot: Sequence[FrobeniusSymbol]
) -> tuple[int, int, int]:
    """Durfee number of the reconstructed partition, with its correction terms.

    Returns:
        ``(s, α, β)`` where ``α`` counts legs of ``λ^j`` below ``c_j`` over
        ``c_j ≥ 0`` and ``β`` counts arms of ``λ^j`` below ``|c_j|`` over
        ``c_j < 0``; ``s = Σ s(λ^j) - α - β + Σ_{c_j>0} c_j``.
    """
    c = _check_charvec(c)
    quot = _check_quotient(c, quot)
    alpha = sum(sum(1 for l in q.legs if l < cj) for cj, q in zip(c, quot) if cj >= 0)
    beta = sum(sum(1 for a in q.arms if a < -cj) for cj, q in zip(c, quot) if cj < 0)
    core_s = sum(x for x in c if x > 0)
    s = sum(q.durfee for q in quot) - alpha - beta + core_s
    return s, alpha, beta


def conjugate_decomposition(
    c: Sequence[int], quot: Sequence[FrobeniusSymbol]
) -> tuple[CharVector, tuple[FrobeniusSymbol, ...]]:
    """Characteristic vector and quotient of the conjugate partition."""
    c = _check_charvec(c)
    quot = _check_quotient(c, quot)
    return tuple(-x for x in reversed(c)), tuple(conjugate(q) for q in reversed(quot))


def is_selfconjugate_decomposition(c: Sequence[int], quot: Sequence[FrobeniusSymbol]) -> bool:
    """Whether ``(c, quot)`` describes a self-conjugate partition."""
    c = _check_charvec(c)
    quot = _check_quotient(c, quot)
    return conjugate_decomposition(c, quot) == (c, quot)


@dataclass(frozen=True)
class Decomposition:
    """Characteristic vector plus quotient of a partition for a fixed ``t``."""

    charvec: CharVector
    quotient: tuple[FrobeniusSymbol, ...]

    def __post_init__(self) -> None:
        c = _check_charvec(self.charvec)
        object.__setattr__(self, "charvec", c)
        object.__setattr__(self, "quotient", _check_quotient(c, self.quotient))

    @property
    def t(self) -> int:
        return len(self.charvec)

    @classmethod
    def of(cls, f: FrobeniusSymbol, t: int) -> Decomposition:
        return cls(char_vector(f, t), quotient(f, t))

    def symbol(self) -> FrobeniusSymbol:
        return reconstruct(self.charvec, self.quotient)

    def core(self) -> FrobeniusSymbol:
        return core_of_charvec(self.charvec)

    def durfee(self) -> int:
        return durfee_from_decomposition(self.charvec, self.quotient)[0]

    def weight(self) -> int:
        return sum(size(q) for q in self.quotient)

    def conjugate(self) -> Decomposition:
        return Decomposition(*conjugate_decomposition(self.charvec, self.quotient))

    def is_selfconjugate(self) -> bool:
        return is_selfconjugate_decomposition(self.charvec, self.quotient)

    def to_json(self) -> dict[str, Any]:
        return {
            "t": self.t,
            "charvec": list(self.charvec),
            "core": format_partition(partition_of(self.core())),
            "quotient": [format_partition(partition_of(q)) for q in self.quotient],
            "durfee": self.durfee(),
        }


def decompose(f: FrobeniusSymbol, t: int) -> Decomposition:
    """Characteristic vector and quotient of ``f``."""
    return Decomposition.of(f, t)
