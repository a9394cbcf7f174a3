"""Partitions, Frobenius symbols, Frobenius box labels, hooks and hook removal.

Every box of a Young diagram is addressed by a :class:`FrobLabel`, a pair
(arm-or-coarm, leg-or-coleg) tagged with one of three sign patterns.  Internally
each label corresponds to a pair of integer bead positions ``(black, white)``
with ``black > white``; the hook length of the box is ``black - white``.
"""

from __future__ import annotations

import enum
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from frobcore.errors import DomainError

Partition = tuple[int, ...]


# --------------------------------------------------------------------------
# Partitions
# --------------------------------------------------------------------------


def check_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` as a partition and return it as a tuple.

    Raises:
        DomainError: if a part is non-positive or the sequence increases.
    """
    p = tuple(parts)
    for i, x in enumerate(p):
        if not isinstance(x, int) or x <= 0:
            raise DomainError(f"parts must be positive integers, got {x!r}")
        if i and x > p[i - 1]:
            raise DomainError(f"parts must be weakly decreasing: {p}")
    return p


_PART_RE = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+)\s*)?$")


def parse_partition(text: str) -> Partition:
    """Parse ``"5,5,4,2,1,1"`` or ``"5^2,4,2,1^2"``; the empty string is the empty partition.

    Raises:
        DomainError: on malformed text or a non-partition.
    """
    text = text.strip()
    if text in ("", "0", "()", "∅"):
        return ()
    text = text.strip("()")
    parts: list[int] = []
    for chunk in text.split(","):
        m = _PART_RE.match(chunk)
        if not m:
            raise DomainError(f"cannot parse partition component {chunk!r}")
        value = int(m.group(1))
        mult = int(m.group(2)) if m.group(2) is not None else 1
        parts.extend([value] * mult)
    return check_partition(parts)


def format_partition(parts: Sequence[int]) -> str:
    """Render a partition as comma-separated parts (empty string for the empty partition)."""
    return ",".join(str(x) for x in parts)


# --------------------------------------------------------------------------
# Frobenius symbols
# --------------------------------------------------------------------------


def _strict_set(values: Iterable[int], what: str) -> tuple[int, ...]:
    vals = sorted(values)
    for v in vals:
        if not isinstance(v, int) or v < 0:
            raise DomainError(f"{what} must be non-negative integers, got {v!r}")
    if len(set(vals)) != len(vals):
        raise DomainError(f"{what} must be distinct: {vals}")
    return tuple(vals)


@dataclass(frozen=True, order=True)
class FrobeniusSymbol:
    """The Frobenius symbol ``(legs | arms)`` of a partition.

    Both sets are stored in increasing order.  Construction validates that they
    consist of distinct naturals and have equal cardinality.

    Attributes:
        legs: Leg lengths of the diagonal boxes, increasing.
        arms: Arm lengths of the diagonal boxes, increasing.
    """

    legs: tuple[int, ...]
    arms: tuple[int, ...]

    def __post_init__(self) -> None:
        legs = _strict_set(self.legs, "legs")
        arms = _strict_set(self.arms, "arms")
        if len(legs) != len(arms):
            raise DomainError(
                f"legs and arms must have equal size, got {len(legs)} and {len(arms)}"
            )
        object.__setattr__(self, "legs", legs)
        object.__setattr__(self, "arms", arms)

    @classmethod
    def empty(cls) -> FrobeniusSymbol:
        return cls((), ())

    @property
    def durfee(self) -> int:
        """Side of the Durfee square."""
        return len(self.arms)

    @property
    def size(self) -> int:
        return size(self)

    def __str__(self) -> str:
        legs = ",".join(str(x) for x in reversed(self.legs))
        arms = ",".join(str(x) for x in self.arms)
        return f"({legs}|{arms})"

    def to_partition(self) -> Partition:
        return partition_of(self)


def parse_symbol(text: str) -> FrobeniusSymbol:
    """Parse ``"(5,2,0|1,3,4)"``; ``"(|)"`` is the empty symbol.

    Raises:
        DomainError: on malformed text.
    """
    t = text.strip()
    if not (t.startswith("(") and t.endswith(")")) or t.count("|") != 1:
        raise DomainError(f"cannot parse Frobenius symbol {text!r}")
    left, right = t[1:-1].split("|")

    def nums(s: str) -> list[int]:
        s = s.strip()
        if not s:
            return []
        try:
            return [int(x) for x in s.split(",")]
        except ValueError as exc:
            raise DomainError(f"cannot parse Frobenius symbol {text!r}") from exc

    return FrobeniusSymbol(tuple(nums(left)), tuple(nums(right)))


def frobenius_of(parts: Sequence[int]) -> FrobeniusSymbol:
    """Read arms and legs off the Durfee diagonal of a partition.

    Examples:
        >>> str(frobenius_of((5, 5, 4, 2, 1, 1)))
        '(5,2,0|1,3,4)'
    """
    p = check_partition(parts)
    s = sum(1 for i, x in enumerate(p) if x >= i + 1)
    arms = [p[i] - i - 1 for i in range(s)]
    conj = conjugate_parts(p)
    legs = [conj[i] - i - 1 for i in range(s)]
    return FrobeniusSymbol(tuple(legs), tuple(arms))


def conjugate_parts(parts: Sequence[int]) -> Partition:
    """Column lengths of a partition."""
    if not parts:
        return ()
    return tuple(sum(1 for x in parts if x > j) for j in range(parts[0]))


@dataclass(frozen=True)
class CoSets:
    """Coarms and colegs of a symbol.

    The extended sets ``ℕ \\ legs`` (extended coarms) and ``ℕ \\ arms``
    (extended colegs) are infinite and are represented through their finite
    complements; use :meth:`extended_coarms_below` and
    :meth:`extended_colegs_below` to list their members under a bound.
    """

    coarms: frozenset[int]
    colegs: frozenset[int]
    legs: frozenset[int]
    arms: frozenset[int]

    def is_extended_coarm(self, k: int) -> bool:
        return k >= 0 and k not in self.legs

    def is_extended_coleg(self, k: int) -> bool:
        return k >= 0 and k not in self.arms

    def extended_coarms_below(self, bound: int) -> list[int]:
        return [k for k in range(bound) if k not in self.legs]

    def extended_colegs_below(self, bound: int) -> list[int]:
        return [k for k in range(bound) if k not in self.arms]


def co_sets(f: FrobeniusSymbol) -> CoSets:
    """Coarms ``{0..max legs} \\ legs`` and colegs ``{0..max arms} \\ arms``."""
    legs, arms = frozenset(f.legs), frozenset(f.arms)
    coarms = frozenset(range(max(f.legs) + 1)) - legs if f.legs else frozenset()
    colegs = frozenset(range(max(f.arms) + 1)) - arms if f.arms else frozenset()
    return CoSets(coarms, colegs, legs, arms)


def partition_of(f: FrobeniusSymbol) -> Partition:
    """Recover the parts of a partition from its Frobenius symbol.

    Rows are indexed by arms (largest first) followed by coarms (smallest
    first).  An arm ``a`` gives the part ``s + #{colegs < a}`` and a coarm
    ``a`` gives ``#{legs > a}``.
    """
    cs = co_sets(f)
    s = f.durfee
    colegs = sorted(cs.colegs)
    rows = [s + sum(1 for l in colegs if l < a) for a in reversed(f.arms)]
    rows += [sum(1 for l in f.legs if l > a) for a in sorted(cs.coarms)]
    return tuple(rows)


def conjugate(f: FrobeniusSymbol) -> FrobeniusSymbol:
    """Exchange legs and arms."""
    return FrobeniusSymbol(f.arms, f.legs)


def size(f: FrobeniusSymbol) -> int:
    """Number of boxes, ``s + Σarms + Σlegs``."""
    return f.durfee + sum(f.arms) + sum(f.legs)


# --------------------------------------------------------------------------
# Box labels
# --------------------------------------------------------------------------


class Kind(enum.Enum):
    """Sign pattern of a Frobenius label."""

    DURFEE_PP = "++"
    ARM_COLEG_PM = "+-"
    LEG_COARM_MP = "-+"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class FrobLabel:
    """Address of a box as ``(a, l)`` with a sign pattern.

    ``++``: arm ``a`` and leg ``l`` (box in the Durfee square);
    ``+-``: arm ``a`` and coleg ``l`` with ``a > l`` (right of the square);
    ``-+``: coarm ``a`` and leg ``l`` with ``l > a`` (below the square).
    """

    a: int
    l: int
    kind: Kind

    def __str__(self) -> str:
        return f"({self.a},{self.l}){self.kind.value}"

    def sort_key(self) -> tuple[str, int, int]:
        return (self.kind.value, self.a, self.l)

    def beads(self) -> tuple[int, int]:
        """Integer positions ``(black, white)`` of the two beads bounding the hook."""
        return black_label(self.a, self.kind is not Kind.LEG_COARM_MP), white_label(
            self.l, self.kind is not Kind.ARM_COLEG_PM
        )


_LABEL_RE = re.compile(r"^\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*(\+\+|\+-|-\+)\s*$")


def parse_label(text: str) -> FrobLabel:
    """Parse ``"(6,2)++"``, ``"(1,0)+-"`` or ``"(1,5)-+"``."""
    m = _LABEL_RE.match(text.replace("−", "-"))
    if not m:
        raise DomainError(f"cannot parse Frobenius label {text!r}")
    return FrobLabel(int(m.group(1)), int(m.group(2)), Kind(m.group(3)))


def black_label(a: int, is_arm: bool) -> int:
    """Integer position of a black bead: arm ``a`` sits at ``a``, coarm ``a`` at ``-a-1``."""
    return a if is_arm else -a - 1


def white_label(l: int, is_leg: bool) -> int:
    """Integer position of a white bead: leg ``l`` sits at ``-l-1``, coleg ``l`` at ``l``."""
    return -l - 1 if is_leg else l


def label_from_beads(black: int, white: int) -> FrobLabel:
    """Decode a (black, white) bead pair with ``black > white`` into a label."""
    if black <= white:
        raise DomainError(f"black bead {black} must lie above white bead {white}")
    if black >= 0 and white < 0:
        return FrobLabel(black, -white - 1, Kind.DURFEE_PP)
    if black >= 0:
        return FrobLabel(black, white, Kind.ARM_COLEG_PM)
    return FrobLabel(-black - 1, -white - 1, Kind.LEG_COARM_MP)


def is_box(f: FrobeniusSymbol, b: FrobLabel) -> bool:
    """Whether ``b`` addresses a box of ``f``."""
    arms, legs = f.arms, f.legs
    if b.a < 0 or b.l < 0:
        return False
    if b.kind is Kind.DURFEE_PP:
        return b.a in arms and b.l in legs
    if b.kind is Kind.ARM_COLEG_PM:
        return b.a in arms and b.l not in arms and b.a > b.l
    return b.l in legs and b.a not in legs and b.l > b.a


def _require_box(f: FrobeniusSymbol, b: FrobLabel) -> None:
    if not is_box(f, b):
        raise DomainError(f"{b} is not a box of {f}")


def iter_boxes(f: FrobeniusSymbol) -> Iterator[FrobLabel]:
    """Yield every box label in a deterministic order."""
    arm_set, leg_set = set(f.arms), set(f.legs)
    for a in f.arms:
        for l in f.legs:
            yield FrobLabel(a, l, Kind.DURFEE_PP)
        for l in range(a):
            if l not in arm_set:
                yield FrobLabel(a, l, Kind.ARM_COLEG_PM)
    for l in f.legs:
        for a in range(l):
            if a not in leg_set:
                yield FrobLabel(a, l, Kind.LEG_COARM_MP)


def boxes(f: FrobeniusSymbol) -> frozenset[FrobLabel]:
    """All box labels of ``f``; the cardinality equals ``size(f)``."""
    return frozenset(iter_boxes(f))


def hooklength(f: FrobeniusSymbol, b: FrobLabel) -> int:
    """Hook length of box ``b``: ``a+l+1``, ``a-l`` or ``l-a`` by kind.

    Raises:
        DomainError: if ``b`` is not a box of ``f``.
    """
    _require_box(f, b)
    return _span(b)


def remove_hook(f: FrobeniusSymbol, b: FrobLabel) -> FrobeniusSymbol:
    """Remove the rim hook attached to box ``b``.

    Raises:
        DomainError: if ``b`` is not a box of ``f``.
    """
    _require_box(f, b)
    arms, legs = set(f.arms), set(f.legs)
    if b.kind is Kind.DURFEE_PP:
        arms.remove(b.a)
        legs.remove(b.l)
    elif b.kind is Kind.LEG_COARM_MP:
        legs.remove(b.l)
        legs.add(b.a)
    else:
        arms.remove(b.a)
        arms.add(b.l)
    return FrobeniusSymbol(tuple(legs), tuple(arms))


def hook_multiset(f: FrobeniusSymbol) -> Counter[int]:
    """Multiset of hook lengths over all boxes."""
    return Counter(_span(b) for b in iter_boxes(f))


def _span(b: FrobLabel) -> int:
    black, white = b.beads()
    return black - white


def label_to_cell(f: FrobeniusSymbol, b: FrobLabel) -> tuple[int, int]:
    """Convert a label to 1-indexed matrix coordinates ``(row, column)``."""
    _require_box(f, b)
    s = f.durfee
    if b.kind is Kind.LEG_COARM_MP:
        row = s + sum(1 for x in range(b.a + 1) if x not in f.legs)
    else:
        row = sum(1 for x in f.arms if x >= b.a)
    if b.kind is Kind.ARM_COLEG_PM:
        col = s + sum(1 for x in range(b.l + 1) if x not in f.arms)
    else:
        col = sum(1 for x in f.legs if x >= b.l)
    return row, col


def cell_to_label(f: FrobeniusSymbol, row: int, col: int) -> FrobLabel:
    """Convert 1-indexed matrix coordinates to the label of that box.

    Raises:
        DomainError: if ``(row, col)`` is outside the diagram.
    """
    parts = partition_of(f)
    if row < 1 or row > len(parts) or col < 1 or col > parts[row - 1]:
        raise DomainError(f"cell ({row},{col}) is not in the diagram")
    conj = conjugate_parts(parts)
    # black bead of row i sits at λ_i - i, white bead of column j at j - 1 - λ'_j
    return label_from_beads(parts[row - 1] - row, col - 1 - conj[col - 1])
