"""Enumeration of t-cores by characteristic vector, and explicit maps between core sets.

Self-conjugate ``t``-cores are written in half-vector coordinates: for
``t = 5`` the pair ``(x, y)`` stands for ``(-y, -x, 0, x, y)``, for ``t = 7``
the triple ``(x, y, z)`` stands for ``(-z, -y, -x, 0, x, y, z)``, and so on.
The general 3-core ``(-x-y, x, y)`` is handled on the full vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from frobcore.decomposition import (
    CharVector,
    core_of_charvec,
    core_size,
    half_vector,
    selfconj_core_size,
    symmetric_vector,
)
from frobcore.errors import DomainError
from frobcore.partition_core import format_partition, partition_of


# --------------------------------------------------------------------------
# Enumeration
# --------------------------------------------------------------------------


def coordinate_bound(t: int, n: int) -> int:
    """``⌈(t-1+√((t-1)²+2tn))/t⌉``, a bound on every ``|c_j|`` of a ``t``-core of size ``n``."""
    return math.ceil((t - 1 + math.sqrt((t - 1) ** 2 + 2 * t * n)) / t)


def _values_within(t: int, coef: int, budget: int, bound: int) -> Iterator[tuple[int, int]]:
    """Integers ``c`` with ``t·c² + coef·c ≤ budget``, paired with that cost.

    Requires ``|coef| < t`` so that every cost is non-negative and grows with ``|c|``.
    """
    yield 0, 0
    for sign in (1, -1):
        c = sign
        while abs(c) <= bound:
            cost = t * c * c + coef * c
            if cost > budget:
                break
            yield c, cost
            c += sign


def _core_vectors(t: int, n: int) -> list[CharVector]:
    # 2n = Σ (t c_j² + (2j - t + 1) c_j) once Σ c_j = 0 is used; every term is ≥ 0
    bound = coordinate_bound(t, n)
    out: list[CharVector] = []
    coefs = [2 * j - t + 1 for j in range(t)]

    def rec(j: int, prefix: list[int], budget: int) -> None:
        if j == t - 1:
            last = -sum(prefix)
            if t * last * last + coefs[j] * last == budget:
                out.append(tuple(prefix) + (last,))
            return
        for c, cost in _values_within(t, coefs[j], budget, bound):
            prefix.append(c)
            rec(j + 1, prefix, budget - cost)
            prefix.pop()

    rec(0, [], 2 * n)
    return sorted(out)


def _selfconj_halves(t: int, n: int) -> list[tuple[int, ...]]:
    m = t // 2
    coefs = [2 * j if t % 2 else 2 * j - 1 for j in range(1, m + 1)]
    bound = coordinate_bound(t, n)
    out: list[tuple[int, ...]] = []

    def rec(j: int, prefix: list[int], budget: int) -> None:
        if j == m:
            if budget == 0:
                out.append(tuple(prefix))
            return
        for c, cost in _values_within(t, coefs[j], budget, bound):
            prefix.append(c)
            rec(j + 1, prefix, budget - cost)
            prefix.pop()

    rec(0, [], n)
    return sorted(out)


@dataclass(frozen=True)
class CoreCensus:
    """All ``t``-cores (or self-conjugate ``t``-cores) of size ``n``."""

    t: int
    n: int
    vectors: tuple[CharVector, ...]
    self_conjugate: bool = False

    @property
    def count(self) -> int:
        return len(self.vectors)

    def halves(self) -> list[tuple[int, ...]]:
        return [half_vector(c) for c in self.vectors]

    def to_json(self) -> list[dict[str, object]]:
        return [
            {"charvec": list(c), "partition": format_partition(partition_of(core_of_charvec(c)))}
            for c in self.vectors
        ]


def enumerate_core_vectors(t: int, n: int, self_conjugate: bool = False) -> CoreCensus:
    """Every characteristic vector of a ``t``-core of size ``n``, sorted.

    Args:
        t: Number of runners, at least 2.
        n: Target size.
        self_conjugate: Restrict to self-conjugate cores.
    """
    if t < 2:
        raise DomainError(f"t must be at least 2, got {t}")
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    if self_conjugate:
        vecs = sorted(symmetric_vector(h, t) for h in _selfconj_halves(t, n))
    else:
        vecs = _core_vectors(t, n)
    return CoreCensus(t, n, tuple(vecs), self_conjugate)


def count_cores(t: int, n: int, self_conjugate: bool = False) -> int:
    """``a_t(n)``, or ``asc_t(n)`` when ``self_conjugate``."""
    return enumerate_core_vectors(t, n, self_conjugate).count


# --------------------------------------------------------------------------
# Maps
# --------------------------------------------------------------------------


def _split_unit(k: int, modulus: int) -> tuple[int, int]:
    """Write ``k = modulus·q + ε`` with ``ε = ±1``; returns ``(q, ε)``."""
    if k % modulus == 1:
        return (k - 1) // modulus, 1
    if k % modulus == modulus - 1:
        return (k + 1) // modulus, -1
    raise ValueError


def map3(k: int, c: Sequence[int]) -> CharVector:
    """Send the 3-core ``(-x-y, x, y)`` of size ``n`` to one of size ``k²n + (k²-1)/3``.

    Raises:
        DomainError: if ``3 | k`` or ``c`` is not a length-3 vector summing to 0.
    """
    c = tuple(c)
    if len(c) != 3 or sum(c) != 0:
        raise DomainError(f"{c} is not a 3-core characteristic vector")
    if k % 3 == 0:
        raise DomainError(f"k={k} must not be divisible by 3")
    q, e = _split_unit(k, 3)
    x, y = c[1], c[2]
    return (-e * (k * (y + x) + q), e * k * x, e * (k * y + q))


def map5_phi(k: int, xy: Sequence[int]) -> tuple[int, int]:
    """Self-conjugate 5-cores of size ``n`` to size ``(k²+1)n + k²``."""
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    x, y = xy
    q, r = divmod(k, 5)
    if r == 0:
        return (x + k * y + 2 * q, -k * x + y - q)
    if r == 1:
        return (-k * x + y - q, -x - k * y - 2 * q - 1)
    if r == 2:
        return (-k * x - y - q - 1, -y * k + x - 2 * q - 1)
    if r == 3:
        return (k * x - y + q, x + k * y + 2 * q + 1)
    return (-x - k * y - 2 * q - 2, k * x - y + q)


def map5_psi(k: int, xy: Sequence[int]) -> tuple[int, int]:
    """Self-conjugate 5-cores of size ``n``, intended to land at size ``k²n + k² - 1``.

    Only the ``k ≡ ±1 (mod 5)`` branch has that property; the ``k ≡ ±2``
    branch is evaluated as written and its sizes are reported by
    :func:`map_size_report`.

    Raises:
        DomainError: if ``5 | k``.
    """
    if k % 5 == 0:
        raise DomainError(f"k={k} must not be divisible by 5")
    x, y = xy
    if k % 5 in (1, 4):
        q, e = _split_unit(k, 5)
        return (e * (k * x + q), e * (k * y + 2 * q))
    # k = 5q + 2ε
    e = 1 if k % 5 == 2 else -1
    q = (k - 2 * e) // 5
    return (e * (-k * y + 2 * q + 1), e * (k * x + q))


def map7_phi(k: int, xyz: Sequence[int], corrected: bool = False) -> tuple[int, int, int]:
    """Self-conjugate 7-cores of size ``n`` to size ``k²(n+2) - 2``.

    As written, the ``k ≡ 1`` and ``k ≡ 6 (mod 7)`` branches reuse ``x``
    where ``y`` and ``z`` are expected and miss the claimed size.
    ``corrected=True`` substitutes ``y`` and ``z`` in those two branches.

    Raises:
        DomainError: if ``7 | k``.
    """
    if k % 7 == 0:
        raise DomainError(f"k={k} must not be divisible by 7")
    x, y, z = xyz
    q, r = divmod(k, 7)
    if r == 1:
        if corrected:
            return (k * x + q, k * y + 2 * q, k * z + 3 * q)
        return (k * x + q, k * x + 2 * q, k * x + 3 * q)
    if r == 2:
        return (-k * z - 3 * q - 1, k * x + q, -y * k - 2 * q - 1)
    if r == 3:
        return (-k * y - 2 * q - 1, z * k + 3 * q + 1, k * x + q)
    if r == 4:
        return (k * y + 2 * q + 1, -k * z - 3 * q - 2, -k * x - q - 1)
    if r == 5:
        return (k * z + 3 * q + 2, -k * x - q - 1, k * y + 2 * q + 1)
    if corrected:
        return (-k * x - q - 1, -k * y - 2 * q - 2, -k * z - 3 * q - 3)
    return (-k * x - q - 1, -k * x - 2 * q - 2, -k * z - 3 * q - 3)


def map9_phi(xyzw: Sequence[int]) -> tuple[int, int, int, int]:
    """Self-conjugate 9-cores of size ``n`` to size ``4n + 10``."""
    x, y, z, w = xyzw
    return (-2 * w - 1, 2 * x, -2 * z - 1, 2 * y)


def on_charvec(fn: Callable[[tuple[int, ...]], Sequence[int]], c: Sequence[int]) -> CharVector:
    """Lift a half-vector map to full self-conjugate characteristic vectors."""
    c = tuple(c)
    return symmetric_vector(tuple(fn(half_vector(c))), len(c))


# --------------------------------------------------------------------------
# Identity verification
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Identity:
    """A claimed map between two core sets.

    Attributes:
        t: Number of runners.
        self_conjugate: Whether both sides are self-conjugate cores.
        source: Domain size as a function of the index ``n``.
        target: Codomain size as a function of ``n``.
        fn: The map, on half vectors (self-conjugate) or full vectors.
        bijective: Whether equality of counts is claimed, or only injectivity.
    """

    t: int
    self_conjugate: bool
    source: Callable[[int], int]
    target: Callable[[int], int]
    fn: Callable[[tuple[int, ...]], Sequence[int]]
    bijective: bool = True
    description: str = ""


def _id3(k: int) -> Identity:
    return Identity(
        3,
        False,
        lambda n: n,
        lambda n, k=k: k * k * n + (k * k - 1) // 3,
        lambda c, k=k: map3(k, c),
        bijective=True,
        description=f"a3({k * k}n+{(k * k - 1) // 3}) = a3(n)",
    )


IDENTITIES: dict[str, Identity] = {
    "a3_4n1": Identity(
        3, False, lambda n: n, lambda n: 4 * n + 1, lambda c: map3(2, c),
        description="a3(4n+1) = a3(n)",
    ),
    "asc5_2n1": Identity(
        5, True, lambda n: n, lambda n: 2 * n + 1, lambda h: map5_phi(1, h),
        description="asc5(2n+1) = asc5(n)",
    ),
    "asc5_5n4": Identity(
        5, True, lambda n: n, lambda n: 5 * n + 4, lambda h: map5_phi(2, h),
        description="asc5(5n+4) = asc5(n)",
    ),
    "asc5_10n9": Identity(
        5, True, lambda n: n, lambda n: 10 * n + 9, lambda h: map5_phi(3, h),
        description="asc5(10n+9) = asc5(n)",
    ),
    "asc5_psi4": Identity(
        5, True, lambda n: n, lambda n: 16 * n + 15, lambda h: map5_psi(4, h),
        bijective=False,
        description="asc5(n) <= asc5(16n+15) by injection",
    ),
    "asc5_psi6": Identity(
        5, True, lambda n: n, lambda n: 36 * n + 35, lambda h: map5_psi(6, h),
        bijective=False,
        description="asc5(n) <= asc5(36n+35) by injection",
    ),
    "asc7_4n6": Identity(
        7, True, lambda n: n, lambda n: 4 * n + 6, lambda h: map7_phi(2, h),
        description="asc7(4n+6) = asc7(n)",
    ),
    "asc9_8n10": Identity(
        9, True, lambda n: 2 * n, lambda n: 8 * n + 10, map9_phi,
        description="asc9(8n+10) = asc9(2n)",
    ),
    "asc9_4n10": Identity(
        9, True, lambda n: n, lambda n: 4 * n + 10, map9_phi,
        bijective=False,
        description="asc9(n) <= asc9(4n+10) by injection",
    ),
    "core3_k4": _id3(4),
    "core3_k5": _id3(5),
    "core3_k8": _id3(8),
    "core3_k7": Identity(
        3, False, lambda n: n, lambda n: 49 * n + 16, lambda c: map3(7, c),
        bijective=False,
        description="a3(n) <= a3(49n+16) by injection",
    ),
}

# names that expand to several identities checked together
BUNDLES: dict[str, tuple[str, ...]] = {
    "core3_k2m": ("a3_4n1", "core3_k4", "core3_k5", "core3_k8"),
}


def identity_names() -> list[str]:
    return sorted(IDENTITIES) + sorted(BUNDLES)


@dataclass(frozen=True)
class IdentityRow:
    label: str
    n: int
    source_size: int
    target_size: int
    domain_count: int
    codomain_count: int
    injective: bool
    into_codomain: bool
    surjective: bool

    def ok(self, bijective: bool) -> bool:
        good = self.injective and self.into_codomain
        return good and self.surjective if bijective else good


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of checking an identity for every index up to ``max_n``."""

    name: str
    description: str
    bijective: bool
    rows: tuple[IdentityRow, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(r.ok(self.bijective) for r in self.rows)

    @property
    def first_failure(self) -> int | None:
        for r in self.rows:
            if not r.ok(self.bijective):
                return r.n
        return None

    def render(self) -> str:
        head = f"{self.name}: {self.description}"
        lines = [head, "identity\tn\tsource\ttarget\t#dom\t#cod\tinj\tinto\tonto\tok"]
        for r in self.rows:
            lines.append(
                f"{r.label}\t{r.n}\t{r.source_size}\t{r.target_size}\t{r.domain_count}\t"
                f"{r.codomain_count}\t{r.injective}\t{r.into_codomain}\t{r.surjective}\t"
                f"{'PASS' if r.ok(self.bijective) else 'FAIL'}"
            )
        verdict = "PASS" if self.passed else f"FAIL (first failure at n={self.first_failure})"
        lines.append(verdict)
        return "\n".join(lines)

    def to_json(self) -> dict[str, object]:
        return {
            "name": self.name,
            "description": self.description,
            "bijective": self.bijective,
            "passed": self.passed,
            "first_failure": self.first_failure,
            "rows": [r.__dict__ for r in self.rows],
        }


def _domain(identity: Identity, size: int) -> list[tuple[int, ...]]:
    census = enumerate_core_vectors(identity.t, size, identity.self_conjugate)
    return census.halves() if identity.self_conjugate else list(census.vectors)


def verify_identity(name: str, max_n: int) -> IdentityReport:
    """Check a named identity by enumerating both sides for ``n = 0..max_n``.

    Bijective identities need the map to be injective, to land in the
    codomain and to cover it; the others need only the first two.

    Raises:
        KeyError: for an unknown identity name.
    """
    if name in BUNDLES:
        parts = [verify_identity(sub, max_n) for sub in BUNDLES[name]]
        if len({p.bijective for p in parts}) != 1:
            raise ValueError(f"bundle {name} mixes claim types")
        return IdentityReport(
            name,
            "; ".join(p.description for p in parts),
            parts[0].bijective,
            tuple(r for p in parts for r in p.rows),
        )
    if name not in IDENTITIES:
        raise KeyError(name)
    ident = IDENTITIES[name]
    rows = []
    for n in range(max_n + 1):
        src, tgt = ident.source(n), ident.target(n)
        dom = _domain(ident, src)
        cod = set(_domain(ident, tgt))
        image = [tuple(ident.fn(v)) for v in dom]
        img_set = set(image)
        rows.append(
            IdentityRow(
                label=name,
                n=n,
                source_size=src,
                target_size=tgt,
                domain_count=len(dom),
                codomain_count=len(cod),
                injective=len(img_set) == len(image),
                into_codomain=img_set <= cod,
                surjective=cod <= img_set,
            )
        )
    return IdentityReport(name, ident.description, ident.bijective, tuple(rows))


@dataclass(frozen=True)
class SizeReport:
    """Measured sizes of images under a map, compared with a claimed size law."""

    label: str
    claimed: str
    samples: tuple[tuple[tuple[int, ...], int, int, int], ...]
    mismatches: int
    injective: bool

    def render(self) -> str:
        lines = [f"{self.label}: claimed image size {self.claimed}"]
        lines.append("input\tsize\timage size\tclaimed")
        for v, n, got, want in self.samples:
            flag = "" if got == want else "  <- mismatch"
            lines.append(f"{v}\t{n}\t{got}\t{want}{flag}")
        lines.append(
            f"mismatches: {self.mismatches}; injective on tested domain: {self.injective}"
        )
        return "\n".join(lines)


def map_size_report(
    which: str, k: int, max_n: int, show: int = 8, corrected: bool = False
) -> SizeReport:
    """Evaluate ``map5_psi`` or ``map7_phi`` on all domain vectors of size ``≤ max_n``.

    Args:
        which: ``"psi5"`` or ``"phi7"``.
        k: Map parameter.
        max_n: Largest domain size examined.
        show: Number of sample rows kept in the report.
        corrected: Passed to :func:`map7_phi`.
    """
    if which == "psi5":
        t, fn = 5, (lambda h: map5_psi(k, h))
        claim = (lambda n: k * k * n + k * k - 1)
        claimed = f"{k * k}n+{k * k - 1}"
    elif which == "phi7":
        t, fn = 7, (lambda h: map7_phi(k, h, corrected))
        claim = (lambda n: k * k * (n + 2) - 2)
        claimed = f"{k * k}(n+2)-2"
    else:
        raise KeyError(which)
    samples = []
    mismatches = 0
    images = []
    for n in range(max_n + 1):
        for h in _selfconj_halves(t, n):
            img = tuple(fn(h))
            images.append(img)
            got = selfconj_core_size(img, t)
            if got != claim(n):
                mismatches += 1
            if len(samples) < show:
                samples.append((h, n, got, claim(n)))
    return SizeReport(
        label=f"{which} k={k}" + (" (corrected)" if corrected else ""),
        claimed=claimed,
        samples=tuple(samples),
        mismatches=mismatches,
        injective=len(set(images)) == len(images),
    )
