"""Finite posets backed by bitmask down-sets.

Elements are identified by label; indices into the construction order are an
internal detail that only surfaces in reports.  Every subset of the carrier is
a Python int used as a bitmask, which keeps bound computations to a handful of
machine-word operations even for product posets with a few thousand elements.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import (
    CycleDetectedError,
    DuplicateLabelError,
    NoBottomError,
    SizeLimitError,
    UnknownLabelError,
)

DEFAULT_CARRIER_CAP = 4096
CARRIER_CAP_ENV = "ORTHOPOSET_CARRIER_CAP"


def carrier_cap() -> int:
    """Maximum carrier size, overridable through ORTHOPOSET_CARRIER_CAP."""
    raw = os.environ.get(CARRIER_CAP_ENV)
    if raw is None:
        return DEFAULT_CARRIER_CAP
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_CARRIER_CAP


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """An immutable finite poset.

    ``down[i]`` is the bitmask of ``{j | j <= i}`` (including ``i``) and is the
    single source of truth for the order; ``up`` is its transpose.  Use
    :func:`build_poset` to construct one from order assertions.
    """

    def __init__(self, names: Iterable[str], down: Iterable[int], *, validate: bool = True):
        self.names: tuple[str, ...] = tuple(names)
        self.down: tuple[int, ...] = tuple(down)
        self.n = len(self.names)
        self.full = (1 << self.n) - 1
        self.index: dict[str, int] = {x: i for i, x in enumerate(self.names)}
        up = [0] * self.n
        for i in range(self.n):
            m = self.down[i]
            for j in bits(m):
                up[j] |= 1 << i
        self.up: tuple[int, ...] = tuple(up)
        if validate:
            self._check_order()

    def _check_order(self) -> None:
        if len(self.index) != self.n:
            raise DuplicateLabelError("element labels must be pairwise distinct")
        if len(self.down) != self.n:
            raise ValueError("down-set table does not match the carrier size")
        for i, m in enumerate(self.down):
            if m & ~self.full:
                raise ValueError(f"down-set of {self.names[i]!r} leaves the carrier")
            if not (m >> i) & 1:
                raise ValueError(f"order is not reflexive at {self.names[i]!r}")
            closure = 0
            for j in bits(m):
                closure |= self.down[j]
            if closure != m:
                raise ValueError(f"order is not transitive below {self.names[i]!r}")
        for i in range(self.n):
            both = self.down[i] & self.up[i]
            if both != 1 << i:
                j = next(k for k in bits(both) if k != i)
                raise CycleDetectedError(
                    f"{self.names[i]!r} and {self.names[j]!r} are mutually comparable"
                )

    # -- identity ---------------------------------------------------------

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.names == other.names and self.down == other.down

    def __hash__(self) -> int:
        return hash((self.names, self.down))

    def __repr__(self) -> str:
        return f"Poset({self.n} elements: {', '.join(self.names)})"

    def _i(self, label: str) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise UnknownLabelError(f"unknown element {label!r}") from None

    # -- subsets ----------------------------------------------------------

    def subset(self, labels: Iterable[str]) -> ElementSet:
        mask = 0
        for x in labels:
            mask |= 1 << self._i(x)
        return ElementSet(self, mask)

    def set_of(self, mask: int) -> ElementSet:
        return ElementSet(self, mask)

    def empty_set(self) -> ElementSet:
        return ElementSet(self, 0)

    def full_set(self) -> ElementSet:
        return ElementSet(self, self.full)

    # -- order queries ----------------------------------------------------

    def leq(self, x: str, y: str) -> bool:
        return self.leq_idx(self._i(x), self._i(y))

    def leq_idx(self, i: int, j: int) -> bool:
        return bool((self.down[j] >> i) & 1)

    def down_set(self, a: str) -> ElementSet:
        """All elements below or equal to ``a``."""
        return ElementSet(self, self.down[self._i(a)])

    def up_set(self, a: str) -> ElementSet:
        return ElementSet(self, self.up[self._i(a)])

    def greatest_of(self, mask: int) -> int | None:
        """Index of the greatest element of ``mask``, if it has one."""
        for i in bits(mask):
            if mask & ~self.down[i] == 0:
                return i
        return None

    def least_of(self, mask: int) -> int | None:
        for i in bits(mask):
            if mask & ~self.up[i] == 0:
                return i
        return None

    def maximal_of(self, mask: int) -> list[int]:
        """Indices of the maximal elements of ``mask`` in ascending order."""
        out = []
        for i in bits(mask):
            if mask & self.up[i] == 1 << i:
                out.append(i)
        return out

    def lower_mask(self, mask: int) -> int:
        """Common lower bounds of every element of ``mask``."""
        acc = self.full
        for i in bits(mask):
            acc &= self.down[i]
        return acc

    def upper_mask(self, mask: int) -> int:
        acc = self.full
        for i in bits(mask):
            acc &= self.up[i]
        return acc

    def bounds(self, aset: ElementSet) -> BoundsReport:
        """Lower/upper bound cones of a subset and its meet/join when present."""
        lower = self.lower_mask(aset.mask)
        upper = self.upper_mask(aset.mask)
        gm = self.greatest_of(lower)
        lj = self.least_of(upper)
        return BoundsReport(
            lower=ElementSet(self, lower),
            upper=ElementSet(self, upper),
            meet=self.names[gm] if gm is not None else None,
            join=self.names[lj] if lj is not None else None,
        )

    def meet_idx(self, i: int, j: int) -> int | None:
        return self.greatest_of(self.down[i] & self.down[j])

    def join_idx(self, i: int, j: int) -> int | None:
        return self.least_of(self.up[i] & self.up[j])

    def meet(self, x: str, y: str) -> str | None:
        """Greatest lower bound of two elements, or None when it fails to exist."""
        m = self.meet_idx(self._i(x), self._i(y))
        return self.names[m] if m is not None else None

    def join(self, x: str, y: str) -> str | None:
        m = self.join_idx(self._i(x), self._i(y))
        return self.names[m] if m is not None else None

    # -- structural predicates ---------------------------------------------

    @cached_property
    def bottom_idx(self) -> int | None:
        return self.least_of(self.full)

    @cached_property
    def top_idx(self) -> int | None:
        return self.greatest_of(self.full)

    def bottom(self) -> str | None:
        return self.names[self.bottom_idx] if self.bottom_idx is not None else None

    def top(self) -> str | None:
        return self.names[self.top_idx] if self.top_idx is not None else None

    def is_bounded(self) -> bool:
        return self.bottom_idx is not None and self.top_idx is not None

    def first_meetless_pair(self) -> tuple[str, str] | None:
        """First pair (by index) without a greatest lower bound."""
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.meet_idx(i, j) is None:
                    return self.names[i], self.names[j]
        return None

    @cached_property
    def _is_meet_semilattice(self) -> bool:
        return self.first_meetless_pair() is None

    def is_meet_semilattice(self) -> bool:
        return self._is_meet_semilattice

    @cached_property
    def _is_lattice(self) -> bool:
        if not self._is_meet_semilattice:
            return False
        return all(
            self.join_idx(i, j) is not None
            for i in range(self.n)
            for j in range(i + 1, self.n)
        )

    def is_lattice(self) -> bool:
        return self._is_lattice

    @cached_property
    def atoms_mask(self) -> int:
        b = self.bottom_idx
        if b is None:
            raise NoBottomError("atoms need a least element")
        mask = 0
        for i in range(self.n):
            if i != b and self.down[i] == (1 << i) | (1 << b):
                mask |= 1 << i
        return mask

    def atoms(self) -> ElementSet:
        """Elements covering the bottom."""
        return ElementSet(self, self.atoms_mask)

    def is_atomic(self) -> bool:
        """Every nonbottom element dominates an atom (always true on finite carriers)."""
        b = self.bottom_idx
        amask = self.atoms_mask
        for i in range(self.n):
            if i != b and self.down[i] & amask == 0:
                return False
        return True

    # -- covers and restriction ---------------------------------------------

    def transitive_reduction(self) -> list[tuple[str, str]]:
        """Minimal pair list whose reflexive-transitive closure is the order.

        Pairs come out sorted by element index, so the output is stable across
        runs and round-trips through :func:`build_poset`.
        """
        out = []
        for i in range(self.n):
            for j in range(self.n):
                if i != j and self.leq_idx(i, j):
                    if self.down[j] & self.up[i] == (1 << i) | (1 << j):
                        out.append((self.names[i], self.names[j]))
        return out

    def induced(self, members: ElementSet) -> Poset:
        """Restriction of the order to a subset, labels preserved."""
        keep = list(bits(members.mask))
        pos = {old: new for new, old in enumerate(keep)}
        names = tuple(self.names[i] for i in keep)
        down = []
        for i in keep:
            m = 0
            for j in bits(self.down[i] & members.mask):
                m |= 1 << pos[j]
            down.append(m)
        return Poset(names, down, validate=False)


@dataclass(frozen=True)
class ElementSet:
    """A subset of a poset's carrier with bitmask semantics."""

    poset: Poset
    mask: int

    def __post_init__(self):
        if self.mask & ~self.poset.full:
            raise ValueError("subset leaves the carrier")

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(bits(self.mask))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.poset.names[i] for i in bits(self.mask))

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, label: str) -> bool:
        return bool((self.mask >> self.poset._i(label)) & 1)

    def __and__(self, other: ElementSet) -> ElementSet:
        self._check_universe(other)
        return ElementSet(self.poset, self.mask & other.mask)

    def __or__(self, other: ElementSet) -> ElementSet:
        self._check_universe(other)
        return ElementSet(self.poset, self.mask | other.mask)

    def __le__(self, other: ElementSet) -> bool:
        self._check_universe(other)
        return self.mask & ~other.mask == 0

    def _check_universe(self, other: ElementSet) -> None:
        if self.poset is not other.poset and self.poset != other.poset:
            raise ValueError("element sets live in different posets")

    def __repr__(self) -> str:
        return "{" + ",".join(self.labels) + "}"


@dataclass(frozen=True)
class BoundsReport:
    """Bound cones of a subset; meet/join are present iff they exist."""

    lower: ElementSet
    upper: ElementSet
    meet: str | None
    join: str | None


def build_poset(
    names: Iterable[str],
    relation_pairs: Iterable[tuple[str, str]],
    *,
    cap: int | None = None,
) -> Poset:
    """Build a poset from arbitrary order assertions.

    ``relation_pairs`` entries ``(x, y)`` assert ``x <= y``; they may be cover
    edges or any mix of chains, and the builder closes them transitively.
    Self-pairs are accepted as no-ops (reflexivity is implicit).

    Raises:
        DuplicateLabelError: a label repeats.
        UnknownLabelError: a pair mentions a label outside ``names``.
        CycleDetectedError: the closure would break antisymmetry.
        SizeLimitError: more elements than the carrier cap.
    """
    names = tuple(names)
    limit = carrier_cap() if cap is None else cap
    if len(names) > limit:
        raise SizeLimitError(f"{len(names)} elements exceed the carrier cap {limit}")
    index: dict[str, int] = {}
    for x in names:
        if x in index:
            raise DuplicateLabelError(f"duplicate element {x!r}")
        index[x] = len(index)
    n = len(names)
    succ: list[set[int]] = [set() for _ in range(n)]
    for x, y in relation_pairs:
        if x not in index:
            raise UnknownLabelError(f"unknown element {x!r} in relation pair")
        if y not in index:
            raise UnknownLabelError(f"unknown element {y!r} in relation pair")
        if x != y:
            succ[index[x]].add(index[y])

    up = [1 << i for i in range(n)]
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = up[i]
            for j in succ[i]:
                acc |= up[j]
            if acc != up[i]:
                up[i] = acc
                changed = True
    for i in range(n):
        for j in bits(up[i]):
            if j != i and (up[j] >> i) & 1:
                raise CycleDetectedError(
                    f"cycle through {names[i]!r} and {names[j]!r}"
                )
    down = [0] * n
    for i in range(n):
        for j in bits(up[i]):
            down[j] |= 1 << i
    return Poset(names, down, validate=False)


def direct_product(p1: Poset, p2: Poset, *, cap: int | None = None) -> Poset:
    """Componentwise-ordered product; labels are the joined pairs "l1,l2"."""
    limit = carrier_cap() if cap is None else cap
    n = p1.n * p2.n
    if n > limit:
        raise SizeLimitError(f"product carrier {n} exceeds the cap {limit}")
    n2 = p2.n
    # Index of the pair (i, j) is i * n2 + j.
    names = [f"{a},{b}" for a in p1.names for b in p2.names]
    down = []
    for i in range(p1.n):
        for j in range(p2.n):
            m = 0
            for a in bits(p1.down[i]):
                m |= p2.down[j] << (a * n2)
            down.append(m)
    return Poset(names, down, validate=False)
