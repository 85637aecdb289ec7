"""Orthogonality derived from the order, and the lattice of closed subsets.

Two elements are orthogonal when their only common lower bound is the bottom.
On a meet-semilattice that is the familiar ``x ∧ y = 0``; on a poset with
pseudocomplements it is ``y <= x*``; the common-lower-bound form covers both
without requiring meets to exist.

For a subset A, ``A^⊥`` collects the elements orthogonal to everything in A.
The operator ``A -> A^⊥⊥`` is a closure operator (the maps form a Galois
connection), and the closed subsets, ordered by inclusion, form a complete
ortholattice: meet is intersection, join is the closure of the union, and
``^⊥`` is the orthocomplementation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import NoBottomError
from .poset import ElementSet, Poset, bits


class OrthoSpace:
    """A poset with bottom together with its derived orthogonality relation."""

    def __init__(self, poset: Poset, perp_single: tuple[int, ...]):
        self.poset = poset
        self.perp_single = perp_single

    def orthogonal(self, x: str, y: str) -> bool:
        return bool((self.perp_single[self.poset._i(x)] >> self.poset._i(y)) & 1)

    def perp_mask(self, mask: int) -> int:
        acc = self.poset.full
        for i in bits(mask):
            acc &= self.perp_single[i]
        return acc

    def perp(self, aset: ElementSet) -> ElementSet:
        """The set of elements orthogonal to every member of ``aset``."""
        return ElementSet(self.poset, self.perp_mask(aset.mask))

    def is_closed_mask(self, mask: int) -> bool:
        return self.perp_mask(self.perp_mask(mask)) == mask

    def is_closed(self, aset: ElementSet) -> bool:
        return self.is_closed_mask(aset.mask)

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        """All closed subsets, canonically ordered.

        The family is the intersection closure of the single-element perps
        together with the full carrier; on a finite carrier pairwise
        intersection to a fixpoint realises closure under arbitrary
        intersections.  Order: ascending cardinality, then lexicographic by
        member indices.
        """
        family = set(self.perp_single)
        family.add(self.poset.full)
        work = list(family)
        while work:
            x = work.pop()
            for y in list(family):
                z = x & y
                if z not in family:
                    family.add(z)
                    work.append(z)
        return tuple(sorted(family, key=lambda m: (m.bit_count(), tuple(bits(m)))))

    def closed_sets(self) -> list[ElementSet]:
        return [ElementSet(self.poset, m) for m in self.closed_masks]

    def closure_lattice(self) -> ClosedSetLattice:
        return closure_lattice(self)


def ortho_from_meet(p: Poset) -> OrthoSpace:
    """Derive orthogonality on a poset with bottom.

    ``x ⊥ y`` iff the common lower bounds of x and y are exactly the bottom.

    Raises:
        NoBottomError: the poset has no least element.
    """
    b = p.bottom_idx
    if b is None:
        raise NoBottomError("orthogonality needs a least element")
    zero = 1 << b
    perp = []
    for i in range(p.n):
        di = p.down[i]
        m = 0
        for j in range(p.n):
            if di & p.down[j] == zero:
                m |= 1 << j
        perp.append(m)
    return OrthoSpace(p, tuple(perp))


class ClosedSetLattice:
    """The complete ortholattice of closed subsets, ordered by inclusion."""

    _JOIN_CACHE_LIMIT = 1024

    def __init__(self, space: OrthoSpace, masks: tuple[int, ...], orthomap: tuple[int, ...]):
        self.space = space
        self.masks = masks
        self.orthomap = orthomap
        self._pos = {m: k for k, m in enumerate(masks)}
        self._joins: dict[tuple[int, int], int] = {}

    def __len__(self) -> int:
        return len(self.masks)

    def sets(self) -> list[ElementSet]:
        return [ElementSet(self.space.poset, m) for m in self.masks]

    def set_label(self, k: int) -> str:
        names = self.space.poset.names
        return "{" + ",".join(names[i] for i in bits(self.masks[k])) + "}"

    def position(self, aset: ElementSet) -> int | None:
        return self._pos.get(aset.mask)

    def position_of_mask(self, mask: int) -> int | None:
        return self._pos.get(mask)

    def leq(self, i: int, j: int) -> bool:
        return self.masks[i] & ~self.masks[j] == 0

    def meet(self, i: int, j: int) -> int:
        return self._pos[self.masks[i] & self.masks[j]]

    def join(self, i: int, j: int) -> int:
        """Join is the double perp of the union, computed lazily."""
        key = (i, j) if i <= j else (j, i)
        got = self._joins.get(key)
        if got is not None:
            return got
        union = self.masks[i] | self.masks[j]
        out = self._pos[self.space.perp_mask(self.space.perp_mask(union))]
        if len(self.masks) <= self._JOIN_CACHE_LIMIT:
            self._joins[key] = out
        return out

    def ortho(self, i: int) -> int:
        return self.orthomap[i]

    @property
    def bottom_index(self) -> int:
        return 0

    @property
    def top_index(self) -> int:
        return len(self.masks) - 1

    @cached_property
    def _poset(self) -> Poset:
        names = [self.set_label(k) for k in range(len(self.masks))]
        down = []
        for k, m in enumerate(self.masks):
            dm = 0
            for l, other in enumerate(self.masks):
                if other & ~m == 0:
                    dm |= 1 << l
            down.append(dm)
        return Poset(names, down, validate=False)

    def as_poset(self) -> Poset:
        """The lattice as a plain poset whose labels spell out the closed sets."""
        return self._poset


def closure_lattice(space: OrthoSpace) -> ClosedSetLattice:
    """Enumerate the closed subsets and pair each with its orthocomplement."""
    masks = space.closed_masks
    pos = {m: k for k, m in enumerate(masks)}
    orthomap = tuple(pos[space.perp_mask(m)] for m in masks)
    return ClosedSetLattice(space, masks, orthomap)


@dataclass(frozen=True)
class LawFailure:
    law: str
    witness: tuple[str, ...]


@dataclass(frozen=True)
class OrtholatticeReport:
    ok: bool
    failures: tuple[LawFailure, ...]


def verify_ortholattice(lat: ClosedSetLattice) -> OrtholatticeReport:
    """Check the ortholattice laws on a closed-set lattice.

    Verifies that the orthocomplement map is an involution, antitone, and a
    complementation (A ∨ A^⊥ is the top, A ∩ A^⊥ the bottom), and that both
    De Morgan laws hold.  Failures are reported with the first counterexample
    per law rather than raised.
    """
    failures: list[LawFailure] = []
    n = len(lat)
    omap = lat.orthomap

    def first(law: str, witness: tuple[str, ...]) -> None:
        if not any(f.law == law for f in failures):
            failures.append(LawFailure(law, witness))

    for i in range(n):
        if omap[omap[i]] != i:
            first("involution", (lat.set_label(i),))
            break
    for i in range(n):
        broken = False
        for j in range(n):
            if lat.leq(i, j) and not lat.leq(omap[j], omap[i]):
                first("antitone", (lat.set_label(i), lat.set_label(j)))
                broken = True
                break
        if broken:
            break
    bottom_mask = lat.masks[lat.bottom_index]
    for i in range(n):
        if lat.join(i, omap[i]) != lat.top_index:
            first("complement-join", (lat.set_label(i),))
            break
        if lat.masks[i] & lat.masks[omap[i]] != bottom_mask:
            first("complement-meet", (lat.set_label(i),))
            break
    for i in range(n):
        broken = False
        for j in range(n):
            if omap[lat.join(i, j)] != lat.meet(omap[i], omap[j]):
                first("de-morgan-join", (lat.set_label(i), lat.set_label(j)))
                broken = True
                break
            if omap[lat.meet(i, j)] != lat.join(omap[i], omap[j]):
                first("de-morgan-meet", (lat.set_label(i), lat.set_label(j)))
                broken = True
                break
        if broken:
            break
    return OrtholatticeReport(ok=not failures, failures=tuple(failures))
