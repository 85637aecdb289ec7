"""Pseudocomplements, the skeleton of pseudocomplement images, and the
Glivenko Boolean algebra living on that skeleton.

The pseudocomplement of x is the greatest element whose only common lower
bound with x is the bottom.  The image of the star map (the skeleton) carries
a Boolean algebra whenever it is a meet-semilattice under the restricted
order, with join ``x ⊔ y = (x* ∧ y*)*``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import NoBottomError, NotBoundedError, SkeletonTooLargeError
from .poset import ElementSet, Poset, bits

COMPATIBILITY_CAP = 20


def _ortho_row(p: Poset, i: int, zero: int) -> int:
    row = 0
    di = p.down[i]
    for j in range(p.n):
        if di & p.down[j] == zero:
            row |= 1 << j
    return row


def pseudocomplement(p: Poset, x: str) -> str | None:
    """Greatest element orthogonal to ``x``, or None when there is none.

    Raises:
        NoBottomError: orthogonality is undefined without a least element.
    """
    b = p.bottom_idx
    if b is None:
        raise NoBottomError("pseudocomplements need a least element")
    row = _ortho_row(p, p._i(x), 1 << b)
    g = p.greatest_of(row)
    return p.names[g] if g is not None else None


def pseudo_structure(p: Poset) -> PseudoStructure | None:
    """Star map and skeleton of a bounded poset, or None if some element
    has no pseudocomplement.

    Raises:
        NotBoundedError: the poset lacks a least or a greatest element.
    """
    if not p.is_bounded():
        raise NotBoundedError("pseudocomplemented posets are bounded")
    zero = 1 << p.bottom_idx
    star = []
    for i in range(p.n):
        g = p.greatest_of(_ortho_row(p, i, zero))
        if g is None:
            return None
        star.append(g)
    return PseudoStructure(p, tuple(star))


class PseudoStructure:
    """A bounded poset together with its total pseudocomplement map."""

    def __init__(self, poset: Poset, star: tuple[int, ...]):
        self.poset = poset
        self.star = star
        mask = 0
        for s in star:
            mask |= 1 << s
        self.skeleton_mask = mask

    def star_of(self, x: str) -> str:
        return self.poset.names[self.star[self.poset._i(x)]]

    def star_table(self) -> dict[str, str]:
        return {self.poset.names[i]: self.poset.names[s] for i, s in enumerate(self.star)}

    def skeleton(self) -> ElementSet:
        """The image of the star map; always contains bottom and top."""
        return ElementSet(self.poset, self.skeleton_mask)

    @cached_property
    def _skeleton_poset(self) -> Poset:
        return self.poset.induced(self.skeleton())

    def skeleton_poset(self) -> Poset:
        """Restriction of the base order to the pseudocomplement image."""
        return self._skeleton_poset

    def star_of_set(self, aset: ElementSet) -> ElementSet:
        """The image {a* | a in A} as a subset of the base carrier."""
        m = 0
        for i in bits(aset.mask):
            m |= 1 << self.star[i]
        return ElementSet(self.poset, m)

    def inf_star_law(self, aset: ElementSet) -> InfStarCheck:
        """Whenever the join of A exists, the meet of A* exists and equals
        the star of that join."""
        p = self.poset
        j = p.least_of(p.upper_mask(aset.mask))
        if j is None:
            return InfStarCheck(applicable=False, holds=True, join=None,
                                inf_of_stars=None, expected=None)
        stars = self.star_of_set(aset)
        m = p.greatest_of(p.lower_mask(stars.mask))
        expected = self.star[j]
        holds = m is not None and m == expected
        return InfStarCheck(
            applicable=True,
            holds=holds,
            join=p.names[j],
            inf_of_stars=p.names[m] if m is not None else None,
            expected=p.names[expected],
        )

    def glivenko(self) -> GlivenkoAlgebra | None:
        """Boolean algebra on the skeleton, or None when the skeleton is not
        a meet-semilattice under the restricted order.

        Meets are greatest lower bounds taken within the skeleton; the join is
        ``x ⊔ y = (x* ∧ y*)*`` and the complement is the restricted star map.
        The construction double-checks that the result is Boolean and that the
        join table agrees with least upper bounds in the skeleton order.
        """
        p = self.poset
        sk = sorted(bits(self.skeleton_mask))
        pos = {e: k for k, e in enumerate(sk)}
        size = len(sk)
        meet_t: list[tuple[int, ...]] = []
        for a in sk:
            row = []
            for b in sk:
                lower = p.down[a] & p.down[b] & self.skeleton_mask
                g = p.greatest_of(lower)
                if g is None:
                    return None
                row.append(pos[g])
            meet_t.append(tuple(row))
        comp = tuple(pos[self.star[e]] for e in sk)
        join_t = []
        for i in range(size):
            row = []
            for j in range(size):
                row.append(comp[meet_t[comp[i]][comp[j]]])
            join_t.append(tuple(row))
        alg = GlivenkoAlgebra(
            skeleton=self._skeleton_poset,
            meet_table=tuple(meet_t),
            join_table=tuple(join_t),
            complement=comp,
        )
        alg._verify()
        return alg

    def check_compatibility(self, cap: int = COMPATIBILITY_CAP) -> CompatibilityReport:
        """Exhaustively test that every subset of the skeleton has an infimum
        in the base poset that coincides with its infimum in the skeleton.

        The scan is exponential in the skeleton size, so it refuses to run
        past ``cap`` elements rather than silently sampling.

        Raises:
            SkeletonTooLargeError: skeleton larger than ``cap``.
        """
        p = self.poset
        sk = list(bits(self.skeleton_mask))
        if len(sk) > cap:
            raise SkeletonTooLargeError(
                f"skeleton has {len(sk)} elements, cap is {cap}"
            )
        for r in range(len(sk) + 1):
            for combo in combinations(sk, r):
                sub = 0
                for e in combo:
                    sub |= 1 << e
                lower = p.lower_mask(sub)
                inf_base = p.greatest_of(lower)
                inf_sk = p.greatest_of(lower & self.skeleton_mask)
                if inf_base is not None and inf_base == inf_sk:
                    continue
                subset_labels = tuple(p.names[e] for e in combo)
                if inf_sk is None:
                    return CompatibilityReport(
                        ok=False, subset=subset_labels, stray=None,
                        reason="no greatest lower bound within the skeleton",
                    )
                stray = None
                for m in p.maximal_of(lower):
                    if not p.leq_idx(m, inf_sk):
                        stray = p.names[m]
                        break
                return CompatibilityReport(
                    ok=False, subset=subset_labels, stray=stray,
                    reason="base infimum missing or off the skeleton infimum",
                )
        return CompatibilityReport(ok=True, subset=None, stray=None, reason=None)


@dataclass(frozen=True)
class InfStarCheck:
    applicable: bool
    holds: bool
    join: str | None
    inf_of_stars: str | None
    expected: str | None


@dataclass(frozen=True)
class CompatibilityReport:
    ok: bool
    subset: tuple[str, ...] | None
    stray: str | None
    reason: str | None


class GlivenkoAlgebra:
    """Boolean algebra on a skeleton: meet, join ``(x* ∧ y*)*``, and the
    star map as complementation."""

    def __init__(
        self,
        skeleton: Poset,
        meet_table: tuple[tuple[int, ...], ...],
        join_table: tuple[tuple[int, ...], ...],
        complement: tuple[int, ...],
    ):
        self.skeleton = skeleton
        self.meet_table = meet_table
        self.join_table = join_table
        self.complement = complement

    def __len__(self) -> int:
        return self.skeleton.n

    @property
    def carrier(self) -> tuple[str, ...]:
        return self.skeleton.names

    def meet(self, x: str, y: str) -> str:
        sk = self.skeleton
        return sk.names[self.meet_table[sk._i(x)][sk._i(y)]]

    def join(self, x: str, y: str) -> str:
        sk = self.skeleton
        return sk.names[self.join_table[sk._i(x)][sk._i(y)]]

    def complement_of(self, x: str) -> str:
        sk = self.skeleton
        return sk.names[self.complement[sk._i(x)]]

    def as_poset(self) -> Poset:
        return self.skeleton

    def _verify(self) -> None:
        sk = self.skeleton
        n = sk.n
        bot = sk.bottom_idx
        top = sk.top_idx
        if bot is None or top is None:
            raise RuntimeError("skeleton algebra is not bounded")
        for i in range(n):
            for j in range(n):
                if self.join_table[i][j] != sk.join_idx(i, j):
                    raise RuntimeError("join table disagrees with the skeleton order")
                if self.meet_table[i][j] != sk.meet_idx(i, j):
                    raise RuntimeError("meet table disagrees with the skeleton order")
        for i in range(n):
            c = self.complement[i]
            if self.meet_table[i][c] != bot or self.join_table[i][c] != top:
                raise RuntimeError("star restriction is not a complementation")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    lhs = self.meet_table[a][self.join_table[b][c]]
                    rhs = self.join_table[self.meet_table[a][b]][self.meet_table[a][c]]
                    if lhs != rhs:
                        raise RuntimeError("skeleton algebra is not distributive")
