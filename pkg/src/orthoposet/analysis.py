"""Structure recognition and classification.

Distributivity and Boolean checks, the powerset isomorphism for atomic
meet-semilattices, the eight-element forbidden configuration whose presence in
a pseudocomplement skeleton is equivalent to the skeleton not being a
meet-semilattice, small-scale poset isomorphism, corpus generation, and a
composite analyzer that runs everything applicable to one poset.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import (
    NoBottomError,
    NotALatticeError,
    NotAtomicError,
    NotMeetSemilatticeError,
    SizeLimitError,
)
from .ortho import ClosedSetLattice, OrthoSpace, closure_lattice, ortho_from_meet
from .poset import Poset, bits, carrier_cap, direct_product
from .pseudo import COMPATIBILITY_CAP, PseudoStructure, pseudo_structure

ISO_CAP = 64
BOOLEAN_CHECK_CAP = 128

PASS = "pass"
FAIL = "fail"
HYPOTHESIS_NOT_MET = "hypothesis-not-met"


def _as_poset(obj) -> Poset:
    return obj if isinstance(obj, Poset) else obj.as_poset()


# -- distributivity and Boolean recognition --------------------------------


def distributivity_counterexample(l) -> tuple[str, str, str] | None:
    """First triple (x, y, z) with x∧(y∨z) != (x∧y)∨(x∧z), or None.

    Raises:
        NotALatticeError: some pair lacks a meet or a join.
    """
    p = _as_poset(l)
    if not p.is_lattice():
        raise NotALatticeError("distributivity needs total meet and join tables")
    n = p.n
    meet = [[p.meet_idx(i, j) for j in range(n)] for i in range(n)]
    join = [[p.join_idx(i, j) for j in range(n)] for i in range(n)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]]:
                    return (p.names[a], p.names[b], p.names[c])
    return None


def is_distributive(l) -> bool:
    return distributivity_counterexample(l) is None


def is_boolean(l) -> bool:
    """Bounded, distributive, and every element has a complement."""
    p = _as_poset(l)
    if not p.is_lattice():
        raise NotALatticeError("Boolean recognition needs a lattice")
    if not p.is_bounded():
        return False
    if distributivity_counterexample(p) is not None:
        return False
    bot, top = p.bottom_idx, p.top_idx
    for i in range(p.n):
        if not any(
            p.meet_idx(i, j) == bot and p.join_idx(i, j) == top for j in range(p.n)
        ):
            return False
    return True


# -- isomorphism -------------------------------------------------------------


@dataclass(frozen=True)
class IsoWitness:
    """An order isomorphism, stored as an index map with its inverse."""

    source: Poset
    target: Poset
    forward: tuple[int, ...]

    @property
    def inverse(self) -> tuple[int, ...]:
        inv = [0] * len(self.forward)
        for i, j in enumerate(self.forward):
            inv[j] = i
        return tuple(inv)

    def label_map(self) -> dict[str, str]:
        return {
            self.source.names[i]: self.target.names[j]
            for i, j in enumerate(self.forward)
        }

    def verify(self) -> bool:
        """Bijectivity plus order preservation in both directions, all pairs."""
        n = self.source.n
        if self.target.n != n or len(set(self.forward)) != n:
            return False
        for i in range(n):
            for j in range(n):
                if self.source.leq_idx(i, j) != self.target.leq_idx(
                    self.forward[i], self.forward[j]
                ):
                    return False
        return True


def _element_invariants(p: Poset) -> list[tuple[int, int, int, int, int, int]]:
    """Per-element (|down|, |up|, covers below, covers above, height, depth)."""
    n = p.n
    cov_dn = [0] * n
    cov_up = [0] * n
    for i in range(n):
        for j in bits(p.up[i] & ~(1 << i)):
            if p.down[j] & p.up[i] == (1 << i) | (1 << j):
                cov_up[i] += 1
                cov_dn[j] += 1
    order = sorted(range(n), key=lambda i: p.down[i].bit_count())
    height = [0] * n
    for i in order:
        below = p.down[i] & ~(1 << i)
        height[i] = 1 + max((height[j] for j in bits(below)), default=0)
    depth = [0] * n
    for i in sorted(range(n), key=lambda i: p.up[i].bit_count()):
        above = p.up[i] & ~(1 << i)
        depth[i] = 1 + max((depth[j] for j in bits(above)), default=0)
    return [
        (
            p.down[i].bit_count(),
            p.up[i].bit_count(),
            cov_dn[i],
            cov_up[i],
            height[i],
            depth[i],
        )
        for i in range(n)
    ]


def poset_isomorphic(p1: Poset, p2: Poset) -> IsoWitness | None:
    """Backtracking isomorphism search with invariant pruning.

    Elements only map to elements with the same (down-set size, up-set size,
    cover degrees, height, depth) signature; vertices are assigned scarcest
    first, candidates in index order, so the first witness is deterministic.

    Raises:
        SizeLimitError: either carrier exceeds 64 elements.
    """
    if p1.n > ISO_CAP or p2.n > ISO_CAP:
        raise SizeLimitError(f"isomorphism search capped at {ISO_CAP} elements")
    if p1.n != p2.n:
        return None
    inv1 = _element_invariants(p1)
    inv2 = _element_invariants(p2)
    if sorted(inv1) != sorted(inv2):
        return None
    n = p1.n
    candidates = [[j for j in range(n) if inv2[j] == inv1[i]] for i in range(n)]
    order = sorted(range(n), key=lambda i: (len(candidates[i]), i))
    mapping = [-1] * n
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        i = order[k]
        for j in candidates[i]:
            if used[j]:
                continue
            ok = True
            for t in range(k):
                a = order[t]
                b = mapping[a]
                if p1.leq_idx(a, i) != p2.leq_idx(b, j) or p1.leq_idx(i, a) != p2.leq_idx(j, b):
                    ok = False
                    break
            if ok:
                mapping[i] = j
                used[j] = True
                if extend(k + 1):
                    return True
                mapping[i] = -1
                used[j] = False
        return False

    if not extend(0):
        return None
    return IsoWitness(p1, p2, tuple(mapping))


# -- the powerset isomorphism on atoms --------------------------------------


def atom_powerset_iso(space: OrthoSpace) -> IsoWitness | None:
    """Isomorphism from the powerset of atoms onto the closure lattice.

    A subset C of atoms maps to the set of elements dominating no atom
    outside C.  The witness is returned only after full verification
    (bijective onto the closed sets, order preserving both ways); None means
    the verification failed.

    Raises:
        NoBottomError, NotMeetSemilatticeError, NotAtomicError: hypothesis
            violations.
        SizeLimitError: more than 2^cap subsets of atoms.
    """
    p = space.poset
    if p.bottom_idx is None:
        raise NoBottomError("atoms need a least element")
    if not p.is_meet_semilattice():
        raise NotMeetSemilatticeError("the powerset map needs all pairwise meets")
    if not p.is_atomic():
        raise NotAtomicError("the powerset map needs an atomic poset")
    atom_idx = list(bits(p.atoms_mask))
    k = len(atom_idx)
    if 1 << k > carrier_cap():
        raise SizeLimitError(f"2^{k} atom subsets exceed the carrier cap")
    subsets = sorted(range(1 << k), key=lambda m: (m.bit_count(), tuple(bits(m))))
    names = [
        "{" + ",".join(p.names[atom_idx[t]] for t in bits(m)) + "}" for m in subsets
    ]
    down = []
    for m in subsets:
        dm = 0
        for l, other in enumerate(subsets):
            if other & ~m == 0:
                dm |= 1 << l
        down.append(dm)
    powerset = Poset(names, down, validate=False)

    lat = space.closure_lattice()
    if len(lat) != len(subsets):
        return None
    forward = []
    for m in subsets:
        outside = 0
        for t, a in enumerate(atom_idx):
            if not (m >> t) & 1:
                outside |= p.up[a]
        image = p.full & ~outside
        pos = lat.position_of_mask(image)
        if pos is None:
            return None
        forward.append(pos)
    witness = IsoWitness(powerset, lat.as_poset(), tuple(forward))
    if not witness.verify():
        return None
    return witness


# -- forbidden configuration -------------------------------------------------


@dataclass(frozen=True)
class ForbiddenConfig:
    """Eight distinct elements witnessing that a pair has no infimum.

    ``meetless`` is a pair with no greatest lower bound and ``maximal_bounds``
    two of its maximal lower bounds.  The mirror pairs echo them on the
    opposite side: both members of ``meetless_mirror`` lie below both members
    of ``bounds_mirror``, and the crossing comparabilities are balanced —
    meetless_mirror[0] < meetless[1] iff meetless_mirror[1] < meetless[0],
    and maximal_bounds[1] < bounds_mirror[0] iff
    maximal_bounds[0] < bounds_mirror[1].  In a pseudocomplement skeleton the
    mirror of an element is its image under the star involution.
    """

    meetless: tuple[str, str]
    maximal_bounds: tuple[str, str]
    meetless_mirror: tuple[str, str]
    bounds_mirror: tuple[str, str]

    def as_dict(self) -> dict[str, list[str]]:
        return {
            "meetless": list(self.meetless),
            "maximal_bounds": list(self.maximal_bounds),
            "meetless_mirror": list(self.meetless_mirror),
            "bounds_mirror": list(self.bounds_mirror),
        }

    def elements(self) -> tuple[str, ...]:
        return (
            self.meetless + self.maximal_bounds + self.meetless_mirror + self.bounds_mirror
        )


@dataclass(frozen=True)
class CrossingPattern:
    """Two incomparable elements with no infimum, above two incomparable
    common lower bounds."""

    upper: tuple[str, str]
    lower: tuple[str, str]

    def as_dict(self) -> dict[str, list[str]]:
        return {"upper": list(self.upper), "lower": list(self.lower)}


def find_forbidden_configuration(sp: Poset) -> ForbiddenConfig | None:
    """Search a (skeleton) poset for the eight-element forbidden configuration.

    The assignment is found by nested index-ascending loops — meetless pair,
    then maximal-lower-bound pair, then the mirror roles — so the first
    witness is deterministic.  When a pair has more than two maximal lower
    bounds, every unordered pair of them is tried.  Bottom and top never play
    a role.  Absence is equivalent to the poset being a meet-semilattice
    (asserted by the test suites, not by this function).
    """
    n = sp.n
    excluded = {sp.bottom_idx, sp.top_idx} - {None}

    def lt(i: int, j: int) -> bool:
        return i != j and sp.leq_idx(i, j)

    for ia in range(n):
        for id_ in range(ia + 1, n):
            lower = sp.down[ia] & sp.down[id_]
            if sp.greatest_of(lower) is not None:
                continue
            mlbs = sp.maximal_of(lower)
            for fi, gi in combinations(mlbs, 2):
                used = {ia, id_, fi, gi}
                for cm1 in range(n):
                    if cm1 in used or cm1 in excluded:
                        continue
                    for cm2 in range(n):
                        if cm2 == cm1 or cm2 in used or cm2 in excluded:
                            continue
                        if lt(gi, cm1) != lt(fi, cm2):
                            continue
                        mirror_lower = sp.down[cm1] & sp.down[cm2]
                        for cu1 in bits(mirror_lower):
                            if cu1 in used or cu1 == cm1 or cu1 == cm2 or cu1 in excluded:
                                continue
                            for cu2 in bits(mirror_lower):
                                if (
                                    cu2 == cu1
                                    or cu2 in used
                                    or cu2 == cm1
                                    or cu2 == cm2
                                    or cu2 in excluded
                                ):
                                    continue
                                if lt(cu1, id_) != lt(cu2, ia):
                                    continue
                                names = sp.names
                                return ForbiddenConfig(
                                    meetless=(names[ia], names[id_]),
                                    maximal_bounds=(names[fi], names[gi]),
                                    meetless_mirror=(names[cu1], names[cu2]),
                                    bounds_mirror=(names[cm1], names[cm2]),
                                )
    return None


def forbidden_config_holds(sp: Poset, cfg: ForbiddenConfig) -> bool:
    """Re-validate a configuration against the order, independently of the
    search loops."""
    idx = [sp._i(x) for x in cfg.elements()]
    ia, id_, fi, gi, cu1, cu2, cm1, cm2 = idx
    if len(set(idx)) != 8:
        return False
    for e in idx:
        if e == sp.bottom_idx or e == sp.top_idx:
            return False
    lower = sp.down[ia] & sp.down[id_]
    if sp.greatest_of(lower) is not None:
        return False
    mlbs = sp.maximal_of(lower)
    if fi not in mlbs or gi not in mlbs:
        return False

    def lt(i: int, j: int) -> bool:
        return i != j and sp.leq_idx(i, j)

    if not (
        sp.leq_idx(cu1, cm1)
        and sp.leq_idx(cu1, cm2)
        and sp.leq_idx(cu2, cm1)
        and sp.leq_idx(cu2, cm2)
        and sp.leq_idx(fi, ia)
        and sp.leq_idx(fi, id_)
        and sp.leq_idx(gi, ia)
        and sp.leq_idx(gi, id_)
    ):
        return False
    if lt(cu1, id_) != lt(cu2, ia):
        return False
    if lt(gi, cm1) != lt(fi, cm2):
        return False
    return True


def find_crossing_pattern(sp: Poset) -> CrossingPattern | None:
    """Search for the reduced four-element pattern: a meetless incomparable
    pair over two incomparable common lower bounds.

    Implied whenever the eight-element configuration is present; absent in
    every meet-semilattice because no pair lacks an infimum there.
    """
    n = sp.n
    bot = sp.bottom_idx
    for iu1 in range(n):
        for iu2 in range(iu1 + 1, n):
            lower = sp.down[iu1] & sp.down[iu2]
            if sp.greatest_of(lower) is not None:
                continue
            low = [i for i in bits(lower) if i != bot]
            for il1, il2 in combinations(low, 2):
                if not sp.leq_idx(il1, il2) and not sp.leq_idx(il2, il1):
                    return CrossingPattern(
                        upper=(sp.names[iu1], sp.names[iu2]),
                        lower=(sp.names[il1], sp.names[il2]),
                    )
    return None


# -- closure lattice of a pseudocomplemented lattice -------------------------


def skeleton_closure_iso(ps: PseudoStructure) -> IsoWitness | None:
    """Isomorphism from the skeleton onto the closure lattice.

    Each pseudocomplement s is sent to its down-set, which is exactly the
    perp of any element whose star is s.  Returns the verified witness, with
    the extra check that the lattice orthocomplement corresponds to the star
    map; None when any verification step fails.
    """
    p = ps.poset
    lat = closure_lattice(ortho_from_meet(p))
    sk_elems = list(bits(ps.skeleton_mask))
    if len(lat) != len(sk_elems):
        return None
    forward = []
    for e in sk_elems:
        pos = lat.position_of_mask(p.down[e])
        if pos is None:
            return None
        forward.append(pos)
    witness = IsoWitness(ps.skeleton_poset(), lat.as_poset(), tuple(forward))
    if not witness.verify():
        return None
    pos_of = {e: t for t, e in enumerate(sk_elems)}
    for t, e in enumerate(sk_elems):
        if lat.orthomap[forward[t]] != forward[pos_of[ps.star[e]]]:
            return None
    return witness


# -- products ----------------------------------------------------------------


@dataclass
class ProductCheck:
    """Outcome of the closed-set product law on a binary product."""

    closed_product_ok: bool
    mismatch: tuple[str, ...] | None
    iso: IsoWitness | None
    iso_checked: bool


def product_closure_check(p1: Poset, p2: Poset, *, cap: int | None = None) -> ProductCheck:
    """Verify that the closed sets of p1 x p2 are exactly the products of
    closed sets of the factors, and (when small enough for the isomorphism
    cap) that the closure lattice of the product is isomorphic to the product
    of the closure lattices.

    Raises:
        SizeLimitError: the product carrier exceeds the cap.
        NoBottomError: a factor has no least element.
    """
    prod = direct_product(p1, p2, cap=cap)
    s1 = ortho_from_meet(p1)
    s2 = ortho_from_meet(p2)
    sp = ortho_from_meet(prod)
    n2 = p2.n
    expected = set()
    for a_mask in s1.closed_masks:
        for b_mask in s2.closed_masks:
            m = 0
            for a in bits(a_mask):
                m |= b_mask << (a * n2)
            expected.add(m)
    got = set(sp.closed_masks)
    ok = expected == got
    mismatch = None
    if not ok:
        diff = min(got.symmetric_difference(expected))
        mismatch = tuple(prod.names[i] for i in bits(diff))
    iso = None
    iso_checked = False
    lat1 = closure_lattice(s1)
    lat2 = closure_lattice(s2)
    if len(lat1) * len(lat2) <= ISO_CAP:
        iso_checked = True
        latp = closure_lattice(sp)
        factor_product = direct_product(lat1.as_poset(), lat2.as_poset(), cap=cap)
        iso = poset_isomorphic(latp.as_poset(), factor_product)
    return ProductCheck(ok, mismatch, iso, iso_checked)


# -- corpora -----------------------------------------------------------------

EXHAUSTIVE_CAP = 7


def generate_posets(n: int, mode: str = "exhaustive", *, seed: int = 0, count: int = 100):
    """Stream posets on n elements.

    Exhaustive mode yields all posets up to isomorphism (n <= 7); random mode
    yields ``count`` transitively closed random orders, reproducible by seed:
    each strict upper-triangular edge is drawn with probability 2/n, so the
    sample covers sparse and dense orders but is not uniform.
    """
    if n < 1:
        raise ValueError("need at least one element")
    if mode == "exhaustive":
        if n > EXHAUSTIVE_CAP:
            raise SizeLimitError(f"exhaustive enumeration capped at {EXHAUSTIVE_CAP}")
        yield from _exhaustive_classes(n)
    elif mode == "random":
        yield from _random_posets(n, seed, count)
    else:
        raise ValueError(f"unknown mode {mode!r}")


def _names(n: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(n))


@lru_cache(maxsize=None)
def _exhaustive_classes(n: int) -> tuple[Poset, ...]:
    """All posets on n elements up to isomorphism.

    Level-by-level: every (k+1)-poset arises from a k-poset by adding a new
    maximal element whose strict down-set is an order ideal, so extending the
    k-element class representatives by every ideal and deduplicating (cheap
    invariant key, then exact isomorphism within buckets) is exhaustive.
    """
    if n == 1:
        return (Poset(("x0",), (1,), validate=False),)
    reps = _exhaustive_classes(n - 1)
    names = _names(n)
    found: list[Poset] = []
    buckets: dict[tuple, list[int]] = {}
    new_bit = 1 << (n - 1)
    for p in reps:
        for ideal in _order_ideals(p):
            q = Poset(names, p.down + (ideal | new_bit,), validate=False)
            key = (q.n, tuple(sorted(_element_invariants(q))))
            bucket = buckets.setdefault(key, [])
            if any(poset_isomorphic(q, found[t]) is not None for t in bucket):
                continue
            bucket.append(len(found))
            found.append(q)
    return tuple(found)


def _order_ideals(p: Poset):
    """All down-closed subsets of the carrier, as masks, ascending."""
    for m in range(1 << p.n):
        if all(p.down[i] & ~m == 0 for i in bits(m)):
            yield m


def _random_posets(n: int, seed: int, count: int):
    rng = random.Random(seed)
    prob = 2.0 / n
    names = _names(n)
    for _ in range(count):
        succ: list[list[int]] = [[] for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < prob:
                    succ[i].append(j)
        up = [1 << i for i in range(n)]
        for i in range(n - 1, -1, -1):
            acc = up[i]
            for j in succ[i]:
                acc |= up[j]
            up[i] = acc
        down = [0] * n
        for i in range(n):
            for j in bits(up[i]):
                down[j] |= 1 << i
        yield Poset(names, tuple(down), validate=False)


# -- the composite analyzer ---------------------------------------------------


@dataclass
class AnalysisReport:
    """Classification flags, sizes, witnesses, and per-theorem verdicts for one
    poset; None marks data whose hypotheses do not apply."""

    flags: dict[str, bool | None]
    sizes: dict[str, int | None]
    star_table: dict[str, str] | None
    closed_sets: tuple[tuple[str, ...], ...] | None
    powerset_iso: IsoWitness | None
    forbidden: ForbiddenConfig | None
    crossing: CrossingPattern | None
    theorems: dict[str, str]


def analyze(p: Poset) -> AnalysisReport:
    """Run every applicable check on one poset.

    Theorem checks whose hypotheses fail are recorded as hypothesis-not-met
    rather than skipped silently.
    """
    has_bottom = p.bottom_idx is not None
    bounded = p.is_bounded()
    ms = p.is_meet_semilattice()
    lattice = p.is_lattice()
    atomic = p.is_atomic() if has_bottom else None

    ps = pseudo_structure(p) if bounded else None
    pseudoc = ps is not None
    skeleton_ms: bool | None = None
    compatibility: bool | None = None
    star_table = None
    sk = None
    if ps is not None:
        sk = ps.skeleton_poset()
        skeleton_ms = sk.is_meet_semilattice()
        star_table = ps.star_table()
        if sk.n <= COMPATIBILITY_CAP:
            compatibility = ps.check_compatibility().ok

    space = ortho_from_meet(p) if has_bottom else None
    lat = closure_lattice(space) if space is not None else None
    closure_boolean = None
    closed_listing = None
    if lat is not None:
        if len(lat) <= BOOLEAN_CHECK_CAP:
            closure_boolean = is_boolean(lat.as_poset())
        closed_listing = tuple(s.labels for s in lat.sets())

    flags = {
        "bounded": bounded,
        "lattice": lattice,
        "meet_semilattice": ms,
        "atomic": atomic,
        "pseudocomplemented": pseudoc,
        "skeleton_meet_semilattice": skeleton_ms,
        "compatibility": compatibility,
        "closure_boolean": closure_boolean,
    }
    sizes = {
        "elements": p.n,
        "atoms": len(p.atoms()) if has_bottom else None,
        "skeleton": sk.n if sk is not None else None,
        "closed_sets": len(lat) if lat is not None else None,
    }

    theorems: dict[str, str] = {}
    powerset_iso = None
    if has_bottom and ms and atomic:
        powerset_iso = atom_powerset_iso(space)
        ok = powerset_iso is not None and len(lat) == 1 << len(p.atoms())
        theorems["t1"] = PASS if ok else FAIL
    else:
        theorems["t1"] = HYPOTHESIS_NOT_MET

    if lattice and pseudoc:
        ok = is_boolean(lat.as_poset()) and skeleton_closure_iso(ps) is not None
        theorems["t2"] = PASS if ok else FAIL
    else:
        theorems["t2"] = HYPOTHESIS_NOT_MET

    if pseudoc and skeleton_ms:
        alg = ps.glivenko()
        theorems["glivenko"] = (
            PASS if alg is not None and is_boolean(alg.as_poset()) else FAIL
        )
    else:
        theorems["glivenko"] = HYPOTHESIS_NOT_MET

    forbidden = None
    crossing = None
    if pseudoc:
        forbidden = find_forbidden_configuration(sk)
        crossing = find_crossing_pattern(sk)
        equivalence = skeleton_ms == (forbidden is None)
        implication = forbidden is None or crossing is not None
        theorems["forbidden"] = PASS if equivalence and implication else FAIL
    else:
        theorems["forbidden"] = HYPOTHESIS_NOT_MET

    return AnalysisReport(
        flags=flags,
        sizes=sizes,
        star_table=star_table,
        closed_sets=closed_listing,
        powerset_iso=powerset_iso,
        forbidden=forbidden,
        crossing=crossing,
        theorems=theorems,
    )
