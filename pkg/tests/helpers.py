"""Shared test oracles, deliberately independent of the library's fast paths.

Everything here is brute force: closed sets by scanning all 2^n subsets,
isomorphism by scanning permutations, and unlabeled poset counting by
canonical forms over invariant-sorted relabelings.
"""

from __future__ import annotations

from itertools import permutations, product

from orthoposet import Poset, bits, build_poset


def brute_perp_mask(space, mask: int) -> int:
    """Perp straight from the definition: keep x orthogonal to every member."""
    p = space.poset
    out = 0
    for x in range(p.n):
        if all(
            space.orthogonal(p.names[x], p.names[y]) for y in bits(mask)
        ):
            out |= 1 << x
    return out


def brute_closed_masks(space) -> list[int]:
    """All masks with A^perp^perp == A, canonically ordered."""
    p = space.poset
    out = [
        m
        for m in range(1 << p.n)
        if space.perp_mask(space.perp_mask(m)) == m
    ]
    out.sort(key=lambda m: (m.bit_count(), tuple(bits(m))))
    return out


def brute_isomorphic(p1: Poset, p2: Poset) -> bool:
    """Permutation-scan isomorphism test."""
    n = p1.n
    if p2.n != n:
        return False
    for perm in permutations(range(n)):
        if all(
            p1.leq_idx(i, j) == p2.leq_idx(perm[i], perm[j])
            for i in range(n)
            for j in range(n)
        ):
            return True
    return False


def _strict_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _canonical_relation(n: int, rel: frozenset[tuple[int, int]]) -> tuple:
    """Exact canonical form of a strict order on 0..n-1.

    Elements are first sorted by (strict-down-size, strict-up-size) into fixed
    position ranges; the form is then the minimum relation tuple over all
    relabelings permuting only within a range.  Isomorphisms preserve the
    invariant, so isomorphic relations share the form.
    """
    dn = [0] * n
    up = [0] * n
    for a, b in rel:
        dn[b] += 1
        up[a] += 1
    inv = [(dn[i], up[i]) for i in range(n)]
    keys = sorted(set(inv))
    blocks = {k: [i for i in range(n) if inv[i] == k] for k in keys}
    slots = {}
    pos = 0
    for k in keys:
        slots[k] = list(range(pos, pos + len(blocks[k])))
        pos += len(blocks[k])
    best = None
    for parts in product(*(permutations(blocks[k]) for k in keys)):
        newpos = {}
        for k, part in zip(keys, parts):
            for member, slot in zip(part, slots[k]):
                newpos[member] = slot
        img = tuple(sorted((newpos[a], newpos[b]) for a, b in rel))
        if best is None or img < best:
            best = img
    return best


def brute_unlabeled_poset_count(n: int) -> int:
    """Count posets on n elements up to isomorphism.

    Scans every strict upper-triangular relation (each poset has a linear
    extension, so this covers all of them), keeps the transitive ones, and
    deduplicates by canonical form.
    """
    pairs = _strict_pairs(n)
    forms = set()
    for sel in range(1 << len(pairs)):
        rel = frozenset(pairs[t] for t in range(len(pairs)) if (sel >> t) & 1)
        ok = True
        for a, b in rel:
            for c, d in rel:
                if b == c and (a, d) not in rel:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            forms.add(_canonical_relation(n, rel))
    return len(forms)


def ensure_bottom(p: Poset) -> Poset:
    """Adjoin a fresh bottom when the poset has none."""
    if p.bottom_idx is not None:
        return p
    pairs = list(p.transitive_reduction())
    pairs.extend(("bot", x) for x in p.names)
    return build_poset(("bot",) + p.names, pairs)
