"""The forbidden configuration that keeps a skeleton from being a
meet-semilattice.

Run:  python demos/forbidden_configuration.py
"""

from orthoposet import (
    closure_lattice,
    find_crossing_pattern,
    find_forbidden_configuration,
    fixture,
    is_boolean,
    ortho_from_meet,
    poset_isomorphic,
    pseudo_structure,
)

# P10: four atoms a..d, four coatoms e..h, each coatom covering all atoms but
# one.  The star map pairs them off (a* = h, b* = g, ...), so x** = x and the
# skeleton is the whole poset.
P10 = fixture("P10").build()
ps = pseudo_structure(P10)
print("star table:", ps.star_table())

sk = ps.skeleton_poset()
print("skeleton is a meet-semilattice:", sk.is_meet_semilattice())
print("first meetless pair:", sk.first_meetless_pair())

# The failure is witnessed by eight elements forming the forbidden
# configuration: a meetless pair, two of its maximal lower bounds, and the
# mirror images of both pairs under the star involution.
cfg = find_forbidden_configuration(sk)
print("\nforbidden configuration:")
for role, members in cfg.as_dict().items():
    print(f"  {role}: {members}")

# Its four-element shadow: the meetless pair over two incomparable common
# lower bounds.
pat = find_crossing_pattern(sk)
print(f"crossing pattern: upper {pat.upper} over lower {pat.lower}")

# Despite the broken skeleton, the closed subsets still form a Boolean
# algebra - a 16-element one, isomorphic to the powerset of a 4-element set.
lat = closure_lattice(ortho_from_meet(P10))
print(f"\nclosed subsets: {len(lat)}")
print("closure lattice Boolean:", is_boolean(lat.as_poset()))
print(
    "isomorphic to B(4):",
    poset_isomorphic(lat.as_poset(), fixture("B(4)").build()) is not None,
)
