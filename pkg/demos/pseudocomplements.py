"""Pseudocomplement tables, skeletons, and the Boolean algebra on a skeleton.

Run:  python demos/pseudocomplements.py
"""

from orthoposet import fixture, is_boolean, pseudo_structure

# The pseudocomplement of x is the greatest element meeting x only in 0.
# L2 (the pentagon) has one: note that a and c share the same star b.
for name in ("L2", "L3"):
    p = fixture(name).build()
    ps = pseudo_structure(p)
    table = ps.star_table()
    print(f"{name}:  x  = {' '.join(p.names)}")
    print(f"      x* = {' '.join(table[x] for x in p.names)}")
    print(f"      skeleton = {ps.skeleton()}")

    # The skeleton carries a Boolean algebra: meet from the order, join
    # defined by x | y = (x* ^ y*)*, complement the star map itself.
    alg = ps.glivenko()
    print(f"      skeleton algebra: {len(alg)} elements, Boolean = {is_boolean(alg.as_poset())}")
    print()

# The join genuinely needs the detour through stars: in L2 the skeleton
# elements b and c join to 1 even though their base join is also 1.
alg = pseudo_structure(fixture("L2").build()).glivenko()
print(f"in the L2 skeleton algebra: b | c = {alg.join('b', 'c')}, b ^ c = {alg.meet('b', 'c')}")
print(f"complement of b is {alg.complement_of('b')}")

# P8 is not even a lattice, yet it is pseudocomplemented, its skeleton
# {0,c,f,1} is a meet-semilattice, and every subset of the skeleton has a
# base infimum agreeing with the skeleton infimum.
p8 = fixture("P8").build()
ps8 = pseudo_structure(p8)
print(f"\nP8 skeleton = {ps8.skeleton()}, compatibility = {ps8.check_compatibility().ok}")
