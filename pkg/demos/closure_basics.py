"""Walk through orthogonality and closed subsets on a small lattice.

Run:  python demos/closure_basics.py
"""

from orthoposet import closure_lattice, fixture, ortho_from_meet, verify_ortholattice

# L1 is a 9-element lattice with atoms a, b, d.  Two elements are orthogonal
# when their only common lower bound is 0.
L1 = fixture("L1").build()
space = ortho_from_meet(L1)

print("single-element perps of L1:")
for x in L1.names:
    print(f"  {x}^perp = {space.perp(L1.subset([x]))}")

# The perp of a subset is the intersection of the single-element perps.
ab = L1.subset(["a", "b"])
print(f"\n{{a,b}}^perp = {space.perp(ab)}")

# A set is closed when taking perp twice gives it back.  {a} is not closed:
# its closure is the down-set of a.
a = L1.subset(["a"])
print(f"{{a}} closed? {space.is_closed(a)}; closure = {space.perp(space.perp(a))}")

# All closed subsets, ordered by cardinality.  They form a complete
# ortholattice: meet is intersection, join is the closure of the union,
# and perp is an orthocomplementation.
print(f"\nclosed subsets of L1 ({len(space.closed_sets())}):")
for s in space.closed_sets():
    print(f"  {s}")

lat = closure_lattice(space)
report = verify_ortholattice(lat)
print(f"\northolattice laws hold: {report.ok}")
print("orthocomplement pairs:")
for k in range(len(lat)):
    print(f"  {lat.set_label(k)}  <->  {lat.set_label(lat.ortho(k))}")
