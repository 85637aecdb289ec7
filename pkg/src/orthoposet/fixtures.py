"""Built-in poset catalog.

The finite fixtures every test and demo leans on: the named lattices L1..L3,
the bounded antichains M(n), powerset algebras B(n), and the two non-lattice
posets P8 and P10.  Cover edges are frozen here and nowhere else; each list is
grouped by layer (atoms first, then the middle layers, then the top).
"""

from __future__ import annotations

import re

from .errors import UnknownFixtureError
from .formats import PosetDocument

# 9 elements; atoms a, b, d; c = a v b; e, f, g cover d; pseudocomplements
# do not exist for a and b, but the closure lattice has 8 elements.
_L1 = PosetDocument(
    name="L1",
    labels=("0", "a", "b", "c", "d", "e", "f", "g", "1"),
    pairs=(
        ("0", "a"), ("0", "b"), ("0", "d"),
        ("a", "c"), ("b", "c"),
        ("a", "e"), ("d", "e"),
        ("b", "f"), ("d", "f"),
        ("d", "g"),
        ("c", "1"), ("e", "1"), ("f", "1"), ("g", "1"),
    ),
)

# The pentagon: 0 < a < c < 1 and 0 < b < 1.  Pseudocomplemented but not
# distributive; its skeleton is {0, b, c, 1}.
_L2 = PosetDocument(
    name="L2",
    labels=("0", "a", "b", "c", "1"),
    pairs=(("0", "a"), ("0", "b"), ("a", "c"), ("b", "1"), ("c", "1")),
)

# A cube (atoms a, b, c; coatoms d, e, f; g on top) with an extra unit above
# g.  Pseudocomplemented; the skeleton drops g and is an 8-element cube.
_L3 = PosetDocument(
    name="L3",
    labels=("0", "a", "b", "c", "d", "e", "f", "g", "1"),
    pairs=(
        ("0", "a"), ("0", "b"), ("0", "c"),
        ("a", "d"), ("b", "d"),
        ("a", "e"), ("c", "e"),
        ("b", "f"), ("c", "f"),
        ("d", "g"), ("e", "g"), ("f", "g"),
        ("g", "1"),
    ),
)

# 8 elements, not a lattice (d and e are two minimal upper bounds of {a, b}).
# Pseudocomplemented with skeleton {0, c, f, 1}.
_P8 = PosetDocument(
    name="P8",
    labels=("0", "a", "b", "c", "d", "e", "f", "1"),
    pairs=(
        ("0", "a"), ("0", "b"),
        ("a", "c"), ("a", "d"), ("a", "e"),
        ("b", "d"), ("b", "e"), ("b", "f"),
        ("c", "1"), ("d", "1"), ("e", "1"), ("f", "1"),
    ),
)

# 10 elements: four atoms a..d, four coatoms e..h, each coatom covering all
# atoms but one (e misses d, f misses c, g misses b, h misses a).  The star
# map is the order-reversing pairing, so the skeleton is the whole carrier
# and is not a meet-semilattice.
_P10 = PosetDocument(
    name="P10",
    labels=("0", "a", "b", "c", "d", "e", "f", "g", "h", "1"),
    pairs=(
        ("0", "a"), ("0", "b"), ("0", "c"), ("0", "d"),
        ("a", "e"), ("b", "e"), ("c", "e"),
        ("a", "f"), ("b", "f"), ("d", "f"),
        ("a", "g"), ("c", "g"), ("d", "g"),
        ("b", "h"), ("c", "h"), ("d", "h"),
        ("e", "1"), ("f", "1"), ("g", "1"), ("h", "1"),
    ),
)

_FIXED = {"L1": _L1, "L2": _L2, "L3": _L3, "P8": _P8, "P10": _P10}

_PARAM = re.compile(r"^([MB])\((\d+)\)$")

POWERSET_MAX = 12
_ATOM_LETTERS = "abcdefghijkl"


def antichain_lattice(n: int) -> PosetDocument:
    """M(n): an n-element antichain with bottom and top glued on."""
    if n < 1:
        raise UnknownFixtureError("M(n) needs n >= 1")
    mids = tuple(f"a{i}" for i in range(1, n + 1))
    pairs = tuple(("0", m) for m in mids) + tuple((m, "1") for m in mids)
    return PosetDocument(name=f"M({n})", labels=("0",) + mids + ("1",), pairs=pairs)


def powerset_lattice(n: int) -> PosetDocument:
    """B(n): all subsets of n atoms ordered by inclusion.

    Labels spell the atom letters a subset contains; the empty set is "0".
    """
    if n < 0 or n > POWERSET_MAX:
        raise UnknownFixtureError(f"B(n) supports 0 <= n <= {POWERSET_MAX}")

    def label(m: int) -> str:
        if m == 0:
            return "0"
        return "".join(_ATOM_LETTERS[t] for t in range(n) if (m >> t) & 1)

    masks = sorted(range(1 << n), key=lambda m: (m.bit_count(), m))
    labels = tuple(label(m) for m in masks)
    pairs = []
    for m in masks:
        for t in range(n):
            if not (m >> t) & 1:
                pairs.append((label(m), label(m | (1 << t))))
    return PosetDocument(name=f"B({n})", labels=labels, pairs=tuple(pairs))


def fixture(name: str) -> PosetDocument:
    """Look up a fixture by name: L1, L2, L3, P8, P10, M(n), or B(n).

    Raises:
        UnknownFixtureError: no fixture goes by that name.
    """
    if name in _FIXED:
        return _FIXED[name]
    m = _PARAM.match(name)
    if m:
        n = int(m.group(2))
        return antichain_lattice(n) if m.group(1) == "M" else powerset_lattice(n)
    raise UnknownFixtureError(f"unknown fixture {name!r}")


def fixture_names() -> tuple[str, ...]:
    return ("L1", "L2", "L3", "P8", "P10", "M(n)", "B(n)")


def fixture_catalog() -> dict[str, PosetDocument]:
    """A concrete catalog for suites that sweep all fixtures."""
    names = [
        "L1", "L2", "L3",
        "M(1)", "M(2)", "M(3)", "M(5)",
        "B(0)", "B(1)", "B(2)", "B(3)",
        "P8", "P10",
    ]
    return {name: fixture(name) for name in names}
