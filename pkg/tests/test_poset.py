import pytest
from hypothesis import given, strategies as st

from orthoposet import (
    CycleDetectedError,
    DuplicateLabelError,
    NoBottomError,
    SizeLimitError,
    UnknownLabelError,
    bits,
    build_poset,
    direct_product,
    fixture,
)


@st.composite
def small_posets(draw, max_n=6):
    n = draw(st.integers(min_value=1, max_value=max_n))
    names = [f"x{i}" for i in range(n)]
    raw = draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
            max_size=2 * n,
        )
    )
    pairs = [(names[i], names[j]) for i, j in raw if i < j]
    return build_poset(names, pairs)


class TestBuild:
    def test_closes_order_assertions_transitively(self):
        p = build_poset(
            ["0", "a", "b", "c", "1"],
            [("0", "a"), ("0", "b"), ("a", "c"), ("b", "c"), ("c", "1")],
        )
        assert p.n == 5
        assert p.leq("0", "1")
        assert p.leq("a", "1")
        assert not p.leq("a", "b")
        assert p.is_lattice()

    def test_singleton(self):
        p = build_poset(["x"], [])
        assert p.leq("x", "x")
        assert p.bottom() == "x" == p.top()

    def test_two_cycle_rejected(self):
        with pytest.raises(CycleDetectedError):
            build_poset(["a", "b"], [("a", "b"), ("b", "a")])

    def test_long_cycle_rejected(self):
        with pytest.raises(CycleDetectedError):
            build_poset(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])

    def test_duplicate_label(self):
        with pytest.raises(DuplicateLabelError):
            build_poset(["a", "a"], [])

    def test_unknown_label(self):
        with pytest.raises(UnknownLabelError):
            build_poset(["a"], [("a", "z")])

    def test_self_pair_is_noop(self):
        p = build_poset(["a", "b"], [("a", "a"), ("a", "b")])
        assert p.leq("a", "b")

    def test_carrier_cap(self, monkeypatch):
        monkeypatch.setenv("ORTHOPOSET_CARRIER_CAP", "3")
        with pytest.raises(SizeLimitError):
            build_poset(["a", "b", "c", "d"], [])


class TestBounds:
    def test_l1_pair_meet_is_bottom(self, L1):
        rep = L1.bounds(L1.subset(["a", "b"]))
        assert rep.lower.labels == ("0",)
        assert rep.meet == "0"
        assert rep.join == "c"

    def test_empty_subset(self, L1):
        rep = L1.bounds(L1.empty_set())
        assert rep.lower.labels == L1.names
        assert rep.meet == "1"
        assert rep.join == "0"

    def test_p8_meetless_pair(self, P8):
        rep = P8.bounds(P8.subset(["d", "e"]))
        assert rep.lower.labels == ("0", "a", "b")
        assert rep.meet is None

    def test_meet_matches_bounds(self, L3):
        for x in L3.names:
            for y in L3.names:
                assert L3.meet(x, y) == L3.bounds(L3.subset([x, y])).meet


class TestMeet:
    def test_l1_atoms_meet_at_bottom(self, L1):
        assert L1.meet("a", "b") == "0"

    def test_idempotent_and_commutative(self, L1):
        for x in L1.names:
            assert L1.meet(x, x) == x
            for y in L1.names:
                assert L1.meet(x, y) == L1.meet(y, x)

    def test_m3_antichain(self):
        m3 = fixture("M(3)").build()
        assert m3.meet("a1", "a2") == "0"
        assert m3.join("a1", "a2") == "1"

    def test_associative_on_semilattices(self, L1, L3):
        from orthoposet import generate_posets

        pool = [L1, L3] + [p for p in generate_posets(5) if p.is_meet_semilattice()]
        for p in pool:
            for x in p.names:
                for y in p.names:
                    for z in p.names:
                        assert p.meet(p.meet(x, y), z) == p.meet(x, p.meet(y, z))


class TestPredicates:
    def test_l1_is_lattice(self, L1):
        assert L1.is_lattice()
        assert L1.bottom() == "0"
        assert L1.top() == "1"

    def test_p8_not_meet_semilattice(self, P8):
        assert not P8.is_meet_semilattice()
        assert not P8.is_lattice()
        assert P8.first_meetless_pair() == ("d", "e")

    def test_antichain(self):
        p = build_poset(["a", "b"], [])
        assert p.bottom() is None
        assert not p.is_meet_semilattice()
        with pytest.raises(NoBottomError):
            p.atoms()


class TestAtoms:
    def test_l3_atoms(self, L3):
        assert L3.atoms().labels == ("a", "b", "c")
        assert L3.is_atomic()

    def test_two_chain(self):
        p = fixture("B(1)").build()
        assert p.atoms().labels == ("a",)
        assert p.is_atomic()

    def test_m5_atoms(self):
        m5 = fixture("M(5)").build()
        assert m5.atoms().labels == ("a1", "a2", "a3", "a4", "a5")
        assert m5.is_atomic()

    def test_agrees_with_bruteforce(self, catalog):
        for p in catalog.values():
            amask = p.atoms_mask
            brute = all(
                any(p.leq_idx(a, i) for a in bits(amask))
                for i in range(p.n)
                if i != p.bottom_idx
            )
            assert p.is_atomic() == brute


class TestDownSet:
    def test_l1(self, L1):
        assert L1.down_set("c").labels == ("0", "a", "b", "c")

    def test_bottom(self, L1):
        assert L1.down_set("0").labels == ("0",)

    def test_p8(self, P8):
        assert P8.down_set("f").labels == ("0", "b", "f")


class TestDirectProduct:
    def test_two_chains_make_a_square(self):
        b1 = fixture("B(1)").build()
        sq = direct_product(b1, b1)
        assert sq.n == 4
        assert sq.is_lattice()
        assert len(sq.atoms()) == 2

    def test_meets_are_componentwise(self):
        m2 = fixture("M(2)").build()
        b1 = fixture("B(1)").build()
        prod = direct_product(m2, b1)
        assert prod.n == 8
        for a1 in m2.names:
            for b1_ in b1.names:
                for a2 in m2.names:
                    for b2 in b1.names:
                        got = prod.meet(f"{a1},{b1_}", f"{a2},{b2}")
                        am = m2.meet(a1, a2)
                        bm = b1.meet(b1_, b2)
                        assert got == f"{am},{bm}"

    def test_cap_enforced(self, L1):
        with pytest.raises(SizeLimitError):
            direct_product(L1, L1, cap=10)


class TestTransitiveReduction:
    def test_three_chain(self):
        p = build_poset(["0", "m", "1"], [("0", "m"), ("m", "1"), ("0", "1")])
        assert p.transitive_reduction() == [("0", "m"), ("m", "1")]

    def test_l2_covers(self, L2):
        assert L2.transitive_reduction() == [
            ("0", "a"),
            ("0", "b"),
            ("a", "c"),
            ("b", "1"),
            ("c", "1"),
        ]

    def test_square_has_four_covers(self):
        b1 = fixture("B(1)").build()
        assert len(direct_product(b1, b1).transitive_reduction()) == 4

    @given(small_posets())
    def test_roundtrip_reproduces_order(self, p):
        rebuilt = build_poset(p.names, p.transitive_reduction())
        assert rebuilt.down == p.down


class TestInduced:
    def test_restriction_keeps_labels_and_order(self, L3):
        sub = L3.induced(L3.subset(["0", "a", "d", "1"]))
        assert sub.names == ("0", "a", "d", "1")
        assert sub.leq("a", "d")
        assert sub.leq("0", "1")
        assert not sub.leq("d", "a")


@given(small_posets())
def test_meet_laws_hold_on_random_posets(p):
    for i in range(p.n):
        assert p.meet_idx(i, i) == i
        for j in range(p.n):
            assert p.meet_idx(i, j) == p.meet_idx(j, i)
            m = p.meet_idx(i, j)
            if m is not None:
                assert p.leq_idx(m, i) and p.leq_idx(m, j)
