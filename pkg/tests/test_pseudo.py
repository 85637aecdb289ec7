import pytest

from orthoposet import (
    NoBottomError,
    NotBoundedError,
    SkeletonTooLargeError,
    bits,
    build_poset,
    fixture,
    generate_posets,
    is_boolean,
    ortho_from_meet,
    pseudo_structure,
    pseudocomplement,
)

L2_STAR = {"0": "1", "a": "b", "b": "c", "c": "b", "1": "0"}
L3_STAR = {
    "0": "1", "a": "f", "b": "e", "c": "d", "d": "c",
    "e": "b", "f": "a", "g": "0", "1": "0",
}
P8_STAR = {"0": "1", "a": "f", "b": "c", "c": "f", "d": "0", "e": "0", "f": "c", "1": "0"}
P10_STAR = {
    "0": "1", "a": "h", "b": "g", "c": "f", "d": "e",
    "e": "d", "f": "c", "g": "b", "h": "a", "1": "0",
}

PSEUDO_FIXTURES = ("L2", "L3", "M(1)", "B(0)", "B(1)", "B(2)", "B(3)", "P8", "P10")


def _pseudo(name):
    ps = pseudo_structure(fixture(name).build())
    assert ps is not None
    return ps


class TestPseudocomplement:
    def test_l2_table(self, L2):
        for x, s in L2_STAR.items():
            assert pseudocomplement(L2, x) == s

    def test_extremes_are_swapped(self):
        for name in PSEUDO_FIXTURES:
            p = fixture(name).build()
            assert pseudocomplement(p, p.bottom()) == p.top()
            assert pseudocomplement(p, p.top()) == p.bottom()

    def test_m3_atom_has_none(self):
        m3 = fixture("M(3)").build()
        assert pseudocomplement(m3, "a1") is None

    def test_requires_bottom(self):
        with pytest.raises(NoBottomError):
            pseudocomplement(build_poset(["a", "b"], []), "a")


class TestPseudoStructure:
    def test_p8(self, P8):
        ps = pseudo_structure(P8)
        assert ps.star_table() == P8_STAR
        assert ps.skeleton().labels == ("0", "c", "f", "1")

    def test_p10_star_is_an_involution(self, P10):
        ps = pseudo_structure(P10)
        assert ps.star_table() == P10_STAR
        for x in P10.names:
            assert ps.star_of(ps.star_of(x)) == x
        assert ps.skeleton().mask == P10.full

    def test_m3_absent(self):
        assert pseudo_structure(fixture("M(3)").build()) is None

    def test_unbounded_raises(self):
        v = build_poset(["0", "a", "b"], [("0", "a"), ("0", "b")])
        with pytest.raises(NotBoundedError):
            pseudo_structure(v)

    def test_star_laws(self):
        for name in PSEUDO_FIXTURES:
            ps = _pseudo(name)
            p = ps.poset
            for i in range(p.n):
                assert p.leq_idx(i, ps.star[ps.star[i]])  # x <= x**
                assert ps.star[ps.star[ps.star[i]]] == ps.star[i]  # x*** = x*
                for j in range(p.n):
                    if p.leq_idx(i, j):  # antitone
                        assert p.leq_idx(ps.star[j], ps.star[i])

    def test_orthogonality_matches_star(self):
        # x is orthogonal to y exactly when y <= x*.
        for name in PSEUDO_FIXTURES:
            ps = _pseudo(name)
            p = ps.poset
            space = ortho_from_meet(p)
            for i in range(p.n):
                for j in range(p.n):
                    assert space.orthogonal(p.names[i], p.names[j]) == p.leq_idx(
                        j, ps.star[i]
                    )


class TestSkeletonPoset:
    def test_l3_drops_one_coatom(self, L3):
        sk = _pseudo("L3").skeleton_poset()
        assert sk.names == ("0", "a", "b", "c", "d", "e", "f", "1")
        assert sk.is_lattice()
        assert is_boolean(sk)

    def test_powerset_skeleton_is_everything(self):
        ps = _pseudo("B(3)")
        assert ps.skeleton().mask == ps.poset.full

    def test_p10_skeleton_equals_base(self, P10):
        sk = _pseudo("P10").skeleton_poset()
        assert sk.names == P10.names
        assert sk.down == P10.down
        assert not sk.is_meet_semilattice()


class TestGlivenko:
    def test_l2(self):
        alg = _pseudo("L2").glivenko()
        assert alg is not None
        assert alg.carrier == ("0", "b", "c", "1")
        assert alg.join("b", "c") == "1"
        assert alg.meet("b", "c") == "0"
        assert is_boolean(alg.as_poset())

    def test_l3_is_a_cube(self):
        alg = _pseudo("L3").glivenko()
        assert alg is not None
        assert len(alg) == 8
        assert is_boolean(alg.as_poset())

    def test_p10_absent(self):
        assert _pseudo("P10").glivenko() is None

    def test_complement_is_star_restriction(self):
        for name in ("L2", "L3", "P8", "B(2)"):
            ps = _pseudo(name)
            alg = ps.glivenko()
            for x in alg.carrier:
                assert alg.complement_of(x) == ps.star_of(x)

    def test_always_boolean_on_small_corpus(self):
        # Wherever the skeleton is a meet-semilattice, the algebra exists and
        # is Boolean (the builder itself re-verifies distributivity).
        hits = 0
        for n in range(2, 8):
            for p in generate_posets(n):
                if not p.is_bounded():
                    continue
                ps = pseudo_structure(p)
                if ps is None:
                    continue
                alg = ps.glivenko()
                if ps.skeleton_poset().is_meet_semilattice():
                    assert alg is not None
                    assert is_boolean(alg.as_poset())
                    hits += 1
                else:
                    assert alg is None
        assert hits == 55  # every pseudocomplemented poset on <= 7 elements


class TestCompatibility:
    def test_p8_holds_over_all_subsets(self):
        ps = _pseudo("P8")
        report = ps.check_compatibility()
        assert report.ok
        assert len(ps.skeleton()) == 4  # 16 subsets scanned

    def test_lattice_fixtures_hold(self):
        for name in ("L2", "L3", "B(2)", "B(3)", "M(1)"):
            assert _pseudo(name).check_compatibility().ok

    def test_cap(self):
        with pytest.raises(SkeletonTooLargeError):
            _pseudo("P10").check_compatibility(cap=5)


class TestInfStarLaw:
    def test_l3_instances(self, L3):
        ps = _pseudo("L3")
        chk = ps.inf_star_law(L3.subset(["a", "b"]))
        assert chk.applicable and chk.holds
        assert chk.join == "d" and chk.inf_of_stars == "c" == chk.expected
        chk = ps.inf_star_law(L3.subset(["a", "c"]))
        assert chk.join == "e" and chk.inf_of_stars == "b" == chk.expected

    def test_l2_instance(self, L2):
        ps = _pseudo("L2")
        chk = ps.inf_star_law(L2.subset(["a", "c"]))
        assert chk.holds and chk.join == "c" and chk.inf_of_stars == "b"

    def test_singleton_is_trivial(self, L2):
        ps = _pseudo("L2")
        for x in L2.names:
            chk = ps.inf_star_law(L2.subset([x]))
            assert chk.holds and chk.inf_of_stars == ps.star_of(x)

    def test_empty_subset(self, L2):
        chk = _pseudo("L2").inf_star_law(L2.empty_set())
        assert chk.applicable and chk.holds
        assert chk.join == "0" and chk.expected == "1"

    def test_star_of_set(self, L3):
        ps = _pseudo("L3")
        assert ps.star_of_set(L3.subset(["a", "b"])).labels == ("e", "f")


class TestLemma2:
    def test_perp_of_star_is_double_perp(self):
        for name in PSEUDO_FIXTURES:
            ps = _pseudo(name)
            space = ortho_from_meet(ps.poset)
            for i in range(ps.poset.n):
                lhs = space.perp_single[ps.star[i]]
                rhs = space.perp_mask(space.perp_single[i])
                assert lhs == rhs


class TestClosedSetsOfPseudoLattices:
    def test_closed_sets_are_exactly_singleton_perps(self):
        # On a pseudocomplemented lattice nothing beyond the singleton perps
        # shows up in the closure family.
        names = ["L2", "L3", "M(1)", "B(2)", "B(3)"]
        lattices = [fixture(n).build() for n in names]
        lattices += [
            p
            for p in generate_posets(5)
            if p.is_lattice() and pseudo_structure(p) is not None
        ]
        for p in lattices:
            space = ortho_from_meet(p)
            singles = sorted(
                set(space.perp_single), key=lambda m: (m.bit_count(), tuple(bits(m)))
            )
            assert list(space.closed_masks) == singles


class TestCompatibilitySearch:
    def test_no_finite_counterexample_up_to_six(self):
        # Scan for a skeleton that is a lattice while some skeleton subset has
        # a base infimum disagreeing with the skeleton infimum.  None is known;
        # record emptiness on the small corpus without asserting theory.
        hits = []
        for n in range(2, 7):
            for p in generate_posets(n):
                if not p.is_bounded():
                    continue
                ps = pseudo_structure(p)
                if ps is None:
                    continue
                if not ps.skeleton_poset().is_lattice():
                    continue
                if not ps.check_compatibility().ok:
                    hits.append(p)
        assert hits == []
