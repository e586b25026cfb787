import pytest

from flathg.constructions import (
    WITNESS_KINDS,
    direct_power,
    find_semiring_isomorphism,
    find_subword_embedding,
    format_witness_report,
    generated_subsemiring,
    quotient_by_ideal,
    verify_witness,
)
from flathg.hg_semiring import build_semiring
from flathg.hypergraph import build_hypergraph, family
from flathg.semiring import is_flat, verify_axioms


class TestDirectPower:
    def test_size_and_zero(self, sc_abc):
        p = direct_power(sc_abc, 3)
        assert p.size == sc_abc.size**3
        assert p.zero == (sc_abc.zero,) * 3

    def test_componentwise_product(self, sc_abc):
        p = direct_power(sc_abc, 2)
        a = p.element_from_labels(("a", "b"))
        b = p.element_from_labels(("b", "c"))
        assert p.label(p.mul(a, b)) == "(ab,bc)"

    def test_arity_one_uses_bare_labels(self, sc_abc):
        p = direct_power(sc_abc, 1)
        assert p.label((sc_abc.index("ab"),)) == "ab"

    def test_arity_must_be_positive(self, sc_abc):
        with pytest.raises(ValueError, match="at least 1"):
            direct_power(sc_abc, 0)


class TestClosure:
    def test_diagonal_generators_recover_the_base(self, sc_abc):
        p = direct_power(sc_abc, 2)
        gens = [("a", "a"), ("b", "b"), ("c", "c")]
        sub = generated_subsemiring(p, gens)
        assert len(sub.elements) == sc_abc.size

    def test_closed_subsemiring_satisfies_axioms(self, sc_abc):
        p = direct_power(sc_abc, 2)
        sub = generated_subsemiring(p, [("a", "b"), ("b", "c")])
        s = sub.as_semiring()
        assert verify_axioms(s).all_pass

    def test_cap_is_enforced(self, sc_abcd):
        p = direct_power(sc_abcd, 2)
        gens = [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]
        with pytest.raises(ValueError, match="closure exceeded 5 elements"):
            generated_subsemiring(p, gens, cap=5)

    def test_requires_a_generator(self, sc_abc):
        with pytest.raises(ValueError, match="at least one generator"):
            generated_subsemiring(direct_power(sc_abc, 2), [])


class TestQuotient:
    def test_zero_ideal_reproduces_the_closure(self, sc_abc):
        p = direct_power(sc_abc, 1)
        sub = generated_subsemiring(p, [("a",), ("b",), ("c",)])
        q = quotient_by_ideal(sub, [("0",)])
        assert q.quotient.size == len(sub.elements)
        assert find_semiring_isomorphism(q.quotient, sc_abc) is not None

    def test_full_ideal_collapses_to_a_point(self, sc_abc):
        p = direct_power(sc_abc, 1)
        sub = generated_subsemiring(p, [("a",), ("b",)])
        q = quotient_by_ideal(sub, list(sub.elements))
        assert q.quotient.size == 1

    def test_ideal_must_contain_zero(self, sc_abc):
        p = direct_power(sc_abc, 1)
        sub = generated_subsemiring(p, [("a",), ("b",)])
        with pytest.raises(ValueError, match="must contain the zero"):
            quotient_by_ideal(sub, [("a",)])

    def test_ideal_members_must_lie_in_the_closure(self, sc_abc):
        p = direct_power(sc_abc, 2)
        sub = generated_subsemiring(p, [("a", "a")])
        with pytest.raises(ValueError, match="not in the closure"):
            quotient_by_ideal(sub, [("0", "0"), ("b", "c")])

    def test_non_congruence_is_reported(self, sc_abc):
        p = direct_power(sc_abc, 1)
        sub = generated_subsemiring(p, [("a",), ("b",), ("c",)])
        with pytest.raises(ValueError, match="does not induce a congruence"):
            quotient_by_ideal(sub, [("0",), ("a",)])


class TestIsomorphism:
    def test_identity_map_is_found(self, sc_abcd):
        iso = find_semiring_isomorphism(sc_abcd, sc_abcd)
        assert iso is not None
        assert all(iso[x] == x for x in ("0", "abcd"))

    def test_size_mismatch_is_none(self, sc_abc, sc_abcd):
        assert find_semiring_isomorphism(sc_abc, sc_abcd) is None

    def test_equal_size_different_structure_is_none(self):
        s1 = build_semiring(family("nested", 2)).exported
        s2 = build_semiring(family("beam", 2)).exported
        assert s1.size == s2.size == 20
        assert find_semiring_isomorphism(s1, s2) is None

    def test_symmetry(self):
        s1 = build_semiring(family("fan", 3)).exported
        s2 = build_semiring(family("beam", 3)).exported
        forward = find_semiring_isomorphism(s1, s2)
        backward = find_semiring_isomorphism(s2, s1)
        assert forward is not None and backward is not None
        assert {v: k for k, v in forward.items()} == backward


class TestWitnesses:
    def test_kind_registry(self):
        assert set(WITNESS_KINDS) == {
            "uniform_reduction",
            "strongcolor_equiv",
            "triangle_in_abcd",
            "leaf_removal",
            "beam_step",
            "nested_chain",
        }

    def test_triangle_embedding_report(self):
        rep = verify_witness("triangle_in_abcd")
        assert rep.ok
        assert (rep.closure_size, rep.ideal_size, rep.quotient_size) == (22, 9, 14)
        iso = dict(rep.isomorphism)
        assert iso["(a,bc)"] == "a·u1"
        assert iso["(abcd,abcd)"] == "TOP"
        assert [s.name for s in rep.stages] == [
            "closure", "ideal", "quotient", "flatness", "isomorphism",
        ]

    def test_strongcolor_equivalence(self):
        rep = verify_witness("strongcolor_equiv", hypergraph=family("n_cycle", 4))
        assert rep.ok
        assert rep.power_arity == 18
        assert rep.quotient_size == 18

    def test_uniform_reduction(self):
        h = build_hypergraph(
            ["u1", "u2", "u3", "u4", "u5"],
            [("u1", "u2", "u3"), ("u4", "u5")],
        )
        rep = verify_witness("uniform_reduction", hypergraph=h)
        assert rep.ok
        assert rep.quotient_size == 10

    def test_uniform_reduction_needs_a_short_edge(self):
        with pytest.raises(ValueError, match="2-vertex edge"):
            verify_witness("uniform_reduction", hypergraph=family("beam", 1))

    def test_leaf_removal_shared(self):
        h = build_hypergraph(
            [f"u{i}" for i in range(1, 9)],
            [("u1", "u2", "u3"), ("u3", "u4", "u5"),
             ("u5", "u6", "u1"), ("u7", "u8", "u1")],
        )
        rep = verify_witness("leaf_removal", hypergraph=h, leaf_case="shared")
        assert rep.ok
        assert rep.quotient_size == 18

    def test_leaf_removal_disjoint(self):
        h = build_hypergraph(
            [f"u{i}" for i in range(1, 10)],
            [("u1", "u2", "u3"), ("u3", "u4", "u5"),
             ("u5", "u6", "u1"), ("u7", "u8", "u9")],
        )
        rep = verify_witness("leaf_removal", hypergraph=h, leaf_case="disjoint")
        assert rep.ok

    def test_leaf_removal_requires_arguments(self):
        with pytest.raises(ValueError, match="requires a hypergraph and a leaf_case"):
            verify_witness("leaf_removal")

    def test_leaf_removal_missing_case(self):
        with pytest.raises(ValueError, match="no disjoint leaf edge found"):
            verify_witness("leaf_removal", hypergraph=family("beam", 2),
                           leaf_case="disjoint")

    @pytest.mark.parametrize("i", (4, 5, 6))
    def test_beam_step_upper_range(self, i):
        rep = verify_witness("beam_step", index=i)
        assert rep.ok
        assert rep.quotient_size == 6 * (i + 1) + 8

    def test_beam_step_six_notes_the_wrapped_column(self):
        rep = verify_witness("beam_step", index=6)
        assert any("matrix column 6" in n for n in rep.notes)

    def test_nested_chain_is_checker_based(self):
        rep = verify_witness("nested_chain", index=2)
        assert rep.ok
        assert [s.name for s in rep.stages] == ["lower-satisfies", "upper-fails"]
        assert rep.isomorphism is None
        assert rep.quotient_size == 0

    def test_unknown_kind(self):
        with pytest.raises(ValueError, match="unknown witness kind 'bogus'"):
            verify_witness("bogus")

    def test_report_formatting(self):
        text = format_witness_report(verify_witness("triangle_in_abcd"))
        lines = text.splitlines()
        assert lines[0].startswith("claim:")
        assert "ok: yes" in lines
        assert any(line.startswith("stage: closure ok") for line in lines)
        assert any(line.startswith("isomorphism: (abcd,abcd) -> TOP") for line in lines)

    def test_failure_is_reported_not_raised(self):
        rep = verify_witness("strongcolor_equiv", hypergraph=family("beam", 1))
        assert not rep.ok
        assert rep.failure_stage is not None


class TestSubwordEmbedding:
    def test_triangle_semiring_hosts_the_three_letter_words(self, triangle_semiring):
        emb = find_subword_embedding(triangle_semiring)
        assert emb is not None
        assert emb["0"] == "0"
        assert emb["abc"] == "TOP"
        assert sorted(emb[k] for k in ("a", "b", "c")) == ["a·u1", "a·u2", "a·u3"]

    def test_embedding_respects_both_tables(self, sc_abc, triangle_semiring):
        emb = find_subword_embedding(triangle_semiring)
        t = triangle_semiring
        for x in sc_abc.elements:
            for y in sc_abc.elements:
                assert emb[sc_abc.mul_label(x, y)] == t.mul_label(emb[x], emb[y])
                assert emb[sc_abc.add_label(x, y)] == t.add_label(emb[x], emb[y])

    def test_too_small_target_has_none(self, sc_abc):
        assert find_subword_embedding(sc_abc) is None
