import pytest

from flathg.constructions import find_semiring_isomorphism
from flathg.hg_semiring import build_semiring
from flathg.hypergraph import build_hypergraph
from flathg.semiring import is_flat, subdirect_irreducibility_certificate, verify_axioms
from flathg.words import build_sc, builtin_s7


def count_submultisets(word):
    from collections import Counter

    total = 1
    for n in Counter(word).values():
        total *= n + 1
    return total - 1


class TestBuildSc:
    def test_abc_has_eight_elements(self, sc_abc):
        assert sc_abc.size == 8
        assert set(sc_abc.elements) == {"0", "a", "b", "c", "ab", "ac", "bc", "abc"}

    def test_product_is_multiset_union(self, sc_abc):
        assert sc_abc.mul_label("a", "b") == "ab"
        assert sc_abc.mul_label("ab", "c") == "abc"

    def test_product_truncates_outside_subwords(self, sc_abc):
        assert sc_abc.mul_label("a", "a") == "0"
        assert sc_abc.mul_label("abc", "a") == "0"

    @pytest.mark.parametrize("word", ["ab", "aab", "abcd", "aabb"])
    def test_size_counts_submultisets(self, word):
        assert build_sc([word]).size == count_submultisets(word) + 1

    def test_repeated_letters_kept_as_multiset(self):
        s = build_sc(["aab"])
        assert s.mul_label("a", "a") == "aa"
        assert s.mul_label("aa", "a") == "0"
        assert s.mul_label("aa", "b") == "aab"

    def test_two_words_union_their_subwords(self):
        s = build_sc(["ab", "c"])
        assert set(s.elements) == {"0", "a", "b", "c", "ab"}
        assert s.mul_label("ab", "c") == "0"

    def test_duplicate_words_collapse(self):
        assert build_sc(["ab", "ab"]).size == build_sc(["ab"]).size

    def test_empty_word_set_rejected(self):
        with pytest.raises(ValueError, match="empty"):
            build_sc([])

    def test_empty_word_rejected(self):
        with pytest.raises(ValueError):
            build_sc([""])

    def test_axioms_and_flatness(self, sc_abcd):
        assert verify_axioms(sc_abcd).all_pass
        assert is_flat(sc_abcd)

    def test_abc_matches_the_single_edge_semiring(self, sc_abc):
        h = build_hypergraph(["x", "y", "z"], [("x", "y", "z")])
        target = build_semiring(h).exported
        assert find_semiring_isomorphism(sc_abc, target) is not None

    def test_abcd_certificate(self, sc_abcd):
        cert = subdirect_irreducibility_certificate(sc_abcd)
        assert cert.granted
        assert cert.annihilators == ("abcd",)


class TestS7:
    def test_table_facts(self, s7):
        assert s7.add_label("1", "1") == "1"
        assert s7.add_label("1", "a") == "0"
        assert s7.mul_label("1", "1") == "1"
        assert s7.mul_label("1", "a") == "a"
        assert s7.mul_label("a", "a") == "0"

    def test_axioms_flat_cancellative(self, s7):
        from flathg.semiring import is_zero_cancellative

        assert verify_axioms(s7).all_pass
        assert is_flat(s7)
        assert is_zero_cancellative(s7) is True

    def test_not_two_nil_so_no_certificate(self, s7):
        cert = subdirect_irreducibility_certificate(s7)
        assert not cert.two_nil
        assert not cert.granted
