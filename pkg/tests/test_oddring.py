import pytest

from oddsym.combinat import compositions_of, partitions_of, transpose
from oddsym.form import E, H, e_word, h_word
from oddsym.oddring import (
    OddElt,
    coproduct,
    e_coordinates,
    e_elt,
    e_letter,
    from_e_coordinates,
    gram_h,
    h_elt,
    normalize,
    normalize_via_gram,
    pair,
    pair_tensor,
    semiorthogonality_check,
)
from oddsym.polyq import det_exact


class TestStraightening:
    def test_lemma_examples(self):
        assert normalize((1, 2)) == OddElt({(3,): 2, (2, 1): -1})
        assert normalize((1, 4)) == OddElt({(5,): 2, (4, 1): -1})
        assert normalize((2, 1)) == h_elt((2, 1))

    def test_sorted_words_fixed(self):
        for n in range(8):
            for lam in partitions_of(n):
                assert normalize(lam) == OddElt({lam: 1})

    def test_even_pairs_commute(self):
        for a in range(1, 6):
            for b in range(1, 6):
                if (a + b) % 2 == 0:
                    assert normalize((a, b)) == normalize((b, a))

    def test_e_expansions_normalize_to_printed_lists(self):
        assert e_letter(2) == OddElt({(2,): 1, (1, 1): -1})
        assert e_letter(3) == OddElt({(3,): 1, (1, 1, 1): -1})
        assert e_letter(4) == OddElt(
            {(4,): -1, (2, 2): 1, (2, 1, 1): -1, (1, 1, 1, 1): 1}
        )
        assert e_letter(5) == OddElt(
            {(5,): 1, (4, 1): -2, (3, 1, 1): -1, (2, 2, 1): 1, (1, 1, 1, 1, 1): 1}
        )

    def test_invalid_letters_rejected(self):
        with pytest.raises(ValueError):
            normalize((0, 2))


class TestGramRoute:
    def test_small_examples(self):
        assert normalize_via_gram((1, 2)) == OddElt({(3,): 2, (2, 1): -1})
        assert normalize_via_gram({e_word((4,)): 1}) == e_letter(4)
        assert normalize_via_gram({}) == OddElt.zero()

    def test_two_routes_words_up_to_degree_6(self):
        for n in range(7):
            for word in compositions_of(n):
                assert normalize(word) == normalize_via_gram(word), word

    def test_two_routes_on_longer_random_words(self):
        import random

        rng = random.Random(6021)
        for _ in range(40):
            length = rng.randint(5, 8)
            word = []
            left = 8
            for _ in range(length):
                if left < 1:
                    break
                part = rng.randint(1, max(1, left - (length - len(word) - 1)))
                word.append(part)
                left -= part
            word = tuple(word)
            assert normalize(word) == normalize_via_gram(word), word

    def test_gram_route_on_colored_words(self):
        words = [((2, E), (1, H)), ((3, E), (2, E)), ((1, H), (2, E), (1, H))]
        for w in words:
            expanded = {}
            from oddsym.form import expand_colored_word

            for hw, c in expand_colored_word(w).items():
                expanded[hw] = expanded.get(hw, 0) + c
            assert normalize_via_gram({w: 1}) == normalize(expanded)


class TestRingStructure:
    def test_multiplication_examples(self):
        assert h_elt((2,)) * h_elt((2,)) == h_elt((2, 2))
        assert h_elt((1,)) * h_elt((2,)) == OddElt({(3,): 2, (2, 1): -1})

    def test_associativity_on_generators(self):
        for a in range(1, 8):
            for b in range(1, 8 - a):
                for c in range(1, 10 - a - b):
                    x, y, z = h_elt((a,)), h_elt((b,)), h_elt((c,))
                    assert (x * y) * z == x * (y * z), (a, b, c)

    def test_defining_relations_h(self):
        # even sums commute; odd sums satisfy the four-term relation
        for a in range(1, 10):
            for b in range(1, 11 - a):
                ha, hb = h_elt((a,)), h_elt((b,))
                if (a + b) % 2 == 0:
                    assert ha * hb == hb * ha
                else:
                    sign = -1 if a % 2 else 1
                    hb1 = h_elt((b - 1,)) if b > 1 else OddElt.one()
                    lhs = ha * hb + (hb * ha).scale(sign)
                    rhs = (h_elt((a + 1,)) * hb1).scale(sign) + hb1 * h_elt((a + 1,))
                    assert lhs == rhs, (a, b)

    def test_defining_relations_e(self):
        for a in range(1, 10):
            for b in range(1, 11 - a):
                ea, eb = e_letter(a), e_letter(b)
                if (a + b) % 2 == 0:
                    assert ea * eb == eb * ea
                else:
                    sign = -1 if a % 2 else 1
                    lhs = ea * eb + (eb * ea).scale(sign)
                    rhs = (e_letter(a + 1) * e_letter(b - 1)).scale(sign)
                    rhs = rhs + e_letter(b - 1) * e_letter(a + 1)
                    assert lhs == rhs, (a, b)

    def test_defining_relations_mixed(self):
        for a in range(1, 10):
            for b in range(1, 11 - a):
                ha, eb = h_elt((a,)), e_letter(b)
                if (a + b) % 2 == 0:
                    assert ha * eb == eb * ha
                else:
                    sign = -1 if a % 2 else 1
                    lhs = ha * eb + (eb * ha).scale(sign)
                    rhs = (h_elt((a + 1,)) * e_letter(b - 1)).scale(sign)
                    rhs = rhs + e_letter(b - 1) * h_elt((a + 1,))
                    assert lhs == rhs, (a, b)

    def test_dimension_is_partition_count(self):
        from oddsym.gramdet import radical_rank

        for n in range(9):
            assert radical_rank(n, -1) == len(partitions_of(n))

    def test_scalar_operations(self):
        x = h_elt((2, 1))
        assert 3 * x - x == x.scale(2)
        assert -x + x == OddElt.zero()
        assert bool(OddElt.zero()) is False


class TestPairing:
    def test_table_values(self):
        assert pair(h_elt((2, 2)), h_elt((2, 2))) == 1
        assert pair(h_elt((1, 1, 1, 1)), h_elt((2, 2))) == 2
        assert pair(h_elt((2, 2, 1)), h_elt((2, 2, 1))) == -3

    def test_symmetry(self):
        for n in range(7):
            for lam in partitions_of(n):
                for mu in partitions_of(n):
                    assert pair(h_elt(lam), h_elt(mu)) == pair(h_elt(mu), h_elt(lam))

    def test_restricted_gram_unimodular(self):
        # the form restricted to span{h_mu : mu >= lam} has determinant +-1,
        # and likewise for span{e_mu : mu > lam^T}
        from oddsym.bases import basis_matrix

        for n in range(1, 7):
            parts = partitions_of(n)
            hh = gram_h(n)
            _, ee = basis_matrix("ee", n)
            for lam in parts:
                hi = [i for i, mu in enumerate(parts) if mu >= lam]
                sub = [[hh[i][j] for j in hi] for i in hi]
                assert det_exact(sub) in (1, -1), ("h", lam)
                lt = transpose(lam)
                ei = [i for i, mu in enumerate(parts) if mu > lt]
                if ei:
                    sub = [[ee[i][j] for j in ei] for i in ei]
                    assert det_exact(sub) in (1, -1), ("e", lam)


class TestCoproduct:
    def test_examples(self):
        assert coproduct(h_elt((2,))) == {
            ((), (2,)): 1,
            ((1,), (1,)): 1,
            ((2,), ()): 1,
        }
        # middle terms cancel at q = -1
        assert coproduct(h_elt((1, 1))) == {((), (1, 1)): 1, ((1, 1), ()): 1}

    def test_e_coproduct(self):
        # Delta(e_n) = sum e_k (x) e_(n-k)
        for n in range(1, 7):
            want = {}
            for k in range(n + 1):
                for p1, c1 in e_elt((k,) if k else ()).terms.items():
                    for p2, c2 in e_elt((n - k,) if n - k else ()).terms.items():
                        key = (p1, p2)
                        want[key] = want.get(key, 0) + c1 * c2
            got = coproduct(e_letter(n))
            assert got == {k: v for k, v in want.items() if v}, n

    def test_coassociativity(self):
        for n in range(6):
            for lam in partitions_of(n):
                x = h_elt(lam)
                left = {}
                for (p1, p2), c in coproduct(x).items():
                    for (a, b), c2 in coproduct(OddElt({p1: 1})).items():
                        key = (a, b, p2)
                        left[key] = left.get(key, 0) + c * c2
                right = {}
                for (p1, p2), c in coproduct(x).items():
                    for (a, b), c2 in coproduct(OddElt({p2: 1})).items():
                        key = (p1, a, b)
                        right[key] = right.get(key, 0) + c * c2
                assert {k: v for k, v in left.items() if v} == {
                    k: v for k, v in right.items() if v
                }, lam

    def test_adjointness_small(self):
        for lam in partitions_of(4):
            x = h_elt(lam)
            delta = coproduct(x)
            for d1 in range(5):
                for y1p in partitions_of(d1):
                    for y2p in partitions_of(4 - d1):
                        y1, y2 = h_elt(y1p), h_elt(y2p)
                        assert pair_tensor(delta, y1, y2) == pair(y1 * y2, x)


class TestEBasis:
    def test_examples(self):
        assert e_coordinates(e_letter(4)) == {(4,): 1}
        assert e_coordinates(h_elt((1,))) == {(1,): 1}
        # h_2 = e_2 + e_11 (inverting e_2 = h_2 - h_11)
        assert e_coordinates(h_elt((2,))) == {(2,): 1, (1, 1): 1}

    def test_round_trip(self):
        for n in range(7):
            for lam in partitions_of(n):
                x = h_elt(lam)
                assert from_e_coordinates(e_coordinates(x)) == x
                y = e_elt(lam)
                assert e_coordinates(y) == {lam: 1} if lam else {(): 1}

    def test_json_round_trip(self):
        x = h_elt((3, 1)) - h_elt((2, 2)).scale(2)
        assert OddElt.from_json_dict(x.to_json_dict()) == x


class TestSemiOrthogonality:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_check_passes(self, n):
        report = semiorthogonality_check(n)
        assert report["ok"], report["failures"][:3]

    def test_diagonal_values(self):
        from oddsym.form import pair_words_odd

        assert pair_words_odd(h_word((2, 2)), e_word((2, 2))) == -1
        assert pair_words_odd(h_word((1, 1, 1)), e_word((3,))) == 1
        assert pair_words_odd(h_word((2, 1)), e_word((3,))) == 0
