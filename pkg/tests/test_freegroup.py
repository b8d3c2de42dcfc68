import random

import pytest

from biorder.freegroup import (CONFIRMED, NECESSARY_ONLY, NOT_AN_AUTOMORPHISM,
                               FreeMap, GeneratorRangeError, RankMismatchError,
                               Word, apply_map, commutator, compose,
                               format_word, identity, identity_map, invert,
                               inverse_map, letter, multiply, parse_word,
                               random_word, reduce, verify_automorphism)
from biorder.corpus import corpus_entries
from helpers import W, naive_reduce


X, Y = (0, 1), (1, 1)
Xi, Yi = (0, -1), (1, -1)


class TestReduce:
    def test_cancelling_pair(self):
        assert reduce(2, [X, Xi]) == identity(2)

    def test_inner_cancellation_then_merge(self):
        assert reduce(2, [X, Y, Yi, X]) == W("x x")

    def test_nested_cancellation(self):
        assert reduce(2, [(0, 1), (1, 1), (1, -1), (0, -1)]) == identity(2)

    def test_out_of_range_index(self):
        with pytest.raises(GeneratorRangeError):
            reduce(2, [(2, 1)])

    def test_matches_naive_oracle_on_raw_sequences(self):
        rng = random.Random(11)
        for _ in range(300):
            raw = [(rng.randrange(2), rng.choice((1, -1)))
                   for _ in range(rng.randint(0, 14))]
            assert reduce(2, raw).letters == naive_reduce(raw)

    def test_idempotent(self):
        rng = random.Random(12)
        for _ in range(200):
            w = random_word(rng, 3, 12, allow_identity=True)
            assert reduce(3, w.letters) == w


class TestGroupOps:
    def test_multiply_inverse_pair(self):
        assert multiply(W("x"), W("X")) == identity(2)

    def test_multiply_seam_cancellation(self):
        assert multiply(W("x y"), W("Y x")) == W("x x")

    def test_multiply_no_cancellation(self):
        assert multiply(W("a b", "ab"), W("a b", "ab")) == W("a b a b", "ab")

    def test_multiply_rank_mismatch(self):
        with pytest.raises(RankMismatchError):
            multiply(W("x"), parse_word("a", ("a", "b", "c")))

    def test_invert(self):
        assert invert(W("x y")) == W("Y X")
        assert invert(identity(2)) == identity(2)
        assert invert(W("x x")) == W("X X")

    def test_commutator_self_is_trivial(self):
        assert commutator(W("x"), W("x")) == identity(2)

    def test_commutator_definition(self):
        assert commutator(W("x"), W("y")) == W("x y X Y")

    def test_commutator_with_shared_letters(self):
        # oracle: literal concatenation x y . y . Y X . Y, then free reduction
        w1, w2 = W("x y"), W("y")
        raw = w1.letters + w2.letters + invert(w1).letters + invert(w2).letters
        expected = Word(2, naive_reduce(raw))
        assert commutator(w1, w2) == expected
        assert expected == W("x y X Y")

    def test_group_axioms_on_random_triples(self):
        rng = random.Random(13)
        for _ in range(1000):
            u = random_word(rng, 2, 8, allow_identity=True)
            v = random_word(rng, 2, 8, allow_identity=True)
            w = random_word(rng, 2, 8, allow_identity=True)
            assert multiply(multiply(u, v), w) == multiply(u, multiply(v, w))
            assert multiply(u, invert(u)) == identity(2)


def trefoil_map() -> FreeMap:
    return FreeMap(2, (W("b", "ab"), W("b A", "ab")))


def figure8_map() -> FreeMap:
    return FreeMap(2, (W("a b a", "ab"), W("a b", "ab")))


class TestFreeMaps:
    def test_apply_trefoil(self):
        assert apply_map(trefoil_map(), W("a b", "ab")) == W("b b A", "ab")

    def test_apply_to_identity(self):
        assert apply_map(trefoil_map(), identity(2)) == identity(2)

    def test_apply_figure8_to_inverse_letter(self):
        assert apply_map(figure8_map(), W("B", "ab")) == W("B A", "ab")

    def test_compose_identity_laws(self):
        phi = trefoil_map()
        assert compose(phi, identity_map(2)).images == phi.images
        assert compose(identity_map(2), phi).images == phi.images

    def test_compose_trefoil_squared(self):
        phi2 = compose(trefoil_map(), trefoil_map())
        assert phi2.images == (W("b A", "ab"), W("b A B", "ab"))

    def test_homomorphism_property_per_corpus_map(self):
        rng = random.Random(14)
        for entry in corpus_entries():
            phi = entry.record.phi
            for _ in range(1000):
                u = random_word(rng, phi.rank, 6, allow_identity=True)
                v = random_word(rng, phi.rank, 6, allow_identity=True)
                assert apply_map(phi, multiply(u, v)) == multiply(
                    apply_map(phi, u), apply_map(phi, v))

    def test_corpus_inverses_fix_generators(self):
        for entry in corpus_entries():
            phi = entry.record.phi
            psi = inverse_map(phi)
            for both in (compose(phi, psi), compose(psi, phi)):
                for g in range(phi.rank):
                    assert both.images[g] == letter(phi.rank, g)


class TestVerifyAutomorphism:
    def test_trefoil_with_inverse_confirmed(self):
        phi = FreeMap(2, (W("b", "ab"), W("b A", "ab")),
                      (W("B a", "ab"), W("a", "ab")))
        assert verify_automorphism(phi).status == CONFIRMED

    def test_determinant_two_is_rejected(self):
        phi = FreeMap(2, (W("a a", "ab"), W("b", "ab")))
        report = verify_automorphism(phi)
        assert report.status == NOT_AN_AUTOMORPHISM
        assert report.determinant == 2

    def test_identity_map_confirmed(self):
        assert verify_automorphism(identity_map(3)).status == CONFIRMED

    def test_no_inverse_necessary_only(self):
        assert verify_automorphism(trefoil_map()).status == NECESSARY_ONLY

    def test_wrong_inverse_rejected(self):
        phi = FreeMap(2, (W("b", "ab"), W("b A", "ab")),
                      (W("a", "ab"), W("b", "ab")))
        assert verify_automorphism(phi).status == NOT_AN_AUTOMORPHISM


class TestGenerator:
    def test_valid(self):
        from biorder.freegroup import Generator
        g = Generator(0, "x")
        assert (g.index, g.name) == (0, "x")

    def test_invalid_name(self):
        from biorder.freegroup import Generator
        with pytest.raises(ValueError):
            Generator(0, "X")
        with pytest.raises(ValueError):
            Generator(0, "xy")

    def test_negative_index(self):
        from biorder.freegroup import Generator
        with pytest.raises(GeneratorRangeError):
            Generator(-1, "x")


class TestWordSyntax:
    def test_parse_uppercase_is_inverse(self):
        assert parse_word("B X", ("x", "a", "b", "c")) == Word(
            4, ((2, -1), (0, -1)))

    def test_identity_spellings(self):
        assert parse_word("e", ("x", "y")) == identity(2)
        assert parse_word("", ("x", "y")) == identity(2)

    def test_format_round_trip(self):
        rng = random.Random(15)
        names = ("x", "a", "b", "c")
        for _ in range(200):
            w = random_word(rng, 4, 10, allow_identity=True)
            assert parse_word(format_word(w, names), names) == w

    def test_unknown_generator(self):
        with pytest.raises(ValueError):
            parse_word("q", ("x", "y"))
