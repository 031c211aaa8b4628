import pytest

import bridgekit as bk
from bridgekit.bracket import LaurentPolynomial, jones, jones_fingerprint, kauffman_bracket, verify_virtualization, writhe
from bridgekit.codes import SignedGaussCode
from bridgekit.errors import CodeError, LabelAbsent

from conftest import random_classical
from oracles import brute_bracket, brute_jones

TREFOIL = bk.TREFOIL
FIGURE_EIGHT = SignedGaussCode((1, -2, 3, -4, 2, -1, 4, -3), (1, 1, -1, -1))


class TestLaurent:
    def test_arithmetic(self):
        a = LaurentPolynomial({2: 1, 0: -3})
        b = LaurentPolynomial({-2: 2})
        assert (a + b).coeffs == {2: 1, 0: -3, -2: 2}
        assert (a * b).coeffs == {0: 2, -2: -6}
        assert (a - a) == LaurentPolynomial.zero()
        assert a.times_term(-1, 3).coeffs == {5: -1, 3: 3}

    def test_zero_coefficients_dropped(self):
        assert LaurentPolynomial({4: 0, 1: 2}).coeffs == {1: 2}
        assert (LaurentPolynomial({1: 1}) + LaurentPolynomial({1: -1})) == 0

    def test_int_equality(self):
        assert LaurentPolynomial({0: 1}) == 1
        assert LaurentPolynomial() == 0
        assert LaurentPolynomial({1: 1}) != 1

    def test_wire_format(self):
        assert str(LaurentPolynomial({4: -1, -4: -1})) == "-1*A^4+-1*A^-4"
        assert str(LaurentPolynomial()) == "0"
        assert str(LaurentPolynomial.one()) == "1*A^0"


class TestBracket:
    def test_empty(self):
        assert kauffman_bracket(SignedGaussCode((), ())) == 1

    def test_positive_kink(self):
        assert str(kauffman_bracket(SignedGaussCode((1, -1), (1,)))) == "-1*A^3"

    def test_negative_kink(self):
        assert str(kauffman_bracket(SignedGaussCode((1, -1), (-1,)))) == "-1*A^-3"

    def test_trefoil_eight_state_sum(self):
        assert kauffman_bracket(TREFOIL).coeffs == {7: 1, 3: -1, -5: -1}
        assert kauffman_bracket(TREFOIL).coeffs == brute_bracket(TREFOIL)

    def test_unsigned_rejected(self):
        with pytest.raises(CodeError):
            kauffman_bracket(bk.GaussCode((1, -1)))

    def test_paths_agree(self, rng):
        for _ in range(25):
            c = bk.random_code(rng.randint(1, 9), rng, signed=True)
            assert kauffman_bracket(c, "python") == kauffman_bracket(c, "numpy")

    def test_oracle_agreement(self, rng):
        for _ in range(20):
            c = bk.random_code(rng.randint(0, 6), rng, signed=True)
            assert kauffman_bracket(c).coeffs == brute_bracket(c)

    def test_rotation_invariance(self, rng):
        for _ in range(20):
            c = bk.random_code(rng.randint(1, 6), rng, signed=True)
            r = rng.randrange(len(c.entries))
            rot = c.entries[r:] + c.entries[:r]
            mapping = {}
            for v in rot:
                if abs(v) not in mapping:
                    mapping[abs(v)] = len(mapping) + 1
            entries = tuple(mapping[v] if v > 0 else -mapping[-v] for v in rot)
            signs = [0] * c.crossings
            for old, new in mapping.items():
                signs[new - 1] = c.signs[old - 1]
            rotated = SignedGaussCode(entries, tuple(signs))
            assert kauffman_bracket(rotated) == kauffman_bracket(c)


class TestWrithe:
    def test_empty(self):
        assert writhe(SignedGaussCode((), ())) == 0

    def test_trefoil(self):
        assert writhe(TREFOIL) == -3

    def test_switch_shifts_by_two(self, rng):
        for _ in range(20):
            c = bk.random_code(rng.randint(1, 6), rng, signed=True)
            k = rng.randint(1, c.crossings)
            assert abs(writhe(bk.crossing_switch(c, k)) - writhe(c)) == 2


class TestJones:
    def test_unknot(self):
        assert jones(SignedGaussCode((), ())) == 1

    def test_kink_normalizes_away(self):
        assert jones(SignedGaussCode((1, -1), (1,))) == 1
        assert jones(SignedGaussCode((1, -1), (-1,))) == 1

    def test_trefoil_value(self):
        assert jones(TREFOIL).coeffs == {16: -1, 12: 1, 4: 1}
        assert jones(TREFOIL).coeffs == brute_jones(TREFOIL)
        assert jones(TREFOIL) != 1

    def test_move1_invariance_and_bracket_factor(self, rng):
        for _ in range(40):
            c = bk.random_code(rng.randint(1, 5), rng, signed=True)
            sign = rng.choice((1, -1))
            c2 = bk.apply_move1(
                c, rng.randint(0, len(c.entries)), "insert",
                over_first=rng.random() < 0.5, sign=sign,
            )
            assert jones(c2) == jones(c)
            assert kauffman_bracket(c2) == kauffman_bracket(c).times_term(-1, 3 * sign)

    def test_move2_invariance(self, rng):
        for _ in range(40):
            c = bk.random_code(rng.randint(1, 5), rng, signed=True)
            p1, p2 = sorted((rng.randint(0, len(c.entries)), rng.randint(0, len(c.entries))))
            c2 = bk.apply_move2(
                c, p1, "insert", position2=p2,
                over_first=rng.random() < 0.5, parallel=rng.random() < 0.5,
                sign=rng.choice((1, -1)),
            )
            assert jones(c2) == jones(c)

    def test_move3_invariance(self, rng):
        for shape, pos in (((1, 2, -1, 3, -2, -3), 0), ((1, 2, 4, -4, -1, 3, -2, -3), 0)):
            n = len(shape) // 2
            for s in (1, -1):
                signs = [s, s, s] + [rng.choice((1, -1)) for _ in range(n - 3)]
                c = SignedGaussCode(shape, tuple(signs))
                assert jones(bk.apply_move3(c, pos)) == jones(c)


class TestFingerprint:
    def test_unknots_share(self):
        assert jones_fingerprint(SignedGaussCode((), ())) == jones_fingerprint(
            SignedGaussCode((1, -1), (1,))
        )

    def test_deterministic(self, rng):
        c = bk.random_code(6, rng, signed=True)
        assert jones_fingerprint(c) == jones_fingerprint(c)

    def test_trefoil_differs_from_unknot(self):
        assert jones_fingerprint(TREFOIL) != jones_fingerprint(SignedGaussCode((), ()))


class TestVirtualization:
    def test_trefoil_every_crossing(self):
        for k in (1, 2, 3):
            assert verify_virtualization(TREFOIL, k)

    def test_figure_eight_every_crossing(self):
        for k in range(1, 5):
            assert verify_virtualization(FIGURE_EIGHT, k)

    def test_kink_trivially(self):
        assert verify_virtualization(SignedGaussCode((1, -1), (1,)), 1)

    def test_missing_label(self):
        with pytest.raises(LabelAbsent):
            verify_virtualization(TREFOIL, 4)

    def test_random_classical_codes(self, rng):
        checked = 0
        while checked < 100:
            c = random_classical(rng)
            if not c.crossings:
                continue
            k = rng.randint(1, c.crossings)
            assert verify_virtualization(c, k), (c, k)
            checked += 1

    def test_branch_matches_crossing_sign(self, rng):
        # where the two jones values differ, only the sign-matched branch holds
        from bridgekit.bracket import LaurentPolynomial as LP

        found = 0
        while found < 10:
            c = random_classical(rng)
            if not c.crossings:
                continue
            k = rng.randint(1, c.crossings)
            s = c.sign_of(k)
            v_k = jones(c)
            v_sw = jones(bk.crossing_switch(c, k))
            if v_k == v_sw:
                continue
            v_virt = jones(bk.virtualize_remove(c, k))
            lhs = v_virt * LP({3: 1, -3: 1})
            good = v_k.times_term(1, 3 * s) + v_sw.times_term(1, -3 * s)
            bad = v_k.times_term(1, -3 * s) + v_sw.times_term(1, 3 * s)
            assert lhs == good
            assert lhs != bad
            found += 1
