"""JSON round-trips: rings, values, matrices, witness families; canonical
form is enforced on the way in and emission is byte-stable."""

import random

import pytest

from derivring import (
    JordanPairDerivation,
    NoiseSpec,
    ParseError,
    PolyRing,
    Zmod,
    gen_jordan_instance,
    gen_witness_family,
)
from derivring.sampling import random_matrix, random_pairs
from derivring.serialize import (
    dumps_canonical,
    family_from_obj,
    family_to_obj,
    jordan_family_from_obj,
    jordan_family_to_obj,
    loads_strict,
    matrix_from_json,
    matrix_from_obj,
    matrix_to_json,
    ring_from_obj,
    ring_to_obj,
    value_from_obj,
    value_to_obj,
)

Z5 = Zmod(5)
Z9 = Zmod(9)
P5 = PolyRing(Z5)

RINGS = [Z5, Z9, P5, PolyRing(Z9)]


class TestRingCodec:
    @pytest.mark.parametrize("ring", RINGS)
    def test_round_trip(self, ring):
        assert ring_from_obj(ring_to_obj(ring)) == ring

    def test_expected_shapes(self):
        assert ring_to_obj(Z5) == {"ring": "zmod", "m": 5}
        assert ring_to_obj(P5) == {"ring": "poly", "base": {"ring": "zmod", "m": 5}}

    def test_missing_ring_key(self):
        with pytest.raises(ParseError, match='missing "ring" key'):
            ring_from_obj({"m": 5})

    def test_unknown_kind(self):
        with pytest.raises(ParseError):
            ring_from_obj({"ring": "quaternion"})


class TestValueCodec:
    def test_zmod_round_trip(self):
        for v in range(5):
            elem = Z5.element(v)
            assert value_from_obj(Z5, value_to_obj(elem)) == elem

    def test_poly_round_trip(self):
        elem = P5.element([2, 0, 1])
        assert value_to_obj(elem) == [2, 0, 1]
        assert value_from_obj(P5, [2, 0, 1]) == elem
        assert value_from_obj(P5, []) == P5.zero

    def test_residue_out_of_range_rejected(self):
        with pytest.raises(ParseError, match="non-canonical"):
            value_from_obj(Z5, 5)
        with pytest.raises(ParseError):
            value_from_obj(Z5, -1)

    def test_bool_is_not_an_integer(self):
        with pytest.raises(ParseError):
            value_from_obj(Z5, True)

    def test_trailing_zero_rejected(self):
        with pytest.raises(ParseError, match="trailing zero"):
            value_from_obj(P5, [1, 0])

    def test_poly_coefficient_out_of_range(self):
        with pytest.raises(ParseError):
            value_from_obj(P5, [7])


class TestMatrixCodec:
    def test_round_trip_many(self):
        rng = random.Random(90)
        for _ in range(200):
            ring = RINGS[rng.randrange(len(RINGS))]
            n = rng.randint(1, 4)
            mat = random_matrix(ring, n, rng)
            text = matrix_to_json(mat)
            again = matrix_from_json(text)
            assert again == mat
            assert matrix_to_json(again) == text  # canonical re-emit, byte-exact

    def test_entry_above_modulus_rejected(self):
        with pytest.raises(ParseError):
            matrix_from_json('{"n":1,"ring":{"ring":"zmod","m":5},"rows":[[5]]}')

    def test_missing_keys(self):
        with pytest.raises(ParseError, match='missing "ring" key'):
            matrix_from_obj({"n": 1, "rows": [[0]]})
        with pytest.raises(ParseError, match='missing "rows" key'):
            matrix_from_obj({"n": 1, "ring": {"ring": "zmod", "m": 5}})

    def test_malformed_json_reports_position(self):
        with pytest.raises(ParseError) as err:
            matrix_from_json('{"n": 1,')
        assert err.value.line is not None
        assert err.value.column is not None

    def test_row_shape_enforced(self):
        with pytest.raises(ParseError):
            matrix_from_json('{"n":2,"ring":{"ring":"zmod","m":5},"rows":[[1,2]]}')


class TestFamilyCodec:
    def test_witness_family_round_trip(self):
        rng = random.Random(91)
        hidden = random_matrix(Z9, 3, rng)
        _, family = gen_witness_family(hidden, NoiseSpec.CENTRAL_SHIFTS, seed=13)
        obj = family_to_obj(family)
        again = family_from_obj(obj)
        assert again.offdiag == family.offdiag
        assert again.c == family.c
        assert dumps_canonical(family_to_obj(again)) == dumps_canonical(obj)

    def test_restored_family_is_unvalidated(self):
        rng = random.Random(92)
        hidden = random_matrix(Z5, 2, rng)
        _, family = gen_witness_family(hidden, NoiseSpec.NONE, seed=14)
        again = family_from_obj(family_to_obj(family))
        assert not again.validated

    def test_jordan_family_round_trip(self):
        rng = random.Random(93)
        hidden = JordanPairDerivation(Z9, 3, random_pairs(Z9, 3, rng, 2))
        _, family = gen_jordan_instance(hidden, seed=15)
        obj = jordan_family_to_obj(family)
        again = jordan_family_from_obj(obj)
        assert again.diag == family.diag

    def test_incomplete_family_is_a_parse_error(self):
        rng = random.Random(94)
        hidden = random_matrix(Z5, 2, rng)
        _, family = gen_witness_family(hidden, NoiseSpec.NONE, seed=16)
        obj = family_to_obj(family)
        obj["witnesses"] = obj["witnesses"][:1]
        with pytest.raises(ParseError):
            family_from_obj(obj)


class TestCanonicalDumps:
    def test_key_order_is_stable(self):
        assert dumps_canonical({"b": 1, "a": 2}) == '{"a":2,"b":1}'

    def test_loads_strict_error_carries_position(self):
        with pytest.raises(ParseError) as err:
            loads_strict("[1, 2")
        assert err.value.line == 1
