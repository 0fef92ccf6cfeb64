import json

import pytest

from polyadic.errors import ArityMismatchError, NoFiniteOrderError
from polyadic.finite import (
    REPORT_KEYS,
    additive_quer_index,
    characteristic,
    element_order,
    find_units,
    find_zero,
    finite_ring,
    is_field,
    k_add,
    k_mul,
    mult_querelements,
    proper_subfields,
    report_to_dict,
    structure_report,
)
from conftest import scan_rings


def reps(fr, ks):
    return [fr.rep(k) for k in ks]


class TestIndexOperations:
    def test_addition(self):
        fr = finite_ring(1, 2, 3)
        assert k_add(fr, [0, 0, 0]) == 1  # 1+1+1 = 3
        fr = finite_ring(2, 3, 5)
        assert k_add(fr, [0, 0, 0, 0]) == 2  # 2+2+2+2 = 8

    def test_binary_limit_addition_is_plain_modular(self):
        fr = finite_ring(0, 1, 7)
        for x in range(7):
            for y in range(7):
                assert k_add(fr, [x, y]) == (x + y) % 7
                assert k_mul(fr, [x, y]) == (x * y) % 7

    def test_multiplication(self):
        fr = finite_ring(2, 3, 5)
        assert fr.rep(k_mul(fr, [0, 0, 0])) == 8
        fr = finite_ring(5, 6, 6)
        assert fr.rep(k_mul(fr, [0, 0, 0])) == 17
        fr = finite_ring(5, 8, 2)
        assert fr.rep(k_mul(fr, [0, 0, 0])) == 13

    def test_arity_checked(self):
        fr = finite_ring(2, 3, 5)
        with pytest.raises(ArityMismatchError):
            k_mul(fr, [0, 0])
        with pytest.raises(ArityMismatchError):
            k_add(fr, [0] * 3)

    def test_representative_round_trip(self):
        fr = finite_ring(3, 5, 4)
        for k in fr.elements():
            assert fr.index_of(fr.rep(k)) == k
        assert fr.index_of(3 + 5 * 7) == 3  # wraps modulo 20


class TestZeroAndUnits:
    def test_zero_detection(self):
        assert finite_ring(1, 2, 3).rep(find_zero(finite_ring(1, 2, 3))) == 3
        assert finite_ring(2, 3, 5).rep(find_zero(finite_ring(2, 3, 5))) == 5
        assert find_zero(finite_ring(5, 8, 2)) is None

    def test_unit_detection(self):
        fr = finite_ring(5, 6, 4)
        assert reps(fr, find_units(fr)) == [5, 11, 17, 23]
        fr = finite_ring(4, 5, 3)
        assert reps(fr, find_units(fr)) == [4, 14]
        assert fr.rep(find_zero(fr)) == 9
        assert find_units(finite_ring(3, 8, 2)) == ()

    def test_querelements(self):
        fr = finite_ring(5, 8, 2)
        assert reps(fr, mult_querelements(fr, 0)) == [13]
        assert reps(fr, mult_querelements(fr, 1)) == [5]
        fr = finite_ring(2, 3, 6)
        assert reps(fr, mult_querelements(fr, 0)) == [5, 14]
        fr = finite_ring(5, 6, 4)
        for e in find_units(fr):
            assert mult_querelements(fr, e) == (e,)


class TestFieldPredicate:
    def test_published_verdicts(self):
        assert is_field(finite_ring(1, 3, 2))
        assert not is_field(finite_ring(4, 6, 2))
        assert not is_field(finite_ring(2, 3, 6))

    def test_binary_limit_fields_have_prime_order(self):
        for q in range(2, 12):
            expected = all(q % d for d in range(2, q))
            assert is_field(finite_ring(0, 1, q)) == expected, q

    def test_nonunique_querelement_blocks_the_field(self):
        fr = finite_ring(2, 3, 6)
        assert len(mult_querelements(fr, 0)) > 1

    def test_field_iff_unique_querelements(self, full_grid):
        for fr in full_grid:
            report = structure_report(fr)
            unique = all(
                len(mult_querelements(fr, k)) == 1
                for k in fr.elements()
                if k != report.zero
            )
            closed = report.zero is None or all(
                k_mul(fr, [k] * fr.ring.n) != report.zero
                for k in fr.elements()
                if k != report.zero
            )
            assert report.is_field == (unique and closed), fr


class TestCharacteristic:
    def test_published_values(self):
        assert characteristic(finite_ring(2, 3, 5)) == 3
        assert characteristic(finite_ring(1, 2, 3)) == 1
        assert characteristic(finite_ring(1, 4, 7)) == 5

    def test_absent_without_zero_or_unit(self):
        assert characteristic(finite_ring(5, 8, 2)) is None
        assert characteristic(finite_ring(5, 6, 4)) is None  # all units, no zero

    def test_binary_limit_is_one_less_than_classical(self):
        # over Z/q the classical characteristic is q; the polyadic one
        # counts additions, hence q - 1
        for q in (2, 3, 5, 7):
            assert characteristic(finite_ring(0, 1, q)) == q - 1


class TestElementOrders:
    def test_published_orders(self):
        assert element_order(finite_ring(1, 2, 3), 2) == 2  # element 5
        assert element_order(finite_ring(7, 8, 8), 0) == 4  # element 7
        fr = finite_ring(5, 6, 4)
        assert all(element_order(fr, e) == 1 for e in find_units(fr))

    def test_no_finite_order(self):
        # 10 in the order-2 ring over the class 4 mod 6 collapses onto the
        # zero 4 and never returns.
        with pytest.raises(NoFiniteOrderError):
            element_order(finite_ring(4, 6, 2), 1)


class TestStructureReport:
    def test_all_unit_field(self):
        rep = structure_report(finite_ring(5, 6, 4))
        assert rep.is_field and rep.zeroless and not rep.nonunital
        assert rep.kappa_e == 4 and rep.lambda_p == 1

    def test_zeroless_nonunital_field(self):
        rep = structure_report(finite_ring(5, 8, 2))
        assert rep.is_field and rep.zeroless and rep.nonunital
        assert rep.lambda_p == 2 and rep.q_star == 2

    def test_non_field(self):
        assert not structure_report(finite_ring(1, 2, 6)).is_field

    def test_json_report_shape(self):
        payload = report_to_dict(structure_report(finite_ring(5, 8, 2)))
        assert tuple(payload.keys()) == REPORT_KEYS
        assert payload["zero"] is None and payload["chi_p"] is None
        assert payload["zeroless"] and payload["nonunital"]
        text = json.dumps(payload)
        assert text.index('"a"') < text.index('"q_star"') < text.index('"element_orders"')

    def test_fingerprints_separate_same_shape_rings(self):
        # same arities and order, structurally different rings
        for q in (2, 4, 8):
            lo = structure_report(finite_ring(5, 8, q))
            hi = structure_report(finite_ring(7, 8, q))
            assert (lo.kappa_e, lo.lambda_p) != (hi.kappa_e, hi.lambda_p)


class TestScanProperties:
    def test_representative_map_is_a_homomorphism(self):
        # operating on indices then taking representatives equals operating
        # on representatives modulo b*q
        from itertools import combinations_with_replacement

        for fr in scan_rings(6, 6):
            m, n, mod = fr.ring.m, fr.ring.n, fr.modulus
            for ks in combinations_with_replacement(range(fr.q), n):
                prod = 1
                for k in ks:
                    prod = prod * fr.rep(k) % mod
                assert fr.rep(k_mul(fr, list(ks))) == prod
            for ks in combinations_with_replacement(range(fr.q), m):
                assert fr.rep(k_add(fr, list(ks))) == sum(fr.rep(k) for k in ks) % mod

    def test_additive_structure_is_always_a_group(self, full_grid):
        for fr in full_grid:
            for k in fr.elements():
                quer = additive_quer_index(fr, k)
                assert k_add(fr, [k] * (fr.ring.m - 1) + [quer]) == k

    def test_zero_implies_prime_order_in_fields(self, full_grid):
        for fr in full_grid:
            report = structure_report(fr)
            if report.is_field and report.zero is not None:
                q = fr.q
                assert q >= 2 and all(q % d for d in range(2, q)), fr

    def test_neutral_sequences(self, full_grid):
        # in an n-admissible single-unit field, q*(n-1) copies of any element
        # act neutrally, and every element is q*-idempotent
        checked = 0
        for fr in full_grid:
            report = structure_report(fr)
            d = fr.ring
            if not (report.is_field and d.n >= 3 and report.kappa_e == 1):
                continue
            if report.q_star < d.n or (report.q_star - 1) % (d.n - 1) != 0:
                continue
            checked += 1
            mod = fr.modulus
            power = report.q_star * (d.n - 1)
            for y in fr.elements():
                if y == report.zero:
                    continue
                py = pow(fr.rep(y), power, mod)
                assert py * fr.rep(y) % mod == fr.rep(y)
                for x in fr.elements():
                    assert py * fr.rep(x) % mod == fr.rep(x)
        assert checked >= 10

    def test_unit_count_times_order_is_reduced_order(self, full_grid):
        for fr in full_grid:
            report = structure_report(fr)
            d = fr.ring
            if not report.is_field or report.zero is not None:
                continue
            if report.nonunital or d.n < 3 or d.b % d.a == 0:
                continue
            if (report.q_star - 1) % (d.n - 1) == 0 and report.q_star >= d.n:
                continue  # admissible reduced order forces a single unit
            assert report.kappa_e * report.lambda_p == report.q_star, fr

    def test_subfield_detector_positive_control(self):
        # the binary ring of order 6 is not a field but contains images of
        # the two prime fields; the detector must see both
        found = proper_subfields(finite_ring(0, 1, 6))
        assert (0, 3) in found
        assert (0, 2, 4) in found

    def test_no_proper_subfields(self, full_grid):
        for fr in full_grid:
            if fr.q > 7 or not is_field(fr):
                continue
            assert proper_subfields(fr) == [], fr
