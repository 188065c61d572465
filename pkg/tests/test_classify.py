"""classify: shapes, generic units, periodic sets, bounds, enumeration."""

import pytest

from ringunits import (
    ONE,
    X,
    ZERO,
    IntPoly,
    InvalidInputError,
    ShapeNotCyclotomicError,
    SizeLimitError,
    classify_roots,
    compute_bound,
    cyclotomic,
    defines_units_on_roots,
    enumerate_orders,
    factor_shape,
    is_generic,
    unit_residues,
)

from conftest import P, random_poly

REMAINDER_POOL = [
    P(-1, -1, 1),  # x^2 - x - 1
    P(3, 1, 1),  # x^2 + x + 3
    P(-1, -1, 0, 1),  # x^3 - x - 1
    P(-2, 1),  # x - 2
    P(1, 3),  # 3x + 1
]


def _random_shape_product(rng):
    f = ONE
    for _ in range(rng.randint(0, 3)):
        f = f * cyclotomic(rng.randint(1, 30))
    if rng.random() < 0.4:
        f = f * rng.choice(REMAINDER_POOL)
    f = f.shift(rng.randint(0, 3))
    f = f * rng.choice([1, -1]) * rng.randint(1, 5)
    return f


class TestFactorShape:
    def test_spec_examples(self):
        s = factor_shape(P(0, 1, 1, 1))  # x^3 + x^2 + x
        assert (s.sign, s.x_power, s.cyclo_factors) == (1, 1, ((3, 1),))
        assert s.remainder == ONE

        s = factor_shape(cyclotomic(6) * cyclotomic(6))
        assert s.cyclo_factors == ((6, 2),)

        s = factor_shape(P(-1, -1, 1))
        assert s.cyclo_factors == () and s.remainder == P(-1, -1, 1)

        s = factor_shape(P(2, 2))
        assert s.content == 2 and s.cyclo_factors == ((2, 1),)

    def test_sign_extraction(self):
        s = factor_shape(-cyclotomic(6))
        assert s.sign == -1 and s.cyclo_factors == ((6, 1),)
        assert s.reconstruct() == -cyclotomic(6)

    def test_zero_rejected(self):
        with pytest.raises(InvalidInputError):
            factor_shape(ZERO)

    def test_remainder_invariants(self, rng):
        for _ in range(100):
            f = _random_shape_product(rng)
            s = factor_shape(f)
            assert s.remainder.leading_coefficient > 0
            assert s.remainder.trailing_index == 0
            # no cyclotomic factor survives in the remainder
            from ringunits import divide_exact, euler_phi

            d = s.remainder.degree
            for m in range(1, 2 * d * d + 1):
                if euler_phi(m) <= d:
                    assert divide_exact(s.remainder, cyclotomic(m)) is None

    def test_roundtrip_corpus(self, rng):
        for _ in range(200):
            f = _random_shape_product(rng)
            assert factor_shape(f).reconstruct() == f


class TestIsGeneric:
    def test_spec_examples(self):
        v = is_generic(cyclotomic(6))
        assert v.is_generic and v.modulus == 6

        v = is_generic(cyclotomic(4))
        assert not v.is_generic and v.offending_indices == (4,)

        v = is_generic(X * cyclotomic(10) * cyclotomic(12))
        assert v.is_generic and v.modulus == 60

        v = is_generic(P(-1, -1, 1))
        assert not v.is_generic and v.shape.remainder == P(-1, -1, 1)

    def test_monomials_and_constants(self):
        assert is_generic(X).is_generic and is_generic(X).modulus == 1
        assert is_generic(-ONE).is_generic
        assert not is_generic(P(2)).is_generic  # content 2

    def test_twice_prime_power_indices_allowed(self):
        # 10 = 2*5 is not a prime power, so Phi_10 defines generic units
        v = is_generic(cyclotomic(10))
        assert v.is_generic and v.modulus == 10

    def test_prime_power_indices_rejected(self):
        for m in (1, 2, 3, 4, 8, 9, 16, 25, 27):
            assert not is_generic(cyclotomic(m)).is_generic

    def test_zero_rejected(self):
        with pytest.raises(InvalidInputError):
            is_generic(ZERO)


class TestUnitResidues:
    def test_spec_examples(self):
        phi6 = factor_shape(cyclotomic(6))
        ps = unit_residues(phi6, 1)
        assert (ps.modulus, ps.sorted_residues()) == (6, [1, 5])

        ps = unit_residues(phi6, -1)
        assert (ps.modulus, ps.sorted_residues()) == (6, [2, 4])

        ps = unit_residues(factor_shape(cyclotomic(3) * cyclotomic(4)), 2)
        assert (ps.modulus, ps.sorted_residues()) == (12, [0])

        ps = unit_residues(factor_shape(cyclotomic(2)), 1)
        assert ps.is_empty and ps.modulus == 2

    def test_x_power_needs_unit_a(self):
        shape = factor_shape(X * cyclotomic(3) * cyclotomic(4))
        assert unit_residues(shape, 2).is_empty  # x kills a = 2
        assert not unit_residues(factor_shape(X), 1).is_empty

    def test_shape_guard(self):
        with pytest.raises(ShapeNotCyclotomicError):
            unit_residues(factor_shape(P(-1, -1, 1)), 1)
        with pytest.raises(ShapeNotCyclotomicError):
            unit_residues(factor_shape(P(2, 2)), 1)

    def test_membership_matches_resultants(self):
        # exactness: n in M iff n mod L in residues, cross-checked per n
        cases = [
            (cyclotomic(6), 1),
            (cyclotomic(6), -1),
            (cyclotomic(3) * cyclotomic(4), 2),
            (cyclotomic(2), -2),
            (cyclotomic(12) * cyclotomic(10), 1),
        ]
        for f, a in cases:
            ps = unit_residues(factor_shape(f), a)
            for n in range(1, 80):
                assert (n in ps) == defines_units_on_roots(f, n, a).is_unit, (f, a, n)

    def test_large_a_always_empty(self):
        shape = factor_shape(cyclotomic(6) * cyclotomic(12))
        for a in (3, -3, 4, 7, -10):
            assert unit_residues(shape, a).is_empty


class TestComputeBound:
    def test_spec_examples(self):
        assert compute_bound(P(-2, 1), 1) == 1029  # 3 * 7^3
        assert compute_bound(P(-1, -1, 1), 1) == 147  # 3 * 7^2
        assert compute_bound(P(-1, 2), 3) == 50421  # 3 * 7^5

    def test_degree_span(self):
        # trailing x-power shifts d: x^2(x-2) has n-d = 1 again
        assert compute_bound(P(0, 0, -2, 1), 1) == 1029

    def test_errors(self):
        with pytest.raises(InvalidInputError):
            compute_bound(ZERO, 1)
        with pytest.raises(InvalidInputError):
            compute_bound(P(1, 1), 0)
        with pytest.raises(SizeLimitError):
            compute_bound(P(10**9 + 7, 10**9 + 9), 1)


class TestClassifyRoots:
    def test_spec_examples(self):
        c = classify_roots(cyclotomic(6), 1, 100)
        assert c.kind == "infinite"
        assert (c.periodic.modulus, c.periodic.sorted_residues()) == (6, [1, 5])

        c = classify_roots(P(-2, 1), 1, 100)
        assert c.kind == "finite"
        assert (c.bound, c.members, c.exhaustive) == (1029, (1,), False)

        c = classify_roots(P(-1, -1, 1), 1, 100)
        assert (c.bound, c.members) == (147, (1, 2))

        c = classify_roots(P(1, 1), -2, 100)
        assert c.kind == "infinite"
        assert (c.periodic.modulus, c.periodic.sorted_residues()) == (2, [1])

    def test_all_and_empty(self):
        assert classify_roots(ONE, 7).kind == "all"
        assert classify_roots(-ONE, -2).kind == "all"
        assert classify_roots(ZERO, 1).kind == "empty"
        assert classify_roots(P(2, 2), 1).kind == "empty"  # content 2
        assert classify_roots(cyclotomic(4), 1).kind == "empty"

    def test_invalid_a(self):
        with pytest.raises(InvalidInputError):
            classify_roots(ONE, 0)

    def test_x_minus_2_against_formula(self):
        # |Res(x^n - 1, x - 2)| = 2^n - 1, so the only unit order is n = 1
        for n in range(1, 40):
            v = defines_units_on_roots(P(-2, 1), n, 1)
            assert abs(v.resultant) == 2**n - 1

    def test_fibonacci_poly_against_lucas(self):
        # |Res(x^n - 1, x^2-x-1)| = |1 + (-1)^n - L_n| with Lucas numbers
        lucas = [2, 1]
        while len(lucas) < 41:
            lucas.append(lucas[-1] + lucas[-2])
        for n in range(1, 41):
            v = defines_units_on_roots(P(-1, -1, 1), n, 1)
            assert abs(v.resultant) == abs(1 + (-1) ** n - lucas[n])

    def test_minus_two_requires_uniform_2adic_valuation(self):
        # mixed 2-adic valuations give the empty set for a = -2 ...
        c = classify_roots(cyclotomic(2) * cyclotomic(4), -2)
        assert c.kind == "empty"
        # ... equal valuations give a periodic set
        c = classify_roots(cyclotomic(2), -2)
        assert c.kind == "infinite" and c.periodic.sorted_residues() == [1]
        c = classify_roots(cyclotomic(2) * cyclotomic(6), -2)
        assert c.kind == "infinite"
        assert (c.periodic.modulus, c.periodic.sorted_residues()) == (6, [3])

    def test_finite_members_within_bound(self, rng):
        for f in [P(-2, 1), P(-1, -1, 1), P(3, 1, 1), cyclotomic(6) * P(-2, 1)]:
            c = classify_roots(f, 1, 200)
            assert c.kind == "finite"
            assert len(c.members) <= c.bound
            assert c.exhaustive is False


class TestEnumerateOrders:
    def test_spec_examples(self):
        assert enumerate_orders(P(-2, 1), 1, 50) == [1]
        assert enumerate_orders(cyclotomic(4), 1, 50) == []
        assert enumerate_orders(cyclotomic(6), -1, 20) == [2, 4, 8, 10, 14, 16, 20]

    def test_residue_and_scan_paths_agree(self):
        pure = [
            cyclotomic(6),
            cyclotomic(10) * cyclotomic(12),
            X * cyclotomic(6),
            cyclotomic(4),                     # non-generic, empty set
            cyclotomic(2) * cyclotomic(4),     # mixed valuations
        ]
        for f in pure:
            for a in (1, -1, 2, -2, 3, -3):
                fast = enumerate_orders(f, a, 200)
                slow = [
                    n
                    for n in range(1, 201)
                    if defines_units_on_roots(f, n, a).is_unit
                ]
                assert fast == slow, (f, a)

    def test_errors(self):
        with pytest.raises(InvalidInputError):
            enumerate_orders(ZERO, 1, 10)
        with pytest.raises(InvalidInputError):
            enumerate_orders(ONE, 0, 10)
        with pytest.raises(InvalidInputError):
            enumerate_orders(ONE, 1, 0)


class TestNonGenericFiniteness:
    def test_non_generic_sets_are_small(self, rng):
        # non-generic f at a = 1: the member count stays within the bound
        for _ in range(25):
            f = _random_shape_product(rng)
            verdict = is_generic(f)
            if verdict.is_generic:
                continue
            if f.content() != 1:
                assert enumerate_orders(f, 1, 200) == []
                continue
            members = enumerate_orders(f, 1, 200)
            assert len(members) <= compute_bound(f, 1)

    def test_named_non_generic_to_500(self):
        for f in [cyclotomic(4), P(-2, 1), P(-1, -1, 1), cyclotomic(9)]:
            assert not is_generic(f).is_generic
            members = enumerate_orders(f, 1, 500)
            assert len(members) <= compute_bound(f, 1)

    def test_generic_evidence(self, rng):
        # generic f: unit on every order coprime to D (moderate range)
        import math

        for f in [cyclotomic(6), cyclotomic(10) * cyclotomic(12), X * cyclotomic(6) ** 2]:
            verdict = is_generic(f)
            assert verdict.is_generic
            for n in range(1, 120):
                if math.gcd(n, verdict.modulus) == 1:
                    assert defines_units_on_roots(f, n, 1).is_unit, (f, n)
