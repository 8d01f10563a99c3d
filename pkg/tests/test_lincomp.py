import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geomseq._validation import ParameterError
from geomseq.lincomp import (
    berlekamp_massey,
    binom_mod,
    hasse_at_one,
    hasse_derivative,
    linear_complexity,
    minimal_poly_gcd,
    multiplicity_at_one,
    offset_lc_change,
    sequence_poly,
)
from geomseq.poly import DensePoly
from geomseq.seqgen import SymbolSequence, complement_sequence

from conftest import ntu


def seq_of(symbols, ell=2):
    return SymbolSequence.from_symbols(np.asarray(symbols), ell)


def shortest_recurrence_brute(symbols, ell):
    """Smallest L such that some recurrence of order L fits two periods (tiny inputs only)."""
    import itertools

    s = list(symbols) * 2
    n = len(s)
    for L in range(0, len(symbols) + 1):
        for taps in itertools.product(range(ell), repeat=L):
            if all(s[i] == sum(t * s[i - 1 - k] for k, t in enumerate(taps)) % ell for i in range(L, n)):
                return L
    raise AssertionError("unreachable")


def division_multiplicity(f):
    one = DensePoly((f.ell - 1, 1), f.ell)
    k = 0
    while True:
        q, r = divmod(f, one)
        if not r.is_zero():
            return k
        f, k = q, k + 1


@pytest.mark.parametrize("method", ["gcd", "bm"])
def test_zero_and_impulse(method):
    assert linear_complexity(seq_of([0] * 7), method) == 0
    assert linear_complexity(seq_of([1] + [0] * 9), method) == 10


def test_constant_sequence_has_x_minus_one():
    for ell in (2, 3, 5):
        rep = minimal_poly_gcd(seq_of([1] * 6, ell))
        assert rep.linear_complexity == 1
        assert rep.minimal_poly == DensePoly((ell - 1, 1), ell)


def test_unknown_method():
    with pytest.raises(ParameterError):
        linear_complexity(seq_of([1, 0]), "fft")


@settings(max_examples=120, deadline=None)
@given(st.sampled_from([2, 3]), st.integers(1, 9), st.data())
def test_lc_matches_exhaustive_search(ell, N, data):
    symbols = data.draw(st.lists(st.integers(0, ell - 1), min_size=N, max_size=N))
    if ell == 3 and N > 6:
        symbols = symbols[:6]
    s = seq_of(symbols, ell)
    want = shortest_recurrence_brute(symbols, ell)
    assert minimal_poly_gcd(s).linear_complexity == want
    assert berlekamp_massey(s).linear_complexity == want


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.integers(1, 120), st.integers(0, 2**32))
def test_minimal_poly_divides_and_regenerates(ell, N, seed):
    symbols = np.random.default_rng(seed).integers(0, ell, N)
    rep = minimal_poly_gcd(seq_of(symbols, ell))
    bm = berlekamp_massey(seq_of(symbols, ell))
    assert (rep.linear_complexity, rep.minimal_poly) == (bm.linear_complexity, bm.minimal_poly)
    f = rep.minimal_poly
    assert (DensePoly.x_n_minus_one(N, ell) % f).is_zero()
    L = rep.linear_complexity
    if L == 0:
        assert not symbols.any()
        return
    c = f.coeffs  # monic: s_{n+L} = -sum c_i s_{n+i}
    s = list(symbols) * 3
    for n in range(2 * N):
        assert s[n + L] == (-sum(c[i] * s[n + i] for i in range(L))) % ell


def test_binomials_by_lucas():
    from math import comb

    for ell in (2, 3, 5):
        for n in range(40):
            for k in range(n + 2):
                assert binom_mod(n, k, ell) == comb(n, k) % ell


def test_hasse_examples():
    x2 = DensePoly((0, 0, 1), 2)
    f = DensePoly((1, 1, 0, 1), 3)
    assert hasse_derivative(f, 0) == f
    assert hasse_derivative(x2, 1).is_zero()
    assert hasse_derivative(x2, 2) == DensePoly((1,), 2)
    assert hasse_derivative(f, 5).is_zero()
    with pytest.raises(ParameterError):
        hasse_derivative(f, -1)


def test_hasse_matches_definition():
    from math import comb

    rng = np.random.default_rng(3)
    for ell in (2, 3, 7):
        f = DensePoly(tuple(rng.integers(0, ell, 40)), ell)
        for k in range(8):
            want = DensePoly(tuple(comb(i, k) * a for i, a in enumerate(f.coeffs))[k:], ell)
            assert hasse_derivative(f, k) == want
            assert hasse_at_one(f, k) == want(1)


def test_multiplicity_examples():
    x_minus_1 = DensePoly((1, 1), 2)
    assert multiplicity_at_one(x_minus_1 * x_minus_1 * x_minus_1) == 3
    assert multiplicity_at_one(DensePoly((1, 0, 1, 1), 2)) == 0
    with pytest.raises(ParameterError):
        multiplicity_at_one(DensePoly((), 2))


@pytest.mark.parametrize("p,ell", [(7, 2), (13, 2), (13, 3), (31, 5), (31, 3)])
def test_multiplicity_of_x_p_minus_1(p, ell):
    f = DensePoly.x_n_minus_one(p - 1, ell)
    assert multiplicity_at_one(f) >= ell
    assert multiplicity_at_one(f) == division_multiplicity(f)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.lists(st.integers(0, 4), min_size=1, max_size=60), st.integers(0, 6))
def test_multiplicity_matches_repeated_division(ell, coeffs, extra):
    f = DensePoly(coeffs, ell)
    for _ in range(extra):
        f = f * DensePoly((ell - 1, 1), ell)
    if f.is_zero():
        return
    assert multiplicity_at_one(f) == division_multiplicity(f)


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([2, 3]), st.sampled_from([1, 2, 3, 4, 6, 8, 9, 12, 16, 18, 27, 32]), st.integers(0, 2**32))
def test_offset_change_against_measurement(ell, N, seed):
    rng = np.random.default_rng(seed)
    s = seq_of(rng.integers(0, ell, N), ell)
    a = int(rng.integers(1, ell))
    delta = linear_complexity(complement_sequence(s, -a)) - linear_complexity(s)
    assert delta == offset_lc_change(s, a)


def _three_case_rule(seq):
    total = multiplicity_at_one(DensePoly.x_n_minus_one(seq.period, seq.ell))
    S = sequence_poly(seq)
    own = float("inf") if S.is_zero() else multiplicity_at_one(S)
    if total <= own:
        return 1
    return -1 if total == own + 1 else 0


def test_binary_three_case_rule_hits_every_branch():
    seen = set()
    rng = np.random.default_rng(11)
    for _ in range(400):
        N = int(rng.choice([3, 4, 5, 8, 12, 16, 24]))
        s = seq_of(rng.integers(0, 2, N))
        delta = linear_complexity(complement_sequence(s, 1)) - linear_complexity(s)
        assert delta == _three_case_rule(s) == offset_lc_change(s)
        seen.add(delta)
    assert seen == {-1, 0, 1}


def test_ternary_middle_case_depends_on_offset():
    s = seq_of([1, 0, 1, 2], 3)
    assert _three_case_rule(s) == -1
    deltas = {a: linear_complexity(complement_sequence(s, -a)) - linear_complexity(s) for a in (1, 2)}
    assert deltas == {a: offset_lc_change(s, a) for a in (1, 2)}
    assert sorted(deltas.values()) == [-1, 0]


@pytest.mark.parametrize("p,m,expected", [(7, 3, 1), (11, 3, 0), (19, 3, 0), (23, 3, 1), (7, 5, 1)])
def test_first_hasse_derivative_of_nonresidue_T(p, m, expected):
    A = next(a for a in range(2, p) if pow(a, (p - 1) // 2, p) == p - 1)
    T = ntu(p, m, A)
    assert hasse_at_one(sequence_poly(T), 1) == expected
