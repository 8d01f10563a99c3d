"""Acceptance gate: one test per criterion, each reporting a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v``; the per-criterion lines
are also repeated in the terminal summary.
"""

import math
import time
from collections import Counter

import numpy as np
import pytest

from geomseq._validation import is_prime
from geomseq.correlate import autocorrelation_profile, cross_correlation_profile
from geomseq.gf import (
    CyclotomicContext,
    ExtFieldContext,
    difference_parameter,
    legendre_symbol,
    order2_difference_parameter,
)
from geomseq.lincomp import berlekamp_massey, minimal_poly_gcd, multiplicity_at_one, sequence_poly
from geomseq.poly import DensePoly
from geomseq.seqgen import (
    NtuParams,
    SymbolSequence,
    balance_count,
    complement_sequence,
    generalized_ntu,
    m_sequence,
    ntu_complement,
    proposed_sequence,
    short_companion,
    short_complement,
)
from geomseq.theorems import (
    H0_value,
    H1_value,
    interleaved_j0,
    large_lc_conditions,
    min_poly_predict,
    predicted_interleaved_profile,
    verify_tuple,
)

RESULTS: dict[str, str] = {}


@pytest.fixture
def report(request):
    """Record and print the verdict line for one criterion."""
    tr = request.config.pluginmanager.get_plugin("terminalreporter")
    state = {}

    def emit(number, title, ok, detail=""):
        line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}" + (f": {detail}" if detail else "")
        RESULTS[str(number)] = line
        state["done"] = True
        if tr is not None:
            tr.write_line("")
            tr.write_line(line)
        return ok

    yield emit
    if not state:
        name = request.node.name
        RESULTS.setdefault(name, f"{name} [FAIL] raised before reporting")


def _ntu(ctx, A, R=None):
    return generalized_ntu(NtuParams.from_context(ctx, 2, A), ctx, mseq=R)


def _smallest_nonresidue(p):
    return next(a for a in range(2, p) if legendre_symbol(a, p) == -1)


# 1

def test_criterion_1_worked_example(report):
    start = time.perf_counter()
    ctx = ExtFieldContext(3, 2, (2, 2, 1))
    # only A = 1 without relabeling the classes reproduces the example
    want_T = [0, 1, 0, 1, 1, 0, 0, 0]
    hits = []
    for A in (1, 2):
        T = _ntu(ctx, A).tolist()
        hits += [(A, False)] * (T == want_T) + [(A, True)] * ([1 - x for x in T] == want_T)
    prm = NtuParams.from_context(ctx, 2, 1)
    S2 = proposed_sequence(prm, ctx, 2).tolist()
    elapsed = time.perf_counter() - start
    ok = hits == [(1, False)] and S2 == [0, 1, 1, 0, 0, 0, 1, 1, 1, 1, 0, 1, 0, 1, 0, 0] and elapsed < 1
    report(1, "worked example T and S^2", ok, f"matching (A, relabel)={hits}, {elapsed:.3f}s")
    assert ok


# 2

@pytest.mark.slow
def test_criterion_2_linear_complexity_examples(report):
    cases = [  # p, m, nu, L(T), L(Tbar), L(t), L(tbar)
        (29, 3, 871, 24388, 24388, 28, 28),
        (43, 3, 1893, 77612, 77613, 40, 41),
        (47, 3, 2257, 99309, 99308, 45, 44),
    ]
    details, ok = [], True
    for p, m, nu_, LT, LTbar, Lt, Ltbar in cases:
        start = time.perf_counter()
        ctx = ExtFieldContext(p, m)
        A = _smallest_nonresidue(p)
        prm = NtuParams.from_context(ctx, 2, A)
        R = m_sequence(ctx)
        T = generalized_ntu(prm, ctx, mseq=R)
        got = (
            ctx.nu,
            minimal_poly_gcd(T).linear_complexity,
            minimal_poly_gcd(ntu_complement(prm, ctx, mseq=R)).linear_complexity,
            minimal_poly_gcd(short_companion(prm, ctx)).linear_complexity,
            minimal_poly_gcd(short_complement(prm, ctx)).linear_complexity,
        )
        bm = berlekamp_massey(T).linear_complexity
        elapsed = time.perf_counter() - start
        case_ok = got == (nu_, LT, LTbar, Lt, Ltbar) and bm == LT and elapsed < 300
        ok &= case_ok
        details.append(f"p={p}: nu={got[0]} L(T)={got[1]} L(Tbar)={got[2]} L(t)={got[3]} L(tbar)={got[4]} "
                       f"BM={bm} ({elapsed:.1f}s)")
    report(2, "linear complexity examples", ok, "; ".join(details))
    assert ok


# 3

def _lc_sweep(p, m):
    ctx = ExtFieldContext(p, m)
    A = _smallest_nonresidue(p)
    prm = NtuParams.from_context(ctx, 2, A)
    R = m_sequence(ctx)
    out = {}
    for e in range(ctx.order):
        S = proposed_sequence(prm, ctx, e, mseq=R)
        gcd, bm = minimal_poly_gcd(S), berlekamp_massey(S)
        assert (gcd.linear_complexity, gcd.minimal_poly) == (bm.linear_complexity, bm.minimal_poly)
        out[e] = gcd.linear_complexity
    return out


@pytest.mark.slow
def test_criterion_3_interleaved_linear_complexity(report):
    start = time.perf_counter()
    lc17 = _lc_sweep(17, 2)
    t17 = time.perf_counter() - start

    def stated17(e):
        return 567 if e % 9 == 5 else 573 if e % 9 == 2 else 575

    off17 = sorted(e for e, L in lc17.items() if L != stated17(e))

    start = time.perf_counter()
    lc7 = _lc_sweep(7, 3)
    t7 = time.perf_counter() - start

    def stated7(e):
        return 344 if e % 171 == 86 else 452 if e % 9 == 5 else 458

    off7 = sorted(e for e, L in lc7.items() if L != stated7(e))
    # H0 / H1 table for e = 5 mod 9, against a direct gcd
    table_ok = all(
        (H0_value(57, e), H1_value(342, e))
        == (math.gcd(2 * e - 1, 57), math.gcd(2 * e - 1, 171))
        == ((57, 171) if e % 171 == 86 else (3, 9))
        for e in range(342) if e % 9 == 5
    )
    ok = not off17 and not off7 and table_ok and t17 < 120 and t7 < 120
    detail = (f"p=17 values {dict(sorted(Counter(lc17.values()).items()))}, "
              f"{len(off17)} shifts differ from the stated rule"
              + (f" (e mod 9 = {sorted({e % 9 for e in off17})}, measured {sorted({lc17[e] for e in off17})})"
                 if off17 else "")
              + f", {t17:.1f}s; p=7 values {dict(sorted(Counter(lc7.values()).items()))}, "
              f"{len(off7)} differ, H0/H1 table {'ok' if table_ok else 'mismatch'}, {t7:.1f}s")
    report(3, "interleaved linear complexity sweeps", ok, detail)
    assert ok


# 4

@pytest.mark.slow
def test_criterion_4_interleaved_autocorrelation(report):
    tuples = shifts = mismatches = 0
    merged = set()
    for p in range(3, 1001):
        if not is_prime(p):
            continue
        for m in range(2, 12):
            N = p**m - 1
            if 2 * N > 2000:
                break
            ctx = ExtFieldContext(p, m)
            R = m_sequence(ctx)
            for A in range(1, p):
                prm = NtuParams.from_context(ctx, 2, A)
                tuples += 1
                for e in range(N):
                    S = proposed_sequence(prm, ctx, e, mseq=R)
                    measured = autocorrelation_profile(S).values
                    predicted = predicted_interleaved_profile(ctx, A, e)
                    shifts += 1
                    if not np.array_equal(measured, predicted):
                        mismatches += 1
                    if interleaved_j0(ctx, e) is not None:
                        merged.add((p, m, e))
    ok = mismatches == 0 and (5, 3, 16) in merged
    report(4, "interleaved autocorrelation, all tuples with 2N <= 2000", ok,
           f"{tuples} (p,m,A) tuples, {shifts} shifts e, {mismatches} mismatching profiles, "
           f"{len(merged)} (p,m,e) with a merged j0 case incl. (5,3,16)={'yes' if (5, 3, 16) in merged else 'no'}")
    assert ok


# 5

def test_criterion_5_bm_equals_gcd(report):
    rng = np.random.default_rng(5)
    disagreements = 0
    for _ in range(500):
        ell = int(rng.choice([2, 3]))
        N = int(rng.integers(1, 513))
        style = rng.integers(0, 3)
        if style == 0:
            symbols = rng.integers(0, ell, N)
        elif style == 1:  # short period repeated, so L is small
            base = rng.integers(0, ell, int(rng.integers(1, 9)))
            symbols = np.resize(base, N)
        else:  # sparse
            symbols = (rng.random(N) < 0.05) * rng.integers(1, ell, N)
        s = SymbolSequence.from_symbols(symbols, ell)
        a, b = berlekamp_massey(s), minimal_poly_gcd(s)
        if (a.linear_complexity, a.minimal_poly) != (b.linear_complexity, b.minimal_poly):
            disagreements += 1
    ok = disagreements == 0
    report(5, "Berlekamp-Massey equals the gcd route", ok, f"500 random sequences, {disagreements} disagreements")
    assert ok


# 6

def test_criterion_6_difference_parameter_table(report):
    checked, wrong = Counter(), 0
    for p in range(3, 201):
        if not is_prime(p):
            continue
        cyc = CyclotomicContext(p, 2)
        for a in range(1, p):
            leg = legendre_symbol(a, p)
            for i in (0, 1):
                for j in (0, 1):
                    if difference_parameter(i, j, a, cyc) != order2_difference_parameter(i, j, a, p):
                        wrong += 1
                    checked[(p % 4, leg, i, j)] += 1
    ok = wrong == 0 and len(checked) == 16
    report(6, "difference parameters of order 2, p <= 200", ok,
           f"{sum(checked.values())} (p, a, i, j) checks across {len(checked)} table cells, {wrong} wrong")
    assert ok


# 7

def _division_multiplicity(f):
    one = DensePoly((f.ell - 1, 1), f.ell)
    k = 0
    while True:
        q, r = divmod(f, one)
        if not r.is_zero():
            return k
        f, k = q, k + 1


def test_criterion_7_property_suites(report):
    start = time.perf_counter()
    fails = Counter()
    fields = [(5, 2), (7, 2), (11, 2), (13, 2), (3, 3), (5, 3), (7, 3)]
    for p, m in fields:
        ctx = ExtFieldContext(p, m)
        R = m_sequence(ctx)
        cyc = ctx.cyclotomy(2)
        seqs = {A: _ntu(ctx, A, R) for A in range(1, p)}
        for A, T in seqs.items():
            # sign flip against the complement
            flip = cross_correlation_profile(T, complement_sequence(T, 1)).values
            fails["sign flip"] += not np.array_equal(flip, -autocorrelation_profile(T).values)
            # balance of S^e for a spread of shifts
            prm = NtuParams.from_context(ctx, 2, A)
            for e in range(0, ctx.order, max(1, ctx.order // 25)):
                N = ctx.order
                fails["balance"] += balance_count(proposed_sequence(prm, ctx, e, mseq=R)) != {0: N, 1: N}
        # shift equivalence inside each class
        for k in (0, 1):
            members = [seqs[A] for A in range(1, p) if cyc.class_of[A] == k]
            ref = bytes(np.concatenate([members[0].symbols] * 2))
            fails["shift equivalence"] += sum(bytes(s.symbols) not in ref for s in members[1:])

    rng = np.random.default_rng(7)
    branches = Counter()
    for _ in range(600):
        N = int(rng.choice([3, 4, 5, 6, 8, 12, 16, 24, 32]))
        s = SymbolSequence.from_symbols(rng.integers(0, 2, N), 2)
        total = multiplicity_at_one(DensePoly.x_n_minus_one(N, 2))
        S = sequence_poly(s)
        own = math.inf if S.is_zero() else multiplicity_at_one(S)
        want = 1 if total <= own else (-1 if total == own + 1 else 0)
        got = minimal_poly_gcd(complement_sequence(s, 1)).linear_complexity - minimal_poly_gcd(s).linear_complexity
        branches[want] += 1
        fails["offset lemma"] += got != want
    fails["offset lemma branches"] += set(branches) != {-1, 0, 1}

    for _ in range(300):
        ell = int(rng.choice([2, 3, 5]))
        f = DensePoly(tuple(rng.integers(0, ell, int(rng.integers(1, 40)))), ell)
        for _ in range(int(rng.integers(0, 7))):
            f = f * DensePoly((ell - 1, 1), ell)
        if f.is_zero():
            continue
        fails["Hasse multiplicity"] += multiplicity_at_one(f) != _division_multiplicity(f)
    elapsed = time.perf_counter() - start
    ok = not any(fails.values()) and elapsed < 60
    report(7, "property suites", ok,
           f"failures {dict(fails)}, offset-lemma branches seen {dict(sorted(branches.items()))}, {elapsed:.1f}s")
    assert ok


# 8

@pytest.mark.slow
def test_criterion_8_conjecture_audit(report):
    statuses = Counter()
    flagged = []
    for p in range(3, 400):
        if not is_prime(p) or p % 4 != 3:
            continue
        for m in range(2, 40, 2):
            if p**m > 10**5:
                break
            A = _smallest_nonresidue(p)
            for pr in verify_tuple(p, m, A, bm_limit=0):
                if pr.conjecture:
                    statuses[pr.status] += 1
                    if pr.status == "conjecture_violated":
                        flagged.append(f"(p={p}, m={m}: predicted {pr.predicted}, measured {pr.measured})")
    detail = f"statuses {dict(statuses)}" + (f"; flagged {', '.join(flagged)}" if flagged else "")
    # non-blocking: the audit passes once every tuple has been reported
    report(8, "even-m conjecture audit (non-blocking)", bool(statuses), detail)
    assert statuses


# 9

def test_criterion_9_large_lc_minimal_polynomials(report):
    p = 23
    sr = large_lc_conditions(p)
    fired, details, ok = Counter(), [], sr == (1, 11)
    for m in (2, 3):
        ctx = ExtFieldContext(p, m)
        R = m_sequence(ctx)
        for A in (1, _smallest_nonresidue(p)):
            prm = NtuParams.from_context(ctx, 2, A)
            T = minimal_poly_gcd(generalized_ntu(prm, ctx, mseq=R))
            t = minimal_poly_gcd(short_companion(prm, ctx))
            measured = {"min_poly_t": t.minimal_poly, "min_poly_T": T.minimal_poly,
                        "lc_t": t.linear_complexity, "lc_T": T.linear_complexity}
            for pr in min_poly_predict(p, m, A, *sr):
                checked = pr.check(measured[pr.quantity])
                if checked.status == "hypothesis_not_met":
                    continue
                fired[checked.applicability] += 1
                ok &= checked.status == "verified"
            details.append(f"m={m} A={A}: L(t)={t.linear_complexity} L(T)={T.linear_complexity}")
    ok &= fired == Counter({"corollary case 1": 8, "corollary case 2": 4})
    report(9, "explicit minimal polynomials for p = 23", ok, f"{dict(fired)}; " + "; ".join(details))
    assert ok
