import math
import random
from fractions import Fraction

import pytest

from vdwc.bounds import (
    abstract_exact,
    bound_report,
    classical_bound,
    classical_bound_squared,
    format_pairs,
    format_table,
    incompressibility_inequality,
    pre_improvement_bound,
    pre_improvement_exact,
    predicted_output_length,
    rounded_code_width,
    theorem_bound,
    theorem_exact,
)
from vdwc.compressor import compress
from vdwc.errors import QueueExhausted
from vdwc.oracle import find_blocked_free, find_progression_free
from vdwc.progressions import WindowParams


@pytest.mark.parametrize(
    "k,c,expect", [(4, 2, 4.0), (3, 2, math.sqrt(3) * math.sqrt(2)), (6, 2, math.sqrt(6) * 4)]
)
def test_classical(k, c, expect):
    assert classical_bound(k, c) == pytest.approx(expect, rel=1e-12)
    assert classical_bound_squared(k, c) == Fraction(expect * expect).limit_denominator(1000)


@pytest.mark.parametrize(
    "k,c,expect", [(3, 2, Fraction(2, 9)), (10, 2, Fraction(1152, 100)), (5, 3, Fraction(144, 100))]
)
def test_theorem(k, c, expect):
    assert theorem_exact(k, c) == expect
    assert theorem_bound(k, c) == pytest.approx(float(expect), rel=1e-12)


def test_factor_of_two_at_two_colors():
    for k in range(3, 41):
        assert theorem_exact(k, 2) == 2 * pre_improvement_exact(k, 2)
        assert theorem_bound(k, 2) == pytest.approx(2 * pre_improvement_bound(k, 2), rel=1e-12)


def test_abstract_form_matches_only_at_two_colors():
    for k in range(3, 20):
        assert abstract_exact(k, 2) == theorem_exact(k, 2)
        assert abstract_exact(k, 3) != theorem_exact(k, 3)


def test_bounds_below_exact_values(vdw_exact):
    for (k, c), w in vdw_exact.items():
        assert theorem_bound(k, c) <= w
        assert classical_bound(k, c) <= w
        assert classical_bound_squared(k, c) <= w * w


def test_rounded_code_width():
    assert rounded_code_width(9, 3, 2) == 6  # log2(40.5)
    assert rounded_code_width(21, 5, 2) == 8  # log2(131.25)
    for k in range(3, 7):
        for n in range(k, 100):
            x = Fraction(k * k * n, k - 1)
            C = rounded_code_width(n, k, 3)
            assert 3**C >= x and (C == 0 or 3 ** (C - 1) < x)


def test_inequality_example():
    chk = incompressibility_inequality(3, 2, 9, 1, 9)
    assert chk.per_event and chk.aggregate
    assert 8 + (6 + 3) >= 3


def test_inequality_in_the_large_d_limit():
    # for huge D the per-event form reduces to C + 3 >= k
    for k in range(3, 25):
        for n in (k, 50, 1000):
            C = rounded_code_width(n, k, 2)
            chk = incompressibility_inequality(k, 2, n, 10**6, n)
            assert chk.per_event == (C + 3 >= k)


def test_contradiction_below_pre_improvement_bound():
    k = 20
    pre = pre_improvement_bound(k, 2)
    n = 3000
    assert n < pre
    chk = incompressibility_inequality(k, 2, n, 10**6, n)
    assert not chk.per_event
    assert not chk.aggregate


def test_aggregate_implies_per_event():
    # joint coding spends fewer symbols, so its inequality is the harder one
    rng = random.Random(0)
    for _ in range(2000):
        k = rng.randint(3, 30)
        c = rng.randint(2, 4)
        n = rng.randint(k, 5000)
        D = rng.randint(0, 10_000)
        chk = incompressibility_inequality(k, c, n, D, n)
        assert chk.per_event or not chk.aggregate


def brute_aggregate(k, c, n, D, w):
    # exact: ceil(D * log_c(x)) is the least integer m with c^m >= x^D
    x = Fraction(k * k * n, k - 1)
    target = x**D
    m, p = 0, Fraction(1)
    while p < target:
        p *= c
        m += 1
    return (w - 1) + m + 3 * D >= D * k


def test_aggregate_matches_exact_rational_arithmetic():
    rng = random.Random(1)
    for _ in range(400):
        k = rng.randint(3, 14)
        c = rng.randint(2, 3)
        n = rng.randint(k, 300)
        D = rng.randint(0, 60)
        w = rng.randint(k, 400)
        assert incompressibility_inequality(k, c, n, D, w).aggregate == brute_aggregate(k, c, n, D, w)


def test_predicted_output_length():
    assert predicted_output_length(100, 3, 2, 9, 1) == 115
    assert predicted_output_length(77, 4, 2, 35, 0) == 77 + 34 + 1


def test_predicted_matches_measured_across_grid(vdw_exact):
    rng = random.Random(3)
    setups = []
    for (k, c), n in vdw_exact.items():
        setups.append((WindowParams(n, k, c), list(find_progression_free(n - 1, k, c))))
    u = list(find_blocked_free(30, 5, 2))
    setups.append((WindowParams(len(u) + 1, 5, 2), u))
    runs = 0
    while runs < 1000:
        w, u = rng.choice(setups)
        D = rng.randint(0, 12)
        s = [rng.randrange(w.c) for _ in range((D + 1) * w.k + 1 + rng.randrange(30))]
        try:
            a = compress(s, w, D, u)
        except QueueExhausted:
            continue
        assert len(a.stream) == predicted_output_length(len(s), w.k, w.c, w.n, D)
        runs += 1


def test_report_and_formats():
    rep = bound_report(3, 2, exact_w=9, Ds=[1])
    assert rep.C == 6 and rep.per_event_cost == 9
    assert rep.inequality_holds[1].per_event
    pairs = format_pairs([rep])
    assert "theorem=0.222222" in pairs and "exact_w=9" in pairs
    table = format_table([rep, bound_report(10, 2)])
    assert "11.52" in table
    assert format_table([]) == ""
