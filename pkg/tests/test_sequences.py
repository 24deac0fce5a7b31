"""Approximation sequences, exact identities, recurrences, and tails."""

import math
import random
from fractions import Fraction

import pytest

from bellgamma.bell import bell_ladder
from bellgamma.bernoulli import PolyQ
from bellgamma.numerics import PrecisionError, binom, factorial, lcm_upto
from bellgamma.sequences import (
    ApproxRecord,
    HarmonicCache,
    F_sym,
    RecurrenceSpec,
    aptekarev_seq,
    convergence_row,
    f_deriv_sym,
    harmonic,
    integrality_check,
    lemma1_residual,
    make_paper_recurrences,
    p_at,
    p_seq,
    q_at,
    q_seq,
    r_val,
    records_to_csv,
    recurrence_check,
    recurrence_generate,
    tail_series,
)
from bellgamma.symring import SymPoly


def harmonic_direct(k, m):
    return sum(Fraction(1, j ** m) for j in range(1, k + 1))


def test_harmonic_values():
    assert harmonic(0, 1) == 0
    assert harmonic(4, 1) == Fraction(25, 12)
    assert harmonic(4, 2) == Fraction(205, 144)
    assert harmonic(3, 3) == 1 + Fraction(1, 8) + Fraction(1, 27)
    cache = HarmonicCache()
    for k in range(0, 12):
        for m in range(1, 4):
            assert cache.get(k, m) == harmonic_direct(k, m)


def test_r_val_examples():
    # r_m(k) = (m-1)! (a H_{n-k}^{(m)} + (-1)^m (a-1) H_k^{(m)})
    assert r_val(3, 2, 1, 1) == 1
    assert r_val(2, 1, 0, 2) == 2
    for a in (2, 3, 4):
        for n in (1, 3, 6):
            assert r_val(a, n, n, 1) == -(a - 1) * harmonic_direct(n, 1)
            assert r_val(a, n, 0, 1) == a * harmonic_direct(n, 1)
        for n in (3, 6):
            assert r_val(a, n, 2, 2) == (a * harmonic_direct(n - 2, 2)
                                         + (a - 1) * harmonic_direct(2, 2))
    with pytest.raises(ValueError):
        r_val(3, 1, 2, 1)


def test_qseq_small_tables():
    assert q_seq(2, 5) == [1, 2, 7, 34, 209, 1546]
    assert q_seq(3, 3) == [1, 2, 11, 88]
    assert q_seq(4, 3) == [1, 2, 19, 250]
    assert q_at(3, 2) == 11


def test_pseq_small_tables():
    assert p_seq(2, 1, 3) == [0, 1, 4, Fraction(59, 3)]
    assert p_seq(3, 1, 2) == [0, 1, Fraction(13, 2)]
    assert p_seq(3, 2, 2) == [0, 18, 95]
    assert p_seq(4, 1, 3) == [0, 1, 13, Fraction(409, 3)]
    assert p_seq(4, 2, 2) == [0, 32, 217]
    assert p_seq(4, 3, 2) == [0, 60, 402]
    assert p_at(4, 2, 3) == Fraction(26444, 9)
    assert p_at(4, 3, 3) == Fraction(50761, 9)


def test_pq_validation():
    with pytest.raises(ValueError):
        p_seq(3, 3, 5)
    with pytest.raises(ValueError):
        p_seq(3, 0, 5)
    with pytest.raises(ValueError):
        q_seq(1, 5)


def test_table_cache_regrowth():
    # Ask small then large; cached prefix must agree with a fresh run.
    assert q_at(5, 4) == q_seq(5, 12)[4]
    assert p_at(5, 2, 10) == p_seq(5, 2, 12)[10]


def test_p_seq_against_direct_composition():
    # Route 2: assemble p_{n,mu} from r-values and the Bell ladder
    # in plain Fractions, no shared kernel code.
    for a, mu_max, n_max in ((2, 1, 25), (3, 2, 20), (4, 3, 12)):
        for mu in range(1, mu_max + 1):
            got = p_seq(a, mu, n_max)
            for n in range(n_max + 1):
                direct = Fraction(0)
                for k in range(n + 1):
                    w = binom(n, k) ** a * factorial(k)
                    rs = [r_val(a, n, k, m) for m in range(1, mu + 1)]
                    direct += w * bell_ladder(rs)[mu]
                assert got[n] == direct


def test_a2_closed_form_coincidence():
    # For a = 2, mu = 1 the Bell layer collapses to 2H_{n-k} - H_k.
    ps = p_seq(2, 1, 100)
    for n in range(101):
        direct = sum(binom(n, k) ** 2 * factorial(k)
                     * (2 * harmonic(n - k, 1) - harmonic(k, 1))
                     for k in range(n + 1))
        assert ps[n] == direct


def test_integrality():
    for a in (2, 3, 4):
        for mu in range(1, a):
            for n in range(0, 40):
                assert integrality_check(a, mu, n)
    # q_n are positive integers as built
    assert all(isinstance(v, int) and v > 0 for v in q_seq(4, 30))


def test_f_deriv_sym_structure():
    # m = 1 carries the -g symbol; m >= 2 is a rational constant.
    p = f_deriv_sym(3, 4, 1, 1)
    mi = p.m_index
    e_g = tuple([1] + [0] * (mi - 1))
    assert p.coeff(e_g) == -1
    assert p.constant_part() == 3 * harmonic(3, 1) - 2 * harmonic(1, 1)
    for m in (2, 3):
        q = f_deriv_sym(4, 5, 2, m)
        assert q.gamma_degree() == 0
        zsign = (-1) ** (m - 1)
        want = factorial(m - 1) * (zsign * 3 - 4) * Fraction(0) \
            + r_val(4, 5, 2, m)
        # zeta coefficient: (m-1)! ((-1)^{m-1}(a-1) - a)
        e_z = [0] * q.m_index
        e_z[m - 1] = 1
        assert q.coeff(tuple(e_z)) == factorial(m - 1) * (zsign * 3 - 4)
        assert q.constant_part() == want


def test_F_sym_examples():
    # F_{n,0} is the plain denominator sum.
    for a, n in ((2, 4), (3, 3)):
        f0 = F_sym(a, 0, n)
        assert f0.gamma_degree() == 0
        assert f0.constant_part() == q_at(a, n)
    f = F_sym(3, 1, 2)
    assert str(f) == "-11*g + 13/2"
    assert F_sym(2, 1, 0).coeff((1,)) == -1 or str(F_sym(2, 1, 0)) == "-g"


def test_F_sym_degree_and_leading_coeff():
    # g-degree mu, leading coefficient (-1)^mu q_n.
    for a in (2, 3, 4):
        for mu in range(1, a):
            for n in (0, 1, 3, 6):
                f = F_sym(a, mu, n)
                assert f.gamma_degree() == mu
                mi = f.m_index
                lead = tuple([mu] + [0] * (mi - 1))
                assert f.coeff(lead) == (-1) ** mu * q_at(a, n)


def test_F_sym_mu1_links_p_and_q():
    # For mu = 1 the combination identity reads F_{n,1} = p_{n,1} - q_n g.
    for a in (2, 3, 4):
        for n in range(0, 8):
            f = F_sym(a, 1, n)
            mi = f.m_index
            assert f.constant_part() == p_at(a, 1, n)
            assert f.coeff(tuple([1] + [0] * (mi - 1))) == -q_at(a, n)


def test_lemma1_residual_zero():
    for a in (2, 3, 4):
        for mu in range(1, a):
            for n in range(0, 10):
                assert lemma1_residual(a, mu, n).is_zero()


def test_lemma1_residual_detects_perturbation():
    res = lemma1_residual(3, 2, 5)
    assert res.is_zero()
    assert not (res + SymPoly.const(1, res.m_index)).is_zero()


def test_make_paper_recurrences_shape():
    specs = make_paper_recurrences()
    assert sorted(specs) == [
        "a2_p1", "a2_q", "a3_p1", "a3_p2", "a3_q", "a4_p1", "a4_p2",
        "a4_p3", "a4_q", "aptekarev_p", "aptekarev_q", "rivoal_p", "rivoal_q",
    ]
    apt = specs["aptekarev_q"]
    assert apt.order == 3 and apt.n_min == 2
    assert apt.initial == (1, 3, 50)
    riv = specs["rivoal_p"]
    assert riv.initial == (-1, 4, Fraction(77, 4))
    assert specs["rivoal_q"].initial == (1, 7, Fraction(65, 2))
    assert specs["a3_p2"].inhom is not None
    assert specs["a3_q"].inhom is None
    assert specs["a4_p3"].initial == (0, 60, 402, Fraction(50761, 9))


def test_recurrences_hold_midrange():
    specs = make_paper_recurrences()
    qs = {a: q_seq(a, 40) for a in (2, 3, 4)}
    data = {
        "a2_q": qs[2], "a2_p1": p_seq(2, 1, 40),
        "a3_q": qs[3], "a3_p1": p_seq(3, 1, 40), "a3_p2": p_seq(3, 2, 40),
        "a4_q": qs[4], "a4_p1": p_seq(4, 1, 40), "a4_p2": p_seq(4, 2, 40),
        "a4_p3": p_seq(4, 3, 40),
    }
    for name, seq in data.items():
        spec = specs[name]
        lo = max(spec.n_min, 3)
        hi = 40 - max(spec.offsets)
        assert recurrence_check(spec, seq, range(lo, hi)) is True, name


def test_recurrence_falsification():
    specs = make_paper_recurrences()
    seq = q_seq(3, 20)
    seq[10] += 1
    assert recurrence_check(specs["a3_q"], seq, range(8, 12)) is False


def test_recurrence_generate_matches_sums():
    specs = make_paper_recurrences()
    assert recurrence_generate(specs["a2_q"], 25) == q_seq(2, 25)
    assert recurrence_generate(specs["a2_p1"], 25) == p_seq(2, 1, 25)
    assert recurrence_generate(specs["a3_q"], 25) == q_seq(3, 25)
    assert recurrence_generate(specs["a3_p2"], 25) == p_seq(3, 2, 25)
    assert recurrence_generate(specs["a4_q"], 20) == q_seq(4, 20)
    assert recurrence_generate(specs["a4_p3"], 20) == p_seq(4, 3, 20)


def test_rivoal_sequences_approach_gamma():
    specs = make_paper_recurrences()
    qs = recurrence_generate(specs["rivoal_q"], 30)
    ps = recurrence_generate(specs["rivoal_p"], 30)
    errs = [abs(float(Fraction(p) / Fraction(q)) - 0.5772156649015329)
            for p, q in zip(ps[2:], qs[2:])]
    assert errs[-1] < 1e-10
    assert errs[-1] < errs[0]


def test_recurrence_check_validation():
    specs = make_paper_recurrences()
    with pytest.raises(ValueError):
        recurrence_check(specs["a3_q"], q_seq(3, 20), range(1, 5))
    with pytest.raises(ValueError):
        recurrence_check(specs["a3_q"], q_seq(3, 5), range(3, 10))


def test_recurrence_spec_validation():
    with pytest.raises(ValueError):
        RecurrenceSpec("bad", (1, 0), (PolyQ([1]), PolyQ([1])), None,
                       (1, 2), 0)
    with pytest.raises(ValueError):
        RecurrenceSpec("bad", (0, 1), (PolyQ([1]),), None, (1, 2), 0)
    with pytest.raises(ValueError):
        RecurrenceSpec("bad", (-1, 0), (PolyQ([1]), PolyQ([1])), None,
                       (1,), 0)
    with pytest.raises(ValueError):
        RecurrenceSpec("bad", (0, 1), (PolyQ([1]), PolyQ([1])), None,
                       (1, 2, 3), 0)


def test_recurrence_leading_zero_skip(caplog):
    # (n-5) y_{n+1} = (n-5) y_n holds for a constant sequence; n = 5 is
    # skipped because the leading coefficient vanishes there.
    spec = RecurrenceSpec("toy", (0, 1), (PolyQ([5, -1]), PolyQ([-5, 1])),
                          None, (1,), 0)
    with caplog.at_level("WARNING"):
        assert recurrence_check(spec, [1] * 12, range(0, 10)) is True
    assert any("leading coefficient" in r.message for r in caplog.records)


def test_recurrence_inhom_pole():
    num = PolyQ([1])
    den = PolyQ([0, 1])  # vanishes at n = 0
    spec = RecurrenceSpec("pole", (0, 1), (PolyQ([1]), PolyQ([1])),
                          (num, den), (1,), 0)
    with pytest.raises(ArithmeticError):
        recurrence_check(spec, [1] * 5, range(0, 2))


def test_aptekarev_values():
    qs, ps = aptekarev_seq(4)
    assert qs[:3] == [1, 3, 50]
    assert ps[:3] == [0, 2, 31]
    # hand value: n = 1 gives k=0 term 1*1*1*(H_1 + 2H_1 - 0) = 3H_1,
    # k=1 term 1*2*(H_2 + 0 - 2H_1) = 2H_2 - 4H_1; total 2H_2 - H_1 = 2.
    assert ps[1] == 2
    specs = make_paper_recurrences()
    assert recurrence_check(specs["aptekarev_q"], qs, range(2, 3)) is True
    assert recurrence_check(specs["aptekarev_p"], ps, range(2, 3)) is True


def test_aptekarev_recurrence_generates_sums():
    qs, ps = aptekarev_seq(15)
    specs = make_paper_recurrences()
    assert recurrence_generate(specs["aptekarev_q"], 15) == qs
    assert recurrence_generate(specs["aptekarev_p"], 15) == ps


def test_tail_series_first_term_and_bound():
    for a in (2, 3, 4):
        for u in (-a, -1, 0, 1, a):
            for n in (5, 10, 20):
                t = tail_series(a, u, n, 30).to_fraction()
                t0 = Fraction((-1) ** (a - 1), (n + 1) ** a)
                assert abs(t) <= Fraction(math.ceil(math.e * 10**6), 10**6) \
                    / (n + 1) ** a
                assert abs(t - t0) <= Fraction(2, ((n + 1) * (n + 2)) ** a)
                assert (t < 0) == (a % 2 == 0)


def test_tail_series_depends_on_u_parity():
    t_even = tail_series(3, 0, 8, 25).to_fraction()
    t_even2 = tail_series(3, 2, 8, 25).to_fraction()
    t_odd = tail_series(3, 1, 8, 25).to_fraction()
    assert t_even == t_even2
    assert t_even != t_odd


def test_tail_series_validation():
    with pytest.raises(ValueError):
        tail_series(3, 4, 10, 20)
    with pytest.raises(ValueError):
        tail_series(3, 0, 0, 20)
    with pytest.raises(ValueError):
        tail_series(3, 0, 10, 0)


def test_convergence_row_n0():
    rec = convergence_row(2, 1, 0)
    assert rec == ApproxRecord(2, 1, 0, Fraction(0), 1,
                               rec.err_log, rec.predicted_exponent)
    # error is |gamma - 0| = gamma
    assert math.isclose(rec.err_log, math.log(0.5772156649015329),
                        rel_tol=1e-9)
    assert rec.predicted_exponent == 0.0


def test_convergence_row_tracks_prediction():
    rec = convergence_row(3, 1, 30)
    assert rec.q == q_at(3, 30)
    assert rec.p == p_at(3, 1, 30)
    assert rec.err_log < 0
    assert abs(rec.err_log / rec.predicted_exponent - 1) < 0.5
    nxt = convergence_row(3, 1, 60)
    assert nxt.err_log < rec.err_log


def test_convergence_row_precision_failure():
    with pytest.raises(PrecisionError):
        convergence_row(3, 1, 50, digits=2)


def test_records_to_csv():
    rows = [convergence_row(2, 1, 0), convergence_row(2, 1, 3)]
    text = records_to_csv(rows)
    lines = text.splitlines()
    assert lines[0] == "a,mu,n,p_num,p_den,q,err_log10,predicted_log10"
    assert lines[1] == "2,1,0,0,1,1,-0.238662,0"
    assert lines[2].startswith("2,1,3,59,3,34,")
