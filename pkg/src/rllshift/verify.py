"""One-shot verification suite over every computable claim of the toolkit.

Each check returns a deterministic pass/fail record; the report contains
no timing or other run-to-run noise, so identical configurations produce
byte-identical output.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import dimension, markov, measure, univoque, words

# frozen seed for the ergodic-frequency and local-dimension checks; the
# +/- 0.002 band was calibrated once against this seed and then fixed
ERGODIC_SEED = 20260824

P_GRID = (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3))
LAMBDA_P_GRID = (Fraction(1, 3), Fraction(2, 5), Fraction(1, 2), Fraction(2, 3))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _admissible_with_counts(m: int, max_len: int):
    """[(symbols, n0, n1)] for every admissible non-empty word up to max_len."""
    out = []
    for n in range(1, max_len + 1):
        for w in words.enumerate_words(m, n):
            n0, n1 = words.occurrence_counts(m, w.symbols)
            out.append((w.symbols, n0, n1))
    return out


def check_subadditivity(quick: bool = False) -> CheckResult:
    """N0(w)+N0(v)-1 <= N0(wv) <= N0(w)+N0(v), same for N1; exhaustive."""
    max_total = 8 if quick else 12
    bad = 0
    pairs = 0
    for m in (3, 4):
        items = _admissible_with_counts(m, max_total - 1)
        by_len: dict[int, list] = {}
        for item in items:
            by_len.setdefault(len(item[0]), []).append(item)
        for a, group_w in by_len.items():
            for b, group_v in by_len.items():
                if a + b > max_total:
                    continue
                for w, w0, w1 in group_w:
                    for v, v0, v1 in group_v:
                        wv = w + v
                        if not words.is_admissible_symbols(m, wv):
                            continue
                        pairs += 1
                        c0, c1 = words.occurrence_counts(m, wv)
                        if not (w0 + v0 - 1 <= c0 <= w0 + v0):
                            bad += 1
                        if not (w1 + v1 - 1 <= c1 <= w1 + v1):
                            bad += 1
    return CheckResult(
        "occurrence-subadditivity",
        bad == 0,
        f"m in (3,4), |w|+|v| <= {max_total}: {pairs} pairs, {bad} violations",
    )


def check_counting_bound(quick: bool = False) -> CheckResult:
    """m|w|_0 <= (m-1)N0(w) + |w| and the digit-1 symmetric bound."""
    max_len = 10 if quick else 14
    bad = 0
    total = 0
    for m in (3, 4, 5):
        for s, n0, n1 in _admissible_with_counts(m, max_len):
            total += 1
            zeros = s.count("0")
            ones = len(s) - zeros
            if m * zeros > (m - 1) * n0 + len(s):
                bad += 1
            if m * ones > (m - 1) * n1 + len(s):
                bad += 1
    return CheckResult(
        "occurrence-counting-bound",
        bad == 0,
        f"m in (3,4,5), |w| <= {max_len}: {total} words, {bad} violations",
    )


def check_closed_vs_recursive(quick: bool = False) -> CheckResult:
    """Closed form equals the branching recursion, exact rationals."""
    max_len = 8 if quick else 12
    bad = 0
    total = 0
    for m in (3, 4, 5):
        wordlist = _admissible_with_counts(m, max_len)
        for p in P_GRID:
            meas = measure.bernoulli(m, p)
            q = meas.q
            for s, n0, n1 in wordlist:
                total += 1
                if measure._mu_symbols(m, p, q, s) != p**n0 * q**n1:
                    bad += 1
    return CheckResult(
        "closed-form-vs-recursion",
        bad == 0,
        f"|w| <= {max_len}, 9 (m,p) combos: {total} evaluations, {bad} mismatches",
    )


def check_normalization(quick: bool = False) -> CheckResult:
    """Cylinder masses of each length sum to exactly 1."""
    max_len = 8 if quick else 12
    bad = []
    for m in (3, 4, 5):
        for p in P_GRID:
            q = 1 - p
            for n in range(1, max_len + 1):
                total = sum(
                    measure._mu_symbols(m, p, q, w.symbols)
                    for w in words.enumerate_words(m, n)
                )
                if total != 1:
                    bad.append((m, p, n))
    return CheckResult(
        "normalization",
        not bad,
        f"n <= {max_len}, 9 (m,p) combos: {len(bad)} non-unit sums",
    )


def check_quasi_bernoulli(quick: bool = False) -> CheckResult:
    L = 7 if quick else 10
    bad = 0
    for m in (3, 4, 5):
        for p in P_GRID:
            bad += len(measure.quasi_bernoulli_check(measure.bernoulli(m, p), L))
    return CheckResult(
        "quasi-bernoulli",
        bad == 0,
        f"pairs to total length {L}, 9 (m,p) combos: {bad} violations",
    )


def check_pullback_bounds(quick: bool = False) -> CheckResult:
    L = kmax = 5 if quick else 8
    bad = 0
    for m in (3, 4, 5):
        for p in P_GRID:
            bad += len(
                measure.pullback_bounds_check(measure.bernoulli(m, p), L, kmax)
            )
    return CheckResult(
        "pullback-bounds",
        bad == 0,
        f"|w| <= {L}, k <= {kmax}, 9 (m,p) combos: {bad} violations",
    )


def check_non_invariance(quick: bool = False) -> CheckResult:
    """Pulling [0^{m-2}1] back one shift changes its exact measure."""
    bad = []
    for m in (3, 4, 5):
        for p in (Fraction(1, 3), Fraction(2, 3)):
            meas = measure.bernoulli(m, p)
            w = "0" * (m - 2) + "1"
            pulled = measure.pullback_cylinder(meas, w, 1)
            direct = measure.mu_recursive(meas, w).value
            expected = p ** (m - 1) + p ** (m - 2) * (1 - p) ** 2
            if pulled != expected or pulled == direct:
                bad.append((m, p))
    return CheckResult(
        "non-invariance-witness",
        not bad,
        f"m in (3,4,5), p in (1/3,2/3): {len(bad)} failures",
    )


def check_lambda_triple(quick: bool = False) -> CheckResult:
    """Closed form, stationary chain and Cesaro averages all agree."""
    n_cesaro = 2000 if quick else 10_000
    problems = []
    for m in (3, 4, 5):
        for p in LAMBDA_P_GRID:
            closed = measure.lambda0_closed(m, p)
            chain = markov.build_chain(m, p)
            pi0 = markov.digit_mass(markov.stationary(chain), 0)
            if pi0 != closed:
                problems.append(f"stationary m={m} p={p}")
            ces = measure.cesaro_lambda(measure.bernoulli(m, p), "0", n_cesaro)
            if abs(ces - float(closed)) > 1e-3:
                problems.append(f"cesaro m={m} p={p}")
            try:
                measure.pullback_series(measure.bernoulli(m, p), 20)
            except measure.PullbackRecurrenceError:
                problems.append(f"recurrence m={m} p={p}")
    return CheckResult(
        "lambda0-triple-agreement",
        not problems,
        f"12 (m,p) combos, cesaro n={n_cesaro}: "
        + ("; ".join(problems) if problems else "exact + 1e-3 agreement"),
    )


def check_g_bound(quick: bool = False) -> CheckResult:
    points = 1000 if quick else 10_000
    worst = 0.0
    bad = 0
    for m in range(3, 21):
        for i in range(1, points):
            x = i / points
            v = abs(dimension.g_m(m, x)) * m
            worst = max(worst, v)
            if v > 1.0:
                bad += 1
    return CheckResult(
        "g-bound",
        bad == 0,
        f"m in 3..20, {points}-point grid: max m*|g_m| = {worst:.6f}",
    )


def check_root_quality(quick: bool = False) -> CheckResult:
    m_max = 20 if quick else 50
    problems = []
    for p in (0.3, 0.4, 0.6):
        for m in range(3, m_max + 1):
            if not 1.0 / m < p < 1.0 - 1.0 / m:
                continue
            q = dimension.solve_qm(m, p)
            if abs(dimension.f_m(m, q) - p) > 1e-12:
                problems.append(f"residual m={m} p={p}")
            if abs(q - p) > 1.0 / m:
                problems.append(f"|q-p| m={m} p={p}")
    if abs(dimension.solve_qm(3, 0.4) - 0.2) > 1e-12:
        problems.append("q(3, 0.4) != 0.2")
    return CheckResult(
        "root-quality",
        not problems,
        f"m <= {m_max}, p in (0.3,0.4,0.6): "
        + ("; ".join(problems) if problems else "residual <= 1e-12, |q-p| <= 1/m"),
    )


def check_entropy_convergence(quick: bool = False) -> CheckResult:
    del quick
    p = 0.3
    ms = (10, 20, 50, 100)
    bounds = [dimension.lower_bound(m, p, dimension.solve_qm(m, p)) for m in ms]
    monotone = all(b2 >= b1 - 1e-12 for b1, b2 in zip(bounds, bounds[1:]))
    h = dimension.entropy_binary(p)
    close = abs(bounds[-1] - h) <= 0.05
    return CheckResult(
        "entropy-convergence",
        monotone and close,
        f"bounds {', '.join(f'{b:.6f}' for b in bounds)} vs h(0.3) = {h:.6f}",
    )


def _ergodic_run(quick: bool) -> markov.SampleRun:
    n = 100_000 if quick else 1_000_000
    chain = markov.build_chain(3, 0.2)
    return markov.sample(chain, n, ERGODIC_SEED)


def check_ergodic_frequency(quick: bool = False) -> CheckResult:
    run = _ergodic_run(quick)
    band = 0.0064 if quick else 0.002
    freq = run.freq0()
    ok = abs(freq - 0.4) <= band
    return CheckResult(
        "ergodic-frequency",
        ok,
        f"m=3 q=0.2 n={run.n} seed={run.seed}: freq0 = {freq:.6f} "
        f"(target 0.4 +/- {band})",
    )


def check_local_dimension(quick: bool = False) -> CheckResult:
    run = _ergodic_run(quick)
    series = markov.empirical_local_dimension(run, 0.2)
    final = float(series[-1])
    bound = dimension.lower_bound(3, 0.4, 0.2)
    ok = final >= bound - 0.01
    return CheckResult(
        "local-dimension",
        ok,
        f"final estimate {final:.6f} vs bound {bound:.6f} - 0.01",
    )


def check_gamma_construction(quick: bool = False) -> CheckResult:
    """Embedded admissible samples stay clean; clean windows have bounded runs."""
    n_samples = 10 if quick else 100
    sample_len = 2000 if quick else 10_000
    depth = 200 if quick else 1000
    window_len = 12 if quick else 16
    problems = []

    chain = markov.build_chain(3, 0.5)
    for seed in range(n_samples):
        run = markov.sample(chain, sample_len, seed)
        win = univoque.theta_embed(markov.sampled_word(run))
        verdict = univoque.gamma_check_prefix(win, depth)
        if verdict.status != univoque.CLEAN_TO_DEPTH:
            problems.append(f"seed {seed} violated at k={verdict.k}")

    clean = 0
    for code in range(1 << window_len):
        s = format(code, f"0{window_len}b")
        verdict = univoque.gamma_check_prefix(s, window_len - 1)
        if verdict.status != univoque.CLEAN_TO_DEPTH:
            continue
        clean += 1
        runs = _run_lengths(s)
        first = runs[0]
        if any(r > first for r in runs[:-1]):
            problems.append(f"window {s} has an interior run above {first}")
    return CheckResult(
        "gamma-construction",
        not problems,
        f"{n_samples} embedded samples clean to depth {depth}; "
        f"{clean}/{1 << window_len} length-{window_len} windows clean, "
        f"runs bounded by the leading run"
        + ("; " + "; ".join(problems[:3]) if problems else ""),
    )


def _run_lengths(s: str) -> list[int]:
    out = []
    run = 0
    prev = ""
    for c in s:
        if c == prev:
            run += 1
        else:
            if run:
                out.append(run)
            run = 1
            prev = c
    out.append(run)
    return out


def check_determinism(quick: bool = False) -> CheckResult:
    """Re-running the seeded pieces reproduces them bit for bit."""
    run1 = _ergodic_run(quick)
    run2 = _ergodic_run(quick)
    same_bits = bool(np.array_equal(run1.bits, run2.bits))
    ces1 = measure.cesaro_lambda(measure.bernoulli(3, Fraction(1, 3)), "0", 500)
    ces2 = measure.cesaro_lambda(measure.bernoulli(3, Fraction(1, 3)), "0", 500)
    ok = same_bits and ces1 == ces2
    return CheckResult(
        "determinism",
        ok,
        "repeated seeded sample and repeated Cesaro evaluation are identical"
        if ok
        else "re-run produced different output",
    )


CHECKS = (
    ("1", check_subadditivity),
    ("2", check_counting_bound),
    ("3", check_closed_vs_recursive),
    ("4", check_normalization),
    ("5", check_quasi_bernoulli),
    ("6", check_pullback_bounds),
    ("7", check_non_invariance),
    ("8", check_lambda_triple),
    ("9", check_g_bound),
    ("10", check_root_quality),
    ("11", check_entropy_convergence),
    ("12", check_ergodic_frequency),
    ("13", check_local_dimension),
    ("14", check_gamma_construction),
    ("15", check_determinism),
)


def run_suite(quick: bool = False) -> list[tuple[str, CheckResult]]:
    return [(num, fn(quick)) for num, fn in CHECKS]


def format_report(results: list[tuple[str, CheckResult]]) -> str:
    lines = []
    for num, res in results:
        status = "PASS" if res.passed else "FAIL"
        lines.append(f"{status}  {num:>2}  {res.name}: {res.detail}")
    failed = sum(1 for _, r in results if not r.passed)
    lines.append(f"{len(results) - failed}/{len(results)} checks passed")
    return "\n".join(lines)
