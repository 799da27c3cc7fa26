"""Bernoulli-type cylinder measures on the constrained shift space.

The measure splits mass p/(1-p) at every free branch and passes full mass
through forced branches (a word ending in a maximal-length run has only
one admissible extension).  Exact mode keeps every value a Fraction;
float mode is for long pullback/Cesaro horizons.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .words import (
    InadmissibleWordError,
    Word,
    enumerate_words,
    is_admissible,
    is_admissible_symbols,
    occurrence_counts,
    symbols_of,
)

EXACT = "exact"
FLOAT = "float"

# comparison tolerance where float mode makes exactness impossible
FLOAT_TOL = 1e-9


class PullbackRecurrenceError(RuntimeError):
    """The DP series contradicts the shifted-cylinder recurrences (a bug)."""


@dataclass(frozen=True)
class BernoulliTypeMeasure:
    m: int
    p: Fraction | float
    mode: str = EXACT

    def __post_init__(self):
        if self.m < 3:
            raise ValueError(f"order must be >= 3, got {self.m}")
        if not 0 < self.p < 1:
            raise ValueError(f"p must lie in (0,1), got {self.p}")
        if self.mode not in (EXACT, FLOAT):
            raise ValueError(f"mode must be {EXACT!r} or {FLOAT!r}")
        if self.mode == EXACT and not isinstance(self.p, Fraction):
            raise ValueError("exact mode requires p as a Fraction")

    @property
    def q(self):
        """Mass of the digit 1 at a free branch."""
        return 1 - self.p

    def as_float(self) -> "BernoulliTypeMeasure":
        if self.mode == FLOAT:
            return self
        return BernoulliTypeMeasure(self.m, float(self.p), FLOAT)


def bernoulli(m: int, p, mode: str | None = None) -> BernoulliTypeMeasure:
    """Build a measure, defaulting to exact mode for rational p."""
    if isinstance(p, str):
        p = Fraction(p)
    if isinstance(p, int):
        p = Fraction(p)
    if mode is None:
        mode = EXACT if isinstance(p, Fraction) else FLOAT
    if mode == EXACT:
        p = Fraction(p)
    else:
        p = float(p)
    return BernoulliTypeMeasure(m, p, mode)


@dataclass(frozen=True)
class CylinderValue:
    word: Word
    value: Fraction | float


@dataclass(frozen=True)
class PullbackSeries:
    """Shifted-cylinder measures a_k, b_k, c_k, d_k and Cesaro averages of a."""

    m: int
    p: Fraction | float
    a: tuple
    b: tuple
    c: tuple
    d: tuple
    cesaro_a: tuple


# ---------------------------------------------------------------------------
# cylinder measure


def _mu_symbols(m: int, p, q, s: str):
    """Measure of [s] by the branching recursion; 0 for inadmissible s."""
    val = p**0  # typed one (Fraction or float)
    prev = ""
    run = 0
    for c in s:
        if prev and run >= m - 1:
            if c == prev:
                return val * 0
            # forced branch: full mass passes through
        else:
            val = val * (p if c == "0" else q)
        run = run + 1 if c == prev else 1
        prev = c
    return val


def mu_recursive(meas: BernoulliTypeMeasure, w: Word | str) -> CylinderValue:
    """Cylinder measure by the step-by-step branching rule.

    Inadmissible words map to 0 (the cylinder is empty), so additivity
    identities hold uniformly.
    """
    word = w if isinstance(w, Word) else Word(symbols_of(w), meas.m)
    return CylinderValue(word, _mu_symbols(meas.m, meas.p, meas.q, word.symbols))


def mu_closed(meas: BernoulliTypeMeasure, w: Word | str) -> CylinderValue:
    """Closed form p^{n0} (1-p)^{n1} from the occurrence counts."""
    word = w if isinstance(w, Word) else Word(symbols_of(w), meas.m)
    if not is_admissible(word):
        raise InadmissibleWordError(
            f"{word.symbols!r} is not admissible for m={word.order}"
        )
    n0, n1 = occurrence_counts(meas.m, word.symbols)
    return CylinderValue(word, meas.p**n0 * meas.q**n1)


# ---------------------------------------------------------------------------
# shift pullbacks via run-state dynamic programming

State = tuple[int, int]  # (digit, run length)


def _initial_dist(m: int, p, q) -> dict[State, object]:
    return {(0, 1): p, (1, 1): q}


def _step_dist(m: int, p, q, dist: dict[State, object]) -> dict[State, object]:
    """One symbol of the run-state evolution carrying cylinder mass."""
    out: dict[State, object] = {}

    def add(key, mass):
        if key in out:
            out[key] = out[key] + mass
        else:
            out[key] = mass

    for (d, r), mass in dist.items():
        if r >= m - 1:
            add((1 - d, 1), mass)  # forced opposite digit
        else:
            stay = p if d == 0 else q
            add((d, r + 1), mass * stay)
            add((1 - d, 1), mass * (1 - stay))
    return out


def _emit_from_state(m: int, p, q, state: State, s: str):
    """Probability of emitting the word s starting from a run state."""
    d, r = state
    val = p**0
    for c in s:
        sym = int(c)
        if r >= m - 1:
            if sym == d:
                return val * 0
            val = val  # forced, factor 1
        else:
            val = val * (p if sym == 0 else q)
        if sym == d:
            r += 1
        else:
            d, r = sym, 1
    return val


def pullback_cylinder(meas: BernoulliTypeMeasure, w: Word | str, k: int):
    """mu_p(sigma^{-k}[w]) summed by run-state DP, never by enumeration."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    s = symbols_of(w)
    m, p, q = meas.m, meas.p, meas.q
    if k == 0:
        return _mu_symbols(m, p, q, s)
    if not is_admissible_symbols(m, s):
        raise InadmissibleWordError(f"{s!r} is not admissible for m={m}")
    dist = _initial_dist(m, p, q)
    for _ in range(k - 1):
        dist = _step_dist(m, p, q, dist)
    return sum(mass * _emit_from_state(m, p, q, st, s) for st, mass in dist.items())


def _check_series_recurrences(m, p, q, a, c, d, exact: bool) -> None:
    """The proof recurrences tying a_k and c_k to earlier d values."""
    for k in range(m, len(a)):
        coeffs = [p**i for i in range(m - 1)]
        a_pred = sum(coeffs[i] * d[k - 1 - i] for i in range(m - 1))
        c_pred = sum((q * coeffs[i]) * d[k - 1 - i] for i in range(m - 2))
        c_pred = c_pred + coeffs[m - 2] * d[k - m + 1]
        for got, want, name in ((a[k], a_pred, "a"), (c[k], c_pred, "c")):
            bad = got != want if exact else abs(got - want) > FLOAT_TOL
            if bad:
                raise PullbackRecurrenceError(
                    f"{name}_{k} = {got} but recurrence gives {want} (m={m}, p={p})"
                )


def pullback_series(meas: BernoulliTypeMeasure, kmax: int) -> PullbackSeries:
    """a,b,c,d up to kmax, validated against the proof recurrences."""
    if kmax < meas.m:
        raise ValueError(f"kmax must be >= m={meas.m}, got {kmax}")
    m, p, q = meas.m, meas.p, meas.q
    a = [_mu_symbols(m, p, q, "0")]
    b = [_mu_symbols(m, p, q, "1")]
    c = [_mu_symbols(m, p, q, "01")]
    d = [_mu_symbols(m, p, q, "10")]
    dist = _initial_dist(m, p, q)
    for _ in range(kmax):
        a.append(sum(mass * _emit_from_state(m, p, q, st, "0") for st, mass in dist.items()))
        b.append(sum(mass * _emit_from_state(m, p, q, st, "1") for st, mass in dist.items()))
        c.append(sum(mass * _emit_from_state(m, p, q, st, "01") for st, mass in dist.items()))
        d.append(sum(mass * _emit_from_state(m, p, q, st, "10") for st, mass in dist.items()))
        dist = _step_dist(m, p, q, dist)
    _check_series_recurrences(m, p, q, a, c, d, exact=meas.mode == EXACT)
    cesaro = []
    total = a[0] * 0
    for n, val in enumerate(a, start=1):
        total = total + val
        cesaro.append(total / n)
    return PullbackSeries(m, meas.p, tuple(a), tuple(b), tuple(c), tuple(d), tuple(cesaro))


def cesaro_lambda(meas: BernoulliTypeMeasure, w: Word | str, n: int) -> float:
    """(1/n) sum_{k<n} mu(sigma^{-k}[w]), computed in binary64.

    The limit exists but no rate is known, so n is always caller-supplied.
    Long horizons make exact rationals impractical; this always runs in
    float, matching the documented error model.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    s = symbols_of(w)
    m = meas.m
    p = float(meas.p)
    q = 1.0 - p
    total = _mu_symbols(m, p, q, s)
    dist = _initial_dist(m, p, q)
    for _ in range(n - 1):
        total += sum(mass * _emit_from_state(m, p, q, st, s) for st, mass in dist.items())
        dist = _step_dist(m, p, q, dist)
    return total / n


def lambda0_closed(m: int, p):
    """Invariant-measure mass of [0]: (p - p^m) / (1 - p^m - (1-p)^m)."""
    if m < 3:
        raise ValueError(f"order must be >= 3, got {m}")
    if not 0 < p < 1:
        raise ValueError(f"p must lie in (0,1), got {p}")
    return (p - p**m) / (1 - p**m - (1 - p) ** m)


# ---------------------------------------------------------------------------
# exhaustive inequality checks (exact arithmetic)


def _admissible_strings_upto(m: int, max_len: int) -> list[str]:
    out = [""]
    for n in range(1, max_len + 1):
        out.extend(w.symbols for w in enumerate_words(m, n))
    return out


def quasi_bernoulli_check(meas: BernoulliTypeMeasure, L: int) -> list[tuple[str, str]]:
    """Violations of mu[w]mu[v] <= mu[wv] <= (p(1-p))^{-1} mu[w]mu[v].

    Exhaustive over admissible pairs with wv admissible and |w|+|v| <= L.
    Expected empty.
    """
    if meas.mode != EXACT:
        raise ValueError("quasi_bernoulli_check requires exact mode")
    if L < 2:
        raise ValueError(f"L must be >= 2, got {L}")
    m, p, q = meas.m, meas.p, meas.q
    inv = 1 / (p * q)
    by_len: dict[int, list[tuple[str, object]]] = {}
    for s in _admissible_strings_upto(m, L):
        by_len.setdefault(len(s), []).append((s, _mu_symbols(m, p, q, s)))
    violations = []
    for a, group_w in by_len.items():
        for b, group_v in by_len.items():
            if a + b > L:
                continue
            for w, mu_w in group_w:
                for v, mu_v in group_v:
                    wv = w + v
                    if not is_admissible_symbols(m, wv):
                        continue
                    mu_wv = _mu_symbols(m, p, q, wv)
                    prod = mu_w * mu_v
                    if not (prod <= mu_wv <= inv * prod):
                        violations.append((w, v))
    return violations


def pullback_bounds_check(
    meas: BernoulliTypeMeasure, L: int, kmax: int
) -> list[tuple[str, int]]:
    """Violations of c^{-1} mu[w] <= mu(sigma^{-k}[w]) <= c mu[w].

    c = p^{-2}(1-p)^{-2}; exhaustive over admissible |w| <= L, 1 <= k <= kmax.
    Expected empty.
    """
    if meas.mode != EXACT:
        raise ValueError("pullback_bounds_check requires exact mode")
    m, p, q = meas.m, meas.p, meas.q
    c = 1 / (p * p * q * q)
    # distributions after k symbols, shared across all words
    dists = []
    dist = _initial_dist(m, p, q)
    for _ in range(kmax):
        dists.append(dist)
        dist = _step_dist(m, p, q, dist)
    violations = []
    for s in _admissible_strings_upto(m, L):
        if not s:
            continue
        mu_w = _mu_symbols(m, p, q, s)
        for k in range(1, kmax + 1):
            pb = sum(
                mass * _emit_from_state(m, p, q, st, s)
                for st, mass in dists[k - 1].items()
            )
            if not (mu_w <= c * pb and pb <= c * mu_w):
                violations.append((s, k))
    return violations
