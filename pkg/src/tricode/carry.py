"""Digit-by-digit carry analysis behind the dual-weight divisibility bound.

Adding multiples of cyclic-shift inputs modulo 2^m - 1 admits a unique
integer carry sequence per digit position, with wraparound from the top
digit back to the bottom.  The weight drop sum(d_l * w(a_l)) - w(s) equals
the carry sum, and bounding the best possible drop over all inputs is what
drives the 2-power divisibility of the dual code's weights.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

import numpy as np

from .field import bit_weight


def _rotl(v: int, k: int, m: int) -> int:
    """Rotate an m-bit word left by k; equals v * 2^k mod 2^m - 1 for v < 2^m - 1."""
    k %= m
    mask = (1 << m) - 1
    return ((v << k) | (v >> (m - k))) & mask if k else v


@dataclass(frozen=True)
class CarryComputation:
    """Unique carry sequence for s = sum(d_l * a_l) mod 2^m - 1.

    digits are the binary digits of the chosen representative s, carries
    c_0..c_{m-1} satisfy 2*c_i + s_i = sum_l d_l*a_i^(l) + c_{i-1} with
    c_{-1} = c_{m-1}.
    """

    m: int
    d_list: tuple
    a_list: tuple
    s: int
    digits: tuple
    carries: tuple
    d_plus: int
    d_minus: int

    @property
    def carry_sum(self) -> int:
        return sum(self.carries)


def add_with_carry(m: int, d_list, a_list, s_representative: int) -> CarryComputation:
    """Solve the wraparound carry recurrence exactly.

    The carry map is affine in the trial wrap value with slope 2^-m, so a
    single pass from a trial of 0 pins its constant and the unique fixed
    point is the integer quotient (sum(d_l*a_l) - s) / (2^m - 1).  A final
    pass materializes the digits; every division by 2 must be exact, which
    doubles as an internal consistency check.
    """
    d_list = tuple(int(d) for d in d_list)
    a_list = tuple(int(a) for a in a_list)
    if len(d_list) != len(a_list):
        raise ValueError("d_list and a_list must have equal length")
    if any(d == 0 for d in d_list):
        raise ValueError("coefficients must be nonzero")
    full = (1 << m) - 1
    for a in a_list:
        if not 0 <= a <= full:
            raise ValueError(f"input {a} out of range [0, {full}]")
    if not 0 <= s_representative <= full:
        raise ValueError(f"representative {s_representative} out of range [0, {full}]")
    total = sum(d * a for d, a in zip(d_list, a_list))
    if (total - s_representative) % full != 0:
        raise ValueError(
            f"s={s_representative} is not congruent to sum(d_l*a_l)={total} mod {full}"
        )

    wrap = (total - s_representative) // full
    digits = tuple((s_representative >> i) & 1 for i in range(m))
    carries = []
    c = wrap
    for i in range(m):
        v = sum(d * ((a >> i) & 1) for d, a in zip(d_list, a_list)) + c - digits[i]
        if v & 1:
            raise AssertionError(f"carry recurrence produced an odd value at digit {i}")
        c = v >> 1
        carries.append(c)
    if c != wrap:
        raise AssertionError("carry wraparound failed to close")

    d_plus = sum(d for d in d_list if d > 0)
    d_minus = sum(d for d in d_list if d < 0)
    strict = any(a % full != 0 for a in a_list)
    for c in carries:
        if not d_minus - 1 <= c <= d_plus:
            raise AssertionError(f"carry {c} violates [{d_minus - 1}, {d_plus}]")
        if strict and not d_minus <= c < d_plus:
            raise AssertionError(f"carry {c} violates strict bounds [{d_minus}, {d_plus})")
    drop = sum(d * bit_weight(a) for d, a in zip(d_list, a_list)) - bit_weight(s_representative)
    if sum(carries) != drop:
        raise AssertionError("carry sum does not equal the weight drop")

    return CarryComputation(
        m=m,
        d_list=d_list,
        a_list=a_list,
        s=s_representative,
        digits=digits,
        carries=tuple(carries),
        d_plus=d_plus,
        d_minus=d_minus,
    )


@dataclass(frozen=True)
class GainSequence:
    """Per-digit weight-gain terms for the pair of exponents (3, 13).

    Carries come from the five-term all-ones decomposition
    3a + 13b = 2a + a + 8b + 4b + b (each multiple a cyclic shift), so
    every carry lies in {0,...,4}.  gains[i] adds the six participating
    input bits around digit i and subtracts the two adjacent carries;
    the total equals 2*(w(s) - w(a) - w(b)).
    """

    m: int
    a: int
    b: int
    s: int
    carries: tuple
    gains: tuple
    total: int


def gain_sequence(m: int, a: int, b: int, s_representative: int | None = None) -> GainSequence:
    """Carry-and-gain data for 3a + 13b mod 2^m - 1.

    a and b are residues in [0, 2^m - 2].  When the result residue is 0
    both representatives 0 and 2^m - 1 are admissible; the caller picks
    via s_representative (default: the residue itself).
    """
    full = (1 << m) - 1
    if not (0 <= a < full and 0 <= b < full):
        raise ValueError("inputs must be residues in [0, 2^m - 2]")
    if a == 0 and b == 0:
        raise ValueError("inputs must not both be zero mod 2^m - 1")
    residue = (3 * a + 13 * b) % full
    if s_representative is None:
        s_representative = residue
    elif s_representative % full != residue:
        raise ValueError(f"representative {s_representative} not congruent to {residue}")

    inputs = (_rotl(a, 1, m), a, _rotl(b, 3, m), _rotl(b, 2, m), b)
    comp = add_with_carry(m, (1, 1, 1, 1, 1), inputs, s_representative)
    c = comp.carries

    def abit(i):
        return (a >> (i % m)) & 1

    def bbit(i):
        return (b >> (i % m)) & 1

    gains = tuple(
        abit(i - 1) + abit(i) + bbit(i - 3) + bbit(i - 2) + bbit(i - 1) + bbit(i)
        - c[(i - 1) % m] - c[i]
        for i in range(m)
    )
    total = sum(gains)
    expected = 2 * (bit_weight(s_representative) - bit_weight(a) - bit_weight(b))
    if total != expected:
        raise AssertionError(f"gain total {total} != {expected}")
    return GainSequence(m=m, a=a, b=b, s=s_representative, carries=c, gains=gains, total=total)


def check_window_hypothesis(seq: GainSequence):
    """Every gain of at least 2 must head a short window of small sum.

    For each position i with gains[i] >= 2, look for the least t <= m such
    that gains[i] + gains[i-1] + ... + gains[i-t+1] <= t (indices cyclic).
    Returns (True, witnesses) with one (i, t) per such position, or
    (False, failing_positions).
    """
    m = seq.m
    g = seq.gains
    witnesses = []
    failures = []
    for i in range(m):
        if g[i] < 2:
            continue
        acc = 0
        found = None
        for t in range(1, m + 1):
            acc += g[(i - t + 1) % m]
            if acc <= t:
                found = t
                break
        if found is None:
            failures.append(i)
        else:
            witnesses.append((i, found))
    if failures:
        return False, tuple(failures)
    return True, tuple(witnesses)


def check_total_bound(seq: GainSequence) -> bool:
    """Whether the gain total stays within one per digit position."""
    return seq.total <= seq.m


def gold_closed_form(m: int, r: int) -> int:
    """Best weight gain for a single exponent of the form 2^r + 1."""
    if r < 1:
        raise ValueError("r must be positive")
    g = gcd(m, r)
    if (m // g) % 2 == 0:
        return m // 2
    return (m - g) // 2


_EXHAUSTIVE_CAP = 1 << 27


def _pop_table(m: int) -> np.ndarray:
    return np.bitwise_count(np.arange((1 << m), dtype=np.uint32)).astype(np.int16)


def max_weight_gain(m: int, d_list) -> int:
    """Exhaustive maximum of w(s) - sum(w(a_l)) over admissible inputs.

    Inputs range over residues mod 2^m - 1 with at least one nonzero.  For
    the output s both representatives of residue 0 are tried (the all-ones
    word raises w(s) by m).  For a zero-residue input the all-ones
    representative only raises w(a_l), strictly lowering the objective, so
    input representatives are the residues themselves.
    """
    gain, _ = _max_weight_gain_witness(m, d_list)
    return gain


def max_weight_gain_witness(m: int, d_list):
    """Like max_weight_gain but also returns (s, a_list) achieving it."""
    return _max_weight_gain_witness(m, d_list)


def _max_weight_gain_witness(m: int, d_list):
    d_list = tuple(int(d) for d in d_list)
    if not d_list:
        raise ValueError("need at least one exponent coefficient")
    full = (1 << m) - 1
    d_list = tuple(d % full for d in d_list)
    if any(d == 0 for d in d_list):
        raise ValueError("coefficients must be nonzero mod 2^m - 1")
    j = len(d_list)
    if full**j > _EXHAUSTIVE_CAP:
        raise ValueError(f"m={m} with {j} exponents exceeds the exhaustive cap")

    pop = _pop_table(m)
    arange = np.arange(full, dtype=np.int64)
    wa = pop[arange]

    best = None
    best_witness = None
    if j == 1:
        s = (d_list[0] * arange) % full
        ws = pop[s].copy()
        ws[s == 0] = m
        obj = ws - wa
        obj[0] = np.iinfo(np.int16).min  # the lone input must be nonzero
        k = int(np.argmax(obj))
        best = int(obj[k])
        s_val = int(s[k])
        best_witness = (full if s_val == 0 else s_val, (int(k),))
    else:
        # Vectorize over the first input, loop the rest.
        rest_shapes = [range(full)] * (j - 1)
        d0 = d_list[0]
        for rest in itertools.product(*rest_shapes):
            offset = sum(d * a for d, a in zip(d_list[1:], rest)) % full
            s = (d0 * arange + offset) % full
            ws = pop[s].copy()
            ws[s == 0] = m
            obj = ws - wa - int(sum(pop[a] for a in rest))
            if all(a == 0 for a in rest):
                obj[0] = np.iinfo(np.int16).min
            k = int(np.argmax(obj))
            if best is None or obj[k] > best:
                best = int(obj[k])
                s_val = int(s[k])
                best_witness = (full if s_val == 0 else s_val, (int(k), *map(int, rest)))
    return best, best_witness


@dataclass(frozen=True)
class GainSweepSummary:
    """Exhaustive verdicts over every admissible (a, b) pair at one m."""

    m: int
    pairs_checked: int
    alt_rep_pairs: int
    max_total: int
    bridge_ok: bool
    window_ok: bool
    total_ok: bool
    window_failures: tuple
    total_failures: tuple


def sweep_gain_properties(m: int, chunk: int = 1 << 20) -> GainSweepSummary:
    """Check the gain-sequence laws for every admissible (a, b) at one m.

    Runs the carry recurrence, the gain identity, the window hypothesis
    and the total bound over all (2^m - 1)^2 - 1 residue pairs with
    vectorized digit arithmetic, then revisits the zero-residue pairs
    with the all-ones representative, which is the only point where a
    second digit pattern exists.
    """
    full = (1 << m) - 1
    pop = _pop_table(m)
    n_pairs = full * full
    max_total = -(10**9)
    bridge_ok = True
    window_failures = []
    total_failures = []

    for lo in range(0, n_pairs, chunk):
        hi = min(lo + chunk, n_pairs)
        k = np.arange(lo, hi, dtype=np.int64)
        A = k // full
        B = k % full
        if lo == 0:
            A, B = A[1:], B[1:]  # drop the all-zero pair
        R = (3 * A + 13 * B) % full
        rot = lambda v, t: ((v << t) | (v >> (m - t))) & full
        wrap_num = rot(A, 1) + A + rot(B, 3) + rot(B, 2) + B - R
        if np.any(wrap_num % full):
            raise AssertionError("wraparound quotient not integral")
        wrap = wrap_num // full

        gains = np.empty((A.shape[0], m), dtype=np.int16)
        carr = np.empty((A.shape[0], m), dtype=np.int16)
        c = wrap.astype(np.int16)
        abit = lambda i: ((A >> (i % m)) & 1).astype(np.int16)
        bbit = lambda i: ((B >> (i % m)) & 1).astype(np.int16)
        for i in range(m):
            v = abit(i - 1) + abit(i) + bbit(i - 3) + bbit(i - 2) + bbit(i) + c - ((R >> i) & 1).astype(np.int16)
            if np.any(v & 1):
                raise AssertionError("vector carry recurrence produced an odd value")
            c = v >> 1
            carr[:, i] = c
        if np.any(c != wrap):
            raise AssertionError("vector carry wraparound failed to close")
        if np.any((carr < 0) | (carr > 4)):
            raise AssertionError("vector carries escaped {0,...,4}")

        prev = np.roll(carr, 1, axis=1)
        for i in range(m):
            gains[:, i] = (
                abit(i - 1) + abit(i) + bbit(i - 3) + bbit(i - 2) + bbit(i - 1) + bbit(i)
            )
        gains -= carr + prev

        totals = gains.sum(axis=1)
        expected = 2 * (pop[R] - pop[A] - pop[B])
        if np.any(totals != expected):
            bridge_ok = False
        max_total = max(max_total, int(totals.max()))

        bad_total = np.nonzero(totals > m)[0]
        for idx in bad_total[:16]:
            total_failures.append((int(A[idx]), int(B[idx])))

        doubled = np.concatenate([gains, gains], axis=1)
        csum = np.zeros((gains.shape[0], 2 * m + 1), dtype=np.int16)
        np.cumsum(doubled, axis=1, out=csum[:, 1:])
        for i in range(m):
            need = gains[:, i] >= 2
            if not need.any():
                continue
            ok = ~need
            endpoint = csum[:, i + m + 1]
            for t in range(1, m + 1):
                ok |= (endpoint - csum[:, i + m + 1 - t]) <= t
                if ok.all():
                    break
            bad = np.nonzero(~ok)[0]
            for idx in bad[:16]:
                window_failures.append((int(A[idx]), int(B[idx]), i))

    # Zero-residue pairs admit the all-ones representative as well.
    if gcd(13, full) != 1:
        raise ValueError(f"13 is not invertible mod {full}; zero-residue pass unsupported")
    inv13 = pow(13, -1, full)
    alt = 0
    for a in range(full):
        b = (-3 * a * inv13) % full
        if a == 0 and b == 0:
            continue
        if (3 * a + 13 * b) % full != 0:
            raise AssertionError("zero-residue enumeration is wrong")
        seq = gain_sequence(m, a, b, s_representative=full)
        alt += 1
        max_total = max(max_total, seq.total)
        ok, detail = check_window_hypothesis(seq)
        if not ok:
            window_failures.append((a, b, detail))
        if not check_total_bound(seq):
            total_failures.append((a, b))

    return GainSweepSummary(
        m=m,
        pairs_checked=n_pairs - 1,
        alt_rep_pairs=alt,
        max_total=max_total,
        bridge_ok=bridge_ok,
        window_ok=not window_failures,
        total_ok=not total_failures,
        window_failures=tuple(window_failures[:16]),
        total_failures=tuple(total_failures[:16]),
    )
