"""Closed forms, recurrences, and number-theoretic helpers for composition counts.

Everything here is exact integer arithmetic; no floats, no rounding.
Graph families covered: paths, trees, stars, complete graphs (Bell
numbers), complete graphs minus an edge, cycles (with an equivalent
divisor-sum route through Lyndon composition counts), wheels, ladders,
and complete bipartite graphs via a signed coefficient array.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

__all__ = [
    "KmnCoefficientRow",
    "LadderSplit",
    "bell",
    "closed_form_count",
    "complementary_bell",
    "cycle_count_via_lyndon",
    "divisors",
    "integer_compositions",
    "kmn_coefficient_row",
    "kmn_count",
    "kmn_count_direct",
    "ladder_count",
    "ladder_split",
    "lucas_number",
    "lyndon_compositions",
    "lyndon_count",
    "mobius",
    "sqrt10_convergent_denominator",
    "wheel_count_formula",
    "wheel_count_recurrence",
]


def bell(n: int) -> int:
    """Bell number B(n): partitions of an n-element set, by the Bell triangle."""
    if n < 0:
        raise ValueError("bell needs n >= 0")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        row = nxt
    return row[0]


def complementary_bell(n: int) -> int:
    """n! times the x^n coefficient of e^(1-e^x).

    Same triangle-free recurrence as Bell numbers but with a sign flip:
    t(0)=1 and t(n+1) = -sum_k C(n,k) t(k).
    """
    if n < 0:
        raise ValueError("complementary_bell needs n >= 0")
    values = [1]
    for k in range(n):
        values.append(-sum(comb(k, i) * values[i] for i in range(k + 1)))
    return values[n]


def mobius(n: int) -> int:
    """Moebius function by trial division: 0 on squarefull n, else (-1)^#primes."""
    if n < 1:
        raise ValueError("mobius needs n >= 1")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1 if p == 2 else 2
    if n > 1:
        result = -result
    return result


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    if n < 1:
        raise ValueError("divisors needs n >= 1")
    small = []
    large = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    small.extend(reversed(large))
    return small


def integer_compositions(n: int):
    """All ordered sums of positive integers totalling n, lexicographically."""
    if n < 0:
        raise ValueError("integer_compositions needs n >= 0")
    if n == 0:
        yield ()
        return
    parts: list[int] = []

    def rec(remaining: int):
        if remaining == 0:
            yield tuple(parts)
            return
        for part in range(1, remaining + 1):
            parts.append(part)
            yield from rec(remaining - part)
            parts.pop()

    yield from rec(n)


def _is_aperiodic(parts: tuple[int, ...]) -> bool:
    k = len(parts)
    for d in divisors(k):
        if d < k and parts == parts[:d] * (k // d):
            return False
    return True


def _is_least_rotation(parts: tuple[int, ...]) -> bool:
    return all(parts <= parts[i:] + parts[:i] for i in range(1, len(parts)))


def lyndon_compositions(n: int) -> list[tuple[int, ...]]:
    """Aperiodic compositions of n that are least among their rotations.

    Generate-and-filter over all 2^(n-1) compositions; output is
    lexicographically sorted because the generator is.
    """
    if n < 1:
        raise ValueError("lyndon_compositions needs n >= 1")
    return [
        parts
        for parts in integer_compositions(n)
        if _is_aperiodic(parts) and _is_least_rotation(parts)
    ]


def lyndon_count(n: int) -> int:
    """Moebius-inverted count of Lyndon compositions: (1/n) sum mu(n/d) 2^d.

    By this formula the n=1 value is 2, one more than the single
    composition the enumeration produces; callers relying on enumeration
    lengths should start at n=2.
    """
    if n < 1:
        raise ValueError("lyndon_count needs n >= 1")
    total = sum(mobius(n // d) * 2**d for d in divisors(n))
    quotient, remainder = divmod(total, n)
    if remainder:
        raise RuntimeError(f"inexact division in lyndon_count({n}); this is a bug")
    return quotient


_CLOSED_FORM_FAMILIES = ("path", "complete", "tree", "star", "complete-minus-edge", "cycle")


def closed_form_count(family: str, n: int) -> int:
    """Closed-form composition count for the simple families.

    path/tree/star: 2^(n-1); complete: B(n); complete minus one edge:
    B(n)-B(n-2); cycle: 2^n - n. The zero-vertex path counts 1 (the empty
    composition).
    """
    family = family.strip().lower().replace("_", "-")
    if family == "path":
        if n < 0:
            raise ValueError("path needs n >= 0")
        return 1 if n == 0 else 2 ** (n - 1)
    if family in ("tree", "star"):
        if n < 1:
            raise ValueError(f"{family} needs n >= 1")
        return 2 ** (n - 1)
    if family == "complete":
        if n < 1:
            raise ValueError("complete needs n >= 1")
        return bell(n)
    if family == "complete-minus-edge":
        if n < 2:
            raise ValueError("complete-minus-edge needs n >= 2")
        return bell(n) - bell(n - 2)
    if family == "cycle":
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        return 2**n - n
    raise ValueError(f"no closed form for family {family!r}")


def cycle_count_via_lyndon(n: int) -> int:
    """Cycle count as a divisor sum, sum d*L(d) - n; equals 2^n - n for n >= 3."""
    if n < 1:
        raise ValueError("cycle_count_via_lyndon needs n >= 1")
    return sum(d * lyndon_count(d) for d in divisors(n)) - n


def wheel_count_formula(n: int) -> int:
    """Hub-and-rim count for the wheel on n vertices (n >= 2).

    Rim-only compositions contribute 2^(n-1) - n + 2 together with the
    all-in-one block; compositions where the hub joins some rim vertices
    split the rest of the rim into paths, grouped by the periodic
    repetition of a Lyndon composition of a divisor d of n-1:

        2^(n-1) - n + 2 + sum_{1<d | n-1} d * sum_L prod_i P(a_i - 1)^((n-1)/d)

    where L runs over Lyndon compositions (a_1..a_k) of d and P(j) is the
    path count 2^(j-1), with P(0) = 1.
    """
    if n < 2:
        raise ValueError("wheel_count_formula needs n >= 2")
    rim = n - 1
    total = 2 ** (n - 1) - n + 2
    for d in divisors(rim):
        if d == 1:
            continue
        repeats = rim // d
        contribution = 0
        for parts in lyndon_compositions(d):
            product = 1
            for part in parts:
                product *= closed_form_count("path", part - 1) ** repeats
            contribution += product
        total += d * contribution
    return total


def wheel_count_recurrence(n: int) -> int:
    """Wheel count via the linear recurrence v(n) = 3v(n-1) - v(n-2) + n - 2.

    Seeds v(1) = v(2) = 2 reproduce the combinatorial values from n = 2 on;
    the single-vertex wheel is special-cased to 1.
    """
    if n < 1:
        raise ValueError("wheel_count_recurrence needs n >= 1")
    if n == 1:
        return 1
    prev2, prev1 = 2, 2
    for k in range(3, n + 1):
        prev2, prev1 = prev1, 3 * prev1 - prev2 + k - 2
    return prev1


def lucas_number(k: int) -> int:
    """Lucas numbers: 2, 1, 3, 4, 7, ..."""
    if k < 0:
        raise ValueError("lucas_number needs k >= 0")
    a, b = 2, 1
    for _ in range(k):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class LadderSplit:
    """Ladder compositions split by the fate of the last rung's endpoints."""

    apart: int  # endpoints of the last rung in different blocks
    together: int  # endpoints of the last rung in the same block

    @property
    def total(self) -> int:
        return self.apart + self.together


def ladder_split(n: int) -> LadderSplit:
    """Coupled recurrence over rungs: apart' = 4a + 3t, together' = 3a + 2t.

    The 2-vertex ladder (one rung) seeds both counts at 1.
    """
    if n < 1:
        raise ValueError("ladder_split needs n >= 1")
    apart, together = 1, 1
    for _ in range(n - 1):
        apart, together = 4 * apart + 3 * together, 3 * apart + 2 * together
    return LadderSplit(apart=apart, together=together)


def ladder_count(n: int) -> int:
    """Ladder count via the recurrence c(n) = 6c(n-1) + c(n-2), c(1)=2, c(2)=12."""
    if n < 1:
        raise ValueError("ladder_count needs n >= 1")
    if n == 1:
        return 2
    prev2, prev1 = 2, 12
    for _ in range(n - 2):
        prev2, prev1 = prev1, 6 * prev1 + prev2
    return prev1


def sqrt10_convergent_denominator(k: int) -> int:
    """Denominator of the k-th convergent of [3; 6, 6, 6, ...] (sqrt of 10)."""
    if k < 0:
        raise ValueError("sqrt10_convergent_denominator needs k >= 0")
    if k == 0:
        return 1
    prev2, prev1 = 1, 6
    for _ in range(k - 1):
        prev2, prev1 = prev1, 6 * prev1 + prev2
    return prev1


# ---------------------------------------------------------------------------
# Complete bipartite graphs


@dataclass(frozen=True)
class KmnCoefficientRow:
    """Row m of the signed array behind the power-sum bipartite count.

    ``entries[j]`` holds the coefficient of (j+1)^n, i.e. columns 1..m+1.
    """

    m: int
    entries: tuple[int, ...]


# Full-history recurrence: rows are extended once and kept. Appending is
# idempotent, so concurrent readers at worst redo work.
_coefficient_rows: list[tuple[int, ...]] = [(1,)]


def _coefficient(row: int, col: int) -> int:
    if col < 1 or col > row + 1:
        return 0
    return _coefficient_rows[row][col - 1]


def _extend_coefficient_rows(max_m: int):
    while len(_coefficient_rows) <= max_m:
        m = len(_coefficient_rows)
        row = []
        for col in range(1, m + 2):
            value = sum(comb(m - 1, i) * _coefficient(m - 1 - i, col - 1) for i in range(m))
            value -= sum(comb(m - 1, i) * _coefficient(m - 1 - i, col) for i in range(1, m))
            row.append(value)
        _coefficient_rows.append(tuple(row))


def kmn_coefficient_row(m: int) -> KmnCoefficientRow:
    """Coefficients a(m, 1..m+1) with a(0, 1) = 1 and the two-sum recurrence

        a(m, c) = sum_{i<m} C(m-1, i) a(m-1-i, c-1)
                - sum_{0<i<m} C(m-1, i) a(m-1-i, c)

    treating out-of-range entries as 0.
    """
    if m < 0:
        raise ValueError("kmn_coefficient_row needs m >= 0")
    _extend_coefficient_rows(m)
    return KmnCoefficientRow(m=m, entries=_coefficient_rows[m])


def kmn_count(m: int, n: int) -> int:
    """Complete bipartite count as a signed power sum, sum_i a(m,i) i^n."""
    if m < 1:
        raise ValueError("kmn_count needs m >= 1")
    if n < 0:
        raise ValueError("kmn_count needs n >= 0")
    row = kmn_coefficient_row(m).entries
    total = sum(coeff * base**n for base, coeff in enumerate(row, start=1))
    if total < 0:
        raise RuntimeError(f"negative bipartite count for ({m}, {n}); this is a bug")
    return total


def kmn_count_direct(m: int, n: int) -> int:
    """Complete bipartite count by direct recursion on the first part.

    Conditions on the block containing one distinguished vertex of the
    m-part: either it takes no other vertex of that part (binomial sum over
    companions from the n-part) or it takes i of them plus at least one
    from the n-part. Empty parts count 1.
    """
    if m < 0 or n < 0:
        raise ValueError("kmn_count_direct needs m, n >= 0")
    return _kmn_direct(m, n)


@lru_cache(maxsize=None)
def _kmn_direct(m: int, n: int) -> int:
    if m == 0 or n == 0:
        return 1
    total = sum(comb(n, j) * _kmn_direct(m - 1, n - j) for j in range(n + 1))
    total += sum(
        comb(m - 1, i) * comb(n, j) * _kmn_direct(m - 1 - i, n - j)
        for i in range(1, m)
        for j in range(1, n + 1)
    )
    return total
