"""Closed forms and recurrences for paths, cycles, wheels and complete graphs.

Everything here is formula-driven; nothing enumerates subsets or walks the
digraph recurrence. Binomials vanish outside ``0 <= b <= a``.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Sequence

from dompoly.graph import DomainError, Family
from dompoly.polynomial import (
    DomPolynomial,
    KSetTriangle,
    TruncatedBivariateSeries,
    UnivariateSeries,
    poly_add,
    poly_mul,
    poly_pow,
    poly_shift,
)


def binom(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


# --------------------------------------------------------------------------
# whole polynomials


def complete_poly(n: int) -> DomPolynomial:
    """gamma(K_n, t) = (1+t)^n - t^n."""
    if n < 1:
        raise DomainError(f"complete graph needs n >= 1, got {n}")
    return DomPolynomial(n, [0] + [math.comb(n, k) for k in range(1, n + 1)])


def union_poly(ps: Sequence[DomPolynomial]) -> DomPolynomial:
    acc = DomPolynomial(0, (1,))
    for p in ps:
        acc = acc * p
    return acc


def join_poly(pg: DomPolynomial, ph: DomPolynomial) -> DomPolynomial:
    """Polynomial of G + H from those of G and H (gamma-convention algebra)."""
    n, m = pg.n, ph.n
    if n < 1 or m < 1:
        raise DomainError(f"join formula needs nonempty operands, got sizes {n}, {m}")

    def gam(p: DomPolynomial) -> tuple[int, ...]:
        return p.gamma_coeffs

    def sub(a, b):
        return poly_add(a, tuple(-x for x in b))

    total = gam(complete_poly(n + m))
    total = sub(total, poly_shift(sub(gam(complete_poly(n)), gam(pg)), m))
    total = sub(total, poly_shift(sub(gam(complete_poly(m)), gam(ph)), n))
    return DomPolynomial.from_gamma(n + m, total)


def _tribonacci_like(n: int, seeds: list[DomPolynomial]) -> DomPolynomial:
    # D(F_n) = t [D(F_{n-1}) + D(F_{n-2}) + D(F_{n-3})] for n >= 4
    polys = list(seeds)
    for j in range(4, n + 1):
        s = poly_add(poly_add(polys[-1].coeffs, polys[-2].coeffs), polys[-3].coeffs)
        polys.append(DomPolynomial(j, poly_shift(s, 1)))
        polys = polys[-3:]
    return polys[-1] if n >= 3 else seeds[n - 1]


_PATH_SEEDS = [
    DomPolynomial.from_gamma(1, (1,)),
    DomPolynomial.from_gamma(2, (1, 2)),
    DomPolynomial.from_gamma(3, (1, 3, 1)),
]
_CYCLE_SEEDS = [
    DomPolynomial.from_gamma(1, (1,)),
    DomPolynomial.from_gamma(2, (1, 2)),
    DomPolynomial.from_gamma(3, (1, 3, 3)),
]


@lru_cache(maxsize=None)
def path_poly(n: int) -> DomPolynomial:
    if n < 1:
        raise DomainError(f"path needs n >= 1, got {n}")
    return _tribonacci_like(n, _PATH_SEEDS)


@lru_cache(maxsize=None)
def cycle_poly(n: int) -> DomPolynomial:
    """C_1 is K_1 and C_2 is the dicycle, with polynomials 1 and 1+2t."""
    if n < 1:
        raise DomainError(f"cycle needs n >= 1, got {n}")
    return _tribonacci_like(n, _CYCLE_SEEDS)


def wheel_poly(n: int) -> DomPolynomial:
    """gamma(W_n, t) = (1+t)^(n-1) + t * gamma(C_{n-1}, t)."""
    if n < 4:
        raise DomainError(f"wheel needs n >= 4, got {n}")
    gam = poly_add(poly_pow((1, 1), n - 1), poly_shift(cycle_poly(n - 1).gamma_coeffs, 1))
    return DomPolynomial.from_gamma(n, gam)


def family_poly(family: Family | str, n: int) -> DomPolynomial:
    family = Family(family)
    return {
        Family.PATH: path_poly,
        Family.CYCLE: cycle_poly,
        Family.WHEEL: wheel_poly,
        Family.COMPLETE: complete_poly,
    }[family](n)


# --------------------------------------------------------------------------
# explicit k-set counts


def gamma_k_path(k: int, t: int) -> int:
    """gamma_k(P_{k+t})."""
    if k < 1 or t < 0:
        raise DomainError(f"need k >= 1 and t >= 0, got k={k}, t={t}")
    if t > 2 * k:
        return 0
    return sum(binom(k - 1, t - m) * binom(t - m + 2, m) for m in range(t // 2 + 2))


def gamma_k_cycle(k: int, t: int) -> int:
    """gamma_k(C_{k+t}), with C_1 = K_1 and C_2 the dicycle."""
    if k < 1 or t < 0:
        raise DomainError(f"need k >= 1 and t >= 0, got k={k}, t={t}")
    if t > 2 * k:
        return 0
    return sum(
        binom(k - 1, t - m) * (binom(t - m + 2, m) + 2 * binom(t - m, m - 2))
        for m in range(t // 2 + 2)
    )


def gamma_k_cycle_as_stated(k: int, t: int) -> int:
    """The product-form variant of the cycle count; disagrees with reality.

    Kept only so the verification suite can show that it fails.
    """
    return sum(
        binom(k - 1, t - m) * (binom(t - m + 2, m + 2) * binom(t - m, m - 2))
        for m in range(t // 2 + 2)
    )


def gamma_k_wheel(k: int, t: int) -> int:
    """gamma_k(W_{k+t}) = C(k+t-1, t) + gamma_k(C_{k+t-1})."""
    if k < 1 or t < 0:
        raise DomainError(f"need k >= 1 and t >= 0, got k={k}, t={t}")
    if k + t < 4:
        raise DomainError(f"wheel needs k + t >= 4, got {k + t}")
    # the rim has k + (t - 1) vertices; t = 0 means k exceeds the rim size
    rim = gamma_k_cycle(k, t - 1) if t >= 1 else 0
    return binom(k + t - 1, t) + rim


def gk_poly(k: int) -> UnivariateSeries:
    """x^k (1+x)^2 (1+x+x^2)^(k-1); coefficient of x^n is gamma_k(P_n)."""
    if k < 1:
        raise DomainError(f"need k >= 1, got {k}")
    return UnivariateSeries(poly_shift(poly_mul((1, 2, 1), poly_pow((1, 1, 1), k - 1)), k))


def hk_poly(k: int) -> UnivariateSeries:
    """x^k (1+2x+3x^2) (1+x+x^2)^(k-1); coefficient of x^n is gamma_k(C_n)."""
    if k < 1:
        raise DomainError(f"need k >= 1, got {k}")
    return UnivariateSeries(poly_shift(poly_mul((1, 2, 3), poly_pow((1, 1, 1), k - 1)), k))


def gf_table(family: Family | str, max_n: int = 30, max_k: int = 15) -> TruncatedBivariateSeries:
    """Truncated G(x, y) (paths) or H(x, y) (cycles), filled from g_k / h_k."""
    family = Family(family)
    if max_n < 1 or max_k < 1:
        raise DomainError(f"bounds must be >= 1, got ({max_n}, {max_k})")
    row_poly = {Family.PATH: gk_poly, Family.CYCLE: hk_poly}.get(family)
    if row_poly is None:
        raise DomainError(f"no generating function for {family.value}")
    s = TruncatedBivariateSeries(max_n, max_k)
    for k in range(1, max_k + 1):
        g = row_poly(k)
        for n in range(1, max_n + 1):
            s.table[n][k] = g[n]
    return s


def gf_denominator(max_n: int, max_k: int) -> TruncatedBivariateSeries:
    """1 - (x + x^2 + x^3) y."""
    return TruncatedBivariateSeries.from_terms(
        max_n, max_k, {(0, 0): 1, (1, 1): -1, (2, 1): -1, (3, 1): -1}
    )


def gf_numerator(family: Family | str, max_n: int, max_k: int) -> TruncatedBivariateSeries:
    """x(1+x)^2 y for paths, x(1+2x+3x^2) y for cycles."""
    family = Family(family)
    tail = {Family.PATH: (1, 2, 1), Family.CYCLE: (1, 2, 3)}[family]
    return TruncatedBivariateSeries.from_terms(
        max_n, max_k, {(1 + i, 1): c for i, c in enumerate(tail)}
    )


def formula_triangle(family: Family | str, max_n: int) -> KSetTriangle:
    """k-set triangle from the explicit counts (wheels start at n = 4)."""
    family = Family(family)
    if family is Family.PATH:
        start, count = 1, gamma_k_path
    elif family is Family.CYCLE:
        start, count = 1, gamma_k_cycle
    elif family is Family.WHEEL:
        start, count = 4, gamma_k_wheel
    else:
        return KSetTriangle(family.value, 1, tuple(complete_poly(n).coeffs[1:] for n in range(1, max_n + 1)))
    rows = tuple(tuple(count(k, n - k) for k in range(1, n + 1)) for n in range(start, max_n + 1))
    return KSetTriangle(family.value, start, rows)


# --------------------------------------------------------------------------
# Tribonacci


def tribonacci(n: int, mode: str = "recurrence") -> int:
    """T_0 = T_1 = 1, T_2 = 2, T_n = T_{n-1} + T_{n-2} + T_{n-3}."""
    if n < 0:
        raise DomainError(f"need n >= 0, got {n}")
    if mode == "recurrence":
        a, b, c = 1, 1, 2
        for _ in range(n):
            a, b, c = b, c, a + b + c
        return a
    if mode == "shannon":
        return sum(
            binom(n - m - 2 * r, m + r) * binom(m + r, r)
            for m in range(n // 2 + 1)
            for r in range(n // 3 + 1)
        )
    raise DomainError(f"unknown tribonacci mode {mode!r}")


# --------------------------------------------------------------------------
# minimum dominating sets


def min_dominating_count(family: Family | str, n: int) -> int:
    """Number of dominating sets of size ceil(n/3) in P_n or C_n."""
    family = Family(family)
    if family is Family.PATH:
        if n < 1:
            raise DomainError(f"path needs n >= 1, got {n}")
        k, r = divmod(n, 3)
        if r == 0:
            return 1
        if r == 1:
            return binom(k + 2, 2) + k
        return k + 2
    if family is Family.CYCLE:
        if n < 3:
            raise DomainError(f"cycle count needs n >= 3, got {n}")
        k, r = divmod(n, 3)
        if r == 0:
            return 3
        if r == 1:
            return binom(k + 2, 2) + 2 * binom(k, 2) + 3 * k
        return 3 * k + 2
    raise DomainError(f"no minimum-count formula for {family.value}")


def domination_number(p: DomPolynomial | Family | str, n: int | None = None) -> int:
    """Smallest k with a dominating k-set.

    Pass a computed polynomial, or a family name plus ``n`` (paths and
    cycles use ceil(n/3), complete graphs and wheels have 1).
    """
    if isinstance(p, DomPolynomial):
        k = p.min_k()
        if k is None or p.n < 1:
            raise DomainError("polynomial has no dominating set")
        return k
    family = Family(p)
    if n is None or n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    if family in (Family.PATH, Family.CYCLE):
        return -(-n // 3)
    return 1
