"""Exact coefficient arithmetic for domination polynomials and series.

Two conventions are in play for a graph on ``n`` vertices with ``g[k]``
dominating k-sets:

* D-convention:      D(G, t) = sum_k g[k] t^k          (index = set size)
* gamma-convention:  gamma(G, t) = sum_k g[k] t^(n-k) = t^n D(G, 1/t)

``DomPolynomial`` always stores the D-convention; the gamma form is a
rendering obtained by reversing the coefficient vector.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from dompoly.graph import DomainError

Coeffs = tuple[int, ...]


def trim(coeffs: Sequence[int]) -> Coeffs:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_mul(a: Sequence[int], b: Sequence[int]) -> Coeffs:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def poly_add(a: Sequence[int], b: Sequence[int]) -> Coeffs:
    size = max(len(a), len(b))
    return tuple(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)
    )


def poly_scale(a: Sequence[int], c: int) -> Coeffs:
    return tuple(c * x for x in a)


def poly_shift(a: Sequence[int], s: int) -> Coeffs:
    """Multiply by t^s."""
    return (0,) * s + tuple(a)


def poly_pow(a: Sequence[int], e: int) -> Coeffs:
    result: Coeffs = (1,)
    base = tuple(a)
    while e:
        if e & 1:
            result = poly_mul(result, base)
        base = poly_mul(base, base)
        e >>= 1
    return result


def horner(coeffs: Sequence[int], t: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


@dataclass(frozen=True)
class UnivariateSeries:
    """Integer polynomial in one variable; ``coeffs[i]`` multiplies x^i."""

    coeffs: Coeffs

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def trimmed(self) -> UnivariateSeries:
        return UnivariateSeries(trim(self.coeffs))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UnivariateSeries):
            return NotImplemented
        return trim(self.coeffs) == trim(other.coeffs)

    def __hash__(self) -> int:
        return hash(trim(self.coeffs))

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __mul__(self, other: UnivariateSeries) -> UnivariateSeries:
        return UnivariateSeries(poly_mul(self.coeffs, other.coeffs))

    @property
    def degree(self) -> int:
        return len(trim(self.coeffs)) - 1

    def __call__(self, x: int) -> int:
        return horner(self.coeffs, x)


@dataclass(frozen=True)
class DomPolynomial:
    """Dominating k-set counts ``coeffs[k]`` for k = 0..n."""

    n: int
    coeffs: Coeffs

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        if self.n < 0:
            raise DomainError(f"negative vertex-count context {self.n}")
        if len(coeffs) > self.n + 1:
            if any(coeffs[self.n + 1 :]):
                raise DomainError(f"coefficient beyond degree {self.n}: {coeffs}")
            coeffs = coeffs[: self.n + 1]
        coeffs = coeffs + (0,) * (self.n + 1 - len(coeffs))
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, n: int = 0) -> DomPolynomial:
        return cls(n, ())

    @classmethod
    def from_gamma(cls, n: int, gamma_coeffs: Sequence[int]) -> DomPolynomial:
        """Build from gamma-convention coefficients (index = power of t)."""
        g = tuple(gamma_coeffs) + (0,) * (n + 1 - len(gamma_coeffs))
        if any(g[n + 1 :]):
            raise DomainError(f"gamma polynomial of degree > {n}")
        return cls(n, tuple(reversed(g[: n + 1])))

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k <= self.n else 0

    @property
    def gamma_coeffs(self) -> Coeffs:
        return tuple(reversed(self.coeffs))

    def to_gamma_convention(self) -> UnivariateSeries:
        return UnivariateSeries(self.gamma_coeffs)

    def to_D_convention(self) -> UnivariateSeries:
        return UnivariateSeries(self.coeffs)

    def evaluate(self, t: int) -> int:
        """D(G, t), exactly."""
        return horner(self.coeffs, t)

    def evaluate_gamma(self, t: int) -> int:
        return horner(self.gamma_coeffs, t)

    def total(self) -> int:
        """Number of dominating sets, D(G, 1)."""
        return sum(self.coeffs)

    def min_k(self) -> int | None:
        """Smallest k with a dominating k-set, or None if there is none."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def __mul__(self, other: DomPolynomial) -> DomPolynomial:
        return DomPolynomial(self.n + other.n, poly_mul(self.coeffs, other.coeffs))

    def render(self, convention: str = "gamma", var: str = "t") -> str:
        """Ascending-degree plain text, e.g. ``1 + 3t + t^2``."""
        if convention not in ("gamma", "D"):
            raise DomainError(f"unknown convention {convention!r}")
        cs = self.gamma_coeffs if convention == "gamma" else self.coeffs
        return render_plain(cs, var)

    def to_json_obj(self, convention: str = "D") -> dict:
        if convention not in ("gamma", "D"):
            raise DomainError(f"unknown convention {convention!r}")
        cs = self.gamma_coeffs if convention == "gamma" else self.coeffs
        return {"n": self.n, "convention": convention, "coeffs": [str(c) for c in cs]}

    def to_json(self, convention: str = "D") -> str:
        return json.dumps(self.to_json_obj(convention), sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj: dict) -> DomPolynomial:
        cs = [int(c) for c in obj["coeffs"]]
        if obj["convention"] == "gamma":
            return cls.from_gamma(obj["n"], cs)
        if obj["convention"] == "D":
            return cls(obj["n"], cs)
        raise DomainError(f"unknown convention {obj['convention']!r}")


def render_plain(coeffs: Sequence[int], var: str = "t") -> str:
    terms = []
    for p, c in enumerate(coeffs):
        if not c:
            continue
        if p == 0:
            body = str(c)
        else:
            mono = var if p == 1 else f"{var}^{p}"
            body = mono if c == 1 else f"{c}{mono}"
        terms.append(body)
    return " + ".join(terms) if terms else "0"


def poly_equal(a: DomPolynomial, b: DomPolynomial) -> bool:
    return a.n == b.n and a.coeffs == b.coeffs


def to_gamma_convention(p: DomPolynomial) -> UnivariateSeries:
    return p.to_gamma_convention()


def to_D_convention(p: DomPolynomial) -> UnivariateSeries:
    return p.to_D_convention()


def evaluate(p: DomPolynomial, t: int) -> int:
    return p.evaluate(t)


# --------------------------------------------------------------------------
# truncated bivariate series in x (vertex count) and y (set size)


class TruncatedBivariateSeries:
    """Coefficients c[n][k] of x^n y^k for 0 <= n <= max_n, 0 <= k <= max_k."""

    def __init__(self, max_n: int, max_k: int, table: Iterable[Iterable[int]] | None = None):
        if max_n < 0 or max_k < 0:
            raise DomainError(f"bad truncation bounds ({max_n}, {max_k})")
        self.max_n = max_n
        self.max_k = max_k
        self.table = [[0] * (max_k + 1) for _ in range(max_n + 1)]
        if table is not None:
            for n, row in enumerate(table):
                for k, c in enumerate(row):
                    if c and n <= max_n and k <= max_k:
                        self.table[n][k] = int(c)

    @classmethod
    def from_terms(cls, max_n: int, max_k: int, terms: dict[tuple[int, int], int]) -> TruncatedBivariateSeries:
        s = cls(max_n, max_k)
        for (n, k), c in terms.items():
            if n <= max_n and k <= max_k:
                s.table[n][k] += c
        return s

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        if 0 <= n <= self.max_n and 0 <= k <= self.max_k:
            return self.table[n][k]
        return 0

    def nonzero_terms(self) -> dict[tuple[int, int], int]:
        return {
            (n, k): c
            for n, row in enumerate(self.table)
            for k, c in enumerate(row)
            if c
        }

    def _check_bounds(self, other: TruncatedBivariateSeries) -> None:
        if (self.max_n, self.max_k) != (other.max_n, other.max_k):
            raise DomainError(
                f"truncation bounds differ: ({self.max_n}, {self.max_k}) vs ({other.max_n}, {other.max_k})"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedBivariateSeries):
            return NotImplemented
        return (self.max_n, self.max_k) == (other.max_n, other.max_k) and self.table == other.table

    def __repr__(self) -> str:
        return f"TruncatedBivariateSeries({self.max_n}, {self.max_k}, {self.nonzero_terms()})"


def series_truncate(s: TruncatedBivariateSeries, max_n: int, max_k: int) -> TruncatedBivariateSeries:
    return TruncatedBivariateSeries(max_n, max_k, s.table)


def series_sub(a: TruncatedBivariateSeries, b: TruncatedBivariateSeries) -> TruncatedBivariateSeries:
    a._check_bounds(b)
    return TruncatedBivariateSeries(
        a.max_n, a.max_k, [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a.table, b.table)]
    )


def series_add(a: TruncatedBivariateSeries, b: TruncatedBivariateSeries) -> TruncatedBivariateSeries:
    a._check_bounds(b)
    return TruncatedBivariateSeries(
        a.max_n, a.max_k, [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a.table, b.table)]
    )


def series_mul(a: TruncatedBivariateSeries, b: TruncatedBivariateSeries) -> TruncatedBivariateSeries:
    a._check_bounds(b)
    N, K = a.max_n, a.max_k
    out = [[0] * (K + 1) for _ in range(N + 1)]
    bterms = b.nonzero_terms()
    for (n1, k1), c1 in a.nonzero_terms().items():
        for (n2, k2), c2 in bterms.items():
            n, k = n1 + n2, k1 + k2
            if n <= N and k <= K:
                out[n][k] += c1 * c2
    return TruncatedBivariateSeries(N, K, out)


@dataclass(frozen=True)
class KSetTriangle:
    """Rows of gamma_k(F_n) for k = 1..n, one row per n from ``first_n``."""

    family: str
    first_n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(c) for c in r) for r in self.rows)
        for i, r in enumerate(rows):
            if len(r) != self.first_n + i:
                raise DomainError(f"row for n={self.first_n + i} has {len(r)} entries")
        object.__setattr__(self, "rows", rows)

    @property
    def max_n(self) -> int:
        return self.first_n + len(self.rows) - 1

    def row(self, n: int) -> tuple[int, ...]:
        return self.rows[n - self.first_n]

    def entry(self, n: int, k: int) -> int:
        """gamma_k(F_n), zero outside 1 <= k <= n."""
        if not 1 <= k <= n:
            return 0
        return self.row(n)[k - 1]

    def read_rows(self) -> list[int]:
        return [c for r in self.rows for c in r]

    def read_antidiagonals(self) -> list[int]:
        """Read T(n, k) along n + k = s for s = 2, 3, ..., k ascending within each.

        A diagonal is emitted only if every row it touches is stored; entries
        with n below ``first_n`` are skipped.
        """
        out = []
        for s in range(2, self.max_n + 2):
            for k in range(1, s // 2 + 1):
                n = s - k
                if n >= self.first_n:
                    out.append(self.entry(n, k))
        return out
