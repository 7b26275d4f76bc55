"""Cross-checks between the brute-force oracle, the digraph engine and the
family formulas.

Each check returns a ``CheckResult``; the first mismatch found is kept as the
counterexample. Formula functions are looked up on their modules at call
time so tests can swap in a deliberately broken one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from dompoly import engine, families, oracle
from dompoly.graph import Family, SimpleGraph, build_family, disjoint_union, join
from dompoly.polynomial import (
    DomPolynomial,
    series_mul,
    series_sub,
    TruncatedBivariateSeries,
)

REPORT_VERSION = 1


@dataclass
class CheckResult:
    name: str
    range: str
    status: str = "pass"
    counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def fail(self, **details) -> None:
        if self.status == "pass":
            self.status = "fail"
            self.counterexample = {k: _jsonable(v) for k, v in details.items()}

    def to_json_obj(self) -> dict:
        return {
            "name": self.name,
            "range": self.range,
            "status": self.status,
            "counterexample": self.counterexample,
        }


def _jsonable(v):
    if isinstance(v, DomPolynomial):
        return v.to_json_obj("D")
    if isinstance(v, int) and not isinstance(v, bool) and abs(v) > 2**53:
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


@dataclass
class VerifyConfig:
    """Ranges for every check. Defaults are the quick CLI run."""

    family_max_n: int = 14  # paths and cycles, oracle side
    wheel_max_n: int = 12
    complete_max_n: int = 12
    random_min_n: int = 5
    random_max_n: int = 10
    random_per_n: int = 20
    closed_form_max_n: int = 14  # k + t bound for oracle comparisons
    recurrence_max_n: int = 60  # recurrence vs closed form, no oracle
    wheel_formula_max_n: int = 14
    spot_max_n: int = 14
    spot_max_k: int = 6
    gf_max_n: int = 30
    gf_max_k: int = 15
    symmetry_max_k: int = 15
    mincard_max_n: int = 14
    tribonacci_max_n: int = 40
    algebra_complete_max_n: int = 14
    algebra_samples: int = 20
    algebra_max_total: int = 14
    wheel_join_max_n: int = 20
    seed: int = 0
    cap: int = oracle.DEFAULT_CAP
    workers: int = 1

    @classmethod
    def acceptance(cls, seed: int = 0) -> VerifyConfig:
        return cls(closed_form_max_n=18, mincard_max_n=18, seed=seed)


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> SimpleGraph:
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p]
    return SimpleGraph.from_edges(n, edges)


def sample_random_graphs(cfg: VerifyConfig) -> list[SimpleGraph]:
    rng = random.Random(cfg.seed)
    return [
        random_graph(rng, n)
        for n in range(cfg.random_min_n, cfg.random_max_n + 1)
        for _ in range(cfg.random_per_n)
    ]


class _Oracle:
    """Memoized brute force keyed by graph; shared across checks in one run."""

    def __init__(self, cfg: VerifyConfig):
        self.cfg = cfg
        self.cache: dict[SimpleGraph, DomPolynomial] = {}

    def __call__(self, g: SimpleGraph) -> DomPolynomial:
        p = self.cache.get(g)
        if p is None:
            p = oracle.brute_force_poly(g, cap=self.cfg.cap, workers=self.cfg.workers)
            self.cache[g] = p
        return p

    def family(self, fam: Family, n: int) -> DomPolynomial:
        return self(build_family(fam, n))


def _first_diff(expected: DomPolynomial, got: DomPolynomial) -> int | None:
    if expected.n != got.n:
        return -1
    for k in range(expected.n + 1):
        if expected[k] != got[k]:
            return k
    return None


def _compare(res: CheckResult, expected: DomPolynomial, got: DomPolynomial, **ctx) -> bool:
    k = _first_diff(expected, got)
    if k is None:
        return True
    if k < 0:
        res.fail(**ctx, n=expected.n, k=None, expected=expected, got=got)
    else:
        res.fail(**ctx, n=expected.n, k=k, expected=expected[k], got=got[k])
    return False


# --------------------------------------------------------------------------
# checks


def check_engine(cfg: VerifyConfig, orc: _Oracle) -> CheckResult:
    res = CheckResult(
        "engine_vs_oracle",
        f"path,cycle n<={cfg.family_max_n}; wheel 4..{cfg.wheel_max_n}; complete n<={cfg.complete_max_n}; "
        f"{(cfg.random_max_n - cfg.random_min_n + 1) * cfg.random_per_n} random G(n,1/2) "
        f"n={cfg.random_min_n}..{cfg.random_max_n} seed={cfg.seed}",
    )
    cases: list[tuple[str, SimpleGraph]] = []
    for fam, lo, hi in (
        (Family.PATH, 1, cfg.family_max_n),
        (Family.CYCLE, 1, cfg.family_max_n),
        (Family.WHEEL, 4, cfg.wheel_max_n),
        (Family.COMPLETE, 1, cfg.complete_max_n),
    ):
        cases += [(f"{fam.value}({n})", build_family(fam, n)) for n in range(lo, hi + 1)]
    cases += [(f"random#{i}", g) for i, g in enumerate(sample_random_graphs(cfg))]
    for label, g in cases:
        if not _compare(res, orc(g), engine.graph_poly(g), graph=label):
            break
    return res


def check_paths(cfg: VerifyConfig, orc: _Oracle) -> CheckResult:
    res = CheckResult(
        "path_closed_form",
        f"oracle k+t<={cfg.closed_form_max_n}; recurrence n<={cfg.recurrence_max_n}",
    )
    for n in range(1, cfg.closed_form_max_n + 1):
        p = orc.family(Family.PATH, n)
        for k in range(1, n + 1):
            got = families.gamma_k_path(k, n - k)
            if got != p[k]:
                res.fail(family="path", n=n, k=k, expected=p[k], got=got)
                return res
    for n in range(1, cfg.recurrence_max_n + 1):
        p = families.path_poly(n)
        for k in range(1, n + 1):
            got = families.gamma_k_path(k, n - k)
            if got != p[k]:
                res.fail(family="path", source="recurrence", n=n, k=k, expected=p[k], got=got)
                return res
    return res


def check_cycles(cfg: VerifyConfig, orc: _Oracle) -> CheckResult:
    res = CheckResult(
        "cycle_closed_form",
        f"oracle k+t<={cfg.closed_form_max_n}; recurrence n<={cfg.recurrence_max_n}; "
        "product-form variant must fail at (k,t)=(2,2)",
    )
    for n in range(1, cfg.closed_form_max_n + 1):
        p = orc.family(Family.CYCLE, n)
        for k in range(1, n + 1):
            got = families.gamma_k_cycle(k, n - k)
            if got != p[k]:
                res.fail(family="cycle", n=n, k=k, expected=p[k], got=got)
                return res
    for n in range(1, cfg.recurrence_max_n + 1):
        p = families.cycle_poly(n)
        for k in range(1, n + 1):
            got = families.gamma_k_cycle(k, n - k)
            if got != p[k]:
                res.fail(family="cycle", source="recurrence", n=n, k=k, expected=p[k], got=got)
                return res
    truth = orc.family(Family.CYCLE, 4)[2]
    stated = families.gamma_k_cycle_as_stated(2, 2)
    if stated == truth:
        res.fail(family="cycle", variant="product-form", n=4, k=2, expected=f"!= {truth}", got=stated)
    return res


def check_wheels(cfg: VerifyConfig, orc: _Oracle) -> CheckResult:
    res = CheckResult("wheel", f"4<=n<={cfg.wheel_formula_max_n}")
    for n in range(4, cfg.wheel_formula_max_n + 1):
        truth = orc.family(Family.WHEEL, n)
        if not _compare(res, truth, families.wheel_poly(n), family="wheel", source="wheel_poly"):
            return res
        rim = orc.family(Family.CYCLE, n - 1)
        for k in range(1, n + 1):
            ident = families.binom(n - 1, n - k) + rim[k]
            explicit = families.gamma_k_wheel(k, n - k)
            if ident != truth[k] or explicit != truth[k]:
                res.fail(family="wheel", n=n, k=k, expected=truth[k], got=[ident, explicit])
                return res
    return res


def check_spot_values(cfg: VerifyConfig, orc: _Oracle) -> CheckResult:
    res = CheckResult(
        "spot_values",
        f"P_2,P_3,C_3 polynomials; gamma_(n-1) for n<={cfg.spot_max_n}; minimum sets k<={cfg.spot_max_k}",
    )
    fixed = [
        ("gamma(P_3)", orc.family(Family.PATH, 3), (1, 3, 1)),
        ("gamma(C_3)", orc.family(Family.CYCLE, 3), (1, 3, 3)),
        ("gamma(P_2)", orc.family(Family.PATH, 2), (1, 2)),
        ("gamma(P_3) formula", families.path_poly(3), (1, 3, 1)),
        ("gamma(C_3) formula", families.cycle_poly(3), (1, 3, 3)),
        ("gamma(P_2) formula", families.path_poly(2), (1, 2)),
    ]
    for label, p, gam in fixed:
        want = DomPolynomial.from_gamma(p.n, gam)
        if not _compare(res, want, p, what=label):
            return res
    if orc.family(Family.CYCLE, 3)[1] != 3:
        res.fail(what="gamma_1(C_3)", n=3, k=1, expected=3, got=orc.family(Family.CYCLE, 3)[1])
        return res
    for fam, lo in ((Family.PATH, 2), (Family.CYCLE, 3)):
        for n in range(lo, cfg.spot_max_n + 1):
            got = orc.family(fam, n)[n - 1]
            if got != n:
                res.fail(what=f"gamma_(n-1)({fam.value})", n=n, k=n - 1, expected=n, got=got)
                return res
    for k in range(1, cfg.spot_max_k + 1):
        for fam, want in ((Family.PATH, 1), (Family.CYCLE, 3)):
            n = 3 * k
            truth = orc.family(fam, n)[k] if n <= cfg.cap else None
            formula = (families.gamma_k_path if fam is Family.PATH else families.gamma_k_cycle)(k, 2 * k)
            for label, got in (("oracle", truth), ("formula", formula)):
                if got is not None and got != want:
                    res.fail(what=f"gamma_k({fam.value}_3k) {label}", n=n, k=k, expected=want, got=got)
                    return res
    return res


def check_gf(cfg: VerifyConfig, orc: _Oracle) -> CheckResult:
    N, K = cfg.gf_max_n, cfg.gf_max_k
    res = CheckResult("gf_residuals", f"maxN={N}, maxK={K}")
    den = families.gf_denominator(N, K)
    for fam, filled_by in ((Family.PATH, families.path_poly), (Family.CYCLE, families.cycle_poly)):
        # fill from the recurrence so the identity is not checked against itself
        table = TruncatedBivariateSeries(N, K)
        for n in range(1, N + 1):
            p = filled_by(n)
            for k in range(1, min(n, K) + 1):
                table.table[n][k] = p[k]
        if table != families.gf_table(fam, N, K):
            diff = series_sub(table, families.gf_table(fam, N, K)).nonzero_terms()
            (n, k), _ = min(diff.items())
            res.fail(family=fam.value, what="g_k/h_k rows", n=n, k=k, expected=table[n, k],
                     got=families.gf_table(fam, N, K)[n, k])
            return res
        residual = series_mul(den, table)
        want = families.gf_numerator(fam, N, K)
        if residual != want:
            diff = series_sub(residual, want).nonzero_terms()
            (n, k), _ = min(diff.items())
            res.fail(family=fam.value, what="residual", n=n, k=k, expected=want[n, k], got=residual[n, k])
            return res
    return res


def check_symmetry(cfg: VerifyConfig, orc: _Oracle) -> CheckResult:
    res = CheckResult("symmetry", f"gamma_k(P_n)=gamma_k(P_(4k-n)) k<={cfg.symmetry_max_k}; h_2 asymmetric")
    for k in range(1, cfg.symmetry_max_k + 1):
        for n in range(k, 3 * k + 1):
            a = families.path_poly(n)[k]
            b = families.path_poly(4 * k - n)[k]
            g = families.gk_poly(k)
            if a != b or g[n] != g[4 * k - n] or g[n] != a:
                res.fail(n=n, k=k, expected=a, got=[b, g[n], g[4 * k - n]])
                return res
    h2 = families.hk_poly(2)
    if all(h2[n] == h2[8 - n] for n in range(2, 7)):
        res.fail(what="h_2 symmetric", n=None, k=2, expected="asymmetric", got=list(h2.coeffs))
    return res


def check_min_cardinality(cfg: VerifyConfig, orc: _Oracle) -> CheckResult:
    res = CheckResult("min_cardinality", f"path n<={cfg.mincard_max_n}; cycle 3<=n<={cfg.mincard_max_n}")
    for fam, lo in ((Family.PATH, 1), (Family.CYCLE, 3)):
        for n in range(lo, cfg.mincard_max_n + 1):
            p = orc.family(fam, n)
            gamma = families.domination_number(p)
            want_gamma = -(-n // 3)
            if gamma != want_gamma or families.domination_number(fam, n) != want_gamma:
                res.fail(family=fam.value, what="domination number", n=n, k=gamma,
                         expected=want_gamma, got=gamma)
                return res
            got = families.min_dominating_count(fam, n)
            if got != p[gamma]:
                res.fail(family=fam.value, n=n, k=gamma, expected=p[gamma], got=got)
                return res
    return res


def check_tribonacci(cfg: VerifyConfig, orc: _Oracle) -> CheckResult:
    res = CheckResult("tribonacci", f"recurrence vs closed sum n<={cfg.tribonacci_max_n}; first 6 terms")
    for n in range(cfg.tribonacci_max_n + 1):
        a, b = families.tribonacci(n, "recurrence"), families.tribonacci(n, "shannon")
        if a != b:
            res.fail(n=n, k=None, expected=a, got=b)
            return res
    head = [families.tribonacci(n) for n in range(6)]
    if head != [1, 1, 2, 4, 7, 13]:
        res.fail(what="first terms", n=None, k=None, expected=[1, 1, 2, 4, 7, 13], got=head)
    return res


def check_algebra(cfg: VerifyConfig, orc: _Oracle) -> CheckResult:
    res = CheckResult(
        "graph_algebra",
        f"K_n n<={cfg.algebra_complete_max_n}; {cfg.algebra_samples} unions and joins n+m<={cfg.algebra_max_total}; "
        f"W_n=K_1+C_(n-1) n<={cfg.wheel_join_max_n}; seed={cfg.seed}",
    )
    for n in range(1, cfg.algebra_complete_max_n + 1):
        if not _compare(res, orc.family(Family.COMPLETE, n), families.complete_poly(n), what="complete"):
            return res
    rng = random.Random(cfg.seed + 1)
    total = cfg.algebra_max_total
    for i in range(cfg.algebra_samples):
        n = rng.randint(1, total - 1)
        m = rng.randint(1, total - n)
        g, h = random_graph(rng, n), random_graph(rng, m)
        pg, ph = engine.graph_poly(g), engine.graph_poly(h)
        if not _compare(res, orc(disjoint_union(g, h)), families.union_poly([pg, ph]),
                        what="union", sample=i, sizes=[n, m]):
            return res
        if not _compare(res, orc(join(g, h)), families.join_poly(pg, ph),
                        what="join", sample=i, sizes=[n, m]):
            return res
    k1 = families.complete_poly(1)
    for n in range(4, cfg.wheel_join_max_n + 1):
        if not _compare(res, families.join_poly(k1, families.cycle_poly(n - 1)), families.wheel_poly(n),
                        what="wheel vs join"):
            return res
    return res


CHECKS: dict[str, Callable[[VerifyConfig, _Oracle], CheckResult]] = {
    "engine": check_engine,
    "paths": check_paths,
    "cycles": check_cycles,
    "wheels": check_wheels,
    "spot": check_spot_values,
    "gf": check_gf,
    "symmetry": check_symmetry,
    "mincard": check_min_cardinality,
    "tribonacci": check_tribonacci,
    "algebra": check_algebra,
}


@dataclass
class Report:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> CheckResult | None:
        return next((c for c in self.checks if not c.passed), None)

    def to_json_obj(self) -> dict:
        return {"version": REPORT_VERSION, "checks": [c.to_json_obj() for c in self.checks]}


def run_checks(cfg: VerifyConfig | None = None, names: list[str] | None = None) -> Report:
    cfg = cfg or VerifyConfig()
    names = list(CHECKS) if not names else names
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise KeyError(f"unknown checks: {', '.join(unknown)}")
    orc = _Oracle(cfg)
    results = [CHECKS[n](cfg, orc) for n in names]
    results.sort(key=lambda r: r.name)
    return Report(results)
