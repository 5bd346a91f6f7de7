"""Upper bounds for distance chromatic numbers and their equality cases.

Evaluates every applicable degree and spectral bound against the exact
value, detects Moore graphs (the unique equality case of the M+1 bound),
checks the clique exclusion for non-Moore graphs, and scans corpora for
would-be counterexamples to the open questions: a non-Moore graph with
chi_gamma = M, a graph of girth 2*gamma with chi_gamma = M, or a power
graph equal to the complete graph K_M.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from . import coloring as col
from . import metrics as met
from . import spectral as spec
from .graphs import Graph, encode_graph6, parse_graph6
from .metrics import max_power_degree

INT_GUARD = 1e-9  # slack when flooring real-valued bounds to integers


class SoundnessViolation(AssertionError):
    """An exact chromatic number exceeded a bound that applied to it.

    This is the build-failing event: it means either the implementation or
    a theorem it encodes is wrong. Carries the offending report.
    """

    def __init__(self, message: str, report: "BoundReport | None" = None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class MooreChecks:
    is_regular: bool
    order_matches: bool
    girth_is_2gamma_plus_1: bool
    diameter_is_gamma: bool


@dataclass(frozen=True)
class MooreCertificate:
    delta: int
    gamma: int
    order_expected: int  # M + 1
    checks: MooreChecks
    is_moore: bool

    def to_json_dict(self) -> dict:
        return {
            "delta": self.delta,
            "gamma": self.gamma,
            "order_expected": self.order_expected,
            "is_regular": self.checks.is_regular,
            "order_matches": self.checks.order_matches,
            "girth_is_2gamma_plus_1": self.checks.girth_is_2gamma_plus_1,
            "diameter_is_gamma": self.checks.diameter_is_gamma,
            "is_moore": self.is_moore,
        }


def detect_moore(g: Graph, gamma: int) -> MooreCertificate:
    """Four-condition Moore check: Delta-regular, order M+1, girth 2*gamma+1,
    diameter gamma. No hardcoded graph list; works on arbitrary inputs."""
    if not met.is_connected(g):
        raise ValueError("Moore detection requires a connected graph")
    delta = g.max_degree()
    if delta < 3:
        raise ValueError("Moore detection requires maximum degree >= 3")
    if gamma < 2:
        raise ValueError("gamma must be >= 2")
    m_value = max_power_degree(delta, gamma)
    checks = MooreChecks(
        is_regular=g.min_degree() == delta,
        order_matches=g.n == m_value + 1,
        girth_is_2gamma_plus_1=met.girth(g) == 2 * gamma + 1,
        diameter_is_gamma=met.diameter(g) == gamma,
    )
    is_moore = all(
        (checks.is_regular, checks.order_matches,
         checks.girth_is_2gamma_plus_1, checks.diameter_is_gamma)
    )
    return MooreCertificate(delta, gamma, m_value + 1, checks, is_moore)


@dataclass(frozen=True)
class BoundEntry:
    source: str
    value: float
    value_int: int        # integer form used for best-bound comparison
    strict: bool          # True: chi < value; False: chi <= value
    applicable: bool
    evidence: dict

    def to_json_dict(self) -> dict:
        return {
            "source": self.source,
            "value": float(f"{self.value:.12g}"),
            "value_int": self.value_int,
            "strict": self.strict,
            "applicable": self.applicable,
            "evidence": {
                k: (None if v == math.inf else v) for k, v in self.evidence.items()
            },
        }


@dataclass(frozen=True)
class BoundReport:
    graph6: str
    gamma: int
    delta: int
    m_value: int
    bounds: tuple[BoundEntry, ...]
    best_bound: int
    exact_chi: int | None
    exact_status: str     # "exact" | "cap-exceeded" | "budget-exceeded"
    witness: col.Coloring | None
    moore: MooreCertificate
    equality_class: str   # "moore-equality" | "strict-below" | "unknown"

    def to_json_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "gamma": self.gamma,
            "delta": self.delta,
            "m_value": self.m_value,
            "bounds": [b.to_json_dict() for b in self.bounds],
            "best_bound": self.best_bound,
            "exact_chi": self.exact_chi,
            "exact_status": self.exact_status,
            "witness": self.witness.to_json_dict() if self.witness else None,
            "moore": self.moore.to_json_dict(),
            "equality_class": self.equality_class,
        }


def _int_form(value: float, strict: bool) -> int:
    """Largest integer chi consistent with the bound, guarded against float
    error: floor(value) for chi <= value, one less at integers for chi < value."""
    if strict and abs(value - round(value)) <= INT_GUARD:
        return int(round(value)) - 1
    return math.floor(value + INT_GUARD)


def evaluate_bounds(
    g: Graph,
    gamma: int,
    *,
    exact_cap: int = col.DEFAULT_EXACT_CAP,
    node_budget: int | None = None,
    time_budget: float | None = None,
    with_spectral: bool = True,
) -> BoundReport:
    """Evaluate every bound whose hypotheses hold, solve exactly when under
    the cap, classify the equality case, and self-check soundness.

    Raises SoundnessViolation if the exact value beats an applicable bound.
    """
    if not met.is_connected(g):
        raise ValueError("bound evaluation requires a connected graph")
    delta = g.max_degree()
    if delta < 3:
        raise ValueError("bound evaluation requires maximum degree >= 3")
    if gamma < 2:
        raise ValueError("gamma must be >= 2")

    m_value = max_power_degree(delta, gamma)
    dmin = g.min_degree()
    gir = met.girth(g)
    diam = met.diameter(g)
    moore = MooreCertificate(
        delta,
        gamma,
        m_value + 1,
        MooreChecks(
            is_regular=dmin == delta,
            order_matches=g.n == m_value + 1,
            girth_is_2gamma_plus_1=gir == 2 * gamma + 1,
            diameter_is_gamma=diam == gamma,
        ),
        is_moore=(
            dmin == delta
            and g.n == m_value + 1
            and gir == 2 * gamma + 1
            and diam == gamma
        ),
    )

    entries: list[BoundEntry] = []

    def add(source, value, *, strict=False, applicable=True, **evidence):
        entries.append(
            BoundEntry(source, float(value), _int_form(float(value), strict),
                       strict, applicable, dict(evidence)))

    add("power-degree-plus-one", m_value + 1, delta=delta)
    add("girth-not-critical", m_value,
        applicable=gir != 2 * gamma + 1, girth=gir)
    add("non-regular", m_value - 1,
        applicable=dmin < delta, min_degree=dmin, max_degree=delta)
    add("short-girth", m_value - 1,
        applicable=gir != math.inf and gir <= 2 * gamma - 1, girth=gir)

    girth_window = gir >= 2 * gamma + 2 and (gamma >= 3 or gir > 6)
    kappa = met.vertex_connectivity(g) if girth_window else None
    need = 3 if gamma >= 3 else 4
    add("high-girth-connected", m_value - 1,
        applicable=girth_window and kappa is not None and kappa >= need,
        girth=gir, connectivity=kappa, required_connectivity=need)

    threshold = odd_degree_threshold(gamma)
    add("odd-degree-large", m_value - 1,
        applicable=(delta % 2 == 1 and delta >= threshold and not moore.is_moore),
        delta=delta, threshold=threshold)

    if with_spectral:
        lam = spec.spectral_radius(g).lambda1
        add("spectral-series", spec.geometric_series_bound(lam, gamma) if lam > 1
            else g.n, applicable=lam > 1, lambda1=lam)
        add("spectral-power", lam**gamma + 1, strict=gamma >= 3, lambda1=lam,
            applicable=g.n >= 3)

    best = min(e.value_int for e in entries if e.applicable)

    exact_chi: int | None = None
    witness = None
    status = "exact"
    try:
        exact_chi, witness = col.distance_chromatic_number(
            g, gamma, cap=exact_cap, node_budget=node_budget,
            time_budget=time_budget)
    except col.SolverCapError:
        status = "cap-exceeded"
    except col.SolverBudgetError as err:
        status = f"budget-exceeded:{err.kind}"

    if exact_chi is None:
        equality = "unknown"
    elif exact_chi == m_value + 1:
        equality = "moore-equality"
    else:
        equality = "strict-below"

    report = BoundReport(
        graph6=encode_graph6(g),
        gamma=gamma,
        delta=delta,
        m_value=m_value,
        bounds=tuple(entries),
        best_bound=best,
        exact_chi=exact_chi,
        exact_status=status,
        witness=witness,
        moore=moore,
        equality_class=equality,
    )

    if exact_chi is not None:
        for e in entries:
            if not e.applicable:
                continue
            ok = exact_chi < e.value + INT_GUARD if e.strict else \
                exact_chi <= e.value + INT_GUARD
            if not ok:
                raise SoundnessViolation(
                    f"chi_{gamma} = {exact_chi} breaks bound "
                    f"{e.source} = {e.value}", report)
        if equality == "moore-equality" and not moore.is_moore:
            raise SoundnessViolation(
                f"chi_{gamma} = M+1 on a non-Moore graph", report)
    return report


# ---------------------------------------------------------------------------
# clique exclusion for non-Moore graphs


@dataclass(frozen=True)
class CliqueExclusionReport:
    graph6: str
    gamma: int
    m_value: int
    power_order: int
    clique_number: int | None      # None when the cap was exceeded
    properly_contains_m_clique: bool | None
    power_is_complete_m: bool
    status: str                    # "checked" | "cap-exceeded"

    def to_json_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "gamma": self.gamma,
            "m_value": self.m_value,
            "power_order": self.power_order,
            "clique_number": self.clique_number,
            "properly_contains_m_clique": self.properly_contains_m_clique,
            "power_is_complete_m": self.power_is_complete_m,
            "status": self.status,
        }


def check_clique_exclusion(
    g: Graph, gamma: int, *, clique_cap: int = 200
) -> CliqueExclusionReport:
    """For a non-Moore graph, the gamma-th power must not contain a clique
    of size M while also having more than M vertices. Also records whether
    the power equals K_M outright (expected never)."""
    cert = detect_moore(g, gamma)
    if cert.is_moore:
        raise ValueError("clique exclusion applies to non-Moore graphs only")
    m_value = max_power_degree(g.max_degree(), gamma)
    pg = met.power_graph(g, gamma).graph
    complete_m = g.n == m_value and pg.m == g.n * (g.n - 1) // 2
    try:
        omega = met.clique_number(pg, cap=clique_cap)
    except met.CliqueCapError:
        return CliqueExclusionReport(
            encode_graph6(g), gamma, m_value, pg.n, None, None,
            complete_m, "cap-exceeded")
    properly = omega >= m_value and pg.n > m_value
    return CliqueExclusionReport(
        encode_graph6(g), gamma, m_value, pg.n, omega, properly,
        complete_m, "checked")


# ---------------------------------------------------------------------------
# corpus scanning for the open questions


@dataclass(frozen=True)
class ScanCandidate:
    kind: str       # "chi-equals-m" | "power-complete-m"
    graph6: str
    chi: int | None
    m_value: int
    invariants: dict

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "graph6": self.graph6,
            "chi": self.chi,
            "m_value": self.m_value,
            "invariants": self.invariants,
        }


@dataclass
class ScanReport:
    gamma: int
    scanned: int = 0
    moore_count: int = 0
    out_of_scope: int = 0
    skipped: int = 0
    girth_2gamma_count: int = 0
    chi_equals_m: list[ScanCandidate] | None = None
    power_complete_m: list[ScanCandidate] | None = None

    def __post_init__(self):
        if self.chi_equals_m is None:
            self.chi_equals_m = []
        if self.power_complete_m is None:
            self.power_complete_m = []

    def to_json_dict(self) -> dict:
        return {
            "gamma": self.gamma,
            "scanned": self.scanned,
            "moore_count": self.moore_count,
            "out_of_scope": self.out_of_scope,
            "skipped": self.skipped,
            "girth_2gamma_count": self.girth_2gamma_count,
            "chi_equals_m_candidates": [c.to_json_dict() for c in self.chi_equals_m],
            "power_complete_m_candidates": [
                c.to_json_dict() for c in self.power_complete_m
            ],
        }


def scan_one(line: str, gamma: int, exact_cap: int = col.DEFAULT_EXACT_CAP) -> dict:
    """Classify one graph6 line; returns a plain dict so pool workers can
    ship it cheaply."""
    g = parse_graph6(line)
    delta = g.max_degree()
    if delta < 3 or not met.is_connected(g):
        return {"status": "out-of-scope", "graph6": line}
    m_value = max_power_degree(delta, gamma)
    cert = detect_moore(g, gamma)
    pg = met.power_graph(g, gamma).graph
    complete_m = g.n == m_value and pg.m == g.n * (g.n - 1) // 2
    gir = met.girth(g)
    rec = {
        "status": "scanned",
        "graph6": line,
        "m_value": m_value,
        "is_moore": cert.is_moore,
        "girth_2gamma": gir == 2 * gamma,
        "power_complete_m": complete_m,
        "chi": None,
    }
    try:
        chi, _ = col.distance_chromatic_number(g, gamma, cap=exact_cap)
        rec["chi"] = chi
    except (col.SolverCapError, col.SolverBudgetError) as err:
        rec["status"] = "skipped"
        rec["reason"] = str(err)
    return rec


def conjecture_scan(
    lines: Iterable[str],
    gamma: int,
    *,
    exact_cap: int = col.DEFAULT_EXACT_CAP,
    jobs: int = 1,
) -> ScanReport:
    """Scan a graph6 corpus for counterexample candidates.

    Skipped entries (cap or budget) are counted, never dropped. With jobs
    > 1 a process pool evaluates graphs concurrently; output order is the
    input order either way.
    """
    if gamma < 2:
        raise ValueError("gamma must be >= 2")
    todo = [ln.strip() for ln in lines if ln.strip()]
    if jobs > 1 and len(todo) > 1:
        import multiprocessing as mp

        with mp.Pool(jobs) as pool:
            records = pool.starmap(
                scan_one, ((ln, gamma, exact_cap) for ln in todo), chunksize=64
            )
    else:
        records = [scan_one(ln, gamma, exact_cap) for ln in todo]

    report = ScanReport(gamma=gamma)
    for rec in records:
        if rec["status"] == "out-of-scope":
            report.out_of_scope += 1
            continue
        if rec["status"] == "skipped":
            report.skipped += 1
            continue
        report.scanned += 1
        if rec["is_moore"]:
            report.moore_count += 1
        if rec["girth_2gamma"]:
            report.girth_2gamma_count += 1
        chi = rec["chi"]
        if not rec["is_moore"] and chi is not None and chi >= rec["m_value"]:
            g = parse_graph6(rec["graph6"])
            report.chi_equals_m.append(ScanCandidate(
                "chi-equals-m", rec["graph6"], chi, rec["m_value"],
                met.invariants(g).to_json_dict()))
        if rec["power_complete_m"]:
            g = parse_graph6(rec["graph6"])
            report.power_complete_m.append(ScanCandidate(
                "power-complete-m", rec["graph6"], chi, rec["m_value"],
                met.invariants(g).to_json_dict()))
    return report


# ---------------------------------------------------------------------------
# odd-degree case analysis (the large-Delta bound reduced to pure logic)


def odd_degree_threshold(gamma: int) -> int:
    """Smallest Delta with (Delta - 1)^gamma >= 10^14 + 1, in exact integer
    arithmetic. Above it (Delta odd, non-Moore) the M-1 bound kicks in."""
    if gamma < 2:
        raise ValueError("gamma must be >= 2")
    target = 10**14 + 1
    x = max(2, int(round(target ** (1.0 / gamma))))
    while x**gamma >= target:
        x -= 1
    while x**gamma < target:
        x += 1
    return x + 1


@dataclass(frozen=True)
class OddCaseOutcome:
    power_delta_offset: int   # Delta(G^gamma) - M: -1 or 0
    chi_offset: int           # chi(G^gamma) - M: 0 or +1
    contradiction: str        # "parity" | "clique-exclusion" | "moore"
    facts: tuple[str, ...]


def enumerate_odd_degree_cases() -> list[tuple[int, int]]:
    """All (Delta(G^gamma) - M, chi - M) pairs a counterexample could have:
    chi >= M by assumption, chi <= Delta(G^gamma) + 1 <= M + 1 by the greedy
    bound, ruling out (−1, +1)."""
    cases = []
    for d_off in (-1, 0):
        for c_off in (0, 1):
            if c_off <= d_off + 1:
                cases.append((d_off, c_off))
    return cases


def resolve_odd_degree_case(
    delta: int, gamma: int, power_delta_offset: int, chi_offset: int
) -> OddCaseOutcome:
    """Reproduce the contradiction for one case of a hypothetical odd-degree
    counterexample (non-Moore, regular, chi >= M, Delta at least the
    threshold). Pure arithmetic on (delta, gamma); no graph is built."""
    if delta % 2 == 0:
        raise ValueError("case analysis assumes odd maximum degree")
    if (delta - 1) ** gamma < 10**14 + 1:
        raise ValueError("delta below the large-degree threshold")
    if (power_delta_offset, chi_offset) not in enumerate_odd_degree_cases():
        raise ValueError("not a feasible case: chi <= Delta(G^gamma) + 1")
    m_value = max_power_degree(delta, gamma)
    if power_delta_offset == -1 and chi_offset == 0:
        # chi = max degree + 1 forces the power to be complete of order M;
        # a Delta-regular graph of odd order M then has odd degree sum.
        assert m_value % 2 == 1, "M inherits oddness from delta"
        return OddCaseOutcome(
            power_delta_offset, chi_offset, "parity",
            (
                f"power graph is complete of order M = {m_value}",
                f"degree sum M * delta = {m_value * delta} is odd",
                "handshake parity is violated",
            ),
        )
    if power_delta_offset == 0 and chi_offset == 0:
        # chi exceeds Delta(G^gamma) - 1, so with Delta(G^gamma) >= 10^14 the
        # large-degree clique bound forces a clique of size M; the order
        # exceeds M (else the power is K_M with max degree M-1), so the
        # power properly contains K_M, impossible for non-Moore graphs.
        assert m_value >= 10**14
        return OddCaseOutcome(
            power_delta_offset, chi_offset, "clique-exclusion",
            (
                f"clique of size M = {m_value} exists in the power graph",
                "order exceeds M, so the clique is proper",
                "non-Moore graphs cannot properly contain such a clique",
            ),
        )
    # power_delta_offset == 0, chi_offset == 1
    return OddCaseOutcome(
        power_delta_offset, chi_offset, "moore",
        (
            f"chi = M + 1 = {m_value + 1} attains the maximum",
            "equality holds only for Moore graphs",
            "contradicts the non-Moore hypothesis",
        ),
    )
