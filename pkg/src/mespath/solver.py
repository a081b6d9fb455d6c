"""Unified solve entry point with algorithm routing and cross-checks."""

from __future__ import annotations

import numpy as np

from . import distance_hereditary, window_dp
from .approx import approx_mesp
from .graph import Graph, all_pairs
from .oracle import EnumerationBudget, exact_mesp, exact_source_mesp
from .results import Certificate, Guarantee, SolveResult
from .structure import GammaEstimate, is_chordal, select_gamma

# Above this many estimated windows (n ** (gamma + 1)) auto mode gives up on
# the dynamic program and falls back to the approximation, flagged as such.
DEFAULT_WINDOW_BUDGET = 10**7

STRATEGIES = ("auto", "dh", "dp", "approx", "oracle")

# Gamma provenances trusted enough to call a DP result exact.
_EXACT_GAMMA_METHODS = {"class-chordal", "layering-partition", "hyperbolicity-bound", "oracle"}


def _with_guarantee(result: SolveResult, estimate: GammaEstimate) -> SolveResult:
    if estimate.method in _EXACT_GAMMA_METHODS:
        guarantee = Guarantee(kind="exact")
    else:
        guarantee = Guarantee(kind="assumed")
    cert = result.certificate
    return SolveResult(
        path=result.path,
        eccentricity=result.eccentricity,
        algorithm=result.algorithm,
        certificate=Certificate(
            source=cert.source,
            gamma=estimate,
            diametral_pair=cert.diametral_pair,
            mutually_furthest=cert.mutually_furthest,
            guarantee=guarantee,
            sweep=cert.sweep,
            note=cert.note,
        ),
    )


def _fallback_to_approx(g, d, estimate, budget) -> SolveResult:
    base = approx_mesp(g, d)
    cert = base.certificate
    note = (
        f"window budget exceeded: n^(gamma+1) = {g.n}^{estimate.value + 1} "
        f"> {budget}; fell back to approx"
    )
    return SolveResult(
        path=base.path,
        eccentricity=base.eccentricity,
        algorithm="approx",
        certificate=Certificate(
            gamma=estimate,
            mutually_furthest=cert.mutually_furthest,
            guarantee=cert.guarantee,
            sweep=cert.sweep,
            note=note,
        ),
    )


def _check_result(g: Graph, d: np.ndarray, result: SolveResult) -> SolveResult:
    """Recompute the result invariants independently of the algorithm."""
    vertices = list(result.path.vertices)
    neighbor_sets = [set(a) for a in g.adj]
    for a, b in zip(vertices, vertices[1:]):
        assert b in neighbor_sets[a], "result path has non-adjacent step"
    assert len(set(vertices)) == len(vertices), "result path repeats a vertex"
    assert len(vertices) - 1 == d[vertices[0]][vertices[-1]], "result path not shortest"
    ecc = int(d[vertices].min(axis=0).max())
    assert ecc == result.eccentricity, "reported eccentricity mismatch"
    return result


def solve(
    g: Graph,
    d: np.ndarray | None = None,
    strategy: str = "auto",
    gamma: int | str = "auto",
    source: int | None = None,
    budget: EnumerationBudget | None = None,
    window_budget: int = DEFAULT_WINDOW_BUDGET,
    threads: int = 1,
    class_hint: str | None = None,
) -> SolveResult:
    """Solve for a minimum-eccentricity shortest path.

    Strategies: ``auto`` routes distance-hereditary graphs to the diametral
    extraction, chordal graphs to the gamma=0 dynamic program, and everything
    else to the DP with a selected gamma (approx fallback when the estimated
    window count would blow the budget); ``dh``, ``dp``, ``approx`` and
    ``oracle`` force one algorithm.  ``source`` restricts dp/oracle to paths
    starting there.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if source is not None and strategy not in ("dp", "oracle"):
        raise ValueError("source restriction only applies to dp and oracle")
    if d is None:
        d = all_pairs(g)

    if strategy == "oracle":
        if source is None:
            res = exact_mesp(g, d, budget)
        else:
            res = exact_source_mesp(g, d, source, budget)
        return _check_result(
            g,
            d,
            SolveResult(
                path=res.best_path,
                eccentricity=res.eccentricity,
                algorithm="oracle",
                certificate=Certificate(
                    source=source, guarantee=Guarantee(kind="exact")
                ),
            ),
        )

    if strategy == "approx":
        return _check_result(g, d, approx_mesp(g, d))

    if strategy == "dh":
        return _check_result(g, d, distance_hereditary.solve_dh(g, d))

    if strategy == "dp":
        if gamma == "auto":
            estimate = select_gamma(g, d, class_hint or "auto")
        elif isinstance(gamma, int) and gamma >= 0:
            estimate = GammaEstimate(value=gamma, method="user")
        else:
            raise ValueError("gamma must be 'auto' or a nonnegative integer")
        if source is None:
            res = window_dp.solve_global(g, d, estimate, threads=threads)
        else:
            res = window_dp.solve_from_source(g, d, source, estimate.value)
        return _check_result(g, d, _with_guarantee(res, estimate))

    # auto
    if distance_hereditary.is_distance_hereditary(g, d).holds:
        return _check_result(g, d, distance_hereditary.solve_dh(g, d, verify=False))
    if is_chordal(g).holds:
        estimate = GammaEstimate(value=0, method="class-chordal")
    else:
        estimate = select_gamma(g, d, class_hint or "auto")
    if g.n ** (estimate.value + 1) > window_budget:
        return _check_result(g, d, _fallback_to_approx(g, d, estimate, window_budget))
    res = window_dp.solve_global(g, d, estimate, threads=threads)
    return _check_result(g, d, _with_guarantee(res, estimate))
