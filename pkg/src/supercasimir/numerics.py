"""Generic high-accuracy quadrature and Matsubara summation engines.

Both engines report explicit error bounds and are deterministic: the
reduction order is fixed, so results are bit-identical across runs and
independent of any parallelism in the callers.

Integrands and term functions are expected to be numpy-vectorized
(``f(x)`` with ``x`` a 1-D ndarray returns an ndarray of the same shape);
scalar callables are supported through ``vectorized=False`` where offered.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

__all__ = [
    "QuadResult",
    "SumDiagnostics",
    "NumericsError",
    "integrate_semi_infinite",
    "matsubara_sum",
    "neumaier_sum",
]


class NumericsError(RuntimeError):
    """Numerical non-convergence; carries the best estimate found so far."""

    def __init__(self, message: str, best_value: float, error_bound: float):
        super().__init__(message)
        self.best_value = best_value
        self.error_bound = error_bound


@dataclass(frozen=True)
class QuadResult:
    """Quadrature value with an error bound and the evaluation count."""

    value: float
    error_bound: float
    evaluations: int


@dataclass(frozen=True)
class SumDiagnostics:
    """Convergence diagnostics of a truncated Matsubara sum."""

    terms_used: int
    last_term_ratio: float
    truncation_bound: float


# Gauss-Kronrod 7-15 pair: nodes on [-1, 1], Kronrod weights for all 15
# nodes, Gauss weights for the embedded 7 (zero elsewhere).
_GK_NODES = np.array([
    -0.991455371120813, -0.949107912342759, -0.864864423359769,
    -0.741531185599394, -0.586087235467691, -0.405845151377397,
    -0.207784955007898, 0.0, 0.207784955007898, 0.405845151377397,
    0.586087235467691, 0.741531185599394, 0.864864423359769,
    0.949107912342759, 0.991455371120813,
])
_GK_WK = np.array([
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728, 0.204432940075298,
    0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529,
])
_GK_WG = np.array([
    0.0, 0.129484966168870, 0.0, 0.279705391489277, 0.0,
    0.381830050505119, 0.0, 0.417959183673469, 0.0, 0.381830050505119,
    0.0, 0.279705391489277, 0.0, 0.129484966168870, 0.0,
])

_EPS = np.finfo(float).eps


def neumaier_sum(values) -> float:
    """Compensated (Neumaier) sum of an iterable of floats, in order."""
    total = 0.0
    comp = 0.0
    for x in values:
        t = total + x
        if abs(total) >= abs(x):
            comp += (total - t) + x
        else:
            comp += (x - t) + total
        total = t
    return total + comp


def _gk_panels(f, lefts: np.ndarray, rights: np.ndarray):
    """Evaluate G7/K15 on a batch of panels with one vectorized call.

    Returns (k15, err, n_evals) where err is the QUADPACK-style scaled
    error estimate per panel.
    """
    half = 0.5 * (rights - lefts)
    mid = 0.5 * (rights + lefts)
    x = mid[:, None] + half[:, None] * _GK_NODES[None, :]
    fx = np.asarray(f(x.ravel()), dtype=float).reshape(x.shape)
    k15 = half * (fx @ _GK_WK)
    g7 = half * (fx @ _GK_WG)
    resabs = half * (np.abs(fx) @ _GK_WK)
    fmean = k15 / (2.0 * half)
    resasc = half * (np.abs(fx - fmean[:, None]) @ _GK_WK)
    raw = np.abs(k15 - g7)
    err = np.where(
        resasc > 0.0,
        resasc * np.minimum(1.0, (200.0 * raw / np.maximum(resasc, 1e-300)) ** 1.5),
        raw,
    )
    err = np.maximum(err, 50.0 * _EPS * resabs)
    return k15, err, x.size


def _adaptive_on_interval(f, a, b, tol_abs, max_panels, evals_so_far):
    """Adaptive G7/K15 bisection on [a, b] to absolute tolerance tol_abs."""
    lefts = np.array([a])
    rights = np.array([b])
    vals, errs, n = _gk_panels(f, lefts, rights)
    evals = evals_so_far + n
    while errs.sum() > tol_abs and len(lefts) < max_panels:
        worst = errs > tol_abs / (2.0 * len(lefts))
        if not worst.any():
            worst = errs == errs.max()
        la, ra = lefts[worst], rights[worst]
        mid = 0.5 * (la + ra)
        nl = np.concatenate([la, mid])
        nr = np.concatenate([mid, ra])
        nv, ne, n = _gk_panels(f, nl, nr)
        evals += n
        lefts = np.concatenate([lefts[~worst], nl])
        rights = np.concatenate([rights[~worst], nr])
        vals = np.concatenate([vals[~worst], nv])
        errs = np.concatenate([errs[~worst], ne])
    order = np.argsort(lefts, kind="stable")
    value = math.fsum(vals[order].tolist())
    return value, float(errs.sum()), evals


def _segment_edges(edge_cap: float):
    """Geometric segment edges 0, 1, 2, 4, 8, ... up to edge_cap."""
    edges = [0.0, 1.0]
    while edges[-1] < edge_cap:
        edges.append(min(2.0 * edges[-1], edge_cap))
    return edges


def integrate_semi_infinite(
    f: Callable[[np.ndarray], np.ndarray],
    transform: str = "exp_decay",
    tol_rel: float = 1e-10,
    tol_abs: float = 0.0,
    max_evals: int = 4_000_000,
) -> QuadResult:
    """Integrate f over (0, inf) with nested-rule error estimation.

    The domain is covered by geometrically growing segments [0,1], [1,2],
    [2,4], ...; a coarse scouting pass locates the integrand's support and
    magnitude, then each contributing segment is integrated by adaptive
    Gauss-Kronrod 7-15 bisection against a fixed absolute target.  The
    measured decay of segment contributions bounds the truncated tail.

    Parameters
    ----------
    f
        Vectorized integrand; called with a 1-D ndarray of abscissae.
    transform
        'exp_decay' for integrands decaying at least exponentially
        (upper edge capped at ~700), 'algebraic' for slower power-law
        decay (upper edge extended up to ~1e12).
    tol_rel, tol_abs
        Target |value - true| <= max(tol_rel*|value|, tol_abs).

    Raises
    ------
    NumericsError
        If the evaluation budget is exhausted before convergence; the
        exception carries the best estimate and its error bound.
    """
    if tol_rel <= 0.0 and tol_abs <= 0.0:
        raise ValueError("at least one of tol_rel/tol_abs must be positive")
    if transform not in ("exp_decay", "algebraic"):
        raise ValueError(f"unknown transform {transform!r}")
    edge_cap = 700.0 if transform == "exp_decay" else 1e12
    edges = _segment_edges(edge_cap)

    # Scout pass: one K15 panel per segment, stop once the running total is
    # resolved and the last two contributions establish decay.
    scout_vals: list[float] = []
    evals = 0
    n_seg = 0
    for i in range(len(edges) - 1):
        v, _, n = _gk_panels(f, np.array([edges[i]]), np.array([edges[i + 1]]))
        evals += n
        scout_vals.append(float(v[0]))
        n_seg = i + 1
        total = math.fsum(scout_vals)
        scale = max(abs(total), max(abs(x) for x in scout_vals))
        if i >= 1:
            a2, a1 = abs(scout_vals[-2]), abs(scout_vals[-1])
            decaying = a1 < 0.5 * a2 or (a1 == 0.0 and a2 == 0.0)
            if decaying and a1 <= max(tol_abs, tol_rel * scale) / 16.0:
                break
    scale = max(abs(math.fsum(scout_vals)), max(abs(x) for x in scout_vals))
    target = max(tol_abs, tol_rel * scale)
    if target <= 0.0:  # identically-zero integrand with tol_abs=0
        return QuadResult(value=0.0, error_bound=0.0, evaluations=evals)

    seg_vals: list[float] = []
    seg_errs: list[float] = []
    tail_bound = math.inf
    per_seg_tol = target / (4.0 * (n_seg + 2))
    i = 0
    while True:
        if i >= len(edges) - 1:
            break
        v, e, evals = _adaptive_on_interval(
            f, edges[i], edges[i + 1], per_seg_tol, 400, evals
        )
        seg_vals.append(v)
        seg_errs.append(e)
        # measured decay ratio between successive doubled segments
        if len(seg_vals) >= 2 and abs(seg_vals[-2]) > 0:
            ratio = abs(seg_vals[-1]) / abs(seg_vals[-2])
        elif abs(seg_vals[-1]) == 0.0 and len(seg_vals) >= 2:
            ratio = 0.0
        else:
            ratio = 1.0
        tail_bound = (
            abs(seg_vals[-1]) * ratio / (1.0 - ratio) if ratio < 0.9 else math.inf
        )
        if i >= 1 and abs(seg_vals[-1]) <= target / 4.0 and tail_bound <= target / 2.0:
            break
        if evals > max_evals or i == len(edges) - 2:
            total = math.fsum(seg_vals)
            err = math.fsum(seg_errs) + (
                tail_bound if math.isfinite(tail_bound) else abs(total) + target
            )
            raise NumericsError(
                f"semi-infinite quadrature did not converge (evals={evals}, "
                f"upper edge={edges[i + 1]:g})",
                best_value=total,
                error_bound=err,
            )
        i += 1
    return QuadResult(
        value=math.fsum(seg_vals),
        error_bound=math.fsum(seg_errs) + tail_bound,
        evaluations=evals,
    )


# Fixed block size: the grouping of the compensated reduction is part of
# the deterministic contract and must not depend on runtime parallelism.
MATSUBARA_BLOCK = 2048


def matsubara_sum(
    term: Callable,
    T_K: float,
    cutoff_ratio: float = 1e-10,
    tol_abs: float = 1e-12,
    *,
    vectorized: bool = False,
    min_terms: int = 8,
    max_terms: int = 50_000_000,
) -> tuple[float, SumDiagnostics]:
    """Primed Matsubara sum: 0.5*term(0) + sum_{l>=1} term(l).

    Terms are accumulated in fixed ascending order with compensated
    (error-free transformation) arithmetic: exact ``math.fsum`` within
    fixed-size blocks, Neumaier summation across blocks.  The sum is
    truncated once both |term(l)| < cutoff_ratio*|partial sum| and the
    exponential-tail extrapolation bound drops below tol_abs.

    Parameters
    ----------
    term
        Maps the Matsubara index l (int, or int ndarray when
        ``vectorized=True``) to the real term value.
    T_K
        Temperature; carried for diagnostics (the term function owns the
        frequency scale xi_l = 2*pi*l*k_B*T/hbar).

    Returns
    -------
    (value, SumDiagnostics)

    Raises
    ------
    NumericsError
        If terms fail to decay within the ``max_terms`` safety budget.
    """
    if T_K < 0:
        raise ValueError("temperature must be non-negative")
    if cutoff_ratio <= 0 or tol_abs <= 0:
        raise ValueError("cutoff_ratio and tol_abs must be positive")

    def eval_block(ls: np.ndarray) -> np.ndarray:
        if vectorized:
            return np.asarray(term(ls), dtype=float)
        return np.array([term(int(l)) for l in ls], dtype=float)

    t0 = float(eval_block(np.array([0]))[0])
    total = 0.5 * t0
    comp = 0.0
    terms_used = 1
    l_next = 1
    last_abs = abs(t0)
    tail = math.inf
    while True:
        ls = np.arange(l_next, l_next + MATSUBARA_BLOCK)
        vals = eval_block(ls)
        block_sum = math.fsum(vals.tolist())
        t = total + block_sum
        if abs(total) >= abs(block_sum):
            comp += (total - t) + block_sum
        else:
            comp += (block_sum - t) + total
        total = t
        terms_used += len(ls)
        partial = total + comp
        absvals = np.abs(vals)
        last_abs = float(absvals[-1])
        # tail extrapolation from the decay measured at the block end
        nz = np.nonzero(absvals)[0]
        if len(nz) == 0:
            tail = 0.0
        elif len(nz) >= 3 and nz[-1] == len(ls) - 1:
            r1 = absvals[nz[-1]] / absvals[nz[-2]]
            r2 = absvals[nz[-2]] / absvals[nz[-3]]
            ratio = max(r1, r2)
            tail = last_abs * ratio / (1.0 - ratio) if ratio < 1.0 else math.inf
        else:
            tail = 0.0 if nz[-1] < len(ls) - 1 else math.inf
        if (
            terms_used >= min_terms
            and last_abs <= cutoff_ratio * abs(partial)
            and tail <= tol_abs
        ):
            break
        if terms_used > max_terms:
            raise NumericsError(
                f"Matsubara sum did not converge within {max_terms} terms",
                best_value=partial,
                error_bound=tail if math.isfinite(tail) else abs(partial),
            )
        l_next += MATSUBARA_BLOCK
    value = total + comp
    diag = SumDiagnostics(
        terms_used=terms_used,
        last_term_ratio=last_abs / abs(value) if value != 0.0 else 0.0,
        truncation_bound=tail,
    )
    return value, diag
