"""Analytic slice-diameter bounds for strictly monotone lattice norms.

The chain: from K (norm of the all-ones vector on the truncation) and
l = min ||e_alpha + e_beta / K|| > 1 pick eta, theta, a = theta / K and
eps; then every unit x with x(alpha) > 1 - eps has off-alpha residual at
most 1 - eps, and the slice S(e*_alpha, eps) has diameter at most
2 (1 - (1 - 3 eps / 2) eps) < 2.

Certificates speak about the truncated space only and always carry the
truncation dimension.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import DomainError, SymmetryViolation
from .modulars import DEFAULT_TOL
from .norms import NormSpec, eval_norm, mathfrak_LF
from .probes import strict_monotonicity_probe
from .vectors import Coordinate, SparseVector, base, basis, indicator

__all__ = [
    "Ld2pCertificate", "Inconclusive", "usm_slice_bound", "thm41_constants",
    "certify_no_ld2p", "certify_no_ld2p_linfty", "thm43_symmetric_check",
    "hM_sn_norm", "hM_xn", "check_certificate", "explain",
]

_THETA_GRID = 10_000
_F_MARGIN = 1e-9


@dataclass(frozen=True)
class Ld2pCertificate:
    alpha: str
    K: float
    l: float
    eta: float
    theta: float
    a_frak: float
    eps: float
    E_bound: float
    diameter_bound: float
    truncation_dim: int
    C: float = 0.0
    K_kind: str = "LF"
    l_argmin: str = ""
    spec: dict = field(default_factory=dict)
    probe_seed: int = 0
    probe_trials: int = 0
    tol: float = 0.0
    solver_tol: float = DEFAULT_TOL
    status: str = "certificate"

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class Inconclusive:
    reason: str
    details: dict = field(default_factory=dict)
    status: str = "inconclusive"

    def to_dict(self) -> dict:
        return asdict(self)


def usm_slice_bound(eps: float, E: float) -> tuple[float, float]:
    """C = (1 - 3 eps / 2)(1 - E) and the slice-diameter bound 2 (1 - C)."""
    if not 0 < eps < 2.0 / 3.0:
        raise DomainError("need 0 < eps < 2/3")
    if not 0 <= E < 1:
        raise DomainError("need 0 <= E < 1")
    C = (1.0 - 1.5 * eps) * (1.0 - E)
    return C, 2.0 * (1.0 - C)


def _f(tau, eta, K, l):
    return tau * eta * l - (1.0 - tau) * eta - (1.0 - eta) * tau / K


def thm41_constants(K: float, l: float) -> tuple[float, float, float, float]:
    """(eta, theta, a_frak, eps) for given K > 1 and 1 < l <= 2.

    eta is the midpoint of ((K+1)/(lK+1), 1).  theta is the smallest point
    of a descending grid on (0, 1) still having f(theta) > 1 + 1e-9; f is
    affine and increasing, so when the grid is too coarse the crossing is
    solved for directly.
    """
    if not K > 1:
        raise DomainError("need K > 1")
    if not 1 < l <= 2:
        raise DomainError("need 1 < l <= 2")
    lo = (K + 1.0) / (l * K + 1.0)
    eta = 0.5 * (lo + 1.0)
    if not _f(1.0, eta, K, l) > 1.0:
        raise DomainError("f(1) <= 1; eta window collapsed in floating point")

    grid = np.linspace(1.0, 0.0, _THETA_GRID + 1)[1:-1]
    ok = _f(grid, eta, K, l) > 1.0 + _F_MARGIN
    theta = None
    if ok[0]:
        # descending scan: stop at the first failure
        bad = np.flatnonzero(~ok)
        last = (bad[0] - 1) if bad.size else ok.size - 1
        theta = float(grid[last])
    else:
        slope = eta * l + eta - (1.0 - eta) / K
        tau0 = (1.0 + _F_MARGIN + eta) / slope
        theta = 0.5 * (tau0 + 1.0)
        if not (theta < 1.0 and _f(theta, eta, K, l) > 1.0 + _F_MARGIN):
            raise DomainError("no admissible theta in (0, 1)")
    a_frak = theta / K
    eps = 0.5 * min(1.0 - eta, (1.0 - a_frak * K) / 2.0, 2.0 / 3.0 - 1e-9)
    return eta, theta, a_frak, eps


def _build(spec, alpha, K, l, argmin, dim, kind, seed, trials, tol, solver_tol):
    eta, theta, a_frak, eps = thm41_constants(K, l)
    E = 1.0 - eps
    C, bound = usm_slice_bound(eps, E)
    return Ld2pCertificate(
        alpha=str(alpha), K=K, l=l, eta=eta, theta=theta, a_frak=a_frak, eps=eps,
        E_bound=E, diameter_bound=bound, truncation_dim=dim, C=C, K_kind=kind,
        l_argmin=str(argmin), spec=spec.to_json(), probe_seed=seed, probe_trials=trials,
        tol=tol, solver_tol=solver_tol,
    )


def _preconditions(spec, dim, seed, trials, solver_tol, coords):
    for c in coords:
        if abs(eval_norm(spec, basis(c), solver_tol) - 1.0) > 1e-9:
            return Inconclusive("basis not normalized", {"coordinate": str(c)})
    probe = strict_monotonicity_probe(spec, trials, seed, tol=solver_tol)
    if not probe.passed:
        return Inconclusive("strict monotonicity probe failed", probe.to_dict())
    return None


def _certify(spec, alpha, dim, tol, seed, trials, solver_tol, kind):
    if dim < 2:
        raise DomainError("dim must be at least 2")
    coords = [base(i) for i in range(1, dim + 1)]
    if alpha not in coords:
        raise DomainError(f"alpha {alpha} outside the truncation")
    bad = _preconditions(spec, dim, seed, trials, solver_tol, coords)
    if bad is not None:
        return bad
    K = eval_norm(spec, indicator(coords), solver_tol)
    if not K > 1 + tol:
        return Inconclusive("K <= 1 + tol at this truncation", {"K": K})
    ea = basis(alpha)
    l, arg = min((eval_norm(spec, ea + basis(b) / K, solver_tol), b) for b in coords if b != alpha)
    if not l > 1 + tol:
        return Inconclusive("l <= 1 + tol at this truncation",
                            {"K": K, "l": l, "l_minus_1": l - 1.0, "l_argmin": str(arg),
                             "truncation_dim": dim})
    return _build(spec, alpha, K, l, arg, dim, kind, seed, trials, tol, solver_tol)


def certify_no_ld2p(spec: NormSpec, alpha: Coordinate = base(1), dim: int = 16,
                    tol: float = 1e-9, seed: int = 0, trials: int = 1000,
                    solver_tol: float = DEFAULT_TOL):
    """Certificate with K the norm of the finite indicator on the truncation.

    ``tol`` is the margin l must clear above 1; ``solver_tol`` goes to
    the norm engine.  Returns ``Inconclusive`` rather than raising when a
    precondition or the margin fails.
    """
    return _certify(spec, alpha, dim, tol, seed, trials, solver_tol, "LF")


def certify_no_ld2p_linfty(spec: NormSpec, k: Coordinate = base(1), dim: int = 16,
                           tol: float = 1e-9, seed: int = 0, trials: int = 1000,
                           solver_tol: float = DEFAULT_TOL):
    """As certify_no_ld2p with K the norm of the all-ones vector.

    On a finite truncation the two constants coincide for monotone norms;
    the certificate records which one was meant.
    """
    return _certify(spec, k, dim, tol, seed, trials, solver_tol, "L")


def thm43_symmetric_check(spec: NormSpec, dim: int = 8, tol: float = 1e-9, seed: int = 0,
                          trials: int = 1000, solver_tol: float = DEFAULT_TOL,
                          perm_samples: int = 20):
    """Certificate for a 1-symmetric norm from the single pair (e_1, e_2).

    Raises ``SymmetryViolation`` when a sampled coordinate permutation
    changes the norm by more than 1e-12 relative (plus solver resolution).
    """
    if dim < 2:
        raise DomainError("dim must be at least 2")
    rng = np.random.default_rng(seed)
    slack = 1e-12 + 4 * solver_tol
    for _ in range(perm_samples):
        a = rng.uniform(-1, 1, dim)
        v = SparseVector.dense(a)
        w = SparseVector.dense(a[rng.permutation(dim)])
        nv, nw = eval_norm(spec, v, solver_tol), eval_norm(spec, w, solver_tol)
        if abs(nv - nw) > slack * max(nv, nw):
            raise SymmetryViolation(f"norm changed under permutation: {nv!r} vs {nw!r}")
    coords = [base(i) for i in range(1, dim + 1)]
    bad = _preconditions(spec, dim, seed, trials, solver_tol, coords)
    if bad is not None:
        return bad
    K = mathfrak_LF(spec, dim, solver_tol)
    if not K > 1 + tol:
        return Inconclusive("K <= 1 + tol at this truncation", {"K": K})
    l = eval_norm(spec, basis(base(1)) + basis(base(2)) / K, solver_tol)
    if not l > 1 + tol:
        return Inconclusive("l <= 1 + tol at this truncation",
                            {"K": K, "l": l, "l_minus_1": l - 1.0, "truncation_dim": dim})
    return _build(spec, base(1), K, l, base(2), dim, "LF", seed, trials, tol, solver_tol)


def check_certificate(cert: dict) -> list[str]:
    """Re-check every defining inequality from the serialised fields alone.

    Returns the list of violated conditions (empty when consistent).
    """
    K, l, eta, theta = cert["K"], cert["l"], cert["eta"], cert["theta"]
    a, eps, E, D = cert["a_frak"], cert["eps"], cert["E_bound"], cert["diameter_bound"]
    checks = {
        "l > 1": l > 1,
        "K > 1": K > 1,
        "eta in ((K+1)/(lK+1), 1)": (K + 1) / (l * K + 1) < eta < 1,
        "f(1) > 1": _f(1.0, eta, K, l) > 1,
        "theta in (0, 1)": 0 < theta < 1,
        "f(theta) > 1": _f(theta, eta, K, l) > 1,
        "a_frak = theta / K": math.isclose(a, theta / K, rel_tol=1e-12),
        "a_frak K < 1 - 2 eps": a * K < 1 - 2 * eps,
        "eps < min(1 - eta, 2/3)": 0 < eps < min(1 - eta, 2.0 / 3.0),
        "E_bound <= 1 - eps": E <= 1 - eps,
        "diameter_bound = 2(1 - (1 - 3eps/2)(1 - E))":
            math.isclose(D, 2 * (1 - (1 - 1.5 * eps) * (1 - E)), rel_tol=1e-12),
        "diameter_bound < 2": D < 2,
    }
    return [name for name, ok in checks.items() if not ok]


def explain(cert: Ld2pCertificate) -> list[str]:
    """The inequality chain with every intermediate value, one per line."""
    lo = (cert.K + 1) / (cert.l * cert.K + 1)
    f1 = _f(1.0, cert.eta, cert.K, cert.l)
    ft = _f(cert.theta, cert.eta, cert.K, cert.l)
    return [
        f"truncation dim = {cert.truncation_dim}, alpha = {cert.alpha}",
        f"K ({cert.K_kind}) = {cert.K!r}",
        f"l = min ||e_alpha + e_beta/K|| = {cert.l!r} (at {cert.l_argmin}) > 1",
        f"eta window = ({lo!r}, 1); eta = {cert.eta!r}",
        f"f(1) = eta*l - (1-eta)/K = {f1!r} > 1",
        f"theta = {cert.theta!r}; f(theta) = {ft!r} > 1",
        f"a_frak = theta/K = {cert.a_frak!r}; a_frak*K = {cert.a_frak * cert.K!r}",
        f"eps = {cert.eps!r}; 1 - 2eps = {1 - 2 * cert.eps!r}; 1 - eta = {1 - cert.eta!r}",
        f"E_bound = 1 - eps = {cert.E_bound!r}",
        f"C = (1 - 3eps/2)(1 - E_bound) = {cert.C!r}",
        f"diameter_bound = 2(1 - C) = {cert.diameter_bound!r} < 2",
    ]


def hM_sn_norm(n: int) -> float:
    """Closed-form ||e_1 + ... + e_n|| in the Orlicz space of M, n >= 4."""
    if n < 4:
        raise DomainError("closed form needs n >= 4 (exponential branch)")
    return 2.0 - 2.0 * math.log(2.0) + math.log(n)


def hM_xn(d: float, n: int) -> tuple[float, float]:
    """(k, residual) for x_n = (1-d) e_1 + (1/k) sum_{i<=n} e_{i+1} on the unit sphere."""
    if not 0 < d < 0.5:
        raise DomainError("need 0 < d < 1/2")
    if n < 4:
        raise DomainError("need n >= 4")
    L = hM_sn_norm(n)
    k = L - math.log(2.0 * d - d * d)
    if not 1.0 / k < 0.5:
        raise DomainError("1/k must fall on the exponential branch")
    return k, L / k
