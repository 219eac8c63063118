"""Degree dynamics: exact degree sequences and Monte-Carlo lambda_q.

deg(f^n) is computed by exact symbolic composition followed by gcd
reduction, so algebraic stability (deg(f^n) = d^n) and its failure (the
Cremona degree drop) are detected exactly.  The higher actions
lambda_q(f) = int f^*(omega^q) ^ omega^(k-q) are estimated by Fubini-Study
uniform Monte Carlo: at a sample z the integrand density against the FS
volume is e_q(a_1..a_k) / C(k,q) where the a_i are the squared singular
values of the projective differential.  For q above the declared s the
estimator sees only the absolutely continuous part of f^*(omega)^q (the
indeterminacy atoms are flagged, not computed).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from . import geometry
from .maps import BirationalPair, RationalMapPk, ORBIT_UNDERFLOW
from .poly import PolyVector, TermCapExceeded, compose, gcd_reduce, DEFAULT_TERM_CAP

REJECTION_RADIUS = 1e-6       # FS distance to I+ witnesses below which samples are rejected
NEAR_I_RATIO = 1e-12          # |F(Z)|/|Z|^d below which a sample counts as near I


@dataclass
class DegreeSequence:
    label: str
    entries: List[Tuple[int, int]]            # (n, deg(f^n)) exact
    stable_up_to: object                      # int or "all tested"
    first_drop: Optional[int]
    term_cap_hit: bool = False

    def degs(self) -> List[int]:
        return [d for _, d in self.entries]


@dataclass
class DegreeEstimate:
    q: int
    n: int
    value: float
    stderr: float
    samples: int
    seed: int
    rejected_near_indeterminacy: int = 0
    atoms_not_measured: bool = False          # set when q > declared s


def iterate_reduced(f: RationalMapPk, N: int,
                    term_cap: int = DEFAULT_TERM_CAP) -> List[PolyVector]:
    """Reduced lifts of f^1..f^N (symbolic, exact)."""
    out = [f.lift]
    for _ in range(1, N):
        nxt = compose(f.lift, out[-1], term_cap)
        red, _ = gcd_reduce(nxt)
        out.append(red)
    return out


def degree_sequence(f: RationalMapPk, N: int,
                    term_cap: int = DEFAULT_TERM_CAP) -> DegreeSequence:
    """Exact deg(f^n) for n = 1..N, with the first degree drop flagged."""
    if N < 1:
        raise ValueError("N must be >= 1")
    entries: List[Tuple[int, int]] = []
    first_drop = None
    cap_hit = False
    cur = f.lift
    entries.append((1, cur.degree))
    for n in range(2, N + 1):
        try:
            nxt = compose(f.lift, cur, term_cap)
        except TermCapExceeded:
            cap_hit = True
            break
        red, _ = gcd_reduce(nxt)
        entries.append((n, red.degree))
        if first_drop is None and red.degree < f.d ** n:
            first_drop = n
        cur = red
    stable = "all tested" if first_drop is None else first_drop - 1
    return DegreeSequence(label=f.label, entries=entries, stable_up_to=stable,
                          first_drop=first_drop, term_cap_hit=cap_hit)


def _lift_differential_batch(lift: PolyVector, jac_polys, Z: np.ndarray
                             ) -> Tuple[np.ndarray, np.ndarray]:
    FZ = lift.eval_array(Z)
    rows = [np.stack([p.eval_array(Z) for p in row], axis=-1) for row in jac_polys]
    J = np.stack(rows, axis=-2)
    return geometry.differential_frames(J, Z, FZ)


def singular_values_sq(f_or_lift, Z: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Squared singular values of the projective differential at unit rows Z.

    Returns (a, fz_norm) with a sorted decreasing along the last axis.
    """
    if isinstance(f_or_lift, RationalMapPk):
        lift = f_or_lift.lift
        jac = f_or_lift.jacobian_polys()
    else:
        from .poly import partial_derivatives
        lift = f_or_lift
        jac = partial_derivatives(lift)
    D, n = _lift_differential_batch(lift, jac, Z)
    sv = np.linalg.svd(D, compute_uv=False)
    return sv ** 2, n


def lambda_q_montecarlo(f, q: int, samples: int = 100_000, seed: int = 0,
                        precision: int = 53,
                        iplus_witnesses: Optional[np.ndarray] = None,
                        declared_s: Optional[int] = None) -> DegreeEstimate:
    """Monte-Carlo estimate of lambda_q(f) = int f^*(omega)^q ^ omega^(k-q).

    Accepts a RationalMapPk or a BirationalPair (the pair supplies the
    rejection witnesses and declared s).
    """
    if isinstance(f, BirationalPair):
        pair = f
        fmap = pair.forward
        if iplus_witnesses is None and fmap.indeterminacy is not None \
                and not fmap.indeterminacy.proven_empty:
            iplus_witnesses = fmap.indeterminacy.witnesses
        if declared_s is None:
            declared_s = pair.s
    else:
        fmap = f
        if iplus_witnesses is None and fmap.indeterminacy is not None \
                and not fmap.indeterminacy.proven_empty:
            iplus_witnesses = fmap.indeterminacy.witnesses
    k = fmap.k
    if not 0 <= q <= k:
        raise ValueError(f"q must be in [0, {k}]")
    if q == 0:
        return DegreeEstimate(q=0, n=1, value=1.0, stderr=0.0, samples=samples, seed=seed)

    rng = geometry.make_rng(seed, "lambda_q", fmap.label, q)
    vals = np.empty(samples)
    filled = 0
    rejected = 0
    rounds = 0
    while filled < samples and rounds < 64:
        rounds += 1
        M = samples - filled
        Z = geometry.fs_uniform(k, M, rng)
        keep = np.ones(M, dtype=bool)
        if iplus_witnesses is not None and len(iplus_witnesses):
            keep &= geometry.fs_distance_to_set(Z, iplus_witnesses) > REJECTION_RADIUS
        a, nrm = singular_values_sq(fmap, Z)
        keep &= nrm > NEAR_I_RATIO
        rejected += int(M - keep.sum())
        got = int(keep.sum())
        e = geometry.elementary_symmetric(a[keep], q) / math.comb(k, q)
        vals[filled:filled + got] = np.real(e)
        filled += got
    if filled < samples:
        vals = vals[:filled]
    mean = float(vals.mean())
    stderr = float(vals.std(ddof=1) / np.sqrt(len(vals)))
    atoms = declared_s is not None and q > declared_s
    return DegreeEstimate(q=q, n=1, value=mean, stderr=stderr, samples=len(vals),
                          seed=seed, rejected_near_indeterminacy=rejected,
                          atoms_not_measured=atoms)


@dataclass
class DynamicalDegreeResult:
    q: int
    N: int
    estimate: float
    table: List[DegreeEstimate]


def dynamical_degree(f, q: int, N: int = 4, samples_per_n: int = 20_000,
                     seed: int = 0) -> DynamicalDegreeResult:
    """(lambda_q(f^N))^(1/N) with the per-n table; q = 1 is exact."""
    if N < 2:
        raise ValueError("N must be >= 2")
    if isinstance(f, BirationalPair):
        fmap = f.forward
        declared_s = f.s
    else:
        fmap = f
        declared_s = None
    if q == 1:
        seq = degree_sequence(fmap, N)
        table = [DegreeEstimate(q=1, n=n, value=float(dn), stderr=0.0,
                                samples=0, seed=seed) for n, dn in seq.entries]
        nmax, dmax = seq.entries[-1]
        return DynamicalDegreeResult(q=q, N=nmax, estimate=dmax ** (1.0 / nmax), table=table)
    lifts = iterate_reduced(fmap, N)
    wits = None
    if fmap.indeterminacy is not None and not fmap.indeterminacy.proven_empty:
        wits = fmap.indeterminacy.witnesses
    table = []
    for n, lift in enumerate(lifts, start=1):
        fn = RationalMapPk(k=fmap.k, d=lift.degree, lift=lift,
                           label=f"{fmap.label}^{n}")
        est = lambda_q_montecarlo(fn, q, samples=samples_per_n,
                                  seed=seed + n, iplus_witnesses=wits,
                                  declared_s=declared_s)
        est.n = n
        table.append(est)
    return DynamicalDegreeResult(q=q, N=N, estimate=table[-1].value ** (1.0 / N),
                                 table=table)


@dataclass
class StabilityReport:
    N: int
    min_distance: float
    collision: bool
    collision_detail: Optional[Tuple[str, int, int]]  # (kind, n, witness index)
    distance_matrix: np.ndarray                       # (N+1, N+1) min pairwise FS dist
    exact_hits: List[Tuple[str, int, int]] = field(default_factory=list)

    @property
    def no_collision_observed(self) -> bool:
        return not self.collision


def stability_check(pair: BirationalPair, N: int = 6,
                    threshold: float = 1e-8) -> StabilityReport:
    """Push I- forward and I+ backward; report the min pairwise FS distance.

    An exact indeterminacy hit while pushing (the Cremona case: the lift
    vanishes identically at a witness) is recorded and counted as a
    collision at that step.
    """
    f, g = pair.forward, pair.inverse
    ip = f.indeterminacy
    im = g.indeterminacy
    if ip is None or im is None:
        raise ValueError("stability_check needs witness data on both sides")
    if ip.proven_empty or im.proven_empty:
        return StabilityReport(N=N, min_distance=1.0, collision=False,
                               collision_detail=None,
                               distance_matrix=np.full((N + 1, N + 1), np.inf))

    def orbit_cloud(mp: RationalMapPk, pts: np.ndarray, steps: int, kind: str):
        clouds = [np.atleast_2d(pts)]
        hits = []
        cur = np.atleast_2d(pts).copy()
        alive = np.ones(len(cur), dtype=bool)
        for n in range(1, steps + 1):
            nxt, nrm = mp.step(cur)
            dead = alive & (nrm <= ORBIT_UNDERFLOW)
            for idx in np.where(dead)[0]:
                hits.append((kind, n, int(idx)))
            alive &= ~dead
            cur = np.where(alive[:, None], nxt, cur)
            clouds.append(cur[alive] if alive.any() else np.zeros((0, cur.shape[1])))
        return clouds, hits

    fwd_clouds, fwd_hits = orbit_cloud(f, im.witnesses, N, "forward")
    bwd_clouds, bwd_hits = orbit_cloud(g, ip.witnesses, N, "backward")
    D = np.full((N + 1, N + 1), np.inf)
    for n, cf in enumerate(fwd_clouds):
        for m, cb in enumerate(bwd_clouds):
            if len(cf) and len(cb):
                d = geometry.fs_distance(cf[:, None, :], cb[None, :, :])
                D[n, m] = float(d.min())
    min_d = float(np.min(D))
    hits = fwd_hits + bwd_hits
    collision = bool(min_d < threshold or hits)
    detail = None
    if hits:
        detail = hits[0]
    elif collision:
        n, m = np.unravel_index(int(np.argmin(D)), D.shape)
        detail = ("distance", int(n), int(m))
    return StabilityReport(N=N, min_distance=min_d, collision=collision,
                           collision_detail=detail, distance_matrix=D,
                           exact_hits=hits)
