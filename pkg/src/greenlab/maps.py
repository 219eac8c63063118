"""Rational self-maps of P^k: validated birational pairs and the catalog.

A map is stored through its gcd-reduced lift (k+1 homogeneous components
with no common factor).  Birational pairs are validated exactly: the
composition of the lifts must reduce to a scalar multiple of the identity,
and the cofactor degree must equal d*delta - 1.  Indeterminacy loci are
represented by witness point clouds plus a declared dimension; exact
parametrizations are stored for the catalog maps, and a damped Gauss-Newton
search over random linear slices covers user-supplied maps.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import geometry
from .poly import (
    DimensionMismatch,
    HomogeneousPoly,
    PolyVector,
    compose,
    gcd_reduce,
    partial_derivatives,
)

# |F(Zhat)| below this at a unit vector counts as "orbit hit indeterminacy"
ORBIT_UNDERFLOW = 1e-250
# residual threshold |F(w)|/|w|^d for accepting an indeterminacy witness
WITNESS_RESIDUAL = 1e-10


class NotInverse(ValueError):
    """The candidate inverse does not invert the map."""


class NoneFound(RuntimeError):
    """Numerical witness search found nothing (not a proof of emptiness)."""


class ContractionNotVerified(RuntimeError):
    """The requested contraction factor failed the tube-invariance checks."""


# ---------------------------------------------------------------------------
# exact linear algebra over Q
# ---------------------------------------------------------------------------

Matrix = List[List[Fraction]]


def as_fraction_matrix(A) -> Matrix:
    return [[Fraction(x) for x in row] for row in A]


def mat_inverse(A: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan; raises on singular input."""
    n = len(A)
    aug = [[Fraction(A[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def linear_polyvector(A: Matrix, k: int) -> PolyVector:
    comps = []
    for i in range(k + 1):
        terms = {}
        for j in range(k + 1):
            if A[i][j] != 0:
                mono = [0] * (k + 1)
                mono[j] = 1
                terms[tuple(mono)] = Fraction(A[i][j])
        comps.append(HomogeneousPoly.from_terms(k, terms) if terms
                     else HomogeneousPoly.zero(k, 1))
    return PolyVector(tuple(comps))


def apply_matrix_points(A: Matrix, pts: np.ndarray) -> np.ndarray:
    M = np.array([[complex(x) for x in row] for row in A])
    return geometry.normalize(pts @ M.T)


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------

@dataclass
class IndeterminacyData:
    """Witness cloud for an indeterminacy locus.

    declared_dim = -1 marks a proven-empty locus (holomorphic map); the
    numerical search never proves emptiness and reports NoneFound instead.
    """

    witnesses: np.ndarray                 # (m, k+1) unit vectors (m may be 0)
    declared_dim: int
    source: str                           # exact | user-parametrization | sampled
    exact_points: Optional[List[Tuple[Fraction, ...]]] = None
    sampler: Optional[Callable[[int, np.random.Generator], np.ndarray]] = None

    @property
    def proven_empty(self) -> bool:
        return self.declared_dim < 0

    def sample(self, budget: int, rng: np.random.Generator) -> np.ndarray:
        if self.proven_empty:
            return np.zeros((0, 0))
        if self.sampler is not None and budget > len(self.witnesses):
            extra = self.sampler(budget - len(self.witnesses), rng)
            return np.vstack([self.witnesses, extra])
        return self.witnesses[:budget] if budget < len(self.witnesses) else self.witnesses


@dataclass
class AnalyticConstants:
    """Constants (K, p) with ||Df(x)|| <= K d(x, I)^(-p) on the calibration sample."""

    K: float
    p: float
    holdout_violations: int = 0
    sample_size: int = 0


@dataclass
class RationalMapPk:
    """A dominant rational self-map of P^k through its reduced lift."""

    k: int
    d: int
    lift: PolyVector
    label: str
    indeterminacy: Optional[IndeterminacyData] = None
    _jac: Optional[List[List[HomogeneousPoly]]] = field(default=None, repr=False)

    @staticmethod
    def from_lift(lift: PolyVector, label: str,
                  indeterminacy: Optional[IndeterminacyData] = None,
                  reduce: bool = True) -> "RationalMapPk":
        if reduce:
            lift, _ = gcd_reduce(lift)
        return RationalMapPk(k=lift.k, d=lift.degree, lift=lift, label=label,
                             indeterminacy=indeterminacy)

    # -- evaluation --------------------------------------------------------

    def eval_lift(self, Z: np.ndarray) -> np.ndarray:
        return self.lift.eval_array(Z)

    def eval_exact(self, Z: Sequence) -> List[Fraction]:
        return self.lift.eval_exact(Z)

    def jacobian_polys(self) -> List[List[HomogeneousPoly]]:
        if self._jac is None:
            self._jac = partial_derivatives(self.lift)
        return self._jac

    def jacobian(self, Z: np.ndarray) -> np.ndarray:
        """Jacobian of the lift, shape (..., k+1, k+1)."""
        Z = np.asarray(Z, dtype=complex)
        jp = self.jacobian_polys()
        rows = [np.stack([p.eval_array(Z) for p in row], axis=-1) for row in jp]
        return np.stack(rows, axis=-2)

    def step(self, Z: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """One renormalized orbit step: (F(Z)/|F(Z)|, |F(Z)|) for unit rows Z."""
        FZ = self.eval_lift(Z)
        n = geometry.norms(FZ)
        safe = np.where(n > 0, n, 1.0)
        return FZ / safe[..., None], n

    def orbit(self, Z: np.ndarray, n_steps: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Renormalized orbit: points (n_steps+1, ..., k+1), log-norms, alive mask."""
        Z = geometry.normalize(np.asarray(Z, dtype=complex))
        pts = [Z]
        lognorms = []
        alive = np.ones(Z.shape[:-1], dtype=bool)
        cur = Z
        for _ in range(n_steps):
            nxt, n = self.step(cur)
            alive = alive & (n > ORBIT_UNDERFLOW)
            lognorms.append(np.where(n > 0, np.log(np.where(n > 0, n, 1.0)), -np.inf))
            cur = np.where(alive[..., None], nxt, cur)
            pts.append(cur)
        return np.stack(pts, axis=0), np.stack(lognorms, axis=0), alive

    # -- metadata ----------------------------------------------------------

    def holomorphic(self) -> bool:
        return self.indeterminacy is not None and self.indeterminacy.proven_empty

    def to_json_dict(self) -> dict:
        d: dict = {"label": self.label, "k": self.k, "d": self.d,
                   "forward": self.lift.to_json_dict()}
        if self.indeterminacy is not None and not self.indeterminacy.proven_empty:
            d["indeterminacy"] = {
                "declared_dim": self.indeterminacy.declared_dim,
                "source": self.indeterminacy.source,
                "witnesses": _points_to_json(self.indeterminacy.witnesses),
            }
        elif self.indeterminacy is not None:
            d["indeterminacy"] = {"declared_dim": -1, "source": self.indeterminacy.source,
                                  "witnesses": []}
        return d

    def content_hash(self) -> str:
        return hashlib.sha256(
            json.dumps(self.lift.to_json_dict(), sort_keys=True).encode()).hexdigest()[:16]


def _points_to_json(pts: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.atleast_2d(pts)]


def _points_from_json(rows: list) -> np.ndarray:
    if not rows:
        return np.zeros((0, 0))
    return np.array([[complex(re, im) for re, im in row] for row in rows])


@dataclass
class BirationalPair:
    """Validated pair with F o G = cofactor * identity exactly."""

    forward: RationalMapPk
    inverse: RationalMapPk
    cofactor: HomogeneousPoly
    s: Optional[int] = None

    @property
    def d(self) -> int:
        return self.forward.d

    @property
    def delta(self) -> int:
        return self.inverse.d

    @property
    def k(self) -> int:
        return self.forward.k

    def to_json_dict(self) -> dict:
        d = self.forward.to_json_dict()
        d["inverse"] = self.inverse.lift.to_json_dict()
        d["delta"] = self.delta
        if self.s is not None:
            d["s"] = self.s
        d["cofactor"] = self.cofactor.to_json_dict()
        ind: dict = d.pop("indeterminacy", None)
        d["indeterminacy"] = {
            "forward": ind["witnesses"] if ind else [],
            "inverse": (_points_to_json(self.inverse.indeterminacy.witnesses)
                        if self.inverse.indeterminacy is not None
                        and not self.inverse.indeterminacy.proven_empty else []),
        }
        return d


def validate_birational(f: RationalMapPk, g: RationalMapPk,
                        s: Optional[int] = None) -> BirationalPair:
    """Check F o G = P * id exactly and package the pair with its cofactor."""
    if f.k != g.k:
        raise DimensionMismatch(f"k mismatch: {f.k} vs {g.k}")
    comp = compose(f.lift, g.lift)
    reduced, cof = gcd_reduce(comp)
    if not reduced.is_scalar_multiple_of_identity():
        raise NotInverse(f"{g.label} is not an inverse of {f.label}: "
                         f"reduced composition has degree {reduced.degree}")
    # fold the scalar into the cofactor so that F o G = cofactor * Z exactly
    first = reduced.components[0]
    mono0 = tuple(1 if i == 0 else 0 for i in range(f.k + 1))
    scalar = first.terms[mono0]
    cof = cof.scale(scalar)
    want = f.d * g.d - 1
    if cof.degree != want:
        raise NotInverse(f"cofactor degree {cof.degree} != d*delta-1 = {want}")
    return BirationalPair(forward=f, inverse=g, cofactor=cof, s=s)


# ---------------------------------------------------------------------------
# witness search
# ---------------------------------------------------------------------------

def indeterminacy_witnesses(f: RationalMapPk, budget: int = 16,
                            seed: int = 0) -> IndeterminacyData:
    """Witnesses of I(f): exact for catalog maps, else numeric slice search."""
    if budget < 1:
        raise ValueError("budget must be >= 1")
    rng = geometry.make_rng(seed, "indeterminacy", f.label)
    if f.indeterminacy is not None:
        data = f.indeterminacy
        if data.proven_empty:
            return data
        pts = data.sample(budget, rng)
        return IndeterminacyData(witnesses=np.asarray(pts), declared_dim=data.declared_dim,
                                 source=data.source, exact_points=data.exact_points,
                                 sampler=data.sampler)
    return _numeric_witness_search(f, budget, rng)


def _numeric_witness_search(f: RationalMapPk, budget: int,
                            rng: np.random.Generator) -> IndeterminacyData:
    k, d = f.k, f.d
    found: List[np.ndarray] = []
    dim_found = None
    for dim in range(0, k - 1):
        n_par = k - dim  # unknowns per random slice
        tries = 40 * budget
        for _ in range(tries):
            if len(found) >= budget:
                break
            M = (rng.standard_normal((k + 1, n_par + 1))
                 + 1j * rng.standard_normal((k + 1, n_par + 1)))
            tau = (rng.standard_normal(n_par) + 1j * rng.standard_normal(n_par)) * 0.5
            z = _gauss_newton_slice(f, M, tau)
            if z is None:
                continue
            res = np.linalg.norm(f.eval_lift(z)) / np.linalg.norm(z) ** d
            if res < WITNESS_RESIDUAL:
                zn = geometry.normalize(z)
                if not found or geometry.fs_distance_to_set(zn[None, :],
                                                            np.array(found)).min() > 1e-6:
                    found.append(zn)
        if found:
            dim_found = dim
            break
    if not found:
        raise NoneFound(f"no indeterminacy witnesses found for {f.label} "
                        "(numerical search; emptiness not proven)")
    return IndeterminacyData(witnesses=np.array(found), declared_dim=dim_found,
                             source="sampled")


def _gauss_newton_slice(f: RationalMapPk, M: np.ndarray, tau: np.ndarray,
                        iters: int = 60) -> Optional[np.ndarray]:
    """Damped Gauss-Newton for F(M (1, tau)) = 0 in the slice parameters."""
    for _ in range(iters):
        z = M @ np.concatenate([[1.0 + 0j], tau])
        nz = np.linalg.norm(z)
        if nz < 1e-12:
            return None
        val = f.eval_lift(z / nz)
        J = f.jacobian(z / nz) @ (M[:, 1:] / nz)
        r = np.linalg.norm(val)
        if r < 1e-14:
            return z
        try:
            step, *_ = np.linalg.lstsq(J, -val, rcond=None)
        except np.linalg.LinAlgError:
            return None
        lam = 1.0
        for _ in range(8):
            t2 = tau + lam * step
            z2 = M @ np.concatenate([[1.0 + 0j], t2])
            n2 = np.linalg.norm(z2)
            if n2 > 1e-12 and np.linalg.norm(f.eval_lift(z2 / n2)) < r:
                tau = t2
                break
            lam *= 0.5
        else:
            return z
    return z


# ---------------------------------------------------------------------------
# PGL action and the contraction construction
# ---------------------------------------------------------------------------

def conjugate(f: RationalMapPk, A, B) -> RationalMapPk:
    """Lift of B o f o A^{-1}, gcd-reduced (degree is preserved)."""
    Af = as_fraction_matrix(A)
    Bf = as_fraction_matrix(B)
    Ainv = mat_inverse(Af)  # raises on singular input
    mat_inverse(Bf)
    inner = compose(f.lift, linear_polyvector(Ainv, f.k))
    comps = []
    for i in range(f.k + 1):
        acc = HomogeneousPoly.zero(f.k, inner.degree)
        for j in range(f.k + 1):
            if Bf[i][j] != 0:
                acc = acc + inner.components[j].scale(Bf[i][j])
        comps.append(acc)
    lift, _ = gcd_reduce(PolyVector(tuple(comps)))
    if lift.degree != f.d:
        raise ValueError(f"conjugation changed the degree: {lift.degree} != {f.d}")
    ind = None
    if f.indeterminacy is not None and not f.indeterminacy.proven_empty:
        ind = IndeterminacyData(
            witnesses=apply_matrix_points(Af, f.indeterminacy.witnesses),
            declared_dim=f.indeterminacy.declared_dim,
            source=f.indeterminacy.source)
    elif f.indeterminacy is not None:
        ind = f.indeterminacy
    return RationalMapPk(k=f.k, d=f.d, lift=lift,
                         label=f"conj({f.label})", indeterminacy=ind)


def conjugate_pair(pair: BirationalPair, A, B) -> BirationalPair:
    """The group action (A, B, f) -> B o f o A^{-1} applied to a validated pair."""
    fwd = conjugate(pair.forward, A, B)
    bwd = conjugate(pair.inverse, B, A)
    return validate_birational(fwd, bwd, s=pair.s)


@dataclass
class ContractionReport:
    lam: float
    s: int
    head_dim: int
    r: float
    n_checked: int
    min_head_fraction_orbit: float
    min_dist_to_iplus: float
    alpha: float
    tube_samples_ok: bool


def _head_fraction(Z: np.ndarray, head_dim: int) -> np.ndarray:
    Z = np.atleast_2d(Z)
    return (np.linalg.norm(Z[:, :head_dim], axis=1)
            / np.linalg.norm(Z, axis=1))


def contract_construct(source, lam, s: int, n_check: int = 20,
                       tube_samples: int = 256, seed: int = 0,
                       r: Optional[float] = None):
    """Compose with B0 = diag(lam,...,lam,1,...,1) and verify tube invariance.

    B0 scales the first k-s coordinates; the target subspace
    E = {z_0 = ... = z_{k-s-1} = 0} must avoid I(f) (checked on witnesses).
    Returns the contracted map; the verification report is attached as
    `contraction_report`.  Raises ContractionNotVerified when the requested
    lam fails the checks.
    """
    if isinstance(source, BirationalPair):
        f = source.forward
        iminus = source.inverse.indeterminacy
    else:
        f = source
        iminus = getattr(source, "inverse_indeterminacy", None)
    if iminus is None or iminus.proven_empty:
        raise ValueError("contract_construct needs witnesses of I(f^-1)")
    lam = Fraction(lam)
    if not 0 < lam <= 1:
        raise ValueError("lam must be in (0, 1]")
    k = f.k
    if not 1 <= s <= k - 1:
        raise ValueError(f"s must be in [1, {k - 1}]")
    head = k - s

    iplus = f.indeterminacy
    if iplus is None or iplus.proven_empty or len(iplus.witnesses) == 0:
        raise ValueError("contract_construct needs witnesses of I(f)")
    head_iplus = _head_fraction(iplus.witnesses, head)
    if head_iplus.min() < 1e-8:
        raise ContractionNotVerified(
            "target subspace E meets I(f) on the witnesses; pre-conjugate the map")
    r_val = float(r) if r is not None else float(head_iplus.min()) / 2.0

    # exact lift of B0 o f
    comps = list(f.lift.components)
    scaled = [comps[i].scale(lam) if i < head else comps[i] for i in range(k + 1)]
    lift, _ = gcd_reduce(PolyVector(tuple(scaled)))
    fb = RationalMapPk(k=k, d=f.d, lift=lift, label=f"contract({f.label},lam={lam})",
                       indeterminacy=f.indeterminacy)

    lamf = float(lam)
    rng = geometry.make_rng(seed, "contract", f.label)
    B0 = np.diag([lamf] * head + [1.0] * (s + 1)).astype(complex)

    # B0(I(f^{-1})) must start inside the tube
    w_minus = geometry.normalize(iminus.witnesses @ B0.T)
    if lamf < 1 and _head_fraction(w_minus, head).max() >= r_val:
        raise ContractionNotVerified(
            f"B0(I-) not inside the tube of radius {r_val:.3g}")

    # orbit of the I- witnesses under B0 o f
    pts = w_minus.copy()
    min_frac = float(_head_fraction(pts, head).min())
    min_dist = float(geometry.fs_distance_to_set(pts, iplus.witnesses).min())
    for _ in range(n_check):
        pts, n = fb.step(pts)
        if (n <= ORBIT_UNDERFLOW).any():
            raise ContractionNotVerified("witness orbit hit indeterminacy")
        fr = _head_fraction(pts, head)
        min_frac = min(min_frac, float(fr.min()))
        if lamf < 1 and fr.max() >= r_val:
            raise ContractionNotVerified(
                f"orbit escaped the tube at head fraction {fr.max():.3g} >= r={r_val:.3g}")
        min_dist = min(min_dist, float(geometry.fs_distance_to_set(pts, iplus.witnesses).min()))

    # sampled tube invariance f_B0(V) in V
    Zs = geometry.fs_uniform(k, tube_samples, rng)
    scale = rng.uniform(0.0, 1.0, size=tube_samples)
    Zs[:, :head] *= (r_val * 0.98 * scale / np.maximum(_head_fraction(Zs, head), 1e-12))[:, None]
    Zs = geometry.normalize(Zs)
    img, n = fb.step(Zs)
    ok = bool((n > ORBIT_UNDERFLOW).all()
              and (lamf == 1.0 or (_head_fraction(img, head) < r_val).all()))
    if not ok and lamf < 1:
        raise ContractionNotVerified("sampled tube points left the tube under B0 o f")

    # alpha: distance from I+ witnesses to the tube boundary, in head-fraction
    alpha = float(head_iplus.min()) - r_val
    fb.contraction_report = ContractionReport(
        lam=lamf, s=s, head_dim=head, r=r_val, n_checked=n_check,
        min_head_fraction_orbit=min_frac, min_dist_to_iplus=min_dist,
        alpha=alpha, tube_samples_ok=ok)
    return fb


# ---------------------------------------------------------------------------
# Lemma-style constants: ||Df(x)|| <= K d(x, I)^{-p}
# ---------------------------------------------------------------------------

def operator_norms(f: RationalMapPk, Z: np.ndarray) -> np.ndarray:
    """Largest singular value of the projective differential at unit rows Z."""
    FZ = f.eval_lift(Z)
    J = f.jacobian(Z)
    D, n = geometry.differential_frames(J, Z, FZ)
    sv = np.linalg.svd(D, compute_uv=False)
    out = sv[..., 0]
    out = np.where(n > ORBIT_UNDERFLOW, out, np.inf)
    return out


def calibrate_constants(f: RationalMapPk, I: Optional[IndeterminacyData] = None,
                        samples: int = 400, seed: int = 0) -> AnalyticConstants:
    """Fit (K, p) by least squares near I, inflate K 2x, verify on holdout."""
    if samples < 100:
        raise ValueError("need at least 100 samples")
    rng = geometry.make_rng(seed, "calibrate", f.label)
    if I is None:
        I = f.indeterminacy
    if I is None or I.proven_empty or len(np.atleast_2d(I.witnesses)) == 0:
        Z = geometry.fs_uniform(f.k, samples, rng)
        K = float(np.nanmax(operator_norms(f, Z)))
        return AnalyticConstants(K=K, p=0.0, sample_size=samples)

    wits = np.atleast_2d(I.witnesses)

    def draw(n: int) -> np.ndarray:
        base = wits[rng.integers(0, len(wits), size=n)]
        eps = np.exp(rng.uniform(np.log(1e-5), np.log(0.3), size=n))
        noise = rng.standard_normal((n, f.k + 1)) + 1j * rng.standard_normal((n, f.k + 1))
        return geometry.normalize(base + eps[:, None] * geometry.normalize(noise))

    Z = draw(samples)
    dists = geometry.fs_distance_to_set(Z, wits)
    ops = operator_norms(f, Z)
    good = np.isfinite(ops) & (ops > 0) & (dists > 1e-14)
    x = -np.log(dists[good])
    y = np.log(ops[good])
    p = max(float(np.polyfit(x, y, 1)[0]), 0.0)
    logK = float(np.max(y - p * x))
    K = 2.0 * float(np.exp(logK))

    holdout = draw(samples)
    dh = geometry.fs_distance_to_set(holdout, wits)
    oh = operator_norms(f, holdout)
    viol = int(np.sum(oh > K * dh ** (-p)))
    while viol > 0:
        K *= 2.0
        viol = int(np.sum(oh > K * dh ** (-p)))
    return AnalyticConstants(K=K, p=p, holdout_violations=viol, sample_size=samples)


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

def _unit(vals: Sequence[complex]) -> np.ndarray:
    v = np.array(vals, dtype=complex)
    return v / np.linalg.norm(v)


def henon(c=Fraction(3, 10), delta=Fraction(1, 2)) -> BirationalPair:
    """Henon map of C^2 in P^2: [x:y:t] -> [yt : y^2 + c t^2 - delta x t : t^2]."""
    c, delta = Fraction(c), Fraction(delta)
    if delta == 0:
        raise ValueError("delta must be nonzero")
    k = 2
    x, y, t = 0, 1, 2

    def mono(*e):
        return tuple(e)

    f1 = HomogeneousPoly.from_terms(k, {mono(0, 1, 1): 1})
    f2 = HomogeneousPoly.from_terms(k, {mono(0, 2, 0): 1, mono(0, 0, 2): c,
                                        mono(1, 0, 1): -delta})
    f3 = HomogeneousPoly.from_terms(k, {mono(0, 0, 2): 1})
    g1 = HomogeneousPoly.from_terms(k, {mono(2, 0, 0): 1, mono(0, 0, 2): c,
                                        mono(0, 1, 1): -1})
    g2 = HomogeneousPoly.from_terms(k, {mono(1, 0, 1): delta})
    g3 = HomogeneousPoly.from_terms(k, {mono(0, 0, 2): delta})
    label = f"henon(c={c},delta={delta})"
    fwd = RationalMapPk.from_lift(PolyVector((f1, f2, f3)), label,
                                  IndeterminacyData(
                                      witnesses=np.array([[1, 0, 0]], dtype=complex),
                                      declared_dim=0, source="exact",
                                      exact_points=[(Fraction(1), Fraction(0), Fraction(0))]),
                                  reduce=False)
    bwd = RationalMapPk.from_lift(PolyVector((g1, g2, g3)), label + "^-1",
                                  IndeterminacyData(
                                      witnesses=np.array([[0, 1, 0]], dtype=complex),
                                      declared_dim=0, source="exact",
                                      exact_points=[(Fraction(0), Fraction(1), Fraction(0))]),
                                  reduce=False)
    pair = validate_birational(fwd, bwd, s=1)
    pair.params = {"c": c, "delta": delta}
    return pair


def power_map(k: int, d: int) -> RationalMapPk:
    """Holomorphic power map [z_0^d : ... : z_k^d]; indeterminacy proven empty."""
    comps = tuple(HomogeneousPoly.variable(k, i, d) for i in range(k + 1))
    ind = IndeterminacyData(witnesses=np.zeros((0, k + 1)), declared_dim=-1, source="exact")
    return RationalMapPk.from_lift(PolyVector(comps), f"power(k={k},d={d})", ind,
                                   reduce=False)


def cremona_involution() -> BirationalPair:
    """sigma = [yz : xz : xy] on P^2; algebraically unstable (deg sigma^2 = 1)."""
    k = 2
    sigma = PolyVector((
        HomogeneousPoly.from_terms(k, {(0, 1, 1): 1}),
        HomogeneousPoly.from_terms(k, {(1, 0, 1): 1}),
        HomogeneousPoly.from_terms(k, {(1, 1, 0): 1}),
    ))
    pts = np.eye(3, dtype=complex)
    exact = [tuple(Fraction(int(v)) for v in row) for row in np.eye(3, dtype=int)]

    def make(labelled):
        return RationalMapPk.from_lift(sigma, labelled,
                                       IndeterminacyData(witnesses=pts.copy(),
                                                         declared_dim=0, source="exact",
                                                         exact_points=exact),
                                       reduce=False)

    return validate_birational(make("cremona"), make("cremona^-1"), s=1)


def p3_example() -> BirationalPair:
    """The P^3 pair [yz:xz:zt+y^2:z^2] / [yt:xt:t^2:zt-x^2].

    Both indeterminacy sets are lines (dimension 1), so the standing
    dimension hypothesis dim I+ = k-s-1, dim I- = s-1 has no consistent s;
    the pair is catalog-only for algebraic tests and carries s = None.
    """
    k = 3
    x, y, z, t = range(4)

    def tm(*pairs):
        terms = {}
        for coeff, exps in pairs:
            terms[tuple(exps)] = Fraction(coeff)
        return HomogeneousPoly.from_terms(k, terms)

    F = PolyVector((
        tm((1, (0, 1, 1, 0))),                      # yz
        tm((1, (1, 0, 1, 0))),                      # xz
        tm((1, (0, 0, 1, 1)), (1, (0, 2, 0, 0))),   # zt + y^2
        tm((1, (0, 0, 2, 0))),                      # z^2
    ))
    G = PolyVector((
        tm((1, (0, 1, 0, 1))),                      # yt
        tm((1, (1, 0, 0, 1))),                      # xt
        tm((1, (0, 0, 0, 2))),                      # t^2
        tm((1, (0, 0, 1, 1)), (-1, (2, 0, 0, 0))),  # zt - x^2
    ))

    def line_sampler(axes: Tuple[int, int]):
        def sample(n: int, rng: np.random.Generator) -> np.ndarray:
            ab = rng.standard_normal((n, 2)) + 1j * rng.standard_normal((n, 2))
            out = np.zeros((n, 4), dtype=complex)
            out[:, axes[0]] = ab[:, 0]
            out[:, axes[1]] = ab[:, 1]
            return geometry.normalize(out)
        return sample

    wp = np.zeros((3, 4), dtype=complex)
    wp[0, x] = 1
    wp[1, t] = 1
    wp[2, x] = wp[2, t] = 1 / np.sqrt(2)
    wm = np.zeros((3, 4), dtype=complex)
    wm[0, y] = 1
    wm[1, z] = 1
    wm[2, y] = wm[2, z] = 1 / np.sqrt(2)
    fwd = RationalMapPk.from_lift(F, "p3_example",
                                  IndeterminacyData(witnesses=wp, declared_dim=1,
                                                    source="exact",
                                                    sampler=line_sampler((x, t))),
                                  reduce=False)
    bwd = RationalMapPk.from_lift(G, "p3_example^-1",
                                  IndeterminacyData(witnesses=wm, declared_dim=1,
                                                    source="exact",
                                                    sampler=line_sampler((y, z))),
                                  reduce=False)
    return validate_birational(fwd, bwd, s=None)


def regular_auto_c3(c1=Fraction(3, 10), c2=Fraction(2, 5),
                    d1=Fraction(1, 2), d2=Fraction(1, 3)) -> BirationalPair:
    """Composition of two shift-like automorphisms of C^3: d = 4, delta = 2, s = 1.

    f = h2 o h1 with h(x,y,z) = (y, z, z^2 + c - delta x); I+ is the line
    {z = t = 0} (dim 1 = k-s-1) and I- the point [0:0:1:0] (dim 0 = s-1).
    """
    c1, c2, d1, d2 = map(Fraction, (c1, c2, d1, d2))
    if d1 == 0 or d2 == 0:
        raise ValueError("jacobian parameters must be nonzero")
    k = 3

    def shift(c, dl):
        # (x,y,z) -> (y, z, z^2 + c - dl*x) in P^3 coords [x:y:z:t]
        return PolyVector((
            HomogeneousPoly.from_terms(k, {(0, 1, 0, 1): 1}),
            HomogeneousPoly.from_terms(k, {(0, 0, 1, 1): 1}),
            HomogeneousPoly.from_terms(k, {(0, 0, 2, 0): 1, (0, 0, 0, 2): c,
                                           (1, 0, 0, 1): -dl}),
            HomogeneousPoly.from_terms(k, {(0, 0, 0, 2): 1}),
        ))

    def shift_inv(c, dl):
        # (X,Y,Z) -> ((Y^2 + c - Z)/dl, X, Y)
        return PolyVector((
            HomogeneousPoly.from_terms(k, {(0, 2, 0, 0): 1, (0, 0, 0, 2): c,
                                           (0, 0, 1, 1): -1}),
            HomogeneousPoly.from_terms(k, {(1, 0, 0, 1): dl}),
            HomogeneousPoly.from_terms(k, {(0, 1, 0, 1): dl}),
            HomogeneousPoly.from_terms(k, {(0, 0, 0, 2): dl}),
        ))

    Flift = compose(shift(c2, d2), shift(c1, d1))
    Flift, _ = gcd_reduce(Flift)
    Glift = compose(shift_inv(c1, d1), shift_inv(c2, d2))
    Glift, _ = gcd_reduce(Glift)
    label = f"regular_auto_c3(c1={c1},c2={c2},d1={d1},d2={d2})"

    def line_sampler(n: int, rng: np.random.Generator) -> np.ndarray:
        ab = rng.standard_normal((n, 2)) + 1j * rng.standard_normal((n, 2))
        out = np.zeros((n, 4), dtype=complex)
        out[:, 0] = ab[:, 0]
        out[:, 1] = ab[:, 1]
        return geometry.normalize(out)

    wp = np.zeros((3, 4), dtype=complex)
    wp[0, 0] = 1
    wp[1, 1] = 1
    wp[2, 0] = wp[2, 1] = 1 / np.sqrt(2)
    fwd = RationalMapPk.from_lift(Flift, label,
                                  IndeterminacyData(witnesses=wp, declared_dim=1,
                                                    source="exact", sampler=line_sampler),
                                  reduce=False)
    wm = np.zeros((1, 4), dtype=complex)
    wm[0, 2] = 1
    bwd = RationalMapPk.from_lift(Glift, label + "^-1",
                                  IndeterminacyData(
                                      witnesses=wm, declared_dim=0, source="exact",
                                      exact_points=[(Fraction(0), Fraction(0),
                                                     Fraction(1), Fraction(0))]),
                                  reduce=False)
    pair = validate_birational(fwd, bwd, s=1)
    pair.params = {"c1": c1, "c2": c2, "d1": d1, "d2": d2}
    return pair


CATALOG: Dict[str, Callable[[], object]] = {
    "henon": henon,
    "henon_horseshoe": lambda: henon(Fraction(-6), Fraction(1, 2)),
    "cremona": cremona_involution,
    "p3_example": p3_example,
    "power_p1_d2": lambda: power_map(1, 2),
    "power_p2_d2": lambda: power_map(2, 2),
    "regular_auto_c3": regular_auto_c3,
}


def catalog_get(label: str):
    if label not in CATALOG:
        raise KeyError(f"unknown catalog map {label!r}; known: {sorted(CATALOG)}")
    return CATALOG[label]()
