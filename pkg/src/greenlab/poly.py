"""Exact sparse homogeneous polynomial arithmetic over the rationals.

A homogeneous polynomial in k+1 variables is a dict mapping exponent tuples
(length k+1, summing to the degree) to nonzero Fraction coefficients.  All
algebra (addition, multiplication, composition, differentiation, gcd) is
exact; a separate floating path evaluates polynomials on numpy arrays or,
for precision above 53 bits, through mpmath.

Monomials are ordered graded-lexicographically for canonical output and
serialization.  Term growth under composition is capped (default 4096 terms
per component) and exceeding the cap raises TermCapExceeded rather than
silently churning.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

import mpmath
import numpy as np

Monomial = Tuple[int, ...]
Terms = Dict[Monomial, Fraction]

DEFAULT_TERM_CAP = 4096


class DimensionMismatch(ValueError):
    """Operands live in different ambient dimensions."""


class TermCapExceeded(RuntimeError):
    """A product or composition grew past the configured term cap."""

    def __init__(self, cap: int, at_terms: int):
        super().__init__(f"term cap {cap} exceeded (reached {at_terms} terms)")
        self.cap = cap
        self.at_terms = at_terms


class ZeroMapError(ValueError):
    """All components of a polynomial vector are zero."""


def _grlex_key(mono: Monomial) -> Tuple:
    return (sum(mono), tuple(-e for e in mono))


def _clean(terms: Terms) -> Terms:
    return {m: c for m, c in terms.items() if c != 0}


@dataclass(frozen=True)
class HomogeneousPoly:
    """Sparse homogeneous polynomial with exact rational coefficients."""

    k: int
    degree: int
    terms: Terms = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", _clean(dict(self.terms)))
        for mono, _ in self.terms.items():
            if len(mono) != self.k + 1:
                raise DimensionMismatch(
                    f"monomial {mono} has {len(mono)} slots, expected {self.k + 1}")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            if sum(mono) != self.degree:
                raise ValueError(
                    f"monomial {mono} has degree {sum(mono)}, expected {self.degree}")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(k: int, degree: int = 0) -> "HomogeneousPoly":
        return HomogeneousPoly(k, degree, {})

    @staticmethod
    def constant(k: int, value) -> "HomogeneousPoly":
        c = Fraction(value)
        if c == 0:
            return HomogeneousPoly.zero(k)
        return HomogeneousPoly(k, 0, {(0,) * (k + 1): c})

    @staticmethod
    def variable(k: int, idx: int, degree: int = 1) -> "HomogeneousPoly":
        if not 0 <= idx <= k:
            raise ValueError(f"variable index {idx} out of range for k={k}")
        exp = [0] * (k + 1)
        exp[idx] = degree
        return HomogeneousPoly(k, degree, {tuple(exp): Fraction(1)})

    @staticmethod
    def from_terms(k: int, raw: Dict[Monomial, object]) -> "HomogeneousPoly":
        terms = {tuple(m): Fraction(c) for m, c in raw.items() if Fraction(c) != 0}
        if not terms:
            return HomogeneousPoly.zero(k)
        degs = {sum(m) for m in terms}
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous terms: degrees {sorted(degs)}")
        return HomogeneousPoly(k, degs.pop(), terms)

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def num_terms(self) -> int:
        return len(self.terms)

    def sorted_terms(self) -> List[Tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomogeneousPoly):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __hash__(self):
        return hash((self.k, tuple(self.sorted_terms())))

    def __repr__(self):
        if self.is_zero():
            return f"HomogeneousPoly(k={self.k}, 0)"
        bits = []
        for mono, c in self.sorted_terms()[:6]:
            vars_ = "*".join(f"z{i}^{e}" if e > 1 else f"z{i}"
                             for i, e in enumerate(mono) if e)
            bits.append(f"{c}*{vars_}" if vars_ else str(c))
        tail = " + ..." if self.num_terms() > 6 else ""
        return f"HomogeneousPoly(k={self.k}, deg={self.degree}: " + " + ".join(bits) + tail + ")"

    # -- exact algebra -----------------------------------------------------

    def _check_same_space(self, other: "HomogeneousPoly"):
        if self.k != other.k:
            raise DimensionMismatch(f"k mismatch: {self.k} vs {other.k}")

    def __add__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        self._check_same_space(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.degree != other.degree:
            raise ValueError("cannot add homogeneous polynomials of different degree")
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        out = _clean(out)
        if not out:
            return HomogeneousPoly.zero(self.k)
        return HomogeneousPoly(self.k, self.degree, out)

    def __neg__(self) -> "HomogeneousPoly":
        return HomogeneousPoly(self.k, self.degree, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        return self + (-other)

    def scale(self, factor) -> "HomogeneousPoly":
        c = Fraction(factor)
        if c == 0:
            return HomogeneousPoly.zero(self.k)
        return HomogeneousPoly(self.k, self.degree, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other) -> "HomogeneousPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_same_space(other)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def diff(self, var: int) -> "HomogeneousPoly":
        """Partial derivative with respect to variable `var` (exact)."""
        out: Terms = {}
        for mono, c in self.terms.items():
            e = mono[var]
            if e == 0:
                continue
            m2 = list(mono)
            m2[var] = e - 1
            key = tuple(m2)
            out[key] = out.get(key, Fraction(0)) + c * e
        if not out:
            return HomogeneousPoly.zero(self.k, max(self.degree - 1, 0))
        return HomogeneousPoly(self.k, self.degree - 1, _clean(out))

    # -- evaluation --------------------------------------------------------

    def eval_exact(self, Z: Sequence) -> Fraction:
        """Exact rational value at a rational point."""
        if len(Z) != self.k + 1:
            raise DimensionMismatch(f"point has {len(Z)} coordinates, expected {self.k + 1}")
        Zf = [Fraction(z) for z in Z]
        total = Fraction(0)
        for mono, c in self.terms.items():
            v = c
            for z, e in zip(Zf, mono):
                if e:
                    v *= z ** e
            total += v
        return total

    def eval_float(self, Z: Sequence, precision: int = 53):
        """Complex floating value; precision >= 53 bits (mpmath above 53)."""
        if precision < 53:
            raise ValueError("precision must be >= 53 bits")
        if len(Z) != self.k + 1:
            raise DimensionMismatch(f"point has {len(Z)} coordinates, expected {self.k + 1}")
        if precision == 53:
            Zc = [complex(z) for z in Z]
            total = 0j
            for mono, c in self.terms.items():
                v = complex(c)
                for z, e in zip(Zc, mono):
                    if e:
                        v *= z ** e
                total += v
            return total
        with mpmath.workprec(precision):
            Zm = [mpmath.mpc(z) for z in Z]
            total = mpmath.mpc(0)
            for mono, c in self.terms.items():
                v = mpmath.mpc(c.numerator) / c.denominator
                for z, e in zip(Zm, mono):
                    if e:
                        v *= z ** e
                total += v
            return total

    def eval_array(self, Z: np.ndarray) -> np.ndarray:
        """Vectorized complex evaluation; Z has shape (..., k+1)."""
        Z = np.asarray(Z)
        if Z.shape[-1] != self.k + 1:
            raise DimensionMismatch(f"array has {Z.shape[-1]} coordinates, expected {self.k + 1}")
        if not self.terms:
            return np.zeros(Z.shape[:-1], dtype=complex)
        # power tables per variable up to max exponent
        maxexp = [0] * (self.k + 1)
        for mono in self.terms:
            for i, e in enumerate(mono):
                maxexp[i] = max(maxexp[i], e)
        powers = []
        for i in range(self.k + 1):
            col = np.asarray(Z[..., i], dtype=complex)
            tab = [np.ones_like(col)]
            for _ in range(maxexp[i]):
                tab.append(tab[-1] * col)
            powers.append(tab)
        total = np.zeros(Z.shape[:-1], dtype=complex)
        for mono, c in self.terms.items():
            v = np.full(Z.shape[:-1], complex(c))
            for i, e in enumerate(mono):
                if e:
                    v = v * powers[i][e]
            total += v
        return total

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "degree": self.degree,
            "terms": [
                {"exp": list(m), "num": str(c.numerator), "den": str(c.denominator)}
                for m, c in self.sorted_terms()
            ],
        }

    @staticmethod
    def from_json_dict(d: dict) -> "HomogeneousPoly":
        terms = {
            tuple(t["exp"]): Fraction(int(t["num"]), int(t["den"]))
            for t in d["terms"]
        }
        p = HomogeneousPoly.from_terms(d["k"], terms)
        if p.is_zero():
            return HomogeneousPoly.zero(d["k"], d.get("degree", 0))
        if p.degree != d["degree"]:
            raise ValueError(f"declared degree {d['degree']} != actual {p.degree}")
        return p

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @staticmethod
    def from_json(s: str) -> "HomogeneousPoly":
        return HomogeneousPoly.from_json_dict(json.loads(s))


def poly_mul(a: HomogeneousPoly, b: HomogeneousPoly,
             term_cap: int = DEFAULT_TERM_CAP) -> HomogeneousPoly:
    """Exact product of homogeneous polynomials (cap on result terms)."""
    if a.k != b.k:
        raise DimensionMismatch(f"k mismatch: {a.k} vs {b.k}")
    if a.is_zero() or b.is_zero():
        return HomogeneousPoly.zero(a.k, a.degree + b.degree)
    out: Terms = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            out[m] = out.get(m, Fraction(0)) + ca * cb
        if len(out) > 4 * term_cap:
            raise TermCapExceeded(term_cap, len(out))
    out = _clean(out)
    if len(out) > term_cap:
        raise TermCapExceeded(term_cap, len(out))
    if not out:
        return HomogeneousPoly.zero(a.k, a.degree + b.degree)
    return HomogeneousPoly(a.k, a.degree + b.degree, out)


def poly_pow(p: HomogeneousPoly, e: int, term_cap: int = DEFAULT_TERM_CAP) -> HomogeneousPoly:
    if e < 0:
        raise ValueError("negative power")
    result = HomogeneousPoly.constant(p.k, 1)
    base = p
    while e:
        if e & 1:
            result = poly_mul(result, base, term_cap)
        e >>= 1
        if e:
            base = poly_mul(base, base, term_cap)
    return result


@dataclass(frozen=True)
class PolyVector:
    """k+1 homogeneous components of a common degree (a lift of a map on P^k)."""

    components: Tuple[HomogeneousPoly, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        ks = {p.k for p in comps}
        if len(ks) != 1:
            raise DimensionMismatch(f"mixed ambient dimensions {sorted(ks)}")
        k = ks.pop()
        if len(comps) != k + 1:
            raise DimensionMismatch(f"{len(comps)} components for k={k}")
        degs = {p.degree for p in comps if not p.is_zero()}
        if len(degs) > 1:
            raise ValueError(f"components of mixed degree {sorted(degs)}")

    @property
    def k(self) -> int:
        return self.components[0].k

    @property
    def degree(self) -> int:
        for p in self.components:
            if not p.is_zero():
                return p.degree
        return 0

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.components)

    @staticmethod
    def identity(k: int) -> "PolyVector":
        return PolyVector(tuple(HomogeneousPoly.variable(k, i) for i in range(k + 1)))

    def is_scalar_multiple_of_identity(self) -> bool:
        """True when components are (c*z_0, ..., c*z_k) for a single scalar c."""
        if self.degree != 1:
            return False
        c = None
        for i, p in enumerate(self.components):
            mono = [0] * (self.k + 1)
            mono[i] = 1
            want = tuple(mono)
            if set(p.terms) != {want}:
                return False
            ci = p.terms[want]
            if c is None:
                c = ci
            elif ci != c:
                return False
        return c is not None

    def eval_exact(self, Z: Sequence) -> List[Fraction]:
        return [p.eval_exact(Z) for p in self.components]

    def eval_array(self, Z: np.ndarray) -> np.ndarray:
        """Shape (..., k+1) -> (..., k+1)."""
        vals = [p.eval_array(Z) for p in self.components]
        return np.stack(vals, axis=-1)

    def eval_float(self, Z: Sequence, precision: int = 53):
        return [p.eval_float(Z, precision) for p in self.components]

    def max_terms(self) -> int:
        return max(p.num_terms() for p in self.components)

    def to_json_dict(self) -> dict:
        return {"components": [p.to_json_dict() for p in self.components]}

    @staticmethod
    def from_json_dict(d: dict) -> "PolyVector":
        return PolyVector(tuple(HomogeneousPoly.from_json_dict(c) for c in d["components"]))


def compose(F: PolyVector, G: PolyVector, term_cap: int = DEFAULT_TERM_CAP) -> PolyVector:
    """Components F_i(G_0, ..., G_k); degree multiplies (before any reduction)."""
    if F.k != G.k:
        raise DimensionMismatch(f"k mismatch: {F.k} vs {G.k}")
    k = F.k
    maxexp = [0] * (k + 1)
    for p in F.components:
        for mono in p.terms:
            for i, e in enumerate(mono):
                maxexp[i] = max(maxexp[i], e)
    # power tables of the G components
    gpow: List[List[HomogeneousPoly]] = []
    for i in range(k + 1):
        tab = [HomogeneousPoly.constant(k, 1)]
        for _ in range(maxexp[i]):
            tab.append(poly_mul(tab[-1], G.components[i], term_cap))
        gpow.append(tab)
    out = []
    target_deg = F.degree * G.degree
    for p in F.components:
        acc = HomogeneousPoly.zero(k, target_deg)
        for mono, c in p.terms.items():
            term = HomogeneousPoly.constant(k, c)
            for i, e in enumerate(mono):
                if e:
                    term = poly_mul(term, gpow[i][e], term_cap)
            if acc.is_zero():
                acc = term
            elif term.is_zero():
                pass
            else:
                acc = acc + term
            if acc.num_terms() > term_cap:
                raise TermCapExceeded(term_cap, acc.num_terms())
        if acc.is_zero():
            acc = HomogeneousPoly.zero(k, target_deg)
        out.append(acc)
    return PolyVector(tuple(out))


def partial_derivatives(F: PolyVector) -> List[List[HomogeneousPoly]]:
    """Jacobian matrix of polynomials: entry (i, j) = dF_i/dz_j."""
    return [[p.diff(j) for j in range(F.k + 1)] for p in F.components]


# ---------------------------------------------------------------------------
# multivariate gcd (content/primitive-part recursion with fast exits)
# ---------------------------------------------------------------------------
#
# Internal representation for the gcd machinery: plain sparse dicts
# exponent-tuple -> Fraction, not necessarily homogeneous (specializations
# are).  Only what the gcd needs is implemented.

_SP = Dict[Monomial, Fraction]

_GCD_RNG = random.Random(0x6C6C)  # fixed stream: gcd certificates are deterministic


def _sp_is_zero(f: _SP) -> bool:
    return not f


def _sp_mul(a: _SP, b: _SP) -> _SP:
    out: _SP = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            v = out.get(m, Fraction(0)) + ca * cb
            if v:
                out[m] = v
            elif m in out:
                del out[m]
    return out


def _sp_sub(a: _SP, b: _SP) -> _SP:
    out = dict(a)
    for m, c in b.items():
        v = out.get(m, Fraction(0)) - c
        if v:
            out[m] = v
        elif m in out:
            del out[m]
    return out


def _sp_scale(a: _SP, c: Fraction) -> _SP:
    if c == 0:
        return {}
    return {m: v * c for m, v in a.items()}


def _sp_deg_in(f: _SP, v: int) -> int:
    return max((m[v] for m in f), default=-1)


def _sp_lead(f: _SP) -> Tuple[Monomial, Fraction]:
    m = max(f, key=_grlex_key)
    return m, f[m]


def _sp_divides(md: Monomial, mn: Monomial) -> bool:
    return all(a <= b for a, b in zip(md, mn))


def _sp_div_exact(f: _SP, g: _SP) -> _SP:
    """Exact division f/g; raises ArithmeticError if g does not divide f."""
    if _sp_is_zero(g):
        raise ZeroDivisionError("division by zero polynomial")
    q: _SP = {}
    rem = dict(f)
    gm, gc = _sp_lead(g)
    while rem:
        fm, fc = _sp_lead(rem)
        if not _sp_divides(gm, fm):
            raise ArithmeticError("not an exact polynomial division")
        qm = tuple(a - b for a, b in zip(fm, gm))
        qc = fc / gc
        q[qm] = q.get(qm, Fraction(0)) + qc
        rem = _sp_sub(rem, _sp_mul({qm: qc}, g))
    return q


def _sp_coeffs_in(f: _SP, v: int) -> Dict[int, _SP]:
    """View f as a polynomial in variable v with sparse-poly coefficients."""
    out: Dict[int, _SP] = {}
    for m, c in f.items():
        e = m[v]
        m2 = list(m)
        m2[v] = 0
        key = tuple(m2)
        coeff = out.setdefault(e, {})
        coeff[key] = coeff.get(key, Fraction(0)) + c
    return {e: _clean(c) for e, c in out.items() if _clean(c)}


def _sp_from_coeffs(coeffs: Dict[int, _SP], v: int) -> _SP:
    out: _SP = {}
    for e, sub in coeffs.items():
        for m, c in sub.items():
            m2 = list(m)
            m2[v] = m2[v] + e
            key = tuple(m2)
            out[key] = out.get(key, Fraction(0)) + c
    return _clean(out)


def _sp_normalize(f: _SP) -> _SP:
    """Scale so integer coefficients are coprime and the leading one positive."""
    if _sp_is_zero(f):
        return f
    denlcm = 1
    for c in f.values():
        denlcm = denlcm * c.denominator // math.gcd(denlcm, c.denominator)
    numgcd = 0
    for c in f.values():
        numgcd = math.gcd(numgcd, abs(c.numerator * (denlcm // c.denominator)))
    scale = Fraction(denlcm, numgcd)
    out = _sp_scale(f, scale)
    _, lc = _sp_lead(out)
    if lc < 0:
        out = _sp_scale(out, Fraction(-1))
    return out


def _sp_vars(f: _SP) -> List[int]:
    n = len(next(iter(f)))
    return [v for v in range(n) if _sp_deg_in(f, v) > 0]


def _sp_prem(f: _SP, g: _SP, v: int) -> _SP:
    """Pseudo-remainder of f by g with respect to variable v."""
    df, dg = _sp_deg_in(f, v), _sp_deg_in(g, v)
    if df < dg:
        return dict(f)
    gc = _sp_coeffs_in(g, v)
    lcg = gc[dg]
    rem = dict(f)
    while not _sp_is_zero(rem):
        dr = _sp_deg_in(rem, v)
        if dr < dg:
            break
        rc = _sp_coeffs_in(rem, v)
        lcr = rc[dr]
        # rem <- lcg*rem - lcr * v^(dr-dg) * g
        shift = [0] * len(next(iter(g)))
        shift[v] = dr - dg
        rem = _sp_sub(_sp_mul(lcg, rem), _sp_mul(_sp_mul(lcr, {tuple(shift): Fraction(1)}), g))
    return rem


def _sp_content_pp(f: _SP, v: int) -> Tuple[_SP, _SP]:
    coeffs = list(_sp_coeffs_in(f, v).values())
    cont = coeffs[0]
    for c in coeffs[1:]:
        cont = _sp_gcd(cont, c)
        if _sp_is_constant(cont):
            cont = _sp_one_like(f)
            break
    pp = _sp_div_exact(f, cont)
    return cont, pp


def _sp_is_constant(f: _SP) -> bool:
    return len(f) == 1 and sum(next(iter(f))) == 0


def _sp_one_like(f: _SP) -> _SP:
    n = len(next(iter(f)))
    return {(0,) * n: Fraction(1)}


def _sp_gcd(f: _SP, g: _SP) -> _SP:
    """Primitive gcd via content/primitive-part recursion (normalized)."""
    if _sp_is_zero(f):
        return _sp_normalize(g) if not _sp_is_zero(g) else {}
    if _sp_is_zero(g):
        return _sp_normalize(f)
    fv, gv = set(_sp_vars(f)), set(_sp_vars(g))
    common = fv & gv
    if not common:
        # a common divisor would involve shared variables only; none here
        return _sp_one_like(f)
    # recurse on the common variable of lowest max-degree (design choice:
    # pseudo-remainder growth is smallest there)
    v = min(common, key=lambda w: max(_sp_deg_in(f, w), _sp_deg_in(g, w)))
    cf, fpp = _sp_content_pp(f, v)
    cg, gpp = _sp_content_pp(g, v)
    cont = _sp_gcd(cf, cg)
    A, B = (fpp, gpp) if _sp_deg_in(fpp, v) >= _sp_deg_in(gpp, v) else (gpp, fpp)
    while True:
        dB = _sp_deg_in(B, v)
        if dB <= 0:
            # B free of v and nonzero: the primitive parts are coprime
            g_pp = _sp_one_like(f)
            break
        R = _sp_prem(A, B, v)
        if _sp_is_zero(R):
            _, g_pp = _sp_content_pp(B, v)
            break
        _, R = _sp_content_pp(R, v)
        A, B = B, R
    return _sp_normalize(_sp_mul(cont, g_pp))


def _sp_gcd_is_one_certificate(polys: List[_SP]) -> bool:
    """Sound one-sided test: True means the primitive gcd is 1.

    Specializing all but one variable at random rationals can only inflate
    the univariate gcd, never deflate it; a degree-0 univariate gcd therefore
    certifies degree 0 of the true gcd in that variable.
    """
    n = len(next(iter(polys[0])))
    active = set()
    for f in polys:
        active.update(_sp_vars(f))
    if not active:
        return True
    for v in sorted(active):
        ok = False
        for _ in range(4):  # retry unlucky (degenerate) specializations
            vals = [Fraction(_GCD_RNG.randint(-997, 997), _GCD_RNG.randint(1, 97))
                    for _ in range(n)]
            univs = []
            degenerate = False
            for f in polys:
                coeffs: Dict[int, Fraction] = {}
                for m, c in f.items():
                    val = c
                    for i, e in enumerate(m):
                        if i != v and e:
                            val *= vals[i] ** e
                    coeffs[m[v]] = coeffs.get(m[v], Fraction(0)) + val
                coeffs = {e: c for e, c in coeffs.items() if c != 0}
                if not coeffs:
                    degenerate = True
                    break
                if max(coeffs) != _sp_deg_in(f, v):
                    degenerate = True  # leading coefficient vanished: retry
                    break
                univs.append(coeffs)
            if degenerate:
                continue
            if _univ_gcd_degree(univs) == 0:
                ok = True
                break
        if not ok:
            return False
    return True


def _univ_gcd_degree(univs: List[Dict[int, Fraction]]) -> int:
    def to_list(d: Dict[int, Fraction]) -> List[Fraction]:
        deg = max(d)
        out = [Fraction(0)] * (deg + 1)
        for e, c in d.items():
            out[e] = c
        return out

    def gcd1(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
        while b and any(c != 0 for c in b):
            a, b = b, _poly1_mod(a, b)
        return a

    g = to_list(univs[0])
    for u in univs[1:]:
        g = gcd1(g, to_list(u))
        if len(g) == 1:
            return 0
    return len(g) - 1


def _poly1_mod(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    a = list(a)
    while len(b) > 1 and b[-1] == 0:
        b.pop()
    db = len(b) - 1
    while len(a) - 1 >= db and any(c != 0 for c in a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        q = a[-1] / b[-1]
        shift = len(a) - 1 - db
        for i in range(db + 1):
            a[shift + i] -= q * b[i]
        a.pop()
    return a


def _monomial_content(polys: List[_SP]) -> Monomial:
    n = len(next(iter(polys[0])))
    mins = [None] * n
    for f in polys:
        for m in f:
            for i, e in enumerate(m):
                mins[i] = e if mins[i] is None else min(mins[i], e)
    return tuple(int(m or 0) for m in mins)


def gcd_many(polys: Sequence[HomogeneousPoly]) -> HomogeneousPoly:
    """Gcd of several homogeneous polynomials (primitive, positive leading)."""
    ps = [p for p in polys if not p.is_zero()]
    if not ps:
        raise ZeroMapError("gcd of all-zero polynomials")
    k = ps[0].k
    sps: List[_SP] = [dict(p.terms) for p in ps]
    # peel the common monomial factor first (the dominant catalog case)
    mono = _monomial_content(sps)
    if any(mono):
        sps = [{tuple(a - b for a, b in zip(m, mono)): c for m, c in f.items()} for f in sps]
    g: _SP = {(0,) * (k + 1): Fraction(1)}
    if not _sp_gcd_is_one_certificate(sps):
        g = sps[0]
        for f in sps[1:]:
            g = _sp_gcd(g, f)
            if _sp_is_constant(g):
                break
    if any(mono):
        g = {tuple(a + b for a, b in zip(m, mono)): c for m, c in g.items()}
    g = _sp_normalize(g)
    return HomogeneousPoly.from_terms(k, g)


def gcd_reduce(F: PolyVector) -> Tuple[PolyVector, HomogeneousPoly]:
    """Return (F', g) with F = g * F' and components of F' coprime."""
    if F.is_zero():
        raise ZeroMapError("cannot reduce the zero map")
    g = gcd_many(F.components)
    if g.degree == 0 and g.terms.get((0,) * (F.k + 1)) == 1:
        return F, HomogeneousPoly.constant(F.k, 1)
    gd = dict(g.terms)
    comps = []
    for p in F.components:
        if p.is_zero():
            comps.append(HomogeneousPoly.zero(F.k, F.degree - g.degree))
            continue
        q = _sp_div_exact(dict(p.terms), gd)
        comps.append(HomogeneousPoly.from_terms(F.k, q))
    return PolyVector(tuple(comps)), g
