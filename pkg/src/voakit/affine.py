"""Affine weights for the untwisted affinizations of B4 and F4.

An affine weight is stored as (level, finite part, delta coefficient) with
respect to the decomposition lam = level*Lambda_0 + finite + delta_coeff*delta.
Real coroots (alpha + n delta)^vee = alpha^vee + n(2/(alpha,alpha))c are kept
as (finite root, layer) pairs.

The admissibility test follows the two Kac-Wakimoto conditions: (i) the
pairing of lam + rho with every positive real coroot avoids -Z_{>=0}, checked
through a finite arithmetic-progression scan per root, and (ii) the integral
coroots span all of Q Pi^vee, with the simple subset Pi_lam^vee extracted as
the integral positive coroots that are not sums of two or more integral
positive coroots.
"""

from fractions import Fraction
from functools import lru_cache
from math import ceil

from .exact import ExactMatrix, scalar, scalar_str, solve_linear
from . import rootsys
from .rootsys import Weight, coroot


class AffineWeight:
    __slots__ = ("level", "finite", "delta_coeff")

    def __init__(self, level, finite=None, delta_coeff=0):
        self.level = scalar(level)
        self.finite = finite if finite is not None else rootsys.ZERO
        self.delta_coeff = scalar(delta_coeff)

    def __add__(self, other):
        return AffineWeight(self.level + other.level,
                            self.finite + other.finite,
                            self.delta_coeff + other.delta_coeff)

    def __sub__(self, other):
        return AffineWeight(self.level - other.level,
                            self.finite - other.finite,
                            self.delta_coeff - other.delta_coeff)

    def __eq__(self, other):
        return (isinstance(other, AffineWeight)
                and self.level == other.level
                and self.finite == other.finite
                and self.delta_coeff == other.delta_coeff)

    def __hash__(self):
        return hash((self.level, self.finite, self.delta_coeff))

    def __repr__(self):
        return "AffineWeight(level=%s, finite=%r, delta=%s)" % (
            scalar_str(self.level), self.finite, scalar_str(self.delta_coeff))

    def to_json(self):
        return {"level": scalar_str(self.level),
                "finite": self.finite.to_json(),
                "delta": scalar_str(self.delta_coeff)}


class RealCoroot:
    """(finite_root + layer*delta)^vee; positive iff layer > 0 or layer = 0 and root > 0."""

    __slots__ = ("finite_root", "layer")

    def __init__(self, finite_root, layer=0):
        self.finite_root = finite_root
        self.layer = int(layer)

    def key(self):
        return (self.layer, self.finite_root.coords)

    def __eq__(self, other):
        return isinstance(other, RealCoroot) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "RealCoroot(%r, layer=%d)" % (self.finite_root, self.layer)

    def vector(self):
        """5-vector (coroot eps-coordinates, c-coefficient)."""
        cv = coroot(self.finite_root)
        return cv.coords + (self.layer * Fraction(2) / self.finite_root.norm_sq(),)

    def to_json(self):
        return {"finite": self.finite_root.to_json(), "layer": self.layer}


def dual_coxeter(label):
    rs = rootsys.build(label)
    return 1 + int(rootsys.rho_bar(label).dot(coroot(rs.theta())))


def rho(label):
    """The affine Weyl vector rho = rho_bar + h_vee Lambda_0."""
    return AffineWeight(dual_coxeter(label), rootsys.rho_bar(label), 0)


def lambda_n(n):
    """The F4 affine weight (n - 7/2) Lambda_0."""
    return AffineWeight(Fraction(2 * n - 7, 2))


def pair(lam, c):
    """<lam, (alpha + n delta)^vee>, exact."""
    a = c.finite_root
    return lam.finite.dot(coroot(a)) + c.layer * Fraction(2) / a.norm_sq() * lam.level


def shifted_reflect(c, lam, label):
    """The shifted reflection r_alpha . lam = lam - <lam + rho, alpha^vee> alpha."""
    p = pair(lam + rho(label), c)
    return AffineWeight(lam.level,
                        lam.finite - p * c.finite_root,
                        lam.delta_coeff - p * c.layer)


def lowest_conformal_weight(label, k, mu):
    """(mu, mu + 2 rho_bar) / (2(k + h_vee))."""
    k = scalar(k)
    h = dual_coxeter(label)
    if k + h == 0:
        raise ValueError("critical level")
    return mu.dot(mu + 2 * rootsys.rho_bar(label)) / (2 * (k + h))


def central_charge(label, k):
    k = scalar(k)
    h = dual_coxeter(label)
    if k + h == 0:
        raise ValueError("critical level")
    dim = len(rootsys.build(label).roots) + 4
    return k * dim / (k + h)


def _scan_bound(c0, s):
    """Past this layer the progression c0 + n*s stays positive."""
    return max(0, ceil(-c0 / s)) + 1


def is_admissible(lam, label):
    """Kac-Wakimoto admissibility; returns (flag, Pi^vee list or None).

    When admissible, the returned list holds the simple coroots of the
    integral subsystem, sorted by (layer, root coordinates).
    """
    rs = rootsys.build(label)
    h = dual_coxeter(label)
    m = lam.level + h
    if m <= 0:
        raise ValueError("level + dual Coxeter number must be positive")
    lr = lam + rho(label)

    # condition (i): no positive real coroot pairs into -Z>=0
    for a in rs.roots:
        s = Fraction(2) / a.norm_sq() * m
        c0 = lr.finite.dot(coroot(a))
        n_min = 0 if rs.height(a) > 0 else 1
        for n in range(n_min, _scan_bound(c0, s) + 1):
            v = c0 + n * s
            if v.denominator == 1 and v <= 0:
                return False, None

    # integral positive coroots up to the layer bound
    max_period = max((Fraction(2) / a.norm_sq() * m).denominator for a in rs.roots)
    layer_bound = 2 * max_period * h
    integral = []
    by_vector = {}
    for a in rs.roots:
        s = Fraction(2) / a.norm_sq() * m
        c0 = lr.finite.dot(coroot(a))
        n_min = 0 if rs.height(a) > 0 else 1
        for n in range(n_min, layer_bound + 1):
            if (c0 + n * s).denominator == 1:
                cr = RealCoroot(a, n)
                integral.append(cr)
                by_vector[cr.vector()] = cr

    # condition (ii): integral coroots span the full 5-dimensional lattice
    if ExactMatrix([list(c.vector()) for c in integral]).rank() != 5:
        return False, None

    def phi(vec):
        return sum(x * y for x, y in zip(vec[:4], lr.finite.coords)) + vec[4] * m

    # Every integral positive coroot pairs to a positive integer under
    # lam + rho, so phi is an additive size function: any decomposition
    # refines into indecomposables of strictly smaller phi.  Processing
    # candidates by increasing phi means every smaller coroot is already a
    # Z>=0-combination of the simples found so far, so decomposability is
    # just membership in their positive cone.
    items = sorted(((c, phi(c.vector())) for c in integral), key=lambda t: t[1])
    simples = []
    for c, pv in items:
        if not _in_positive_cone(c.vector(), simples, pv):
            simples.append((c, pv))
    out = [c for c, _ in simples]
    out.sort(key=RealCoroot.key)
    return True, out


def _in_positive_cone(vec, simples, budget):
    """Whether vec is a Z>=0-combination of the given (coroot, phi) pairs.

    Linearly independent generators (the generic case) need one exact solve;
    otherwise fall back to a search bounded by the phi budget, which
    terminates since every generator has phi >= 1.
    """
    if not simples:
        return False
    rows = [[s.vector()[r] for s, _ in simples] for r in range(5)]
    status, sol = solve_linear(rows, list(vec))
    if status == "inconsistent":
        return False
    if status == "unique":
        return all(c.denominator == 1 and c >= 0 for c in sol)
    if budget < 1:
        return False
    for s, pu in simples:
        if pu > budget:
            continue
        rem = tuple(x - y for x, y in zip(vec, s.vector()))
        if all(x == 0 for x in rem):
            return True
        if _in_positive_cone(rem, simples, budget - pu):
            return True
    return False
