"""Root systems of types B4 and F4 in a shared epsilon-coordinate space.

Four systems are supported: F4, the standard B4 subsystem, and two further
B4-shaped subsystems of the F4 roots (labelled B4prime and B4doubleprime)
whose simple roots involve the half-integer F4 roots.  All live inside the
same rational 4-space with the inner product (eps_i, eps_j) = delta_ij,
which is the invariant form normalized so the highest root theta = e1+e2
has squared length 2.  Short roots have squared length 1, long roots 2.
"""

from fractions import Fraction
from functools import lru_cache

from .exact import scalar, scalar_str, solve_linear


class Weight:
    """A rational vector in epsilon-coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(scalar(c) for c in coords)
        assert len(self.coords) == 4

    def __add__(self, other):
        return Weight([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        return Weight([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return Weight([-a for a in self.coords])

    def __mul__(self, c):
        c = scalar(c)
        return Weight([a * c for a in self.coords])

    __rmul__ = __mul__

    def dot(self, other):
        return sum(a * b for a, b in zip(self.coords, other.coords))

    def norm_sq(self):
        return self.dot(self)

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def __eq__(self, other):
        return isinstance(other, Weight) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __lt__(self, other):
        return self.coords < other.coords

    def __repr__(self):
        return "(" + ", ".join(scalar_str(c) for c in self.coords) + ")"

    def to_json(self):
        return {"eps": [scalar_str(c) for c in self.coords]}


def weight(*coords):
    return Weight(coords)


ZERO = weight(0, 0, 0, 0)
EPS = [weight(*[1 if j == i else 0 for j in range(4)]) for i in range(4)]

THETA = EPS[0] + EPS[1]
PHI = Weight([Fraction(1, 2)] * 4)

_HALF = Fraction(1, 2)

SIMPLE_ROOTS = {
    "F4": [
        EPS[1] - EPS[2],
        EPS[2] - EPS[3],
        EPS[3],
        Weight([_HALF, -_HALF, -_HALF, -_HALF]),
    ],
    "B4": [
        EPS[0] - EPS[1],
        EPS[1] - EPS[2],
        EPS[2] - EPS[3],
        EPS[3],
    ],
    "B4prime": [
        EPS[2] - EPS[3],
        EPS[1] - EPS[2],
        EPS[2] + EPS[3],
        Weight([_HALF, -_HALF, -_HALF, -_HALF]),
    ],
    "B4doubleprime": [
        EPS[2] + EPS[3],
        EPS[1] - EPS[2],
        EPS[2] - EPS[3],
        Weight([_HALF, -_HALF, -_HALF, _HALF]),
    ],
}


class InvariantForm:
    """The normalized invariant form; the gram matrix in eps-coordinates is I."""

    gram = [[1 if i == j else 0 for j in range(4)] for i in range(4)]

    def __call__(self, a, b):
        return a.dot(b)


def coroot(a):
    """The coroot 2a/(a,a)."""
    n = a.norm_sq()
    assert n != 0, "coroot of zero vector"
    return a * (Fraction(2) / n)


def reflect(a, v):
    """Reflection of v in the hyperplane orthogonal to the root a."""
    return v - v.dot(coroot(a)) * a


class RootSystem:
    """Finite root system given by simple roots, closed under reflections."""

    __slots__ = ("label", "simple_roots", "roots", "positive_roots",
                 "_simple_coords_cache")

    def __init__(self, label, simple_roots):
        self.label = label
        self.simple_roots = list(simple_roots)
        self.roots = self._reflection_closure()
        self._simple_coords_cache = {}
        pos = [a for a in self.roots if self._height(a) > 0]
        pos.sort(key=lambda a: (self._height(a), a.coords))
        self.positive_roots = pos
        assert len(pos) * 2 == len(self.roots)

    def _reflection_closure(self):
        seen = set(self.simple_roots)
        frontier = list(seen)
        while frontier:
            fresh = []
            for a in list(seen):
                for b in frontier:
                    r = reflect(b, a)
                    if r not in seen:
                        seen.add(r)
                        fresh.append(r)
                    r = reflect(a, b)
                    if r not in seen:
                        seen.add(r)
                        fresh.append(r)
            frontier = fresh
        return frozenset(seen)

    def simple_coords(self, v):
        """Coordinates of v in the simple-root basis, as a tuple of Fractions."""
        key = v.coords
        hit = self._simple_coords_cache.get(key)
        if hit is not None:
            return hit
        rows = [[self.simple_roots[j].coords[i] for j in range(4)]
                for i in range(4)]
        status, sol = solve_linear(rows, list(v.coords))
        assert status == "unique"
        out = tuple(sol)
        self._simple_coords_cache[key] = out
        return out

    def _height(self, v):
        return sum(self.simple_coords(v))

    def height(self, v):
        return self._height(v)

    def is_root(self, v):
        return v in self.roots

    def is_positive_root(self, v):
        return v in self.roots and self._height(v) > 0

    def theta(self):
        """The highest root."""
        return self.positive_roots[-1]

    def short_positive(self):
        return [a for a in self.positive_roots if a.norm_sq() == 1]

    def long_positive(self):
        return [a for a in self.positive_roots if a.norm_sq() == 2]


@lru_cache(maxsize=None)
def build(label):
    if label not in SIMPLE_ROOTS:
        raise ValueError("unknown root system label: %r" % (label,))
    return RootSystem(label, SIMPLE_ROOTS[label])


@lru_cache(maxsize=None)
def fundamental_weights(label):
    """The weights omega_i with (omega_i, alpha_j^vee) = delta_ij."""
    rs = build(label)
    covs = [coroot(a) for a in rs.simple_roots]
    out = []
    for i in range(4):
        rows = [list(cv.coords) for cv in covs]
        rhs = [1 if j == i else 0 for j in range(4)]
        status, sol = solve_linear(rows, rhs)
        assert status == "unique"
        out.append(Weight(sol))
    return out


@lru_cache(maxsize=None)
def rho_bar(label):
    """Half the sum of positive roots, computed as the sum of fundamental weights."""
    fw = fundamental_weights(label)
    r = fw[0] + fw[1] + fw[2] + fw[3]
    half_sum = Weight([sum(a.coords[i] for a in build(label).positive_roots) * _HALF
                       for i in range(4)])
    assert r == half_sum
    return r


def fund_coords(label, mu):
    """Coordinates of mu in the fundamental-weight basis of the given system."""
    rs = build(label)
    return tuple(mu.dot(coroot(a)) for a in rs.simple_roots)


def from_fund(label, coeffs):
    """Weight with the given fundamental-weight coordinates."""
    fw = fundamental_weights(label)
    out = ZERO
    for c, w in zip(coeffs, fw):
        out = out + scalar(c) * w
    return out


def is_dominant_integral(label, mu):
    return all(c == int(c) and c >= 0 for c in fund_coords(label, mu))


def weyl_dim(label, mu):
    """Dimension of the irreducible highest weight module, by the Weyl formula."""
    assert is_dominant_integral(label, mu), "weight not dominant integral"
    rs = build(label)
    rho = rho_bar(label)
    num = Fraction(1)
    for a in rs.positive_roots:
        num *= (mu + rho).dot(a) / rho.dot(a)
    assert num.denominator == 1
    return num.numerator


def is_positive_root_sum(label, v):
    """Whether v is a nonempty Z>=0-combination of positive roots.

    Since every simple root is itself a positive root, this holds exactly when
    the simple-root coordinates of v are nonnegative integers, not all zero.
    """
    if v.is_zero():
        return False
    coords = build(label).simple_coords(v)
    return all(c == int(c) and c >= 0 for c in coords)


def weight_to_json(mu, fund_basis=None):
    """JSON form of a weight; optionally attach its fundamental-coordinate view."""
    out = mu.to_json()
    if fund_basis is not None:
        out["fund"] = {
            "basis": fund_basis,
            "coeffs": [scalar_str(c) for c in fund_coords(fund_basis, mu)],
        }
    return out


def weight_from_json(data):
    return Weight([scalar(c) for c in data["eps"]])
