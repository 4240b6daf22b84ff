"""PBW arithmetic in U(g_F) and the adjoint-generated modules R.

Monomials are tuples of (basis index, exponent) pairs with indices strictly
increasing; the basis order (all f's, then h's, then e's, blocks sorted by
root height then lex) comes from liealg.  Products are normal-ordered by
rewriting xy -> yx + [x,y] until sorted.

The module R attached to a singular vector v is generated from u = F([v])
under the adjoint action; its zero-weight part R_0 maps onto the polynomial
family P_0 through the highest-weight evaluation r v_mu = p_r(mu) v_mu.
"""

from fractions import Fraction

from .exact import SparsePoly, SpanBasis, scalar_str
from . import liealg, rootsys
from .rootsys import Weight, weight

_NO_MEMO = {}


def _compress(word):
    out = []
    for i in word:
        if out and out[-1][0] == i:
            out[-1][1] += 1
        else:
            out.append([i, 1])
    return tuple((i, e) for i, e in out)


def _expand(monomial):
    word = []
    for i, e in monomial:
        word.extend([i] * e)
    return tuple(word)


def _normal_order(word):
    hit = _NO_MEMO.get(word)
    if hit is not None:
        return hit
    desc = None
    for i in range(len(word) - 1):
        if word[i] > word[i + 1]:
            desc = i
            break
    if desc is None:
        out = {_compress(word): Fraction(1)}
        _NO_MEMO[word] = out
        return out
    t = liealg.build_gF()
    out = {}
    swapped = word[:desc] + (word[desc + 1], word[desc]) + word[desc + 2:]
    for m, c in _normal_order(swapped).items():
        out[m] = out.get(m, 0) + c
    for j, cj in t.bracket_basis(word[desc], word[desc + 1]).terms.items():
        shorter = word[:desc] + (j,) + word[desc + 2:]
        for m, c in _normal_order(shorter).items():
            s = out.get(m, 0) + cj * c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    out = {m: c for m, c in out.items() if c}
    _NO_MEMO[word] = out
    return out


class UEAElement:
    """Rational combination of PBW monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[m] = c

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(): 1})

    @classmethod
    def generator(cls, i):
        return cls({((i, 1),): 1})

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        r = UEAElement()
        r.terms = out
        return r

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        r = UEAElement()
        if c:
            r.terms = {m: c * t for m, t in self.terms.items()}
        return r

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out = {}
        for ma, ca in self.terms.items():
            wa = _expand(ma)
            for mb, cb in other.terms.items():
                c = ca * cb
                for m, cm in _normal_order(wa + _expand(mb)).items():
                    s = out.get(m, 0) + c * cm
                    if s:
                        out[m] = s
                    else:
                        out.pop(m, None)
        r = UEAElement()
        r.terms = out
        return r

    def __rmul__(self, c):
        return self.scale(c)

    def __pow__(self, n):
        out = UEAElement.one()
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, UEAElement) and self.terms == other.terms

    def weight(self):
        """Common h-weight of all monomials; asserts homogeneity."""
        t = liealg.build_gF()
        ws = set()
        for m in self.terms:
            w = rootsys.ZERO
            for i, e in m:
                w = w + e * t.weight_of(i)
            ws.add(w)
        assert len(ws) == 1, "element is not weight-homogeneous"
        return ws.pop()

    def __repr__(self):
        if not self.terms:
            return "0"
        t = liealg.build_gF()
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            names = "*".join(
                t.basis[i].name + ("" if e == 1 else "^%d" % e) for i, e in m)
            parts.append("%s*%s" % (scalar_str(c), names if names else "1"))
        return " + ".join(parts)


def multiply(a, b):
    return a * b


def adjoint(x, u):
    """ad x(u) = xu - ux for x a LieElement, u a UEAElement."""
    out = {}
    for i, ci in x.terms.items():
        for m, cm in u.terms.items():
            w = _expand(m)
            c = ci * cm
            for mm, c2 in _normal_order((i,) + w).items():
                s = out.get(mm, 0) + c * c2
                if s:
                    out[mm] = s
                else:
                    out.pop(mm, None)
            for mm, c2 in _normal_order(w + (i,)).items():
                s = out.get(mm, 0) - c * c2
                if s:
                    out[mm] = s
                else:
                    out.pop(mm, None)
    r = UEAElement()
    r.terms = out
    return r


# Quadratic ideal generators: u = -1/4 e_s^2 + sum e_p e_q over the pairs.
# The B and F generators are the same element, seen in different algebras.
SINGULAR_ROOT_DATA = {
    "B": (rootsys.EPS[0], [
        (weight(1, -1, 0, 0), weight(1, 1, 0, 0)),
        (weight(1, 0, -1, 0), weight(1, 0, 1, 0)),
        (weight(1, 0, 0, -1), weight(1, 0, 0, 1)),
    ]),
    "Bprime": (Weight(["1/2", "1/2", "1/2", "-1/2"]), [
        (weight(0, 1, 1, 0), weight(1, 0, 0, -1)),
        (weight(0, 1, 0, -1), weight(1, 0, 1, 0)),
        (weight(0, 0, 1, -1), weight(1, 1, 0, 0)),
    ]),
    "Bdoubleprime": (Weight(["1/2", "1/2", "1/2", "1/2"]), [
        (weight(0, 1, 1, 0), weight(1, 0, 0, 1)),
        (weight(0, 1, 0, 1), weight(1, 0, 1, 0)),
        (weight(0, 0, 1, 1), weight(1, 1, 0, 0)),
    ]),
}
SINGULAR_ROOT_DATA["F"] = SINGULAR_ROOT_DATA["B"]

SUBALGEBRA_OF_FAMILY = {
    "B": "B4", "Bprime": "B4prime", "Bdoubleprime": "B4doubleprime", "F": "F4",
}


def ideal_generator(family, n=1):
    """The Zhu-algebra ideal generator u for the given family, at level n - h + 1/2."""
    t = liealg.build_gF()
    s, pairs = SINGULAR_ROOT_DATA[family]
    u = UEAElement.generator(t.e_index[s]) ** 2
    u = u.scale(Fraction(-1, 4))
    for p, q in pairs:
        u = u + UEAElement.generator(t.e_index[p]) * UEAElement.generator(t.e_index[q])
    return u ** n


class AdModule:
    """Finite-dimensional ad-generated submodule of U(g), graded by h-weight."""

    def __init__(self, spaces):
        self.spaces = spaces

    @property
    def dim(self):
        return sum(len(v) for v in self.spaces.values())

    def weight_space(self, w):
        return self.spaces.get(w, [])

    def zero_weight(self):
        return self.weight_space(rootsys.ZERO)

    def weights(self):
        return sorted(self.spaces, key=lambda w: w.coords)


MAX_CLOSURE_ROUNDS = 64


def generate_R(u, algebra="F4"):
    """Closure of {u} under the adjoint action of the algebra's Chevalley generators."""
    t = liealg.build_gF()
    e_idx, f_idx = t.chevalley_generators(algebra)
    gens = [liealg.LieElement.basis_vector(i) for i in e_idx + f_idx]
    bases = {}
    elements = {}

    def insert(v):
        w = v.weight()
        sb = bases.get(w)
        if sb is None:
            sb = bases[w] = SpanBasis()
            elements[w] = []
        if sb.add(v.terms):
            elements[w].append(v)
            return True
        return False

    insert(u)
    frontier = [u]
    rounds = 0
    while frontier:
        rounds += 1
        if rounds > MAX_CLOSURE_ROUNDS:
            raise RuntimeError("adjoint closure did not stabilize")
        fresh = []
        for v in frontier:
            for g in gens:
                w = adjoint(g, v)
                if not w.is_zero() and insert(w):
                    fresh.append(w)
        frontier = fresh
    return AdModule(elements)


# Linear forms <mu, beta_i^vee> in the eps-coordinates of mu.
_CARTAN_FORMS = [
    SparsePoly.linear([1, -1, 0, 0]),
    SparsePoly.linear([0, 1, -1, 0]),
    SparsePoly.linear([0, 0, 1, -1]),
    SparsePoly.linear([0, 0, 0, 2]),
]


def hw_polynomial(r):
    """The polynomial p with r v_mu = p(mu) v_mu on highest-weight vectors.

    Monomials containing an e kill v_mu; the rest are pure Cartan since r has
    weight zero.  The result is scaled monic in graded-lex order.
    """
    t = liealg.build_gF()
    assert r.weight() == rootsys.ZERO
    total = SparsePoly.zero()
    for m, c in r.terms.items():
        if any(t.basis[i].kind == "e" for i, _ in m):
            continue
        p = SparsePoly.constant(c)
        for i, e in m:
            assert t.basis[i].kind == "h"
            for _ in range(e):
                p = p * _CARTAN_FORMS[t.basis[i].cartan_index]
        total = total + p
    return total.monic()


def zhu_image(v):
    """The Zhu F-map: [x1(-n1-1)...xm(-nm-1)1] -> (-1)^(n1+..+nm) xm...x1."""
    out = {}
    for word, c in v.terms.items():
        sign = 1
        letters = []
        for mode, idx in word:
            if mode > -1:
                raise ValueError("state contains a nonnegative mode")
            sign *= (-1) ** (-mode - 1)
            letters.append(idx)
        c = c * sign
        for m, cm in _normal_order(tuple(reversed(letters))).items():
            s = out.get(m, 0) + c * cm
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    r = UEAElement()
    r.terms = out
    return r
