"""Highest-weight classification from the zero-weight polynomial systems.

The twelve printed basis polynomials all factor into two rational linear
forms, so category-O classification is a finite enumeration of factor
selections, each a small exact linear solve.  Dominant-integral
classification is a bounded lattice walk under (mu, eps1) <= n - 1/2.
The decomposition bookkeeping reruns the weight arithmetic behind the
branching of the three nontrivial modules over the B4 subalgebra.
"""

from fractions import Fraction

import sympy

from .exact import SparsePoly, scalar, scalar_str, solve_linear
from . import affine, rootsys
from .rootsys import (Weight, build, coroot, from_fund, fund_coords,
                      fundamental_weights, is_positive_root_sum, weight)

_SYMS = sympy.symbols("x1:5")


def h_form(gamma):
    """The linear polynomial mu -> <mu, gamma^vee> in the coordinates of mu."""
    cv = coroot(gamma)
    return SparsePoly.linear(cv.coords)


class FactoredPolynomial:
    """A degree-2 polynomial together with its two rational linear factors."""

    __slots__ = ("factors", "expanded")

    def __init__(self, factors, expanded=None):
        self.factors = list(factors)
        prod = SparsePoly.constant(1)
        for f in self.factors:
            assert f.total_degree() <= 1
            prod = prod * f
        if expanded is None:
            expanded = prod
        assert prod == expanded, "factors do not multiply back to the polynomial"
        self.expanded = expanded

    def __repr__(self):
        return "FactoredPolynomial(%s)" % " * ".join("(%s)" % f for f in self.factors)


def _to_sympy(p):
    expr = sympy.Integer(0)
    for exp, c in p.terms.items():
        mono = sympy.Rational(c.numerator, c.denominator)
        for i, e in enumerate(exp):
            mono *= _SYMS[i] ** e
        expr += mono
    return expr


def _linear_from_sympy(expr):
    poly = sympy.Poly(sympy.expand(expr), *_SYMS)
    out = SparsePoly.zero()
    for exp, c in poly.terms():
        assert sum(exp) <= 1
        q = sympy.Rational(c)
        out = out + SparsePoly({tuple(exp): Fraction(int(q.p), int(q.q))})
    return out


def factor_linear(p):
    """Split a degree-2 polynomial into two rational linear factors."""
    assert p.total_degree() == 2
    const, factors = sympy.factor_list(_to_sympy(p))
    lins = []
    for f, mult in factors:
        if sympy.Poly(f, *_SYMS).total_degree() != 1:
            raise ValueError("polynomial has no rational linear factorization")
        lins.extend([f] * mult)
    assert len(lins) == 2
    parts = [_linear_from_sympy(lins[0]), _linear_from_sympy(lins[1])]
    q = sympy.Rational(const)
    parts[0] = parts[0].scale(Fraction(int(q.p), int(q.q)))
    return FactoredPolynomial(parts, p)


def _paper_pairs(label):
    e1, e2, e3, e4 = rootsys.EPS
    half_m = Weight(["1/2", "-1/2", "-1/2", "-1/2"])
    half_p = Weight(["1/2", "-1/2", "-1/2", "1/2"])
    base = [
        (h_form(e1 - e2), h_form(e1 + e2) + SparsePoly.constant(Fraction(5, 2))),
        (h_form(e2 - e3), h_form(e2 + e3) + SparsePoly.constant(Fraction(3, 2))),
        (h_form(e3 - e4), h_form(e3 + e4) + SparsePoly.constant(Fraction(1, 2))),
        (h_form(e4), h_form(e4) - SparsePoly.constant(1)),
    ]
    if label == "B4":
        return base
    assert label == "F4"
    return base + [
        (h_form(e3 - e4), h_form(e1 + e2) + SparsePoly.constant(Fraction(5, 2))),
        (h_form(e2 - e3), h_form(e1 + e4) + SparsePoly.constant(Fraction(3, 2))),
        (h_form(e3 + e4), h_form(e1 - e2) + SparsePoly.constant(Fraction(1, 2))),
        (h_form(half_m), h_form(half_m) - SparsePoly.constant(1)),
        (h_form(e3 + e4), h_form(e1 + e2) + SparsePoly.constant(Fraction(5, 2))),
        (h_form(e2 - e3), h_form(e1 - e4) + SparsePoly.constant(Fraction(3, 2))),
        (h_form(e3 - e4), h_form(e1 - e2) + SparsePoly.constant(Fraction(1, 2))),
        (h_form(half_p), h_form(half_p) - SparsePoly.constant(1)),
    ]


def paper_polynomials(label):
    """The printed basis of the zero-weight polynomial space: 4 for B4, 12 for F4."""
    return [FactoredPolynomial([a, b]) for a, b in _paper_pairs(label)]


class ClassificationResult:
    """Deduplicated exact solution points plus provenance and any non-point components."""

    def __init__(self, points, components=(), algebra=None, level=None):
        self.weights = [w for w, _ in points]
        self.provenance = {w.coords: sel for w, sel in points}
        self.components = list(components)
        self.algebra = algebra
        self.level = None if level is None else scalar(level)

    @property
    def count(self):
        return len(self.weights)

    def to_json(self):
        out = {"algebra": self.algebra,
               "level": None if self.level is None else scalar_str(self.level),
               "weights": [], "count": self.count}
        for w in self.weights:
            entry = {"eps": [scalar_str(c) for c in w.coords]}
            if self.algebra:
                entry["fund"] = [scalar_str(c)
                                 for c in fund_coords(self.algebra, w)]
            out["weights"].append(entry)
        return out


def _linear_equation(form):
    coeffs = [Fraction(0)] * 4
    const = Fraction(0)
    for exp, c in form.terms.items():
        if sum(exp) == 0:
            const = c
        else:
            coeffs[exp.index(1)] = c
    return coeffs, -const


def solve_system(ps):
    """All common zeros of the factored system, by factor-selection enumeration.

    Each selection picks one linear factor per polynomial; branches are
    pruned as soon as the partial system is inconsistent.  Selections whose
    full system stays underdetermined are recorded as components rather
    than points.
    """
    points = []
    components = []

    def descend(idx, rows, rhs, chosen):
        status, sol = solve_linear(rows, rhs) if rows else ("underdetermined", None)
        if status == "inconsistent":
            return
        if idx == len(ps):
            if status == "unique":
                points.append((Weight(sol), tuple(chosen)))
            else:
                components.append(tuple(chosen))
            return
        for fi, form in enumerate(ps[idx].factors):
            coeffs, b = _linear_equation(form)
            descend(idx + 1, rows + [coeffs], rhs + [b], chosen + [fi])

    descend(0, [], [], [])
    seen = {}
    for w, sel in points:
        if w.coords not in seen:
            assert all(p.expanded.evaluate(w.coords) == 0 for p in ps)
            seen[w.coords] = (w, sel)
    ordered = [seen[c] for c in sorted(seen)]
    return ClassificationResult(ordered, components)


def classify_category_O(label, n=1):
    """Category-O highest weights for the level n - 7/2 vacuum algebra."""
    if n != 1:
        raise ValueError("category-O polynomial systems are available at n = 1 only")
    res = solve_system(paper_polynomials(label))
    res.algebra = label
    res.level = Fraction(-5, 2)
    return res


def classify_dominant(label, n):
    """Dominant integral weights mu with (mu, eps1) <= n - 1/2, sorted."""
    assert n >= 1
    fw = fundamental_weights(label)
    costs = [f.dot(rootsys.EPS[0]) for f in fw]
    bound = Fraction(2 * n - 1, 2)
    out = []
    limit = [int(bound / c) for c in costs]
    for a1 in range(limit[0] + 1):
        for a2 in range(limit[1] + 1):
            for a3 in range(limit[2] + 1):
                for a4 in range(limit[3] + 1):
                    mu = fw[0] * a1 + fw[1] * a2 + fw[2] * a3 + fw[3] * a4
                    if mu.dot(rootsys.EPS[0]) <= bound:
                        out.append(mu)
    out.sort(key=lambda w: w.coords)
    return out


def restrict_weight(mu):
    """Coordinates of mu in the B4 fundamental-weight basis (shared Cartan)."""
    return fund_coords("B4", mu)


LEMMA_71 = [
    (Fraction(-5, 4), [
        (Fraction(-5, 2), 0, 0, 0),
        (0, 0, Fraction(-3, 2), 1),
        (Fraction(1, 2), Fraction(-3, 2), 0, 0),
        (0, Fraction(-1, 2), Fraction(-1, 2), 0),
    ]),
    (Fraction(-3, 4), [
        (Fraction(-7, 2), 0, 0, 1),
        (0, 0, Fraction(-1, 2), 0),
        (Fraction(3, 2), Fraction(-5, 2), 0, 1),
        (0, Fraction(1, 2), Fraction(-3, 2), 1),
    ]),
    (Fraction(-3, 2), [
        (0, Fraction(-3, 2), 0, 0),
        (0, Fraction(-5, 2), 0, 1),
        (Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 2), 0),
        (Fraction(-3, 2), Fraction(1, 2), Fraction(-3, 2), 1),
        (Fraction(-3, 2), 0, Fraction(-1, 2), 0),
        (Fraction(-1, 2), 0, Fraction(-3, 2), 1),
    ]),
    (Fraction(0), [(0, 0, 0, 0)]),
    (Fraction(1), [(0, 0, 0, 1)]),
]


def _lambda_finite_parts():
    fw = fundamental_weights("F4")
    return {
        1: rootsys.ZERO,
        2: fw[0] * Fraction(-3, 2),
        3: fw[0] * Fraction(-1, 2) + fw[1] * Fraction(-1, 2),
        4: fw[1] * Fraction(-3, 2) + fw[2],
    }


def lambda_weight(i):
    """lambda^i: the highest weight of the i-th irreducible category-O module."""
    return affine.AffineWeight(Fraction(-5, 2), _lambda_finite_parts()[i], 0)


# (root subtracted from the second singular weight, then the two claimed
# B4-summand highest weights in omega-bar coordinates), per lambda^i
_DECOMP = {
    2: (Weight(["1/2", "1/2", "-1/2", "-1/2"]),
        (0, Fraction(-3, 2), 0, 0), (0, Fraction(-5, 2), 0, 1)),
    3: (Weight(["1/2", "-1/2", "1/2", "-1/2"]),
        (Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 2), 0),
        (Fraction(-3, 2), Fraction(1, 2), Fraction(-3, 2), 1)),
    4: (Weight(["1/2", "-1/2", "-1/2", "1/2"]),
        (Fraction(-1, 2), 0, Fraction(-3, 2), 1),
        (Fraction(-3, 2), 0, Fraction(-1, 2), 0)),
}


def decomposition_bookkeeping(lam):
    """The finite weight arithmetic behind the three branching isomorphisms.

    Checks (a) the F-side lowest conformal weight is -3/2, (b) both claimed
    B4 summands also sit at -3/2, (c) the summands are the B4 restrictions
    of the highest weight and of its shift by the zero-mode root used in
    the proof, (d) every other weight in the -3/2 class is excluded because
    the difference is not a sum of F4 positive roots.
    """
    parts = _lambda_finite_parts()
    which = None
    for i in (2, 3, 4):
        if lam.level == Fraction(-5, 2) and lam.finite == parts[i] \
                and lam.delta_coeff == 0:
            which = i
    if which is None:
        raise ValueError("expected one of the weights lambda^2, lambda^3, lambda^4")
    gamma, s1, s2 = _DECOMP[which]
    mu = lam.finite
    k = Fraction(-5, 2)
    check_a = affine.lowest_conformal_weight("F4", k, mu) == Fraction(-3, 2)
    w1 = from_fund("B4", s1)
    w2 = from_fund("B4", s2)
    check_b = (affine.lowest_conformal_weight("B4", k, w1) == Fraction(-3, 2)
               and affine.lowest_conformal_weight("B4", k, w2) == Fraction(-3, 2))
    check_c = (build("F4").is_positive_root(gamma)
               and restrict_weight(mu) == s1
               and restrict_weight(mu - gamma) == s2)
    class3 = [t for v, lst in LEMMA_71 if v == Fraction(-3, 2) for t in lst]
    others = [t for t in class3 if t not in (s1, s2)]
    excluded = {}
    for t in others:
        nu = from_fund("B4", t)
        excluded[t] = not is_positive_root_sum("F4", mu - nu)
    check_d = len(others) == 4 and all(excluded.values())
    report = {
        "lambda": lam.to_json(),
        "summands_fund_B": [[scalar_str(scalar(c)) for c in s] for s in (s1, s2)],
        "gamma": gamma.to_json(),
        "checks": {"a_f_side_conformal_weight": check_a,
                   "b_summand_conformal_weights": check_b,
                   "c_restriction_arithmetic": check_c,
                   "d_positive_root_sum_exclusion": check_d},
        "excluded": {str([scalar_str(scalar(c)) for c in t]): v
                     for t, v in excluded.items()},
    }
    report["pass"] = check_a and check_b and check_c and check_d
    return report
