"""Bottom graded pieces of the vacuum module N(k,0) over affine g_F.

States are exact linear combinations of PBW words x1(n1)...xm(nm)1 written
mode-ascending (most negative first, ties broken by basis index).  The mode
action re-normal-orders on the fly with the affine bracket

    [x(m), y(n)] = [x,y](m+n) + m delta_{m+n,0} (x,y) k,

and a fully ordered word ending in a nonnegative mode annihilates the
vacuum, so x(n)1 = 0 for n >= 0 falls out of the ordering rule.
Everything is Fraction arithmetic; no quotients are materialized beyond
what zero-mode orbits of singular vectors give.
"""

from fractions import Fraction

from .exact import SpanBasis, nullspace, scalar, scalar_str
from . import affine, liealg, rootsys, uea
from .liealg import BasisElement, LieElement, build_gF

_NO_MEMO = {}


def _accum(out, add, c):
    for w, v in add.items():
        nv = out.get(w, 0) + v * c
        if nv:
            out[w] = nv
        else:
            out.pop(w, None)


def _normal_order(word, k):
    """Canonical form of a mode word applied to the vacuum, as {word: coeff}."""
    key = (word, k)
    hit = _NO_MEMO.get(key)
    if hit is not None:
        return hit
    t = build_gF()
    out = None
    for i in range(len(word) - 1):
        if word[i] <= word[i + 1]:
            continue
        (m, a), (n, b) = word[i], word[i + 1]
        head, tail = word[:i], word[i + 2:]
        out = {}
        _accum(out, _normal_order(head + ((n, b), (m, a)) + tail, k), Fraction(1))
        for c, coeff in t.bracket_basis(a, b).terms.items():
            _accum(out, _normal_order(head + ((m + n, c),) + tail, k), coeff)
        if m + n == 0:
            z = m * t.form_basis(a, b) * k
            if z:
                _accum(out, _normal_order(head + tail, k), z)
        break
    if out is None:
        out = {} if word and word[-1][0] >= 0 else {word: Fraction(1)}
    _NO_MEMO[key] = out
    return out


class StateVector:
    """Finite map from canonical mode words to scalars, at a fixed level."""

    __slots__ = ("terms", "level")

    def __init__(self, terms=None, level=Fraction(-5, 2)):
        self.level = scalar(level)
        self.terms = {}
        if terms:
            for w, c in terms.items():
                c = scalar(c)
                if c:
                    self.terms[w] = c

    @classmethod
    def vacuum(cls, level=Fraction(-5, 2)):
        return cls({(): 1}, level)

    def __add__(self, other):
        assert self.level == other.level
        out = dict(self.terms)
        _accum(out, other.terms, Fraction(1))
        return StateVector(out, self.level)

    def __sub__(self, other):
        assert self.level == other.level
        out = dict(self.terms)
        _accum(out, other.terms, Fraction(-1))
        return StateVector(out, self.level)

    def scale(self, c):
        c = scalar(c)
        return StateVector({w: v * c for w, v in self.terms.items()}, self.level)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, StateVector) and self.level == other.level
                and self.terms == other.terms)

    def degree(self):
        assert self.terms
        degs = {-sum(m for m, _ in w) for w in self.terms}
        assert len(degs) == 1, "state is not degree-homogeneous"
        return degs.pop()

    def weight(self):
        t = build_gF()
        ws = set()
        for w in self.terms:
            mu = rootsys.ZERO
            for _, i in w:
                mu = mu + t.weight_of(i)
            ws.add(mu)
        assert len(ws) == 1, "state is not weight-homogeneous"
        return ws.pop()

    def to_report(self):
        t = build_gF()
        out = []
        for w in sorted(self.terms):
            out.append({"monomial": [[t.basis[i].name, m] for m, i in w],
                        "coeff": scalar_str(self.terms[w])})
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        t = build_gF()
        bits = []
        for w in sorted(self.terms):
            mono = "".join("%s(%d)" % (t.basis[i].name, m) for m, i in w) or "1"
            bits.append("%s*%s" % (scalar_str(self.terms[w]), mono))
        return " + ".join(bits)


def _mode_factors(x):
    if isinstance(x, LieElement):
        return list(x.terms.items())
    if isinstance(x, BasisElement):
        return [(x.index, Fraction(1))]
    return [(int(x), Fraction(1))]


def act(x, n, v):
    """Apply the mode x(n) to a state; x may be a basis element or LieElement."""
    out = {}
    for i, c0 in _mode_factors(x):
        for w, c in v.terms.items():
            _accum(out, _normal_order(((n, i),) + w, v.level), c0 * c)
    return StateVector(out, v.level)


def build_singular(family, n=1):
    """The printed degree-2n quadratic-power vector, at its level n - 7/2.

    (-1/4 e_s(-1)^2 + sum e_p(-1) e_q(-1))^n 1 with the family's roots.
    """
    assert n >= 1
    t = build_gF()
    s, pairs = uea.SINGULAR_ROOT_DATA[family]
    v = StateVector.vacuum(Fraction(2 * n - 7, 2))
    es = t.basis[t.e_index[s]]
    for _ in range(n):
        acc = act(es, -1, act(es, -1, v)).scale(Fraction(-1, 4))
        for p, q in pairs:
            acc = acc + act(t.basis[t.e_index[p]], -1,
                            act(t.basis[t.e_index[q]], -1, v))
        v = acc
    return v


def _highest_root(label):
    return build_gF().subsystems[label].theta()


def is_singular(v, family, theta_root=None):
    """Annihilation by the family's simple e_i(0) modes and by f_theta(1)."""
    t = build_gF()
    label = uea.SUBALGEBRA_OF_FAMILY[family]
    e_idx, _ = t.chevalley_generators(label)
    for i in e_idx:
        if not act(t.basis[i], 0, v).is_zero():
            return False
    if theta_root is None:
        theta_root = _highest_root(label)
    return act(t.basis[t.f_index[theta_root]], 1, v).is_zero()


MAX_ORBIT_SIZE = 4096


def _orbit_span(v, family):
    """(SpanBasis, raw basis vectors) of the subalgebra zero-mode orbit of v."""
    t = build_gF()
    label = uea.SUBALGEBRA_OF_FAMILY[family]
    e_idx, f_idx = t.chevalley_generators(label)
    gens = [t.basis[i] for i in e_idx + f_idx]
    span = SpanBasis()
    found = []
    if span.add(dict(v.terms)):
        found.append(v)
    pending = list(found)
    while pending:
        if len(found) > MAX_ORBIT_SIZE:
            raise RuntimeError("zero-mode orbit closure did not stabilize")
        u = pending.pop()
        for g in gens:
            w = act(g, 0, u)
            if w.terms and span.add(dict(w.terms)):
                found.append(w)
                pending.append(w)
    return span, found


def zero_mode_orbit(v, family):
    """Basis of the closure of span{v} under subalgebra zero modes.

    Closure under the Chevalley generators e_i(0), f_i(0) suffices: a
    subspace stable under two operators is stable under their commutator,
    and the generators generate the subalgebra.
    """
    assert v.degree() >= 0
    _, found = _orbit_span(v, family)
    return found


def conformal_vector(label, k):
    """Sugawara vector 1/(2(k+h)) sum_i a^i(-1) b^i(-1) 1 over dual bases.

    The Cartan contribution uses the orthonormal set {1/2 h_alpha} over the
    four short positive B4 roots for both labels (shared Cartan, same form);
    the root contribution pairs e_alpha with (alpha,alpha)/2 f_alpha.
    """
    k = scalar(k)
    h = affine.dual_coxeter(label)
    if k + h == 0:
        raise ValueError("critical level has no Sugawara vector")
    t = build_gF()
    rs = t.subsystems[label]
    vac = StateVector.vacuum(k)
    acc = StateVector({}, k)
    for a in rootsys.EPS:
        ha = t.h_coroot(a)
        acc = acc + act(ha, -1, act(ha, -1, vac)).scale(Fraction(1, 4))
    for a in t.pos_roots:
        if a not in rs.roots:
            continue
        ea, fa = t.basis[t.e_index[a]], t.basis[t.f_index[a]]
        term = act(ea, -1, act(fa, -1, vac)) + act(fa, -1, act(ea, -1, vac))
        acc = acc + term.scale(a.norm_sq() / 2)
    return acc.scale(1 / (2 * (k + h)))


def equals_mod_ideal(a, b, ideal_gen, family):
    """Exact equality of a and b modulo the zero-mode orbit span of ideal_gen."""
    if not (a.level == b.level == ideal_gen.level):
        raise ValueError("level mismatch")
    d = ideal_gen.degree()
    if not (a.degree() == b.degree() == d):
        raise ValueError("degree mismatch")
    span, _ = _orbit_span(ideal_gen, family)
    diff = a - b
    if diff.is_zero():
        return True
    return span.contains(dict(diff.terms))


def find_subalgebra_singular(degree, k, subalgebra="B", apply_f_theta=True):
    """Subalgebra-singular vectors in the degree-0/1 pieces of L_F(k,0).

    Degree 1 of L_F(k,0) equals g_F(-1)1 because the maximal submodule is
    generated by a singular vector sitting in degree 2n >= 2; the search is
    then an exact kernel computation against the four simple e_i(0) modes
    and, unless disabled, f_theta(1).
    """
    k = scalar(k)
    t = build_gF()
    label = uea.SUBALGEBRA_OF_FAMILY[subalgebra]
    e_idx, _ = t.chevalley_generators(label)
    theta = _highest_root(label)
    conditions = [(i, 0) for i in e_idx]
    if apply_f_theta:
        conditions.append((t.f_index[theta], 1))
    if degree == 0:
        vac = StateVector.vacuum(k)
        for i, n in conditions:
            assert act(t.basis[i], n, vac).is_zero()
        return [vac]
    if degree != 1:
        raise ValueError("only degrees 0 and 1 are materialized")
    columns = [StateVector({((-1, j),): 1}, k) for j in range(t.dim)]
    rows = []
    for i, n in conditions:
        images = [act(t.basis[i], n, col) for col in columns]
        words = sorted({w for img in images for w in img.terms})
        for w in words:
            rows.append([img.terms.get(w, Fraction(0)) for img in images])
    out = []
    for sol in nullspace(rows, t.dim):
        terms = {((-1, j),): c for j, c in enumerate(sol) if c}
        out.append(StateVector(terms, k))
    return out
