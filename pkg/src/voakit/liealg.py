"""The 52-dimensional simple Lie algebra of type F4 with exact structure constants.

The algebra is built in two layers.  First a canonical Chevalley basis
{x_alpha, h_i} is constructed from the F4 root system: structure constants
N(a,b) are derived recursively from extraspecial pairs (the sign of N is
fixed on extraspecial pairs and propagated through Jacobi identities), so
[x_a, x_b] = N(a,b) x_{a+b} with N(a,b) = +-(p+1) for the root string.
Second, the working basis {e_alpha, f_alpha, h_i} is defined by evaluating a
fixed table of bracket relations among root vectors, each of which pins
e_alpha to +-x_alpha; f_{a+b} = -c[f_a, f_b] whenever e_{a+b} = c[e_a, e_b],
and h_alpha = [e_alpha, f_alpha].

The Cartan basis consists of the coroots h_1..h_4 of the B4 simple roots
(e1-e2, e2-e3, e3-e4, e4); every F4 coroot is an integer combination of
these.  Basis order is all f's, then h's, then e's, with e/f blocks sorted
by root height then lexicographically; this is the PBW order used upstream.

Also provided: the normalized invariant form, the three B4 subalgebras
g_B, g_B', g_B'' spanned by root vectors of the subsystems, the embeddings
pi'/pi'' of g_B onto the other two, and the decomposition of g_F as a
g_B-module.
"""

from fractions import Fraction
from functools import lru_cache

from .exact import SpanBasis, nullspace, scalar, scalar_str, solve_linear
from . import rootsys
from .rootsys import Weight, coroot, weight

HALF = Fraction(1, 2)


def _w(a, b, c, d):
    return weight(a, b, c, d)


def _h(a, b, c, d):
    return Weight([Fraction(a, 2), Fraction(b, 2), Fraction(c, 2), Fraction(d, 2)])


# F4 simple roots, in the fixed order alpha_1..alpha_4.
ALPHA = [_w(0, 1, -1, 0), _w(0, 0, 1, -1), _w(0, 0, 0, 1), _h(1, -1, -1, -1)]

# Defining brackets for the non-simple positive root vectors, in dependency
# order: (target root, coefficient, left root, right root) means
# e_target = coeff * [e_left, e_right].  Operands are chosen so that
# left + right = target holds for every entry.
ROOT_VECTOR_TABLE = [
    (_h(1, -1, -1, 1), 1, ALPHA[2], ALPHA[3]),
    (_w(0, 1, 0, -1), 1, ALPHA[1], ALPHA[0]),
    (_w(0, 0, 1, 0), 1, ALPHA[1], ALPHA[2]),
    (_h(1, -1, 1, -1), 1, _w(0, 0, 1, 0), ALPHA[3]),
    (_w(0, 1, 0, 0), 1, _w(0, 1, 0, -1), ALPHA[2]),
    (_w(0, 0, 1, 1), HALF, _w(0, 0, 1, 0), ALPHA[2]),
    (_h(1, 1, -1, -1), 1, _h(1, -1, 1, -1), ALPHA[0]),
    (_h(1, -1, 1, 1), 1, _h(1, -1, 1, -1), ALPHA[2]),
    (_w(0, 1, 0, 1), HALF, _w(0, 1, 0, 0), ALPHA[2]),
    (_h(1, 1, -1, 1), 1, _h(1, 1, -1, -1), ALPHA[2]),
    (_w(1, -1, 0, 0), HALF, _h(1, -1, 1, -1), _h(1, -1, -1, 1)),
    (_w(0, 1, 1, 0), HALF, _w(0, 0, 1, 0), _w(0, 1, 0, 0)),
    (_h(1, 1, 1, -1), 1, _h(1, 1, -1, 1), ALPHA[1]),
    (_w(1, 0, -1, 0), 1, _w(1, -1, 0, 0), ALPHA[0]),
    (_h(1, 1, 1, 1), 1, ALPHA[2], _h(1, 1, 1, -1)),
    (_w(1, 0, 0, -1), 1, _w(1, 0, -1, 0), ALPHA[1]),
    (_w(1, 0, 0, 0), 1, _w(1, 0, 0, -1), ALPHA[2]),
    (_w(1, 0, 0, 1), HALF, _w(1, 0, 0, 0), ALPHA[2]),
    (_w(1, 0, 1, 0), HALF, _w(1, 0, 0, 0), _w(0, 0, 1, 0)),
    (_w(1, 1, 0, 0), HALF, _w(0, 1, 0, 0), _w(1, 0, 0, 0)),
]


class ConstructionError(Exception):
    pass


class _Canonical:
    """Canonical Chevalley structure constants N(a,b) for F4."""

    def __init__(self):
        self.rs = rootsys.build("F4")
        self.roots = self.rs.roots
        self._memo = {}
        self._xsp = {}

    def extraspecial(self, c):
        """Minimal positive root a (height then lex order) with c - a a root."""
        hit = self._xsp.get(c)
        if hit is None:
            for a in self.rs.positive_roots:
                if (c - a) in self.roots:
                    hit = (a, c - a)
                    break
            assert hit is not None
            self._xsp[c] = hit
        return hit

    def _chain_down(self, a, b):
        p = 0
        while (b - (p + 1) * a) in self.roots:
            p += 1
        return p

    def n(self, a, b):
        """The constant in [x_a, x_b] = N(a,b) x_{a+b}, for a, b, a+b roots."""
        key = (a.coords, b.coords)
        hit = self._memo.get(key)
        if hit is None:
            hit = self._compute(a, b)
            self._memo[key] = hit
        return hit

    def _compute(self, a, b):
        c = a + b
        assert a in self.roots and b in self.roots and c in self.roots
        ha = self.rs.height(a)
        hb = self.rs.height(b)
        if ha < 0 and hb < 0:
            return -self.n(-a, -b)
        if ha < 0:
            return -self.n(b, a)
        if hb < 0:
            if self.rs.height(c) < 0:
                return -self.n(-a, -b)
            # zero-sum triple (a, b, -c): reduce to the positive pair (-b, c)
            return -Fraction(c.norm_sq(), a.norm_sq()) * self.n(-b, c)
        al, be = self.extraspecial(c)
        if a == al and b == be:
            return Fraction(self._chain_down(al, be) + 1)
        if a == be and b == al:
            return -Fraction(self._chain_down(al, be) + 1)
        # special pair: expand [x_{-al}, [x_a, x_b]] by Jacobi
        total = Fraction(0)
        if (a - al) in self.roots:
            total += self.n(-al, a) * self.n(a - al, b)
        if (b - al) in self.roots:
            total += self.n(-al, b) * self.n(a, b - al)
        return total / self.n(-al, c)


class BasisElement:
    __slots__ = ("kind", "root", "cartan_index", "index", "name")

    def __init__(self, kind, index, root=None, cartan_index=None):
        self.kind = kind
        self.index = index
        self.root = root
        self.cartan_index = cartan_index
        tag = root if root is not None else rootsys.SIMPLE_ROOTS["B4"][cartan_index]
        self.name = "%s[%s]" % (kind, ",".join(scalar_str(c) for c in tag.coords))

    def __repr__(self):
        return self.name


class LieElement:
    """Rational combination of basis elements, as a sparse index -> coeff map."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for i, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[i] = c

    @classmethod
    def basis_vector(cls, i, c=1):
        return cls({i: c})

    def __add__(self, other):
        out = dict(self.terms)
        for i, c in other.terms.items():
            s = out.get(i, 0) + c
            if s:
                out[i] = s
            else:
                out.pop(i, None)
        r = LieElement()
        r.terms = out
        return r

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        r = LieElement()
        if c:
            r.terms = {i: c * t for i, t in self.terms.items()}
        return r

    __mul__ = scale
    __rmul__ = scale

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, LieElement) and self.terms == other.terms

    def __repr__(self):
        return "LieElement(%r)" % (self.terms,)


class StructureTable:
    """Full bracket table of g_F in the working basis {f, h, e}."""

    def __init__(self):
        can = _Canonical()
        self.rs = can.rs
        self.pos_roots = list(self.rs.positive_roots)
        self.lam = _basis_signs(can)
        self.subsystems = {lbl: rootsys.build(lbl)
                           for lbl in ("B4", "B4prime", "B4doubleprime", "F4")}

        self.basis = []
        self.f_index = {}
        self.h_base = len(self.pos_roots)
        self.e_index = {}
        for a in self.pos_roots:
            el = BasisElement("f", len(self.basis), root=a)
            self.f_index[a] = el.index
            self.basis.append(el)
        for i in range(4):
            self.basis.append(BasisElement("h", len(self.basis), cartan_index=i))
        for a in self.pos_roots:
            el = BasisElement("e", len(self.basis), root=a)
            self.e_index[a] = el.index
            self.basis.append(el)
        self.dim = len(self.basis)
        assert self.dim == 52

        self.b4_cov = [coroot(b) for b in rootsys.SIMPLE_ROOTS["B4"]]
        self._cartan_memo = {}
        self._table = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                v = self._bracket_pair(self.basis[i], self.basis[j], can)
                if v.terms:
                    self._table[(i, j)] = v
        self._form = self._build_form()

    def cartan_coords(self, v):
        """Coefficients of the coweight v in the basis of B4 simple coroots."""
        hit = self._cartan_memo.get(v.coords)
        if hit is None:
            rows = [[cv.coords[r] for cv in self.b4_cov] for r in range(4)]
            status, sol = solve_linear(rows, list(v.coords))
            assert status == "unique"
            hit = tuple(sol)
            self._cartan_memo[v.coords] = hit
        return hit

    def cartan_element(self, v):
        """The Cartan element identified with the coweight v (eps-coordinates)."""
        coords = self.cartan_coords(v)
        return LieElement({self.h_base + i: c for i, c in enumerate(coords) if c})

    def h_coroot(self, a):
        """h_alpha = alpha^vee as a LieElement, for a root alpha."""
        return self.cartan_element(coroot(a))

    def _bracket_pair(self, x, y, can):
        kx, ky = x.kind, y.kind
        if kx == "h" and ky == "h":
            return LieElement()
        if kx == "h" or ky == "h":
            if kx == "h":
                h, z, sign = x, y, 1
            else:
                h, z, sign = y, x, -1
            pairing = z.root.dot(self.b4_cov[h.cartan_index])
            if z.kind == "f":
                pairing = -pairing
            return LieElement({z.index: sign * pairing})
        a = x.root if kx == "e" else -x.root
        b = y.root if ky == "e" else -y.root
        c = a + b
        if c.is_zero():
            # [e_alpha, f_alpha] = h_alpha; here kx, ky differ and roots agree
            h = self.h_coroot(x.root)
            return h if kx == "e" else h.scale(-1)
        if c not in can.roots:
            return LieElement()
        la = self.lam[x.root]
        lb = self.lam[y.root]
        n = can.n(a, b)
        if self.rs.height(c) > 0:
            return LieElement({self.e_index[c]: la * lb * self.lam[c] * n})
        return LieElement({self.f_index[-c]: la * lb * self.lam[-c] * n})

    def bracket_basis(self, i, j):
        if i == j:
            return LieElement()
        if i < j:
            return self._table.get((i, j), LieElement())
        return self._table.get((j, i), LieElement()).scale(-1)

    def bracket(self, x, y):
        out = LieElement()
        for i, cx in x.terms.items():
            for j, cy in y.terms.items():
                t = self.bracket_basis(i, j)
                if t.terms:
                    out = out + t.scale(cx * cy)
        return out

    def _build_form(self):
        form = {}
        for a in self.pos_roots:
            v = Fraction(2) / a.norm_sq()
            form[(self.e_index[a], self.f_index[a])] = v
            form[(self.f_index[a], self.e_index[a])] = v
        for i in range(4):
            for j in range(4):
                form[(self.h_base + i, self.h_base + j)] = \
                    self.b4_cov[i].dot(self.b4_cov[j])
        return form

    def form_basis(self, i, j):
        return self._form.get((i, j), Fraction(0))

    def invariant_form(self, x, y):
        total = Fraction(0)
        for i, cx in x.terms.items():
            for j, cy in y.terms.items():
                v = self._form.get((i, j))
                if v:
                    total += cx * cy * v
        return total

    def weight_of(self, i):
        el = self.basis[i]
        if el.kind == "e":
            return el.root
        if el.kind == "f":
            return -el.root
        return rootsys.ZERO

    def element_weight(self, x):
        ws = {self.weight_of(i) for i in x.terms}
        assert len(ws) == 1, "element is not weight-homogeneous"
        return ws.pop()

    def subalgebra_indices(self, label):
        rs = self.subsystems[label]
        out = []
        for a in self.pos_roots:
            if a in rs.roots:
                out.append(self.e_index[a])
                out.append(self.f_index[a])
        out.extend(self.h_base + i for i in range(4))
        return sorted(out)

    def chevalley_generators(self, label):
        """(e-indices, f-indices) of the simple root vectors of the subsystem."""
        simples = rootsys.SIMPLE_ROOTS[label]
        return ([self.e_index[a] for a in simples],
                [self.f_index[a] for a in simples])

    def jacobi_defect(self, i, j, k):
        t = self.bracket(self.bracket_basis(i, j), LieElement.basis_vector(k))
        t = t + self.bracket(self.bracket_basis(j, k), LieElement.basis_vector(i))
        t = t + self.bracket(self.bracket_basis(k, i), LieElement.basis_vector(j))
        return t


def _basis_signs(can):
    """Rescaling factors lam with e_alpha = lam[alpha] x_alpha, from the table."""
    lam = {a: Fraction(1) for a in ALPHA}
    for target, coeff, left, right in ROOT_VECTOR_TABLE:
        assert left + right == target
        if left not in lam or right not in lam:
            raise ConstructionError("table entry uses undefined root vector")
        val = Fraction(coeff) * lam[left] * lam[right] * can.n(left, right)
        if val == 0:
            raise ConstructionError("table entry evaluates to zero")
        if val * val != 1:
            raise ConstructionError("table entry does not give a unit rescaling")
        if target in lam:
            raise ConstructionError("root vector defined twice")
        lam[target] = val
    assert len(lam) == 24
    return lam


@lru_cache(maxsize=None)
def build_gF():
    return StructureTable()


def bracket(x, y):
    return build_gF().bracket(x, y)


def invariant_form(x, y):
    return build_gF().invariant_form(x, y)


_PI_LABEL = {"prime": "B4prime", "doubleprime": "B4doubleprime"}


def pi_weight(variant, w):
    """The linear map on weights sending B4 simple roots to their images."""
    rsB = rootsys.build("B4")
    images = rootsys.SIMPLE_ROOTS[_PI_LABEL[variant]]
    coords = rsB.simple_coords(w)
    out = rootsys.ZERO
    for c, im in zip(coords, images):
        out = out + c * im
    return out


@lru_cache(maxsize=None)
def _pi_basis_images(variant):
    t = build_gF()
    rsB = rootsys.build("B4")
    images = rootsys.SIMPLE_ROOTS[_PI_LABEL[variant]]
    simples = rootsys.SIMPLE_ROOTS["B4"]
    img = {}
    for b, bp in zip(simples, images):
        img[t.e_index[b]] = LieElement.basis_vector(t.e_index[bp])
        img[t.f_index[b]] = LieElement.basis_vector(t.f_index[bp])
    for i in range(4):
        img[t.h_base + i] = t.cartan_element(coroot(images[i]))
    bpos = [a for a in t.pos_roots if a in rsB.roots]
    bpos.sort(key=lambda a: sum(rsB.simple_coords(a)))
    for a in bpos:
        if t.e_index[a] in img:
            continue
        for b in simples:
            rest = a - b
            if rest in rsB.roots and rsB.height(rest) > 0:
                break
        else:
            raise ConstructionError("no simple-root decomposition for %r" % (a,))
        m = t.bracket_basis(t.e_index[b], t.e_index[rest]).terms[t.e_index[a]]
        img[t.e_index[a]] = t.bracket(img[t.e_index[b]], img[t.e_index[rest]]).scale(1 / m)
        mf = t.bracket_basis(t.f_index[b], t.f_index[rest]).terms[t.f_index[a]]
        img[t.f_index[a]] = t.bracket(img[t.f_index[b]], img[t.f_index[rest]]).scale(1 / mf)
    return img


def embed_pi(variant, x):
    """Apply pi' or pi'' (variant 'prime' or 'doubleprime') to an element of g_B."""
    img = _pi_basis_images(variant)
    out = LieElement()
    for i, c in x.terms.items():
        if i not in img:
            raise ValueError("element not supported on the B4 subalgebra")
        out = out + img[i].scale(c)
    return out


def branch_gF_over_gB():
    """Highest weight and dimension of each g_B-irreducible summand of g_F."""
    t = build_gF()
    e_idx, f_idx = t.chevalley_generators("B4")
    rows = []
    for ei in e_idx:
        mat = [[Fraction(0)] * t.dim for _ in range(t.dim)]
        for j in range(t.dim):
            for r, c in t.bracket_basis(ei, j).terms.items():
                mat[r][j] = c
        rows.extend(mat)
    kernel = nullspace(rows, t.dim)
    summands = []
    for vec in kernel:
        x = LieElement({i: c for i, c in enumerate(vec) if c})
        hw = t.element_weight(x)
        span = SpanBasis()
        span.add(x.terms)
        frontier = [x]
        while frontier:
            fresh = []
            for u in frontier:
                for gi in e_idx + f_idx:
                    v = t.bracket(LieElement.basis_vector(gi), u)
                    if v.terms and span.add(v.terms):
                        fresh.append(v)
            frontier = fresh
        summands.append((hw, len(span)))
    summands.sort(key=lambda p: -p[1])
    return summands
