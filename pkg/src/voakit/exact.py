"""Exact scalars, sparse polynomials in four variables, and exact linear algebra.

Scalars are fractions.Fraction throughout.  Polynomials live in
Q[x1, x2, x3, x4] and are kept as dicts mapping exponent tuples to nonzero
coefficients; monomials are compared in graded lexicographic order.
"""

from fractions import Fraction

ExactScalar = Fraction

NVARS = 4


def scalar(value):
    """Coerce an int, Fraction or 'p/q' string to an exact scalar."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError("not an exact scalar: %r" % (value,))


def scalar_str(x):
    """Serialize a scalar as 'p/q', omitting '/q' when q == 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def _grlex_key(exp):
    return (sum(exp), exp)


class SparsePoly:
    """Polynomial in x1..x4 with rational coefficients, sparse representation."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for exp, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[tuple(exp)] = c

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def constant(cls, c):
        c = scalar(c)
        p = cls()
        if c:
            p.terms[(0,) * NVARS] = c
        return p

    @classmethod
    def variable(cls, i):
        """The variable x_{i+1}, for i in 0..3."""
        assert 0 <= i < NVARS
        exp = [0] * NVARS
        exp[i] = 1
        p = cls()
        p.terms[tuple(exp)] = Fraction(1)
        return p

    @classmethod
    def linear(cls, coeffs, const=0):
        """The affine-linear polynomial sum(coeffs[i] * x_{i+1}) + const."""
        p = cls()
        for i, c in enumerate(coeffs):
            c = scalar(c)
            if c:
                exp = [0] * NVARS
                exp[i] = 1
                p.terms[tuple(exp)] = c
        const = scalar(const)
        if const:
            p.terms[(0,) * NVARS] = const
        return p

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        r = SparsePoly()
        r.terms = out
        return r

    def __neg__(self):
        r = SparsePoly()
        r.terms = {exp: -c for exp, c in self.terms.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(exp, 0) + c1 * c2
                if s:
                    out[exp] = s
                else:
                    out.pop(exp, None)
        r = SparsePoly()
        r.terms = out
        return r

    __rmul__ = __mul__

    def scale(self, c):
        c = scalar(c)
        r = SparsePoly()
        if c:
            r.terms = {exp: c * t for exp, t in self.terms.items()}
        return r

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(exp) for exp in self.terms)

    def leading_exponent(self):
        """Largest exponent tuple in graded lex order."""
        assert self.terms, "zero polynomial has no leading term"
        return max(self.terms, key=_grlex_key)

    def leading_coeff(self):
        return self.terms[self.leading_exponent()]

    def monic(self):
        """Scale so the graded-lex leading coefficient is 1."""
        if not self.terms:
            return self
        return self.scale(1 / self.leading_coeff())

    def evaluate(self, point):
        """Evaluate at a point given as a length-4 sequence of scalars."""
        coords = [scalar(c) for c in point]
        total = Fraction(0)
        for exp, c in self.terms.items():
            v = c
            for x, e in zip(coords, exp):
                if e:
                    v *= x ** e
            total += v
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[exp]
            mono = "*".join(
                "x%d" % (i + 1) if e == 1 else "x%d^%d" % (i + 1, e)
                for i, e in enumerate(exp) if e
            )
            if not mono:
                parts.append(scalar_str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(scalar_str(c) + "*" + mono)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    __repr__ = __str__


def evaluate(p, mu):
    """Evaluate a SparsePoly at a weight or at a plain coordinate sequence."""
    coords = getattr(mu, "coords", mu)
    return p.evaluate(coords)


class ExactMatrix:
    """Dense matrix of Fractions; rows is a list of lists."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = [[scalar(c) for c in row] for row in rows]
        if self.rows:
            ncols = len(self.rows[0])
            assert all(len(r) == ncols for r in self.rows)

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def copy(self):
        return ExactMatrix([list(r) for r in self.rows])

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.rows == other.rows

    def rank(self):
        return len(_echelon(self.rows)[0])


def _echelon(rows):
    """Reduced row echelon form.  Returns (pivot column list, new rows)."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if m[i][c]:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots, m


def rref(matrix):
    """Reduced row echelon form of an ExactMatrix, as a new ExactMatrix."""
    _, m = _echelon(matrix.rows)
    out = ExactMatrix([])
    out.rows = m
    return out


def span_contains(basis, v):
    """Whether vector v lies in the rational span of the basis rows."""
    v = [scalar(c) for c in v]
    if not basis:
        return all(c == 0 for c in v)
    rows = [[scalar(c) for c in row] for row in basis]
    assert all(len(r) == len(v) for r in rows), "dimension mismatch"
    pivots, m = _echelon(rows)
    w = list(v)
    for r, c in enumerate(pivots):
        if w[c]:
            f = w[c]
            w = [a - f * b for a, b in zip(w, m[r])]
    return all(c == 0 for c in w)


def solve_linear(rows, rhs):
    """Solve rows * x = rhs exactly.

    Returns (status, solution) with status one of 'inconsistent', 'unique',
    'underdetermined'; solution is a list of Fractions when unique, else None.
    """
    ncols = len(rows[0]) if rows else 0
    aug = [list(map(scalar, r)) + [scalar(b)] for r, b in zip(rows, rhs)]
    pivots, m = _echelon(aug)
    if ncols in pivots:
        return "inconsistent", None
    if len(pivots) < ncols:
        return "underdetermined", None
    sol = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        sol[c] = m[r][-1]
    return "unique", sol


def nullspace(rows, ncols):
    """Basis of the right nullspace of the given row list, as coordinate lists."""
    if not rows:
        return [[Fraction(1 if j == i else 0) for j in range(ncols)]
                for i in range(ncols)]
    pivots, m = _echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, c in enumerate(pivots):
            vec[c] = -m[r][fc]
        basis.append(vec)
    return basis


class SpanBasis:
    """Incrementally built echelon basis of sparse vectors.

    Vectors are dicts mapping hashable, totally ordered keys to nonzero
    Fractions.  Each stored row has a pivot (its minimal key) not occurring
    as the pivot of any other row, and pivot coefficient 1.
    """

    __slots__ = ("rows",)

    def __init__(self):
        self.rows = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec):
        """Remainder of vec after reduction against the stored rows."""
        vec = dict(vec)
        while vec:
            piv = min(vec)
            row = self.rows.get(piv)
            if row is None:
                return vec
            f = vec[piv]
            for k, c in row.items():
                s = vec.get(k, 0) - f * c
                if s:
                    vec[k] = s
                else:
                    vec.pop(k, None)
        return vec

    def contains(self, vec):
        return not self.reduce(vec)

    def add(self, vec):
        """Insert vec into the span.  Returns True if the span grew."""
        rem = self.reduce(vec)
        if not rem:
            return False
        piv = min(rem)
        inv = 1 / rem[piv]
        self.rows[piv] = {k: c * inv for k, c in rem.items()}
        return True
