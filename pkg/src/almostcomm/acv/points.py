"""Points of the almost-commuting variety, normal forms and generic classification."""
from dataclasses import dataclass

from ..errors import InternalInconsistency, NonGeneric, NotOnVariety
from ..exact import RatMatrix, RatVector, has_distinct_eigenvalues
from ..exact.linalg import rank, rank_of_vectors
from ..exact.matrix import ONE, ZERO, Q


@dataclass(frozen=True)
class Quadruple:
    """A point (X, Y, i, j) of gl_n x gl_n x V x V*; i is a column, j a row."""

    n: int
    X: RatMatrix
    Y: RatMatrix
    i: RatVector
    j: RatVector

    def __post_init__(self):
        n = self.n
        if self.X.shape != (n, n) or self.Y.shape != (n, n) or len(self.i) != n or len(self.j) != n:
            raise ValueError(f"inconsistent dimensions for n={n}")

    @classmethod
    def zero(cls, n):
        return cls(n, RatMatrix.zeros(n), RatMatrix.zeros(n), RatVector.zeros(n), RatVector.zeros(n))

    def conjugate(self, g, g_inv=None):
        """The G-action: (gXg^-1, gYg^-1, g i, j g^-1)."""
        g_inv = g.inverse() if g_inv is None else g_inv
        return Quadruple(self.n, g @ self.X @ g_inv, g @ self.Y @ g_inv, g @ self.i, self.j @ g_inv)

    def to_json(self):
        return {"n": self.n, "X": self.X.to_json(), "Y": self.Y.to_json(), "i": self.i.to_json(), "j": self.j.to_json()}

    @classmethod
    def from_json(cls, data):
        return cls(
            int(data["n"]),
            RatMatrix.from_json(data["X"]),
            RatMatrix.from_json(data["Y"]),
            RatVector.from_json(data["i"]),
            RatVector.from_json(data["j"]),
        )


@dataclass(frozen=True)
class NormalFormParams:
    y: tuple
    x: tuple
    k_prime: int
    k_double_prime: int

    def __post_init__(self):
        y = tuple(Q(v) for v in self.y)
        x = tuple(Q(v) for v in self.x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "x", x)
        n = len(y)
        if len(x) != n:
            raise ValueError("x and y must have the same length")
        if len(set(y)) != n:
            raise ValueError(f"y values must be pairwise distinct: {[str(v) for v in y]}")
        if not 0 <= self.k_prime <= self.k_double_prime <= n:
            raise ValueError(f"need 0 <= k' <= k'' <= n, got ({self.k_prime}, {self.k_double_prime}, {n})")

    @property
    def n(self):
        return len(self.y)


def moment_map(q):
    return q.X.commutator(q.Y) + q.i.outer(q.j)


def on_variety(q):
    return moment_map(q).is_zero()


def _require_on_variety(q):
    if not on_variety(q):
        raise NotOnVariety("[X,Y] + ij != 0")


def epsilon(x, y):
    """The embedding (x, y) -> (diag x, diag y, (1,...,1), 0)."""
    if len(x) != len(y):
        raise ValueError("x and y must have equal length")
    n = len(x)
    return Quadruple(n, RatMatrix.diag(x), RatMatrix.diag(y), RatVector([ONE] * n), RatVector.zeros(n))


def normal_form(p):
    n, k1, k2 = p.n, p.k_prime, p.k_double_prime
    y, x = p.y, p.x
    entries = []
    for r in range(n):
        for s in range(n):
            if r == s:
                entries.append(x[r])
            elif r >= k2 and s < k1:
                entries.append(ONE / (y[r] - y[s]))
            else:
                entries.append(ZERO)
    i = RatVector([ZERO] * k2 + [ONE] * (n - k2))
    j = RatVector([ONE] * k1 + [ZERO] * (n - k1))
    return Quadruple(n, RatMatrix(n, n, entries), RatMatrix.diag(y), i, j)


def cyclic_subspace(X, Y, i):
    """Basis of C[X,Y]i, grown breadth-first from i until it stops growing."""
    return _closure([i], lambda v: (X @ v, Y @ v), len(i))


def co_cyclic_subspace(j, X, Y):
    """Basis of jC[X,Y] (row vectors)."""
    return _closure([j], lambda v: (v @ X, v @ Y), len(j))


def _closure(seed, step, n):
    basis = [v for v in seed if not v.is_zero()][:1]
    frontier = list(basis)
    for _ in range(n):
        if not frontier:
            break
        new = []
        for v in frontier:
            for w in step(v):
                if w.is_zero():
                    continue
                if rank_of_vectors(basis + [w]) > len(basis):
                    basis.append(w)
                    new.append(w)
        frontier = new
    return basis


def pairing_vanishes(q):
    """True iff j kills every vector of C[X,Y]i; requires q on the variety."""
    _require_on_variety(q)
    return all(q.j.dot(v) == 0 for v in cyclic_subspace(q.X, q.Y, q.i))


def subspace_dims(q):
    return len(cyclic_subspace(q.X, q.Y, q.i)), len(co_cyclic_subspace(q.j, q.X, q.Y))


def classify_generic(q):
    """Component label of a point with distinct Y-eigenvalues.

    Returns ``{"component": k, "dims": (a, b)}`` when a + b = n and
    ``{"locus": "M''-type", "dims": (a, b)}`` when a + b < n, where
    a = dim C[X,Y]i and b = dim jC[X,Y].
    """
    _require_on_variety(q)
    if not has_distinct_eigenvalues(q.Y):
        raise NonGeneric("Y has a repeated eigenvalue")
    a, b = subspace_dims(q)
    if a + b == q.n:
        return {"component": b, "dims": (a, b)}
    if a + b < q.n:
        return {"locus": "M''-type", "dims": (a, b)}
    raise InternalInconsistency(f"dim C[X,Y]i + dim jC[X,Y] = {a + b} > n = {q.n} on the variety")


def is_nil_point(q):
    return on_variety(q) and (q.Y ** q.n).is_zero()


# semi-invariants and trace invariants


def eval_two_var(f, X, Y):
    """f(X, Y) for a commutative polynomial in (x, y), lifting x^p y^q to X^p Y^q."""
    n = X.rows
    out = RatMatrix.zeros(n)
    xp, yp = {0: RatMatrix.identity(n)}, {0: RatMatrix.identity(n)}

    def power(cache, M, k):
        if k not in cache:
            cache[k] = power(cache, M, k - 1) @ M
        return cache[k]

    for (p, qd), coef in f.terms.items():
        out = out + (power(xp, X, p) @ power(yp, Y, qd)) * coef
    return out


def psi(fs, q):
    """det[f_1(X,Y)i | ... | f_n(X,Y)i]."""
    if len(fs) != q.n:
        raise ValueError(f"need {q.n} polynomials, got {len(fs)}")
    columns = [list(eval_two_var(f, q.X, q.Y) @ q.i) for f in fs]
    return RatMatrix.from_columns(columns).det()


def phi(fs, q):
    """det of the rows j f_t(X,Y)."""
    if len(fs) != q.n:
        raise ValueError(f"need {q.n} polynomials, got {len(fs)}")
    rows = [list(q.j @ eval_two_var(f, q.X, q.Y)) for f in fs]
    return RatMatrix.from_rows(rows).det()


def invariant_trace(word, q, z="ij"):
    """Trace of a word in X, Y, Z with Z = ij (default) or Z = -[X,Y]."""
    if z == "ij":
        Z = q.i.outer(q.j)
    elif z == "commutator":
        Z = -q.X.commutator(q.Y)
    else:
        raise ValueError(f"unknown Z substitution {z!r}")
    letters = {"X": q.X, "Y": q.Y, "Z": Z}
    M = RatMatrix.identity(q.n)
    for ch in word:
        try:
            M = M @ letters[ch]
        except KeyError:
            raise ValueError(f"word letters must be X, Y or Z, got {ch!r}") from None
    return M.trace()


# tangent-level checks at normal-form points


def _flatten(q_parts):
    X, Y, i, j = q_parts
    return list(X.entries) + list(Y.entries) + list(i) + list(j)


def orbit_jacobian_rank(x, y, k):
    """Rank of the differential of (g, x, y) -> g . normal_form(y, x, k, k) at g = 1."""
    p = NormalFormParams(y, x, k, k)
    q = normal_form(p)
    n = q.n
    zero_m = RatMatrix.zeros(n)
    zero_v = RatVector.zeros(n)
    columns = []
    for a in range(n):
        for b in range(n):
            E = RatMatrix.unit(n, a, b)
            columns.append(_flatten((E.commutator(q.X), E.commutator(q.Y), E @ q.i, -(q.j @ E))))
    for r in range(n):
        columns.append(_flatten((RatMatrix.unit(n, r, r), zero_m, zero_v, zero_v)))
    for r in range(n):
        dX = [ZERO] * (n * n)
        for a in range(k, n):
            for b in range(k):
                d = ONE / (p.y[a] - p.y[b]) ** 2
                if a == r:
                    dX[a * n + b] -= d
                if b == r:
                    dX[a * n + b] += d
        columns.append(_flatten((RatMatrix(n, n, dX), RatMatrix.unit(n, r, r), zero_v, zero_v)))
    return rank(RatMatrix.from_columns(columns))


def stabilizer_dimension(q):
    """dim {A in gl_n : [A,X] = 0, [A,Y] = 0, A i = 0, j A = 0}."""
    n = q.n
    rows = []
    for a in range(n):
        for b in range(n):
            E = RatMatrix.unit(n, a, b)
            rows.append(_flatten((E.commutator(q.X), E.commutator(q.Y), E @ q.i, q.j @ E)))
    return n * n - rank_of_vectors(rows)


__all__ = [
    "NormalFormParams",
    "Quadruple",
    "classify_generic",
    "co_cyclic_subspace",
    "cyclic_subspace",
    "epsilon",
    "eval_two_var",
    "invariant_trace",
    "is_nil_point",
    "moment_map",
    "normal_form",
    "on_variety",
    "orbit_jacobian_rank",
    "pairing_vanishes",
    "phi",
    "psi",
    "stabilizer_dimension",
    "subspace_dims",
]
