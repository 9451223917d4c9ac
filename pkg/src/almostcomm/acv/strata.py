"""Relevant pairs (X, i), conormal spaces to their strata, and the nilpotency test.

For a pair (X, i) with rational spectrum, the Levi subalgebra is cut out by the
generalized eigenspaces of X and its center is spanned by the projectors onto
them.  The conormal space is the solution set in (Y, j) of

    [X, Y] + i j = 0,    Tr(P_z Y) = 0 for every generalized-eigenspace projector P_z.
"""
from dataclasses import dataclass, field
from fractions import Fraction

from ..exact import MPoly, RatMatrix, RatVector, rational_spectrum
from ..exact.linalg import kernel, rank
from ..exact.matrix import ONE, ZERO


@dataclass(frozen=True)
class Block:
    eigenvalue: Fraction
    size: int
    i_height: int


@dataclass(frozen=True)
class StratumLabel:
    blocks: tuple
    regular: bool
    relevant: bool

    def to_json(self):
        return {
            "blocks": [
                {"eigenvalue": f"{b.eigenvalue.numerator}/{b.eigenvalue.denominator}", "size": b.size, "iHeight": b.i_height}
                for b in self.blocks
            ],
            "regular": self.regular,
            "relevant": self.relevant,
        }


@dataclass(frozen=True)
class ConormalSpace:
    X: RatMatrix
    i: RatVector
    param_dim: int
    Y: tuple  # n x n nested tuples of MPoly in the parameters
    j: tuple  # length-n tuple of MPoly
    members: tuple = field(default=(), repr=False)  # basis solutions (Y_k, j_k)

    @property
    def params(self):
        return tuple(f"t{k}" for k in range(1, self.param_dim + 1))

    def specialize(self, values):
        """The member (Y, j) at rational parameter values."""
        n = self.X.rows
        Y = RatMatrix.zeros(n)
        j = RatVector.zeros(n)
        for v, (Yk, jk) in zip(values, self.members, strict=True):
            Y = Y + Yk * v
            j = j + jk * v
        return Y, j


def jordan_block(z, n):
    """z times the identity plus ones on the superdiagonal."""
    return RatMatrix(n, n, [z if r == s else (ONE if s == r + 1 else ZERO) for r in range(n) for s in range(n)])


def jordan_block_solve(z, n, m, j, first_row):
    """The upper-triangular Y with [J_n(z), Y] + i j = 0 and the given first row.

    Here i = (1,...,1,0,...,0) with m ones and j must vanish on its first m
    coordinates.  The remaining rows follow Y[r][s] = Y[r-1][s-1] - i[r-1] j[s].
    """
    j = RatVector(j)
    first_row = RatVector(first_row)
    if not 0 <= m <= n or len(j) != n or len(first_row) != n:
        raise ValueError("malformed Jordan-block data")
    if any(j[t] for t in range(m)):
        raise ValueError("j must vanish on the first m coordinates")
    i = RatVector([ONE] * m + [ZERO] * (n - m))
    Y = [[ZERO] * n for _ in range(n)]
    Y[0] = list(first_row)
    for r in range(1, n):
        for s in range(r, n):
            Y[r][s] = Y[r - 1][s - 1] - i[r - 1] * j[s]
    Ym = RatMatrix.from_rows(Y)
    X = jordan_block(z, n)
    if not (X.commutator(Ym) + i.outer(j)).is_zero():
        raise ValueError("recursion does not solve [X,Y] + ij = 0 for this data")
    return Ym


def centralizer_dimension(X):
    n = X.rows
    rows = []
    for a in range(n):
        for b in range(n):
            rows.append(list(RatMatrix.unit(n, a, b).commutator(X).entries))
    return n * n - rank(RatMatrix.from_rows(rows))


def is_regular(X):
    return centralizer_dimension(X) == X.rows


def eigen_decomposition(X):
    """[(z, multiplicity, basis of the generalized eigenspace)]; raises NonRationalSpectrum."""
    n = X.rows
    out = []
    for z, mult in rational_spectrum(X):
        basis = kernel((X - RatMatrix.identity(n) * z) ** mult)
        out.append((z, mult, basis))
    return out


def _projectors(X, decomposition):
    n = X.rows
    B = RatMatrix.from_columns([list(v) for _, _, basis in decomposition for v in basis])
    B_inv = B.inverse()
    projectors = []
    start = 0
    for _, mult, _ in decomposition:
        D = RatMatrix.diag([ONE if start <= t < start + mult else ZERO for t in range(n)])
        projectors.append(B @ D @ B_inv)
        start += mult
    return projectors


def stratum_label(X, i):
    n = X.rows
    i = RatVector(i)
    decomposition = eigen_decomposition(X)
    projectors = _projectors(X, decomposition)
    blocks = []
    single = True
    relevant = True
    for (z, mult, _), P in zip(decomposition, projectors):
        if n - rank(X - RatMatrix.identity(n) * z) != 1:
            single = False
        ik = P @ i
        N = X - RatMatrix.identity(n) * z
        height = 0
        v = ik
        while not v.is_zero():
            v = N @ v
            height += 1
        blocks.append(Block(z, mult, height))
        if height not in (0, mult):
            relevant = False
    return StratumLabel(tuple(blocks), single, single and relevant)


def is_relevant(X, i):
    return stratum_label(X, i).relevant


def conormal_space(X, i):
    """Parametrized solutions (Y(t), j(t)) of the conormal equations at (X, i)."""
    n = X.rows
    i = RatVector(i)
    projectors = _projectors(X, eigen_decomposition(X))
    nu = n * n + n  # unknowns: Y row-major, then j
    rows = []
    for r in range(n):
        for s in range(n):
            row = [ZERO] * nu
            for t in range(n):
                # (XY)_rs = sum_t X_rt Y_ts ; (YX)_rs = sum_t Y_rt X_ts
                row[t * n + s] += X[r, t]
                row[r * n + t] -= X[t, s]
            row[n * n + s] += i[r]
            rows.append(row)
    for P in projectors:
        # Tr(P Y) = sum_{r,s} P_sr Y_rs
        rows.append([P[s, r] for r in range(n) for s in range(n)] + [ZERO] * n)
    basis = kernel(RatMatrix.from_rows(rows))
    d = len(basis)
    params = tuple(f"t{k}" for k in range(1, d + 1))
    members = []
    for v in basis:
        members.append((RatMatrix(n, n, v.entries[: n * n]), RatVector(v.entries[n * n:])))
    Ygen = tuple(
        tuple(MPoly(params, {tuple(1 if t == k else 0 for t in range(d)): Yk[r, s] for k, (Yk, _) in enumerate(members)}) for s in range(n))
        for r in range(n)
    )
    jgen = tuple(
        MPoly(params, {tuple(1 if t == k else 0 for t in range(d)): jk[s] for k, (_, jk) in enumerate(members)}) for s in range(n)
    )
    return ConormalSpace(X, i, d, Ygen, jgen, tuple(members))


def _poly_matmul(A, B, zero):
    n = len(A)
    return tuple(
        tuple(sum((A[r][t] * B[t][s] for t in range(n) if A[r][t] and B[t][s]), zero) for s in range(n)) for r in range(n)
    )


def all_Y_nilpotent(N):
    """True iff every member Y(t) is nilpotent, i.e. Tr(Y(t)^m) vanishes identically for m = 1..n."""
    n = N.X.rows
    if N.param_dim == 0:
        return True
    zero = MPoly.zero(N.params)
    power = N.Y
    for m in range(1, n + 1):
        if m > 1:
            power = _poly_matmul(power, N.Y, zero)
        trace = sum((power[r][r] for r in range(n)), zero)
        if not trace.is_zero():
            return False
    return True
