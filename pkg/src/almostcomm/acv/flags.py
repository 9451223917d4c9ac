"""Simultaneous triangularization of pairs with rank-one commutator, and the
spectral map to unordered pairs of diagonal entries."""
from ..errors import NoCommonFlag, NotOnVariety
from ..exact import RatMatrix, RatVector, rational_spectrum
from ..exact.linalg import kernel, rank, span_basis
from ..exact.matrix import ONE, ZERO
from .points import on_variety


def _restrict(M, B, B_left):
    """Matrix of M on the invariant subspace with basis columns B."""
    return B_left @ M @ B


def _left_inverse(B):
    Bt = B.T
    return (Bt @ B).inverse() @ Bt


def _last_index(v):
    return max(k for k, a in enumerate(v) if a)


def common_eigenvector(X, Y):
    """A common eigenvector of X and Y, assuming rank [X,Y] <= 1.

    Each eigenspace K of Y killed by C = [X,Y] is X-stable and contributes an
    X-eigenvector; among these the one whose last nonzero coordinate comes
    latest is returned (so lower-triangular inputs give the reversal flag).
    If C kills no eigenspace, take the smallest eigenvalue l of Y: im C lies
    in im(Y - l), a proper subspace stable under both maps, and the search
    recurses there.
    """
    d = X.rows
    if d == 0:
        raise NoCommonFlag("empty space")
    C = X.commutator(Y)
    spectrum = rational_spectrum(Y)
    best = None
    for lam, _ in spectrum:
        K = kernel(Y - RatMatrix.identity(d) * lam)
        if not all((C @ v).is_zero() for v in K):
            continue
        KB = RatMatrix.from_columns([list(v) for v in K])
        XK = _restrict(X, KB, _left_inverse(KB))
        mu = rational_spectrum(XK)[0][0]
        v = KB @ kernel(XK - RatMatrix.identity(XK.rows) * mu)[0]
        if best is None or _last_index(v) > _last_index(best):
            best = v
    if best is not None:
        return best
    shifted = Y - RatMatrix.identity(d) * spectrum[0][0]
    image = span_basis([list(shifted.col(c)) for c in range(d)])
    if not image or len(image) == d:
        raise NoCommonFlag("no proper common invariant subspace; is rank [X,Y] <= 1?")
    RB = RatMatrix.from_columns([list(v) for v in image])
    left = _left_inverse(RB)
    v = common_eigenvector(_restrict(X, RB, left), _restrict(Y, RB, left))
    return RB @ v


def _trailing_block(M):
    n = M.rows
    return RatMatrix(n - 1, n - 1, [M[r, c] for r in range(1, n) for c in range(1, n)])


def _flag_basis(X, Y):
    n = X.rows
    if n == 0:
        return RatMatrix.zeros(0)
    v = common_eigenvector(X, Y)
    columns = [list(v)]
    for k in range(n):
        e = list(RatVector.unit(n, k))
        if rank(RatMatrix.from_columns(columns + [e])) > len(columns):
            columns.append(e)
    P = RatMatrix.from_columns(columns)
    P_inv = P.inverse()
    Xp, Yp = P_inv @ X @ P, P_inv @ Y @ P
    S = _flag_basis(_trailing_block(Xp), _trailing_block(Yp))
    lift = RatMatrix(n, n, [
        ONE if (r, c) == (0, 0) else (S[r - 1, c - 1] if r and c else ZERO) for r in range(n) for c in range(n)
    ])
    return P @ lift


def simultaneous_triangularize(X, Y):
    """Return (g, gXg^-1, gYg^-1) with both conjugates upper triangular."""
    if rank(X.commutator(Y)) > 1:
        raise NoCommonFlag("rank [X,Y] > 1")
    P = _flag_basis(X, Y)
    g = P.inverse()
    Xu, Yu = g @ X @ P, g @ Y @ P
    if not (Xu.is_upper_triangular() and Yu.is_upper_triangular()):
        raise NoCommonFlag("flag construction failed")
    return g, Xu, Yu


def spec_map_f(q):
    """The multiset of diagonal pairs (x_r, y_r) after simultaneous triangularization."""
    if not on_variety(q):
        raise NotOnVariety("[X,Y] + ij != 0")
    _, Xu, Yu = simultaneous_triangularize(q.X, q.Y)
    return sorted(zip(Xu.diagonal(), Yu.diagonal()))

