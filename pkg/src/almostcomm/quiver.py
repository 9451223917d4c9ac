"""Quiver forms and root combinatorics.

Root membership follows Kac: reflect at loop-free vertices while that lowers
the height.  A vector reaching a simple root at a loop-free vertex is a real
root; one stopping in the fundamental region (connected support and
(a, e_i) <= 0 at every loop-free vertex i) is imaginary; anything else,
including vectors that leave the positive cone, is not a root.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import BoundExceeded, NotSigmaPrime
from .exact.matrix import Q, qstr

DEFAULT_MAX_PARTS = 16
DEFAULT_MAX_ROOTS = 400


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    edges: tuple  # (tail, head) pairs; loops and parallel edges allowed

    def __post_init__(self):
        edges = tuple((int(t), int(h)) for t, h in self.edges)
        for t, h in edges:
            if not (0 <= t < self.vertex_count and 0 <= h < self.vertex_count):
                raise ValueError(f"edge {(t, h)} out of range")
        object.__setattr__(self, "edges", edges)

    def loop_free_vertices(self):
        looped = {t for t, h in self.edges if t == h}
        return [v for v in range(self.vertex_count) if v not in looped]

    def to_json(self):
        return {"vertices": self.vertex_count, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["vertices"]), tuple(tuple(e) for e in data["edges"]))


def ringel(q, a, b):
    if len(a) != q.vertex_count or len(b) != q.vertex_count:
        raise ValueError("dimension vector length mismatch")
    return sum(x * y for x, y in zip(a, b)) - sum(a[t] * b[h] for t, h in q.edges)


def symmetric_form(q, a, b):
    return ringel(q, a, b) + ringel(q, b, a)


def tits_q(q, a):
    return ringel(q, a, a)


def tits_p(q, a):
    return 1 - ringel(q, a, a)


def _unit(n, k):
    return tuple(1 if t == k else 0 for t in range(n))


def _connected_support(q, a):
    support = {v for v, x in enumerate(a) if x}
    if not support:
        return False
    start = next(iter(support))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for t, h in q.edges:
            for u, w in ((t, h), (h, t)):
                if u == v and w in support and w not in seen:
                    seen.add(w)
                    stack.append(w)
    return seen == support


@lru_cache(maxsize=None)
def root_type(q, a):
    """'real', 'imaginary' or None for a nonnegative nonzero vector."""
    a = tuple(a)
    if not any(a) or any(x < 0 for x in a):
        return None
    loop_free = q.loop_free_vertices()
    n = q.vertex_count
    current = a
    while True:
        if any(x < 0 for x in current):
            return None
        for v in loop_free:
            if current == _unit(n, v):
                return "real"
        step = None
        for v in loop_free:
            pairing = symmetric_form(q, current, _unit(n, v))
            if pairing > 0:
                step = (v, pairing)
                break
        if step is None:
            return "imaginary" if _connected_support(q, current) else None
        v, pairing = step
        current = tuple(x - pairing if k == v else x for k, x in enumerate(current))


def is_root(q, a):
    return root_type(q, tuple(a)) is not None


def positive_roots(q, bound):
    """All positive roots below ``bound`` as (vector, 'real'|'imaginary'), by height then lex."""
    if len(bound) != q.vertex_count or any(b < 0 for b in bound):
        raise ValueError("bound must be a nonnegative vector of the right length")
    out = []
    for a in product(*(range(b + 1) for b in bound)):
        kind = root_type(q, a)
        if kind:
            out.append((a, kind))
    out.sort(key=lambda t: (sum(t[0]), t[0]))
    return out


def dot(a, lam):
    return sum(Q(x) * Q(y) for x, y in zip(a, lam))


def r_lambda(q, lam, bound):
    return [a for a, _ in positive_roots(q, bound) if dot(a, lam) == 0]


def _decompositions(target, parts, max_parts):
    """Multisets of ``parts`` (non-increasing index order) summing to ``target``."""
    parts = list(parts)
    out = []

    def rec(rest, start, chosen):
        if not any(rest):
            out.append(tuple(chosen))
            return
        if len(chosen) >= max_parts:
            raise BoundExceeded(f"decomposition needs more than {max_parts} parts")
        for k in range(start, len(parts)):
            p = parts[k]
            if all(x <= y for x, y in zip(p, rest)):
                chosen.append(p)
                rec(tuple(y - x for x, y in zip(p, rest)), k, chosen)
                chosen.pop()

    rec(tuple(target), 0, [])
    return out


def all_decompositions(q, lam, alpha, max_parts=DEFAULT_MAX_PARTS, max_roots=DEFAULT_MAX_ROOTS):
    """Every multiset of roots in R_lambda^+ summing to alpha, as sorted tuples."""
    roots = r_lambda(q, lam, alpha)
    if len(roots) > max_roots:
        raise BoundExceeded(f"{len(roots)} candidate roots exceed the cap {max_roots}")
    roots.sort(key=lambda a: (-sum(a), tuple(-x for x in a)))
    return [tuple(sorted(d, reverse=True)) for d in _decompositions(alpha, roots, max_parts)]


def sigma_prime_decomps(q, lam, alpha, max_parts=DEFAULT_MAX_PARTS, max_roots=DEFAULT_MAX_ROOTS):
    """Decompositions of alpha into R_lambda^+ parts with sum of p equal to p(alpha).

    Raises NotSigmaPrime when some decomposition into two or more parts has a
    strictly larger sum.
    """
    alpha = tuple(alpha)
    if not is_root(q, alpha) or dot(alpha, lam) != 0:
        raise ValueError(f"{alpha} is not in R_lambda^+")
    target = tits_p(q, alpha)
    tying = []
    for d in all_decompositions(q, lam, alpha, max_parts, max_roots):
        total = sum(tits_p(q, b) for b in d)
        if len(d) >= 2 and total > target:
            raise NotSigmaPrime(f"{alpha} is not in Sigma'_lambda: {d} has p-sum {total} > {target}", witness=d)
        if total == target:
            tying.append(d)
    tying.sort(key=lambda d: (len(d), d))
    return tying


def is_sigma(q, lam, alpha):
    """alpha in Sigma_lambda: every proper decomposition has a strictly smaller p-sum."""
    target = tits_p(q, alpha)
    return all(
        sum(tits_p(q, b) for b in d) < target for d in all_decompositions(q, lam, alpha) if len(d) >= 2
    )


def component_count(q, lam, alpha, **caps):
    return len(sigma_prime_decomps(q, lam, alpha, **caps))


def expected_dim(q, alpha):
    return sum(x * x for x in alpha) - 1 + 2 * tits_p(q, alpha)


# framed affine quivers


def jordan_quiver():
    return Quiver(1, ((0, 0),))


def cyclic_quiver(k):
    """Affine A_{k-1} as an oriented k-cycle (k = 1 is the Jordan quiver)."""
    if k == 1:
        return jordan_quiver()
    return Quiver(k, tuple((v, (v + 1) % k) for v in range(k)))


def affine_d4():
    # center 4, leaves 0..3; vertex 0 is extending
    return Quiver(5, ((0, 4), (1, 4), (2, 4), (3, 4)))


AFFINE = {
    "jordan": (jordan_quiver, (1,)),
    "A1": (lambda: cyclic_quiver(2), (1, 1)),
    "A2": (lambda: cyclic_quiver(3), (1, 1, 1)),
    "D4": (affine_d4, (1, 1, 1, 1, 2)),
}


@dataclass(frozen=True)
class FramedAffine:
    quiver: Quiver
    alpha: tuple
    delta: tuple  # padded with the framing coordinate 0
    framing_vertex: int

    def lambda_ok(self, lam):
        """lambda_s = 0 and lambda . delta = 0."""
        return Q(lam[self.framing_vertex]) == 0 and dot(self.delta, lam) == 0


def frame_affine(affine, extending_vertex, n, delta):
    """Adjoin a vertex s and an arrow s -> o; alpha = n delta + e_s."""
    delta = tuple(delta)
    if len(delta) != affine.vertex_count:
        raise ValueError("delta has the wrong length")
    if tits_q(affine, delta) != 0:
        raise ValueError(f"q(delta) = {tits_q(affine, delta)} != 0")
    s = affine.vertex_count
    framed = Quiver(s + 1, affine.edges + ((s, extending_vertex),))
    alpha = tuple(n * d for d in delta) + (1,)
    return FramedAffine(framed, alpha, delta + (0,), s)


def framed(name, n):
    build, delta = AFFINE[name]
    return frame_affine(build(), 0, n, delta)


def decomposition_to_json(d):
    return [list(b) for b in d]


def weight_to_json(lam):
    return [qstr(Q(x)) for x in lam]

