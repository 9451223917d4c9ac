"""Permutations of {0, ..., n-1} stored as image tuples.

Convention (used everywhere in the package): ``w[k]`` is the image of k, and
``compose(w, v)`` is the function composite w after v, i.e. ``(w*v)(k) =
w[v[k]]``.  A permutation acts on variables by ``x_k -> x_{w(k)}``, so
``w x_k w^-1 = x_{w(k)}`` inside the Cherednik algebra.  JSON uses 1-based
images.
"""
from itertools import permutations


def identity(n):
    return tuple(range(n))


def compose(w, v):
    return tuple(w[k] for k in v)


def inverse(w):
    out = [0] * len(w)
    for k, image in enumerate(w):
        out[image] = k
    return tuple(out)


def transposition(n, i, j):
    w = list(range(n))
    w[i], w[j] = j, i
    return tuple(w)


def sign(w):
    seen = [False] * len(w)
    s = 1
    for start in range(len(w)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = w[k]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def all_perms(n):
    return [tuple(p) for p in permutations(range(n))]


def act_on_exponents(w, exps):
    """Exponent vector of ``w(x^exps)`` where x_k goes to x_{w(k)}."""
    out = [0] * len(exps)
    for k, a in enumerate(exps):
        out[w[k]] = a
    return tuple(out)


def is_permutation(images, n=None):
    n = len(images) if n is None else n
    return len(images) == n and sorted(images) == list(range(n))


def to_json(w):
    return [k + 1 for k in w]


def from_json(data):
    w = tuple(int(k) - 1 for k in data)
    if not is_permutation(w):
        raise ValueError(f"not a permutation: {data}")
    return w
