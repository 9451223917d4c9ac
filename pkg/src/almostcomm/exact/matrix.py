"""Dense exact matrices and vectors over Q."""
from fractions import Fraction
from functools import reduce
from math import lcm

from ..kernels import echelon_int

ZERO = Fraction(0)
ONE = Fraction(1)


def Q(value):
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def qstr(q):
    """Canonical ``"p/q"`` string (the denominator is always written)."""
    return f"{q.numerator}/{q.denominator}"


class RatVector:
    __slots__ = ("entries",)

    def __init__(self, entries):
        object.__setattr__(self, "entries", tuple(Q(v) for v in entries))

    def __setattr__(self, name, value):
        raise AttributeError("RatVector is immutable")

    @classmethod
    def zeros(cls, n):
        return cls([ZERO] * n)

    @classmethod
    def unit(cls, n, k):
        return cls([ONE if t == k else ZERO for t in range(n)])

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    def __eq__(self, other):
        return isinstance(other, RatVector) and self.entries == other.entries

    def __hash__(self):
        return hash(("RatVector", self.entries))

    def __repr__(self):
        return "RatVector([" + ", ".join(str(v) for v in self.entries) + "])"

    def __add__(self, other):
        return RatVector([a + b for a, b in zip(self.entries, other.entries, strict=True)])

    def __sub__(self, other):
        return RatVector([a - b for a, b in zip(self.entries, other.entries, strict=True)])

    def __neg__(self):
        return RatVector([-a for a in self.entries])

    def __mul__(self, scalar):
        s = Q(scalar)
        return RatVector([s * a for a in self.entries])

    __rmul__ = __mul__

    def __matmul__(self, other):
        """Row vector times matrix."""
        if not isinstance(other, RatMatrix):
            return NotImplemented
        if other.rows != len(self):
            raise ValueError("dimension mismatch")
        return RatVector(
            [sum((self.entries[r] * other[r, c] for r in range(other.rows)), ZERO) for c in range(other.cols)]
        )

    def dot(self, other):
        return sum((a * b for a, b in zip(self.entries, other.entries, strict=True)), ZERO)

    def is_zero(self):
        return not any(self.entries)

    def outer(self, other):
        """Column ``self`` times row ``other``."""
        return RatMatrix(len(self), len(other), [a * b for a in self.entries for b in other.entries])

    def to_json(self):
        return [qstr(v) for v in self.entries]

    @classmethod
    def from_json(cls, data):
        return cls([Q(v) for v in data])


class RatMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(Q(v) for v in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ValueError(f"need {rows}x{cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("RatMatrix is immutable")

    @classmethod
    def _raw(cls, rows, cols, entries):
        m = object.__new__(cls)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "cols", cols)
        object.__setattr__(m, "entries", tuple(entries))
        return m

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [v for r in rows for v in r])

    @classmethod
    def from_columns(cls, columns):
        columns = [list(c) for c in columns]
        return cls.from_rows(list(zip(*columns))) if columns else cls(0, 0, [])

    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        return cls._raw(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def identity(cls, n):
        return cls._raw(n, n, [ONE if r == c else ZERO for r in range(n) for c in range(n)])

    @classmethod
    def diag(cls, values):
        values = [Q(v) for v in values]
        n = len(values)
        return cls._raw(n, n, [values[r] if r == c else ZERO for r in range(n) for c in range(n)])

    @classmethod
    def unit(cls, n, r, c):
        return cls._raw(n, n, [ONE if (a, b) == (r, c) else ZERO for a in range(n) for b in range(n)])

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r * self.cols + c]

    def row(self, r):
        return RatVector(self.entries[r * self.cols:(r + 1) * self.cols])

    def col(self, c):
        return RatVector(self.entries[c::self.cols])

    def row_lists(self):
        return [list(self.entries[r * self.cols:(r + 1) * self.cols]) for r in range(self.rows)]

    def __eq__(self, other):
        return (
            isinstance(other, RatMatrix)
            and self.shape == other.shape
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash(("RatMatrix", self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(str(v) for v in r) for r in self.row_lists())
        return f"RatMatrix[{body}]"

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RatMatrix._raw(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RatMatrix._raw(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return RatMatrix._raw(self.rows, self.cols, [-a for a in self.entries])

    def __mul__(self, scalar):
        s = Q(scalar)
        return RatMatrix._raw(self.rows, self.cols, [s * a for a in self.entries])

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, RatVector):
            if len(other) != self.cols:
                raise ValueError("dimension mismatch")
            v = other.entries
            n = self.cols
            e = self.entries
            return RatVector(
                [sum((e[r * n + t] * v[t] for t in range(n) if v[t]), ZERO) for r in range(self.rows)]
            )
        if not isinstance(other, RatMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        a, b = self.entries, other.entries
        n, m, p = self.rows, self.cols, other.cols
        out = [ZERO] * (n * p)
        for r in range(n):
            for t in range(m):
                x = a[r * m + t]
                if not x:
                    continue
                base = t * p
                for c in range(p):
                    y = b[base + c]
                    if y:
                        out[r * p + c] += x * y
        return RatMatrix._raw(n, p, out)

    def __pow__(self, k):
        if not self.is_square() or k < 0:
            raise ValueError("power needs a square matrix and k >= 0")
        result = RatMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    @property
    def T(self):
        return RatMatrix._raw(self.cols, self.rows, [self[r, c] for c in range(self.cols) for r in range(self.rows)])

    def trace(self):
        if not self.is_square():
            raise ValueError("trace of a non-square matrix")
        return sum((self[r, r] for r in range(self.rows)), ZERO)

    def is_zero(self):
        return not any(self.entries)

    def diagonal(self):
        return [self[r, r] for r in range(min(self.rows, self.cols))]

    def is_upper_triangular(self):
        return all(not self[r, c] for r in range(self.rows) for c in range(min(r, self.cols)))

    def commutator(self, other):
        return self @ other - other @ self

    def int_rows(self):
        """Rows scaled to integer vectors (same row space)."""
        out = []
        for r in self.row_lists():
            d = reduce(lcm, (v.denominator for v in r), 1)
            out.append([int(v * d) for v in r])
        return out

    def rref(self):
        """Reduced row echelon form as ``(rows of Fractions, pivot columns)``."""
        reduced, pivots = echelon_int(self.int_rows(), self.cols)
        out = []
        for row, p in zip(reduced, pivots):
            a = row[p]
            out.append([Fraction(v, a) for v in row])
        return out, pivots

    def rank(self):
        return len(self.rref()[1])

    def det(self):
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        a = self.row_lists()
        det = ONE
        for c in range(n):
            piv = next((r for r in range(c, n) if a[r][c]), None)
            if piv is None:
                return ZERO
            if piv != c:
                a[c], a[piv] = a[piv], a[c]
                det = -det
            p = a[c][c]
            det *= p
            for r in range(c + 1, n):
                f = a[r][c]
                if f:
                    f = f / p
                    row, prow = a[r], a[c]
                    for t in range(c, n):
                        if prow[t]:
                            row[t] -= f * prow[t]
        return det

    def inverse(self):
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = RatMatrix.from_rows([r + [ONE if c == k else ZERO for c in range(n)] for k, r in enumerate(self.row_lists())])
        rows, pivots = aug.rref()
        if pivots[:n] != list(range(n)) or len(pivots) < n or pivots[n - 1] >= n:
            raise ZeroDivisionError("matrix is singular")
        return RatMatrix.from_rows([r[n:] for r in rows[:n]])

    def to_json(self):
        return [[qstr(v) for v in r] for r in self.row_lists()]

    @classmethod
    def from_json(cls, data):
        return cls.from_rows([[Q(v) for v in r] for r in data])
