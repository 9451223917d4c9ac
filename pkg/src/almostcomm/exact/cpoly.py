"""Univariate polynomials over Q in the formal parameter ``c``."""
from fractions import Fraction
import re

from ..errors import NotDivisible
from .matrix import Q, qstr

_TERM = re.compile(r"^([+-]?\d+(?:/\d+)?)(?:\*c(?:\^(\d+))?)?$")


class CPoly:
    """Immutable polynomial in ``c``; ``coeffs[k]`` is the coefficient of c**k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Q(v) for v in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("CPoly is immutable")

    @classmethod
    def _raw(cls, coeffs):
        p = object.__new__(cls)
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(p, "coeffs", tuple(cs))
        return p

    @classmethod
    def c(cls):
        return cls._raw((Fraction(0), Fraction(1)))

    @classmethod
    def const(cls, v):
        return cls._raw((Q(v),))

    def degree(self):
        return len(self.coeffs) - 1

    def is_constant(self):
        return len(self.coeffs) <= 1

    def constant_value(self):
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, CPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == ((Fraction(other),) if other else ())
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.constant_value())
        return hash(("CPoly", self.coeffs))

    @staticmethod
    def _coerce(other):
        if isinstance(other, CPoly):
            return other.coeffs
        if isinstance(other, (int, Fraction)):
            return (Fraction(other),)
        return None

    def __add__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        a = self.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, v in enumerate(b):
            out[k] += v
        return CPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return CPoly._raw([-v for v in self.coeffs])

    def __sub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return self + CPoly._raw([-v for v in b])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        a = self.coeffs
        if not a or not b:
            return CPoly._raw(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return CPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = CPoly._raw((Fraction(1),))
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other):
        b = self._coerce(other)
        if not b:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(len(rem) - len(b) + 1, 0)
        lead = b[-1]
        while len(rem) >= len(b) and rem:
            shift = len(rem) - len(b)
            f = rem[-1] / lead
            quot[shift] = f
            for k, v in enumerate(b):
                rem[shift + k] -= f * v
            while rem and not rem[-1]:
                rem.pop()
        return CPoly._raw(quot), CPoly._raw(rem)

    def __truediv__(self, other):
        """Exact division; raises NotDivisible on a nonzero remainder."""
        q, r = self.divmod(other)
        if r:
            raise NotDivisible(f"{self} is not divisible by {other}")
        return q

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return CPoly._raw(b) / self

    def __call__(self, c):
        c = Q(c)
        out = Fraction(0)
        for v in reversed(self.coeffs):
            out = out * c + v
        return out

    def __str__(self):
        if not self.coeffs:
            return "0/1"
        parts = []
        for k, v in enumerate(self.coeffs):
            if not v:
                continue
            if k == 0:
                parts.append(qstr(v))
            elif k == 1:
                parts.append(f"{qstr(v)}*c")
            else:
                parts.append(f"{qstr(v)}*c^{k}")
        return " + ".join(parts)

    def __repr__(self):
        return f"CPoly({self})"

    @classmethod
    def parse(cls, text):
        """Inverse of ``str``; also accepts a bare rational."""
        text = text.strip()
        if not text:
            raise ValueError("empty c-polynomial")
        coeffs = {}
        for part in text.split(" + "):
            m = _TERM.match(part.strip())
            if not m:
                raise ValueError(f"bad c-polynomial term {part!r}")
            value = Fraction(m.group(1))
            if "*c" in part:
                power = int(m.group(2)) if m.group(2) else 1
            else:
                power = 0
            coeffs[power] = coeffs.get(power, Fraction(0)) + value
        top = max(coeffs)
        return cls([coeffs.get(k, 0) for k in range(top + 1)])


def coef_to_json(v):
    if isinstance(v, CPoly):
        return str(v)
    return qstr(Q(v))


def coef_from_json(text, domain):
    if domain == "Q[c]":
        return CPoly.parse(text)
    return Q(text)
