"""Sparse multivariate polynomials with exact coefficients.

Coefficients are Fractions (domain ``"Q"``) or :class:`CPoly` values in the
formal parameter c (domain ``"Q[c]"``).  Terms are kept in a dict keyed by
exponent tuples; zero coefficients are never stored.  The canonical term order
is graded lexicographic, used for leading terms, printing and JSON.
"""
from fractions import Fraction

from ..errors import NotDivisible
from .cpoly import CPoly, coef_from_json, coef_to_json
from .matrix import Q

DOMAINS = ("Q", "Q[c]")


def grlex_key(exps):
    return (sum(exps), exps)


def _coerce_coef(v):
    if isinstance(v, CPoly):
        return v if len(v.coeffs) > 1 else v.constant_value()
    return Q(v)


class MPoly:
    __slots__ = ("vars", "terms", "domain")

    def __init__(self, vars, terms=None, domain=None):
        vars = tuple(vars)
        clean = {}
        uses_c = False
        for exps, coef in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(vars) or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for variables {vars}")
            coef = _coerce_coef(coef)
            if coef:
                clean[exps] = clean.get(exps, 0) + coef
                if not clean[exps]:
                    del clean[exps]
                uses_c = uses_c or isinstance(coef, CPoly)
        if domain is None:
            domain = "Q[c]" if uses_c else "Q"
        if domain not in DOMAINS:
            raise ValueError(f"unknown coefficient domain {domain!r}")
        if uses_c and domain == "Q":
            raise ValueError("c-dependent coefficient in a rational polynomial")
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "domain", domain)

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    @classmethod
    def _raw(cls, vars, terms, domain):
        p = object.__new__(cls)
        object.__setattr__(p, "vars", vars)
        object.__setattr__(p, "terms", terms)
        object.__setattr__(p, "domain", domain)
        return p

    # constructors

    @classmethod
    def zero(cls, vars, domain="Q"):
        return cls._raw(tuple(vars), {}, domain)

    @classmethod
    def constant(cls, vars, value, domain=None):
        return cls(vars, {(0,) * len(tuple(vars)): value}, domain)

    @classmethod
    def monomial(cls, vars, exps, coef=1, domain=None):
        return cls(vars, {tuple(exps): coef}, domain)

    @classmethod
    def var(cls, vars, which, domain="Q"):
        vars = tuple(vars)
        k = vars.index(which) if isinstance(which, str) else which
        return cls._raw(vars, {tuple(1 if t == k else 0 for t in range(len(vars))): Fraction(1)}, domain)

    # basic protocol

    @property
    def nvars(self):
        return len(self.vars)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction, CPoly)):
            return self.terms == MPoly.constant(self.vars, other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def _join_domain(self, other):
        return "Q[c]" if "Q[c]" in (self.domain, other.domain) else "Q"

    def _check(self, other):
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch {self.vars} vs {other.vars}")

    def _lift(self, other):
        if isinstance(other, MPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, CPoly)):
            return MPoly.constant(self.vars, other)
        return None

    # arithmetic

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, v in other.terms.items():
            w = out.get(e)
            if w is None:
                out[e] = v
            else:
                w = w + v
                if w:
                    out[e] = _coerce_coef(w)
                else:
                    del out[e]
        return MPoly._raw(self.vars, out, self._join_domain(other))

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.vars, {e: -v for e, v in self.terms.items()}, self.domain)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s):
        s = _coerce_coef(s)
        if not s:
            return MPoly._raw(self.vars, {}, self.domain)
        domain = "Q[c]" if isinstance(s, CPoly) else self.domain
        out = {}
        for e, v in self.terms.items():
            w = v * s
            if w:
                out[e] = _coerce_coef(w)
        return MPoly._raw(self.vars, out, domain)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CPoly)):
            return self.scale(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check(other)
        out = {}
        for e1, v1 in self.terms.items():
            for e2, v2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                w = out.get(e)
                out[e] = v1 * v2 if w is None else w + v1 * v2
        out = {e: _coerce_coef(v) for e, v in out.items() if v}
        return MPoly._raw(self.vars, out, self._join_domain(other))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = MPoly.constant(self.vars, 1, self.domain)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_monomial(self, exps, coef=1):
        coef = _coerce_coef(coef)
        domain = "Q[c]" if isinstance(coef, CPoly) else self.domain
        out = {}
        for e, v in self.terms.items():
            w = v * coef
            if w:
                out[tuple(a + b for a, b in zip(e, exps))] = _coerce_coef(w)
        return MPoly._raw(self.vars, out, domain)

    # structure

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, k):
        return max((e[k] for e in self.terms), default=-1)

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def homogeneous_part(self, degree, weights=None):
        weights = weights or (1,) * self.nvars
        out = {e: v for e, v in self.terms.items() if sum(w * a for w, a in zip(weights, e)) == degree}
        return MPoly._raw(self.vars, out, self.domain)

    def diff(self, k):
        out = {}
        for e, v in self.terms.items():
            if e[k]:
                f = list(e)
                f[k] -= 1
                out[tuple(f)] = _coerce_coef(v * e[k])
        return MPoly._raw(self.vars, out, self.domain)

    def permute_vars(self, images):
        """Rename variable k to variable ``images[k]``."""
        out = {}
        for e, v in self.terms.items():
            f = [0] * len(e)
            for k, a in enumerate(e):
                f[images[k]] = a
            out[tuple(f)] = v
        return MPoly._raw(self.vars, out, self.domain)

    def evaluate(self, values):
        """Evaluate at a point; ``values`` is a sequence or a name->value dict."""
        if isinstance(values, dict):
            values = [values[name] for name in self.vars]
        values = list(values)
        total = Fraction(0)
        for e, v in self.terms.items():
            t = v
            for x, a in zip(values, e):
                if a:
                    t = t * x**a
            total = total + t
        return total

    def substitute(self, images, target_vars=None):
        """Replace each variable by a polynomial in ``target_vars``."""
        target_vars = tuple(target_vars) if target_vars is not None else images[0].vars
        result = MPoly.zero(target_vars, self.domain)
        powers = [dict() for _ in self.vars]
        one = MPoly.constant(target_vars, 1)
        for e, v in self.terms.items():
            t = one.scale(v)
            for k, a in enumerate(e):
                if a:
                    p = powers[k].get(a)
                    if p is None:
                        p = images[k] ** a
                        powers[k][a] = p
                    t = t * p
            result = result + t
        return result

    def specialize_c(self, value):
        """Substitute a rational value for c, giving a polynomial over Q."""
        value = Q(value)
        out = {}
        for e, v in self.terms.items():
            w = v(value) if isinstance(v, CPoly) else v
            if w:
                out[e] = w
        return MPoly._raw(self.vars, out, "Q")

    def exact_divide(self, other):
        """Quotient ``q`` with ``self == q * other``; NotDivisible otherwise."""
        self._check(other)
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        lead_e, lead_c = other.leading_term()
        rem = dict(self.terms)
        quot = {}
        while rem:
            e = max(rem, key=grlex_key)
            if any(a < b for a, b in zip(e, lead_e)):
                raise NotDivisible(f"{self} is not divisible by {other}")
            q_e = tuple(a - b for a, b in zip(e, lead_e))
            q_c = rem[e] / lead_c
            quot[q_e] = _coerce_coef(q_c)
            for f, w in other.terms.items():
                g = tuple(a + b for a, b in zip(q_e, f))
                nv = rem.get(g, 0) - q_c * w
                if nv:
                    rem[g] = _coerce_coef(nv)
                else:
                    rem.pop(g, None)
        return MPoly._raw(self.vars, quot, self._join_domain(other))

    # presentation

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, v in self.sorted_terms():
            mono = "*".join(
                name if a == 1 else f"{name}^{a}" for name, a in zip(self.vars, e) if a
            )
            coef = f"({v})" if isinstance(v, CPoly) else str(v)
            if not mono:
                parts.append(coef)
            elif coef == "1":
                parts.append(mono)
            elif coef == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"{coef}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"MPoly({self}; vars={','.join(self.vars)})"

    def to_json(self):
        return {
            "vars": list(self.vars),
            "domain": self.domain,
            "terms": [{"exps": list(e), "coef": coef_to_json(v)} for e, v in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data):
        domain = data.get("domain", "Q")
        terms = {tuple(t["exps"]): coef_from_json(t["coef"], domain) for t in data["terms"]}
        return cls(data["vars"], terms, domain)


def poly_exact_divide(f, g):
    return f.exact_divide(g)


def xvars(n, prefix="x"):
    return tuple(f"{prefix}{k}" for k in range(1, n + 1))
