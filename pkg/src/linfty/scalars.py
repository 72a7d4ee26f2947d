"""Exact scalar arithmetic: rationals and rational functions in named parameters.

Every coefficient in the engine is exact: a plain ``fractions.Fraction`` or a
:class:`RatFun`, a quotient of multivariate polynomials in a fixed, ordered
tuple of parameter names with Fraction coefficients.

Normal form conventions:

* polynomials store no zero coefficients; exponent tuples are aligned with the
  declared parameter order and compared in graded lexicographic order;
* a ``RatFun`` denominator is nonzero and its graded-lex leading coefficient
  is 1 (this pins the representation: no further rational content can be moved
  between numerator and denominator);
* no multivariate gcd reduction is attempted.  Equality is decided by
  cross-multiplication, which is exact and needs no factorization.

All values are immutable; operands of binary operations must share the same
parameter tuple (use :meth:`RatFun.with_params` to move between universes).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Union

Rat = Union[int, Fraction]


class ScalarError(Exception):
    """Base class for scalar arithmetic errors."""


class PoleError(ScalarError):
    """A denominator vanishes at the requested evaluation point."""


class ParamsMismatchError(ScalarError):
    """Operands declare different parameter tuples."""


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError("expected an exact rational, got %s" % type(x).__name__)


def grlex_key(exponents: tuple[int, ...]) -> tuple:
    """Graded-lexicographic sort key (total degree first, then lex)."""
    return (sum(exponents), exponents)


def _check_params(a: "ParamPoly | RatFun", b: "ParamPoly | RatFun") -> None:
    if a.params != b.params:
        raise ParamsMismatchError(
            "parameter lists differ: %r vs %r" % (a.params, b.params)
        )


class ParamPoly:
    """A sparse multivariate polynomial over Fraction in named parameters.

    ``terms`` maps exponent tuples (one entry per declared parameter) to
    nonzero Fractions.  Instances are treated as immutable.
    """

    __slots__ = ("params", "terms")

    def __init__(self, params: tuple[str, ...], terms: Mapping[tuple[int, ...], Rat]):
        self.params = tuple(params)
        clean: dict[tuple[int, ...], Fraction] = {}
        n = len(self.params)
        for exps, coeff in terms.items():
            exps = tuple(exps)
            if len(exps) != n:
                raise ScalarError(
                    "exponent tuple %r does not match %d parameters" % (exps, n)
                )
            if any(e < 0 for e in exps):
                raise ScalarError("negative exponent in %r" % (exps,))
            c = as_fraction(coeff)
            if c:
                clean[exps] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, params: tuple[str, ...]) -> "ParamPoly":
        return cls(params, {})

    @classmethod
    def const(cls, params: tuple[str, ...], value: Rat) -> "ParamPoly":
        value = as_fraction(value)
        if not value:
            return cls.zero(params)
        return cls(params, {(0,) * len(params): value})

    @classmethod
    def var(cls, params: tuple[str, ...], name: str) -> "ParamPoly":
        if name not in params:
            raise ScalarError("unknown parameter %r (declared: %r)" % (name, params))
        exps = tuple(1 if p == name else 0 for p in params)
        return cls(params, {exps: Fraction(1)})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise ScalarError("polynomial %s is not constant" % self)
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def leading(self) -> tuple[tuple[int, ...], Fraction]:
        """Leading (exponent, coefficient) in graded-lex order."""
        if not self.terms:
            raise ScalarError("zero polynomial has no leading term")
        exps = max(self.terms, key=grlex_key)
        return exps, self.terms[exps]

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def used_params(self) -> set[str]:
        used = set()
        for exps in self.terms:
            for name, e in zip(self.params, exps):
                if e:
                    used.add(name)
        return used

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "ParamPoly") -> "ParamPoly":
        _check_params(self, other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            terms[exps] = terms.get(exps, Fraction(0)) + c
        return ParamPoly(self.params, terms)

    def __sub__(self, other: "ParamPoly") -> "ParamPoly":
        return self + (-other)

    def __neg__(self) -> "ParamPoly":
        return ParamPoly(self.params, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "ParamPoly") -> "ParamPoly":
        _check_params(self, other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return ParamPoly(self.params, terms)

    def scale(self, c: Rat) -> "ParamPoly":
        c = as_fraction(c)
        return ParamPoly(self.params, {e: v * c for e, v in self.terms.items()})

    def __pow__(self, n: int) -> "ParamPoly":
        if n < 0:
            raise ScalarError("negative power of a polynomial; use RatFun")
        out = ParamPoly.const(self.params, 1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, ParamPoly):
            return self.params == other.params and self.terms == other.terms
        return NotImplemented

    __hash__ = None  # mutable-looking container; not meant for dict keys

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, bindings: Mapping[str, Rat]) -> Fraction:
        missing = self.used_params() - set(bindings)
        if missing:
            raise ScalarError("missing bindings for %s" % sorted(missing))
        total = Fraction(0)
        for exps, c in self.terms.items():
            val = c
            for name, e in zip(self.params, exps):
                if e:
                    val *= as_fraction(bindings[name]) ** e
            total += val
        return total

    def partial(self, bindings: Mapping[str, Rat]) -> "ParamPoly":
        """Substitute values for a subset of the parameters (universe kept)."""
        terms: dict[tuple[int, ...], Fraction] = {}
        idx = {name: i for i, name in enumerate(self.params)}
        bound = {idx[n]: as_fraction(v) for n, v in bindings.items() if n in idx}
        for exps, c in self.terms.items():
            val = c
            new = list(exps)
            for i, v in bound.items():
                if exps[i]:
                    val *= v ** exps[i]
                    new[i] = 0
            key = tuple(new)
            terms[key] = terms.get(key, Fraction(0)) + val
        return ParamPoly(self.params, terms)

    def with_params(self, params: tuple[str, ...]) -> "ParamPoly":
        """Re-express over a parameter tuple containing all used names."""
        params = tuple(params)
        pos = {name: i for i, name in enumerate(params)}
        missing = self.used_params() - set(params)
        if missing:
            raise ScalarError("target parameters lack %s" % sorted(missing))
        terms: dict[tuple[int, ...], Fraction] = {}
        for exps, c in self.terms.items():
            new = [0] * len(params)
            for name, e in zip(self.params, exps):
                if e:
                    new[pos[name]] = e
            key = tuple(new)
            terms[key] = terms.get(key, Fraction(0)) + c
        return ParamPoly(params, terms)

    # -- printing -----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                name if e == 1 else "%s^%d" % (name, e)
                for name, e in zip(self.params, exps)
                if e
            )
            if not mono:
                body = _frac_str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = "%s*%s" % (_frac_str(abs(c)), mono)
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += " %s %s" % (sign, body)
        return out

    def __repr__(self) -> str:
        return "ParamPoly(%s)" % self


def _frac_str(q: Fraction) -> str:
    return str(q) if q.denominator == 1 else "%d/%d" % (q.numerator, q.denominator)


class RatFun:
    """A rational function num/den over a fixed parameter tuple.

    Normalized so the denominator's graded-lex leading coefficient is 1.
    Supports mixed arithmetic with int and Fraction on either side.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: ParamPoly, den: ParamPoly):
        _check_params(num, den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        _, lead = den.leading()
        if lead != 1:
            inv = 1 / lead
            num = num.scale(inv)
            den = den.scale(inv)
        self.num = num
        self.den = den

    @property
    def params(self) -> tuple[str, ...]:
        return self.num.params

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, params: tuple[str, ...], value: Rat) -> "RatFun":
        return cls(ParamPoly.const(params, value), ParamPoly.const(params, 1))

    @classmethod
    def var(cls, params: tuple[str, ...], name: str) -> "RatFun":
        return cls(ParamPoly.var(params, name), ParamPoly.const(params, 1))

    @classmethod
    def from_poly(cls, p: ParamPoly) -> "RatFun":
        return cls(p, ParamPoly.const(p.params, 1))

    def _coerce(self, other) -> "RatFun | None":
        if isinstance(other, RatFun):
            _check_params(self, other)
            return other
        if isinstance(other, (int, Fraction)):
            return RatFun.const(self.params, other)
        return None

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        return self.num.constant_value() / self.den.constant_value()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def used_params(self) -> set[str]:
        return self.num.used_params() | self.den.used_params()

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFun(self.num * other.den - other.num * self.den, self.den * other.den)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self) -> "RatFun":
        return RatFun(-self.num, self.den)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def inverse(self) -> "RatFun":
        if self.is_zero():
            raise ZeroDivisionError("inversion of the zero rational function")
        return RatFun(self.den, self.num)

    def __pow__(self, n: int) -> "RatFun":
        if n < 0:
            return self.inverse() ** (-n)
        out = RatFun.const(self.params, 1)
        for _ in range(n):
            out = out * self
        return out

    # -- comparison ---------------------------------------------------------

    def equals(self, other: "RatFun") -> bool:
        """Mathematical equality via cross-multiplication."""
        if not isinstance(other, RatFun):
            raise TypeError("equals expects a RatFun")
        _check_params(self, other)
        return (self.num * other.den - other.num * self.den).is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFun):
            return self.equals(other)
        if isinstance(other, (int, Fraction)):
            return self.equals(RatFun.const(self.params, other))
        return NotImplemented

    __hash__ = None

    # -- evaluation ---------------------------------------------------------

    def substitute(self, bindings: Mapping[str, Rat]) -> Fraction:
        """Evaluate at an exact rational point.  Raises PoleError on a pole."""
        den = self.den.evaluate(bindings)
        if not den:
            raise PoleError("denominator %s vanishes at %r" % (self.den, dict(bindings)))
        return self.num.evaluate(bindings) / den

    def partial(self, bindings: Mapping[str, Rat]) -> "RatFun":
        den = self.den.partial(bindings)
        if den.is_zero():
            raise PoleError("denominator %s vanishes under %r" % (self.den, dict(bindings)))
        return RatFun(self.num.partial(bindings), den)

    def with_params(self, params: tuple[str, ...]) -> "RatFun":
        return RatFun(self.num.with_params(params), self.den.with_params(params))

    # -- printing -----------------------------------------------------------

    def __str__(self) -> str:
        num = str(self.num)
        if self.den.is_constant() and self.den.constant_value() == 1:
            return num
        return "(%s)/(%s)" % (num, self.den)

    def __repr__(self) -> str:
        return "RatFun(%s)" % self


# -- spec-facing helpers ------------------------------------------------------


def rf_equals(a: RatFun, b: RatFun) -> bool:
    return a.equals(b)


def rf_substitute(a: RatFun, bindings: Mapping[str, Rat]) -> Fraction:
    return a.substitute(bindings)


def scalar_is_zero(x) -> bool:
    return not x


def scalar_eq(a, b) -> bool:
    return a == b


def scalar_substitute(x, bindings: Mapping[str, Rat]) -> Fraction:
    """Evaluate a coefficient (Fraction or RatFun) at a rational point."""
    if isinstance(x, RatFun):
        return x.substitute(bindings)
    return as_fraction(x)


def scalar_str(x) -> str:
    if isinstance(x, RatFun):
        return str(x)
    return _frac_str(as_fraction(x))
