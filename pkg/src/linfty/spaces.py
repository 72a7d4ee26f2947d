"""Graded vector spaces and the multi-index cochain basis.

A cochain basis element ``phi^{i1..im}_t`` sends the basis word
``e_1^{i1} ... e_m^{im}`` to ``i1! ... im! e_t`` and every other basis word to
zero.  Odd basis elements square to zero in the symmetric algebra, so an
exponent >= 2 on an odd element denotes the zero map; such terms are never
stored.  Cochains of odd parity print as ``ps[...]``, even ones as
``ph[...]``.

The canonical order on basis cochains is lexicographic on
``(target, exponents)``; all matrices, representatives and printed output use
it.  Displayed bases in the source material are permutations of this order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from .scalars import RatFun, as_fraction, scalar_is_zero, scalar_substitute

Z = "Z"
Z2 = "Z2"


class SpaceError(Exception):
    """Invalid space, cochain, or coderivation data."""


@dataclass(frozen=True)
class GradedSpace:
    """Degrees of the basis elements e_1..e_dim plus the grading mode."""

    degrees: tuple[int, ...]
    mode: str = Z

    def __post_init__(self):
        if len(self.degrees) < 1:
            raise SpaceError("a graded space needs at least one basis element")
        if self.mode not in (Z, Z2):
            raise SpaceError("grading mode must be 'Z' or 'Z2'")
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))

    @property
    def dim(self) -> int:
        return len(self.degrees)

    @property
    def parities(self) -> tuple[int, ...]:
        return tuple(d % 2 for d in self.degrees)

    def degree(self, i: int) -> int:
        return self.degrees[i]

    def parity(self, i: int) -> int:
        return self.degrees[i] % 2


def desuspend(sp: GradedSpace) -> GradedSpace:
    """Shift every degree down by one; in mode Z2 this reverses all parities."""
    return GradedSpace(tuple(d - 1 for d in sp.degrees), sp.mode)


def suspend(sp: GradedSpace) -> GradedSpace:
    return GradedSpace(tuple(d + 1 for d in sp.degrees), sp.mode)


class BasisCochain(NamedTuple):
    """Multi-index basis cochain: exponents per basis element plus a target."""

    exponents: tuple[int, ...]
    target: int  # 0-based index of the output basis element

    def exterior_degree(self) -> int:
        return sum(self.exponents)

    def sort_key(self):
        return (self.target, self.exponents)

    def label(self, sp: GradedSpace) -> str:
        letter = "ps" if cochain_parity(self, sp) else "ph"
        return "%s[%s;%d]" % (
            letter,
            ",".join(str(e) for e in self.exponents),
            self.target + 1,
        )


def validate_cochain(c: BasisCochain, sp: GradedSpace) -> None:
    if len(c.exponents) != sp.dim:
        raise SpaceError(
            "cochain %r has %d exponents for a %d-dimensional space"
            % (c, len(c.exponents), sp.dim)
        )
    if not (0 <= c.target < sp.dim):
        raise SpaceError("cochain target %d out of range" % (c.target + 1))
    if any(e < 0 for e in c.exponents):
        raise SpaceError("negative exponent in %r" % (c,))
    if sum(c.exponents) < 1:
        raise SpaceError("cochain must take at least one input")


def is_zero_map(c: BasisCochain, sp: GradedSpace) -> bool:
    """True when an odd basis element carries exponent >= 2 (odd squares vanish)."""
    return any(e >= 2 and p for e, p in zip(c.exponents, sp.parities))


def internal_degree(c: BasisCochain, sp: GradedSpace) -> int:
    """Output degree minus total input degree.  In mode Z2 only its parity matters."""
    return sp.degrees[c.target] - sum(
        e * d for e, d in zip(c.exponents, sp.degrees)
    )


def cochain_parity(c: BasisCochain, sp: GradedSpace) -> int:
    return (
        sp.parities[c.target] + sum(e * p for e, p in zip(c.exponents, sp.parities))
    ) % 2


def enumerate_cochain_basis(sp: GradedSpace, r: int, s: int) -> list[BasisCochain]:
    """All basis cochains of exterior degree r and internal degree s (mode Z)
    or parity s mod 2 (mode Z2), in canonical order."""
    if r < 1:
        raise SpaceError("exterior degree must be >= 1")
    out = []
    for c in _raw_cochains(sp, r):
        if sp.mode == Z:
            if internal_degree(c, sp) == s:
                out.append(c)
        else:
            if cochain_parity(c, sp) == s % 2:
                out.append(c)
    return out


def _raw_cochains(sp: GradedSpace, r: int) -> Iterable[BasisCochain]:
    ranges = [
        range(0, min(r, 1) + 1) if p else range(0, r + 1) for p in sp.parities
    ]
    combos = [
        exps for exps in itertools.product(*ranges) if sum(exps) == r
    ]
    for target in range(sp.dim):
        for exps in sorted(combos):
            yield BasisCochain(exps, target)


class Coderivation:
    """A finite scalar combination of basis cochains on a fixed space.

    Coefficients are Fractions or RatFuns (mixed freely; RatFun absorbs
    Fractions in arithmetic).  Zero coefficients and zero-map cochains are
    never stored.  Instances are immutable by convention.
    """

    __slots__ = ("space", "terms")

    def __init__(self, space: GradedSpace, terms: Mapping[BasisCochain, object]):
        self.space = space
        clean: dict[BasisCochain, object] = {}
        for c, coeff in terms.items():
            validate_cochain(c, space)
            if is_zero_map(c, space):
                continue
            if scalar_is_zero(coeff):
                continue
            if isinstance(coeff, int):
                coeff = Fraction(coeff)
            clean[c] = coeff
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, space: GradedSpace) -> "Coderivation":
        return cls(space, {})

    @classmethod
    def single(cls, space: GradedSpace, exponents, target_1based: int, coeff=1) -> "Coderivation":
        c = BasisCochain(tuple(exponents), target_1based - 1)
        return cls(space, {c: coeff})

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def sorted_terms(self) -> list[tuple[BasisCochain, object]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def order(self) -> int:
        """Exterior degree of the leading (lowest-degree) term."""
        if not self.terms:
            raise SpaceError("the zero coderivation has no order")
        return min(c.exterior_degree() for c in self.terms)

    def max_degree(self) -> int:
        if not self.terms:
            raise SpaceError("the zero coderivation has no degree")
        return max(c.exterior_degree() for c in self.terms)

    def exterior_degrees(self) -> list[int]:
        return sorted({c.exterior_degree() for c in self.terms})

    def component(self, r: int) -> "Coderivation":
        return Coderivation(
            self.space,
            {c: v for c, v in self.terms.items() if c.exterior_degree() == r},
        )

    def truncate(self, max_r: int) -> "Coderivation":
        return Coderivation(
            self.space,
            {c: v for c, v in self.terms.items() if c.exterior_degree() <= max_r},
        )

    def is_homogeneous(self) -> bool:
        return len(self.exterior_degrees()) <= 1

    def internal_degrees(self) -> list[int]:
        return sorted({internal_degree(c, self.space) for c in self.terms})

    def has_pure_internal_degree(self, s: int) -> bool:
        return all(internal_degree(c, self.space) == s for c in self.terms)

    def has_pure_parity(self, p: int) -> bool:
        return all(cochain_parity(c, self.space) == p % 2 for c in self.terms)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "Coderivation") -> "Coderivation":
        self._same_space(other)
        terms = dict(self.terms)
        for c, v in other.terms.items():
            terms[c] = terms.get(c, 0) + v
        return Coderivation(self.space, terms)

    def __sub__(self, other: "Coderivation") -> "Coderivation":
        return self + (-other)

    def __neg__(self) -> "Coderivation":
        return Coderivation(self.space, {c: -v for c, v in self.terms.items()})

    def scale(self, coeff) -> "Coderivation":
        if scalar_is_zero(coeff):
            return Coderivation.zero(self.space)
        return Coderivation(self.space, {c: coeff * v for c, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Coderivation):
            return NotImplemented
        if self.space != other.space:
            return False
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[c] == other.terms[c] for c in self.terms)

    __hash__ = None

    def _same_space(self, other: "Coderivation") -> None:
        if self.space != other.space:
            raise SpaceError("coderivations live on different spaces")

    # -- coefficients --------------------------------------------------------

    def coefficient(self, exponents, target_1based: int):
        c = BasisCochain(tuple(exponents), target_1based - 1)
        return self.terms.get(c, Fraction(0))

    def substitute(self, bindings: Mapping[str, object]) -> "Coderivation":
        """Evaluate all parameterized coefficients at a rational point."""
        return Coderivation(
            self.space,
            {c: scalar_substitute(v, bindings) for c, v in self.terms.items()},
        )

    def map_coefficients(self, fn) -> "Coderivation":
        return Coderivation(self.space, {c: fn(v) for c, v in self.terms.items()})

    def is_numeric(self) -> bool:
        return all(not isinstance(v, RatFun) for v in self.terms.values())

    # -- io -------------------------------------------------------------------

    def to_json(self) -> dict:
        from .scalars import scalar_str

        return {
            "terms": [
                {
                    "exponents": list(c.exponents),
                    "target": c.target + 1,
                    "coeff": scalar_str(v),
                }
                for c, v in self.sorted_terms()
            ]
        }

    def __str__(self) -> str:
        from .expr import print_cochain

        return print_cochain(self)

    def __repr__(self) -> str:
        return "Coderivation(%s)" % self
