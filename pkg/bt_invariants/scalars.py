"""
Exact scalars for the braids-and-ties engine.

Polynomials and rational functions in (u, A, B) over the rationals, built on
sympy's sparse polynomial rings and rational function fields (graded lex order
with u > A > B), plus the quadratic extension by sigma = sqrt(L).

Canonical forms: a RatFunc is stored as a cancelled fraction; its public
numerator/denominator pair is scaled so the denominator's leading coefficient
is +1. Two RatFuncs are equal iff their canonical forms are identical.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.fields import FracElement, FracField
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

from .config import HOMFLYPT_SQRT_SYMBOL, HOMFLYPT_VARIABLES, SQRT_SYMBOL, VARIABLES

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]
Monomial = Tuple[int, ...]
Point = Union[Mapping[str, Rational], Sequence[Rational]]


class DivisionByZero(ZeroDivisionError):
    """Division by the zero rational function."""


class PoleAtPoint(ZeroDivisionError):
    """The denominator vanishes at the requested evaluation point."""


class NonInvertible(ZeroDivisionError):
    """Inverse requested for the zero element of the extension."""


class ZeroGcdError(ValueError):
    """gcd(0, 0) is undefined."""


TRACE_FIELD = FracField(','.join(VARIABLES), QQ, grlex)
TRACE_RING: PolyRing = TRACE_FIELD.ring
HOMFLYPT_FIELD = FracField(','.join(HOMFLYPT_VARIABLES), QQ, grlex)


def _to_fraction(coeff) -> Fraction:
    """Convert a sympy QQ element (python or gmpy backend) to a Fraction."""
    return Fraction(int(coeff.numerator), int(coeff.denominator))


def _to_qq(value: Rational):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _symbol_names(ring: PolyRing) -> Tuple[str, ...]:
    return tuple(str(symbol) for symbol in ring.symbols)


def _render_terms(items: Iterable[Tuple[Monomial, Fraction]], names: Sequence[str]) -> str:
    """Render ordered terms as `c*u^i*A^j*B^k` joined by ` + ` / ` - `."""
    parts: List[str] = []
    for monom, coeff in items:
        factors = [name if exp == 1 else f'{name}^{exp}' for name, exp in zip(names, monom) if exp]
        magnitude = abs(coeff)
        if not factors:
            body = str(magnitude)
        elif magnitude == 1:
            body = '*'.join(factors)
        else:
            body = '*'.join([str(magnitude)] + factors)
        if not parts:
            parts.append(f'-{body}' if coeff < 0 else body)
        else:
            parts.append(f" {'-' if coeff < 0 else '+'} {body}")
    return ''.join(parts) if parts else '0'


def _point_values(names: Sequence[str], point: Point) -> Tuple[Fraction, ...]:
    if isinstance(point, Mapping):
        missing = [name for name in names if name not in point]
        if missing:
            raise ValueError(f"Evaluation point is missing values for: {', '.join(missing)}")
        return tuple(Fraction(point[name]) for name in names)
    values = tuple(Fraction(value) for value in point)
    if len(values) != len(names):
        raise ValueError(f"Expected {len(names)} coordinates ({', '.join(names)}), got {len(values)}")
    return values


class MultiPoly:
    """Polynomial in the field variables with rational coefficients."""

    __slots__ = ('_poly',)

    def __init__(self, poly: PolyElement):
        self._poly = poly

    @classmethod
    def from_terms(cls, terms: Mapping[Monomial, Rational], ring: PolyRing = TRACE_RING) -> 'MultiPoly':
        accumulated: Dict[Monomial, Fraction] = {}
        for monom, coeff in terms.items():
            if len(monom) != ring.ngens or any(exp < 0 for exp in monom):
                raise ValueError(f"Invalid exponent vector {monom} for variables {_symbol_names(ring)}")
            accumulated[tuple(monom)] = accumulated.get(tuple(monom), Fraction(0)) + Fraction(coeff)
        return cls(ring.from_dict({m: _to_qq(c) for m, c in accumulated.items() if c}))

    @classmethod
    def constant(cls, value: Rational, ring: PolyRing = TRACE_RING) -> 'MultiPoly':
        return cls(ring.ground_new(_to_qq(value)))

    @classmethod
    def variable(cls, name: str, ring: PolyRing = TRACE_RING) -> 'MultiPoly':
        return cls(ring.gens[_symbol_names(ring).index(name)])

    @property
    def ring(self) -> PolyRing:
        return self._poly.ring

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return {monom: _to_fraction(coeff) for monom, coeff in self._poly.items()}

    def ordered_terms(self) -> List[Tuple[Monomial, Fraction]]:
        """Terms in decreasing graded-lex order."""
        return [(monom, _to_fraction(coeff)) for monom, coeff in self._poly.terms(grlex)]

    def is_zero(self) -> bool:
        return not self._poly

    def leading_coefficient(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        return _to_fraction(self._poly.terms(grlex)[0][1])

    def monic(self) -> 'MultiPoly':
        if self.is_zero():
            return self
        return MultiPoly(self._poly.quo_ground(_to_qq(self.leading_coefficient())))

    def evaluate(self, point: Point) -> Fraction:
        values = _point_values(_symbol_names(self.ring), point)
        total = Fraction(0)
        for monom, coeff in self._poly.items():
            term = _to_fraction(coeff)
            for value, exp in zip(values, monom):
                if exp:
                    term *= value ** exp
            total += term
        return total

    def _coerce(self, other) -> PolyElement:
        if isinstance(other, MultiPoly):
            return other._poly
        if isinstance(other, (int, Fraction)):
            return self.ring.ground_new(_to_qq(other))
        return NotImplemented

    def __add__(self, other):
        other_poly = self._coerce(other)
        if other_poly is NotImplemented:
            return NotImplemented
        return MultiPoly(self._poly + other_poly)

    __radd__ = __add__

    def __sub__(self, other):
        other_poly = self._coerce(other)
        if other_poly is NotImplemented:
            return NotImplemented
        return MultiPoly(self._poly - other_poly)

    def __rsub__(self, other):
        other_poly = self._coerce(other)
        if other_poly is NotImplemented:
            return NotImplemented
        return MultiPoly(other_poly - self._poly)

    def __mul__(self, other):
        other_poly = self._coerce(other)
        if other_poly is NotImplemented:
            return NotImplemented
        return MultiPoly(self._poly * other_poly)

    __rmul__ = __mul__

    def __neg__(self) -> 'MultiPoly':
        return MultiPoly(-self._poly)

    def __pow__(self, exponent: int) -> 'MultiPoly':
        if exponent < 0:
            raise ValueError("MultiPoly powers must be non-negative")
        return MultiPoly(self._poly ** exponent)

    def __eq__(self, other) -> bool:
        other_poly = self._coerce(other)
        if other_poly is NotImplemented:
            return NotImplemented
        return self._poly == other_poly

    def __hash__(self) -> int:
        return hash(self._poly)

    def __str__(self) -> str:
        return _render_terms(self.ordered_terms(), _symbol_names(self.ring))

    def __repr__(self) -> str:
        return f"MultiPoly('{self}')"


class RatFunc:
    """Element of Q(u, A, B) (or Q(u, z) after Homflypt specialization)."""

    __slots__ = ('_frac',)

    def __init__(self, frac: FracElement):
        self._frac = frac

    @classmethod
    def constant(cls, value: Rational, frac_field: FracField = TRACE_FIELD) -> 'RatFunc':
        return cls(frac_field.ground_new(_to_qq(value)))

    @classmethod
    def variable(cls, name: str, frac_field: FracField = TRACE_FIELD) -> 'RatFunc':
        return cls(frac_field.gens[_symbol_names(frac_field.ring).index(name)])

    @property
    def field(self) -> FracField:
        return self._frac.field

    @property
    def variables(self) -> Tuple[str, ...]:
        return _symbol_names(self.field.ring)

    def _canonical_pair(self) -> Tuple[PolyElement, PolyElement]:
        numer, denom = self._frac.numer, self._frac.denom
        lead = denom.terms(grlex)[0][1]
        return numer.quo_ground(lead), denom.quo_ground(lead)

    @property
    def num(self) -> MultiPoly:
        return MultiPoly(self._canonical_pair()[0])

    @property
    def den(self) -> MultiPoly:
        return MultiPoly(self._canonical_pair()[1])

    def is_zero(self) -> bool:
        return not self._frac

    def is_polynomial(self) -> bool:
        return self._frac.denom.is_ground

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other._frac
        if isinstance(other, (int, Fraction)):
            return self.field.ground_new(_to_qq(other))
        if isinstance(other, MultiPoly):
            return self.field.new(other._poly)
        return NotImplemented

    def __add__(self, other):
        other_frac = self._coerce(other)
        if other_frac is NotImplemented:
            return NotImplemented
        return RatFunc(self._frac + other_frac)

    __radd__ = __add__

    def __sub__(self, other):
        other_frac = self._coerce(other)
        if other_frac is NotImplemented:
            return NotImplemented
        return RatFunc(self._frac - other_frac)

    def __rsub__(self, other):
        other_frac = self._coerce(other)
        if other_frac is NotImplemented:
            return NotImplemented
        return RatFunc(other_frac - self._frac)

    def __mul__(self, other):
        other_frac = self._coerce(other)
        if other_frac is NotImplemented:
            return NotImplemented
        return RatFunc(self._frac * other_frac)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other_frac = self._coerce(other)
        if other_frac is NotImplemented:
            return NotImplemented
        if not other_frac:
            raise DivisionByZero("division by the zero rational function")
        return RatFunc(self._frac / other_frac)

    def __rtruediv__(self, other):
        other_frac = self._coerce(other)
        if other_frac is NotImplemented:
            return NotImplemented
        return RatFunc(other_frac) / self

    def __neg__(self) -> 'RatFunc':
        return RatFunc(-self._frac)

    def inverse(self) -> 'RatFunc':
        if self.is_zero():
            raise DivisionByZero("the zero rational function has no inverse")
        return RatFunc(self.field.one / self._frac)

    def __pow__(self, exponent: int) -> 'RatFunc':
        # negative powers go through a cancelled inverse to keep the sign canonical
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return RatFunc(self._frac ** exponent)

    def __eq__(self, other) -> bool:
        other_frac = self._coerce(other)
        if other_frac is NotImplemented:
            return NotImplemented
        return self._frac == other_frac

    def __hash__(self) -> int:
        return hash(self._frac)

    def evaluate(self, point: Point) -> Fraction:
        numer, denom = self.num, self.den
        denominator = denom.evaluate(point)
        if denominator == 0:
            raise PoleAtPoint(f"denominator {denom} vanishes at {point}")
        return numer.evaluate(point) / denominator

    def substitute(self, values: Mapping[str, Union[Rational, 'RatFunc']],
                   target: Optional[FracField] = None) -> 'RatFunc':
        """Substitute variables; unmapped variables keep their name in ``target``."""
        target = target or self.field
        target_names = _symbol_names(target.ring)
        images: List[RatFunc] = []
        for name in self.variables:
            if name in values:
                value = values[name]
                images.append(value if isinstance(value, RatFunc) else RatFunc.constant(value, target))
            elif name in target_names:
                images.append(RatFunc.variable(name, target))
            else:
                raise ValueError(f"No image for variable {name} in target field {target_names}")

        def image_of(poly: PolyElement) -> RatFunc:
            total = RatFunc(target.zero)
            for monom, coeff in poly.items():
                term = RatFunc.constant(_to_fraction(coeff), target)
                for image, exp in zip(images, monom):
                    if exp:
                        term = term * image ** exp
                total = total + term
            return total

        denominator = image_of(self._frac.denom)
        if denominator.is_zero():
            raise DivisionByZero(f"denominator of {self} vanishes under {dict(values)}")
        return image_of(self._frac.numer) / denominator

    def __str__(self) -> str:
        numer, denom = self._canonical_pair()
        names = _symbol_names(self.field.ring)
        numerator = _render_terms(
            [(m, _to_fraction(c)) for m, c in numer.terms(grlex)], names)
        if denom == denom.ring.one:
            return numerator
        denominator = _render_terms(
            [(m, _to_fraction(c)) for m, c in denom.terms(grlex)], names)
        return f'({numerator})/({denominator})'

    def __repr__(self) -> str:
        return f"RatFunc('{self}')"


ZERO = RatFunc(TRACE_FIELD.zero)
ONE = RatFunc(TRACE_FIELD.one)
U, A, B = (RatFunc(gen) for gen in TRACE_FIELD.gens)


def gens(frac_field: FracField = TRACE_FIELD) -> Tuple[RatFunc, ...]:
    """Generators of the field as RatFuncs, in variable order."""
    return tuple(RatFunc(gen) for gen in frac_field.gens)


def poly_arith(op: str, a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Exact add/sub/mul of MultiPolys."""
    operations = {
        'add': lambda x, y: x + y,
        'sub': lambda x, y: x - y,
        'mul': lambda x, y: x * y,
    }
    if op not in operations:
        raise ValueError(f"Unsupported polynomial operation: {op}")
    return operations[op](a, b)


def poly_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Monic gcd; gcd(a, 0) is a normalized to leading coefficient +1."""
    if a.is_zero() and b.is_zero():
        raise ZeroGcdError("gcd(0, 0) is undefined")
    return MultiPoly(a._poly.gcd(b._poly)).monic()


def rf_make(num: MultiPoly, den: MultiPoly, frac_field: FracField = TRACE_FIELD) -> RatFunc:
    if den.is_zero():
        raise DivisionByZero("zero denominator")
    return RatFunc(frac_field.new(num._poly, den._poly))


def rf_const(value: Rational, frac_field: FracField = TRACE_FIELD) -> RatFunc:
    return RatFunc.constant(value, frac_field)


def rf_substitute(f: RatFunc, values: Mapping[str, Union[Rational, RatFunc]]) -> RatFunc:
    """Substitute rationals or RatFuncs for variables of ``f``; others are kept."""
    unknown = set(values) - set(f.variables)
    if unknown:
        raise ValueError(f"Unknown variables {sorted(unknown)}; expected a subset of {f.variables}")
    return f.substitute(values)


def rf_arith(op: str, a: RatFunc, b: Optional[RatFunc] = None) -> RatFunc:
    """Field arithmetic; `inv` and `neg` ignore ``b``."""
    if op == 'inv':
        return a.inverse()
    if op == 'neg':
        return -a
    if b is None:
        raise ValueError(f"Operation {op} needs two operands")
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    if op == 'div':
        return a / b
    raise ValueError(f"Unsupported rational function operation: {op}")


def rf_eval(f: RatFunc, point: Point) -> Fraction:
    return f.evaluate(point)


@lru_cache(maxsize=None)
def L_const() -> RatFunc:
    """Normalization element L = (A + (1-u)B) / (uA)."""
    return (A + (1 - U) * B) / (U * A)


@lru_cache(maxsize=None)
def lambda_const() -> RatFunc:
    """L with A -> z and B -> 1: (z + 1 - u) / (uz), over Q(u, z)."""
    u, z = gens(HOMFLYPT_FIELD)
    return (z + 1 - u) / (u * z)


@dataclass(frozen=True)
class SqrtExt:
    """p + q*sigma with sigma^2 = radicand (L unless specialized)."""

    p: RatFunc
    q: RatFunc
    radicand: RatFunc = dataclass_field(default_factory=L_const)
    symbol: str = SQRT_SYMBOL

    @classmethod
    def scalar(cls, value: Union[RatFunc, Rational], radicand: Optional[RatFunc] = None,
               symbol: str = SQRT_SYMBOL) -> 'SqrtExt':
        radicand = radicand if radicand is not None else L_const()
        if not isinstance(value, RatFunc):
            value = RatFunc.constant(value, radicand.field)
        return cls(value, RatFunc(radicand.field.zero), radicand, symbol)

    def _like(self, p: RatFunc, q: RatFunc) -> 'SqrtExt':
        return SqrtExt(p, q, self.radicand, self.symbol)

    def _lift(self, other) -> Optional['SqrtExt']:
        if isinstance(other, SqrtExt):
            if other.radicand != self.radicand:
                raise ValueError("Cannot combine elements of different quadratic extensions")
            return other
        if isinstance(other, (RatFunc, int, Fraction)):
            return SqrtExt.scalar(other, self.radicand, self.symbol)
        return None

    def is_zero(self) -> bool:
        return self.p.is_zero() and self.q.is_zero()

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self._like(self.p + other.p, self.q + other.q)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self._like(self.p - other.p, self.q - other.q)

    def __neg__(self) -> 'SqrtExt':
        return self._like(-self.p, -self.q)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        p = self.p * other.p + self.q * other.q * self.radicand
        q = self.p * other.q + self.q * other.p
        return self._like(p, q)

    __rmul__ = __mul__

    def norm(self) -> RatFunc:
        return self.p * self.p - self.q * self.q * self.radicand

    def inverse(self) -> 'SqrtExt':
        if self.is_zero():
            raise NonInvertible("(0, 0) has no inverse")
        norm = self.norm()
        return self._like(self.p / norm, -self.q / norm)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, exponent: int) -> 'SqrtExt':
        base = self if exponent >= 0 else self.inverse()
        result = SqrtExt.scalar(1, self.radicand, self.symbol)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def evaluate(self, point: Point) -> Tuple[Fraction, Fraction]:
        """Componentwise rational values (p0, q0)."""
        return self.p.evaluate(point), self.q.evaluate(point)

    def map_components(self, fn, radicand: RatFunc, symbol: str) -> 'SqrtExt':
        return SqrtExt(fn(self.p), fn(self.q), radicand, symbol)

    def __str__(self) -> str:
        if self.q.is_zero():
            return str(self.p)
        odd = f'({self.q})*sqrt({self.symbol})'
        if self.p.is_zero():
            return odd
        return f'{self.p} + {odd}'


def sqrt_pow(k: int, radicand: Optional[RatFunc] = None, symbol: str = SQRT_SYMBOL) -> SqrtExt:
    """sigma^k: (R^(k/2), 0) for even k, (0, R^((k-1)/2)) for odd k."""
    radicand = radicand if radicand is not None else L_const()
    zero = RatFunc(radicand.field.zero)
    if k < 0:
        return sqrt_pow(-k, radicand, symbol).inverse()
    if k % 2 == 0:
        return SqrtExt(radicand ** (k // 2), zero, radicand, symbol)
    return SqrtExt(zero, radicand ** ((k - 1) // 2), radicand, symbol)


def sqrtL() -> SqrtExt:
    return sqrt_pow(1)


@lru_cache(maxsize=None)
def D_const() -> SqrtExt:
    """D = -(1 - Lu) / (sqrt(L)(1-u)B), written in the {1, sigma} basis."""
    L = L_const()
    zero = RatFunc(TRACE_FIELD.zero)
    return SqrtExt(zero, -(1 - L * U) / (L * (1 - U) * B), L, SQRT_SYMBOL)


@lru_cache(maxsize=None)
def homflypt_D_const() -> SqrtExt:
    """-(1 - lambda u) / (sqrt(lambda)(1-u)) over Q(u, z)."""
    lam = lambda_const()
    u, _ = gens(HOMFLYPT_FIELD)
    zero = RatFunc(HOMFLYPT_FIELD.zero)
    return SqrtExt(zero, -(1 - lam * u) / (lam * (1 - u)), lam, HOMFLYPT_SQRT_SYMBOL)


def ext_arith(op: str, a: SqrtExt, b: Union[SqrtExt, int]) -> SqrtExt:
    if op == 'add':
        return a + b
    if op == 'mul':
        return a * b
    if op == 'pow':
        if not isinstance(b, int):
            raise ValueError("pow needs an integer exponent")
        return a ** b
    raise ValueError(f"Unsupported extension operation: {op}")


__all__ = [
    'A', 'B', 'U', 'ONE', 'ZERO',
    'TRACE_FIELD', 'TRACE_RING', 'HOMFLYPT_FIELD',
    'DivisionByZero', 'PoleAtPoint', 'NonInvertible', 'ZeroGcdError',
    'MultiPoly', 'RatFunc', 'SqrtExt',
    'gens', 'poly_arith', 'poly_gcd', 'rf_make', 'rf_const', 'rf_substitute', 'rf_arith', 'rf_eval',
    'L_const', 'lambda_const', 'D_const', 'homflypt_D_const',
    'ext_arith', 'sqrt_pow', 'sqrtL',
]
