"""
Exact arithmetic for the alphabet of a code and for the phases of the
quantum side.

The alphabet is a `RingSpec`: either a prime field F_p or a modular ring
Z/dZ. Matrices elsewhere in the package store canonical residues as plain
integers; `RingElement` is the scalar interface on top of them. Phases are
elements of a cyclotomic field Q(zeta_m), represented by `Cyclotomic` in the
power basis reduced modulo the m-th cyclotomic polynomial.
"""
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Optional, Sequence, Tuple, Union

from sympy import Poly, QQ, Rational as SymRational, Symbol, cyclotomic_poly, factorint, invert, isprime

from sympiso.exceptions import MalformedInputError, NonInvertibleError

_LABEL = re.compile(r'^\s*(?:F_?(?P<p>\d+)|Z/(?P<d>\d+)Z?)\s*$')

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class LocalData:
    """Metadata of the local ring Z/p^e: maximal ideal pR, socle alpha*R."""
    prime: int
    exponent: int

    @property
    def socle(self) -> int:
        return self.prime ** (self.exponent - 1)

    @property
    def residue_size(self) -> int:
        return self.prime


@dataclass(frozen=True)
class RingSpec:
    """The alphabet R of a code.

    :param kind: Either 'field' (F_p) or 'modular' (Z/dZ).
    :param modulus: p or d.
    """
    kind: str
    modulus: int

    def __post_init__(self):
        if self.kind not in ('field', 'modular'):
            raise MalformedInputError(f"unknown ring kind {self.kind!r}")
        if self.modulus < 2:
            raise MalformedInputError(f"modulus must be at least 2, got {self.modulus}")
        if self.kind == 'field' and not isprime(self.modulus):
            raise MalformedInputError(f"F_{self.modulus} is not a prime field")

    @classmethod
    def prime_field(cls, p: int) -> 'RingSpec':
        return cls(kind='field', modulus=p)

    @classmethod
    def modular(cls, d: int) -> 'RingSpec':
        return cls(kind='modular', modulus=d)

    @classmethod
    def parse(cls, label: str) -> 'RingSpec':
        """Parse 'F2', 'F_3', 'Z/4' or 'Z/4Z'."""
        match = _LABEL.match(label)
        if match is None:
            raise MalformedInputError(f"cannot parse ring label {label!r}")
        if match.group('p') is not None:
            return cls.prime_field(int(match.group('p')))
        return cls.modular(int(match.group('d')))

    def __str__(self):
        return f"F{self.modulus}" if self.kind == 'field' else f"Z/{self.modulus}"

    def __call__(self, value: int) -> 'RingElement':
        return RingElement(value % self.modulus, self)

    @property
    def char(self) -> int:
        return self.modulus

    @property
    def phase_order(self) -> int:
        return self.char if self.char % 2 else 2 * self.char

    @property
    def is_field(self) -> bool:
        return isprime(self.modulus)

    @property
    def local_data(self) -> Optional[LocalData]:
        factors = sorted(factorint(self.modulus).items())
        if len(factors) != 1:
            return None
        return LocalData(*factors[0])

    @property
    def size(self) -> int:
        return self.modulus

    def elements(self) -> Iterable['RingElement']:
        return (RingElement(value, self) for value in range(self.modulus))

    def is_unit(self, value: int) -> bool:
        return gcd(value % self.modulus, self.modulus) == 1

    def inverse(self, value: int) -> int:
        if not self.is_unit(value):
            raise NonInvertibleError(f"{value % self.modulus} is not invertible in {self}")
        return pow(value % self.modulus, -1, self.modulus)

    def units(self) -> Tuple[int, ...]:
        return tuple(value for value in range(self.modulus) if self.is_unit(value))


@dataclass(frozen=True)
class RingElement:
    value: int
    spec: RingSpec

    def __post_init__(self):
        if not 0 <= self.value < self.spec.modulus:
            raise MalformedInputError(f"{self.value} is not a canonical residue of {self.spec}")

    def _coerce(self, other: Union['RingElement', int]) -> int:
        if isinstance(other, RingElement):
            if other.spec != self.spec:
                raise MalformedInputError(f"cannot combine elements of {self.spec} and {other.spec}")
            return other.value
        return other

    def __add__(self, other):
        return self.spec(self.value + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self.spec(self.value - self._coerce(other))

    def __rsub__(self, other):
        return self.spec(self._coerce(other) - self.value)

    def __mul__(self, other):
        return self.spec(self.value * self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self):
        return self.spec(-self.value)

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} in {self.spec}"

    @property
    def is_unit(self) -> bool:
        return self.spec.is_unit(self.value)

    def inverse(self) -> 'RingElement':
        return self.spec(self.spec.inverse(self.value))


@lru_cache(maxsize=None)
def cyclotomic_coefficients(conductor: int) -> Tuple[int, ...]:
    """Coefficients of the conductor-th cyclotomic polynomial, lowest degree first."""
    x = Symbol('x')
    return tuple(int(c) for c in reversed(cyclotomic_poly(conductor, x, polys=True).all_coeffs()))


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class Cyclotomic:
    """An exact element of Q(zeta_m) in the reduced power basis.

    :param conductor: m.
    :param coeffs: Rational coefficients of 1, zeta, zeta^2, ... of any length;
        they are reduced modulo the m-th cyclotomic polynomial.
    """
    __slots__ = ('conductor', 'coeffs')

    def __init__(self, conductor: int, coeffs: Sequence[Rational] = ()):
        if conductor < 1:
            raise MalformedInputError(f"conductor must be positive, got {conductor}")
        self.conductor = conductor
        self.coeffs = self._reduce(conductor, [Fraction(c) for c in coeffs])

    @staticmethod
    def _reduce(conductor: int, coeffs: list) -> Tuple[Fraction, ...]:
        phi = cyclotomic_coefficients(conductor)
        degree = len(phi) - 1
        coeffs = coeffs + [Fraction(0)] * (degree - len(coeffs))
        for top in range(len(coeffs) - 1, degree - 1, -1):
            lead = coeffs[top]
            if lead:
                shift = top - degree
                for j in range(degree):
                    if phi[j]:
                        coeffs[shift + j] -= lead * phi[j]
                coeffs[top] = Fraction(0)
        return tuple(coeffs[:degree])

    @classmethod
    def root(cls, conductor: int, exponent: int = 1) -> 'Cyclotomic':
        """zeta_conductor ** exponent."""
        exponent %= conductor
        return cls(conductor, [0] * exponent + [1])

    @classmethod
    def rational(cls, conductor: int, value: Rational) -> 'Cyclotomic':
        return cls(conductor, [value])

    @classmethod
    def zero(cls, conductor: int) -> 'Cyclotomic':
        return cls(conductor)

    @classmethod
    def one(cls, conductor: int) -> 'Cyclotomic':
        return cls(conductor, [1])

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def embed(self, conductor: int) -> 'Cyclotomic':
        """View this element inside Q(zeta_conductor); conductor must be a multiple."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise MalformedInputError(f"Q(zeta_{self.conductor}) does not embed in Q(zeta_{conductor})")
        step = conductor // self.conductor
        coeffs = [Fraction(0)] * ((self.degree - 1) * step + 1 if self.degree else 0)
        for k, c in enumerate(self.coeffs):
            coeffs[k * step] = c
        return Cyclotomic(conductor, coeffs)

    def _align(self, other) -> Tuple['Cyclotomic', 'Cyclotomic']:
        if isinstance(other, (int, Fraction)):
            return self, Cyclotomic.rational(self.conductor, other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented, NotImplemented
        if other.conductor == self.conductor:
            return self, other
        conductor = _lcm(self.conductor, other.conductor)
        return self.embed(conductor), other.embed(conductor)

    def __add__(self, other):
        left, right = self._align(other)
        if left is NotImplemented:
            return NotImplemented
        return Cyclotomic(left.conductor, [a + b for a, b in zip(left.coeffs, right.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, [-c for c in self.coeffs])

    def __sub__(self, other):
        left, right = self._align(other)
        if left is NotImplemented:
            return NotImplemented
        return Cyclotomic(left.conductor, [a - b for a, b in zip(left.coeffs, right.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.conductor, [c * other for c in self.coeffs])
        left, right = self._align(other)
        if left is NotImplemented:
            return NotImplemented
        if left.is_zero() or right.is_zero():
            return Cyclotomic.zero(left.conductor)
        product = [Fraction(0)] * (left.degree + right.degree - 1)
        for i, a in enumerate(left.coeffs):
            if a:
                for j, b in enumerate(right.coeffs):
                    if b:
                        product[i + j] += a * b
        return Cyclotomic(left.conductor, product)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise NonInvertibleError("division by zero")
            return Cyclotomic(self.conductor, [c / other for c in self.coeffs])
        left, right = self._align(other)
        if left is NotImplemented:
            return NotImplemented
        return left * right.inverse()

    def inverse(self) -> 'Cyclotomic':
        """Multiplicative inverse modulo the cyclotomic polynomial."""
        if self.is_zero():
            raise NonInvertibleError("zero has no inverse")
        if self.is_rational():
            return Cyclotomic.rational(self.conductor, 1 / self.coeffs[0])
        x = Symbol('x')
        modulus = Poly(list(reversed(cyclotomic_coefficients(self.conductor))), x, domain=QQ)
        element = Poly([SymRational(c.numerator, c.denominator) for c in reversed(self.coeffs)], x, domain=QQ)
        result = invert(element, modulus)
        return Cyclotomic(self.conductor, [Fraction(int(c.p), int(c.q)) for c in reversed(result.all_coeffs())])

    def conj(self) -> 'Cyclotomic':
        """Complex conjugate: zeta -> zeta^-1."""
        coeffs = [Fraction(0)] * self.conductor
        for k, c in enumerate(self.coeffs):
            coeffs[-k % self.conductor] += c
        return Cyclotomic(self.conductor, coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and (self.coeffs[0] if self.coeffs else 0) == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        left, right = self._align(other)
        return left.coeffs == right.coeffs

    def __hash__(self):
        return hash((self.conductor, self.coeffs))

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*z{self.conductor}^{k}")
        return ' + '.join(terms) if terms else '0'

    def to_json(self) -> dict:
        return {'conductor': self.conductor, 'coeffs': [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> 'Cyclotomic':
        try:
            return cls(int(data['conductor']), [Fraction(c) for c in data['coeffs']])
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as error:
            raise MalformedInputError(f"malformed cyclotomic number {data!r}: {error}")


@dataclass(frozen=True)
class Character:
    """The additive character x -> zeta_c^(u*x) of R = Z/cZ.

    :param unit: The multiplier u, stored as a canonical residue.
    :param spec: The ring.
    """
    unit: int
    spec: RingSpec

    @classmethod
    def standard(cls, spec: RingSpec) -> 'Character':
        return cls(1, spec)

    def exponent(self, x: int) -> int:
        """Integer k in [0, c) with chi(x) = zeta_c^k."""
        return (self.unit * x) % self.spec.char

    def phase_exponent(self, x: int) -> int:
        """Exponent of omega, the primitive phase_order-th root, with chi(x) = omega^k."""
        return self.exponent(x) * (self.spec.phase_order // self.spec.char)

    def __call__(self, x: Union[int, RingElement]) -> Cyclotomic:
        return char_eval(self, x)

    def kernel(self) -> Tuple[int, ...]:
        return tuple(x for x in range(self.spec.modulus) if self.exponent(x) == 0)


def char_eval(chi: Character, x: Union[int, RingElement]) -> Cyclotomic:
    """Evaluate chi at x as an exact root of unity."""
    if isinstance(x, RingElement):
        if x.spec != chi.spec:
            raise MalformedInputError(f"character of {chi.spec} evaluated at an element of {x.spec}")
        x = x.value
    return Cyclotomic.root(chi.spec.char, chi.exponent(x))


def is_generating(chi: Character) -> bool:
    """True iff no nonzero ideal of R lies in the kernel of chi.

    The ideals of Z/dZ are tZ/dZ for the divisors t of d; each nonzero one is
    checked element by element.
    """
    d = chi.spec.modulus
    kernel = set(chi.kernel())
    for t in range(1, d):
        if d % t == 0 and all((t * r) % d in kernel for r in range(d)):
            return False
    return True


def omega(spec: RingSpec, exponent: int = 1) -> Cyclotomic:
    """omega^exponent for omega the primitive phase_order-th root of unity."""
    return Cyclotomic.root(spec.phase_order, exponent)
