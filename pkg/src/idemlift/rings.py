"""Integer residue rings and the coefficient-ring interface everything shares.

Every carrier in this package is a finite commutative ring whose elements
are fixed-length vectors of integers modulo m: the residue ring Z_m itself
(length 1), polynomial quotients Z_m[x]/(q) (length deg q), and group rings
over either (length multiplied by the group order).  That shared shape gives
uniform enumeration, serialization, reduction mod a divisor of m, and the
structure constants the brute-force scan kernel consumes.

All arithmetic is exact; Python integers are unbounded, so no operation here
can overflow.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import SizeLimitError, UnsupportedError

DEFAULT_CHARACTERISTIC_BOUND = 2**63
FACTORIZATION_BOUND = 2**63


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: return (g, x, y) with a*x + b*y == g == gcd(a, b) > 0.

    gcd(0, 0) is undefined and raises ValueError.
    """
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def modular_inverse(a: int, m: int) -> int:
    """Least non-negative x with a*x == 1 (mod m); m == 1 returns 0."""
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if m == 1:
        return 0
    g, x, _ = ext_gcd(a % m, m)
    if g != 1:
        raise UnsupportedError(f"{a} is not invertible modulo {m}")
    return x % m


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (desk-scale moduli)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimePower:
    prime: int
    exponent: int

    @property
    def value(self) -> int:
        return self.prime**self.exponent


@dataclass(frozen=True)
class PrimePowerFactorization:
    """m = prod p_i^{r_i} together with the CRT data the combiners need.

    cofactors[i] is m_i = m / p_i^{r_i}; inverses[i] is the least positive
    s_i with s_i * m_i == 1 (mod p_i^{r_i}).  The weights s_i * m_i are the
    coefficients of the idempotent decomposition of 1 in Z_m.
    """

    modulus: int
    factors: tuple[PrimePower, ...]
    cofactors: tuple[int, ...]
    inverses: tuple[int, ...]

    @property
    def crt_weights(self) -> tuple[int, ...]:
        return tuple(s * c for s, c in zip(self.inverses, self.cofactors))

    @property
    def radical(self) -> int:
        return math.prod(pp.prime for pp in self.factors)

    @property
    def max_exponent(self) -> int:
        return max(pp.exponent for pp in self.factors)


def factorize(m: int) -> PrimePowerFactorization:
    """Factor 2 <= m < 2**63 by trial division, with CRT cofactors and inverses."""
    if m < 2:
        raise ValueError(f"factorize needs m >= 2, got {m}")
    if m >= FACTORIZATION_BOUND:
        raise SizeLimitError(f"factorize supports m < 2**63, got {m}")
    factors = []
    rest = m
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            e = 0
            while rest % d == 0:
                rest //= d
                e += 1
            factors.append(PrimePower(d, e))
        d += 1 if d == 2 else 2
    if rest > 1:
        factors.append(PrimePower(rest, 1))
    cofactors = tuple(m // pp.value for pp in factors)
    inverses = tuple(
        modular_inverse(c, pp.value) for c, pp in zip(cofactors, factors)
    )
    return PrimePowerFactorization(m, tuple(factors), cofactors, inverses)


class Ring:
    """Interface shared by the concrete carriers.

    Subclasses set ``coefficient_modulus`` (the m above) and ``dimension``
    (the coefficient-vector length) and implement ``from_coeffs``,
    ``reduce_to``, ``expression``, ``element_text`` and
    ``structure_constants``.  Everything else is generic.
    """

    coefficient_modulus: int
    dimension: int

    @property
    def cardinality(self) -> int:
        return self.coefficient_modulus**self.dimension

    @property
    def characteristic(self) -> int:
        return self.coefficient_modulus

    @property
    def zero(self):
        return self.from_coeffs((0,) * self.dimension)

    @property
    def one(self):
        raise NotImplementedError

    def from_coeffs(self, coeffs: Sequence[int]):
        raise NotImplementedError

    def reduce_to(self, c: int) -> "Ring":
        """The structurally identical ring with coefficient modulus c."""
        raise NotImplementedError

    def expression(self) -> str:
        """Canonical ring expression, parseable by the CLI grammar."""
        raise NotImplementedError

    def element_text(self, x) -> str:
        raise NotImplementedError

    def structure_constants(self) -> list[list[tuple[int, ...]]]:
        """n x n table of basis products as coefficient vectors."""
        raise NotImplementedError

    def elements(self) -> Iterator:
        """All elements, ascending in the lexicographic coefficient order."""
        for coeffs in itertools.product(
            range(self.coefficient_modulus), repeat=self.dimension
        ):
            yield self.from_coeffs(coeffs)

    def include(self, x):
        """Canonical-representative lift from a reduced twin of this ring."""
        return self.from_coeffs(x.coeff_vector())

    def reduce(self, x, target: "Ring"):
        """Push x from this ring onto a reduced twin (coefficients mod c)."""
        return target.from_coeffs(x.coeff_vector())


@dataclass(frozen=True)
class ResidueElement:
    """Least non-negative residue ``value`` modulo ``modulus``.

    The modulus-1 case is the zero ring, where 0 == 1.
    """

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _match(self, other: "ResidueElement"):
        if self.modulus != other.modulus:
            raise ValueError(
                f"mismatched moduli: {self.modulus} vs {other.modulus}"
            )

    def __add__(self, other):
        self._match(other)
        return ResidueElement(self.value + other.value, self.modulus)

    def __sub__(self, other):
        self._match(other)
        return ResidueElement(self.value - other.value, self.modulus)

    def __neg__(self):
        return ResidueElement(-self.value, self.modulus)

    def __mul__(self, other):
        if isinstance(other, int):
            return ResidueElement(self.value * other, self.modulus)
        self._match(other)
        return ResidueElement(self.value * other.value, self.modulus)

    def __rmul__(self, scalar: int):
        return ResidueElement(self.value * scalar, self.modulus)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponents are not defined here")
        return ResidueElement(pow(self.value, e, self.modulus), self.modulus)

    def is_zero(self) -> bool:
        return self.value == 0

    def coeff_vector(self) -> tuple[int, ...]:
        return (self.value,)

    @property
    def ring(self) -> "ResidueRing":
        return ResidueRing(self.modulus)

    def __str__(self):
        return str(self.value)


class ResidueRing(Ring):
    """The ring Z_m of integers modulo m >= 1."""

    def __init__(self, modulus: int):
        if modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {modulus}")
        self.coefficient_modulus = modulus
        self.dimension = 1

    @property
    def modulus(self) -> int:
        return self.coefficient_modulus

    @property
    def one(self) -> ResidueElement:
        return ResidueElement(1, self.modulus)

    def from_int(self, v: int) -> ResidueElement:
        return ResidueElement(v, self.modulus)

    def from_coeffs(self, coeffs: Sequence[int]) -> ResidueElement:
        (v,) = coeffs
        return ResidueElement(v, self.modulus)

    def reduce_to(self, c: int) -> "ResidueRing":
        return ResidueRing(c)

    def expression(self) -> str:
        return f"Z({self.modulus})"

    def element_text(self, x: ResidueElement) -> str:
        return str(x.value)

    def structure_constants(self) -> list[list[tuple[int, ...]]]:
        return [[(1 % self.modulus,)]]

    def __eq__(self, other):
        return isinstance(other, ResidueRing) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("ResidueRing", self.modulus))

    def __repr__(self):
        return f"ResidueRing({self.modulus})"


def characteristic_of(ring: Ring, bound: int = DEFAULT_CHARACTERISTIC_BOUND) -> int:
    """Smallest s >= 1 with s*1 == 0 in the ring, verified for minimality.

    The structural value is ring.characteristic; this re-checks that it
    annihilates 1 and that no proper divisor does.  Values above ``bound``
    raise SizeLimitError.
    """
    c = ring.characteristic
    if c > bound:
        raise SizeLimitError(f"characteristic {c} exceeds bound {bound}")
    one = ring.one
    if not (c * one).is_zero():
        raise ArithmeticError(f"claimed characteristic {c} does not annihilate 1")
    if c > 1:
        for pp in factorize(c).factors:
            if ((c // pp.prime) * one).is_zero():
                raise ArithmeticError(f"characteristic {c} is not minimal")
    return c


def crt_recombine(residues: Sequence[int], fact: PrimePowerFactorization) -> int:
    """Inverse CRT: the x mod m with x == residues[i] (mod p_i^{r_i})."""
    total = sum(w * r for w, r in zip(fact.crt_weights, residues))
    return total % fact.modulus
