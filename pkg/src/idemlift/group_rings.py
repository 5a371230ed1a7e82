"""Group rings RG for a finite abelian group G over the rings defined here.

An element is a dense coefficient vector indexed by the group's canonical
element order.  Multiplication is the straightforward O(|G|^2) convolution;
that naive loop doubles as the reference the vectorized scan kernel is
tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import UnsupportedError
from .groups import AbelianGroup, Subgroup, _MUL_TABLE_CAP
from .rings import Ring, modular_inverse


@dataclass(frozen=True)
class GroupRingElement:
    coeffs: tuple
    ring: "GroupRing"

    def _match(self, other: "GroupRingElement"):
        if self.ring != other.ring:
            raise ValueError("mismatched group rings")

    def __add__(self, other):
        self._match(other)
        return GroupRingElement(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.ring
        )

    def __sub__(self, other):
        self._match(other)
        return GroupRingElement(
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.ring
        )

    def __neg__(self):
        return GroupRingElement(tuple(-a for a in self.coeffs), self.ring)

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement(tuple(a * other for a in self.coeffs), self.ring)
        self._match(other)
        return self.ring._convolve(self, other)

    def __rmul__(self, scalar: int):
        return self * scalar

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponents are not defined here")
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c) -> "GroupRingElement":
        """Multiply by a coefficient-ring element."""
        return GroupRingElement(tuple(a * c for a in self.coeffs), self.ring)

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.coeffs)

    def coeff_vector(self) -> tuple[int, ...]:
        flat = []
        for a in self.coeffs:
            flat.extend(a.coeff_vector())
        return tuple(flat)

    def __str__(self):
        return self.ring.element_text(self)


class GroupRing(Ring):
    """RG for a base coefficient ring R and finite abelian G."""

    def __init__(self, base: Ring, group: AbelianGroup):
        self.base = base
        self.group = group
        self.coefficient_modulus = base.coefficient_modulus
        self.dimension = group.order * base.dimension

    @property
    def one(self) -> GroupRingElement:
        coeffs = [self.base.zero] * self.group.order
        coeffs[0] = self.base.one
        return GroupRingElement(tuple(coeffs), self)

    @property
    def zero(self) -> GroupRingElement:
        return GroupRingElement(tuple([self.base.zero] * self.group.order), self)

    def from_group_coeffs(self, coeffs: Sequence) -> GroupRingElement:
        if len(coeffs) != self.group.order:
            raise ValueError(
                f"expected {self.group.order} coefficients, got {len(coeffs)}"
            )
        return GroupRingElement(tuple(coeffs), self)

    def from_int_coeffs(self, ints: Sequence[int]) -> GroupRingElement:
        return self.from_group_coeffs([self.base.from_int(v) for v in ints])

    def from_coeffs(self, coeffs: Sequence[int]) -> GroupRingElement:
        bd = self.base.dimension
        if len(coeffs) != self.group.order * bd:
            raise ValueError("flat coefficient vector has the wrong length")
        return GroupRingElement(
            tuple(
                self.base.from_coeffs(coeffs[k * bd : (k + 1) * bd])
                for k in range(self.group.order)
            ),
            self,
        )

    def from_int(self, v: int) -> GroupRingElement:
        coeffs = [self.base.zero] * self.group.order
        coeffs[0] = self.base.from_int(v)
        return GroupRingElement(tuple(coeffs), self)

    def _convolve(self, x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
        group = self.group
        zero = self.base.zero
        out = [zero] * group.order
        if group.order <= _MUL_TABLE_CAP:
            table = group.mul_table()
            for i, ci in enumerate(x.coeffs):
                if ci.is_zero():
                    continue
                row = table[i]
                for j, cj in enumerate(y.coeffs):
                    if cj.is_zero():
                        continue
                    k = row[j]
                    out[k] = out[k] + ci * cj
        else:
            for i, ci in enumerate(x.coeffs):
                if ci.is_zero():
                    continue
                for j, cj in enumerate(y.coeffs):
                    if cj.is_zero():
                        continue
                    k = group.mul(i, j)
                    out[k] = out[k] + ci * cj
        return GroupRingElement(tuple(out), self)

    def hat(self, sub: Subgroup) -> GroupRingElement:
        """|H|^{-1} * sum of the subgroup's elements; |H| must be invertible."""
        if sub.group != self.group:
            raise ValueError("subgroup belongs to a different group")
        m = self.coefficient_modulus
        inv = modular_inverse(sub.order, m) if m > 1 else 0
        coeffs = [self.base.zero] * self.group.order
        c = self.base.from_int(inv)
        for idx in sub.members:
            coeffs[idx] = c
        return GroupRingElement(tuple(coeffs), self)

    def group_sum(self) -> GroupRingElement:
        return GroupRingElement(
            tuple(self.base.one for _ in range(self.group.order)), self
        )

    def reduce_to(self, c: int) -> "GroupRing":
        return GroupRing(self.base.reduce_to(c), self.group)

    def expression(self) -> str:
        return self.base.expression() + self.group.expression()

    def element_text(self, x: GroupRingElement) -> str:
        """Canonical text: ``c0*e + c1*g + c2*g^2`` / rank-2 ``c*(a^i b^j)`` terms.

        Rank-1 output is dense (a coefficient for every power of g) so
        listings line up column-wise; higher ranks print only nonzero
        terms since those carriers have |G| >= 4 basis elements.
        """
        dense = self.group.rank <= 1
        terms = []
        for idx, c in enumerate(x.coeffs):
            if c.is_zero() and not dense:
                continue
            cname = self.base.element_text(c)
            if self.base.dimension > 1 and not c.is_zero():
                cname = f"({cname})"
            terms.append(f"{cname}*{self.group.element_name(idx)}")
        return " + ".join(terms) if terms else "0"

    def structure_constants(self) -> list[list[tuple[int, ...]]]:
        base_sc = self.base.structure_constants()
        bd = self.base.dimension
        n = self.dimension
        order = self.group.order
        table = []
        for gi in range(order):
            for bi in range(bd):
                row = []
                for gj in range(order):
                    gk = self.group.mul(gi, gj)
                    for bj in range(bd):
                        vec = [0] * n
                        prod = base_sc[bi][bj]
                        for bk, v in enumerate(prod):
                            vec[gk * bd + bk] = v
                        row.append(tuple(vec))
                table.append(row)
        return table

    def __eq__(self, other):
        return (
            isinstance(other, GroupRing)
            and other.base == self.base
            and other.group == self.group
        )

    def __hash__(self):
        return hash(("GroupRing", self.base, self.group))

    def __repr__(self):
        return f"GroupRing({self.base!r}, {self.group!r})"


def pow_tower(x, s: int, count: int):
    """x**(s**count) as count successive s-th powers.

    This is how exponents beyond 2**63 stay feasible: the flat value is
    never materialized.
    """
    if s < 0 or count < 0:
        raise ValueError("tower exponents must be non-negative")
    for _ in range(count):
        x = x**s
    return x
