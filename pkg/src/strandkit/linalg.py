"""Exact linear algebra over the rationals or a prime field.

Ranks and null spaces are delegated to sympy's sparse ``DomainMatrix``.
"""

from __future__ import annotations

from fractions import Fraction

from sympy import GF, QQ
from sympy.polys.matrices import DomainMatrix

from .errors import InputError


class Field:
    """Scalar field: ``Field()`` is QQ, ``Field(p)`` is GF(p) for an odd prime p."""

    def __init__(self, prime=None):
        if prime is not None:
            prime = int(prime)
            if prime < 3 or any(prime % q == 0 for q in range(2, int(prime ** 0.5) + 1)):
                raise InputError(f"field characteristic must be an odd prime, got {prime}")
        self.prime = prime
        self.domain = QQ if prime is None else GF(prime)

    @classmethod
    def parse(cls, text):
        """Parse ``q`` or ``p:PRIME``."""
        if text in (None, '', 'q', 'Q', 'QQ'):
            return cls()
        if text.startswith('p:'):
            try:
                return cls(int(text[2:]))
            except ValueError:
                raise InputError(f"bad field {text!r}") from None
        raise InputError(f"bad field {text!r}; use q or p:PRIME")

    def convert(self, c):
        if isinstance(c, Fraction):
            if self.prime is None:
                return QQ(c.numerator, c.denominator)
            return self.domain(c.numerator) / self.domain(c.denominator)
        return self.domain(int(c)) if self.prime is not None else QQ(int(c))

    def is_zero(self, c):
        return self.convert(c) == self.domain.zero

    def __repr__(self):
        return "QQ" if self.prime is None else f"GF({self.prime})"


QQ_FIELD = Field()


def to_domain_matrix(rows, shape, field: Field):
    """``rows`` is ``{i: {j: coeff}}``; zero entries are dropped."""
    data = {}
    for i, row in rows.items():
        conv = {}
        for j, c in row.items():
            v = field.convert(c)
            if v:
                conv[j] = v
        if conv:
            data[i] = conv
    return DomainMatrix(data, shape, field.domain)


def rank(rows, shape, field: Field = QQ_FIELD):
    if shape[0] == 0 or shape[1] == 0 or not rows:
        return 0
    return to_domain_matrix(rows, shape, field).rank()


def nullspace(rows, shape, field: Field = QQ_FIELD):
    """Basis of the right null space as a list of dense coefficient lists."""
    nr, nc = shape
    if nc == 0:
        return []
    if nr == 0 or not rows:
        return [[field.domain.one if k == j else field.domain.zero for k in range(nc)] for j in range(nc)]
    ns = to_domain_matrix(rows, shape, field).to_dense().nullspace()
    return [list(r) for r in ns.to_list()]
