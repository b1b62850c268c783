"""Prime-field arithmetic.

Everything downstream works over F_p for an odd prime p with 2 < p < 2^31.
Scalars are canonical integer residues in [0, p); :class:`FieldElement` is a
thin wrapper for callers who want operator syntax.  The default modulus used
by the benchmark family is 65521, the largest prime below 2^16.
"""

from __future__ import annotations

from .errors import NonPrimeModulus, ZeroInverse

DEFAULT_PRIME = 65521

_MAX_MODULUS = 1 << 31


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for every n < 3,215,031,751.

    The witness set {2, 3, 5, 7} is known to be exact below that bound,
    which covers the whole supported modulus range (< 2^31).
    """
    if n < 2:
        return False
    for q in (2, 3, 5, 7):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """The field F_p.  Validates primality at construction."""

    __slots__ = ("p",)

    def __init__(self, p: int = DEFAULT_PRIME):
        if not (2 < p < _MAX_MODULUS) or not is_prime(p):
            raise NonPrimeModulus(f"modulus must be an odd prime in (2, 2^31), got {p}")
        self.p = p

    # -- scalar arithmetic on canonical residues ---------------------------

    def add(self, a: int, b: int) -> int:
        s = a + b
        return s - self.p if s >= self.p else s

    def sub(self, a: int, b: int) -> int:
        d = a - b
        return d + self.p if d < 0 else d

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def neg(self, a: int) -> int:
        return self.p - a if a else 0

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroInverse("0 has no multiplicative inverse")
        return pow(a, -1, self.p)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def reduce(self, a: int) -> int:
        return a % self.p

    # -- elements ----------------------------------------------------------

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, value % self.p)

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    # -- randomness ----------------------------------------------------------

    def random_element(self, rng) -> int:
        """Uniform residue from a seeded random.Random instance."""
        return rng.randrange(self.p)

    def random_vector(self, n: int, rng) -> list[int]:
        return [rng.randrange(self.p) for _ in range(n)]

    def random_matrix(self, n: int, rng):
        from .linalg import Matrix

        return Matrix.from_rows(self, [[rng.randrange(self.p) for _ in range(n)] for _ in range(n)])

    def random_nonsingular_matrix(self, n: int, rng):
        """Uniform element of GL(n, F_p) by rejection sampling on det != 0.

        The singular fraction is at most ~n/p, so for the moduli in use the
        expected number of draws is barely above one.
        """
        while True:
            m = self.random_matrix(n, rng)
            if m.rank() == n:
                return m

    # -- plumbing ----------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class FieldElement:
    """A residue with operator syntax.  Mostly a convenience for callers;
    the hot paths all work on the canonical ints directly."""

    __slots__ = ("field", "value")

    def __init__(self, field: PrimeField, value: int):
        self.field = field
        self.value = value % field.p

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field.p != self.field.p:
                raise ValueError("elements of different fields")
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.value, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(v, self.value))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.value * v % self.field.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.value * self.field.inv(v) % self.field.p)

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field.p == other.field.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value}"
