"""Exact arithmetic in small finite fields GF(p^k).

Elements are encoded by an integer index in [0, q): the base-p digits of the
index, little-endian, are the coefficients of the residue polynomial modulo
the field's irreducible modulus.  Multiplication and inversion run through
exp/log tables w.r.t. a fixed generator; addition uses a full q x q table for
small fields and digitwise arithmetic otherwise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import DivisionByZero, FieldTooLarge, NotPrime, ReduciblePolynomial

MAX_FIELD_SIZE = 1 << 16
_ADD_TABLE_LIMIT = 256


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p), coefficients little-endian tuples


def _poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mod(a, m, p):
    # remainder of a by monic m over GF(p)
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        shift = len(a) - 1 - dm
        lead = a[-1]
        for i, ci in enumerate(m):
            a[shift + i] = (a[shift + i] - lead * ci) % p
        a.pop()
    return _poly_trim(a)


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _monic_polys(p: int, degree: int):
    """All monic polynomials of the given degree, lex order on (c0, c1, ...)."""
    for low in itertools.product(range(p), repeat=degree):
        yield low + (1,)


def _is_irreducible(poly, p: int) -> bool:
    deg = len(poly) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    if poly[0] == 0:  # divisible by t
        return False
    for d in range(1, deg // 2 + 1):
        for g in _monic_polys(p, d):
            if not _poly_mod(poly, g, p):
                return False
    return True


def _default_modulus(p: int, k: int):
    for cand in _monic_polys(p, k):
        if _is_irreducible(cand, p):
            return cand
    raise ReduciblePolynomial(f"no irreducible polynomial of degree {k} over GF({p})")


# ---------------------------------------------------------------------------


class Field:
    """Immutable GF(p^k) with table-backed arithmetic on element indices."""

    def __init__(self, p: int, k: int, modulus=None):
        if not _is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if k < 1:
            raise NotPrime(f"extension degree must be >= 1, got {k}")
        q = p**k
        if q > MAX_FIELD_SIZE:
            raise FieldTooLarge(f"p^k = {q} exceeds {MAX_FIELD_SIZE}")
        if modulus is None:
            modulus = _default_modulus(p, k)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise ReduciblePolynomial("modulus must be monic of degree k")
            if not _is_irreducible(modulus, p):
                raise ReduciblePolynomial(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.k = k
        self.q = q
        self.modulus = modulus
        self._build_tables()

    # index <-> coefficient tuple
    def coeffs(self, index: int):
        c = []
        for _ in range(self.k):
            c.append(index % self.p)
            index //= self.p
        return tuple(c)

    def from_coeffs(self, c) -> int:
        idx = 0
        reduced = _poly_mod(c, self.modulus, self.p)
        for ci in reversed(reduced + (0,) * (self.k - len(reduced))):
            idx = idx * self.p + ci
        return idx

    def _raw_mul(self, a: int, b: int) -> int:
        prod = _poly_mul(self.coeffs(a), self.coeffs(b), self.p)
        return self.from_coeffs(prod)

    def _build_tables(self):
        p, q = self.p, self.q
        # additive table (small fields) -- fall back to digit arithmetic
        if q <= _ADD_TABLE_LIMIT:
            self._add = [
                [self._digit_add(a, b) for b in range(q)] for a in range(q)
            ]
        else:
            self._add = None
        # find a multiplicative generator, build exp/log tables
        self._exp = None
        self._log = None
        if q > 2:
            for g in range(2, q):
                x, order = 1, 0
                while True:
                    x = self._raw_mul(x, g)
                    order += 1
                    if x == 1:
                        break
                if order == q - 1:
                    exp = [1] * (q - 1)
                    log = [0] * q
                    x = 1
                    for i in range(q - 1):
                        exp[i] = x
                        log[x] = i
                        x = self._raw_mul(x, g)
                    self._exp = exp
                    self._log = log
                    self.generator = g
                    break
        else:
            self.generator = 1

    def _digit_add(self, a: int, b: int) -> int:
        p = self.p
        out, mult = 0, 1
        for _ in range(self.k):
            out += ((a % p + b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    # -- arithmetic on indices -------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self._add is not None:
            return self._add[a][b]
        return self._digit_add(a, b)

    def neg(self, a: int) -> int:
        p = self.p
        out, mult = 0, 1
        for _ in range(self.k):
            out += ((-(a % p)) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is None:  # GF(2)
            return a & b
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self._exp is None:
            return a
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return 0
        if self._exp is None:  # GF(2), so a == 1
            return 1
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    # -- element objects -------------------------------------------------

    def __call__(self, index: int) -> "FieldElement":
        return FieldElement(self, index % self.q)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self):
        return [FieldElement(self, i) for i in range(self.q)]

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"Field(p={self.p}, k={self.k}, modulus={list(self.modulus)})"


@dataclass(frozen=True)
class FieldElement:
    field: Field
    index: int

    def _bin(self, other, op):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("field mismatch")
            other = other.index
        return FieldElement(self.field, op(self.index, other))

    def __add__(self, other):
        return self._bin(other, self.field.add)

    def __sub__(self, other):
        return self._bin(other, self.field.sub)

    def __mul__(self, other):
        return self._bin(other, self.field.mul)

    def __truediv__(self, other):
        if isinstance(other, FieldElement):
            other = other.index
        return FieldElement(self.field, self.field.mul(self.index, self.field.inv(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.index))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.index, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.index))

    def __bool__(self):
        return self.index != 0

    def __repr__(self):
        return f"<{self.index} in GF({self.field.q})>"


@lru_cache(maxsize=None)
def make_field(p: int, k: int, modulus=None) -> Field:
    """Build (and cache) GF(p^k); modulus defaults to the lexicographically
    smallest monic irreducible of degree k, coefficients compared low-to-high."""
    return Field(p, k, modulus)
