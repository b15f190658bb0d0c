"""Exact arithmetic in a prime field F_q and its degree-m extension F_{q^m}.

An extension element is stored as a plain int: the base-q digits of the
int, least significant first, are the coefficients of the polynomial-basis
representation.  For q = 2 an element is therefore literally the bit
pattern of its coefficient vector, addition is XOR, and zero is uniformly
the int 0.  Log/antilog tables are built at construction (the order cap
guarantees they fit) and back multiplication, inversion, powering and the
Frobenius map x -> x^q.

Moduli are little-endian coefficient sequences, e.g. [1, 1, 0, 0, 1] for
x^4 + x + 1, and are re-verified irreducible at construction by trial
division against every lower-degree monic polynomial.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DivisionByZero, NotIrreducible, PreconditionError, UnsupportedSize

#: Largest permitted field size; keeps exhaustive element iteration feasible.
DEFAULT_ORDER_CAP = 2**16

#: One irreducible polynomial per extension degree of F_2 (lexicographically
#: smallest by little-endian encoding), stored little-endian.
DEFAULT_MODULI_GF2 = {
    1: (0, 1),
    2: (1, 1, 1),
    3: (1, 1, 0, 1),
    4: (1, 1, 0, 0, 1),
    5: (1, 0, 1, 0, 0, 1),
    6: (1, 1, 0, 0, 0, 0, 1),
    7: (1, 1, 0, 0, 0, 0, 0, 1),
    8: (1, 1, 0, 1, 1, 0, 0, 0, 1),
    9: (1, 1, 0, 0, 0, 0, 0, 0, 0, 1),
    10: (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    11: (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    12: (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    13: (1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    14: (1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    15: (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    16: (1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# Polynomial helpers over F_q (coefficient tuples, little-endian, no
# trailing-zero normalization required by callers).
# ---------------------------------------------------------------------------

def _poly_trim(p: Sequence[int]) -> tuple[int, ...]:
    d = len(p)
    while d > 0 and p[d - 1] == 0:
        d -= 1
    return tuple(p[:d])


def _poly_mod(a: Sequence[int], b: Sequence[int], q: int) -> tuple[int, ...]:
    """Remainder of a modulo b over F_q.  b must be nonzero."""
    a = list(_poly_trim(a))
    b = _poly_trim(b)
    db = len(b) - 1
    inv_lead = pow(b[-1], q - 2, q) if q > 2 else 1
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        factor = (a[-1] * inv_lead) % q
        for i, coef in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * coef) % q
        a = list(_poly_trim(a))
    return tuple(a)


def _monic_polys(q: int, degree: int) -> Iterable[tuple[int, ...]]:
    for low in range(q**degree):
        coeffs = []
        x = low
        for _ in range(degree):
            coeffs.append(x % q)
            x //= q
        yield tuple(coeffs) + (1,)


def poly_is_irreducible(p: Sequence[int], q: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg(p)//2."""
    p = _poly_trim(p)
    m = len(p) - 1
    if m < 1:
        return False
    for d in range(1, m // 2 + 1):
        for g in _monic_polys(q, d):
            if not _poly_mod(p, g, q):
                return False
    return True


def smallest_irreducible(q: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m over F_q."""
    for g in _monic_polys(q, m):
        if poly_is_irreducible(g, q):
            return g
    raise AssertionError("irreducible polynomials exist for every degree")


# ---------------------------------------------------------------------------
# Field contexts
# ---------------------------------------------------------------------------

class PrimeField:
    """F_q = Z/qZ for prime q; elements are ints in [0, q)."""

    def __init__(self, q: int):
        if not is_prime(q):
            raise PreconditionError(f"q={q} is not prime")
        self.q = q
        self.order = q
        self.zero = 0
        self.one = 1 % q

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def neg(self, a: int) -> int:
        return (-a) % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def inv(self, a: int) -> int:
        if a % self.q == 0:
            raise DivisionByZero("0 has no inverse")
        return pow(a, self.q - 2, self.q)

    def elements(self) -> range:
        return range(self.q)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("PrimeField", self.q))

    def __repr__(self) -> str:
        return f"PrimeField({self.q})"


class FieldCtx:
    """The tower F_q < F_{q^m}: modulus, arithmetic, Frobenius.

    Immutable after construction; all operations are pure functions, so a
    context is safely shareable across concurrent tasks.
    """

    def __init__(self, q: int, m: int, modulus: Sequence[int], *,
                 max_order: int = DEFAULT_ORDER_CAP):
        if not is_prime(q):
            raise PreconditionError(f"q={q} is not prime (prime-power base fields are out of scope)")
        if m < 1:
            raise PreconditionError(f"extension degree m={m} must be >= 1")
        if q**m > max_order:
            raise UnsupportedSize(f"q^m = {q**m} exceeds the cap {max_order}")
        modulus = tuple(int(c) % q for c in modulus)
        if len(modulus) != m + 1:
            raise PreconditionError(f"modulus must have degree m={m} (got {len(modulus) - 1})")
        if modulus[-1] != 1:
            raise PreconditionError("modulus must be monic")
        if not poly_is_irreducible(modulus, q):
            raise NotIrreducible(f"modulus {list(modulus)} factors over F_{q}")

        self.q = q
        self.m = m
        self.modulus = modulus
        self.order = q**m
        self.base = PrimeField(q)
        self.zero = 0
        self.one = 1

        self._build_tables()
        # q^i mod (order-1) for i in 0..m-1; Frobenius exponents cycle with m.
        self._frob_exp = [pow(q, i, max(self.order - 1, 1)) for i in range(m)]

    # -- representation helpers -------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Little-endian coefficient vector of length m."""
        out = []
        for _ in range(self.m):
            out.append(a % self.q)
            a //= self.q
        return tuple(out)

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.m and any(c % self.q for c in coeffs[self.m:]):
            raise PreconditionError("coefficient vector longer than m")
        a = 0
        for c in reversed([c % self.q for c in coeffs[: self.m]]):
            a = a * self.q + c
        return a

    @property
    def alpha(self) -> int:
        """Residue class of x modulo the modulus."""
        if self.m >= 2:
            return self.q  # the digit-1-at-position-1 element
        return (-self.modulus[0]) % self.q

    def embed(self, c: int) -> int:
        """Embed a base-field scalar as the constant polynomial."""
        return c % self.q

    def elements(self) -> range:
        return range(self.order)

    def nonzero(self) -> range:
        return range(1, self.order)

    # -- arithmetic --------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.q == 2:
            return a ^ b
        return self.from_coeffs([x + y for x, y in zip(self.coeffs(a), self.coeffs(b))])

    def sub(self, a: int, b: int) -> int:
        if self.q == 2:
            return a ^ b
        return self.from_coeffs([x - y for x, y in zip(self.coeffs(a), self.coeffs(b))])

    def neg(self, a: int) -> int:
        if self.q == 2:
            return a
        return self.from_coeffs([-x for x in self.coeffs(a)])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no inverse")
        return self._exp[(self.order - 1) - self._log[a]]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            if e < 0:
                raise DivisionByZero("0 has no inverse")
            return 0
        g = self.order - 1
        return self._exp[(self._log[a] * e) % g] if g else 1

    def frobenius(self, a: int, i: int = 1) -> int:
        """a^(q^i); frobenius(a, m) == a for every a."""
        if i < 0:
            raise PreconditionError("Frobenius iterate must be nonnegative")
        if a == 0:
            return 0
        return self.pow(a, self._frob_exp[i % self.m])

    def scalar_mul(self, c: int, a: int) -> int:
        """Multiply by a base-field scalar c in [0, q)."""
        if self.q == 2:
            return a if c & 1 else 0
        return self.mul(self.embed(c), a)

    # -- internals ----------------------------------------------------------

    def _raw_mul(self, a: int, b: int) -> int:
        """Table-free product, used only while building the tables."""
        if self.q == 2:
            mod_int = 0
            for i, c in enumerate(self.modulus):
                mod_int |= c << i
            p = 0
            while b:
                if b & 1:
                    p ^= a
                a <<= 1
                if a >> self.m:
                    a ^= mod_int
                b >>= 1
            return p
        prod = [0] * (2 * self.m)
        ca, cb = self.coeffs(a), self.coeffs(b)
        for i, x in enumerate(ca):
            if not x:
                continue
            for j, y in enumerate(cb):
                prod[i + j] = (prod[i + j] + x * y) % self.q
        return self.from_coeffs(list(_poly_mod(prod, self.modulus, self.q)) + [0] * self.m)

    def _multiplicative_order(self, a: int) -> int:
        steps, acc = 1, a
        while acc != 1:
            acc = self._raw_mul(acc, a)
            steps += 1
            if steps > self.order:
                raise AssertionError("order walk failed to terminate")
        return steps

    def _build_tables(self) -> None:
        group = self.order - 1
        self._exp = [1] * (2 * max(group, 1))
        self._log = [0] * self.order
        if group == 1:
            return
        # x is primitive for many moduli; fall back to a search otherwise.
        gen = None
        for cand in [self.q % self.order, *range(2, self.order)]:
            if cand in (0, 1):
                continue
            if self._multiplicative_order(cand) == group:
                gen = cand
                break
        if gen is None:
            raise AssertionError("multiplicative group of a finite field is cyclic")
        val = 1
        for i in range(group):
            self._exp[i] = val
            self._exp[i + group] = val
            self._log[val] = i
            val = self._raw_mul(val, gen)

    # -- misc ---------------------------------------------------------------

    def params(self) -> dict:
        return {"q": self.q, "m": self.m, "modulus": list(self.modulus)}

    def __eq__(self, other) -> bool:
        return (isinstance(other, FieldCtx) and other.q == self.q
                and other.m == self.m and other.modulus == self.modulus)

    def __hash__(self) -> int:
        return hash((self.q, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"FieldCtx(q={self.q}, m={self.m}, modulus={list(self.modulus)})"


def ctx_new(q: int, m: int, modulus: Sequence[int] | None = None, *,
            max_order: int = DEFAULT_ORDER_CAP) -> FieldCtx:
    """Build a verified field context; modulus defaults to the built-in table."""
    if modulus is None:
        if q == 2 and m in DEFAULT_MODULI_GF2:
            modulus = DEFAULT_MODULI_GF2[m]
        else:
            if not is_prime(q):
                raise PreconditionError(f"q={q} is not prime")
            if q**m > max_order:
                raise UnsupportedSize(f"q^m = {q**m} exceeds the cap {max_order}")
            modulus = smallest_irreducible(q, m)
    return FieldCtx(q, m, modulus, max_order=max_order)
