"""Exact arithmetic in GF(p^r) with primitive elements and discrete logs.

Field elements are plain ints in [0, q-1], read as base-p coefficient
vectors: digit i of the integer is the coefficient of x^i in the polynomial
representation modulo the field's irreducible modulus polynomial.  This
encoding is compact and gives every element set a canonical order.

A FieldCtx is immutable after construction (tables are built eagerly), so
contexts can be shared freely across threads.
"""

from math import isqrt

from .errors import (
    DegreeZero,
    DivisionByZero,
    LogOfZero,
    NotPrime,
    NotPrimitive,
    OrderOverflow,
    ZeroElement,
)
from .numth import factorize, is_prime

# An element is just its canonical integer encoding.
FieldElem = int

# Full log tables are built for fields up to this order; larger fields fall
# back to baby-step giant-step per query.
LOG_TABLE_MAX_ORDER = 1 << 20

# q**2 - 1 must stay within a 64-bit signed range (desk-scale contract).
_MAX_ORDER = isqrt(2**63 - 1)


def _poly_divmod(num: list[int], den: list[int], p: int) -> tuple[list[int], list[int]]:
    """Divide polynomials over GF(p); coefficient lists are little-endian."""
    num = list(num)
    dd = len(den) - 1
    while len(den) > 1 and den[-1] == 0:
        den = den[:-1]
        dd -= 1
    inv_lead = pow(den[-1], p - 2, p) if p > 2 else den[-1]
    quot = [0] * max(len(num) - dd, 0)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] * inv_lead % p
        if c:
            quot[i - dd] = c
            for j, d in enumerate(den):
                num[i - dd + j] = (num[i - dd + j] - c * d) % p
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return quot, num


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(poly)/2."""
    deg = len(poly) - 1
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for low in range(p**d):
            div = _digits(low, p, d) + [1]
            _, rem = _poly_divmod(list(poly), div, p)
            if len(rem) == 1 and rem[0] == 0:
                return False
    return True


def _digits(x: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(x % p)
        x //= p
    return out


def _undigits(coeffs, p: int) -> int:
    val = 0
    for c in reversed(list(coeffs)):
        val = val * p + c
    return val


def smallest_irreducible(p: int, r: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree r over GF(p).

    "Smallest" compares coefficients from the highest power down, which
    coincides with integer order of the base-p encoding of the low
    coefficients.  Degree 1 yields the polynomial x.
    """
    for low in range(p**r):
        poly = tuple(_digits(low, p, r) + [1])
        if _is_irreducible(poly, p):
            return poly
    raise AssertionError(f"no irreducible polynomial of degree {r} over GF({p})")


class FieldCtx:
    """A concrete finite field GF(p^r) with a pinned modulus and generator.

    Built via field_new() for the canonical (smallest modulus polynomial,
    smallest primitive element) choice; all attributes are fixed at
    construction time.
    """

    def __init__(self, p: int, r: int, modulus_poly: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise NotPrime(f"characteristic must be prime, got {p}")
        if r < 1:
            raise DegreeZero(f"extension degree must be >= 1, got {r}")
        q = p**r
        if q > _MAX_ORDER:
            raise OrderOverflow(f"q^2 - 1 = {q}^2 - 1 exceeds the supported 64-bit range")
        self.p = p
        self.r = r
        self.q = q
        if modulus_poly is None:
            modulus_poly = smallest_irreducible(p, r)
        else:
            modulus_poly = tuple(int(c) % p for c in modulus_poly)
            if len(modulus_poly) != r + 1 or modulus_poly[-1] != 1:
                raise ValueError(f"modulus polynomial must be monic of degree {r}")
            if not _is_irreducible(modulus_poly, p):
                raise ValueError(f"modulus polynomial {list(modulus_poly)} is reducible over GF({p})")
        self.modulus_poly = modulus_poly
        self._order_factors = tuple(factorize(q - 1)) if q > 2 else ()
        self.primitive = self._find_primitive()
        # exponent table wrt self.primitive; index 0 stays None
        self._log: list[int | None] | None = None
        if q <= LOG_TABLE_MAX_ORDER:
            log: list[int | None] = [None] * q
            x = 1
            for e in range(q - 1):
                log[x] = e
                x = self.mul(x, self.primitive)
            self._log = log

    # --- element views ---

    def coeffs(self, x: FieldElem) -> tuple[int, ...]:
        """Base-p coefficient vector (length r, ascending powers) of x."""
        self._check(x)
        return tuple(_digits(x, self.p, self.r))

    def from_coeffs(self, coeffs) -> FieldElem:
        vec = [int(c) % self.p for c in coeffs]
        if len(vec) > self.r:
            raise ValueError(f"at most {self.r} coefficients expected")
        return _undigits(vec, self.p)

    def elements(self) -> range:
        return range(self.q)

    def _check(self, x: FieldElem) -> None:
        if not 0 <= x < self.q:
            raise ValueError(f"element {x} out of range for GF({self.q})")

    # --- arithmetic ---

    def add(self, a: FieldElem, b: FieldElem) -> FieldElem:
        self._check(a)
        self._check(b)
        if self.r == 1:
            return (a + b) % self.p
        p = self.p
        return _undigits(
            [(x + y) % p for x, y in zip(_digits(a, p, self.r), _digits(b, p, self.r))], p
        )

    def sub(self, a: FieldElem, b: FieldElem) -> FieldElem:
        self._check(a)
        self._check(b)
        if self.r == 1:
            return (a - b) % self.p
        p = self.p
        return _undigits(
            [(x - y) % p for x, y in zip(_digits(a, p, self.r), _digits(b, p, self.r))], p
        )

    def neg(self, a: FieldElem) -> FieldElem:
        return self.sub(0, a)

    def mul(self, a: FieldElem, b: FieldElem) -> FieldElem:
        self._check(a)
        self._check(b)
        p, r = self.p, self.r
        if r == 1:
            return a * b % p
        if a == 0 or b == 0:
            return 0
        av = _digits(a, p, r)
        bv = _digits(b, p, r)
        prod = [0] * (2 * r - 1)
        for i, ai in enumerate(av):
            if ai:
                for j, bj in enumerate(bv):
                    prod[i + j] += ai * bj
        # reduce modulo the monic modulus polynomial
        mod = self.modulus_poly
        for i in range(len(prod) - 1, r - 1, -1):
            c = prod[i] % p
            if c:
                for j in range(r):
                    prod[i - r + j] -= c * mod[j]
            prod[i] = 0
        return _undigits([c % p for c in prod[:r]], p)

    def pow(self, a: FieldElem, e: int) -> FieldElem:
        self._check(a)
        if e < 0:
            a = self.inv(a)
            e = -e
        if self.r == 1:
            return pow(a, e, self.p)
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: FieldElem) -> FieldElem:
        self._check(a)
        if a == 0:
            raise DivisionByZero(f"cannot invert 0 in GF({self.q})")
        if self.r == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.q - 2)

    # --- multiplicative structure ---

    def element_order(self, x: FieldElem) -> int:
        """Smallest k >= 1 with x^k = 1; always divides q - 1."""
        self._check(x)
        if x == 0:
            raise ZeroElement("order of 0 is undefined")
        o = self.q - 1
        for f in self._order_factors:
            while o % f == 0 and self.pow(x, o // f) == 1:
                o //= f
        return o

    def is_primitive(self, x: FieldElem) -> bool:
        if not 0 < x < self.q:
            return False
        return all(self.pow(x, (self.q - 1) // f) != 1 for f in self._order_factors)

    def _find_primitive(self) -> FieldElem:
        for x in range(1, self.q):
            if self.is_primitive(x):
                return x
        raise AssertionError(f"no generator found in GF({self.q})")

    def primitive_elements(self) -> list[FieldElem]:
        """All generators of the multiplicative group, in canonical element order."""
        return [x for x in range(1, self.q) if self.is_primitive(x)]

    def discrete_log(self, x: FieldElem, base: FieldElem | None = None) -> int:
        """Exponent e in [0, q-2] with base^e = x; base defaults to ctx.primitive."""
        self._check(x)
        if x == 0:
            raise LogOfZero(f"log of 0 is undefined in GF({self.q})")
        if base is None:
            base = self.primitive
        elif not self.is_primitive(base):
            raise NotPrimitive(f"{base} does not generate GF({self.q})*")
        if self._log is not None:
            e = self._log[x]
            assert e is not None
            if base == self.primitive:
                return e
            t = self._log[base]
            assert t is not None
            return e * pow(t, -1, self.q - 1) % (self.q - 1)
        return baby_step_giant_step(self, base, x)

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, r={self.r}, modulus={list(self.modulus_poly)})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldCtx)
            and (self.p, self.r, self.modulus_poly) == (other.p, other.r, other.modulus_poly)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.r, self.modulus_poly))


def field_new(p: int, r: int) -> FieldCtx:
    """GF(p^r) with the smallest irreducible modulus and smallest generator."""
    return FieldCtx(p, r)


def baby_step_giant_step(ctx: FieldCtx, base: FieldElem, x: FieldElem, order: int | None = None) -> int:
    """Solve base^e = x in ctx by meet-in-the-middle; O(sqrt(order)) time/space.

    `order` is the multiplicative order of base (q-1 for a primitive base).
    Raises LogOfZero / ValueError when no exponent exists.
    """
    if x == 0:
        raise LogOfZero("log of 0 is undefined")
    if order is None:
        order = ctx.q - 1
    if order == 1:
        if x == 1:
            return 0
        raise ValueError(f"{x} is not a power of {base}")
    m = isqrt(order - 1) + 1
    baby: dict[int, int] = {}
    g = 1
    for j in range(m):
        baby.setdefault(g, j)
        g = ctx.mul(g, base)
    stride = ctx.inv(ctx.pow(base, m))
    gamma = x
    for i in range(m + 1):
        if gamma in baby:
            return (i * m + baby[gamma]) % order
        gamma = ctx.mul(gamma, stride)
    raise ValueError(f"{x} is not a power of {base}")


def subfield_image(ctx: FieldCtx, q_sub: int) -> list[FieldElem]:
    """The elements of the subfield of order q_sub inside ctx, sorted.

    The nonzero part is the unique subgroup of order q_sub - 1, generated by
    primitive^((q-1)/(q_sub-1)).
    """
    _check_subfield_order(ctx, q_sub)
    if q_sub == ctx.q:
        return list(range(ctx.q))
    step = (ctx.q - 1) // (q_sub - 1)
    g = ctx.pow(ctx.primitive, step)
    out = {0, 1}
    x = g
    while x != 1:
        out.add(x)
        x = ctx.mul(x, g)
    assert len(out) == q_sub
    return sorted(out)


def in_subfield(ctx: FieldCtx, x: FieldElem, q_sub: int) -> bool:
    """Membership in the order-q_sub subfield, via the fixed-point test x^q_sub = x."""
    _check_subfield_order(ctx, q_sub)
    return ctx.pow(x, q_sub) == x


def _check_subfield_order(ctx: FieldCtx, q_sub: int) -> None:
    n = q_sub
    d = 0
    while n > 1 and n % ctx.p == 0:
        n //= ctx.p
        d += 1
    if n != 1 or d < 1 or ctx.r % d != 0:
        raise ValueError(f"{q_sub} is not a subfield order of GF({ctx.q})")
