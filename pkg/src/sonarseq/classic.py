"""The five classical modular sonar sequence constructions.

quadratic   p x (p+1)      f(i) = a*i^2 + b*i + c mod p, p odd prime, a invertible
shift       (q-1) x q      f(i) = log_beta(alpha^(i*q) + alpha^i) in GF(q^2)
welch_exp   p x p          f(i) = alpha^(i+s) mod p, i = 0..p-1 (extended)
welch_exp_short p x (p-1)  the s = 0 variant without the i = 0 term
welch_log   (p-1) x (p-1)  f(i) = log_alpha(i) mod p
golomb      (q-1) x (q-2)  f(i) = j with alpha^i + beta^j = 1 (Lempel when alpha = beta)
"""

from typing import Optional

from . import ff
from .errors import ANotInvertible, NotOddPrime, NotPrime, NotPrimitive, QTooSmall
from .fold import SonarSeq
from .numth import is_prime, prime_power_decompose


def quadratic(p: int, a: int = 1, b: int = 0, c: int = 0) -> SonarSeq:
    """p x (p+1) sequence from the quadratic f(i) = a*i^2 + b*i + c mod p."""
    if p == 2 or not is_prime(p):
        raise NotOddPrime(f"p must be an odd prime, got {p}")
    if a % p == 0:
        raise ANotInvertible(f"a = {a} is not invertible mod {p}")
    values = tuple((a * i * i + b * i + c) % p for i in range(1, p + 2))
    return SonarSeq(
        values=values,
        m=p,
        modular=True,
        provenance={"construction": "quadratic", "p": p, "a": a % p, "b": b % p, "c": c % p},
    )


def _beta_in_subfield(ctx: ff.FieldCtx, q: int) -> ff.FieldElem:
    # smallest element of the order-q subfield with multiplicative order q - 1
    for x in ff.subfield_image(ctx, q):
        if x != 0 and ctx.element_order(x) == q - 1:
            return x
    raise AssertionError(f"no generator of order {q - 1} in GF({q}) image")


def shift(
    q: int,
    alpha: Optional[ff.FieldElem] = None,
    beta: Optional[ff.FieldElem] = None,
    ctx: Optional[ff.FieldCtx] = None,
) -> SonarSeq:
    """(q-1) x q sequence f(i) = log_beta(alpha^(i*q) + alpha^i) over GF(q^2).

    alpha is primitive in GF(q^2); beta generates the multiplicative group
    of the order-q subfield.  alpha^(i*q) + alpha^i is the relative trace of
    alpha^i, which vanishes at exactly one exponent class mod q+1 (class 0
    in characteristic 2, class (q+1)/2 otherwise), so the q indices used are
    the run immediately after the vanishing one; the starting offset is
    recorded in provenance.  In characteristic 2 the offset is 0 and the
    indices are the plain 1..q.  Each used value is a nonzero subfield
    element (checked; a violation is an internal error).
    """
    p, s = prime_power_decompose(q)
    if ctx is None:
        ctx = ff.field_new(p, 2 * s)
    if alpha is None:
        alpha = ctx.primitive
    elif not ctx.is_primitive(alpha):
        raise NotPrimitive(f"alpha = {alpha} is not primitive in GF({q * q})")
    if beta is None:
        beta = _beta_in_subfield(ctx, q)
    elif beta == 0 or ctx.element_order(beta) != q - 1:
        raise NotPrimitive(f"beta = {beta} does not have order {q - 1}")
    log_table: dict[ff.FieldElem, int] = {}
    x = 1
    for e in range(q - 1):
        log_table[x] = e
        x = ctx.mul(x, beta)
    zeros = [i for i in range(q + 1) if ctx.add(ctx.pow(alpha, i * q), ctx.pow(alpha, i)) == 0]
    if len(zeros) != 1:
        raise RuntimeError(f"internal invariant violated: trace zeros at {zeros} in [0, {q}]")
    offset = zeros[0]
    values = []
    for k in range(1, q + 1):
        i = offset + k
        y = ctx.add(ctx.pow(alpha, i * q), ctx.pow(alpha, i))
        if y == 0 or not ff.in_subfield(ctx, y, q):
            raise RuntimeError(f"internal invariant violated: alpha^(iq) + alpha^i = {y} at i = {i}")
        values.append(log_table[y])
    return SonarSeq(
        values=tuple(values),
        m=q - 1,
        modular=True,
        provenance={
            "construction": "shift",
            "q": q,
            "alpha": alpha,
            "beta": beta,
            "offset": offset,
            "modulus_poly": list(ctx.modulus_poly),
        },
    )


def _primitive_root(p: int, alpha: Optional[int]) -> int:
    if not is_prime(p):
        raise NotPrime(f"p must be prime, got {p}")
    ctx = ff.field_new(p, 1)
    if alpha is None:
        return ctx.primitive
    alpha %= p
    if alpha == 0 or not ctx.is_primitive(alpha):
        raise NotPrimitive(f"alpha = {alpha} is not a primitive root mod {p}")
    return alpha


def welch_exp(p: int, alpha: Optional[int] = None, s: int = 0) -> SonarSeq:
    """Extended p x p sequence f(i) = alpha^(i+s) mod p, i = 0..p-1.

    Serialized 1-based like every sequence here; provenance records that the
    construction itself starts at index 0.
    """
    alpha = _primitive_root(p, alpha)
    values = tuple(pow(alpha, i + s, p) for i in range(p))
    return SonarSeq(
        values=values,
        m=p,
        modular=True,
        provenance={"construction": "welch-exp", "p": p, "alpha": alpha, "s": s, "indexed_from": 0},
    )


def welch_exp_short(p: int, alpha: Optional[int] = None) -> SonarSeq:
    """p x (p-1) sequence f(i) = alpha^i mod p, i = 1..p-1 (the s = 0 tail)."""
    alpha = _primitive_root(p, alpha)
    values = tuple(pow(alpha, i, p) for i in range(1, p))
    return SonarSeq(
        values=values,
        m=p,
        modular=True,
        provenance={"construction": "welch-exp-short", "p": p, "alpha": alpha},
    )


def welch_log(p: int, alpha: Optional[int] = None) -> SonarSeq:
    """(p-1) x (p-1) sequence f(i) = log_alpha(i) mod p, i = 1..p-1."""
    alpha = _primitive_root(p, alpha)
    ctx = ff.field_new(p, 1)
    values = tuple(ctx.discrete_log(i, base=alpha) for i in range(1, p))
    return SonarSeq(
        values=values,
        m=p - 1,
        modular=True,
        provenance={"construction": "welch-log", "p": p, "alpha": alpha},
    )


def golomb(
    q: int,
    alpha: Optional[ff.FieldElem] = None,
    beta: Optional[ff.FieldElem] = None,
    ctx: Optional[ff.FieldCtx] = None,
) -> SonarSeq:
    """(q-1) x (q-2) sequence over GF(q): f(i) = j where alpha^i + beta^j = 1.

    1 - alpha^i is nonzero for i in [1, q-2], so j = log_beta(1 - alpha^i)
    always exists.  alpha = beta is the Lempel construction.
    """
    if q <= 2:
        raise QTooSmall(f"q must exceed 2, got {q}")
    p, s = prime_power_decompose(q)
    if ctx is None:
        ctx = ff.field_new(p, s)
    if alpha is None:
        alpha = ctx.primitive
    elif not ctx.is_primitive(alpha):
        raise NotPrimitive(f"alpha = {alpha} is not primitive in GF({q})")
    if beta is None:
        beta = ctx.primitive
    elif not ctx.is_primitive(beta):
        raise NotPrimitive(f"beta = {beta} is not primitive in GF({q})")
    values = []
    for i in range(1, q - 1):
        y = ctx.sub(1, ctx.pow(alpha, i))
        values.append(ctx.discrete_log(y, base=beta))
    return SonarSeq(
        values=tuple(values),
        m=q - 1,
        modular=True,
        provenance={
            "construction": "golomb",
            "q": q,
            "alpha": alpha,
            "beta": beta,
            "lempel": alpha == beta,
            "modulus_poly": list(ctx.modulus_poly),
        },
    )
