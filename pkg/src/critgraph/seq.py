"""Integer sequences from the second-order recurrence x_k = (m+2)x_{k-1} - x_{k-2}.

Two companion sequences are tracked for each parameter m >= 1:

    u_0(m) = 0, u_1(m) = 1        (the "first kind")
    v_0(m) = 2, v_1(m) = m + 2    (the "second kind")

The four derived sequences used by the C4 x Cn critical-group formulas are

    e_n = u_n(2),  f_n = u_n(4),  h_n = e_n + e_{n+1},  g_n = f_n + f_{n+1}.

Everything here is exact; no floating point, no closed-form surds.  The
module also predicts the exact 2-adic and 3-adic valuations of e_n and
f_n from the factorization of the index alone, which is what makes the
even-cycle Smith-normal-form case analysis effective.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class SeqKind(Enum):
    """Tags for the four derived sequences; the tag fixes the recurrence
    parameter m (E, H use m=2; F, G use m=4)."""

    E = "e"
    F = "f"
    H = "h"
    G = "g"

    @property
    def m(self) -> int:
        return 2 if self in (SeqKind.E, SeqKind.H) else 4


@dataclass(frozen=True)
class ValuationPrediction:
    """Predicted exponent of ``prime`` in e_n or f_n, computed from the
    prime factorization of the index n alone."""

    prime: int
    kind: SeqKind
    n: int
    predicted_exponent: int


def _check_m(m: int) -> None:
    if m < 1:
        raise ValueError(f"recurrence parameter m must be >= 1, got {m}")


def u_seq(m: int, p: int) -> int:
    """p-th term of the first-kind sequence: u_0=0, u_1=1,
    u_p = (m+2)u_{p-1} - u_{p-2}."""
    _check_m(m)
    if p < 0:
        raise ValueError(f"index must be >= 0, got {p}")
    a, b = 0, 1
    for _ in range(p):
        a, b = b, (m + 2) * b - a
    return a


def v_seq(m: int, p: int) -> int:
    """p-th term of the second-kind sequence: v_0=2, v_1=m+2, same
    recurrence as :func:`u_seq`."""
    _check_m(m)
    if p < 0:
        raise ValueError(f"index must be >= 0, got {p}")
    a, b = 2, m + 2
    for _ in range(p):
        a, b = b, (m + 2) * b - a
    return a


def u_prefix(m: int, count: int) -> list[int]:
    """[u_0(m), ..., u_{count-1}(m)] in one pass."""
    _check_m(m)
    if count < 0:
        raise ValueError("count must be >= 0")
    out: list[int] = []
    a, b = 0, 1
    for _ in range(count):
        out.append(a)
        a, b = b, (m + 2) * b - a
    return out


def v_prefix(m: int, count: int) -> list[int]:
    """[v_0(m), ..., v_{count-1}(m)] in one pass."""
    _check_m(m)
    if count < 0:
        raise ValueError("count must be >= 0")
    out: list[int] = []
    a, b = 2, m + 2
    for _ in range(count):
        out.append(a)
        a, b = b, (m + 2) * b - a
    return out


def derived_seq(kind: SeqKind, n: int) -> int:
    """e_n, f_n, h_n, or g_n."""
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    if kind is SeqKind.E:
        return u_seq(2, n)
    if kind is SeqKind.F:
        return u_seq(4, n)
    if kind is SeqKind.H:
        return u_seq(2, n) + u_seq(2, n + 1)
    if kind is SeqKind.G:
        return u_seq(4, n) + u_seq(4, n + 1)
    raise ValueError(f"unknown sequence kind: {kind!r}")


def v_partial_sum(m: int, p: int, q: int) -> int:
    """The multiplier W with u_{p*q}(m) = W * u_p(m).

    For even q this is the sum of v_{p(q+1-2i)}(m) over 0 < 2i <= q; for
    odd q the sum runs over 0 < 2i <= q+1 (its last term is v_0 = 2) and
    1 is subtracted.
    """
    _check_m(m)
    if p < 0:
        raise ValueError(f"index must be >= 0, got {p}")
    if q < 1:
        raise ValueError(f"factor q must be >= 1, got {q}")
    vs = v_prefix(m, p * (q - 1) + 1)
    if q % 2 == 0:
        return sum(vs[p * (q + 1 - 2 * i)] for i in range(1, q // 2 + 1))
    total = sum(vs[p * (q + 1 - 2 * i)] for i in range(1, (q + 1) // 2 + 1))
    return total - 1


def observed_valuation(x: int, prime: int) -> int:
    """Largest k with prime**k dividing |x|.  x = 0 is rejected (the
    valuation would be infinite)."""
    if x == 0:
        raise ValueError("valuation of 0 is undefined")
    if prime < 2:
        raise ValueError(f"prime must be >= 2, got {prime}")
    x = abs(x)
    k = 0
    while x % prime == 0:
        x //= prime
        k += 1
    return k


def predicted_valuation(kind: SeqKind, prime: int, n: int) -> ValuationPrediction:
    """Exact p-adic valuation of e_n (kind E) or f_n (kind F) for
    p in {2, 3}, read off the exponents t2, t3 of 2 and 3 in n.

        v2(e_n) = 0 if t2 = 0 else t2 + 1
        v2(f_n) = t2
        v3(e_n) = t3
        v3(f_n) = 0 if t2 = 0 else t3 + 1
    """
    if kind not in (SeqKind.E, SeqKind.F):
        raise ValueError("valuation predictions cover kinds E and F only")
    if prime not in (2, 3):
        raise ValueError(f"valuation predictions cover primes 2 and 3, got {prime}")
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    t2 = observed_valuation(n, 2)
    t3 = observed_valuation(n, 3)
    if kind is SeqKind.E:
        exponent = t3 if prime == 3 else (0 if t2 == 0 else t2 + 1)
    else:
        exponent = t2 if prime == 2 else (0 if t2 == 0 else t3 + 1)
    return ValuationPrediction(prime=prime, kind=kind, n=n, predicted_exponent=exponent)
