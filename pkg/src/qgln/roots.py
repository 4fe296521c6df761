"""Type-A root and weight bookkeeping for gl(n+1).

A positive root eps_i - eps_j is the pair ``(i, j)`` with 1 <= i < j <= n+1;
lexicographic order on pairs is the PBW root order.  Weights are stored as
rational coordinate vectors over the basis beta_1, ..., beta_n where
beta_i = alpha_1 + ... + alpha_i, whose Gram matrix is I + J (2 on the
diagonal, 1 elsewhere).  The nilradical of the Levi gl(n) + gl(1) consists
of the roots (1, j), i.e. exactly the beta_i.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

Root = tuple  # (i, j) with i < j


def positive_roots(n: int) -> list:
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 2)]


def is_root(mu: Root, n: int) -> bool:
    return (
        isinstance(mu, tuple)
        and len(mu) == 2
        and 1 <= mu[0] < mu[1] <= n + 1
    )


def height(mu: Root) -> int:
    return mu[1] - mu[0]


def support(mu: Root) -> range:
    """Indices of the simple roots occurring in mu."""
    return range(mu[0], mu[1])


def simple(i: int) -> Root:
    return (i, i + 1)


def root_weight(mu: Root, n: int) -> tuple:
    """beta-coordinates of mu: root (i,j) = beta_{j-1} - beta_{i-1}."""
    w = [0] * n
    i, j = mu
    w[j - 2] += 1
    if i >= 2:
        w[i - 2] -= 1
    return tuple(w)


def wzero(n: int) -> tuple:
    return (0,) * n


def wadd(u: tuple, v: tuple) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def wneg(u: tuple) -> tuple:
    return tuple(-a for a in u)


def wscale(u: tuple, c) -> tuple:
    return tuple(_norm(Fraction(c) * a) for a in u)


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def normalize_weight(u: Iterable) -> tuple:
    return tuple(_norm(Fraction(a)) for a in u)


def inner(u: tuple, v: tuple):
    """Inner product for the Gram matrix I + J: u.v + sum(u) sum(v)."""
    return sum(a * b for a, b in zip(u, v)) + sum(u) * sum(v)


def eps1_pairing(w: tuple):
    """(eps_1, w) for w in the root span: every beta_i pairs to 1."""
    return sum(w)
