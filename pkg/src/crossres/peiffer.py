"""Peiffer pairings in the Moore complex and the P1/P2/Q2 generator families.

All functions take a :class:`~crossres.skeleton.Skeleton` and words at the
stated levels, check their Moore-type preconditions, and return reduced
words.
"""
from __future__ import annotations

from typing import Tuple

from .skeleton import Skeleton, ValidationError
from .words import Word, commutator, invert, multiply, product


def _require_moore(sk: Skeleton, n: int, w: Word, what: str) -> None:
    if w.level != n or not sk.moore_member(n, w):
        raise ValidationError(f"{what} must lie in NF_{n}")


def pairing_adjacent(sk: Skeleton, n: int, x: Word, y: Word) -> Word:
    """``[s_n x, s_{n-1} y] [s_n y, s_n x]`` in ``NF_{n+1}`` for ``x, y`` in ``NF_n``.

    Its last face is ``[x, s_{n-1} d_n y] [y, x]``.  With the degeneracies
    in the other order the last face would instead be
    ``[s_{n-1} d_n x, y] [y, x]`` (see :func:`pairing_adjacent_swapped`).
    """
    _require_moore(sk, n, x, "x")
    _require_moore(sk, n, y, "y")
    s = sk.s
    return multiply(commutator(s(n, x), s(n - 1, y)), commutator(s(n, y), s(n, x)))


def pairing_adjacent_swapped(sk: Skeleton, n: int, x: Word, y: Word) -> Word:
    """``[s_{n-1} x, s_n y] [s_n y, s_n x]``: the same pairing with ``s_{n-1}`` on ``x``."""
    _require_moore(sk, n, x, "x")
    _require_moore(sk, n, y, "y")
    s = sk.s
    return multiply(commutator(s(n - 1, x), s(n, y)), commutator(s(n, y), s(n, x)))


def adjacent_boundary(sk: Skeleton, n: int, x: Word, y: Word) -> Word:
    """Closed form ``[x, s_{n-1} d_n y] [y, x]`` of ``d_{n+1}`` of :func:`pairing_adjacent`."""
    return multiply(commutator(x, sk.s(n - 1, sk.d(n, y))), commutator(y, x))


def _tower(sk: Skeleton, n: int, m: int, x: Word) -> Word:
    # s_n s_{n-1} ... s_m x, lifting x from level m to level n+1
    return sk.s_chain(tuple(range(n, m - 1, -1)), x)


def pairing_tower(sk: Skeleton, n: int, m: int, x: Word, y: Word) -> Word:
    """``prod_{k=0}^{n-m+1} [s_n...s_m x, s_{m-1+k} y]^{(-1)^k}`` for ``x`` in ``NF_m``, ``y`` in ``NF_n``.

    The last factor (``k = n-m+1``) is ``[s_n...s_m x, s_n y]^{(-1)^(n-m+1)}``.
    The result lies in ``NF_{n+1}``.
    """
    if m < 1 or n < m:
        raise ValidationError("tower pairing needs 1 <= m <= n")
    _require_moore(sk, m, x, "x")
    _require_moore(sk, n, y, "y")
    top = _tower(sk, n, m, x)
    factors = []
    for k in range(n - m + 2):
        c = commutator(top, sk.s(m - 1 + k, y))
        factors.append(c if k % 2 == 0 else invert(c))
    return product(factors, n + 1)


def tower_boundary(sk: Skeleton, n: int, m: int, x: Word, y: Word) -> Word:
    """Closed form of ``d_{n+1}`` of :func:`pairing_tower`.

    ``prod_{k=0}^{n-m} [s_{n-1}...s_m x, s_{m-1+k} d_n y]^{(-1)^k} [s_{n-1}...s_m x, y]^{(-1)^(n-m+1)}``
    """
    low = sk.s_chain(tuple(range(n - 1, m - 1, -1)), x)
    dy = sk.d(n, y)
    factors = []
    for k in range(n - m + 1):
        c = commutator(low, sk.s(m - 1 + k, dy))
        factors.append(c if k % 2 == 0 else invert(c))
    last = commutator(low, y)
    factors.append(last if (n - m + 1) % 2 == 0 else invert(last))
    return product(factors, n)


def q2_generator(sk: Skeleton, x: Word, y: Word) -> Word:
    """``[s1 x^-1 s0 x, s1 y]``, a generator of ``NF_2 \\cap D_2``."""
    _require_moore(sk, 1, x, "x")
    _require_moore(sk, 1, y, "y")
    s = sk.s
    return commutator(multiply(invert(s(1, x)), s(0, x)), s(1, y))


def p1_generator(sk: Skeleton, u: Word, v: Word) -> Word:
    """``[u, v]`` for ``u`` in ``Ker d0`` and ``v`` in ``Ker d1`` at level 1."""
    if u.level != 1 or sk.d(0, u):
        raise ValidationError("u must lie in Ker d0 at level 1")
    if v.level != 1 or sk.d(1, v):
        raise ValidationError("v must lie in Ker d1 at level 1")
    return commutator(u, v)


def p2_families(sk: Skeleton, x: Word, y1: Word, y2: Word) -> Tuple[Word, ...]:
    """The six generator families of the second Peiffer subgroup ``P2``.

    ``x`` in ``NF_1``; ``y1, y2`` in ``NF_2``.  Family (3) is taken as
    ``[y1 s1d2(y1)^-1 s0d2(y1), s1 x]`` so that every entry lives at level 2.
    """
    _require_moore(sk, 1, x, "x")
    _require_moore(sk, 2, y1, "y1")
    _require_moore(sk, 2, y2, "y2")
    s, d, inv, mul = sk.s, sk.d, invert, multiply
    d2y1, d2y2 = d(2, y1), d(2, y2)
    # y1 s1d2(y1)^-1 s0d2(y1): shared by families (3), (5), (6)
    twist = product((y1, inv(s(1, d2y1)), s(0, d2y1)), 2)
    return (
        commutator(mul(inv(s(0, x)), s(1, s(0, d(1, x)))), y1),
        commutator(mul(inv(s(1, x)), s(0, x)), mul(s(1, d2y1), inv(y1))),
        commutator(twist, s(1, x)),
        commutator(mul(inv(y1), s(1, d2y1)), y2),
        commutator(twist, y2),
        commutator(twist, mul(s(1, d2y2), inv(y2))),
    )
