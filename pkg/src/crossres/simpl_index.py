"""Coface, codegeneracy and increasing-surjection combinatorics.

Surjections ``[m] -> [n]`` are plain tuples of their values
``(t(0), ..., t(m))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Tuple, Union

Surjection = Tuple[int, ...]


def is_surjection(t: Surjection) -> bool:
    if not t or t[0] != 0:
        return False
    return all(b - a in (0, 1) for a, b in zip(t, t[1:]))


def identity(n: int) -> Surjection:
    return tuple(range(n + 1))


def coface(n: int, i: int) -> Surjection:
    """Values of the injection ``delta_i^n : [n-1] -> [n]`` (skips ``i``)."""
    if not 0 <= i <= n or n == 0:
        raise ValueError(f"coface index {i} out of range for n={n}")
    return tuple(x if x < i else x + 1 for x in range(n))


def codegeneracy(n: int, i: int) -> Surjection:
    """Values of ``alpha_i^n : [n+1] -> [n]`` (repeats ``i``)."""
    if not 0 <= i <= n:
        raise ValueError(f"codegeneracy index {i} out of range for n={n}")
    return tuple(x if x <= i else x - 1 for x in range(n + 2))


def enumerate_surjections(m: int, n: int) -> list:
    """All increasing surjections ``[m] -> [n]``, lexicographically sorted.

    Such a map is fixed by which ``n`` of its ``m`` steps go up by one.
    """
    if m < n or n < 0:
        return []
    out = []
    for ups in combinations(range(m), n):
        vals, v = [0], 0
        for step in range(m):
            if step in ups:
                v += 1
            vals.append(v)
        out.append(tuple(vals))
    return sorted(out)


@dataclass(frozen=True)
class Surjective:
    u: Surjection


@dataclass(frozen=True)
class LastCoface:
    t_prime: Surjection


@dataclass(frozen=True)
class OtherCoface:
    j: int
    t_prime: Surjection


FaceClassification = Union[Surjective, LastCoface, OtherCoface]


def compose_delta(t: Surjection, i: int) -> FaceClassification:
    """Classify ``u = t . delta_i`` for ``t : [n] -> [k]``.

    When ``u`` is not onto it misses exactly one value ``j`` and factors as
    ``delta_j^k . t'``.
    """
    n, k = len(t) - 1, t[-1]
    u = tuple(t[x] for x in coface(n, i))
    image = set(u)
    if len(image) == k + 1:
        return Surjective(u)
    (j,) = set(range(k + 1)) - image
    t_prime = tuple(v if v < j else v - 1 for v in u)
    return LastCoface(t_prime) if j == k else OtherCoface(j, t_prime)


def compose_alpha(t: Surjection, i: int) -> Surjection:
    """``t . alpha_i^n : [n+1] -> [k]`` for ``t : [n] -> [k]``."""
    n = len(t) - 1
    return tuple(t[x] for x in codegeneracy(n, i))


def decompose_to_degeneracies(t: Surjection) -> Tuple[int, ...]:
    """Indices ``(i_1 > i_2 > ... > i_p)`` with ``s_{i_1} ... s_{i_p}`` realizing ``t``.

    Read as an operator word: ``s_{i_p}`` is applied first, ``s_{i_1}``
    last.  The indices are exactly the positions ``x`` where
    ``t(x) == t(x+1)``.
    """
    return tuple(x for x in reversed(range(len(t) - 1)) if t[x] == t[x + 1])


def realize(t: Surjection, apply_s, element):
    """Apply the degeneracy operator word of ``t`` to ``element``.

    ``apply_s(i, element)`` performs one ``s_i``.
    """
    for i in reversed(decompose_to_degeneracies(t)):
        element = apply_s(i, element)
    return element
