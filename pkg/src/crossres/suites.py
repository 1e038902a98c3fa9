"""Seeded property suites for the Peiffer layer, shared by the CLI and tests."""
from __future__ import annotations

import random
from typing import Optional

from . import peiffer as P
from .crossed import c1_element, c1_equal, c2_normal_form
from .coset_oracle import CosetTable
from .report import Check, Report
from .skeleton import Skeleton
from .words import Word, invert, multiply


def random_kernel_d1(sk: Skeleton, rng: random.Random) -> Word:
    """``w s0(d1 w)^-1`` for a random level-1 word ``w``: an element of ``Ker d1``."""
    w = sk.random_word(1, rng, max_len=10, mean_len=4)
    return multiply(w, invert(sk.s(0, sk.d(1, w))))


class _Tally:
    def __init__(self, name: str):
        self.name, self.cases, self.witness = name, 0, ""

    def __call__(self, ok: bool, witness: str = "") -> None:
        self.cases += 1
        if not ok and not self.witness:
            self.witness = witness or f"case {self.cases}"

    def check(self) -> Check:
        return Check(self.name, not self.witness, self.cases, self.witness)


def peiffer_suite(sk: Skeleton, table: Optional[CosetTable], dim: int,
                  samples: int = 50, seed: int = 0) -> Report:
    rng = random.Random(seed)
    report = Report()
    if dim == 1:
        p1 = _Tally("P1 generators are identities among relations")
        cong = _Tally("w and w.[u,v] are equal in C1")
        adj = _Tally("d2 F(x,y) = [x, s0 d1 y][y, x] at n=1")
        moore = _Tally("adjacent pairing lies in NF_2")
        tower = _Tally("tower pairing (1,1) equals adjacent pairing")
        for _ in range(samples):
            u = sk.random_conjugated_relators(rng)
            v = random_kernel_d1(sk, rng)
            p = P.p1_generator(sk, u, v)
            p1(not sk.d(0, p) and not sk.d(1, p))
            if table is not None:
                w = sk.random_conjugated_relators(rng)
                cong(c1_equal(c1_element(sk, table, w), c1_element(sk, table, multiply(w, p))))
            x, y = sk.random_moore_word(1, rng), sk.random_moore_word(1, rng)
            F = P.pairing_adjacent(sk, 1, x, y)
            moore(sk.moore_member(2, F))
            adj(sk.d(2, F) == P.adjacent_boundary(sk, 1, x, y))
            tower(P.pairing_tower(sk, 1, 1, x, y) == F)
        checks = [p1, cong, moore, adj, tower] if table is not None else [p1, moore, adj, tower]
    elif dim == 2:
        adj = _Tally("d3 F(x,y) = [x, s1 d2 y][y, x] at n=2")
        tower_m = _Tally("tower pairing (2,1) lies in NF_3")
        tower = _Tally("tower pairing (2,1) boundary formula")
        q2m = _Tally("Q2 generators lie in NF_2")
        p2m = _Tally("P2 family elements lie in NF_2")
        checks = [adj, tower_m, tower, q2m, p2m]
        if table is not None:
            q2z = _Tally("Q2 generators vanish in C2")
            p2z = _Tally("P2 family elements vanish in C2")
            add = _Tally("C2 normal form is additive")
            comm = _Tally("C2 is abelian: nf(x y) = nf(y x)")
            checks += [q2z, p2z, add, comm]
        for _ in range(samples):
            x, y = sk.random_moore_word(2, rng), sk.random_moore_word(2, rng)
            F = P.pairing_adjacent(sk, 2, x, y)
            adj(sk.moore_member(3, F) and sk.d(3, F) == P.adjacent_boundary(sk, 2, x, y))
            x1 = sk.random_moore_word(1, rng)
            T = P.pairing_tower(sk, 2, 1, x1, y)
            tower_m(sk.moore_member(3, T))
            tower(sk.d(3, T) == P.tower_boundary(sk, 2, 1, x1, y))
            q = P.q2_generator(sk, x1, sk.random_moore_word(1, rng))
            q2m(sk.moore_member(2, q))
            fams = P.p2_families(sk, x1, x, y)
            p2m(all(sk.moore_member(2, f) for f in fams))
            if table is not None:
                q2z(c2_normal_form(sk, table, q).is_zero())
                bad = [k + 1 for k, f in enumerate(fams) if not c2_normal_form(sk, table, f).is_zero()]
                p2z(not bad, f"families {bad}")
                nx, ny = c2_normal_form(sk, table, x), c2_normal_form(sk, table, y)
                add(c2_normal_form(sk, table, multiply(x, y)) == nx + ny)
                comm(c2_normal_form(sk, table, multiply(x, y)) == c2_normal_form(sk, table, multiply(y, x)))
    else:
        raise ValueError("dim must be 1 or 2")
    for t in checks:
        report.add(t.check())
    return report
