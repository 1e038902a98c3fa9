"""Word problem for ``G = F(X0)/N`` by coset enumeration, and the ring ``ZG``.

Enumeration is delegated to sympy's relator-based (HLT) Todd-Coxeter over
the trivial subgroup; the finished table is renumbered in breadth-first
discovery order so that coset ``1`` is the identity and reports are
deterministic.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from .skeleton import Presentation
from .words import StructureError, Word

DEFAULT_MAX_COSETS = 100_000


class CosetOverflow(RuntimeError):
    """Enumeration exceeded its coset bound: ``G`` is infinite or the bound too small."""

    def __init__(self, max_cosets: int):
        self.max_cosets = max_cosets
        super().__init__(f"coset enumeration exceeded {max_cosets} cosets "
                         "(group infinite or bound too small)")


@dataclass(frozen=True)
class CosetTable:
    """Complete regular action of ``G`` on itself.

    ``action[c - 1][col]`` is the image of coset ``c`` under the letter in
    column ``col``; columns run ``x, x^-1`` for each generator ``x`` in
    ``generator_order``.
    """

    generator_order: Tuple[str, ...]
    action: Tuple[Tuple[int, ...], ...]

    def __len__(self):
        return len(self.action)

    @property
    def order(self) -> int:
        return len(self.action)

    def column(self, gen: str, exponent: int) -> int:
        return 2 * self.generator_order.index(gen) + (0 if exponent > 0 else 1)

    def image(self, coset: int, gen: str, exponent: int) -> int:
        return self.action[coset - 1][self.column(gen, exponent)]

    def trace(self, w: Word, start: int = 1) -> int:
        c = start
        cols = {g: i for i, g in enumerate(self.generator_order)}
        for s, e in w:
            if s.birth_level != 0:
                raise StructureError(f"class_of needs X0 letters, got {s.basis_id}")
            c = self.action[c - 1][2 * cols[s.basis_id] + (0 if e > 0 else 1)]
        return c

    def class_of(self, w: Word) -> int:
        """Coset of ``w`` (degenerate X0 letters are contracted to level 0)."""
        return self.trace(w)

    def _reps(self) -> List[List[int]]:
        # shortest column sequences reaching each coset from coset 1
        reps: List[Optional[List[int]]] = [None] * len(self)
        reps[0] = []
        queue = deque([1])
        while queue:
            c = queue.popleft()
            for col, d in enumerate(self.action[c - 1]):
                if reps[d - 1] is None:
                    reps[d - 1] = reps[c - 1] + [col]
                    queue.append(d)
        return reps

    def representative(self, coset: int) -> List[Tuple[str, int]]:
        """A shortest ``(generator, exponent)`` sequence whose class is ``coset``."""
        return [(self.generator_order[col // 2], 1 if col % 2 == 0 else -1)
                for col in self._reps()[coset - 1]]

    def multiplication(self) -> Tuple[Tuple[int, ...], ...]:
        """``mul[g-1][h-1] = g h`` on coset indices."""
        cached = self.__dict__.get("_mul")
        if cached is None:
            reps = self._reps()
            mul = []
            for g in range(1, len(self) + 1):
                row = []
                for h in range(1, len(self) + 1):
                    c = g
                    for col in reps[h - 1]:
                        c = self.action[c - 1][col]
                    row.append(c)
                mul.append(tuple(row))
            cached = tuple(mul)
            object.__setattr__(self, "_mul", cached)
        return cached

    def multiply(self, g: int, h: int) -> int:
        return self.multiplication()[g - 1][h - 1]

    def inverse(self, g: int) -> int:
        return self.multiplication()[g - 1].index(1) + 1

    def dump(self) -> str:
        """Tab-separated dump: header of columns, then one row per coset."""
        cols = [x for g in self.generator_order for x in (g, g + "^-1")]
        lines = ["coset\t" + "\t".join(cols)]
        for c, row in enumerate(self.action, 1):
            lines.append(f"{c}\t" + "\t".join(map(str, row)))
        return "\n".join(lines)


def _bfs_canonical(table: List[List[int]]) -> Tuple[Tuple[int, ...], ...]:
    # table is 0-based with coset 0 the identity
    order, seen = [0], {0: 0}
    for c in order:
        for d in table[c]:
            if d not in seen:
                seen[d] = len(order)
                order.append(d)
    return tuple(tuple(seen[d] + 1 for d in table[c]) for c in order)


def enumerate_cosets(pres: Presentation, max_cosets: int = DEFAULT_MAX_COSETS) -> CosetTable:
    """Coset table of ``G`` acting on itself; raises :class:`CosetOverflow`."""
    if max_cosets < 1:
        raise ValueError("max_cosets must be positive")
    gens = pres.generators
    if not gens:
        return CosetTable((), ((),))
    # imported here: sympy is slow to load and most commands never enumerate
    from sympy.combinatorics.fp_groups import FpGroup, coset_enumeration_r
    from sympy.combinatorics.free_groups import free_group

    F, *letters = free_group(", ".join(gens))
    sym = dict(zip(gens, letters))
    relators = []
    for _, w in pres.relators:
        r = F.identity
        for s, e in w:
            r = r * sym[s.basis_id] ** e
        if r != F.identity:
            relators.append(r)
    try:
        C = coset_enumeration_r(FpGroup(F, relators), [], max_cosets=max_cosets)
    except ValueError as exc:
        if "cosets" in str(exc):
            raise CosetOverflow(max_cosets) from None
        raise
    C.compress()
    # sympy orders columns x, x^-1 per generator, matching ours
    raw = [list(row) for row in C.table]
    if any(v is None for row in raw for v in row):
        raise CosetOverflow(max_cosets)
    return CosetTable(tuple(gens), _bfs_canonical(raw))


def class_of(table: CosetTable, w: Word) -> int:
    return table.class_of(w)


@dataclass(frozen=True)
class GroupRingElement:
    """A finite integral combination of group elements (coset indices).

    ``basis`` names the module generator it multiplies, if any.
    """

    terms: Tuple[Tuple[int, int], ...] = ()
    basis: Optional[str] = None

    @classmethod
    def from_dict(cls, d: Mapping[int, int], basis: Optional[str] = None) -> "GroupRingElement":
        return cls(tuple(sorted((g, c) for g, c in d.items() if c)), basis)

    @classmethod
    def unit(cls, g: int = 1, basis: Optional[str] = None) -> "GroupRingElement":
        return cls(((g, 1),), basis)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        return ring_add(self, other)

    def __neg__(self) -> "GroupRingElement":
        return ring_negate(self)

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return ring_add(self, ring_negate(other))

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for g, c in self.terms:
            coef = {1: "", -1: "-"}.get(c, str(c))
            parts.append(f"{coef}[{g}]")
        return " + ".join(parts).replace("+ -", "- ")


def ring_add(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    if x.basis is not None and y.basis is not None and x.basis != y.basis:
        raise StructureError(f"cannot add coordinates of {x.basis} and {y.basis}")
    d = x.as_dict()
    for g, c in y.terms:
        d[g] = d.get(g, 0) + c
    return GroupRingElement.from_dict(d, x.basis if x.basis is not None else y.basis)


def ring_negate(x: GroupRingElement) -> GroupRingElement:
    return GroupRingElement(tuple((g, -c) for g, c in x.terms), x.basis)


def ring_act(table: CosetTable, g: int, x: GroupRingElement) -> GroupRingElement:
    """Left translation ``g . sum c_h h = sum c_h (g h)``."""
    d: Dict[int, int] = {}
    for h, c in x.terms:
        gh = table.multiply(g, h)
        d[gh] = d.get(gh, 0) + c
    return GroupRingElement.from_dict(d, x.basis)


def sum_elements(items: Iterable[GroupRingElement], basis: Optional[str] = None) -> GroupRingElement:
    out = GroupRingElement((), basis)
    for x in items:
        out = ring_add(out, x)
    return out
