"""The crossed complex ``C2 -> C1 -> C0`` of the 2-skeleton.

``C1`` is the free crossed module on the relators.  Two elements of it are
equal iff their boundaries in ``F(X0)`` agree and their images in the free
``ZG``-module on the relators agree; the second coordinate of an
occurrence ``y_r^e`` in a word of ``Ker d0`` is ``e . [d0(prefix)]``.

``C2`` is the free ``ZG``-module on ``Y2``.  A word of ``NF_2`` maps to it
by summing ``e . [d1 d2(prefix)]`` over its ``Y2`` letters; degenerate
letters contribute nothing.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, Mapping, Optional, Tuple

from .coset_oracle import CosetTable, GroupRingElement, ring_act, ring_add, ring_negate
from .document import conjugated_terms, render_conjugated, render_word
from .report import Check, Report
from .skeleton import Skeleton, ValidationError
from .words import GeneratorSymbol, Word, invert, multiply, product


class ShapeError(ValidationError):
    """A level-1 word outside the normal closure of the relator letters."""


class ConsistencyError(RuntimeError):
    """An internal invariant failed; never expected on validated data."""


Coords = Tuple[Tuple[str, GroupRingElement], ...]


def _coords(d: Mapping[str, GroupRingElement]) -> Coords:
    return tuple(sorted((k, v) for k, v in d.items() if not v.is_zero()))


def _accumulate(d: Dict[str, Dict[int, int]], name: str, g: int, e: int) -> None:
    row = d.setdefault(name, {})
    row[g] = row.get(g, 0) + e


def _freeze(d: Dict[str, Dict[int, int]]) -> Coords:
    return _coords({k: GroupRingElement.from_dict(v, k) for k, v in d.items()})


@dataclass(frozen=True)
class CrossedModuleElement:
    """An element of ``C1`` with its boundary and relation-module image cached.

    ``abelianization`` is ``None`` when no coset table is available; such
    elements can only be compared by boundary (``partial``).
    """

    representative: Word
    boundary: Word
    abelianization: Optional[Coords]

    @property
    def partial(self) -> bool:
        return self.abelianization is None

    def ab(self) -> Dict[str, GroupRingElement]:
        return dict(self.abelianization or ())


def c1_element(sk: Skeleton, table: Optional[CosetTable], w: Word) -> CrossedModuleElement:
    if w.level != 1 or any(s.birth_level > 1 for s, _ in w):
        raise ShapeError("C1 representatives are level-1 words over s0(X0) and Y1")
    if sk.d(0, w):
        raise ShapeError("word is not a product of conjugated relators (d0 w != 1)")
    ab = None
    if table is not None:
        acc: Dict[str, Dict[int, int]] = {}
        coset = 1
        for s, e in w:
            if s.birth_level == 0:
                coset = table.image(coset, s.basis_id, e)
            else:
                _accumulate(acc, s.basis_id, coset, e)
        ab = _freeze(acc)
    return CrossedModuleElement(w, sk.d(1, w), ab)


def c1_equal(x: CrossedModuleElement, y: CrossedModuleElement) -> bool:
    if x.partial or y.partial:
        raise ValidationError("C1 equality needs a complete coset table (partial comparison)")
    return x.boundary == y.boundary and x.abelianization == y.abelianization


def c1_identity(sk: Skeleton, table: Optional[CosetTable]) -> CrossedModuleElement:
    return c1_element(sk, table, Word.identity(1))


def c1_multiply(sk, table, x: CrossedModuleElement, y: CrossedModuleElement) -> CrossedModuleElement:
    return c1_element(sk, table, multiply(x.representative, y.representative))


def c1_inverse(sk, table, x: CrossedModuleElement) -> CrossedModuleElement:
    return c1_element(sk, table, invert(x.representative))


def c1_act(sk, table, g: Word, x: CrossedModuleElement) -> CrossedModuleElement:
    """``^g x = s0(g) x s0(g)^-1`` for ``g`` in ``F(X0)``."""
    s0g = sk.s(0, g)
    return c1_element(sk, table, product((s0g, x.representative, invert(s0g)), 1))


def boundary_d1(x: CrossedModuleElement) -> Word:
    return x.boundary


# -- C2 ------------------------------------------------------------------

@dataclass(frozen=True)
class C2Element:
    """Normal form in the free ``ZG``-module on ``Y2``; empty coords is zero."""

    coords: Coords = ()

    def is_zero(self) -> bool:
        return not self.coords

    def as_dict(self) -> Dict[str, GroupRingElement]:
        return dict(self.coords)

    def __add__(self, other: "C2Element") -> "C2Element":
        d = self.as_dict()
        for k, v in other.coords:
            d[k] = ring_add(d[k], v) if k in d else v
        return C2Element(_coords(d))

    def __neg__(self) -> "C2Element":
        return C2Element(tuple((k, ring_negate(v)) for k, v in self.coords))

    def act(self, table: CosetTable, g: int) -> "C2Element":
        return C2Element(_coords({k: ring_act(table, g, v) for k, v in self.coords}))

    def render(self) -> str:
        if not self.coords:
            return "0"
        return " + ".join(f"({v.render()}).{k}" for k, v in self.coords)


def basis_element(name: str, g: int = 1) -> C2Element:
    return C2Element(((name, GroupRingElement.unit(g, name)),))


def c2_normal_form(sk: Skeleton, table: CosetTable, w: Word) -> C2Element:
    if w.level != 2 or not sk.moore_member(2, w):
        raise ValidationError("C2 normal form needs a word of NF_2")
    acc: Dict[str, Dict[int, int]] = {}
    # class of d1 d2(prefix), advanced letter by letter
    coset = 1
    for s, e in w:
        if s.birth_level == 2 and not s.degenerate:
            _accumulate(acc, s.basis_id, coset, e)
        coset = table.trace(sk.d(1, sk.d(2, Word.from_symbol(s, e))), start=coset)
    return C2Element(_freeze(acc))


def _lift(table: CosetTable, g: int) -> Word:
    letters = [(GeneratorSymbol.basis(x, 0), e) for x, e in table.representative(g)]
    return Word(tuple(letters), 0) if letters else Word.identity(0)


def c2_representative(sk: Skeleton, table: CosetTable, elem: C2Element) -> Word:
    """A word of ``NF_2`` with the given normal form: conjugates ``s1s0(lift g) y s1s0(lift g)^-1``."""
    out = Word.identity(2)
    for name, coeffs in elem.coords:
        y = Word.from_symbol(GeneratorSymbol.basis(name, 2))
        for g, c in coeffs.terms:
            u = sk.s(1, sk.s(0, _lift(table, g)))
            out = multiply(out, product((u, y ** c, invert(u)), 2))
    return out


def boundary_d2(sk: Skeleton, table: Optional[CosetTable], elem) -> CrossedModuleElement:
    """``d2`` of a word of ``NF_2`` (or of a normal form, via a representative)."""
    if isinstance(elem, C2Element):
        if table is None:
            raise ValidationError("module elements need a coset table")
        elem = c2_representative(sk, table, elem)
    if not sk.moore_member(2, elem):
        raise ValidationError("boundary_d2 needs a word of NF_2")
    image = sk.d(2, elem)
    try:
        return c1_element(sk, table, image)
    except ShapeError as exc:
        raise ConsistencyError(f"d2 image left the conjugated-relator shape: {exc}") from exc


# -- axiom checkers ------------------------------------------------------

def cm1_check(boundary: Callable, act: Callable, samples: Iterable[Tuple[object, object]],
              eq_base: Callable = lambda a, b: a == b,
              mul: Callable = None, inv: Callable = None) -> Check:
    """``d(^g c) = g d(c) g^-1`` for every sample ``(g, c)``."""
    mul = mul or (lambda a, b: a * b)
    inv = inv or (lambda a: a.inverse())
    cases, witness = 0, ""
    for g, c in samples:
        cases += 1
        if not eq_base(boundary(act(g, c)), mul(mul(g, boundary(c)), inv(g))):
            witness = f"g={g!r}, c={c!r}"
            break
    return Check("CM1 equivariance", not witness, cases, witness)


def cm2_check(boundary: Callable, act: Callable, samples: Iterable[Tuple[object, object]],
              mul: Callable, inv: Callable, eq_top: Callable) -> Check:
    """Peiffer identity ``^{d c} c' = c c' c^-1`` for every sample ``(c, c')``."""
    cases, witness = 0, ""
    for c, c2 in samples:
        cases += 1
        if not eq_top(act(boundary(c), c2), mul(mul(c, c2), inv(c))):
            witness = f"c={c!r}, c'={c2!r}"
            break
    return Check("CM2 Peiffer identity", not witness, cases, witness)


def c1_axiom_checks(sk: Skeleton, table: CosetTable, pairs: int, seed: int) -> Report:
    """CM1/CM2 for ``(C1, F(X0), d1)`` on seeded random samples."""
    rng = random.Random(seed)
    elem = lambda w: c1_element(sk, table, w)
    cm1 = [(sk.random_word(0, rng, max_len=8, mean_len=4),
            elem(sk.random_conjugated_relators(rng))) for _ in range(pairs)]
    cm2 = [(elem(sk.random_conjugated_relators(rng)), elem(sk.random_conjugated_relators(rng)))
           for _ in range(pairs)]
    act = lambda g, c: c1_act(sk, table, g, c)
    report = Report()
    report.add(cm1_check(boundary_d1, act, cm1))
    report.add(cm2_check(boundary_d1, act, cm2,
                         mul=lambda a, b: c1_multiply(sk, table, a, b),
                         inv=lambda a: c1_inverse(sk, table, a), eq_top=c1_equal))
    return report


# -- report --------------------------------------------------------------

@dataclass
class CrossedComplexReport:
    generators: Tuple[str, ...]
    relators: Tuple[Tuple[str, Word], ...]
    identities: Tuple[Tuple[str, CrossedModuleElement], ...]
    group_order: Optional[int]
    checks: Report = field(default_factory=Report)
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.checks.passed

    def render(self) -> str:
        lines = [f"C0: F({', '.join(self.generators)})"]
        rels = ", ".join(f"y_{r}" for r, _ in self.relators)
        lines.append(f"C1: free crossed module on {{{rels}}} modulo P1 = [Ker d0, Ker d1]")
        lines += [f"  d1(y_{r}) = {render_word(w)}" for r, w in self.relators]
        if not self.identities:
            lines.append("C2: (none — no construction data)")
        else:
            ids = ", ".join(f"y_{i}" for i, _ in self.identities)
            lines.append(f"C2: free ZG-module on {{{ids}}}")
            for i, x in self.identities:
                lines.append(f"  d2(y_{i}) = {render_conjugated(x.representative)}")
                if x.abelianization is not None:
                    ab = "; ".join(f"{r}: {v.render()}" for r, v in x.abelianization) or "0"
                    lines.append(f"    relation-module image: {ab}")
        if self.group_order is None:
            lines.append("G: order unavailable (coset enumeration overflow; comparisons partial)")
        else:
            lines.append(f"G: order {self.group_order}")
        if self.note:
            lines.append(self.note)
        lines.append(self.checks.render())
        return "\n".join(lines)


def crossed_complex(sk: Skeleton, table: Optional[CosetTable], *, samples: int = 50,
                    seed: int = 0) -> CrossedComplexReport:
    data = sk.data
    report = Report()
    ids = []
    if sk.max_level >= 2:
        for name, _ in data.identities:
            y = Word.from_symbol(GeneratorSymbol.basis(name, 2))
            ids.append((name, boundary_d2(sk, table, y)))
    elif data.identities:
        for name, w in data.identities:
            ids.append((name, c1_element(sk, table, w)))
    bad = [name for name, x in ids if x.boundary]
    report.add(Check("d1 d2 = 1 on Y2", not bad, len(ids), ", ".join(bad)))
    bad = [r for r, _ in data.presentation.relators
           if sk.d(0, Word.from_symbol(GeneratorSymbol.basis(r, 1)))]
    report.add(Check("Y1 in Ker d0", not bad, len(data.presentation.relators), ", ".join(bad)))
    note = ""
    if table is not None and data.presentation.relators:
        report.extend(c1_axiom_checks(sk, table, samples, seed))
        if ids and sk.max_level >= 2:
            report.add(_equivariance_check(sk, table))
    elif table is None:
        note = "note: coset table unavailable; C1 equality checks skipped (partial)"
    return CrossedComplexReport(data.presentation.generators, data.presentation.relators,
                                tuple(ids), None if table is None else table.order, report, note)


def _equivariance_check(sk: Skeleton, table: CosetTable) -> Check:
    """``d2(g . e_y)`` equals ``^{lift g} d2(e_y)`` in ``C1`` for all ``g``, ``y``."""
    cases, witness = 0, ""
    for name, _ in sk.data.identities:
        base = boundary_d2(sk, table, basis_element(name))
        for g in range(1, table.order + 1):
            cases += 1
            lhs = boundary_d2(sk, table, basis_element(name, g))
            rhs = c1_act(sk, table, _lift(table, g), base)
            if not c1_equal(lhs, rhs):
                witness = f"y_{name}, g=[{g}]"
                break
    return Check("d2 is G-equivariant on Y2", not witness, cases, witness)


def export_word_system(sk: Skeleton) -> str:
    """Peiffer-Whitehead word system ``<W1 | W2 | W3>`` of the construction data."""
    data = sk.data
    lines = ["W1:", *data.presentation.generators, "W2:"]
    lines += [f"{r} = {render_word(w)}" for r, w in data.presentation.relators]
    if data.identities:
        lines.append("W3:")
        checks = []
        for name, _ in data.identities:
            y = Word.from_symbol(GeneratorSymbol.basis(name, 2))
            image = sk.d(2, y)
            if conjugated_terms(image) is None:
                raise ConsistencyError(f"d3 image of {name} is not a product of conjugated relators")
            bdry = sk.d(1, image)
            if bdry:
                raise ConsistencyError(f"boundary of {name} is {render_word(bdry)}, not trivial")
            lines.append(f"{name} = {render_conjugated(image)}")
            checks.append(f"# boundary {name}: 1")
        lines += checks
    return "\n".join(lines) + "\n"
