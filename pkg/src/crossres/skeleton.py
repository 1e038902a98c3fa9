"""Low skeleta of the step-by-step free simplicial resolution.

Level ``n`` of the skeleton is the free group on all symbols ``(lambda, t)``
with ``lambda`` born at level ``k <= n`` and ``t`` an increasing surjection
``[n] -> [k]``.  Faces and degeneracies are evaluated letterwise:

* ``s_i(lambda, t) = (lambda, t . alpha_i)``;
* ``d_i(lambda, t)`` classifies ``t . delta_i``: a surjection keeps the
  symbol, the last coface realizes ``t'`` on the killed element
  ``theta_lambda`` (the relator word for ``Y1``, the identity word for
  ``Y2``), any other coface gives ``1``.

Generators ``X0`` form the constant simplicial group, which the first case
already covers since every map into ``[0]`` is onto.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import simpl_index as si
from .report import Check, Report
from .words import GeneratorSymbol, StructureError, Word, apply_hom, invert, multiply, reduce

MAX_LEVEL = 3


class ValidationError(ValueError):
    """Construction data or inputs that violate a precondition."""


@dataclass(frozen=True)
class Presentation:
    generators: Tuple[str, ...]
    relators: Tuple[Tuple[str, Word], ...]

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise ValidationError("duplicate generator names")
        names = [n for n, _ in self.relators]
        if len(set(names)) != len(names):
            raise ValidationError("duplicate relator names")
        gens = set(self.generators)
        for name, w in self.relators:
            if w.level != 0:
                raise ValidationError(f"relator {name} is not a level-0 word")
            for s, _ in w:
                if s.birth_level != 0 or s.basis_id not in gens:
                    raise ValidationError(f"relator {name} uses unknown letter {s.basis_id}")

    def relator(self, name: str) -> Word:
        return dict(self.relators)[name]


@dataclass(frozen=True)
class ConstructionData:
    """Presentation plus named identities among relations (level-1 words)."""

    presentation: Presentation
    identities: Tuple[Tuple[str, Word], ...] = ()

    def __post_init__(self):
        names = [n for n, _ in self.identities]
        if len(set(names)) != len(names):
            raise ValidationError("duplicate identity names")
        rels = {n for n, _ in self.presentation.relators}
        gens = set(self.presentation.generators)
        for name, w in self.identities:
            if w.level != 1:
                raise ValidationError(f"identity {name} is not a level-1 word")
            for s, _ in w:
                ok = (s.birth_level == 0 and s.basis_id in gens) or (
                    s.birth_level == 1 and s.basis_id in rels)
                if not ok:
                    raise ValidationError(f"identity {name} uses unknown letter {s.basis_id}")


# parsed input documents are exactly construction data
InputDocument = ConstructionData


def gen(name: str) -> GeneratorSymbol:
    return GeneratorSymbol.basis(name, 0)


def rel(name: str) -> GeneratorSymbol:
    return GeneratorSymbol.basis(name, 1)


def ident(name: str) -> GeneratorSymbol:
    return GeneratorSymbol.basis(name, 2)


class Skeleton:
    """The 2-skeleton (levels ``0..max_level``) built from construction data.

    Immutable after construction apart from memo caches.
    """

    def __init__(self, data: ConstructionData, max_level: int = MAX_LEVEL,
                 *, _validate: bool = True):
        if not 0 <= max_level <= MAX_LEVEL:
            raise ValidationError(f"max_level must lie in 0..{MAX_LEVEL}")
        self.data = data
        self.max_level = max_level
        self._theta: Dict[Tuple[str, int], Word] = {}
        for name, w in data.presentation.relators:
            self._theta[(name, 1)] = w
        for name, w in data.identities:
            self._theta[(name, 2)] = w
        self._last_face_cache: Dict[Tuple[str, int, si.Surjection], Word] = {}
        self.tables: List[Tuple[GeneratorSymbol, ...]] = [
            self._table(n) for n in range(max_level + 1)]
        if _validate and data.identities:
            checker = self if max_level >= 1 else Skeleton(data, 1, _validate=False)
            for name, w in data.identities:
                bad = checker.identity_failures(w)
                if bad:
                    from .document import render_word  # document imports this module
                    raise ValidationError(
                        f"identity {name} has nontrivial face(s) "
                        + ", ".join(f"d{i} = {render_word(r)}" for i, r in bad))

    # -- generator tables -------------------------------------------------

    def births(self) -> List[Tuple[str, int]]:
        out = [(x, 0) for x in self.data.presentation.generators]
        out += [(r, 1) for r, _ in self.data.presentation.relators]
        out += [(i, 2) for i, _ in self.data.identities]
        return out

    def _table(self, n: int) -> Tuple[GeneratorSymbol, ...]:
        return tuple(GeneratorSymbol(b, k, t)
                     for b, k in self.births() if k <= n
                     for t in si.enumerate_surjections(n, k))

    def table(self, n: int) -> Tuple[GeneratorSymbol, ...]:
        return self.tables[n]

    def basis_symbols(self, k: int) -> Tuple[GeneratorSymbol, ...]:
        """The non-degenerate symbols born at level ``k`` (``X0``, ``Y1``, ``Y2``)."""
        return tuple(GeneratorSymbol.basis(b, k) for b, kk in self.births() if kk == k)

    def theta(self, sym: GeneratorSymbol) -> Word:
        return self._theta[(sym.basis_id, sym.birth_level)]

    def _check_level(self, w: Word, n: int) -> None:
        if w.level != n:
            raise StructureError(f"word at level {w.level}, expected {n}")
        if not 0 <= n <= self.max_level:
            raise StructureError(f"level {n} outside 0..{self.max_level}")

    # -- simplicial operators ---------------------------------------------

    def _last_face(self, sym: GeneratorSymbol, t_prime: si.Surjection) -> Word:
        key = (sym.basis_id, sym.birth_level, t_prime)
        hit = self._last_face_cache.get(key)
        if hit is None:
            hit = si.realize(t_prime, self._degen_unchecked, self.theta(sym))
            self._last_face_cache[key] = hit
        return hit

    def face_symbol(self, sym: GeneratorSymbol, i: int) -> Word:
        n = sym.level
        cls = si.compose_delta(sym.history, i)
        if isinstance(cls, si.Surjective):
            return Word.from_symbol(GeneratorSymbol(sym.basis_id, sym.birth_level, cls.u))
        if isinstance(cls, si.LastCoface):
            return self._last_face(sym, cls.t_prime)
        return Word.identity(n - 1)

    def face(self, n: int, i: int, w: Word) -> Word:
        self._check_level(w, n)
        if not 0 <= i <= n or n == 0:
            raise StructureError(f"face d{i} undefined at level {n}")
        return apply_hom(lambda s: self.face_symbol(s, i), w, n - 1)

    def _degen_unchecked(self, i: int, w: Word) -> Word:
        return Word(tuple((GeneratorSymbol(s.basis_id, s.birth_level,
                                           si.compose_alpha(s.history, i)), e)
                          for s, e in w), w.level + 1)

    def degeneracy(self, n: int, i: int, w: Word) -> Word:
        self._check_level(w, n)
        if n + 1 > self.max_level:
            raise StructureError(f"degeneracy from level {n} exceeds max_level {self.max_level}")
        if not 0 <= i <= n:
            raise StructureError(f"degeneracy s{i} undefined at level {n}")
        # injective on letters, so the image of a reduced word is reduced
        return self._degen_unchecked(i, w)

    def d(self, i: int, w: Word) -> Word:
        return self.face(w.level, i, w)

    def s(self, i: int, w: Word) -> Word:
        return self.degeneracy(w.level, i, w)

    def s_chain(self, indices: Sequence[int], w: Word) -> Word:
        """Apply ``s_{indices[0]} ... s_{indices[-1]}`` (rightmost first)."""
        for i in reversed(indices):
            w = self.s(i, w)
        return w

    # -- Moore complex ----------------------------------------------------

    def moore_member(self, n: int, w: Word) -> bool:
        self._check_level(w, n)
        return n >= 1 and all(not self.face(n, i, w) for i in range(n))

    def moore_boundary(self, n: int, w: Word) -> Word:
        return self.face(n, n, w)

    def moore_project(self, w: Word) -> Word:
        """Project onto the Moore complex via ``x -> x . s_i d_i(x)^-1``, ``i = 0..n-1``."""
        n = w.level
        for i in range(n):
            w = multiply(w, invert(self._degen_unchecked(i, self.face(n, i, w))))
        return w

    def identity_failures(self, w: Word) -> List[Tuple[int, Word]]:
        return [(i, f) for i in (0, 1) if (f := self.face(1, i, w))]

    def verify_identity(self, w: Word) -> bool:
        """True iff ``d0 w = d1 w = 1``: ``w`` is an identity among relations."""
        if w.level != 1:
            raise StructureError("identities live at level 1")
        return not self.identity_failures(w)

    # -- sampling ---------------------------------------------------------

    def random_word(self, n: int, rng: random.Random, max_len: int = 30,
                    mean_len: float = 8.0) -> Word:
        """Uniform letters from the level-``n`` table, geometric length capped at ``max_len``."""
        table = self.tables[n]
        if not table:
            return Word.identity(n)
        length = 0
        p = 1.0 / (mean_len + 1.0)
        while length < max_len and rng.random() > p:
            length += 1
        letters = [(rng.choice(table), rng.choice((1, -1))) for _ in range(length)]
        return reduce(letters, n)

    def random_moore_word(self, n: int, rng: random.Random, max_len: int = 12,
                          attempts: int = 64) -> Word:
        """Moore projection of a random word, resampled until nontrivial when possible."""
        w = Word.identity(n)
        for _ in range(attempts):
            w = self.moore_project(self.random_word(n, rng, max_len=max_len, mean_len=max_len / 2))
            if w:
                break
        return w

    def random_conjugated_relators(self, rng: random.Random, terms: int = 3,
                                   conj_len: int = 4) -> Word:
        """A random product of terms ``s0(u) y_r^{+-1} s0(u)^-1`` at level 1."""
        out = Word.identity(1)
        rels = self.basis_symbols(1)
        if not rels:
            return out
        for _ in range(rng.randint(1, terms)):
            u = self.random_word(0, rng, max_len=conj_len, mean_len=conj_len / 2)
            s0u = self._degen_unchecked(0, u)
            y = Word.from_symbol(rng.choice(rels), rng.choice((1, -1)))
            out = multiply(out, multiply(multiply(s0u, y), invert(s0u)))
        return out

    # -- whole-skeleton checks ---------------------------------------------

    def cw_basis_check(self, tables: Optional[Sequence[Sequence[GeneratorSymbol]]] = None) -> Report:
        tables = self.tables if tables is None else [tuple(t) for t in tables]
        report = Report()
        # (a) free generation: each table lists distinct symbols of its level
        bad = [f"level {n}: {s!r}" for n, t in enumerate(tables)
               for s in t if s.level != n or t.count(s) > 1]
        report.add(Check("cw-basis (a) free basis per level", not bad,
                         sum(map(len, tables)), "; ".join(bad[:3])))
        # (b) closed under degeneracies
        bad = []
        cases = 0
        for n in range(len(tables) - 1):
            upper = set(tables[n + 1])
            for s in tables[n]:
                for i in range(n + 1):
                    cases += 1
                    (img, _), = self._degen_unchecked(i, Word.from_symbol(s)).letters
                    if img not in upper:
                        bad.append(f"s{i}({s!r}) = {img!r} missing at level {n + 1}")
        report.add(Check("cw-basis (b) closed under degeneracies", not bad, cases,
                         "; ".join(bad[:3])))
        # (c) non-degenerate elements have all faces but the last trivial
        bad = []
        cases = 0
        for n in range(1, len(tables)):
            for s in tables[n]:
                if s.degenerate:
                    continue
                cases += 1
                w = Word.from_symbol(s)
                if not self.moore_member(n, w):
                    bad.append(f"{s!r} not in NF_{n}")
        report.add(Check("cw-basis (c) non-degenerate faces trivial (Y_n in NF_n)", not bad,
                         cases, "; ".join(bad[:3])))
        return report

    def simplicial_identity_suite(self, trials: int = 100, seed: int = 0,
                                  max_len: int = 30) -> Report:
        """Check the simplicial identities on every generator and on random words."""
        rng = random.Random(seed)
        samples: Dict[int, List[Word]] = {}
        for n in range(self.max_level + 1):
            words = [Word.from_symbol(s) for s in self.tables[n]]
            words += [self.random_word(n, rng, max_len=max_len) for _ in range(trials)]
            samples[n] = words
        return self._identity_checks(samples)

    def _identity_checks(self, samples: Dict[int, List[Word]]) -> Report:
        d, s = self.face, self._degen_unchecked
        top = self.max_level
        fams = {name: [0, ""] for name in (
            "d_i d_j = d_(j-1) d_i (i<j)",
            "d_i s_j = s_(j-1) d_i (i<j)",
            "d_j s_j = id",
            "d_(j+1) s_j = id",
            "d_i s_j = s_j d_(i-1) (i>j+1)",
            "s_i s_j = s_(j+1) s_i (i<=j)",
            "faces and degeneracies are homomorphisms",
        )}
        counts = {k: 0 for k in fams}

        def record(name, ok, witness):
            counts[name] += 1
            if not ok and not fams[name][1]:
                fams[name][1] = witness
            fams[name][0] += 0 if ok else 1

        for n, words in samples.items():
            for w in words:
                for j in range(n + 1):
                    for i in range(j):
                        if n >= 2:
                            record("d_i d_j = d_(j-1) d_i (i<j)",
                                   d(n - 1, i, d(n, j, w)) == d(n - 1, j - 1, d(n, i, w)),
                                   f"level {n}, i={i}, j={j}, w={w!r}")
                if n + 1 <= top:
                    for j in range(n + 1):
                        sw = s(j, w)
                        for i in range(n + 2):
                            if i < j:
                                ok = d(n + 1, i, sw) == s(j - 1, d(n, i, w))
                                record("d_i s_j = s_(j-1) d_i (i<j)", ok, f"level {n}, i={i}, j={j}")
                            elif i == j:
                                record("d_j s_j = id", d(n + 1, i, sw) == w, f"level {n}, j={j}")
                            elif i == j + 1:
                                record("d_(j+1) s_j = id", d(n + 1, i, sw) == w, f"level {n}, j={j}")
                            else:
                                ok = d(n + 1, i, sw) == s(j, d(n, i - 1, w))
                                record("d_i s_j = s_j d_(i-1) (i>j+1)", ok, f"level {n}, i={i}, j={j}")
                if n + 2 <= top:
                    for j in range(n + 1):
                        for i in range(j + 1):
                            record("s_i s_j = s_(j+1) s_i (i<=j)",
                                   s(i, s(j, w)) == s(j + 1, s(i, w)),
                                   f"level {n}, i={i}, j={j}")
            # homomorphism law on consecutive sample pairs
            for u, v in zip(words, words[1:]):
                uv = multiply(u, v)
                for i in range(n + 1):
                    if n >= 1:
                        record("faces and degeneracies are homomorphisms",
                               d(n, i, uv) == multiply(d(n, i, u), d(n, i, v)),
                               f"d{i} at level {n}")
                    if n + 1 <= top:
                        record("faces and degeneracies are homomorphisms",
                               s(i, uv) == multiply(s(i, u), s(i, v)),
                               f"s{i} at level {n}")
        report = Report()
        for name, (fails, witness) in fams.items():
            report.add(Check(name, fails == 0, counts[name], witness))
        return report


def build_skeleton(data: ConstructionData, max_level: int = MAX_LEVEL) -> Skeleton:
    return Skeleton(data, max_level)


def face(sk: Skeleton, n: int, i: int, w: Word) -> Word:
    return sk.face(n, i, w)


def degeneracy(sk: Skeleton, n: int, i: int, w: Word) -> Word:
    return sk.degeneracy(n, i, w)


def moore_member(sk: Skeleton, n: int, w: Word) -> bool:
    return sk.moore_member(n, w)


def moore_boundary(sk: Skeleton, n: int, w: Word) -> Word:
    return sk.moore_boundary(n, w)


def verify_identity(sk: Skeleton, w: Word) -> bool:
    return sk.verify_identity(w)


def cw_basis_check(sk: Skeleton, tables=None) -> Report:
    return sk.cw_basis_check(tables)


def simplicial_identity_suite(sk: Skeleton, trials: int = 100, seed: int = 0) -> Report:
    return sk.simplicial_identity_suite(trials, seed)
