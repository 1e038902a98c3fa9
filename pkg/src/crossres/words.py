"""Free groups over generator symbols carrying a degeneracy history.

Every simplicial level is a free group; its letters are
:class:`GeneratorSymbol` values and elements are freely reduced
:class:`Word` values.  Words are immutable and every operation returns a
fresh reduced word, so structural equality is group equality.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence, Tuple, Union


class StructureError(ValueError):
    """Raised on level mismatches and other malformed word data."""


@dataclass(frozen=True, order=True)
class GeneratorSymbol:
    """A CW-basis element ``(basis_id, birth_level)`` degenerated along ``history``.

    ``history`` is the increasing surjection ``[n] -> [birth_level]`` written
    as its value sequence; the identity surjection marks a non-degenerate
    symbol.
    """

    basis_id: str
    birth_level: int
    history: Tuple[int, ...]

    def __post_init__(self):
        h = self.history
        if not h or h[0] != 0 or h[-1] != self.birth_level:
            raise StructureError(f"bad history {h} for birth level {self.birth_level}")
        for a, b in zip(h, h[1:]):
            if b - a not in (0, 1):
                raise StructureError(f"history {h} is not an increasing surjection")

    @property
    def level(self) -> int:
        return len(self.history) - 1

    @property
    def degenerate(self) -> bool:
        return self.level != self.birth_level

    @classmethod
    def basis(cls, basis_id: str, birth_level: int) -> "GeneratorSymbol":
        """The non-degenerate symbol born at ``birth_level``."""
        return cls(basis_id, birth_level, tuple(range(birth_level + 1)))

    def __repr__(self):
        return f"<{self.basis_id}@{self.birth_level}:{''.join(map(str, self.history))}>"


Letter = Tuple[GeneratorSymbol, int]


def _free_reduce(letters: Iterable[Letter]) -> list:
    out: list = []
    for sym, e in letters:
        if out and out[-1][0] == sym and out[-1][1] == -e:
            out.pop()
        else:
            out.append((sym, e))
    return out


@dataclass(frozen=True)
class Word:
    """A freely reduced word at simplicial level ``level``.

    Build words through :func:`reduce` or the constructors below; the raw
    constructor trusts its input.
    """

    letters: Tuple[Letter, ...]
    level: int

    @classmethod
    def identity(cls, level: int) -> "Word":
        return cls((), level)

    @classmethod
    def from_symbol(cls, sym: GeneratorSymbol, exponent: int = 1) -> "Word":
        if exponent == 0:
            return cls((), sym.level)
        e = 1 if exponent > 0 else -1
        return cls(((sym, e),) * abs(exponent), sym.level)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self):
        # the identity is falsy; callers test "w is trivial" with ``not w``
        return bool(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def symbols(self) -> set:
        return {s for s, _ in self.letters}

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return invert(self) ** (-k)
        out = Word.identity(self.level)
        for _ in range(k):
            out = multiply(out, self)
        return out

    def inverse(self) -> "Word":
        return invert(self)

    def __repr__(self):
        if not self.letters:
            return f"Word(1, level={self.level})"
        body = " ".join(f"{s!r}" + ("" if e == 1 else "^-1") for s, e in self.letters)
        return f"Word({body}, level={self.level})"


def reduce(letters: Sequence[Letter], level: int | None = None) -> Word:
    """Freely reduce a raw letter sequence.

    ``level`` is required only for the empty sequence; otherwise it is read
    off the letters, which must all share one level.
    """
    letters = list(letters)
    levels = {s.level for s, _ in letters}
    if len(levels) > 1:
        raise StructureError(f"mixed-level letters: levels {sorted(levels)}")
    if levels:
        (found,) = levels
        if level is not None and level != found:
            raise StructureError(f"letters at level {found}, expected {level}")
        level = found
    elif level is None:
        raise StructureError("empty letter sequence needs an explicit level")
    for _, e in letters:
        if e not in (1, -1):
            raise StructureError(f"letter exponent must be +1 or -1, got {e}")
    return Word(tuple(_free_reduce(letters)), level)


def _same_level(*words: Word) -> int:
    levels = {w.level for w in words}
    if len(levels) != 1:
        raise StructureError(f"level mismatch: {sorted(levels)}")
    return levels.pop()


def multiply(u: Word, v: Word) -> Word:
    level = _same_level(u, v)
    # both factors are reduced, so cancellation only happens at the seam
    i, j = len(u.letters), 0
    while i > 0 and j < len(v.letters):
        (s, e), (t, f) = u.letters[i - 1], v.letters[j]
        if s == t and e == -f:
            i -= 1
            j += 1
        else:
            break
    return Word(u.letters[:i] + v.letters[j:], level)


def invert(u: Word) -> Word:
    return Word(tuple((s, -e) for s, e in reversed(u.letters)), u.level)


def product(words: Iterable[Word], level: int) -> Word:
    out = Word.identity(level)
    for w in words:
        out = multiply(out, w)
    return out


def conjugate(g: Word, f: Word) -> Word:
    """Left action ``g f g^-1``."""
    return multiply(multiply(g, f), invert(g))


def commutator(u: Word, v: Word) -> Word:
    """``[u, v] = u v u^-1 v^-1``."""
    return product((u, v, invert(u), invert(v)), _same_level(u, v))


ImageMap = Union[Mapping[GeneratorSymbol, Word], Callable[[GeneratorSymbol], Word]]


def apply_hom(image_of: ImageMap, w: Word, target_level: int | None = None) -> Word:
    """Extend a generator assignment multiplicatively and evaluate it on ``w``.

    ``target_level`` fixes the result level when ``w`` is empty.
    """
    lookup = image_of if callable(image_of) else image_of.__getitem__
    out: list = []
    level = target_level
    for sym, e in w.letters:
        try:
            img = lookup(sym)
        except KeyError:
            raise StructureError(f"no image for symbol {sym!r}") from None
        if level is None:
            level = img.level
        elif img.level != level:
            raise StructureError(f"images at levels {level} and {img.level}")
        out.extend(img.letters if e == 1 else invert(img).letters)
    if level is None:
        raise StructureError("cannot infer target level of an empty word")
    return Word(tuple(_free_reduce(out)), level)
