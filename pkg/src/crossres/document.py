"""Presentation documents: parsing, canonical rendering, word syntax.

Input grammar::

    [generators]
    a b
    [relators]
    r: a^2
    s: b^3
    t: a b a b
    [identities]
    i1: r^-1 (a>r)

``(u>r)`` is the relator ``r`` conjugated by ``s0(u)``; a bare relator
name is the same with ``u = 1``.  Blank lines and ``#`` comment lines are
ignored.

Level-``n`` words (``moore --word``) additionally accept degenerate atoms
``s1.s0.a``, read as operators applied right to left.
"""
from __future__ import annotations

import re
from importlib import resources
from dataclasses import dataclass
from itertools import groupby
from typing import List, Optional, Tuple

from . import simpl_index as si
from .skeleton import ConstructionData, Presentation, ValidationError
from .words import GeneratorSymbol, Word, invert, multiply

SECTIONS = ("generators", "relators", "identities")
NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_.]*)|(?P<int>-?\d+)|(?P<op>[()^>])|(?P<bad>\S))")


class ParseError(ValueError):
    def __init__(self, code: str, message: str, line: int = 0, column: int = 0):
        self.code, self.message, self.line, self.column = code, message, line, column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)


@dataclass
class _Tok:
    kind: str
    text: str
    col: int


def _tokenize(text: str, line: int, col0: int) -> List[_Tok]:
    toks, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        kind = m.lastgroup
        start = m.start(kind)
        if kind == "bad":
            raise ParseError("PARSE", f"unexpected character {m.group(kind)!r}", line, col0 + start)
        toks.append(_Tok(kind, m.group(kind), col0 + start))
        pos = m.end()
    return toks


# AST terms: ("atom", name, exp, col) or ("conj", gterms, relname, exp, col)
class _TermParser:
    def __init__(self, toks: List[_Tok], line: int):
        self.toks, self.i, self.line = toks, 0, line

    def peek(self) -> Optional[_Tok]:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self) -> _Tok:
        tok = self.peek()
        if tok is None:
            raise ParseError("PARSE", "unexpected end of word", self.line,
                             self.toks[-1].col + len(self.toks[-1].text) if self.toks else 1)
        self.i += 1
        return tok

    def fail(self, tok: _Tok, msg: str):
        raise ParseError("PARSE", msg, self.line, tok.col)

    def exponent(self) -> int:
        tok = self.peek()
        if tok is None or tok.text != "^":
            return 1
        self.take()
        num = self.take()
        if num.kind != "int":
            raise ParseError("EXPONENT", f"expected integer exponent, got {num.text!r}", self.line, num.col)
        if int(num.text) == 0:
            raise ParseError("EXPONENT", "zero exponent", self.line, num.col)
        return int(num.text)

    def word(self, stop: Optional[str] = None) -> list:
        first = self.peek()
        if first is not None and first.kind == "int" and first.text == "1":
            self.take()
            nxt = self.peek()
            if nxt is not None and nxt.text != stop:
                self.fail(nxt, "the identity word '1' must stand alone")
            return []
        terms = []
        while (tok := self.peek()) is not None and tok.text != stop:
            terms.append(self.term(nested=stop is not None))
        if not terms:
            where = tok or first
            raise ParseError("PARSE", "empty word", self.line, where.col if where else 1)
        return terms

    def term(self, nested: bool) -> tuple:
        tok = self.take()
        if tok.kind == "name":
            return ("atom", tok.text, self.exponent(), tok.col)
        if tok.text == "(" and not nested:
            gterms = self.word(stop=">")
            self.take()  # '>'
            name = self.take()
            if name.kind != "name":
                self.fail(name, "expected relator name after '>'")
            close = self.take()
            if close.text != ")":
                self.fail(close, "expected ')'")
            return ("conj", gterms, name.text, self.exponent(), tok.col)
        self.fail(tok, f"unexpected {tok.text!r}")


def _parse_word_text(text: str, line: int, col0: int) -> list:
    toks = _tokenize(text, line, col0)
    if not toks:
        raise ParseError("PARSE", "missing word", line, col0)
    p = _TermParser(toks, line)
    terms = p.word()
    if p.peek() is not None:
        p.fail(p.peek(), f"unexpected {p.peek().text!r}")
    return terms


# -- building words ------------------------------------------------------

def _s0(w: Word) -> Word:
    return Word(tuple((GeneratorSymbol(s.basis_id, s.birth_level, si.compose_alpha(s.history, 0)), e)
                      for s, e in w), w.level + 1)


class _Resolver:
    def __init__(self, generators, relators, identities=()):
        self.gens, self.rels, self.ids = set(generators), set(relators), set(identities)
        self.line = 0

    def gen_word(self, terms) -> Word:
        out = Word.identity(0)
        for t in terms:
            if t[0] != "atom" or "." in t[1]:
                raise ParseError("PARSE", "only generator letters are allowed here", self.line, t[-1])
            if t[1] not in self.gens:
                raise ParseError("NAME", f"unknown generator {t[1]!r}", self.line, t[3])
            out = multiply(out, Word.from_symbol(GeneratorSymbol.basis(t[1], 0), t[2]))
        return out

    def conj_term(self, gterms, rname, exp, col) -> Word:
        if rname not in self.rels:
            raise ParseError("NAME", f"unknown relator {rname!r}", self.line, col)
        u = _s0(self.gen_word(gterms))
        y = Word.from_symbol(GeneratorSymbol.basis(rname, 1), exp)
        return multiply(multiply(u, y), invert(u))

    def identity_word(self, terms) -> Word:
        out = Word.identity(1)
        for t in terms:
            if t[0] == "conj":
                out = multiply(out, self.conj_term(*t[1:]))
            elif t[1] in self.rels:
                out = multiply(out, self.conj_term([], t[1], t[2], t[3]))
            else:
                raise ParseError("SHAPE", f"{t[1]!r} is not a relator; identity words are "
                                 "products of conjugated relators", self.line, t[3])
        return out

    def symbol(self, name: str, col: int) -> GeneratorSymbol:
        *ops, base = name.split(".")
        if base in self.gens:
            sym = GeneratorSymbol.basis(base, 0)
        elif base in self.rels:
            sym = GeneratorSymbol.basis(base, 1)
        elif base in self.ids:
            sym = GeneratorSymbol.basis(base, 2)
        else:
            raise ParseError("NAME", f"unknown name {base!r}", self.line, col)
        hist = sym.history
        for op in reversed(ops):
            m = re.fullmatch(r"s(\d+)", op)
            if not m or int(m.group(1)) > len(hist) - 1:
                raise ParseError("PARSE", f"bad degeneracy {op!r} in {name!r}", self.line, col)
            hist = si.compose_alpha(hist, int(m.group(1)))
        return GeneratorSymbol(sym.basis_id, sym.birth_level, hist)

    def level_word(self, terms, level: int) -> Word:
        out = Word.identity(level)
        for t in terms:
            if t[0] == "conj":
                w = self.conj_term(*t[1:])
            else:
                w = Word.from_symbol(self.symbol(t[1], t[3]), t[2])
            if w.level != level:
                raise ParseError("LEVEL", f"term at level {w.level}, expected {level}", self.line, t[-1])
            out = multiply(out, w)
        return out


# -- documents -----------------------------------------------------------

def parse(text: str) -> ConstructionData:
    """Parse a presentation document into construction data."""
    seen: dict = {}
    gens: List[Tuple[str, int]] = []
    entries = {"relators": [], "identities": []}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        col0 = raw.index(line[0]) + 1
        if line.startswith("["):
            m = re.fullmatch(r"\[(\w+)\]", line)
            if not m or m.group(1) not in SECTIONS:
                raise ParseError("SECTION", f"unknown section header {line!r}", lineno, col0)
            current = m.group(1)
            if current in seen:
                raise ParseError("SECTION", f"repeated section [{current}]", lineno, col0)
            seen[current] = lineno
            continue
        if current is None:
            raise ParseError("SECTION", "content before the first section header", lineno, col0)
        if current == "generators":
            if gens:
                raise ParseError("PARSE", "generators must be listed on a single line", lineno, col0)
            for m in re.finditer(r"\S+", raw):
                if not NAME_RE.match(m.group()):
                    raise ParseError("PARSE", f"bad generator name {m.group()!r}", lineno, m.start() + 1)
                gens.append((m.group(), m.start() + 1))
            continue
        m = re.match(r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*:", raw)
        if not m:
            raise ParseError("PARSE", "expected 'name: word'", lineno, col0)
        terms = _parse_word_text(raw[m.end():], lineno, m.end() + 1)
        entries[current].append((m.group(1), terms, lineno, m.start(1) + 1))

    if "generators" not in seen:
        raise ParseError("SECTION", "missing [generators] section", 1, 1)
    names = [g for g, _ in gens]
    for kind, items in (("generator", [(g, None, seen["generators"], c) for g, c in gens]),
                        ("relator", entries["relators"]), ("identity", entries["identities"])):
        found = set()
        for name, _, lineno, col in items:
            if name in found:
                raise ParseError("DUPLICATE", f"duplicate {kind} name {name!r}", lineno, col)
            found.add(name)

    res = _Resolver(names, [n for n, *_ in entries["relators"]])
    relators = []
    for name, terms, lineno, _ in entries["relators"]:
        res.line = lineno
        relators.append((name, res.gen_word(terms)))
    identities = []
    for name, terms, lineno, _ in entries["identities"]:
        res.line = lineno
        identities.append((name, res.identity_word(terms)))
    try:
        return ConstructionData(Presentation(tuple(names), tuple(relators)), tuple(identities))
    except ValidationError as exc:
        raise ParseError("PARSE", str(exc)) from exc


def parse_level_word(data: ConstructionData, text: str, level: int) -> Word:
    """Parse a word at simplicial ``level`` over the skeleton's symbols."""
    res = _Resolver(data.presentation.generators,
                    [n for n, _ in data.presentation.relators],
                    [n for n, _ in data.identities])
    res.line = 1
    return res.level_word(_parse_word_text(text, 1, 1), level)


# -- rendering -----------------------------------------------------------

def _runs(items):
    """Group consecutive equal ``(key, sign)`` items into ``(key, total_exponent)``."""
    return [(key, sign * len(list(grp))) for (key, sign), grp in groupby(items)]


def _exp(k: int) -> str:
    return "" if k == 1 else f"^{k}"


def symbol_name(sym: GeneratorSymbol) -> str:
    ops = si.decompose_to_degeneracies(sym.history)
    return "".join(f"s{i}." for i in ops) + sym.basis_id


def render_word(w: Word) -> str:
    """Symbolic rendering ``s1.s0.a^-1 r``; ``1`` for the identity."""
    if not w:
        return "1"
    return " ".join(symbol_name(s) + _exp(k) for s, k in _runs(w.letters))


def render_generator_word(w: Word) -> str:
    return render_word(w)


def conjugated_terms(w: Word) -> Optional[List[Tuple[Word, str, int]]]:
    """Split a level-1 word into terms ``(u, r, e)`` meaning ``s0(u) y_r^e s0(u)^-1``.

    The conjugator of each relator occurrence is ``d0`` of its prefix.
    Returns ``None`` when ``d0 w != 1`` (the word is not in the normal
    closure of the relator letters).
    """
    if w.level != 1:
        return None
    prefix = Word.identity(0)
    terms = []
    for s, e in w:
        if s.birth_level == 0:
            prefix = multiply(prefix, Word.from_symbol(GeneratorSymbol.basis(s.basis_id, 0), e))
        elif s.birth_level == 1:
            terms.append((prefix, s.basis_id, e))
        else:
            return None
    if prefix:
        return None
    return terms


def render_conjugated(w: Word) -> str:
    terms = conjugated_terms(w)
    if terms is None:
        return render_word(w)
    if not terms:
        return "1"
    out = []
    for (u, r), k in _runs(((u, r), e) for u, r, e in terms):
        out.append((r if not u else f"({render_word(u)}>{r})") + _exp(k))
    return " ".join(out)


def render(data: ConstructionData) -> str:
    """Canonical document text; ``parse(render(d)) == d``."""
    p = data.presentation
    lines = ["[generators]", " ".join(p.generators)]
    if p.relators:
        lines.append("[relators]")
        lines += [f"{n}: {render_word(w)}" for n, w in p.relators]
    if data.identities:
        lines.append("[identities]")
        lines += [f"{n}: {render_conjugated(w)}" for n, w in data.identities]
    return "\n".join(lines) + "\n"


def parse_word_system(text: str) -> ConstructionData:
    """Read back ``W1:``/``W2:``/``W3:`` sections written by the exporter."""
    sections = {"W1": [], "W2": [], "W3": []}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line in ("W1:", "W2:", "W3:"):
            current = line[:-1]
            continue
        if current is None:
            raise ParseError("SECTION", "content before the first W-section", lineno, 1)
        sections[current].append(line if current == "W1" else line.replace(" = ", ": ", 1))
    doc = ["[generators]", " ".join(sections["W1"]), "[relators]", *sections["W2"],
           "[identities]", *sections["W3"]]
    return parse("\n".join(doc) + "\n")


BUNDLED = ("z1", "z2", "z3", "s3")


def bundled_text(name: str) -> str:
    """Text of a document shipped with the package (``z1``, ``z2``, ``z3``, ``s3``)."""
    if name not in BUNDLED:
        raise KeyError(f"no bundled document {name!r}; choose from {', '.join(BUNDLED)}")
    return resources.files("crossres").joinpath("data", f"{name}.pres").read_text(encoding="utf-8")


def load_bundled(name: str) -> ConstructionData:
    return parse(bundled_text(name))
