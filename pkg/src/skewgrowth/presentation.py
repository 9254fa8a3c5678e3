"""Positive homogeneous monoid presentations.

A presentation is an ordered alphabet plus a set of relations ``u = v``
between positive words of equal length. Words are tuples of letter ids;
the alphabet order fixes the lexicographic order used for canonical forms
everywhere else in the package.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Word = tuple[int, ...]

_TOKEN = re.compile(r"\S+")

PRESET_NAMES = ("bii", "gn", "hn", "abel", "free", "appendix2", "appendix3")


class PresentationError(ValueError):
    """Raised for malformed presentation text or invalid presentations."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


@dataclass(frozen=True)
class Relation:
    lhs: Word
    rhs: Word

    def __post_init__(self):
        if len(self.lhs) != len(self.rhs):
            raise PresentationError(
                f"inhomogeneous relation: lengths {len(self.lhs)} and {len(self.rhs)} differ"
            )
        if len(self.lhs) == 0:
            raise PresentationError("relation between empty words")
        if self.lhs == self.rhs:
            raise PresentationError("trivial relation (both sides letterwise equal)")

    @property
    def degree(self) -> int:
        return len(self.lhs)

    def reversed(self) -> Relation:
        return Relation(self.lhs[::-1], self.rhs[::-1])

    def key(self) -> tuple[Word, Word]:
        """Orientation-free identity of the relation."""
        return tuple(sorted((self.lhs, self.rhs)))  # type: ignore[return-value]


@dataclass(frozen=True)
class Presentation:
    alphabet: tuple[str, ...]
    relations: tuple[Relation, ...] = ()
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "relations", tuple(self.relations))
        if not self.alphabet:
            raise PresentationError("empty alphabet")
        seen = set()
        for sym in self.alphabet:
            if not sym or any(ch.isspace() for ch in sym) or sym in ("=", "#", ","):
                raise PresentationError(f"invalid symbol {sym!r}")
            if sym in seen:
                raise PresentationError(f"duplicate symbol {sym!r}")
            seen.add(sym)
        n = len(self.alphabet)
        for rel in self.relations:
            for letter in rel.lhs + rel.rhs:
                if not 0 <= letter < n:
                    raise PresentationError(f"letter id {letter} out of range")

    @property
    def rank(self) -> int:
        return len(self.alphabet)

    @property
    def label(self) -> str:
        return self.name or "presentation"

    def check_word(self, word: Iterable[int]) -> Word:
        word = tuple(word)
        n = self.rank
        for letter in word:
            if not isinstance(letter, int) or not 0 <= letter < n:
                raise PresentationError(f"letter {letter!r} out of range for alphabet of size {n}")
        return word

    def parse_word(self, text: str) -> Word:
        """Parse ``text`` into a word.

        Whitespace-separated tokens are looked up as symbols. A token that is
        not a symbol is split into characters when every symbol is a single
        character, so ``"cbb"`` and ``"c b b"`` both work for the presets.
        ``""``, ``"1"`` and ``"e"`` (when ``e`` is not a symbol) denote the
        empty word.
        """
        index = {sym: i for i, sym in enumerate(self.alphabet)}
        text = text.strip()
        if text in ("", "1") and text not in index:
            return ()
        if text in ("e", "ε") and text not in index:
            return ()
        single = all(len(sym) == 1 for sym in self.alphabet)
        letters: list[int] = []
        for token in text.split():
            if token in index:
                letters.append(index[token])
            elif single:
                for ch in token:
                    if ch not in index:
                        raise PresentationError(f"unknown symbol {ch!r} in word {text!r}")
                    letters.append(index[ch])
            else:
                raise PresentationError(f"unknown symbol {token!r} in word {text!r}")
        return tuple(letters)

    def format_word(self, word: Sequence[int]) -> str:
        if all(len(sym) == 1 for sym in self.alphabet):
            return "".join(self.alphabet[i] for i in word)
        return " ".join(self.alphabet[i] for i in word)

    def describe(self) -> str:
        rels = ", ".join(
            f"{self.format_word(r.lhs)}={self.format_word(r.rhs)}" for r in self.relations
        )
        return f"<{', '.join(self.alphabet)} | {rels}>"


def _tokens_with_columns(line: str) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]


def parse_presentation(source: str, name: str | None = None) -> Presentation:
    """Parse the line-oriented presentation format.

    ::

        alphabet a b c
        rel c b b = b b a     # comments run to end of line
        rel a b = b c
    """
    alphabet: tuple[str, ...] | None = None
    index: dict[str, int] = {}
    relations: list[Relation] = []
    for lineno, raw in enumerate(source.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = _tokens_with_columns(line)
        if not toks:
            continue
        head, col = toks[0]
        if head == "alphabet":
            if alphabet is not None:
                raise PresentationError("second alphabet line", lineno, col)
            syms = [t for t, _ in toks[1:]]
            if not syms:
                raise PresentationError("alphabet line declares no symbols", lineno, col)
            for sym, c in toks[1:]:
                if sym in index:
                    raise PresentationError(f"duplicate symbol {sym!r}", lineno, c)
                if sym in ("=", "rel", "alphabet"):
                    raise PresentationError(f"reserved token {sym!r} used as symbol", lineno, c)
                index[sym] = len(index)
            alphabet = tuple(syms)
        elif head == "rel":
            if alphabet is None:
                raise PresentationError("rel line before alphabet line", lineno, col)
            body = toks[1:]
            eqs = [i for i, (t, _) in enumerate(body) if t == "="]
            if len(eqs) != 1:
                raise PresentationError("relation needs exactly one '='", lineno, col)
            lhs_t, rhs_t = body[: eqs[0]], body[eqs[0] + 1 :]
            if not lhs_t or not rhs_t:
                raise PresentationError("relation side is empty", lineno, col)
            words = []
            for side in (lhs_t, rhs_t):
                w = []
                for sym, c in side:
                    if sym not in index:
                        raise PresentationError(f"unknown symbol {sym!r}", lineno, c)
                    w.append(index[sym])
                words.append(tuple(w))
            try:
                relations.append(Relation(words[0], words[1]))
            except PresentationError as exc:
                raise PresentationError(str(exc), lineno, col) from None
        else:
            raise PresentationError(f"expected 'alphabet' or 'rel', got {head!r}", lineno, col)
    if alphabet is None:
        raise PresentationError("missing alphabet line")
    return Presentation(alphabet, tuple(relations), name)


def serialize(p: Presentation) -> str:
    lines = ["alphabet " + " ".join(p.alphabet)]
    for rel in p.relations:
        lhs = " ".join(p.alphabet[i] for i in rel.lhs)
        rhs = " ".join(p.alphabet[i] for i in rel.rhs)
        lines.append(f"rel {lhs} = {rhs}")
    return "\n".join(lines) + "\n"


def _from_strings(name: str, alphabet: str, rels: Iterable[tuple[str, str]]) -> Presentation:
    idx = {ch: i for i, ch in enumerate(alphabet)}
    relations = tuple(Relation(tuple(idx[c] for c in u), tuple(idx[c] for c in v)) for u, v in rels)
    return Presentation(tuple(alphabet), relations, name)


def preset(name: str, params: Sequence[int] = ()) -> Presentation:
    """The presentations studied in the skew-growth examples.

    ``gn`` and ``hn`` take ``n``, ``abel`` takes ``m`` and ``free`` takes the
    rank; the others take no parameter.
    """
    params = list(params)

    def one(default: int | None = None) -> int:
        if len(params) > 1:
            raise PresentationError(f"preset {name!r} takes one parameter")
        if not params:
            if default is None:
                raise PresentationError(f"preset {name!r} needs a parameter")
            return default
        return int(params[0])

    if name == "bii":
        if params:
            raise PresentationError("preset 'bii' takes no parameter")
        return _from_strings("bii", "abc", [("cbb", "bba"), ("ab", "bc"), ("ac", "ca")])
    if name == "gn":
        n = one()
        if n < 3:
            raise PresentationError("gn requires n >= 3")
        return _from_strings(f"gn:{n}", "abc", [("c" + "b" * n, "b" * n + "a"), ("ab", "bc"), ("ac", "ca")])
    if name == "hn":
        n = one()
        if n < 1:
            raise PresentationError("hn requires n >= 1")
        core = "ab" * n
        return _from_strings(
            f"hn:{n}", "abc", [("b" + core + "ba", "cb" + core + "b"), ("ab", "bc"), ("ac", "ca")]
        )
    if name == "abel":
        m = one()
        if m < 2:
            raise PresentationError("abel requires m >= 2")
        return _from_strings(f"abel:{m}", "ab", [("a" * m, "b" * m), ("ab", "ba")])
    if name == "free":
        rank = one(2)
        if rank < 1:
            raise PresentationError("free requires rank >= 1")
        if rank <= 26:
            alphabet = tuple("abcdefghijklmnopqrstuvwxyz"[:rank])
        else:
            alphabet = tuple(f"x{i}" for i in range(rank))
        return Presentation(alphabet, (), f"free:{rank}")
    if name == "appendix2":
        if params:
            raise PresentationError("preset 'appendix2' takes no parameter")
        return _from_strings("appendix2", "abc", [("cb", "ba"), ("ab", "bc"), ("ac", "ca")])
    if name == "appendix3":
        if params:
            raise PresentationError("preset 'appendix3' takes no parameter")
        return _from_strings(
            "appendix3",
            "abcd",
            [("ab", "bc"), ("ac", "ca"), ("cb", "ba"), ("bd", "db"), ("ad", "dc"), ("cd", "da")],
        )
    raise PresentationError(f"unknown preset {name!r}; choose from {', '.join(PRESET_NAMES)}")


def parse_preset_spec(spec: str) -> Presentation:
    """``"gn:3"`` -> ``preset("gn", [3])``; ``"bii"`` -> ``preset("bii")``."""
    name, _, rest = spec.partition(":")
    params = []
    if rest:
        try:
            params = [int(x) for x in rest.split(",")]
        except ValueError:
            raise PresentationError(f"bad preset parameter in {spec!r}") from None
    return preset(name.strip(), params)


def reverse_presentation(p: Presentation) -> Presentation:
    """Opposite presentation: every relation word read backwards.

    Left cancellativity of the opposite monoid is right cancellativity of
    the original one.
    """
    name = f"rev({p.name})" if p.name else None
    return Presentation(p.alphabet, tuple(r.reversed() for r in p.relations), name)
