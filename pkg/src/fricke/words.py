"""Reduced words in the free group on two generators ``a`` and ``b``.

A word is stored as a tuple of syllables ``(generator, exponent)`` where the
generator is ``0`` for ``a`` and ``1`` for ``b``.  Adjacent syllables always
use different generators and exponents are never zero, so every ``Word``
value is freely reduced.

The text grammar is one letter per token: ``a``, ``b`` and their inverses
``A``, ``B``, each optionally followed by ``^<signed integer>``.  Whitespace
is ignored.

>>> parse_word("a^2 b^4")
Word('a^2b^4')
>>> parse_word("a b B A")
Word('')
>>> flip_inverses(parse_word("a^2b^4"))
Word('A^2B^4')
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import WordSyntaxError

A, B = 0, 1
LETTERS = "ab"

Syllable = tuple[int, int]

_TOKEN = re.compile(r"\s*(?:([abAB])(?:\s*\^\s*([+-]?\d+))?)")


def _reduce(syllables: Iterable[Syllable]) -> tuple[Syllable, ...]:
    out: list[list[int]] = []
    for gen, exp in syllables:
        if gen not in (A, B):
            raise ValueError(f"generator must be 0 or 1, got {gen!r}")
        exp = int(exp)
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            out[-1][1] += exp
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([gen, exp])
    return tuple((g, e) for g, e in out)


@dataclass(frozen=True, slots=True)
class Word:
    """A freely reduced word in ``a`` and ``b``."""

    syllables: tuple[Syllable, ...] = ()

    def __post_init__(self):
        reduced = _reduce(self.syllables)
        if reduced != self.syllables:
            object.__setattr__(self, "syllables", reduced)

    @classmethod
    def identity(cls) -> Word:
        return cls(())

    def __len__(self) -> int:
        return len(self.syllables)

    def __iter__(self):
        return iter(self.syllables)

    def __mul__(self, other: Word) -> Word:
        return Word(self.syllables + other.syllables)

    def __pow__(self, k: int) -> Word:
        if k < 0:
            return self.inverse() ** (-k)
        return Word(self.syllables * k)

    def __str__(self) -> str:
        return render_word(self)

    def __repr__(self) -> str:
        return f"Word({render_word(self)!r})"

    @property
    def weight(self) -> int:
        """Total exponent weight, the sum of ``|exponent|`` over syllables."""
        return sum(abs(e) for _, e in self.syllables)

    def is_identity(self) -> bool:
        return not self.syllables

    def inverse(self) -> Word:
        return Word(tuple((g, -e) for g, e in reversed(self.syllables)))


def word(*syllables: Syllable) -> Word:
    """Build a word from ``(generator, exponent)`` pairs."""
    return Word(tuple(syllables))


def parse_word(text: str) -> Word:
    """Parse ``text`` into a reduced ``Word``.

    Raises ``WordSyntaxError`` on an unknown token or an explicit zero
    exponent such as ``a^0``.
    """
    syllables = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if m is None or m.end() == pos:
            bad = stripped[pos:].lstrip()[:1]
            raise WordSyntaxError(f"unexpected token {bad!r} at offset {pos} in {text!r}")
        letter, exp_text = m.group(1), m.group(2)
        exp = 1 if exp_text is None else int(exp_text)
        if exp == 0:
            raise WordSyntaxError(f"zero exponent on {letter!r} in {text!r}")
        gen = LETTERS.index(letter.lower())
        if letter.isupper():
            exp = -exp
        syllables.append((gen, exp))
        pos = m.end()
    return Word(tuple(syllables))


def render_word(w: Word) -> str:
    """Render ``w`` in the parse grammar; ``parse_word`` inverts this."""
    parts = []
    for gen, exp in w.syllables:
        letter = LETTERS[gen] if exp > 0 else LETTERS[gen].upper()
        parts.append(letter if abs(exp) == 1 else f"{letter}^{abs(exp)}")
    return "".join(parts)


def flip_inverses(w: Word) -> Word:
    """Substitute ``a -> a^-1`` and ``b -> b^-1`` syllable by syllable."""
    return Word(tuple((g, -e) for g, e in w.syllables))


def cyclic_reduce(w: Word) -> Word:
    """Cancel and merge syllables across the ends of ``w``.

    The result is conjugate to ``w``; when it has two or more syllables its
    first and last syllables use different generators.

    >>> cyclic_reduce(parse_word("a^2 b A^2"))
    Word('b')
    >>> cyclic_reduce(parse_word("a b a"))
    Word('a^2b')
    """
    syl = list(w.syllables)
    while len(syl) >= 2 and syl[0][0] == syl[-1][0]:
        gen, e_last = syl.pop()
        e = syl[0][1] + e_last
        if e == 0:
            syl.pop(0)
        else:
            syl[0] = (gen, e)
    return Word(tuple(syl))


def rotations(w: Word) -> list[Word]:
    """All cyclic rotations of a cyclically reduced word, by syllable."""
    syl = w.syllables
    return [Word(syl[i:] + syl[:i]) for i in range(max(len(syl), 1))]


def rotate(w: Word, k: int) -> Word:
    syl = w.syllables
    if not syl:
        return w
    k %= len(syl)
    return Word(syl[k:] + syl[:k])


def canonical_cyclic(w: Word, fold_flip: bool = False) -> Word:
    """Least cyclic rotation of the cyclic reduction of ``w``.

    With ``fold_flip`` the rotations of ``flip_inverses(w)`` compete too,
    which identifies words related by simultaneous inversion of both
    generators.  Candidates with less inverse-letter weight win before the
    lexicographic comparison, so the representative never carries more
    inverse letters than ``w`` itself.
    """
    base = cyclic_reduce(w)
    candidates = rotations(base)
    if fold_flip:
        candidates += rotations(flip_inverses(base))
    return min(candidates, key=lambda v: (negative_weight(v), v.syllables))


def negative_weight(w: Word) -> int:
    """Total weight of the inverse letters in ``w``."""
    return sum(-e for _, e in w.syllables if e < 0)
