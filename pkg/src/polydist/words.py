"""Alphabets and words for the level-n unipotent fundamental-group algebra.

At level n there is one translation-invariant letter X and n puncture
letters Y0..Y(n-1), one per n-th root of unity (indexed anticlockwise).
Words carry their level and a flavor:

- "std" — the inhomogeneous (full monodromy) coordinates;
- "til" — the homogeneized coordinates, where push-forwards act diagonally.

The text format is ``n=<level>,<flavor>:<letters>`` with letters joined by
dots, e.g. ``n=6,std:Y5.X.X``; the empty word has an empty letter list.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import total_ordering

FLAVOR_STANDARD = "std"
FLAVOR_TILDE = "til"
FLAVORS = (FLAVOR_STANDARD, FLAVOR_TILDE)


class WordError(ValueError):
    """Raised for malformed letters/words or mismatched levels/flavors."""


@dataclass(frozen=True)
class Letter:
    """One alphabet letter: kind 'X' (index 0) or 'Y' with index in [0, level)."""

    kind: str
    index: int
    level: int
    flavor: str

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise WordError(f"unknown flavor {self.flavor!r}")
        if self.level < 1:
            raise WordError(f"level must be >= 1, got {self.level}")
        if self.kind == "X":
            if self.index != 0:
                raise WordError("X letter must have index 0")
        elif self.kind == "Y":
            if not 0 <= self.index < self.level:
                raise WordError(
                    f"Y index {self.index} out of range for level {self.level}"
                )
        else:
            raise WordError(f"unknown letter kind {self.kind!r}")

    @property
    def is_x(self):
        return self.kind == "X"

    def sort_key(self):
        return (0, 0) if self.kind == "X" else (1, self.index)

    def render(self):
        return "X" if self.kind == "X" else f"Y{self.index}"

    def __str__(self):
        return self.render()


def x_letter(level, flavor=FLAVOR_STANDARD):
    return Letter("X", 0, level, flavor)

def y_letter(index, level, flavor=FLAVOR_STANDARD):
    return Letter("Y", index, level, flavor)


def alphabet(level, flavor=FLAVOR_STANDARD):
    """All letters at a level, in canonical order: X, Y0, ..., Y(level-1)."""
    return [x_letter(level, flavor)] + [
        y_letter(s, level, flavor) for s in range(level)
    ]


@total_ordering
@dataclass(frozen=True)
class Word:
    """A word in the level alphabet; the monomial basis of the series algebra.

    The level/flavor live on the word itself so that the empty word is still
    tagged.  Ordering is graded: first by length, then letterwise.
    """

    level: int
    flavor: str
    letters: tuple

    def __post_init__(self):
        for let in self.letters:
            if let.level != self.level or let.flavor != self.flavor:
                raise WordError(
                    f"letter {let} does not live at level {self.level}/{self.flavor}"
                )

    def degree(self):
        return len(self.letters)

    def sort_key(self):
        return (len(self.letters), tuple(l.sort_key() for l in self.letters))

    def __lt__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __mul__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        if other.level != self.level or other.flavor != self.flavor:
            raise WordError("cannot concatenate words of different levels/flavors")
        return Word(self.level, self.flavor, self.letters + other.letters)

    def render(self):
        body = ".".join(l.render() for l in self.letters)
        return f"n={self.level},{self.flavor}:{body}"

    def __str__(self):
        return self.render()


def empty_word(level, flavor=FLAVOR_STANDARD):
    return Word(level, flavor, ())

def word_of(letters, level, flavor=FLAVOR_STANDARD):
    return Word(level, flavor, tuple(letters))


def parse_word(text):
    """Inverse of Word.render: ``n=2,std:Y0.X`` -> Word."""
    try:
        head, _, body = text.partition(":")
        level_part, _, flavor = head.partition(",")
        if not level_part.startswith("n="):
            raise WordError(f"bad word header {head!r}")
        level = int(level_part[2:])
        letters = []
        if body:
            for tok in body.split("."):
                if tok == "X":
                    letters.append(x_letter(level, flavor))
                elif tok.startswith("Y"):
                    letters.append(y_letter(int(tok[1:]), level, flavor))
                else:
                    raise WordError(f"bad letter token {tok!r}")
        return Word(level, flavor, tuple(letters))
    except (ValueError, IndexError) as exc:
        if isinstance(exc, WordError):
            raise
        raise WordError(f"cannot parse word {text!r}: {exc}") from exc


def wt_x(w):
    """Number of X letters in the word (the 'translation weight')."""
    return sum(1 for l in w.letters if l.is_x)


def words_up_to_degree(level, flavor, max_degree, min_degree=0):
    """All words of degree in [min_degree, max_degree], in canonical order."""
    letters = alphabet(level, flavor)
    out = []
    for d in range(min_degree, max_degree + 1):
        for combo in itertools.product(letters, repeat=d):
            out.append(Word(level, flavor, combo))
    return out


def reduce_mod_r(w, r):
    """Project a word from level n·r down to level r.

    X stays X; the puncture index reduces mod r.  Requires r | level.
    """
    if w.level % r != 0:
        raise WordError(f"level {w.level} is not divisible by {r}")
    letters = tuple(
        x_letter(r, w.flavor) if l.is_x else y_letter(l.index % r, r, w.flavor)
        for l in w.letters
    )
    return Word(r, w.flavor, letters)


def enumerate_lifts(w, n):
    """All words at level ``w.level * n`` that reduce to ``w``.

    X lifts uniquely; each Y index i lifts to i + t*level for t in [0, n).
    Returns the lifts in canonical order; there are n**(#Y letters) of them.
    """
    r = w.level
    rn = r * n
    choices = []
    for l in w.letters:
        if l.is_x:
            choices.append((x_letter(rn, w.flavor),))
        else:
            choices.append(
                tuple(y_letter(l.index + t * r, rn, w.flavor) for t in range(n))
            )
    lifts = [Word(rn, w.flavor, combo) for combo in itertools.product(*choices)]
    lifts.sort()
    return lifts
