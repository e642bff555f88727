"""Alphabets, i.i.d. letter distributions, patterns and reduced pattern systems."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence, Union

from .errors import (
    BadDistribution,
    DuplicatePattern,
    InvalidAlphabet,
    NotReduced,
    UnknownLetter,
    ZeroProbabilityLetter,
)
from .exactmath import Poly

__all__ = [
    "Alphabet",
    "Distribution",
    "Pattern",
    "PatternSystem",
    "validate_system",
    "make_system",
    "pattern_prob",
    "correlation_poly",
    "coin",
    "uniform",
]


@dataclass(frozen=True)
class Alphabet:
    letters: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        if not self.letters:
            raise InvalidAlphabet("alphabet is empty")
        if len(set(self.letters)) != len(self.letters):
            raise InvalidAlphabet(f"duplicate letters in {list(self.letters)}")
        for x in self.letters:
            if not isinstance(x, str) or not x or x != x.strip() or any(c.isspace() for c in x):
                raise InvalidAlphabet(f"invalid letter {x!r}")

    def __len__(self) -> int:
        return len(self.letters)

    def __contains__(self, x: object) -> bool:
        return x in self.letters

    @property
    def single_char(self) -> bool:
        return all(len(x) == 1 for x in self.letters)


@dataclass(frozen=True)
class Distribution:
    """I.i.d. letter law; ``probs`` is aligned with ``alphabet.letters``."""

    alphabet: Alphabet
    probs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        probs = tuple(Fraction(p) for p in self.probs)
        object.__setattr__(self, "probs", probs)
        if len(probs) != len(self.alphabet):
            raise BadDistribution("every letter needs exactly one probability")
        for x, p in zip(self.alphabet.letters, probs):
            if not 0 <= p <= 1:
                raise BadDistribution(f"Pr({x}) = {p} is outside [0, 1]")
        if sum(probs) != 1:
            raise BadDistribution(f"probabilities sum to {sum(probs)}, not 1")

    @classmethod
    def from_mapping(
        cls, probs: Mapping[str, Union[int, Fraction, str]], letters: Sequence[str] | None = None
    ) -> "Distribution":
        letters = tuple(letters) if letters is not None else tuple(probs)
        extra = set(probs) - set(letters)
        if extra:
            raise BadDistribution(f"probabilities given for unknown letters {sorted(extra)}")
        missing = [x for x in letters if x not in probs]
        if missing:
            raise BadDistribution(f"no probability for {missing}")
        return cls(Alphabet(letters), tuple(Fraction(probs[x]) for x in letters))

    @cached_property
    def mapping(self) -> dict[str, Fraction]:
        return dict(zip(self.alphabet.letters, self.probs))

    def prob(self, letter: str) -> Fraction:
        return self.mapping[letter]

    def word_prob(self, symbols: Iterable[str]) -> Fraction:
        out = Fraction(1)
        for x in symbols:
            out *= self.mapping[x]
        return out


def coin(p: Union[Fraction, int, str] = Fraction(1, 2)) -> Distribution:
    """Biased coin with Pr(H) = p."""
    p = Fraction(p)
    return Distribution(Alphabet(("H", "T")), (p, 1 - p))


def uniform(letters: Iterable[str]) -> Distribution:
    letters = tuple(letters)
    return Distribution(Alphabet(letters), tuple(Fraction(1, len(letters)) for _ in letters))


@dataclass(frozen=True)
class Pattern:
    symbols: tuple[str, ...]
    label: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if not self.symbols:
            raise ValueError("pattern must have at least one letter")
        if not self.label:
            sep = "" if all(len(x) == 1 for x in self.symbols) else " "
            object.__setattr__(self, "label", sep.join(self.symbols))

    @classmethod
    def parse(cls, text: str, alphabet: Alphabet | None = None, label: str = "") -> "Pattern":
        """Whitespace-separated letters, or a bare word of single-character letters."""
        tokens = text.split()
        if len(tokens) == 1 and (alphabet is None or alphabet.single_char):
            tokens = list(tokens[0])
        return cls(tuple(tokens), label)

    def __len__(self) -> int:
        return len(self.symbols)

    def prefix(self, k: int) -> tuple[str, ...]:
        return self.symbols[:k]

    def suffix(self, k: int) -> tuple[str, ...]:
        return self.symbols[len(self.symbols) - k:]

    def contains(self, other: "Pattern") -> bool:
        a, b = self.symbols, other.symbols
        return any(a[i:i + len(b)] == b for i in range(len(a) - len(b) + 1))

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class PatternSystem:
    """A validated race: build with :func:`validate_system`."""

    dist: Distribution
    patterns: tuple[Pattern, ...]

    @property
    def m(self) -> int:
        return len(self.patterns)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.patterns)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(a.label for a in self.patterns)


def validate_system(dist: Distribution, patterns: Sequence[Pattern]) -> PatternSystem:
    patterns = tuple(patterns)
    if not patterns:
        raise ValueError("need at least one pattern")
    for a in patterns:
        for x in a.symbols:
            if x not in dist.alphabet:
                raise UnknownLetter(f"letter {x!r} of {a.label!r} is not in the alphabet")
    for i, a in enumerate(patterns):
        for j in range(i):
            if patterns[j].symbols == a.symbols:
                raise DuplicatePattern(j, i, a.label)
    for i, a in enumerate(patterns):
        for j, b in enumerate(patterns):
            if i != j and a.contains(b):
                raise NotReduced(i, j, a.label, b.label)
    for a in patterns:
        for x in a.symbols:
            if not dist.prob(x):
                raise ZeroProbabilityLetter(x, a.label)
    return PatternSystem(dist, patterns)


def make_system(dist: Distribution, words: Iterable[Union[str, Pattern]]) -> PatternSystem:
    """Convenience: parse ``words`` against ``dist``'s alphabet and validate."""
    pats = [w if isinstance(w, Pattern) else Pattern.parse(w, dist.alphabet) for w in words]
    return validate_system(dist, pats)


def pattern_prob(dist: Distribution, a: Pattern) -> Fraction:
    return dist.word_prob(a.symbols)


def correlation_poly(dist: Distribution, a: Pattern, b: Pattern) -> Poly:
    """Overlap polynomial of ``a`` against ``b``.

    For every k such that the first k letters of ``a`` equal the last k
    letters of ``b``, adds Pr(last len(a)-k letters of ``a``) * s**(len(a)-k).
    """
    la = len(a)
    coeffs = [Fraction(0)] * la
    for k in range(1, min(la, len(b)) + 1):
        if a.prefix(k) == b.suffix(k):
            coeffs[la - k] += dist.word_prob(a.suffix(la - k))
    return Poly(coeffs)
