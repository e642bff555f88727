"""Reading problem files and writing/reading machine-format output.

A problem file is INI-style text (see ``docs/formats.md``)::

    [alphabet]
    letters = H T

    [probabilities]
    H = 1/2
    T = 0.5

    [patterns]
    A1 = THH
    HTH
"""

from __future__ import annotations

import configparser
import json
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Any, Iterable

from .patterns import Alphabet, Distribution, Pattern, PatternSystem, validate_system

FORMAT_VERSION = 1


class ProblemFileError(ValueError):
    """The file is syntactically malformed (as opposed to semantically invalid)."""


def parse_rational(text: str) -> Fraction:
    """Exact value of ``"3/10"``, ``"7"``, ``"0.25"`` or ``"2.5e-1"``.

    Non-terminating forms such as ``"0.333..."`` are rejected.
    """
    s = text.strip()
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise ProblemFileError(
            f"{text!r} is not an exact rational literal (use a/b or a terminating decimal)"
        ) from None


def _parser() -> configparser.ConfigParser:
    cp = configparser.ConfigParser(
        delimiters=("=",),
        comment_prefixes=("#",),
        inline_comment_prefixes=None,
        allow_no_value=True,
        interpolation=None,
        empty_lines_in_values=False,
        default_section="\x00unused",
    )
    cp.optionxform = str  # type: ignore[assignment,method-assign]
    return cp


def parse_problem(text: str) -> PatternSystem:
    cp = _parser()
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise ProblemFileError(str(exc).splitlines()[0]) from None

    known = {"problem", "alphabet", "probabilities", "patterns"}
    unknown = set(cp.sections()) - known
    if unknown:
        raise ProblemFileError(f"unknown section(s) {sorted(unknown)}")
    for sec in ("alphabet", "probabilities", "patterns"):
        if not cp.has_section(sec):
            raise ProblemFileError(f"missing [{sec}] section")
    if cp.has_section("problem"):
        version = cp["problem"].get("format", str(FORMAT_VERSION))
        if version.strip() != str(FORMAT_VERSION):
            raise ProblemFileError(f"unsupported format version {version!r}")

    letters_line = cp["alphabet"].get("letters")
    if letters_line is None:
        raise ProblemFileError("[alphabet] needs 'letters = ...'")
    alphabet = Alphabet(tuple(letters_line.split()))

    probs = {}
    for key, value in cp.items("probabilities"):
        if value is None:
            raise ProblemFileError(f"probability line {key!r} has no '='")
        probs[key.strip()] = parse_rational(value)
    dist = Distribution.from_mapping(probs, alphabet.letters)

    pats = []
    for key, value in cp.items("patterns"):
        if value is None:
            pats.append(Pattern.parse(key, alphabet))
        else:
            if not value.strip():
                raise ProblemFileError(f"pattern {key!r} is empty")
            pats.append(Pattern.parse(value, alphabet, label=key.strip()))
    if not pats:
        raise ProblemFileError("[patterns] is empty")
    return validate_system(dist, pats)


def load_problem(path: str) -> PatternSystem:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ProblemFileError(f"cannot read {path}: {exc.strerror}") from None
    return parse_problem(text)


def dump_problem(sys: PatternSystem) -> str:
    letters = sys.dist.alphabet.letters
    lines = ["[problem]", f"format = {FORMAT_VERSION}", "", "[alphabet]", "letters = " + " ".join(letters), ""]
    lines.append("[probabilities]")
    lines += [f"{x} = {p}" for x, p in zip(letters, sys.dist.probs)]
    lines += ["", "[patterns]"]
    lines += [f"{a.label} = {' '.join(a.symbols)}" for a in sys.patterns]
    return "\n".join(lines) + "\n"


# --- rendering ---------------------------------------------------------------

def decimal_str(x: Fraction, precision: int = 6) -> str:
    """Display-only decimal with ``precision`` significant digits."""
    with localcontext() as ctx:
        ctx.prec = precision
        d = Decimal(x.numerator) / Decimal(x.denominator)
    return format(d, "f") if abs(d.adjusted()) < 15 else format(d, "e")


def rat_pair(x: Fraction) -> list[int]:
    return [x.numerator, x.denominator]


def pair_rat(pair: Iterable[int]) -> Fraction:
    num, den = pair
    return Fraction(int(num), int(den))


def to_machine(doc: dict[str, Any]) -> str:
    return json.dumps({"format_version": FORMAT_VERSION, **doc}, indent=2) + "\n"


def from_machine(text: str) -> dict[str, Any]:
    doc = json.loads(text)
    if doc.get("format_version") != FORMAT_VERSION:
        raise ProblemFileError(f"unsupported machine format version {doc.get('format_version')!r}")
    return doc
