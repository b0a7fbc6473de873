"""Built-in group corpus and the text group format."""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from .errors import ParseError
from .perm import (DEFAULT_ELEMENT_CAP, Group, alternating, cyclic, cyclic_extension, dihedral, direct_product,
                   from_cycles, generate, quaternion8, sl2, symmetric, wreath_regular)

_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> tuple[int, ...]:
    """1-indexed disjoint cycle notation to a 0-based image tuple."""
    body = text.replace(" ", "").replace(",", "")
    if _CYCLE.sub("", text).strip():
        raise ValueError(f"unexpected text outside cycles in {text!r}")
    if not body:
        raise ValueError("empty generator")
    cycles = []
    for m in _CYCLE.finditer(text):
        parts = m.group(1).replace(",", " ").split()
        try:
            cycles.append([int(x) - 1 for x in parts])
        except ValueError:
            raise ValueError(f"non-integer point in {m.group(0)!r}") from None
    return from_cycles(degree, cycles)


def parse_group(text: str, element_cap: int = DEFAULT_ELEMENT_CAP, name: str | None = None) -> Group:
    """Parse the ``degree N`` / ``gen (a b)(c d)`` format.

    Blank lines and ``#`` comments are ignored.
    """
    degree = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        word, _, rest = line.partition(" ")
        if word == "degree":
            if degree is not None:
                raise ParseError("degree given twice", lineno)
            try:
                degree = int(rest)
            except ValueError:
                raise ParseError(f"bad degree {rest.strip()!r}", lineno) from None
            if degree < 1:
                raise ParseError("degree must be positive", lineno)
        elif word == "gen":
            if degree is None:
                raise ParseError("gen before degree", lineno)
            try:
                gens.append(parse_cycles(rest.strip(), degree))
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
        else:
            raise ParseError(f"unknown directive {word!r}", lineno)
    if degree is None:
        raise ParseError("missing degree line")
    return generate(degree, gens, element_cap=element_cap, name=name)


def load_group(path, element_cap: int = DEFAULT_ELEMENT_CAP) -> Group:
    p = Path(path)
    return parse_group(p.read_text(encoding="utf-8"), element_cap=element_cap, name=p.stem)


def format_group(G: Group) -> str:
    from .perm import to_cycles
    lines = [f"degree {G.degree}"]
    lines += [f"gen {to_cycles(g)}" for g in G.generators]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    recipe: Callable[[], Group]
    order: int

    def build(self) -> Group:
        G = self.recipe()
        if G.order != self.order:
            raise AssertionError(f"{self.name}: built order {G.order}, expected {self.order}")
        G.name = self.name
        return G


def _elab(p: int) -> Group:
    return direct_product(cyclic(p), cyclic(p))


def _entries() -> list[CorpusEntry]:
    out = [CorpusEntry(f"C{n}", lambda n=n: cyclic(n), n) for n in range(1, 25)]
    out += [CorpusEntry(f"C{p}^2", lambda p=p: _elab(p), p * p) for p in (2, 3, 5)]
    out += [CorpusEntry(f"D{2 * n}", lambda n=n: dihedral(2 * n), 2 * n) for n in range(3, 13)]
    out += [
        CorpusEntry("Q8", quaternion8, 8),
        CorpusEntry("S3", lambda: symmetric(3), 6),
        CorpusEntry("S4", lambda: symmetric(4), 24),
        CorpusEntry("S5", lambda: symmetric(5), 120),
        CorpusEntry("A4", lambda: alternating(4), 12),
        CorpusEntry("A5", lambda: alternating(5), 60),
        CorpusEntry("SL(2,3)", lambda: sl2(3), 24),
        CorpusEntry("SL(2,5)", lambda: sl2(5), 120),
        CorpusEntry("C7:C3", lambda: cyclic_extension(7, 3, 2), 21),
        CorpusEntry("C13:C3", lambda: cyclic_extension(13, 3, 3), 39),
        CorpusEntry("C5:C4", lambda: cyclic_extension(5, 4, 2), 20),
        CorpusEntry("A4xC2", lambda: direct_product(alternating(4), cyclic(2)), 24),
        CorpusEntry("SL(2,5)xC3", lambda: direct_product(sl2(5), cyclic(3)), 360),
        CorpusEntry("C7:C3xC13:C3",
                    lambda: direct_product(cyclic_extension(7, 3, 2), cyclic_extension(13, 3, 3)), 819),
        CorpusEntry("C3wrC2", lambda: wreath_regular(cyclic(3), cyclic(2)), 18),
        # a few more shapes that exercise the classifiers
        CorpusEntry("C2^3", lambda: direct_product(_elab(2), cyclic(2)), 8),
        CorpusEntry("C4xC2", lambda: direct_product(cyclic(4), cyclic(2)), 8),
        CorpusEntry("Dic3", lambda: cyclic_extension(3, 4, 2), 12),
        CorpusEntry("M16", lambda: cyclic_extension(8, 2, 5), 16),
        CorpusEntry("C9:C3", lambda: cyclic_extension(9, 3, 4), 27),
        CorpusEntry("C3xS3", lambda: direct_product(cyclic(3), symmetric(3)), 18),
    ]
    return out


def builtin_corpus(max_order: int | None = None) -> list[CorpusEntry]:
    """Deterministic corpus, filtered to ``order <= max_order`` (inclusive)."""
    if max_order is not None and max_order < 1:
        raise ValueError("max_order must be at least 1")
    return [e for e in _entries() if max_order is None or e.order <= max_order]


def corpus_entry(name: str) -> CorpusEntry:
    for e in _entries():
        if e.name == name:
            return e
    raise KeyError(name)
