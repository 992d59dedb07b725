"""Finite presentations <S | R>: parsing, validation, relator normalization.

The file format is plain UTF-8 text:

    # comment
    gens: a b
    rels: a^5, b^3, a b = b a

The first data line declares generator names; later ``rels:`` lines list
relators, comma separated.  An item is either a word or ``u = v`` (converted
to the relator u*v^-1).  Names match [a-zA-Z][a-zA-Z0-9_]*.
"""

from __future__ import annotations

import hashlib
import re
import warnings
from dataclasses import dataclass
from typing import Tuple

from .errors import ParseError
from .words import Word, concat, cyclic_conjugates, cyclic_reduce, invert, parse_word, print_word

_NAME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class Presentation:
    """Ordered generator names plus an ordered, indexed tuple of relators.

    Every relator is nonempty and freely reduced.  Cyclic reduction and
    conjugate/inverse deduplication are applied by :func:`normalize_relators`,
    not by the constructor, so that a presentation parsed from text keeps its
    author's relators verbatim until normalization is requested.
    """

    generator_names: Tuple[str, ...]
    relators: Tuple[Word, ...]

    def __post_init__(self):
        seen = set()
        for name in self.generator_names:
            if not _NAME_RE.match(name):
                raise ParseError(f"bad generator name {name!r}")
            if name in seen:
                raise ParseError(f"duplicate generator name {name!r}")
            seen.add(name)
        for i, r in enumerate(self.relators):
            if r.names != self.generator_names:
                raise ParseError(f"relator {i} is over a different universe")
            if len(r) == 0:
                raise ParseError(f"relator {i} is empty")

    def __str__(self):
        return presentation_to_text(self)


def presentation_to_text(p):
    lines = ["gens: " + " ".join(p.generator_names)]
    if p.relators:
        lines.append("rels: " + ", ".join(print_word(r) for r in p.relators))
    return "\n".join(lines) + "\n"


def presentation_digest(p):
    """Stable short hash of the canonical text form; used to tie serialized
    certificates to the presentation they were computed against."""
    return hashlib.sha256(presentation_to_text(p).encode("utf-8")).hexdigest()[:16]


def parse_presentation(text):
    """Parse the file format above into a (pre-normalization) Presentation.

    Relators that reduce to the empty word are dropped with a warning.
    Syntax problems raise ParseError with line/column information.
    """
    names = None
    relators = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if names is None:
            if not line.startswith("gens:"):
                raise ParseError("expected 'gens:' line", line=lineno, col=1)
            names = tuple(line[len("gens:"):].replace(",", " ").split())
            if not names:
                raise ParseError("no generators declared", line=lineno, col=1)
            for name in names:
                if not _NAME_RE.match(name):
                    raise ParseError(f"bad generator name {name!r}", line=lineno,
                                     col=raw.index(name) + 1)
            seen = set()
            for name in names:
                if name in seen:
                    raise ParseError(f"duplicate generator name {name!r}",
                                     line=lineno, col=1)
                seen.add(name)
            continue
        if not line.startswith("rels:"):
            raise ParseError("expected 'rels:' line", line=lineno, col=1)
        for item in line[len("rels:"):].split(","):
            item = item.strip()
            if not item:
                continue
            try:
                if "=" in item:
                    lhs, rhs = item.split("=", 1)
                    word = concat(parse_word(lhs, names),
                                  invert(parse_word(rhs, names)))
                else:
                    word = parse_word(item, names)
            except ParseError as e:
                raise ParseError(f"in relator {item!r}: {e}", line=lineno) from None
            if len(word) == 0:
                warnings.warn(f"relator {item!r} reduces to the empty word; dropped")
                continue
            relators.append(word)
    if names is None:
        raise ParseError("no 'gens:' line found", line=1, col=1)
    return Presentation(names, tuple(relators))


def normalize_relators(p):
    """Cyclically reduce every relator, then drop any relator that is a cyclic
    conjugate of an earlier survivor or of an earlier survivor's inverse.
    Survivor order is preserved.  Idempotent."""
    kept = []
    seen = set()
    for r in p.relators:
        core, _ = cyclic_reduce(r)
        if core in seen:
            continue
        kept.append(core)
        for rot in cyclic_conjugates(core):
            seen.add(rot)
        for rot in cyclic_conjugates(invert(core)):
            seen.add(rot)
    return Presentation(p.generator_names, tuple(kept))
