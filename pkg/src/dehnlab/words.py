"""Free-group word algebra.

Words are finite sequences of signed generator letters, stored always freely
reduced.  A word is meaningless without its generator universe, so every Word
carries the tuple of generator names it is written over, and operations refuse
to mix universes.  All operations are pure; Words are immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence, Tuple

from .errors import ParseError, UniverseMismatchError


class Letter(NamedTuple):
    generator: int  # 0-based index into the owning generator list
    sign: int       # +1 or -1


@dataclass(frozen=True)
class Word:
    """A freely reduced word over a fixed tuple of generator names.

    Construct via :func:`free_reduce` or :func:`parse_word`; the constructor
    itself insists its input already be reduced and valid.
    """

    letters: Tuple[Letter, ...]
    names: Tuple[str, ...]

    def __post_init__(self):
        n = len(self.names)
        prev = None
        for lt in self.letters:
            if not (0 <= lt.generator < n):
                raise ValueError(f"letter references generator {lt.generator} "
                                 f"outside universe of size {n}")
            if lt.sign not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {lt.sign}")
            if prev is not None and prev.generator == lt.generator and prev.sign == -lt.sign:
                raise ValueError("Word() requires freely reduced input; "
                                 "use free_reduce()")
            prev = lt

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __mul__(self, other):
        return concat(self, other)

    def inverse(self):
        return invert(self)

    def __str__(self):
        return print_word(self)

    def __repr__(self):
        return f"Word({print_word(self)!r}, names={self.names!r})"


def _check_same_universe(u, v):
    if u.names != v.names:
        raise UniverseMismatchError(
            f"words over {u.names} and {v.names} cannot be combined")


def empty_word(names):
    return Word((), tuple(names))


def free_reduce(raw, names):
    """Freely reduce a raw letter sequence into a Word.

    Adjacent mutually inverse letters cancel, cascading, until no pair
    remains; the result is the unique reduced form.
    """
    names = tuple(names)
    stack = []
    for lt in raw:
        lt = Letter(lt[0], lt[1])
        if stack and stack[-1].generator == lt.generator and stack[-1].sign == -lt.sign:
            stack.pop()
        else:
            stack.append(lt)
    return Word(tuple(stack), names)


def invert(w):
    """Reverse the word and flip every sign."""
    return Word(tuple(Letter(lt.generator, -lt.sign) for lt in reversed(w.letters)),
                w.names)


def concat(u, v):
    """Freely reduced juxtaposition of two words over the same universe."""
    _check_same_universe(u, v)
    return free_reduce(u.letters + v.letters, u.names)


def cyclic_reduce(w):
    """Split ``w`` into ``(core, conjugator)`` with w = conjugator * core * conjugator^-1.

    The core is cyclically reduced: its first and last letters are not
    mutually inverse.
    """
    letters = w.letters
    i, j = 0, len(letters)
    while j - i >= 2:
        a, b = letters[i], letters[j - 1]
        if a.generator == b.generator and a.sign == -b.sign:
            i += 1
            j -= 1
        else:
            break
    return Word(letters[i:j], w.names), Word(letters[:i], w.names)


def cyclic_conjugates(w):
    """The set of all rotations of a cyclically reduced word.

    The cardinality divides len(w); it is len(w) exactly unless the word is a
    proper power.  The empty word has itself as its only rotation.
    """
    letters = w.letters
    out = set()
    if not letters:
        return {w}
    for k in range(len(letters)):
        out.add(Word(letters[k:] + letters[:k], w.names))
    return out


def lex_key(w):
    """Sort key giving the length-then-lexicographic order used throughout:
    generator index ascending, positive sign before negative."""
    return (len(w.letters),
            tuple((lt.generator, 0 if lt.sign > 0 else 1) for lt in w.letters))


# ---------------------------------------------------------------------------
# parsing and printing
#
# grammar:  word := atom*          atoms juxtaposed, whitespace optional
#           atom := base ['^' ['-'|'+'] digits]
#           base := name | '(' word ')'
# A lone uppercase character denotes the inverse of its lowercase generator
# when the uppercase spelling itself is not a declared name.

def parse_word(text, names):
    names = tuple(names)
    index = {name: i for i, name in enumerate(names)}
    by_length = sorted(names, key=len, reverse=True)

    def err(msg, pos):
        raise ParseError(msg, col=pos + 1)

    def skip_ws(i):
        while i < len(text) and (text[i].isspace() or text[i] == "·"):
            i += 1
        return i

    def parse_exponent(i):
        # caller has consumed '^'
        j = i
        if j < len(text) and text[j] in "+-":
            j += 1
        k = j
        while k < len(text) and text[k].isdigit():
            k += 1
        if k == j:
            err("malformed exponent", i)
        return int(text[i:k]), k

    def parse_atoms(i, closing):
        letters = []
        while True:
            i = skip_ws(i)
            if i >= len(text):
                if closing:
                    err(f"missing '{closing}'", i)
                break
            ch = text[i]
            if closing and ch == closing:
                i += 1
                break
            if ch == "(":
                inner, i = parse_atoms(i + 1, ")")
            elif ch == ")":
                err("unbalanced ')'", i)
            else:
                inner, i = parse_name(i)
            i = skip_ws(i)
            if i < len(text) and text[i] == "^":
                exp, i = parse_exponent(i + 1)
            else:
                exp = 1
            if exp < 0:
                inner = [Letter(g, -s) for g, s in reversed(inner)]
                exp = -exp
            letters.extend(inner * exp)
        return letters, i

    def parse_name(i):
        for name in by_length:
            if text.startswith(name, i):
                return [Letter(index[name], 1)], i + len(name)
        ch = text[i]
        if ch.isalpha() and ch.isupper() and ch.lower() in index:
            return [Letter(index[ch.lower()], -1)], i + 1
        err(f"unknown generator at {ch!r}", i)

    letters, _ = parse_atoms(0, None)
    return free_reduce(letters, names)


def print_word(w):
    """Exponent-collapsed text form; round-trips through parse_word.
    The empty word prints as the empty string."""
    parts = []
    letters = w.letters
    i = 0
    while i < len(letters):
        g, s = letters[i]
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        e = (j - i) * s
        name = w.names[g]
        parts.append(name if e == 1 else f"{name}^{e}")
        i = j
    return " ".join(parts)
