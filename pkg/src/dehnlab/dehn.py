"""Dehn function tables: max filling area over null words of bounded length.

Words are enumerated in length-then-lexicographic order (generator order as
declared, positive letter before negative) by walking the free-group ball and
tracking the group element of each reduced word through a finite realization.

Area is invariant under cyclic rotation and inversion (conjugate a filling /
reverse and flip its steps), so areas are computed once per rotation+inversion
class of the cyclic core and memoized; the witness recorded for a table entry
is still the first enumerated word attaining the maximum.
"""

import json
import math
from dataclasses import dataclass
from typing import Optional, Tuple

from ._search import binvert, encode_word, decode_word, _INV
from .area import SearchConfig, area_search
from .errors import InsufficientDataError, UniverseMismatchError
from .presentation import presentation_digest
from .realization import coset_enumerate
from .words import Word, print_word


@dataclass(frozen=True)
class DehnEntry:
    delta: int
    witness: Optional[Word]
    witness_exact: bool
    # true when some enumerated word's area was only an upper bound, so delta
    # itself is only known to be a lower bound on the true supremum
    lower_bound_only: bool = False
    member: Optional[str] = None


@dataclass(frozen=True)
class DehnTable:
    identifier: str
    entries: Tuple[Tuple[int, DehnEntry], ...]

    def delta(self, n):
        return dict(self.entries)[n].delta

    def entry(self, n):
        return dict(self.entries)[n]


@dataclass(frozen=True)
class GrowthClass:
    label: str  # linear | quadratic | exponential | inconclusive
    fit_error: Tuple[Tuple[str, float], ...]


def enumerate_null_words(p, r, n):
    """Yield every reduced nonempty word of length <= n that is trivial in the
    realization, exactly once, in length-then-lex order."""
    if r.generator_names != p.generator_names:
        raise UniverseMismatchError("realization does not match presentation")
    names = p.generator_names
    letters = []
    for g in range(len(names)):
        letters.append((2 * g + 1, r.generator_maps[g]))
        letters.append((2 * g + 2, r.inverse_maps[g]))
    ident = r.identity_id
    frontier = [(b"", ident)]
    for _ in range(n):
        nxt = []
        for word, elem in frontier:
            last = word[-1] if word else 0
            for byte, amap in letters:
                if byte == _INV[last]:
                    continue
                nxt.append((word + bytes((byte,)), amap[elem]))
        for word, elem in nxt:
            if elem == ident:
                yield decode_word(word, names)
        frontier = nxt


def _cyclic_core(b):
    i, j = 0, len(b)
    while j - i >= 2 and b[i] == _INV[b[j - 1]]:
        i += 1
        j -= 1
    return b[i:j]


def _class_key(b):
    """Canonical key of the rotation+inversion class of the cyclic core."""
    core = _cyclic_core(b)
    best = core
    for base in (core, binvert(core)):
        for k in range(len(base)):
            rot = base[k:] + base[:k]
            if rot < best:
                best = rot
    return best


class _AreaMemo:
    """Area per rotation+inversion class; searches run on the class key word."""

    def __init__(self, p, cfg):
        self.p = p
        self.cfg = cfg
        self.cache = {}

    def area(self, w):
        key = _class_key(encode_word(w))
        hit = self.cache.get(key)
        if hit is None:
            rep = decode_word(key, self.p.generator_names)
            value, _, exact = area_search(rep, self.p, self.cfg)
            hit = (value, exact)
            self.cache[key] = hit
        return hit


def dehn_function(p, n_max, cfg=None, max_cosets=100_000):
    """Table of delta(n) = max area over null words of length <= n, 0 when no
    null word that short exists."""
    if cfg is None:
        cfg = SearchConfig()
    r = coset_enumerate(p, max_cosets)
    memo = _AreaMemo(p, cfg)
    entries = []
    delta = 0
    witness = None
    witness_exact = True
    any_inexact = False
    stream = enumerate_null_words(p, r, n_max)
    buffered = []
    for w in stream:
        buffered.append(w)
    pos = 0
    for n in range(1, n_max + 1):
        while pos < len(buffered) and len(buffered[pos]) <= n:
            w = buffered[pos]
            pos += 1
            value, exact = memo.area(w)
            if not exact:
                any_inexact = True
            if value > delta:
                delta = value
                witness = w
                witness_exact = exact
        entries.append((n, DehnEntry(delta, witness, witness_exact,
                                     lower_bound_only=any_inexact)))
    return DehnTable(presentation_digest(p), tuple(entries))


def _member_table_job(job):
    """Picklable worker: member Dehn table for a registered family."""
    name, prm, n_max, cfg, max_cosets = job
    from .families import REGISTRY
    return dehn_function(REGISTRY[name].build(prm), n_max, cfg, max_cosets)


def family_dehn_function(f, n_max, cfg=None, max_cosets=100_000, pmap=None):
    """Pointwise max of member tables over the family's relevant members,
    recording which member attains each value.

    pmap, when given, must behave like map over _member_table_job inputs
    (e.g. a process pool's map); it requires f to be in the registry.  The
    fold over member tables is ordered either way, so output does not depend
    on the degree of parallelism.
    """
    if cfg is None:
        cfg = SearchConfig()
    params = list(f.relevance_bound(n_max))
    if pmap is None:
        results = [dehn_function(f.build(prm), n_max, cfg, max_cosets)
                   for prm in params]
    else:
        jobs = [(f.name, prm, n_max, cfg, max_cosets) for prm in params]
        results = list(pmap(_member_table_job, jobs))
    tables = dict(zip(params, results))
    entries = []
    for n in range(1, n_max + 1):
        relevant = list(f.relevance_bound(n))
        best = DehnEntry(0, None, True, member=None)
        flagged = False
        for prm in relevant:
            e = tables[prm].entry(n)
            flagged = flagged or e.lower_bound_only
            if e.delta > best.delta:
                best = DehnEntry(e.delta, e.witness, e.witness_exact,
                                 member=_param_label(prm))
        if flagged:
            best = DehnEntry(best.delta, best.witness, best.witness_exact,
                             True, best.member)
        entries.append((n, best))
    return DehnTable(f.name, tuple(entries))


def _param_label(prm):
    if isinstance(prm, tuple):
        return ",".join(str(x) for x in prm)
    return str(prm)


def classify_growth(t):
    """Heuristic best fit of a*n, a*n^2, a*c^n to the table's certified
    nonzero entries; inconclusive when the two best fits are within 20%."""
    pts = [(n, e.delta) for n, e in t.entries
           if e.delta > 0 and e.witness_exact and not e.lower_bound_only]
    if len(pts) < 5:
        raise InsufficientDataError(
            "growth fit needs >= 5 certified nonzero entries, have %d"
            % len(pts))
    xs = [n for n, _ in pts]
    ys = [d for _, d in pts]
    norm = math.sqrt(sum(y * y for y in ys))

    def rel_err(model):
        num = sum((model(x) - y) ** 2 for x, y in pts)
        return math.sqrt(num) / norm

    errors = {}
    for label, feat in (("linear", lambda x: x), ("quadratic", lambda x: x * x)):
        s_fy = sum(feat(x) * y for x, y in pts)
        s_ff = sum(feat(x) ** 2 for x in xs)
        a = s_fy / s_ff
        errors[label] = rel_err(lambda x, a=a, feat=feat: a * feat(x))
    best_exp = None
    c = 1.01
    while c <= 4.0:
        s_fy = sum((c ** x) * y for x, y in pts)
        s_ff = sum((c ** x) ** 2 for x in xs)
        a = s_fy / s_ff
        e = rel_err(lambda x, a=a, c=c: a * c ** x)
        if best_exp is None or e < best_exp:
            best_exp = e
        c = round(c + 0.01, 2)
    errors["exponential"] = best_exp

    ranked = sorted(errors.items(), key=lambda kv: (kv[1], kv[0]))
    e1, e2 = ranked[0][1], ranked[1][1]
    label = ranked[0][0]
    if e1 > 0 and (e2 - e1) / e1 < 0.20:
        label = "inconclusive"
    return GrowthClass(label, tuple(sorted(errors.items())))


def dehn_table_to_csv(t):
    has_member = any(e.member is not None for _, e in t.entries)
    header = "n,delta,witness,exact" + (",member" if has_member else "")
    lines = [header]
    for n, e in t.entries:
        row = [str(n), str(e.delta),
               print_word(e.witness) if e.witness is not None else "",
               "true" if (e.witness_exact and not e.lower_bound_only) else "false"]
        if has_member:
            row.append(e.member or "")
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def dehn_table_to_json(t):
    obj = {
        "identifier": t.identifier,
        "entries": {
            str(n): {
                "delta": e.delta,
                "witness": print_word(e.witness) if e.witness is not None else None,
                "exact": bool(e.witness_exact and not e.lower_bound_only),
                **({"member": e.member} if e.member is not None else {}),
            }
            for n, e in t.entries
        },
    }
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
