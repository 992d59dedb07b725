"""Minimal-area computation for null-homotopic words.

area_search finds the least number d of factors in a product of conjugated
relators equal to a word, together with a checkable certificate
w = prod_i g_i r_i^{s_i} g_i^-1.  It runs iterative-deepening search over
splice moves (insert a cyclic conjugate of a relator or its inverse, freely
reduce) with a cap on intermediate word lengths.  A result is exact when the
value is stable while the cap escalates, or when the cap already covers the
worst case |w| + (d-1) * (longest relator).

area_bruteforce answers the same question by direct enumeration of products
of conjugated relators and shares no code with the search; it exists to
cross-check the search on small inputs.
"""

import json
from dataclasses import dataclass
from typing import Optional, Tuple

from . import _search
from .errors import (BudgetExceededError, NotNullHomotopicError,
                     UniverseMismatchError, ValidationError)
from .presentation import Presentation, presentation_digest
from .words import (Letter, Word, concat, empty_word, invert, parse_word,
                    print_word)


@dataclass(frozen=True)
class SearchConfig:
    """Budgets for area_search.

    max_intermediate_length None means "longest input dimension plus one
    relator length", escalated automatically by the exactness loop.
    """
    max_intermediate_length: Optional[int] = None
    max_area: int = 32
    state_budget: int = 500_000

    def __post_init__(self):
        if self.max_intermediate_length is not None:
            assert self.max_intermediate_length > 0
        assert self.max_area > 0 and self.state_budget > 0


@dataclass(frozen=True)
class AreaCertificate:
    """Explicit filling: steps of (conjugator, relator_index, sign), whose
    product conj·r^sign·conj^-1, taken in order, freely reduces to the word."""
    steps: Tuple[Tuple[Word, int, int], ...]
    claimed_area: int


def _check_universe(w, p):
    if w.names != p.generator_names:
        raise UniverseMismatchError(
            "word over %r does not live in presentation over %r"
            % (w.names, p.generator_names))


def verify_certificate(cert, w, p):
    """True iff the certificate is well formed and its product equals w."""
    _check_universe(w, p)
    if cert.claimed_area != len(cert.steps):
        return False
    total = empty_word(p.generator_names)
    for step in cert.steps:
        g, idx, sign = step
        if not (0 <= idx < len(p.relators)) or sign not in (1, -1):
            return False
        if g.names != p.generator_names:
            return False
        r = p.relators[idx] if sign == 1 else invert(p.relators[idx])
        total = concat(concat(concat(total, g), r), invert(g))
    return total == w


def certificate_to_json(cert, w, p, exact):
    obj = {
        "area": cert.claimed_area,
        "exact": bool(exact),
        "presentation": presentation_digest(p),
        "steps": [{"conjugator": print_word(g), "relator_index": idx,
                   "sign": sign} for g, idx, sign in cert.steps],
        "word": print_word(w),
    }
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def certificate_from_json(text, p):
    """Returns (cert, word, exact); raises ValidationError on mismatch."""
    obj = json.loads(text)
    if obj.get("presentation") != presentation_digest(p):
        raise ValidationError("certificate was issued for a different "
                              "presentation (hash mismatch)")
    names = p.generator_names
    steps = tuple((parse_word(s["conjugator"], names), s["relator_index"],
                   s["sign"]) for s in obj["steps"])
    cert = AreaCertificate(steps, obj["area"])
    w = parse_word(obj["word"], names)
    return cert, w, bool(obj["exact"])


def _build_certificate(w, p, path, eng):
    """Replay a move path and emit the filling it encodes.

    A splice of z = rot_k(r^s) at position pos of u removes the factor
    (u[:pos]·rot_prefix^-1)·r^{-s}·(...)^-1, so the certificate lists those
    factors in move order.
    """
    u = _search.encode_word(w)
    names = p.generator_names
    steps = []
    for pos, ri, k, sign in path:
        base = eng.rel_bytes[ri] if sign == 1 else _search.binvert(eng.rel_bytes[ri])
        z = base[k:] + base[:k]
        conj = _search.breduce(u[:pos] + _search.binvert(base[:k]))
        steps.append((_search.decode_word(conj, names), ri, -sign))
        u = _search.splice(u, pos, z)
    assert u == b""
    return AreaCertificate(tuple(steps), len(steps))


def _find_min(eng, root, cap, b_max, cfg):
    """Least-depth find up to b_max at a fixed cap.

    Returns (depth, path, complete); (None, None, complete) when nothing is
    found, complete=False as soon as one pass hits the state budget.
    """
    h0 = eng.h(root, b_max)
    for b in range(max(1, h0), b_max + 1):
        path, complete, _ = eng.search_pass(root, b, cap, cfg.state_budget)
        if path is not None:
            return len(path), path, True
        if not complete:
            return None, None, False
    return None, None, True


def area_search(w, p, cfg=None):
    """Returns (area, certificate, exact) for a null-homotopic word."""
    if cfg is None:
        cfg = SearchConfig()
    _check_universe(w, p)
    if len(w) == 0:
        return 0, AreaCertificate((), 0), True
    eng = _search.get_engine(p)
    root = _search.encode_word(w)
    L = eng.Lmax
    cap0 = cfg.max_intermediate_length
    if cap0 is None:
        cap0 = max(len(w), L) + L
    if cap0 < len(w):
        raise ValueError("max_intermediate_length %d < |w| = %d"
                         % (cap0, len(w)))

    v, path, complete = _find_min(eng, root, cap0, cfg.max_area, cfg)
    if v is None:
        if complete:
            raise NotNullHomotopicError(
                "no filling of %s with at most %d relators (word is not "
                "null-homotopic, or max_area is too small)"
                % (print_word(w), cfg.max_area))
        raise BudgetExceededError(
            "state budget %d exhausted before any filling of %s was found"
            % (cfg.state_budget, print_word(w)))

    cert = _build_certificate(w, p, path, eng)
    assert verify_certificate(cert, w, p)

    # exactness: escalate the length cap until the value is provably or
    # stably minimal; every escalation only needs to rule out depth v-1
    certified_cap = cap0
    stable = 0
    while True:
        if certified_cap >= len(w) + (v - 1) * L or stable >= 2:
            return v, cert, True
        nxt = certified_cap + L
        path2, complete2, _ = eng.search_pass(root, v - 1, nxt, cfg.state_budget)
        if path2 is not None:
            # a smaller filling exists at the larger cap; redo the find there
            v2, pmin, comp = _find_min(eng, root, nxt, len(path2), cfg)
            if v2 is None:
                v2, pmin, comp = len(path2), path2, False
            v, path = v2, pmin
            cert = _build_certificate(w, p, path, eng)
            assert verify_certificate(cert, w, p)
            if not comp:
                return v, cert, False
            certified_cap = nxt
            stable = 0
        elif complete2:
            certified_cap = nxt
            stable += 1
        else:
            return v, cert, False


# ---------------------------------------------------------------------------
# independent brute-force oracle

_bf_cache = {}


def _bf_entry(p, max_conj_len):
    key = (presentation_digest(p), max_conj_len)
    entry = _bf_cache.get(key)
    if entry is not None:
        return entry
    names = p.generator_names
    gens = [Word((Letter(i, s),), names)
            for i in range(len(names)) for s in (1, -1)]
    layer = [empty_word(names)]
    conjs = list(layer)
    for _ in range(max_conj_len):
        nxt = []
        for u in layer:
            for g in gens:
                v = concat(u, g)
                if len(v) == len(u) + 1:
                    nxt.append(v)
        conjs.extend(nxt)
        layer = nxt
    factors = []
    seen = set()
    for g in conjs:
        gi = invert(g)
        for r in p.relators:
            for t in (r, invert(r)):
                f = concat(concat(g, t), gi)
                if f not in seen:
                    seen.add(f)
                    factors.append(f)
    inv_factors = [invert(f) for f in factors]
    maxlen = max(len(f) for f in factors)
    pair_set = None
    if len(factors) ** 2 <= 4_000_000:
        pair_set = set()
        for f in factors:
            for g2 in factors:
                pair_set.add(concat(f, g2))
    entry = (factors, inv_factors, seen, maxlen, pair_set)
    _bf_cache[key] = entry
    return entry


def area_bruteforce(w, p, max_d, max_conj_len):
    """Least d <= max_d with w a product of d conjugated relators
    (conjugators of length <= max_conj_len), else None."""
    _check_universe(w, p)
    if len(w) == 0:
        return 0
    factors, inv_factors, fset, maxlen, pair_set = _bf_entry(p, max_conj_len)

    def probe(target, k):
        if len(target) > k * maxlen:
            return False
        if k == 1:
            return target in fset
        if k == 2 and pair_set is not None:
            return target in pair_set
        for fi in inv_factors:
            if probe(concat(fi, target), k - 1):
                return True
        return False

    for d in range(1, max_d + 1):
        if probe(w, d):
            return d
    return None


def power_commutator_lower_bound(w, p):
    """Lower bound on area in a presentation with relators x^a, y^b and a
    commutator of the two generators (any order).

    Counting argument: bin the x-letters of w by the running y-exponent mod b.
    A commutator insertion moves one unit between adjacent bins, an x^a
    insertion changes one bin by a, a y^b insertion leaves the profile alone;
    so mod a, only commutator insertions act, and clearing the profile needs
    at least its circular transport cost.  Power insertions are bounded below
    by the exponent sums.  Raises ValueError off this presentation shape.
    """
    _check_universe(w, p)
    if len(p.generator_names) != 2 or len(p.relators) != 3:
        raise ValueError("need exactly two generators and three relators")
    powers = {}
    comm = None
    for r in p.relators:
        gens = {lt.generator for lt in r.letters}
        if len(gens) == 1:
            powers[gens.pop()] = len(r)
        elif len(r) == 4 and sorted((lt.generator, lt.sign) for lt in r.letters) \
                == [(0, -1), (0, 1), (1, -1), (1, 1)]:
            comm = r
    if comm is None or set(powers) != {0, 1}:
        raise ValueError("relators are not powers plus a commutator")
    a, b = powers[0], powers[1]

    best = 0
    for xg, xa, yb in ((0, a, b), (1, b, a)):
        bins = [0] * yb
        height = 0
        sx = sy = 0
        for lt in w.letters:
            if lt.generator == xg:
                bins[height % yb] += lt.sign
                sx += lt.sign
            else:
                height += lt.sign
                sy += lt.sign
        if sx % xa or sy % yb:
            raise ValueError("word is not null-homotopic here "
                             "(exponent sums off)")
        prefix = []
        acc = 0
        for x in bins:
            acc = (acc - x) % xa
            prefix.append(acc)
        transport = min(
            sum(min(v, xa - v) for v in (((pj + t) % xa) for pj in prefix))
            for t in range(xa))
        bound = transport + abs(sx) // xa + abs(sy) // yb
        best = max(best, bound)
    return best
