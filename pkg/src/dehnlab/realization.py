"""Coset enumeration and concrete realizations of finite presented groups.

The enumerator is a deterministic HLT-style Todd-Coxeter over the trivial
subgroup: relators are scanned in index order, cosets in creation order, and
coincidences always keep the smaller coset id, so the same presentation always
yields the same table.  The result is the regular permutation representation,
which is what decides null-homotopy and element orders downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Tuple

from .errors import BudgetExceededError, UniverseMismatchError
from .presentation import normalize_relators
from .words import Letter, Word


def _columns(word, ngens):
    # column index for letter (g, +1) is 2g, for (g, -1) it is 2g+1
    return [2 * lt.generator + (0 if lt.sign > 0 else 1) for lt in word.letters]


def _invcol(x):
    return x ^ 1


class _Enumerator:
    def __init__(self, ngens, max_cosets):
        self.ngens = ngens
        self.max_cosets = max_cosets
        self.table = [[None] * (2 * ngens)]
        self.p = [0]           # union-find parent; p[c] == c iff c is live
        self.live = 1
        self.queue = []

    def rep(self, c):
        while self.p[c] != c:
            self.p[c] = self.p[self.p[c]]
            c = self.p[c]
        return c

    def define(self, alpha, x):
        if self.live + 1 > self.max_cosets:
            raise BudgetExceededError(
                f"coset enumeration exceeded {self.max_cosets} live cosets "
                "(group too large or infinite)")
        beta = len(self.table)
        self.table.append([None] * (2 * self.ngens))
        self.p.append(beta)
        self.live += 1
        self.table[alpha][x] = beta
        self.table[beta][_invcol(x)] = alpha
        return beta

    def coincide(self, a, b):
        self.queue.append((a, b))
        while self.queue:
            a, b = self.queue.pop(0)
            a, b = self.rep(a), self.rep(b)
            if a == b:
                continue
            mu, nu = (a, b) if a < b else (b, a)
            self.p[nu] = mu
            self.live -= 1
            row = self.table[nu]
            for x in range(2 * self.ngens):
                delta = row[x]
                if delta is None:
                    continue
                row[x] = None
                drow = self.table[delta]
                if drow[_invcol(x)] == nu:
                    drow[_invcol(x)] = None
                delta = self.rep(delta)
                mu = self.rep(mu)
                existing = self.table[mu][x]
                if existing is not None:
                    self.queue.append((delta, self.rep(existing)))
                else:
                    self.table[mu][x] = delta
                    back = self.table[delta][_invcol(x)]
                    if back is None:
                        self.table[delta][_invcol(x)] = mu
                    else:
                        self.queue.append((self.rep(back), mu))

    def scan_and_fill(self, alpha, cols):
        f, i = alpha, 0
        b, j = alpha, len(cols) - 1
        while True:
            while i <= j and self.table[f][cols[i]] is not None:
                f = self.table[f][cols[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincide(f, b)
                return
            while j >= i and self.table[b][_invcol(cols[j])] is not None:
                b = self.table[b][_invcol(cols[j])]
                j -= 1
            if j < i:
                self.coincide(f, b)
                return
            if j == i:
                self.table[f][cols[i]] = b
                back = self.table[b][_invcol(cols[i])]
                if back is None:
                    self.table[b][_invcol(cols[i])] = f
                else:
                    self.coincide(self.rep(back), f)
                return
            self.define(f, cols[i])


@dataclass(frozen=True)
class FiniteRealization:
    """Regular permutation representation of a finite presented group.

    ``generator_maps[g][c]`` is the coset reached from ``c`` by generator g;
    element ids are coset ids, with the identity at 0.
    """

    order: int
    generator_maps: Tuple[Tuple[int, ...], ...]
    generator_names: Tuple[str, ...]
    identity_id: int = 0

    @cached_property
    def inverse_maps(self):
        out = []
        for perm in self.generator_maps:
            inv = [0] * self.order
            for src, dst in enumerate(perm):
                inv[dst] = src
            out.append(tuple(inv))
        return tuple(out)

    @cached_property
    def _schreier(self):
        """A representative letter-tuple for every element, found by BFS from
        the identity with edges in (generator, +1 then -1) order."""
        reps = {0: ()}
        frontier = [0]
        while frontier:
            nxt = []
            for c in frontier:
                base = reps[c]
                for g in range(len(self.generator_maps)):
                    for sign, perm in ((1, self.generator_maps[g]),
                                       (-1, self.inverse_maps[g])):
                        d = perm[c]
                        if d not in reps:
                            reps[d] = base + (Letter(g, sign),)
                            nxt.append(d)
            frontier = nxt
        return tuple(reps[c] for c in range(self.order))


def coset_enumerate(p, max_cosets):
    """Todd-Coxeter over the trivial subgroup.

    Returns a FiniteRealization with the exact group order, or raises
    BudgetExceededError once more than ``max_cosets`` cosets are live at the
    same time (group too large, or infinite — the caller cannot tell which).
    """
    p = normalize_relators(p)
    ngens = len(p.generator_names)
    relcols = [_columns(r, ngens) for r in p.relators]
    e = _Enumerator(ngens, max_cosets)
    alpha = 0
    while alpha < len(e.table):
        if e.rep(alpha) != alpha:
            alpha += 1
            continue
        for cols in relcols:
            e.scan_and_fill(alpha, cols)
            if e.rep(alpha) != alpha:
                break
        if e.rep(alpha) == alpha:
            for x in range(2 * ngens):
                if e.table[alpha][x] is None:
                    e.define(alpha, x)
        alpha += 1

    live = [c for c in range(len(e.table)) if e.rep(c) == c]
    renum = {c: i for i, c in enumerate(live)}
    maps = []
    for g in range(ngens):
        perm = tuple(renum[e.rep(e.table[c][2 * g])] for c in live)
        maps.append(perm)
    r = FiniteRealization(order=len(live), generator_maps=tuple(maps),
                          generator_names=p.generator_names)
    for perm in r.generator_maps:
        assert sorted(perm) == list(range(r.order)), "generator map not a bijection"
    return r


def evaluate(w, r):
    """Element id of the word: image of the identity under its permutation."""
    if w.names != r.generator_names:
        raise UniverseMismatchError(
            f"word over {w.names} evaluated in realization over {r.generator_names}")
    c = r.identity_id
    for g, sign in w.letters:
        perm = r.generator_maps[g] if sign > 0 else r.inverse_maps[g]
        c = perm[c]
    return c


def is_null_homotopic(w, r):
    return evaluate(w, r) == r.identity_id


def _apply_letters(letters, r, c):
    for g, sign in letters:
        perm = r.generator_maps[g] if sign > 0 else r.inverse_maps[g]
        c = perm[c]
    return c


def element_order(eid, r):
    """Least k >= 1 with the element's k-th power trivial; divides the order."""
    if not (0 <= eid < r.order):
        raise ValueError(f"element id {eid} out of range")
    rep = r._schreier[eid]
    c = r.identity_id
    k = 0
    while True:
        c = _apply_letters(rep, r, c)
        k += 1
        if c == r.identity_id:
            return k


def element_word(eid, r):
    """A Word representing the element (a Schreier representative)."""
    return Word(r._schreier[eid], r.generator_names)


def realization_to_csv(r):
    """Permutation tables as CSV, one row per generator."""
    header = "generator," + ",".join(str(i) for i in range(r.order))
    lines = [header]
    for name, perm in zip(r.generator_names, r.generator_maps):
        lines.append(name + "," + ",".join(str(x) for x in perm))
    return "\n".join(lines) + "\n"
