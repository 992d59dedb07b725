"""Internal minimal-filling search engine.

States are freely reduced words encoded as bytes: generator g appears as byte
2g+1 when positive and 2g+2 when negative, so a letter's inverse differs by 1
and the empty state is b"".  One move inserts a rotation of a relator or of a
relator's inverse at some position and freely reduces.  A word's area is the
length of a shortest move path from it to the empty state.

The driver is iterative-deepening depth-first search in a fixed move order
(position, then relator index, rotation offset, sign with +1 first), with
state deduplication keyed on the reduced bytes, a hard cap on intermediate
lengths, and admissible lower-bound pruning.  The first solution found at the
minimal depth is therefore the lexicographically least minimal move sequence.

Lower bounds (both count forced moves, so pruning never changes results):

* exponent-sum bound: a filling of size d gives signed relator multiplicities
  k_r with sum_r k_r*sigma(r) = -sigma(u) and sum |k_r| <= d; the minimal L1
  norm of a solution is found by lazy breadth-first levels over the exponent
  lattice.  No solution at all means the state is not null-homotopic and the
  whole subtree is pruned.

* height-profile transport bound, for presentations whose relators are exactly
  {x^p, y^q, a rotation of a two-generator commutator}: bin x-letters by the
  running y-exponent mod q.  Commutator insertions move one unit between
  adjacent bins, x^p insertions vanish mod p, y^q insertions do not touch the
  profile, so the number of commutator moves is at least the circular
  transport cost of the profile mod p; |sigma_x|/p and |sigma_y|/q likewise
  bound the power moves.  Both orientations are taken.
"""

from __future__ import annotations

from .words import Letter, Word

INF = 10 ** 9

_INV = tuple(0 if x == 0 else (x + 1 if x % 2 else x - 1) for x in range(256))


def encode_word(w):
    return bytes(2 * g + (1 if s > 0 else 2) for g, s in w.letters)


def decode_word(b, names):
    return Word(tuple(Letter((x - 1) // 2, 1 if x % 2 else -1) for x in b),
                tuple(names))


def breduce(seq):
    stack = []
    for x in seq:
        if stack and stack[-1] == _INV[x]:
            stack.pop()
        else:
            stack.append(x)
    return bytes(stack)


def binvert(b):
    return bytes(_INV[x] for x in reversed(b))


def splice(u, pos, z):
    """Insert reduced z into reduced u at pos and freely reduce (O(cancelled))."""
    i, j, lz = pos, 0, len(z)
    inv = _INV
    while i > 0 and j < lz and u[i - 1] == inv[z[j]]:
        i -= 1
        j += 1
    left = u[:i] + z[j:]
    k, m, lu = len(left), pos, len(u)
    while k > 0 and m < lu and left[k - 1] == inv[u[m]]:
        k -= 1
        m += 1
    return left[:k] + u[m:]


def _sigma(b, ngens):
    v = [0] * ngens
    for x in b:
        v[(x - 1) // 2] += 1 if x % 2 else -1
    return tuple(v)


def _circular_transport_cost(mu, p):
    """min over integer circular flows f with f_j - f_{j-1} = mu_j (mod p) of
    sum |f_j|; equivalently min_t sum_j minabs((P_j + t) mod p)."""
    prefix = []
    acc = 0
    for x in mu:
        acc = (acc + x) % p
        prefix.append(acc)
    best = INF
    for t in range(p):
        tot = 0
        for pj in prefix:
            v = (pj + t) % p
            tot += v if v <= p - v else p - v
            if tot >= best:
                break
        if tot < best:
            best = tot
    return best


class Engine:
    """Per-presentation search context; reusable across words and budgets."""

    def __init__(self, presentation):
        self.names = presentation.generator_names
        self.ngens = len(self.names)
        self.rel_bytes = tuple(encode_word(r) for r in presentation.relators)
        if not self.rel_bytes:
            raise ValueError("presentation has no relators")
        self.Lmax = max(len(r) for r in self.rel_bytes)

        # insertion moves in (relator index, rotation, sign) order, rotations
        # deduplicated per (relator, sign) keeping the least offset
        moves = []
        for ri, r in enumerate(self.rel_bytes):
            for sign, base in ((1, r), (-1, binvert(r))):
                seen = set()
                for k in range(len(base)):
                    z = base[k:] + base[:k]
                    if z in seen:
                        continue
                    seen.add(z)
                    moves.append((z, ri, k, sign))
        moves.sort(key=lambda m: (m[1], m[2], 0 if m[3] > 0 else 1))
        self.moves = tuple(moves)

        # last-move index: a state u has the empty word as a child via
        # insertion z at pos iff (u[pos:]+u[:pos])^-1 == z
        goal = {}
        for z, ri, k, sign in self.moves:
            goal.setdefault(z, (ri, k, sign))
        self.goal = goal
        self.goal_lengths = frozenset(len(z) for z in goal)

        # exponent-sum data, lazily grown breadth-first levels
        self.rel_sigma = tuple(_sigma(r, self.ngens) for r in self.rel_bytes)
        zero = tuple([0] * self.ngens)
        self._sig_dist = {zero: 0}
        self._sig_frontier = [zero]
        self._sig_level = 0

        self._transport = self._detect_transport(presentation)

    # -- exponent-sum bound -------------------------------------------------

    def _sig_extend(self):
        nxt = []
        dist = self._sig_dist
        level = self._sig_level + 1
        for v in self._sig_frontier:
            for s in self.rel_sigma:
                for mul in (1, -1):
                    w = tuple(a + mul * b for a, b in zip(v, s))
                    if w not in dist:
                        dist[w] = level
                        nxt.append(w)
        self._sig_frontier = nxt
        self._sig_level = level

    def h_sigma(self, target, cap):
        """Least number of signed relator exponent vectors summing to target,
        or cap+1 if it exceeds cap (or no solution exists at all)."""
        dist = self._sig_dist
        while target not in dist and self._sig_level <= cap and self._sig_frontier:
            self._sig_extend()
        d = dist.get(target)
        if d is None or d > cap:
            return cap + 1
        return d

    # -- transport bound ----------------------------------------------------

    def _detect_transport(self, presentation):
        if self.ngens != 2 or len(self.rel_bytes) != 3:
            return None
        powers = {}
        comm = None
        for r in presentation.relators:
            gens = {lt.generator for lt in r.letters}
            if len(gens) == 1:
                g = gens.pop()
                signs = {lt.sign for lt in r.letters}
                if len(signs) == 1 and g not in powers:
                    powers[g] = len(r)
                    continue
                return None
            if len(r) == 4 and sorted((lt.generator, lt.sign) for lt in r.letters) \
                    == [(0, -1), (0, 1), (1, -1), (1, 1)] and comm is None:
                comm = r
                continue
            return None
        if comm is None or set(powers) != {0, 1}:
            return None
        return (powers[0], powers[1])

    def _transport_bound(self, u, cap):
        p, q = self._transport
        best = 0
        for xg, xp, yq in ((1, p, q), (3, q, p)):
            # letters of byte-generator xg binned by the other's height mod yq
            nu = [0] * yq
            h = 0
            sx = sy = 0
            for byte in u:
                s = 1 if byte % 2 else -1
                if byte == xg or byte == xg + 1:
                    nu[h % yq] += s
                    sx += s
                else:
                    h += s
                    sy += s
            if sx % xp or sy % yq:
                return cap + 1  # not null-homotopic at all
            mu = [(-x) % xp for x in nu]
            bound = (_circular_transport_cost(mu, xp)
                     + abs(sx) // xp + abs(sy) // yq)
            if bound > best:
                best = bound
        return best

    def h(self, u, cap):
        """Admissible lower bound on moves-to-empty, clamped to cap+1."""
        b = self.h_sigma(tuple(-x for x in _sigma(u, self.ngens)), cap)
        if b > cap:
            return b
        if self._transport is not None:
            t = self._transport_bound(u, cap)
            if t > b:
                b = t
        return b if b <= cap else cap + 1

    # -- bounded search pass ------------------------------------------------

    def search_pass(self, root, budget, cap, state_budget):
        """Depth-first search for a move path root -> empty of length <= budget,
        intermediate lengths <= cap, in lex move order.

        Returns (path or None, complete, expanded) where path is a list of
        (pos, relator_index, rotation, sign) and complete means the absence of
        a path is definitive for this budget and cap.
        """
        if root == b"":
            return [], True, 0
        if budget <= 0:
            return None, True, 0
        moves = self.moves
        goal = self.goal
        goal_lengths = self.goal_lengths
        h = self.h
        seen = {root: 0}
        sol = []
        state = {"expanded": 0, "incomplete": False}

        def last_move(u):
            """Least (pos, move) whose splice empties u, if any."""
            if len(u) not in goal_lengths:
                return None
            for pos in range(len(u)):
                mv = goal.get(binvert(u[pos:] + u[:pos]))
                if mv is not None:
                    return (pos, mv[0], mv[1], mv[2])
            return None

        def dfs(u, g):
            # invariant: u nonempty, rem = budget - g >= 2
            state["expanded"] += 1
            if state["expanded"] > state_budget:
                state["incomplete"] = True
                return False
            child_rem = budget - g - 1
            gv = g + 1
            for pos in range(len(u) + 1):
                for z, ri, k, sign in moves:
                    v = splice(u, pos, z)
                    if not v:
                        sol.append((pos, ri, k, sign))
                        return True
                    if len(v) > cap:
                        continue
                    if child_rem == 1:
                        # leaf level: goal-test only, keep it out of `seen`
                        mv = last_move(v)
                        if mv is not None:
                            sol.append(mv)
                            sol.append((pos, ri, k, sign))
                            return True
                        continue
                    if h(v, child_rem) > child_rem:
                        continue
                    if seen.get(v, INF) <= gv:
                        continue
                    seen[v] = gv
                    if dfs(v, gv):
                        sol.append((pos, ri, k, sign))
                        return True
                    if state["incomplete"]:
                        return False
            return False

        if h(root, budget) > budget:
            return None, True, 0
        if budget == 1:
            mv = last_move(root)
            return ([mv], True, 0) if mv is not None else (None, True, 0)
        found = dfs(root, 0)
        if found:
            sol.reverse()
            return sol, True, state["expanded"]
        return None, not state["incomplete"], state["expanded"]


_engine_cache = {}


def get_engine(presentation):
    key = (presentation.generator_names,
           tuple(encode_word(r) for r in presentation.relators))
    eng = _engine_cache.get(key)
    if eng is None:
        eng = Engine(presentation)
        _engine_cache[key] = eng
    return eng
