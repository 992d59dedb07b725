"""Builders, registry and validators for the concrete group families.

Every builder returns a plain Presentation; finiteness/order claims are
checked by the validators (coset enumeration), not at build time.
"""

import math
import re
from dataclasses import dataclass, field
from typing import Callable, Optional, Tuple

from .area import AreaCertificate
from .errors import ValidationError
from .presentation import Presentation
from .realization import coset_enumerate, evaluate
from .words import Letter, Word, concat, empty_word, free_reduce, invert


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def primes_upto(n):
    return tuple(p for p in range(2, n + 1) if is_prime(p))


def _word(names, *pairs):
    """Word from (generator index, exponent) pairs, freely reduced."""
    letters = []
    for g, e in pairs:
        s = 1 if e > 0 else -1
        letters.extend([Letter(g, s)] * abs(e))
    return free_reduce(letters, names)


# ---------------------------------------------------------------------------
# builders

def build_G1(p):
    """Cyclic group on one generator: <a | a^p>."""
    if not is_prime(p):
        raise ValueError("parameter %r is not prime" % (p,))
    names = ("a",)
    return Presentation(names, (_word(names, (0, p)),))


def build_G1_redundant(p, exponents):
    """Cyclic group with a redundant generating set: generators a and
    b_i standing for a^{m_i}, with relators a^p, b_i^p and b_i a^{-m_i}."""
    if not is_prime(p):
        raise ValueError("parameter %r is not prime" % (p,))
    exponents = tuple(exponents)
    if not exponents:
        raise ValueError("need at least one redundant exponent")
    if 1 + len(exponents) > 4:
        raise ValueError("generating set larger than the size bound 4")
    for m in exponents:
        if not (1 < m < p):
            raise ValueError(
                "exponent %r out of range (need 1 < m < %d; a^m must not be "
                "trivial)" % (m, p))
    if len(exponents) == 1:
        names = ("a", "b")
    else:
        names = ("a",) + tuple("b%d" % (i + 1) for i in range(len(exponents)))
    rels = [_word(names, (0, p))]
    for i in range(len(exponents)):
        rels.append(_word(names, (i + 1, p)))
    for i, m in enumerate(exponents):
        rels.append(_word(names, (i + 1, 1), (0, -m)))
    return Presentation(names, tuple(rels))


def build_ZpZq(p, q, style):
    """Z_p x Z_q (= Z_pq for distinct primes): one- or two-generator form."""
    if not (is_prime(p) and is_prime(q)):
        raise ValueError("parameters %r, %r must both be prime" % (p, q))
    if p == q:
        raise ValueError("primes must be distinct")
    if style == "one-generator":
        names = ("a",)
        return Presentation(names, (_word(names, (0, p * q)),))
    if style == "two-generator":
        names = ("x", "y")
        return Presentation(names, (
            _word(names, (0, p)),
            _word(names, (1, q)),
            _word(names, (0, 1), (1, 1), (0, -1), (1, -1)),
        ))
    raise ValueError("unknown style %r" % (style,))


def build_example24(p, k):
    """<a, s | s^p, a^k, s^-1 a s a^-2>; the conjugation relator collapses a,
    so the group is Z_p and the generator a is deliberately null-homotopic."""
    if not (is_prime(p) and is_prime(k)):
        raise ValueError("parameters %r, %r must both be prime" % (p, k))
    if p < 5:
        raise ValueError("need p >= 5 (got %d)" % p)
    if not p < k:
        raise ValueError("need p < k (got p=%d, k=%d)" % (p, k))
    if (2 ** p - 1) % k == 0:
        raise ValueError("k=%d divides 2^p - 1 = %d; the collapse argument "
                         "needs k not dividing it" % (k, 2 ** p - 1))
    names = ("a", "s")
    return Presentation(names, (
        _word(names, (1, p)),
        _word(names, (0, k)),
        _word(names, (1, -1), (0, 1), (1, 1), (0, -2)),
    ))


@dataclass(frozen=True)
class PolycyclicData:
    """Exponent data for a consistent polycyclic-style presentation.

    relative_orders r_l give the power relators x_l^{r_l}.  power_exponents
    s_l (None = absent) give x_l^{s_l} = x_{l+1}^{a_..} ... x_n^{a_..} with
    the exponent vector power_rhs[l] over generators l+1..n.  conj_rhs lists
    (j, l, vector) for every pair j < l: x_j^-1 x_l x_j = product of
    x_{j+1}..x_n to the vector's exponents.
    """
    relative_orders: Tuple[int, ...]
    power_exponents: Tuple[Optional[int], ...] = None
    power_rhs: Tuple[Optional[Tuple[int, ...]], ...] = None
    conj_rhs: Tuple[Tuple[int, int, Tuple[int, ...]], ...] = ()

    def __post_init__(self):
        n = len(self.relative_orders)
        assert n >= 1
        assert all(r >= 2 for r in self.relative_orders)
        if self.power_exponents is None:
            object.__setattr__(self, "power_exponents", (None,) * n)
        if self.power_rhs is None:
            object.__setattr__(self, "power_rhs", (None,) * n)
        if len(self.power_exponents) != n or len(self.power_rhs) != n:
            raise ValueError("power data length != %d generators" % n)
        for l in range(n):
            s, rhs = self.power_exponents[l], self.power_rhs[l]
            if (s is None) != (rhs is None):
                raise ValueError("power exponent and rhs must come together "
                                 "(generator %d)" % (l + 1))
            if rhs is not None and len(rhs) != n - 1 - l:
                raise ValueError("power rhs for generator %d must have %d "
                                 "entries" % (l + 1, n - 1 - l))
        pairs = set()
        for j, l, vec in self.conj_rhs:
            if not (0 <= j < l < n):
                raise ValueError("conjugation pair (%d,%d) out of range" % (j, l))
            if (j, l) in pairs:
                raise ValueError("duplicate conjugation pair (%d,%d)" % (j, l))
            pairs.add((j, l))
            if len(vec) != n - 1 - j:
                raise ValueError("conjugation rhs for pair (%d,%d) must have "
                                 "%d entries" % (j, l, n - 1 - j))
        if pairs != {(j, l) for l in range(n) for j in range(l)}:
            raise ValueError("conjugation data must cover every pair j < l")

    @property
    def n(self):
        return len(self.relative_orders)

    @classmethod
    def abelian(cls, orders):
        """Instance where every conjugation fixes the conjugated generator."""
        orders = tuple(orders)
        n = len(orders)
        conj = []
        for l in range(n):
            for j in range(l):
                vec = [0] * (n - 1 - j)
                vec[l - (j + 1)] = 1
                conj.append((j, l, tuple(vec)))
        return cls(orders, conj_rhs=tuple(conj))


def build_G2(d):
    """Finite polycyclic-style presentation from PolycyclicData: power
    relators, optional extra power relations, conjugation relations, and the
    commuting-back relations x_j x_l x_j^-1 = x_l."""
    n = d.n
    names = tuple("x%d" % (i + 1) for i in range(n))

    def rhs_word(start, vec):
        pairs = [(start + i, e) for i, e in enumerate(vec) if e]
        return _word(names, *pairs)

    rels = []
    for l in range(n):
        rels.append(_word(names, (l, d.relative_orders[l])))
    for l in range(n):
        if d.power_exponents[l] is not None:
            lhs = _word(names, (l, d.power_exponents[l]))
            rels.append(concat(lhs, invert(rhs_word(l + 1, d.power_rhs[l]))))
    conj = {(j, l): vec for j, l, vec in d.conj_rhs}
    for l in range(1, n):
        for j in range(l):
            lhs = _word(names, (j, -1), (l, 1), (j, 1))
            rels.append(concat(lhs, invert(rhs_word(j + 1, conj[(j, l)]))))
    for l in range(1, n):
        for j in range(l):
            rels.append(_word(names, (j, 1), (l, 1), (j, -1), (l, -1)))
    rels = [r for r in rels if len(r) > 0]
    return Presentation(names, tuple(rels))


def build_G3(p):
    """Heisenberg-like metacyclic group: <a, b | b a b^-1 a^-(p+1), a^(p^2),
    b^p>, of order p^3."""
    if not is_prime(p):
        raise ValueError("parameter %r is not prime" % (p,))
    names = ("a", "b")
    return Presentation(names, (
        _word(names, (1, 1), (0, 1), (1, -1), (0, -(p + 1))),
        _word(names, (0, p * p)),
        _word(names, (1, p)),
    ))


_TAG_RE = re.compile(r"^(s|r([0-9]+)|sr([0-9]+))$")


def _parse_tags(n, subset):
    """Subset tags name elements of the dihedral group of order 2(n+1):
    "s" the reflection, "r<j>" the rotation r^j, "sr<i>" the reflection s r^i.
    Returns list of (tag, flip, rot)."""
    t = n + 1
    out = []
    seen = set()
    for tag in subset:
        m = _TAG_RE.match(tag)
        if not m:
            raise ValueError("bad subset tag %r (expected s, r<j> or sr<i>)"
                             % (tag,))
        if tag in seen:
            raise ValueError("duplicate subset tag %r" % (tag,))
        seen.add(tag)
        if tag == "s":
            out.append((tag, 1, 0))
        elif m.group(2) is not None:
            j = int(m.group(2))
            if j % t == 0:
                raise ValueError("tag %r is the identity rotation (null-"
                                 "homotopic generator, j must not be 0 mod %d)"
                                 % (tag, t))
            out.append((tag, 0, j % t))
        else:
            i = int(m.group(3))
            if i % t == 0:
                raise ValueError("tag %r equals s; use the tag 's'" % (tag,))
            out.append((tag, 1, i % t))
    if not out:
        raise ValueError("empty subset")
    return out


def _dihedral_mult(a, b, t):
    # normal form s^f r^k; r s = s r^-1
    return ((a[0] + b[0]) % 2, ((-1) ** b[0] * a[1] + b[1]) % t)


def _dihedral_inv(a, t):
    return (a[0], (-a[1] * (-1) ** a[0]) % t)


def _subset_case_check(n, tags):
    """The generation conditions: with s in the set, some r^l or sr^l must
    have gcd(l, n+1) = 1; without s, some product sr^i r^j must give s back
    (i + j = 0 mod n+1) and some r^l must have gcd(l, n+1) = 1."""
    t = n + 1
    has_s = any(tag == "s" for tag, _, _ in tags)
    if has_s:
        if not any(math.gcd(rot, t) == 1 for tag, _, rot in tags if tag != "s"):
            raise ValueError(
                "subset containing s needs some r^l or sr^l with "
                "gcd(l, %d) = 1" % t)
        return
    refl = [rot for _, f, rot in tags if f == 1]
    rots = [rot for _, f, rot in tags if f == 0]
    if not any((i + j) % t == 0 for i in refl for j in rots):
        raise ValueError(
            "subset without s needs sr^i and r^j with i + j = 0 mod %d" % t)
    if not any(math.gcd(j, t) == 1 for j in rots):
        raise ValueError(
            "subset without s needs some r^l with gcd(l, %d) = 1" % t)


def _subset_expressions(names, elems, t):
    """Shortest/lex-least words over the formal generators expressing the
    base reflection (1,0) and rotation (0,1), via BFS in the concrete group."""
    gens = []
    for i, e in enumerate(elems):
        gens.append((Letter(i, 1), e))
        gens.append((Letter(i, -1), _dihedral_inv(e, t)))
    start = (0, 0)
    expr = {start: ()}
    frontier = [start]
    while frontier:
        nxt = []
        for cur in frontier:
            for lt, e in gens:
                new = _dihedral_mult(cur, e, t)
                if new not in expr:
                    expr[new] = expr[cur] + (lt,)
                    nxt.append(new)
        frontier = nxt
    assert (1, 0) in expr and (0, 1) in expr, "subset does not generate"
    sigma = free_reduce(expr[(1, 0)], names)
    rho = free_reduce(expr[(0, 1)], names)
    return sigma, rho


def _power(w, e):
    out = empty_word(w.names)
    base = w if e >= 0 else invert(w)
    for _ in range(abs(e)):
        out = concat(out, base)
    return out


def build_dihedral(n, style, subset=None):
    """Dihedral-group presentations of order 2(n+1), or 4n for style D4n.

    Styles: "standard" <s,r | s^2, r^(n+1), srsr^-n>; "alt" on generators
    s and t=sr; "Kgen" on a generating subset of named elements (tags per
    _parse_tags), with the element-wise order relators plus relators tying
    every formal generator to its expression in a base reflection/rotation
    pair; "D4n" the direct-product presentation <s,r,t>."""
    if n < 2:
        raise ValueError("need n >= 2")
    t = n + 1
    if style == "standard":
        names = ("s", "r")
        return Presentation(names, (
            _word(names, (0, 2)),
            _word(names, (1, t)),
            _word(names, (0, 1), (1, 1), (0, 1), (1, -n)),
        ))
    if style == "alt":
        names = ("s", "t")
        st = _word(names, (0, 1), (1, 1))
        return Presentation(names, (
            _word(names, (0, 2)),
            _word(names, (1, 2)),
            _power(st, t),
        ))
    if style == "D4n":
        if n % 2 == 0:
            raise ValueError("D4n form needs odd n (got %d)" % n)
        names = ("s", "r", "t")
        return Presentation(names, (
            _word(names, (0, 2)),
            _word(names, (1, n)),
            _word(names, (2, 2)),
            _word(names, (0, 1), (1, 1), (0, 1), (1, 1)),
            _word(names, (0, 1), (2, 1), (0, -1), (2, -1)),
            _word(names, (1, 1), (2, 1), (1, -1), (2, -1)),
        ))
    if style == "Kgen":
        if subset is None:
            raise ValueError("Kgen style needs a subset of tags")
        tags = _parse_tags(n, subset)
        _subset_case_check(n, tags)
        names = []
        elems = []
        for tag, f, rot in tags:
            if tag == "s":
                names.append("s")
            elif f == 0:
                names.append("r%d" % rot)
            else:
                names.append("u%d" % rot)
            elems.append((f, rot))
        names = tuple(names)
        rels = []
        for i, (tag, f, rot) in enumerate(tags):
            if f == 1:
                rels.append(_word(names, (i, 2)))
            else:
                rels.append(_word(names, (i, t // math.gcd(rot, t))))
        index = {e: i for i, e in enumerate(elems)}
        if (1, 0) in index:
            si = index[(1, 0)]
            for (f, rot), i in index.items():
                if f == 0 and (1, rot) in index:
                    # s r^i s = r^-i spelled on the available generators
                    rels.append(_word(names, (index[(1, rot)], 1), (si, 1),
                                      (i, 1)))
                if f == 0:
                    # (s r^j)^2 with both letters available
                    rels.append(_word(names, (si, 1), (i, 1), (si, 1), (i, 1)))
        sigma, rho = _subset_expressions(names, elems, t)
        rels.append(_power(sigma, 2))
        rels.append(_power(rho, t))
        rels.append(_power(concat(sigma, rho), 2))
        for i, e in enumerate(elems):
            expr = concat(_power(sigma, e[0]), _power(rho, e[1]))
            rels.append(concat(_word(names, (i, -1)), expr))
        rels = [r for r in rels if len(r) > 0]
        return Presentation(names, tuple(rels))
    raise ValueError("unknown style %r" % (style,))


# ---------------------------------------------------------------------------
# named witnesses and certificates

def g3_witness(p, n):
    """The commutator word a b^n a b^-n a^-1 b^n a^-1 b^-n in build_G3(p)."""
    names = ("a", "b")
    return _word(names, (0, 1), (1, n), (0, 1), (1, -n), (0, -1), (1, n),
                 (0, -1), (1, -n))


def g3_certificate(p, n):
    """Explicit filling of g3_witness(p, n) with 2((p+1)^n - 1)/p steps.

    b^k a b^-k a^-(p+1)^k unrolls recursively: conjugate the k-1 filling by b,
    then shift b a^m b^-1 down to a^(m(p+1)) with m applications of the first
    relator conjugated by powers of a.  The witness is E * (a E a^-1)^-1
    rearranged, giving the doubled count.
    """
    names = ("a", "b")

    def e_steps(k):
        if k == 1:
            return [(empty_word(names), 0, 1)]
        prev = e_steps(k - 1)
        b = _word(names, (1, 1))
        steps = [(concat(b, g), idx, sgn) for g, idx, sgn in prev]
        m = (p + 1) ** (k - 1)
        for i in range(m):
            steps.append((_word(names, (0, i * (p + 1))), 0, 1))
        return steps

    inner = e_steps(n)
    a = _word(names, (0, 1))
    steps = [(concat(a, g), idx, sgn) for g, idx, sgn in inner]
    steps.extend((g, idx, -sgn) for g, idx, sgn in reversed(inner))
    return AreaCertificate(tuple(steps), len(steps))


def ex24_witness(n):
    """The commutator word a s^-n a s^n a^-1 s^-n a^-1 s^n in build_example24."""
    names = ("a", "s")
    return _word(names, (0, 1), (1, -n), (0, 1), (1, n), (0, -1), (1, -n),
                 (0, -1), (1, n))


# ---------------------------------------------------------------------------
# registry

@dataclass(frozen=True)
class FamilySpec:
    name: str
    K_bound: int
    parameters: str
    build: Callable
    relevance_bound: Callable
    forbid_null_generators: bool
    mean_supported: bool
    relevance_provable: bool
    default_validation_params: tuple
    expected_order: Callable
    extra_checks: Optional[Callable] = None


def _g1_relevance(n):
    # a^p is the shortest null word, so only p <= n contribute
    return tuple(primes_upto(n))


def _g1k_relevance(n):
    return tuple((p, (2,)) for p in primes_upto(n) if p >= 3)


def _zpq1_relevance(n):
    out = []
    for p in primes_upto(n):
        for q in primes_upto(n):
            if p < q and p * q <= n:
                out.append((p, q))
    return tuple(sorted(out))


def _zpq2_relevance(n):
    out = []
    for p in primes_upto(n):
        for q in primes_upto(n):
            if p < q:
                out.append((p, q))
    return tuple(sorted(out))


def _ex24_relevance(n):
    out = []
    for p in primes_upto(n):
        if p < 5:
            continue
        for k in primes_upto(4 * p):
            if p < k and (2 ** p - 1) % k != 0:
                out.append((p, k))
                break
    return tuple(out)


def _g2_relevance(n):
    return tuple(PolycyclicData.abelian((p, q)) for p, q in _zpq2_relevance(n))


def _g3_relevance(n):
    return tuple(primes_upto(n))


def _dih_relevance(n):
    return tuple(range(2, max(2, n) + 1))


def _d4n_relevance(n):
    return tuple(m for m in range(3, max(3, n) + 1, 2))


def _dihk_relevance(n):
    return tuple((m, ("s", "r1")) for m in range(2, max(2, n) + 1))


def _ex24_extra(param, p, r):
    out = []
    a_id = evaluate(_word(p.generator_names, (0, 1)), r)
    out.append(("a_is_trivial", a_id == r.identity_id,
                "a evaluates to element %d" % a_id))
    return out


def _g3_extra(param, pres, r):
    p = param
    lhs = evaluate(_word(pres.generator_names, (1, 1), (0, 1), (1, -1)), r)
    rhs = evaluate(_word(pres.generator_names, (0, p + 1)), r)
    return [("conjugation_bab", lhs == rhs,
             "b a b^-1 -> %d, a^%d -> %d" % (lhs, p + 1, rhs))]


def _dihk_extra(param, pres, r):
    n, subset = param
    t = n + 1
    names = pres.generator_names
    if "s" not in names:
        return []
    si = names.index("s")
    out = []
    for i, nm in enumerate(names):
        if nm.startswith("r"):
            k = int(nm[1:])
            lhs = evaluate(_word(names, (si, 1), (i, 1), (si, 1)), r)
            rhs = evaluate(_word(names, (i, -1)), r)
            out.append(("reflection_conjugates_r%d" % k, lhs == rhs,
                        "s r^%d s vs r^-%d: %d vs %d" % (k, k, lhs, rhs)))
    return out


REGISTRY = {
    "G1": FamilySpec(
        "G1", 1, "prime p", build_G1, _g1_relevance,
        forbid_null_generators=True, mean_supported=True,
        relevance_provable=True, default_validation_params=(2, 3, 5, 7),
        expected_order=lambda p: p),
    "G1K": FamilySpec(
        "G1K", 4, "(prime p, redundant exponents)",
        lambda prm: build_G1_redundant(*prm), _g1k_relevance,
        forbid_null_generators=True, mean_supported=False,
        relevance_provable=False,
        default_validation_params=((5, (2,)), (7, (2, 3))),
        expected_order=lambda prm: prm[0]),
    "ZPQ1": FamilySpec(
        "ZPQ1", 1, "distinct primes p < q",
        lambda prm: build_ZpZq(prm[0], prm[1], "one-generator"),
        _zpq1_relevance, forbid_null_generators=True, mean_supported=True,
        relevance_provable=True, default_validation_params=((2, 3), (5, 7)),
        expected_order=lambda prm: prm[0] * prm[1]),
    "ZPQ2": FamilySpec(
        "ZPQ2", 2, "distinct primes p < q",
        lambda prm: build_ZpZq(prm[0], prm[1], "two-generator"),
        _zpq2_relevance, forbid_null_generators=True, mean_supported=False,
        relevance_provable=False, default_validation_params=((2, 3), (5, 7)),
        expected_order=lambda prm: prm[0] * prm[1]),
    "EX24": FamilySpec(
        "EX24", 2, "primes 5 <= p < k with k not dividing 2^p - 1",
        lambda prm: build_example24(*prm), _ex24_relevance,
        forbid_null_generators=False, mean_supported=False,
        relevance_provable=False, default_validation_params=((5, 7),),
        expected_order=lambda prm: prm[0], extra_checks=_ex24_extra),
    "G2": FamilySpec(
        "G2", 4, "PolycyclicData (registry enumerates abelian instances)",
        build_G2, _g2_relevance, forbid_null_generators=True,
        mean_supported=False, relevance_provable=False,
        default_validation_params=(PolycyclicData.abelian((3, 5)),
                                   PolycyclicData.abelian((5, 7))),
        expected_order=lambda d: math.prod(d.relative_orders)),
    "G3": FamilySpec(
        "G3", 2, "prime p", build_G3, _g3_relevance,
        forbid_null_generators=True, mean_supported=False,
        relevance_provable=False, default_validation_params=(2, 3, 5),
        expected_order=lambda p: p ** 3, extra_checks=_g3_extra),
    "DIH": FamilySpec(
        "DIH", 2, "integer n >= 2",
        lambda m: build_dihedral(m, "standard"), _dih_relevance,
        forbid_null_generators=True, mean_supported=False,
        relevance_provable=False,
        default_validation_params=tuple(range(2, 9)),
        expected_order=lambda m: 2 * (m + 1)),
    "DIHALT": FamilySpec(
        "DIHALT", 2, "integer n >= 2",
        lambda m: build_dihedral(m, "alt"), _dih_relevance,
        forbid_null_generators=True, mean_supported=False,
        relevance_provable=False,
        default_validation_params=tuple(range(2, 9)),
        expected_order=lambda m: 2 * (m + 1)),
    "DIHK": FamilySpec(
        "DIHK", 4, "(integer n >= 2, generating subset tags)",
        lambda prm: build_dihedral(prm[0], "Kgen", prm[1]), _dihk_relevance,
        forbid_null_generators=True, mean_supported=False,
        relevance_provable=False,
        default_validation_params=((4, ("s", "r1")),
                                   (4, ("sr1", "r4", "r1"))),
        expected_order=lambda prm: 2 * (prm[0] + 1), extra_checks=_dihk_extra),
    "D4N": FamilySpec(
        "D4N", 3, "odd integer n >= 3",
        lambda m: build_dihedral(m, "D4n"), _d4n_relevance,
        forbid_null_generators=True, mean_supported=False,
        relevance_provable=False, default_validation_params=(3, 5, 7),
        expected_order=lambda m: 4 * m),
}


def get_family(name):
    try:
        return REGISTRY[name]
    except KeyError:
        raise ValidationError("unknown family %r (known: %s)"
                              % (name, ", ".join(sorted(REGISTRY)))) from None


def validate_family(spec, params=None, max_cosets=100_000):
    """Run build/order/K-bound/null-generator checks; returns a list of
    (param_label, check_name, ok, detail)."""
    if params is None:
        params = spec.default_validation_params
    results = []
    for prm in params:
        label = str(prm)
        try:
            pres = spec.build(prm)
        except (ValueError, ValidationError) as e:
            results.append((label, "build", False, str(e)))
            continue
        results.append((label, "build", True,
                        "%d generators, %d relators"
                        % (len(pres.generator_names), len(pres.relators))))
        results.append((label, "k_bound",
                        len(pres.generator_names) <= spec.K_bound,
                        "%d <= %d" % (len(pres.generator_names), spec.K_bound)))
        try:
            r = coset_enumerate(pres, max_cosets)
        except Exception as e:
            results.append((label, "realization", False, str(e)))
            continue
        want = spec.expected_order(prm)
        results.append((label, "order", r.order == want,
                        "order %d, expected %d" % (r.order, want)))
        if spec.forbid_null_generators:
            bad = [pres.generator_names[g] for g in range(len(pres.generator_names))
                   if r.generator_maps[g][r.identity_id] == r.identity_id]
            results.append((label, "no_null_generators", not bad,
                            "null generators: %s" % (",".join(bad) or "none")))
        if spec.extra_checks is not None:
            for name, ok, detail in spec.extra_checks(prm, pres, r):
                results.append((label, name, ok, detail))
    return results
