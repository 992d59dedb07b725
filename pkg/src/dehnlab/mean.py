"""Mean and spherical-mean Dehn values over balls of null-homotopic words.

All averages are exact rationals.  The ball counts every reduced nonempty
null word including inverses; for one-generator cyclic groups this doubles
both numerator and denominator relative to counting positive powers only,
leaving the means unchanged.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .area import SearchConfig
from .dehn import _AreaMemo, _param_label, enumerate_null_words
from .errors import BudgetExceededError, FinitenessNotEstablishedError
from .families import primes_upto
from .realization import coset_enumerate
from .words import Word, print_word


@dataclass(frozen=True)
class NullWordCensus:
    n: int
    ball: Tuple[Tuple[Word, int], ...]
    sphere: Tuple[Tuple[Word, int], ...]


@dataclass(frozen=True)
class MeanReport:
    n: int
    mean: Optional[Fraction]  # None marks the undefined empty-ball case
    smean: Fraction
    ball_size: int
    sphere_size: int
    # (member, ball_size, sphere_size, ball_area_sum, sphere_area_sum)
    per_member: Optional[Tuple[Tuple[str, int, int, int, int], ...]] = None


def census(p, r, n, cfg=None):
    """Every reduced nonempty null word of length <= n with its exact area.

    Raises BudgetExceededError naming the word if some area cannot be
    certified exact under the configured budgets.
    """
    if cfg is None:
        cfg = SearchConfig()
    memo = _AreaMemo(p, cfg)
    ball = []
    for w in enumerate_null_words(p, r, n):
        value, exact = memo.area(w)
        if not exact:
            raise BudgetExceededError(
                "area of %s is only an upper bound under the configured "
                "budgets; census requires exact areas" % print_word(w))
        ball.append((w, value))
    sphere = tuple(pair for pair in ball if len(pair[0]) == n)
    return NullWordCensus(n, tuple(ball), sphere)


def _report(n, censuses):
    """Pool (member_label, census) pairs into one MeanReport."""
    ball_size = sphere_size = ball_sum = sphere_sum = 0
    per_member = []
    for label, c in censuses:
        bs = len(c.ball)
        ss = len(c.sphere)
        ba = sum(a for _, a in c.ball)
        sa = sum(a for _, a in c.sphere)
        ball_size += bs
        sphere_size += ss
        ball_sum += ba
        sphere_sum += sa
        per_member.append((label, bs, ss, ba, sa))
    mean = Fraction(ball_sum, ball_size) if ball_size else None
    smean = Fraction(sphere_sum, sphere_size) if sphere_size else Fraction(0)
    members = tuple(per_member) if any(l is not None for l, *_ in per_member) \
        else None
    return MeanReport(n, mean, smean, ball_size, sphere_size, members)


def mean_dehn(p, r, n, cfg=None):
    """Exact mean area over the ball; mean is None when the ball is empty."""
    return _report(n, [(None, census(p, r, n, cfg))])


def smean_dehn(p, r, n, cfg=None):
    """Exact mean area over the sphere; 0 when the sphere is empty."""
    return _report(n, [(None, census(p, r, n, cfg))])


def _member_census_job(job):
    """Picklable worker: member census for a registered family."""
    name, prm, n, cfg, max_cosets = job
    from .families import REGISTRY
    f = REGISTRY[name]
    p = f.build(prm)
    r = coset_enumerate(p, max_cosets)
    return census(p, r, n, cfg)


def _family_report(f, n, cfg, max_cosets, pmap):
    if not f.mean_supported:
        raise FinitenessNotEstablishedError(
            "family %s has no proven finite truncation of its nonzero "
            "contributions; refusing to average" % f.name)
    params = list(f.relevance_bound(n))
    if pmap is None:
        results = []
        for prm in params:
            p = f.build(prm)
            r = coset_enumerate(p, max_cosets)
            results.append(census(p, r, n, cfg))
    else:
        jobs = [(f.name, prm, n, cfg, max_cosets) for prm in params]
        results = list(pmap(_member_census_job, jobs))
    return _report(n, [(_param_label(prm), c)
                       for prm, c in zip(params, results)])


def family_mean(f, n, cfg=None, max_cosets=100_000, pmap=None):
    """Pooled mean over all relevant members' balls; words are tagged by
    member, so identical spellings in different members count separately.
    pmap as in family_dehn_function."""
    return _family_report(f, n, cfg, max_cosets, pmap)


def family_smean(f, n, cfg=None, max_cosets=100_000, pmap=None):
    return _family_report(f, n, cfg, max_cosets, pmap)


def cyclic_family_closed_forms(n):
    """Closed forms for the one-generator prime-power family: mean uses all
    primes p <= n (ball words a^(kp), k <= n/p, area k), smean the prime
    divisors of n (sphere words a^n with area n/p)."""
    assert n >= 2
    ps = primes_upto(n)
    num = sum((n // p) * (n // p + 1) // 2 for p in ps)
    den = sum(n // p for p in ps)
    mean = Fraction(num, den)
    divs = [p for p in ps if n % p == 0]
    smean = Fraction(sum(n // p for p in divs), len(divs))
    return mean, smean


def _frac_str(x):
    return None if x is None else str(x)


def _frac_float(x):
    return None if x is None else float(x)


def report_to_json(rep):
    import json
    obj = {
        "n": rep.n,
        "ball_size": rep.ball_size,
        "sphere_size": rep.sphere_size,
        "mean": _frac_str(rep.mean),
        "mean_decimal": _frac_float(rep.mean),
        "smean": _frac_str(rep.smean),
        "smean_decimal": _frac_float(rep.smean),
        "per_member": None if rep.per_member is None else [
            {"member": m, "ball_size": bs, "sphere_size": ss,
             "ball_area_sum": ba, "sphere_area_sum": sa}
            for m, bs, ss, ba, sa in rep.per_member],
    }
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def report_to_csv(rep):
    lines = ["field,value"]
    lines.append("n,%d" % rep.n)
    lines.append("ball_size,%d" % rep.ball_size)
    lines.append("sphere_size,%d" % rep.sphere_size)
    lines.append("mean,%s" % ("" if rep.mean is None else rep.mean))
    lines.append("mean_decimal,%s"
                 % ("" if rep.mean is None else repr(float(rep.mean))))
    lines.append("smean,%s" % rep.smean)
    lines.append("smean_decimal,%s" % repr(float(rep.smean)))
    if rep.per_member is not None:
        lines.append("member,ball_size,sphere_size,ball_area_sum,sphere_area_sum")
        for m, bs, ss, ba, sa in rep.per_member:
            lines.append("%s,%d,%d,%d,%d" % (m, bs, ss, ba, sa))
    return "\n".join(lines) + "\n"
