"""Command-line interface.

One binary with subcommands; artifacts (tables, reports, certificates) go to
stdout or --out, human-facing progress and notes go to stderr.  Identical
inputs and flags produce byte-identical artifacts regardless of --jobs.

Exit codes: 0 success, 1 hard error (bad input, not null-homotopic, budget
exhausted, oracle mismatch, failed validation), 2 result obtained but inexact
(an upper bound or a flagged table).

Defaults for the search caps can also be set through environment variables
DEHNLAB_CAPS_LENGTH, DEHNLAB_CAPS_AREA, DEHNLAB_CAPS_STATES,
DEHNLAB_COSET_BUDGET, DEHNLAB_JOBS, DEHNLAB_FORMAT.
"""

import argparse
import ast
import os
import sys
from dataclasses import dataclass
from typing import Optional

from . import area as area_mod
from . import dehn as dehn_mod
from . import mean as mean_mod
from .errors import DehnlabError
from .families import REGISTRY, PolycyclicData, get_family
from .presentation import parse_presentation
from .realization import coset_enumerate, element_order, evaluate
from .words import parse_word, print_word


@dataclass(frozen=True)
class RunConfig:
    command: str
    caps_length: Optional[int]
    caps_area: int
    caps_states: int
    coset_budget: int
    jobs: int
    fmt: str
    out: Optional[str]

    def __post_init__(self):
        assert self.caps_length is None or self.caps_length > 0
        assert self.caps_area > 0 and self.caps_states > 0
        assert self.coset_budget > 0
        assert self.jobs >= 1

    def search_config(self):
        return area_mod.SearchConfig(self.caps_length, self.caps_area,
                                     self.caps_states)


def _env_int(name, default):
    v = os.environ.get(name)
    return default if v in (None, "") else int(v)


def _add_common(sp):
    sp.add_argument("--caps-length", type=int,
                    default=_env_int("DEHNLAB_CAPS_LENGTH", 0) or None,
                    help="cap on intermediate word length (default: adaptive)")
    sp.add_argument("--caps-area", type=int,
                    default=_env_int("DEHNLAB_CAPS_AREA", 32),
                    help="cap on the number of filling steps searched")
    sp.add_argument("--caps-states", type=int,
                    default=_env_int("DEHNLAB_CAPS_STATES", 500_000),
                    help="cap on search states expanded per pass")
    sp.add_argument("--coset-budget", type=int,
                    default=_env_int("DEHNLAB_COSET_BUDGET", 100_000),
                    help="cap on cosets during enumeration")
    sp.add_argument("--jobs", type=int,
                    default=_env_int("DEHNLAB_JOBS", 1),
                    help="worker processes for family computations")
    sp.add_argument("--format", dest="fmt",
                    choices=("csv", "json", "text"),
                    default=os.environ.get("DEHNLAB_FORMAT", "text"),
                    help="artifact format")
    sp.add_argument("--out", default=None,
                    help="artifact path (default: stdout)")


def _run_config(args):
    return RunConfig(args.command, args.caps_length, args.caps_area,
                     args.caps_states, args.coset_budget, args.jobs,
                     args.fmt, args.out)


def _emit(rc, text):
    if rc.out:
        with open(rc.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _note(msg):
    print(msg, file=sys.stderr)


def _load_presentation(path):
    with open(path) as fh:
        return parse_presentation(fh.read())


def _resolve_target(name):
    """Registry family name -> (None, spec); anything else is read as a
    presentation file."""
    if name in REGISTRY:
        return None, REGISTRY[name]
    return _load_presentation(name), None


def _parse_params(spec, text):
    """Semicolon-separated Python literals; G2 tuples are taken as abelian
    relative orders."""
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        prm = ast.literal_eval(chunk)
        if spec.name == "G2":
            prm = PolycyclicData.abelian(prm)
        out.append(prm)
    return tuple(out)


def _pool_map(rc):
    """None for sequential, else an ordered process-pool map."""
    if rc.jobs <= 1:
        return None, None
    from concurrent.futures import ProcessPoolExecutor
    pool = ProcessPoolExecutor(max_workers=rc.jobs)
    return pool, pool.map


# ---------------------------------------------------------------------------
# subcommands

def cmd_area(args):
    rc = _run_config(args)
    p = _load_presentation(args.presentation)
    w = parse_word(args.word, p.generator_names)
    r = coset_enumerate(p, rc.coset_budget)
    eid = evaluate(w, r)
    if eid != r.identity_id:
        _note("not null-homotopic: %s evaluates to element %d (of order %d)"
              % (print_word(w), eid, element_order(eid, r)))
        return 1
    value, cert, exact = area_mod.area_search(w, p, rc.search_config())
    cert_json = area_mod.certificate_to_json(cert, w, p, exact)
    if rc.fmt == "json":
        _emit(rc, cert_json + "\n")
    else:
        lines = ["area=%d exact=%s" % (value, "true" if exact else "false")]
        if rc.out:
            lines.append("certificate=%s" % rc.out)
            with open(rc.out, "w") as fh:
                fh.write(cert_json + "\n")
            sys.stdout.write("\n".join(lines) + "\n")
        else:
            _emit(rc, "\n".join(lines) + "\n" + cert_json + "\n")
    return 0 if exact else 2


def _table_text(tab):
    lines = []
    for n, e in tab.entries:
        parts = ["n=%d" % n, "delta=%d" % e.delta,
                 "witness=%s" % (print_word(e.witness) if e.witness else "-"),
                 "exact=%s" % ("true" if e.witness_exact else "false")]
        if e.member is not None:
            parts.append("member=%s" % e.member)
        if e.lower_bound_only:
            parts.append("lower-bound-only")
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def _emit_table(rc, tab):
    if rc.fmt == "csv":
        _emit(rc, dehn_mod.dehn_table_to_csv(tab))
    elif rc.fmt == "json":
        _emit(rc, dehn_mod.dehn_table_to_json(tab) + "\n")
    else:
        _emit(rc, _table_text(tab))


def _compute_table(args, rc):
    p, spec = _resolve_target(args.target)
    if spec is None:
        tab = dehn_mod.dehn_function(p, args.nmax, rc.search_config(),
                                     rc.coset_budget)
    else:
        pool, pmap = _pool_map(rc)
        try:
            tab = dehn_mod.family_dehn_function(spec, args.nmax,
                                                rc.search_config(),
                                                rc.coset_budget, pmap)
        finally:
            if pool is not None:
                pool.shutdown()
    return tab


def cmd_dehn(args):
    rc = _run_config(args)
    tab = _compute_table(args, rc)
    _emit_table(rc, tab)
    try:
        g = dehn_mod.classify_growth(tab)
        _note("growth=%s (least-squares heuristic on finite data; not an "
              "asymptotic claim)" % g.label)
    except DehnlabError as e:
        _note("growth=unavailable (%s)" % e)
    flagged = any(e.lower_bound_only for _, e in tab.entries)
    if flagged:
        _note("table contains lower-bound-only entries")
    return 2 if flagged else 0


def cmd_growth(args):
    rc = _run_config(args)
    tab = _compute_table(args, rc)
    g = dehn_mod.classify_growth(tab)
    if rc.fmt == "json":
        import json
        _emit(rc, json.dumps(
            {"label": g.label,
             "fit_error": {k: v for k, v in g.fit_error},
             "disclaimer": "least-squares heuristic on finite data"},
            sort_keys=True, separators=(",", ":")) + "\n")
    else:
        lines = ["growth=%s" % g.label]
        for k, v in g.fit_error:
            lines.append("fit_error_%s=%.6f" % (k, v))
        lines.append("disclaimer=least-squares heuristic on finite data")
        _emit(rc, "\n".join(lines) + "\n")
    return 0


def _emit_report(rc, rep):
    if rc.fmt == "csv":
        _emit(rc, mean_mod.report_to_csv(rep))
    elif rc.fmt == "json":
        _emit(rc, mean_mod.report_to_json(rep) + "\n")
    else:
        mean_s = "undefined" if rep.mean is None else \
            "%s (~%.6f)" % (rep.mean, float(rep.mean))
        _emit(rc, "n=%d ball=%d sphere=%d mean=%s smean=%s (~%.6f)\n"
              % (rep.n, rep.ball_size, rep.sphere_size, mean_s,
                 rep.smean, float(rep.smean)))


def _mean_common(args, which):
    rc = _run_config(args)
    p, spec = _resolve_target(args.target)
    if spec is None:
        r = coset_enumerate(p, rc.coset_budget)
        rep = mean_mod.mean_dehn(p, r, args.nmax, rc.search_config())
    else:
        pool, pmap = _pool_map(rc)
        try:
            rep = mean_mod.family_mean(spec, args.nmax, rc.search_config(),
                                       rc.coset_budget, pmap)
        finally:
            if pool is not None:
                pool.shutdown()
    _emit_report(rc, rep)
    if args.oracle:
        if spec is None or spec.name != "G1":
            _note("--oracle only checks the G1 closed forms")
            return 1
        cm, cs = mean_mod.cyclic_family_closed_forms(args.nmax)
        want = cm if which == "mean" else cs
        got = rep.mean if which == "mean" else rep.smean
        if got != want:
            _note("oracle mismatch: computed %s, closed form %s" % (got, want))
            return 1
        _note("oracle match: %s" % (want,))
    return 0


def cmd_mean(args):
    return _mean_common(args, "mean")


def cmd_smean(args):
    return _mean_common(args, "smean")


def cmd_census(args):
    rc = _run_config(args)
    p, spec = _resolve_target(args.target)
    if spec is not None:
        _note("census runs on a presentation file, not a family")
        return 1
    r = coset_enumerate(p, rc.coset_budget)
    c = mean_mod.census(p, r, args.nmax, rc.search_config())
    if rc.fmt == "json":
        import json
        _emit(rc, json.dumps(
            {"n": c.n,
             "ball": [{"word": print_word(w), "length": len(w), "area": a}
                      for w, a in c.ball],
             "sphere_size": len(c.sphere)},
            sort_keys=True, separators=(",", ":")) + "\n")
    else:
        lines = ["word,length,area"]
        for w, a in c.ball:
            lines.append("%s,%d,%d" % (print_word(w), len(w), a))
        _emit(rc, "\n".join(lines) + "\n")
    return 0


def cmd_validate(args):
    rc = _run_config(args)
    spec = get_family(args.family)
    params = None
    if args.params:
        params = _parse_params(spec, args.params)
    from .families import validate_family
    results = validate_family(spec, params, rc.coset_budget)
    lines = []
    ok_all = True
    for label, check, ok, detail in results:
        ok_all = ok_all and ok
        lines.append("%s param=%s check=%s detail=%s"
                     % ("PASS" if ok else "FAIL", label, check, detail))
    if rc.fmt == "json":
        import json
        _emit(rc, json.dumps(
            {"family": spec.name, "ok": ok_all,
             "checks": [{"param": l, "check": c, "ok": o, "detail": d}
                        for l, c, o, d in results]},
            sort_keys=True, separators=(",", ":")) + "\n")
    else:
        _emit(rc, "\n".join(lines) + "\n")
    return 0 if ok_all else 1


def main(argv=None):
    ap = argparse.ArgumentParser(
        prog="dehnlab",
        description="Exact Dehn-function computations for finite "
                    "presentations and registered families.")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("area", help="exact area of a null-homotopic word")
    sp.add_argument("presentation", help="presentation file")
    sp.add_argument("word", help="word over the presentation's generators")
    _add_common(sp)
    sp.set_defaults(fn=cmd_area)

    for name, fn, hlp in (("dehn", cmd_dehn, "Dehn table"),
                          ("growth", cmd_growth, "growth classification")):
        sp = sub.add_parser(name, help=hlp)
        sp.add_argument("target", help="presentation file or family name")
        sp.add_argument("--nmax", type=int, required=True)
        _add_common(sp)
        sp.set_defaults(fn=fn)

    for name, fn in (("mean", cmd_mean), ("smean", cmd_smean)):
        sp = sub.add_parser(name, help="exact %s over the null-word ball" % name)
        sp.add_argument("target", help="presentation file or family name")
        sp.add_argument("--nmax", type=int, required=True)
        sp.add_argument("--oracle", action="store_true",
                        help="cross-check the G1 closed forms")
        _add_common(sp)
        sp.set_defaults(fn=fn)

    sp = sub.add_parser("census", help="null words with exact areas")
    sp.add_argument("target", help="presentation file")
    sp.add_argument("--nmax", type=int, required=True)
    _add_common(sp)
    sp.set_defaults(fn=cmd_census)

    sp = sub.add_parser("validate", help="family registry checks")
    sp.add_argument("family", help="registered family name")
    sp.add_argument("--params", default=None,
                    help="semicolon-separated parameter literals")
    _add_common(sp)
    sp.set_defaults(fn=cmd_validate)

    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except DehnlabError as e:
        _note("error: %s" % e)
        return 1
    except OSError as e:
        _note("error: %s" % e)
        return 1


if __name__ == "__main__":
    sys.exit(main())
