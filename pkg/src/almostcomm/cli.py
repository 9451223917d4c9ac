"""Command-line front end.

Every subcommand runs a deterministic, seeded experiment and writes a JSON or
CSV report carrying the package version and a hash of the run configuration.
Exit codes: 0 all checks pass, 1 a property failed, 2 usage error, 3 the
request exceeded a capability (non-rational spectrum, enumeration caps).
"""
import argparse
import csv
import hashlib
import io
import json
import random
import sys
from itertools import product

from . import __version__
from . import altpoly, cherednik, quiver
from .acv import points, strata
from .errors import CapabilityError
from .exact import MPoly, Q, RatMatrix, RatVector
from .exact.matrix import qstr
from .exact.mpoly import xvars
from . import sampling

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAPABILITY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_range(text, default=None):
    """'3' -> [3]; '2..4' -> [2, 3, 4]; '' -> default."""
    if text is None:
        return default
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(text)]
    except ValueError:
        raise UsageError(f"bad range {text!r}") from None


def parse_pair(text, default=None):
    if text is None:
        return default
    try:
        parts = [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"bad pair {text!r}") from None
    if len(parts) == 1:
        return (parts[0], parts[0])
    if len(parts) != 2:
        raise UsageError(f"expected one or two integers, got {text!r}")
    return tuple(parts)


def config_of(args):
    cfg = {k: v for k, v in sorted(vars(args).items()) if k not in ("out", "func")}
    return cfg


def config_hash(cfg):
    blob = json.dumps(cfg, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def instance_rng(seed, *parts):
    return random.Random(":".join(str(p) for p in (seed,) + parts))


def rerun(command, **flags):
    out = ["almostcomm", command]
    for k, v in flags.items():
        out += [f"--{k.replace('_', '-')}", str(v)]
    return " ".join(out)


# subcommands; each returns (results, columns, failure witness or None)


def cmd_classify(args):
    ns = parse_range(args.n, [2, 3, 4])
    results, witness = [], None
    for n in ns:
        pairs = [(a, b) for a in range(n + 1) for b in range(a, n + 1)]
        if args.k is not None:
            pairs = [parse_pair(args.k)]
        for k1, k2 in pairs:
            for idx in range(args.samples):
                r = instance_rng(args.seed, "classify", n, k1, k2, idx)
                params = points.NormalFormParams(
                    sampling.distinct_rationals(r, n), sampling.rationals(r, n), k1, k2
                )
                q = points.normal_form(params)
                if args.conjugate:
                    q = q.conjugate(sampling.invertible_matrix(r, n))
                got = points.classify_generic(q)
                want_dims = (n - k2, k1)
                ok = got["dims"] == want_dims and (("component" in got) == (k1 == k2))
                if k1 == k2:
                    ok = ok and got.get("component") == k1
                label = f"M_{got['component']}" if "component" in got else got["locus"]
                results.append({"n": n, "k1": k1, "k2": k2, "sample": idx, "label": label,
                                "dims": list(got["dims"]), "pass": ok})
                if not ok and witness is None:
                    witness = {"instance": q.to_json(), "expectedDims": list(want_dims),
                               "rerun": rerun("classify", n=n, k=f"{k1},{k2}", seed=args.seed, samples=idx + 1)}
    return results, ["n", "k1", "k2", "sample", "label", "dims", "pass"], witness


def cmd_normal_form(args):
    ns = parse_range(args.n, [3])
    if len(ns) != 1:
        raise UsageError("normal-form takes a single --n")
    n = ns[0]
    k1, k2 = parse_pair(args.k, (0, 0))
    r = instance_rng(args.seed, "normal-form", n, k1, k2)
    try:
        params = points.NormalFormParams(sampling.distinct_rationals(r, n), sampling.rationals(r, n), k1, k2)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    q = points.normal_form(params)
    dims = points.subspace_dims(q)
    ok = points.on_variety(q) and dims == (n - k2, k1)
    row = {"n": n, "k1": k1, "k2": k2, "point": q.to_json(), "dims": list(dims),
           "onVariety": points.on_variety(q), "pass": ok}
    witness = None if ok else {"instance": q.to_json(), "rerun": rerun("normal-form", n=n, k=f"{k1},{k2}", seed=args.seed)}
    return [row], ["n", "k1", "k2", "dims", "onVariety", "pass"], witness


def cmd_quiver_components(args):
    if args.quiver not in quiver.AFFINE:
        raise UsageError(f"unknown quiver {args.quiver!r}; choose from {sorted(quiver.AFFINE)}")
    ns = parse_range(args.n, [1, 2, 3, 4, 5, 6])
    results, witness = [], None
    for n in ns:
        fa = quiver.framed(args.quiver, n)
        lam = (0,) * fa.quiver.vertex_count
        count = quiver.component_count(fa.quiver, lam, fa.alpha, max_parts=args.max_parts, max_roots=args.max_roots)
        dim = quiver.expected_dim(fa.quiver, fa.alpha)
        delta_sq = sum(d * d for d in fa.delta)
        ok = count == n + 1 and dim == n * n * delta_sq + 2 * n
        results.append({"quiver": args.quiver, "n": n, "alpha": list(fa.alpha), "components": count,
                        "expectedDim": dim, "pass": ok})
        if not ok and witness is None:
            witness = {"quiver": fa.quiver.to_json(), "alpha": list(fa.alpha),
                       "rerun": rerun("quiver-components", quiver=args.quiver, n=n)}
    return results, ["quiver", "n", "alpha", "components", "expectedDim", "pass"], witness


def random_poly(r, n, max_degree, max_terms=4):
    terms = {}
    for _ in range(r.randint(1, max_terms)):
        d = r.randint(0, max_degree)
        e = [0] * n
        for _ in range(d):
            e[r.randrange(n)] += 1
        terms[tuple(e)] = sampling.nonzero_rational(r)
    return MPoly(xvars(n), terms)


def cmd_dunkl_check(args):
    ns = parse_range(args.n, [3])
    results, witness = [], None
    for n in ns:
        for idx in range(args.samples):
            r = instance_rng(args.seed, "dunkl", n, idx)
            f = random_poly(r, n, args.degree)
            i, j = r.randrange(n), r.randrange(n)
            defects = cherednik.relation_defects(n, f, i, j)
            failed = sorted(name for name, d in defects.items() if not d.is_zero())
            results.append({"n": n, "sample": idx, "i": i + 1, "j": j + 1, "degree": f.total_degree(),
                            "relations": len(defects), "failed": ";".join(failed), "pass": not failed})
            if failed and witness is None:
                witness = {"poly": f.to_json(), "i": i + 1, "j": j + 1, "failed": failed,
                           "rerun": rerun("dunkl-check", n=n, seed=args.seed, samples=idx + 1)}
    return results, ["n", "sample", "i", "j", "degree", "relations", "failed", "pass"], witness


def cmd_freeness(args):
    ns = parse_range(args.n, [2])
    ks = parse_range(args.k, [1])
    bound = parse_pair(args.bound, (4, 4))
    results, witness = [], None
    for n in ns:
        for k in ks:
            rep = altpoly.freeness_certificate(n, k, bound)
            results.append({"n": n, "k": k, "bound": list(bound), "generators": len(rep.generators),
                            "generatorBidegrees": [list(d) for d in rep.generators],
                            "verifiedUpTo": list(rep.verified_up_to) if rep.verified_up_to else None,
                            "status": rep.status, "pass": rep.certified})
            if not rep.certified and witness is None:
                witness = dict(rep.witness, rerun=rerun("freeness", n=n, k=k, bound=f"{bound[0]},{bound[1]}"))
    return results, ["n", "k", "bound", "generators", "verifiedUpTo", "status", "pass"], witness


def compositions(n):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def regular_instance(sizes, heights):
    """Block-diagonal Jordan X with eigenvalues 0, 1, 2, ... and i of the given block heights."""
    n = sum(sizes)
    X = [[0] * n for _ in range(n)]
    i = [0] * n
    start = 0
    for z, (m, h) in enumerate(zip(sizes, heights)):
        for r in range(m):
            X[start + r][start + r] = z
            if r + 1 < m:
                X[start + r][start + r + 1] = 1
            if r < h:
                i[start + r] = 1
        start += m
    return RatMatrix.from_rows(X), i


def cmd_strata_scan(args):
    ns = parse_range(args.n, [1, 2, 3, 4])
    results, witness = [], None
    for n in ns:
        for sizes in compositions(n):
            for heights in product(*(range(m + 1) for m in sizes)):
                X, i = regular_instance(sizes, heights)
                if args.conjugate:
                    g = sampling.invertible_matrix(instance_rng(args.seed, "strata", sizes, heights), n)
                    X = g @ X @ g.inverse()
                    i = list(g @ RatVector(i))
                relevant = strata.is_relevant(X, i)
                nil = strata.all_Y_nilpotent(strata.conormal_space(X, i))
                ok = relevant == nil
                results.append({"n": n, "blocks": list(sizes), "heights": list(heights),
                                "relevant": relevant, "nilpotent": nil, "pass": ok})
                if not ok and witness is None:
                    witness = {"X": X.to_json(), "i": [qstr(Q(v)) for v in i],
                               "rerun": rerun("strata-scan", n=n, seed=args.seed)}
    return results, ["n", "blocks", "heights", "relevant", "nilpotent", "pass"], witness


def cmd_pbw_count(args):
    ns = parse_range(args.n, [2])
    ds = parse_range(args.degree, [0, 1, 2])
    results = []
    for n in ns:
        for d in ds:
            got = cherednik.pbw_count(n, d, seed=args.seed)
            want = cherednik.expected_pbw_count(n, d)
            results.append({"n": n, "d": d, "count": got, "expected": want, "pass": got == want})
    witness = next(({"n": r["n"], "d": r["d"], "rerun": rerun("pbw-count", n=r["n"], degree=r["d"])}
                    for r in results if not r["pass"]), None)
    return results, ["n", "d", "count", "expected", "pass"], witness


COMMANDS = {
    "classify": (cmd_classify, "classify normal-form points by their component"),
    "normal-form": (cmd_normal_form, "emit one normal-form point and its invariants"),
    "quiver-components": (cmd_quiver_components, "count components of framed affine quiver varieties"),
    "dunkl-check": (cmd_dunkl_check, "check the Dunkl relations on random polynomials"),
    "freeness": (cmd_freeness, "certify freeness of A^k up to a bidegree bound"),
    "strata-scan": (cmd_strata_scan, "compare relevance with nilpotency of conormal spaces"),
    "pbw-count": (cmd_pbw_count, "count independent reverse-ordered PBW monomials"),
}


def build_parser():
    parser = argparse.ArgumentParser(prog="almostcomm", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (func, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--n", help="size or inclusive range like 2..4")
        p.add_argument("--k", help="k, a range, or a pair k',k''")
        p.add_argument("--bound", help="bidegree bound a,b")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", help="write the report here instead of stdout")
        if name in ("classify", "dunkl-check"):
            p.add_argument("--samples", type=int, default=3 if name == "classify" else 100)
        if name in ("classify", "strata-scan"):
            p.add_argument("--conjugate", action="store_true", help="apply a seeded change of basis")
        if name == "dunkl-check":
            p.add_argument("--degree", type=int, default=5)
        if name == "pbw-count":
            p.add_argument("--degree", help="degree or range, default 0..2")
        if name == "quiver-components":
            p.add_argument("--quiver", default="jordan", help="jordan, A1, A2 or D4")
            p.add_argument("--max-parts", type=int, default=quiver.DEFAULT_MAX_PARTS)
            p.add_argument("--max-roots", type=int, default=quiver.DEFAULT_MAX_ROOTS)
    return parser


def render(report, columns, fmt):
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["# version", report["version"], "configHash", report["configHash"], "status", report["status"]])
    w.writerow(columns)
    for row in report["results"]:
        w.writerow([json.dumps(row[c]) if isinstance(row[c], (list, dict)) else row[c] for c in columns])
    if report.get("witness"):
        w.writerow(["# witness", json.dumps(report["witness"], sort_keys=True)])
    return buf.getvalue()


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    cfg = config_of(args)
    report = {"command": args.command, "version": __version__, "config": cfg, "configHash": config_hash(cfg)}
    columns = ["error"]
    try:
        results, columns, witness = args.func(args)
        report.update(results=results, status="pass" if witness is None else "fail")
        if witness is not None:
            report["witness"] = witness
        code = EXIT_OK if witness is None else EXIT_FAIL
    except UsageError as exc:
        print(f"almostcomm: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapabilityError as exc:
        report.update(results=[], status="capability-error", error=f"{type(exc).__name__}: {exc}")
        code = EXIT_CAPABILITY
    text = render(report, columns, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if code == EXIT_CAPABILITY:
        print(f"almostcomm: {report['error']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
