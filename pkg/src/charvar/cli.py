"""Command-line front end.

Exit codes: 0 success, 2 validation error (machine-readable JSON on stdout),
1 internal failure, 64 usage error.
"""

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from . import cache, fq
from .arith import UniPoly, ZWPoly, format_zw
from .errors import CacheVersionError, CharvarError, SizeGuardError, SizingError, ValidationError
from . import kernel, macdonald
from .kernel import hlv_kernel
from .macdonald import format_qt, htilde_qt
from .partitions import as_partition, partitions
from .varieties import (auto_surface, dim_charvar, e_polynomial, genericity_failure, jordan_data,
                        mixed_hodge_at_q1, mixed_hodge_at_v, mixed_hodge_conjectural, poincare_ih,
                        poincare_ss, resolution_identity_report, surface_from_json, trivial_eta_for,
                        twisted_poincare)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_VALIDATION = 2
EXIT_USAGE = 64

VERBS = ("poincare", "poincare-ss", "twisted", "epoly", "mixed-hodge", "kernel", "macdonald",
         "count-points", "fricke-count", "check-identities", "cache")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write("%s: error: %s\n" % (self.prog, message))
        raise UsageError(message)


# ---------------------------------------------------------------------------
# encoding helpers
# ---------------------------------------------------------------------------

def poly_json(p):
    """``[[exp, "coeff"], ...]`` with a re-parse check."""
    data = p.to_json()
    if UniPoly.from_json(data) != p:
        raise CharvarError("polynomial JSON round trip failed")
    return data


def bipoly_json(p):
    data = p.to_json()
    if ZWPoly.from_json(data) != p:
        raise CharvarError("polynomial JSON round trip failed")
    return data


def dumps(doc):
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def _load_json_arg(text, what):
    if text is None:
        raise ValidationError("%s is required" % what)
    if text.startswith("@"):
        try:
            text = Path(text[1:]).read_text(encoding="utf-8")
        except OSError as exc:
            raise ValidationError("cannot read %s: %s" % (what, exc))
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError("%s is not valid JSON: %s" % (what, exc))


def _partition_arg(text):
    text = text.strip()
    if text.startswith("["):
        return as_partition(_load_json_arg(text, "--partition"))
    try:
        return as_partition([int(x) for x in text.split(",") if x.strip()])
    except ValueError:
        raise ValidationError("bad partition %r" % text)


def _int_list(text, what):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ValidationError("%s must be comma-separated integers" % what)


def _surface(args):
    return surface_from_json(args.genus, _load_json_arg(args.punctures, "--punctures"), args.rank)


def _surface_doc(s):
    why = genericity_failure(s)
    return {"n": s.rank, "genus": s.genus, "k": s.k, "generic": why is None}


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------

def cmd_poincare(args):
    s = _surface(args)
    doc = _surface_doc(s)
    p = poincare_ih(s)
    doc.update(dim=dim_charvar(s), poincare=poly_json(p))
    return doc, [("exp", "coeff")] + p.to_json(), "P(v) = " + p.format("v")


def cmd_poincare_ss(args):
    nus = [as_partition(x) for x in _load_json_arg(args.nus, "--nus")]
    if not nus:
        raise ValidationError("--nus needs at least one partition")
    p = poincare_ss(args.genus, nus)
    s = auto_surface(args.genus, [[(1,) * m for m in nu] for nu in nus])
    doc = {"n": s.rank, "genus": s.genus, "k": s.k, "generic": True, "dim": dim_charvar(s),
           "poincare": poly_json(p)}
    return doc, [("exp", "coeff")] + p.to_json(), "P(v) = " + p.format("v")


def cmd_twisted(args):
    s = _surface(args)
    eta = _load_json_arg(args.eta, "--eta") if args.eta else trivial_eta_for(s)
    p = twisted_poincare(s, eta)
    doc = _surface_doc(s)
    doc.update(dim=dim_charvar(s), eta=eta, twisted=poly_json(p))
    return doc, [("exp", "coeff")] + p.to_json(), "P_eta(v) = " + p.format("v")


def cmd_epoly(args):
    s = _surface(args)
    e = e_polynomial(s)
    doc = _surface_doc(s)
    doc.update(dim=dim_charvar(s), epoly=poly_json(e))
    return doc, [("exp", "coeff")] + e.to_json(), "E(q) = " + e.format("q")


def cmd_mixed_hodge(args):
    s = _surface(args)
    h = mixed_hodge_conjectural(s)
    doc = _surface_doc(s)
    doc.update(dim=dim_charvar(s), conjectural=True, variables=["q", "v"], mixed_hodge=bipoly_json(h))
    rows = [("q_exp", "v_exp", "coeff")] + [(a, b, str(c)) for (a, b), c in sorted(h.terms.items())]
    return doc, rows, "H(q, v) = %s  [conjectural]" % format_zw(h, ("q", "v"))


def cmd_kernel(args):
    kr = hlv_kernel(args.n, args.genus, args.punctures_count)
    doc = {"n": kr.n, "genus": kr.g, "k": kr.k, "terms": kr.to_json()}
    rows = [("p_multi", "num", "den")]
    lines = []
    for key, c in kr.to_json():
        label = ";".join(",".join(str(x) for x in lam) for lam in key)
        rows.append((label, dumps(c["num"]), dumps(c["den"])))
        fe = kr.kernel.coeffs[tuple(tuple(lam) for lam in key)]
        lines.append("p[%s]: %s" % (label, fe.format()))
    return doc, rows, "\n".join(lines)


def cmd_macdonald(args):
    mu = _partition_arg(args.partition)
    coeffs = htilde_qt(mu)
    table = {}
    for lam in sorted(coeffs, reverse=True):
        table["s[%s]" % ",".join(str(x) for x in lam)] = format_qt(coeffs[lam].dilate(2))
    doc = {"partition": list(mu), "htilde": table}
    rows = [("schur", "coeff")] + sorted(table.items(), reverse=True)
    text = " + ".join("(%s)*%s" % (c, name) for name, c in rows[1:])
    return doc, rows, "H~%s = %s" % (list(mu), text)


def _fq_specs(q, punctures):
    """Parse F_q classes.

    Each puncture is ``{"eigenvalues": [{"value": a, "mult": m, "jordan": [...]}, ...]}``
    where a non-split factor uses ``"poly": [c0, ..., c_{d-1}]`` instead of
    ``"value"``; or ``{"auto": true, "jordan": [[...], ...]}`` for every
    puncture, which searches for generic eigenvalues in F_q^*.
    """
    if not isinstance(punctures, list) or not punctures:
        raise ValidationError("punctures must be a nonempty list")
    if all(isinstance(p, dict) and p.get("auto") for p in punctures):
        layout = [[as_partition(j) for j in p.get("jordan", [])] for p in punctures]
        if any(not js for js in layout):
            raise ValidationError("auto punctures over F_q need explicit jordan data")
        found = fq.find_generic_split(q, layout)
        if not found:
            raise ValidationError("no generic eigenvalues exist in F_%d^* for this layout" % q)
        return found[0]
    specs = []
    for p in punctures:
        if not isinstance(p, dict) or not isinstance(p.get("eigenvalues"), list):
            raise ValidationError("each puncture needs an eigenvalues list")
        blocks = []
        for e in p["eigenvalues"]:
            jordan = as_partition(e.get("jordan", [1] * int(e.get("mult", 1))))
            mult = int(e.get("mult", sum(jordan)))
            if "poly" in e:
                factor = [int(c) for c in e["poly"]]
            elif "value" in e:
                factor = int(e["value"])
            else:
                raise ValidationError("eigenvalue needs a value or a poly")
            blocks.append((factor, mult, jordan))
        specs.append(fq.FqClassSpec(blocks, q))
    return specs


def cmd_count_points(args):
    qs = _int_list(args.q, "--q")
    if not qs:
        raise ValidationError("--q is required")
    punctures = _load_json_arg(args.punctures, "--punctures")
    counts = []
    for q in qs:
        specs = _fq_specs(q, punctures)
        if args.rank is not None and specs[0].n != args.rank:
            raise ValidationError("class data has rank %d but --rank is %d" % (specs[0].n, args.rank))
        counts.append({"q": q, "count": fq.count_points(args.genus, q, specs)})
    rows = [("q", "count")] + [(c["q"], c["count"]) for c in counts]
    if len(counts) == 1:
        doc = dict(counts[0])
    else:
        coeffs = fq.lagrange([(c["q"], c["count"]) for c in counts])
        poly = UniPoly(coeffs)
        doc = {"counts": counts, "interpolated_E": poly_json(poly)}
    text = "\n".join("q=%d: %d" % (c["q"], c["count"]) for c in counts)
    if "interpolated_E" in doc:
        text += "\ninterpolated E(q) = " + UniPoly.from_json(doc["interpolated_E"]).format("q")
    return doc, rows, text


def cmd_fricke_count(args):
    q = args.q_single
    if not fq.is_prime(q):
        raise ValidationError("q must be prime")
    traces = _int_list(args.traces, "--traces")
    if len(traces) != 4:
        raise ValidationError("--traces needs tr X1, tr X2, tr X3, tr X1X2X3")
    dets = _int_list(args.dets, "--dets") if args.dets else None
    if dets is not None and len(dets) != 3:
        raise ValidationError("--dets needs det X1, det X2, det X3")
    count = fq.fricke_count(q, traces, dets)
    A, B, C, D = fq.fricke_coefficients(traces)
    doc = {"q": q, "count": count, "coefficients": {"A": A, "B": B, "C": C, "D": D}}
    if dets is not None:
        doc["dets"] = dets
    return doc, [("q", "count"), (q, count)], "q=%d: %d points" % (q, count)


def _jordan_tuples(n, k):
    """Multisets of ``k`` one-puncture Jordan data of rank ``n``."""
    data = jordan_data(n)
    out = []

    def rec(start, acc):
        if len(acc) == k:
            out.append(list(acc))
            return
        for i in range(start, len(data)):
            rec(i, acc + [data[i]])

    rec(0, [])
    return out


def check_identities(max_rank, genus, k):
    """Run the identity suite on every Jordan layout up to ``max_rank``."""
    results = {"resolution_identity": "pass", "twisted_trivial_eta": "pass", "mixed_hodge_slices": "pass"}
    failures = []
    checked = 0
    for n in range(1, max_rank + 1):
        for layout in _jordan_tuples(n, k):
            s = auto_surface(genus, layout)
            if dim_charvar(s) < 0:
                continue
            checked += 1
            rep = resolution_identity_report(s)
            if not rep["ok"]:
                results["resolution_identity"] = "fail"
                failures.append({"check": "resolution_identity", "jordan": layout})
            if twisted_poincare(s, trivial_eta_for(s)) != rep["lhs"]:
                results["twisted_trivial_eta"] = "fail"
                failures.append({"check": "twisted_trivial_eta", "jordan": layout})
            h = mixed_hodge_conjectural(s)
            if mixed_hodge_at_q1(h) != poincare_ih(s) or mixed_hodge_at_v(h, -1) != e_polynomial(s):
                results["mixed_hodge_slices"] = "fail"
                failures.append({"check": "mixed_hodge_slices", "jordan": layout})
    results["checked"] = checked
    if failures:
        results["failures"] = [{"check": f["check"], "jordan": [[list(m) for m in p] for p in f["jordan"]]}
                               for f in failures]
    return results


def cmd_check_identities(args):
    doc = check_identities(args.max_rank, args.genus, args.punctures_count)
    rows = [("check", "result")] + [(k, v) for k, v in sorted(doc.items()) if isinstance(v, str)]
    text = "\n".join("%s: %s" % (k, v) for k, v in sorted(doc.items()) if isinstance(v, str))
    return doc, rows, text


def cmd_cache(args):
    if args.action == "status":
        doc = cache.status()
    elif args.action == "clear":
        doc = {"removed": cache.clear()}
    else:
        if args.n is None:
            raise ValidationError("cache warm needs --n")
        for d in range(1, args.n + 1):
            for mu in partitions(d):
                macdonald.persist(mu)
        kernel.persist(args.n, args.genus, args.punctures_count)
        doc = {"warmed": {"n": args.n, "genus": args.genus, "k": args.punctures_count}}
        doc["status"] = cache.status()
    rows = [("key", "value")] + [(k, dumps(v)) for k, v in sorted(doc.items())]
    return doc, rows, dumps(doc)


# ---------------------------------------------------------------------------
# parser and dispatch
# ---------------------------------------------------------------------------

def _add_common(p):
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    p.add_argument("--cache-dir", help="cache directory (default: $%s or %s)" % (cache.ENV_VAR, cache.DEFAULT_DIR))


def _add_surface(p, need_rank=False):
    p.add_argument("--genus", type=int, default=0)
    p.add_argument("--rank", type=int, required=need_rank)
    p.add_argument("--punctures", required=True, help="JSON list of punctures or @file")


def build_parser():
    parser = _Parser(prog="charvar", description="Poincare, E- and mixed-Hodge polynomials of character varieties.")
    sub = parser.add_subparsers(dest="verb", parser_class=_Parser)
    sub.required = True
    handlers = {}

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        _add_common(p)
        handlers[name] = fn
        return p

    _add_surface(add("poincare", cmd_poincare, "intersection Poincare polynomial"))
    p = add("poincare-ss", cmd_poincare_ss, "semisimple Poincare polynomial from multiplicities")
    p.add_argument("--genus", type=int, default=0)
    p.add_argument("--nus", required=True, help="JSON list of multiplicity partitions, one per puncture")
    p = add("twisted", cmd_twisted, "twisted Poincare polynomial")
    _add_surface(p)
    p.add_argument("--eta", help="JSON eta index: [puncture][eigenvalue][slot] -> partition")
    _add_surface(add("epoly", cmd_epoly, "E-polynomial in q"))
    _add_surface(add("mixed-hodge", cmd_mixed_hodge, "conjectural mixed-Hodge polynomial"))
    p = add("kernel", cmd_kernel, "degree-n kernel in the power-sum basis")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--genus", type=int, default=0)
    p.add_argument("--punctures", dest="punctures_count", type=int, required=True)
    p = add("macdonald", cmd_macdonald, "modified Macdonald polynomial in the Schur basis")
    p.add_argument("--partition", required=True, help="e.g. 2,1 or [2,1]")
    p = add("count-points", cmd_count_points, "brute-force point count over F_q")
    p.add_argument("--genus", type=int, default=0)
    p.add_argument("--rank", type=int)
    p.add_argument("--punctures", required=True, help="JSON class data over F_q or @file")
    p.add_argument("--q", required=True, help="prime, or comma-separated primes to interpolate")
    p = add("fricke-count", cmd_fricke_count, "points of the trace cubic over F_q")
    p.add_argument("--q", dest="q_single", type=int, required=True)
    p.add_argument("--traces", required=True, help="tr X1,tr X2,tr X3,tr X1X2X3")
    p.add_argument("--dets", help="det X1,det X2,det X3 (omit for SL_2)")
    p = add("check-identities", cmd_check_identities, "run the identity suite over all Jordan data")
    p.add_argument("--max-rank", type=int, default=2)
    p.add_argument("--genus", type=int, default=0)
    p.add_argument("--punctures", dest="punctures_count", type=int, default=1)
    p = add("cache", cmd_cache, "inspect, clear or warm the disk cache")
    p.add_argument("action", choices=("status", "clear", "warm"))
    p.add_argument("--n", type=int)
    p.add_argument("--genus", type=int, default=0)
    p.add_argument("--punctures", dest="punctures_count", type=int, default=1)
    return parser, handlers


def _render(doc, rows, text, fmt):
    if fmt == "json":
        return dumps(doc)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for r in rows:
            w.writerow(r)
        return buf.getvalue().rstrip("\n")
    if doc.get("conjectural") and "conjectural" not in text:
        text += "  [conjectural]"
    return text


def _error(kind, exc, out):
    out.write(dumps({"error": {"type": kind, "message": str(exc)}}) + "\n")


def run(argv, out=None):
    """Parse ``argv``, run one verb and write the document; returns the exit code."""
    out = out or sys.stdout
    parser, handlers = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError:
        return EXIT_USAGE
    except SystemExit as exc:
        # --help exits 0 through argparse
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    if args.cache_dir:
        cache.configure(args.cache_dir)
    elif not os.environ.get(cache.ENV_VAR):
        cache.configure(cache.DEFAULT_DIR)
    try:
        doc, rows, text = handlers[args.verb](args)
    except (ValidationError, SizingError, SizeGuardError, CacheVersionError) as exc:
        _error(type(exc).__name__, exc, out)
        return EXIT_VALIDATION
    except (CharvarError, AssertionError, ArithmeticError) as exc:
        _error(type(exc).__name__, exc, out)
        return EXIT_INTERNAL
    out.write(_render(doc, rows, text, args.format) + "\n")
    return EXIT_OK


def main(argv=None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
