"""Command line front end with a versioned JSON report schema.

Commands: roots, irrep, homology, cohomology, duality, kostant,
complexgroup, selftest.  Every command accepts --output {json,table},
--threads, --max-dim and --cache-dir; the remaining flags are command
specific and anything else is rejected.  The shifted parameter lambda is
given in fundamental-weight coordinates as comma-separated rationals
("p/q" or integers); reports echo the unshifted lowest weight
mu = lambda + rho next to it so the two conventions cannot be confused.

Exit codes: 0 ok, 1 mismatch (prediction vs computation, or a duality
violation), 2 usage or resource errors.

JSON reports use schema "nh-lab/1": rationals are strings, weights are
arrays of rationals, homology tables are arrays of {degree, weight,
mult} sorted by (degree, weight).  Output is byte-identical across runs
and thread counts.
"""

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import complexflag, koszul, kostant, repbuilder, rootsys, selftest
from .chevalley import build_chevalley
from .errors import ChainRejected, InvalidParameter, NhlabError, \
    ResourceLimitExceeded

SCHEMA = "nh-lab/1"

_COMMANDS = ("roots", "irrep", "homology", "cohomology", "duality",
             "kostant", "complexgroup", "selftest")


@dataclass
class Request:
    command: str
    type_label: str = ""
    rank: int = 0
    lam: tuple = ()
    parabolic: tuple = ()
    chain: tuple = ()
    enumerate_chains: bool = False
    output: str = "json"
    threads: int = 1
    max_dim: int = repbuilder.DEFAULT_MAX_DIM
    cache_dir: str = None
    raw_argv: tuple = field(default=(), repr=False)


def _rational_list(text):
    try:
        return tuple(Fraction(part) for part in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            "expected comma-separated rationals like -2,1/2, got %r" % (text,))


def _int_list(text):
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected comma-separated integers, got %r" % (text,))


def _positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer, got %r" % (text,))
    if v <= 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def _normalize_argv(argv):
    """Join value-taking flags with values that look like options.

    Lets ``--lambda -2,-2`` work even though the value starts with a dash.
    """
    joined = []
    skip = False
    value_flags = {"--lambda", "--parabolic", "--chain"}
    for k, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if tok in value_flags and k + 1 < len(argv):
            joined.append("%s=%s" % (tok, argv[k + 1]))
            skip = True
        else:
            joined.append(tok)
    return joined


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="nhlab",
        description="Exact nilradical homology of Lie algebra representations")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "table"), default="json")
    common.add_argument("--threads", type=_positive_int, default=1,
                        help="worker bound for weight-block ranks; "
                             "never affects output bytes")
    common.add_argument("--max-dim", type=_positive_int,
                        default=repbuilder.DEFAULT_MAX_DIM,
                        help="bound on constructed module dimensions")
    common.add_argument("--cache-dir", default=None,
                        help="directory for the structure-constant cache")

    system = argparse.ArgumentParser(add_help=False)
    system.add_argument("--type", required=True, dest="type_label",
                        metavar="{A..G}")
    system.add_argument("--rank", required=True, type=_positive_int)

    lam = argparse.ArgumentParser(add_help=False)
    lam.add_argument("--lambda", required=True, dest="lam", type=_rational_list,
                     help="shifted parameter, fundamental-weight coordinates")

    sub.add_parser("roots", parents=[common, system],
                   help="root system data")
    sub.add_parser("irrep", parents=[common, system, lam],
                   help="build the irreducible module with lowest weight "
                        "lambda + rho")
    for name in ("homology", "cohomology", "duality", "kostant"):
        p = sub.add_parser(name, parents=[common, system, lam])
        p.add_argument("--parabolic", type=_int_list, default=(),
                       help="Levi simple-root indices (default: Borel)")
    p = sub.add_parser("complexgroup", parents=[common, system, lam],
                       help="standard-module homology prediction along a chain")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--chain", type=_int_list, default=(),
                       help="signed 1-based positive-root indices")
    group.add_argument("--enumerate-chains", action="store_true",
                       help="predict along every chain up to length N")
    sub.add_parser("selftest", parents=[common],
                   help="run the built-in invariant suite")
    return parser


def parse(argv):
    """Parse an argv list into a Request (usage errors exit with code 2)."""
    ns = _build_parser().parse_args(_normalize_argv(list(argv)))
    return Request(
        command=ns.command,
        type_label=getattr(ns, "type_label", ""),
        rank=getattr(ns, "rank", 0),
        lam=getattr(ns, "lam", ()),
        parabolic=tuple(getattr(ns, "parabolic", ())),
        chain=tuple(getattr(ns, "chain", ())),
        enumerate_chains=getattr(ns, "enumerate_chains", False),
        output=ns.output,
        threads=ns.threads,
        max_dim=ns.max_dim,
        cache_dir=ns.cache_dir,
        raw_argv=tuple(argv),
    )


# -- serialization ----------------------------------------------------------

def _frac(x):
    return str(Fraction(x))


def _weight_json(w):
    return [_frac(c) for c in w.coords]


def _root_json(r):
    return {"simple_coords": list(r.simple_coords),
            "fw_coords": _weight_json(r.fw),
            "coroot_coords": list(r.coroot_coords),
            "height": r.height}


def _weyl_json(w):
    return {"word": list(w.word), "length": w.length}


def _table_json(table):
    return [{"degree": p, "weight": _weight_json(nu), "mult": m}
            for (p, nu), m in table.sorted_entries()]


def _total_dims_json(table):
    return [[p, n] for p, n in sorted(table.total_dims.items())]


def _request_echo(req, rs=None):
    echo = {"command": req.command}
    if req.command != "selftest":
        echo["type"] = req.type_label
        echo["rank"] = req.rank
    if req.lam:
        echo["lambda"] = [_frac(c) for c in req.lam]
        if rs is not None:
            echo["mu"] = _weight_json(rs.weight(*req.lam) + rs.rho)
    if req.command in ("homology", "cohomology", "duality", "kostant"):
        echo["parabolic"] = sorted(req.parabolic)
    if req.command == "complexgroup":
        if req.enumerate_chains:
            echo["enumerate_chains"] = True
        else:
            echo["chain"] = list(req.chain)
    echo["output"] = req.output
    echo["threads"] = req.threads
    return echo


# -- execution ---------------------------------------------------------------

class _StageError(NhlabError):
    def __init__(self, module, original):
        super().__init__(str(original))
        self.module = module
        self.original = original


def _stage(module, fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except NhlabError as exc:
        raise _StageError(module, exc)


def _homology_pipeline(req, rs):
    alg = _stage("chevalley", build_chevalley, rs, cache_dir=req.cache_dir)
    lam = rs.weight(*req.lam)
    module = _stage("repbuilder", repbuilder.build_irrep, alg, lam,
                    max_dim=req.max_dim)
    parab = _stage("rootsys", rootsys.parabolic, rs, req.parabolic)
    cx = _stage("koszul", koszul.build_complex, module, parab)
    h = _stage("koszul", koszul.homology, cx, threads=req.threads)
    if req.parabolic:
        pred = _stage("kostant", kostant.predict_parabolic, rs, lam,
                      req.parabolic)
    else:
        pred = _stage("kostant", kostant.predict_borel, rs, lam)
    mismatches = kostant.compare(pred, h)
    return module, parab, h, pred, mismatches


def _prediction_json(pred):
    return [{"degree": p, "weight": _weight_json(nu), "weyl": _weyl_json(w),
             "mult": m} for (p, nu, w, m) in pred.entries]


def _mismatches_json(mismatches):
    return [{"degree": m["degree"], "weight": _weight_json(m["weight"]),
             "predicted": m["predicted"], "computed": m["computed"]}
            for m in mismatches]


def execute(req):
    """Run a request; returns (report dict, exit code)."""
    try:
        return _execute_inner(req)
    except _StageError as exc:
        code = 2
        report = {
            "schema": SCHEMA,
            "request": _request_echo(req),
            "status": "error",
            "error": {"module": exc.module, "message": str(exc.original)},
        }
        return report, code
    except NhlabError as exc:
        report = {
            "schema": SCHEMA,
            "request": _request_echo(req),
            "status": "error",
            "error": {"module": "cli", "message": str(exc)},
        }
        return report, 2


def _execute_inner(req):
    if req.command == "selftest":
        results, passed, failed = selftest.run_all()
        status = "ok" if failed == 0 else "mismatch"
        report = {
            "schema": SCHEMA,
            "request": _request_echo(req),
            "status": status,
            "results": {"checks": results, "passed": passed, "failed": failed},
        }
        return report, 0 if failed == 0 else 1

    rs = _stage("rootsys", rootsys.build_root_system, req.type_label, req.rank)
    if req.lam and len(req.lam) != rs.rank:
        raise _StageError("cli", InvalidParameter(
            "lambda needs %d coordinates, got %d" % (rs.rank, len(req.lam))))
    echo = _request_echo(req, rs)
    report = {"schema": SCHEMA, "request": echo, "status": "ok", "results": {}}
    code = 0

    if req.command == "roots":
        report["results"] = {
            "cartan_matrix": [list(row) for row in rs.cartan],
            "rho": _weight_json(rs.rho),
            "weyl_order": rs.weyl_order,
            "positive_roots": [_root_json(r) for r in rs.positive_roots],
        }

    elif req.command == "irrep":
        alg = _stage("chevalley", build_chevalley, rs, cache_dir=req.cache_dir)
        module = _stage("repbuilder", repbuilder.build_irrep, alg,
                        rs.weight(*req.lam), max_dim=req.max_dim)
        mults = module.weight_multiplicities()
        action = {}
        for label in alg.basis:
            if label[0] == "h":
                name = "h%d" % label[1]
            else:
                name = "e[%s]" % ",".join(str(c) for c in label[1])
            action[name] = [[i, j, _frac(v)]
                            for (i, j), v in sorted(module.action[label].items())]
        report["results"] = {
            "dimension": module.dimension,
            "lowest_weight": _weight_json(module.lowest_weight),
            "weights": [{"weight": _weight_json(w), "mult": m}
                        for w, m in sorted(mults.items())],
            "basis_weights": [_weight_json(w) for w in module.basis_weights],
            "action": action,
        }

    elif req.command in ("homology", "duality"):
        module, parab, h, pred, mismatches = _homology_pipeline(req, rs)
        results = {
            "nilradical_dim": parab.dim_nilradical,
            "sigma": _weight_json(parab.sigma),
            "module_dimension": module.dimension,
            "table": _table_json(h),
            "total_dims": _total_dims_json(h),
            "prediction": _prediction_json(pred),
            "mismatches": _mismatches_json(mismatches),
        }
        if mismatches:
            report["status"] = "mismatch"
            code = 1
        if req.command == "duality":
            c = _stage("koszul", koszul.cohomology, module, parab,
                       threads=req.threads)
            violations = _stage("koszul", koszul.check_duality, h, c, parab)
            results["cohomology_table"] = _table_json(c)
            results["duality_violations"] = [
                {"degree": v["degree"], "weight": _weight_json(v["weight"]),
                 "homology": v["homology"], "cohomology": v["cohomology"]}
                for v in violations]
            if violations:
                report["status"] = "mismatch"
                code = 1
        report["results"] = results

    elif req.command == "cohomology":
        alg = _stage("chevalley", build_chevalley, rs, cache_dir=req.cache_dir)
        module = _stage("repbuilder", repbuilder.build_irrep, alg,
                        rs.weight(*req.lam), max_dim=req.max_dim)
        parab = _stage("rootsys", rootsys.parabolic, rs, req.parabolic)
        c = _stage("koszul", koszul.cohomology, module, parab,
                   threads=req.threads)
        report["results"] = {
            "nilradical_dim": parab.dim_nilradical,
            "table": _table_json(c),
            "total_dims": _total_dims_json(c),
        }

    elif req.command == "kostant":
        lam = rs.weight(*req.lam)
        if req.parabolic:
            pred = _stage("kostant", kostant.predict_parabolic, rs, lam,
                          req.parabolic)
        else:
            pred = _stage("kostant", kostant.predict_borel, rs, lam)
        report["results"] = {
            "entries": _prediction_json(pred),
            "expanded": _table_json(pred.expanded),
        }

    elif req.command == "complexgroup":
        lam = rs.weight(*req.lam)
        chi = complexflag.CharacterParam.from_shifted(rs, lam)
        if req.enumerate_chains:
            chains = _stage("complexflag", complexflag.enumerate_chains, rs,
                            len(rs.positive_roots))
            report["results"] = {
                "chains": [_chain_prediction_json(rs, chi, chain)
                           for chain in chains],
            }
        else:
            chain = _stage("complexflag", complexflag.validate_chain, rs,
                           req.chain)
            report["results"] = _chain_prediction_json(rs, chi, chain)

    else:  # pragma: no cover - argparse restricts the command set
        raise _StageError("cli", InvalidParameter("unknown command"))

    return report, code


def _chain_prediction_json(rs, chi, chain):
    pred = complexflag.predict_standard(rs, chi, chain)
    return {
        "chain_roots": [list(r.simple_coords) for r in chain.roots],
        "gallery_word": list(chain.gallery_word),
        "weyl": _weyl_json(chain.weyl_element),
        "degree": pred.degree,
        "chi_w": _weight_json(pred.chi_w_differential),
        "character_differential": _weight_json(pred.character_differential),
    }


# -- text rendering -----------------------------------------------------------

def _render_table(report):
    lines = []
    req = report["request"]
    lines.append("command: %s" % req["command"])
    status = report["status"]
    if status == "error":
        lines.append("error [%s]: %s" % (report["error"]["module"],
                                         report["error"]["message"]))
        return "\n".join(lines) + "\n"
    results = report["results"]
    for key in ("table", "cohomology_table", "expanded"):
        if key in results:
            lines.append("%s:" % key)
            lines.extend(_grid(results[key]))
    skip = {"table", "cohomology_table", "expanded", "basis_weights", "action",
            "positive_roots", "prediction", "chains", "checks"}
    for key, value in results.items():
        if key not in skip:
            lines.append("%s: %s" % (key, json.dumps(value)))
    if "checks" in results:
        for chk in results["checks"]:
            lines.append("%-28s %s" % (chk["name"], chk["status"]))
    lines.append("status: %s" % status)
    return "\n".join(lines) + "\n"


def _grid(entries):
    """Degrees as rows, weights as columns."""
    weights = sorted({tuple(e["weight"]) for e in entries})
    degrees = sorted({e["degree"] for e in entries})
    lookup = {(e["degree"], tuple(e["weight"])): e["mult"] for e in entries}
    header = ["p\\weight"] + ["(%s)" % ",".join(w) for w in weights]
    widths = [max(len(header[0]), 2)] + [len(h) for h in header[1:]]
    out = ["  " + "  ".join(h.rjust(w) for h, w in zip(header, widths))]
    for p in degrees:
        row = [str(p).rjust(widths[0])]
        for k, w in enumerate(weights):
            row.append(str(lookup.get((p, w), 0)).rjust(widths[k + 1]))
        out.append("  " + "  ".join(row))
    return out


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    try:
        req = parse(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    report, code = execute(req)
    if req.output == "json":
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        sys.stdout.write(_render_table(report))
    return code


def run():  # console script entry point
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
