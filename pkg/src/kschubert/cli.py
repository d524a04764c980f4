"""``kschubert`` command-line front end."""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path

from . import __version__
from .demazure import CONVENTION, demazure, euler_char, euler_char_T
from .laurent import LaurentPoly, mono
from .lifts import ordinary_lift, tensor_lift
from .rootdata import CartanDatum, InvalidCartan, NotFiniteType, root_system
from .structconst import (
    chevalley_table,
    equivariant_constants,
    equivariant_partial,
    equivariant_table,
    ordinary_constants,
    ordinary_partial,
    ordinary_table,
)
from .verify import DEFAULT_SEED, SUITES, run_suite
from .weyl import NotMinimalRep, format_word, parabolic, parse_word, weyl_group
from . import wonderful as wd

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class CorruptCache(Exception):
    pass


# -- argument parsing ---------------------------------------------------------------


def _common(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--group", help="built-in label: A1, A2, A3, B2, C2, G2")
    g.add_argument("--cartan", type=Path, help="JSON file holding a Cartan matrix")
    p.add_argument("--out", type=Path, help="write output here instead of stdout")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--cache-dir", type=Path)
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--allow-large", action="store_true", help="permit tensor lifts for |W| > 12")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kschubert", description="K-theoretic Schubert calculus on G/B.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("weyl", help="Weyl group data")
    p.add_argument("action", choices=("list", "bruhat", "cosets", "partition"))
    p.add_argument("--I", dest="I", help="simple roots, 1-based, comma separated")
    _common(p)

    p = sub.add_parser("demazure", help="apply Demazure operators")
    p.add_argument("action", choices=("apply", "chi"))
    p.add_argument("--word", required=True, help='reduced word such as "s1 s2", or "w0"')
    p.add_argument("--weight", help="comma separated weight for a monomial input")
    p.add_argument("--poly", help="LaurentPoly as JSON [[exp, num, den], ...]")
    p.add_argument("--equivariant", action="store_true")
    _common(p)

    p = sub.add_parser("lift", help="Schubert lifts")
    p.add_argument("action", choices=("u0", "rv", "tensor"))
    _common(p)

    p = sub.add_parser("const", help="structure constants")
    p.add_argument("action", choices=("ordinary", "equivariant", "chevalley", "partial"))
    p.add_argument("--all", action="store_true", help="full table")
    p.add_argument("--x")
    p.add_argument("--y")
    p.add_argument("--I", dest="I")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--equivariant", action="store_true", help="equivariant flavor for chevalley/partial")
    _common(p)

    p = sub.add_parser("wonderful", help="K-ring of the wonderful compactification")
    p.add_argument("action", choices=("table", "verify"))
    p.add_argument("--suite", default="all", choices=("all", "unit", "commutativity", "associativity", "kdec"))
    _common(p)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default="all", choices=SUITES + ("all",))
    p.add_argument("--seeds", type=int, default=1)
    _common(p)
    return parser


# -- helpers ------------------------------------------------------------------------


def _group(args):
    if args.cartan is not None:
        try:
            matrix = json.loads(args.cartan.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"--cartan: cannot read {args.cartan}: {exc}") from exc
        if isinstance(matrix, dict):
            matrix = matrix.get("cartan")
        return root_system(CartanDatum.custom(matrix))
    return root_system(args.group or "A2")


def _ints(text, flag):
    try:
        return tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError as exc:
        raise UsageError(f"{flag}: expected integers, got {text!r}") from exc


def _subset(text, rank, flag="--I"):
    if not text:
        return ()
    I = tuple(i - 1 for i in _ints(text, flag))
    if any(not 0 <= i < rank for i in I):
        raise UsageError(f"{flag}: indices must lie in 1..{rank}")
    return parabolic(I, rank)


def _element(W, text, flag):
    if text is None:
        raise UsageError(f"{flag} is required")
    if text.strip() == "w0":
        return W.longest
    try:
        return W.from_word(parse_word(text))
    except (ValueError, IndexError) as exc:
        raise UsageError(f"{flag}: {exc}") from exc


def _num(c):
    return c if isinstance(c, int) else str(c)


def _row_json(row, W):
    out = []
    for z in sorted(row, key=W.index.__getitem__):
        v = row[z]
        out.append({"z": format_word(z.word), "value": v.to_json() if isinstance(v, LaurentPoly) else _num(v)})
    return out


def _group_key(rs) -> str:
    if rs.label != "Custom":
        return rs.label
    digest = hashlib.sha256(json.dumps(rs.datum.cartan).encode()).hexdigest()[:16]
    return f"custom-{digest}"


def cache_dir(args) -> Path | None:
    if args.no_cache:
        return None
    if args.cache_dir is not None:
        return args.cache_dir
    env = os.environ.get("KSCHUBERT_CACHE")
    return Path(env) if env else None


def cache_path(root: Path, rs, key: str) -> Path:
    return root / _group_key(rs) / CONVENTION.fingerprint[:16] / __version__ / f"{key}.json"


def _read_cache(path: Path) -> str:
    text = path.read_text()
    header, _, body = text.partition("\n")
    if json.loads(header).get("fingerprint") != CONVENTION.fingerprint:
        raise CorruptCache(str(path))
    return body


def cached(args, rs, key, compute):
    """Return serialized output for ``key``, via the cache when enabled."""
    root = cache_dir(args)
    if root is None:
        return compute()
    path = cache_path(root, rs, key)
    if path.exists():
        try:
            return _read_cache(path)
        except (CorruptCache, ValueError):
            pass
    body = compute()
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps({"fingerprint": CONVENTION.fingerprint, "version": __version__}) + "\n" + body)
    return body


def dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _text_table(rows, headers) -> str:
    cols = [headers] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cols) for i in range(len(headers))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cols) + "\n"


# -- commands -----------------------------------------------------------------------


def cmd_weyl(args, rs):
    W = weyl_group(rs)
    if args.action == "list":
        data = [{"word": format_word(w.word), "length": w.length, "det": W.det(w)} for w in W]
        rows = [[d["word"], d["length"], d["det"]] for d in data]
        return data, rows, ["w", "length", "det"]
    if args.action == "bruhat":
        data = [
            {"u": format_word(u.word), "w": format_word(w.word)}
            for u in W
            for w in W
            if u != w and W.bruhat_leq(u, w) and w.length == u.length + 1
        ]
        return {"covers": data}, [[d["u"], d["w"]] for d in data], ["u", "covers"]
    if args.action == "cosets":
        I = _subset(args.I, W.rank)
        reps = [format_word(w.word) for w in W.min_coset_reps(I)]
        return {"I": [i + 1 for i in I], "reps": reps}, [[r] for r in reps], ["W^I"]
    parts = W.partition_CI()
    data = [{"I": [i + 1 for i in I], "C": [format_word(w.word) for w in ws]} for I, ws in parts.items()]
    return data, [[d["I"], ", ".join(d["C"])] for d in data], ["I", "C^I"]


def cmd_demazure(args, rs):
    W = weyl_group(rs)
    w = _element(W, args.word, "--word")
    if args.action == "chi":
        if args.weight is None:
            raise UsageError("--weight is required for chi")
        lam = _ints(args.weight, "--weight")
        if len(lam) != W.rank:
            raise UsageError(f"--weight: expected {W.rank} entries")
        if args.equivariant:
            val = euler_char_T(W, w, lam)
            return {"w": format_word(w.word), "lambda": list(lam), "chi_T": val.to_json()}, [[repr(val)]], ["chi_T"]
        val = euler_char(W, w, lam)
        return {"w": format_word(w.word), "lambda": list(lam), "chi": val}, [[val]], ["chi"]
    if args.poly is not None:
        try:
            f = LaurentPoly.from_json(json.loads(args.poly), W.rank)
        except (ValueError, TypeError) as exc:
            raise UsageError(f"--poly: {exc}") from exc
    elif args.weight is not None:
        f = mono(_ints(args.weight, "--weight"))
    else:
        raise UsageError("one of --poly or --weight is required")
    if f.rank != W.rank:
        raise UsageError(f"input has rank {f.rank}, group has rank {W.rank}")
    g = demazure(W, f, w)
    return {"w": format_word(w.word), "result": g.to_json()}, [[repr(g)]], ["L_w f"]


def cmd_lift(args, rs):
    W = weyl_group(rs)
    if args.action == "u0":
        u0 = ordinary_lift(W).u0
        return {"group": rs.label, "u0": u0.to_json()}, [[repr(u0)]], ["u0"]
    if args.action == "rv":
        rv = ordinary_lift(W).rv
        data = {"group": rs.label, "rv": [{"v": format_word(v.word), "r": rv[v].to_json()} for v in W]}
        return data, [[format_word(v.word), repr(rv[v])] for v in W], ["v", "r_v"]
    lift = tensor_lift(W, allow_large=args.allow_large)
    data = {
        "group": rs.label,
        "det": lift.det.to_json(),
        "a": [x.to_json() for x in lift.a],
        "b": [x.to_json() for x in lift.b],
        "U": [{"w": format_word(w.word), "U": lift.Uw[w].to_json()} for w in W],
    }
    return data, [[format_word(w.word), repr(a), repr(b)] for w, a, b in zip(W, lift.a, lift.b)], ["w", "a_w", "b_w"]


def _table_rows(table, W):
    rows = []
    for (x, y, z), v in sorted(table.entries.items(), key=lambda t: tuple(W.index[e] for e in t[0])):
        rows.append([format_word(x.word), format_word(y.word), format_word(z.word), repr(v)])
    return rows


def cmd_const(args, rs):
    W = weyl_group(rs)
    headers = ["x", "y", "z", "value"]
    if args.action == "chevalley":
        if args.lam is None:
            raise UsageError("--lambda is required for chevalley")
        lam = _ints(args.lam, "--lambda")
        if len(lam) != W.rank:
            raise UsageError(f"--lambda: expected {W.rank} entries")
        table = chevalley_table(W, lam, "equivariant" if args.equivariant else "ordinary")
        rows = [[format_word(x.word), format_word(y.word), repr(v)] for (x, y), v in table.entries.items()]
        return table.to_json(), rows, ["x", "y", "value"]
    I = _subset(args.I, W.rank) if args.action == "partial" else None
    flavor = "equivariant" if args.action == "equivariant" or args.equivariant else "ordinary"
    if args.all or (args.x is None and args.y is None):
        if flavor == "ordinary":
            table = ordinary_table(W, I, jobs=args.jobs)
        else:
            table = equivariant_table(W, I, jobs=args.jobs, allow_large=args.allow_large)
        return table.to_json(), _table_rows(table, W), headers
    x, y = _element(W, args.x, "--x"), _element(W, args.y, "--y")
    if I is None:
        row = ordinary_constants(W, x, y) if flavor == "ordinary" else equivariant_constants(W, x, y, args.allow_large)
    elif flavor == "ordinary":
        row = ordinary_partial(W, I, x, y)
    else:
        row = equivariant_partial(W, I, x, y, args.allow_large)
    data = {"x": format_word(x.word), "y": format_word(y.word), "row": _row_json(row, W)}
    return data, [[data["x"], data["y"], format_word(z.word), repr(v)] for z, v in row.items()], headers


def cmd_wonderful(args, rs):
    W = weyl_group(rs)
    if args.action == "table":
        data = wd.wonderful_table(W)
        rows = [[p["v"], p["v'"], len(p["result"])] for p in data["products"]]
        return data, rows, ["v", "v'", "terms"]
    checks = {}
    if args.suite in ("all", "unit"):
        checks["unit"] = wd.check_unit(W)
    if args.suite in ("all", "commutativity"):
        checks["commutativity"] = wd.check_commutativity(W)
    if args.suite in ("all", "associativity"):
        samples = None if len(W) <= 2 else 200
        checks["associativity"] = wd.check_associativity(W, wd.associativity_triples(W, samples, args.seed))
    if args.suite in ("all", "kdec"):
        report = wd.kdec_basis_check(W, args.seed)
        checks["kdec"] = [] if report["ok"] else [report]
    data = {
        "group": rs.label,
        "suite": args.suite,
        "ok": not any(checks.values()),
        "checks": [{"name": k, "ok": not v, "failures": v} for k, v in checks.items()],
    }
    return data, [[c["name"], "pass" if c["ok"] else "FAIL"] for c in data["checks"]], ["check", "status"]


def cmd_verify(args, rs):
    if args.seeds < 1:
        raise UsageError("--seeds must be positive")
    data = run_suite(rs, args.suite, seed=args.seed, seeds=args.seeds, jobs=args.jobs, allow_large=args.allow_large)
    return data, [[c["name"], "pass" if c["ok"] else "FAIL"] for c in data["checks"]], ["check", "status"]


COMMANDS = {
    "weyl": cmd_weyl,
    "demazure": cmd_demazure,
    "lift": cmd_lift,
    "const": cmd_const,
    "wonderful": cmd_wonderful,
    "verify": cmd_verify,
}

# Outputs that are pure functions of (group, convention, version, flags) and worth caching.
_CACHEABLE = {("lift", "tensor"), ("const", "ordinary"), ("const", "equivariant"), ("const", "partial"), ("wonderful", "table")}


def _cache_key(args) -> str:
    parts = [args.command, args.action]
    for name in ("I", "x", "y", "all", "equivariant"):
        val = getattr(args, name, None)
        if val not in (None, False):
            parts.append(f"{name}={val}")
    return hashlib.sha256("|".join(map(str, parts)).encode()).hexdigest()[:24]


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.jobs < 1:
        parser.print_usage(sys.stderr)
        print("kschubert: error: --jobs must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        rs = _group(args)

        def compute():
            data, rows, headers = COMMANDS[args.command](args, rs)
            compute.data = data
            return dump(data) if args.format == "json" else _text_table(rows, headers)

        compute.data = None
        action = getattr(args, "action", None)
        if (args.command, action) in _CACHEABLE and args.format == "json":
            text = cached(args, rs, _cache_key(args), compute)
        else:
            text = compute()
    except (UsageError, InvalidCartan, NotFiniteType, NotMinimalRep, ValueError) as exc:
        print(f"kschubert: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out is not None:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    data = compute.data
    if args.command in ("verify", "wonderful") and isinstance(data, dict) and data.get("ok") is False:
        return EXIT_FAIL
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
