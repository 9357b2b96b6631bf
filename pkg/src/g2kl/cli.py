"""Command-line interface.

Subcommands: reduce, length, bruhat, klpoly, mu, cproduct, cell, delta-table,
mu-table, repmult, cache {info,clear}.  Words are accepted in digit ("1210")
or letter ("stsr") form; output words are digits.  Reports carry a header
with the tool version, the base point, and a config fingerprint so emitted
tables are reproducible byte-for-byte.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import __version__, cell as cellmod, core, rep, weyl
from .errors import G2KLError, WordParseError
from .kl import KLEngine

CACHE_ENV = "G2KL_CACHE"


@dataclass
class RunConfig:
    cache: str = ""
    format: str = "text"
    max_length: int = 36
    max_support: int = 20000
    oracle_dim_cap: int = 10**9
    jobs: int = 1
    bound_a: int = 1
    bound_b: int = 1

    def __post_init__(self):
        if self.format not in ("text", "json", "csv", "latex"):
            raise WordParseError("unknown format %r" % self.format)
        for name in ("max_length", "max_support", "oracle_dim_cap", "jobs"):
            if getattr(self, name) <= 0:
                raise WordParseError("%s must be positive" % name)

    def fingerprint(self) -> str:
        # jobs and cache location do not affect results; keep them out so
        # reports are byte-identical across parallelism degrees
        semantic = {k: v for k, v in self.__dict__.items()
                    if k not in ("jobs", "cache")}
        blob = json.dumps(semantic, sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:12]


def report_header(cfg: RunConfig) -> str:
    return "g2kl %s base-point=1/4,1/4 gens=r<s<t backend=%s config=%s" % (
        __version__, core.BACKEND, cfg.fingerprint())


def _emit_table(cfg: RunConfig, columns, rows, out):
    header = report_header(cfg)
    if cfg.format == "json":
        doc = {"meta": header, "columns": list(columns),
               "rows": [dict(zip(columns, r)) for r in rows]}
        out.write(json.dumps(doc, indent=1) + "\n")
    elif cfg.format == "csv":
        out.write("# %s\n" % header)
        out.write(",".join(columns) + "\n")
        for r in rows:
            out.write(",".join(r) + "\n")
    elif cfg.format == "latex":
        out.write("%% %s\n" % header)
        out.write("\\begin{tabular}{%s}\n" % ("l" * len(columns)))
        out.write(" & ".join(c.replace("_", "\\_") for c in columns) + " \\\\\n\\hline\n")
        for r in rows:
            out.write(" & ".join(r) + " \\\\\n")
        out.write("\\end{tabular}\n")
    else:
        out.write("# %s\n" % header)
        widths = [max(len(c), max((len(r[i]) for r in rows), default=0))
                  for i, c in enumerate(columns)]
        out.write("  ".join(c.ljust(widths[i]) for i, c in enumerate(columns)).rstrip() + "\n")
        for r in rows:
            out.write("  ".join(x.ljust(widths[i]) for i, x in enumerate(r)).rstrip() + "\n")


def _engine(cfg: RunConfig) -> KLEngine:
    eng = KLEngine(max_operand_length=cfg.max_length, max_support=cfg.max_support)
    if cfg.cache and os.path.exists(cfg.cache):
        eng.cache_load(cfg.cache)
    return eng


def _save_cache(cfg: RunConfig, eng: KLEngine):
    if cfg.cache:
        eng.cache_store(cfg.cache)


def _parse_weight(text: str):
    t = text.strip().lstrip("(").rstrip(")")
    parts = t.replace(",", " ").split()
    if len(parts) != 2:
        raise WordParseError("weight must be two integers, got %r" % text)
    try:
        lam = (int(parts[0]), int(parts[1]))
    except ValueError:
        raise WordParseError("weight must be two integers, got %r" % text) from None
    if lam[0] < 0 or lam[1] < 0:
        raise WordParseError("weight coordinates must be nonnegative: %r" % text)
    return lam


def cmd_reduce(cfg, args, out):
    e = weyl.element(args.word)
    out.write("%s %d\n" % (e.digits or "e", e.length))


def cmd_length(cfg, args, out):
    out.write("%d\n" % weyl.element(args.word).length)


def cmd_bruhat(cfg, args, out):
    u = weyl.element(args.u)
    w = weyl.element(args.w)
    if args.oracle:
        ok = weyl.bruhat_subword_oracle(u, w, max_length=cfg.max_length)
    else:
        ok = weyl.bruhat_leq(u, w)
    out.write("true\n" if ok else "false\n")


def cmd_klpoly(cfg, args, out):
    eng = _engine(cfg)
    p = eng.kl_poly(weyl.element(args.u), weyl.element(args.w))
    _save_cache(cfg, eng)
    out.write(p.q_text() + "\n")


def cmd_mu(cfg, args, out):
    eng = _engine(cfg)
    m = eng.mu(weyl.element(args.u), weyl.element(args.w))
    _save_cache(cfg, eng)
    out.write("%d\n" % m)


def cmd_cproduct(cfg, args, out):
    eng = _engine(cfg)
    comb = eng.c_product(weyl.element(args.x), weyl.element(args.y))
    _save_cache(cfg, eng)
    if cfg.format == "json":
        doc = {"meta": report_header(cfg),
               "terms": {(w.digits or "e"): comb.get(w).text() for w in comb.support()}}
        out.write(json.dumps(doc, indent=1) + "\n")
    else:
        out.write(comb.text() + "\n")


def cmd_cell(cfg, args, out):
    dec = cellmod.decompose_c0(weyl.element(args.word))
    out.write((dec.text() if dec else "not-in-c0") + "\n")


def _build_cell(cfg: RunConfig):
    eng = _engine(cfg)
    lc = cellmod.LowestCell(eng)
    if cfg.jobs > 1:
        pairs = [(u, v) for u in range(12) for v in range(12)]
        with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
            list(pool.map(lambda p: lc.record(p[0], p[1]), pairs))
    lc.delta_table()
    return lc


def cmd_delta_table(cfg, args, out):
    lc = _build_cell(cfg)
    _save_cache(cfg, lc.engine)
    rows = cellmod.delta_rows(lc)
    _emit_table(cfg, cellmod.DELTA_COLUMNS, rows, out)
    if cfg.format == "text":
        rpt = cellmod.compare_u1_with_reference(lc)
        out.write("# |U1|=%d |U2|=%d |U3|=%d |U4|=%d\n" % (
            len(lc.u_class("U1")), len(lc.u_class("U2")),
            len(lc.u_class("U3")), len(lc.u_class("U4"))))
        out.write("# U1 vs published: computed=%d printed-distinct=%d "
                  "missing=%d extra=%d malformed=%d\n" % (
                      rpt["computed"], rpt["printed_distinct"],
                      len(rpt["missing_from_computed"]),
                      len(rpt["extra_in_computed"]), len(rpt["malformed"])))


def cmd_mu_table(cfg, args, out):
    lc = _build_cell(cfg)
    _save_cache(cfg, lc.engine)
    rows = cellmod.mu_rows(lc, cfg.bound_a, cfg.bound_b)
    _emit_table(cfg, cellmod.MU_COLUMNS, rows, out)


def cmd_repmult(cfg, args, out):
    lam = _parse_weight(args.weight)
    lam2 = _parse_weight(args.weight2)
    dec = rep.char_product_oracle(lam, lam2, dim_cap=cfg.oracle_dim_cap)
    order = sorted(dec, key=lambda w: (rep.height(w), w), reverse=True)
    for w in order:
        got = rep.tensor_mult(lam, lam2, w)
        if got != dec[w]:
            raise G2KLError("oracle and Klimyk disagree at %r" % (w,))
        out.write("%s %d\n" % (rep.weight_text(w), dec[w]))


def cmd_cache(cfg, args, out):
    path = cfg.cache
    if not path:
        out.write("no cache path configured (use --cache or $%s)\n" % CACHE_ENV)
        return
    if args.action == "info":
        if not os.path.exists(path):
            out.write("%s: absent\n" % path)
            return
        eng = KLEngine(max_operand_length=cfg.max_length, max_support=cfg.max_support)
        n = eng.cache_load(path)
        out.write("%s: %d records\n" % (path, n))
    else:
        if os.path.exists(path):
            os.remove(path)
            out.write("%s: removed\n" % path)
        else:
            out.write("%s: absent\n" % path)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="g2kl",
        description="Exact Kazhdan-Lusztig computations in the lowest "
                    "two-sided cell of the affine Weyl group of type G2.")
    ap.add_argument("--cache", default=os.environ.get(CACHE_ENV, ""),
                    help="path of the persistent P-table (default $%s)" % CACHE_ENV)
    ap.add_argument("--format", default="text",
                    choices=("text", "json", "csv", "latex"))
    ap.add_argument("--max-length", type=int, default=36,
                    help="cap on canonical-basis product operand length")
    ap.add_argument("--max-support", type=int, default=20000,
                    help="cap on combination support size")
    ap.add_argument("--jobs", type=int, default=1,
                    help="worker threads for table commands")
    ap.add_argument("--bound-a", type=int, default=1,
                    help="x_alpha coordinate bound for mu-table")
    ap.add_argument("--bound-b", type=int, default=1,
                    help="x_beta coordinate bound for mu-table")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="canonical reduced word and length")
    p.add_argument("word")
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("length", help="Coxeter length")
    p.add_argument("word")
    p.set_defaults(fn=cmd_length)

    p = sub.add_parser("bruhat", help="Bruhat order test u <= w")
    p.add_argument("u")
    p.add_argument("w")
    p.add_argument("--oracle", action="store_true",
                   help="use the subword enumeration instead of the recursion")
    p.set_defaults(fn=cmd_bruhat)

    p = sub.add_parser("klpoly", help="Kazhdan-Lusztig polynomial P_{u,w}")
    p.add_argument("u")
    p.add_argument("w")
    p.set_defaults(fn=cmd_klpoly)

    p = sub.add_parser("mu", help="leading coefficient mu(u,w)")
    p.add_argument("u")
    p.add_argument("w")
    p.set_defaults(fn=cmd_mu)

    p = sub.add_parser("cproduct", help="canonical-basis product C_x C_y")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(fn=cmd_cproduct)

    p = sub.add_parser("cell", help="lowest-cell decomposition of a word")
    p.add_argument("word")
    p.set_defaults(fn=cmd_cell)

    p = sub.add_parser("delta-table", help="the 144-pair delta table with classes")
    p.set_defaults(fn=cmd_delta_table)

    p = sub.add_parser("mu-table", help="mu over bounded same-left-cell pairs")
    p.set_defaults(fn=cmd_mu_table)

    p = sub.add_parser("repmult", help="decompose V(w1) (x) V(w2)")
    p.add_argument("weight")
    p.add_argument("weight2")
    p.set_defaults(fn=cmd_repmult)

    p = sub.add_parser("cache", help="inspect or clear the persistent cache")
    p.add_argument("action", choices=("info", "clear"))
    p.set_defaults(fn=cmd_cache)
    return ap


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        cfg = RunConfig(cache=args.cache, format=args.format,
                        max_length=args.max_length, max_support=args.max_support,
                        jobs=args.jobs, bound_a=args.bound_a, bound_b=args.bound_b)
        args.fn(cfg, args, out)
    except G2KLError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return exc.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
