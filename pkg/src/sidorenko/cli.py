"""Command-line entry point: ``sidorenko <command> ...``.

Pattern and host arguments take a hypergraph file or a construction spec
such as ``cycle:4`` or ``tight-cycle:3,6`` (see ``constructions.build``).
Verdicts are printed as data with exit code 0; bad input exits with 1 and
usage errors with 2.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Sequence

from . import bounds, domination, exponent, extremal, hom, io, trace
from .constructions import build
from .hypergraph import Hypergraph

__all__ = ["RunConfig", "main", "load_hypergraph"]


@dataclass
class RunConfig:
    seed: int | None = None
    budget: int | None = None
    jobs: int = 1
    format: str = "text"
    max_host: int | None = None
    cert_out: str | None = None
    out: list[str] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def say(self, line: str = "") -> None:
        self.out.append(line)


def load_hypergraph(arg: str) -> Hypergraph:
    p = Path(arg)
    if p.is_file():
        return io.read_hypergraph(p)
    try:
        return build(arg)
    except (ValueError, IndexError) as exc:
        raise ValueError(f"{arg!r} is neither a readable file nor a valid construction spec ({exc})") from None


def _seed(cfg: RunConfig) -> int:
    if cfg.seed is None:
        cfg.seed = random.SystemRandom().getrandbits(63)
    cfg.say(f"seed: {cfg.seed}")
    cfg.data["seed"] = cfg.seed
    return cfg.seed


def _frac(x: Fraction) -> str:
    return str(x)


def _write_cert(cfg: RunConfig, doc: dict) -> None:
    cfg.data["certificate"] = doc
    if cfg.cert_out:
        Path(cfg.cert_out).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        cfg.say(f"certificate written to {cfg.cert_out}")


# -- commands ------------------------------------------------------------------


def cmd_construct(a, cfg: RunConfig) -> None:
    H = load_hypergraph(a.spec)
    text = io.serialize_hypergraph(H)
    if a.output:
        Path(a.output).write_text(text)
        cfg.say(f"wrote {a.output}")
    else:
        cfg.say(text.rstrip("\n"))
    cfg.data.update({"hypergraph": io.to_jsonable(H)})


def _budget(cfg: RunConfig) -> int:
    return cfg.budget if cfg.budget is not None else hom.DEFAULT_BUDGET


def cmd_hom(a, cfg: RunConfig) -> None:
    F, H = load_hypergraph(a.pattern), load_hypergraph(a.host)
    if a.injective:
        c = hom.count_injective(F, H, budget=_budget(cfg))
    else:
        c = hom.count_homomorphisms(F, H, budget=_budget(cfg), jobs=cfg.jobs)
    cfg.say(str(c))
    cfg.data["count"] = str(c)


def cmd_density(a, cfg: RunConfig) -> None:
    F, H = load_hypergraph(a.pattern), load_hypergraph(a.host)
    d = hom.density(F, H, budget=_budget(cfg), jobs=cfg.jobs)
    cfg.say(str(d))
    cfg.data.update({"hom": str(d.hom_count), "n": d.n, "exponent": d.exponent,
                     "density": io.rational_json(d.value)})


def cmd_check_sidorenko(a, cfg: RunConfig) -> None:
    F, H = load_hypergraph(a.pattern), load_hypergraph(a.host)
    chk = exponent.sidorenko_check(F, H)
    cfg.say(f"holds: {chk.holds}")
    cfg.say(f"t_F = {chk.t_F}, t_K^e(F) = {chk.rhs}, margin = {chk.margin}")
    cfg.data.update(io.to_jsonable({"holds": chk.holds, "t_F": chk.t_F, "rhs": chk.rhs, "margin": chk.margin}))


def cmd_check_dominate(a, cfg: RunConfig) -> None:
    F, Fp = load_hypergraph(a.f), load_hypergraph(a.fp)
    host = io.read_kernel(a.kernel) if a.kernel else load_hypergraph(a.host)
    chk = domination.domination_check(F, Fp, host)
    cfg.say(f"holds: {chk.holds}")
    cfg.say(f"t_F = {chk.t_F}, t_F' = {chk.t_sub}")
    cfg.say(f"t_F^e(F') = {chk.lhs} vs t_F'^e(F) = {chk.rhs}")
    cfg.data.update(io.to_jsonable(chk))


def cmd_csg(a, cfg: RunConfig) -> None:
    F = load_hypergraph(a.pattern)
    kernels = [io.read_kernel(k) for k in a.kernel]
    colouring = [int(x) for x in a.colouring.split(",")]
    chk = domination.csg_check(F, colouring, kernels, nonneg=not a.signed)
    cfg.say(f"holds: {chk.holds}")
    cfg.say(f"<family; chi>^e(F) = {chk.lhs ** chk.e} vs prod of norms^e(F) = {chk.rhs_power}")
    cfg.data.update(io.to_jsonable(chk))


def cmd_norming_suite(a, cfg: RunConfig) -> None:
    F = load_hypergraph(a.pattern)
    seed = _seed(cfg)
    rep = domination.weakly_norming_suite(F, a.trials, seed, resolution=a.resolution,
                                          signed=a.signed, stop_on_failure=True)
    cfg.say(f"trials run: {rep.trials}, triangle passed: {rep.triangle_passed}, ties: {rep.triangle_ties}, "
            f"csg passed: {rep.csg_passed}")
    cfg.say(f"passed: {rep.passed}")
    cex = rep.counterexample
    if cex is not None:
        cfg.say(f"counterexample at trial {cex.trial}")
        cfg.data["counterexample"] = io.to_jsonable(cex)
    cfg.data.update({"passed": rep.passed, "trials": rep.trials})


def cmd_bound(a, cfg: RunConfig) -> None:
    kind = a.kind
    if kind == "unified":
        F, M = load_hypergraph(a.pattern), load_hypergraph(a.M)
        cert = bounds.bound_unified(F, M, a.case, assume=a.assume or (), part=a.part)
    elif kind == "tight-cycle":
        cert = bounds.bound_tight_cycle(a.ell)
    elif kind == "sparse":
        cert = bounds.bound_sparse(load_hypergraph(a.pattern))
    elif kind == "grid-links":
        cert = bounds.bound_grid_links(load_hypergraph(a.pattern), a.k)
    elif kind == "lift":
        F = load_hypergraph(a.pattern) if a.pattern else None
        if F is not None:
            cert = bounds.certify_lift(F, Fraction(a.s_bound), *a.t)
        else:
            b = bounds.lift_bound(Fraction(a.s_bound), *a.t)
            cert = bounds.BoundCertificate("lift", b, inputs={"s_F": Fraction(a.s_bound), "t": a.t},
                                           assumptions=[f"s(F) <= {a.s_bound}: user assertion"])
    else:  # bipartite-links
        res = extremal.bipartite_links_bound(load_hypergraph(a.pattern), load_hypergraph(a.G))
        cfg.say(f"ex(n, F) = O(n^({res.exponent}))")
        for t in res.transcript:
            cfg.say(f"  check: {t}")
        for t in res.assumptions:
            cfg.say(f"  assumption: {t}")
        doc = {"kind": "bound", "theorem": "bipartite-links", "bound": io.rational_json(res.exponent),
               "inputs": {}, "assumptions": res.assumptions, "transcript": res.transcript,
               "extra": {"quantity": "extremal exponent"}}
        _write_cert(cfg, doc)
        return
    cfg.say(str(cert.bound) if cert.bound.denominator != 1 else str(cert.bound.numerator))
    cfg.say(str(cert))
    _write_cert(cfg, io.certificate_json(cert))


def cmd_search_exponent(a, cfg: RunConfig) -> None:
    F = load_hypergraph(a.pattern)
    seed = _seed(cfg)
    kw = {}
    if cfg.max_host:
        kw["anneal_n"] = cfg.max_host
    rep = exponent.exponent_lower_search(F, budget=cfg.budget or 2000, seed=seed, max_den=a.max_den, **kw)
    w = rep.best
    cfg.say(f"best certified: s(F) >= {w.s}  (ratio {w.ratio:.12f})")
    cfg.say(f"host: {w.host!r}")
    cfg.say(f"t_F = {w.t_F}, t_K = {w.t_K}; t_F^{w.q} <= t_K^{w.p}")
    cfg.say(f"hosts evaluated: {rep.evaluated} {rep.pool_sizes}")
    _write_cert(cfg, io.witness_json(w, seed))


def cmd_trace(a, cfg: RunConfig) -> None:
    F, M, H = load_hypergraph(a.pattern), load_hypergraph(a.M), load_hypergraph(a.host)
    tr = trace.proof_trace(F, M, H, a.case, assume=a.assume or (), budget=cfg.budget or 5_000_000)
    cfg.say(f"s = {tr.s}, t = {tr.t}, e(M) = {tr.e_M}, t_K(H) = {tr.t_K}")
    cfg.say(f"rare thresholds: {[str(x) for x in tr.thresholds]}")
    cfg.say(f"rare maps: {list(tr.rare_count)}; Z: {list(tr.Z)}")
    cfg.say(f"good vertices: {sorted(tr.good)}")
    cfg.say(f"claim 1: {tr.claim1_lhs} >= {tr.claim1_rhs}: {tr.claim1}")
    cfg.say(f"claim 2: {tr.claim2}")
    cfg.say(f"final: hom(F,H) = {tr.hom_F} >= {tr.final_rhs}: {tr.final}")
    cfg.say(f"chain monotone: {tr.chain_ok}; lemma checks: {len(tr.ratio_checks)} all hold: {tr.lemmas_ok}")
    cfg.say(f"verified: {tr.verified}")
    cfg.data.update({"verified": tr.verified, "claim1": tr.claim1, "claim2": tr.claim2, "final": tr.final})


def cmd_embed(a, cfg: RunConfig) -> None:
    H, F = load_hypergraph(a.host), load_hypergraph(a.pattern)
    res = extremal.find_lift_copy(H, F, a.t, budget=cfg.budget or 10**7, s_bound=a.s_bound)
    if res.found:
        cfg.say(f"found: F({a.t}) copy {res.copy} (phi = {res.phi}, apexes = {res.witnesses})")
    elif res.exhaustive:
        cfg.say(f"none: {res.note}")
    else:
        cfg.say(f"unknown: {res.note}")
    cfg.data.update({"found": res.found, "exhaustive": res.exhaustive, "copy": res.copy})


def cmd_ex_small(a, cfg: RunConfig) -> None:
    F = load_hypergraph(a.pattern)
    res = extremal.ex_small(a.n, F, budget=cfg.budget or 2_000_000)
    cfg.say(f"ex({a.n}, F) = {res.value}")
    cfg.say(io.serialize_hypergraph(res.host, "extremal host").rstrip("\n"))
    cfg.data.update({"value": res.value, "host": io.to_jsonable(res.host)})


def cmd_threshold(a, cfg: RunConfig) -> None:
    F = load_hypergraph(a.pattern)
    thr = extremal.kst_threshold(a.n, F, a.t, Fraction(a.s_bound))
    cfg.say(f"e(H) >= {thr.min_edges}  (real threshold {thr.value:.6f}, exponent {thr.exponent})")
    cfg.data.update({"min_edges": thr.min_edges, "value": thr.value, "exponent": io.rational_json(thr.exponent)})


def cmd_deletion_lower(a, cfg: RunConfig) -> None:
    P = load_hypergraph(a.pattern)
    base = load_hypergraph(a.base) if a.base else None
    d = extremal.deletion_lower(a.n, P, base=base)
    cfg.say(f"ex({a.n}, P) >= {d.value}  ~ {float(d.value):.6g}  at p = {d.p}  (heuristic)")
    cfg.say(f"deletion exponent {d.deletion_exponent}" +
            (f", target {d.target_exponent}" if d.target_exponent is not None else ""))
    cfg.data.update(io.to_jsonable({"value": d.value, "p": d.p}))


COMMANDS: dict[str, Callable] = {
    "construct": cmd_construct,
    "hom": cmd_hom,
    "density": cmd_density,
    "check-sidorenko": cmd_check_sidorenko,
    "check-dominate": cmd_check_dominate,
    "csg": cmd_csg,
    "norming-suite": cmd_norming_suite,
    "bound": cmd_bound,
    "search-exponent": cmd_search_exponent,
    "trace": cmd_trace,
    "embed": cmd_embed,
    "ex-small": cmd_ex_small,
    "threshold": cmd_threshold,
    "deletion-lower": cmd_deletion_lower,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int)
    common.add_argument("--budget", type=int)
    common.add_argument("--jobs", type=int, default=int(os.environ.get("SIDORENKO_JOBS", "1")))
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--max-host", type=int)
    common.add_argument("--cert-out")

    p = argparse.ArgumentParser(prog="sidorenko", description="Exact hypergraph homomorphism tools.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, help: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help, parents=[common])

    s = add("construct", "build a hypergraph from a spec and print it")
    s.add_argument("spec")
    s.add_argument("-o", "--output")

    for name, help in (("hom", "count homomorphisms"), ("density", "homomorphism density"),
                       ("check-sidorenko", "test t_F >= t_K^e(F) on a host")):
        s = add(name, help)
        s.add_argument("--pattern", required=True)
        s.add_argument("--host", required=True)
        if name == "hom":
            s.add_argument("--injective", action="store_true")

    s = add("check-dominate", "test the domination inequality for F' inside F")
    s.add_argument("--f", required=True)
    s.add_argument("--fp", required=True)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--host")
    g.add_argument("--kernel")

    s = add("csg", "Cauchy-Schwarz-Gowers inequality for a coloured family of kernels")
    s.add_argument("--pattern", required=True)
    s.add_argument("--colouring", "--coloring", required=True, help="comma-separated colours, one per edge")
    s.add_argument("--kernel", action="append", required=True, help="kernel JSON, once per colour")
    s.add_argument("--signed", action="store_true")

    s = add("norming-suite", "randomised triangle-inequality and CSG tests")
    s.add_argument("--pattern", required=True)
    s.add_argument("--trials", type=int, default=200)
    s.add_argument("--resolution", type=int, default=4)
    s.add_argument("--signed", action="store_true")

    s = add("bound", "upper bounds on the Sidorenko exponent")
    s.add_argument("kind", choices=["unified", "tight-cycle", "sparse", "grid-links", "lift", "bipartite-links"])
    s.add_argument("--pattern")
    s.add_argument("--M")
    s.add_argument("--G")
    s.add_argument("--case", choices=["sidorenko-components", "dominating"], default="dominating")
    s.add_argument("--assume", action="append", choices=["sidorenko", "dominating"])
    s.add_argument("--part", type=int)
    s.add_argument("--ell", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--s-bound")
    s.add_argument("--t", type=int, nargs="*", default=[])

    s = add("search-exponent", "search hosts for a certified lower bound on s(F)")
    s.add_argument("--pattern", required=True)
    s.add_argument("--max-den", type=int, default=10)

    s = add("trace", "run the counting argument of the unified bound on a host")
    s.add_argument("--pattern", required=True)
    s.add_argument("--M", required=True)
    s.add_argument("--host", required=True)
    s.add_argument("--case", choices=["sidorenko-components", "dominating"], default="dominating")
    s.add_argument("--assume", action="append", choices=["sidorenko", "dominating"])

    s = add("embed", "find a copy of F(t) in a host")
    s.add_argument("--host", required=True)
    s.add_argument("--pattern", required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--s-bound")

    s = add("ex-small", "exact extremal number on few vertices")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--pattern", required=True)

    s = add("threshold", "edge threshold that forces F(t)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--pattern", required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--s-bound", required=True)

    s = add("deletion-lower", "deletion-method lower bound on ex(n, P)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--pattern", required=True)
    s.add_argument("--base")
    return p


_REQUIRED = {
    "unified": ("pattern", "M"), "sparse": ("pattern",), "grid-links": ("pattern", "k"),
    "lift": ("s_bound",), "bipartite-links": ("pattern", "G"), "tight-cycle": ("ell",),
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    if a.command == "bound":
        missing = [x for x in _REQUIRED[a.kind] if getattr(a, x) is None]
        if missing:
            parser.error(f"bound {a.kind} needs " + ", ".join("--" + m.replace("_", "-") for m in missing))
    cfg = RunConfig(a.seed, a.budget, a.jobs, a.format, a.max_host, a.cert_out)
    try:
        COMMANDS[a.command](a, cfg)
    except (ValueError, hom.BudgetExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if cfg.format == "json":
        cfg.data.setdefault("output", cfg.out)
        print(json.dumps(cfg.data, indent=2, sort_keys=True, default=str))
    else:
        print("\n".join(cfg.out))
    return 0


if __name__ == "__main__":
    sys.exit(main())
