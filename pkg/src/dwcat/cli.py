"""Command-line entry point."""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field

from . import cap as K
from . import catalog as cat
from . import cohomology as H
from . import dw, gerbes, oracle
from .picard import discrete, lines
from .simplicial import fundamental_cycle


class CheckFailed(RuntimeError):
    pass


@dataclass
class RunConfig:
    command: list
    complex: str = "s2"
    group: str = "z2"
    cocycle: str = "trivial"
    modulus: int = 2
    degree: int = 1
    coeff: str = "lines"
    factors: str = ""
    cover: str = "circle3"
    gerbe: str = ""
    boundary_in: str = ""
    boundary_out: str = ""
    as_json: bool = False
    threads: int = 1
    seed: int = 0
    options: dict = field(default_factory=dict)


def _coeffs(cfg):
    if cfg.coeff == "lines":
        return lines(cfg.modulus)
    if cfg.coeff == "discrete":
        fs = [int(x) for x in cfg.factors.split(",") if x.strip()] if cfg.factors else [cfg.modulus]
        return discrete(*fs)
    raise cat.CatalogError(f"unknown coefficient kind {cfg.coeff!r}")


def _value(v):
    return {"value": v.render(), "exact": v.to_json()}


def cmd_cohomology(cfg):
    X = cat.load_complex(cfg.complex)
    C = H.cochain_complex(X, _coeffs(cfg))
    rep = H.cohomology(C, cfg.degree).report()
    rep.update({"complex": X.name, "degree": cfg.degree, "coeff": cfg.coeff, "modulus": cfg.modulus})
    return rep


def cmd_cap(cfg):
    """Cap the fundamental class with each pi_0 generator of H^n."""
    X = cat.load_complex(cfg.complex)
    G = _coeffs(cfg)
    C = H.cochain_complex(X, G)
    Hn = H.cohomology(C, cfg.degree)
    T = H.chain_complex(X, G)
    q = X.dim
    Hq = H.cohomology(T, q - cfg.degree)
    z = fundamental_cycle(X)
    rows = []
    for x in Hn.pi0_generators():
        y = K.cap(z, x, T)
        rows.append({"class": list(Hn.classify(x)), "cap": list(Hq.classify(y))})
    return {
        "complex": X.name,
        "degree": cfg.degree,
        "cohomology": Hn.report(),
        "homology": Hq.report(),
        "generators": rows,
    }


def cmd_gerbe(cfg):
    if cfg.command[1:] != ["trivialize"]:
        raise cat.CatalogError("usage: gerbe trivialize --cover NAME --gerbe FILE")
    U = cat.load_cover(cfg.cover)
    g = cat.load_gerbe(cfg.gerbe, U) if cfg.gerbe else gerbes.zero_gerbe(U, cfg.modulus)
    obj = gerbes.find_object(g)
    out = {"cover": U.name, "modulus": g.modulus, "trivial": obj is not None}
    if obj is not None:
        out["labels"] = {str(i): v for i, v in sorted(obj.labels.items())}
        out["isos"] = {",".join(map(str, t)): v % g.modulus for t, v in sorted(obj.isos.items())}
    return out


def _group_and_cocycle(cfg, degree):
    G = cat.load_group(cfg.group)
    om = cat.load_cocycle(cfg.cocycle, G, cfg.group, degree)
    return G, om


def cmd_dw(cfg):
    sub = cfg.command[1] if len(cfg.command) > 1 else ""
    if sub == "check":
        return dw_check(cfg)
    X = cat.load_complex(cfg.complex)
    if sub == "closed":
        G, om = _group_and_cocycle(cfg, X.dim)
        Z = dw.partition_function(X, G, om)
        return {"complex": X.name, "group": cfg.group, "cocycle": om.name, "Z": Z.render(), "exact": Z.to_json()}
    if sub == "surface":
        G, om = _group_and_cocycle(cfg, X.dim + 1)
        S = dw.state_space(X, G, om)
        rep = S.report()
        rep.update({"complex": X.name, "group": cfg.group, "cocycle": om.name})
        return rep
    if sub == "cobordism":
        for role, want in (("in", cfg.boundary_in), ("out", cfg.boundary_out)):
            names = [b.name for b in X.boundary(role)]
            if want and want not in names and not any(b.model.name == want for b in X.boundary(role)):
                raise dw.BoundaryMismatch(f"{role} boundary {want!r} not among {names}")
        G, om = _group_and_cocycle(cfg, X.dim)
        M = dw.cobordism_map(X, G, om, threads=cfg.threads)
        return {
            "complex": X.name,
            "group": cfg.group,
            "cocycle": om.name,
            "shape": list(M.shape()),
            "matrix": M.render(),
            "exact": [[v.to_json() for v in row] for row in M.entries],
        }
    raise cat.CatalogError("usage: dw closed|surface|cobordism|check")


CHECK_CLOSED = ["s3", "t3", "s2xs1"]
CHECK_CYL = ["cyl_s2", "cyl_t2min"]
CHECK_SURF = ["s2", "t2min"]


def dw_check(cfg):
    """Main pipeline against the brute-force oracle on the catalog."""
    names = [cfg.group] if cfg.options.get("group_given") else cat.GROUP_NAMES
    results = []
    ok = True
    for gname in names:
        G = cat.load_group(gname)
        for cname in cat.cocycles_for(gname):
            om = cat.load_cocycle(cname, G, gname, 3)
            for xn in CHECK_CLOSED:
                X = cat.load_complex(xn)
                a, b = dw.partition_function(X, G, om), oracle.closed_oracle(X, G, om)
                results.append({"case": f"{xn}/{gname}/{cname}", "main": a.render(), "oracle": b.render(), "ok": a == b})
            for xn in CHECK_CYL:
                X = cat.load_complex(xn)
                M = dw.cobordism_map(X, G, om, threads=cfg.threads)
                R = oracle.state_sum_oracle(X, G, om, M.cols, M.rows)
                results.append({"case": f"{xn}/{gname}/{cname}", "main": M.render(),
                                "oracle": [[v.render() for v in r] for r in R], "ok": M.entries == R})
            for yn in CHECK_SURF:
                Y = cat.load_complex(yn)
                d = dw.state_space(Y, G, om).dim
                e = oracle.dimension_oracle(Y, G, om)
                results.append({"case": f"dim {yn}/{gname}/{cname}", "main": str(d), "oracle": e.render(),
                                "ok": e.render() == str(d)})
    ok = all(r["ok"] for r in results)
    return {"ok": ok, "checked": len(results), "failures": [r for r in results if not r["ok"]], "results": results}


COMMANDS = {"cohomology": cmd_cohomology, "cap": cmd_cap, "gerbe": cmd_gerbe, "dw": cmd_dw}


def run(cfg):
    random.seed(cfg.seed)
    out = COMMANDS[cfg.command[0]](cfg)
    if cfg.command[:2] == ["dw", "check"] and not out["ok"]:
        raise CheckFailed(json.dumps(out["failures"], sort_keys=True))
    return out


def parser():
    p = argparse.ArgumentParser(prog="dwcat", description="Picard-valued cohomology, cap products, gerbes and finite gauge theory.")
    p.add_argument("command", nargs="+", help="cohomology | cap | gerbe trivialize | dw closed|surface|cobordism|check")
    p.add_argument("--complex", default="s2")
    p.add_argument("--group", default=None)
    p.add_argument("--cocycle", default="trivial")
    p.add_argument("--modulus", type=int, default=2)
    p.add_argument("--degree", type=int, default=1)
    p.add_argument("--coeff", default="lines", choices=["lines", "discrete"])
    p.add_argument("--factors", default="", help="comma separated invariant factors for discrete coefficients (0 = Z)")
    p.add_argument("--cover", default="circle3")
    p.add_argument("--gerbe", default="")
    p.add_argument("--in", dest="boundary_in", default="")
    p.add_argument("--out", dest="boundary_out", default="")
    p.add_argument("--json", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    return p


def _text(obj, indent=""):
    lines_ = []
    for k in sorted(obj):
        v = obj[k]
        if isinstance(v, dict):
            lines_.append(f"{indent}{k}:")
            lines_.extend(_text(v, indent + "  "))
        else:
            lines_.append(f"{indent}{k}: {json.dumps(v, sort_keys=True) if not isinstance(v, str) else v}")
    return lines_


def main(argv=None):
    args = parser().parse_args(argv)
    if args.command[0] not in COMMANDS:
        print(f"unknown command {args.command[0]!r}", file=sys.stderr)
        return 2
    cfg = RunConfig(
        command=args.command, complex=args.complex, group=args.group or "z2", cocycle=args.cocycle,
        modulus=args.modulus, degree=args.degree, coeff=args.coeff, factors=args.factors, cover=args.cover,
        gerbe=args.gerbe, boundary_in=args.boundary_in, boundary_out=args.boundary_out, as_json=args.json,
        threads=args.threads, seed=args.seed, options={"group_given": args.group is not None},
    )
    try:
        out = run(cfg)
    except CheckFailed as e:
        print(f"oracle mismatch: {e}", file=sys.stderr)
        return 1
    except (ValueError, KeyError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    if cfg.as_json:
        print(json.dumps(out, sort_keys=True, indent=2))
    else:
        print("\n".join(_text(out)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
