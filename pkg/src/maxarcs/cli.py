"""Command-line front end.

Planes and arcs come either from files or from the builtin names below.
Planes that cannot be generated here (the non-Desarguesian planes of order
16) are looked up as ``$MAXARCS_DATA/<plane label>.txt`` in the plane file
format of :mod:`maxarcs.geometry`.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import asdict, dataclass, fields
from pathlib import Path

from . import arcdata
from .arcs import Arc, SearchConfig, denniston_arc, dual_arc, tabu_search, validate_arc
from .canonical import (
    canonize,
    code_graph,
    codes_equivalent,
    design_graph,
    designs_isomorphic,
    format_cycles,
)
from .codes import (
    check_minimum_words_are_blocks,
    code_of_design,
    design_exponents,
    majority_logic_decode,
    rank_bounds,
    weight_distribution,
)
from .designs import (
    design_from_arc,
    enumerate_parallel_classes,
    enumerate_resolutions,
    find_hyperovals,
    max_compatible_bound_check,
    resolutions_from_embedding,
    serialize_design,
    serialize_resolution,
)
from .errors import MaxArcsError
from .geometry import (
    ArcRecord,
    Gf2mField,
    ProjectivePlane,
    check_plane,
    dual_plane,
    make_pg2,
    parse_arc,
    parse_plane,
    serialize_arc,
    serialize_plane,
)
from .gf2 import DEFAULT_CAP, BitVector, dual_code

DATA_ENV = "MAXARCS_DATA"

# builtin name -> (m, s, subgroup)
DENNISTON_BUILTINS = {
    "denniston-m2": (2, 2, None),
    "denniston-m3": (3, 2, None),
    "PG(2,16).1": (4, 2, None),
    "PG(2,16).2": (4, 2, (0, 1, 6, 7)),
}

_planes: dict[str, ProjectivePlane] = {}


def plane_for_label(label: str, plane_file: str | None = None) -> ProjectivePlane:
    """PG(2,q) is generated, ``<label>^d`` is the dual of ``<label>``; other planes come from files."""
    if plane_file:
        plane = parse_plane(Path(plane_file).read_text())
        check_plane(plane.structure, plane.order)
        return plane
    if label in _planes:
        return _planes[label]
    if label.endswith("^d"):
        plane = dual_plane(plane_for_label(label[:-2]), label)
    elif label.startswith("PG(2,") and label.endswith(")"):
        q = int(label[5:-1])
        m = q.bit_length() - 1
        if 1 << m != q:
            raise MaxArcsError(f"only even orders 2^m are supported, got {q}")
        plane = make_pg2(Gf2mField(m))
    else:
        data = os.environ.get(DATA_ENV)
        path = Path(data) / f"{label}.txt" if data else None
        if path is None or not path.exists():
            raise MaxArcsError(f"plane {label} needs a file: pass --plane or set {DATA_ENV}")
        plane = parse_plane(path.read_text())
        check_plane(plane.structure, plane.order)
    _planes[label] = plane
    return plane


def builtin_names() -> list[str]:
    return list(DENNISTON_BUILTINS) + list(arcdata.KNOWN_ARCS)


def load_builtin(name: str, plane_file: str | None = None) -> Arc:
    """Builtin arc by name; a trailing ``^`` asks for its dual arc.

    Names not built in are looked up as ``$MAXARCS_DATA/arcs/<name>.arc``.
    """
    if name.endswith("^"):
        return dual_arc(load_builtin(name[:-1], plane_file))
    if name in DENNISTON_BUILTINS:
        m, s, h = DENNISTON_BUILTINS[name]
        field = Gf2mField(m)
        a = denniston_arc(field, s, h, plane_for_label(f"PG(2,{field.q})"))
        return Arc(a.plane, a.points, a.degree, name)
    if name in arcdata.KNOWN_ARCS:
        plane_label, pts = arcdata.KNOWN_ARCS[name]
        return validate_arc(plane_for_label(plane_label, plane_file), pts, 4, name)
    data = os.environ.get(DATA_ENV)
    if data and (Path(data) / "arcs" / f"{name}.arc").exists():
        rec = parse_arc((Path(data) / "arcs" / f"{name}.arc").read_text())
        return validate_arc(plane_for_label(rec.plane_label, plane_file), rec.points, rec.degree, name)
    raise MaxArcsError(f"unknown builtin {name!r}; choose from {', '.join(builtin_names())}")


def load_arc(args) -> Arc:
    if getattr(args, "builtin", None):
        return load_builtin(args.builtin, getattr(args, "plane", None))
    if not getattr(args, "arc", None):
        raise MaxArcsError("give --builtin or --arc")
    rec = parse_arc(Path(args.arc).read_text())
    plane = plane_for_label(rec.plane_label, getattr(args, "plane", None))
    return validate_arc(plane, rec.points, rec.degree, rec.label)


# -- reports -----------------------------------------------------------------

@dataclass
class ArcReport:
    label: str
    aut_design: int | None
    parallel_classes: int | None
    parallel_classes_dual: int | None
    resolutions: int | None
    resolutions_dual: int | None
    rank: int
    a2_a4: list[int]
    code: list[int]
    dual_code: list[int]
    a_d_perp: int
    hyperovals: int
    rank_bounds: list[int]
    bound_check: dict | None
    min_words_are_blocks: bool
    consistent: bool = True

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ArcReport":
        data = json.loads(text)
        return cls(**{f.name: data[f.name] for f in fields(cls)})

    def table(self) -> str:
        rows = [
            ("arc", self.label),
            ("|Aut(D)|", self.aut_design),
            ("parallel classes D / D^", f"{self.parallel_classes} / {self.parallel_classes_dual}"),
            ("resolutions D / D^", f"{self.resolutions} / {self.resolutions_dual}"),
            ("2-rank", self.rank),
            ("(A_2, A_4)", tuple(self.a2_a4)),
            ("C", "[{},{},{}]".format(*self.code)),
            ("C-perp", "[{},{},{}]".format(*self.dual_code)),
            ("A_d_perp", self.a_d_perp),
            ("hyperovals", self.hyperovals),
            ("rank bounds", tuple(self.rank_bounds)),
            ("compatible bound", _fmt_bound(self.bound_check)),
            ("min words are blocks", self.min_words_are_blocks),
            ("consistent", self.consistent),
        ]
        width = max(len(k) for k, _ in rows)
        return "\n".join(f"{k:<{width}}  {v}" for k, v in rows)


def _fmt_bound(b: dict | None) -> str:
    if b is None:
        return "n/a"
    return f"{b['m']} <= {b['bound']} ({'equality' if b['equality'] else 'strict'})"


def _census(d, limit_k: int = 3):
    """Parallel classes and resolutions, skipped for tiny block size (too many)."""
    if d.k < limit_k:
        return None, None
    pcs = enumerate_parallel_classes(d)
    return len(pcs), len(enumerate_resolutions(d, pcs))


def build_report(a: Arc, census: bool = False, cap: int = DEFAULT_CAP) -> ArcReport:
    d = design_from_arc(a)
    m, s = design_exponents(d)
    c = code_of_design(d)
    cp = dual_code(c)
    wd = weight_distribution(c, cap)
    wdp = weight_distribution(cp, cap)
    hyper = len(find_hyperovals(d))
    dmin, dperp = wd.min_distance, wdp.min_distance
    bounds = rank_bounds(d.v, m, s, dmin, dperp, bool(hyper))
    conj = check_minimum_words_are_blocks(d, c)
    pc = res = pc_dual = res_dual = None
    if census:
        pc, res = _census(d)
        if a.degree < a.order:
            pc_dual, res_dual = _census(design_from_arc(dual_arc(a)))
    bound = None
    if a.order // a.degree >= 2:
        bound = max_compatible_bound_check(resolutions_from_embedding(a, d), a.order // a.degree, a.degree)
    consistent = (
        c.k + cp.k == d.v
        and (dperp != 2**m + 2 or wdp[dperp] == hyper)
        and c.k in bounds
        and (bound is None or bound["passed"])
    )
    return ArcReport(
        label=a.label,
        aut_design=canonize(design_graph(d)).automorphism_group_order,
        parallel_classes=pc,
        parallel_classes_dual=pc_dual,
        resolutions=res,
        resolutions_dual=res_dual,
        rank=c.k,
        a2_a4=[wd[2], wd[4]],
        code=[d.v, c.k, dmin],
        dual_code=[d.v, cp.k, dperp],
        a_d_perp=wdp[dperp],
        hyperovals=hyper,
        rank_bounds=[bounds.lower, bounds.upper],
        bound_check=bound,
        min_words_are_blocks=conj["all_min_words_are_blocks"],
        consistent=consistent,
    )


def classify(arcs: list[Arc], cap: int = DEFAULT_CAP) -> dict:
    """Partition codes into equivalence classes and designs into isomorphism classes."""
    designs = [design_from_arc(a) for a in arcs]
    codes = [code_of_design(d) for d in designs]
    code_forms = [canonize(code_graph(c, cap)) for c in codes]
    design_forms = [canonize(design_graph(d)) for d in designs]

    def partition(forms, same):
        classes: list[list[int]] = []
        witnesses = {}
        for i in range(len(forms)):
            for cls in classes:
                j = cls[0]
                ok, wit = same(j, i)
                if ok:
                    cls.append(i)
                    witnesses[arcs[i].label] = (arcs[j].label, wit)
                    break
            else:
                classes.append([i])
        return [[arcs[i].label for i in cls] for cls in classes], witnesses

    code_classes, code_wit = partition(
        code_forms,
        lambda j, i: codes_equivalent(codes[j], codes[i], cap, (code_forms[j], code_forms[i]))
        if codes[j].k == codes[i].k and codes[j].n == codes[i].n else (False, None),
    )
    design_classes, _ = partition(
        design_forms,
        lambda j, i: designs_isomorphic(designs[j], designs[i], (design_forms[j], design_forms[i])),
    )
    return {
        "code_classes": code_classes,
        "code_witnesses": {k: [src, format_cycles(p)] for k, (src, p) in code_wit.items()},
        "design_classes": design_classes,
    }


def verify_all(arcs: list[Arc], decode_trials: int = 100, seed: int = 0) -> list[dict]:
    from .codes import verify_code_properties

    out = []
    for a in arcs:
        d = design_from_arc(a)
        entry = {"label": a.label}
        try:
            entry.update(verify_code_properties(d, decode_trials=decode_trials, seed=seed))
            conj = check_minimum_words_are_blocks(d)
            entry["min_words_are_blocks"] = conj["all_min_words_are_blocks"]
            if a.order // a.degree >= 2:
                emb = resolutions_from_embedding(a, d)
                entry["bound_check"] = max_compatible_bound_check(emb, a.order // a.degree, a.degree)
                entry["passed"] = entry["passed"] and entry["bound_check"]["passed"]
        except MaxArcsError as exc:
            entry["passed"] = False
            entry["error"] = f"{type(exc).__name__}: {exc}"
        out.append(entry)
    return out


# -- commands ------------------------------------------------------------------

def _emit(args, payload, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, default=list))
    else:
        print(text)


def cmd_plane_gen(args) -> int:
    m = args.q.bit_length() - 1
    if 1 << m != args.q or m < 1:
        raise MaxArcsError("q must be a power of 2")
    text = serialize_plane(make_pg2(Gf2mField(m)))
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_plane_check(args) -> int:
    plane = parse_plane(Path(args.file).read_text())
    check_plane(plane.structure, plane.order)
    _emit(args, {"label": plane.label, "order": plane.order, "valid": True},
          f"{plane.label}: projective plane of order {plane.order}")
    return 0


def cmd_arc_validate(args) -> int:
    a = load_arc(args)
    _emit(args, {"label": a.label, "plane": a.plane.label, "size": a.size, "degree": a.degree, "valid": True},
          f"{a.label}: maximal ({a.size},{a.degree})-arc in {a.plane.label}")
    return 0


def cmd_arc_dual(args) -> int:
    a = load_arc(args)
    b = dual_arc(a)
    text = serialize_arc(ArcRecord(b.label.replace(" ", "_"), b.plane.label, b.degree, b.points))
    if args.out:
        Path(args.out).write_text(text)
    if args.json:
        print(json.dumps({"label": b.label, "plane": b.plane.label, "degree": b.degree, "points": b.points}))
    elif not args.out:
        sys.stdout.write(text)
    return 0


def cmd_arc_search(args) -> int:
    plane = plane_for_label(f"PG(2,{args.q})", args.plane)
    cfg = SearchConfig(
        k=args.k,
        max_experiments=args.experiments,
        moves_per_experiment=args.moves,
        tabu_length=args.tabu,
        rng_seed=args.seed,
        stop_after=args.stop_after,
    )
    found = tabu_search(plane, cfg)
    classes: dict[tuple, list[str]] = {}
    for a in found:
        key = canonize(design_graph(design_from_arc(a))).key() if a.degree > 1 else ()
        classes.setdefault(key, []).append(a.label)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for a in found:
            (out / f"{a.label}.arc").write_text(serialize_arc(ArcRecord(a.label, plane.label, a.degree, a.points)))
    freq = sorted((len(v) for v in classes.values()), reverse=True)
    payload = {"found": len(found), "classes": len(classes), "class_sizes": freq,
               "arcs": [{"label": a.label, "points": a.points} for a in found]}
    _emit(args, payload, f"{len(found)} arcs in {len(classes)} design classes, sizes {freq}")
    return 0


def cmd_design_report(args) -> int:
    rep = build_report(load_arc(args), census=args.census, cap=args.cap)
    if args.json:
        print(rep.to_json())
    else:
        print(rep.table())
    return 0 if rep.consistent else 1


def cmd_design_resolutions(args) -> int:
    a = load_arc(args)
    d = design_from_arc(a)
    pcs = enumerate_parallel_classes(d)
    res = enumerate_resolutions(d, pcs)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "design.txt").write_text(serialize_design(d))
        for i, r in enumerate(res, 1):
            (out / f"resolution{i}.txt").write_text(serialize_resolution(r))
    _emit(args, {"label": a.label, "parallel_classes": len(pcs), "resolutions": len(res)},
          f"{a.label}: {len(pcs)} parallel classes, {len(res)} resolutions")
    return 0


def cmd_code_report(args) -> int:
    a = load_arc(args)
    d = design_from_arc(a)
    c = code_of_design(d)
    cp = dual_code(c)
    wd = weight_distribution(c, args.cap)
    wdp = weight_distribution(cp, args.cap)
    payload = {
        "label": a.label,
        "code": [c.n, c.k, wd.min_distance],
        "dual_code": [c.n, cp.k, wdp.min_distance],
        "weights": wd.nonzero(),
        "dual_weights": wdp.nonzero(),
    }
    text = (f"{a.label}: C = [{c.n},{c.k},{wd.min_distance}], C-perp = [{c.n},{cp.k},{wdp.min_distance}]\n"
            f"  C weights      {wd.nonzero()}\n  C-perp weights {wdp.nonzero()}")
    _emit(args, payload, text)
    return 0


def cmd_code_classify(args) -> int:
    names = args.names or list(DENNISTON_BUILTINS)
    arcs = [load_builtin(n, args.plane) for n in names]
    result = classify(arcs, args.cap)
    lines = [f"{len(result['code_classes'])} code classes, {len(result['design_classes'])} design classes"]
    lines += ["  {" + ", ".join(cls) + "}" for cls in result["code_classes"]]
    for label, (src, cyc) in result["code_witnesses"].items():
        lines.append(f"  {src} -> {label}: {cyc}")
    _emit(args, result, "\n".join(lines))
    return 0


def cmd_code_decode(args) -> int:
    a = load_arc(args)
    d = design_from_arc(a)
    word = args.word.strip()
    if len(word) != d.v or set(word) - {"0", "1"}:
        raise MaxArcsError(f"word must be {d.v} characters of 0/1")
    bits = BitVector.from_support(d.v, [i for i, ch in enumerate(word) if ch == "1"])
    res = majority_logic_decode(d, bits)
    out = "".join("1" if res.codeword.bits >> i & 1 else "0" for i in range(d.v))
    _emit(args, {"codeword": out, "corrected": sorted(p + 1 for p in res.corrected_positions),
                 "within_capacity": res.within_capacity}, out)
    return 0


def cmd_verify_theorems(args) -> int:
    names = args.names or list(DENNISTON_BUILTINS)
    results = verify_all([load_builtin(n, args.plane) for n in names], args.trials, args.seed)
    lines = [f"{'PASS' if r['passed'] else 'FAIL'} {r['label']}" + (f"  {r['error']}" if "error" in r else "")
             for r in results]
    _emit(args, results, "\n".join(lines))
    return 0 if all(r["passed"] for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="maxarcs", description="Maximal arcs, their designs and binary codes.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="group", required=True)

    def arc_opts(sp):
        sp.add_argument("--builtin", help="builtin arc name; append ^ for the dual arc")
        sp.add_argument("--arc", help="arc file")
        sp.add_argument("--plane", help="plane file (needed for planes that are not PG(2,q))")
        sp.add_argument("--cap", type=int, default=DEFAULT_CAP, help="max dimension to enumerate")

    plane = sub.add_parser("plane").add_subparsers(dest="cmd", required=True)
    sp = plane.add_parser("gen")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_plane_gen)
    sp = plane.add_parser("check")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_plane_check)

    arc = sub.add_parser("arc").add_subparsers(dest="cmd", required=True)
    sp = arc.add_parser("validate")
    arc_opts(sp)
    sp.set_defaults(func=cmd_arc_validate)
    sp = arc.add_parser("dual")
    arc_opts(sp)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_arc_dual)
    sp = arc.add_parser("search")
    sp.add_argument("--q", type=int, default=16)
    sp.add_argument("--plane")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--experiments", type=int, default=10)
    sp.add_argument("--moves", type=int, default=50_000)
    sp.add_argument("--tabu", type=int, default=30)
    sp.add_argument("--stop-after", type=int)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_arc_search)

    design = sub.add_parser("design").add_subparsers(dest="cmd", required=True)
    sp = design.add_parser("report")
    arc_opts(sp)
    sp.add_argument("--census", action="store_true", help="also count parallel classes and resolutions")
    sp.set_defaults(func=cmd_design_report)
    sp = design.add_parser("resolutions")
    arc_opts(sp)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_design_resolutions)

    code = sub.add_parser("code").add_subparsers(dest="cmd", required=True)
    sp = code.add_parser("report")
    arc_opts(sp)
    sp.set_defaults(func=cmd_code_report)
    sp = code.add_parser("classify")
    sp.add_argument("names", nargs="*", help="builtin arc names (default: the Denniston builtins)")
    sp.add_argument("--plane")
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.set_defaults(func=cmd_code_classify)
    sp = code.add_parser("decode")
    arc_opts(sp)
    sp.add_argument("--word", required=True, help="received word as a 0/1 string")
    sp.set_defaults(func=cmd_code_decode)

    verify = sub.add_parser("verify").add_subparsers(dest="cmd", required=True)
    sp = verify.add_parser("theorems")
    sp.add_argument("names", nargs="*")
    sp.add_argument("--plane")
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify_theorems)
    return p


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    # --json is accepted anywhere on the command line
    as_json = "--json" in argv
    argv = [a for a in argv if a != "--json"]
    args = build_parser().parse_args(argv)
    args.json = as_json
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (MaxArcsError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
