"""Command line front end: classify groups, run the corpus grid, diff reports."""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .classify import PROPERTIES, THEOREMS, RobinsonComplex, classify
from .corpus import builtin_corpus, corpus_entry, load_group
from .errors import CapExceeded, NotSigmaSoluble, NotSoluble, ParseError
from .formations import Formation, chief_series, residual
from .lattice import frattini, get_lattice, limits, maximal_subgroups, normal_subgroups
from .modularity import is_dedekind, is_m_group
from .perm import DEFAULT_ELEMENT_CAP, Group, Subgroup, conjugacy_classes, to_cycles
from .sigma import SigmaPartition, hall_subgroups

EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_DIFF = 4

DEFAULT_GRID = ("sigma1", "pi:[2,3]", "pi:[2,3,5]", "classes=[[3],[7]];rest=one-class")


def witness_generators(W: Subgroup | None) -> list[str] | None:
    if W is None:
        return None
    return [to_cycles(g) for g in W.generators] or ["()"]


def _record(group: str, order: int, sigma: str, prop: str, verdict, witness, details, elapsed):
    return {
        "group": group,
        "order": order,
        "sigma": sigma,
        "property": prop,
        "verdict": verdict,
        "witness": witness,
        "details": details,
        "elapsed_ms": elapsed,
    }


def _dumps(rec: dict) -> str:
    return json.dumps(rec, ensure_ascii=False, separators=(", ", ": "))


def sort_records(records: list[dict]) -> list[dict]:
    return sorted(records, key=lambda r: (r["group"], r["sigma"], r["property"]))


# -- result cache ------------------------------------------------------------------

class ResultCache:
    """Content-addressed verdict store; one JSON file per key."""

    def __init__(self, root: str | os.PathLike | None):
        self.root = Path(root) if root else None

    @staticmethod
    def key(G: Group, sigma: str, prop: str, oracle: bool) -> str:
        blob = "\n".join([G.hash, sigma, prop, "oracle" if oracle else "fast", __version__])
        return hashlib.sha256(blob.encode()).hexdigest()

    def get(self, key: str) -> dict | None:
        if self.root is None:
            return None
        path = self.root / key[:2] / f"{key}.json"
        try:
            return json.loads(path.read_text(encoding="utf-8"))
        except (OSError, ValueError):
            return None

    def put(self, key: str, value: dict) -> None:
        if self.root is None:
            return
        folder = self.root / key[:2]
        folder.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=folder, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(value, fh, sort_keys=True)
        os.replace(tmp, folder / f"{key}.json")


def _cache_from_env(disabled: bool) -> ResultCache:
    return ResultCache(None if disabled else os.environ.get("SIGMALAT_CACHE_DIR"))


# -- evaluation ----------------------------------------------------------------

def evaluate(G: Group, name: str, sigmas, props, oracle=False, timings=False, cache=None) -> list[dict]:
    cache = cache or ResultCache(None)
    out = []
    for spec in sigmas:
        sigma = SigmaPartition.parse(spec) if isinstance(spec, str) else spec
        for prop in props:
            key = cache.key(G, sigma.spec, prop, oracle)
            hit = cache.get(key)
            t0 = time.perf_counter()
            if hit is None:
                v = classify(prop, sigma, G, oracle=oracle)
                details = {flag.replace("-", "_"): True for flag in v.flags}
                hit = {"verdict": v.verdict, "witness": witness_generators(v.witness), "details": details}
                cache.put(key, hit)
            elapsed = round((time.perf_counter() - t0) * 1000, 3) if timings else None
            out.append(_record(name, G.order, sigma.spec, prop, hit["verdict"], hit["witness"], hit["details"],
                               elapsed))
    return out


def _corpus_task(args) -> list[dict]:
    name, sigmas, props, oracle, timings, cache_root, caps = args
    limits.subgroup_cap, limits.order_guard = caps
    G = corpus_entry(name).build()
    return evaluate(G, name, sigmas, props, oracle, timings, ResultCache(cache_root))


def run_corpus_grid(max_order, sigmas, props, oracle=False, timings=False, workers=1, cache=None) -> list[dict]:
    cache = cache or ResultCache(None)
    names = [e.name for e in builtin_corpus(max_order)]
    caps = (limits.subgroup_cap, limits.order_guard)
    tasks = [(n, list(sigmas), list(props), oracle, timings, cache.root, caps) for n in names]
    records = []
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for chunk in pool.map(_corpus_task, tasks):
                records.extend(chunk)
    else:
        for task in tasks:
            records.extend(_corpus_task(task))
    return sort_records(records)


# -- argument helpers -------------------------------------------------------------

def _split_props(text: str) -> list[str]:
    props = [p.strip() for p in text.split(",") if p.strip()]
    for p in props:
        if p not in PROPERTIES:
            raise ParseError(f"unknown property {p!r}; choose from {', '.join(PROPERTIES)}")
    return props


def _sigmas(values) -> list[str]:
    return [SigmaPartition.parse(v).spec for v in (values or ["sigma1"])]


def _group(args) -> tuple[Group, str]:
    if args.builtin:
        try:
            entry = corpus_entry(args.builtin)
        except KeyError:
            raise ParseError(f"no built-in group named {args.builtin!r}") from None
        G, name = entry.build(), entry.name
    elif args.group:
        G = load_group(args.group, element_cap=args.element_cap)
        name = Path(args.group).stem
    else:
        raise ParseError("give --group FILE or --builtin NAME")
    if args.max_order is not None and G.order > args.max_order:
        raise CapExceeded("group order", args.max_order, "--max-order")
    return G, name


def _emit(records, out=None) -> None:
    text = "".join(_dumps(r) + "\n" for r in records)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# -- subcommands --------------------------------------------------------------------

def run_classify(args) -> int:
    G, name = _group(args)
    props = _split_props(args.properties)
    recs = evaluate(G, name, _sigmas(args.sigma), props, args.oracle, args.timings, _cache_from_env(args.no_cache))
    _emit(sort_records(recs), args.out)
    return 0


def run_corpus(args) -> int:
    props = _split_props(args.properties)
    sigmas = _sigmas(args.sigma or list(DEFAULT_GRID))
    recs = run_corpus_grid(args.max_order, sigmas, props, args.oracle, args.timings, args.workers,
                           _cache_from_env(args.no_cache))
    _emit(recs, args.out)
    return 0


def run_lattice(args) -> int:
    """Plain ``key: value`` lines."""
    G, name = _group(args)
    lat = get_lattice(G)
    info = {"group": name, "order": G.order, "subgroups": len(lat)}
    if args.stats:
        by_order = Counter(int(o) for o in lat.orders)
        info.update({
            "subgroups_by_order": " ".join(f"{o}:{by_order[o]}" for o in sorted(by_order)),
            "normal_subgroups": len(normal_subgroups(G)),
            "conjugacy_classes": len(conjugacy_classes(G)),
            "maximal_subgroups": len(maximal_subgroups(G)),
            "frattini_order": frattini(G).order,
            "chief_factors": " ".join(str(f.order) for f in chief_series(G).factors),
            "dedekind": is_dedekind(G),
            "m_group": is_m_group(G),
        })
    for key, value in info.items():
        print(f"{key}: {str(value).lower() if isinstance(value, bool) else value}")
    return 0


def run_residual(args) -> int:
    G, name = _group(args)
    F = Formation(args.formation)
    out = []
    for spec in _sigmas(args.sigma):
        R = residual(F, spec, G)
        out.append({"group": name, "sigma": spec, "formation": F.value, "order": R.order,
                    "generators": witness_generators(R)})
    _emit(out)
    return 0


def run_hall(args) -> int:
    G, name = _group(args)
    out = []
    for spec in _sigmas(args.sigma):
        sigma = SigmaPartition.parse(spec)
        for cls in sigma.classes_of(G.order):
            hs = hall_subgroups(sigma, G, cls)
            out.append({"group": name, "sigma": spec, "class": str(cls), "count": len(hs),
                        "order": sigma.part(G.order, cls),
                        "first": witness_generators(hs[0]) if hs else None})
    _emit(out)
    return 0


def run_check_theorem(args) -> int:
    G, name = _group(args)
    recs = []
    for spec in _sigmas(args.sigma):
        t0 = time.perf_counter()
        try:
            v = THEOREMS[args.name](spec, G)
            verdict, details = v.verdict, dict(v.details)
            for k, obj in v.objects.items():
                if isinstance(obj, Subgroup):
                    details[f"{k}_order"] = obj.order
                elif isinstance(obj, RobinsonComplex):
                    details.update(Z_order=obj.Z.order, k=obj.k)
        except NotSigmaSoluble:
            verdict, details = None, {"sigma_soluble": False}
        except NotSoluble:
            verdict, details = None, {"soluble": False}
        elapsed = round((time.perf_counter() - t0) * 1000, 3) if args.timings else None
        recs.append(_record(name, G.order, spec, f"theorem:{args.name}", verdict, None, details, elapsed))
    _emit(recs, args.out)
    return 0


def _read_report(path) -> dict:
    table = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
            key = (rec["group"], rec["sigma"], rec["property"])
        except (ValueError, KeyError, TypeError):
            raise ParseError(f"{path}: not a report record", lineno) from None
        table[key] = {k: v for k, v in rec.items() if k != "elapsed_ms"}
    return table


def report_diff(a, b) -> list[str]:
    """Human-readable semantic differences; timings are ignored."""
    ra, rb = _read_report(a), _read_report(b)
    lines = []
    for key in sorted(set(ra) | set(rb)):
        label = " / ".join(key)
        if key not in rb:
            lines.append(f"- {label}")
        elif key not in ra:
            lines.append(f"+ {label}")
        elif ra[key] != rb[key]:
            fields = sorted(k for k in set(ra[key]) | set(rb[key]) if ra[key].get(k) != rb[key].get(k))
            for f in fields:
                lines.append(f"~ {label}: {f} {ra[key].get(f)!r} -> {rb[key].get(f)!r}")
    return lines


def run_report_diff(args) -> int:
    lines = report_diff(args.a, args.b)
    for line in lines:
        print(line)
    return EXIT_DIFF if lines else 0


# -- parser -------------------------------------------------------------------------

def _common(p: argparse.ArgumentParser, group=True) -> None:
    if group:
        p.add_argument("--group", help="group file (degree/gen format)")
        p.add_argument("--builtin", help="built-in corpus group name, e.g. S4")
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--element-cap", type=int, default=DEFAULT_ELEMENT_CAP)
    p.add_argument("--lattice-cap", type=int, default=None, help="maximum number of subgroups")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sigmalat", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="evaluate properties of one group")
    _common(p)
    p.add_argument("--sigma", action="append")
    p.add_argument("--properties", default=",".join(PROPERTIES))
    p.add_argument("--oracle", action="store_true", help="use the definitional strategies")
    p.add_argument("--timings", action="store_true")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=run_classify)

    p = sub.add_parser("corpus", help="run the corpus x sigma x property grid")
    _common(p, group=False)
    p.add_argument("--sigma", action="append")
    p.add_argument("--properties", default=",".join(PROPERTIES))
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--timings", action="store_true")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=run_corpus)

    p = sub.add_parser("lattice", help="subgroup lattice summary")
    _common(p)
    p.add_argument("--stats", action="store_true")
    p.set_defaults(func=run_lattice)

    p = sub.add_parser("residual", help="formation residual")
    _common(p)
    p.add_argument("--formation", required=True, choices=[f.value for f in Formation])
    p.add_argument("--sigma", action="append")
    p.set_defaults(func=run_residual)

    p = sub.add_parser("hall", help="Hall sigma_i-subgroups")
    _common(p)
    p.add_argument("--sigma", action="append")
    p.set_defaults(func=run_hall)

    p = sub.add_parser("check-theorem", help="evaluate a structural condition bundle")
    _common(p)
    p.add_argument("--name", required=True, choices=sorted(THEOREMS, key=lambda s: tuple(map(int, s.split(".")))))
    p.add_argument("--sigma", action="append")
    p.add_argument("--timings", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=run_check_theorem)

    p = sub.add_parser("report-diff", help="compare two JSON-lines reports")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=run_report_diff)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    saved = (limits.subgroup_cap, limits.order_guard)
    if getattr(args, "lattice_cap", None) is not None:
        limits.subgroup_cap = args.lattice_cap
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"sigmalat: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceeded as exc:
        print(f"sigmalat: {exc}", file=sys.stderr)
        return EXIT_CAP
    except OSError as exc:
        print(f"sigmalat: {exc}", file=sys.stderr)
        return EXIT_PARSE
    finally:
        limits.subgroup_cap, limits.order_guard = saved


if __name__ == "__main__":
    sys.exit(main())
