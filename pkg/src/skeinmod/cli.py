"""Command-line front end.

Six verbs: decompose, index, reduce, freeness, specialize, table. Output
is line-oriented plain text (or one JSON object with --json) and is
byte-identical for identical inputs. Every error exits nonzero with a
single line "error:<category>:<message>"; parse and usage problems exit
with code 2, dimension mismatches with code 3.
"""

from __future__ import annotations

import argparse
import itertools
import json
import re
import sys

from .errors import DimensionError, ParseError
from .laurent import SPECIALIZE_L, SPECIALIZE_S, SPECIALIZE_W, LaurentPoly2
from .manifold import (
    BUILTIN_NAMES,
    ClassLabel,
    HomologyClass1,
    ManifoldModel,
    builtin,
    load_model,
)
from .skein import (
    MODULE_TAGS,
    LinkClass,
    SkeinElement,
    alpha_from_refs,
    epsilon,
    epsilon_prime,
    is_free,
    load_trace,
    mu_index,
    summand,
    trace_evaluate,
)

_TAG_LABEL = {"sprime": "S'", "s": "S", "l": "L", "w": "W"}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


# -- input resolution ----------------------------------------------------------

_BUILTIN_CALL = re.compile(r"^(lens|handlebody)\(([-0-9,\s]*)\)$")


def resolve_manifold(spec: str) -> ManifoldModel:
    """A builtin name like S2xS1 or lens(5,1), otherwise a document path."""
    s = spec.strip()
    if s in ("S3", "S2xS1", "T3"):
        return builtin(s)
    m = _BUILTIN_CALL.match(s)
    if m:
        raw = [p.strip() for p in m.group(2).split(",") if p.strip()]
        try:
            params = [int(p) for p in raw]
        except ValueError:
            raise ParseError(f"builtin parameters must be integers, got {m.group(2)!r}")
        return builtin(m.group(1), *params)
    return load_model(s)


def _alpha_component(text: str, M: ManifoldModel) -> ClassLabel:
    t = text.strip()
    if t.startswith("id:"):
        cid = t[3:].strip()
        found = M.class_by_id(cid)
        if found is not None:
            return found
        if M.h1_rank == 0:
            return ClassLabel(cid, HomologyClass1(()))
        raise ParseError(f"unknown class id {cid!r} (not in the model's class table)")
    try:
        coords = tuple(int(x) for x in t.split(","))
    except ValueError:
        raise ParseError(f"bad alpha component {text!r}: expected integers or id:<name>")
    if len(coords) != M.h1_rank:
        raise DimensionError(
            f"alpha component {t!r} has {len(coords)} coordinate(s), "
            f"expected h1_rank = {M.h1_rank}"
        )
    return ClassLabel(",".join(str(x) for x in coords), HomologyClass1(coords))


def parse_alpha_spec(text: str, M: ManifoldModel) -> LinkClass:
    """Inline multiset spec: "[1,2]", "[id:beta, id:gamma]", "[1,0,0; 0,1,0]".

    Components are separated by semicolons; when the model has h1_rank 1
    (or the items are id refs) commas separate components too.
    """
    t = text.strip()
    if not (t.startswith("[") and t.endswith("]")):
        raise ParseError(f"alpha spec must be bracketed like [1,2], got {text!r}")
    inner = t[1:-1].strip()
    if not inner:
        return LinkClass(())
    if ";" in inner:
        parts = [p for p in inner.split(";")]
        return LinkClass(tuple(_alpha_component(p, M) for p in parts))
    items = [p.strip() for p in inner.split(",")]
    if any(it.startswith("id:") for it in items) or M.h1_rank == 1:
        return LinkClass(tuple(_alpha_component(it, M) for it in items))
    return LinkClass((_alpha_component(inner, M),))


def _alpha_json(alpha: LinkClass) -> list:
    out = []
    for c in alpha.components:
        entry = {"id": c.id, "h": list(c.h.free)}
        if c.h.torsion_tag is not None:
            entry["torsion_tag"] = c.h.torsion_tag
        out.append(entry)
    return out


def _triple_str(t) -> str:
    return f"({t.e1},{t.e2},{t.e3})"


# -- verbs ---------------------------------------------------------------------


def _index_fields(M: ManifoldModel, alpha: LinkClass) -> dict:
    t = epsilon_prime(M, alpha)
    summands = {tag: summand(M, alpha, tag) for tag in MODULE_TAGS}
    return {
        "eps_prime": t,
        "eps": epsilon(M, alpha),
        "mu": mu_index(M, alpha),
        "eps2": abs(t.e2),
        "summands": summands,
    }


def cmd_index(args) -> list[str]:
    M = resolve_manifold(args.manifold)
    alpha = parse_alpha_spec(args.alpha, M)
    f = _index_fields(M, alpha)
    free_all = all(s.is_free for s in f["summands"].values())
    if args.json:
        payload = {
            "manifold": M.name,
            "alpha": _alpha_json(alpha),
            "eps_prime": list(f["eps_prime"]),
            "eps": f["eps"],
            "mu": f["mu"],
            "eps2": f["eps2"],
            "summands": {
                tag: {"relations": [p.render(" ") for p in s.relations], "free": s.is_free}
                for tag, s in f["summands"].items()
            },
            "free_all": free_all,
        }
        return [json.dumps(payload, indent=2)]
    lines = [
        f"manifold: {M.name}",
        f"alpha: {alpha.render()}",
        f"eps'={_triple_str(f['eps_prime'])} eps={f['eps']} mu={f['mu']} eps2={f['eps2']}",
    ]
    for tag in MODULE_TAGS:
        lines.append(f"{_TAG_LABEL[tag]}: {f['summands'][tag].render(' ')}")
    if free_all:
        lines.append("free in all four modules")
    return lines


def _enumerate_alphas(M: ManifoldModel, bound: int) -> list[LinkClass]:
    """All multisets of size <= bound over classes with coordinates in [-bound, bound],
    ordered by size then lexicographically."""
    singles: list[ClassLabel] = []
    if M.h1_rank >= 1:
        coords = range(-bound, bound + 1)
        for vec in itertools.product(coords, repeat=M.h1_rank):
            singles.append(ClassLabel(",".join(str(x) for x in vec), HomologyClass1(vec)))
        singles.sort(key=lambda c: c.sort_key())
    out = [LinkClass(())]
    for size in range(1, bound + 1):
        for combo in itertools.combinations_with_replacement(singles, size):
            out.append(LinkClass(combo))
    return out


def cmd_decompose(args) -> list[str]:
    M = resolve_manifold(args.manifold)
    if args.bound < 0:
        raise ParseError(f"bound must be >= 0, got {args.bound}")
    alphas = _enumerate_alphas(M, args.bound)
    rows = []
    for alpha in alphas:
        t = epsilon_prime(M, alpha)
        rows.append((alpha, t, summand(M, alpha, args.module)))
    if args.json:
        payload = {
            "manifold": M.name,
            "module": args.module,
            "bound": args.bound,
            "rows": [
                {
                    "alpha": _alpha_json(alpha),
                    "eps_prime": list(t),
                    "relations": [p.render(" ") for p in s.relations],
                    "free": s.is_free,
                }
                for alpha, t, s in rows
            ],
        }
        return [json.dumps(payload, indent=2)]
    lines = [
        f"manifold: {M.name}",
        f"module: {args.module}",
        f"bound: {args.bound}",
    ]
    for alpha, t, s in rows:
        lines.append(f"alpha={alpha.render()} eps'={_triple_str(t)} {s.render(' ')}")
    return lines


def cmd_reduce(args) -> list[str]:
    M = resolve_manifold(args.manifold)
    trace = load_trace(args.trace, M)
    raw, element = trace_evaluate(M, trace)
    if args.module != "sprime":
        element = element.specialize(args.module)
    alpha = trace.alpha
    if element.terms:
        coeff = element.terms[alpha]
        exponents = next(iter(coeff.terms))
    else:
        # a monomial coefficient never reduces to zero, but stay defensive
        exponents = (0, 0) if args.module == "sprime" else 0
    reduced_str = (
        f"({exponents[0]},{exponents[1]})" if args.module == "sprime" else str(exponents)
    )
    if args.json:
        payload = {
            "manifold": M.name,
            "alpha": _alpha_json(alpha),
            "module": args.module,
            "raw": [raw.w1, raw.w2],
            "reduced": list(exponents) if args.module == "sprime" else exponents,
            "element": element.render(" "),
        }
        return [json.dumps(payload, indent=2)]
    return [
        f"manifold: {M.name}",
        f"alpha: {alpha.render()}",
        f"module: {args.module}",
        f"raw: ({raw.w1},{raw.w2})",
        f"reduced: {reduced_str}",
        f"element: {element.render(' ')}",
    ]


def _vec_str(v) -> str:
    return "[" + ",".join(str(x) for x in v) + "]"


def cmd_freeness(args) -> list[str]:
    M = resolve_manifold(args.manifold)
    free, witness = is_free(M, args.module)
    kind = "sphere" if args.module == "w" else "torus"
    if free:
        if args.module == "w":
            has_gens = bool(M.sphere_subgroup())
        else:
            has_gens = bool(
                M.torus_default or M.torus_exceptions or M.torus_rule is not None
            )
        if not has_gens:
            reason = f"no {kind} classes"
        elif M.h1_rank == 0:
            reason = "no homology to pair against"
        else:
            reason = f"all {kind} pairings vanish"
        verdict = f"free ({reason})"
    else:
        t, e = witness
        val = M.pairing_eval(t, e)
        verdict = (
            f"NOT free; witness {kind} {_vec_str(t.vec)} pairs {val} "
            f"with class {_vec_str(e.free)}"
        )
    if args.json:
        payload = {"manifold": M.name, "module": args.module, "free": free}
        if witness is not None:
            t, e = witness
            payload["witness"] = {
                "generator": list(t.vec),
                "class": list(e.free),
                "pairing": M.pairing_eval(t, e),
            }
        return [json.dumps(payload, indent=2)]
    return [f"manifold: {M.name}", f"module: {args.module}", verdict]


def cmd_specialize(args) -> list[str]:
    text = args.element
    idx = text.find("[")
    poly_text, carrier = (text[:idx], text[idx:].strip()) if idx >= 0 else (text, "")
    poly = LaurentPoly2.parse(poly_text)
    target = args.module
    smap = {"s": SPECIALIZE_S, "l": SPECIALIZE_L, "w": SPECIALIZE_W}[target]
    result = poly.specialize(smap)
    rendered = (result.render(" ") + (" " + carrier if carrier else "")).strip()
    if args.json:
        payload = {"module": target, "input": text, "result": rendered}
        return [json.dumps(payload, indent=2)]
    return [rendered]


def cmd_table(args) -> list[str]:
    M = resolve_manifold(args.manifold)
    try:
        with open(args.alphas, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read alphas file {args.alphas}: {exc}")
    except json.JSONDecodeError as exc:
        raise ParseError(f"alphas file {args.alphas} is not valid JSON: {exc}")
    if not isinstance(doc, list):
        raise ParseError("alphas file must hold a JSON array of class-ref arrays")
    alphas = [alpha_from_refs(refs, M) for refs in doc]
    rows = [(alpha, _index_fields(M, alpha)) for alpha in alphas]
    if args.json:
        payload = {
            "manifold": M.name,
            "rows": [
                {
                    "alpha": _alpha_json(alpha),
                    "eps_prime": list(f["eps_prime"]),
                    "eps": f["eps"],
                    "mu": f["mu"],
                    "eps2": f["eps2"],
                    "sprime_relations": [p.render(" ") for p in f["summands"]["sprime"].relations],
                }
                for alpha, f in rows
            ],
        }
        return [json.dumps(payload, indent=2)]
    lines = [f"manifold: {M.name}"]
    for alpha, f in rows:
        lines.append(
            f"alpha={alpha.render()} eps'={_triple_str(f['eps_prime'])} "
            f"eps={f['eps']} mu={f['mu']} eps2={f['eps2']} "
            f"S'={f['summands']['sprime'].render(' ')}"
        )
    return lines


# -- parser and entry point ------------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="skeinmod",
        description="Two-variable skein module indices, summands, and trace reduction.",
    )
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit one JSON object")
        return p

    p = add("index", "indices and summand relations for one alpha")
    p.add_argument("--manifold", required=True, help="builtin name or document path")
    p.add_argument("--alpha", required=True, help='inline spec like "[1,2]"')
    p.set_defaults(func=cmd_index)

    p = add("decompose", "summand table over all alpha up to a bound")
    p.add_argument("--manifold", required=True)
    p.add_argument("--bound", required=True, type=int)
    p.add_argument("--module", choices=MODULE_TAGS, default="sprime")
    p.set_defaults(func=cmd_decompose)

    p = add("reduce", "evaluate a move trace and reduce its writhe exponents")
    p.add_argument("--manifold", required=True)
    p.add_argument("--trace", required=True, help="trace document path")
    p.add_argument("--module", choices=MODULE_TAGS, default="sprime")
    p.set_defaults(func=cmd_reduce)

    p = add("freeness", "whole-module freeness verdict with witness")
    p.add_argument("--manifold", required=True)
    p.add_argument("--module", choices=MODULE_TAGS, default="sprime")
    p.set_defaults(func=cmd_freeness)

    p = add("specialize", "apply a specialization map to a rendered element")
    p.add_argument("element", help='rendered element like "q1^3 q2^1 [x]"')
    p.add_argument("--module", choices=("s", "l", "w"), required=True)
    p.set_defaults(func=cmd_specialize)

    p = add("table", "batch index table for alphas listed in a JSON file")
    p.add_argument("--manifold", required=True)
    p.add_argument("--alphas", required=True, help="path to a JSON array of class-ref arrays")
    p.set_defaults(func=cmd_table)

    return parser


def _one_line(exc) -> str:
    return " ".join(str(exc).split())


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        lines = args.func(args)
        sys.stdout.write("\n".join(lines) + "\n")
        return 0
    except _UsageError as exc:
        print(f"error:usage:{_one_line(exc)}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"error:parse:{_one_line(exc)}", file=sys.stderr)
        return 2
    except DimensionError as exc:
        print(f"error:dimension:{_one_line(exc)}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
