"""Homological models of oriented 3-manifolds.

A model carries the ranks of H1 and H2 modulo torsion, the integer
intersection pairing between them, per-class torus subgroup generators
(default list, per-id exception lists, or a structured rule), and the
sphere subgroup generators. Everything downstream consumes only this data.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import DimensionError, ParseError

__all__ = [
    "HomologyClass1",
    "HomologyClass2",
    "ClassLabel",
    "ManifoldModel",
    "builtin",
    "model_from_document",
    "model_to_document",
    "load_model",
    "BUILTIN_NAMES",
]


@dataclass(frozen=True)
class HomologyClass1:
    """A first-homology class: coordinates in a fixed basis of H1/torsion.

    torsion_tag distinguishes labels with equal free part; it never feeds
    into pairing values (torsion pairs to zero with everything).
    """

    free: tuple[int, ...]
    torsion_tag: str | None = None


@dataclass(frozen=True)
class HomologyClass2:
    """A second-homology class: coordinates in a fixed basis of H2/torsion."""

    vec: tuple[int, ...]


def _id_collation(cid: str):
    # ids that read as comma-separated integers sort numerically, the rest
    # lexicographically after them; keeps [-2,-1] ahead of [-1,-2] etc.
    parts = cid.split(",")
    try:
        return (0, tuple(int(p) for p in parts))
    except ValueError:
        return (1, (cid,))


@dataclass(frozen=True)
class ClassLabel:
    """A named conjugacy-class stand-in with its homology class.

    Distinct ids may share the same h (distinct classes with equal homology).
    """

    id: str
    h: HomologyClass1

    def sort_key(self):
        return (_id_collation(self.id), self.h.free, self.h.torsion_tag or "")


def _vec_str(v) -> str:
    return "[" + ",".join(str(x) for x in v) + "]"


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


@dataclass(frozen=True)
class ManifoldModel:
    name: str
    h1_rank: int
    h2_rank: int
    # h2_rank rows of h1_rank entries each
    pairing: tuple[tuple[int, ...], ...]
    torus_default: tuple[HomologyClass2, ...] = ()
    # (class id, generator list) pairs; order follows the source document
    torus_exceptions: tuple[tuple[str, tuple[HomologyClass2, ...]], ...] = ()
    torus_rule: str | None = None
    sphere_gens: tuple[HomologyClass2, ...] = ()
    classes: tuple[ClassLabel, ...] = ()
    boundary_note: str = ""

    def __post_init__(self):
        problems = []
        if self.torus_rule not in (None, "sweep"):
            raise ParseError(f"unknown torus_rule {self.torus_rule!r} (only 'sweep' exists)")
        if self.torus_rule == "sweep" and (self.h1_rank != 3 or self.h2_rank != 3):
            raise ParseError(
                "torus_rule 'sweep' needs h1_rank = 3 and h2_rank = 3, "
                f"got {self.h1_rank} and {self.h2_rank}"
            )
        if len(self.pairing) != self.h2_rank:
            problems.append(
                f"pairing has {len(self.pairing)} rows, expected h2_rank = {self.h2_rank}"
            )
        for i, row in enumerate(self.pairing):
            if len(row) != self.h1_rank:
                problems.append(
                    f"pairing row {i} has length {len(row)}, expected h1_rank = {self.h1_rank}"
                )
        for label, vecs in (
            ("torus_default", self.torus_default),
            ("sphere_gens", self.sphere_gens),
        ):
            for i, s in enumerate(vecs):
                if len(s.vec) != self.h2_rank:
                    problems.append(
                        f"{label}[{i}] has length {len(s.vec)}, expected h2_rank = {self.h2_rank}"
                    )
        for cid, vecs in self.torus_exceptions:
            for i, s in enumerate(vecs):
                if len(s.vec) != self.h2_rank:
                    problems.append(
                        f"torus_exceptions[{cid!r}][{i}] has length {len(s.vec)}, "
                        f"expected h2_rank = {self.h2_rank}"
                    )
        for c in self.classes:
            if len(c.h.free) != self.h1_rank:
                problems.append(
                    f"class {c.id!r} h has length {len(c.h.free)}, expected h1_rank = {self.h1_rank}"
                )
        if problems:
            raise DimensionError("; ".join(problems))

    # -- pairing ------------------------------------------------------------

    def pairing_eval(self, s: HomologyClass2, h: HomologyClass1) -> int:
        """Oriented intersection number: s transposed, times the pairing, times h."""
        if len(s.vec) != self.h2_rank:
            raise DimensionError(
                f"2-class {_vec_str(s.vec)} has length {len(s.vec)}, "
                f"expected h2_rank = {self.h2_rank}"
            )
        if len(h.free) != self.h1_rank:
            raise DimensionError(
                f"1-class {_vec_str(h.free)} has length {len(h.free)}, "
                f"expected h1_rank = {self.h1_rank}"
            )
        total = 0
        for i, si in enumerate(s.vec):
            if si == 0:
                continue
            row = self.pairing[i]
            total += si * sum(row[j] * h.free[j] for j in range(self.h1_rank))
        return total

    # -- torus and sphere subgroups ------------------------------------------

    def rule_generators(self, h: HomologyClass1) -> tuple[HomologyClass2, ...]:
        """Generators produced by the structured rule for a class, () if no rule.

        The sweep rule translates a loop of class h around the three basis
        directions; the swept torus classes are the wedges h ^ e_k, stored
        in the (e2^e3, e3^e1, e1^e2) basis, where they are the cross
        products h x e_k.
        """
        if self.torus_rule != "sweep":
            return ()
        out = []
        for k in range(3):
            e = tuple(1 if j == k else 0 for j in range(3))
            out.append(HomologyClass2(_cross(h.free, e)))
        return tuple(out)

    def torus_subgroup(self, c: ClassLabel) -> tuple[HomologyClass2, ...]:
        """Exception list if one is keyed by c.id, else rule output, else default."""
        if len(c.h.free) != self.h1_rank:
            raise DimensionError(
                f"1-class {_vec_str(c.h.free)} has length {len(c.h.free)}, "
                f"expected h1_rank = {self.h1_rank}"
            )
        for cid, vecs in self.torus_exceptions:
            if cid == c.id:
                return vecs
        if self.torus_rule is not None:
            return self.rule_generators(c.h)
        return self.torus_default

    def sphere_subgroup(self) -> tuple[HomologyClass2, ...]:
        return self.sphere_gens

    def class_by_id(self, cid: str) -> ClassLabel | None:
        for c in self.classes:
            if c.id == cid:
                return c
        return None


# ---------------------------------------------------------------------------
# built-in models

BUILTIN_NAMES = ("S3", "S2xS1", "T3", "lens", "handlebody")


def builtin(name: str, *params: int) -> ManifoldModel:
    """Construct a built-in model. lens takes (p, q), handlebody takes g."""
    if name == "S3":
        _expect_params(name, params, 0)
        return ManifoldModel(name="S3", h1_rank=0, h2_rank=0, pairing=())
    if name == "S2xS1":
        _expect_params(name, params, 0)
        return ManifoldModel(
            name="S2xS1",
            h1_rank=1,
            h2_rank=1,
            pairing=((1,),),
            torus_default=(HomologyClass2((1,)),),
            sphere_gens=(HomologyClass2((1,)),),
        )
    if name == "T3":
        _expect_params(name, params, 0)
        identity = tuple(tuple(1 if i == j else 0 for j in range(3)) for i in range(3))
        return ManifoldModel(
            name="T3",
            h1_rank=3,
            h2_rank=3,
            pairing=identity,
            torus_rule="sweep",
        )
    if name == "lens":
        _expect_params(name, params, 2)
        p, q = params
        if p <= 0:
            raise ParseError(f"lens parameter p must be positive, got {p}")
        return ManifoldModel(name=f"lens({p},{q})", h1_rank=0, h2_rank=0, pairing=())
    if name == "handlebody":
        _expect_params(name, params, 1)
        (g,) = params
        if g < 0:
            raise ParseError(f"handlebody genus must be non-negative, got {g}")
        return ManifoldModel(
            name=f"handlebody({g})",
            h1_rank=g,
            h2_rank=0,
            pairing=(),
            boundary_note=f"genus-{g} boundary surface",
        )
    raise ParseError(f"unknown builtin manifold {name!r} (known: {', '.join(BUILTIN_NAMES)})")


def _expect_params(name, params, count):
    if len(params) != count:
        raise ParseError(f"builtin {name!r} takes {count} parameter(s), got {len(params)}")


# ---------------------------------------------------------------------------
# document round trip

_SCHEMA_FIELDS = (
    "name",
    "h1_rank",
    "h2_rank",
    "pairing",
    "torus_default",
    "torus_exceptions",
    "torus_rule",
    "sphere_gens",
    "classes",
    "boundary_note",
)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _check_vector(v, path, parse_msgs):
    if not isinstance(v, list) or not all(_is_int(x) for x in v):
        parse_msgs.append(f"{path} must be an array of integers")
        return None
    return tuple(v)


def model_from_document(doc) -> ManifoldModel:
    """Build a model from a parsed JSON document, aggregating all problems.

    Schema and type violations raise ParseError; length mismatches alone
    raise DimensionError. Either way the message lists every problem found.
    """
    parse_msgs: list[str] = []
    if not isinstance(doc, dict):
        raise ParseError("manifold document must be a JSON object")
    for key in doc:
        if key not in _SCHEMA_FIELDS:
            parse_msgs.append(f"unknown field {key!r}")

    name = doc.get("name")
    if not isinstance(name, str):
        parse_msgs.append("field 'name' must be a string")
        name = ""
    ranks = {}
    for key in ("h1_rank", "h2_rank"):
        v = doc.get(key)
        if not _is_int(v) or v < 0:
            parse_msgs.append(f"field {key!r} must be a non-negative integer")
            v = 0
        ranks[key] = v

    pairing_rows = []
    pairing = doc.get("pairing")
    if not isinstance(pairing, list):
        parse_msgs.append("field 'pairing' must be an array of rows")
    else:
        for i, row in enumerate(pairing):
            t = _check_vector(row, f"pairing[{i}]", parse_msgs)
            pairing_rows.append(t if t is not None else ())

    def vec_list(key):
        out = []
        raw = doc.get(key, [])
        if not isinstance(raw, list):
            parse_msgs.append(f"field {key!r} must be an array of vectors")
            return ()
        for i, v in enumerate(raw):
            t = _check_vector(v, f"{key}[{i}]", parse_msgs)
            if t is not None:
                out.append(HomologyClass2(t))
        return tuple(out)

    torus_default = vec_list("torus_default")
    sphere_gens = vec_list("sphere_gens")

    exceptions = []
    raw_exc = doc.get("torus_exceptions", {})
    if not isinstance(raw_exc, dict):
        parse_msgs.append("field 'torus_exceptions' must be an object keyed by class id")
    else:
        for cid, vecs in raw_exc.items():
            if not isinstance(vecs, list):
                parse_msgs.append(f"torus_exceptions[{cid!r}] must be an array of vectors")
                continue
            lst = []
            for i, v in enumerate(vecs):
                t = _check_vector(v, f"torus_exceptions[{cid!r}][{i}]", parse_msgs)
                if t is not None:
                    lst.append(HomologyClass2(t))
            exceptions.append((cid, tuple(lst)))

    torus_rule = doc.get("torus_rule")
    if torus_rule is not None and torus_rule != "sweep":
        parse_msgs.append(f"field 'torus_rule' must be absent or 'sweep', got {torus_rule!r}")
        torus_rule = None

    classes = []
    raw_classes = doc.get("classes", [])
    if not isinstance(raw_classes, list):
        parse_msgs.append("field 'classes' must be an array")
        raw_classes = []
    seen_ids = set()
    for i, entry in enumerate(raw_classes):
        if not isinstance(entry, dict):
            parse_msgs.append(f"classes[{i}] must be an object")
            continue
        for key in entry:
            if key not in ("id", "h", "torsion_tag"):
                parse_msgs.append(f"classes[{i}] has unknown field {key!r}")
        cid = entry.get("id")
        if not isinstance(cid, str):
            parse_msgs.append(f"classes[{i}] field 'id' must be a string")
            continue
        if cid in seen_ids:
            parse_msgs.append(f"duplicate class id {cid!r}")
            continue
        seen_ids.add(cid)
        h = _check_vector(entry.get("h"), f"classes[{i}].h", parse_msgs)
        tag = entry.get("torsion_tag")
        if tag is not None and not isinstance(tag, str):
            parse_msgs.append(f"classes[{i}] field 'torsion_tag' must be a string")
            tag = None
        if h is not None:
            classes.append(ClassLabel(cid, HomologyClass1(h, tag)))

    boundary_note = doc.get("boundary_note", "")
    if not isinstance(boundary_note, str):
        parse_msgs.append("field 'boundary_note' must be a string")
        boundary_note = ""

    if parse_msgs:
        raise ParseError("; ".join(parse_msgs))
    # shape checks live in the constructor; it raises an aggregated DimensionError
    return ManifoldModel(
        name=name,
        h1_rank=ranks["h1_rank"],
        h2_rank=ranks["h2_rank"],
        pairing=tuple(pairing_rows),
        torus_default=torus_default,
        torus_exceptions=tuple(exceptions),
        torus_rule=torus_rule,
        sphere_gens=sphere_gens,
        classes=tuple(classes),
        boundary_note=boundary_note,
    )


def model_to_document(m: ManifoldModel) -> dict:
    """Render a model to the document form; loading it back gives an equal model."""
    doc: dict = {
        "name": m.name,
        "h1_rank": m.h1_rank,
        "h2_rank": m.h2_rank,
        "pairing": [list(row) for row in m.pairing],
    }
    if m.torus_default:
        doc["torus_default"] = [list(s.vec) for s in m.torus_default]
    if m.torus_exceptions:
        doc["torus_exceptions"] = {
            cid: [list(s.vec) for s in vecs] for cid, vecs in m.torus_exceptions
        }
    if m.torus_rule is not None:
        doc["torus_rule"] = m.torus_rule
    if m.sphere_gens:
        doc["sphere_gens"] = [list(s.vec) for s in m.sphere_gens]
    if m.classes:
        entries = []
        for c in m.classes:
            entry = {"id": c.id, "h": list(c.h.free)}
            if c.h.torsion_tag is not None:
                entry["torsion_tag"] = c.h.torsion_tag
            entries.append(entry)
        doc["classes"] = entries
    if m.boundary_note:
        doc["boundary_note"] = m.boundary_note
    return doc


def load_model(path: str) -> ManifoldModel:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read manifold file {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"manifold file {path} is not valid JSON: {exc}") from exc
    return model_from_document(doc)
