"""JSON documents for complexes and presentations, plus DOT export.

A document is an object with a "kind" ("adc" or "polygraph") and a list of
generators in declaration order.  Serialization is canonical: generators
are emitted dimension by dimension in declaration order, keys are sorted,
and the text ends with a newline, so serialize(parse(serialize(x))) is the
identity on the text.
"""

from __future__ import annotations

import json

from .adc import Adc, RelationGraph
from .polygraph import CellExpr, Comp, Gen, Id, PolyPresentation
from .zlin import IntVector


class DocumentError(Exception):
    """The text is not a well-formed document (schema level)."""

    code = "SCHEMA"


def expr_to_obj(expr: CellExpr):
    if isinstance(expr, Gen):
        return {"gen": expr.name}
    if isinstance(expr, Id):
        return {"id": expr_to_obj(expr.inner)}
    if isinstance(expr, Comp):
        return {"comp": [expr.level, expr_to_obj(expr.left), expr_to_obj(expr.right)]}
    raise TypeError("not a cell expression: %r" % (expr,))


def obj_to_expr(obj) -> CellExpr:
    if not isinstance(obj, dict) or len(obj) != 1:
        raise DocumentError("expression must be a one-key object, got %r" % (obj,))
    if "gen" in obj:
        name = obj["gen"]
        if not isinstance(name, str):
            raise DocumentError("gen expression needs a string name")
        return Gen(name)
    if "id" in obj:
        return Id(obj_to_expr(obj["id"]))
    if "comp" in obj:
        body = obj["comp"]
        if (not isinstance(body, list) or len(body) != 3
                or not isinstance(body[0], int) or isinstance(body[0], bool)):
            raise DocumentError("comp expression needs [level, left, right]")
        return Comp(body[0], obj_to_expr(body[1]), obj_to_expr(body[2]))
    raise DocumentError("unknown expression key in %r" % (obj,))


def _check_keys(record, required, label):
    if not isinstance(record, dict):
        raise DocumentError("%s must be an object" % label)
    missing = required - set(record)
    extra = set(record) - required
    if missing:
        raise DocumentError("%s is missing keys %s" % (label, sorted(missing)))
    if extra:
        raise DocumentError("%s has unknown keys %s" % (label, sorted(extra)))


def _name_dim(record, label):
    name = record.get("name")
    dim = record.get("dim")
    if not isinstance(name, str) or not name:
        raise DocumentError("%s needs a non-empty string name" % label)
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise DocumentError("%s needs a non-negative integer dim" % label)
    return name, dim


def parse_document(text: str):
    """Parse a JSON document into an Adc or a PolyPresentation.

    Schema problems raise :class:`DocumentError`; semantically invalid data
    (broken chain complex laws, ill-typed boundaries) surfaces as the
    ValueError of the corresponding constructor.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("invalid JSON: %s" % exc) from exc
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    kind = doc.get("kind")
    if kind not in ("adc", "polygraph"):
        raise DocumentError("kind must be 'adc' or 'polygraph', got %r" % (kind,))
    gens = doc.get("generators")
    if set(doc) != {"kind", "generators"} or not isinstance(gens, list):
        raise DocumentError("document needs exactly 'kind' and a 'generators' list")

    levels = {}
    records = []
    for record in gens:
        label = "generator record %d" % len(records)
        name, dim = _name_dim(record, label)
        if kind == "adc":
            required = {"name", "dim", "augmentation"} if dim == 0 else {"name", "dim", "boundary"}
        else:
            required = {"name", "dim"} if dim == 0 else {"name", "dim", "src", "tgt"}
        _check_keys(record, required, "%s (%r)" % (label, name))
        levels.setdefault(dim, []).append(name)
        records.append(record)

    max_dim = max(levels) if levels else -1
    basis = [tuple(levels.get(q, ())) for q in range(max_dim + 1)]

    if kind == "adc":
        diff = {}
        aug = {}
        for record in records:
            name, dim = record["name"], record["dim"]
            if dim == 0:
                val = record["augmentation"]
                if not isinstance(val, int) or isinstance(val, bool):
                    raise DocumentError("augmentation of %r must be an integer" % name)
                aug[name] = val
            else:
                bd = record["boundary"]
                if not isinstance(bd, dict):
                    raise DocumentError("boundary of %r must be an object" % name)
                for k, v in bd.items():
                    if not isinstance(k, str) or not isinstance(v, int) or isinstance(v, bool):
                        raise DocumentError("boundary of %r must map names to integers" % name)
                diff[name] = IntVector(bd)
        return Adc(basis, diff, aug)

    boundary = {}
    for record in records:
        name, dim = record["name"], record["dim"]
        if dim >= 1:
            boundary[name] = (obj_to_expr(record["src"]), obj_to_expr(record["tgt"]))
    return PolyPresentation(basis, boundary)


def serialize_adc(complex_: Adc) -> dict:
    gens = []
    for q, level in enumerate(complex_.basis):
        for name in level:
            if q == 0:
                gens.append({"name": name, "dim": 0,
                             "augmentation": complex_.eps_gen(name)})
            else:
                gens.append({"name": name, "dim": q,
                             "boundary": dict(complex_.diff(name).items())})
    return {"kind": "adc", "generators": gens}


def serialize_presentation(pres: PolyPresentation) -> dict:
    gens = []
    for q, level in enumerate(pres.generators):
        for name in level:
            if q == 0:
                gens.append({"name": name, "dim": 0})
            else:
                src, tgt = pres.boundary_of(name)
                gens.append({"name": name, "dim": q,
                             "src": expr_to_obj(src), "tgt": expr_to_obj(tgt)})
    return {"kind": "polygraph", "generators": gens}


def serialize_document(obj) -> str:
    if isinstance(obj, Adc):
        doc = serialize_adc(obj)
    elif isinstance(obj, PolyPresentation):
        doc = serialize_presentation(obj)
    else:
        raise TypeError("cannot serialize %r" % (obj,))
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# DOT export

def _dot_escape(name: str) -> str:
    return name.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(graph: RelationGraph, dims, name: str = "relation") -> str:
    """Render a relation graph as DOT, nodes labeled name:dimension."""
    lines = ["digraph %s {" % name]
    for node in graph.nodes:
        esc = _dot_escape(node)
        lines.append('  "%s" [label="%s:%d"];' % (esc, esc, dims[node]))
    for u, v in sorted(graph.edges):
        lines.append('  "%s" -> "%s";' % (_dot_escape(u), _dot_escape(v)))
    lines.append("}")
    return "\n".join(lines) + "\n"
