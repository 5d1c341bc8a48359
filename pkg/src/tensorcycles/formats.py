"""Family strings and the JSON decomposition interchange format.

A decomposition file looks like::

    {
      "family": {"name": "c3-x-kn", "params": [4]},
      "k": 4,
      "cycles": [
        [[0, 0], [1, 1], [0, 2], [1, 3]],
        ...
      ]
    }

Vertices are written as integers for one-part graphs, ``[side, index]`` for
bipartite graphs and ``[row, col]`` for products.  Files are UTF-8,
newline-terminated, indented by two spaces with one cycle per line, so the
same decomposition always serializes to the same bytes.
"""
from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path
from typing import Optional, Sequence, Tuple

from .errors import InvalidFamily
from .graphs import (Complete, CompleteBipartite, CompleteBipartiteMinusFactor,
                     CompleteMinusFactor, Cycle, GraphFamily, Tensor)
from .verify import Decomposition

# name -> (parameter count, builder)
FAMILY_SPECS = {
    "km-x-kn": (2, lambda m, n: Tensor(Complete(m), Complete(n))),
    "km-minus-i-x-kn": (2, lambda m, n: Tensor(CompleteMinusFactor(m), Complete(n))),
    "c3-x-kn": (1, lambda n: Tensor(Cycle(3), Complete(n))),
    "c4-x-kn": (1, lambda n: Tensor(Cycle(4), Complete(n))),
    "c6-x-kn": (1, lambda n: Tensor(Cycle(6), Complete(n))),
    "cm-x-kn": (2, lambda m, n: Tensor(Cycle(m), Complete(n))),
    "km": (1, Complete),
    "km-minus-i": (1, CompleteMinusFactor),
    "ka-b": (2, CompleteBipartite),
    "knn-minus-i": (1, CompleteBipartiteMinusFactor),
}


class FormatError(ValueError):
    pass


def build_family(name: str, params: Sequence[int]) -> GraphFamily:
    try:
        arity, builder = FAMILY_SPECS[name]
    except KeyError:
        raise InvalidFamily(f"unknown family {name!r}; expected one of "
                            + ", ".join(FAMILY_SPECS)) from None
    if len(params) != arity:
        raise InvalidFamily(f"{name} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)


def parse_family(tokens) -> GraphFamily:
    """Parse ``"km-x-kn 5 4"`` (or its token list) into a family."""
    if isinstance(tokens, str):
        tokens = tokens.split()
    if not tokens:
        raise InvalidFamily("empty family string")
    name, *rest = tokens
    try:
        params = [int(p) for p in rest]
    except ValueError:
        raise InvalidFamily(f"non-integer parameter in {' '.join(tokens)!r}") from None
    return build_family(name, params)


def family_spec(family: GraphFamily) -> Optional[Tuple[str, Tuple[int, ...]]]:
    """Inverse of :func:`build_family`, or None for families without a name."""
    if isinstance(family, Complete):
        return "km", (family.m,)
    if isinstance(family, CompleteMinusFactor):
        return "km-minus-i", (family.m,)
    if isinstance(family, CompleteBipartite):
        return "ka-b", (family.a, family.b)
    if isinstance(family, CompleteBipartiteMinusFactor):
        return "knn-minus-i", (family.n,)
    if isinstance(family, Tensor) and isinstance(family.right, Complete):
        left, n = family.left, family.right.m
        if isinstance(left, Complete):
            return "km-x-kn", (left.m, n)
        if isinstance(left, CompleteMinusFactor):
            return "km-minus-i-x-kn", (left.m, n)
        if isinstance(left, Cycle):
            if left.m in (3, 4, 6):
                return f"c{left.m}-x-kn", (n,)
            return "cm-x-kn", (left.m, n)
    return None


def family_label(family: GraphFamily) -> str:
    """Short canonical name, e.g. ``km-minus-i-8`` (used for cache files)."""
    spec = family_spec(family)
    if spec is not None:
        return "-".join([spec[0], *map(str, spec[1])])
    return _structural(family)["kind"]


def _structural(family):
    if isinstance(family, Tensor):
        return {"kind": "tensor", "left": _structural(family.left),
                "right": _structural(family.right)}
    kinds = {Complete: "complete", CompleteMinusFactor: "complete-minus-factor",
             CompleteBipartite: "complete-bipartite",
             CompleteBipartiteMinusFactor: "complete-bipartite-minus-factor",
             Cycle: "cycle"}
    kind = kinds.get(type(family))
    if kind is None:
        raise FormatError(f"cannot serialize family {family!r}")
    return {"kind": kind, **vars(family)}


def family_to_json(family: GraphFamily) -> dict:
    spec = family_spec(family)
    if spec is not None:
        return {"name": spec[0], "params": list(spec[1])}
    return _structural(family)


def family_from_json(obj) -> GraphFamily:
    if not isinstance(obj, dict):
        raise FormatError(f"family must be an object, got {obj!r}")
    if "name" in obj:
        return build_family(obj["name"], list(obj.get("params", [])))
    kind = obj.get("kind")
    if kind == "tensor":
        return Tensor(family_from_json(obj["left"]), family_from_json(obj["right"]))
    builders = {"complete": Complete, "complete-minus-factor": CompleteMinusFactor,
                "complete-bipartite": CompleteBipartite,
                "complete-bipartite-minus-factor": CompleteBipartiteMinusFactor,
                "cycle": Cycle}
    if kind not in builders:
        raise FormatError(f"unknown family kind {kind!r}")
    params = {k: v for k, v in obj.items() if k != "kind"}
    try:
        return builders[kind](**params)
    except TypeError as exc:
        raise FormatError(str(exc)) from None


def _vertex_from_json(v):
    if isinstance(v, list):
        return tuple(_vertex_from_json(x) for x in v)
    if isinstance(v, int) and not isinstance(v, bool):
        return v
    raise FormatError(f"bad vertex {v!r}")


def _vertex_to_json(v):
    if isinstance(v, tuple):
        return [_vertex_to_json(x) for x in v]
    return v


def dumps(dec: Decomposition) -> str:
    fam = json.dumps(family_to_json(dec.family), separators=(", ", ": "))
    lines = ["{", f'  "family": {fam},', f'  "k": {int(dec.k)},']
    if dec.cycles:
        lines.append('  "cycles": [')
        rows = [json.dumps(_vertex_to_json(tuple(c)), separators=(", ", ": "))
                for c in dec.cycles]
        lines.append(",\n".join("    " + r for r in rows))
        lines.append("  ]")
    else:
        lines.append('  "cycles": []')
    lines.append("}")
    return "\n".join(lines) + "\n"


def loads(text: str) -> Decomposition:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed JSON: {exc}") from None
    if not isinstance(obj, dict) or not {"family", "k", "cycles"} <= obj.keys():
        raise FormatError("expected an object with family, k and cycles")
    k = obj["k"]
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise FormatError(f"k must be a non-negative integer, got {k!r}")
    if not isinstance(obj["cycles"], list) or not all(isinstance(c, list) for c in obj["cycles"]):
        raise FormatError("cycles must be an array of arrays")
    family = family_from_json(obj["family"])
    cycles = [tuple(_vertex_from_json(v) for v in c) for c in obj["cycles"]]
    return Decomposition(family, k, cycles)


def read_decomposition(path) -> Decomposition:
    return loads(Path(path).read_text(encoding="utf-8"))


def write_decomposition(dec: Decomposition, path) -> None:
    """Write atomically: concurrent readers see the old file or the new one."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(dumps(dec))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def format_text(dec: Decomposition) -> str:
    """Human-readable listing, one cycle per line."""
    def show(v):
        if isinstance(v, tuple):
            return "(" + ",".join(show(x) for x in v) + ")"
        return str(v)
    return "".join(" ".join(show(v) for v in c) + "\n" for c in dec.cycles)
