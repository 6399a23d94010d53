"""Text and JSON formats.

Hypergraph text format::

    # comments start with '#'
    r n m
    v1 v2 .. vr      (m lines, ascending vertices)

An optional ``#! parts p_0 .. p_{n-1}`` line records an r-partition.
Kernels and certificates are JSON documents matching the schemas in
``sidorenko/schemas``; rationals are ``{"num": "..", "den": ".."}``
(certificates) or ``"p/q"`` strings (kernel entries).
"""
from __future__ import annotations

import dataclasses
import json
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any

from .domination import WeightedKernel
from .hypergraph import Hypergraph, PartiteHypergraph

__all__ = [
    "FormatError",
    "parse_hypergraph",
    "serialize_hypergraph",
    "read_hypergraph",
    "write_hypergraph",
    "kernel_to_json",
    "kernel_from_json",
    "read_kernel",
    "to_jsonable",
    "rational_json",
    "certificate_json",
    "witness_json",
    "load_schema",
]


class FormatError(ValueError):
    def __init__(self, msg: str, line: int | None = None, col: int | None = None):
        where = f"line {line}" + (f", column {col}" if col is not None else "") if line else ""
        super().__init__(f"{where}: {msg}" if where else msg)
        self.line, self.col = line, col


def parse_hypergraph(text: str) -> Hypergraph:
    header: tuple[int, int, int] | None = None
    parts: list[int] | None = None
    edges: list[tuple[int, ...]] = []
    seen: dict[tuple[int, ...], int] = {}
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("#!"):
            words = line[2:].split()
            if words and words[0] == "parts":
                try:
                    parts = [int(x) for x in words[1:]]
                except ValueError:
                    raise FormatError("parts must be integers", no) from None
            continue
        if not line or line.startswith("#"):
            continue
        nums = []
        col = 1
        for tok in raw.split():
            col = raw.index(tok, col - 1) + 1
            try:
                nums.append(int(tok))
            except ValueError:
                raise FormatError(f"expected an integer, got {tok!r}", no, col) from None
            col += len(tok)
        if header is None:
            if len(nums) != 3 or min(nums) < 0 or nums[0] < 1:
                raise FormatError("header must be 'r n m' with r >= 1", no)
            header = (nums[0], nums[1], nums[2])
            continue
        r, n, _ = header
        if len(nums) != r:
            raise FormatError(f"edge has {len(nums)} vertices, expected {r}", no)
        if any(not 0 <= x < n for x in nums):
            raise FormatError(f"vertex out of range 0..{n - 1}", no)
        if len(set(nums)) != r:
            raise FormatError("edge repeats a vertex", no)
        e = tuple(sorted(nums))
        if e in seen:
            raise FormatError(f"duplicate edge {e} (first on line {seen[e]})", no)
        seen[e] = no
        edges.append(e)
    if header is None:
        raise FormatError("missing header 'r n m'")
    r, n, m = header
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}")
    if parts is not None:
        if len(parts) != n:
            raise FormatError(f"parts line lists {len(parts)} classes for {n} vertices")
        return PartiteHypergraph(r, n, tuple(edges), tuple(parts))
    return Hypergraph(r, n, tuple(edges))


def serialize_hypergraph(H: Hypergraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines += [f"# {c}" for c in comment.splitlines()]
    if isinstance(H, PartiteHypergraph):
        lines.append("#! parts " + " ".join(map(str, H.parts)))
    lines.append(f"{H.r} {H.n} {H.e}")
    lines += [" ".join(map(str, e)) for e in H.edges]
    return "\n".join(lines) + "\n"


def read_hypergraph(path: str | Path) -> Hypergraph:
    return parse_hypergraph(Path(path).read_text())


def write_hypergraph(H: Hypergraph, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(serialize_hypergraph(H, comment))


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def kernel_to_json(f: WeightedKernel) -> dict:
    return {
        "uniformity": f.r,
        "resolution": f.n,
        "entries": {",".join(map(str, k)): _frac_str(v) for k, v in f.entries.items()},
    }


def kernel_from_json(doc: dict) -> WeightedKernel:
    try:
        r, n, raw = int(doc["uniformity"]), int(doc["resolution"]), doc["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed kernel document: {exc}") from None
    entries = {}
    for key, val in raw.items():
        try:
            cell = tuple(int(x) for x in key.split(","))
            entries[cell] = Fraction(val)
        except ValueError:
            raise FormatError(f"bad kernel entry {key!r}: {val!r}") from None
    return WeightedKernel(r, n, entries)


def read_kernel(path: str | Path) -> WeightedKernel:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(exc.msg, exc.lineno, exc.colno) from None
    return kernel_from_json(doc)


def rational_json(x) -> dict:
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def to_jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, int, float)):
        return obj
    if isinstance(obj, Fraction):
        return rational_json(obj)
    if isinstance(obj, Hypergraph):
        out = {"r": obj.r, "n": obj.n, "edges": [list(e) for e in obj.edges]}
        if isinstance(obj, PartiteHypergraph):
            out["parts"] = list(obj.parts)
        return out
    if isinstance(obj, WeightedKernel):
        return kernel_to_json(obj)
    if dataclasses.is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (frozenset, set)):
        return [to_jsonable(x) for x in sorted(obj)]
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def certificate_json(cert) -> dict:
    return {
        "kind": "bound",
        "theorem": cert.theorem,
        "bound": rational_json(cert.bound),
        "inputs": to_jsonable(cert.inputs),
        "assumptions": list(cert.assumptions),
        "transcript": list(cert.transcript),
        "extra": to_jsonable(cert.extra),
    }


def witness_json(w, seed: int | None = None) -> dict:
    return {
        "kind": "exponent-witness",
        "pattern": to_jsonable(w.pattern),
        "host": to_jsonable(w.host),
        "s": rational_json(w.s),
        "t_F": rational_json(w.t_F),
        "t_K": rational_json(w.t_K),
        "comparison": f"t_F^{w.q} <= t_K^{w.p}" + (" (equality)" if w.exact else ""),
        "ratio": w.ratio,
        "seed": seed,
    }


def load_schema(name: str) -> dict:
    """``name`` is ``kernel``, ``certificate`` or ``rational``."""
    text = resources.files("sidorenko").joinpath("schemas", f"{name}.json").read_text()
    return json.loads(text)
