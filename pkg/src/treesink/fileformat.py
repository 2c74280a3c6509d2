"""Line-oriented instance files.

::

    # comment
    n 4
    k 2
    edge 0 1 1 1
    weight 0 3

Comments and blank lines are kept, so a canonical file survives a
parse/serialize round trip byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .tree import Instance, build

KEYWORDS = {"n": 1, "k": 1, "edge": 4, "weight": 2}


class ParseError(ValueError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


@dataclass
class InstanceFile:
    """Parsed records in file order; ``("#", text)`` holds comments and blanks."""

    records: list[tuple] = field(default_factory=list)

    @property
    def n(self) -> int:
        return next(r[1] for r in self.records if r[0] == "n")

    @property
    def k(self) -> int:
        return next((r[1] for r in self.records if r[0] == "k"), 1)

    def edges(self) -> list[tuple[int, int, int, int]]:
        return [r[1:] for r in self.records if r[0] == "edge"]

    def weights(self) -> dict[int, int]:
        return {r[1]: r[2] for r in self.records if r[0] == "weight"}

    def instance(self, k: int | None = None) -> Instance:
        """Validated instance; raises :class:`TreeError` subclasses."""
        return build(self.n, self.edges(), self.weights(), self.k if k is None else k)


def parse(text: str) -> InstanceFile:
    out = InstanceFile()
    seen: dict[str, int] = {}
    weighted: dict[int, int] = {}
    for no, line in enumerate(text.splitlines(), 1):
        body = line.strip()
        if not body or body.startswith("#"):
            out.records.append(("#", line))
            continue
        head, *args = body.split()
        if head not in KEYWORDS:
            raise ParseError(no, f"unknown record {head!r}")
        if len(args) != KEYWORDS[head]:
            raise ParseError(no, f"{head!r} takes {KEYWORDS[head]} values, got {len(args)}")
        try:
            vals = [int(a) for a in args]
        except ValueError:
            raise ParseError(no, f"non-integer value in {body!r}") from None
        if head in ("n", "k"):
            if head in seen:
                raise ParseError(no, f"{head!r} already given on line {seen[head]}")
            seen[head] = no
        if head == "weight":
            if vals[0] in weighted:
                raise ParseError(no, f"vertex {vals[0]} already weighted on line {weighted[vals[0]]}")
            weighted[vals[0]] = no
        out.records.append((head, *vals))
    if "n" not in seen:
        raise ParseError(len(text.splitlines()) + 1, "missing 'n' record")
    return out


def serialize(doc: InstanceFile) -> str:
    lines = []
    for rec in doc.records:
        if rec[0] == "#":
            lines.append(rec[1])
        else:
            lines.append(" ".join(str(x) for x in rec))
    return "".join(line + "\n" for line in lines)


def from_instance(inst: Instance, comments: list[str] = ()) -> InstanceFile:
    recs: list[tuple] = [("#", c if c.startswith("#") else "# " + c) for c in comments]
    recs += [("n", inst.n), ("k", inst.k)]
    recs += [("edge", e.u, e.v, e.tau, e.cap) for e in inst.edges]
    recs += [("weight", v, w) for v, w in enumerate(inst.weights) if w]
    return InstanceFile(recs)


def dumps(inst: Instance) -> str:
    return serialize(from_instance(inst))


def loads(text: str, k: int | None = None) -> Instance:
    return parse(text).instance(k)
