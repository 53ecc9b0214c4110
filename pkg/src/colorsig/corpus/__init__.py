"""Bundled C-complexes with documented provenance and known invariant values."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from ..ccomplex import CComplexData, require_valid
from ..errors import DomainError
from ..scalar import TorusPoint, parse_omega


@dataclass(frozen=True)
class KnownValue:
    omega: TorusPoint
    eta: int
    signature: int | None = None
    abs_signature: int | None = None
    source: str = ""

    def matches(self, result) -> bool:
        if result.eta != self.eta:
            return False
        if self.signature is not None and result.signature != self.signature:
            return False
        if self.abs_signature is not None and abs(result.signature) != self.abs_signature:
            return False
        return True


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    cc: CComplexData
    provenance: str
    known: tuple = ()
    tags: tuple = ()
    concordant_to: tuple = field(default=())


def names() -> list[str]:
    pkg = resources.files(__name__)
    return sorted(p.name[:-5] for p in pkg.iterdir() if p.name.endswith(".json"))


def raw(name: str) -> dict:
    path = resources.files(__name__) / f"{name}.json"
    if not path.is_file():
        raise DomainError(f"no corpus entry named {name!r}; available: {', '.join(names())}")
    return json.loads(path.read_text())


def load(name: str) -> CorpusEntry:
    data = raw(name)
    cc = CComplexData.from_json(data)
    require_valid(cc)
    known = tuple(
        KnownValue(parse_omega(k["omega"]), k["eta"], k.get("signature"), k.get("abs_signature"),
                   k.get("source", ""))
        for k in data.get("known", []))
    return CorpusEntry(name, cc, data.get("provenance", ""), known, tuple(data.get("tags", [])),
                       tuple(data.get("concordant_to", [])))


def entries() -> list[CorpusEntry]:
    return [load(n) for n in names()]


def concordant_pairs() -> list[tuple[str, str]]:
    """Documented concordances between corpus entries, plus every entry with itself."""
    pairs = []
    for e in entries():
        pairs.append((e.name, e.name))
        pairs.extend((e.name, other) for other in e.concordant_to)
    return pairs
