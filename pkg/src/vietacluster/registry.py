"""Named seeds with their equation bindings, loaded from ``data/registry.json``.

Exchange-polynomial coefficients and equation arguments may name a parameter
(``"k1"``, ``"k"``, ...) instead of giving an integer; those are filled in when
an entry is instantiated.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Any, Mapping, Optional, Union

from vietacluster.equations import EQUATIONS, Equation
from vietacluster.gcp import Matrix, Seed, as_matrix
from vietacluster.laurent import ExchangePoly
from vietacluster.tree import FamilySpec

Slot = Union[int, str]
GROUPS = ("rank3", "frozen", "rank2", "open")


class RegistryError(ValueError):
    pass


def _resolve(slot: Slot, params: Mapping[str, int]) -> int:
    if isinstance(slot, str):
        if slot not in params:
            raise RegistryError(f"parameter {slot!r} has no value")
        return int(params[slot])
    return int(slot)


@dataclass(frozen=True)
class RegistryEntry:
    name: str
    group: str  # rank3, frozen, rank2 or open
    B: Matrix
    z_slots: tuple[tuple[Slot, ...], ...]
    d_column: tuple[int, ...]
    equation_id: Optional[str]
    equation_args: tuple[tuple[str, Slot], ...]
    defaults: tuple[tuple[str, int], ...] = ()
    reduces: Optional[tuple[str, int]] = None  # (rank-3 entry, 0-based frozen direction)

    @property
    def rank(self) -> int:
        return len(self.B)

    @property
    def parameters(self) -> tuple[str, ...]:
        names: list[str] = []
        for slots in self.z_slots:
            for s in slots:
                if isinstance(s, str) and s not in names:
                    names.append(s)
        for _, s in self.equation_args:
            if isinstance(s, str) and s not in names:
                names.append(s)
        return tuple(names)

    def resolve_params(self, overrides: Optional[Mapping[str, int]] = None) -> dict[str, int]:
        known = dict(self.defaults)
        for key, value in (overrides or {}).items():
            if key in self.parameters:
                known[key] = int(value)
        missing = [p for p in self.parameters if p not in known]
        if missing:
            raise RegistryError(f"{self.name}: no value for {missing}")
        return {p: known[p] for p in self.parameters}

    def exchange_polys(self, params: Optional[Mapping[str, int]] = None) -> tuple[ExchangePoly, ...]:
        values = self.resolve_params(params)
        return tuple(ExchangePoly(tuple(_resolve(s, values) for s in slots)) for slots in self.z_slots)

    def seed(self, params: Optional[Mapping[str, int]] = None) -> Seed:
        return Seed.initial(self.B, self.exchange_polys(params))

    def equation(self, params: Optional[Mapping[str, int]] = None) -> Optional[Equation]:
        if self.equation_id is None:
            return None
        values = self.resolve_params(params)
        return Equation.of(self.equation_id, **{k: _resolve(v, values) for k, v in self.equation_args})

    def family(self, params: Optional[Mapping[str, int]] = None) -> Optional[FamilySpec]:
        """The solution tree this seed specializes to, for rank-3 cubic/quartic bindings."""
        eq = self.equation(params)
        if eq is None or eq.kind not in ("cubic", "quartic"):
            return None
        args = dict(eq.args)
        return FamilySpec.cubic(**args) if eq.kind == "cubic" else FamilySpec.quartic(**args)

    def validate(self) -> None:
        seed = self.seed()
        if seed.D != self.d_column:
            raise RegistryError(f"{self.name}: degrees {seed.D} disagree with D column {self.d_column}")
        if seed.symmetrizer is None:
            raise RegistryError(f"{self.name}: no skew-symmetrizer found for {self.B}")
        if self.equation_id is not None:
            eq = self.equation()
            if eq.arity != self.rank:
                raise RegistryError(f"{self.name}: equation arity {eq.arity} differs from rank {self.rank}")

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "name": self.name,
            "group": self.group,
            "rank": self.rank,
            "B": [list(r) for r in self.B],
            "Z": [list(z) for z in self.z_slots],
            "D": list(self.d_column),
            "equation": None
            if self.equation_id is None
            else {"id": self.equation_id, "args": dict(self.equation_args)},
        }
        if self.reduces is not None:
            out["reduces"] = {"from": self.reduces[0], "frozen": self.reduces[1] + 1}
        return out


def _entry_from_json(raw: Mapping[str, Any], defaults: Mapping[str, int]) -> RegistryEntry:
    b = as_matrix(raw["B"])
    if raw.get("rank", len(b)) != len(b):
        raise RegistryError(f"{raw['name']}: rank field disagrees with B")
    eq = raw.get("equation")
    if eq is not None and eq["id"] not in EQUATIONS:
        raise RegistryError(f"{raw['name']}: unknown equation id {eq['id']!r}")
    reduces = raw.get("reduces")
    if raw["group"] not in GROUPS:
        raise RegistryError(f"{raw['name']}: unknown group {raw['group']!r}")
    entry = RegistryEntry(
        name=raw["name"],
        group=raw["group"],
        B=b,
        z_slots=tuple(tuple(z) for z in raw["Z"]),
        d_column=tuple(raw["D"]),
        equation_id=None if eq is None else eq["id"],
        equation_args=() if eq is None else tuple(eq["args"].items()),
        reduces=None if reduces is None else (reduces["from"], reduces["frozen"] - 1),
    )
    own = {p: defaults[p] for p in entry.parameters if p in defaults}
    entry = RegistryEntry(**{**entry.__dict__, "defaults": tuple(own.items())})
    entry.validate()
    return entry


def parse_registry(text: str) -> list[RegistryEntry]:
    data = json.loads(text)
    defaults = data.get("defaults", {})
    entries = [_entry_from_json(raw, defaults) for raw in data["entries"]]
    names = [e.name for e in entries]
    if len(names) != len(set(names)):
        raise RegistryError("duplicate registry names")
    for e in entries:
        if e.reduces is not None and e.reduces[0] not in names:
            raise RegistryError(f"{e.name}: reduces from unknown entry {e.reduces[0]!r}")
    return entries


@lru_cache(maxsize=1)
def _builtin() -> tuple[RegistryEntry, ...]:
    text = resources.files("vietacluster").joinpath("data/registry.json").read_text(encoding="utf-8")
    return tuple(parse_registry(text))


def registry() -> list[RegistryEntry]:
    return list(_builtin())


def get_entry(name: str) -> RegistryEntry:
    for e in _builtin():
        if e.name == name:
            return e
    raise KeyError(f"no registry seed named {name!r}; known: {', '.join(e.name for e in _builtin())}")


def dump_registry(entries: Optional[list[RegistryEntry]] = None) -> str:
    entries = registry() if entries is None else entries
    defaults: dict[str, int] = {}
    for e in entries:
        defaults.update(e.defaults)
    payload = {"format": 1, "defaults": dict(sorted(defaults.items())), "entries": [e.to_json() for e in entries]}
    return json.dumps(payload, indent=2)
