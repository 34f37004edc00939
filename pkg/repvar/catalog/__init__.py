"""Catalog registry: worked examples with checked assertions."""
from __future__ import annotations

from repvar.catalog.base import CatalogEntry
from repvar.catalog.dyck333 import Dyck333Entry
from repvar.catalog.dyck334 import Dyck334Entry
from repvar.catalog.figure8 import Figure8Entry
from repvar.catalog.lubotzky_magid import LubotzkyMagidEntry
from repvar.catalog.seifert import Seifert333Entry
from repvar.catalog.torus_knot import TorusKnotEntry
from repvar.catalog.trefoil import TrefoilEntry, TrefoilWirtingerEntry
from repvar.errors import UnknownEntry

_REGISTRY: dict[str, type[CatalogEntry]] = {}


def _register(cls: type[CatalogEntry]) -> None:
    _REGISTRY[cls.name] = cls


_register(TrefoilEntry)
_register(TrefoilWirtingerEntry)
_register(Figure8Entry)
_register(Dyck333Entry)
_register(Dyck334Entry)
_register(LubotzkyMagidEntry)
_register(Seifert333Entry)
_register(TorusKnotEntry)


def get_entry(name: str) -> CatalogEntry:
    """Instantiate a catalog entry by name."""
    cls = _REGISTRY.get(name)
    if cls is None:
        raise UnknownEntry(f"Unknown catalog entry: {name!r}. Available: {list(_REGISTRY.keys())}")
    return cls()


def list_entries() -> list[dict]:
    """Return metadata for all registered entries."""
    result = []
    for name, cls in _REGISTRY.items():
        instance = cls()
        result.append({
            "name": name,
            "description": instance.description,
            "field_order": instance.field_order,
            "parameters": [
                {
                    "name": p.name,
                    "type": p.type,
                    "default": p.default,
                    "min": p.min,
                    "max": p.max,
                    "description": p.description,
                }
                for p in instance.get_parameters()
            ],
        })
    return result
