"""Named groups, cocycles, complexes and covers, plus JSON file loaders.

Built-in JSON data lives in the package ``data`` directory; the environment
variable DWCAT_CATALOG points at a replacement directory with the same
layout (``groups/*.json``, ``cocycles/*.json``, ``complexes/*.json``,
``covers/*.json``). Every cocycle table is checked when it is loaded.
"""

from __future__ import annotations

import itertools
import json
import os
from pathlib import Path

from . import gerbes, groups, library
from .dw import GroupCocycle, cyclic_cocycle, trivial_cocycle
from .simplicial import from_spec, to_spec

BUILTIN = Path(__file__).parent / "data"
GROUP_NAMES = ["z2", "z3", "z4", "z2xz2", "z2cube", "s3", "d4", "q8"]


class CatalogError(ValueError):
    pass


def catalog_dir():
    return Path(os.environ.get("DWCAT_CATALOG") or BUILTIN)


def _read(path):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise CatalogError(f"cannot read {path}: {e}") from e


def _find(kind, name):
    """A file path given directly, or a catalog entry of the given kind."""
    p = Path(name)
    if p.suffix == ".json" and p.exists():
        return p
    q = catalog_dir() / kind / f"{name}.json"
    return q if q.exists() else None


# groups

def group_from_json(data, name="G"):
    table = data.get("table")
    if table is None or len(table) != data.get("order", len(table)):
        raise CatalogError("group file needs an order and a matching table")
    return groups.FiniteGroup(table, data.get("name", name), data.get("labels"))


def group_to_json(G):
    return {"name": G.name, "order": G.order, "table": [list(r) for r in G.table], "labels": list(G.labels)}


def _builtin_group(name):
    z2 = groups.cyclic(2)
    build = {
        "z2": lambda: z2,
        "z3": lambda: groups.cyclic(3),
        "z4": lambda: groups.cyclic(4),
        "z2xz2": lambda: groups.product(z2, z2),
        "z2cube": lambda: groups.product(groups.product(z2, z2), z2),
        "s3": lambda: groups.symmetric(3),
        "d4": lambda: groups.dihedral(4),
        "q8": groups.quaternion,
    }
    if name not in build:
        raise CatalogError(f"unknown group {name!r}")
    G = build[name]()
    G.name = name
    return G


def load_group(name):
    path = _find("groups", name)
    if path is not None:
        return group_from_json(_read(path), Path(name).stem)
    return _builtin_group(name)


# cocycles

def cocycle_from_json(data, G=None):
    if G is None:
        G = load_group(data["group"])
    vals = {}
    for key, v in data.get("values", {}).items():
        t = tuple(int(x) for x in key.split(","))
        if any(not 0 <= g < G.order for g in t):
            raise CatalogError(f"cocycle argument {key} is not a group element")
        vals[t] = int(v)
    om = GroupCocycle(G, int(data["degree"]), int(data["modulus"]), vals, data.get("name", "omega"))
    return om.validate()


def cocycle_to_json(om, group_name):
    return {
        "group": group_name,
        "name": om.name,
        "degree": om.degree,
        "modulus": om.modulus,
        "values": {",".join(map(str, t)): v for t, v in sorted(om.values.items())},
    }


def type_iii_values():
    """a_1 b_2 c_3 mod 2 on (Z/2)^3 with element index 4 a_1 + 2 a_2 + a_3."""
    bit = lambda g, i: (g >> (2 - i)) & 1
    return {(a, b, c): bit(a, 0) * bit(b, 1) * bit(c, 2) for a, b, c in itertools.product(range(8), repeat=3)}


def builtin_cocycle_files():
    out = {}
    for n in (2, 3, 4):
        for p in range(1, n):
            om = cyclic_cocycle(n, p)
            out[f"z{n}_p{p}"] = cocycle_to_json(om, f"z{n}")
    om = GroupCocycle(_builtin_group("z2cube"), 3, 2, type_iii_values(), "typeIII")
    out["z2cube_typeIII"] = cocycle_to_json(om, "z2cube")
    return out


def load_cocycle(name, G, group_name, degree=3):
    """``trivial``, a catalog name (``p1`` resolves to ``<group>_p1``) or a file."""
    if name in ("trivial", "0", "p0"):
        return trivial_cocycle(G, degree)
    path = _find("cocycles", name) or _find("cocycles", f"{group_name}_{name}")
    if path is None:
        raise CatalogError(f"unknown cocycle {name!r} for group {group_name!r}")
    data = _read(path)
    if data.get("group") not in (None, group_name) and not Path(name).exists():
        raise CatalogError(f"cocycle {name!r} belongs to group {data.get('group')!r}")
    om = cocycle_from_json(data, G)
    if om.degree != degree:
        raise CatalogError(f"cocycle {name!r} has degree {om.degree}, expected {degree}")
    return om


def cocycles_for(group_name, degree=3):
    """Names of every catalog cocycle of the group, trivial first."""
    names = ["trivial"]
    if degree != 3:
        return names
    d = catalog_dir() / "cocycles"
    if d.exists():
        names += sorted(p.stem[len(group_name) + 1:] for p in d.glob(f"{group_name}_*.json"))
    return names


# complexes and covers

def load_complex(name):
    path = _find("complexes", name)
    if path is not None:
        return from_spec(_read(path), Path(name).stem)
    try:
        return library.get(name)
    except KeyError as e:
        raise CatalogError(str(e)) from e


def complex_to_json(X):
    return to_spec(X)


def load_cover(name):
    path = _find("covers", name)
    if path is not None:
        data = _read(path)
        return gerbes.CechCover(int(data["sets"]), data["nonempty"], Path(name).stem)
    if name in gerbes.COVERS:
        return gerbes.COVERS[name]()
    if name.startswith("star_"):
        return gerbes.star_cover(load_complex(name[5:]), name)
    raise CatalogError(f"unknown cover {name!r}")


def load_gerbe(path, U):
    data = _read(path)
    m = int(data.get("modulus", 2))

    def keyed(d):
        return {tuple(int(x) for x in k.split(",")): int(v) for k, v in d.items()}

    labels = keyed(data.get("labels", {}))
    theta = keyed(data.get("theta", {}))
    for t in list(labels) + list(theta):
        if list(t) != sorted(t):
            raise CatalogError(f"gerbe data must use increasing tuples, got {t}")
    return gerbes.Gerbe1Data(U, m, labels, theta).check()


def write_builtin(root=BUILTIN):
    """Regenerate the shipped JSON data."""
    root = Path(root)
    (root / "groups").mkdir(parents=True, exist_ok=True)
    (root / "cocycles").mkdir(parents=True, exist_ok=True)
    for name in GROUP_NAMES:
        (root / "groups" / f"{name}.json").write_text(json.dumps(group_to_json(_builtin_group(name)), sort_keys=True) + "\n")
    for name, data in builtin_cocycle_files().items():
        (root / "cocycles" / f"{name}.json").write_text(json.dumps(data, sort_keys=True) + "\n")
