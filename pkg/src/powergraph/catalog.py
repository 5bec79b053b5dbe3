"""Group names such as ``C2xC10`` or ``GL2_5`` and the built-in catalog."""

from __future__ import annotations

import re

from .errors import InvalidSpec
from .groups import (
    GL2,
    Alternating,
    Cyclic,
    Dihedral,
    DirectProduct,
    FromCayleyFile,
    GeneralizedQuaternion,
    Symmetric,
    UniTriangular3,
)

_FACTOR = re.compile(r"(UT3_|GL2_|[CDQSA])(\d+)$")
_KINDS = {
    "C": Cyclic,
    "D": Dihedral,
    "Q": GeneralizedQuaternion,
    "S": Symmetric,
    "A": Alternating,
    "UT3_": UniTriangular3,
    "GL2_": GL2,
}


def parse_group_name(name: str):
    """Group spec for a name like ``C12``, ``D7``, ``Q16``, ``C2xC10`` or ``file:path.csv``.

    ``Dk`` is the dihedral group of order ``2k``; ``Qm`` the generalized
    quaternion group of order ``m``.
    """
    name = name.strip()
    if name.startswith("file:"):
        path = name[5:]
        if not path:
            raise InvalidSpec("file: needs a path")
        return FromCayleyFile(path)
    parts = name.split("x")
    specs = []
    for part in parts:
        m = _FACTOR.match(part)
        if not m:
            raise InvalidSpec(f"cannot parse group name {name!r}")
        specs.append(_KINDS[m.group(1)](int(m.group(2))))
    return specs[0] if len(specs) == 1 else DirectProduct(tuple(specs))


def catalog_names(extended: bool = False, huge: bool = False) -> list[str]:
    names = [f"C{n}" for n in range(2, 31)]
    names += [f"D{n}" for n in range(3, 16)]
    names += ["Q8", "Q16", "Q32", "S3", "S4", "A4", "C2xC4", "C2xC10", "C6xC2", "C3xC3xC3", "UT3_3"]
    if extended:
        names.append("GL2_5")
    if huge:
        names.append("S8")
    return names


def catalog(extended: bool = False, huge: bool = False) -> list[tuple[str, object]]:
    return [(n, parse_group_name(n)) for n in catalog_names(extended, huge)]
