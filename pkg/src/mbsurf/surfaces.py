"""Multibranched surfaces: compact surface pieces glued to circles.

A multibranched surface is stored combinatorially as a list of branch
identifiers (the gluing circles) and a list of sectors.  Each sector is a
compact orientable surface given by its genus and an ordered list of
boundary attachments ``(branch id, covering degree)``: the boundary circle
wraps the branch ``|degree|`` times, and the sign records the orientation
of the covering map.

The one-sector family ``make_xg(g, (p1, ..., pn))`` has a single genus-g
sector whose i-th boundary circle wraps its own branch with degree
``p_i >= 2``; this is the family whose embeddability the rest of the
package analyzes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence


class SurfaceFormatError(ValueError):
    """Invalid surface document; the message names the offending location."""


@dataclass(frozen=True)
class Sector:
    """One compact orientable piece: genus plus boundary attachments."""

    genus: int
    boundary: tuple[tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.genus, int) or self.genus < 0:
            raise ValueError(f"sector genus must be a nonnegative integer, got {self.genus!r}")
        attachments = []
        for item in self.boundary:
            branch, degree = item
            if not isinstance(branch, str):
                raise ValueError(f"branch id must be a string, got {branch!r}")
            if not isinstance(degree, int):
                raise ValueError(f"covering degree must be an integer, got {degree!r}")
            if degree == 0:
                raise ValueError("zero covering degree")
            attachments.append((branch, degree))
        object.__setattr__(self, "boundary", tuple(attachments))


@dataclass(frozen=True)
class MultibranchedSurface:
    """Branches plus sectors, every attachment pointing at a known branch."""

    branches: tuple[str, ...]
    sectors: tuple[Sector, ...]

    def __post_init__(self) -> None:
        branches = tuple(self.branches)
        sectors = tuple(self.sectors)
        if not branches:
            raise ValueError("a multibranched surface needs at least one branch")
        if not sectors:
            raise ValueError("a multibranched surface needs at least one sector")
        if len(set(branches)) != len(branches):
            raise ValueError("duplicate branch id")
        known = set(branches)
        for sector in sectors:
            for branch, _ in sector.boundary:
                if branch not in known:
                    raise ValueError(f"unknown branch {branch!r}")
        object.__setattr__(self, "branches", branches)
        object.__setattr__(self, "sectors", sectors)

    def degrees_at(self, branch: str) -> list[int]:
        """Signed covering degrees of all attachments incident to ``branch``."""
        if branch not in self.branches:
            raise ValueError(f"unknown branch {branch!r}")
        return [d for sector in self.sectors for b, d in sector.boundary if b == branch]

    def total_genus(self) -> int:
        return sum(sector.genus for sector in self.sectors)


@dataclass(frozen=True)
class XgFamily:
    """The one-sector family: genus g, one branch per degree, all degrees >= 2."""

    genus: int
    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.genus, int) or self.genus < 0:
            raise ValueError(f"genus must be a nonnegative integer, got {self.genus!r}")
        degrees = tuple(self.degrees)
        if not degrees:
            raise ValueError("at least one covering degree is required")
        for p in degrees:
            if not isinstance(p, int) or p < 2:
                raise ValueError(f"family degrees must be integers >= 2, got {p!r}")
        object.__setattr__(self, "degrees", degrees)

    def surface(self) -> MultibranchedSurface:
        branches = tuple(f"b{i + 1}" for i in range(len(self.degrees)))
        sector = Sector(self.genus, tuple(zip(branches, self.degrees)))
        return MultibranchedSurface(branches, (sector,))


def make_xg(genus: int, degrees: Sequence[int]) -> MultibranchedSurface:
    """One sector of the given genus, boundary circle i glued to branch
    ``b{i+1}`` with degree ``degrees[i]``.

    Degrees below 2 are rejected: a degree-1 attachment is not a genuine
    branch point, so it falls outside this family (general surfaces with
    |degree| = 1 can still be built directly or parsed from a document).
    """
    return XgFamily(genus, tuple(degrees)).surface()


def is_regular(surface: MultibranchedSurface) -> bool:
    """True when every branch is wrapped with one uniform absolute degree.

    Regularity is exactly the condition for the surface to embed in some
    closed orientable 3-manifold; a branch with no attachments is
    vacuously uniform.
    """
    for branch in surface.branches:
        degrees = {abs(d) for d in surface.degrees_at(branch)}
        if len(degrees) > 1:
            return False
    return True


def parse_surface(text: str) -> MultibranchedSurface:
    """Parse the JSON document format; errors carry the offending location.

    Schema::

        {"branches": [str, ...],
         "sectors": [{"genus": int >= 0,
                      "boundary": [{"branch": str, "degree": nonzero int}, ...]},
                     ...]}
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SurfaceFormatError(f"malformed document: {exc}") from None
    if not isinstance(doc, dict):
        raise SurfaceFormatError("malformed document: top level must be an object")

    branches = _expect_list(doc, "branches")
    for i, branch in enumerate(branches):
        if not isinstance(branch, str):
            raise SurfaceFormatError(f"branches[{i}]: branch id must be a string")
    if len(set(branches)) != len(branches):
        raise SurfaceFormatError("branches: duplicate branch id")
    if not branches:
        raise SurfaceFormatError("branches: at least one branch is required")
    known = set(branches)

    raw_sectors = _expect_list(doc, "sectors")
    if not raw_sectors:
        raise SurfaceFormatError("sectors: at least one sector is required")
    sectors = []
    for i, raw in enumerate(raw_sectors):
        where = f"sectors[{i}]"
        if not isinstance(raw, dict):
            raise SurfaceFormatError(f"{where}: sector must be an object")
        genus = raw.get("genus")
        if not isinstance(genus, int) or isinstance(genus, bool) or genus < 0:
            raise SurfaceFormatError(f"{where}.genus: must be a nonnegative integer")
        raw_boundary = raw.get("boundary", [])
        if not isinstance(raw_boundary, list):
            raise SurfaceFormatError(f"{where}.boundary: must be a list")
        boundary = []
        for j, att in enumerate(raw_boundary):
            spot = f"{where}.boundary[{j}]"
            if not isinstance(att, dict):
                raise SurfaceFormatError(f"{spot}: attachment must be an object")
            branch = att.get("branch")
            degree = att.get("degree")
            if not isinstance(branch, str):
                raise SurfaceFormatError(f"{spot}.branch: must be a string")
            if branch not in known:
                raise SurfaceFormatError(f"{spot}.branch: unknown branch {branch!r}")
            if not isinstance(degree, int) or isinstance(degree, bool):
                raise SurfaceFormatError(f"{spot}.degree: must be an integer")
            if degree == 0:
                raise SurfaceFormatError(f"{spot}.degree: zero covering degree")
            boundary.append((branch, degree))
        sectors.append(Sector(genus, tuple(boundary)))

    return MultibranchedSurface(tuple(branches), tuple(sectors))


def serialize_surface(surface: MultibranchedSurface) -> str:
    """Deterministic document form: fixed key order, branch list sorted."""
    doc = {
        "branches": sorted(surface.branches),
        "sectors": [
            {
                "genus": sector.genus,
                "boundary": [{"branch": b, "degree": d} for b, d in sector.boundary],
            }
            for sector in surface.sectors
        ],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _expect_list(doc: dict, key: str) -> list:
    value = doc.get(key)
    if not isinstance(value, list):
        raise SurfaceFormatError(f"{key}: required list is missing or not a list")
    return value
