"""Recover the cube behind a finite MR-algebra.

Pick a vertex ``v0``.  The up-set ``[v0, 1]`` is a Boolean lattice whose
atoms are the cube's coordinates, and every element ``x`` becomes the
interval ``[~(Delta(1, x) v v0), x v v0]`` of that lattice (complement taken
inside the frame).  Everything the map is supposed to do is re-verified.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import interval as iv
from .boolean import Universe
from .canon import canonical_form
from .table import FiniteStructure


class ReconstructionError(ValueError):
    def __init__(self, message, witness=()):
        super().__init__(message)
        self.witness = tuple(witness)


def minimal_elements(s: FiniteStructure) -> list[int]:
    return [x for x in s.elements if not any(s.lt(y, x) for y in s.elements)]


@dataclass(frozen=True)
class CubeFrame:
    v0: int
    vertex_list: tuple[int, ...]
    members: tuple[int, ...]  # the up-set [v0, 1]
    atoms: tuple[int, ...]
    complement: dict
    dim: int

    def bits(self, s: FiniteStructure, e: int) -> int:
        """Coordinates of a frame element: the atoms below it."""
        return sum(1 << i for i, a in enumerate(self.atoms) if s.leq[a][e])

    def as_structure(self, s: FiniteStructure) -> FiniteStructure:
        pos = {e: i for i, e in enumerate(self.members)}
        join = [[pos[s.join[x][y]] for y in self.members] for x in self.members]
        return FiniteStructure(len(self.members), pos[s.one], join)


def boolean_frame(s: FiniteStructure, v0: int) -> CubeFrame:
    verts = minimal_elements(s)
    if v0 not in verts:
        raise ReconstructionError(f"{v0} is not a minimal element", (v0,))
    up = s.up_set(v0)
    for x, y in product(up, up):
        if s.glb(x, y) is None:
            raise ReconstructionError(f"{x} and {y} have no meet above the base vertex", (x, y))
    for x, y, z in product(up, up, up):
        if s.glb(x, s.join[y][z]) != s.join[s.glb(x, y)][s.glb(x, z)]:
            raise ReconstructionError("frame is not distributive", (x, y, z))
    comp = {}
    for x in up:
        cs = [z for z in up if s.join[x][z] == s.one and s.glb(x, z) == v0]
        if len(cs) != 1:
            raise ReconstructionError(f"{x} has {len(cs)} complements in the frame", (x,))
        comp[x] = cs[0]
    atoms = tuple(a for a in up if a != v0 and all(b in (v0, a) for b in up if s.leq[b][a]))
    dim = len(atoms)
    if len(up) != 1 << dim:
        raise ReconstructionError("frame size is not 2**atoms")
    if len(verts) != 1 << dim:
        raise ReconstructionError(f"{len(verts)} vertices but frame dimension {dim}")
    return CubeFrame(v0, tuple(verts), tuple(up), atoms, comp, dim)


@dataclass(frozen=True)
class Reconstruction:
    frame: CubeFrame
    phi: tuple[iv.Interval, ...]

    @property
    def dim(self) -> int:
        return self.frame.dim

    def to_json(self) -> dict:
        return {"version": 1, "dim": self.dim, "v0": self.frame.v0,
                "map": [p.to_json() for p in self.phi]}


def reconstruct_iso(s: FiniteStructure, v0: int | None = None,
                    all_v0: bool = False) -> Reconstruction:
    """An explicit, verified isomorphism from ``s`` onto the interval algebra
    of a cube.  With ``all_v0`` every vertex is tried and the frames must agree."""
    verts = minimal_elements(s)
    if v0 is None:
        v0 = verts[0]
    result = _reconstruct_at(s, v0)
    if all_v0:
        key = canonical_form(result.frame.as_structure(s)).key
        for w in verts:
            other = _reconstruct_at(s, w)
            if canonical_form(other.frame.as_structure(s)).key != key:
                raise ReconstructionError("frames at different vertices disagree", (v0, w))
    return result


def _reconstruct_at(s: FiniteStructure, v0: int) -> Reconstruction:
    frame = boolean_frame(s, v0)
    if s.size != 3 ** frame.dim:
        raise ReconstructionError(f"size {s.size} is not 3**{frame.dim}")
    u = Universe(frame.dim)
    J = s.join
    phi = []
    for x in s.elements:
        hi = J[x][v0]
        d = s.delta_at(s.one, x)
        if d is None:
            raise ReconstructionError(f"Delta(1, {x}) is missing", (x,))
        lo = frame.complement[J[d][v0]]
        try:
            phi.append(iv.Interval(frame.bits(s, lo), frame.bits(s, hi), u))
        except ValueError as e:
            raise ReconstructionError(str(e), (x,)) from None
    phi = tuple(phi)
    if len(set(phi)) != s.size:
        raise ReconstructionError("map is not injective")

    for x, y in product(s.elements, s.elements):
        if phi[J[x][y]] != iv.join_i(phi[x], phi[y]):
            raise ReconstructionError("join is not preserved", (x, y))
        m = s.glb(x, y)
        mi = iv.meet_i(phi[x], phi[y])
        if (m is None) != (mi is None) or (m is not None and phi[m] != mi):
            raise ReconstructionError("meets are not preserved", (x, y))
        if s.leq[y][x]:
            d = s.delta_at(x, y)
            if d is None or phi[d] != iv.delta_i(phi[x], phi[y]):
                raise ReconstructionError("Delta is not preserved", (x, y))
        c = s.caret_at(x, y)
        if c is None or phi[c] != iv.caret_i(phi[x], phi[y]):
            raise ReconstructionError("caret is not preserved", (x, y))
    return Reconstruction(frame, phi)
