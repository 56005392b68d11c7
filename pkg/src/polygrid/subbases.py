"""Boundary-element sets, independent subbases and the reduced graph.

A face is a boundary element when it touches a boundary (weight-1) edge or
a boundary vertex.  Faces that are not boundary elements form interior
regions; each region together with the minimal boundary-element set that
bounds it is one subbasis record.  Boundary-element faces left over after
minimal sets are assigned split into further (empty-interior) records,
except for articulation faces of their adjacency graph, which form the
co-set.  Reduction replaces each Hamiltonian interior region by a single
cycle of the same order drawn on the region footprint.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .embedding import (FaceBasis, PlanarEmbedding, classify_edge_set,
                        cycle_vertex_walk, trace_faces)
from .holes import HAMILTONIAN, Verdict, decide
from .structure import BasisGraph


@dataclass(frozen=True)
class SubbasisRecord:
    interior: Tuple[int, ...]      # strictly interior faces (may be empty)
    boundary: Tuple[int, ...]      # the bounding minimal boundary-element set


@dataclass(frozen=True)
class SubbasisDecomposition:
    records: Tuple[SubbasisRecord, ...]
    coset: Tuple[int, ...]
    boundary_element_faces: Tuple[int, ...]

    @property
    def g_count(self) -> int:
        return len(self.records)


@dataclass(frozen=True)
class ReducedGraph:
    embedding: PlanarEmbedding
    substitutions: Tuple[Tuple[int, int], ...]   # (record index, cycle order)
    failed: Tuple[int, ...]                      # records not proven Hamiltonian


@dataclass(frozen=True)
class AgreementRecord:
    original_hamiltonian: Optional[bool]
    reduced_hamiltonian: Optional[bool]

    @property
    def agree(self) -> Optional[bool]:
        if self.original_hamiltonian is None or self.reduced_hamiltonian is None:
            return None
        return self.original_hamiltonian == self.reduced_hamiltonian


# -- boundary-element machinery ----------------------------------------------

def boundary_element_set(basis: FaceBasis,
                         g: PlanarEmbedding) -> FrozenSet[int]:
    """Faces touching any boundary vertex or any weight-1 edge."""
    bg = BasisGraph(g, basis)
    return _boundary_elements(bg)


def _boundary_elements(bg: BasisGraph) -> FrozenSet[int]:
    w1 = bg.boundary_edge_ids()
    classes = {v: bg.vertex_class(v).tag for v in bg.adjacency}
    out = set()
    for fid in bg.face_ids:
        face = bg.face(fid)
        if face.edges & w1:
            out.add(fid)
        elif any(classes[v] == "boundary" for v in face.vertices):
            out.add(fid)
    return frozenset(out)


def _face_adjacency(bg: BasisGraph,
                    fids: Sequence[int]) -> Dict[int, Set[int]]:
    adj: Dict[int, Set[int]] = {fid: set() for fid in fids}
    fids = list(fids)
    for i, a in enumerate(fids):
        for b in fids[i + 1:]:
            if bg.face(a).edges & bg.face(b).edges:
                adj[a].add(b)
                adj[b].add(a)
    return adj


def _components(adj: Dict[int, Set[int]]) -> List[Tuple[int, ...]]:
    seen: Set[int] = set()
    comps = []
    for start in sorted(adj):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(tuple(sorted(comp)))
    return comps


def _bounds(bg: BasisGraph, boundary: Sequence[int],
            interior: Sequence[int]) -> bool:
    """True when, within the sub-basis boundary + interior, every interior
    face still touches no weight-1 edge and no boundary vertex."""
    if not interior:
        return False
    local = bg.restrict_to_faces(tuple(boundary) + tuple(interior))
    return not (set(interior) & _boundary_elements(local))


def decompose(g: PlanarEmbedding,
              basis: Optional[FaceBasis] = None) -> SubbasisDecomposition:
    if basis is None:
        basis = trace_faces(g)
    bg = BasisGraph(g, basis)
    belems = _boundary_elements(bg)
    interior_all = [fid for fid in bg.face_ids if fid not in belems]
    records: List[SubbasisRecord] = []
    used_boundary: Set[int] = set()
    for comp in _components(_face_adjacency(bg, interior_all)):
        # Greedy shrinking: drop boundary faces in descending index while
        # the remainder still bounds the component.
        minimal = sorted(belems)
        for fid in sorted(belems, reverse=True):
            trial = [f for f in minimal if f != fid]
            if _bounds(bg, trial, comp):
                minimal = trial
        records.append(SubbasisRecord(interior=comp,
                                      boundary=tuple(minimal)))
        used_boundary |= set(minimal)
    # Overlapping minimal sets are merged into a single record.
    records = _merge_overlapping(records)
    leftover = sorted(belems - used_boundary)
    adj = _face_adjacency(bg, leftover)
    coset = sorted(_articulation_faces(adj))
    free = {fid: ns - set(coset) for fid, ns in adj.items()
            if fid not in coset}
    for comp in _components(free):
        records.append(SubbasisRecord(interior=(), boundary=comp))
    records.sort(key=lambda r: (r.boundary + r.interior))
    return SubbasisDecomposition(
        records=tuple(records), coset=tuple(coset),
        boundary_element_faces=tuple(sorted(belems)))


def _merge_overlapping(
        records: List[SubbasisRecord]) -> List[SubbasisRecord]:
    merged = list(records)
    changed = True
    while changed:
        changed = False
        for i in range(len(merged)):
            for j in range(i + 1, len(merged)):
                if set(merged[i].boundary) & set(merged[j].boundary):
                    a, b = merged[i], merged[j]
                    combined = SubbasisRecord(
                        interior=tuple(sorted(set(a.interior + b.interior))),
                        boundary=tuple(sorted(set(a.boundary + b.boundary))))
                    merged = ([m for k, m in enumerate(merged)
                               if k not in (i, j)] + [combined])
                    changed = True
                    break
            if changed:
                break
    return merged


def _articulation_faces(adj: Dict[int, Set[int]]) -> Set[int]:
    """Faces whose removal disconnects their adjacency component."""
    out = set()
    comps_before = _components(adj)
    comp_of = {}
    for comp in comps_before:
        for fid in comp:
            comp_of[fid] = comp
    for fid in adj:
        comp = comp_of[fid]
        if len(comp) <= 2:
            continue
        rest = {f: adj[f] - {fid} for f in comp if f != fid}
        if len(_components(rest)) > 1:
            out.add(fid)
    return out


# -- reduction ---------------------------------------------------------------

def _region_perimeter(bg: BasisGraph,
                      interior: Sequence[int]) -> Tuple[List[int], Set[int]]:
    """Vertex walk of the region boundary and the region's internal edges."""
    local = bg.restrict_to_faces(interior)
    w = local.weights
    perimeter_edges = frozenset(e for e, c in w.items() if c == 1)
    internal_edges = {e for e, c in w.items() if c == 2}
    cls = classify_edge_set(perimeter_edges, bg.g)
    if cls.tag != "single-cycle":
        raise ValueError(
            f"interior region {tuple(interior)} has a non-cycle perimeter")
    walk = cycle_vertex_walk(perimeter_edges, bg.g)
    return walk, internal_edges


def reduce_to_Gg(g: PlanarEmbedding,
                 decomposition: Optional[SubbasisDecomposition] = None,
                 basis: Optional[FaceBasis] = None,
                 claw_mode: str = "lenient") -> ReducedGraph:
    """Replace each Hamiltonian interior region by one cycle of equal order.

    Records whose interior region cannot be certified Hamiltonian are
    reported in `failed`; per the subbasis argument any such record already
    settles the whole graph as non-Hamiltonian.
    """
    if basis is None:
        basis = trace_faces(g)
    if decomposition is None:
        decomposition = decompose(g, basis)
    bg = BasisGraph(g, basis)
    failed: List[int] = []
    regions = []       # (record idx, perimeter walk, internal edges, order)
    for idx, rec in enumerate(decomposition.records):
        if not rec.interior:
            continue
        local = bg.restrict_to_faces(rec.interior)
        sub = PlanarEmbedding(
            {v: g.coords[v] for v in local.adjacency},
            [g.edges[e] for e in sorted(local.edge_ids)],
            name=f"{g.name}-g{idx}")
        verdict = decide(sub, claw_mode=claw_mode)
        if verdict.tag != HAMILTONIAN:
            failed.append(idx)
            continue
        walk, internal = _region_perimeter(bg, rec.interior)
        regions.append((idx, walk, internal, local.order))
    reduced = _substitute_regions(g, regions)
    return ReducedGraph(
        embedding=reduced,
        substitutions=tuple((idx, order) for idx, _, _, order in regions),
        failed=tuple(failed))


def _substitute_regions(g: PlanarEmbedding, regions) -> PlanarEmbedding:
    if not regions:
        return PlanarEmbedding(dict(g.coords), list(g.edges),
                               name=f"{g.name}-reduced")
    drop_vertices: Set[int] = set()
    drop_edges: Set[int] = set()
    extra_needed = 0
    for _, walk, internal, order in regions:
        on_walk = set(walk)
        region_vertices = set()
        for e in internal:
            region_vertices.update(g.edges[e])
        drop_vertices |= region_vertices - on_walk
        drop_edges |= internal
        extra_needed = max(extra_needed, order - len(walk))
    # Scale so subdivided perimeter edges land on lattice points.
    scale = 1
    for _, walk, _, order in regions:
        need = order - len(walk)
        if need > 0:
            per_edge = -(-need // len(walk))      # ceil
            scale = max(scale, per_edge + 1)
    coords = {v: (x * scale, y * scale)
              for v, (x, y) in g.coords.items() if v not in drop_vertices}
    edges = [g.edges[e] for e in range(g.size)
             if e not in drop_edges and not (set(g.edges[e]) & drop_vertices)]
    next_id = max(g.coords) + 1
    for _, walk, _, order in regions:
        need = order - len(walk)
        if need <= 0:
            continue
        per_edge = [need // len(walk)] * len(walk)
        for i in range(need % len(walk)):
            per_edge[i] += 1
        for i, count in enumerate(per_edge):
            if count == 0:
                continue
            u, v = walk[i], walk[(i + 1) % len(walk)]
            edges.remove((u, v)) if (u, v) in edges else edges.remove((v, u))
            ax, ay = g.coords[u]
            bx, by = g.coords[v]
            chain = [u]
            for t in range(1, count + 1):
                coords[next_id] = (ax * scale + t * (bx - ax),
                                   ay * scale + t * (by - ay))
                chain.append(next_id)
                next_id += 1
            chain.append(v)
            for a, b in zip(chain, chain[1:]):
                edges.append((a, b))
    return PlanarEmbedding(coords, edges, name=f"{g.name}-reduced")


def check_prop_6_1(g: PlanarEmbedding, reduced: ReducedGraph,
                   budget: int = 10 ** 6) -> AgreementRecord:
    """Oracle audit of 'G and G_g have the same Hamiltonicity'."""
    from .oracle import hamilton_oracle
    orig = hamilton_oracle(g, budget=budget)
    red = hamilton_oracle(reduced.embedding, budget=budget)
    return AgreementRecord(
        original_hamiltonian=None if orig.timed_out else orig.found is not None,
        reduced_hamiltonian=None if red.timed_out else red.found is not None)
