"""Non-Hamiltonian hole search and the Hamiltonicity criterion.

The criterion pipeline: claw(d2) scan, equation feasibility, bounded search
for globally non-Hamiltonian holes via the peeling procedure, then an
attempt to certify Hamiltonicity by XOR-ing inside faces of solution
partitions.  A Hamiltonian verdict always carries an independently verified
cycle; when the criterion claims Hamiltonian but no tried partition
certifies, the verdict is CriterionUnverified rather than a bare claim.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .embedding import (EdgeSet, FaceBasis, PlanarEmbedding, is_hamilton_cycle,
                        sym_diff_all, trace_faces)
from .grinberg import equation_of_graph, solvable, solve
from .structure import (CASE_I, CASE_II, BasisGraph, ClawReport, claw_d2_scan)

HAMILTONIAN = "Hamiltonian"
NO_SOLUTION = "NonHamiltonianNoSolution"
GLOBAL_HOLE = "NonHamiltonianGlobalHole"
CLAW = "NonHamiltonianClaw"
UNVERIFIED = "CriterionUnverified"


@dataclass(frozen=True)
class HoleContext:
    x: int
    cx: Tuple[int, ...]
    ck: Optional[int] = None
    cxe: Tuple[int, ...] = ()
    ce: Tuple[int, ...] = ()
    cv: Tuple[int, ...] = ()


@dataclass(frozen=True)
class PeelStep:
    begin_vertex: int
    removed_cx: Tuple[int, ...]
    removed_cxe: Tuple[int, ...]
    removed_ck: Tuple[int, ...]
    equation_feasible_after: bool
    skipped: Tuple[int, ...] = ()   # removals skipped to keep connectivity


@dataclass(frozen=True)
class PeelTrace:
    steps: Tuple[PeelStep, ...]
    residual: BasisGraph


@dataclass(frozen=True)
class Verdict:
    tag: str
    certificate: Optional[EdgeSet] = None
    claw_reports: Tuple[ClawReport, ...] = ()
    hole: Optional[HoleContext] = None
    details: str = ""


# -- hole context search -----------------------------------------------------

def candidate_Cx(bg: BasisGraph, x: int,
                 max_size: int = 3) -> List[Tuple[int, ...]]:
    """Face-index sets whose sequential removal turns x into a boundary
    vertex of degree 4 while the residual equation stays feasible.

    Every prefix of a set (in ascending index order) must be removable at
    its turn.  Results in lexicographic order.
    """
    if bg.degree(x) < 4:
        return []
    out = []
    fids = bg.face_ids
    subsets = []
    for size in range(1, max_size + 1):
        subsets.extend(itertools.combinations(fids, size))
    for subset in sorted(subsets):
        residual = bg
        ok = True
        for fid in subset:
            if not residual.is_removable(fid):
                ok = False
                break
            residual = residual.remove_face(fid)
        if not ok:
            continue
        if residual.degree(x) != 4:
            continue
        if residual.vertex_class(x).tag != "boundary":
            continue
        if not solvable(equation_of_graph(residual)):
            continue
        out.append(subset)
    return out


def find_Ck(bg: BasisGraph, x: int) -> List[int]:
    """Removable faces on x containing an interior vertex and no weight-1
    edge, in the residual graph."""
    out = []
    for fid in bg.face_ids:
        face = bg.face(fid)
        if x not in face.vertices:
            continue
        if not bg.is_removable(fid):
            continue
        if any(bg.weights[eid] == 1 for eid in face.edges):
            continue
        if not any(bg.vertex_class(v).tag == "interior"
                   for v in face.vertices):
            continue
        out.append(fid)
    return out


def faces_sharing_edge(bg: BasisGraph, fid: int) -> List[int]:
    edges = bg.face(fid).edges
    return [other for other in bg.face_ids
            if other != fid and bg.face(other).edges & edges]


def faces_sharing_only_vertices(bg: BasisGraph, fid: int) -> List[int]:
    face = bg.face(fid)
    out = []
    for other in bg.face_ids:
        if other == fid:
            continue
        o = bg.face(other)
        if o.edges & face.edges:
            continue
        if o.vertices & face.vertices:
            out.append(other)
    return out


def _cxe_for(bg: BasisGraph, x: int, ck: int) -> List[int]:
    """Removable faces meeting Ck exactly at the common vertex x."""
    ck_vertices = bg.face(ck).vertices
    out = []
    for fid in bg.face_ids:
        if fid == ck:
            continue
        face = bg.face(fid)
        if face.vertices & ck_vertices == {x} and bg.is_removable(fid):
            out.append(fid)
    return out


def build_context(bg: BasisGraph, x: int,
                  cx: Tuple[int, ...]) -> HoleContext:
    residual = bg.remove_faces(cx)
    ks = find_Ck(residual, x)
    ck = ks[0] if ks else None
    cxe: Tuple[int, ...] = ()
    ce: Tuple[int, ...] = ()
    cv: Tuple[int, ...] = ()
    if ck is not None:
        cxe = tuple(_cxe_for(residual, x, ck))
        ce = tuple(f for f in faces_sharing_edge(residual, ck)
                   if residual.is_removable(f))
        cv = tuple(faces_sharing_only_vertices(residual, ck))
    return HoleContext(x=x, cx=cx, ck=ck, cxe=cxe, ce=ce, cv=cv)


# -- peeling -----------------------------------------------------------------

def _safe_remove(bg: BasisGraph, fid: int) -> Tuple[BasisGraph, bool]:
    """Remove fid unless it is not removable or would disconnect."""
    if not bg.is_removable(fid):
        return bg, False
    candidate = bg.remove_face(fid)
    if not candidate.connected():
        return bg, False
    return candidate, True


def _peel_at(bg: BasisGraph, x: int,
             max_cx: int = 3) -> Tuple[BasisGraph, List[PeelStep]]:
    """One beginning vertex: remove the first Cx candidate, then keep
    stripping Cxe/Ck until no Ck remains or the equation goes infeasible."""
    steps: List[PeelStep] = []
    cxs = candidate_Cx(bg, x, max_size=max_cx)
    if not cxs:
        return bg, steps
    cx = cxs[0]
    bg = bg.remove_faces(cx)
    first = True
    while True:
        ks = find_Ck(bg, x)
        if not ks:
            if first:
                steps.append(PeelStep(x, cx, (), (),
                                      solvable(equation_of_graph(bg))))
            break
        ck = ks[0]
        removed_cxe: List[int] = []
        skipped: List[int] = []
        for fid in _cxe_for(bg, x, ck):
            bg, done = _safe_remove(bg, fid)
            (removed_cxe if done else skipped).append(fid)
        bg, done = _safe_remove(bg, ck)
        removed_ck = (ck,) if done else ()
        if not done:
            skipped.append(ck)
        feasible = solvable(equation_of_graph(bg))
        steps.append(PeelStep(x, cx if first else (), tuple(removed_cxe),
                              removed_ck, feasible, tuple(skipped)))
        first = False
        if not done or not feasible:
            break
    return bg, steps


def peel(g: PlanarEmbedding, basis: Optional[FaceBasis] = None,
         schedule: Optional[Sequence[int]] = None,
         max_cx: int = 3) -> PeelTrace:
    """Iterate the peeling procedure over beginning vertices.

    Default schedule: ascending vertex id over vertices of degree >= 4.
    """
    if basis is None:
        basis = trace_faces(g)
    bg = BasisGraph(g, basis)
    if schedule is None:
        schedule = [v for v in sorted(g.coords) if g.degree(v) >= 4]
    steps: List[PeelStep] = []
    for x in schedule:
        if bg.degree(x) < 4:
            continue
        bg, new_steps = _peel_at(bg, x, max_cx=max_cx)
        steps.extend(new_steps)
    return PeelTrace(tuple(steps), bg)


def is_global_hole(g: PlanarEmbedding, basis: FaceBasis,
                   ctx: HoleContext, max_cx: int = 3) -> bool:
    """True when the fully peeled residual starting from ctx has an
    infeasible equation."""
    if not ctx.cx:
        return False
    bg = BasisGraph(g, basis)
    residual = bg.remove_faces(ctx.cx)
    if not solvable(equation_of_graph(residual)):
        return False
    while True:
        ks = find_Ck(residual, ctx.x)
        if not ks:
            break
        ck = ks[0]
        for fid in _cxe_for(residual, ctx.x, ck):
            residual, _ = _safe_remove(residual, fid)
        residual, done = _safe_remove(residual, ck)
        if not done:
            break
    return not solvable(equation_of_graph(residual))


def local_hole_scan(g: PlanarEmbedding, basis: FaceBasis,
                    max_cx: int = 3) -> List[HoleContext]:
    """Diagnostic only: hole search repeated inside each extracted
    Ck + Ce + Cv subgraph (the Cx-empty locality of the definition)."""
    bg = BasisGraph(g, basis)
    found = []
    for fid in bg.face_ids:
        neighbours = faces_sharing_edge(bg, fid)
        corner = faces_sharing_only_vertices(bg, fid)
        local = bg.restrict_to_faces([fid] + neighbours + corner)
        for x in sorted(local.adjacency):
            if local.degree(x) < 4:
                continue
            for cx in candidate_Cx(local, x, max_size=max_cx):
                ctx = build_context(local, x, cx)
                if _local_is_hole(local, ctx):
                    found.append(ctx)
    return found


def _local_is_hole(local: BasisGraph, ctx: HoleContext) -> bool:
    residual = local.remove_faces(ctx.cx)
    if not solvable(equation_of_graph(residual)):
        return False
    while True:
        ks = find_Ck(residual, ctx.x)
        if not ks:
            break
        ck = ks[0]
        for fid in _cxe_for(residual, ctx.x, ck):
            residual, _ = _safe_remove(residual, fid)
        residual, done = _safe_remove(residual, ck)
        if not done:
            break
    return not solvable(equation_of_graph(residual))


# -- the decision ------------------------------------------------------------

def decide(g: PlanarEmbedding, basis: Optional[FaceBasis] = None,
           limit: int = 64, claw_mode: str = "strict",
           max_cx: int = 3) -> Verdict:
    """Full criterion pipeline; pure and deterministic.

    Order matters: a Case II claw always decides first; an infeasible
    equation decides next (the trusted necessity direction); under the
    strict claw reading a Case I report then rules the graph out; then the
    bounded hole search; finally certificate attempts over solution
    partitions.
    """
    reports = tuple(claw_d2_scan(g))
    case2 = tuple(r for r in reports if r.severity == CASE_II)
    if case2:
        return Verdict(CLAW, claw_reports=case2,
                       details="claw(d2) case II present")
    if basis is None:
        basis = trace_faces(g)
    bg = BasisGraph(g, basis)
    eq = equation_of_graph(bg)
    if not solvable(eq):
        return Verdict(NO_SOLUTION, details="equation has no solution")
    if claw_mode == "strict" and reports:
        return Verdict(CLAW, claw_reports=reports,
                       details="claw(d2) case I present (strict reading)")
    elif claw_mode not in ("strict", "lenient"):
        raise ValueError(f"unknown claw mode {claw_mode!r}")
    for x in sorted(g.coords):
        if g.degree(x) < 4:
            continue
        for cx in candidate_Cx(bg, x, max_size=max_cx):
            ctx = build_context(bg, x, cx)
            if is_global_hole(g, basis, ctx, max_cx=max_cx):
                return Verdict(GLOBAL_HOLE, hole=ctx,
                               details=f"global hole at vertex {x}")
    for partition in solve(eq, limit=limit):
        cycle = sym_diff_all(basis.faces[fid].edges
                             for fid in sorted(partition.inside))
        if is_hamilton_cycle(cycle, g):
            return Verdict(HAMILTONIAN, certificate=cycle)
    return Verdict(
        UNVERIFIED,
        details=(f"criterion claims Hamiltonian but none of the first "
                 f"{limit} partitions certifies"))
