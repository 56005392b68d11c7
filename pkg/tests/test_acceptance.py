"""Acceptance gate: one test per release criterion, one printed line each.

Criteria 2-4 and 7 share a fixed corpus (all polyominoes with up to six
faces plus fifty seeded random holed grids of at most 25 vertices) built
once per session.
"""

import itertools
import random
import time
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy
import pytest

from polygrid import fixtures, trace_faces
from polygrid.embedding import (PlanarEmbedding, classify_edge_set,
                                enclosed_faces, is_hamilton_cycle, parse_pgg,
                                sym_diff, sym_diff_all)
from polygrid.grinberg import (GrinbergEquation, check_prop_3_1, solvable,
                               solve, tutte_reduced_equation,
                               tutte_subbasis_equation,
                               verify_grinberg_identity)
from polygrid.holes import (CLAW, HAMILTONIAN, NO_SOLUTION, decide)
from polygrid.oracle import (GridGenError, compare, enumerate_polyominoes,
                             gen_grid, hamilton_oracle, report_json)
from polygrid.structure import CASE_II


def _report(number: int, ok: bool, detail: str) -> None:
    status = "PASS" if ok else "FAIL"
    print(f"acceptance criterion {number}: {status} ({detail})")
    assert ok, f"criterion {number}: {detail}"


def _random_holed_grids(count: int, seed: int = 20260825) -> List[PlanarEmbedding]:
    rng = random.Random(seed)
    out: List[PlanarEmbedding] = []
    while len(out) < count:
        m = rng.randint(2, 6)
        n = rng.randint(2, 25 // m)
        hole_pool = [(cx, cy) for cx in range(1, m - 2)
                     for cy in range(1, n - 2)]
        holes = rng.sample(hole_pool, min(len(hole_pool),
                                          rng.randint(0, 2)))
        try:
            g = gen_grid(m, n, holes)
        except GridGenError:
            continue
        out.append(PlanarEmbedding(dict(g.coords), list(g.edges),
                                   name=f"{g.name}#{len(out)}"))
    return out


@dataclass(frozen=True)
class CorpusEntry:
    g: PlanarEmbedding
    verdict_tag: str
    certificate: Optional[frozenset]
    oracle_found: Optional[frozenset]
    equation_feasible: bool


@pytest.fixture(scope="module")
def corpus() -> Tuple[List[CorpusEntry], float]:
    started = time.monotonic()
    graphs = list(enumerate_polyominoes(6)) + _random_holed_grids(50)
    entries = []
    for g in graphs:
        basis = trace_faces(g)
        verdict = decide(g, basis=basis)
        oracle = hamilton_oracle(g)
        assert not oracle.timed_out, g.name
        from polygrid.grinberg import equation_of
        entries.append(CorpusEntry(
            g=g, verdict_tag=verdict.tag, certificate=verdict.certificate,
            oracle_found=oracle.found,
            equation_feasible=solvable(equation_of(basis, g))))
    return entries, time.monotonic() - started


def test_criterion_1_tutte_reduction():
    started = time.monotonic()
    reduced = tutte_reduced_equation()
    subbasis = tutte_subbasis_equation()
    reduced_infeasible = not solvable(reduced) and solve(reduced) == []
    subbasis_feasible = solvable(subbasis) and len(solve(subbasis)) > 0
    elapsed = time.monotonic() - started
    _report(1, reduced_infeasible and subbasis_feasible and elapsed < 1.0,
            f"reduced infeasible={reduced_infeasible}, "
            f"subbasis feasible={subbasis_feasible}, {elapsed:.3f}s")


def test_criterion_2_grinberg_necessity(corpus):
    entries, build_time = corpus
    started = time.monotonic()
    checked = 0
    bad = 0
    for entry in entries:
        if entry.oracle_found is None:
            continue
        basis = trace_faces(entry.g)
        chk = verify_grinberg_identity(entry.oracle_found, basis, entry.g)
        checked += 1
        if chk.inside_residual != 0 or chk.full_residual != 0:
            bad += 1
    elapsed = build_time + (time.monotonic() - started)
    _report(2, bad == 0 and checked > 0 and elapsed < 60.0,
            f"{checked} oracle cycles, {bad} nonzero residuals, "
            f"{elapsed:.1f}s incl. corpus build")


def test_criterion_3_no_solution_soundness(corpus):
    entries, _ = corpus
    violations = [e.g.name for e in entries
                  if not e.equation_feasible and e.oracle_found is not None]
    _report(3, not violations,
            f"{len(entries)} graphs, infeasible-with-cycle "
            f"violations={violations}")


def test_criterion_4_certificate_soundness(corpus):
    entries, _ = corpus
    checked = 0
    bad = []
    for e in entries:
        if e.verdict_tag != HAMILTONIAN:
            continue
        checked += 1
        if e.certificate is None or not is_hamilton_cycle(e.certificate, e.g):
            bad.append(e.g.name)
        elif e.oracle_found is None:
            bad.append(e.g.name)
    _report(4, not bad and checked > 0,
            f"{checked} Hamiltonian verdicts, bad={bad}")


def test_criterion_5_desk_fixtures():
    checks = []
    v = decide(fixtures.square())
    checks.append(("square", v.tag == HAMILTONIAN))
    v = decide(fixtures.grid3())
    checks.append(("grid3", v.tag == NO_SOLUTION))
    v = decide(fixtures.fig8())
    checks.append(("fig8", v.tag == CLAW and
                   all(r.severity == CASE_II for r in v.claw_reports)))
    g4 = fixtures.grid4()
    v = decide(g4)
    checks.append(("grid4", v.tag == HAMILTONIAN and
                   is_hamilton_cycle(v.certificate, g4)))
    failed = [name for name, ok in checks if not ok]
    _report(5, not failed, f"verdicts checked={len(checks)}, failed={failed}")


def test_criterion_6_algebra_suite():
    rng = random.Random(99)
    bad = 0
    for _ in range(10 ** 4):
        a = frozenset(rng.sample(range(60), rng.randint(0, 14)))
        b = frozenset(rng.sample(range(60), rng.randint(0, 14)))
        c = frozenset(rng.sample(range(60), rng.randint(0, 14)))
        ok = (sym_diff(a, b) == sym_diff(b, a)
              and sym_diff(sym_diff(a, b), c) == sym_diff(a, sym_diff(b, c))
              and sym_diff(a, a) == frozenset()
              and sym_diff(a, frozenset()) == a)
        bad += 0 if ok else 1
    span_checked = 0
    span_bad = 0
    small = [g for g in (fixtures.square(), fixtures.domino(),
                         fixtures.grid3(), fixtures.fig8())
             if g.size <= 12]
    for g in small:
        basis = trace_faces(g)
        for r in range(3, g.size + 1):
            for sub in itertools.combinations(range(g.size), r):
                e = frozenset(sub)
                if classify_edge_set(e, g).tag != "single-cycle":
                    continue
                span_checked += 1
                inside = enclosed_faces(e, basis, g)
                if sym_diff_all(basis.faces[i].edges
                                for i in sorted(inside)) != e:
                    span_bad += 1
    basis_bad = [
        g.name for g in (fixtures.square(), fixtures.domino(),
                         fixtures.grid3(), fixtures.grid4(),
                         fixtures.fig8(), fixtures.twin_nonagons())
        if len(trace_faces(g).faces) != g.size - g.order + 1]
    _report(6, bad == 0 and span_bad == 0 and not basis_bad,
            f"10^4 identity checks ({bad} bad), {span_checked} cycles "
            f"spanned ({span_bad} bad), basis-size failures={basis_bad}")


def test_criterion_7_beta_audit(corpus):
    entries, _ = corpus
    checked = 0
    bad = []
    for e in entries:
        if e.oracle_found is None:
            continue
        basis = trace_faces(e.g)
        inside = enclosed_faces(e.oracle_found, basis, e.g)
        rep = check_prop_3_1(frozenset(inside), basis, e.g)
        checked += 1
        if not rep.beta_zero or rep.pair_sum != 2 * (len(inside) - 1):
            bad.append(e.g.name)
    _report(7, not bad and checked > 0,
            f"{checked} cycle subsets audited, failures={bad}")


def test_criterion_8_solver_equivalence():
    started = time.monotonic()
    rng = random.Random(4242)
    mismatches = 0
    for _ in range(150):
        n = rng.randint(1, 12)
        lengths = [rng.randint(3, 9) for _ in range(n)]
        order = rng.randint(3, 40)
        eq = GrinbergEquation.from_lengths(lengths, order)
        got = {tuple(sorted(p.inside)) for p in solve(eq, limit=1 << 13)}
        want = set()
        for r in range(n + 1):
            for sub in itertools.combinations(range(n), r):
                if sum(lengths[i] - 2 for i in sub) == eq.target:
                    want.add(sub)
        if got != want:
            mismatches += 1
    for _ in range(50):
        n = rng.randint(13, 20)
        lengths = [rng.randint(3, 9) for _ in range(n)]
        order = rng.randint(3, 60)
        eq = GrinbergEquation.from_lengths(lengths, order)
        values = numpy.array(eq.values, dtype=numpy.int64)
        masks = numpy.arange(1 << n, dtype=numpy.uint32)
        bits = (masks[:, None] >> numpy.arange(n)) & 1
        sums = bits @ values
        want_count = int((sums == eq.target).sum())
        sols = solve(eq, limit=1 << 21)
        keys = [tuple(sorted(p.inside)) for p in sols]
        ok = (len(sols) == want_count
              and keys == sorted(keys)
              and len(set(keys)) == len(keys)
              and all(sum(eq.values[i] for i in p.inside) == eq.target
                      for p in sols))
        if not ok:
            mismatches += 1
    elapsed = time.monotonic() - started
    _report(8, mismatches == 0 and elapsed < 10.0,
            f"200 equations, {mismatches} mismatches, {elapsed:.1f}s")


def test_criterion_9_audit_deliverable(tmp_path):
    first = report_json(compare(enumerate_polyominoes(6),
                                save_dir=tmp_path / "a"))
    second = report_json(compare(enumerate_polyominoes(6),
                                 save_dir=tmp_path / "b"))
    identical = first.encode() == second.encode()
    import json
    payload = json.loads(first)
    candidates = payload["counterexampleCandidates"]
    persisted_ok = all(
        (tmp_path / "a" / f"{name}.pgg").exists()
        and parse_pgg((tmp_path / "a" / f"{name}.pgg").read_text()).order > 0
        for name in candidates)
    _report(9, identical and persisted_ok,
            f"byte-identical={identical}, "
            f"{len(candidates)} disagreement candidates persisted "
            f"(count reported, not asserted)")
