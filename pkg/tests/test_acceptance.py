"""Acceptance criteria 1-8 at full scale.

Each test records one PASS/FAIL line, printed in the terminal summary (and
to stdout with -s).  Scale: ambient dimension <= 8, symplectic <= 10.
"""

import time

import pytest

from isograss import verify
from isograss.forms import GroupParams
from isograss.invariants import OrbitParams
from isograss.orbits import component_count, open_orbits

from conftest import ACCEPTANCE_LINES, CO, RO, SP, UN


def report(n: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {n} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"
    ACCEPTANCE_LINES[n] = line
    print(line)


def counts(*results) -> str:
    return "; ".join(f"{r.name} {r.checked - r.failed}/{r.checked}" for r in results)


def first_failures(*results) -> list:
    return [f for r in results for f in r.failures[:5]]


def test_criterion_1_round_trip():
    start = time.perf_counter()
    res = verify.suite_round_trip()
    elapsed = time.perf_counter() - start
    ok = res.ok and res.checked > 0 and elapsed < 60
    report(1, "round-trip completeness", ok, f"{counts(res)} in {elapsed:.1f}s (limit 60s)")
    assert res.ok, first_failures(res)
    assert elapsed < 60


def test_criterion_2_invariance():
    # every sample at every representative, components cycled per sample
    cycled = verify.suite_invariance(seed=0, trials=100)
    # smaller spaces: every sample composed with every component representative
    full = verify.suite_invariance(seed=0, trials=100, max_dim=5, all_components=True)
    ok = cycled.ok and full.ok
    report(2, "H-invariance of classify", ok, counts(cycled, full))
    assert ok, first_failures(cycled, full)


def test_criterion_3_formula_vs_oracle():
    res = verify.suite_formula_oracle()
    report(3, "dim H - dim H_S = tangent rank", res.ok, counts(res))
    assert res.ok, first_failures(res)


def test_criterion_4_open_orbits():
    res = verify.suite_open_orbits()
    ro = [t.entries for t in open_orbits(RO, GroupParams.signed(4, 4, 2, 2), 3)]
    sp = [[t.entries for t in open_orbits(SP, GroupParams.split(6, 1), r)] for r in range(1, 7)]
    want_sp = [[(0, 0, 1, 0)], [(0, 0, 0, 2)], [(0, 1, 0, 2)], [(0, 2, 0, 2)], [(0, 3, 0, 2)], [(0, 4, 0, 2)]]
    spots = ro == [(0, 0, 0, 1, 2), (0, 0, 0, 2, 1)] and sp == want_sp
    ok = res.ok and spots
    report(4, "open orbits = argmax of dimension", ok,
           f"{counts(res)}; RO(4,4,2,2) r=3 -> {len(ro)} open; Sp n=6 m=1 sequence {'matches' if sp == want_sp else sp}")
    assert res.ok, first_failures(res)
    assert spots


def test_criterion_5_equal_dimension():
    res = verify.suite_equal_dimension()
    report(5, "equal-dimension corollaries", res.ok, counts(res))
    assert res.ok, first_failures(res)


def test_criterion_6_component_counts():
    n_ro = component_count(RO, GroupParams.signed(2, 2, 1, 1), OrbitParams(RO, (0, 0, 1, 0, 0)))
    n_co = component_count(CO, GroupParams.split(4, 2), OrbitParams(CO, (0, 0, 0, 2)))
    res = verify.suite_components()
    ok = res.ok and n_ro == 4 and n_co == 2
    report(6, "component counts", ok, f"RO(2,2,1,1) (0,0,1,0,0) N={n_ro}; CO(4,2) (0,0,0,2) N={n_co}; {counts(res)}")
    assert (n_ro, n_co) == (4, 2)
    assert res.ok, first_failures(res)


def test_criterion_7_symplectic_parity():
    res = verify.suite_symplectic_parity(seed=0, samples=10000)
    report(7, "symplectic parity and maximal b", res.ok, counts(res) + " (10000 random subspaces + open orbits)")
    assert res.ok, first_failures(res)


def test_criterion_8_witness():
    res = verify.suite_witness(seed=0, trials=100)
    ok = res.ok and res.checked == 400
    report(8, "witness soundness", ok, counts(res) + " (100 pairs per case)")
    assert ok, first_failures(res)
