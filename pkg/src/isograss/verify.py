"""Property suites over every small instance, shared by the CLI and the tests."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

from .errors import WitnessNotFound
from .forms import CaseTag, GroupParams, is_isotropic, standard_space
from .invariants import OrbitParams, classify
from .oracle import component_labels, coset, random_isotropic, sample_h, sign_element, tangent_orbit_dim
from .orbits import (canonical_rep, component_count, component_count_from_cosets, dim_orbit, enumerate_orbits,
                     hit_cosets, open_orbits, open_orbits_closed_form, valid_tuples)
from .witness import orbit_witness
from .group import is_in_stabilizer

ALL_CASES = (CaseTag.REAL_ORTHOGONAL, CaseTag.UNITARY, CaseTag.COMPLEX_ORTHOGONAL, CaseTag.SYMPLECTIC)
SUITES = ("round-trip", "invariance", "formula-oracle", "open-orbits", "equal-dimension", "components",
          "symplectic-parity", "witness")


def default_max_dim(case: CaseTag) -> int:
    return 10 if case is CaseTag.SYMPLECTIC else 8


def group_params_up_to(case: CaseTag, max_dim: int | None = None) -> list[GroupParams]:
    """Every valid parameter set whose ambient dimension is at most max_dim."""
    max_dim = default_max_dim(case) if max_dim is None else max_dim
    out = []
    if case.signed:
        for total in range(4, max_dim + 1):
            for p in range(2, total - 1):
                q = total - p
                for p1 in range(1, p):
                    for q1 in range(1, q):
                        out.append(GroupParams.signed(p, q, p1, q1))
    elif case is CaseTag.COMPLEX_ORTHOGONAL:
        for n in range(2, max_dim + 1):
            out += [GroupParams.split(n, m) for m in range(1, n)]
    else:
        for n in range(2, max_dim // 2 + 1):
            out += [GroupParams.split(n, m) for m in range(1, n)]
    return out


def instances(case: CaseTag, max_dim: int | None = None) -> Iterator[tuple[GroupParams, int, OrbitParams]]:
    for params in group_params_up_to(case, max_dim):
        space = standard_space(case, params)
        for r in range(1, space.max_isotropic_dim() + 1):
            for t in valid_tuples(case, params, r):
                yield params, r, t


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, good: bool, detail: str = "") -> None:
        self.checked += 1
        if not good:
            self.failed += 1
            if len(self.failures) < 20:
                self.failures.append(detail)

    def to_dict(self) -> dict:
        return {"suite": self.name, "checked": self.checked, "passed": self.checked - self.failed,
                "failed": self.failed, "ok": self.ok, "failures": self.failures}


def _label(case: CaseTag, params: GroupParams, t: OrbitParams | None = None) -> str:
    s = f"{case.value} {params.to_dict()}"
    return s + (f" {t}" if t is not None else "")


def _seed(*parts) -> int:
    """Stable integer seed from a tuple of printable parts (independent of PYTHONHASHSEED)."""
    import zlib

    return zlib.crc32(repr(parts).encode())


@lru_cache(maxsize=None)
def oracle_dim(case: CaseTag, params: GroupParams, t: OrbitParams) -> int:
    return tangent_orbit_dim(canonical_rep(case, params, t))


# ---------------------------------------------------------------- suites


def suite_round_trip(cases=ALL_CASES, max_dim=None) -> SuiteResult:
    res = SuiteResult("round-trip")
    for case in cases:
        for params, r, t in instances(case, max_dim):
            S = canonical_rep(case, params, t)
            res.record(is_isotropic(S) and S.dim == r and classify(S) == t, _label(case, params, t))
    return res


def suite_invariance(cases=ALL_CASES, max_dim=None, seed: int = 0, trials: int = 100,
                     all_components: bool = False) -> SuiteResult:
    """classify(h S) = classify(S) for `trials` sampled h per space at every canonical representative.

    Sample k is a Cayley element on each factor composed with a sign
    representative: the one of component k (cycling through the components
    of H) or, with ``all_components``, each of them in turn.
    """
    res = SuiteResult("invariance" + ("-all-components" if all_components else ""))
    for case in cases:
        for params in group_params_up_to(case, max_dim):
            space = standard_space(case, params)
            reps = [(t, canonical_rep(case, params, t))
                    for r in range(1, space.max_isotropic_dim() + 1) for t in valid_tuples(case, params, r)]
            ncomp = len(component_labels(space))
            for k in range(trials):
                comps = range(ncomp) if all_components else [k]
                for c in comps:
                    # the same seed gives the same Cayley part for every component
                    h = sample_h(space, _seed(seed, case.value, params, k), component=c)
                    if not h.check(space):
                        res.record(False, f"{_label(case, params)} sample {k} is not an isometry")
                        continue
                    for t, S in reps:
                        res.record(classify(h.apply(S)) == t, f"{_label(case, params, t)} sample {k} comp {c}")
    return res


def suite_formula_oracle(cases=ALL_CASES, max_dim=None, formula: Callable | None = None) -> SuiteResult:
    """dim H - dim H_S from the closed forms against the tangent-space rank."""
    res = SuiteResult("formula-oracle")
    formula = formula or dim_orbit
    for case in cases:
        for params, r, t in instances(case, max_dim):
            want = oracle_dim(case, params, t)
            got = formula(case, params, t)
            res.record(got == want, f"{_label(case, params, t)} formula {got} oracle {want}")
    return res


def suite_open_orbits(cases=ALL_CASES, max_dim=None) -> SuiteResult:
    """Closed-form open orbits against the maximal oracle dimension."""
    res = SuiteResult("open-orbits")
    for case in cases:
        for params in group_params_up_to(case, max_dim):
            space = standard_space(case, params)
            for r in range(1, space.max_isotropic_dim() + 1):
                tuples = valid_tuples(case, params, r)
                dims = {t: oracle_dim(case, params, t) for t in tuples}
                top = max(dims.values())
                argmax = sorted((t for t in tuples if dims[t] == top), key=lambda t: t.entries)
                closed = sorted(open_orbits_closed_form(case, params, r), key=lambda t: t.entries)
                flagged = [i.params for i in enumerate_orbits(case, params, r) if i.is_open]
                res.record(closed == argmax == flagged,
                           f"{_label(case, params)} r={r} closed {[str(t) for t in closed]} "
                           f"argmax {[str(t) for t in argmax]}")
    return res


def suite_equal_dimension(cases=(CaseTag.REAL_ORTHOGONAL, CaseTag.UNITARY), max_dim=None) -> SuiteResult:
    res = SuiteResult("equal-dimension")
    for case in cases:
        if not case.signed:
            continue
        for params in group_params_up_to(case, max_dim):
            space = standard_space(case, params)
            for r in range(1, space.max_isotropic_dim() + 1):
                groups: dict[tuple, set[int]] = {}
                for t in valid_tuples(case, params, r):
                    key = (t.r_U, t.r_W, t.a, t.a_U + t.a_W)
                    groups.setdefault(key, set()).add(oracle_dim(case, params, t))
                for key, dims in sorted(groups.items()):
                    res.record(len(dims) == 1, f"{_label(case, params)} {key} dims {sorted(dims)}")
    return res


def stabilizing_sign_cosets(case: CaseTag, params: GroupParams, t: OrbitParams) -> set[tuple[int, ...]]:
    """Cosets of H/(H meet G_0) met by sign elements that stabilize the canonical representative."""
    space = standard_space(case, params)
    S = canonical_rep(case, params, t)
    found = set()
    for mask in range(1 << space.dim):
        flips = {j for j in range(space.dim) if mask >> j & 1}
        h, label = sign_element(space, flips)
        if is_in_stabilizer(h, S):
            found.add(coset(space, label))
    return found


def suite_components(cases=(CaseTag.REAL_ORTHOGONAL, CaseTag.COMPLEX_ORTHOGONAL), max_dim=None) -> SuiteResult:
    """Sign elements in the stabilizer hit exactly the cosets the component count predicts."""
    res = SuiteResult("components")
    for case in cases:
        if case not in (CaseTag.REAL_ORTHOGONAL, CaseTag.COMPLEX_ORTHOGONAL):
            continue
        total = 4 if case is CaseTag.REAL_ORTHOGONAL else 2
        for params, r, t in instances(case, max_dim):
            N = component_count(case, params, t)
            predicted = hit_cosets(case, params, t)
            found = stabilizing_sign_cosets(case, params, t)
            good = (N == component_count_from_cosets(case, params, t) and found == predicted
                    and N * len(found) == total)
            res.record(good, f"{_label(case, params, t)} N={N} predicted {sorted(predicted)} found {sorted(found)}")
    return res


def suite_symplectic_parity(max_dim=None, seed: int = 0, samples: int = 10000) -> SuiteResult:
    """Random isotropic subspaces never have odd b; open orbits have maximal b."""
    res = SuiteResult("symplectic-parity")
    case = CaseTag.SYMPLECTIC
    spaces = [(p, r) for p in group_params_up_to(case, max_dim)
              for r in range(1, standard_space(case, p).max_isotropic_dim() + 1)]
    rng = random.Random(_seed(seed, "parity"))
    for i in range(samples):
        params, r = spaces[i % len(spaces)]
        S = random_isotropic(standard_space(case, params), r, rng, sparsity=rng.choice((0.2, 0.35, 0.5, 0.8)))
        t = classify(S)
        res.record(t.b % 2 == 0, f"{_label(case, params, t)} sample {i}")
    for params, r in spaces:
        tuples = valid_tuples(case, params, r)
        best_b = max(t.b for t in tuples)
        for t in open_orbits(case, params, r):
            res.record(t.b % 2 == 0 and t.b == best_b, f"{_label(case, params, t)} open with b<{best_b}")
    return res


def suite_witness(cases=ALL_CASES, max_dim=None, seed: int = 0, trials: int = 100) -> SuiteResult:
    """orbit_witness(S, h S) maps S onto h S for `trials` seeded pairs per case."""
    res = SuiteResult("witness")
    for case in cases:
        pool = list(instances(case, max_dim))
        rng = random.Random(_seed(seed, "witness", case.value))
        for k in range(trials):
            params, r, t = pool[rng.randrange(len(pool))]
            space = standard_space(case, params)
            S = canonical_rep(case, params, t)
            if k % 2:
                S = sample_h(space, rng.randrange(1 << 30), component=k).apply(S)
            h = sample_h(space, rng.randrange(1 << 30), component=rng.randrange(16))
            S2 = h.apply(S)
            try:
                g = orbit_witness(S, S2)
                res.record(g.check(space) and g.apply(S) == S2, f"{_label(case, params, t)} pair {k}")
            except WitnessNotFound as exc:
                res.record(False, f"{_label(case, params, t)} pair {k}: {exc}")
    return res


def run_suites(names=SUITES, seed: int = 0, trials: int = 100, max_dim: int | None = None,
               cases=ALL_CASES) -> list[SuiteResult]:
    unknown = set(names) - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suites {sorted(unknown)}")
    out = []
    for name in SUITES:
        if name not in names:
            continue
        if name == "round-trip":
            out.append(suite_round_trip(cases, max_dim))
        elif name == "invariance":
            out.append(suite_invariance(cases, max_dim, seed, trials))
        elif name == "formula-oracle":
            out.append(suite_formula_oracle(cases, max_dim))
        elif name == "open-orbits":
            out.append(suite_open_orbits(cases, max_dim))
        elif name == "equal-dimension":
            out.append(suite_equal_dimension([c for c in cases if c.signed], max_dim))
        elif name == "components":
            out.append(suite_components(cases, max_dim))
        elif name == "symplectic-parity":
            if CaseTag.SYMPLECTIC in cases:
                out.append(suite_symplectic_parity(max_dim, seed, samples=100 * trials))
        elif name == "witness":
            out.append(suite_witness(cases, max_dim, seed, trials))
    return out
