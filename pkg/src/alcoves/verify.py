"""Verification suites: each checks one theorem-level invariant end to end.

Every suite returns a VerificationReport; a failing report always carries at
least one concrete counterexample witness.  Randomized suites are driven by an
explicit seed and are deterministic given (type, seed, budget).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import product

from . import affine, classify, ideals, lattice
from .rootsystem import Coeffs, RootSystem

DEFAULT_BUDGET = 200


@dataclass
class VerificationReport:
    theorem: str
    type: str
    params: dict
    passed: bool
    details: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    elapsed_ms: int = 0

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "type": self.type,
            "params": self.params,
            "pass": self.passed,
            "details": self.details,
            "witnesses": self.witnesses,
            "elapsed_ms": self.elapsed_ms,
        }


def _random_decomposition(rs: RootSystem, rng: random.Random, k: int) -> list[Coeffs]:
    """A random multiset of positive roots summing to the root at index k."""
    pairs = rs.pairs_for[k]
    if not pairs or rng.random() < 0.35:
        return [rs.pos_roots[k]]
    i, j = rng.choice(pairs)
    return _random_decomposition(rs, rng, i) + _random_decomposition(rs, rng, j)


def _suite_reorder(rs: RootSystem, rng: random.Random, budget: int):
    """Random decompositions admit a partial-sum-preserving reordering, and the
    anchored split step always finds a witness."""
    trials = 0
    witnesses = []
    heavy = [k for k in range(rs.n_pos) if rs.pairs_for[k]]
    if not heavy:
        return True, {"trials": 0}, []
    while trials < budget:
        k = rng.choice(heavy)
        gamma = rs.pos_roots[k]
        parts = _random_decomposition(rs, rng, k)
        if len(parts) < 2:
            continue
        trials += 1
        rng.shuffle(parts)
        try:
            ideals.split_step(rs, gamma, parts)
            ideals.reorder_summands(rs, None, parts, gamma)
            ideals.reorder_summands(rs, parts[0], parts[1:], gamma)
        except (AssertionError, RuntimeError) as e:
            witnesses.append({"gamma": list(gamma), "parts": [list(p) for p in parts], "error": str(e)})
    return not witnesses, {"trials": trials}, witnesses


def _suite_keyaffine(rs: RootSystem, rng: random.Random, budget: int):
    """Admissible k-vectors are exactly the realizable ones.

    Rank <= 2: exhaustive over the box |k| <= 2 (admissible implies the walk
    realizes it; the walk round-trips).  Higher rank: random affine words are
    admissible and round-trip through the walk.
    """
    witnesses = []
    checked = 0
    if rs.rank <= 2:
        for kvec in product(range(-2, 3), repeat=rs.n_pos):
            checked += 1
            if affine.is_admissible(rs, kvec):
                w = affine.alcove_walk(rs, kvec)
                if affine.k_vector(rs, w) != tuple(kvec):
                    witnesses.append({"k": list(kvec), "realized": list(affine.k_vector(rs, w))})
            else:
                try:
                    affine.alcove_walk(rs, kvec)
                    witnesses.append({"k": list(kvec), "error": "walk accepted inadmissible vector"})
                except ValueError:
                    pass
    else:
        for _ in range(budget):
            w = affine.identity(rs)
            for _ in range(rng.randrange(0, 13)):
                w = affine.mul(rs, w, affine.aff_simple_reflection(rs, rng.randrange(0, rs.rank + 1)))
            kv = affine.k_vector(rs, w)
            checked += 1
            if not affine.is_admissible(rs, kv):
                witnesses.append({"k": list(kv), "error": "realized vector not admissible"})
                continue
            if affine.k_vector(rs, affine.alcove_walk(rs, kv)) != kv:
                witnesses.append({"k": list(kv), "error": "walk does not round-trip"})
    return not witnesses, {"checked": checked}, witnesses


def _suite_maxmin(rs: RootSystem, rng: random.Random, budget: int):
    """The shortest (longest) support-realizing element has the plus (minus)
    statistics as its k-vector, is dominant, and every sign-type member's
    k-vector sits between the two."""
    witnesses = []
    total = 0
    for mask in ideals.enumerate_ideals(rs):
        total += 1
        lo = tuple(ideals.plus_stats(rs, mask))
        wmin = affine.w_min(rs, mask)
        if affine.k_vector(rs, wmin) != lo or not affine.is_dominant(rs, wmin):
            witnesses.append({"ideal": mask, "error": "shortest element mismatch"})
        if ideals.is_strictly_positive(rs, mask):
            hi = tuple(ideals.minus_stats(rs, mask))
            wmax = affine.w_max(rs, mask)
            if affine.k_vector(rs, wmax) != hi:
                witnesses.append({"ideal": mask, "error": "longest element mismatch"})
            if any(a > b for a, b in zip(lo, hi)):
                witnesses.append({"ideal": mask, "error": "plus statistic exceeds minus statistic"})
            _, members = affine.st_members(rs, mask)
            for m in members:
                kv = affine.k_vector(rs, m)
                if not all(a <= k <= b for a, k, b in zip(lo, kv, hi)):
                    witnesses.append({"ideal": mask, "k": list(kv), "error": "member outside box"})
    return not witnesses, {"ideals": total}, witnesses


def _suite_keyshi(rs: RootSystem, rng: random.Random, budget: int):
    """Sign-type membership: finite exactly for strictly positive ideals, and
    every member is dominant with support equal to the ideal."""
    witnesses = []
    total = 0
    for mask in ideals.enumerate_ideals(rs):
        total += 1
        complete, members = affine.st_members(rs, mask)
        if complete != ideals.is_strictly_positive(rs, mask):
            witnesses.append({"ideal": mask, "error": "finiteness flag mismatch"})
        if not members:
            witnesses.append({"ideal": mask, "error": "sign type empty"})
        for m in members:
            if affine.support_mask(rs, m) != mask or not affine.is_dominant(rs, m):
                witnesses.append({"ideal": mask, "error": "member support/dominance mismatch"})
    return not witnesses, {"ideals": total}, witnesses


def _suite_biject1(rs: RootSystem, rng: random.Random, budget: int):
    """Ideals correspond to the lattice points of the (h+1)-simplex."""
    witnesses = []
    masks = list(ideals.enumerate_ideals(rs))
    points = lattice.d_set(rs, rs.h + 1)
    images = set()
    for mask in masks:
        lam = lattice.ideal_to_lambda(rs, mask)
        images.add(lam)
        if lattice.lambda_to_ideal(rs, lam) != mask:
            witnesses.append({"ideal": mask, "lambda": list(lam), "error": "round trip failed"})
    if images != set(points):
        witnesses.append({"error": "image is not the full point set"})
    return not witnesses, {"ideals": len(masks), "points": len(points)}, witnesses


def _suite_biject2(rs: RootSystem, rng: random.Random, budget: int):
    """Strictly positive ideals correspond to the points of the (h-1)-simplex."""
    witnesses = []
    masks = list(ideals.enumerate_ideals(rs, strict_only=True))
    points = lattice.d_set(rs, rs.h - 1)
    images = set()
    for mask in masks:
        lam = lattice.strict_ideal_to_lambda(rs, mask)
        images.add(lam)
        if lattice.lambda_to_strict_ideal(rs, lam) != mask:
            witnesses.append({"ideal": mask, "lambda": list(lam), "error": "round trip failed"})
    if images != set(points):
        witnesses.append({"error": "image is not the full point set"})
    return not witnesses, {"ideals": len(masks), "points": len(points)}, witnesses


def _suite_counting(rs: RootSystem, rng: random.Random, budget: int):
    """Enumerated ideal counts match the product formula, the simplex point
    counts, and (within caps) the orbit counts on the coroot lattice modulo t."""
    witnesses = []
    details = {}
    for strict, t in ((False, rs.h + 1), (True, rs.h - 1)):
        enum = ideals.count_ideals(rs, strict_only=strict)
        formula = int(lattice.count_formula(rs, t))
        dpts = len(lattice.d_set(rs, t))
        row = {"enumerated": enum, "formula": formula, "points": dpts}
        try:
            row["orbits"] = lattice.count_orbits_mod(rs, t)
        except Exception:
            row["orbits"] = None
        details["strict" if strict else "all"] = row
        values = {v for v in row.values() if v is not None}
        if len(values) != 1:
            witnesses.append({"strict": strict, **row})
    return not witnesses, details, witnesses


def _suite_simples(rs: RootSystem, rng: random.Random, budget: int):
    """Tight simplex walls recover the minimal roots of the ideal (and the
    maximal complement roots in the strict case)."""
    witnesses = []
    total = 0
    for mask in ideals.enumerate_ideals(rs):
        total += 1
        report = lattice.verify_simples(rs, mask)
        if not report["pass"]:
            witnesses.append({"ideal": mask, "report": report})
    return not witnesses, {"ideals": total}, witnesses


def _suite_goestosimple(rs: RootSystem, rng: random.Random, budget: int):
    """The simplex map carries each ideal's tight walls into the extended
    simple roots (after the global negation)."""
    witnesses = []
    total = 0
    ext = classify.extended_simples(rs)
    for mask in ideals.enumerate_ideals(rs):
        total += 1
        try:
            img = classify.wall_image_subset(rs, mask)
        except AssertionError:
            witnesses.append({"ideal": mask, "error": "image left the extended simples"})
            continue
        mins = ideals.minimal_roots(rs, mask)
        if len(img) != len(mins) or not img <= ext:
            witnesses.append({"ideal": mask, "image": [list(r) for r in img]})
    return not witnesses, {"ideals": total}, witnesses


def _suite_minimals(rs: RootSystem, rng: random.Random, budget: int):
    """Every ideal's minimal antichain (and strict complement antichain) is
    conjugate to a subset of the simples; the constructive route through the
    simplex map certifies gcd 1."""
    witnesses = []
    total = 0
    for mask in ideals.enumerate_ideals(rs):
        total += 1
        mins = [rs.pos_roots[k] for k in ideals.minimal_roots(rs, mask)]
        y, J = classify.conjugate_to_simples(rs, mins)
        img = frozenset(
            rs.all_roots[y.perm[rs.index[r]]] for r in mins
        )
        if len(J) != len(mins) or img != frozenset(rs.simple_root(j) for j in J):
            witnesses.append({"ideal": mask, "error": "conjugation image mismatch"})
        if rs.rank <= 3:
            d = classify.gcd_certificate(rs, classify.wall_image_subset(rs, mask))
            if d != 1:
                witnesses.append({"ideal": mask, "gcd": d})
    for mask in ideals.enumerate_ideals(rs, strict_only=True):
        tops = [rs.pos_roots[k] for k in ideals.max_complement_roots(rs, mask)]
        _, J = classify.conjugate_to_simples(rs, tops)
        if len(J) != len(tops):
            witnesses.append({"ideal": mask, "error": "strict conjugation size mismatch"})
    return not witnesses, {"ideals": total}, witnesses


def _suite_numbers(rs: RootSystem, rng: random.Random, budget: int):
    """Per-class ideal counts equal the characteristic polynomial predictions."""
    witnesses = []
    details = {}
    for strict in (False, True):
        rows = classify.classify_table(rs, strict)
        key = "strict" if strict else "all"
        details[key] = {str(list(r["class"])): [r["count"], r["predicted"]] for r in rows}
        for r in rows:
            if not r["ok"]:
                witnesses.append({"strict": strict, "class": list(r["class"]), **{k: r[k] for k in ("count", "predicted")}})
    return not witnesses, details, witnesses


SUITES = {
    "reorder": _suite_reorder,
    "keyaffine": _suite_keyaffine,
    "maxmin": _suite_maxmin,
    "keyshi": _suite_keyshi,
    "biject1": _suite_biject1,
    "biject2": _suite_biject2,
    "counting": _suite_counting,
    "simples": _suite_simples,
    "goestosimple": _suite_goestosimple,
    "minimals": _suite_minimals,
    "numbers": _suite_numbers,
}


def run_suite(
    rs: RootSystem, theorem: str, seed: int = 0, budget: int = DEFAULT_BUDGET
) -> VerificationReport:
    if theorem not in SUITES:
        raise KeyError(f"unknown suite {theorem!r}; choose from {sorted(SUITES)}")
    rng = random.Random(seed)
    start = time.monotonic()
    passed, details, witnesses = SUITES[theorem](rs, rng, budget)
    elapsed = int((time.monotonic() - start) * 1000)
    return VerificationReport(
        theorem=theorem,
        type=rs.name,
        params={"seed": seed, "budget": budget},
        passed=passed,
        details=details,
        witnesses=witnesses,
        elapsed_ms=elapsed,
    )
