"""Acceptance criteria, one test each. Every test prints a single
``criterion N: PASS|FAIL ...`` line before asserting, so ``pytest -v``
shows the outcome of each criterion alongside the measured numbers."""

import math
import subprocess
import sys

import numpy as np
import pytest

from closed_forms import CLOSED_FORM_CASES
from ratcrit import (
    RationalFunction,
    alexander_walsh_radius,
    critical_points,
    exclusion_radius,
    find_roots,
    generate_ensemble,
    log_derivative,
    poly_from_roots,
    run_suite,
    theorem3_L,
    theorem4_constants,
)
from ratcrit.verify import default_config

SEED = 42


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} {detail}")
        return ok

    return emit


def suite(tid, trials):
    return run_suite(tid, default_config(tid, SEED, trials))


def criterion1_ensemble():
    return generate_ensemble(default_config("thm1", SEED, 1000))


def test_criterion_01_exclusion_suite(report):
    rep = suite("thm1", 1000)
    ok = rep.trials == 1000 and rep.failures == 0
    assert report(1, ok, f"trials={rep.trials} failures={rep.failures} "
                          f"inconclusive={rep.inconclusive} min_margin={rep.min_margin:.3e}")


def test_criterion_02_tight_family(report):
    worst = 0.0
    ok = True
    for m in range(1, 7):
        f = RationalFunction(((0j, m), (1 + 0j, 1)))
        crit = critical_points(f)
        ok &= len(crit.roots) == 1 and crit.roots[0][1] == 1
        c = crit.roots[0][0]
        ok &= abs(c - m / (m + 1)) <= 1e-9
        err = abs(abs(c) - exclusion_radius(f, 0))
        worst = max(worst, err)
    ok &= worst <= 1e-9
    assert report(2, ok, f"max |distance - radius| = {worst:.3e} over m = 1..6")


def test_criterion_03_improvement(report):
    below = 0
    for f in criterion1_ensemble():
        for z0 in f.locations:
            if exclusion_radius(f, z0) < alexander_walsh_radius(f, z0):
                below += 1

    rng = np.random.default_rng(SEED)
    worst_rel = 0.0
    for _ in range(200):
        z0 = complex(*rng.uniform(-1, 1, 2))
        r = rng.uniform(0.1, 2)
        n = int(rng.integers(1, 7))
        angles = np.sort(rng.uniform(0, 2 * math.pi, n))
        if n > 1 and np.min(np.diff(angles)) < 1e-3:
            continue
        pts = [(z0, int(rng.integers(1, 4)) * int(rng.choice([-1, 1])))]
        pts += [(z0 + r * complex(math.cos(a), math.sin(a)), int(rng.integers(1, 4)) * int(rng.choice([-1, 1])))
                for a in angles]
        f = RationalFunction(tuple(pts))
        a, b = exclusion_radius(f, z0), alexander_walsh_radius(f, z0)
        worst_rel = max(worst_rel, abs(a - b) / b)

    f = RationalFunction(((0j, 1), (1 + 0j, 1), (3 + 0j, 1)))
    e, aw = exclusion_radius(f, 0), alexander_walsh_radius(f, 0)
    exact = abs(e - 3 / 7) <= 1e-12 and abs(aw - 1 / 3) <= 1e-12
    ok = below == 0 and worst_rel <= 1e-12 and exact
    assert report(3, ok, f"below_AW={below} cocircular_max_rel={worst_rel:.3e} "
                          f"z(z-1)(z-3): {e!r}, {aw!r}")


def test_criterion_04_continuity(report):
    rep = suite("lemma1", 1000)
    ok = rep.trials == 1000 and rep.failures == 0 and rep.passes == 1000
    assert report(4, ok, f"trials={rep.trials} failures={rep.failures} min_margin={rep.min_margin:.3e}")


def test_criterion_05_numerator_roots(report):
    lem = suite("lemma2", 1000)
    cnt = suite("remark_count", 1000)
    ok = lem.passes == 1000 and cnt.passes == 1000
    assert report(5, ok, f"lemma2 passes={lem.passes}/1000 (inconclusive={lem.inconclusive}) "
                          f"count passes={cnt.passes}/1000")


def test_criterion_06_worked_threshold(report):
    g = RationalFunction(((0j, 1),))
    h = RationalFunction(((1 + 0j, 1),))
    c = theorem4_constants(g, h, 0.5)
    crit = critical_points(g.times(h.power(c.n)))
    one = len(crit.roots) == 1 and crit.roots[0][1] == 1
    loc = crit.roots[0][0] if crit.roots else math.nan
    ok = (abs(c.M.value - 2) <= 1e-6 and abs(c.m.value - 2 / 3) <= 1e-6 and c.n == 4
          and one and abs(loc - 0.2) <= 1e-8)
    assert report(6, ok, f"M={c.M.value!r} m={c.m.value!r} n={c.n} critical point {loc!r}")


def test_criterion_07_threshold_suite(report):
    rep = suite("thm4", 200)
    ok = rep.trials == 200 and rep.passes == 200
    assert report(7, ok, f"passes={rep.passes}/200 failures={rep.failures} "
                          f"skipped={rep.skipped} inconclusive={rep.inconclusive}")


def test_criterion_08_far_perturbation_suite(report):
    rep = suite("thm2", 200)
    budget = 0.05 * rep.trials
    lost = rep.skipped + rep.inconclusive
    ok = rep.failures == 0 and lost <= budget
    assert report(8, ok, f"failures={rep.failures} skipped={rep.skipped} "
                          f"inconclusive={rep.inconclusive} budget={budget:g}")


def test_criterion_09_unit_disk_constants(report):
    L = theorem3_L(2, 2, 1)
    iota = 1 / 6
    caps_ok = L <= 1 / (2 + iota) and L <= 0.5 * 2 * 1 / (9 + 1)
    rep = suite("thm3", 200)
    ok = abs(L - 6 / 169) <= 1e-12 * (6 / 169) and caps_ok and rep.failures == 0 and rep.passes > 0
    assert report(9, ok, f"L={L!r} suite passes={rep.passes} failures={rep.failures} "
                          f"skipped={rep.skipped} inconclusive={rep.inconclusive}")


def test_criterion_10_oracle_soundness(report):
    worst = 0.0
    mult_ok = True
    for case in CLOSED_FORM_CASES:
        res = find_roots(poly_from_roots(case))
        found = list(res.roots)
        for r, m in case:
            i = min(range(len(found)), key=lambda j: abs(found[j][0] - r))
            z, fm = found.pop(i)
            worst = max(worst, abs(z - r))
            mult_ok &= fm == m
        mult_ok &= not found
    conserved = 0
    ens = criterion1_ensemble()
    for f in ens:
        ld = log_derivative(f)
        res = find_roots(ld.numerator.normalized())
        crit = critical_points(f)
        conserved += (res.total_count == ld.numerator.degree
                      and crit.total_count == len(f) - 1)
    ok = len(CLOSED_FORM_CASES) == 20 and worst <= 1e-8 and mult_ok and conserved == len(ens)
    assert report(10, ok, f"closed-form max error={worst:.3e} multiplicities_ok={mult_ok} "
                           f"conservation={conserved}/{len(ens)}")


def test_criterion_11_cli_determinism(report, tmp_path):
    outs = []
    for name in ("a.csv", "b.csv"):
        path = tmp_path / name
        subprocess.run([sys.executable, "-m", "ratcrit", "verify", "thm1", "--seed", "42",
                        "--trials", "100", "--out", str(path)], check=True, capture_output=True)
        outs.append(path.read_bytes())
    ok = outs[0] == outs[1] and len(outs[0].splitlines()) == 101
    assert report(11, ok, f"{len(outs[0])} bytes, identical={outs[0] == outs[1]}")
