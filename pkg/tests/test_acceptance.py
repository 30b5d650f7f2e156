"""Acceptance suite: one test per criterion, each printing PASS or FAIL.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines.  Every tolerance (exact equality, counts, wall-clock budgets) is
pinned here.
"""

import json
import random
import time
from contextlib import contextmanager
from itertools import chain, combinations

import pytest

from dinitz import (
    DinitzInstance,
    PreferenceProfile,
    build_square_orientation,
    deferred_acceptance,
    enumerate_stable_matchings,
    find_kernel_bruteforce,
    has_property_x,
    is_kernel,
    is_stable,
    make_digraph,
    outdegree,
    solve_dinitz,
    square_kernel_oracle,
    verify_generalized_latin,
)
from dinitz.cli import main


@contextmanager
def criterion(label):
    try:
        yield
    except BaseException:
        print(f"criterion {label}: FAIL")
        raise
    print(f"criterion {label}: PASS")


def cycle(k):
    return make_digraph(k, [(i, (i + 1) % k) for i in range(k)])


def random_instance(rng, n, universe, list_size):
    rows = [
        [rng.sample(range(universe), list_size) for _ in range(n)] for _ in range(n)
    ]
    return DinitzInstance.from_labels(rows)


def random_profile(rng, max_side):
    num_rows = rng.randint(1, max_side)
    num_cols = rng.randint(1, max_side)
    density = rng.uniform(0.1, 0.6)
    allowed = frozenset(
        (r, c)
        for r in range(num_rows)
        for c in range(num_cols)
        if rng.random() < density
    )
    row_rank = {}
    for r in range(num_rows):
        cols = sorted(c for rr, c in allowed if rr == r)
        for c, rank in zip(cols, rng.sample(range(len(cols)), len(cols))):
            row_rank[(r, c)] = rank
    col_rank = {}
    for c in range(num_cols):
        rows = sorted(r for r, cc in allowed if cc == c)
        for r, rank in zip(rows, rng.sample(range(len(rows)), len(rows))):
            col_rank[(r, c)] = rank
    return PreferenceProfile(num_rows, num_cols, allowed, row_rank, col_rank)


def test_criterion_01_outdegree_law():
    with criterion("1 (outdegree n-1 for n=1..64, <5s)"):
        start = time.perf_counter()
        for n in range(1, 65):
            g = build_square_orientation(n)
            for v in range(n * n):
                assert outdegree(g, v) == n - 1
        assert time.perf_counter() - start < 5.0


def test_criterion_02_property_x_exhaustive():
    with criterion("2 (hereditary kernel audit, n=2 and n=3, <10s)"):
        start = time.perf_counter()
        r2 = has_property_x(build_square_orientation(2))
        assert r2.holds and r2.subsets_checked == 16
        r3 = has_property_x(build_square_orientation(3))
        assert r3.holds and r3.subsets_checked == 512
        assert time.perf_counter() - start < 10.0


def test_criterion_03_oracle_equivalence_n4():
    with criterion("3 (oracle valid on all 2^16 subsets of n=4, <60s)"):
        start = time.perf_counter()
        g = build_square_orientation(4)
        for mask in range(1 << 16):
            s = frozenset(v for v in range(16) if mask >> v & 1)
            assert is_kernel(g, s, square_kernel_oracle(4, s))
        assert time.perf_counter() - start < 60.0


def test_criterion_04_kernel_matching_equivalence_n3():
    with criterion("4 (kernels == stable matchings on every n=3 subset)"):
        n = 3
        g = build_square_orientation(n)
        for mask in range(1 << 9):
            members = sorted(v for v in range(9) if mask >> v & 1)
            kernels = {
                frozenset(sub)
                for sub in chain.from_iterable(
                    combinations(members, k) for k in range(len(members) + 1)
                )
                if is_kernel(g, members, sub)
            }
            allowed = frozenset(divmod(v, n) for v in members)
            profile = PreferenceProfile(
                n,
                n,
                allowed,
                {(r, c): n - 1 - (r + c) % n for r, c in allowed},
                {(r, c): (r + c) % n for r, c in allowed},
            )
            matchings = {
                frozenset(r * n + c for r, c in m)
                for m in enumerate_stable_matchings(profile)
            }
            assert kernels == matchings


def test_criterion_05_dinitz_end_to_end():
    with criterion("5 (1600 random instances, n=1..8, all solve+verify, <1s each)"):
        worst = 0.0
        for n in range(1, 9):
            for k in range(200):
                rng = random.Random(1000 * n + k)
                inst = random_instance(rng, n, universe=3 * n, list_size=n)
                start = time.perf_counter()
                grid = solve_dinitz(inst)
                worst = max(worst, time.perf_counter() - start)
                assert verify_generalized_latin(inst, grid).valid
        assert worst < 1.0


def test_criterion_06_classical_specialization():
    with criterion("6 (identical lists give Latin squares, n<=10)"):
        for n in range(1, 11):
            inst = DinitzInstance.from_labels([[list(range(n))] * n] * n)
            grid = solve_dinitz(inst)
            for i in range(n):
                assert {grid[i][j] for j in range(n)} == set(range(n))
                assert {grid[j][i] for j in range(n)} == set(range(n))


def test_criterion_07_cycle_negative_controls():
    with criterion("7 (odd cycles kernel-free, even cycles have exactly two)"):
        for k in (3, 5, 7):
            assert find_kernel_bruteforce(cycle(k), range(k)) is None
        for k in (4, 6):
            g = cycle(k)
            kernels = [
                frozenset(sub)
                for sub in chain.from_iterable(
                    combinations(range(k), size) for size in range(k + 1)
                )
                if is_kernel(g, range(k), sub)
            ]
            assert len(kernels) == 2
            assert set(kernels) == {
                frozenset(range(0, k, 2)),
                frozenset(range(1, k, 2)),
            }


def test_criterion_08_loop_invariant_checked_runs():
    with criterion("8 (list-vs-outdegree slack holds after every pass)"):
        passes = 0
        for n in range(1, 9):
            for k in range(200):
                rng = random.Random(1000 * n + k)
                inst = random_instance(rng, n, universe=3 * n, list_size=n)
                trace = []
                solve_dinitz(inst, checked=True, trace=trace)  # raises on violation
                passes += len(trace)
        assert passes > 0


def test_criterion_09_stability_and_row_optimality():
    with criterion("9 (500 random profiles: DA stable; row-optimal when small)"):
        enumerated = 0
        for i in range(500):
            rng = random.Random(9000 + i)
            profile = random_profile(rng, max_side=4 if i % 3 == 0 else 30)
            result = deferred_acceptance(profile)
            assert is_stable(profile, result).stable
            if len(profile.allowed) <= 16:
                enumerated += 1
                stable_all = enumerate_stable_matchings(profile)
                assert result in stable_all
                partner = dict(result)
                for m in stable_all:
                    for r, c in m:
                        assert r in partner
                        assert (
                            profile.row_rank[(r, partner[r])]
                            <= profile.row_rank[(r, c)]
                        )
        assert enumerated >= 100


def test_criterion_10_performance_n50():
    with criterion("10 (n=50 solves in <5s with <=n^2 productive passes)"):
        rng = random.Random(50)
        inst = random_instance(rng, 50, universe=150, list_size=50)
        trace = []
        start = time.perf_counter()
        grid = solve_dinitz(inst, trace=trace)
        elapsed = time.perf_counter() - start
        assert elapsed < 5.0
        assert verify_generalized_latin(inst, grid).valid
        assert len(trace) <= 50 * 50
        assert all(p.chosen for p in trace)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_criterion_11_cli_round_trip(seed, tmp_path, capsys):
    with criterion(f"11 (CLI gen/solve/verify round trip, seed {seed})"):
        for n in range(1, 9):
            args = ["gen", "--n", str(n), "--seed", str(seed)]
            assert main(list(args)) == 0
            first = capsys.readouterr().out
            assert main(list(args)) == 0
            assert capsys.readouterr().out.encode() == first.encode()
            instance = tmp_path / f"inst-{n}-{seed}.json"
            instance.write_text(first)
            solution = tmp_path / f"sol-{n}-{seed}.json"
            assert main(["solve", str(instance), str(solution)]) == 0
            capsys.readouterr()
            assert main(["verify", str(instance), str(solution)]) == 0
            assert capsys.readouterr().out.strip() == "valid"
            assert json.loads(solution.read_text())["n"] == n
