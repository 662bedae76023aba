"""Acceptance suite: the eight headline guarantees, one visible line each.

Run with ``pytest tests/test_acceptance.py -v``; every test prints
``ACCEPTANCE <id> <label>: PASS`` (or FAIL) straight to the terminal,
bypassing capture, then asserts.
"""

import itertools
import random

import pytest

from qseidel.grassmann import (
    box_complement,
    box_partitions,
    contains,
    fp_schubert_b,
    fp_schubert_bminus,
    size,
)
from qseidel.neighborhoods import gamma_fp, sweep
from qseidel.perms import join, longest_element, min_coset_rep, seidel_element
from qseidel.quantum import (
    lr_coeff,
    min_q_degree,
    quantum_product,
    seidel_class,
    seidel_degree,
)

RANKS_6 = [(k, n) for n in range(2, 7) for k in range(1, n)]


def announce(capsys, ident: str, label: str, ok: bool) -> None:
    with capsys.disabled():
        print(f"ACCEPTANCE {ident} {label}: {'PASS' if ok else 'FAIL'}")


@pytest.fixture(scope="module")
def sweep8():
    return sweep(8)


def test_1_pinned_degree_case(capsys):
    lam = (5, 4, 3, 1)
    by_formula = seidel_degree(lam, 5, 4, 9)
    by_product = min_q_degree(quantum_product(seidel_class(5, 4, 9), lam, 4, 9))
    ok = by_formula == 2 and by_product == 2
    announce(capsys, "1/8", "pinned diagonal degree, formula == product", ok)
    assert ok, (by_formula, by_product)


def test_2_neighborhood_sweep(capsys, sweep8):
    bad = [c for c in sweep8.cases if not c.checks["fp_equality"]]
    ok = not bad and sweep8.total == 3514
    announce(
        capsys,
        "2/8",
        f"neighborhood == translated variety on {sweep8.total} cases (n <= 8)",
        ok,
    )
    assert ok, [c.record() for c in bad[:5]]


def test_3_single_term_products(capsys, sweep8):
    bad = [c for c in sweep8.cases if not c.checks["product_single_term"]]
    ok = not bad
    announce(capsys, "3/8", "every cocharacter product is one q-term", ok)
    assert ok, [c.record() for c in bad[:5]]


def test_4_flag_chain_consistency(capsys, sweep8):
    names = ("g_chain_containment", "v_match", "length_identity")
    bad = [c for c in sweep8.cases if not all(c.checks[x] for x in names)]
    ok = not bad
    announce(capsys, "4/8", "flag chains carve out the right variety", ok)
    assert ok, [c.record() for c in bad[:5]]


def test_5_join_of_projections(capsys):
    failures = 0
    checked = 0
    for n in range(2, 6):
        roots_all = list(range(1, n))
        subsets = [
            frozenset(c)
            for r in range(n)
            for c in itertools.combinations(roots_all, r)
        ]
        for w in itertools.permutations(range(1, n + 1)):
            for ry in subsets:
                for rz in subsets:
                    rx = ry & rz
                    got = join(min_coset_rep(w, ry), min_coset_rep(w, rz), rx)
                    checked += 1
                    if got != min_coset_rep(w, rx):
                        failures += 1
    rng = random.Random(0)
    perms6 = list(itertools.permutations(range(1, 7)))
    for _ in range(10_000):
        w = rng.choice(perms6)
        ry = frozenset(r for r in range(1, 6) if rng.random() < 0.5)
        rz = frozenset(r for r in range(1, 6) if rng.random() < 0.5)
        rx = ry & rz
        got = join(min_coset_rep(w, ry), min_coset_rep(w, rz), rx)
        checked += 1
        if got != min_coset_rep(w, rx):
            failures += 1
    ok = failures == 0
    announce(
        capsys,
        "5/8",
        f"join of parabolic projections recovers w ({checked} triples)",
        ok,
    )
    assert ok, f"{failures} of {checked} joins disagreed"


def test_6_rotations_are_minimal_representatives(capsys):
    ok = all(
        seidel_element(n, i)
        == min_coset_rep(longest_element(n), frozenset(range(1, n)) - {i})
        for n in range(2, 11)
        for i in range(1, n)
    )
    announce(capsys, "6/8", "rotation powers == reduced longest element", ok)
    assert ok


def test_7_ring_sanity(capsys):
    ok = True
    for k, n in RANKS_6:
        parts = box_partitions(k, n)
        box = ((n - k),) * k
        for lam in parts:
            ok = ok and lr_coeff(lam, box_complement(lam, k, n), box) == 1
            for mu in parts:
                left = quantum_product(lam, mu, k, n)
                ok = ok and left.terms == quantum_product(mu, lam, k, n).terms
                total = size(lam) + size(mu)
                for (shape, d), coeff in left.terms.items():
                    ok = ok and size(shape) + d * n == total
                    ok = ok and coeff > 0 and contains(box, shape)
    ok = ok and quantum_product((1,), (1,), 1, 2).terms == {((), 1): 1}
    ok = ok and quantum_product((2, 2), (1,), 2, 4).terms == {((1,), 1): 1}
    announce(capsys, "7/8", "commutative graded ring with pinned products", ok)
    assert ok


def test_8_zero_degree_degeneration(capsys):
    ok = True
    for k, n in RANKS_6:
        parts = box_partitions(k, n)
        for lam_b in parts:
            below = fp_schubert_b(lam_b, k, n)
            for lam_bm in parts:
                expect = below & fp_schubert_bminus(lam_bm, k, n)
                ok = ok and gamma_fp(lam_b, lam_bm, 0, k, n) == expect
    announce(capsys, "8/8", "degree-0 neighborhood == plain intersection", ok)
    assert ok
