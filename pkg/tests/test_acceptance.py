"""End-to-end acceptance checks; each prints one PASS/FAIL line with its runtime."""
import time
from contextlib import contextmanager
from fractions import Fraction
from itertools import combinations, product

import pytest

from cosetkit import characters, classifier, griess, minimal_model, symmetric_group
from cosetkit.linalg import matmul
from cosetkit.symmetric_group import partitions, specht_dimension, two_row_partitions

HALF, S = Fraction(1, 2), Fraction(1, 16)


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(number, title, limit):
        start = time.perf_counter()
        failure = None
        try:
            yield
        except BaseException as exc:
            failure = exc
        elapsed = time.perf_counter() - start
        if failure is None and elapsed > limit:
            failure = AssertionError(f"took {elapsed:.2f}s, limit {limit}s")
        status = "PASS" if failure is None else "FAIL"
        with capsys.disabled():
            print(f"\n[{status}] criterion {number}: {title} ({elapsed:.2f}s, limit {limit}s)")
        if failure is not None:
            raise failure

    return run


def test_criterion_1_module_counts(criterion):
    with criterion(1, "irreducible module counts for 2 <= n <= 12", 11):
        for n in range(2, 13):
            start = time.perf_counter()
            rows = classifier.module_report(n, oracle=False)
            assert len(rows) == {2: 8, 3: 20}.get(n, 2 ** (n - 1) * (n + 2))
            assert time.perf_counter() - start < 1, n


def test_criterion_2_tn_structure(criterion):
    with criterion(2, "T^N blocks are the two-row Specht modules, N = 2..6", 30):
        for n in range(2, 7):
            report = symmetric_group.build_TN(n)
            assert len(report.blocks) == n // 2 + 1
            assert [p for _, p in report.blocks] == two_row_partitions(n)
            assert all(d == specht_dimension(p) for d, p in report.blocks)
            assert report.total_dim == report.evaluation_rank == sum(d * d for d, _ in report.blocks)
            assert report.generators_checked == max(n - 2, 0)
            assert sorted(report.nonsurviving_shapes) == sorted(p for p in partitions(n) if len(p) >= 3)


def test_criterion_3_young_symmetrizers_in_ideal(criterion):
    with criterion(3, "c_t in J^N for shapes with >= 3 rows, N <= 5; embedded S_3 identity", 60):
        for n in range(3, 6):
            report = symmetric_group.lemma42_report(n)
            shapes = [tuple(m["partition"]) for m in report["memberships"]]
            assert shapes == [p for p in partitions(n) if len(p) >= 3]
            assert all(m["c_t_in_J"] for m in report["memberships"])
            assert report["s3_identity"] and report["ok"]


def test_criterion_4_griess_suite(criterion):
    with criterion(4, "weight-two algebra identities for n <= 8", 5):
        for n in range(1, 9):
            w = griess.virasoro_vector(n)
            for i, j in griess.pairs(n):
                x = griess.omega(n, i, j)
                assert griess.product(w, x) == x * 2
                assert griess.form(w, x) == Fraction(1, 4)
            for i, j, l in combinations(range(n + 1), 3):
                assert griess.form(griess.omega(n, j, l), griess.omega(n, i, j)) == Fraction(1, 32)
                x3 = griess.omega3(n, i, j, l)
                assert griess.form(x3, x3) == Fraction(3, 5)
            assert 2 * griess.form(w, w) == Fraction(n * (n + 1), n + 3)
            spec = griess.adjoint_spectrum((0, 1), n)
            assert (spec.count(2), spec.count(HALF), spec.count(0)) == (1, n - 1, len(spec) - n)
            assert griess.griess_report(n)["ok"]
        assert Fraction(6, 5) == Fraction(7, 10) + HALF == 2 * griess.form(griess.virasoro_vector(2), griess.virasoro_vector(2))


def test_criterion_5_lowest_weight_triple_agreement(criterion):
    with criterion(5, "formula = lattice oracle = character leading term, n <= 4", 120):
        checked = 0
        for n in range(1, 5):
            for label in classifier.enumerate_modules(n) if n >= 2 else classifier.iter_all_labels(n):
                checked += 1
                weight = classifier.lowest_conformal_weight(label)
                dim = classifier.lowest_space_dimension(label)
                block, _ = classifier.specht_block(label)
                lead = characters.leading_data(characters.CosetLabel(n + 1, label.delta_prime, label.k), 6)
                assert weight == classifier.lattice_lowest_weight_oracle(label) == lead[0], label
                assert dim == lead[1] == specht_dimension(block.partition), label
        assert checked == 6 + 8 + 20 + 48


def test_criterion_6_character_decompositions(criterion):
    with criterion(6, "lattice = sum affine x coset for m = 2, 3 (order 12) and m = 4 (order 10)", 300):
        cases = [(m, bits, 12) for m in (2, 3) for bits in product((0, 1), repeat=m)]
        cases.append((4, (0, 0, 0, 0), 10))
        for m, bits, order in cases:
            result = characters.verify_decomposition(m, bits, order)
            assert result.ok, result.to_json()


def test_criterion_7_fusion_tables(criterion):
    with criterion(7, "Ising fusion lines and the vanishing box for n <= 6", 5):
        by_h = {lab.weight: lab for lab in minimal_model.labels(1)}
        vac, eps, sig = by_h[0], by_h[HALF], by_h[S]
        f = minimal_model.fusion_dim
        assert f(1, vac, eps, eps) == 1
        assert f(1, eps, eps, eps) == f(1, sig, eps, eps) == 0
        assert f(1, sig, eps, sig) == 1
        assert f(1, vac, eps, sig) == f(1, eps, eps, sig) == 0
        assert minimal_model.fusion_report(1)["ok"]
        for n in range(1, 7):
            box = list(minimal_model.corollary_2_11_box(n))
            assert box and all(minimal_model.corollary_2_11_vanishes(n, *p) for p in box)


def test_criterion_8_conformal_triples(criterion):
    with criterion(8, "the eight three-generator representations and their relations", 1):
        triples = griess.lemma33_matrices()
        assert [t.name for t in triples] == [f"W{i}" for i in range(1, 9)]
        assert [t.scalars for t in triples[1:]] == [
            (0, 0, 0), (0, S, S), (S, 0, S), (S, S, 0), (HALF, S, S), (S, HALF, S), (S, S, HALF)
        ]
        for t in triples:
            assert triple_ok(t), t.name
        w1 = griess.triple_report(triples[0])
        assert all(w1[key] for key in ("quadratic", "square", "braid", "j_relation"))
        a, b, c = triples[0].involutions()
        assert matmul(matmul(a, b), a) == matmul(matmul(b, a), b)


def triple_ok(t):
    report = griess.triple_report(t)
    return report["ok"]
