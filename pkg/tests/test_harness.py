import json

import pytest

from interpoly import (
    BasisSpec,
    DEFAULT_PRIME,
    DEFAULT_SEED,
    PointSet,
    PrimeField,
    QQ,
    SeededRng,
    SuiteConfig,
    check_uniqueness,
    run_suite,
    suite_basis,
)

BIG = PrimeField(DEFAULT_PRIME)


def test_suite_bases_and_expected_counts():
    expectations = {
        "line": 2,
        "circle": 3,
        "conic": 5,
        "cubic": 9,
        "quadric_surface": 9,
        "plane(4)": 14,  # 4 * 7 / 2
        "graph(3)": 4,
    }
    for name, count in expectations.items():
        basis = suite_basis(name)
        assert len(basis.polys) - 1 == count, name


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        suite_basis("parabola")
    with pytest.raises(ValueError):
        suite_basis("plane")


def test_conic_suite_all_pass_at_large_prime():
    report = run_suite(SuiteConfig(suite="conic", trials=20))
    assert report.at_count.passed == 20 and report.at_count.failed == 0
    assert report.over_count.passed == 20 and report.over_count.failed == 0
    assert report.failures == []
    assert report.prime == DEFAULT_PRIME and report.seed == DEFAULT_SEED


def test_graph3_suite_matches_lagrange_story():
    # 4 points determine the graph of a cubic; a 5th overdetermines it
    report = run_suite(SuiteConfig(suite="graph(3)", trials=20, seed=5))
    assert report.at_count.failed == 0
    assert report.over_count.failed == 0


def test_small_prime_warns_and_counts_failures():
    cfg = SuiteConfig(suite="conic", prime=7, trials=50, seed=DEFAULT_SEED)
    with pytest.warns(UserWarning):
        report = run_suite(cfg)
    assert report.at_count.passed + report.at_count.failed == 50
    assert report.over_count.passed + report.over_count.failed == 50
    # with only 7^2 possible points, degenerate samples are guaranteed
    assert report.failures
    for failure in report.failures:
        assert set(failure) == {"trial", "phase", "kernel_dim"}
        assert failure["phase"] in ("at_count", "over_count")


def test_report_is_deterministic():
    cfg = SuiteConfig(suite="circle", trials=10, seed=77)
    assert run_suite(cfg).to_json_obj() == run_suite(cfg).to_json_obj()


def test_report_json_schema():
    report = run_suite(SuiteConfig(suite="line", trials=5, seed=1))
    obj = json.loads(report.to_json())
    assert set(obj) == {"suite", "prime", "trials", "seed", "at_count", "over_count", "failures"}
    assert obj["suite"] == "line"
    assert obj["at_count"] == {"pass": 5, "fail": 0}
    assert obj["over_count"] == {"pass": 5, "fail": 0}


def test_trials_validation():
    with pytest.raises(ValueError):
        run_suite(SuiteConfig(suite="line", trials=0))


def test_check_uniqueness_generic_points():
    rng = SeededRng(8)
    pts = PointSet(BIG, [tuple(BIG.sample(rng) for _ in range(2)) for _ in range(5)])
    assert check_uniqueness(pts, BasisSpec.conic()) is True


def test_check_uniqueness_fails_with_four_collinear_points():
    # four points on the x-axis force the conic to contain the line, leaving
    # a pencil of line pairs through the fifth point: kernel dim >= 2
    pts = PointSet(QQ, [(1, 0), (2, 0), (3, 0), (4, 0), (0, 1)])
    assert check_uniqueness(pts, BasisSpec.conic()) is False


def test_check_uniqueness_empty_points():
    assert check_uniqueness(PointSet(QQ, [], dim=2), BasisSpec.conic()) is False
