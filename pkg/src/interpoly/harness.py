"""Randomized check that the classical interpolation counts actually hold.

"General position" is realized as uniform i.i.d. sampling over a large
prime field: the degenerate configurations form the zero locus of some
determinant, so by the Schwartz-Zippel bound a random sample avoids them
with probability 1 - O(degree/p).  Each trial fits the family through
exactly the expected number of sampled points (the kernel should be a
line) and then through one more (the kernel should vanish).  Degenerate
samples are counted, never raised: the harness measures.
"""

from __future__ import annotations

import json
import re
import warnings
from dataclasses import dataclass, field as dataclass_field

from .fields import DEFAULT_SEED, PrimeField, SeededRng
from .fitting import BasisSpec, PointSet, fit_curves

#: Prime used by default: 2^31 - 1, large enough that degeneracies are
#: ~1e-7 per trial.
DEFAULT_PRIME = 2**31 - 1

SMALL_PRIME_WARNING = 10**6


def suite_basis(suite: str) -> BasisSpec:
    """Basis for a suite name: line, circle, conic, cubic, quadric_surface,
    plane(d), or graph(d)."""
    name = suite.strip()
    if re.fullmatch(r"(line|circle|conic|cubic|quadric_surface|plane\(\d+\)|graph\(\d+\))", name):
        return BasisSpec.from_name(name)
    raise ValueError(f"unknown suite: {suite!r}")


@dataclass(frozen=True)
class SuiteConfig:
    suite: str
    prime: int = DEFAULT_PRIME
    trials: int = 100
    seed: int = DEFAULT_SEED


@dataclass
class Tally:
    passed: int = 0
    failed: int = 0

    def record(self, ok: bool):
        if ok:
            self.passed += 1
        else:
            self.failed += 1


@dataclass
class SuiteReport:
    suite: str
    prime: int
    trials: int
    seed: int
    at_count: Tally = dataclass_field(default_factory=Tally)
    over_count: Tally = dataclass_field(default_factory=Tally)
    failures: list = dataclass_field(default_factory=list)

    def to_json_obj(self) -> dict:
        return {
            "suite": self.suite,
            "prime": self.prime,
            "trials": self.trials,
            "seed": self.seed,
            "at_count": {"pass": self.at_count.passed, "fail": self.at_count.failed},
            "over_count": {"pass": self.over_count.passed, "fail": self.over_count.failed},
            "failures": self.failures,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)


def run_suite(cfg: SuiteConfig) -> SuiteReport:
    """Sample, fit, and tally; deterministic given the seed.

    Trial t draws from its own substream split(t), so the report does not
    depend on evaluation order and individual trials can be replayed.
    """
    if cfg.trials < 1:
        raise ValueError("need at least one trial")
    basis = suite_basis(cfg.suite)
    fp = PrimeField(cfg.prime)
    if fp.p < SMALL_PRIME_WARNING:
        warnings.warn(
            f"prime {fp.p} is small; expect sampling degeneracies to show up as failures",
            stacklevel=2,
        )
    n_expected = len(basis.polys) - 1
    dim = basis.num_vars
    report = SuiteReport(suite=basis.name, prime=fp.p, trials=cfg.trials, seed=cfg.seed)
    root = SeededRng(cfg.seed)
    for t in range(cfg.trials):
        rng = root.split(t)
        pts = [tuple(fp.sample(rng) for _ in range(dim)) for _ in range(n_expected)]
        at = fit_curves(PointSet(fp, pts, dim=dim), basis)
        extra = tuple(fp.sample(rng) for _ in range(dim))
        over = fit_curves(PointSet(fp, pts + [extra], dim=dim), basis)
        # One more row can only grow the rank, never the kernel.
        assert over.kernel_dim <= at.kernel_dim
        report.at_count.record(at.kernel_dim == 1)
        if at.kernel_dim != 1:
            report.failures.append({"trial": t, "phase": "at_count", "kernel_dim": at.kernel_dim})
        report.over_count.record(over.kernel_dim == 0)
        if over.kernel_dim != 0:
            report.failures.append(
                {"trial": t, "phase": "over_count", "kernel_dim": over.kernel_dim}
            )
    return report


def check_uniqueness(points: PointSet, basis: BasisSpec) -> bool:
    """True when exactly one curve of the family passes through the points."""
    return fit_curves(points, basis).kernel_dim == 1
