"""Seeded search for tournaments with more than one minimal retentive set.

Uniqueness of the minimal TEQ-retentive set is known to hold through order 12
and known to fail at order 24, so the interesting gap is 13..23. The harness
is a sampler, not a prover: uniform mode draws random tournaments, structured
mode draws a random half of order n/2 and composes two copies with the same
cross-block pattern as the embedded order-24 instance.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from .core import MAX_ORDER, Tournament, derive_seed, random_tournament, serialize
from .teq import DeadlineExceeded, TeqCache, minimal_retentive_sets

MODES = ("uniform", "structured")
DEFAULT_WITNESS_CAP = 10


@dataclass
class SearchConfig:
    order: int
    trials: int
    seed: int
    mode: str = "uniform"
    time_budget: Optional[float] = None  # seconds per trial, None = unlimited
    witness_cap: int = DEFAULT_WITNESS_CAP

    def validate(self) -> None:
        if not 1 <= self.order <= MAX_ORDER:
            raise ValueError(f"order must be between 1 and {MAX_ORDER}, got {self.order}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.mode == "structured" and self.order % 4:
            raise ValueError(f"structured mode needs order divisible by 4, got {self.order}")
        if self.time_budget is not None and self.time_budget < 0:
            raise ValueError("time budget must be nonnegative")
        if self.witness_cap < 0:
            raise ValueError("witness cap must be nonnegative")


@dataclass
class SearchReport:
    """Aggregate results of one search run.

    Counts and witness bytes are a pure function of the config (with an
    unlimited time budget); the timing fields are not.
    """

    order: int
    trials: int
    seed: int
    mode: str
    found: int = 0
    timed_out: int = 0
    witnesses: list[str] = field(default_factory=list)
    total_seconds: float = 0.0
    max_trial_seconds: float = 0.0

    def to_dict(self, include_timing: bool = True) -> dict:
        d = {
            "order": self.order,
            "trials": self.trials,
            "seed": self.seed,
            "mode": self.mode,
            "found": self.found,
            "timed_out": self.timed_out,
            "witnesses": list(self.witnesses),
        }
        if include_timing:
            d["total_seconds"] = self.total_seconds
            d["max_trial_seconds"] = self.max_trial_seconds
        return d


def compose_structured(half: Tournament, split: int) -> Tournament:
    """Two copies of ``half`` glued with the four-block cross pattern.

    ``split`` cuts each copy into a first block of ``split`` alternatives and
    a second block of the rest; the X copy occupies indices 0..n-1 and the Y
    copy n..2n-1. Cross edges: X1 > Y2, X2 > Y1, Y1 > X1, Y2 > X2.
    """
    n = half.order
    if n % 2:
        raise ValueError(f"half must have even order, got {n}")
    if split != n // 2:
        raise ValueError(f"split must be half the order ({n // 2}), got {split}")
    if 2 * n > MAX_ORDER:
        raise ValueError(f"composed order {2 * n} exceeds {MAX_ORDER}")
    beats = [0] * (2 * n)
    for v in range(n):
        beats[v] = half.beats[v]
        beats[v + n] = half.beats[v] << n
    block1 = (1 << split) - 1
    block2 = ((1 << n) - 1) ^ block1
    x1, x2 = block1, block2
    y1, y2 = block1 << n, block2 << n
    for v in range(2 * n):
        bit = 1 << v
        if bit & x1:
            beats[v] |= y2
        elif bit & x2:
            beats[v] |= y1
        elif bit & y1:
            beats[v] |= x1
        else:
            beats[v] |= x2
    return Tournament(beats)


def _trial_tournament(config: SearchConfig, trial_seed: int,
                      half_source: Optional[Callable[[int], Tournament]]) -> Tournament:
    if config.mode == "uniform":
        return random_tournament(config.order, trial_seed)
    half = half_source(trial_seed) if half_source else random_tournament(config.order // 2, trial_seed)
    return compose_structured(half, config.order // 4)


def search_random(config: SearchConfig,
                  half_source: Optional[Callable[[int], Tournament]] = None) -> SearchReport:
    """Run ``config.trials`` independent trials and count multi-set findings.

    Trial t is seeded with derive_seed(config.seed, t), so a run is
    reproducible and trials could be distributed without changing the report.
    Witnesses (serialized tournaments with >= 2 minimal retentive sets) are
    kept up to the cap; counts stay exact. Trials that exceed the per-trial
    time budget are counted as timed out, never as findings. ``half_source``
    replaces the structured-mode half generator (testing hook).
    """
    config.validate()
    report = SearchReport(order=config.order, trials=config.trials,
                          seed=config.seed, mode=config.mode)
    started = time.monotonic()
    for trial in range(config.trials):
        t = _trial_tournament(config, derive_seed(config.seed, trial), half_source)
        trial_started = time.monotonic()
        deadline = None if config.time_budget is None else trial_started + config.time_budget
        try:
            minimal = minimal_retentive_sets(t, TeqCache(t, deadline=deadline))
        except DeadlineExceeded:
            report.timed_out += 1
        else:
            if len(minimal) >= 2:
                report.found += 1
                if len(report.witnesses) < config.witness_cap:
                    report.witnesses.append(serialize(t))
        trial_seconds = time.monotonic() - trial_started
        if trial_seconds > report.max_trial_seconds:
            report.max_trial_seconds = trial_seconds
    report.total_seconds = time.monotonic() - started
    return report
