import random

import pytest

from climbtrace import ClimbStore, ClimbTrace, MagnitudeSeries, new_record, resample, synth_climb

# The published style-comparison table: (route, climber, style, min, max,
# mean, variance, var-diff, lagged-autocorr).
TABLE1 = [
    ("purple v0 route", 1, "static", 0.29, 3.50, 1.10, 0.12, 0.06, 1617.90),
    ("purple v0 route", 3, "static", 0.07, 6.39, 1.09, 0.16, 0.12, 1600.46),
    ("purple v0 route", 2, "dynamic", 0.16, 10.96, 1.11, 0.39, 0.18, 2150.63),
    ("purple v0 route", 3, "dynamic", 0.20, 9.76, 1.14, 0.40, 0.16, 1931.72),
    ("yellow v1 route", 1, "static", 0.21, 2.20, 1.06, 0.05, 0.02, 795.96),
    ("yellow v1 route", 1, "hybrid", 0.06, 11.41, 1.06, 0.17, 0.11, 2176.12),
    ("yellow v1 route", 1, "dynamic", 0.03, 8.20, 1.07, 0.21, 0.10, 1862.94),
    ("pink v2 route", 2, "static", 0.45, 2.74, 1.04, 0.04, 0.03, 793.59),
    ("pink v2 route", 2, "hybrid", 0.21, 4.04, 1.05, 0.08, 0.03, 1939.77),
    ("pink v2 route", 2, "dynamic", 0.16, 10.32, 1.12, 0.25, 0.15, 1826.36),
]


VARIANCE_COL = [(r[0], r[2], r[6]) for r in TABLE1]
VAR_DIFF_COL = [(r[0], r[2], r[7]) for r in TABLE1]
AUTOCORR_COL = [(r[0], r[2], r[8]) for r in TABLE1]


def constant_trace(value: float = 1.0, n: int = 60, epoch_ms: int = 1_554_034_800_000) -> ClimbTrace:
    return ClimbTrace(MagnitudeSeries((value,) * n), start_epoch_ms=epoch_ms)


def spike_trace(n: int = 161, epoch_ms: int = 1_554_034_860_000) -> ClimbTrace:
    """Calm 8 s climb that ends in a big jump-off landing spike."""
    rng = random.Random(42)
    values = [1.0 + rng.uniform(-0.02, 0.02) for _ in range(n)]
    for i, bump in zip(range(n - 4, n), (3.0, 6.0, 4.0, 2.0)):
        values[i] += bump
    return ClimbTrace(MagnitudeSeries(tuple(values)), start_epoch_ms=epoch_ms)


@pytest.fixture
def store(tmp_path):
    return ClimbStore(tmp_path / "climbs")


@pytest.fixture
def fixture_records(store):
    """A small populated store: static synth, dynamic synth, constant, spiky."""
    records = []
    for i, trace in enumerate(
        [
            resample(synth_climb(8.0, 0.0, 2.0, seed=11, source_epoch_ms=1_554_034_800_000)),
            resample(synth_climb(8.0, 2.0, 2.0, seed=11, source_epoch_ms=1_554_034_900_000)),
            constant_trace(),
            spike_trace(),
        ]
    ):
        record = new_record(trace, title=f"fixture {i}")
        store.save(record)
        records.append(record)
    return records
