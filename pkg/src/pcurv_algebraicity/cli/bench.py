"""Deterministic random-input benchmark.

Inputs come from SplitMix64: state += 0x9E3779B97F4A7C15, then the output is
mixed by two xor-shift-multiply rounds. Coefficients are uniform in
[-2^h, 2^h] by rejection sampling.
"""

import logging
import time
from dataclasses import dataclass

import pandas as pd

from ..arith.polynomials import IntPoly, derivative, gcd_z
from ..deciders.honda import decide_honda
from ..deciders.verdicts import Transcendental

logger = logging.getLogger(__name__)

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
COLUMNS = ["degree", "height_bits", "seed", "case_index", "verdict", "witness_prime", "time_ms"]


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) for 0 < n <= 2^64."""
        limit = (1 << 64) - (1 << 64) % n
        while True:
            r = self.next()
            if r < limit:
                return r % n

    def coefficient(self, height_bits: int, nonzero: bool = False) -> int:
        h = 1 << height_bits
        while True:
            c = self.below(2 * h + 1) - h
            if c or not nonzero:
                return c


@dataclass(frozen=True)
class BenchCase:
    case_index: int
    a: IntPoly
    b: IntPoly


def random_case(rng: SplitMix64, degree: int, height_bits: int, case_index: int = 0) -> BenchCase:
    """deg a = degree - 1 and deg b = degree, coprime with b squarefree."""
    if degree < 1:
        raise ValueError("degree must be at least 1")
    while True:
        a = tuple(rng.coefficient(height_bits) for _ in range(degree - 1)) + (rng.coefficient(height_bits, True),)
        b = tuple(rng.coefficient(height_bits) for _ in range(degree)) + (rng.coefficient(height_bits, True),)
        if len(gcd_z(a, b)) == 1 and len(gcd_z(b, derivative(b))) == 1:
            return BenchCase(case_index, a, b)


def run_bench(
    degree: int,
    height_bits: int,
    count: int,
    seed: int,
    budget: int | None = None,
    n_jobs: int = 1,
) -> pd.DataFrame:
    rng = SplitMix64(seed)
    rows = []
    for index in range(count):
        case = random_case(rng, degree, height_bits, index)
        start = time.perf_counter()
        verdict, _ = decide_honda(case.a, case.b, budget=budget, n_jobs=n_jobs)
        elapsed = (time.perf_counter() - start) * 1000
        witness = verdict.witness_prime if isinstance(verdict, Transcendental) and verdict.witness_prime else 0
        rows.append(
            {
                "degree": degree,
                "height_bits": height_bits,
                "seed": seed,
                "case_index": index,
                "verdict": verdict.label,
                "witness_prime": witness,
                "time_ms": round(elapsed, 3),
            }
        )
        logger.debug(f"case {index}: {verdict.label} witness={witness} in {elapsed:.1f} ms")
    logger.info(f"Bench degree={degree} height_bits={height_bits}: {count} cases")
    return pd.DataFrame(rows, columns=COLUMNS)


def summarize(df: pd.DataFrame) -> list[dict]:
    """Per (degree, height_bits) cell: counts, median and max witness prime, mean time."""
    summary = []
    for (degree, height_bits), cell in df.groupby(["degree", "height_bits"]):
        witnesses = cell.loc[cell["witness_prime"] > 0, "witness_prime"]
        summary.append(
            {
                "degree": int(degree),
                "height_bits": int(height_bits),
                "count": int(len(cell)),
                "transcendental": int((cell["verdict"] == Transcendental.label).sum()),
                "median_witness_prime": float(witnesses.median()) if len(witnesses) else None,
                "max_witness_prime": int(witnesses.max()) if len(witnesses) else None,
                "mean_time_ms": round(float(cell["time_ms"].mean()), 3),
            }
        )
    return summary
