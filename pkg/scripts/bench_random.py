import sys
import json
import logging
from pathlib import Path
from datetime import datetime

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

import pandas as pd
from pcurv_algebraicity import config
from pcurv_algebraicity.cli.bench import run_bench, summarize

logging.basicConfig(level=logging.INFO, format="%(levelname)s: %(message)s")
logger = logging.getLogger(__name__)

DEGREES = [10, 20, 40]
HEIGHT_BITS = [10, 20]
SAMPLES = 20
SEED = 20240101
# Random inputs are transcendental with small witnesses; the budget only guards against outliers
MAX_PRIME = 1000
WITNESS_MEDIAN_TARGET = 17
WITNESS_MAX_TARGET = 43


def main():
    data_dir = config.get_data_dir()
    data_dir.mkdir(parents=True, exist_ok=True)
    n_jobs = config.get_threads()

    frames = []
    for degree in DEGREES:
        for height_bits in HEIGHT_BITS:
            logger.info(f"Running degree={degree} height_bits={height_bits} ({SAMPLES} samples)")
            frames.append(run_bench(degree, height_bits, SAMPLES, SEED, budget=MAX_PRIME, n_jobs=n_jobs))
    df = pd.concat(frames, ignore_index=True)

    csv_path = data_dir / "bench_random.csv"
    df.to_csv(csv_path, index=False)
    logger.info(f"Wrote {len(df)} rows to {csv_path}")

    summary = summarize(df)
    for cell in summary:
        logger.info(
            f"degree={cell['degree']} height_bits={cell['height_bits']}: "
            f"{cell['transcendental']}/{cell['count']} transcendental, "
            f"median witness {cell['median_witness_prime']}, max {cell['max_witness_prime']}, "
            f"mean {cell['mean_time_ms']} ms"
        )
        if cell["transcendental"] < cell["count"]:
            logger.warning(f"  {cell['count'] - cell['transcendental']} cases without a witness")
        if cell["max_witness_prime"] is not None and cell["max_witness_prime"] > WITNESS_MAX_TARGET:
            logger.warning(f"  witness prime {cell['max_witness_prime']} above {WITNESS_MAX_TARGET}")
        if cell["median_witness_prime"] is not None and cell["median_witness_prime"] > WITNESS_MEDIAN_TARGET:
            logger.warning(f"  median witness prime above {WITNESS_MEDIAN_TARGET}")

    report = {
        'report_timestamp': datetime.now().isoformat(),
        'seed': SEED,
        'samples': SAMPLES,
        'max_prime': MAX_PRIME,
        'cells': summary,
        'total_time_ms': round(float(df['time_ms'].sum()), 3),
    }
    summary_path = data_dir / "bench_summary.json"
    with open(summary_path, "w") as f:
        json.dump(report, f, indent=2)
    logger.info(f"Summary saved to {summary_path}")


if __name__ == "__main__":
    main()
