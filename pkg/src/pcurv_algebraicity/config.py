import os
from fractions import Fraction
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

PRIME_LIMIT = 2**62


def get_max_prime() -> int | None:
    """Prime budget for curvature and splitting scans, None when unset."""
    raw = os.getenv("PCURV_MAX_PRIME")
    if not raw:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"PCURV_MAX_PRIME must be an integer, got {raw!r}")
    if value < 2 or value >= PRIME_LIMIT:
        raise ValueError("PCURV_MAX_PRIME must lie in [2, 2^62)")
    return value


def get_threads() -> int:
    """Worker count for prime scans."""
    raw = os.getenv("PCURV_THREADS", "1")
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"PCURV_THREADS must be an integer, got {raw!r}")
    if value < 1:
        raise ValueError("PCURV_THREADS must be at least 1")
    return value


def get_root_tolerance() -> Fraction:
    raw = os.getenv("PCURV_ROOT_TOL", "1/1024")
    try:
        value = Fraction(raw)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"PCURV_ROOT_TOL must be a rational number, got {raw!r}")
    if not 0 < value <= Fraction(1, 8):
        raise ValueError("PCURV_ROOT_TOL must lie in (0, 1/8]")
    return value


def get_frac_bits() -> int:
    raw = os.getenv("PCURV_FRAC_BITS", "32")
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"PCURV_FRAC_BITS must be an integer, got {raw!r}")
    if value < 16:
        raise ValueError("PCURV_FRAC_BITS must be at least 16")
    return value


def get_data_dir() -> Path:
    raw = os.getenv("PCURV_DATA_DIR")
    if raw:
        return Path(raw)
    return Path(__file__).resolve().parent.parent.parent / "data"
