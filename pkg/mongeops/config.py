# mongeops/config.py
import logging
import os

DEFAULT_SEED = int(os.environ.get("MONGEOPS_SEED", "20240917"))

# random rationals used for generic-point rank evaluation have |num|, |den| <= SAMPLE_BOUND
SAMPLE_BOUND = 100
RESAMPLE_LIMIT = 10
RANK_POINTS = 3

# lowest total degree of the Jacobi coefficients that are examined
JACOBI_MIN_DEGREE = -1

LOG_LEVEL = getattr(logging, os.environ.get("MONGEOPS_LOG_LEVEL", "WARNING").upper(), logging.WARNING)


def _candidate_catalog_paths():
    here = os.path.dirname(__file__)
    return [
        os.environ.get("MONGEOPS_CATALOG_PATH"),          # env override
        os.path.join(here, "catalog", "data"),           # packaged entries
        os.path.join(os.getcwd(), "catalog"),            # working-directory fallback
    ]


def catalog_path() -> str:
    for p in _candidate_catalog_paths():
        if p and os.path.isdir(p):
            return p
    raise FileNotFoundError(
        "Catalog directory not found. Set MONGEOPS_CATALOG_PATH or reinstall the package data."
    )
