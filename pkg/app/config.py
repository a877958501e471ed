import os
from dotenv import load_dotenv

# Загружаем переменные из .env файла
load_dotenv()

# --- Границы степеней и параллельность ---
HECKE_NMAX_STR = os.getenv("HECKE_NMAX", "4")
try:
    HECKE_NMAX = int(HECKE_NMAX_STR)
    if HECKE_NMAX < 0:
        raise ValueError("Negative degree bound")
except ValueError:
    raise ValueError(f"Invalid HECKE_NMAX format: {HECKE_NMAX_STR}. Use a non-negative integer.")

HECKE_JOBS_STR = os.getenv("HECKE_JOBS", "1")
try:
    HECKE_JOBS = int(HECKE_JOBS_STR)
    if HECKE_JOBS < 1:
        raise ValueError("Worker count must be positive")
except ValueError:
    raise ValueError(f"Invalid HECKE_JOBS format: {HECKE_JOBS_STR}. Use a positive integer.")

# Граница n для батареи проверок модулей Гекке
HECKE_SUITE_NMAX_STR = os.getenv("HECKE_SUITE_NMAX", "4")
try:
    HECKE_SUITE_NMAX = int(HECKE_SUITE_NMAX_STR)
    if HECKE_SUITE_NMAX < 1:
        raise ValueError("Suite bound must be positive")
except ValueError:
    raise ValueError(f"Invalid HECKE_SUITE_NMAX format: {HECKE_SUITE_NMAX_STR}. Use a positive integer.")


def get_default_nmax() -> int:
    """Граница степеней по умолчанию для --nmax"""
    return HECKE_NMAX


def get_default_jobs() -> int:
    """Число процессов по умолчанию для --jobs"""
    return HECKE_JOBS


# --- Отчеты и Логи ---
REPORT_DIR = os.getenv("REPORT_DIR", "reports")
LOG_FILE = os.getenv("LOG_FILE", "logs/hecke.log")
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()
