import os


def _debug_flag_enabled(flag: str) -> bool:
    flag_value = os.getenv(flag)
    return flag_value is not None and (flag_value == "1" or flag_value.lower() == "true")


def _int_from_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return max(1, int(raw))
    except ValueError:
        return default


VERBOSE_LOGGING = _debug_flag_enabled("QRALAB_VERBOSE_LOGGING")
"""By default the library only emits warnings and errors. Set this flag to have the CLI attach a
verbose stdout handler to the `qralab` logger.
"""

DEFAULT_THREADS = _int_from_env("QRALAB_THREADS", 1)
"""Worker count used by the harness CLI when `--threads` is not given."""
