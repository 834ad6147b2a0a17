"""Shared plumbing: worker-thread cap from the environment."""

from __future__ import annotations

import os

THREADS_ENV = "BLASCHKE_LAB_THREADS"


def worker_count() -> int:
    """Thread cap for grid evaluation; BLASCHKE_LAB_THREADS, default 1."""
    raw = os.environ.get(THREADS_ENV, "")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n)
