import time
from contextlib import contextmanager
from typing import Dict, List, Tuple


class Monitor:
    """Collects per-command durations for the non-canonical report footer."""

    def __init__(self, logger):
        self.step_durations: List[Tuple[str, float]] = []
        self.logger = logger

    @contextmanager
    def track(self, label: str):
        start = time.perf_counter()
        try:
            yield
        finally:
            self.update_metrics(label, time.perf_counter() - start)

    def update_metrics(self, label: str, duration: float):
        self.step_durations.append((label, duration))
        console_outputs = f"[Step {len(self.step_durations)}: {label} | Duration {duration:.2f} seconds]"
        self.logger.debug(console_outputs)

    def totals(self) -> Dict[str, float]:
        return {
            "commands": float(len(self.step_durations)),
            "seconds": sum(duration for _, duration in self.step_durations),
        }
