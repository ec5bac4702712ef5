"""
Metrics tracking for invariant computations
"""

import logging
import time
from datetime import datetime, timezone
from typing import Any, Dict, Optional

from .btalgebra import product_cache_info
from .trace import trace_cache_info

logger = logging.getLogger(__name__)


def _cache_dict(info) -> Dict[str, Optional[int]]:
    return {'hits': info.hits, 'misses': info.misses, 'size': info.currsize, 'max_size': info.maxsize}


class ComputationMetrics:
    """Track duration, processed words, check tallies and cache usage"""

    def __init__(self, command: Optional[str] = None):
        self.start_time = time.time()
        self.command = command
        self.words_processed = 0
        self.checks_run = 0
        self.checks_failed = 0

    def add_word(self, count: int = 1):
        self.words_processed += count

    def add_report(self, report):
        """Fold a suite Report into the check tallies"""
        self.checks_run += len(report.results)
        self.checks_failed += len(report.failures)

    def add_checks(self, run: int, failed: int = 0):
        self.checks_run += run
        self.checks_failed += failed

    def get_duration(self) -> float:
        """Get run duration in seconds"""
        return round(time.time() - self.start_time, 2)

    def cache_stats(self) -> Dict[str, Dict[str, Optional[int]]]:
        traces = trace_cache_info()
        return {
            'product': _cache_dict(product_cache_info()),
            'relative_trace': _cache_dict(traces['relative']),
            'markov_trace': _cache_dict(traces['markov']),
        }

    def to_dict(self) -> Dict[str, Any]:
        """Convert metrics to dictionary"""
        return {
            'command': self.command,
            'duration_seconds': self.get_duration(),
            'words_processed': self.words_processed,
            'checks': {
                'run': self.checks_run,
                'failed': self.checks_failed,
            },
            'caches': self.cache_stats(),
            'timestamp': datetime.now(timezone.utc).isoformat(),
        }

    def render(self) -> str:
        caches = self.cache_stats()
        lines = [
            '=' * 60,
            'COMPUTATION METRICS',
            '=' * 60,
            f"Command: {self.command or 'unknown'}",
            f"Duration: {self.get_duration()}s",
            f"Words processed: {self.words_processed}",
            f"Checks: {self.checks_run} run, {self.checks_failed} failed",
        ]
        for name, stats in caches.items():
            lines.append(f"Cache {name}: {stats['hits']} hits, {stats['misses']} misses, {stats['size']} entries")
        lines.append('=' * 60)
        return '\n'.join(lines)

    def log(self):
        """Log metrics at INFO"""
        logger.info("metrics: %s", self.to_dict())
