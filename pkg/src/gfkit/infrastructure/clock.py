"""Infrastructure: monotonic clock implementation."""

from __future__ import annotations

import time

from gfkit.application.ports import Clock as ClockPort


class WallClock(ClockPort):
    """Real monotonic time."""

    def monotonic(self) -> float:
        return time.monotonic()
