"""Infrastructure: JSON report store – writes corpus reports to disk."""

from __future__ import annotations

import json
import os
from typing import Any

from gfkit.application.ports import ReportStore as ReportStorePort
from gfkit.domain.errors import ConfigError

DEFAULT_NAME = "corpus-report.json"


class JsonReportStore(ReportStorePort):
    """Saves reports to an explicit path or, failing that, under *report_dir*."""

    def __init__(self, report_dir: str | None = None) -> None:
        self._dir = os.path.abspath(report_dir) if report_dir else None

    def save_report(self, data: dict[str, Any], path: str | None = None) -> str:
        if path is None:
            if self._dir is None:
                raise ConfigError("no report path given and GFKIT_REPORT_DIR is unset")
            path = os.path.join(self._dir, DEFAULT_NAME)
        path = os.path.abspath(path)
        os.makedirs(os.path.dirname(path), exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            json.dump(data, f, indent=2, sort_keys=True)
            f.write("\n")
        return path
