"""Corpus – named end-to-end suites and the brute-force oracles they rely on."""

from gfkit.application.corpus.suites import SUITES, list_suites, run_suite

__all__ = ["SUITES", "list_suites", "run_suite"]
