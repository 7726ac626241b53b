"""Application layer – ports, named fixtures, corpus suites and use cases."""
