"""Infrastructure – configuration, logging, clocks, file loaders, report files."""
