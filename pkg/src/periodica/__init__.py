"""Jones-type invariants of periodic links and periodicity criteria."""

__version__ = "0.1.0"
