"""octaverify: exact replay of binary-octahedral rationality computations."""

__version__ = "0.1.0"
