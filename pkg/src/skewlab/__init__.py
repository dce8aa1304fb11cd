"""skewlab: exact skew polynomial rings over cyclic Galois extensions,
rank-metric MRD codes and semifields, with desk-scale exhaustive verifiers."""

__version__ = "0.1.0"
