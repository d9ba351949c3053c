"""Verification lab for graphs without a fixed induced tree.

Core pieces: a bit-parallel small-graph kernel (`graphs`), tree taxonomy and
explicit tree partitions (`trees`), witnessing/certifying partition machinery
(`certify`), exact counting of the certified graph families (`counting`),
exhaustive census engines (`census`), and a CLI (`cli`).
"""

__version__ = "0.1.0"
