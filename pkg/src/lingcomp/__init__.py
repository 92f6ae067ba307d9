"""lingcomp: linguistic-complexity analysis of scholarly writing by author group.

Pipeline stages: ingest article files, annotate leading-author ethnicity
groups, compute per-document complexity features, and compare the group
distributions. See the ``lingcomp`` command-line tool for orchestration.
"""

__version__ = "0.1.0"
