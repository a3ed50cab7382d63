"""lankelab: exact workbench for symmetric-group decompositions of n-ary bracket modules."""

__version__ = "0.1.0"
