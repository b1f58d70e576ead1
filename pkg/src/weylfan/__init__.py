"""weylfan: exact chamber/face/flat combinatorics of the restricted weight
arrangement of gl_n on V + alt^2 V, cross-checked by an exact-LP geometry
oracle.  Pure Python, rational arithmetic only."""

__version__ = "0.1.0"
