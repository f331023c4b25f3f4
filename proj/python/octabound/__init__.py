"""Threshold upper bounds for Clifford-based architectures.

Bloch-sphere noise channels, teleportation state-injection shifting rules,
octahedron-entry threshold solvers, resource-robustness scans, and a dense
density-matrix oracle, all backed by the C++ core.
"""

from ._octabound import *  # noqa: F401,F403
from ._octabound import __version__  # noqa: F401
