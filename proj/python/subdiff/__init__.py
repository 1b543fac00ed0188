# SPDX-License-Identifier: MIT
"""Second-order L1 time stepping for subdiffusion on graded time meshes.

Thin Python layer over the C++ core: graded meshes, convolution weights,
P1 finite elements, the L1/GCN marching schemes, Mittag-Leffler
evaluation, and the convergence-study harness.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401

__version__ = "1.0.0"
