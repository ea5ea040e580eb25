"""Energy-dissipation backtracking for Momentum and RMSProp.

The package couples three layers: ``objectives`` (analytic test functions
and dense-network training losses with evaluation accounting), ``optim``
(the adaptive linesearch optimizers and their fixed-step baselines), and
``theory`` (closed-form step floors, convergence envelopes, and verifiers
that check runs against the predictions).  ``data`` and ``harness`` supply
dataset plumbing and the multi-seed benchmark CLI.
"""

from . import data, harness, objectives, optim, theory

__all__ = ["data", "harness", "objectives", "optim", "theory"]
__version__ = "0.1.0"
