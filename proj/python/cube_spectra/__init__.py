"""Fourier and spectral tools on the Hamming cube.

Functions on {0,1}^n are 1-d float arrays of length 2^n indexed by the
bitmask of the point. Codes are passed as (n, list of int points).
Reports come back as dicts with the same keys as the CLI's JSON output.
"""

from ._core import *  # noqa: F401,F403
from ._core import CodeParseError, VerificationFailure  # noqa: F401

__version__ = "0.1.0"
