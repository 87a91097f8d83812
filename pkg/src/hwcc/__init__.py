"""Characteristic cycles of highest weight Harish-Chandra modules.

Exact computations over the rationals for the simple groups of hermitian
type: the parameter set ``W_hw``, candidate cycles and their elimination
for E6/E7, the closed forms for SO_e(2, 2n-1), and the clan algorithm for
Sp(2n, R).
"""

CONVENTION_VERSION = 1

from .rootsys import RootSystem, build  # noqa: E402
from .weyl import WeylElement, bruhat_leq, enumerate_script_w, from_word  # noqa: E402
from .hermitian import HermitianDatum, av_rank, build_hermitian, mu_rank  # noqa: E402
from .ccengine import characteristic_cycle, leading_term_cycle, possible_cc  # noqa: E402
from .clans import Clan  # noqa: E402

__all__ = [
    "CONVENTION_VERSION",
    "RootSystem",
    "build",
    "WeylElement",
    "bruhat_leq",
    "enumerate_script_w",
    "from_word",
    "HermitianDatum",
    "build_hermitian",
    "mu_rank",
    "av_rank",
    "possible_cc",
    "characteristic_cycle",
    "leading_term_cycle",
    "Clan",
]
