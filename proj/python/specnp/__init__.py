"""Matrix holomorphic functional calculus and spectral Nevanlinna-Pick
necessary-condition checks on the unit disc."""

try:
    from ._core import *  # noqa: F401,F403  (installed layout)
except ImportError:  # build-tree layout: _core sits next to the package on sys.path
    from _core import *  # type: ignore  # noqa: F401,F403

__version__ = "0.1.0"
