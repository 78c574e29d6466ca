"""Quantum audio representation: codec, circuits, simulator, signal operations."""

try:
    from ._core import *  # noqa: F401,F403  (installed layout)
except ImportError:  # build-tree layout: _core sits next to the package on sys.path
    from _core import *  # noqa: F401,F403
