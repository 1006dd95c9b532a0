"""Bigraded Gorenstein algebras from pure simplicial complexes.

The heavy lifting lives in the compiled ``_core`` extension; this package
re-exports its surface: complex constructors (``Complex``, ``turan``,
``load_complex``, ``random_complex``), Hilbert vector routes (``hilbert``,
``hilbert_detail``, ``hilbert_oracle``), structural analysis (``analyze``,
``presented_by_quadrics``, ``oracle``), Lefschetz probes (``wlp``, ``slp``)
and the non-unimodal instance search (``hunt``).

Hilbert entries are returned as Python ints of arbitrary size; all linear
algebra underneath is exact rational arithmetic. Invalid inputs raise
``ValueError``.
"""

from ._core import (  # noqa: F401
    Complex,
    analyze,
    hilbert,
    hilbert_detail,
    hilbert_oracle,
    hunt,
    load_complex,
    oracle,
    presented_by_quadrics,
    random_complex,
    slp,
    turan,
    wlp,
)

__all__ = [
    "Complex",
    "analyze",
    "hilbert",
    "hilbert_detail",
    "hilbert_oracle",
    "hunt",
    "load_complex",
    "oracle",
    "presented_by_quadrics",
    "random_complex",
    "slp",
    "turan",
    "wlp",
]
