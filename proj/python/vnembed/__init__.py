"""Exact minimum-cost virtual network embedding on tree substrates.

The heavy lifting lives in the compiled extension; this package re-exports
its operations. Instances and mappings travel as JSON document strings in
the same formats the ``vnembed`` CLI reads and writes.
"""

from vnembed._core import (
    VneError,
    __version__,
    canonicalize,
    export_lp,
    gen_er_request,
    gen_fat_tree,
    gen_partition,
    oracle,
    solve,
    transform,
    validate,
)

__all__ = [
    "VneError",
    "__version__",
    "canonicalize",
    "export_lp",
    "gen_er_request",
    "gen_fat_tree",
    "gen_partition",
    "oracle",
    "solve",
    "transform",
    "validate",
]
