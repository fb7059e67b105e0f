"""Exact computations with bilinear pairings of finite modules.

Layers, bottom to top:

* ``exactlin``: Howell forms, kernels and invariant factors over ``Z/n``.
* ``rings``: ``Z/n`` and finite table rings, ideals and ring predicates.
* ``modules``: finitely presented modules, maps, tensor, Hom, duals, purity.
* ``pairings``: pairings, orthogonals, closures, density, completions.
* ``alphacond``: the α-map and the predicates built on it.
* ``theoremlab``: a registry of checkable statements with a corpus runner.
* ``labcli``: the command-line front end.
"""

from __future__ import annotations

from .errors import (
    ConsistencyError,
    ConstructionError,
    ContractViolation,
    DualPairError,
    HypothesisError,
    ResourceError,
    UnsupportedError,
)
from .modules import (
    LinearMap,
    Module,
    Submodule,
    cyclic,
    direct_sum,
    dual,
    fp_module,
    free_module,
    hom_module,
    is_flat,
    is_projective,
    is_pure_submodule,
    module_from_chain,
    quotient,
    submodule_span,
    tensor,
)
from .pairings import Pairing, an, canonical_pairing, dual_map, ke, make_pairing, subpairing
from .alphacond import alpha_map, is_locally_projective, q2_membership, satisfies_alpha, tensor_pairing
from .rings import is_qf, is_self_injective, is_semisimple, named_ring, table_ring, ut2_f2, zmod
from .verdicts import Verdict

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError", "ConstructionError", "ContractViolation", "DualPairError", "HypothesisError",
    "ResourceError", "UnsupportedError", "LinearMap", "Module", "Submodule", "cyclic", "direct_sum", "dual",
    "fp_module", "free_module", "hom_module", "is_flat", "is_projective", "is_pure_submodule",
    "module_from_chain", "quotient", "submodule_span", "tensor", "Pairing", "an", "canonical_pairing",
    "dual_map", "ke", "make_pairing", "subpairing", "alpha_map", "is_locally_projective", "q2_membership",
    "satisfies_alpha", "tensor_pairing", "is_qf", "is_self_injective", "is_semisimple", "named_ring",
    "table_ring", "ut2_f2", "zmod", "Verdict",
]
