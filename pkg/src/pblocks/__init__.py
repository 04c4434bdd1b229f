"""Modular representation theory for explicit finite permutation groups.

The package computes ordinary character tables, p-blocks, irreducible
Brauer characters, radical p-subgroups and weights, and correspondents
across coprime quotient layers, then mechanically checks the counting
identities that tie those invariants together.  Everything is exact:
ordinary values live in cyclotomic fields, modular work happens over
finite fields of p-power order, and no float ever enters a result.
"""

from .blocks import Block, block_induction, block_of_character, covers
from .catalog import (catalog_group, inline_group, read_group_file,
                      resolve_group, write_group_file)
from .chartab import CharacterTable, character_table
from .errors import (BlockNotInvariant, CapExceeded, DefectZeroBlock,
                     HypothesisViolated, InductionUndefined, LinkageConflict,
                     MalformedPermutation, NoCorrespondent,
                     NoInvariantExtension, NonIntegralSolution, NotNormal,
                     NotPLocal, ParseError, PBlocksError, QuotientNotPGroup,
                     ReductionFailure)
from .group import (PermGroup, build_group, centralizer, normalizer,
                    p_core, p_subgroup_classes, quotient_group, sylow)
from .modrep import BrauerCharacter, decomposition_matrix
from .verify import (PChain, VerificationReport, enumerate_p_chains,
                     verify_bawc, verify_chain_counts, verify_dgn_count,
                     verify_extended, verify_extension_bridge,
                     verify_nav_set, verify_navarro)
from .weights import Weight, b_weights, enumerate_weights, \
    radical_p_subgroup_classes
from .workspace import Bundle, Workspace

__version__ = "0.1.0"

__all__ = [
    "Block", "BlockNotInvariant", "BrauerCharacter", "Bundle", "CapExceeded",
    "CharacterTable", "DefectZeroBlock", "HypothesisViolated",
    "InductionUndefined", "LinkageConflict", "MalformedPermutation",
    "NoCorrespondent", "NoInvariantExtension", "NonIntegralSolution",
    "NotNormal", "NotPLocal", "PBlocksError", "PChain", "ParseError",
    "PermGroup", "QuotientNotPGroup", "ReductionFailure",
    "VerificationReport", "Weight", "Workspace", "b_weights", "block_induction",
    "block_of_character", "build_group", "catalog_group", "centralizer",
    "character_table", "covers", "decomposition_matrix", "enumerate_p_chains",
    "enumerate_weights", "inline_group", "normalizer", "p_core",
    "p_subgroup_classes", "quotient_group", "radical_p_subgroup_classes",
    "read_group_file", "resolve_group", "sylow", "verify_bawc",
    "verify_chain_counts", "verify_dgn_count", "verify_extended",
    "verify_extension_bridge", "verify_nav_set", "verify_navarro",
    "write_group_file", "__version__",
]
