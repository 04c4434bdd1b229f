"""Shared computation context: one modular frame per ambient group and
prime, with cached tables, blocks and simple modules for every subgroup
and quotient encountered.

The frame (splitting field and root-of-unity reduction) is built from the
ambient group's exponent.  Subgroups and quotients have exponents dividing
it, so their Brauer characters live in the same cyclotomic field and can
be restricted, inflated and compared without change of basis.  Caching is
keyed by element sets, so differently-generated copies of the same
subgroup share all heavy work.
"""

from __future__ import annotations

import random

from .blocks import Block, distribute_blocks
from .chartab import CharacterTable, character_table
from .errors import PrimeRequired
from .group import PermGroup, require_prime
from .modrep import (BrauerCharacter, all_simples, assign_ibr_to_blocks,
                     decomposition_matrix, projective_indecomposable)
from .modsys import PModularSystem


class Bundle:
    """Everything p-local about one group, computed on demand."""

    def __init__(self, G: PermGroup, p: int, system: PModularSystem,
                 seed: int):
        self.group = G
        self.p = p
        self.system = system
        self.seed = seed
        self._table = None
        self._blocks = None
        self._simples = None
        self._ibr = None
        self._dec = None
        self._ibr_block = None

    @property
    def table(self) -> CharacterTable:
        if self._table is None:
            self._table = character_table(self.group)
        return self._table

    @property
    def blocks(self) -> list:
        if self._blocks is None:
            self._blocks = distribute_blocks(self.table, self.p, self.system)
        return self._blocks

    @property
    def simples(self) -> list:
        if self._simples is None:
            rng = random.Random(self.seed)
            self._simples = all_simples(self.group, self.p, self.system,
                                        rng=rng)
        return self._simples

    @property
    def ibr(self) -> list:
        if self._ibr is None:
            self._ibr = [BrauerCharacter(index=i, dim=mod.dim, values=vals)
                         for i, (mod, vals) in enumerate(self.simples)]
        return self._ibr

    @property
    def decomposition(self) -> list:
        if self._dec is None:
            self._dec = decomposition_matrix(self.table, self.p, self.ibr)
        return self._dec

    @property
    def ibr_block(self) -> dict:
        if self._ibr_block is None:
            self._ibr_block = assign_ibr_to_blocks(self.blocks,
                                                   self.decomposition,
                                                   self.ibr)
        return self._ibr_block

    def ibr_of_block(self, block: Block) -> list:
        return [phi for phi in self.ibr
                if self.ibr_block[phi.index] == block.index]

    def simple_module(self, phi: BrauerCharacter):
        return self.simples[phi.index][0]

    def pim(self, phi_index: int) -> tuple:
        return projective_indecomposable(self.table, self.decomposition,
                                         phi_index)

    def p_regular_indices(self) -> list:
        return self.table.p_regular_class_indices(self.p)

    def __repr__(self):
        return f"<bundle: {self.group.describe()}, p={self.p}>"


class Workspace:
    """A cache of bundles sharing one modular frame."""

    def __init__(self, ambient: PermGroup, p: int, seed: int = 0):
        require_prime(p)
        self.ambient = ambient
        self.p = p
        self.seed = seed
        self.system = PModularSystem(ambient.exponent(), p)
        self._bundles = {}

    def bundle(self, G: PermGroup) -> Bundle:
        key = (G.degree, G.element_set())
        if key not in self._bundles:
            self._bundles[key] = Bundle(G, self.p, self.system, self.seed)
        return self._bundles[key]

    def ambient_bundle(self) -> Bundle:
        return self.bundle(self.ambient)
