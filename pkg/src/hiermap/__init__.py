"""hiermap: memory-hierarchy and temporal-mapping design-space exploration
for convolutional accelerators.

The package models a convolutional layer as a 7D loop nest, represents a
schedule as per-operand loop assignments over the memory levels of an
accelerator, and analytically estimates energy, latency, area and the
memory bandwidth each design point requires.
"""

from hiermap.workload import LayerSpec, classify, lpf_factorize, operand_size
from hiermap.arch import (
    MacModel,
    MemoryHierarchy,
    MemoryLevelInstance,
    MemoryPoolEntry,
    MemVariant,
    total_area,
    validate_hierarchy,
)
from hiermap.mapping import MappingScheme, is_even, validate_mapping

__version__ = "0.1.0"

__all__ = [
    "LayerSpec",
    "classify",
    "lpf_factorize",
    "operand_size",
    "MacModel",
    "MemoryHierarchy",
    "MemoryLevelInstance",
    "MemoryPoolEntry",
    "MemVariant",
    "total_area",
    "validate_hierarchy",
    "MappingScheme",
    "is_even",
    "validate_mapping",
    "__version__",
]
