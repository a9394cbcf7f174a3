"""Partitions through Frobenius symbols: cores, quotients, hooks, Weyl actions and Scopes families."""

from frobcore.abacus import SparseAbacus, balance, bar, push
from frobcore.decomposition import (
    Decomposition,
    RunnerSplit,
    char_vector,
    conjugate_decomposition,
    core,
    core_of_charvec,
    core_size,
    decompose,
    durfee_from_decomposition,
    is_selfconjugate_decomposition,
    quotient,
    reconstruct,
    selfconj_core_size,
    split,
)
from frobcore.errors import DomainError
from frobcore.partition_core import (
    CoSets,
    FrobeniusSymbol,
    FrobLabel,
    Kind,
    boxes,
    co_sets,
    conjugate,
    frobenius_of,
    hook_multiset,
    hooklength,
    parse_partition,
    partition_of,
    remove_hook,
    size,
)

__all__ = [
    "CoSets",
    "Decomposition",
    "DomainError",
    "FrobLabel",
    "FrobeniusSymbol",
    "Kind",
    "RunnerSplit",
    "SparseAbacus",
    "balance",
    "bar",
    "boxes",
    "char_vector",
    "co_sets",
    "conjugate",
    "conjugate_decomposition",
    "core",
    "core_of_charvec",
    "core_size",
    "decompose",
    "durfee_from_decomposition",
    "frobenius_of",
    "hook_multiset",
    "hooklength",
    "is_selfconjugate_decomposition",
    "parse_partition",
    "partition_of",
    "push",
    "quotient",
    "reconstruct",
    "remove_hook",
    "selfconj_core_size",
    "size",
    "split",
]
