"""Finite permutation groups and σ-property transitivity classes."""

__version__ = "0.1.0"

from .classify import (PROPERTIES, PropertyFunctor, Verdict, classify, is_MsigmaT, is_MT, is_PsigmaT, is_PST,
                       is_PT, is_QsigmaT, is_T, is_T_sigma, robinson_complex)
from .corpus import builtin_corpus, load_group, parse_group
from .perm import Group, Subgroup, generate
from .sigma import SigmaPartition

__all__ = [
    "PROPERTIES", "PropertyFunctor", "Verdict", "classify", "is_MsigmaT", "is_MT", "is_PsigmaT", "is_PST", "is_PT",
    "is_QsigmaT", "is_T", "is_T_sigma", "robinson_complex", "builtin_corpus", "load_group", "parse_group", "Group",
    "Subgroup", "generate", "SigmaPartition",
]
