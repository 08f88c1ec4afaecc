"""Fast one-sided detection of giant (alternating or symmetric) permutation groups."""

from .altsym import (
    Strategy,
    Verdict,
    altsym_core_on_types,
    altsym_test,
    cameron_cannon_test,
    cc_core_on_types,
    detect,
    large_prime_test,
)
from .cycletype import CycleType, format_cycle_type, parse_cycle_type
from .jordan import JordanCertificate, jordan_test
from .perm import GeneratorSet, Permutation, parse_permutation, read_generator_file
from .primitive import BlockFilter, eliminate, primitive_test
from .sampler import RandomSource, random_cycle_type, random_even_cycle_type

__all__ = [
    "BlockFilter",
    "CycleType",
    "GeneratorSet",
    "JordanCertificate",
    "Permutation",
    "RandomSource",
    "Strategy",
    "Verdict",
    "altsym_core_on_types",
    "altsym_test",
    "cameron_cannon_test",
    "cc_core_on_types",
    "detect",
    "eliminate",
    "format_cycle_type",
    "jordan_test",
    "large_prime_test",
    "parse_cycle_type",
    "parse_permutation",
    "primitive_test",
    "random_cycle_type",
    "random_even_cycle_type",
    "read_generator_file",
]
