"""Sorting words and inversion sequences with stacks and pop stacks."""

__version__ = "0.1.0"

from .closedforms import (
    Series2,
    binom,
    burstein_depth2_stack_words,
    burstein_gf,
    burstein_gf_coefficient,
    cake,
    catalan,
    eulerian,
    fibonacci,
    tetrahedral,
)
from .core import (
    InversionSequence,
    Permutation,
    ResourceLimitError,
    Universe,
    Word,
    decode,
    encode,
    enumerate_universe,
    format_word,
    is_sorted,
    parse_word,
)
from .gentree import RuleSet, TreeLabel, expand, level_counts, rule_consistency_check
from .layers import (
    WDParameters,
    count_by_layer_number,
    count_layered,
    layer_count,
    layer_decomposition,
    wd_count_brute,
    wd_count_formula,
)
from .machines import (
    MachineConfig,
    depth_limited_pop_stack_sort,
    depth_limited_stack_sort,
    is_sortable,
    machine_basis,
    pop_stack_sort,
    simulate,
    sortable_by_search,
    stack_sort,
    tortoise_pop_stack_sort,
    two_one_pop_stack_depth2_sort,
)
from .patterns import (
    Basis,
    Pattern,
    avoids_all,
    contains,
    count_avoiders,
    occurrence_count,
    parse_basis,
)
