"""Block combinatorics for centraliser algebras of symmetric groups."""

from .partitions import (
    EMPTY,
    Hook,
    Partition,
    PartitionError,
    ResidueMultiset,
    addable_hooks,
    add_hook,
    e_content,
    enumerate_partitions,
    make_partition,
    removable_hooks,
    remove_hook,
)
from .abacus import (
    AbacusDisplay,
    AbacusError,
    check_hook_dichotomy,
    enumerate_block_partitions,
    from_partition,
    hook_move_available,
    is_core,
    p_core,
    p_quotient,
    p_weight,
    to_partition,
)
from .skew import (
    ArrowGraph,
    Belt,
    PShape,
    SkewError,
    SkewShape,
    arrow_graph,
    enumerate_belts,
    make_skew,
    p_shape,
    shape_from_arrow_graph,
    skew_content,
    standard_tableaux_sequences,
)
from .characters import (
    CharacterError,
    DistanceSet,
    FormalCharacter,
    character_of,
    character_sum_check,
    distance,
    linkage_test,
    maximal_shapes,
    refinements,
    shares_term,
    unique_cover_check,
)
from .blocks import (
    BlockError,
    CombinatorialBlock,
    DecompositionMatrix,
    LinkagePath,
    TheoremViolation,
    belt_row_shape,
    block_report,
    clockwise_linkage_check,
    decomposition_matrix,
    enumerate_block,
    find_closer_shape,
    is_connected,
    linkage_diameter,
    linkage_path,
    mu_lambda,
)
from .hecke import (
    BeltModule,
    HeckeError,
    RelationReport,
    SimplicityReport,
    belt_module,
    module_character,
    simplicity_probe,
    verify_relations,
)

__version__ = "0.1.0"
