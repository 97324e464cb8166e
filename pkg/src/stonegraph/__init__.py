"""stonegraph: countable Stone spaces as ordinal intervals, executably.

The package models the countable compact scattered spaces, classified up
to homeomorphism by a rank ordinal and a finite count of maximal-rank
points, as ordinal intervals in Cantor normal form.  On top of the
ordinal substrate it provides clopen-set algebra with symbolic rank
counting, good partitions and their shift graph with certified distance
bounds, the diameter-3 graph of self-similar one-point spaces, lazy
back-and-forth homeomorphism synthesis, the height ultrametric on
partitions of limit-rank spaces, and the coarse classification of the
homeomorphism groups.
"""

from .clopen import (
    CharPair,
    ClopenSet,
    Count,
    EMPTY_PAIR,
    INFINITE,
    Interval,
    Space,
    char_pair,
    combine,
    count_rank,
    find_copy,
    parse_clopen,
    split_units,
)
from .height import HeightMode, rel_height, stab_level, stab_witness
from .homeo import (
    GroupClass,
    Homeomorphism,
    are_homeomorphic,
    build_homeo,
    classify_group,
    map_partition,
    partition_map,
)
from .ordinals import (
    OMEGA,
    ONE,
    ZERO,
    Ordinal,
    add,
    compare,
    divmod_omega_pow,
    fundamental_seq,
    is_limit,
    is_successor,
    nat,
    omega_pow_mul,
    parse,
    point_rank,
    show,
    sub,
    successor,
    w_pow,
)
from .partitions import (
    GoodPartition,
    ShiftMove,
    basepoint,
    is_adjacent,
    random_partition,
    shift,
    validate,
)
from .selfsim import (
    SelfSimConfig,
    SelfSimVertex,
    base_vertex,
    edge_involution,
    random_vertex,
    short_path,
    ss_adjacent,
)
from .shiftgraph import (
    DistanceCertificate,
    Path,
    ball_dot,
    bfs_distance,
    certificate,
    connect_path,
    defect,
    neighbors,
)

__version__ = "0.1.0"
