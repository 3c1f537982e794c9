"""Constructive proper distinguishing list colorings."""
from .brooks import brooks_list_coloring, check_brooks_preconditions, is_kdd
from .composition import col_dl_coloring, default_part_solver, join_compose, prime_power_recolor
from .cycles import color_cycle, color_path, cycle_list_size, path_list_size
from .partition import (PartitionPlan, PartSolver, all_distinct_solver, capped_partition_bound,
                        capped_partition_coloring, capped_partition_preconditions, compose_report,
                        lovasz_partition, part_solver, partition_compose)
from .trees import cycle_of, rooted_tree_coloring, unicyclic_coloring

__all__ = [
    "PartSolver", "PartitionPlan", "all_distinct_solver", "brooks_list_coloring",
    "capped_partition_bound", "capped_partition_coloring", "capped_partition_preconditions",
    "check_brooks_preconditions", "col_dl_coloring", "color_cycle", "color_path",
    "compose_report", "cycle_list_size", "cycle_of", "default_part_solver", "is_kdd",
    "join_compose", "lovasz_partition", "part_solver", "partition_compose", "path_list_size",
    "prime_power_recolor", "rooted_tree_coloring", "unicyclic_coloring",
]
