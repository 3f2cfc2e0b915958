"""Builders for ideal families with known depth functions."""

from .families import (
    DepthFunctionSpec,
    Prediction,
    VeroneseSpec,
    decreasing_f_poset,
    depth_function_prediction,
    ideal_for_decreasing_f,
    ideal_for_increasing_f,
    nonmonotone_example,
    nonmonotone_prediction,
    poset_prediction,
    predicted_depth_veronese,
    predicted_sqfree_veronese,
    prescribed_depth_dim,
    squarefree_veronese,
    squarefree_veronese_prediction,
    staircase_witness,
    staircase_witness_holds,
    veronese_prediction,
    veronese_type,
)
from .graphs import (
    Graph,
    complement,
    complete_graph,
    cycle_graph,
    edge_ideal,
    is_chordal,
    net_graph,
    random_chordal_complement_graph,
)
from .posets import (
    AntichainSequence,
    Poset,
    all_posets,
    antichain_poset,
    chain_poset,
    delta,
    generated_ideal,
    hp_ideal,
    hp_power_order,
    is_antichain,
    ordinal_sum,
    poset_ideals,
    predicted_depth_hp,
    rank,
)
