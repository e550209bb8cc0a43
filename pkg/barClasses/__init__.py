from .ClassLabel import ClassLabel
from .GeneratorSpec import FAMILIES, GeneratorSpec, generate
from .composites import Part, build_part, gen_chain_graft, gen_disjoint, gen_stitched_bar
from .errors import (
    BadGeneratorSpec,
    BarClassError,
    InsufficientLeaves,
    InvalidPlan,
    NotANet,
    NotCycleOrCircuit,
    SeedNotTriangle,
    TooSmall,
)
from .generators import gen_triangle_bridge, gen_triangle_chain, gen_triangle_circuit, gen_triangle_cycle, gen_wheel
from .orderings import (
    gen_trilateration,
    gen_wheel_extension,
    has_trilateration_ordering,
    has_wheel_extension_ordering,
    is_trilateration_ordering,
    trilateration_ordering,
)
from .recognizers import (
    NetVerdict,
    chain_pendants,
    circuit_knot,
    classify_stream,
    is_linked_stream,
    is_triangle_bridge,
    is_triangle_chain,
    is_triangle_circuit,
    is_triangle_cycle,
    is_triangle_tree,
    is_wheel,
    leaf_knots,
    leaf_triangles,
    stream_roles,
    tree_pendants,
    triangle_tree_order,
    verify_net,
    wheel_hub,
)
from .reduction import reduce_with_stream, spanning_reduction
from .struct import GeneratedInstance, StreamRole, TriangleStream
from .trees import (
    EXTENSION_PLANS,
    TREE_PLANS,
    ExtensionPlan,
    TreePlan,
    gen_triangle_net,
    gen_triangle_notch,
    gen_triangle_tree,
    linear_plan,
    random_tree_plan,
    resolve_tree_plan,
    spread_extension,
    spread_net_plan,
    star_plan,
)

__all__ = [
    "BadGeneratorSpec",
    "BarClassError",
    "ClassLabel",
    "EXTENSION_PLANS",
    "ExtensionPlan",
    "FAMILIES",
    "GeneratedInstance",
    "GeneratorSpec",
    "InsufficientLeaves",
    "InvalidPlan",
    "NetVerdict",
    "NotANet",
    "NotCycleOrCircuit",
    "Part",
    "SeedNotTriangle",
    "StreamRole",
    "TREE_PLANS",
    "TooSmall",
    "TreePlan",
    "TriangleStream",
    "build_part",
    "chain_pendants",
    "circuit_knot",
    "classify_stream",
    "gen_chain_graft",
    "gen_disjoint",
    "gen_stitched_bar",
    "gen_triangle_bridge",
    "gen_triangle_chain",
    "gen_triangle_circuit",
    "gen_triangle_cycle",
    "gen_triangle_net",
    "gen_triangle_notch",
    "gen_triangle_tree",
    "gen_trilateration",
    "gen_wheel",
    "gen_wheel_extension",
    "generate",
    "has_trilateration_ordering",
    "has_wheel_extension_ordering",
    "is_linked_stream",
    "is_triangle_bridge",
    "is_triangle_chain",
    "is_triangle_circuit",
    "is_triangle_cycle",
    "is_triangle_tree",
    "is_trilateration_ordering",
    "is_wheel",
    "leaf_knots",
    "leaf_triangles",
    "linear_plan",
    "random_tree_plan",
    "reduce_with_stream",
    "resolve_tree_plan",
    "spanning_reduction",
    "spread_extension",
    "spread_net_plan",
    "star_plan",
    "stream_roles",
    "tree_pendants",
    "triangle_tree_order",
    "trilateration_ordering",
    "verify_net",
    "wheel_hub",
]
