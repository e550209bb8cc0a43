from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Optional, Union

from graphModel import Graph, Triangle

from .errors import InsufficientLeaves, InvalidPlan, NotANet, TooSmall
from .recognizers import leaf_knots, verify_net
from .struct.TriangleStream import TriangleStream

logger = logging.getLogger("barClasses.trees")


@dataclass(frozen=True)
class TreePlan:
    """Declarative triangle-tree layout.

    Parameters:
        steps: One (parent, side) pair per triangle after the first. `parent` is
            the 0-based index of an earlier triangle; `side` picks the parent's
            edge opposite its local node 0, 1 or 2. A triangle's local nodes are
            the two ends of the edge it was built on followed by its new node,
            so side 2 is only open on the first triangle.
        name: Optional label used in reports.
    """

    steps: tuple[tuple[int, int], ...]
    name: str = ""

    @property
    def size(self) -> int:
        return len(self.steps) + 1

    def to_dict(self) -> dict:
        return {"name": self.name, "steps": [list(s) for s in self.steps]}

    @classmethod
    def from_dict(cls, data: dict) -> "TreePlan":
        return cls(tuple((int(p), int(s)) for p, s in data["steps"]), str(data.get("name", "")))


@dataclass(frozen=True)
class ExtensionPlan:
    """Extended nodes to add to a triangle tree.

    Parameters:
        attachments: One tuple of tokens per extended node. `p<i>` names the
            node created by triangle i (i >= 1), `n<id>` a raw tree node id,
            and `e<j>` the j-th earlier extended node.
        name: Optional label used in reports.
    """

    attachments: tuple[tuple[str, ...], ...]
    name: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "attachments": [list(a) for a in self.attachments]}


TREE_PLANS: dict[str, TreePlan] = {
    "branched": TreePlan(
        ((0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (5, 0), (2, 1), (7, 0), (8, 0), (9, 0)), "branched"
    ),
    "claw": TreePlan(((0, 0), (0, 1), (0, 2), (1, 0)), "claw"),
    "twinclaw": TreePlan(((0, 0), (0, 1), (0, 2), (1, 0), (4, 0), (4, 1)), "twinclaw"),
}

EXTENSION_PLANS: dict[str, tuple[str, ExtensionPlan]] = {
    "loose": ("twinclaw", ExtensionPlan((("p2", "p3", "p1"), ("p5", "p6", "p4")), "loose")),
    "linked": ("twinclaw", ExtensionPlan((("p2", "p3", "p1"), ("e0", "p5", "p6")), "linked")),
}


def linear_plan(m: int) -> TreePlan:
    return TreePlan(tuple((i, 0) for i in range(m - 1)), f"linear{m}")


def star_plan(m: int) -> TreePlan:
    """Central triangle with legs grown round-robin on its three sides."""
    steps: list[tuple[int, int]] = []
    tails = [0, 0, 0]
    for j in range(1, m):
        leg = (j - 1) % 3
        if j <= 3:
            steps.append((0, leg))
        else:
            steps.append((tails[leg], 0))
        tails[leg] = j
    return TreePlan(tuple(steps), f"star{m}")


def random_tree_plan(m: int, rng_seed: int) -> TreePlan:
    if m < 1:
        raise TooSmall("triangle tree", m, 1)
    rng = random.Random(rng_seed)
    free: list[tuple[int, int]] = [(0, 0), (0, 1), (0, 2)]
    steps = []
    for j in range(1, m):
        slot = free.pop(rng.randrange(len(free)))
        steps.append(slot)
        free.extend([(j, 0), (j, 1)])
    return TreePlan(tuple(steps), f"random{m}s{rng_seed}")


def resolve_tree_plan(plan: Union[TreePlan, str], m: Optional[int] = None) -> TreePlan:
    if isinstance(plan, TreePlan):
        resolved = plan
    elif plan in TREE_PLANS:
        resolved = TREE_PLANS[plan]
    elif plan in ("linear", "chain"):
        resolved = linear_plan(m or 1)
    elif plan == "star":
        resolved = star_plan(m or 1)
    else:
        raise InvalidPlan(f"Unknown tree plan {plan!r}")
    if m is not None and resolved.size != m:
        raise InvalidPlan(f"Plan {resolved.name or plan!r} builds {resolved.size} triangles, asked for {m}")
    return resolved


def _build_tree(plan: TreePlan) -> tuple[list[Triangle], list[tuple[int, int, int]]]:
    local: list[tuple[int, int, int]] = [(0, 1, 2)]
    used: set[tuple[int, int]] = set()
    next_id = 3
    for j, (parent, side) in enumerate(plan.steps, start=1):
        if not 0 <= parent < j:
            raise InvalidPlan(f"Step {j}: parent {parent!r} must name an earlier triangle")
        if side not in (0, 1, 2) or (side == 2 and parent != 0):
            raise InvalidPlan(f"Step {j}: side {side!r} is not open on triangle {parent}")
        if (parent, side) in used:
            raise InvalidPlan(f"Step {j}: side {side} of triangle {parent} already carries a triangle")
        used.add((parent, side))
        x, y = [n for k, n in enumerate(local[parent]) if k != side]
        local.append((x, y, next_id))
        next_id += 1
    return [Triangle.of(*t) for t in local], local


def gen_triangle_tree(arity_plan: Union[TreePlan, str], m: Optional[int] = None) -> tuple[Graph, TriangleStream]:
    plan = resolve_tree_plan(arity_plan, m)
    tris, _ = _build_tree(plan)
    stream = TriangleStream(tuple(tris))
    return Graph(stream.nodes(), stream.edges()), stream


def gen_triangle_notch(tree_plan: Union[TreePlan, str], m: Optional[int] = None) -> tuple[Graph, TriangleStream, int]:
    """Tree plus one apex adjacent to every leaf knot."""
    g, stream = gen_triangle_tree(tree_plan, m)
    knots = sorted(set(leaf_knots(stream).values()))
    if len(knots) < 3:
        raise InsufficientLeaves(len(knots))
    apex = max(g.nodes) + 1
    return g.with_edges((apex, k) for k in knots), stream, apex


def _resolve_token(token: str, local, extended: list[int]) -> int:
    kind, _, idx = token[0], None, token[1:]
    if not idx.isdigit():
        raise InvalidPlan(f"Bad attachment token {token!r}")
    i = int(idx)
    if kind == "p":
        if not 1 <= i < len(local):
            raise InvalidPlan(f"Attachment {token!r} names no tree triangle pendant")
        return local[i][2]
    if kind == "n":
        if not any(i in t for t in local):
            raise InvalidPlan(f"Attachment {token!r} names no tree node")
        return i
    if kind == "e":
        if not 0 <= i < len(extended):
            raise InvalidPlan(f"Attachment {token!r} must name an earlier extended node")
        return extended[i]
    raise InvalidPlan(f"Bad attachment token {token!r}")


def gen_triangle_net(
    tree_plan: Union[TreePlan, str],
    extension_plan: Union[ExtensionPlan, str, None] = None,
) -> tuple[Graph, TriangleStream, list[int], int]:
    """Tree plus extended nodes, verified against the net definition.

    Returns the graph, the tree stream, the extended nodes in order and the apex.
    A plan name from EXTENSION_PLANS may be passed alone as `tree_plan`.
    """
    if extension_plan is None:
        if not isinstance(tree_plan, str) or tree_plan not in EXTENSION_PLANS:
            raise InvalidPlan(f"No extension plan given for {tree_plan!r}")
        tree_plan, extension_plan = EXTENSION_PLANS[tree_plan]
    elif isinstance(extension_plan, str):
        if extension_plan not in EXTENSION_PLANS:
            raise InvalidPlan(f"Unknown extension plan {extension_plan!r}")
        extension_plan = EXTENSION_PLANS[extension_plan][1]

    plan = resolve_tree_plan(tree_plan)
    tris, local = _build_tree(plan)
    stream = TriangleStream(tuple(tris))
    next_id = max(stream.nodes()) + 1
    extended: list[int] = []
    edges = list(stream.edges())
    for tokens in extension_plan.attachments:
        v = next_id
        next_id += 1
        targets = {_resolve_token(t, local, extended) for t in tokens}
        edges.extend((v, t) for t in targets)
        extended.append(v)
    g = Graph(range(next_id), edges)
    verdict = verify_net(g, tris, extended, apex=extended[-1] if extended else None)
    if not verdict.ok:
        raise NotANet(verdict.reason)
    logger.debug("Generated net plan=%s nodes=%d apex=%d", extension_plan.name, len(g), verdict.apex)
    return g, stream, extended, extended[-1]


SPREAD_TRIES = 64


def spread_extension(stream: TriangleStream, count: int) -> ExtensionPlan:
    """Extended nodes hung on the leaf knots in a row.

    The first takes three knots, each later one its predecessor and two
    more, and the last every knot still free. A single extended node takes
    all of them.
    """
    knots = sorted(set(leaf_knots(stream).values()))
    needed = 3 + 2 * (count - 1)
    if count < 1 or len(knots) < needed:
        raise InsufficientLeaves(len(knots), needed, f"A net with {count} extended nodes")
    head, rest = (knots[:3], knots[3:]) if count > 1 else (knots, [])
    attachments = [tuple(f"n{k}" for k in head)]
    for j in range(1, count):
        take = rest if j == count - 1 else rest[:2]
        rest = rest[len(take):]
        attachments.append((f"e{j - 1}", *(f"n{k}" for k in take)))
    return ExtensionPlan(tuple(attachments), f"spread{count}")


def spread_net_plan(m: int, count: int, rng_seed: int = 0) -> tuple[TreePlan, ExtensionPlan]:
    """First random tree of m triangles, from `rng_seed` on, with room for a spread extension."""
    leaves = 0
    for seed in range(rng_seed, rng_seed + SPREAD_TRIES):
        plan = random_tree_plan(m, seed)
        tris, _ = _build_tree(plan)
        stream = TriangleStream(tuple(tris))
        try:
            return plan, spread_extension(stream, count)
        except InsufficientLeaves as e:
            leaves = max(leaves, e.leaves)
    raise InsufficientLeaves(leaves, 3 + 2 * (count - 1), f"A net with {count} extended nodes")
