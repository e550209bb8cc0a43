from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from typing import Optional

from graphModel import Graph, Triangle, enumerate_triangles

from .composites import build_part, gen_chain_graft, gen_disjoint, gen_stitched_bar
from .errors import BadGeneratorSpec
from .generators import gen_triangle_bridge, gen_triangle_chain, gen_triangle_circuit, gen_triangle_cycle, gen_wheel
from .orderings import gen_trilateration, gen_wheel_extension
from .struct.GeneratedInstance import GeneratedInstance
from .trees import (
    EXTENSION_PLANS,
    TREE_PLANS,
    gen_triangle_net,
    gen_triangle_notch,
    gen_triangle_tree,
    random_tree_plan,
    spread_net_plan,
)

logger = logging.getLogger("barClasses.spec")

FAMILIES = (
    "wheel", "chain", "cycle", "circuit", "bridge", "tree", "notch", "net",
    "trilat", "wheelext", "stitched", "graft", "disjoint",
)

_PART = re.compile(r"^([a-z]+)(\d+)$")


def _stream_witness(stream) -> list[list[int]]:
    return [t.to_list() for t in stream]


@dataclass
class GeneratorSpec:
    """Parsed `family:arg[,key=value]...` generator string.

    Examples: `cycle:8`, `cycle:8,zigzag=1`, `tree:branched`, `tree:star,m=5`,
    `notch:tree=claw`, `net:linked`, `net:m=12,ext=2,seed=0`, `trilat:n=10,seed=1`,
    `wheelext:sizes=5-5,seed=2`, `stitched:wheel6+circuit6,seed=1`,
    `graft:bar=wheel6,m=3`, `disjoint:wheel4+wheel4`.
    """

    family: str
    args: list[str] = field(default_factory=list)
    options: dict[str, str] = field(default_factory=dict)

    @classmethod
    def parse(cls, text: str) -> "GeneratorSpec":
        family, _, rest = text.strip().partition(":")
        if family not in FAMILIES:
            raise BadGeneratorSpec(family or text, f"family must be one of {', '.join(FAMILIES)}")
        args, options = [], {}
        for item in filter(None, rest.split(",")):
            if "=" in item:
                k, _, v = item.partition("=")
                if not k or not v:
                    raise BadGeneratorSpec(item, "expected key=value")
                options[k] = v
            else:
                args.append(item)
        return cls(family, args, options)

    def __str__(self) -> str:
        items = self.args + [f"{k}={v}" for k, v in self.options.items()]
        return f"{self.family}:{','.join(items)}" if items else self.family

    # -- Argument access -----------------------------------------------------

    def _int(self, key: str, position: Optional[int] = None, default: Optional[int] = None) -> int:
        raw = self.options.get(key)
        if raw is None and position is not None and position < len(self.args):
            raw = self.args[position]
        if raw is None:
            if default is None:
                raise BadGeneratorSpec(str(self), f"missing integer {key!r}")
            return default
        try:
            return int(raw)
        except ValueError:
            raise BadGeneratorSpec(raw, f"{key!r} must be an integer") from None

    def _name(self, key: str) -> Optional[str]:
        if key in self.options:
            return self.options[key]
        for a in self.args:
            if not a.lstrip("-").isdigit():
                return a
        return None

    def _parts(self) -> list[str]:
        raw = self.options.get("parts") or (self.args[0] if self.args else "")
        parts = []
        for token in filter(None, raw.split("+")):
            match = _PART.match(token)
            if not match:
                raise BadGeneratorSpec(token, "parts look like wheel6+circuit6")
            parts.append(f"{match.group(1)}:{match.group(2)}")
        if not parts:
            raise BadGeneratorSpec(str(self), "no parts given")
        return parts

    # -- Building ------------------------------------------------------------

    def build(self) -> GeneratedInstance:
        builder = getattr(self, f"_build_{self.family}")
        inst = builder()
        if inst.seed_triangle is None:
            tris = enumerate_triangles(inst.graph)
            inst.seed_triangle = min(tris) if tris else None
        logger.debug("Built %s nodes=%d edges=%d", inst.spec, len(inst.graph), inst.graph.num_edges)
        return inst

    def _instance(self, g: Graph, witness: dict, seed: Optional[Triangle] = None) -> GeneratedInstance:
        return GeneratedInstance(g, str(self), self.family, witness, seed)

    def _build_wheel(self) -> GeneratedInstance:
        n = self._int("n", 0)
        return self._instance(gen_wheel(n), {"hub": 0, "rim": list(range(1, n))}, Triangle(0, 1, 2))

    def _build_chain(self) -> GeneratedInstance:
        g, s = gen_triangle_chain(self._int("m", 0))
        return self._instance(g, {"stream": _stream_witness(s)}, s.first)

    def _build_cycle(self) -> GeneratedInstance:
        g, s = gen_triangle_cycle(self._int("m", 0), zigzag=bool(self._int("zigzag", None, 0)))
        return self._instance(g, {"stream": _stream_witness(s)}, s.first)

    def _build_circuit(self) -> GeneratedInstance:
        g, s, knot = gen_triangle_circuit(self._int("m", 0))
        return self._instance(g, {"stream": _stream_witness(s), "knot": knot}, s.first)

    def _build_bridge(self) -> GeneratedInstance:
        g, s, e = gen_triangle_bridge(self._int("m", 0))
        return self._instance(g, {"stream": _stream_witness(s), "bridging_edge": list(e)}, s.first)

    def _tree_plan(self, key: str = "plan"):
        name = self._name(key)
        if name in TREE_PLANS:
            return TREE_PLANS[name], None
        m = self._int("m", 0 if name is None else None)
        if name in ("linear", "chain", "star"):
            return name, m
        if name is not None:
            raise BadGeneratorSpec(name, "unknown tree plan")
        return random_tree_plan(m, self._int("seed", None, 0)), None

    def _build_tree(self) -> GeneratedInstance:
        plan, m = self._tree_plan()
        g, s = gen_triangle_tree(plan, m)
        return self._instance(g, {"stream": _stream_witness(s)}, s.first)

    def _build_notch(self) -> GeneratedInstance:
        plan, m = self._tree_plan("tree")
        g, s, apex = gen_triangle_notch(plan, m)
        return self._instance(g, {"stream": _stream_witness(s), "apex": apex}, s.first)

    def _build_net(self) -> GeneratedInstance:
        name = self._name("plan")
        if name is None and "ext" in self.options:
            plan, extension = spread_net_plan(self._int("m"), self._int("ext"), self._int("seed", None, 0))
            g, s, extended, apex = gen_triangle_net(plan, extension)
        elif name in EXTENSION_PLANS:
            g, s, extended, apex = gen_triangle_net(name)
        else:
            raise BadGeneratorSpec(str(name), f"net plan must be one of {', '.join(EXTENSION_PLANS)}, or m= with ext=")
        witness = {"stream": _stream_witness(s), "extended": extended, "apex": apex}
        return self._instance(g, witness, s.first)

    def _build_trilat(self) -> GeneratedInstance:
        g, ordering = gen_trilateration(self._int("n", 0), self._int("seed", 1, 0))
        return self._instance(g, {"ordering": ordering}, Triangle.of(*ordering[:3]))

    def _build_wheelext(self) -> GeneratedInstance:
        raw = self.options.get("sizes") or (self.args[0] if self.args else "")
        try:
            sizes = [int(s) for s in raw.split("-") if s]
        except ValueError:
            raise BadGeneratorSpec(raw, "sizes look like 5-5-6") from None
        g, ordering, wheels = gen_wheel_extension(sizes, self._int("seed", None, 0))
        witness = {"ordering": ordering, "wheels": [{"hub": h, "rim": list(r)} for h, r in wheels]}
        return self._instance(g, witness, Triangle.of(*ordering[:3]))

    def _build_stitched(self) -> GeneratedInstance:
        g, parts = gen_stitched_bar(self._parts(), self._int("seed", None, 0))
        return self._instance(g, {"parts": [p.to_dict() for p in parts]})

    def _build_graft(self) -> GeneratedInstance:
        bar = self.options.get("bar") or (self.args[0] if self.args else "")
        match = _PART.match(bar)
        if not match:
            raise BadGeneratorSpec(bar, "bar looks like wheel6")
        g, bar_nodes, tail = gen_chain_graft(f"{match.group(1)}:{match.group(2)}", self._int("m", None, 2))
        return self._instance(g, {"bar_nodes": bar_nodes, "chain_nodes": tail})

    def _build_disjoint(self) -> GeneratedInstance:
        graphs = [build_part(p).graph for p in self._parts()]
        g = gen_disjoint(*graphs)
        offsets, start = [], 0
        for h in graphs:
            offsets.append(list(range(start, start + len(h))))
            start += len(h)
        return self._instance(g, {"components": offsets})


def generate(spec: str) -> GeneratedInstance:
    return GeneratorSpec.parse(spec).build()
