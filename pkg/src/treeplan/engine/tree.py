"""Search tree vertices.

Visit-count convention: a node's N counts backups through its incoming edge;
the root's N counts every backup (its "virtual visit"). Hence after every
rollout N(root) equals the sum of its children's N, and every other internal
node satisfies N = 1 + sum(children N) because it was executed exactly once
itself before growing children. Eq-style selection ratios therefore always
see a parent N >= 1 whenever any child has been visited.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from ..tools import ArgumentDraft, Context


@dataclass
class SearchNode:
    id: int
    parent: Optional[int]
    tool: Optional[str]
    draft: Optional[ArgumentDraft]
    context: Context
    depth: int
    r_pre: float = 1.0
    visit_count: int = 0
    value: float = 0.0
    last_r_post: Optional[float] = None
    expandable: bool = True
    terminal: bool = False
    executed: bool = False
    output: Any = None  # ToolOutput once executed
    children: list[int] = field(default_factory=list)

    @property
    def is_root(self) -> bool:
        return self.parent is None


class SearchTree:
    def __init__(self, root_context: Context):
        self.nodes: dict[int, SearchNode] = {}
        root = SearchNode(
            id=0, parent=None, tool=None, draft=None, context=root_context, depth=0
        )
        root.executed = True  # the root's "execution" is the query itself
        self.nodes[0] = root
        self.root = root
        self._next_id = 1

    def add_child(
        self, parent: SearchNode, tool: str, draft: ArgumentDraft, r_pre: float
    ) -> SearchNode:
        node = SearchNode(
            id=self._next_id,
            parent=parent.id,
            tool=tool,
            draft=draft,
            context=parent.context,  # replaced by the executed context later
            depth=parent.depth + 1,
            r_pre=r_pre,
        )
        self._next_id += 1
        self.nodes[node.id] = node
        parent.children.append(node.id)
        return node

    def get(self, node_id: int) -> SearchNode:
        return self.nodes[node_id]

    def path_to_root(self, node: SearchNode) -> list[SearchNode]:
        """Nodes from `node` up to and including the root."""
        path = [node]
        while path[-1].parent is not None:
            path.append(self.nodes[path[-1].parent])
        return path

    def snapshot(self) -> list[dict[str, Any]]:
        out = []
        for node in self.nodes.values():
            out.append(
                {
                    "id": node.id,
                    "parent": node.parent,
                    "tool": node.tool,
                    "depth": node.depth,
                    "n": node.visit_count,
                    "q": node.value,
                    "r_pre": node.r_pre,
                    "last_r_post": node.last_r_post,
                    "expandable": node.expandable,
                    "terminal": node.terminal,
                    "executed": node.executed,
                    "children": list(node.children),
                }
            )
        return out
