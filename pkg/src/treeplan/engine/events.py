"""Structured event log and offline invariant verification.

Every run logs expansions (with the full scored candidate set), executions,
post scores, prunings and backup paths. The log plus the final tree snapshot
are enough to recompute visit counts and running means from scratch, so the
engine's bookkeeping can be audited without re-running the search.
"""

from __future__ import annotations

from typing import Any, Iterable, Mapping

Q_TOLERANCE = 1e-12


def verify_search_invariants(
    snapshot: Iterable[Mapping[str, Any]], events: Iterable[Mapping[str, Any]]
) -> list[str]:
    """Replay the event log; return a list of violation descriptions.

    Checks, in replay order:
    - running-mean equivalence: each node's final Q equals the arithmetic
      mean of the values backed up through its incoming edge (<= 1e-12);
    - visit-count conservation after every rollout (root: N == sum children;
      other internal nodes: N == 1 + sum children, the 1 being the node's own
      execution backup);
    - pruning safety: no expansion adds children to a node after it was
      marked non-expandable.
    """
    errors: list[str] = []
    nodes = {entry["id"]: dict(entry) for entry in snapshot}

    n: dict[int, int] = {node_id: 0 for node_id in nodes}
    backed: dict[int, list[float]] = {node_id: [] for node_id in nodes}
    children: dict[int, list[int]] = {node_id: [] for node_id in nodes}
    non_expandable: set[int] = set()
    executed: set[int] = set()

    for event in events:
        kind = event.get("ev")
        if kind == "expand":
            node_id = event["node"]
            if node_id in non_expandable:
                errors.append(f"expansion of non-expandable node {node_id}")
            kept = event.get("kept", [])
            for child in kept:
                children[node_id].append(child["id"])
            if not kept:
                non_expandable.add(node_id)
        elif kind == "execute":
            executed.add(event["node"])
        elif kind == "post":
            if event.get("pruned") or event.get("terminal"):
                non_expandable.add(event["node"])
        elif kind == "exhausted":
            non_expandable.add(event["node"])
        elif kind == "backprop":
            value = event["value"]
            for node_id in event["path"]:
                n[node_id] += 1
                backed[node_id].append(value)
        elif kind == "rollout":
            for node_id, kids in children.items():
                if not kids:
                    continue
                expected = sum(n[k] for k in kids)
                if nodes[node_id]["parent"] is not None:
                    expected += 1 if node_id in executed and n[node_id] > 0 else 0
                if n[node_id] != expected:
                    errors.append(
                        f"rollout {event.get('i')}: visit conservation broken at node "
                        f"{node_id}: N={n[node_id]} expected={expected}"
                    )

    for node_id, node in nodes.items():
        if n[node_id] != node["n"]:
            errors.append(
                f"node {node_id}: replayed N={n[node_id]} differs from snapshot {node['n']}"
            )
        values = backed[node_id]
        mean = sum(values) / len(values) if values else 0.0
        if abs(mean - node["q"]) > Q_TOLERANCE:
            errors.append(
                f"node {node_id}: replayed mean {mean!r} differs from Q {node['q']!r}"
            )
    return errors
