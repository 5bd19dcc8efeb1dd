"""FP-growth frequent-itemset mining via an FP-tree.

Produces exactly the same frequent-itemset table as the Apriori miner: both
use the identical support predicate count / n >= min_support (same float
rounding), which the equivalence tests pin over seeded random sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .rules import AssociationRule, check_mining_args, rules_from_itemsets


@dataclass
class _FpNode:
    item: str | None
    count: int = 0
    parent: "_FpNode | None" = None
    children: dict[str, "_FpNode"] = field(default_factory=dict)


def _build_tree(
    transactions: list[list[str]], weights: list[int], counts: dict[str, int]
):
    """Insert weighted transactions sorted by (support desc, item asc)."""
    root = _FpNode(item=None)
    node_links: dict[str, list[_FpNode]] = {}
    order = {item: (-counts[item], item) for item in counts}
    for t, w in zip(transactions, weights):
        items = sorted((i for i in t if i in counts), key=order.__getitem__)
        node = root
        for item in items:
            child = node.children.get(item)
            if child is None:
                child = _FpNode(item=item, parent=node)
                node.children[item] = child
                node_links.setdefault(item, []).append(child)
            child.count += w
            node = child
    return root, node_links


def _mine(
    transactions: list[list[str]],
    weights: list[int],
    n_total: int,
    min_support: float,
    suffix: frozenset,
    out: dict[frozenset, int],
):
    counts: dict[str, int] = {}
    for t, w in zip(transactions, weights):
        for item in t:
            counts[item] = counts.get(item, 0) + w
    counts = {i: c for i, c in counts.items() if c / n_total >= min_support}
    if not counts:
        return
    _, node_links = _build_tree(transactions, weights, counts)
    # Items ascending by support (then name) so each conditional base is small.
    for item in sorted(counts, key=lambda i: (counts[i], i)):
        itemset = suffix | {item}
        out[frozenset(itemset)] = counts[item]
        base_transactions: list[list[str]] = []
        base_weights: list[int] = []
        for node in node_links[item]:
            path = []
            p = node.parent
            while p is not None and p.item is not None:
                path.append(p.item)
                p = p.parent
            if path:
                base_transactions.append(path[::-1])
                base_weights.append(node.count)
        if base_transactions:
            _mine(base_transactions, base_weights, n_total, min_support, itemset, out)


def frequent_itemsets_fpgrowth(
    transactions: list[set[str]], min_support: float
) -> dict[frozenset, float]:
    n = len(transactions)
    raw: dict[frozenset, int] = {}
    _mine([sorted(t) for t in transactions], [1] * n, n, min_support, frozenset(), raw)
    # Counting in integers then dividing keeps supports identical to Apriori's.
    return {k: v / n for k, v in raw.items()}


def mine_fpgrowth(
    transactions, min_support: float, min_confidence: float
) -> list[AssociationRule]:
    """FP-tree miner; identical contract and output to mine_apriori."""
    check_mining_args(transactions, min_support, min_confidence)
    frequent = frequent_itemsets_fpgrowth([set(t) for t in transactions], min_support)
    return rules_from_itemsets(frequent, min_confidence)
