"""Level-wise Apriori frequent-itemset mining."""

from __future__ import annotations

from itertools import combinations

from .rules import AssociationRule, check_mining_args, rules_from_itemsets


def frequent_itemsets_apriori(
    transactions: list[set[str]], min_support: float
) -> dict[frozenset, float]:
    n = len(transactions)
    sets = [frozenset(t) for t in transactions]
    counts: dict[str, int] = {}
    for t in sets:
        for item in t:
            counts[item] = counts.get(item, 0) + 1
    frequent: dict[frozenset, float] = {}
    level = []
    for item in sorted(counts):
        support = counts[item] / n
        if support >= min_support:
            frequent[frozenset([item])] = support
            level.append((item,))

    k = 1
    while level:
        k += 1
        candidates = set()
        for a, b in combinations(level, 2):
            if a[: k - 2] == b[: k - 2]:  # join on shared (k-2)-prefix
                cand = tuple(sorted(set(a) | set(b)))
                if len(cand) == k and all(
                    frozenset(sub) in frequent for sub in combinations(cand, k - 1)
                ):
                    candidates.add(cand)
        next_level = []
        for cand in sorted(candidates):
            cset = frozenset(cand)
            support = sum(1 for t in sets if cset <= t) / n
            if support >= min_support:
                frequent[cset] = support
                next_level.append(cand)
        level = sorted(next_level)
    return frequent


def mine_apriori(
    transactions, min_support: float, min_confidence: float
) -> list[AssociationRule]:
    """Classic Apriori; rules with single-item consequents."""
    check_mining_args(transactions, min_support, min_confidence)
    frequent = frequent_itemsets_apriori([set(t) for t in transactions], min_support)
    return rules_from_itemsets(frequent, min_confidence)
