"""Association rules derived from frequent itemsets.

Rules carry a single-item consequent (standard practice). Both miners feed
the same rule generator, so their outputs are comparable set-for-set.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class AssociationRule:
    antecedent: tuple[str, ...]
    consequent: tuple[str, ...]
    support: float
    confidence: float
    lift: float

    def __post_init__(self):
        if set(self.antecedent) & set(self.consequent):
            raise ValueError("antecedent and consequent must be disjoint")

    def to_dict(self) -> dict:
        return {
            "antecedent": list(self.antecedent),
            "consequent": list(self.consequent),
            "support": self.support,
            "confidence": self.confidence,
            "lift": self.lift,
        }


def rules_from_itemsets(
    frequent: dict[frozenset, float],
    min_confidence: float,
) -> list[AssociationRule]:
    """All single-consequent rules meeting min_confidence, canonically ordered."""
    rules = []
    for itemset, support in frequent.items():
        if len(itemset) < 2:
            continue
        for consequent in itemset:
            antecedent = itemset - {consequent}
            ant_support = frequent[antecedent]
            confidence = support / ant_support
            if confidence >= min_confidence:
                cons_support = frequent[frozenset([consequent])]
                rules.append(
                    AssociationRule(
                        antecedent=tuple(sorted(antecedent)),
                        consequent=(consequent,),
                        support=support,
                        confidence=confidence,
                        lift=confidence / cons_support,
                    )
                )
    rules.sort(key=lambda r: (r.antecedent, r.consequent))
    return rules


def check_mining_args(transactions, min_support: float, min_confidence: float):
    from ..errors import EmptyTransactions

    if not transactions:
        raise EmptyTransactions("no transactions to mine")
    if not 0.0 < min_support <= 1.0:
        raise ValueError(f"min_support must be in (0, 1], got {min_support}")
    if not 0.0 < min_confidence <= 1.0:
        raise ValueError(f"min_confidence must be in (0, 1], got {min_confidence}")
