"""Association-rule mining and feature-importance ranking."""

from .apriori import frequent_itemsets_apriori, mine_apriori
from .fpgrowth import frequent_itemsets_fpgrowth, mine_fpgrowth
from .importance import ForestConfig, ImportanceRanking, rank_features
from .rules import AssociationRule, rules_from_itemsets
from .transactions import transactionize

__all__ = [
    "frequent_itemsets_apriori",
    "mine_apriori",
    "frequent_itemsets_fpgrowth",
    "mine_fpgrowth",
    "ForestConfig",
    "ImportanceRanking",
    "rank_features",
    "AssociationRule",
    "rules_from_itemsets",
    "transactionize",
]
