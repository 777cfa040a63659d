"""freqmine: Apriori frequent itemsets, association rules and a WEKA-style associator."""

__version__ = "0.1.0"
