"""Degree-monotone paths, edge colorings of K_n, and small Ramsey-type searches."""
