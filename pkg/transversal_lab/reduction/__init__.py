"""
The gadget construction from nice monotone formulas to bipartite graphs,
its proof maps between assignments and transversals, and the taxonomy of
the graph's maximal independent sets.
"""
