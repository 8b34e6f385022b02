"""
Exact arithmetic in quadratic amalgams of Ore extensions: scalars, base rings, amalgams,
the DAHA of GL2 and the ideal reduction engine.
"""
