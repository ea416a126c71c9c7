"""
zonelab: exact Delaunay stars, Voronoi zones, laminae and L-type cones.
"""

import warnings

warnings.simplefilter("default", DeprecationWarning)
