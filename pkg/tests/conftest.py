import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

from fractions import Fraction

from hypothesis import strategies as st

from convexlat.geom import Point

# Small exact coordinates keep hull/meet inputs adversarial (lots of exact
# collinearity) while staying fast.
small_coord = st.fractions(
    min_value=Fraction(-4), max_value=Fraction(4), max_denominator=4
)

points = st.builds(Point, small_coord, small_coord)


def point_sets(min_size=0, max_size=7):
    return st.lists(points, min_size=min_size, max_size=max_size).map(tuple)


def distinct_point_sets(min_size=1, max_size=7):
    return st.lists(points, min_size=min_size, max_size=max_size, unique=True).map(tuple)
