from hypskew.core.quotient import CyclicGroup
from hypskew.core.quotient import DescendedMap
from hypskew.core.quotient import QuotientPoint
from hypskew.core.quotient import descend_map
from hypskew.core.quotient import nearest_lifts
from hypskew.core.quotient import quotient_dist
from hypskew.core.quotient import quotient_qs_scan
from hypskew.core.quotient import quotient_skew
from hypskew.core.quotient import quotient_skew_scan
