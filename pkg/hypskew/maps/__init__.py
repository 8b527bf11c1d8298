from hypskew.core.maps import KINDS
from hypskew.core.maps import MapSpec
from hypskew.core.maps import MapUnderTest
from hypskew.core.maps import compose_maps
from hypskew.core.maps import make_map
from hypskew.core.maps import radial_power
