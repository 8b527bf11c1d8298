from hypskew import cli
from hypskew import maps
from hypskew import quotient
from hypskew.core.chain import ChainValidation
from hypskew.core.chain import TriangleChain
from hypskew.core.chain import build_chain
from hypskew.core.chain import fan_about_vertex
from hypskew.core.chain import length_bound
from hypskew.core.chain import validate_chain
from hypskew.core.disk import BallPoint
from hypskew.core.disk import HPoint
from hypskew.core.disk import bilipschitz_constants
from hypskew.core.disk import cayley_to_disk
from hypskew.core.disk import cayley_to_halfplane
from hypskew.core.disk import dist_ball
from hypskew.core.disk import dist_disk
from hypskew.core.disk import dist_halfplane
from hypskew.core.disk import hyperbolic_density
from hypskew.core.disk import koebe_ratio
from hypskew.core.disk import pseudo_distance
from hypskew.core.disk import quasihyperbolic_density
from hypskew.core.disk import sample_ball
from hypskew.core.distortion import angle_perturbation_bound
from hypskew.core.distortion import euclidean_ratio
from hypskew.core.distortion import growth_bounds_fit
from hypskew.core.distortion import growth_eta_bound
from hypskew.core.distortion import h_euclid
from hypskew.core.distortion import h_rho
from hypskew.core.distortion import h_rho_scan
from hypskew.core.distortion import hyperbolic_circle_point
from hypskew.core.distortion import hyperbolic_ratio
from hypskew.core.distortion import image_skew
from hypskew.core.distortion import power_eta
from hypskew.core.distortion import qs_ratio_scan
from hypskew.core.distortion import ratio_bound_scan
from hypskew.core.distortion import sample_triples
from hypskew.core.distortion import skew_scan
from hypskew.core.errors import ConfigError
from hypskew.core.errors import DegenerateError
from hypskew.core.errors import DegenerateGeometryWarning
from hypskew.core.errors import DomainError
from hypskew.core.errors import EquivarianceError
from hypskew.core.errors import ExperimentError
from hypskew.core.errors import MapRangeError
from hypskew.core.errors import NoProgressError
from hypskew.core.errors import NumericError
from hypskew.core.errors import SolverError
from hypskew.core.geodesic import GeodesicSegment
from hypskew.core.geodesic import angle_at_vertex
from hypskew.core.geodesic import geodesic_midpoint
from hypskew.core.geodesic import law_of_cosines_angle
from hypskew.core.maps import MapSpec
from hypskew.core.maps import MapUnderTest
from hypskew.core.maps import compose_maps
from hypskew.core.maps import make_map
from hypskew.core.mobius import MobiusMap
from hypskew.core.mobius import mobius_apply
from hypskew.core.mobius import mobius_compose
from hypskew.core.mobius import mobius_invert
from hypskew.core.report import DistortionReport
from hypskew.core.rotation import RotationMap
from hypskew.core.rotation import beltrami_fd
from hypskew.core.rotation import beltrami_rot0
from hypskew.core.rotation import beltrami_rot0_exact
from hypskew.core.rotation import max_dilatation
from hypskew.core.rotation import rot0
from hypskew.core.rotation import rot0_inverse
from hypskew.core.rotation import rotation_angle
from hypskew.core.rotation import rotw
from hypskew.core.rotation import rotw_inverse
from hypskew.core.triangle import EqTriangle
from hypskew.core.triangle import Triangle
from hypskew.core.triangle import centroid
from hypskew.core.triangle import contains_point
from hypskew.core.triangle import delta_constant
from hypskew.core.triangle import dist_to_triangle
from hypskew.core.triangle import equilateral_from_side
from hypskew.core.triangle import inscribed_radii
from hypskew.core.triangle import side_to_angle
from hypskew.core.triangle import side_to_vertex
from hypskew.core.triangle import skew_euclid
from hypskew.core.triangle import skew_hyp
from hypskew.core.triangle import vertex_to_angle
from hypskew.core.triangle import vertex_to_side


__all__ = []


# Dynamically get the version of the installed module
try:
    import importlib.metadata

    __version__ = importlib.metadata.version(__name__)
except Exception:  # pragma: no cover
    importlib = None  # pragma: no cover
finally:
    del importlib
