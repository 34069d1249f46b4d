from .bounds import BoundsParams, b_upper_bound, clique_count_bounds, decay_bound, theta
from .cliques import CliqueFamily, PreconditionError
from .peeling import ALPHA, PeelingTrace, PeelStep, ZPartition, b_interval, peel
from .regularize import RegularizeReport, check_regularize_properties, regularize
from .rewrites import (GreedyResult, JResult, LPrimeResult, SingleNeighbourStructure, build_J,
                       build_Lprime, greedy_independent_set, lambda_one_structure)
