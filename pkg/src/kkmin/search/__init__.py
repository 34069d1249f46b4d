from .cache import ResultCache, default_cache_path
from .constructions import (CounterexampleReport, construct_disjoint_cliques, construct_matched_clique,
                            counterexample_check)
from .exact import BudgetExhausted, clear_memo, connected_lower_bound, min_edges_exact
from .oracle import brute_force_oracle
from .problem import SearchProblem, SearchResult, is_feasible
