"""olhgen: construction, expansion, search, and exact verification of
orthogonal and nearly orthogonal Latin hypercube designs."""

from .core import (
    CorrelationReport,
    DesignMatrix,
    Recipe,
    SignMatrix,
    WeightSet,
    brute_force_no_olh,
    column_sum_of_squares,
    correlation,
    is_latin_hypercube,
    is_orthogonal,
    levels_for,
    olh_exists,
    prop4_weights,
)
from .errors import (
    BudgetExceededError,
    ConditionViolationError,
    DegenerateColumnError,
    InvalidArgumentError,
    NoOlhExistsError,
    NotInCatalogError,
    OlhgenError,
    ParseError,
    UnsupportedOrderError,
)
from .seeds import (
    CatalogEntry,
    SymbolicFoldMatrix,
    fold_olh2,
    full_table1,
    hadamard,
    hadamard_supported,
    instantiate_fold,
    nearly_orthogonal_16x15,
    seed_olh,
    standard_fold_olh,
    table3_matrix,
)
from .search import SearchConfig, SearchResult, add_column, search_nolh, search_olh, switch_delta

__version__ = "0.1.0"
