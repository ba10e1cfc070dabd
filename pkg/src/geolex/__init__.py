"""geolex: per-state distributional maps over a geolocated blog corpus."""

from .analytics import (
    CityDot,
    ProportionVector,
    category_map,
    city_density,
    density_map,
    facet_map,
    word_map,
)
from .choropleth import ChoroplethSpec, bin_quantile, to_csv, to_svg
from .index import CorpusIndex, build_index, load_index, merge, save_index
from .ingest import (
    Profile,
    RawPost,
    RawProfileRecord,
    Rejection,
    TokenizedPost,
    normalize_facets,
    strip_html,
    tokenize,
)
from .lexicon import (
    Category,
    Lexicon,
    Matcher,
    Pattern,
    compile_matcher,
    load_lexicon_dir,
    match_token,
    parse_dic,
    parse_theme_list,
    serialize_dic,
)
from .server import create_app
from .states import STATES, StateId, extract_city, normalize_state
from .stats import (
    CategoryPairReport,
    CorrelationResult,
    compare_categories,
    correlation_extremes,
    rank_with_ties,
    read_state_vector_csv,
    spearman,
)

__version__ = "0.1.0"

__all__ = [
    "CategoryPairReport",
    "Category",
    "ChoroplethSpec",
    "CityDot",
    "CorpusIndex",
    "CorrelationResult",
    "Lexicon",
    "Matcher",
    "Pattern",
    "Profile",
    "ProportionVector",
    "RawPost",
    "RawProfileRecord",
    "Rejection",
    "STATES",
    "StateId",
    "TokenizedPost",
    "bin_quantile",
    "build_index",
    "category_map",
    "city_density",
    "compare_categories",
    "compile_matcher",
    "correlation_extremes",
    "create_app",
    "density_map",
    "extract_city",
    "facet_map",
    "load_index",
    "load_lexicon_dir",
    "match_token",
    "merge",
    "normalize_facets",
    "normalize_state",
    "parse_dic",
    "parse_theme_list",
    "rank_with_ties",
    "read_state_vector_csv",
    "save_index",
    "serialize_dic",
    "spearman",
    "strip_html",
    "to_csv",
    "to_svg",
    "tokenize",
    "word_map",
]
