"""capkit: k-term progression-free sets in Z_m^n.

Constructions, a pair-scan verifier, coding lower bounds, subset-system
reformulation over Z_4^n, and certified branch-and-bound maxima, with a
compiled kernel core and a pure-Python fallback selected at import.
"""

__version__ = "0.1.0"

from .codes import (  # noqa: F401
    BEST_KNOWN_TABLE,
    PAPER_TABLE,
    BinaryCode,
    CodeTable,
    code_size,
    format_code,
    lexicode,
    min_distance,
)
from .constructions import (  # noqa: F401
    BoundBreakdown,
    ConstructionError,
    DigitReport,
    DigitSet,
    Mod11Cascade,
    ShellSpec,
    TheoreticalConstants,
    alpha_estimate,
    behrend_shell,
    classify_digit_aps,
    coding_lower_bound,
    coding_system,
    equal_frequency_set,
    komlos_set,
    komlos_system,
    mod11_k4,
    mod11_pattern_elimination,
    primepower_digits_A,
    primepower_digits_B,
    product,
    r4_system,
    salem_spencer_odd,
    shell_counts,
    theoretical_constants,
)
from .groups import (  # noqa: F401
    ApWitness,
    GroupParams,
    GroupVec,
    ap_terms,
    decode,
    encode,
    is_proper,
    make_witness,
    vec,
)
from .kernels import BACKEND  # noqa: F401
from .pointset import PointSet, load_capset, read_capset  # noqa: F401
from .reformulation import (  # noqa: F401
    StarViolation,
    SubsetSystem,
    all_subspaces,
    check_star,
    check_star_star,
    is_linear_subspace,
    load_capsys,
    materialize,
    random_subspace_system,
    read_capsys,
    save_capsys,
    system_from_set,
    total_size,
    write_capsys,
)
from .search import (  # noqa: F401
    SearchConfig,
    SearchResult,
    greedy_lower,
    max_apfree,
)
from .verifier import VerifyReport, find_witness, sample_check, verify  # noqa: F401
