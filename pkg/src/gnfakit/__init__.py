"""Regular expression and finite automaton conversions with step-by-step traces."""
from .check import check_machine, check_regexp
from .gnfa import (
    Gnfa,
    GnfaError,
    fresh_state_name,
    gnfa_accepts,
    gnfa_from_nfa,
    gnfa_from_regexp,
    gnfa_language,
    gnfa_to_nfa,
    rip_state,
)
from .n2r import ndfa_to_regexp, r_equations, r_term, rip_order
from .nfa import (
    EMP,
    Nfa,
    NfaValidationError,
    enumerate_nfa_language,
    epsilon_closure,
    nfa_apply,
    validate_nfa,
)
from .r2n import expand_edge, regexp_to_ndfa, select_decomposable_edge
from .regexp import (
    EMPTY,
    NULL,
    Concat,
    Empty,
    EmptyLanguageError,
    Null,
    Regexp,
    RegexpSyntaxError,
    Singleton,
    Star,
    SymbolError,
    Union,
    enumerate_regexp_language,
    gen_word,
    matches,
    parse_regexp,
    render_regexp,
    simplify,
)
from .trace import (
    Frame,
    Trace,
    VizCursor,
    cursor_end,
    cursor_new,
    cursor_next,
    cursor_prev,
    cursor_start,
    frame_to_dot,
)

__version__ = "0.1.0"
