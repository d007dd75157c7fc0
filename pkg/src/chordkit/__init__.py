"""Linear chord diagrams with a minimum chord length.

Counting, exhaustive enumeration, the insert-and-swap bijections between
neighbouring table cells, and recurrence checking/guessing for table rows.
"""
from .bijection import TheoremReport, alpha, beta, class_index, insert_middle_chord, verify_theorem
from .counting import CountTable, DPState, ScanStats, build_table, count_dp, row_sequence
from .diagram import (
    Chord,
    ChordClassification,
    ChordDiagram,
    ChordError,
    DiagramParseError,
    DomainError,
    LemmaReport,
    RegionSplit,
    check_structural_lemmas,
    classify,
    covers,
    format_diagram,
    in_class,
    min_chord_length,
    parse_diagram,
    region_split,
    theorem_region,
)
from .enumeration import DiagramStream, count_brute, enumerate_diagrams
from .recurrence import (
    K2_RECURRENCE,
    K3_RECURRENCE,
    FitResult,
    RecurrenceSpec,
    check_recurrence,
    fit_recurrence,
    search_recurrence,
)
from .render import RenderSpec, render

__version__ = "0.1.0"
