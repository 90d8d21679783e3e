"""Horn-clause logic mining with a third-order Hopfield network."""

from ._logicmine import (
    AtomTable,
    CapacityError,
    Clause,
    Error,
    EventTable,
    Interpretation,
    LearningRates,
    MinedRule,
    MineResult,
    ParseError,
    Program,
    RelaxResult,
    Representation,
    ResidualEntry,
    SolveResult,
    StructuralError,
    SynapseSet,
    compile,
    cost,
    enumerate_models,
    format_clause,
    learn,
    mine,
    model_events,
    parse_program,
    print_program,
    read_events,
    read_synapses,
    relax,
    rule_confidence,
    solve,
    write_events,
    write_rules,
    write_synapses,
)

__all__ = [name for name in dir() if not name.startswith("_")]
