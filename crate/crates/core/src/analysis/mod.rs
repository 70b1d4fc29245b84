mod classify;
mod growth;
mod verify;

pub use classify::{classify_graph, components, Classification, ComponentType, Label, Verdict};
pub use growth::{growth_probe, GrowthRow, GrowthTable};
pub use verify::{
    element_checks, verify_suite, Budgets, Check, CheckResult, Counterexample, Status, VerifyReport,
};
