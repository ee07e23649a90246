//! Categories presented by quivers with relations.

mod builtins;
mod compute;
mod functor;
mod presentation;

pub use builtins::{builtin, cyclic_ring, muro_r, muro_r1, muro_r2, r1_extra, r2_extra, BUILTIN_NAMES};
pub use compute::{compute_category, Combo, HomEntry, PresentedCategory};
pub use functor::{
    check_functor, eval_path, failing_relations, functor_hom_map, section_search, FunctorData,
    SectionOutcome, SectionProblem, DEFAULT_SEARCH_CAP,
};
pub use presentation::{quotient_presentation, Arrow, Path, QuiverPresentation, Relation};

use alloc::string::String;

use crate::abgrp::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresError {
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("paths not composable: {0}")]
    NotComposable(String),
    #[error("malformed presentation: {0}")]
    Malformed(String),
    #[error("hom groups did not stabilize up to path length {l_max}")]
    NoStabilization { l_max: usize },
    #[error("search space exceeds the budget of {cap} candidate tuples")]
    SearchBudgetExceeded { cap: u64 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
