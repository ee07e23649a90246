//! Square-zero extensions, pushforwards, Massey products and `K₀`.

mod extension;
mod k0;
mod massey;
mod pushforward;
mod verify;

pub use extension::{
    check_tau, kernel_is_theta, make_extension, reduction_extension, semidirect_extension, triangles_extension,
    Extension, ExtensionData, FnExtension, KaroubiExtension, ProjectedKaroubi, TrianglesExtension,
};
pub use k0::{k0_muro, representatives, K0Presentation, K0Relation};
pub use massey::{
    massey, massey_condition, massey_muro, massey_muro_r1, MasseyResult, MuroMassey, PushforwardMassey, EXHAUSTIVE_LIFT_CAP,
};
pub use pushforward::{
    hom_orders, is_pushforward_along, pushforward, theta1_quotient, CokernelBifunctor, FullKernel,
    KernelTransformation, MuroTheta, PushforwardCategory, Theta1Literal, Verdict,
};
pub use verify::{
    assemble, verify_muro, verify_step, Check, CheckVerdict, Report, ThetaChoice, VerifyConfig, NAMES, STEP_COUNT,
};

use crate::abgrp::AlgebraError;
use crate::muro::MuroError;
use crate::prescat::PresError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ObstructError {
    #[error("kernel of the projection is not square zero")]
    KernelNotSquareZero,
    #[error("projection is not full")]
    ProjectionNotSurjective,
    #[error("transformation is not natural")]
    NonNaturalTransformation,
    #[error("composite is not zero")]
    CompositeNotZero,
    #[error("morphism has no lift")]
    NoLift,
    #[error("matrix shapes do not compose")]
    ShapeMismatch,
    #[error("search exceeds the budget of {cap}")]
    BudgetExceeded { cap: u64 },
    #[error(transparent)]
    Pres(#[from] PresError),
    #[error(transparent)]
    Muro(#[from] MuroError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
