//! Generic constructions over computable additive categories.

mod arrow;
mod bifunctor;
mod category;
mod completion;
mod cross_effect;
mod free;
mod ideal;
mod karoubi;
mod toda;

pub use arrow::{ArrowCategory, ArrowObj};
pub use bifunctor::{check_bifunctor, Bifunctor, HomBifunctor, SemidirectProduct};
pub use category::{
    check_biproduct, check_composition_laws, inverse, is_isomorphic, raw_add, raw_from_i64, raw_mod,
    raw_neg, raw_scale, raw_sub, Biproduct, CompCategory, HomSpace, Preadditive, Raw,
};
pub use completion::{scalar_identity, AdditiveCompletion};
pub use cross_effect::{cross_effect2, GroupFunctor, HomFunctor, TensorSquare};
pub use free::FreeModules;
pub use ideal::{ideal_product, is_ideal, is_zero_ideal, reflects_isomorphisms, IdealData, QuotientCategory};
pub use karoubi::{
    is_idempotent, lift_idempotent, rho_embed, rho_hom_agrees, split_arrow_idempotent, ArrowSplitting,
    KaroubiEnvelope, KaroubiObj,
};
pub use toda::TodaBifunctor;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatError {
    #[error("morphism is not idempotent")]
    NotIdempotent,
    #[error("idempotent lift did not converge")]
    LiftFailed,
    #[error("splitting data does not satisfy a = dc, cd = id, b = ts, st = id")]
    InvalidSplitting,
    #[error("quintuple violates fe = f = e'f")]
    MalformedQuintuple,
}
