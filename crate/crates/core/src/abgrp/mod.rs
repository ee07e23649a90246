//! Exact integer linear algebra and finitely generated abelian groups.

mod group;
mod matrix;
mod snf;

pub use group::{
    group_from_presentation, in_span, is_exact_at, quotient, subgroup, DirectSum, FinAbGroup,
    GroupElement, GroupMor, Presented, SubGroup, ENUMERATION_CAP,
};
pub use matrix::IntMatrix;
pub use snf::{integer_kernel, smith_normal_form, solve_integer, Snf};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("group is infinite")]
    InfiniteGroup,
    #[error("{what} exceeds the budget of {cap}")]
    BudgetExceeded { what: &'static str, cap: u64 },
    #[error("torsion coefficients must be >= 2 and form a divisibility chain")]
    InvalidInvariants,
    #[error("matrix shape does not match source and target")]
    ShapeMismatch,
    #[error("map does not respect torsion")]
    NotWellDefined,
    #[error("maps are not composable")]
    NotComposable,
}

/// Kernel, image and cokernel with their structure maps.
pub fn mor_kernel_image(h: &GroupMor) -> (SubGroup, SubGroup, SubGroup) {
    (h.kernel(), h.image(), h.cokernel())
}
