use thiserror::Error;

/// Errors surfaced by the library for data-dependent failures. Shape
/// mismatches between matrices are programming errors and panic instead.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid group homomorphism: {0}")]
    InvalidHom(String),

    #[error("element is not homogeneous")]
    NonHomogeneous,

    #[error("cochain is not a cocycle")]
    NotACocycle,

    #[error(
        "bar complex of a group of order {group_order} needs {needed_bytes} bytes in degree \
         {degree} ({cells} cochain tuples), exceeding the budget of {budget_bytes} bytes"
    )]
    BudgetExceeded {
        group_order: usize,
        degree: usize,
        /// The offending tuple count |G|^(n+1).
        cells: u128,
        needed_bytes: u128,
        budget_bytes: u64,
    },

    #[error("group has free rank {0}; the bar oracle needs a finite group")]
    InfiniteGroup(usize),

    #[error("cyclic order {0} is too large for the bar oracle")]
    OrderTooLarge(String),

    #[error("invalid group spec at position {position}: unexpected token `{token}`")]
    SpecParse { token: String, position: usize },

    #[error("invalid relation matrix: {0}")]
    RelationParse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
