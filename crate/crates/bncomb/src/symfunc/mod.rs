//! Symmetric functions with exact rational arithmetic, specialized to
//! `(q,t)`-alphabets.
//!
//! Submodules:
//!
//! - [`partition`](self): integer partitions, `z_μ`, conjugation, hook-length
//!   dimensions, Gaussian binomials.
//! - characters: irreducible symmetric-group characters `χ^λ_μ` by the
//!   Murnaghan–Nakayama rule.
//! - series: [`QTSeries`], truncated bivariate power series over `Q`.
//! - plethysm: [`Alphabet`] and plethystic evaluation `p_k[A]`, `h_n[A]`,
//!   `e_n[A]`, `s_λ[A]`, and the exponential `Ω[A]`.
//! - expansion: [`SymExpansion`], class functions of the hyperoctahedral
//!   group written in the wreath power-sum basis `p_{(μ,ν)}`, with graded
//!   (internal) products and the Hall pairing.

mod characters;
mod expansion;
mod partition;
mod plethysm;
mod series;

pub use characters::mn_character;
pub use expansion::{partition_pairs, SymExpansion};
pub use partition::{binomial, gaussian_binomial, partitions_of, Partition};
pub use plethysm::{
    e_plethysm, h_plethysm, omega, p_mu_plethysm, p_plethysm, schur_plethysm, Alphabet,
};
pub(crate) use series::bigint_json;
pub use series::{coeff_int, Coeff, QTSeries};

use thiserror::Error;

/// Errors for the symmetric-function layer.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SymError {
    /// A sequence that must be a partition was not weakly decreasing.
    #[error("parts are not weakly decreasing: {0:?}")]
    NotDecreasing(Vec<u32>),
    /// A character was requested for partitions of different sizes.
    #[error("size mismatch: |lambda| = {left} but |mu| = {right}")]
    SizeMismatch {
        /// `|λ|`.
        left: u32,
        /// `|μ|`.
        right: u32,
    },
    /// Two expansions at different levels were combined pointwise.
    #[error("level mismatch: {left} vs {right}")]
    LevelMismatch {
        /// Level of the left operand.
        left: u32,
        /// Level of the right operand.
        right: u32,
    },
    /// An alphabet had a negative coefficient.
    #[error("alphabet has negative coefficient {coeff} at q^{q_exp} t^{t_exp}")]
    NegativeCoefficient {
        /// `q`-exponent of the offending term.
        q_exp: u32,
        /// `t`-exponent of the offending term.
        t_exp: u32,
        /// The coefficient, rendered exactly.
        coeff: String,
    },
    /// `Ω[A]` was requested for an alphabet with a constant term.
    #[error("omega requires an alphabet with zero constant term")]
    ConstantTerm,
    /// Exact polynomial division failed.
    #[error("division not exact: remainder has a term at q^{q_exp} t^{t_exp}")]
    DivisionInexact {
        /// `q`-exponent of a surviving remainder term.
        q_exp: u32,
        /// `t`-exponent of a surviving remainder term.
        t_exp: u32,
    },
    /// A series expected to be a polynomial of bounded degree had support
    /// beyond the bound (within its truncation window).
    #[error("unexpected term at q^{q_exp} t^{t_exp} beyond degree bound {bound}")]
    DegreeExceeded {
        /// `q`-exponent of the offending term.
        q_exp: u32,
        /// `t`-exponent of the offending term.
        t_exp: u32,
        /// The violated bound.
        bound: u32,
    },
}
