//! Exact computations with Lie superalgebras, generalized Jordan super pairs
//! and the correspondence between metric module triples and super pairs with
//! a nondegenerate pairing.
//!
//! All arithmetic is exact, over ℚ or a prime field 𝔽_p with p odd. Checks
//! return a [`Report`] naming each property and, on failure, the basis indices
//! of a counterexample together with both sides of the violated identity.

pub mod catalog;
pub mod faulkner;
pub mod gjsp;
pub mod liesuper;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod superlinear;
pub mod tensorops;

pub use faulkner::{
    faulkner_backward, faulkner_forward, instr_lm, roundtrip_check, Backward, Correspondence, InstrLm, TransferredAut,
};
pub use gjsp::{check_pair_hom, Gjsp, GjspObject, Instr, NuOperator, Sign};
pub use liesuper::{
    hom_fixed, FixedHom, InvariantForm, LieSuperAlgebra, MetricModuleTriple, OperatorFamily, SuperModule,
};
pub use linalg::{Matrix, Span};
pub use report::{CheckConfig, PropertyOutcome, Report, Witness};
pub use scalar::{Field, QuadExt, QuadRing, Ring, Scalar};
pub use superlinear::{eta, PairingForm, Parity, SuperMap, SuperSpace};
pub use tensorops::{
    gjsp_direct_sum, gjsp_tensor, gjsp_tensor_right, onedim_object, onedim_parameter, tensor_factorize, tensor_shift,
    Factorization, ShiftParameter,
};

/// Errors raised by constructors and algorithms.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("characteristic 2 is not supported")]
    CharacteristicTwo,
    #[error("{0} is not an admissible prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("eta is defined for 2 or 3 parities, got {0}")]
    EtaArity(usize),
    #[error("modules are over different Lie superalgebras")]
    DifferentAlgebras,
    #[error("empty input")]
    Empty,
    #[error("the bilinear form is degenerate")]
    DegenerateForm,
    #[error("matrix is not invertible")]
    Singular,
    #[error("precondition failed: {context}")]
    Precondition { context: String, report: Box<Report> },
    #[error("well-definedness audit failed: the pairing is not supersymmetric on inner derivations")]
    WellDefinedness(Box<Report>),
    #[error("commutator of inner derivations {0} and {1} is not a combination of inner derivations")]
    NotClosed(usize, usize),
    #[error("not a submodule: {0}")]
    NotSubmodule(String),
    #[error("not absolutely irreducible: the commutant has dimension {0}")]
    NotIrreducible(usize),
    #[error("the two actions do not supercommute")]
    NonCommuting(Box<Report>),
    #[error("map is not an automorphism")]
    NotAutomorphism(Box<Report<String>>),
    #[error("invalid split: {0}")]
    InvalidSplit(String),
    #[error("{0}")]
    Invalid(String),
}

impl Error {
    /// The failed report carried by the error, if any.
    pub fn report(&self) -> Option<&Report> {
        match self {
            Error::Precondition { report, .. }
            | Error::WellDefinedness(report)
            | Error::NonCommuting(report) => Some(report),
            _ => None,
        }
    }

    pub(crate) fn precondition(context: &str, report: Report) -> Error {
        Error::Precondition { context: context.to_string(), report: Box::new(report) }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
