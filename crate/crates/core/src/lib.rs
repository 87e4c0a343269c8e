//! Vector-valued harmonic Maass forms for the Weil representation of the
//! lattice 2mZ, the isomorphism with the Kohnen plus space, and the theta
//! decomposition of harmonic Maass-Jacobi forms.

pub mod arith;
pub mod cli;
pub mod corpus;
pub mod cyclo;
pub mod discform;
pub mod error;
pub mod expansions;
pub mod io;
pub mod isomap;
pub mod jacobi;
pub mod matrix;
pub mod metaplectic;
pub mod weilrep;

pub use cyclo::CyclotomicNumber;
pub use discform::DiscriminantForm;
pub use error::{Result, WeilError};
pub use expansions::{Coeff, HarmonicExpansion, VectorForm};
pub use metaplectic::MpElement;

/// Bits used when embedding exact values into C, from `WEIL_PRECISION_BITS`
/// (default 128).
pub fn precision_bits() -> u32 {
    std::env::var("WEIL_PRECISION_BITS")
        .ok()
        .and_then(|s| s.parse().ok())
        .filter(|&b| b >= 53)
        .unwrap_or(128)
}
