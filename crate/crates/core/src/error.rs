use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library reports. Validation failures carry a witness
/// (element, pair or triple) so callers can point at the offending data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} has size {size}, which exceeds the cap of {cap}")]
    CapExceeded { what: String, size: u128, cap: u128 },

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),

    #[error("not quadratic: {0}")]
    NotQuadratic(String),

    #[error("degenerate: element {element} braids trivially with everything")]
    Degenerate { element: String },

    #[error("not an isometry: {0}")]
    NotIsometry(String),

    #[error("not an isotropic subgroup: q({element}) = {value} is nonzero")]
    NotIsotropic { element: String, value: String },

    #[error("cochain is not normalized at ({g}, {h})")]
    NotNormalized { g: String, h: String },

    #[error("not a twisted 2-cocycle: condition fails at ({g}, {h}, {k})")]
    NotCocycle { g: String, h: String, k: String },

    #[error("first obstruction failed: symmetry element {element} does not stabilize the algebra")]
    FirstObstructionFailed { element: String },

    #[error(
        "fractionalization does not descend: omega({g}, {h}) = {value} is not transparent to the algebra"
    )]
    FractionalizationDoesNotDescend { g: String, h: String, value: String },

    #[error("invalid extension: {0}")]
    InvalidExtension(String),

    #[error("invalid equivariant structure: {0}")]
    InvalidStructure(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

/// Size limits for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group (or group of maps) any exhaustive search may touch.
    pub group_cap: usize,
    /// Largest raw cochain space enumerated by the cohomology brute force.
    pub cochain_cap: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            group_cap: 200,
            cochain_cap: 1_000_000,
        }
    }
}

impl Limits {
    pub fn with_group_cap(group_cap: usize) -> Self {
        Limits {
            group_cap,
            ..Limits::default()
        }
    }

    pub(crate) fn check_group(&self, what: &str, size: usize) -> Result<()> {
        if size > self.group_cap {
            return Err(Error::CapExceeded {
                what: what.to_string(),
                size: size as u128,
                cap: self.group_cap as u128,
            });
        }
        Ok(())
    }
}
