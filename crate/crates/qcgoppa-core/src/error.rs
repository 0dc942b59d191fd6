//! Crate-wide error type.
//!
//! Recoverable failures (bad user data, refused scales, degenerate inputs)
//! are reported through [`Error`]. Mixing values from different field
//! contexts is a programming error, not a data error, and panics instead;
//! see the crate docs.

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Every recoverable failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The requested modulus factors over GF(2).
    #[error("modulus {modulus:#x} is reducible over GF(2)")]
    ReducibleModulus { modulus: u64 },

    /// The requested modulus does not have the requested degree.
    #[error("modulus {modulus:#x} has degree {actual}, expected {expected}")]
    DegreeMismatch {
        modulus: u64,
        expected: u32,
        actual: u32,
    },

    /// Field degrees outside `1..=24` are not supported.
    #[error("extension degree {degree} outside the supported range 1..=24")]
    DegreeOutOfRange { degree: u32 },

    /// Zero has no multiplicative inverse.
    #[error("division by zero in GF(2^{degree})")]
    DivisionByZero { degree: u32 },

    /// Zero has no multiplicative order.
    #[error("multiplicative order is undefined for zero")]
    OrderOfZero,

    /// Trace to a subfield requires the subfield degree to divide the
    /// extension degree.
    #[error("subfield degree {sub} does not divide extension degree {sup}")]
    NonDivisorDegree { sub: u32, sup: u32 },

    /// No modulus of the requested degree is registered or constructible.
    #[error("no modulus of degree {degree} is registered or constructible")]
    TableMiss { degree: u32 },

    /// An operation refused to enumerate beyond the desk-scale cap.
    #[error("refusing {what}: {amount} exceeds the desk-scale cap of {cap}")]
    ScaleExceeded {
        what: &'static str,
        amount: u64,
        cap: u64,
    },

    /// Polynomial division by the zero polynomial.
    #[error("polynomial division by zero")]
    DivisionByZeroPoly,

    /// Irreducibility is undefined for constants.
    #[error("irreducibility is undefined for polynomials of degree < 1")]
    DegreeZero,

    /// A Möbius matrix must have a nonzero determinant.
    #[error("matrix [[{a}, {b}], [{c}, {d}]] has determinant zero")]
    DegenerateMatrix {
        a: String,
        b: String,
        c: String,
        d: String,
    },

    /// No power of the matrix up to the cap was scalar.
    #[error("matrix order not found within the q+1 bound")]
    OrderNotFound,

    /// Orbit decomposition was asked for on a set not closed under the map.
    #[error("domain is not closed under the map: image of {point} is {image}, which is outside the domain")]
    DomainNotClosed { point: String, image: String },

    /// Möbius enumeration knows only the listed prime orders.
    #[error("enumeration by order supports l in {{2, 3}}, got {l}")]
    UnsupportedOrder { l: u32 },

    /// Requested a filtered family that does not exist over this field.
    #[error("the b = 0 order-3 family requires 3 | q - 1, but q = {q}")]
    NoCubeRootOfUnity { q: u64 },

    /// Invariance checking is defined for c = 1 representatives only.
    #[error("operation requires a c = 1 Möbius representative, got an affine map")]
    AffineMatrix,

    /// The shift construction degenerates when g(a) = 0.
    #[error("g(a) = 0: the numerator coefficient a of the map is a root of g")]
    RootAtA,

    /// Orbit polynomials are undefined for fixed points of the map.
    #[error("beta is a fixed point of the map")]
    FixedBeta,

    /// The orbit product did not descend to the base field.
    #[error("orbit product has a coefficient outside the base-field image")]
    CoefficientsNotRational,

    /// Degree shapes accepted by the enumerators: s = 1, s = t^e, s = t1*t2.
    #[error("unsupported extension shape s = {s}: {why}")]
    UnsupportedS { s: u64, why: &'static str },

    /// A support point is a root of the Goppa polynomial.
    #[error("support point {point} is a root of the Goppa polynomial")]
    RootInSupport { point: String },

    /// Support points must be pairwise distinct.
    #[error("support contains a repeated point: {point}")]
    DuplicatePoint { point: String },

    /// A support transform sent a finite point to infinity.
    #[error("transform sends support point {point} to infinity, which the {variant} variant cannot host")]
    InfiniteImage { point: String, variant: String },

    /// Quasi-cyclic verification needs blocks of one uniform size.
    #[error("support blocks have mixed sizes {sizes:?}; quasi-cyclic structure needs one uniform size")]
    MixedBlockSizes { sizes: Vec<usize> },

    /// The infinity point can only appear in the extended variants.
    #[error("support contains the infinity point, which {variant} cannot host")]
    UnexpectedInfinity { variant: String },

    /// The extended variants host exactly one infinity point.
    #[error("the {variant} variant needs the infinity point in its support")]
    MissingInfinity { variant: String },

    /// Unit-group supports exist only for orders dividing the group order.
    #[error("no subgroup of order {n}: it does not divide the unit-group order {group}")]
    NonDivisorOrder { n: u64, group: u64 },

    /// Parsing failures for the element / polynomial / matrix text formats.
    #[error("cannot parse {what}: {input:?}: {why}")]
    Parse {
        what: &'static str,
        input: String,
        why: String,
    },
}
