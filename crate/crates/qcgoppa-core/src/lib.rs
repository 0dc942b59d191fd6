//! Binary-field algebra for projectively invariant Goppa-code constructions.
//!
//! The crate builds up in five layers, each usable on its own:
//!
//! * [`gf2e`] — arithmetic in GF(2^m) for m ≤ 24 (polynomial basis, bit-packed),
//!   canonical generators, traces, the Artin–Schreier solver, and tower
//!   embeddings GF(2^n) ⊆ GF(2^{ns}).
//! * [`polyring`] — dense univariate polynomials over one field context:
//!   ring operations, Frobenius powers, irreducibility (a fast test and an
//!   independent trial-division oracle), root finding, and factorization.
//! * [`projline`] — the projective line P¹(F_q) and the Möbius action of
//!   PGL₂(F_q) on it: orbits, matrix orders, enumeration of the prime-order
//!   families, and induced coordinate permutations.
//! * [`invariant`] — polynomials invariant (up to scalar) under a Möbius
//!   substitution: T-set enumerations for order-2 and order-3 maps, the cubic
//!   classifier, and the factorization identities for
//!   h(x) = x^{q^s+1} + a·x^{q^s} + d·x + b.
//! * [`codes`] — Goppa codes, their parity-check subcodes, and extended
//!   codes over block-structured supports, with binary expansion, kernel
//!   bases, quasi-cyclic verification, and exhaustive minimum distance at
//!   desk scale.
//!
//! # Contexts
//!
//! Every field element ([`Fe`]) is tagged with the modulus of the field it
//! belongs to. Mixing elements from different contexts (for example, adding
//! an element of GF(8) to an element of GF(16), or evaluating a polynomial
//! over GF(8) at a GF(64) point without embedding it first) is a programming
//! error and panics. Recoverable conditions — reducible moduli, degenerate
//! matrices, refused enumeration scales, points colliding with polynomial
//! roots — are reported through [`Error`].
//!
//! # Determinism
//!
//! All operations are deterministic: canonical generators are the smallest
//! encodings of full multiplicative order, embedding roots are the smallest
//! encodings among the conjugate roots, enumerations are emitted in sorted
//! order, and nothing draws randomness. Results are stable across runs and
//! across worker-thread counts.

pub mod codes;
pub mod error;
pub mod gf2e;
pub mod invariant;
pub mod polyring;
pub mod projline;

pub use codes::{
    build_code, min_distance_exhaustive, support_transform, unit_group, unit_group_support,
    BinMatrix, BuiltCode, CodeReport, FeMatrix, FieldInfo, GoppaSpec, QcBlocks, SupportSpec,
    Variant,
};
pub use error::{Error, Result};
pub use gf2e::{Fe, FieldCtx, ModulusTable, TowerEmbedding};
pub use invariant::{
    CubicClass, CubicRootCount, FrobeniusDirection, HFactorization, InvariantWitness,
    OrbitPolynomial, TSet,
};
pub use polyring::Poly;
pub use projline::{Mobius, ProjPoint};
