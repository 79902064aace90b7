//! The guide chapters under `book/src`, compiled as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub struct Introduction;

#[doc = include_str!("../../../book/src/exact-algebra.md")]
pub struct ExactAlgebra;

#[doc = include_str!("../../../book/src/exterior.md")]
pub struct Exterior;

#[doc = include_str!("../../../book/src/symmetric-pairs.md")]
pub struct SymmetricPairs;

#[doc = include_str!("../../../book/src/invariants.md")]
pub struct Invariants;

#[doc = include_str!("../../../book/src/sos-certificates.md")]
pub struct SosCertificates;

#[doc = include_str!("../../../book/src/cli.md")]
pub struct Cli;
