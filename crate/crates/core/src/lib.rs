//! Brauer monoids of type H3 and H4: exact root systems over Z[φ], Coxeter
//! group tables, normal forms with a rewrite engine, and the folding checks
//! against D6 and E8.

pub mod admissible;
pub mod cache;
pub mod embed;
pub mod engine;
pub mod error;
pub mod group;
pub mod hsystem;
pub mod report;
pub mod ring;
pub mod roots;
pub mod scalar;
pub mod suites;

pub use error::{Error, Result};
pub use ring::GoldenNumber;

/// Root system of type H3 or H4 with coefficients in Z[φ].
pub type HRootSystem = roots::RootSystem<GoldenNumber>;

/// Root system of type D6 or E8 with integer coefficients.
pub type SimplyLacedRootSystem = roots::RootSystem<i64>;
