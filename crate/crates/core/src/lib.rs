//! Sidon sets of order `h` (B_h sets), generalized Sidon sets of order
//! `(h, k)`, and the matroid formed by the B_h subsets of a B_{2h-1,h-1}
//! ground set.
//!
//! The crate is organized bottom-up:
//!
//! - [`group`]: the integers and cyclic groups with checked arithmetic.
//! - [`combinat`]: h-multisets, h-fold sumsets, representation counts.
//! - [`sidon`]: B_h / B_{h,k} membership with witnesses, double
//!   representations, the subtraction algorithm, the extension step.
//! - [`matroid`]: independence oracle, greedy bases, matroid union,
//!   covering numbers and coverings with prescribed part sizes.
//! - [`oracle`]: exhaustive reference implementations and a verification
//!   report over a single ground set.
//! - [`generate`]: seeded instance generators.
//! - [`cli`]: the `sidon` command-line front end.
//!
//! ```
//! use sidon_matroid::{is_bh, is_bhk, GroundSet, Limits, SidonMatroid};
//!
//! let limits = Limits::DEFAULT;
//! let a = GroundSet::integers([1, 2, 3]).unwrap();
//! assert!(is_bhk(&a, 3, 1, &limits).unwrap().is_member());
//! let w = is_bh(&a, 2, &limits).unwrap();
//! assert_eq!(w.witness().unwrap().representation().to_string(), "1 + 3 = 2 + 2");
//!
//! let m = SidonMatroid::new(a, 2, true).unwrap();
//! assert_eq!(m.rank_profile().unwrap().ranks(), &[2, 3]);
//! ```

pub mod cli;
pub mod combinat;
pub mod error;
pub mod generate;
pub mod group;
pub mod matroid;
pub mod oracle;
pub mod sidon;

pub use combinat::{GroundSet, HMultiset, Limits};
pub use error::{Error, Result};
pub use group::{AmbientGroup, Element};
pub use matroid::{PartitionMu, RankProfile, SidonMatroid};
pub use sidon::{is_bh, is_bhk, DoubleRepresentation, Membership};
