//! Computations with Nakayama algebras presented by Kupisch series.
//!
//! A Nakayama algebra is determined up to Morita equivalence by the sequence
//! of lengths of its indecomposable projectives (the Kupisch series). This
//! crate works entirely at that combinatorial level: structural sets (socle,
//! top, base), the syzygy filtered algebra and its reverses, homological
//! dimensions with exact infinite-dimension detection, and the closed-form
//! families of algebras characterized by their dominant dimension.
//!
//! ```
//! use nakayama::{Dim, KupischSeries};
//! use nakayama::filtered::epsilon;
//! use nakayama::profile::profile;
//! use nakayama::reverse::defect_invariant_reverse;
//!
//! let theta: KupischSeries = "linear:2,2,1,3,2,1".parse().unwrap();
//! let lambda = defect_invariant_reverse(&theta).unwrap();
//! assert_eq!(lambda.to_string(), "cyclic:2,4,3,3,3,4,3,2,2");
//! assert!(epsilon(&lambda).unwrap().theta.is_isomorphic_to(&theta));
//!
//! // Dominant and global dimension climb by two along the reverse.
//! let p = profile(&lambda);
//! assert_eq!(p.domdim, profile(&theta).domdim.plus(2));
//! assert_eq!(p.domdim, Dim::Finite(3));
//! assert_eq!(p.gldim, Dim::Finite(4));
//! ```

pub mod families;
pub mod filtered;
pub mod kupisch;
pub mod profile;
pub mod reverse;
pub mod structure;
pub mod uniserial;

pub use families::{FamilyError, Ha4Params, LowDomdimMode, TwoAgSpec};
pub use filtered::{DualityWitness, EpsilonResult, EtaResult, FilteredError};
pub use kupisch::{Kind, KupischError, KupischSeries, Vertex};
pub use profile::{ClassFlags, HomProfile, TheoremViolation, TransferReport};
pub use reverse::{ReverseChoice, ReverseError};
pub use structure::{StructureError, StructureSets};
pub use uniserial::{Dim, ResolutionStatus, ResolutionSummary, ResolveError, Uniserial};
