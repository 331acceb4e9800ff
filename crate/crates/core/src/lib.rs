//! Metric tools for incomparability graphs of finite posets: distances,
//! balls and hulls, induced and isometric path search, the width-2
//! oscillation metric, pattern generators and recognizers, the
//! counterexample poset families, and a law engine that checks metric and
//! convexity identities on exhaustive and random instances.

pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod laws;
pub mod path;
pub mod patterns;
pub mod poset;
pub mod vertex_set;

pub use error::{Error, Result};
pub use families::{Family, FamilyTruncation};
pub use graph::{Distance, IncGraph};
pub use laws::{Counterexample, Mode, Outcome, Verdict};
pub use path::{PathKind, PathWitness, SearchOutcome, DEFAULT_BUDGET};
pub use patterns::{PatternKind, PatternMatch};
pub use poset::{parse_poset, write_poset, ChainCover, Poset};
pub use vertex_set::VertexSet;
