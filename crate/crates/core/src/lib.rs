//! Finite soft topological spaces, soft topological groups and their category.

pub mod error;
pub mod soft;
pub mod subset;
pub mod topology;
pub mod verdict;
pub mod real_line;
pub mod connectivity;
pub mod group;
pub mod soft_group;
pub mod category;
pub mod enumerate;
pub mod io;
pub mod instances;
pub mod suite;

pub use category::{STGrpMorphism, STGrpObject};
pub use connectivity::StepPath;
pub use error::{Error, Result};
pub use group::FiniteGroup;
pub use io::{MappingDocument, PathDocument, Space, SpaceDocument};
pub use soft::{ParamSet, SoftMapping, SoftSet, Universe};
pub use soft_group::SoftTopGroup;
pub use subset::Subset;
pub use suite::{PropertyCase, SuiteConfig};
pub use topology::SoftTopology;
pub use verdict::Verdict;
