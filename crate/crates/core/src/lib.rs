pub mod algebra;
pub mod error;
pub mod order;
pub mod props;
pub mod set;
pub mod standard;
pub mod topo;
pub mod tsl;
pub mod verify;
pub mod weak;

pub use algebra::{FiniteSemigroup, FiniteSemilattice};
pub use error::{Error, Result};
pub use order::{Bound, Direction, FinitePoset};
pub use props::{Analysis, Property, PropertyVector};
pub use set::ElementSet;
pub use topo::{FiniteTopology, Hull};
pub use tsl::{ChainHom, ContinuousHom, TopologizedSemigroup};
pub use weak::{TopologyBundle, TopologyKind};
