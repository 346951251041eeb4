//! Edge-colorings of complete bipartite graphs `K_{m,n}` and their
//! monochromatic structure.
//!
//! - [`coloring`]: the data model and its text/JSON encodings.
//! - [`analysis`]: monochromatic components, P4 detection, connected matchings.
//! - [`balanced`]: balanced monochromatic components for up to three colors.
//! - [`search`]: exhaustive search for P4-free colorings, bipartite Ramsey
//!   numbers of P4, star arboricity and isomorphism classes.
//! - [`constructions`]: explicit extremal colorings and blow-ups.
//! - [`certificate`]: checkable witnesses.

pub mod analysis;
pub mod balanced;
pub mod certificate;
pub mod coloring;
pub mod constructions;
pub mod error;
pub mod search;

pub use coloring::{BipartiteColoring, CompleteColoring, SideLabel};
pub use error::{BalancedError, BoundError, ColoringError, ConstructionError, ParseError, SearchError, VerifyError};
