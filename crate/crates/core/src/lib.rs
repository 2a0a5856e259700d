pub mod audit;
pub mod error;
pub mod exec;
pub mod lattice;
pub mod oracle;
pub mod orbitchar;
pub mod partition;
pub mod poly;
pub mod schur;
pub mod solver;
pub mod symmetric;
pub mod weyl;

pub use error::{Error, Result};
pub use exec::Execution;
pub use lattice::{sub_q_lambda1, AlgebraContext, DominantWeight, SubEntry, Weight};
pub use partition::Partition;
pub use poly::{UPoly, XPoly};
pub use schur::SchurContext;
pub use solver::{solve_multiplicities, MultiplicityEntry, MultiplicityTable};
