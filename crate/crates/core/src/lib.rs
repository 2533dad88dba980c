//! Exact computation of domination and secure-domination parameters on
//! small graphs and their Mycielskians.
//!
//! The crate provides:
//!
//! - a bitset-backed [`Graph`] type (order capped at [`MAX_ORDER`]) with
//!   family generators, the Mycielskian constructor, and a bit-exact
//!   graph6 codec,
//! - exact solvers for the domination number γ and the secure domination
//!   number γ_s with deterministic optimality witnesses, plus an
//!   independent naive oracle for cross-validation,
//! - closed-form values and bounds for paths, cycles, complete and
//!   complete bipartite graphs and their Mycielskians,
//! - builders for graphs realizing prescribed (γ_s(G), γ_s(μ(G))) pairs,
//! - a verification harness that checks each closed form and structural
//!   claim over exhaustively enumerated instances and surveys open
//!   questions for counterexamples.
//!
//! ```
//! use secdom::families::make_path;
//! use secdom::mycielskian::mycielskian;
//! use secdom::solver::min_secure_dominating;
//!
//! let p7 = make_path(7).unwrap();
//! assert_eq!(min_secure_dominating(&p7).value, 3);
//!
//! let (mu, _) = mycielskian(&p7).unwrap();
//! assert_eq!(min_secure_dominating(&mu).value, 5);
//! ```

pub mod bitset;
pub mod constructions;
pub mod domination;
pub mod enumerate;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod mycielskian;
pub mod oracle;
pub mod solver;
pub mod verify;

pub use bitset::VertexSet;
pub use graph::{Graph, GraphError, MAX_ORDER};
pub use mycielskian::{mycielskian, MycielskianLabeling};
