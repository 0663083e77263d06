//! Ground generic Java subtyping, constructed as an iterated partial
//! Cartesian graph product of the subclassing graph with the wildcards
//! graph of the previous approximation, and checked against a rule-based
//! decision procedure.
//!
//! ```
//! use jsubgraph::{builder, typelang::{parse_ground_type, ClassTable}};
//!
//! let table = ClassTable::parse("class C<T> {}").unwrap();
//! let trace = builder::run(&table, 3).unwrap();
//! let sizes: Vec<usize> = trace.stats().iter().map(|s| s.vertices).collect();
//! assert_eq!(sizes, [3, 8, 23]);
//!
//! let sub = parse_ground_type("C<N>", &table).unwrap();
//! let sup = parse_ground_type("C<? extends C<?>>", &table).unwrap();
//! assert!(trace.subtype(&sub, &sup).unwrap());
//! ```

pub mod builder;
pub mod error;
pub mod export;
pub mod graph;
pub mod oracle;
pub mod pcgp;
pub mod typelang;
pub mod wildcards;

pub use builder::{run, IterationTrace, StepStats};
pub use error::{DeclError, Error, GraphError, TypeError};
pub use graph::{EdgeTag, LabeledDigraph};
pub use typelang::{ClassTable, GroundType, TypeArg};
pub use wildcards::BipointedGraph;
