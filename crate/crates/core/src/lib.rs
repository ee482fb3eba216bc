//! Attached primes of top local cohomology modules over power-series rings
//! `k[[x_1, .., x_d]]`, and realization of every subset of `Assh(M)` as the
//! attached set of some `H^n_a(M)`.
//!
//! The layers, bottom up:
//!
//! * [`poly`]: exact polynomials, monomial orders, the text parser.
//! * [`groebner`]: Buchberger's algorithm and normal forms.
//! * [`ideal`]: homogeneous ideals: sums, intersections, membership,
//!   dimension, m-primariness, linear primes.
//! * [`attached`]: module presentations and the attached-prime criterion.
//! * [`realize`]: dimension-one primes and the realization of subsets.
//! * [`corpus`]: the built-in four-component example over `k[[X,Y,Z,W]]`.
//!
//! ```
//! use lctop::corpus::four_planes;
//! use lctop::{att_top, realize_subset, Ideal, RealizeOptions};
//!
//! let corpus = four_planes();
//! let a = Ideal::parse(&corpus.ring, &["X", "W", "Y + Z"]).unwrap();
//! let att = att_top(&a, &corpus.module).unwrap();
//! assert_eq!(corpus.names_of(&att), ["p1", "p2", "p3"]);
//!
//! let report = realize_subset(&att, &corpus.module, &RealizeOptions::default()).unwrap();
//! assert_eq!(report.verified, att);
//! ```

pub mod attached;
pub mod corpus;
mod error;
pub mod groebner;
pub mod ideal;
pub mod linear;
pub mod poly;
pub mod realize;

pub use attached::{
    att_top, check_lemma25, present_module, reduce_to_dim1, supp_contains, AttachedSet, ModulePresentation,
};
pub use error::Error;
pub use groebner::{buchberger, normal_form, s_polynomial, ReducedGB};
pub use ideal::{Certificate, Dimension, Ideal, IdealError, PrimeIdeal};
pub use poly::{parse_polynomial, Field, Monomial, MonomialOrder, Polynomial, Ring};
pub use realize::{
    combine_intersection, enumerate_all, find_dim1_prime, realize_subset, RealizationReport, RealizeOptions,
};
