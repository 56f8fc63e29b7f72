//! Monomial ideals over a polynomial ring in `n` variables: irreducible
//! decompositions, ordinary, symbolic and irreducible powers, their Newton
//! polyhedra, and the exact Waldschmidt-type constants obtained from them by
//! rational linear programming.
//!
//! Polyhedral and LP code is generic over [`ExactScalar`], implemented for
//! every `num_rational::Ratio<T>`. The aliases below fix `T = BigInt`.
//!
//! ```
//! use monoform::{naive_waldschmidt, parse_ideal, waldschmidt, Rational};
//!
//! let i = parse_ideal("x1^2, x1*x2, x2^2", None)?;
//! assert_eq!(naive_waldschmidt::<Rational>(&i)?, Rational::new(4.into(), 3.into()));
//! assert_eq!(waldschmidt::<Rational>(&i)?, Rational::from_integer(2.into()));
//! # Ok::<(), monoform::Error>(())
//! ```

pub mod decomp;
pub mod error;
pub mod ideal;
pub mod invariants;
pub mod limits;
pub mod lp;
pub mod parse;
pub mod poly;
pub mod random;
pub mod scalar;
pub mod scan;

pub use decomp::{
    ass_primes, big_height, combined_primary_components, irreducible_decomposition,
    irreducible_power, irredundantize, max_primes, symbolic_power, IrreducibleComponent,
    IrreducibleDecomposition, MonomialPrime, PowerFamily,
};
pub use error::{Error, Result};
pub use ideal::{Exponent, ExponentVector, MonomialIdeal};
pub use invariants::{
    alpha_sequence, bounds_report, compositions, max_ideal_power_decomposition, min_reciprocal_sum,
    monotonicity_check, naive_waldschmidt, naive_waldschmidt_max_ideal_power, waldschmidt,
    BalancedPartition, BoundsReport,
};
pub use limits::{generator_cap, set_generator_cap, DEFAULT_GENERATOR_CAP, GENERATOR_CAP_ENV};
pub use lp::{solve_min, LpOutcome, LpProblem, LpSolution};
pub use parse::{format_ideal, parse_ideal};
pub use poly::{
    check_np_sp_ip_chain, irreducible_hrep, sp_spec, witness_scaled_membership, ChainVerdict,
    PolyhedronHRep, PolyhedronVRep, RationalPoint, SymbolicPolyhedronSpec,
};
pub use random::{random_suite, IdealShape};
pub use scalar::ExactScalar;

pub type Rational = num_rational::BigRational;
pub type Point = RationalPoint<Rational>;
pub type HRep = PolyhedronHRep<Rational>;
pub type Lp = LpProblem<Rational>;
pub type Outcome = LpOutcome<Rational>;
pub type Bounds = BoundsReport<Rational>;
pub type Verdict = ChainVerdict<Rational>;
