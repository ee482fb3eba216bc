//! Homogeneous ideals of the ambient ring.
//!
//! For homogeneous ideals, membership, Krull dimension and m-primariness in
//! the polynomial ring agree with the same questions in the power-series ring
//! over the same variables, so every ideal here is required to be homogeneous
//! (or the unit ideal).

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use thiserror::Error;

use crate::groebner::{buchberger, GroebnerError, ReducedGB};
use crate::linear::{echelon, linear_coefficients, Echelon};
use crate::poly::{Monomial, MonomialOrder, PolyError, Polynomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("generator `{0}` is not homogeneous")]
    NotHomogeneous(String),
    #[error("ideals belong to different rings")]
    RingMismatch,
    #[error("ideal {0} is not generated by linear forms")]
    NotLinear(String),
    #[error("a prime ideal must be proper")]
    NotProper,
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("internal inconsistency: {0}")]
    Fault(String),
}

/// Krull dimension of a quotient `R/I`; `-1` encodes the unit ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dimension(i32);

impl Dimension {
    pub const EMPTY: Dimension = Dimension(-1);

    pub fn new(value: i32) -> Dimension {
        assert!(value >= -1);
        Dimension(value)
    }

    pub fn value(self) -> i32 {
        self.0
    }

    /// Quotient is the zero ring.
    pub fn is_empty(self) -> bool {
        self.0 < 0
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Homogeneous ideal with a per-order cache of reduced Gröbner bases.
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    unit: bool,
    cache: RwLock<HashMap<MonomialOrder, Arc<ReducedGB>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Ideal {
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            unit: self.unit,
            cache: RwLock::new(self.cache.read().expect("cache lock").clone()),
        }
    }
}

impl Ideal {
    /// Ideal generated by `generators`. Zeros and repeats are dropped; a
    /// nonzero constant makes the unit ideal.
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Ideal, IdealError> {
        let mut kept: Vec<Polynomial> = Vec::new();
        for g in generators {
            if g.ring() != ring {
                return Err(IdealError::RingMismatch);
            }
            if g.is_zero() || kept.contains(&g) {
                continue;
            }
            if g.is_unit_constant() {
                return Ok(Ideal::unit(ring));
            }
            if !g.is_homogeneous() {
                return Err(IdealError::NotHomogeneous(g.to_string()));
            }
            kept.push(g);
        }
        Ok(Ideal::from_parts(ring, kept, false))
    }

    fn from_parts(ring: &Ring, generators: Vec<Polynomial>, unit: bool) -> Ideal {
        Ideal {
            ring: ring.clone(),
            generators,
            unit,
            cache: RwLock::new(HashMap::new()),
        }
    }

    /// Parses each string with the polynomial grammar.
    pub fn parse<S: AsRef<str>>(ring: &Ring, generators: &[S]) -> Result<Ideal, IdealError> {
        let gens = generators
            .iter()
            .map(|s| Polynomial::parse(s.as_ref(), ring))
            .collect::<Result<Vec<_>, _>>()?;
        Ideal::new(ring, gens)
    }

    /// The whole ring `R = (1)`.
    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::from_parts(ring, vec![Polynomial::one(ring)], true)
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::from_parts(ring, Vec::new(), false)
    }

    /// The maximal ideal generated by all variables.
    pub fn maximal(ring: &Ring) -> Ideal {
        let gens = (0..ring.nvars()).map(|i| Polynomial::variable(ring, i)).collect();
        Ideal::from_parts(ring, gens, false)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_unit(&self) -> bool {
        self.unit
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Reduced Gröbner basis for `order`, computed once and cached. Racing
    /// callers may both compute it; the first stored result wins.
    pub fn groebner(&self, order: MonomialOrder) -> Result<Arc<ReducedGB>, IdealError> {
        if let Some(gb) = self.cache.read().expect("cache lock").get(&order) {
            return Ok(Arc::clone(gb));
        }
        let gb = Arc::new(buchberger(&self.ring, &self.generators, order)?);
        let mut cache = self.cache.write().expect("cache lock");
        Ok(Arc::clone(cache.entry(order).or_insert(gb)))
    }

    /// Grevlex reduced basis.
    pub fn gb(&self) -> Result<Arc<ReducedGB>, IdealError> {
        self.groebner(MonomialOrder::Grevlex)
    }

    /// Canonical rendering: the grevlex reduced basis, e.g. `(X, Y + Z)`.
    pub fn canonical(&self) -> Result<String, IdealError> {
        Ok(self.gb()?.to_string())
    }

    fn check_ring(&self, other: &Ideal) -> Result<(), IdealError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(IdealError::RingMismatch)
        }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal, IdealError> {
        self.check_ring(other)?;
        if self.unit || other.unit {
            return Ok(Ideal::unit(&self.ring));
        }
        Ideal::new(
            &self.ring,
            self.generators.iter().chain(other.generators.iter()).cloned().collect(),
        )
    }

    /// `I ∩ J` by eliminating `t` from `t*I + (1-t)*J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal, IdealError> {
        self.check_ring(other)?;
        if self.unit {
            return Ok(other.clone());
        }
        if other.unit {
            return Ok(self.clone());
        }
        let ext = self.ring.with_auxiliary();
        let t = Polynomial::variable(&ext, 0);
        let one_minus_t = &Polynomial::one(&ext) - &t;
        let mut gens = Vec::with_capacity(self.generators.len() + other.generators.len());
        for f in &self.generators {
            gens.push(&t * &f.embed_shifted(&ext, 1));
        }
        for g in &other.generators {
            gens.push(&one_minus_t * &g.embed_shifted(&ext, 1));
        }
        let gb = buchberger(&ext, &gens, MonomialOrder::Elimination(1))?;
        let kept: Vec<Polynomial> = gb
            .elements()
            .iter()
            .filter_map(|g| g.restrict_shifted(&self.ring, 1))
            .collect();
        if kept.iter().any(|g| !g.is_homogeneous()) {
            return Err(IdealError::Fault(
                "intersection produced a non-homogeneous generator".into(),
            ));
        }
        Ideal::new(&self.ring, kept)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, IdealError> {
        self.contains_in(f, MonomialOrder::Grevlex)
    }

    pub fn contains_in(&self, f: &Polynomial, order: MonomialOrder) -> Result<bool, IdealError> {
        if f.ring() != &self.ring {
            return Err(IdealError::RingMismatch);
        }
        if self.unit || f.is_zero() {
            return Ok(true);
        }
        Ok(self.groebner(order)?.contains(f)?)
    }

    /// First generator of `self` outside `other`, if any.
    pub fn first_outside(&self, other: &Ideal) -> Result<Option<Polynomial>, IdealError> {
        self.check_ring(other)?;
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(Some(g.clone()));
            }
        }
        Ok(None)
    }

    /// `self ⊆ other`.
    pub fn leq(&self, other: &Ideal) -> Result<bool, IdealError> {
        Ok(self.first_outside(other)?.is_none())
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool, IdealError> {
        Ok(self.leq(other)? && other.leq(self)?)
    }

    /// Krull dimension of the quotient from the grevlex leading-term ideal.
    pub fn dim_quotient(&self) -> Result<Dimension, IdealError> {
        self.dim_quotient_in(MonomialOrder::Grevlex)
    }

    pub fn dim_quotient_in(&self, order: MonomialOrder) -> Result<Dimension, IdealError> {
        if self.unit {
            return Ok(Dimension::EMPTY);
        }
        let gb = self.groebner(order)?;
        if gb.is_unit() {
            return Ok(Dimension::EMPTY);
        }
        Ok(Dimension::new(
            max_independent_set(self.ring.nvars(), &gb.leading_monomials()) as i32,
        ))
    }

    /// Proper with zero-dimensional quotient.
    pub fn is_m_primary(&self) -> Result<bool, IdealError> {
        Ok(self.dim_quotient()? == Dimension::new(0))
    }

    fn linear_echelon(&self) -> Echelon {
        let rows: Vec<_> = self.generators.iter().filter_map(linear_coefficients).collect();
        echelon(self.ring.field(), &rows, self.ring.nvars())
    }

    /// Rank of the span of the degree-one generators.
    pub fn linear_rank(&self) -> usize {
        self.linear_echelon().rank()
    }

    /// Row-reduced linear generators (only meaningful for linear ideals).
    pub fn linear_basis(&self) -> Echelon {
        self.linear_echelon()
    }

    /// Every generator is a linear form, so the quotient is a polynomial ring
    /// in `d - rank` variables and the ideal is prime.
    pub fn is_linear_prime(&self) -> bool {
        !self.unit && self.generators.iter().all(|g| linear_coefficients(g).is_some())
    }
}

/// Size of the largest variable set containing the support of no monomial.
pub fn max_independent_set(nvars: usize, monomials: &[Monomial]) -> usize {
    let masks: Vec<u64> = monomials.iter().map(Monomial::support_mask).collect();
    let mut best = 0;
    for set in 0u64..(1 << nvars) {
        let size = set.count_ones() as usize;
        if size > best && masks.iter().all(|m| m & !set != 0) {
            best = size;
        }
    }
    best
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.unit {
            return write!(f, "(1)");
        }
        if self.generators.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

/// How primality of a [`PrimeIdeal`] is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certificate {
    /// Generated by linear forms; checked.
    Linear,
    /// Declared prime by the caller; not checked.
    Asserted,
}

#[derive(Debug, Clone)]
pub struct PrimeIdeal {
    ideal: Ideal,
    certificate: Certificate,
}

impl PrimeIdeal {
    pub fn linear(ideal: Ideal) -> Result<PrimeIdeal, IdealError> {
        if ideal.is_unit() {
            return Err(IdealError::NotProper);
        }
        if !ideal.is_linear_prime() {
            return Err(IdealError::NotLinear(ideal.to_string()));
        }
        Ok(PrimeIdeal {
            ideal,
            certificate: Certificate::Linear,
        })
    }

    /// Trusts the caller. A linear ideal still gets the linear certificate.
    pub fn asserted(ideal: Ideal) -> Result<PrimeIdeal, IdealError> {
        if ideal.is_unit() || ideal.gb()?.is_unit() {
            return Err(IdealError::NotProper);
        }
        let certificate = if ideal.is_linear_prime() {
            Certificate::Linear
        } else {
            Certificate::Asserted
        };
        Ok(PrimeIdeal { ideal, certificate })
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn certificate(&self) -> Certificate {
        self.certificate
    }

    pub fn is_linear(&self) -> bool {
        self.certificate == Certificate::Linear
    }
}

impl fmt::Display for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.ideal.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        Ring::rational(&["X", "Y", "Z", "W"]).unwrap()
    }

    fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::parse(r, gens).unwrap()
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        Polynomial::parse(s, r).unwrap()
    }

    #[test]
    fn rejects_inhomogeneous() {
        let r = ring();
        assert!(matches!(
            Ideal::parse(&r, &["X + Y^2"]),
            Err(IdealError::NotHomogeneous(_))
        ));
        assert!(Ideal::parse(&r, &["X", "3"]).unwrap().is_unit());
        assert!(Ideal::parse(&r, &["0"]).unwrap().is_zero());
    }

    #[test]
    fn sum_examples() {
        let r = ring();
        let s = ideal(&r, &["Z", "W"]).sum(&ideal(&r, &["X", "Y"])).unwrap();
        assert!(s.equals(&Ideal::maximal(&r)).unwrap());
        let i = ideal(&r, &["X^2", "Y*Z"]);
        assert!(i.sum(&Ideal::zero(&r)).unwrap().equals(&i).unwrap());
        assert!(i.sum(&Ideal::unit(&r)).unwrap().is_unit());
    }

    #[test]
    fn intersect_examples() {
        let r = ring();
        let i = ideal(&r, &["X", "Y"]).intersect(&ideal(&r, &["Z", "W"])).unwrap();
        // lcm oracle for monomial ideals
        assert!(i.equals(&ideal(&r, &["X*Z", "X*W", "Y*Z", "Y*W"])).unwrap());
        assert_eq!(i.canonical().unwrap(), "(X*Z, Y*Z, X*W, Y*W)");
        let j = ideal(&r, &["X^2+X*W", "Y"]);
        assert!(j.intersect(&Ideal::unit(&r)).unwrap().equals(&j).unwrap());
        let k = ideal(&r, &["X"]).intersect(&ideal(&r, &["Y"])).unwrap();
        assert!(k.equals(&ideal(&r, &["X*Y"])).unwrap());
    }

    #[test]
    fn membership_examples() {
        let r = ring();
        assert!(!ideal(&r, &["X", "W", "Y+Z"]).contains(&p(&r, "Y*Z")).unwrap());
        assert!(ideal(&r, &["X", "W", "Y+Z"]).contains(&p(&r, "Y*Z + Z^2")).unwrap());
        assert!(ideal(&r, &["X", "Y"]).contains(&p(&r, "Y*Z")).unwrap());
        assert!(ideal(&r, &["X", "Y"]).contains(&Polynomial::zero(&r)).unwrap());
    }

    #[test]
    fn containment_examples() {
        let r = ring();
        assert!(ideal(&r, &["X", "W"]).leq(&ideal(&r, &["X", "W", "Y+Z"])).unwrap());
        assert!(ideal(&r, &["X", "Y"]).leq(&ideal(&r, &["X", "W", "Y"])).unwrap());
        let i = ideal(&r, &["X^2", "Y*W"]);
        assert!(i.leq(&i).unwrap());
        assert!(!ideal(&r, &["X", "Z"]).leq(&ideal(&r, &["X", "W"])).unwrap());
    }

    #[test]
    fn dimension_examples() {
        let r = ring();
        assert_eq!(Ideal::maximal(&r).dim_quotient().unwrap(), Dimension::new(0));
        assert_eq!(ideal(&r, &["X", "W", "Y+Z"]).dim_quotient().unwrap(), Dimension::new(1));
        assert_eq!(
            ideal(&r, &["X*Z", "X*W", "Y*Z", "Y*W"]).dim_quotient().unwrap(),
            Dimension::new(2)
        );
        assert_eq!(Ideal::unit(&r).dim_quotient().unwrap(), Dimension::EMPTY);
        assert_eq!(Ideal::zero(&r).dim_quotient().unwrap(), Dimension::new(4));
    }

    #[test]
    fn m_primary_examples() {
        let r = ring();
        let reduced = ideal(&r, &["X", "Y", "Z^2+Y*Z", "W^2+W*X"]);
        assert!(reduced.is_m_primary().unwrap());
        assert!(!ideal(&r, &["Y", "Z", "X^2+X*W", "W^2+W*X"]).is_m_primary().unwrap());
        assert!(!Ideal::unit(&r).is_m_primary().unwrap());
    }

    #[test]
    fn linear_rank_examples() {
        let r = ring();
        let q = ideal(&r, &["X", "W", "Y+Z"]);
        assert_eq!(q.linear_rank(), 3);
        assert!(q.is_linear_prime());
        assert_eq!(ideal(&r, &["X", "2*X"]).linear_rank(), 1);
        assert!(!ideal(&r, &["Y^2+Y*Z", "X"]).is_linear_prime());
        assert!(PrimeIdeal::linear(ideal(&r, &["Y^2+Y*Z"])).is_err());
        assert!(PrimeIdeal::linear(Ideal::unit(&r)).is_err());
        let asserted = PrimeIdeal::asserted(ideal(&r, &["X*Y - Z*W"])).unwrap();
        assert_eq!(asserted.certificate(), Certificate::Asserted);
    }

    #[test]
    fn ring_mismatch() {
        let r = ring();
        let s = Ring::rational(&["X", "Y"]).unwrap();
        assert_eq!(
            Ideal::maximal(&r).sum(&Ideal::maximal(&s)).unwrap_err(),
            IdealError::RingMismatch
        );
        assert_eq!(
            Ideal::maximal(&r).intersect(&Ideal::maximal(&s)).unwrap_err(),
            IdealError::RingMismatch
        );
    }
}
