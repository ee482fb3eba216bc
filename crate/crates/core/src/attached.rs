//! Modules presented by their minimal primes, and attached primes of the top
//! local cohomology module `H^n_a(M)`, `n = dim M`.
//!
//! Over a complete local ring, `p ∈ Assh(M)` is attached to `H^n_a(M)` exactly
//! when `a + p` is primary to the maximal ideal. That is the criterion
//! [`att_top`] evaluates.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;
use crate::ideal::{Dimension, Ideal, PrimeIdeal};
use crate::poly::Ring;
use crate::realize::{realize_subset, RealizeOptions};

/// A subset of `Assh(M)`, as sorted positions into
/// [`ModulePresentation::assh`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AttachedSet(Vec<usize>);

impl AttachedSet {
    pub fn new<I: IntoIterator<Item = usize>>(indices: I) -> AttachedSet {
        let set: BTreeSet<usize> = indices.into_iter().collect();
        AttachedSet(set.into_iter().collect())
    }

    pub fn empty() -> AttachedSet {
        AttachedSet(Vec::new())
    }

    /// `{0, .., len-1}`.
    pub fn full(len: usize) -> AttachedSet {
        AttachedSet((0..len).collect())
    }

    /// Bit `i` of `mask` selects position `i`.
    pub fn from_mask(mask: u64) -> AttachedSet {
        AttachedSet((0..64).filter(|i| mask >> i & 1 == 1).collect())
    }

    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, i| m | 1 << i)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.0.binary_search(&index).is_ok()
    }

    pub fn intersection(&self, other: &AttachedSet) -> AttachedSet {
        AttachedSet(self.0.iter().copied().filter(|i| other.contains(*i)).collect())
    }

    pub fn is_subset(&self, other: &AttachedSet) -> bool {
        self.0.iter().all(|i| other.contains(*i))
    }

    /// Positions in `0..len` not in the set.
    pub fn complement(&self, len: usize) -> AttachedSet {
        AttachedSet((0..len).filter(|i| !self.contains(*i)).collect())
    }
}

impl fmt::Display for AttachedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// A finite module `M` described by its minimal primes.
///
/// Only `Assh(M)` and `Supp(M)` matter for the top attached primes, and both
/// are determined by the minimal primes.
#[derive(Debug, Clone)]
pub struct ModulePresentation {
    ring: Ring,
    primes: Vec<PrimeIdeal>,
    dims: Vec<Dimension>,
    dim: usize,
    /// Indices into `primes`, ordered by canonical rendering.
    assh: Vec<usize>,
    maximal: Ideal,
}

impl ModulePresentation {
    pub fn new(ring: &Ring, primes: Vec<PrimeIdeal>) -> Result<ModulePresentation, Error> {
        if primes.is_empty() {
            return Err(Error::EmptyModule);
        }
        for p in &primes {
            if p.ideal().ring() != ring {
                return Err(crate::ideal::IdealError::RingMismatch.into());
            }
        }
        for i in 0..primes.len() {
            for j in 0..primes.len() {
                if i != j && primes[i].ideal().leq(primes[j].ideal())? {
                    return Err(Error::ComparablePrimes(i.min(j), i.max(j)));
                }
            }
        }
        let dims = primes
            .iter()
            .map(|p| p.ideal().dim_quotient())
            .collect::<Result<Vec<_>, _>>()?;
        let top = dims.iter().map(|d| d.value()).max().expect("nonempty");
        if top < 1 {
            return Err(Error::ZeroDimensional);
        }
        let mut keyed = Vec::new();
        for (i, d) in dims.iter().enumerate() {
            if d.value() == top {
                keyed.push((primes[i].ideal().canonical()?, i));
            }
        }
        keyed.sort();
        Ok(ModulePresentation {
            ring: ring.clone(),
            dims,
            dim: top as usize,
            assh: keyed.into_iter().map(|(_, i)| i).collect(),
            maximal: Ideal::maximal(ring),
            primes,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn primes(&self) -> &[PrimeIdeal] {
        &self.primes
    }

    pub fn prime_dims(&self) -> &[Dimension] {
        &self.dims
    }

    /// `n = dim M`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Indices into [`Self::primes`] of the maximal-dimensional primes.
    pub fn assh(&self) -> &[usize] {
        &self.assh
    }

    pub fn assh_len(&self) -> usize {
        self.assh.len()
    }

    /// The prime at position `pos` of `Assh(M)`.
    pub fn assh_prime(&self, pos: usize) -> &PrimeIdeal {
        &self.primes[self.assh[pos]]
    }

    /// Position in `Assh(M)` of the prime with the given index, if it is there.
    pub fn assh_position(&self, prime_index: usize) -> Option<usize> {
        self.assh.iter().position(|&i| i == prime_index)
    }

    pub fn full_set(&self) -> AttachedSet {
        AttachedSet::full(self.assh.len())
    }

    pub fn maximal_ideal(&self) -> &Ideal {
        &self.maximal
    }

    pub fn check_set(&self, set: &AttachedSet) -> Result<(), Error> {
        match set.indices().last() {
            Some(&index) if index >= self.assh.len() => Err(Error::IndexOutOfRange {
                index,
                len: self.assh.len(),
            }),
            _ => Ok(()),
        }
    }

    /// `⋂_{p ∈ set} p`; the unit ideal for the empty set.
    pub fn intersection_of(&self, set: &AttachedSet) -> Result<Ideal, Error> {
        self.check_set(set)?;
        let mut acc = Ideal::unit(&self.ring);
        for &pos in set.indices() {
            acc = acc.intersect(self.assh_prime(pos).ideal())?;
        }
        Ok(acc)
    }
}

/// Builds the presentation, computing `dim M` and `Assh(M)`.
pub fn present_module(ring: &Ring, primes: Vec<PrimeIdeal>) -> Result<ModulePresentation, Error> {
    ModulePresentation::new(ring, primes)
}

/// `Att(H^n_a(M)) = {p ∈ Assh(M) : a + p is m-primary}`.
pub fn att_top(a: &Ideal, module: &ModulePresentation) -> Result<AttachedSet, Error> {
    if a.ring() != module.ring() {
        return Err(crate::ideal::IdealError::RingMismatch.into());
    }
    if a.is_unit() {
        return Ok(AttachedSet::empty());
    }
    if a.equals(module.maximal_ideal())? {
        return Ok(module.full_set());
    }
    let mut hits = Vec::new();
    for pos in 0..module.assh_len() {
        if a.sum(module.assh_prime(pos).ideal())?.is_m_primary()? {
            hits.push(pos);
        }
    }
    Ok(AttachedSet::new(hits))
}

/// `Q ∈ Supp(M)`: `Q` contains a minimal prime of `M`.
pub fn supp_contains(module: &ModulePresentation, q: &Ideal) -> Result<bool, Error> {
    if q.is_unit() {
        return Ok(false);
    }
    for p in module.primes() {
        if p.ideal().leq(q)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// An ideal `b` with the same top attached primes as `a` and
/// `dim R/b <= 1`: `m` when every prime of `Assh(M)` is attached, otherwise
/// an intersection of dimension-one primes.
pub fn reduce_to_dim1(a: &Ideal, module: &ModulePresentation, options: &RealizeOptions) -> Result<Ideal, Error> {
    let att = att_top(a, module)?;
    if att.is_empty() {
        return Err(Error::EmptyAttachedSet);
    }
    if att == module.full_set() {
        return Ok(module.maximal_ideal().clone());
    }
    let b = realize_subset(&att, module, options)?.ideal;
    if b.dim_quotient()?.value() > 1 {
        return Err(Error::Fault(format!("reduction of {a} has dimension above one")));
    }
    Ok(b)
}

/// For linear primes: does `⋂_{p ∈ T} p ⊄ Σ_{p ∈ T'} p` hold, with
/// `T' = Assh(M) \ T`? A sum of linear primes is a linear prime, so it is its
/// own unique maximal-dimensional component. Empty `T'` counts as satisfied.
pub fn check_lemma25(target: &AttachedSet, module: &ModulePresentation) -> Result<bool, Error> {
    module.check_set(target)?;
    if target.is_empty() {
        return Err(Error::EmptyAttachedSet);
    }
    let rest = target.complement(module.assh_len());
    if rest.is_empty() {
        return Ok(true);
    }
    let mut sum = Ideal::zero(module.ring());
    for &pos in rest.indices() {
        let p = module.assh_prime(pos);
        if !p.is_linear() {
            return Err(Error::Unsupported(format!(
                "prime {p} is not linear; its sum with the other excluded primes needs a minimal-prime computation"
            )));
        }
        sum = sum.sum(p.ideal())?;
    }
    let avoid = module.intersection_of(target)?;
    Ok(!avoid.leq(&sum)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::four_planes;

    fn linear(ring: &Ring, gens: &[&str]) -> PrimeIdeal {
        PrimeIdeal::linear(Ideal::parse(ring, gens).unwrap()).unwrap()
    }

    #[test]
    fn presents_four_planes() {
        let c = four_planes();
        assert_eq!(c.module.dim(), 2);
        assert_eq!(c.module.assh_len(), 4);
        // canonical order: (X, W) < (X, Y) < (Y, Z) < (Z, W)
        let order: Vec<&str> = c.module.assh().iter().map(|&i| c.prime_names[i]).collect();
        assert_eq!(order, vec!["p4", "p1", "p3", "p2"]);
    }

    #[test]
    fn presentation_edge_cases() {
        let r = Ring::rational(&["X", "Y"]).unwrap();
        let m = present_module(&r, vec![linear(&r, &["X"])]).unwrap();
        assert_eq!((m.dim(), m.assh()), (1, &[0usize][..]));
        assert_eq!(
            present_module(&r, vec![linear(&r, &["X", "Y"])]).unwrap_err(),
            Error::ZeroDimensional
        );
        assert_eq!(present_module(&r, vec![]).unwrap_err(), Error::EmptyModule);
        assert_eq!(
            present_module(&r, vec![linear(&r, &["X"]), linear(&r, &["X", "Y"])]).unwrap_err(),
            Error::ComparablePrimes(0, 1)
        );
        // lower-dimensional components stay out of Assh
        let r3 = Ring::rational(&["X", "Y", "Z"]).unwrap();
        let m = present_module(&r3, vec![linear(&r3, &["X"]), linear(&r3, &["Y", "Z"])]).unwrap();
        assert_eq!(m.dim(), 2);
        assert_eq!(m.assh(), &[0]);
    }

    #[test]
    fn att_top_boundary_cases() {
        let c = four_planes();
        let m = &c.module;
        assert_eq!(att_top(&c.ideal("a1").ideal, m).unwrap(), c.set_of(&["p1"]));
        assert_eq!(
            att_top(&c.ideal("a123").ideal, m).unwrap(),
            c.set_of(&["p1", "p2", "p3"])
        );
        assert_eq!(att_top(&Ideal::unit(&c.ring), m).unwrap(), AttachedSet::empty());
        assert_eq!(att_top(&Ideal::maximal(&c.ring), m).unwrap(), m.full_set());
        let other = Ring::rational(&["X", "Y"]).unwrap();
        assert!(att_top(&Ideal::maximal(&other), m).is_err());
    }

    #[test]
    fn support_membership() {
        let c = four_planes();
        let q = Ideal::parse(&c.ring, &["X", "W", "Y+Z"]).unwrap();
        assert!(supp_contains(&c.module, &q).unwrap());
        let h = Ideal::parse(&c.ring, &["X+Y+Z+W"]).unwrap();
        assert!(!supp_contains(&c.module, &h).unwrap());
        assert!(supp_contains(&c.module, c.module.primes()[0].ideal()).unwrap());
    }

    #[test]
    fn lemma25_hypothesis() {
        let c = four_planes();
        let m = &c.module;
        assert!(check_lemma25(&c.set_of(&["p1", "p2", "p3"]), m).unwrap());
        assert!(!check_lemma25(&c.set_of(&["p1"]), m).unwrap());
        assert!(check_lemma25(&m.full_set(), m).unwrap());
        assert_eq!(
            check_lemma25(&AttachedSet::empty(), m).unwrap_err(),
            Error::EmptyAttachedSet
        );
    }

    #[test]
    fn lemma25_rejects_nonlinear_excluded_prime() {
        let r = Ring::rational(&["X", "Y", "Z", "W"]).unwrap();
        let cone = PrimeIdeal::asserted(Ideal::parse(&r, &["X*Y - Z*W"]).unwrap()).unwrap();
        let m = present_module(&r, vec![linear(&r, &["X"]), cone]).unwrap();
        let keep = AttachedSet::new([m.assh_position(0).unwrap()]);
        assert!(matches!(check_lemma25(&keep, &m), Err(Error::Unsupported(_))));
    }

    #[test]
    fn reduce_to_dim1_cases() {
        let c = four_planes();
        let m = &c.module;
        let opts = RealizeOptions::default();
        let b = reduce_to_dim1(m.maximal_ideal(), m, &opts).unwrap();
        assert!(b.equals(m.maximal_ideal()).unwrap());
        let a12 = &c.ideal("a12").ideal;
        let b = reduce_to_dim1(a12, m, &opts).unwrap();
        assert_eq!(att_top(&b, m).unwrap(), c.set_of(&["p1", "p2"]));
        assert_eq!(b.dim_quotient().unwrap(), Dimension::new(1));
        assert_eq!(
            reduce_to_dim1(&Ideal::unit(&c.ring), m, &opts).unwrap_err(),
            Error::EmptyAttachedSet
        );
    }

    #[test]
    fn attached_set_algebra() {
        let a = AttachedSet::new([3, 1, 1, 0]);
        assert_eq!(a.indices(), &[0, 1, 3]);
        assert_eq!(a.mask(), 0b1011);
        assert_eq!(AttachedSet::from_mask(0b1011), a);
        assert_eq!(a.complement(5), AttachedSet::new([2, 4]));
        assert_eq!(a.intersection(&AttachedSet::new([1, 2, 3])), AttachedSet::new([1, 3]));
        assert_eq!(a.to_string(), "{0, 1, 3}");
    }
}
