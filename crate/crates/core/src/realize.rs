//! Construction of ideals with a prescribed top attached set.
//!
//! For a nonempty proper target `T ⊂ Assh(M)` and each excluded prime `q`,
//! a linear prime `Q ⊇ q` with `dim R/Q = 1` and `⋂_{p ∈ T} p ⊄ Q` is grown
//! one linear form at a time. The intersection of those `Q` has attached
//! set exactly `T`.
//!
//! Candidate forms only involve the free (non-pivot) variables of the current
//! prime. They are tried by increasing coefficient bound, then by support
//! size, then by support positions in variable order, then by coefficient
//! values in the order `1, -1, 2, -2, ...`. The first nonzero coefficient is
//! positive and the coefficients are coprime, so each line is tried once.

use std::collections::BTreeSet;

use num_integer::Integer;
use rayon::prelude::*;

use crate::attached::{att_top, AttachedSet, ModulePresentation};
use crate::error::Error;
use crate::ideal::{Ideal, PrimeIdeal};
use crate::poly::{Coeff, Polynomial};

/// Upper limit on `|Assh(M)|` for [`enumerate_all`].
pub const MAX_ENUMERATION: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RealizeOptions {
    /// Largest absolute coefficient tried in candidate linear forms.
    pub max_coeff: u32,
    /// Realize subsets concurrently in [`enumerate_all`].
    pub parallel: bool,
}

impl Default for RealizeOptions {
    fn default() -> Self {
        RealizeOptions {
            max_coeff: 4,
            parallel: false,
        }
    }
}

/// A dimension-one prime chosen over one excluded prime, with its certificate.
#[derive(Debug, Clone)]
pub struct Dim1Choice {
    /// Position in `Assh(M)` of the excluded prime `q`.
    pub excluded: usize,
    pub prime: PrimeIdeal,
    /// Linear forms added to `q`, in chain order.
    pub added_forms: Vec<Polynomial>,
    /// Element of `⋂_{p ∈ T} p` outside `prime`.
    pub witness: Polynomial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RealizationPath {
    /// `T = Assh(M)`: the maximal ideal.
    Maximal,
    /// `T = ∅`: the unit ideal.
    Unit,
    /// `dim M = 1`: intersection of the excluded primes.
    DimensionOne,
    /// Intersection of dimension-one primes found by the chain search.
    Chain,
}

#[derive(Debug, Clone)]
pub struct RealizationReport {
    pub target: AttachedSet,
    pub ideal: Ideal,
    pub path: RealizationPath,
    pub choices: Vec<Dim1Choice>,
    /// `att_top(ideal)`, equal to `target`.
    pub verified: AttachedSet,
}

/// Calls `visit` on candidate coefficient vectors of length `len` until it
/// returns `Some`.
fn search_coefficients<T>(len: usize, max_coeff: u32, mut visit: impl FnMut(&[i64]) -> Option<T>) -> Option<T> {
    let bound_values = |b: i64| -> Vec<i64> { (1..=b).flat_map(|v| [v, -v]).collect() };
    for bound in 1..=max_coeff as i64 {
        let values = bound_values(bound);
        for size in 1..=len {
            let mut support: Vec<usize> = (0..size).collect();
            loop {
                let mut picks = vec![0usize; size];
                'odometer: loop {
                    let coeffs: Vec<i64> = picks.iter().map(|&k| values[k]).collect();
                    let top = coeffs.iter().map(|c| c.abs()).max().unwrap_or(0);
                    let gcd = coeffs.iter().fold(0i64, |g, c| g.gcd(c));
                    if coeffs[0] > 0 && top == bound && gcd == 1 {
                        let mut full = vec![0i64; len];
                        for (slot, c) in support.iter().zip(coeffs.iter()) {
                            full[*slot] = *c;
                        }
                        if let Some(found) = visit(&full) {
                            return Some(found);
                        }
                    }
                    // last position turns fastest
                    let mut k = size;
                    loop {
                        if k == 0 {
                            break 'odometer;
                        }
                        k -= 1;
                        picks[k] += 1;
                        if picks[k] < values.len() {
                            break;
                        }
                        picks[k] = 0;
                    }
                }
                if !next_combination(&mut support, len) {
                    break;
                }
            }
        }
    }
    None
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// First reduced basis element of `avoid` outside `q`.
fn avoidance_witness(avoid: &Ideal, q: &Ideal) -> Result<Option<Polynomial>, Error> {
    for g in avoid.gb()?.elements() {
        if !q.contains(g)? {
            return Ok(Some(g.clone()));
        }
    }
    Ok(None)
}

/// Finds a linear prime `Q ⊇ q` with `dim R/Q = 1` and `⋂_{p ∈ T} p ⊄ Q`.
///
/// `q` must be a linear minimal prime of `M` in `Assh(M) \ T`, with `T`
/// nonempty.
pub fn find_dim1_prime(
    q: &PrimeIdeal,
    target: &AttachedSet,
    module: &ModulePresentation,
    options: &RealizeOptions,
) -> Result<Dim1Choice, Error> {
    module.check_set(target)?;
    if target.is_empty() {
        return Err(Error::EmptyAttachedSet);
    }
    let mut excluded = None;
    for pos in target.complement(module.assh_len()).indices() {
        if module.assh_prime(*pos).ideal().equals(q.ideal())? {
            excluded = Some(*pos);
        }
    }
    let excluded = excluded.ok_or_else(|| Error::NotExcludedPrime(q.to_string()))?;
    let avoid = module.intersection_of(target)?;
    chain_search(excluded, &avoid, module, options)
}

fn chain_search(
    excluded: usize,
    avoid: &Ideal,
    module: &ModulePresentation,
    options: &RealizeOptions,
) -> Result<Dim1Choice, Error> {
    let q = module.assh_prime(excluded);
    if !q.is_linear() {
        return Err(Error::Unsupported(format!(
            "excluded prime {q} is not linear; the chain search needs linear primes"
        )));
    }
    let ring = module.ring();
    let nvars = ring.nvars();
    let mut current = q.ideal().clone();
    let mut added = Vec::new();
    let mut dim = nvars - current.linear_rank();

    while dim > 1 {
        let free = current.linear_basis().free_columns(nvars);
        let step = search_coefficients(free.len(), options.max_coeff, |coeffs| {
            let form = Polynomial::from_terms(
                ring,
                free.iter().zip(coeffs).filter(|(_, c)| **c != 0).map(|(&v, &c)| {
                    (
                        crate::poly::Monomial::variable(nvars, v),
                        ring.field().convert(&Coeff::from_integer(c.into())).expect("integer"),
                    )
                }),
            );
            // a form that vanishes in positive characteristic is no candidate
            if form.is_zero() {
                return None;
            }
            let mut gens = current.generators().to_vec();
            gens.push(form.clone());
            let candidate = match Ideal::new(ring, gens) {
                Ok(c) => c,
                Err(e) => return Some(Err(Error::from(e))),
            };
            match avoidance_witness(avoid, &candidate) {
                Ok(Some(_)) => Some(Ok((form, candidate))),
                Ok(None) => None,
                Err(e) => Some(Err(e)),
            }
        });
        let (form, next) = match step {
            Some(found) => found?,
            None => {
                return Err(Error::ConstructionFailed {
                    prime: q.to_string(),
                    bound: options.max_coeff,
                })
            }
        };
        if nvars - next.linear_rank() != dim - 1 {
            return Err(Error::Fault(format!(
                "adding {form} to {current} did not lower the dimension by one"
            )));
        }
        added.push(form);
        current = next;
        dim -= 1;
    }

    let witness = avoidance_witness(avoid, &current)?.ok_or_else(|| {
        Error::Fault(format!(
            "intersection of the target primes lies inside the excluded prime {q}"
        ))
    })?;
    Ok(Dim1Choice {
        excluded,
        prime: PrimeIdeal::linear(current)?,
        added_forms: added,
        witness,
    })
}

/// Re-checks every certificate of a chain choice against the module.
pub fn verify_choice(choice: &Dim1Choice, target: &AttachedSet, module: &ModulePresentation) -> Result<bool, Error> {
    let q = choice.prime.ideal();
    let avoid = module.intersection_of(target)?;
    Ok(choice.prime.is_linear()
        && module.ring().nvars() - q.linear_rank() == 1
        && q.dim_quotient()?.value() == 1
        && module.assh_prime(choice.excluded).ideal().leq(q)?
        && avoid.contains(&choice.witness)?
        && !q.contains(&choice.witness)?
        && crate::attached::supp_contains(module, q)?)
}

/// An ideal `a` with `att_top(a, M) = T`, plus the certificates used.
pub fn realize_subset(
    target: &AttachedSet,
    module: &ModulePresentation,
    options: &RealizeOptions,
) -> Result<RealizationReport, Error> {
    module.check_set(target)?;
    let ring = module.ring();
    let rest = target.complement(module.assh_len());
    let (ideal, path, choices) = if rest.is_empty() {
        (module.maximal_ideal().clone(), RealizationPath::Maximal, Vec::new())
    } else if target.is_empty() {
        (Ideal::unit(ring), RealizationPath::Unit, Vec::new())
    } else if module.dim() == 1 {
        (
            module.intersection_of(&rest)?,
            RealizationPath::DimensionOne,
            Vec::new(),
        )
    } else {
        let avoid = module.intersection_of(target)?;
        let mut choices = Vec::with_capacity(rest.len());
        let mut acc = Ideal::unit(ring);
        for &pos in rest.indices() {
            let choice = chain_search(pos, &avoid, module, options)?;
            acc = acc.intersect(choice.prime.ideal())?;
            choices.push(choice);
        }
        (acc, RealizationPath::Chain, choices)
    };
    let verified = att_top(&ideal, module)?;
    if &verified != target {
        return Err(Error::Fault(format!(
            "realized ideal {ideal} has attached set {verified}, expected {target}"
        )));
    }
    Ok(RealizationReport {
        target: target.clone(),
        ideal,
        path,
        choices,
        verified,
    })
}

#[derive(Debug, Clone)]
pub struct Combined {
    pub attached: AttachedSet,
    pub report: RealizationReport,
    /// `a1 ∩ a2` when both inputs are proper; its attached set was checked.
    pub direct: Option<Ideal>,
}

/// An ideal whose attached set is `att_top(a1) ∩ att_top(a2)`, realized from
/// scratch and cross-checked against `a1 ∩ a2` when both are proper.
pub fn combine_intersection(
    a1: &Ideal,
    a2: &Ideal,
    module: &ModulePresentation,
    options: &RealizeOptions,
) -> Result<Combined, Error> {
    let attached = att_top(a1, module)?.intersection(&att_top(a2, module)?);
    let report = realize_subset(&attached, module, options)?;
    let direct = if a1.is_unit() || a2.is_unit() {
        None
    } else {
        let direct = a1.intersect(a2)?;
        let direct_att = att_top(&direct, module)?;
        if direct_att != attached {
            return Err(Error::Fault(format!(
                "{a1} ∩ {a2} has attached set {direct_att}, expected {attached}"
            )));
        }
        Some(direct)
    };
    Ok(Combined {
        attached,
        report,
        direct,
    })
}

#[derive(Debug, Clone)]
pub struct Enumeration {
    /// One report per subset, in increasing bit-mask order.
    pub rows: Vec<RealizationReport>,
    pub distinct: usize,
}

/// Realizes every subset of `Assh(M)` and checks that the `2^|Assh|`
/// attached sets are pairwise distinct.
pub fn enumerate_all(module: &ModulePresentation, options: &RealizeOptions) -> Result<Enumeration, Error> {
    let count = module.assh_len();
    if count > MAX_ENUMERATION {
        return Err(Error::TooManyComponents {
            count,
            limit: MAX_ENUMERATION,
        });
    }
    let run = |mask: u64| {
        let subset = AttachedSet::from_mask(mask);
        realize_subset(&subset, module, options).map_err(|e| Error::Subset {
            subset,
            source: Box::new(e),
        })
    };
    let masks: Vec<u64> = (0..1u64 << count).collect();
    let rows: Vec<RealizationReport> = if options.parallel {
        masks.into_par_iter().map(run).collect::<Result<_, _>>()?
    } else {
        masks.into_iter().map(run).collect::<Result<_, _>>()?
    };
    let distinct = rows.iter().map(|r| r.verified.clone()).collect::<BTreeSet<_>>().len();
    if distinct != rows.len() {
        return Err(Error::Fault(format!(
            "only {distinct} distinct attached sets among {} subsets",
            rows.len()
        )));
    }
    Ok(Enumeration { rows, distinct })
}
