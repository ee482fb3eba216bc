//! Buchberger's algorithm and normal forms.
//!
//! Pairs are processed with the normal strategy (smallest lcm degree first,
//! ties broken by the term order on the lcm, then by pair indices). The
//! coprime leading monomial criterion is always on; the chain criterion is
//! optional.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::poly::{Coeff, Field, Monomial, MonomialOrder, Polynomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("S-polynomial of a zero polynomial")]
    ZeroInput,
    #[error("order {order} needs more than the {nvars} variables of the ring")]
    OrderMismatch { order: String, nvars: usize },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuchbergerOptions {
    /// Skip pairs `(i, j)` when some `k` has a leading monomial dividing
    /// `lcm(i, j)` and both `(i, k)` and `(j, k)` were already treated.
    pub chain_criterion: bool,
}

/// Working polynomial with terms sorted by decreasing monomial in one order.
#[derive(Clone, Debug)]
struct Sorted {
    terms: Vec<(Monomial, Coeff)>,
}

impl Sorted {
    fn from_poly(p: &Polynomial, order: MonomialOrder) -> Sorted {
        Sorted {
            terms: p.sorted_terms(order),
        }
    }

    fn lead(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn make_monic(&mut self, field: Field) {
        if let Some((_, c)) = self.terms.first() {
            let inv = field.inv(c);
            for (_, d) in self.terms.iter_mut() {
                *d = field.mul(d, &inv);
            }
        }
    }

    /// `self - c * m * g`, where multiplication by `m` keeps `g` sorted.
    fn sub_scaled(&self, c: &Coeff, m: &Monomial, g: &Sorted, order: MonomialOrder, field: Field) -> Sorted {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut rest = g.terms.iter().map(|(t, d)| (t.mul(m), field.mul(c, d))).peekable();
        loop {
            let ord = match (self.terms.get(i), rest.peek()) {
                (Some(a), Some(b)) => order.compare(&a.0, &b.0),
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (None, None) => break,
            };
            match ord {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (t, d) = rest.next().expect("peeked");
                    out.push((t, field.neg(&d)));
                }
                Ordering::Equal => {
                    let (t, d) = rest.next().expect("peeked");
                    let v = field.sub(&self.terms[i].1, &d);
                    if !v.is_zero() {
                        out.push((t, v));
                    }
                    i += 1;
                }
            }
        }
        Sorted { terms: out }
    }

    fn to_poly(&self, ring: &Ring) -> Polynomial {
        Polynomial::from_terms(ring, self.terms.iter().cloned())
    }
}

/// Full reduction of `f` by `basis`; every basis element must be nonzero.
fn reduce(f: &Sorted, basis: &[Sorted], order: MonomialOrder, field: Field) -> Sorted {
    let mut p = f.clone();
    let mut remainder = Vec::new();
    while let Some((lm, lc)) = p.terms.first().cloned() {
        let divisor = basis.iter().find(|g| g.lead().divides(&lm));
        match divisor {
            Some(g) => {
                let factor = lm.div(g.lead()).expect("divisibility checked");
                let c = field.div(&lc, &g.terms[0].1);
                p = p.sub_scaled(&c, &factor, g, order, field);
            }
            None => {
                remainder.push((lm, lc));
                p.terms.remove(0);
            }
        }
    }
    Sorted { terms: remainder }
}

fn check_order(ring: &Ring, order: MonomialOrder) -> Result<(), GroebnerError> {
    match order {
        MonomialOrder::Elimination(k) if k > ring.nvars() => Err(GroebnerError::OrderMismatch {
            order: order.name(),
            nvars: ring.nvars(),
        }),
        _ => Ok(()),
    }
}

/// Remainder of `f` on division by `basis` under `order`: no term of the
/// result is divisible by a leading monomial of `basis`. Zero basis elements
/// are ignored.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: MonomialOrder) -> Result<Polynomial, GroebnerError> {
    check_order(f.ring(), order)?;
    if basis.iter().any(|g| g.ring() != f.ring()) {
        return Err(GroebnerError::RingMismatch);
    }
    let sorted: Vec<Sorted> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Sorted::from_poly(g, order))
        .collect();
    let field = f.ring().field();
    Ok(reduce(&Sorted::from_poly(f, order), &sorted, order, field).to_poly(f.ring()))
}

fn s_poly_sorted(f: &Sorted, g: &Sorted, order: MonomialOrder, field: Field) -> Sorted {
    let lcm = f.lead().lcm(g.lead());
    let mf = lcm.div(f.lead()).expect("lcm divisible");
    let mg = lcm.div(g.lead()).expect("lcm divisible");
    let cf = field.inv(&f.terms[0].1);
    let cg = field.inv(&g.terms[0].1);
    let left = Sorted {
        terms: f.terms.iter().map(|(t, c)| (t.mul(&mf), field.mul(c, &cf))).collect(),
    };
    left.sub_scaled(&cg, &mg, g, order, field)
}

/// `lcm/lt(f) * f - lcm/lt(g) * g`, with leading coefficients normalized to one.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: MonomialOrder) -> Result<Polynomial, GroebnerError> {
    if f.ring() != g.ring() {
        return Err(GroebnerError::RingMismatch);
    }
    check_order(f.ring(), order)?;
    if f.is_zero() || g.is_zero() {
        return Err(GroebnerError::ZeroInput);
    }
    let field = f.ring().field();
    let s = s_poly_sorted(&Sorted::from_poly(f, order), &Sorted::from_poly(g, order), order, field);
    Ok(s.to_poly(f.ring()))
}

/// Reduced Gröbner basis of an ideal for one monomial order.
///
/// Elements are monic, sorted by decreasing leading monomial, and no term of
/// any element is divisible by the leading monomial of another. The zero
/// ideal has no elements; the unit ideal is `[1]`.
#[derive(Clone, PartialEq, Eq)]
pub struct ReducedGB {
    ring: Ring,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
}

impl ReducedGB {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_unit_constant()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial(self.order).expect("nonzero element").clone())
            .collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial, GroebnerError> {
        normal_form(f, &self.elements, self.order)
    }

    /// Ideal membership.
    pub fn contains(&self, f: &Polynomial) -> Result<bool, GroebnerError> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

impl fmt::Display for ReducedGB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.elements.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for ReducedGB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ReducedGB[{}]{}", self.order.name(), self)
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: u32,
}

/// Reduced Gröbner basis of the ideal generated by `gens` in `ring`.
pub fn buchberger(ring: &Ring, gens: &[Polynomial], order: MonomialOrder) -> Result<ReducedGB, GroebnerError> {
    buchberger_with(ring, gens, order, BuchbergerOptions::default())
}

pub fn buchberger_with(
    ring: &Ring,
    gens: &[Polynomial],
    order: MonomialOrder,
    options: BuchbergerOptions,
) -> Result<ReducedGB, GroebnerError> {
    check_order(ring, order)?;
    if gens.iter().any(|g| g.ring() != ring) {
        return Err(GroebnerError::RingMismatch);
    }
    let field = ring.field();
    let mut basis: Vec<Sorted> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    // treated[i][j] for i < j
    let mut treated: Vec<Vec<bool>> = Vec::new();

    let add = |p: Sorted, basis: &mut Vec<Sorted>, pairs: &mut Vec<Pair>, treated: &mut Vec<Vec<bool>>| {
        let j = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let lcm = g.lead().lcm(p.lead());
            pairs.push(Pair {
                i,
                j,
                degree: lcm.degree(),
                lcm,
            });
        }
        for row in treated.iter_mut() {
            row.push(false);
        }
        treated.push(vec![false; j + 1]);
        basis.push(p);
    };

    for g in gens {
        let mut s = reduce(&Sorted::from_poly(g, order), &basis, order, field);
        if !s.is_zero() {
            s.make_monic(field);
            add(s, &mut basis, &mut pairs, &mut treated);
        }
    }

    while !pairs.is_empty() {
        let pick = (0..pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pairs[a], &pairs[b]);
                p.degree
                    .cmp(&q.degree)
                    .then_with(|| order.compare(&p.lcm, &q.lcm))
                    .then_with(|| (p.j, p.i).cmp(&(q.j, q.i)))
            })
            .expect("nonempty");
        let pair = pairs.swap_remove(pick);
        let (i, j) = (pair.i, pair.j);
        treated[i][j] = true;

        if basis[i].lead().is_coprime(basis[j].lead()) {
            continue;
        }
        if options.chain_criterion {
            let done = |a: usize, b: usize| if a < b { treated[a][b] } else { treated[b][a] };
            let chained = (0..basis.len())
                .any(|k| k != i && k != j && basis[k].lead().divides(&pair.lcm) && done(i, k) && done(j, k));
            if chained {
                continue;
            }
        }
        let s = s_poly_sorted(&basis[i], &basis[j], order, field);
        let mut h = reduce(&s, &basis, order, field);
        if !h.is_zero() {
            h.make_monic(field);
            add(h, &mut basis, &mut pairs, &mut treated);
        }
    }

    Ok(ReducedGB {
        ring: ring.clone(),
        order,
        elements: interreduce(basis, order, field)
            .iter()
            .map(|s| s.to_poly(ring))
            .collect(),
    })
}

/// Minimal basis followed by tail reduction; result sorted by decreasing lead.
fn interreduce(basis: Vec<Sorted>, order: MonomialOrder, field: Field) -> Vec<Sorted> {
    let mut minimal: Vec<Sorted> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(l, h)| l != k && h.lead().divides(g.lead()) && (h.lead() != g.lead() || l < k));
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Sorted> = minimal
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != k)
            .map(|(_, g)| g.clone())
            .collect();
        let head = Sorted {
            terms: vec![minimal[k].terms[0].clone()],
        };
        let tail = Sorted {
            terms: minimal[k].terms[1..].to_vec(),
        };
        let mut r = reduce(&tail, &others, order, field);
        r.terms.insert(0, head.terms[0].clone());
        r.make_monic(field);
        reduced.push(r);
    }
    reduced.sort_by(|a, b| order.compare(b.lead(), a.lead()));
    reduced
}
