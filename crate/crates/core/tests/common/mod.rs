//! Oracles that share no code with the engine: dense linear algebra over the
//! rationals and exhaustive enumeration.

#![allow(dead_code)]

use lctop::poly::{Coeff, Monomial};
use lctop::{Polynomial, Ring};
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::Rng as _;

/// Rank of a dense rational matrix by fraction-exact elimination.
pub fn rank(mut rows: Vec<Vec<Coeff>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for row in rows.iter_mut().skip(r + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot[c];
            for (x, p) in row.iter_mut().zip(&pivot).skip(c) {
                *x = &*x - &(&f * p);
            }
        }
        r += 1;
    }
    r
}

pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Vec<u32>> {
    if nvars == 1 {
        return vec![vec![degree]];
    }
    let mut out = Vec::new();
    for first in (0..=degree).rev() {
        for mut rest in monomials_of_degree(nvars - 1, degree - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn coefficient_of(f: &Polynomial, e: &[u32]) -> Coeff {
    f.terms()
        .iter()
        .find(|(m, _)| m.exponents() == e)
        .map(|(_, c)| c.clone())
        .unwrap_or_else(Coeff::zero)
}

fn degree_part(f: &Polynomial, degree: u32) -> Vec<(Vec<u32>, Coeff)> {
    f.terms()
        .iter()
        .filter(|(m, _)| m.exponents().iter().sum::<u32>() == degree)
        .map(|(m, c)| (m.exponents().to_vec(), c.clone()))
        .collect()
}

/// Membership of `f` in the ideal of homogeneous `gens`, decided degree by
/// degree in the Macaulay matrix of multiples `m * g` of that degree.
pub fn macaulay_member(gens: &[Polynomial], f: &Polynomial, nvars: usize) -> bool {
    let degrees: std::collections::BTreeSet<u32> = f.terms().iter().map(|(m, _)| m.exponents().iter().sum()).collect();
    degrees.into_iter().all(|e| {
        let columns = monomials_of_degree(nvars, e);
        let mut rows = Vec::new();
        for g in gens {
            let dg: u32 = g.terms()[0].0.exponents().iter().sum();
            if dg > e {
                continue;
            }
            for shift in monomials_of_degree(nvars, e - dg) {
                let mut row = vec![Coeff::zero(); columns.len()];
                for (m, c) in g.terms() {
                    let prod: Vec<u32> = m.exponents().iter().zip(&shift).map(|(a, b)| a + b).collect();
                    let col = columns.iter().position(|x| *x == prod).unwrap();
                    row[col] = c.clone();
                }
                rows.push(row);
            }
        }
        let base = rank(rows.clone());
        let mut target = vec![Coeff::zero(); columns.len()];
        for (m, c) in degree_part(f, e) {
            let col = columns.iter().position(|x| *x == m).unwrap();
            target[col] = c;
        }
        rows.push(target);
        rank(rows) == base
    })
}

/// `dim R/I` for a monomial ideal: the largest set of variables that
/// contains the support of no generator. Exhaustive over all subsets.
pub fn brute_force_dim(nvars: usize, gens: &[Vec<u32>]) -> i32 {
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return -1;
    }
    let mut best = 0;
    for subset in 0..(1usize << nvars) {
        let inside = |v: usize| subset >> v & 1 == 1;
        let free = gens
            .iter()
            .all(|g| g.iter().enumerate().any(|(v, &e)| e > 0 && !inside(v)));
        if free {
            best = best.max(subset.count_ones() as i32);
        }
    }
    best
}

pub fn ring_of(nvars: usize) -> Ring {
    let names = ["x", "y", "z", "w"];
    Ring::rational(&names[..nvars]).unwrap()
}

pub fn random_homogeneous(rng: &mut StdRng, ring: &Ring, degree: u32, max_terms: usize) -> Polynomial {
    let pool = monomials_of_degree(ring.nvars(), degree);
    let n = rng.gen_range(1..=max_terms);
    let terms = (0..n).map(|_| {
        let e = pool[rng.gen_range(0..pool.len())].clone();
        let c: i64 = rng.gen_range(-3..=3);
        (Monomial::new(e), Coeff::from_integer(c.into()))
    });
    Polynomial::from_terms(ring, terms)
}

/// Random homogeneous ideal in at most three variables, degree at most three.
pub fn random_ideal(rng: &mut StdRng) -> (Ring, Vec<Polynomial>) {
    let ring = ring_of(rng.gen_range(1..=3));
    let count = rng.gen_range(1..=3);
    let mut gens = Vec::new();
    while gens.len() < count {
        let degree = rng.gen_range(1..=3);
        let g = random_homogeneous(rng, &ring, degree, 3);
        if !g.is_zero() {
            gens.push(g);
        }
    }
    (ring, gens)
}

/// Random element of the ideal: a sum of homogeneous multiples of generators.
pub fn random_member(rng: &mut StdRng, ring: &Ring, gens: &[Polynomial]) -> Polynomial {
    let mut acc = Polynomial::zero(ring);
    for g in gens {
        let d = rng.gen_range(0..=2);
        let h = if d == 0 {
            Polynomial::constant(ring, Coeff::from_integer(rng.gen_range(-2i64..=2).into()))
        } else {
            random_homogeneous(rng, ring, d, 2)
        };
        acc = &acc + &(&h * g);
    }
    acc
}

/// Random monomial generators in `nvars` variables, degree at most three.
pub fn random_monomials(rng: &mut StdRng, nvars: usize) -> Vec<Vec<u32>> {
    let count = rng.gen_range(1..=4);
    (0..count)
        .map(|_| {
            let d = rng.gen_range(1..=3);
            let pool = monomials_of_degree(nvars, d);
            pool[rng.gen_range(0..pool.len())].clone()
        })
        .collect()
}

pub fn monomial_poly(ring: &Ring, e: &[u32]) -> Polynomial {
    Polynomial::from_terms(ring, [(Monomial::new(e.to_vec()), Coeff::one())])
}
