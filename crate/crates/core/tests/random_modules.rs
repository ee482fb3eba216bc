mod common;

use common::rank;
use lctop::poly::Coeff;
use lctop::{enumerate_all, AttachedSet, Ideal, ModulePresentation, Polynomial, PrimeIdeal, RealizeOptions, Ring};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn linear_form(rng: &mut StdRng, ring: &Ring) -> (Polynomial, Vec<Coeff>) {
    let coeffs: Vec<i64> = (0..ring.nvars()).map(|_| rng.gen_range(-2..=2)).collect();
    let mut f = Polynomial::zero(ring);
    for (i, &c) in coeffs.iter().enumerate() {
        f = f + Polynomial::variable(ring, i).scale(&Coeff::from_integer(c.into()));
    }
    (f, coeffs.into_iter().map(|c| Coeff::from_integer(c.into())).collect())
}

/// `count` distinct linear primes of codimension `codim`.
fn random_module(rng: &mut StdRng, ring: &Ring, codim: usize, count: usize) -> ModulePresentation {
    let mut primes: Vec<PrimeIdeal> = Vec::new();
    while primes.len() < count {
        let (forms, rows): (Vec<_>, Vec<_>) = (0..codim).map(|_| linear_form(rng, ring)).unzip();
        if rank(rows) < codim {
            continue;
        }
        let ideal = Ideal::new(ring, forms).unwrap();
        if primes.iter().any(|p| p.ideal().equals(&ideal).unwrap()) {
            continue;
        }
        primes.push(PrimeIdeal::linear(ideal).unwrap());
    }
    ModulePresentation::new(ring, primes).unwrap()
}

#[test]
fn every_subset_of_random_linear_modules() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let options = RealizeOptions::default();
    for case in 0..16 {
        let nvars = rng.gen_range(4..=5);
        let codim = rng.gen_range(2..=nvars - 2);
        let count = rng.gen_range(2..=4);
        let names: Vec<String> = (0..nvars).map(|i| format!("x{i}")).collect();
        let ring = Ring::rational(&names).unwrap();
        let module = random_module(&mut rng, &ring, codim, count);
        assert_eq!(module.assh_len(), count);
        let result = enumerate_all(&module, &options).unwrap_or_else(|e| panic!("case {case}: {e}"));
        assert_eq!(result.distinct, 1 << count, "case {case}");
        for (mask, row) in result.rows.iter().enumerate() {
            assert_eq!(row.target, AttachedSet::from_mask(mask as u64));
            assert_eq!(row.verified, row.target);
            assert!(row.ideal.dim_quotient().unwrap().value() <= 1 || row.target == module.full_set());
        }
    }
}
