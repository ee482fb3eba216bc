//! Built-in corpus: `M = R/(p1 p2 p3 p4)` over `R = k[[X,Y,Z,W]]`, whose
//! minimal primes are four coordinate planes through the origin.
//!
//! `dim M = 2` and `Assh(M) = {p1, p2, p3, p4}`. Each named ideal comes with
//! its known top attached set.

use crate::attached::{AttachedSet, ModulePresentation};
use crate::ideal::{Ideal, PrimeIdeal};
use crate::poly::Ring;

pub const VARIABLES: [&str; 4] = ["X", "Y", "Z", "W"];

pub const PRIMES: [(&str, [&str; 2]); 4] = [
    ("p1", ["X", "Y"]),
    ("p2", ["Z", "W"]),
    ("p3", ["Y", "Z"]),
    ("p4", ["X", "W"]),
];

/// `(name, generators, attached primes)`.
pub const IDEALS: [(&str, &[&str], &[&str]); 13] = [
    ("a1", &["Z", "W"], &["p1"]),
    ("a2", &["X", "Y"], &["p2"]),
    ("a3", &["X", "W"], &["p3"]),
    ("a4", &["Y", "Z"], &["p4"]),
    ("a12", &["Y^2+Y*Z", "Z^2+Y*Z", "X^2+X*W", "W^2+W*X"], &["p1", "p2"]),
    ("a34", &["Z^2+Z*W", "X^2+Y*X", "Y^2+Y*X", "W^2+W*Z"], &["p3", "p4"]),
    ("a13", &["Z^2+X*Z", "W^2+W*Y", "X^2+X*Z"], &["p1", "p3"]),
    ("a14", &["W^2+W*Y", "Z^2+Z*Y", "Y^2+Y*W"], &["p1", "p4"]),
    ("a23", &["X^2+X*Z", "Y^2+W*Y", "W^2+Z*W"], &["p2", "p3"]),
    ("a24", &["X^2+X*Z", "Y^2+W*Y", "Z^2+Z*W"], &["p2", "p4"]),
    ("a123", &["X", "W", "Y+Z"], &["p1", "p2", "p3"]),
    ("a234", &["X", "Y", "W+Z"], &["p2", "p3", "p4"]),
    ("a134", &["Z", "W", "Y+X"], &["p1", "p3", "p4"]),
];

pub struct NamedIdeal {
    pub name: &'static str,
    pub generators: &'static [&'static str],
    pub ideal: Ideal,
    pub expected: &'static [&'static str],
}

pub struct Corpus {
    pub ring: Ring,
    pub prime_names: Vec<&'static str>,
    pub module: ModulePresentation,
    pub ideals: Vec<NamedIdeal>,
}

impl Corpus {
    /// Attached set for a list of prime names.
    pub fn set_of(&self, names: &[&str]) -> AttachedSet {
        AttachedSet::new(names.iter().map(|n| {
            let index = self.prime_names.iter().position(|p| p == n).expect("known prime name");
            self.module.assh_position(index).expect("prime in Assh")
        }))
    }

    /// Prime names for an attached set, in `p1..p4` order.
    pub fn names_of(&self, set: &AttachedSet) -> Vec<&'static str> {
        let mut names: Vec<&'static str> = set
            .indices()
            .iter()
            .map(|&pos| self.prime_names[self.module.assh()[pos]])
            .collect();
        names.sort();
        names
    }

    pub fn ideal(&self, name: &str) -> &NamedIdeal {
        self.ideals.iter().find(|i| i.name == name).expect("known ideal name")
    }
}

/// Builds the corpus over the rationals.
pub fn four_planes() -> Corpus {
    let ring = Ring::rational(&VARIABLES).expect("valid ring");
    let primes = PRIMES
        .iter()
        .map(|(_, gens)| PrimeIdeal::linear(Ideal::parse(&ring, gens).expect("valid generators")).expect("linear"))
        .collect();
    let module = ModulePresentation::new(&ring, primes).expect("valid module");
    let ideals = IDEALS
        .iter()
        .map(|&(name, generators, expected)| NamedIdeal {
            name,
            generators,
            ideal: Ideal::parse(&ring, generators).expect("valid generators"),
            expected,
        })
        .collect();
    Corpus {
        ring,
        prime_names: PRIMES.iter().map(|(n, _)| *n).collect(),
        module,
        ideals,
    }
}
