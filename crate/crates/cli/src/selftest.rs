//! Built-in check of the four-plane corpus: fifteen attached sets, then the
//! full subset enumeration.

use lctop::corpus::{self, Corpus};
use lctop::{att_top, enumerate_all, Ideal, RealizeOptions};
use serde::Serialize;

#[derive(Debug, Clone)]
pub struct CheckSpec {
    pub name: String,
    pub generators: Vec<String>,
    pub expected: Vec<String>,
}

fn case(name: &str, generators: &[&str], expected: &[&str]) -> CheckSpec {
    CheckSpec {
        name: name.to_string(),
        generators: generators.iter().map(|s| s.to_string()).collect(),
        expected: expected.iter().map(|s| s.to_string()).collect(),
    }
}

/// `m`, `R`, then the thirteen named corpus ideals.
pub fn default_checks() -> Vec<CheckSpec> {
    let all: Vec<&str> = corpus::PRIMES.iter().map(|(n, _)| *n).collect();
    let mut checks = vec![case("m", &corpus::VARIABLES, &all), case("R", &["1"], &[])];
    checks.extend(
        corpus::IDEALS
            .iter()
            .map(|(name, gens, expected)| case(name, gens, expected)),
    );
    checks
}

#[derive(Debug, Serialize)]
pub struct Check {
    pub ideal: String,
    pub expected: Vec<String>,
    pub got: Vec<String>,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct EnumerateCheck {
    pub expected: usize,
    pub count: usize,
    pub distinct: usize,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct SelftestReport {
    pub checks: Vec<Check>,
    pub enumerate: EnumerateCheck,
    pub passed: usize,
    pub failed: usize,
}

impl SelftestReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    /// One line per failed check.
    pub fn diff(&self) -> Vec<String> {
        let mut lines: Vec<String> = self
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| {
                format!(
                    "{}: expected {{{}}}, got {{{}}}",
                    c.ideal,
                    c.expected.join(", "),
                    c.got.join(", ")
                )
            })
            .collect();
        let e = &self.enumerate;
        if !e.pass {
            lines.push(format!(
                "enumerate: expected {} distinct attached sets, got {} rows with {} distinct",
                e.expected, e.count, e.distinct
            ));
        }
        lines
    }
}

fn evaluate(corpus: &Corpus, case: &CheckSpec) -> Check {
    let got = Ideal::parse(&corpus.ring, &case.generators)
        .map_err(lctop::Error::from)
        .and_then(|a| att_top(&a, &corpus.module))
        .map(|set| corpus.names_of(&set).into_iter().map(String::from).collect())
        .unwrap_or_else(|e| vec![format!("error: {e}")]);
    let mut expected = case.expected.clone();
    expected.sort();
    Check {
        ideal: case.name.clone(),
        pass: got == expected,
        expected,
        got,
    }
}

pub fn selftest_with(checks: &[CheckSpec], options: &RealizeOptions) -> SelftestReport {
    let corpus = corpus::four_planes();
    let checks: Vec<Check> = checks.iter().map(|c| evaluate(&corpus, c)).collect();
    let expected = 1usize << corpus.module.assh_len();
    let enumerate = match enumerate_all(&corpus.module, options) {
        Ok(e) => EnumerateCheck {
            expected,
            count: e.rows.len(),
            distinct: e.distinct,
            pass: e.rows.len() == expected && e.distinct == expected,
        },
        Err(_) => EnumerateCheck {
            expected,
            count: 0,
            distinct: 0,
            pass: false,
        },
    };
    let passed = checks.iter().filter(|c| c.pass).count() + usize::from(enumerate.pass);
    let failed = checks.len() + 1 - passed;
    SelftestReport {
        checks,
        enumerate,
        passed,
        failed,
    }
}

pub fn selftest(options: &RealizeOptions) -> SelftestReport {
    selftest_with(&default_checks(), options)
}
