//! Session files: JSON declaring a ring, named primes, modules, ideals and a
//! query list. Everything is resolved and validated before any query runs.
//!
//! ```json
//! {
//!   "ring": { "variables": ["X", "Y", "Z", "W"], "characteristic": 0 },
//!   "primes": [ { "name": "p1", "generators": ["X", "Y"] } ],
//!   "modules": [ { "name": "M", "primes": ["p1", "p2"] } ],
//!   "ideals": [ { "name": "a", "generators": ["X^2 + X*W"] } ],
//!   "queries": [ { "op": "att", "module": "M", "ideal": "a" } ]
//! }
//! ```

use std::collections::HashSet;
use std::path::Path;

use lctop::{AttachedSet, Field, Ideal, ModulePresentation, PrimeIdeal, Ring};
use serde::Deserialize;
use thiserror::Error;

/// Ideal names that always exist unless shadowed: the maximal ideal and the
/// whole ring.
pub const MAXIMAL_NAME: &str = "m";
pub const UNIT_NAME: &str = "R";

#[derive(Debug, Error)]
pub enum SessionError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed session file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{location}: {message}")]
    Invalid { location: String, message: String },
}

fn invalid(location: impl Into<String>, message: impl ToString) -> SessionError {
    SessionError::Invalid {
        location: location.into(),
        message: message.to_string(),
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SessionFile {
    pub ring: RingDecl,
    #[serde(default)]
    pub primes: Vec<PrimeDecl>,
    /// Shorthand for a single module named `M`.
    #[serde(default)]
    pub module: Option<Vec<String>>,
    #[serde(default)]
    pub modules: Vec<ModuleDecl>,
    #[serde(default)]
    pub ideals: Vec<IdealDecl>,
    #[serde(default)]
    pub queries: Vec<Query>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingDecl {
    pub variables: Vec<String>,
    #[serde(default)]
    pub characteristic: u64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrimeDecl {
    pub name: String,
    pub generators: Vec<String>,
    /// Accept a non-linear prime without checking primality.
    #[serde(default)]
    pub assert_prime: bool,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDecl {
    pub name: String,
    pub primes: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealDecl {
    pub name: String,
    pub generators: Vec<String>,
}

/// A subset member: a prime name, or a position in the module's `assh` list.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum Member {
    Index(usize),
    Name(String),
}

#[derive(Debug, Deserialize)]
#[serde(tag = "op", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Query {
    Att {
        module: Option<String>,
        ideal: String,
    },
    Realize {
        module: Option<String>,
        subset: Vec<Member>,
    },
    ReduceDim1 {
        module: Option<String>,
        ideal: String,
    },
    Combine {
        module: Option<String>,
        ideals: [String; 2],
    },
    Enumerate {
        module: Option<String>,
    },
    Lemma25 {
        module: Option<String>,
        subset: Vec<Member>,
    },
}

impl Query {
    pub fn op(&self) -> &'static str {
        match self {
            Query::Att { .. } => "att",
            Query::Realize { .. } => "realize",
            Query::ReduceDim1 { .. } => "reduce-dim1",
            Query::Combine { .. } => "combine",
            Query::Enumerate { .. } => "enumerate",
            Query::Lemma25 { .. } => "lemma25",
        }
    }
}

pub struct NamedModule {
    pub name: String,
    pub module: ModulePresentation,
    /// Names of `module.primes()`, in declaration order.
    pub prime_names: Vec<String>,
}

impl NamedModule {
    /// Prime names of a set, in module declaration order.
    pub fn names(&self, set: &AttachedSet) -> Vec<String> {
        let mut idx: Vec<usize> = set.indices().iter().map(|&p| self.module.assh()[p]).collect();
        idx.sort();
        idx.into_iter().map(|i| self.prime_names[i].clone()).collect()
    }

    pub fn assh_names(&self) -> Vec<String> {
        self.module
            .assh()
            .iter()
            .map(|&i| self.prime_names[i].clone())
            .collect()
    }
}

#[derive(Debug, Clone)]
pub enum Resolved {
    Att { module: usize, ideal: usize },
    Realize { module: usize, subset: AttachedSet },
    ReduceDim1 { module: usize, ideal: usize },
    Combine { module: usize, ideals: [usize; 2] },
    Enumerate { module: usize },
    Lemma25 { module: usize, subset: AttachedSet },
}

impl Resolved {
    pub fn op(&self) -> &'static str {
        match self {
            Resolved::Att { .. } => "att",
            Resolved::Realize { .. } => "realize",
            Resolved::ReduceDim1 { .. } => "reduce-dim1",
            Resolved::Combine { .. } => "combine",
            Resolved::Enumerate { .. } => "enumerate",
            Resolved::Lemma25 { .. } => "lemma25",
        }
    }
}

/// A validated session. Ideals include declared primes, `m` and `R`.
pub struct Session {
    pub ring: Ring,
    pub modules: Vec<NamedModule>,
    pub ideals: Vec<(String, Ideal)>,
    pub queries: Vec<Resolved>,
}

impl Session {
    pub fn load(path: &Path) -> Result<Session, SessionError> {
        let text = std::fs::read_to_string(path).map_err(|source| SessionError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Session::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Session, SessionError> {
        let file: SessionFile = serde_json::from_str(text)?;
        Session::validate(file)
    }

    pub fn module_index(&self, name: &str) -> Option<usize> {
        self.modules.iter().position(|m| m.name == name)
    }

    pub fn validate(file: SessionFile) -> Result<Session, SessionError> {
        let field = Field::from_characteristic(file.ring.characteristic).ok_or_else(|| {
            invalid(
                "ring.characteristic",
                format!("{} is neither 0 nor a prime below 2^31", file.ring.characteristic),
            )
        })?;
        let ring = Ring::new(&file.ring.variables, field).map_err(|e| invalid("ring.variables", e))?;

        let mut names = HashSet::new();
        let mut claim = |name: &str, location: &str| -> Result<(), SessionError> {
            if name == MAXIMAL_NAME || name == UNIT_NAME {
                return Err(invalid(location, format!("`{name}` is reserved")));
            }
            if !names.insert(name.to_string()) {
                return Err(invalid(location, format!("duplicate name `{name}`")));
            }
            Ok(())
        };

        let parse_gens = |gens: &[String], location: &str| -> Result<Ideal, SessionError> {
            let mut polys = Vec::with_capacity(gens.len());
            for (k, g) in gens.iter().enumerate() {
                let p =
                    lctop::parse_polynomial(g, &ring).map_err(|e| invalid(format!("{location}.generators[{k}]"), e))?;
                polys.push(p);
            }
            Ideal::new(&ring, polys).map_err(|e| invalid(format!("{location}.generators"), e))
        };

        let mut primes: Vec<(String, PrimeIdeal)> = Vec::new();
        for (k, decl) in file.primes.iter().enumerate() {
            let location = format!("primes[{k}]");
            claim(&decl.name, &location)?;
            let ideal = parse_gens(&decl.generators, &location)?;
            let prime = if decl.assert_prime {
                PrimeIdeal::asserted(ideal)
            } else {
                PrimeIdeal::linear(ideal)
            }
            .map_err(|e| {
                let hint = if decl.assert_prime {
                    ""
                } else {
                    " (set \"assert_prime\": true to accept it unchecked)"
                };
                invalid(&location, format!("{e}{hint}"))
            })?;
            primes.push((decl.name.clone(), prime));
        }

        let mut module_decls: Vec<(String, Vec<String>, String)> = Vec::new();
        if let Some(list) = &file.module {
            module_decls.push(("M".to_string(), list.clone(), "module".to_string()));
        }
        for (k, decl) in file.modules.iter().enumerate() {
            module_decls.push((decl.name.clone(), decl.primes.clone(), format!("modules[{k}]")));
        }
        let mut modules: Vec<NamedModule> = Vec::new();
        for (name, prime_names, location) in module_decls {
            if modules.iter().any(|m| m.name == name) {
                return Err(invalid(&location, format!("duplicate module `{name}`")));
            }
            let mut members = Vec::new();
            for (k, pname) in prime_names.iter().enumerate() {
                let prime = primes
                    .iter()
                    .find(|(n, _)| n == pname)
                    .ok_or_else(|| invalid(format!("{location}.primes[{k}]"), format!("undeclared prime `{pname}`")))?;
                members.push(prime.1.clone());
            }
            let module = ModulePresentation::new(&ring, members).map_err(|e| {
                let e = match e {
                    lctop::Error::ComparablePrimes(i, j) => {
                        format!("primes `{}` and `{}` are comparable", prime_names[i], prime_names[j])
                    }
                    other => other.to_string(),
                };
                invalid(&location, e)
            })?;
            modules.push(NamedModule {
                name,
                module,
                prime_names,
            });
        }

        let mut ideals: Vec<(String, Ideal)> = primes.iter().map(|(n, p)| (n.clone(), p.ideal().clone())).collect();
        for (k, decl) in file.ideals.iter().enumerate() {
            let location = format!("ideals[{k}]");
            claim(&decl.name, &location)?;
            ideals.push((decl.name.clone(), parse_gens(&decl.generators, &location)?));
        }
        ideals.push((MAXIMAL_NAME.to_string(), Ideal::maximal(&ring)));
        ideals.push((UNIT_NAME.to_string(), Ideal::unit(&ring)));

        let mut session = Session {
            ring,
            modules,
            ideals,
            queries: Vec::new(),
        };
        for (k, q) in file.queries.iter().enumerate() {
            let resolved = session.resolve(q, &format!("queries[{k}]"))?;
            session.queries.push(resolved);
        }
        Ok(session)
    }

    fn resolve_module(&self, name: &Option<String>, location: &str) -> Result<usize, SessionError> {
        match name {
            Some(n) => self
                .module_index(n)
                .ok_or_else(|| invalid(format!("{location}.module"), format!("undeclared module `{n}`"))),
            None if self.modules.len() == 1 => Ok(0),
            None => Err(invalid(
                format!("{location}.module"),
                format!("{} modules declared; name one", self.modules.len()),
            )),
        }
    }

    fn resolve_ideal(&self, name: &str, location: &str) -> Result<usize, SessionError> {
        self.ideals
            .iter()
            .position(|(n, _)| n == name)
            .ok_or_else(|| invalid(location, format!("undeclared ideal `{name}`")))
    }

    fn resolve_subset(&self, module: usize, members: &[Member], location: &str) -> Result<AttachedSet, SessionError> {
        let named = &self.modules[module];
        let mut positions = Vec::new();
        for (k, member) in members.iter().enumerate() {
            let here = format!("{location}.subset[{k}]");
            let pos = match member {
                Member::Index(i) if *i < named.module.assh_len() => *i,
                Member::Index(i) => {
                    return Err(invalid(
                        here,
                        format!(
                            "index {i} out of range; module `{}` has {} top-dimensional primes",
                            named.name,
                            named.module.assh_len()
                        ),
                    ))
                }
                Member::Name(n) => {
                    let idx =
                        named.prime_names.iter().position(|p| p == n).ok_or_else(|| {
                            invalid(&here, format!("`{n}` is not a prime of module `{}`", named.name))
                        })?;
                    named
                        .module
                        .assh_position(idx)
                        .ok_or_else(|| invalid(&here, format!("`{n}` is not of maximal dimension")))?
                }
            };
            positions.push(pos);
        }
        Ok(AttachedSet::new(positions))
    }

    fn resolve(&self, q: &Query, location: &str) -> Result<Resolved, SessionError> {
        Ok(match q {
            Query::Att { module, ideal } => Resolved::Att {
                module: self.resolve_module(module, location)?,
                ideal: self.resolve_ideal(ideal, &format!("{location}.ideal"))?,
            },
            Query::ReduceDim1 { module, ideal } => Resolved::ReduceDim1 {
                module: self.resolve_module(module, location)?,
                ideal: self.resolve_ideal(ideal, &format!("{location}.ideal"))?,
            },
            Query::Realize { module, subset } => {
                let module = self.resolve_module(module, location)?;
                Resolved::Realize {
                    module,
                    subset: self.resolve_subset(module, subset, location)?,
                }
            }
            Query::Lemma25 { module, subset } => {
                let module = self.resolve_module(module, location)?;
                Resolved::Lemma25 {
                    module,
                    subset: self.resolve_subset(module, subset, location)?,
                }
            }
            Query::Combine { module, ideals } => Resolved::Combine {
                module: self.resolve_module(module, location)?,
                ideals: [
                    self.resolve_ideal(&ideals[0], &format!("{location}.ideals[0]"))?,
                    self.resolve_ideal(&ideals[1], &format!("{location}.ideals[1]"))?,
                ],
            },
            Query::Enumerate { module } => Resolved::Enumerate {
                module: self.resolve_module(module, location)?,
            },
        })
    }
}
