use std::time::Instant;

use lctop::realize::{Combined, RealizationPath};
use lctop::{
    att_top, check_lemma25, combine_intersection, enumerate_all, realize_subset, reduce_to_dim1, Ideal, MonomialOrder,
    RealizationReport, RealizeOptions,
};
use rayon::prelude::*;

use crate::report::{
    ChoiceInfo, ErrorKind, ModuleInfo, Outcome, Payload, QueryResult, Realization, Report, RingInfo, Row, Table,
};
use crate::session::{NamedModule, Resolved, Session};

#[derive(Debug, Clone, Copy)]
pub struct RunConfig {
    pub options: RealizeOptions,
    /// Order of the reduced Gröbner bases printed for output ideals.
    pub order: MonomialOrder,
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            options: RealizeOptions::default(),
            order: MonomialOrder::Grevlex,
            timings: false,
        }
    }
}

impl Report {
    /// Largest per-query error severity, or 0.
    pub fn exit_code(&self) -> u8 {
        self.results
            .iter()
            .filter_map(|r| match &r.outcome {
                Outcome::Error { kind, .. } => Some(kind.exit_code()),
                Outcome::Ok(_) => None,
            })
            .max()
            .unwrap_or(0)
    }
}

struct Ctx<'a> {
    session: &'a Session,
    config: &'a RunConfig,
}

impl Ctx<'_> {
    fn render(&self, ideal: &Ideal) -> Result<String, lctop::Error> {
        Ok(ideal.groebner(self.config.order)?.to_string())
    }

    fn realization(&self, named: &NamedModule, report: &RealizationReport) -> Result<Realization, lctop::Error> {
        let path = match report.path {
            RealizationPath::Maximal => "maximal",
            RealizationPath::Unit => "unit",
            RealizationPath::DimensionOne => "dimension-one",
            RealizationPath::Chain => "chain",
        };
        let assh = named.assh_names();
        let certificates = report
            .choices
            .iter()
            .map(|c| {
                Ok(ChoiceInfo {
                    excluded: assh[c.excluded].clone(),
                    prime: self.render(c.prime.ideal())?,
                    added_forms: c.added_forms.iter().map(|f| f.to_string()).collect(),
                    witness: c.witness.to_string(),
                })
            })
            .collect::<Result<_, lctop::Error>>()?;
        Ok(Realization {
            target: named.names(&report.target),
            ideal: self.render(&report.ideal)?,
            path,
            attached: named.names(&report.verified),
            certificates,
        })
    }

    fn run(&self, query: &Resolved) -> Result<Payload, lctop::Error> {
        let session = self.session;
        let options = &self.config.options;
        let ideal = |i: usize| &session.ideals[i].1;
        Ok(match query {
            Resolved::Att { module, ideal: i } => {
                let named = &session.modules[*module];
                Payload::Att {
                    ideal: session.ideals[*i].0.clone(),
                    attached: named.names(&att_top(ideal(*i), &named.module)?),
                }
            }
            Resolved::Realize { module, subset } => {
                let named = &session.modules[*module];
                let report = realize_subset(subset, &named.module, options)?;
                Payload::Realization(self.realization(named, &report)?)
            }
            Resolved::ReduceDim1 { module, ideal: i } => {
                let named = &session.modules[*module];
                let b = reduce_to_dim1(ideal(*i), &named.module, options)?;
                Payload::Reduction {
                    input: session.ideals[*i].0.clone(),
                    ideal: self.render(&b)?,
                    dimension: b.dim_quotient()?.value(),
                    attached: named.names(&att_top(&b, &named.module)?),
                }
            }
            Resolved::Combine { module, ideals } => {
                let named = &session.modules[*module];
                let Combined {
                    attached,
                    report,
                    direct,
                } = combine_intersection(ideal(ideals[0]), ideal(ideals[1]), &named.module, options)?;
                Payload::Combine {
                    inputs: [session.ideals[ideals[0]].0.clone(), session.ideals[ideals[1]].0.clone()],
                    attached: named.names(&attached),
                    realization: self.realization(named, &report)?,
                    direct_intersection: direct.map(|d| self.render(&d)).transpose()?,
                }
            }
            Resolved::Enumerate { module } => Payload::Enumerate(self.table(&session.modules[*module])?),
            Resolved::Lemma25 { module, subset } => {
                let named = &session.modules[*module];
                Payload::Lemma25 {
                    subset: named.names(subset),
                    holds: check_lemma25(subset, &named.module)?,
                }
            }
        })
    }

    fn table(&self, named: &NamedModule) -> Result<Table, lctop::Error> {
        let enumeration = enumerate_all(&named.module, &self.config.options)?;
        let rows = enumeration
            .rows
            .iter()
            .map(|r| {
                Ok(Row {
                    subset: named.names(&r.target),
                    ideal: self.render(&r.ideal)?,
                    attached: named.names(&r.verified),
                })
            })
            .collect::<Result<Vec<_>, lctop::Error>>()?;
        Ok(Table {
            count: rows.len(),
            distinct: enumeration.distinct,
            rows,
        })
    }

    fn result(&self, index: usize, query: &Resolved) -> QueryResult {
        let start = Instant::now();
        let outcome = match self.run(query) {
            Ok(payload) => Outcome::Ok(payload),
            Err(e) => Outcome::Error {
                kind: ErrorKind::of(&e),
                message: e.to_string(),
            },
        };
        let module = match query {
            Resolved::Att { module, .. }
            | Resolved::Realize { module, .. }
            | Resolved::ReduceDim1 { module, .. }
            | Resolved::Combine { module, .. }
            | Resolved::Enumerate { module }
            | Resolved::Lemma25 { module, .. } => self.session.modules[*module].name.clone(),
        };
        QueryResult {
            query: index,
            op: query.op(),
            module,
            outcome,
            elapsed_ms: self.config.timings.then(|| start.elapsed().as_secs_f64() * 1e3),
        }
    }
}

fn header(session: &Session, config: &RunConfig) -> Report {
    Report {
        ring: RingInfo {
            variables: session.ring.variables().to_vec(),
            characteristic: session.ring.field().characteristic(),
        },
        order: config.order.name(),
        modules: session
            .modules
            .iter()
            .map(|m| ModuleInfo {
                name: m.name.clone(),
                dimension: m.module.dim(),
                assh: m.assh_names(),
            })
            .collect(),
        results: Vec::new(),
    }
}

/// Runs every query of a validated session. Failures are recorded per query.
pub fn run_session(session: &Session, config: &RunConfig) -> Report {
    let ctx = Ctx { session, config };
    let mut report = header(session, config);
    report.results = if config.options.parallel {
        session
            .queries
            .par_iter()
            .enumerate()
            .map(|(i, q)| ctx.result(i, q))
            .collect()
    } else {
        session
            .queries
            .iter()
            .enumerate()
            .map(|(i, q)| ctx.result(i, q))
            .collect()
    };
    report
}

/// The subset table of one module, as a single-result report.
pub fn run_enumerate(session: &Session, module: usize, config: &RunConfig) -> Report {
    let ctx = Ctx { session, config };
    let mut report = header(session, config);
    report.results.push(ctx.result(0, &Resolved::Enumerate { module }));
    report
}
