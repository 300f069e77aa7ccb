use std::fs::File;
use std::io::{BufReader, BufWriter, Write};

use admg_markov::ci::{closure, AxiomSet, StatementUniverse, DEFAULT_CAP};
use admg_markov::fixtures::Fixture;
use admg_markov::format::parse_graph;
use admg_markov::gaussian::{
    random_parameters, run_tests, simulate, test_plan, Correction, DataTable, PartialCorrTest,
};
use admg_markov::markov::{
    ordered_local_invocations, ordered_local_markov, reduce_with_ordering, reduced_local_markov,
    reduction_procedure, Provenance,
};
use admg_markov::msep::{
    m_separated, m_separated_bruteforce_capped, SeparationQuery, BRUTEFORCE_CAP,
};
use admg_markov::{
    build_collapsed_ordering, Admg, CiStatement, Error, Result, VertexOrdering, VertexSet,
};
use serde::Serialize;

use crate::{Axioms, Basis, Cli, Command, CorrectionArg, Format, Mode, Oracle, Outcome};

/// Reads a graph file, falling back to a bundled fixture of that name.
fn load_graph(arg: &str) -> Result<Admg> {
    match std::fs::read_to_string(arg) {
        Ok(text) => parse_graph(&text),
        Err(e) => match Fixture::by_name(arg) {
            Some(f) => Ok(f.graph()),
            None => Err(Error::InvalidInput(format!(
                "cannot read `{arg}` ({e}) and no bundled fixture has that name"
            ))),
        },
    }
}

fn io(e: std::io::Error) -> Error {
    Error::InvalidInput(format!("i/o: {e}"))
}

fn json<W: Write, T: Serialize>(out: &mut W, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)
        .map_err(|e| Error::Internal(format!("json: {e}")))?;
    writeln!(out).map_err(io)
}

fn names(g: &Admg, s: &VertexSet) -> Vec<String> {
    g.set_names(s)
}

fn braces(g: &Admg, s: &VertexSet) -> String {
    format!("{{{}}}", names(g, s).join(","))
}

fn ordering_arg(g: &Admg, order: &Option<Vec<String>>) -> Result<Option<VertexOrdering>> {
    order
        .as_ref()
        .map(|names| VertexOrdering::from_names(g, names))
        .transpose()
}

fn universe(g: &Admg, cap: Option<usize>) -> Result<StatementUniverse> {
    StatementUniverse::with_cap(g.n(), cap.unwrap_or(DEFAULT_CAP))
}

#[derive(Serialize)]
struct StatementJson {
    x: Vec<String>,
    given: Vec<String>,
    indep: Vec<String>,
    provenance: &'static str,
    implied_by: Option<usize>,
}

impl StatementJson {
    fn new(g: &Admg, s: &CiStatement, provenance: Provenance) -> Self {
        Self {
            x: names(g, &s.x),
            given: names(g, &s.z),
            indep: names(g, &s.y),
            provenance: provenance.tag(),
            implied_by: provenance.implied_by(),
        }
    }
}

/// A statement list together with the ordering it was read off.
struct Listing {
    mode: Mode,
    ordering: VertexOrdering,
    statements: Vec<(CiStatement, Provenance)>,
    pruned: Vec<(CiStatement, Provenance)>,
    invocations: Option<usize>,
}

fn listing(g: &Admg, mode: Mode, order: &Option<Vec<String>>) -> Result<Listing> {
    let given = ordering_arg(g, order)?;
    match mode {
        Mode::Ordered => {
            let ordering = match given {
                Some(o) => o,
                None => build_collapsed_ordering(g)?.ordering,
            };
            let statements = ordered_local_markov(g, &ordering)?
                .into_iter()
                .map(|s| (s, Provenance::OrderedLocal))
                .collect();
            Ok(Listing {
                mode,
                invocations: Some(ordered_local_invocations(g, &ordering)?),
                ordering,
                statements,
                pruned: Vec::new(),
            })
        }
        Mode::Reduced => {
            let statements = reduced_local_markov(g)?
                .into_iter()
                .map(|s| (s, Provenance::ReducedForm))
                .collect();
            let ordering = match given {
                Some(o) => o,
                None => build_collapsed_ordering(g)?.ordering,
            };
            Ok(Listing {
                mode,
                ordering,
                statements,
                pruned: Vec::new(),
                invocations: None,
            })
        }
        Mode::Auto => {
            let basis = match given {
                Some(o) => reduce_with_ordering(g, &o)?,
                None => reduction_procedure(g)?,
            };
            let entries = |v: &[admg_markov::markov::BasisEntry]| {
                v.iter()
                    .map(|e| (e.statement.clone(), e.provenance))
                    .collect()
            };
            Ok(Listing {
                mode,
                statements: entries(&basis.statements),
                pruned: entries(&basis.pruned),
                ordering: basis.ordering,
                invocations: None,
            })
        }
    }
}

impl Listing {
    fn list(&self) -> Vec<CiStatement> {
        self.statements.iter().map(|(s, _)| s.clone()).collect()
    }
}

pub fn run<W: Write>(cli: &Cli, out: &mut W) -> Result<Outcome> {
    let format = cli.global.format;
    match &cli.command {
        Command::Components { graph } => {
            let g = load_graph(graph)?;
            let comps = g.c_components();
            let cyclic = g.has_mixed_directed_cycle();
            if format == Format::Json {
                #[derive(Serialize)]
                struct Out {
                    components: Vec<Vec<String>>,
                    mixed_directed_cycle: bool,
                }
                json(
                    out,
                    &Out {
                        components: comps.iter().map(|c| names(&g, c)).collect(),
                        mixed_directed_cycle: cyclic,
                    },
                )?;
            } else {
                for c in &comps {
                    writeln!(out, "{}", braces(&g, c)).map_err(io)?;
                }
                writeln!(
                    out,
                    "mixed directed cycle: {}",
                    if cyclic { "yes" } else { "no" }
                )
                .map_err(io)?;
            }
            Ok(Outcome::Success)
        }

        Command::Msep {
            graph,
            x,
            y,
            given,
            oracle,
        } => {
            let g = load_graph(graph)?;
            let set = |v: &[String]| {
                let v: Vec<&str> = v
                    .iter()
                    .map(|s| s.trim())
                    .filter(|s| !s.is_empty())
                    .collect();
                g.set(&v)
            };
            let q = SeparationQuery::new(set(x)?, set(y)?, set(given)?);
            let separated = match oracle {
                Oracle::Fast => m_separated(&g, &q)?,
                Oracle::Bruteforce => {
                    m_separated_bruteforce_capped(&g, &q, cli.global.cap.unwrap_or(BRUTEFORCE_CAP))?
                }
            };
            if format == Format::Json {
                #[derive(Serialize)]
                struct Out {
                    x: Vec<String>,
                    y: Vec<String>,
                    given: Vec<String>,
                    separated: bool,
                }
                json(
                    out,
                    &Out {
                        x: names(&g, &q.x_set),
                        y: names(&g, &q.y_set),
                        given: names(&g, &q.z_set),
                        separated,
                    },
                )?;
            } else {
                writeln!(out, "{}", if separated { "separated" } else { "connected" })
                    .map_err(io)?;
            }
            Ok(if separated {
                Outcome::Success
            } else {
                Outcome::Failed
            })
        }

        Command::Order { graph } => {
            let g = load_graph(graph)?;
            let c = build_collapsed_ordering(&g)?;
            let pair = |&(a, b): &(usize, usize)| [g.name(a).to_string(), g.name(b).to_string()];
            if format == Format::Json {
                #[derive(Serialize)]
                struct Out {
                    ordering: Vec<String>,
                    blocks: Vec<Vec<String>>,
                    merged: Vec<[String; 2]>,
                    removed: Vec<[String; 2]>,
                }
                json(
                    out,
                    &Out {
                        ordering: c.ordering.names(&g),
                        blocks: c.blocks.iter().map(|b| names(&g, b)).collect(),
                        merged: c.merged.iter().map(pair).collect(),
                        removed: c.removed.iter().map(pair).collect(),
                    },
                )?;
            } else {
                writeln!(out, "{}", c.ordering.names(&g).join(" ")).map_err(io)?;
                for e in &c.merged {
                    let [a, b] = pair(e);
                    writeln!(out, "merged {a} <-> {b}").map_err(io)?;
                }
                for e in &c.removed {
                    let [a, b] = pair(e);
                    writeln!(out, "removed {a} <-> {b}").map_err(io)?;
                }
            }
            Ok(Outcome::Success)
        }

        Command::Analyze { graph, mode, order } => {
            let g = load_graph(graph)?;
            let l = listing(&g, *mode, order)?;
            if format == Format::Json {
                #[derive(Serialize)]
                struct Out {
                    mode: &'static str,
                    ordering: Vec<String>,
                    statements: Vec<StatementJson>,
                    pruned: Vec<StatementJson>,
                    invocations: Option<usize>,
                }
                let render = |v: &[(CiStatement, Provenance)]| {
                    v.iter()
                        .map(|(s, p)| StatementJson::new(&g, s, *p))
                        .collect()
                };
                json(
                    out,
                    &Out {
                        mode: match l.mode {
                            Mode::Ordered => "ordered",
                            Mode::Reduced => "reduced",
                            Mode::Auto => "auto",
                        },
                        ordering: l.ordering.names(&g),
                        statements: render(&l.statements),
                        pruned: render(&l.pruned),
                        invocations: l.invocations,
                    },
                )?;
            } else {
                for (s, _) in &l.statements {
                    writeln!(out, "{}", s.display(&g)).map_err(io)?;
                }
            }
            Ok(Outcome::Success)
        }

        Command::Verify {
            graph,
            mode: _,
            axioms,
            basis,
            order,
        } => {
            let g = load_graph(graph)?;
            let ordering = ordering_arg(&g, order)?;
            let use_reduced = match basis {
                Basis::Reduced => true,
                Basis::Auto => false,
                Basis::Default => !g.has_mixed_directed_cycle(),
            };
            let (basis_list, basis_name, ordering) = if use_reduced {
                let ord = match ordering {
                    Some(o) => o,
                    None => build_collapsed_ordering(&g)?.ordering,
                };
                (reduced_local_markov(&g)?, "reduced", ord)
            } else {
                let b = match ordering {
                    Some(o) => reduce_with_ordering(&g, &o)?,
                    None => reduction_procedure(&g)?,
                };
                (b.list(), "auto", b.ordering)
            };
            let axiom_set = match axioms {
                Axioms::Semigraphoid => AxiomSet::SEMIGRAPHOID,
                Axioms::Composition => AxiomSet::COMPOSITIONAL,
            };
            let u = universe(&g, cli.global.cap)?;
            let closed = closure(u, &basis_list, axiom_set)?;
            let ordered = ordered_local_markov(&g, &ordering)?;
            #[derive(Serialize)]
            struct Check {
                statement: StatementJson,
                in_basis: bool,
                implied: bool,
                depth: Option<u32>,
            }
            let checks: Vec<Check> = ordered
                .iter()
                .map(|s| Check {
                    statement: StatementJson::new(&g, s, Provenance::OrderedLocal),
                    in_basis: basis_list.contains(s),
                    implied: closed.contains(s),
                    depth: closed.depth(s),
                })
                .collect();
            let derivable = checks.iter().filter(|c| c.implied).count();
            let all = derivable == checks.len();
            if format == Format::Json {
                #[derive(Serialize)]
                struct Out {
                    axioms: &'static str,
                    basis: &'static str,
                    basis_size: usize,
                    ordering: Vec<String>,
                    closure_size: usize,
                    checks: Vec<Check>,
                    derivable: usize,
                    all_derivable: bool,
                }
                json(
                    out,
                    &Out {
                        axioms: match axioms {
                            Axioms::Semigraphoid => "semigraphoid",
                            Axioms::Composition => "composition",
                        },
                        basis: basis_name,
                        basis_size: basis_list.len(),
                        ordering: ordering.names(&g),
                        closure_size: closed.len(),
                        derivable,
                        all_derivable: all,
                        checks,
                    },
                )?;
            } else {
                for (s, c) in ordered.iter().zip(&checks) {
                    if c.in_basis {
                        continue;
                    }
                    match c.depth {
                        Some(d) => writeln!(out, "implied      {}  (depth {d})", s.display(&g)),
                        None => writeln!(out, "not implied  {}", s.display(&g)),
                    }
                    .map_err(io)?;
                }
                writeln!(
                    out,
                    "{derivable} of {} ordered statements derivable from the {basis_name} basis ({} statements)",
                    checks.len(),
                    basis_list.len()
                )
                .map_err(io)?;
            }
            Ok(if all {
                Outcome::Success
            } else {
                Outcome::Failed
            })
        }

        Command::SemTests { graph, mode, order } => {
            let g = load_graph(graph)?;
            let plan = test_plan(&listing(&g, *mode, order)?.list());
            if format == Format::Json {
                json(out, &serde_json::json!({ "tests": plan_json(&g, &plan) }))?;
            } else {
                for t in &plan {
                    writeln!(out, "{}", t.display(&g)).map_err(io)?;
                }
            }
            Ok(Outcome::Success)
        }

        Command::Simulate {
            graph,
            n,
            out: path,
            param_seed,
        } => {
            let g = load_graph(graph)?;
            let p = random_parameters(&g, param_seed.unwrap_or(cli.global.seed))?;
            let data = simulate(&g, &p, *n, cli.global.seed)?;
            match path {
                Some(path) => {
                    let f = File::create(path).map_err(|e| {
                        Error::InvalidInput(format!("cannot create {}: {e}", path.display()))
                    })?;
                    data.write_csv(BufWriter::new(f))?;
                }
                None => data.write_csv(&mut *out)?,
            }
            Ok(Outcome::Success)
        }

        Command::SemCheck {
            graph,
            data,
            alpha,
            mode,
            order,
            correction,
        } => {
            let g = load_graph(graph)?;
            let f = File::open(data)
                .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", data.display())))?;
            let table = DataTable::read_csv(BufReader::new(f))?;
            let plan = test_plan(&listing(&g, *mode, order)?.list());
            let correction = match correction {
                CorrectionArg::Bonferroni => Correction::Bonferroni,
                CorrectionArg::None => Correction::None,
            };
            let report = run_tests(&g, &table, &plan, *alpha, correction)?;
            if format == Format::Json {
                json(out, &report)?;
            } else {
                for (t, r) in plan.iter().zip(&report.results) {
                    let label = t.display(&g);
                    let label = label.trim_end_matches(" = 0");
                    match (&r.error, r.r, r.z, r.p_value) {
                        (Some(e), ..) => writeln!(out, "{label}: error: {e}"),
                        (None, Some(rv), Some(z), Some(p)) => writeln!(
                            out,
                            "{label}: r = {rv:.4}, z = {z:.3}, p = {p:.4} {}",
                            if r.reject { "REJECT" } else { "ok" }
                        ),
                        _ => writeln!(out, "{label}: no result"),
                    }
                    .map_err(io)?;
                }
                writeln!(
                    out,
                    "{}: {} of {} tests rejected at alpha = {} ({}, per-test level {:.3e})",
                    if report.passed { "passed" } else { "failed" },
                    report.rejections(),
                    report.results.len(),
                    report.alpha,
                    report.correction.name(),
                    report.level
                )
                .map_err(io)?;
            }
            Ok(if report.passed {
                Outcome::Success
            } else {
                Outcome::Failed
            })
        }
    }
}

fn plan_json(g: &Admg, plan: &[PartialCorrTest]) -> serde_json::Value {
    plan.iter()
        .map(|t| {
            serde_json::json!({
                "x": g.name(t.x),
                "y": g.name(t.y),
                "given": g.set_names(&t.given),
                "source": t.source,
            })
        })
        .collect()
}
