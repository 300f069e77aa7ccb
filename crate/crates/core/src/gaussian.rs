//! Linear structural equation models over an ADMG.
//!
//! Every vertex is `v = Σ c_{vp} p + ε_v` over its parents; errors are jointly
//! normal with covariance `Ω` supported on the diagonal and the bi-directed
//! edges. Vanishing partial correlations are tested with Fisher's z.

use std::collections::{BTreeMap, HashSet};
use std::io::{Read, Write};

use nalgebra::{Cholesky, DMatrix, DVector, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal, Uniform};
use serde::Serialize;
use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::{Error, Result};
use crate::graph::Admg;
use crate::ordering::VertexOrdering;
use crate::set::{VertexId, VertexSet};
use crate::statement::CiStatement;

/// Draws whose implied covariance is worse conditioned than this are redrawn.
pub const MAX_CONDITION: f64 = 1e8;
const MAX_DRAWS: usize = 100;
const SHRINK_RETRIES: usize = 10;
/// Supported error correlations below this are redrawn as near-unfaithful.
const MIN_ERROR_CORRELATION: f64 = 0.05;

/// Path coefficients and error covariance of a linear SEM.
#[derive(Clone, Debug, PartialEq)]
pub struct SemParameters {
    coeffs: BTreeMap<(VertexId, VertexId), f64>,
    error_cov: DMatrix<f64>,
}

impl SemParameters {
    /// `coeffs` maps each directed edge `(tail, head)` to its coefficient.
    /// The support of both arguments must match `g` exactly.
    pub fn new(
        g: &Admg,
        coeffs: BTreeMap<(VertexId, VertexId), f64>,
        error_cov: DMatrix<f64>,
    ) -> Result<Self> {
        let n = g.n();
        if coeffs.len() != g.directed_edges().len()
            || coeffs
                .keys()
                .any(|&(t, h)| t >= n || h >= n || !g.has_directed(t, h))
        {
            return Err(Error::InvalidInput(
                "path coefficients must be given for exactly the directed edges".into(),
            ));
        }
        if coeffs.values().any(|c| !c.is_finite()) {
            return Err(Error::InvalidInput(
                "path coefficients must be finite".into(),
            ));
        }
        if error_cov.shape() != (n, n) {
            return Err(Error::InvalidInput(format!(
                "error covariance must be {n}x{n}"
            )));
        }
        for i in 0..n {
            if error_cov[(i, i)].is_nan() || error_cov[(i, i)] <= 0.0 {
                return Err(Error::InvalidInput(format!(
                    "error variance of `{}` must be positive",
                    g.name(i)
                )));
            }
            for j in i + 1..n {
                let (a, b) = (error_cov[(i, j)], error_cov[(j, i)]);
                if a != b {
                    return Err(Error::InvalidInput(
                        "error covariance is not symmetric".into(),
                    ));
                }
                if a != 0.0 && !g.has_bidirected(i, j) {
                    return Err(Error::InvalidInput(format!(
                        "error covariance between `{}` and `{}` without a bi-directed edge",
                        g.name(i),
                        g.name(j)
                    )));
                }
            }
        }
        if Cholesky::new(error_cov.clone()).is_none() {
            return Err(Error::InvalidInput(
                "error covariance is not positive definite".into(),
            ));
        }
        Ok(Self { coeffs, error_cov })
    }

    pub fn coefficient(&self, tail: VertexId, head: VertexId) -> Option<f64> {
        self.coeffs.get(&(tail, head)).copied()
    }

    pub fn coefficients(&self) -> &BTreeMap<(VertexId, VertexId), f64> {
        &self.coeffs
    }

    pub fn error_cov(&self) -> &DMatrix<f64> {
        &self.error_cov
    }

    /// `(I - C)^{-1}`, filled row by row along `ord`.
    fn total_effects(&self, g: &Admg, ord: &VertexOrdering) -> DMatrix<f64> {
        let n = g.n();
        let mut b = DMatrix::<f64>::zeros(n, n);
        for &v in ord.as_slice() {
            b[(v, v)] = 1.0;
            for p in g.parents_of(v) {
                let c = self.coeffs[&(p, v)];
                let row = b.row(p).clone_owned() * c;
                let mut target = b.row_mut(v);
                target += row;
            }
        }
        b
    }
}

/// Draws generic parameters: coefficients of magnitude in `[0.3, 1]` with a
/// random sign, and per c-component `M Mᵀ + 0.1 I` restricted to the
/// bi-directed support.
pub fn random_parameters(g: &Admg, seed: u64) -> Result<SemParameters> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ord = VertexOrdering::new(g, g.topological_order())?;
    for _ in 0..MAX_DRAWS {
        let Some(p) = draw_parameters(g, &mut rng)? else {
            continue;
        };
        let sigma = implied_covariance(g, &p, &ord)?;
        if condition_number(&sigma) <= MAX_CONDITION {
            return Ok(p);
        }
    }
    Err(Error::Generation(format!(
        "no acceptable parameter draw in {MAX_DRAWS} attempts"
    )))
}

fn draw_parameters(g: &Admg, rng: &mut ChaCha8Rng) -> Result<Option<SemParameters>> {
    let magnitude = Uniform::new_inclusive(0.3, 1.0).expect("valid range");
    let coeffs = g
        .directed_edges()
        .iter()
        .map(|&e| {
            let c: f64 = magnitude.sample(rng);
            (e, if rng.random::<bool>() { c } else { -c })
        })
        .collect();

    let n = g.n();
    let mut omega = DMatrix::<f64>::zeros(n, n);
    for comp in g.c_components() {
        let ids: Vec<VertexId> = comp.iter().collect();
        let k = ids.len();
        let m = DMatrix::<f64>::from_fn(k, k, |_, _| rng.sample(StandardNormal));
        let full = &m * m.transpose() + DMatrix::<f64>::identity(k, k) * 0.1;
        let mut block = DMatrix::<f64>::from_fn(k, k, |i, j| {
            if i == j || g.has_bidirected(ids[i], ids[j]) {
                full[(i, j)]
            } else {
                0.0
            }
        });
        let mut tries = 0;
        while Cholesky::new(block.clone()).is_none() {
            if tries == SHRINK_RETRIES {
                return Ok(None);
            }
            for i in 0..k {
                for j in 0..k {
                    if i != j {
                        block[(i, j)] *= 0.5;
                    }
                }
            }
            tries += 1;
        }
        for i in 0..k {
            for j in 0..k {
                let r = block[(i, j)] / (block[(i, i)] * block[(j, j)]).sqrt();
                if i != j && g.has_bidirected(ids[i], ids[j]) && r.abs() < MIN_ERROR_CORRELATION {
                    return Ok(None);
                }
                omega[(ids[i], ids[j])] = block[(i, j)];
            }
        }
    }
    SemParameters::new(g, coeffs, omega).map(Some)
}

fn condition_number(sigma: &DMatrix<f64>) -> f64 {
    if sigma.is_empty() {
        return 1.0;
    }
    let eig = SymmetricEigen::new(sigma.clone()).eigenvalues;
    let (lo, hi) = eig.iter().fold((f64::INFINITY, 0.0f64), |(lo, hi), &e| {
        (lo.min(e), hi.max(e))
    });
    if lo <= 0.0 {
        f64::INFINITY
    } else {
        hi / lo
    }
}

/// `Σ = (I - C)^{-1} Ω (I - C)^{-T}`, indexed by vertex id.
pub fn implied_covariance(
    g: &Admg,
    p: &SemParameters,
    ord: &VertexOrdering,
) -> Result<DMatrix<f64>> {
    if p.error_cov.nrows() != g.n() || ord.len() != g.n() {
        return Err(Error::InvalidInput(
            "parameters or ordering do not match the graph".into(),
        ));
    }
    let b = p.total_effects(g, ord);
    let sigma = &b * &p.error_cov * b.transpose();
    Ok((&sigma + sigma.transpose()) * 0.5)
}

/// `ρ_{xy.Z}` from the precision matrix of `sigma` restricted to `{x, y} ∪ Z`.
pub fn partial_correlation(
    sigma: &DMatrix<f64>,
    x: VertexId,
    y: VertexId,
    given: &VertexSet,
) -> Result<f64> {
    let n = sigma.nrows();
    if x == y || given.contains(x) || given.contains(y) {
        return Err(Error::Precondition(
            "partial correlation needs distinct x, y outside the conditioning set".into(),
        ));
    }
    if x >= n || y >= n || given.iter().any(|v| v >= n) {
        return Err(Error::Precondition(
            "vertex outside the covariance matrix".into(),
        ));
    }
    let idx: Vec<usize> = [x, y].into_iter().chain(given.iter()).collect();
    let sub = sigma.select_rows(&idx).select_columns(&idx);
    let precision = Cholesky::new(sub)
        .ok_or_else(|| Error::Numeric("restricted covariance is not positive definite".into()))?
        .inverse();
    let rho = -precision[(0, 1)] / (precision[(0, 0)] * precision[(1, 1)]).sqrt();
    if !rho.is_finite() {
        return Err(Error::Numeric("partial correlation is not finite".into()));
    }
    Ok(rho.clamp(-1.0, 1.0))
}

/// Observations in rows, one named column per variable.
#[derive(Clone, Debug, PartialEq)]
pub struct DataTable {
    pub names: Vec<String>,
    pub rows: DMatrix<f64>,
}

impl DataTable {
    pub fn n_rows(&self) -> usize {
        self.rows.nrows()
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Sample covariance (divisor `n - 1`) over the columns named like the
    /// vertices of `g`, indexed by vertex id.
    pub fn covariance_for(&self, g: &Admg) -> Result<DMatrix<f64>> {
        let cols = g
            .names()
            .iter()
            .map(|name| {
                self.column(name).ok_or_else(|| {
                    Error::InvalidInput(format!("data has no column for vertex `{name}`"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let n = self.n_rows();
        if n < 2 {
            return Err(Error::InvalidInput(
                "sample covariance needs at least two rows".into(),
            ));
        }
        let data = self.rows.select_columns(&cols);
        let mean: DVector<f64> = data.row_mean().transpose();
        let mut centered = data;
        for mut row in centered.row_iter_mut() {
            row -= mean.transpose();
        }
        Ok(centered.transpose() * &centered / (n - 1) as f64)
    }

    pub fn read_csv<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(true)
            .from_reader(reader);
        let names: Vec<String> = rdr
            .headers()
            .map_err(|e| Error::InvalidInput(format!("csv header: {e}")))?
            .iter()
            .map(|h| h.trim().to_string())
            .collect();
        if names.is_empty() || names.iter().any(|n| n.is_empty()) {
            return Err(Error::InvalidInput(
                "csv header has an empty column name".into(),
            ));
        }
        let mut values = Vec::new();
        let mut n_rows = 0;
        for (i, record) in rdr.records().enumerate() {
            let record = record.map_err(|e| Error::InvalidInput(format!("csv: {e}")))?;
            for (field, name) in record.iter().zip(&names) {
                let v: f64 = field.trim().parse().map_err(|_| {
                    Error::InvalidInput(format!(
                        "csv row {}: column `{name}` is not a number: `{field}`",
                        i + 2
                    ))
                })?;
                values.push(v);
            }
            n_rows += 1;
        }
        Ok(Self {
            rows: DMatrix::from_row_slice(n_rows, names.len(), &values),
            names,
        })
    }

    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let io = |e: csv::Error| Error::InvalidInput(format!("csv write: {e}"));
        let mut w = csv::Writer::from_writer(writer);
        w.write_record(&self.names).map_err(io)?;
        for row in self.rows.row_iter() {
            w.write_record(row.iter().map(|v| v.to_string()))
                .map_err(io)?;
        }
        w.flush()
            .map_err(|e| Error::InvalidInput(format!("csv write: {e}")))
    }
}

/// `n` i.i.d. draws from the model, columns in vertex-id order.
pub fn simulate(g: &Admg, p: &SemParameters, n: usize, seed: u64) -> Result<DataTable> {
    if n == 0 {
        return Err(Error::InvalidInput(
            "sample count must be at least 1".into(),
        ));
    }
    let ord = VertexOrdering::new(g, g.topological_order())?;
    let l = Cholesky::new(p.error_cov.clone())
        .ok_or_else(|| Error::InvalidInput("error covariance is not positive definite".into()))?
        .l();
    let transform = p.total_effects(g, &ord) * l;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let v = g.n();
    let noise = DMatrix::<f64>::from_fn(v, n, |_, _| rng.sample(StandardNormal));
    let rows = (transform * noise).transpose();
    Ok(DataTable {
        names: g.names().to_vec(),
        rows,
    })
}

/// Hypothesis `ρ_{xy.given} = 0`; `source` indexes the statement it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialCorrTest {
    pub x: VertexId,
    pub y: VertexId,
    pub given: VertexSet,
    pub source: usize,
}

impl PartialCorrTest {
    /// `rho(a,e | d) = 0`, or `rho(a,e) = 0` when nothing is given.
    pub fn display(&self, g: &Admg) -> String {
        if self.given.is_empty() {
            format!("rho({},{}) = 0", g.name(self.x), g.name(self.y))
        } else {
            format!(
                "rho({},{} | {}) = 0",
                g.name(self.x),
                g.name(self.y),
                g.set_names(&self.given).join(",")
            )
        }
    }
}

/// One test per pair `(x, y)` in `X × Y` of each statement, first occurrence kept.
pub fn test_plan(statements: &[CiStatement]) -> Vec<PartialCorrTest> {
    let mut seen = HashSet::new();
    let mut plan = Vec::new();
    for (source, s) in statements.iter().enumerate() {
        for x in &s.x {
            for y in &s.y {
                if seen.insert((x.min(y), x.max(y), s.z.clone())) {
                    plan.push(PartialCorrTest {
                        x,
                        y,
                        given: s.z.clone(),
                        source,
                    });
                }
            }
        }
    }
    plan
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Correction {
    #[default]
    Bonferroni,
    None,
}

impl Correction {
    pub fn name(self) -> &'static str {
        match self {
            Correction::Bonferroni => "bonferroni",
            Correction::None => "none",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TestResult {
    pub x: String,
    pub y: String,
    pub given: Vec<String>,
    pub source: usize,
    pub r: Option<f64>,
    pub z: Option<f64>,
    pub p_value: Option<f64>,
    pub reject: bool,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TestReport {
    pub statistic: &'static str,
    pub correction: Correction,
    pub alpha: f64,
    /// Per-test level after correction.
    pub level: f64,
    pub n: usize,
    pub results: Vec<TestResult>,
    /// No test rejected and none failed to run.
    pub passed: bool,
}

impl TestReport {
    pub fn rejections(&self) -> usize {
        self.results.iter().filter(|r| r.reject).count()
    }
}

/// Two-sided Fisher z test of each planned vanishing partial correlation.
pub fn run_tests(
    g: &Admg,
    data: &DataTable,
    plan: &[PartialCorrTest],
    alpha: f64,
    correction: Correction,
) -> Result<TestReport> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidInput(format!(
            "alpha must lie in (0, 1), got {alpha}"
        )));
    }
    let n = data.n_rows();
    let level = match correction {
        Correction::Bonferroni if !plan.is_empty() => alpha / plan.len() as f64,
        _ => alpha,
    };
    let sigma = if plan.is_empty() {
        None
    } else {
        Some(data.covariance_for(g)?)
    };
    let normal = Normal::standard();
    let results = plan
        .iter()
        .map(|t| {
            let mut res = TestResult {
                x: g.name(t.x).to_string(),
                y: g.name(t.y).to_string(),
                given: g.set_names(&t.given),
                source: t.source,
                r: None,
                z: None,
                p_value: None,
                reject: false,
                error: None,
            };
            let df = n as f64 - t.given.len() as f64 - 3.0;
            if df <= 0.0 {
                res.error = Some(format!(
                    "needs more than {} observations, have {n}",
                    t.given.len() + 3
                ));
                return res;
            }
            let sigma = sigma.as_ref().expect("plan is non-empty");
            match partial_correlation(sigma, t.x, t.y, &t.given) {
                Ok(r) => {
                    let z = df.sqrt() * r.atanh();
                    let p = (2.0 * normal.cdf(-z.abs())).clamp(0.0, 1.0);
                    res.r = Some(r);
                    res.z = Some(z);
                    res.p_value = Some(p);
                    res.reject = p < level;
                }
                Err(e) => res.error = Some(e.to_string()),
            }
            res
        })
        .collect::<Vec<_>>();
    let passed = results.iter().all(|r| !r.reject && r.error.is_none());
    Ok(TestReport {
        statistic: "fisher-z",
        correction,
        alpha,
        level,
        n,
        results,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn topo(g: &Admg) -> VertexOrdering {
        VertexOrdering::new(g, g.topological_order()).unwrap()
    }

    #[test]
    fn empty_graph_identity() {
        let g = Admg::new(&["x", "y"], &[], &[]).unwrap();
        let p = SemParameters::new(&g, BTreeMap::new(), DMatrix::identity(2, 2)).unwrap();
        assert_eq!(
            implied_covariance(&g, &p, &topo(&g)).unwrap(),
            DMatrix::identity(2, 2)
        );
    }

    #[test]
    fn single_edge_closed_form() {
        let g = Admg::new::<&str>(&[], &[("x", "y")], &[]).unwrap();
        let c = 0.7;
        let p =
            SemParameters::new(&g, BTreeMap::from([((0, 1), c)]), DMatrix::identity(2, 2)).unwrap();
        let s = implied_covariance(&g, &p, &topo(&g)).unwrap();
        assert!((s[(1, 1)] - (c * c + 1.0)).abs() < 1e-15);
        assert!((s[(0, 1)] - c).abs() < 1e-15);
        let rho = partial_correlation(&s, 0, 1, &VertexSet::new()).unwrap();
        assert!((rho - c / (c * c + 1.0f64).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn support_is_enforced() {
        let g = Admg::new::<&str>(&["z"], &[("x", "y")], &[]).unwrap();
        let mut omega = DMatrix::identity(3, 3);
        assert!(SemParameters::new(&g, BTreeMap::new(), omega.clone()).is_err());
        assert!(SemParameters::new(&g, BTreeMap::from([((1, 0), 0.5)]), omega.clone()).is_err());
        omega[(0, 2)] = 0.1;
        omega[(2, 0)] = 0.1;
        assert!(SemParameters::new(&g, BTreeMap::from([((0, 1), 0.5)]), omega).is_err());
        let mut bad = DMatrix::identity(3, 3);
        bad[(2, 2)] = -1.0;
        assert!(SemParameters::new(&g, BTreeMap::from([((0, 1), 0.5)]), bad).is_err());
    }

    #[test]
    fn random_parameters_match_figure2_support() {
        let g = fixtures::figure2();
        let p = random_parameters(&g, 3).unwrap();
        assert_eq!(p, random_parameters(&g, 3).unwrap());
        assert_ne!(p, random_parameters(&g, 4).unwrap());
        for i in 0..g.n() {
            for j in 0..g.n() {
                let nonzero = p.error_cov()[(i, j)] != 0.0;
                assert_eq!(nonzero, i == j || g.has_bidirected(i, j));
            }
        }
        for &(t, h) in g.directed_edges() {
            let c = p.coefficient(t, h).unwrap().abs();
            assert!((0.3..=1.0).contains(&c));
        }
    }

    #[test]
    fn dag_errors_are_diagonal() {
        let g = Admg::new::<&str>(&[], &[("a", "b"), ("b", "c")], &[]).unwrap();
        let p = random_parameters(&g, 1).unwrap();
        let o = p.error_cov();
        assert!((0..3).all(|i| (0..3).all(|j| i == j || o[(i, j)] == 0.0)));
    }

    #[test]
    fn figure2_vanishing_correlations() {
        let g = fixtures::figure2();
        let ord = VertexOrdering::from_names(&g, &["e", "d", "a", "b", "c"]).unwrap();
        let id = |n| g.id(n).unwrap();
        let d = g.set(&["d"]).unwrap();
        for seed in 0..20 {
            let p = random_parameters(&g, seed).unwrap();
            let s = implied_covariance(&g, &p, &ord).unwrap();
            for v in ["a", "b", "c"] {
                assert!(partial_correlation(&s, id(v), id("e"), &d).unwrap().abs() < 1e-9);
            }
            assert!(partial_correlation(&s, id("a"), id("b"), &d).unwrap().abs() > 1e-6);
        }
    }

    #[test]
    fn partial_correlation_preconditions() {
        let s = DMatrix::identity(3, 3);
        assert!(partial_correlation(&s, 0, 0, &VertexSet::new()).is_err());
        assert!(partial_correlation(&s, 0, 1, &VertexSet::singleton(1)).is_err());
        assert!(partial_correlation(&s, 0, 5, &VertexSet::new()).is_err());
        let singular = DMatrix::from_element(3, 3, 1.0);
        assert!(matches!(
            partial_correlation(&singular, 0, 1, &VertexSet::singleton(2)),
            Err(Error::Numeric(_))
        ));
    }

    #[test]
    fn plans_for_figure2_lists() {
        let g = fixtures::figure2();
        let ord = VertexOrdering::from_names(&g, &["e", "d", "a", "b", "c"]).unwrap();
        let ordered = crate::markov::ordered_local_markov(&g, &ord).unwrap();
        let reduced = crate::markov::reduced_local_markov(&g).unwrap();
        let show = |plan: Vec<PartialCorrTest>| -> Vec<String> {
            let mut v: Vec<_> = plan.iter().map(|t| t.display(&g)).collect();
            v.sort();
            v
        };
        assert_eq!(
            show(test_plan(&reduced)),
            ["rho(a,e | d) = 0", "rho(b,e | d) = 0", "rho(c,e | d) = 0"]
        );
        assert_eq!(
            show(test_plan(&ordered)),
            [
                "rho(a,e | d) = 0",
                "rho(b,e | a,d) = 0",
                "rho(b,e | d) = 0",
                "rho(c,e | a,b,d) = 0",
                "rho(c,e | a,d) = 0",
                "rho(c,e | b,d) = 0",
                "rho(c,e | d) = 0",
            ]
        );
        assert!(test_plan(&[]).is_empty());
    }

    #[test]
    fn simulate_is_seeded() {
        let g = fixtures::figure2();
        let p = random_parameters(&g, 0).unwrap();
        let a = simulate(&g, &p, 50, 1).unwrap();
        assert_eq!(a, simulate(&g, &p, 50, 1).unwrap());
        assert_ne!(a, simulate(&g, &p, 50, 2).unwrap());
        assert_eq!(simulate(&g, &p, 1, 1).unwrap().n_rows(), 1);
        assert!(simulate(&g, &p, 0, 1).is_err());
    }

    #[test]
    fn csv_round_trip() {
        let g = fixtures::figure1();
        let p = random_parameters(&g, 0).unwrap();
        let data = simulate(&g, &p, 5, 9).unwrap();
        let mut buf = Vec::new();
        data.write_csv(&mut buf).unwrap();
        assert!(String::from_utf8_lossy(&buf).starts_with("a,b,c,d\n"));
        assert_eq!(DataTable::read_csv(buf.as_slice()).unwrap(), data);
        assert!(DataTable::read_csv("a,b\n1,x\n".as_bytes()).is_err());
    }

    #[test]
    fn zero_correlation_gives_unit_p_value() {
        let g = Admg::new(&["x", "y"], &[], &[]).unwrap();
        let data = DataTable {
            names: vec!["x".into(), "y".into()],
            rows: DMatrix::from_row_slice(4, 2, &[1.0, 1.0, -1.0, 1.0, 1.0, -1.0, -1.0, -1.0]),
        };
        let plan = [PartialCorrTest {
            x: 0,
            y: 1,
            given: VertexSet::new(),
            source: 0,
        }];
        let report = run_tests(&g, &data, &plan, 0.05, Correction::Bonferroni).unwrap();
        let r = &report.results[0];
        assert_eq!(r.r, Some(0.0));
        assert_eq!(r.z, Some(0.0));
        assert_eq!(r.p_value, Some(1.0));
        assert!(report.passed);
    }

    #[test]
    fn small_samples_become_error_entries() {
        let g = fixtures::figure2();
        let p = random_parameters(&g, 0).unwrap();
        let data = simulate(&g, &p, 4, 0).unwrap();
        let plan = test_plan(&crate::markov::reduced_local_markov(&g).unwrap());
        let report = run_tests(&g, &data, &plan, 0.05, Correction::None).unwrap();
        assert!(report.results.iter().all(|r| r.error.is_some()));
        assert!(!report.passed);
        assert_eq!(report.level, 0.05);
    }
}
