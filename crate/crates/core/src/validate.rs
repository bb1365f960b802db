//! Seeded cross-validation of the dynamic program against exhaustive
//! enumeration, together with diagnostics for the structural
//! characterizations (minimal cut-strategies, clique-count closed forms,
//! pieces, arrangements).
//!
//! Disagreements are collected as data; nothing here panics on a failed
//! check. The run is deterministic for a given [`ValidationConfig`].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arrangement::{piece_components, CliqueArrangement, PieceMark};
use crate::closed_forms::{four_plus_cut_candidates, three_clique_value, two_clique_value};
use crate::dp::{compute_nsn, compute_nsn_with_arrangement, NsnOptions, NsnResult, PieceRecord};
use crate::error::{Error, Result};
use crate::generators::{generate_connected, GeneratorSpec};
use crate::graph::{Graph, VertexSet};
use crate::interval::{arrangement_from_intervals, graph_from_intervals, IntervalRepresentation};
use crate::oracle::{brute_force_nsn, recursive_formula_value};
use crate::recognition::recognize_interval;
use crate::subversion::{is_minimal_cut_strategy, minimality_conditions_hold, subvert, Classification};

/// Largest vertex count accepted for corpus graphs. The recursive formula
/// enumerates subsets of every component it meets, so this sits well below
/// the oracle's own bound.
pub const VALIDATE_MAX_N: usize = 12;
/// Default bound for the strategy-level minimality diagnostic.
pub const DIAGNOSTIC_MAX_N: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationConfig {
    pub trials: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub seed: u64,
    /// Also run the recursive formula on random graphs that need not be
    /// interval graphs.
    pub general_graphs: bool,
    /// Graphs with at most this many vertices get the minimality diagnostic.
    pub diagnostic_max_n: usize,
    /// Worker threads; 0 uses the global pool.
    #[serde(skip)]
    pub threads: usize,
}

impl Default for ValidationConfig {
    fn default() -> Self {
        ValidationConfig {
            trials: 100,
            n_min: 4,
            n_max: 10,
            seed: 0,
            general_graphs: false,
            diagnostic_max_n: DIAGNOSTIC_MAX_N,
            threads: 0,
        }
    }
}

impl ValidationConfig {
    pub fn check(&self) -> Result<()> {
        if self.n_min < 1 || self.n_min > self.n_max {
            return Err(Error::InvalidSpec(format!("bad vertex range {}..{}", self.n_min, self.n_max)));
        }
        if self.n_max > VALIDATE_MAX_N {
            return Err(Error::TooLarge { size: self.n_max, bound: VALIDATE_MAX_N });
        }
        if self.general_graphs && self.n_max < 3 {
            return Err(Error::InvalidSpec(
                "general graphs need at least 3 vertices to be connected and not complete".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledInterval {
    pub label: String,
    pub left: i64,
    pub right: i64,
}

/// A corpus graph in a form that can be reproduced from the report alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphRecord {
    pub n: usize,
    pub labels: Vec<String>,
    pub edges: Vec<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intervals: Option<Vec<LabeledInterval>>,
}

impl GraphRecord {
    pub fn of_graph(g: &Graph) -> GraphRecord {
        GraphRecord {
            n: g.vertex_count(),
            labels: g.labels().to_vec(),
            edges: g.edges().map(|(u, v)| [g.label(u).to_string(), g.label(v).to_string()]).collect(),
            intervals: None,
        }
    }

    pub fn of_intervals(g: &Graph, rep: &IntervalRepresentation) -> GraphRecord {
        let intervals = rep
            .iter()
            .map(|(label, iv)| LabeledInterval { label: label.to_string(), left: iv.left, right: iv.right })
            .collect();
        GraphRecord { intervals: Some(intervals), ..GraphRecord::of_graph(g) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValueFailure {
    pub graph: GraphRecord,
    pub expected: Option<i64>,
    pub got: Option<i64>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Agreement {
    pub checked: usize,
    pub agreed: usize,
    pub failures: Vec<ValueFailure>,
}

impl Agreement {
    fn empty() -> Agreement {
        Agreement { checked: 0, agreed: 0, failures: Vec::new() }
    }

    fn record(&mut self, failure: Option<ValueFailure>) {
        self.checked += 1;
        match failure {
            None => self.agreed += 1,
            Some(f) => self.failures.push(f),
        }
    }

    fn merge(&mut self, other: Agreement) {
        self.checked += other.checked;
        self.agreed += other.agreed;
        self.failures.extend(other.failures);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaSection {
    pub interval: Agreement,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub general: Option<Agreement>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalityDisagreement {
    pub graph: GraphRecord,
    pub strategy: Vec<String>,
    pub classification: Classification,
    pub minimal: bool,
    pub conditions_hold: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalitySection {
    pub graphs: usize,
    pub strategies: usize,
    pub agreed: usize,
    pub disagreements: Vec<MinimalityDisagreement>,
}

impl MinimalitySection {
    fn empty() -> MinimalitySection {
        MinimalitySection { graphs: 0, strategies: 0, agreed: 0, disagreements: Vec::new() }
    }

    fn merge(&mut self, other: MinimalitySection) {
        self.graphs += other.graphs;
        self.strategies += other.strategies;
        self.agreed += other.agreed;
        self.disagreements.extend(other.disagreements);
    }
}

/// A piece whose closed-form value differs from its table value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedFormDisagreement {
    pub graph: GraphRecord,
    pub l: usize,
    pub r: usize,
    pub piece: Vec<String>,
    pub dp_value: Option<i64>,
    pub closed_form: i64,
}

/// A piece where the disconnecting single vertices and the candidate set
/// differ. `missing` are disconnecting vertices outside the candidates;
/// `extra` are candidates that do not disconnect the piece.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateDifference {
    pub graph: GraphRecord,
    pub l: usize,
    pub r: usize,
    pub piece: Vec<String>,
    pub missing: Vec<String>,
    pub extra: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PieceCheck<D> {
    pub pieces: usize,
    pub agreed: usize,
    pub differences: Vec<D>,
}

impl<D> PieceCheck<D> {
    fn empty() -> PieceCheck<D> {
        PieceCheck { pieces: 0, agreed: 0, differences: Vec::new() }
    }

    fn merge(&mut self, other: PieceCheck<D>) {
        self.pieces += other.pieces;
        self.agreed += other.agreed;
        self.differences.extend(other.differences);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PieceMismatchRecord {
    pub graph: GraphRecord,
    /// Where the mismatch surfaced: a subverted vertex, or the dynamic program.
    pub context: String,
    pub l: usize,
    pub r: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureViolation {
    pub graph: GraphRecord,
    pub source: String,
    pub problem: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapRecord {
    pub graph: GraphRecord,
    pub l: usize,
    pub r: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusSummary {
    pub interval_graphs: usize,
    pub general_graphs: usize,
}

/// Everything a validation run checks, section by section.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub config: ValidationConfig,
    pub corpus: CorpusSummary,
    pub dp_vs_oracle: Agreement,
    pub recursive_formula: FormulaSection,
    pub minimality_characterization: MinimalitySection,
    pub two_clique: PieceCheck<ClosedFormDisagreement>,
    pub three_clique: PieceCheck<ClosedFormDisagreement>,
    pub four_plus_candidates: PieceCheck<CandidateDifference>,
    pub piece_mismatches: Vec<PieceMismatchRecord>,
    pub structure_violations: Vec<StructureViolation>,
    pub characterization_gaps: Vec<GapRecord>,
    pub passed: bool,
}

impl ValidationReport {
    fn empty(config: &ValidationConfig) -> ValidationReport {
        ValidationReport {
            config: config.clone(),
            corpus: CorpusSummary { interval_graphs: 0, general_graphs: 0 },
            dp_vs_oracle: Agreement::empty(),
            recursive_formula: FormulaSection {
                interval: Agreement::empty(),
                general: config.general_graphs.then(Agreement::empty),
            },
            minimality_characterization: MinimalitySection::empty(),
            two_clique: PieceCheck::empty(),
            three_clique: PieceCheck::empty(),
            four_plus_candidates: PieceCheck::empty(),
            piece_mismatches: Vec::new(),
            structure_violations: Vec::new(),
            characterization_gaps: Vec::new(),
            passed: true,
        }
    }

    fn merge(&mut self, other: ValidationReport) {
        self.corpus.interval_graphs += other.corpus.interval_graphs;
        self.corpus.general_graphs += other.corpus.general_graphs;
        self.dp_vs_oracle.merge(other.dp_vs_oracle);
        self.recursive_formula.interval.merge(other.recursive_formula.interval);
        if let (Some(mine), Some(theirs)) = (&mut self.recursive_formula.general, other.recursive_formula.general) {
            mine.merge(theirs);
        }
        self.minimality_characterization.merge(other.minimality_characterization);
        self.two_clique.merge(other.two_clique);
        self.three_clique.merge(other.three_clique);
        self.four_plus_candidates.merge(other.four_plus_candidates);
        self.piece_mismatches.extend(other.piece_mismatches);
        self.structure_violations.extend(other.structure_violations);
        self.characterization_gaps.extend(other.characterization_gaps);
    }

    /// Zero failures in the value comparisons. Diagnostic sections do not
    /// affect the verdict.
    pub fn passed(&self) -> bool {
        self.dp_vs_oracle.failures.is_empty()
            && self.recursive_formula.interval.failures.is_empty()
            && self.recursive_formula.general.as_ref().is_none_or(|a| a.failures.is_empty())
    }
}

/// Connected, non-complete random graph on `n ≥ 3` vertices, with the edge
/// probability itself drawn from `[0.2, 0.8)`.
pub fn random_connected_graph(n: usize, rng: &mut impl Rng) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidSpec("need at least 3 vertices".into()));
    }
    loop {
        let p = rng.gen_range(0.2..0.8);
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_one_based_edges(n, &edges)?;
        if g.is_connected() && !g.is_complete() {
            return Ok(g);
        }
    }
}

/// The seeded interval corpus: `trials` connected instances with vertex
/// counts uniform in `n_min..=n_max` and coordinate ranges between `n` and
/// `4n`, which mixes dense and sparse arrangements.
pub fn interval_corpus(config: &ValidationConfig) -> Result<Vec<IntervalRepresentation>> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    (0..config.trials)
        .map(|_| {
            let n = rng.gen_range(config.n_min..=config.n_max);
            let max_coord = rng.gen_range(n..=4 * n).max(2) as i64;
            generate_connected(&GeneratorSpec::random(n, rng.gen(), max_coord))
        })
        .collect()
}

/// The seeded general corpus, drawn from a separate ChaCha8 stream.
pub fn general_corpus(config: &ValidationConfig) -> Result<Vec<Graph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(1);
    let lo = config.n_min.max(3);
    (0..config.trials)
        .map(|_| {
            let n = rng.gen_range(lo..=config.n_max.max(lo));
            random_connected_graph(n, &mut rng)
        })
        .collect()
}

pub fn run_validation(config: &ValidationConfig) -> Result<ValidationReport> {
    config.check()?;
    let intervals = interval_corpus(config)?;
    let general = if config.general_graphs { general_corpus(config)? } else { Vec::new() };
    let work = || -> Vec<ValidationReport> {
        let mut parts: Vec<ValidationReport> =
            intervals.par_iter().map(|rep| check_interval_graph(rep, config)).collect();
        parts.extend(general.par_iter().map(|g| check_general_graph(g, config)).collect::<Vec<_>>());
        parts
    };
    let parts = if config.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .build()
            .map_err(|e| Error::InvalidSpec(e.to_string()))?
            .install(work)
    } else {
        work()
    };
    let mut report = ValidationReport::empty(config);
    for part in parts {
        report.merge(part);
    }
    report.passed = report.passed();
    Ok(report)
}

fn check_interval_graph(rep: &IntervalRepresentation, config: &ValidationConfig) -> ValidationReport {
    let mut out = ValidationReport::empty(config);
    out.corpus.interval_graphs = 1;
    let g = graph_from_intervals(rep);
    let record = GraphRecord::of_intervals(&g, rep);
    let sweep = arrangement_from_intervals(rep);

    for problem in arrangement_problems(&g, &sweep) {
        out.structure_violations.push(StructureViolation { graph: record.clone(), source: "sweep".into(), problem });
    }
    match recognize_interval(&g).arrangement() {
        Some(arr) => {
            for problem in arrangement_problems(&g, &arr) {
                out.structure_violations.push(StructureViolation {
                    graph: record.clone(),
                    source: "recognition".into(),
                    problem,
                });
            }
        }
        None => out.structure_violations.push(StructureViolation {
            graph: record.clone(),
            source: "recognition".into(),
            problem: "interval graph rejected".into(),
        }),
    }

    let expected = brute_force_nsn(&g).map(|r| r.value);
    let options = NsnOptions { fallback_oracle: false, threads: 1 };
    let recognized = compute_nsn(&g, &options);
    let swept = compute_nsn_with_arrangement(&g, &sweep, &options);
    for res in [&recognized, &swept] {
        match res {
            Err(Error::CharacterizationGap { l, r }) => {
                out.characterization_gaps.push(GapRecord { graph: record.clone(), l: *l, r: *r })
            }
            Err(Error::PieceMismatch { l, r }) => out.piece_mismatches.push(PieceMismatchRecord {
                graph: record.clone(),
                context: "dynamic program".into(),
                l: *l,
                r: *r,
            }),
            _ => {}
        }
    }
    out.dp_vs_oracle.record(dp_failure(&g, &record, &expected, &recognized, &swept));

    if !g.is_complete() {
        let formula = recursive_formula_value(&g);
        out.recursive_formula.interval.record(value_failure(&record, &expected, &formula, "recursive formula"));
    }

    for v in 0..g.vertex_count() {
        let survivors = match subvert(&g, &VertexSet::singleton(v)) {
            Ok(o) => o.survivors,
            Err(_) => continue,
        };
        if let Err(Error::PieceMismatch { l, r }) = piece_components(&sweep, &g, &survivors) {
            out.piece_mismatches.push(PieceMismatchRecord {
                graph: record.clone(),
                context: format!("subverting {}", g.label(v)),
                l,
                r,
            });
        }
    }

    if let Ok(result) = &recognized {
        check_pieces(&g, &record, result, &mut out);
    }
    if g.vertex_count() <= config.diagnostic_max_n {
        out.minimality_characterization = minimality_diagnostic(&g, &record);
    }
    out
}

fn check_general_graph(g: &Graph, config: &ValidationConfig) -> ValidationReport {
    let mut out = ValidationReport::empty(config);
    out.corpus.general_graphs = 1;
    let record = GraphRecord::of_graph(g);
    let expected = brute_force_nsn(g).map(|r| r.value);
    let formula = recursive_formula_value(g);
    if let Some(general) = &mut out.recursive_formula.general {
        general.record(value_failure(&record, &expected, &formula, "recursive formula"));
    }
    if g.vertex_count() <= config.diagnostic_max_n {
        out.minimality_characterization = minimality_diagnostic(g, &record);
    }
    out
}

fn describe(res: &Result<i64>) -> (Option<i64>, Option<String>) {
    match res {
        Ok(v) => (Some(*v), None),
        Err(e) => (None, Some(e.to_string())),
    }
}

fn value_failure(record: &GraphRecord, expected: &Result<i64>, got: &Result<i64>, what: &str) -> Option<ValueFailure> {
    let (exp, exp_err) = describe(expected);
    let (val, val_err) = describe(got);
    if exp.is_some() && exp == val {
        return None;
    }
    let detail = match (exp_err, val_err) {
        (Some(e), _) => format!("oracle failed: {e}"),
        (None, Some(e)) => format!("{what} failed: {e}"),
        (None, None) => format!("{what} differs from the oracle"),
    };
    Some(ValueFailure { graph: record.clone(), expected: exp, got: val, detail })
}

/// Both arrangements must reproduce the oracle value, and the returned
/// witness must achieve it.
fn dp_failure(
    g: &Graph,
    record: &GraphRecord,
    expected: &Result<i64>,
    recognized: &Result<NsnResult>,
    swept: &Result<NsnResult>,
) -> Option<ValueFailure> {
    let value = |r: &Result<NsnResult>| r.as_ref().map(|x| x.value).map_err(Clone::clone);
    if let Some(f) = value_failure(record, expected, &value(recognized), "dynamic program") {
        return Some(f);
    }
    if let Some(f) = value_failure(record, expected, &value(swept), "dynamic program on the sweep arrangement") {
        return Some(f);
    }
    let result = recognized.as_ref().expect("checked above");
    if g.is_complete() {
        return None;
    }
    let achieved = subvert(g, &result.witness).ok().filter(|o| o.classification.is_admissible()).map(|o| o.score());
    (achieved != Some(result.value)).then(|| ValueFailure {
        graph: record.clone(),
        expected: Some(result.value),
        got: achieved,
        detail: format!("witness {:?} does not achieve the value", g.labels_of(&result.witness)),
    })
}

/// Problems with an arrangement: more cliques than vertices, a vertex in
/// non-consecutive cliques, or cliques that are not the maximal cliques.
pub fn arrangement_problems(g: &Graph, arr: &CliqueArrangement) -> Vec<String> {
    let mut problems = Vec::new();
    let n = g.vertex_count();
    if arr.len() > n.max(1) {
        problems.push(format!("{} cliques on {n} vertices", arr.len()));
    }
    for v in 0..n {
        let hits: Vec<usize> = (1..=arr.len()).filter(|&k| arr.clique(k).contains(v)).collect();
        let consecutive = hits.windows(2).all(|w| w[1] == w[0] + 1);
        if hits.is_empty() || !consecutive {
            problems.push(format!("vertex {} lies in cliques {hits:?}", g.label(v)));
        }
    }
    if let Err(e) = arr.check_maximal(g) {
        problems.push(e.to_string());
    }
    problems
}

/// Closed-form cross-checks on every connected, non-complete piece of the
/// table, using a fresh arrangement of the piece's induced subgraph.
fn check_pieces(g: &Graph, record: &GraphRecord, result: &NsnResult, out: &mut ValidationReport) {
    let Some(table) = &result.table else { return };
    for rec in table.records().iter().filter(|r| r.mark == PieceMark::Noncomplete) {
        let (h, map) = g.induced_subgraph(&rec.vertices);
        let Some(arr) = recognize_interval(&h).arrangement() else {
            out.structure_violations.push(StructureViolation {
                graph: record.clone(),
                source: format!("piece ({}, {})", rec.l, rec.r),
                problem: "induced subgraph rejected as non-interval".into(),
            });
            continue;
        };
        let lift = |set: &VertexSet| -> Vec<String> { set.iter().map(|i| g.label(map[i]).to_string()).collect() };
        let closed = |closed_form: i64| ClosedFormDisagreement {
            graph: record.clone(),
            l: rec.l,
            r: rec.r,
            piece: g.labels_of(&rec.vertices),
            dp_value: rec.value,
            closed_form,
        };
        match arr.len() {
            2 => {
                if let Ok((value, _)) = two_clique_value(&h, &arr) {
                    tally(&mut out.two_clique, rec, value, closed);
                }
            }
            3 => {
                if let Ok(value) = three_clique_value(&h, &arr) {
                    tally(&mut out.three_clique, rec, value, closed);
                }
            }
            t if t >= 4 => {
                let Ok(candidates) = four_plus_cut_candidates(&h, &arr) else { continue };
                let disconnecting: VertexSet = (0..h.vertex_count())
                    .filter(|&v| {
                        subvert(&h, &VertexSet::singleton(v))
                            .is_ok_and(|o| o.classification == Classification::Disconnected)
                    })
                    .collect();
                let missing = disconnecting.difference(&candidates);
                let extra = candidates.difference(&disconnecting);
                let check = &mut out.four_plus_candidates;
                check.pieces += 1;
                if missing.is_empty() {
                    check.agreed += 1;
                }
                if !missing.is_empty() || !extra.is_empty() {
                    check.differences.push(CandidateDifference {
                        graph: record.clone(),
                        l: rec.l,
                        r: rec.r,
                        piece: g.labels_of(&rec.vertices),
                        missing: lift(&missing),
                        extra: lift(&extra),
                    });
                }
            }
            _ => {}
        }
    }
}

fn tally(
    check: &mut PieceCheck<ClosedFormDisagreement>,
    rec: &PieceRecord,
    value: i64,
    make: impl Fn(i64) -> ClosedFormDisagreement,
) {
    check.pieces += 1;
    if rec.value == Some(value) {
        check.agreed += 1;
    } else {
        check.differences.push(make(value));
    }
}

/// Compares the structural characterization with subset-enumeration
/// minimality for every nonempty strategy leaving at least one component.
fn minimality_diagnostic(g: &Graph, record: &GraphRecord) -> MinimalitySection {
    let mut section = MinimalitySection::empty();
    section.graphs = 1;
    let n = g.vertex_count();
    for mask in 1u64..(1 << n) {
        let xs: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let Ok(outcome) = subvert(g, &xs) else { continue };
        if !outcome.classification.is_admissible() {
            continue;
        }
        let (Ok(minimal), Ok(conditions_hold)) = (is_minimal_cut_strategy(g, &xs), minimality_conditions_hold(g, &xs))
        else {
            continue;
        };
        section.strategies += 1;
        if minimal == conditions_hold {
            section.agreed += 1;
        } else {
            section.disagreements.push(MinimalityDisagreement {
                graph: record.clone(),
                strategy: g.labels_of(&xs),
                classification: outcome.classification,
                minimal,
                conditions_hold,
            });
        }
    }
    section
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(trials: usize) -> ValidationConfig {
        ValidationConfig { trials, n_min: 4, n_max: 7, seed: 5, ..ValidationConfig::default() }
    }

    #[test]
    fn zero_trials_is_an_empty_passing_report() {
        let report = run_validation(&small(0)).unwrap();
        assert!(report.passed);
        assert_eq!(report.dp_vs_oracle.checked, 0);
        assert_eq!(report.corpus.interval_graphs, 0);
    }

    #[test]
    fn small_run_agrees_and_is_deterministic() {
        let report = run_validation(&small(40)).unwrap();
        assert!(report.passed, "{:?}", report.dp_vs_oracle.failures);
        assert_eq!(report.dp_vs_oracle.checked, 40);
        assert_eq!(report.dp_vs_oracle.agreed, 40);
        assert!(report.piece_mismatches.is_empty());
        assert!(report.structure_violations.is_empty());
        assert!(report.minimality_characterization.strategies > 0);
        let mut threaded = run_validation(&ValidationConfig { threads: 2, ..small(40) }).unwrap();
        threaded.config.threads = 0;
        assert_eq!(report, threaded);
    }

    #[test]
    fn general_graphs_section() {
        let config = ValidationConfig { general_graphs: true, ..small(20) };
        let report = run_validation(&config).unwrap();
        let general = report.recursive_formula.general.as_ref().unwrap();
        assert_eq!(general.checked, 20);
        assert_eq!(general.agreed, 20);
        assert_eq!(report.corpus.general_graphs, 20);
    }

    #[test]
    fn bad_configs() {
        assert!(run_validation(&ValidationConfig { n_min: 5, n_max: 4, ..small(1) }).is_err());
        assert!(run_validation(&ValidationConfig { n_max: VALIDATE_MAX_N + 1, ..small(1) }).is_err());
        let tiny = ValidationConfig { n_min: 1, n_max: 2, general_graphs: true, ..small(1) };
        assert!(run_validation(&tiny).is_err());
    }

    #[test]
    fn random_general_graphs_are_connected_and_not_complete() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 3..9 {
            let g = random_connected_graph(n, &mut rng).unwrap();
            assert!(g.is_connected() && !g.is_complete());
        }
        assert!(random_connected_graph(2, &mut rng).is_err());
    }
}
