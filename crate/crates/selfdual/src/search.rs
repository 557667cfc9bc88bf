//! Genetic search and the exhaustive linear-search baseline over first-row
//! coefficient vectors.
//!
//! Reproducibility discipline: every stochastic choice is drawn from one
//! seeded ChaCha8 stream in a fixed order (initialization, then per
//! generation: selection, crossover, mutation). Fitness evaluation is pure
//! and may run on any number of threads without changing outcomes.

use std::collections::HashSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::code::{
    classify_code, extremal_bound, CodeError, CodeType, DistanceBound, EnumeratorClass,
    SelfDualCode,
};
use crate::gf2::BitWord;
use crate::group::{FiniteGroup, GroupRingElement};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("invalid GA parameters: {0}")]
    BadParams(String),
    #[error("invalid crossover point(s): {0}")]
    BadCrossoverPoint(String),
    #[error("linear search range is empty (start > end)")]
    EmptyRange,
    #[error("classification failed: {0}")]
    Classify(#[from] CodeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CrossoverKind {
    #[default]
    Single,
    Double,
    Uniform,
}

impl CrossoverKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CrossoverKind::Single => "single",
            CrossoverKind::Double => "double",
            CrossoverKind::Uniform => "uniform",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "single" => CrossoverKind::Single,
            "double" => CrossoverKind::Double,
            "uniform" => CrossoverKind::Uniform,
            _ => return None,
        })
    }
}

/// A candidate first row and its objective value (lower is better).
#[derive(Debug, Clone, PartialEq)]
pub struct Chromosome {
    pub genes: BitWord,
    pub fitness: f64,
}

/// Genetic algorithm configuration. `mutation_prob` is the probability that
/// the mutation operator fires on a child; when it fires, every bit is
/// replaced by a fresh fair coin flip.
#[derive(Debug, Clone, PartialEq)]
pub struct GaParams {
    pub population_size: usize,
    pub crossover_kind: CrossoverKind,
    pub crossover_rate: f64,
    pub mutation_prob: f64,
    pub elite_count: usize,
    pub max_generations: usize,
    pub target_distance: usize,
    pub rng_seed: u64,
    /// Stop once this many distinct target-distance codes are recorded.
    pub stop_after_found: Option<usize>,
    /// Stop once this many fitness evaluations have been spent.
    pub max_evaluations: Option<u64>,
}

impl Default for GaParams {
    fn default() -> Self {
        GaParams {
            population_size: 100,
            crossover_kind: CrossoverKind::Single,
            crossover_rate: 0.9,
            mutation_prob: 0.1,
            elite_count: 2,
            max_generations: 200,
            target_distance: 2,
            rng_seed: 0,
            stop_after_found: None,
            max_evaluations: None,
        }
    }
}

impl GaParams {
    pub fn validate(&self) -> Result<(), SearchError> {
        if self.population_size < 2 {
            return Err(SearchError::BadParams("population_size must be >= 2".into()));
        }
        if self.elite_count >= self.population_size {
            return Err(SearchError::BadParams(
                "elite_count must be < population_size".into(),
            ));
        }
        for (name, p) in [
            ("crossover_rate", self.crossover_rate),
            ("mutation_prob", self.mutation_prob),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return Err(SearchError::BadParams(format!("{name} must be in [0,1]")));
            }
        }
        Ok(())
    }
}

/// A verified find: the defining vector, its exact distance, and its class.
#[derive(Debug, Clone)]
pub struct FoundCode {
    pub v: GroupRingElement,
    pub d: usize,
    pub class: EnumeratorClass,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMethod {
    Ga,
    LinearSearch,
}

impl SearchMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            SearchMethod::Ga => "ga",
            SearchMethod::LinearSearch => "ls",
        }
    }
}

/// Echo of the configuration a run used, for the reproducibility record.
#[derive(Debug, Clone)]
pub enum MethodConfig {
    Ga(GaParams),
    Linear { start: u64, end: u64 },
}

/// Reproducible record of one search run.
#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub group_id: String,
    pub method: SearchMethod,
    pub found: Vec<FoundCode>,
    pub evaluations: u64,
    pub generations_run: usize,
    pub wall_time: Duration,
    pub seed: u64,
    pub target_distance: usize,
    pub config: MethodConfig,
    /// True when an evaluation budget cut the run short.
    pub capped: bool,
}

/// Fitness of a candidate plus, when it is a self-dual code whose exact
/// distance was certified, the code and distance.
pub struct Evaluation {
    pub fitness: f64,
    pub certified: Option<(SelfDualCode, usize)>,
}

/// The search objective, minimized. Self-dual candidates score 1/d (with the
/// distance computation aborted early once a codeword below `target` is
/// seen); candidates failing the criterion score 1 + violations/(n(n+1)/2),
/// strictly worse than any self-dual candidate.
pub fn objective(v: &GroupRingElement, target: usize) -> Evaluation {
    let n = v.group().order();
    match SelfDualCode::build(v.clone()) {
        Ok(code) => match code.min_distance(Some(target)) {
            DistanceBound::Exact { d, .. } => Evaluation {
                fitness: 1.0 / d as f64,
                certified: Some((code, d)),
            },
            DistanceBound::BelowTarget { witness, .. } => Evaluation {
                fitness: 1.0 / witness as f64,
                certified: None,
            },
        },
        Err(CodeError::NotSelfDual { violations }) => {
            let total = (n * (n + 1) / 2) as f64;
            Evaluation {
                fitness: 1.0 + violations as f64 / total,
                certified: None,
            }
        }
        Err(e) => unreachable!("build_code cannot fail otherwise: {e}"),
    }
}

/// Single-point crossover: children exchange the suffix [point, n).
pub fn crossover_single(
    a: &BitWord,
    b: &BitWord,
    point: usize,
) -> Result<(BitWord, BitWord), SearchError> {
    let n = a.len();
    if point == 0 || point >= n {
        return Err(SearchError::BadCrossoverPoint(format!(
            "single point {point} not in 1..{n}"
        )));
    }
    Ok(swap_masked(a, b, &BitWord::range_mask(n, point, n)))
}

/// Double-point crossover: children exchange the segment [p1, p2).
pub fn crossover_double(
    a: &BitWord,
    b: &BitWord,
    p1: usize,
    p2: usize,
) -> Result<(BitWord, BitWord), SearchError> {
    let n = a.len();
    if p1 >= p2 || p2 > n {
        return Err(SearchError::BadCrossoverPoint(format!(
            "double points ({p1},{p2}) need p1 < p2 <= {n}"
        )));
    }
    Ok(swap_masked(a, b, &BitWord::range_mask(n, p1, p2)))
}

/// Uniform crossover: children exchange exactly the positions where the mask
/// has a one.
pub fn crossover_uniform(
    a: &BitWord,
    b: &BitWord,
    mask: &BitWord,
) -> Result<(BitWord, BitWord), SearchError> {
    if mask.len() != a.len() {
        return Err(SearchError::BadCrossoverPoint(format!(
            "mask length {} != chromosome length {}",
            mask.len(),
            a.len()
        )));
    }
    Ok(swap_masked(a, b, mask))
}

fn swap_masked(a: &BitWord, b: &BitWord, mask: &BitWord) -> (BitWord, BitWord) {
    debug_assert_eq!(a.len(), b.len());
    let n = a.len();
    let mut c1 = BitWord::zeros(n);
    let mut c2 = BitWord::zeros(n);
    for i in 0..n {
        let swap = mask.get(i);
        c1.set(i, if swap { b.get(i) } else { a.get(i) });
        c2.set(i, if swap { a.get(i) } else { b.get(i) });
    }
    (c1, c2)
}

/// One draw decides whether mutation fires; if it does, every bit is
/// replaced by an independent fair random bit.
pub fn mutate<R: RngCore>(genes: &BitWord, p: f64, rng: &mut R) -> BitWord {
    debug_assert!((0.0..=1.0).contains(&p));
    if rng.gen::<f64>() < p {
        BitWord::random(genes.len(), rng)
    } else {
        *genes
    }
}

/// Seeded initial population with fitness evaluated for every chromosome.
/// Gene draws consume a fixed number of stream words per chromosome, so a
/// longer run shares its prefix with a shorter one under the same seed.
pub fn init_population(
    group: &Arc<FiniteGroup>,
    params: &GaParams,
    rng: &mut ChaCha8Rng,
) -> Vec<Chromosome> {
    let n = group.order();
    let genes: Vec<BitWord> = (0..params.population_size)
        .map(|_| BitWord::random(n, rng))
        .collect();
    evaluate_batch(group, &genes, params.target_distance)
        .into_iter()
        .zip(genes)
        .map(|(eval, genes)| Chromosome {
            genes,
            fitness: eval.fitness,
        })
        .collect()
}

fn evaluate_batch(
    group: &Arc<FiniteGroup>,
    genes: &[BitWord],
    target: usize,
) -> Vec<Evaluation> {
    genes
        .par_iter()
        .map(|g| objective(&GroupRingElement::new(group.clone(), *g).unwrap(), target))
        .collect()
}

/// Tournament of size two on the already-evaluated population.
fn select_parent<R: RngCore>(pop: &[Chromosome], rng: &mut R) -> usize {
    let i = rng.gen_range(0..pop.len());
    let j = rng.gen_range(0..pop.len());
    if pop[j].fitness < pop[i].fitness {
        j
    } else {
        i
    }
}

struct FoundSet {
    keys: HashSet<BitWord>,
    list: Vec<FoundCode>,
}

impl FoundSet {
    fn new() -> Self {
        FoundSet {
            keys: HashSet::new(),
            list: Vec::new(),
        }
    }

    fn record(&mut self, code: &SelfDualCode, d: usize) -> Result<(), SearchError> {
        if !self.keys.insert(*code.v().coeffs()) {
            return Ok(());
        }
        let class = classify_code(code)?;
        self.list.push(FoundCode {
            v: code.v().clone(),
            d,
            class,
        });
        Ok(())
    }
}

/// Run the genetic algorithm: evaluate, select parents by binary tournament,
/// cross over at the configured rate, mutate, then replace with elitism
/// (the best `elite_count` parents survive unconditionally and children
/// compete with the remaining parents for the other slots). Every evaluated
/// chromosome that yields a self-dual code with d ≥ target_distance is
/// recorded, deduplicated by gene bits.
pub fn ga_run(group: &Arc<FiniteGroup>, params: &GaParams) -> Result<SearchOutcome, SearchError> {
    params.validate()?;
    let start = Instant::now();
    let n = group.order();
    let target = params.target_distance;
    let mut rng = ChaCha8Rng::seed_from_u64(params.rng_seed);
    let mut found = FoundSet::new();
    let mut evaluations = 0u64;

    let genes: Vec<BitWord> = (0..params.population_size)
        .map(|_| BitWord::random(n, &mut rng))
        .collect();
    let evals = evaluate_batch(group, &genes, target);
    evaluations += genes.len() as u64;
    for e in &evals {
        record_find(e, target, &mut found)?;
    }
    let mut population: Vec<Chromosome> = evals
        .iter()
        .zip(genes)
        .map(|(e, genes)| Chromosome {
            genes,
            fitness: e.fitness,
        })
        .collect();

    let mut generations_run = 0;
    for _ in 0..params.max_generations {
        if done(&found, params, evaluations) {
            break;
        }
        // All stochastic choices for this generation, drawn sequentially.
        let mut children: Vec<BitWord> = Vec::with_capacity(params.population_size);
        for _ in 0..params.population_size / 2 {
            let p1 = select_parent(&population, &mut rng);
            let p2 = select_parent(&population, &mut rng);
            let (a, b) = (&population[p1].genes, &population[p2].genes);
            let (mut c1, mut c2) = if rng.gen::<f64>() < params.crossover_rate {
                match params.crossover_kind {
                    CrossoverKind::Single => {
                        let point = rng.gen_range(1..n);
                        crossover_single(a, b, point)?
                    }
                    CrossoverKind::Double => {
                        let (p1, p2) = loop {
                            let x = rng.gen_range(0..=n);
                            let y = rng.gen_range(0..=n);
                            if x != y {
                                break (x.min(y), x.max(y));
                            }
                        };
                        crossover_double(a, b, p1, p2)?
                    }
                    CrossoverKind::Uniform => {
                        let mask = BitWord::random(n, &mut rng);
                        crossover_uniform(a, b, &mask)?
                    }
                }
            } else {
                (*a, *b)
            };
            c1 = mutate(&c1, params.mutation_prob, &mut rng);
            c2 = mutate(&c2, params.mutation_prob, &mut rng);
            children.push(c1);
            children.push(c2);
        }

        let evals = evaluate_batch(group, &children, target);
        evaluations += children.len() as u64;
        generations_run += 1;
        for e in &evals {
            record_find(e, target, &mut found)?;
        }
        let children: Vec<Chromosome> = evals
            .iter()
            .zip(children)
            .map(|(e, genes)| Chromosome {
                genes,
                fitness: e.fitness,
            })
            .collect();
        population = replace_with_elitism(population, children, params);
    }
    let capped = params
        .max_evaluations
        .is_some_and(|budget| evaluations >= budget);

    Ok(SearchOutcome {
        group_id: group.id().to_string(),
        method: SearchMethod::Ga,
        found: found.list,
        evaluations,
        generations_run,
        wall_time: start.elapsed(),
        seed: params.rng_seed,
        target_distance: target,
        config: MethodConfig::Ga(params.clone()),
        capped,
    })
}

fn done(found: &FoundSet, params: &GaParams, evaluations: u64) -> bool {
    if let Some(k) = params.stop_after_found {
        if found.list.len() >= k {
            return true;
        }
    }
    if let Some(budget) = params.max_evaluations {
        if evaluations >= budget {
            return true;
        }
    }
    false
}

fn record_find(e: &Evaluation, target: usize, found: &mut FoundSet) -> Result<(), SearchError> {
    if let Some((code, d)) = &e.certified {
        if *d >= target {
            found.record(code, *d)?;
        }
    }
    Ok(())
}

/// Keep the best `elite_count` parents unconditionally, then fill the
/// remaining slots with the best of the merged parent+child pool. Sorting is
/// stable with explicit origin-order tiebreaks, so the outcome is
/// deterministic.
fn replace_with_elitism(
    parents: Vec<Chromosome>,
    children: Vec<Chromosome>,
    params: &GaParams,
) -> Vec<Chromosome> {
    let pop_size = params.population_size;
    let mut parent_order: Vec<usize> = (0..parents.len()).collect();
    parent_order.sort_by(|&a, &b| parents[a].fitness.total_cmp(&parents[b].fitness));
    let elite_idx: HashSet<usize> = parent_order[..params.elite_count].iter().copied().collect();

    let mut survivors: Vec<Chromosome> = parent_order[..params.elite_count]
        .iter()
        .map(|&i| parents[i].clone())
        .collect();

    // pool entries: (fitness, origin rank) with parents before children
    let mut pool: Vec<(usize, &Chromosome)> = parents
        .iter()
        .enumerate()
        .filter(|(i, _)| !elite_idx.contains(i))
        .map(|(i, c)| (i, c))
        .chain(children.iter().enumerate().map(|(i, c)| (parents.len() + i, c)))
        .collect();
    pool.sort_by(|a, b| a.1.fitness.total_cmp(&b.1.fitness).then(a.0.cmp(&b.0)));
    survivors.extend(
        pool.into_iter()
            .take(pop_size - params.elite_count)
            .map(|(_, c)| c.clone()),
    );
    survivors
}

/// Exhaustively evaluate every candidate v in [start, end] (as n-bit
/// integers, ascending), recording all self-dual codes with d ≥ target.
/// Ground truth for GA completeness checks. An evaluation budget may cap the
/// scan; the outcome records whether it did.
pub fn linear_search(
    group: &Arc<FiniteGroup>,
    start: u64,
    end: u64,
    target: usize,
    budget: Option<u64>,
) -> Result<SearchOutcome, SearchError> {
    if start > end {
        return Err(SearchError::EmptyRange);
    }
    let began = Instant::now();
    let n = group.order();
    assert!(n <= 64, "linear search iterates 64-bit candidate values");
    let span = end - start + 1;
    let (last, capped) = match budget {
        Some(b) if b.max(1) < span => (start + b.max(1) - 1, true),
        _ => (end, false),
    };

    let mut found = FoundSet::new();
    let mut evaluations = 0u64;
    const CHUNK: u64 = 1 << 16;
    let mut lo = start;
    loop {
        let hi = last.min(lo.saturating_add(CHUNK - 1));
        let finds: Vec<(u64, SelfDualCode, usize)> = (lo..=hi)
            .into_par_iter()
            .filter_map(|value| {
                let genes = BitWord::from_uint(value, n);
                let v = GroupRingElement::new(group.clone(), genes).unwrap();
                let code = SelfDualCode::build(v).ok()?;
                match code.min_distance(Some(target)) {
                    DistanceBound::Exact { d, .. } if d >= target => Some((value, code, d)),
                    _ => None,
                }
            })
            .collect();
        evaluations += hi - lo + 1;
        let mut finds = finds;
        finds.sort_by_key(|(value, _, _)| *value);
        for (_, code, d) in &finds {
            found.record(code, *d)?;
        }
        if hi == last {
            break;
        }
        lo = hi + 1;
    }

    Ok(SearchOutcome {
        group_id: group.id().to_string(),
        method: SearchMethod::LinearSearch,
        found: found.list,
        evaluations,
        generations_run: 0,
        wall_time: began.elapsed(),
        seed: 0,
        target_distance: target,
        config: MethodConfig::Linear { start, end: last },
        capped,
    })
}

/// Default target distance for a group: the Type I extremal bound of the
/// code length it produces.
pub fn default_target(group: &FiniteGroup) -> usize {
    extremal_bound(2 * group.order(), CodeType::TypeI).unwrap_or(2)
}
