//! Hypergraph Lagrangians: exact evaluation at rational simplex points,
//! multistart projected-gradient search for good witnesses, and exact
//! certification of lower bounds.

use crate::error::{Error, Result};
use crate::floatguard;
use crate::hypergraph::Hypergraph;
use crate::rat::{rat_to_f64, Rat};
use num::bigint::BigInt;
use num::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// A rational point of the standard simplex: nonnegative weights summing to
/// exactly one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexPoint {
    weights: Vec<Rat>,
}

impl SimplexPoint {
    pub fn new(weights: Vec<Rat>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidSimplexPoint("no coordinates".into()));
        }
        if weights.iter().any(|w| w.is_negative()) {
            return Err(Error::InvalidSimplexPoint("negative weight".into()));
        }
        let sum: Rat = weights.iter().sum();
        if !sum.is_one() {
            return Err(Error::InvalidSimplexPoint(format!(
                "weights sum to {sum}, not 1"
            )));
        }
        Ok(SimplexPoint { weights })
    }

    pub fn uniform(n: usize) -> Self {
        let w = Rat::new(BigInt::one(), BigInt::from(n));
        SimplexPoint {
            weights: vec![w; n],
        }
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Rat] {
        &self.weights
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut weights = Vec::new();
        for raw in text.lines() {
            let line = match raw.find('#') {
                Some(i) => &raw[..i],
                None => raw,
            };
            for word in line.split_whitespace() {
                weights.push(crate::rat::parse_rat(word)?);
            }
        }
        SimplexPoint::new(weights)
    }

    pub fn to_text(&self) -> String {
        let words: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        words.join(" ")
    }
}

/// A certified lower bound on λ(graph): the witness is exact and `value`
/// always equals the exact re-evaluation at the witness.
#[derive(Clone, Debug)]
pub struct LagrangianBound {
    pub graph: Hypergraph,
    pub witness: SimplexPoint,
    pub value: Rat,
}

/// λ(F, x) = Σ_{edges} r! · x_{i1}···x_{ir}, exactly.
pub fn evaluate(f: &Hypergraph, x: &SimplexPoint) -> Result<Rat> {
    if x.n() != f.n() {
        return Err(Error::DimensionMismatch(format!(
            "witness has {} coordinates, graph has {} vertices",
            x.n(),
            f.n()
        )));
    }
    let r_fact: BigInt = (1..=f.r()).product::<usize>().into();
    let mut total = Rat::zero();
    for e in f.edges() {
        let mut term = Rat::from_integer(r_fact.clone());
        for &v in e {
            term *= &x.weights()[v - 1];
        }
        total += term;
    }
    Ok(total)
}

/// True exactly when λ(F, x) >= target.
pub fn verify_lower_bound(f: &Hypergraph, x: &SimplexPoint, target: &Rat) -> Result<bool> {
    Ok(evaluate(f, x)? >= *target)
}

#[derive(Clone, Debug)]
pub struct MaximizeOptions {
    pub restarts: usize,
    pub iterations: usize,
    pub seed: u64,
    pub denominator_bound: u64,
}

impl Default for MaximizeOptions {
    fn default() -> Self {
        MaximizeOptions {
            restarts: 50,
            iterations: 2000,
            seed: 0,
            denominator_bound: 1_000_000,
        }
    }
}

/// Certified lower bound on λ(F): multistart projected-gradient ascent in
/// floating point locates a witness, which is rounded to an exact simplex
/// point and re-evaluated exactly. No upper-bound claim is made.
pub fn maximize(f: &Hypergraph, opts: &MaximizeOptions) -> LagrangianBound {
    floatguard::assert_float_allowed("lagrangian maximize");
    let n = f.n();
    let edges: Vec<Vec<usize>> = f
        .edges()
        .iter()
        .map(|e| e.iter().map(|&v| v - 1).collect())
        .collect();
    if edges.is_empty() {
        let witness = SimplexPoint::uniform(n);
        return LagrangianBound {
            graph: f.clone(),
            witness,
            value: Rat::zero(),
        };
    }
    let r_fact: f64 = (1..=f.r()).product::<usize>() as f64;

    // Deterministic start points, independent of scheduling.
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let starts: Vec<Vec<f64>> = (0..opts.restarts.max(1))
        .map(|_| {
            let mut x: Vec<f64> = (0..n).map(|_| -(rng.gen::<f64>().max(1e-12)).ln()).collect();
            let s: f64 = x.iter().sum();
            x.iter_mut().for_each(|v| *v /= s);
            x
        })
        .collect();

    let candidates: Vec<(Rat, SimplexPoint)> = starts
        .par_iter()
        .map(|start| {
            let x = ascend(start.clone(), &edges, r_fact, opts.iterations);
            round_to_simplex(&x, opts.denominator_bound)
                .into_iter()
                .map(|w| {
                    let value = evaluate(f, &w).expect("dimensions match");
                    (value, w)
                })
                .max_by(|a, b| a.0.cmp(&b.0))
                .expect("at least one rounding candidate")
        })
        .collect();

    let (value, witness) = candidates
        .into_iter()
        .max_by(|a, b| a.0.cmp(&b.0))
        .expect("at least one restart");
    LagrangianBound {
        graph: f.clone(),
        witness,
        value,
    }
}

fn lambda_float(x: &[f64], edges: &[Vec<usize>], r_fact: f64) -> f64 {
    let mut total = 0.0;
    for e in edges {
        let mut term = r_fact;
        for &v in e {
            term *= x[v];
        }
        total += term;
    }
    total
}

fn gradient(x: &[f64], edges: &[Vec<usize>], r_fact: f64, out: &mut [f64]) {
    out.iter_mut().for_each(|g| *g = 0.0);
    for e in edges {
        for (i, &v) in e.iter().enumerate() {
            let mut term = r_fact;
            for (j, &u) in e.iter().enumerate() {
                if i != j {
                    term *= x[u];
                }
            }
            out[v] += term;
        }
    }
}

/// Euclidean projection onto the simplex.
fn project_simplex(x: &mut [f64]) {
    let n = x.len();
    let mut sorted = x.to_vec();
    sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let mut acc = 0.0;
    let mut tau = 0.0;
    for (i, &v) in sorted.iter().enumerate() {
        acc += v;
        let t = (acc - 1.0) / (i + 1) as f64;
        if i + 1 == n || sorted[i + 1] <= t {
            tau = t;
            if i + 1 < n && sorted[i + 1] > t {
                continue;
            }
            break;
        }
    }
    for v in x.iter_mut() {
        *v = (*v - tau).max(0.0);
    }
    let s: f64 = x.iter().sum();
    if s > 0.0 {
        x.iter_mut().for_each(|v| *v /= s);
    }
}

fn ascend(mut x: Vec<f64>, edges: &[Vec<usize>], r_fact: f64, iterations: usize) -> Vec<f64> {
    let n = x.len();
    let mut grad = vec![0.0; n];
    let mut step = 0.25;
    let mut value = lambda_float(&x, edges, r_fact);
    for _ in 0..iterations {
        gradient(&x, edges, r_fact, &mut grad);
        let mut improved = false;
        // Backtracking line search on the projected step.
        let mut t = step * 2.0;
        for _ in 0..40 {
            let mut cand: Vec<f64> = x.iter().zip(grad.iter()).map(|(a, g)| a + t * g).collect();
            project_simplex(&mut cand);
            let cand_value = lambda_float(&cand, edges, r_fact);
            if cand_value > value {
                x = cand;
                value = cand_value;
                step = t;
                improved = true;
                break;
            }
            t *= 0.5;
            if t < 1e-18 {
                break;
            }
        }
        if !improved {
            break;
        }
    }
    x
}

/// Rounds a float simplex point to exact rational candidates over a ladder of
/// common denominators up to the bound; every candidate sums to exactly one.
fn round_to_simplex(x: &[f64], denominator_bound: u64) -> Vec<SimplexPoint> {
    let mut denominators: Vec<u64> = vec![2520, 27720, 10_000, 100_000];
    denominators.push(denominator_bound.max(2));
    denominators.retain(|&d| d <= denominator_bound.max(2));
    denominators.dedup();
    let mut out = Vec::new();
    for d in denominators {
        let mut units: Vec<i64> = x
            .iter()
            .map(|&v| ((v * d as f64).round() as i64).max(0))
            .collect();
        let diff = d as i64 - units.iter().sum::<i64>();
        if diff != 0 {
            // Push the correction onto the largest coordinate; it stays
            // nonnegative because |diff| <= n/2 + 1 units.
            let argmax = (0..units.len())
                .max_by_key(|&i| units[i])
                .expect("nonempty");
            units[argmax] += diff;
            if units[argmax] < 0 {
                continue;
            }
        }
        let weights: Vec<Rat> = units
            .iter()
            .map(|&u| Rat::new(BigInt::from(u), BigInt::from(d)))
            .collect();
        if let Ok(p) = SimplexPoint::new(weights) {
            out.push(p);
        }
    }
    if out.is_empty() {
        out.push(SimplexPoint::uniform(x.len()));
    }
    out
}

/// Convenience: decimal view of a bound value.
pub fn bound_to_f64(b: &LagrangianBound) -> f64 {
    rat_to_f64(&b.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{parse_rat, rat};

    fn f1() -> Hypergraph {
        Hypergraph::new(3, 4, &[vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4]]).unwrap()
    }

    fn f3() -> Hypergraph {
        Hypergraph::new(
            3,
            5,
            &[
                vec![1, 2, 3],
                vec![1, 2, 4],
                vec![2, 3, 5],
                vec![1, 4, 5],
                vec![3, 4, 5],
            ],
        )
        .unwrap()
    }

    fn f4() -> Hypergraph {
        Hypergraph::new(
            3,
            7,
            &[
                vec![1, 2, 3],
                vec![1, 3, 5],
                vec![1, 4, 5],
                vec![2, 4, 5],
                vec![1, 2, 6],
                vec![2, 4, 6],
                vec![3, 4, 6],
                vec![3, 5, 6],
                vec![2, 3, 7],
                vec![1, 4, 7],
                vec![3, 4, 7],
                vec![2, 5, 7],
                vec![1, 6, 7],
            ],
        )
        .unwrap()
    }

    #[test]
    fn simplex_validation() {
        assert!(SimplexPoint::new(vec![rat(1, 2), rat(1, 2)]).is_ok());
        assert!(SimplexPoint::new(vec![rat(1, 2), rat(1, 3)]).is_err());
        assert!(SimplexPoint::new(vec![rat(3, 2), rat(-1, 2)]).is_err());
        assert!(SimplexPoint::new(vec![]).is_err());
    }

    #[test]
    fn evaluate_examples() {
        let edge = Hypergraph::new(3, 3, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(
            evaluate(&edge, &SimplexPoint::uniform(3)).unwrap(),
            rat(2, 9)
        );
        let x = SimplexPoint::new(vec![rat(1, 3), rat(2, 9), rat(2, 9), rat(2, 9)]).unwrap();
        assert_eq!(evaluate(&f1(), &x).unwrap(), rat(8, 27));
        let concentrated =
            SimplexPoint::new(vec![rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1)]).unwrap();
        assert_eq!(evaluate(&f1(), &concentrated).unwrap(), rat(0, 1));
        assert!(evaluate(&f1(), &SimplexPoint::uniform(3)).is_err());
    }

    #[test]
    fn verify_lower_bound_examples() {
        // Quoted witness for the 13-edge 7-vertex graph.
        let w = SimplexPoint::new(vec![
            parse_rat("0.164").unwrap(),
            parse_rat("0.164").unwrap(),
            parse_rat("0.164").unwrap(),
            parse_rat("0.154").unwrap(),
            parse_rat("0.118").unwrap(),
            parse_rat("0.118").unwrap(),
            parse_rat("0.118").unwrap(),
        ])
        .unwrap();
        assert!(verify_lower_bound(&f4(), &w, &parse_rat("0.2319").unwrap()).unwrap());
        // Uniform on 4 vertices gives 9/32 < 8/27.
        assert!(!verify_lower_bound(&f1(), &SimplexPoint::uniform(4), &rat(8, 27)).unwrap());
        assert_eq!(
            evaluate(&f1(), &SimplexPoint::uniform(4)).unwrap(),
            rat(9, 32)
        );
        assert!(verify_lower_bound(&f1(), &SimplexPoint::uniform(4), &rat(0, 1)).unwrap());
    }

    #[test]
    fn maximize_finds_known_values() {
        let opts = MaximizeOptions::default();
        let b1 = maximize(&f1(), &opts);
        assert!(b1.value >= rat(8, 27) - rat(1, 1_000_000));
        assert_eq!(b1.value, evaluate(&b1.graph, &b1.witness).unwrap());
        let b3 = maximize(&f3(), &opts);
        assert!(b3.value >= rat(6, 25) - rat(1, 1_000_000));
        let empty = maximize(&Hypergraph::empty(3, 4), &opts);
        assert!(empty.value.is_zero());
    }

    #[test]
    fn maximize_beats_uniform_edge_weighting() {
        // Any graph with an edge admits the uniform single-edge witness.
        let g = Hypergraph::new(3, 5, &[vec![1, 2, 3], vec![3, 4, 5]]).unwrap();
        let b = maximize(&g, &MaximizeOptions::default());
        assert!(b.value >= rat(2, 9) - rat(1, 1_000_000));
    }

    #[test]
    fn maximize_deterministic_for_fixed_seed() {
        let opts = MaximizeOptions {
            restarts: 8,
            iterations: 300,
            ..Default::default()
        };
        let a = maximize(&f3(), &opts);
        let b = maximize(&f3(), &opts);
        assert_eq!(a.value, b.value);
        assert_eq!(a.witness, b.witness);
    }

    #[test]
    fn subgraph_monotonicity() {
        let small = Hypergraph::new(3, 4, &[vec![1, 2, 3], vec![1, 2, 4]]).unwrap();
        let big = Hypergraph::new(3, 4, &[vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4]]).unwrap();
        for w in [
            SimplexPoint::uniform(4),
            SimplexPoint::new(vec![rat(1, 2), rat(1, 4), rat(1, 8), rat(1, 8)]).unwrap(),
        ] {
            assert!(evaluate(&small, &w).unwrap() <= evaluate(&big, &w).unwrap());
        }
    }

    #[test]
    fn grid_search_oracle_cannot_beat_maximize() {
        // Dense grid over the simplex at step 1/60 for 4-vertex graphs: the
        // search result must be at least the best grid value (up to exact
        // rounding of the returned witness).
        let graphs = [
            f1(),
            Hypergraph::new(3, 4, &[vec![1, 2, 3], vec![1, 2, 4]]).unwrap(),
        ];
        let step = 60u64;
        for g in graphs {
            let mut grid_best = Rat::zero();
            for a in 0..=step {
                for b in 0..=step - a {
                    for c in 0..=step - a - b {
                        let d = step - a - b - c;
                        let w = SimplexPoint::new(vec![
                            Rat::new(a.into(), step.into()),
                            Rat::new(b.into(), step.into()),
                            Rat::new(c.into(), step.into()),
                            Rat::new(d.into(), step.into()),
                        ])
                        .unwrap();
                        let v = evaluate(&g, &w).unwrap();
                        if v > grid_best {
                            grid_best = v;
                        }
                    }
                }
            }
            let found = maximize(&g, &MaximizeOptions::default());
            assert!(
                found.value >= grid_best.clone() - rat(1, 1_000_000),
                "grid {grid_best} vs search {}",
                found.value
            );
        }
    }
}
