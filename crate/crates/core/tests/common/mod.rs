//! Test-only oracles, kept independent of the library's numeric code paths.

#![allow(dead_code)]

use mcda::{Criterion, DecisionMatrix, Direction, PipelineMode, WeightVector};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Paper-2011 utility degrees of the case study, exact-fraction recomputation
/// (no intermediate rounding), frozen at 12 digits.
pub const CASE_STUDY_K_PAPER: [f64; 6] = [
    1.0,
    0.261291238126,
    0.308601827309,
    0.299118862895,
    0.241013461995,
    0.287232685470,
];

/// Same for the standard pipeline.
pub const CASE_STUDY_K_STANDARD: [f64; 6] = [
    1.0,
    0.603102508799,
    0.754383451654,
    0.616907091202,
    0.574019318551,
    0.709495162760,
];

pub const CASE_STUDY_RANKING_STANDARD: [&str; 5] = ["Project 2", "Project 5", "Project 3", "Project 1", "Project 4"];

fn rational(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite value")
}

fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().expect("representable")
}

/// Weights given as decimal text are taken at face value (0.29 = 29/100).
pub fn decimal(text: &str) -> BigRational {
    let (int, frac) = text.split_once('.').unwrap_or((text, ""));
    let digits: BigInt = format!("{int}{frac}").parse().unwrap();
    let scale = BigInt::from(10u32).pow(frac.len() as u32);
    BigRational::new(digits, scale)
}

fn column_shares(column: &[BigRational]) -> Vec<BigRational> {
    let sum = column.iter().fold(BigRational::zero(), |acc, x| acc + x);
    column.iter().map(|x| x / &sum).collect()
}

/// Straight-line exact ARAS over rationals. Returns K with K_0 first.
pub fn exact_k(
    values: &[Vec<BigRational>],
    cost: &[bool],
    weights: &[BigRational],
    mode: PipelineMode,
) -> Vec<BigRational> {
    let m = values.len();
    let n = cost.len();
    let columns: Vec<Vec<BigRational>> = (0..n).map(|j| (0..m).map(|i| values[i][j].clone()).collect()).collect();
    let mut stacked: Vec<Vec<BigRational>> = Vec::with_capacity(n);
    for j in 0..n {
        let base = match mode {
            PipelineMode::Paper2011 => column_shares(&columns[j]),
            PipelineMode::StandardAras => columns[j].clone(),
        };
        let best = if cost[j] {
            base.iter().min().unwrap().clone()
        } else {
            match mode {
                PipelineMode::Paper2011 => BigRational::one(),
                PipelineMode::StandardAras => base.iter().max().unwrap().clone(),
            }
        };
        let mut col = vec![best];
        col.extend(base);
        if cost[j] {
            col = col.iter().map(|x| x.recip()).collect();
        }
        stacked.push(column_shares(&col));
    }
    let scores: Vec<BigRational> = (0..=m)
        .map(|i| (0..n).fold(BigRational::zero(), |acc, j| acc + &stacked[j][i] * &weights[j]))
        .collect();
    scores.iter().map(|s| s / &scores[0]).collect()
}

/// Exact oracle applied to a library matrix and floating weights (each double
/// taken as its exact binary value).
pub fn oracle_k(matrix: &DecisionMatrix, weights: &[f64], mode: PipelineMode) -> Vec<f64> {
    let values: Vec<Vec<BigRational>> = matrix
        .values()
        .iter()
        .map(|r| r.iter().map(|&x| rational(x)).collect())
        .collect();
    let cost: Vec<bool> = matrix
        .criteria()
        .iter()
        .map(|c| c.direction == Direction::Cost)
        .collect();
    let w: Vec<BigRational> = weights.iter().map(|&x| rational(x)).collect();
    exact_k(&values, &cost, &w, mode).iter().map(to_f64).collect()
}

/// Ranking by descending K (ties keep input order) via a plain selection loop.
pub fn oracle_ranking(names: &[String], k_without_optimal: &[f64]) -> Vec<String> {
    let mut remaining: Vec<usize> = (0..names.len()).collect();
    let mut out = Vec::new();
    while !remaining.is_empty() {
        let mut best = 0;
        for pos in 1..remaining.len() {
            if k_without_optimal[remaining[pos]] > k_without_optimal[remaining[best]] {
                best = pos;
            }
        }
        out.push(names[remaining.remove(best)].clone());
    }
    out
}

/// Case study evaluated by the exact oracle with decimal weights.
pub fn case_study_exact(mode: PipelineMode) -> Vec<f64> {
    let raw = [
        [10, 3, 6, 7],
        [13, 5, 7, 9],
        [9, 1, 8, 1],
        [11, 3, 8, 7],
        [12, 5, 10, 5],
    ];
    let values: Vec<Vec<BigRational>> = raw
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let weights: Vec<BigRational> = ["0.29", "0.34", "0.22", "0.15"].iter().map(|t| decimal(t)).collect();
    exact_k(&values, &[false, false, true, true], &weights, mode)
        .iter()
        .map(to_f64)
        .collect()
}

/// Dense eigen-solve of a positive 3x3 matrix: largest real root of the
/// characteristic polynomial by bisection, eigenvector from the cross product
/// of two rows of (A − λI). Returns (λ, eigenvector normalized to sum 1).
pub fn dense_eigen_3x3(a: [[f64; 3]; 3]) -> (f64, [f64; 3]) {
    let trace = a[0][0] + a[1][1] + a[2][2];
    let minors = a[0][0] * a[1][1] - a[0][1] * a[1][0] + a[0][0] * a[2][2] - a[0][2] * a[2][0] + a[1][1] * a[2][2]
        - a[1][2] * a[2][1];
    let det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    let p = |x: f64| x * x * x - trace * x * x + minors * x - det;
    // the Perron root is bounded by the maximum row sum and exceeds every other real root
    let mut hi = a.iter().map(|r| r.iter().sum::<f64>()).fold(0.0, f64::max);
    let mut lo = 2.9;
    assert!(p(lo) < 0.0 && p(hi) >= 0.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if p(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let lambda = 0.5 * (lo + hi);
    let r0 = [a[0][0] - lambda, a[0][1], a[0][2]];
    let r1 = [a[1][0], a[1][1] - lambda, a[1][2]];
    let v = [
        r0[1] * r1[2] - r0[2] * r1[1],
        r0[2] * r1[0] - r0[0] * r1[2],
        r0[0] * r1[1] - r0[1] * r1[0],
    ];
    let s = v[0] + v[1] + v[2];
    (lambda, [v[0] / s, v[1] / s, v[2] / s])
}

/// Random positive weights with max/min ≤ 9, so every ratio fits the scale.
pub fn random_scale_weights(rng: &mut StdRng, n: usize) -> Vec<f64> {
    let raw: Vec<f64> = (0..n).map(|_| rng.random_range(1.0..9.0)).collect();
    let sum: f64 = raw.iter().sum();
    raw.into_iter().map(|x| x / sum).collect()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Random valid decision problem with m ≤ 12 alternatives and n ≤ 8 criteria.
pub fn random_problem(rng: &mut StdRng) -> (DecisionMatrix, WeightVector) {
    let m = rng.random_range(1..=12);
    let n = rng.random_range(1..=8);
    let criteria: Vec<Criterion> = (0..n)
        .map(|j| {
            let dir = if rng.random_bool(0.5) {
                Direction::Benefit
            } else {
                Direction::Cost
            };
            Criterion::new(format!("C{j}"), dir)
        })
        .collect();
    let values: Vec<Vec<f64>> = (0..m)
        .map(|_| (0..n).map(|_| rng.random_range(0.5..100.0)).collect())
        .collect();
    let alternatives = (0..m).map(|i| format!("A{}", i + 1)).collect();
    let matrix = DecisionMatrix::new(criteria, alternatives, values).unwrap();
    let raw: Vec<f64> = (0..n).map(|_| rng.random_range(0.05..1.0)).collect();
    (matrix, WeightVector::renormalized(raw).unwrap())
}

pub fn with_values(matrix: &DecisionMatrix, values: Vec<Vec<f64>>) -> DecisionMatrix {
    DecisionMatrix::new(matrix.criteria().to_vec(), matrix.alternatives().to_vec(), values).unwrap()
}
