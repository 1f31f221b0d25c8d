//! Deciding whether a candidate betweenness relation is induced by a metric.
//!
//! A structure `B` on `n` points is metrizable iff some metric makes exactly
//! the triples of `B` collinear. Writing one variable per pair of points,
//! membership is an equality `d(x,z) = d(x,y) + d(y,z)` and non-membership a
//! strict inequality `d(x,z) < d(x,y) + d(y,z)`. The strict side is handled
//! with one shared slack `ε`:
//!
//! ```text
//! maximise ε
//!   d(x,z) = d(x,y) + d(y,z)          for (x y z) in B
//!   d(x,z) + ε <= d(x,y) + d(y,z)     for every other middle y of {x,y,z}
//!   d(x,y) >= 1, 0 <= ε <= 1
//! ```
//!
//! Since the equalities are homogeneous, any witness can be rescaled to meet
//! the normalisation, so `B` is metrizable iff the optimum is positive. The
//! triangle inequalities follow from the rows above and are re-checked on
//! every witness. Distances are shifted by one internally so that all
//! variables are plain nonnegative simplex variables.

use num_traits::{One, Signed, Zero};

use crate::lp::{LinearProgram, Outcome, Relation};
use crate::metric::MetricSpace;
use crate::rational::{self, Rational};
use crate::structure::{betweenness_of_metric, BetweennessStructure, Triple};
use crate::{Error, Result};

/// Canonicalises and validates a raw candidate relation.
pub fn validate_candidate(raw: impl IntoIterator<Item = Triple>, n: usize) -> Result<BetweennessStructure> {
    BetweennessStructure::new(n, raw)
}

/// Index of the pair `{x, y}` among the `n(n-1)/2` pairs, lexicographically.
pub fn pair_index(n: usize, x: usize, y: usize) -> usize {
    let (a, b) = (x.min(y), x.max(y));
    debug_assert!(a != b && b < n);
    a * (2 * n - a - 1) / 2 + (b - a - 1)
}

/// The linear program above, built for one structure.
#[derive(Debug, Clone)]
pub struct FeasibilityProblem {
    n: usize,
    lp: LinearProgram,
    equalities: usize,
    inequalities: usize,
}

impl FeasibilityProblem {
    pub fn new(b: &BetweennessStructure) -> Self {
        let n = b.n();
        let pairs = n * n.saturating_sub(1) / 2;
        let eps = pairs;
        let mut lp = LinearProgram::new(pairs + 1);
        lp.set_objective(eps, rational::one());
        let (mut equalities, mut inequalities) = (0, 0);
        for x in 0..n {
            for z in x + 1..n {
                for y in (0..n).filter(|&y| y != x && y != z) {
                    let mut coeffs = vec![
                        (pair_index(n, x, z), rational::one()),
                        (pair_index(n, x, y), -rational::one()),
                        (pair_index(n, y, z), -rational::one()),
                    ];
                    // with d = 1 + d', both rows gain a constant 1 on the right
                    if b.between(x, y, z) {
                        lp.add_constraint(coeffs, Relation::Eq, rational::one());
                        equalities += 1;
                    } else {
                        coeffs.push((eps, rational::one()));
                        lp.add_constraint(coeffs, Relation::Le, rational::one());
                        inequalities += 1;
                    }
                }
            }
        }
        lp.add_constraint(vec![(eps, rational::one())], Relation::Le, rational::one());
        FeasibilityProblem { n, lp, equalities, inequalities }
    }

    pub fn equalities(&self) -> usize {
        self.equalities
    }

    pub fn inequalities(&self) -> usize {
        self.inequalities
    }

    pub fn linear_program(&self) -> &LinearProgram {
        &self.lp
    }

    /// Optimal `ε` and the witness metric, or `None` if the program is
    /// infeasible (the equalities alone contradict each other).
    pub fn solve(&self) -> Option<(Rational, MetricSpace)> {
        match self.lp.solve() {
            Outcome::Optimal { value, point } => {
                let n = self.n;
                let mut d = vec![vec![Rational::zero(); n]; n];
                for x in 0..n {
                    for y in x + 1..n {
                        let v = Rational::one() + &point[pair_index(n, x, y)];
                        d[x][y] = v.clone();
                        d[y][x] = v;
                    }
                }
                Some((value, MetricSpace::new_unchecked(d)))
            }
            Outcome::Infeasible => None,
            Outcome::Unbounded => unreachable!("objective is bounded by ε <= 1"),
        }
    }
}

/// A metric inducing exactly `b`, if one exists.
pub fn is_metrizable(b: &BetweennessStructure) -> Option<MetricSpace> {
    let (eps, witness) = FeasibilityProblem::new(b).solve()?;
    if !eps.is_positive() {
        return None;
    }
    let witness = MetricSpace::new(witness.rows().to_vec())
        .expect("witness satisfies the metric axioms");
    assert_eq!(&betweenness_of_metric(&witness), b, "witness re-induces the structure");
    Some(witness)
}

pub const BRUTE_FORCE_MAX_POINTS: usize = 5;

/// Exhaustive search over integer metrics with entries in `1..=max_entry`,
/// returning the first one (in lexicographic pair order) that induces `b`.
///
/// Independent of the linear program: pairs are assigned one at a time and
/// a branch is cut as soon as a fully assigned triple violates the triangle
/// inequality or disagrees with `b`.
pub fn brute_force_metrizable(b: &BetweennessStructure, max_entry: i64) -> Result<Option<MetricSpace>> {
    let n = b.n();
    if n > BRUTE_FORCE_MAX_POINTS {
        return Err(Error::TooLarge { size: n, limit: BRUTE_FORCE_MAX_POINTS });
    }
    let mut d = vec![vec![0i64; n]; n];
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).collect();
    if brute_force_step(b, &pairs, 0, max_entry, &mut d) {
        Ok(Some(MetricSpace::from_integers(&d).expect("search only keeps metrics")))
    } else {
        Ok(None)
    }
}

fn brute_force_step(
    b: &BetweennessStructure,
    pairs: &[(usize, usize)],
    k: usize,
    max_entry: i64,
    d: &mut Vec<Vec<i64>>,
) -> bool {
    let Some(&(x, y)) = pairs.get(k) else { return true };
    for value in 1..=max_entry {
        d[x][y] = value;
        d[y][x] = value;
        let consistent = (0..b.n())
            .filter(|&w| w != x && w != y && d[x][w] > 0 && d[w][y] > 0)
            .all(|w| {
                let (dxy, dxw, dwy) = (d[x][y], d[x][w], d[w][y]);
                [
                    (dxy, dxw, dwy, b.between(x, w, y)),
                    (dwy, dxw, dxy, b.between(w, x, y)),
                    (dxw, dxy, dwy, b.between(x, y, w)),
                ]
                .iter()
                .all(|&(long, s1, s2, collinear)| long <= s1 + s2 && (long == s1 + s2) == collinear)
            });
        if consistent && brute_force_step(b, pairs, k + 1, max_entry, d) {
            return true;
        }
    }
    d[x][y] = 0;
    d[y][x] = 0;
    false
}

/// Every assignment of "no middle" or one of three middles to each 3-subset
/// of `n` points. These are exactly the trichotomous relations.
pub fn all_candidates(n: usize) -> Vec<BetweennessStructure> {
    let subsets: Vec<[usize; 3]> = (0..n)
        .flat_map(|a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| [a, b, c])))
        .collect();
    let total = 4usize.pow(subsets.len() as u32);
    (0..total)
        .map(|code| {
            let mut c = code;
            let mut triples = std::collections::BTreeSet::new();
            for &[a, b, cc] in &subsets {
                match c % 4 {
                    1 => triples.insert([b, a, cc]),
                    2 => triples.insert([a, b, cc]),
                    3 => triples.insert([a, cc, b]),
                    _ => false,
                };
                c /= 4;
            }
            BetweennessStructure::from_canonical_unchecked(n, triples)
        })
        .collect()
}
