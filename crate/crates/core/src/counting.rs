//! The counting function `M(R)`: Markov triples with maximum at most `R`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::indexing::{markov_of_slope, Slope};
use crate::norm::{ln_big, norm_of_markov, stable_norm, LatticeVector};
use crate::triples::{Dir, LabeledTriple};

fn spine_count(r: &BigUint) -> u64 {
    u64::from(*r >= BigUint::one()) + u64::from(*r >= BigUint::from(2u32))
}

fn count_below(root: LabeledTriple, r: &BigUint) -> u64 {
    let mut count = 0;
    let mut stack = vec![root];
    while let Some(node) = stack.pop() {
        if node.mid > *r {
            continue;
        }
        count += 1;
        stack.push(node.child(Dir::R));
        stack.push(node.child(Dir::L));
    }
    count
}

/// Unordered Markov triples with maximum entry at most `r`.
pub fn count_triples(r: &BigUint) -> u64 {
    spine_count(r) + count_below(LabeledTriple::branch_root(), r)
}

/// [`count_triples`] with subtrees counted on the rayon pool.
pub fn count_triples_parallel(r: &BigUint) -> u64 {
    const SPLIT_DEPTH: usize = 6;
    let mut frontier = vec![LabeledTriple::branch_root()];
    let mut upper = 0;
    for _ in 0..SPLIT_DEPTH {
        frontier.retain(|n| n.mid <= *r);
        upper += frontier.len() as u64;
        frontier = frontier
            .iter()
            .flat_map(|n| [n.child(Dir::L), n.child(Dir::R)])
            .collect();
    }
    let below: u64 = frontier.into_par_iter().map(|n| count_below(n, r)).sum();
    spine_count(r) + upper + below
}

/// Slopes `p/q ∈ [0, 1]` with `m_{p/q} ≤ r`, found by scanning the lattice
/// rather than the tree.
///
/// Since the norm of `(q, p)` is at least `q·‖(1, 0)‖`, only denominators up
/// to `arccosh(3r/2) / ‖(1, 0)‖` can qualify.
pub fn lattice_slopes(r: &BigUint) -> Vec<Slope> {
    let unit = stable_norm(LatticeVector::new(1, 0)).expect("nonzero vector");
    let reach = norm_of_markov(r) * (1.0 + 1e-9);
    let max_q = (reach / unit).floor().to_u64().unwrap_or(u64::MAX).max(1);
    let mut found: Vec<Slope> = Slope::all_up_to(max_q)
        .filter(|s| markov_of_slope(*s) <= *r)
        .collect();
    found.sort_by_key(|s| (s.q(), s.p()));
    found
}

pub fn count_lattice(r: &BigUint) -> u64 {
    lattice_slopes(r).len() as u64
}

#[derive(Debug, Clone, PartialEq)]
pub struct CountPoint {
    pub r: BigUint,
    pub count: u64,
    /// `count / (ln r)²`, natural logarithm.
    pub c_estimate: f64,
}

/// `M(R)` and `M(R) / (ln R)²` along a strictly increasing schedule of
/// bounds, each at least 2.
pub fn fit_constant(schedule: &[BigUint]) -> Result<Vec<CountPoint>> {
    if schedule.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(
            "schedule must be strictly increasing".into(),
        ));
    }
    if schedule.first().is_some_and(|r| *r < BigUint::from(2u32)) {
        return Err(Error::InvalidArgument(
            "bounds below 2 have ln R ≤ 0".into(),
        ));
    }
    Ok(schedule
        .iter()
        .map(|r| {
            let count = count_triples_parallel(r);
            let l = ln_big(r);
            CountPoint {
                r: r.clone(),
                count,
                c_estimate: count as f64 / (l * l),
            }
        })
        .collect())
}
