//! Exact arithmetic on Markov triples.
//!
//! A Markov triple is a solution in positive integers of
//! `x² + y² + z² = 3xyz`. Every triple is reached from `(1, 1, 1)` by
//! coordinate permutations and Vieta flips `z ↦ 3xy − z`, and the flips
//! organise the triples into a tree:
//!
//! ```text
//! (1,1,1) ── (1,1,2) ── (1,2,5) ─┬─ (1,5,13) ─┬─ (1,13,34)
//!                                │            └─ (5,13,194)
//!                                └─ (2,5,29) ─┬─ (5,29,433)
//!                                             └─ (2,29,169)
//! ```
//!
//! The first two nodes form a singular spine (both flips coincide); the
//! proper binary tree starts at `(1, 2, 5)`, whose branches follow the
//! Stern–Brocot tree of `[0, 1]` rooted at `1/2`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Number of spine flips between `(1,1,1)` and the branching triple `(1,2,5)`.
pub const SPINE_LEN: usize = 2;

fn big(n: u32) -> BigUint {
    BigUint::from(n)
}

/// `x² + y² + z² − 3xyz`, evaluated exactly.
fn markov_form(x: &BigUint, y: &BigUint, z: &BigUint) -> BigInt {
    let squares = BigInt::from(x * x + y * y + z * z);
    squares - BigInt::from(3u32 * x * y * z)
}

/// `a² + b² + c² − abc`, evaluated exactly.
pub fn kappa(a: &BigInt, b: &BigInt, c: &BigInt) -> BigInt {
    a * a + b * b + c * c - a * b * c
}

/// True iff all three entries are positive and `x² + y² + z² = 3xyz` holds exactly.
pub fn is_markov(x: &BigInt, y: &BigInt, z: &BigInt) -> bool {
    if !(x.is_positive() && y.is_positive() && z.is_positive()) {
        return false;
    }
    x * x + y * y + z * z == BigInt::from(3) * x * y * z
}

/// Coordinate of a triple, numbered 1 to 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Position {
    First,
    Second,
    Third,
}

impl Position {
    pub const ALL: [Position; 3] = [Position::First, Position::Second, Position::Third];

    fn index(self) -> usize {
        match self {
            Position::First => 0,
            Position::Second => 1,
            Position::Third => 2,
        }
    }
}

impl TryFrom<usize> for Position {
    type Error = Error;

    fn try_from(i: usize) -> Result<Self> {
        match i {
            1 => Ok(Position::First),
            2 => Ok(Position::Second),
            3 => Ok(Position::Third),
            _ => Err(Error::InvalidArgument(format!(
                "position {i} is not in 1..=3"
            ))),
        }
    }
}

/// Replace entry `pos` of `[a, b, c]` by `k·(product of the others) − entry`.
fn flip_entries(e: &[BigUint; 3], pos: Position, k: u32) -> [BigUint; 3] {
    let i = pos.index();
    let (j, l) = ((i + 1) % 3, (i + 2) % 3);
    let mut out = e.clone();
    out[i] = k * &e[j] * &e[l] - &e[i];
    out
}

/// A positive solution of `x² + y² + z² = 3xyz`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkovTriple {
    entries: [BigUint; 3],
}

impl MarkovTriple {
    pub fn new(x: BigUint, y: BigUint, z: BigUint) -> Result<Self> {
        let ok = !(x.is_zero() || y.is_zero() || z.is_zero()) && markov_form(&x, &y, &z).is_zero();
        if !ok {
            return Err(Error::NotMarkov {
                x: x.to_string(),
                y: y.to_string(),
                z: z.to_string(),
            });
        }
        Ok(MarkovTriple { entries: [x, y, z] })
    }

    pub fn from_u64(x: u64, y: u64, z: u64) -> Result<Self> {
        Self::new(x.into(), y.into(), z.into())
    }

    pub fn root() -> Self {
        MarkovTriple {
            entries: [big(1), big(1), big(1)],
        }
    }

    pub fn x(&self) -> &BigUint {
        &self.entries[0]
    }

    pub fn y(&self) -> &BigUint {
        &self.entries[1]
    }

    pub fn z(&self) -> &BigUint {
        &self.entries[2]
    }

    pub fn entries(&self) -> &[BigUint; 3] {
        &self.entries
    }

    pub fn max(&self) -> &BigUint {
        self.entries.iter().max().expect("three entries")
    }

    /// Replace the entry at `pos` by the other root of the quadratic in that
    /// coordinate: `c ↦ 3·(product of the other two) − c`.
    pub fn vieta_flip(&self, pos: Position) -> MarkovTriple {
        MarkovTriple {
            entries: flip_entries(&self.entries, pos, 3),
        }
    }

    pub fn ordered(&self) -> OrderedTriple {
        let mut e = self.entries.clone();
        e.sort();
        let [small, mid, max] = e;
        OrderedTriple::from_sorted(small, mid, max)
    }

    /// The corresponding zero of the κ-form, `3·(x, y, z)`.
    pub fn to_kappa(&self) -> KappaTriple {
        KappaTriple {
            entries: self.entries.clone().map(|e| e * 3u32),
        }
    }
}

impl fmt::Display for MarkovTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = &self.entries;
        write!(f, "({x}, {y}, {z})")
    }
}

/// A positive zero of `κ(a, b, c) = a² + b² + c² − abc`.
///
/// Integer zeros are exactly the Markov triples scaled by 3; the two flips
/// are conjugate under that scaling.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KappaTriple {
    entries: [BigUint; 3],
}

impl KappaTriple {
    pub fn new(a: BigUint, b: BigUint, c: BigUint) -> Result<Self> {
        let signed = [&a, &b, &c].map(|v| BigInt::from(v.clone()));
        let positive = !(a.is_zero() || b.is_zero() || c.is_zero());
        if !positive || !kappa(&signed[0], &signed[1], &signed[2]).is_zero() {
            return Err(Error::NotMarkov {
                x: a.to_string(),
                y: b.to_string(),
                z: c.to_string(),
            });
        }
        Ok(KappaTriple { entries: [a, b, c] })
    }

    pub fn entries(&self) -> &[BigUint; 3] {
        &self.entries
    }

    /// `c ↦ (product of the other two) − c` at `pos`.
    pub fn kappa_flip(&self, pos: Position) -> KappaTriple {
        KappaTriple {
            entries: flip_entries(&self.entries, pos, 1),
        }
    }

    pub fn to_markov(&self) -> Result<MarkovTriple> {
        let three = big(3);
        if self.entries.iter().any(|e| !(e % &three).is_zero()) {
            return Err(Error::InternalInconsistency(format!(
                "κ-triple {:?} is not divisible by 3",
                self.entries
            )));
        }
        let [a, b, c] = self.entries.clone().map(|e| e / 3u32);
        MarkovTriple::new(a, b, c)
    }
}

/// A Markov triple sorted so that `small ≤ mid ≤ max`.
///
/// Apart from the spine triples `(1,1,1)` and `(1,1,2)` the entries of a
/// Markov triple are pairwise distinct, so the order is strict there.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedTriple {
    pub small: BigUint,
    pub mid: BigUint,
    pub max: BigUint,
}

impl OrderedTriple {
    fn from_sorted(small: BigUint, mid: BigUint, max: BigUint) -> Self {
        if (small == mid || mid == max) && !small.is_one() {
            log::warn!("Markov triple ({small}, {mid}, {max}) has a repeated entry off the spine");
        }
        OrderedTriple { small, mid, max }
    }

    pub fn root() -> Self {
        OrderedTriple {
            small: big(1),
            mid: big(1),
            max: big(1),
        }
    }

    pub fn new(a: BigUint, b: BigUint, c: BigUint) -> Result<Self> {
        Ok(MarkovTriple::new(a, b, c)?.ordered())
    }

    pub fn is_root(&self) -> bool {
        self.max.is_one()
    }

    pub fn to_markov(&self) -> MarkovTriple {
        MarkovTriple {
            entries: [self.small.clone(), self.mid.clone(), self.max.clone()],
        }
    }

    /// `3·small·mid < 2·max`, the condition under which flipping `max`
    /// produces a strictly smaller triple.
    pub fn is_reducible(&self) -> bool {
        3u32 * &self.small * &self.mid < 2u32 * &self.max
    }

    /// The parent in the Markov tree: flip `max`. `None` at the root.
    pub fn parent(&self) -> Option<OrderedTriple> {
        if self.is_root() {
            return None;
        }
        let lowered = 3u32 * &self.small * &self.mid - &self.max;
        Some(
            MarkovTriple {
                entries: [lowered, self.small.clone(), self.mid.clone()],
            }
            .ordered(),
        )
    }

    pub fn is_spine(&self) -> bool {
        self.small.is_one() && self.mid.is_one()
    }
}

impl fmt::Display for OrderedTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.small, self.mid, self.max)
    }
}

/// Children of an ordered triple in the Markov tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Children {
    /// On the spine both flips give the same triple.
    Single(OrderedTriple),
    /// `(flip of mid, flip of small)`; the first has the smaller maximum.
    Pair(OrderedTriple, OrderedTriple),
}

impl Children {
    pub fn to_vec(&self) -> Vec<OrderedTriple> {
        match self {
            Children::Single(t) => vec![t.clone()],
            Children::Pair(a, b) => vec![a.clone(), b.clone()],
        }
    }
}

/// The tree children of `t`, obtained by flipping `mid` and `small`.
///
/// Without the Farey orientation of `t` the children cannot be labelled
/// left/right; they are returned by increasing maximum. Use
/// [`LabeledTriple`] for the Stern–Brocot convention.
pub fn children(t: &OrderedTriple) -> Children {
    let flip_mid = 3u32 * &t.small * &t.max - &t.mid;
    let flip_small = 3u32 * &t.mid * &t.max - &t.small;
    let a = OrderedTriple::from_sorted(t.small.clone(), t.max.clone(), flip_mid);
    let b = OrderedTriple::from_sorted(t.mid.clone(), t.max.clone(), flip_small);
    if a == b {
        Children::Single(a)
    } else {
        Children::Pair(a, b)
    }
}

/// One step in the tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    L,
    R,
}

impl Dir {
    pub fn as_char(self) -> char {
        match self {
            Dir::L => 'L',
            Dir::R => 'R',
        }
    }
}

/// A finite word over `{L, R}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreePath(Vec<Dir>);

impl TreePath {
    pub fn new() -> Self {
        TreePath(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, d: Dir) {
        self.0.push(d);
    }

    pub fn child(&self, d: Dir) -> TreePath {
        let mut p = self.clone();
        p.push(d);
        p
    }

    pub fn dirs(&self) -> &[Dir] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Dir> + '_ {
        self.0.iter().copied()
    }

    /// Drop the first `n` steps.
    pub fn suffix(&self, n: usize) -> TreePath {
        TreePath(self.0.get(n..).unwrap_or_default().to_vec())
    }
}

impl FromIterator<Dir> for TreePath {
    fn from_iter<I: IntoIterator<Item = Dir>>(iter: I) -> Self {
        TreePath(iter.into_iter().collect())
    }
}

impl fmt::Display for TreePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|d| write!(f, "{}", d.as_char()))
    }
}

impl FromStr for TreePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'L' => Ok(Dir::L),
                'R' => Ok(Dir::R),
                _ => Err(Error::Parse {
                    input: s.to_string(),
                    reason: format!("unexpected {c:?}"),
                }),
            })
            .collect()
    }
}

/// A tree node carrying its Farey orientation.
///
/// The node sits at slope `(left_slope ⊕ right_slope)` (the mediant) and
/// `left`, `right`, `mid` are the Markov numbers of the left endpoint, the
/// right endpoint and the mediant. Descending left keeps the left endpoint:
/// `(left, mid, 3·left·mid − right)`; descending right keeps the right one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledTriple {
    pub left: BigUint,
    pub right: BigUint,
    pub mid: BigUint,
    /// `(p, q)` of the left Farey endpoint.
    pub left_slope: (u64, u64),
    /// `(p, q)` of the right Farey endpoint.
    pub right_slope: (u64, u64),
}

impl LabeledTriple {
    /// `(1, 2, 5)` at slope `1/2`, between `0/1` (value 1) and `1/1` (value 2).
    pub fn branch_root() -> Self {
        LabeledTriple {
            left: big(1),
            right: big(2),
            mid: big(5),
            left_slope: (0, 1),
            right_slope: (1, 1),
        }
    }

    /// `(p, q)` of the node's own slope.
    pub fn slope(&self) -> (u64, u64) {
        (
            self.left_slope.0 + self.right_slope.0,
            self.left_slope.1 + self.right_slope.1,
        )
    }

    pub fn child(&self, d: Dir) -> LabeledTriple {
        let here = self.slope();
        match d {
            Dir::L => LabeledTriple {
                left: self.left.clone(),
                right: self.mid.clone(),
                mid: 3u32 * &self.left * &self.mid - &self.right,
                left_slope: self.left_slope,
                right_slope: here,
            },
            Dir::R => LabeledTriple {
                left: self.mid.clone(),
                right: self.right.clone(),
                mid: 3u32 * &self.mid * &self.right - &self.left,
                left_slope: here,
                right_slope: self.right_slope,
            },
        }
    }

    pub fn ordered(&self) -> OrderedTriple {
        MarkovTriple {
            entries: [self.left.clone(), self.right.clone(), self.mid.clone()],
        }
        .ordered()
    }

    /// Follow `path` from this node.
    pub fn descend(&self, path: &TreePath) -> LabeledTriple {
        path.iter().fold(self.clone(), |node, d| node.child(d))
    }
}

/// The flip sequence carrying `t` to `(1, 1, 1)`, recorded root-first.
///
/// Each step flips the largest entry, which strictly lowers it because
/// `3·small·mid < 2·max` off the root. The first [`SPINE_LEN`] letters are
/// the spine steps `(1,1,1) → (1,1,2) → (1,2,5)`, where both flips agree and
/// the step is written `L`; the remaining letters are the Stern–Brocot
/// path of the triple below `(1, 2, 5)`.
pub fn reduce_to_root(t: &MarkovTriple) -> Result<TreePath> {
    let mut chain = vec![t.ordered()];
    while let Some(parent) = chain.last().and_then(OrderedTriple::parent) {
        if parent.max >= chain.last().expect("nonempty").max {
            return Err(Error::InternalInconsistency(format!(
                "reduction of {t} did not decrease at {}",
                chain.last().expect("nonempty")
            )));
        }
        chain.push(parent);
    }
    chain.reverse();

    let mut path = TreePath::new();
    let spine = chain.len().saturating_sub(1).min(SPINE_LEN);
    (0..spine).for_each(|_| path.push(Dir::L));

    let mut node = LabeledTriple::branch_root();
    for next in chain.iter().skip(SPINE_LEN + 1) {
        let keeps = |v: &BigUint| next.small == *v || next.mid == *v;
        let d = if keeps(&node.left) && !keeps(&node.right) {
            Dir::L
        } else if keeps(&node.right) && !keeps(&node.left) {
            Dir::R
        } else {
            return Err(Error::InternalInconsistency(format!(
                "cannot orient {next} below ({}, {}, {})",
                node.left, node.right, node.mid
            )));
        };
        node = node.child(d);
        path.push(d);
    }
    Ok(path)
}

/// The ordered triple reached from `(1, 1, 1)` by a flip path in the
/// format returned by [`reduce_to_root`].
pub fn replay(path: &TreePath) -> OrderedTriple {
    match path.len() {
        0 => OrderedTriple::root(),
        1 => OrderedTriple {
            small: big(1),
            mid: big(1),
            max: big(2),
        },
        _ => LabeledTriple::branch_root()
            .descend(&path.suffix(SPINE_LEN))
            .ordered(),
    }
}

/// Pre-order walk of the branch tree rooted at `(1, 2, 5)`, left before
/// right, down to `max_depth` (the root has depth 0).
///
/// `visit` returns whether to descend below the node; returning `false`
/// prunes the subtree.
pub fn walk_tree<F>(max_depth: usize, mut visit: F)
where
    F: FnMut(&LabeledTriple, usize) -> bool,
{
    let mut stack = vec![(LabeledTriple::branch_root(), 0usize)];
    while let Some((node, depth)) = stack.pop() {
        if !visit(&node, depth) || depth == max_depth {
            continue;
        }
        stack.push((node.child(Dir::R), depth + 1));
        stack.push((node.child(Dir::L), depth + 1));
    }
}

/// Every node of the branch tree down to `depth`, level by level, left
/// before right within a level. Level `d` holds `2^d` nodes.
///
/// Levels are produced by iterative deepening, so memory stays linear in
/// the depth.
pub fn enumerate_tree(depth: usize) -> EnumerateTree {
    EnumerateTree {
        max_depth: depth,
        level: 0,
        stack: vec![(LabeledTriple::branch_root(), TreePath::new())],
    }
}

pub struct EnumerateTree {
    max_depth: usize,
    level: usize,
    stack: Vec<(LabeledTriple, TreePath)>,
}

impl Iterator for EnumerateTree {
    type Item = (TreePath, OrderedTriple);

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            if self.level > self.max_depth {
                return None;
            }
            match self.stack.pop() {
                None => {
                    self.level += 1;
                    if self.level <= self.max_depth {
                        self.stack
                            .push((LabeledTriple::branch_root(), TreePath::new()));
                    }
                }
                Some((node, path)) if path.len() == self.level => {
                    return Some((path, node.ordered()));
                }
                Some((node, path)) => {
                    self.stack.push((node.child(Dir::R), path.child(Dir::R)));
                    self.stack.push((node.child(Dir::L), path.child(Dir::L)));
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(x: u64, y: u64, z: u64) -> MarkovTriple {
        MarkovTriple::from_u64(x, y, z).unwrap()
    }

    fn o(x: u64, y: u64, z: u64) -> OrderedTriple {
        t(x, y, z).ordered()
    }

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn is_markov_examples() {
        assert!(is_markov(&bi(1), &bi(1), &bi(1)));
        assert!(!is_markov(&bi(3), &bi(3), &bi(3)));
        assert!(is_markov(&bi(2), &bi(5), &bi(29)));
        assert!(!is_markov(&bi(-1), &bi(-1), &bi(1)));
        assert!(!is_markov(&bi(0), &bi(0), &bi(0)));
    }

    #[test]
    fn constructor_rejects_non_solutions() {
        assert!(matches!(
            MarkovTriple::from_u64(1, 2, 6),
            Err(Error::NotMarkov { .. })
        ));
        assert!(MarkovTriple::from_u64(0, 0, 0).is_err());
    }

    #[test]
    fn vieta_flip_examples() {
        assert_eq!(t(1, 1, 1).vieta_flip(Position::Third), t(1, 1, 2));
        assert_eq!(t(1, 2, 5).vieta_flip(Position::First), t(29, 2, 5));
        assert_eq!(t(1, 5, 13).vieta_flip(Position::Third), t(1, 5, 2));
    }

    #[test]
    fn kappa_flip_examples() {
        let k = |a: u64, b: u64, c: u64| KappaTriple::new(a.into(), b.into(), c.into()).unwrap();
        assert_eq!(k(3, 3, 3).kappa_flip(Position::Third), k(3, 3, 6));
        assert_eq!(k(3, 3, 6).kappa_flip(Position::First), k(15, 3, 6));
        let m = t(1, 2, 5);
        assert_eq!(
            m.vieta_flip(Position::First).to_kappa(),
            m.to_kappa().kappa_flip(Position::First)
        );
        assert!(KappaTriple::new(big(1), big(1), big(1)).is_err());
        assert_eq!(k(15, 3, 6).to_markov().unwrap(), t(5, 1, 2));
    }

    #[test]
    fn position_from_index() {
        assert_eq!(Position::try_from(2).unwrap(), Position::Second);
        assert!(Position::try_from(0).is_err());
        assert!(Position::try_from(4).is_err());
    }

    #[test]
    fn reduce_examples() {
        assert!(reduce_to_root(&t(1, 1, 1)).unwrap().is_empty());
        assert_eq!(reduce_to_root(&t(1, 1, 2)).unwrap().len(), 1);
        assert_eq!(reduce_to_root(&t(2, 1, 1)).unwrap().len(), 1);
        // (5,13,194) -> (1,5,13) -> (1,2,5) -> (1,1,2) -> (1,1,1)
        let p = reduce_to_root(&t(5, 13, 194)).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.to_string(), "LLLR");
        assert_eq!(replay(&p), o(5, 13, 194));
        assert_eq!(reduce_to_root(&t(433, 29, 5)).unwrap().to_string(), "LLRL");
    }

    #[test]
    fn children_examples() {
        assert_eq!(
            children(&o(1, 2, 5)),
            Children::Pair(o(1, 5, 13), o(2, 5, 29))
        );
        assert_eq!(children(&o(1, 1, 2)), Children::Single(o(1, 2, 5)));
        assert_eq!(
            children(&OrderedTriple::root()),
            Children::Single(o(1, 1, 2))
        );
        assert_eq!(
            children(&o(1, 5, 13)),
            Children::Pair(o(1, 13, 34), o(5, 13, 194))
        );
    }

    #[test]
    fn labeled_children_follow_farey_labels() {
        let root = LabeledTriple::branch_root();
        let l = root.child(Dir::L);
        let r = root.child(Dir::R);
        assert_eq!((l.ordered(), l.slope()), (o(1, 5, 13), (1, 3)));
        assert_eq!((r.ordered(), r.slope()), (o(2, 5, 29), (2, 3)));
        assert_eq!(r.child(Dir::L).ordered(), o(5, 29, 433));
        assert_eq!(r.child(Dir::L).slope(), (3, 5));
        assert_eq!(r.child(Dir::R).ordered(), o(2, 29, 169));
        assert_eq!(r.child(Dir::R).slope(), (3, 4));
    }

    #[test]
    fn enumerate_examples() {
        let level = |d: usize| -> Vec<OrderedTriple> {
            enumerate_tree(d)
                .filter(|(p, _)| p.len() == d)
                .map(|(_, t)| t)
                .collect()
        };
        assert_eq!(level(0), vec![o(1, 2, 5)]);
        assert_eq!(level(1), vec![o(1, 5, 13), o(2, 5, 29)]);
        assert_eq!(
            level(2),
            vec![o(1, 13, 34), o(5, 13, 194), o(5, 29, 433), o(2, 29, 169)]
        );
        let all: Vec<_> = enumerate_tree(3).map(|(p, _)| p.to_string()).collect();
        assert_eq!(all.len(), 15);
        assert_eq!(&all[..4], ["", "L", "R", "LL"]);
        assert_eq!(all[7], "LLL");
        assert_eq!(all[14], "RRR");
    }

    #[test]
    fn walk_tree_prunes() {
        let mut seen = 0;
        walk_tree(30, |node, _| {
            seen += 1;
            node.mid <= big(1000)
        });
        // 11 branch nodes up to 1000 plus the children that overshoot.
        assert!(seen > 11);
        let mut inside = 0;
        walk_tree(30, |node, _| {
            let keep = node.mid <= big(1000);
            inside += keep as usize;
            keep
        });
        assert_eq!(inside, 11);
    }

    #[test]
    fn path_round_trip_text() {
        let p: TreePath = "LRRL".parse().unwrap();
        assert_eq!(p.to_string(), "LRRL");
        assert!("LX".parse::<TreePath>().is_err());
        assert_eq!("".parse::<TreePath>().unwrap(), TreePath::new());
    }

    #[test]
    fn tree_invariants_to_depth_12() {
        for (path, tr) in enumerate_tree(12) {
            let m = tr.to_markov();
            assert!(is_markov(
                &BigInt::from(m.x().clone()),
                &BigInt::from(m.y().clone()),
                &BigInt::from(m.z().clone())
            ));
            assert!(tr.is_reducible(), "{tr}");
            assert!(tr.small < tr.mid && tr.mid < tr.max);
            let full = reduce_to_root(&m).unwrap();
            assert_eq!(full.suffix(SPINE_LEN), path);
            assert_eq!(replay(&full), tr);
            for pos in Position::ALL {
                assert_eq!(m.vieta_flip(pos).vieta_flip(pos), m);
            }
        }
    }
}
