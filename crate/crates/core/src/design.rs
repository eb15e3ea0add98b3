//! Block designs: verification, derived designs, counting identities and the
//! text file format.
//!
//! File format (ASCII, LF line endings, no trailing whitespace):
//!
//! ```text
//! DESIGN v=<v> k=<k> t=<t> lambda=<l> b=<b>
//! <k space-separated point indices, strictly increasing>
//! ...
//! ```
//!
//! Block lines are sorted lexicographically as integer tuples.

use std::fmt;
use std::io::{BufRead, Write};

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::subsets::{binomial, sub_subsets, LexSubsets, Ranker};

/// A block: a strictly increasing list of point indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Block(Vec<u32>);

impl Block {
    /// Sorts the points; rejects repeated points.
    pub fn new(mut points: Vec<u32>) -> Result<Self> {
        points.sort_unstable();
        if points.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Structure(format!("block {points:?} repeats a point")));
        }
        Ok(Block(points))
    }

    /// Wraps points that are already strictly increasing.
    pub(crate) fn from_sorted(points: Vec<u32>) -> Self {
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
        Block(points)
    }

    pub fn points(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    /// Image under a point permutation.
    pub fn map(&self, perm: &[u32]) -> Block {
        let mut pts: Vec<u32> = self.0.iter().map(|&x| perm[x as usize]).collect();
        pts.sort_unstable();
        Block(pts)
    }
}

impl fmt::Debug for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// A `t-(v, k, λ)` incidence structure with blocks stored in sorted order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Design {
    v: u32,
    k: u32,
    t: u32,
    lambda: u32,
    blocks: Vec<Block>,
}

impl Design {
    /// Sorts the blocks and checks the structural invariants: every block
    /// has `k` distinct points in `[0, v)` and no block repeats.
    pub fn new(v: u32, k: u32, t: u32, lambda: u32, mut blocks: Vec<Block>) -> Result<Self> {
        if t == 0 || t > k || k > v {
            return Err(Error::Structure(format!("need 0 < t <= k <= v, got t={t} k={k} v={v}")));
        }
        for (i, b) in blocks.iter().enumerate() {
            if b.len() != k as usize {
                return Err(Error::Structure(format!("block {i} has {} points, expected {k}", b.len())));
            }
            if let Some(&x) = b.points().iter().find(|&&x| x >= v) {
                return Err(Error::Structure(format!("block {i} contains point {x} >= v = {v}")));
            }
        }
        blocks.sort_unstable();
        if let Some(w) = blocks.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Structure(format!("duplicate block {:?}", w[0])));
        }
        Ok(Design { v, k, t, lambda, blocks })
    }

    /// A candidate Steiner quadruple system, `3-(v, 4, 1)`.
    pub fn sqs(v: u32, blocks: Vec<Block>) -> Result<Self> {
        Design::new(v, 4, 3, 1, blocks)
    }

    pub fn v(&self) -> u32 {
        self.v
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    pub fn b(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn contains_block(&self, block: &Block) -> bool {
        self.blocks.binary_search(block).is_ok()
    }

    pub fn parameters(&self) -> String {
        format!("{}-({},{},{})", self.t, self.v, self.k, self.lambda)
    }
}

/// Outcome of [`verify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub is_valid: bool,
    pub b: usize,
    /// Number of blocks through each point.
    pub replication: Vec<u32>,
    /// `t`-subsets covered other than `λ` times, with their coverage,
    /// sorted by subset and truncated to `violation_limit` entries.
    pub violations: Vec<(Vec<u32>, u32)>,
    /// Total number of violating `t`-subsets before truncation.
    pub violation_count: u64,
}

pub const DEFAULT_VIOLATION_LIMIT: usize = 100;

/// Checks that every `t`-subset lies in exactly `λ` blocks.
pub fn verify(design: &Design) -> VerificationReport {
    verify_with_limit(design, DEFAULT_VIOLATION_LIMIT)
}

/// Counts coverage only over `t`-subsets that occur in some block. When no
/// subset is over-covered, the identity `b·C(k,t) = λ·C(v,t)` rules out
/// under-covered subsets; otherwise the full subset list is scanned to report
/// the deficient ones.
pub fn verify_with_limit(design: &Design, violation_limit: usize) -> VerificationReport {
    let (v, k, t, lambda) = (design.v, design.k as u64, design.t as usize, design.lambda);
    let ranker = Ranker::new(v, t);
    let mut coverage: FxHashMap<u64, u32> = FxHashMap::default();
    coverage.reserve(design.b() * binomial(k, t as u64) as usize);
    let mut replication = vec![0u32; v as usize];
    for block in &design.blocks {
        for &x in block.points() {
            replication[x as usize] += 1;
        }
        for s in sub_subsets(block.points(), t) {
            *coverage.entry(ranker.rank(&s)).or_insert(0) += 1;
        }
    }
    let identity_holds = design.b() as u128 * binomial(k, t as u64) as u128
        == lambda as u128 * binomial(v as u64, t as u64) as u128;
    let over = coverage.values().any(|&c| c > lambda);

    let mut violations = Vec::new();
    let mut violation_count = 0u64;
    if over || !identity_holds {
        for s in LexSubsets::new(v, t) {
            let c = coverage.get(&ranker.rank(&s)).copied().unwrap_or(0);
            if c != lambda {
                violation_count += 1;
                if violations.len() < violation_limit {
                    violations.push((s, c));
                }
            }
        }
    }
    VerificationReport {
        is_valid: violation_count == 0,
        b: design.b(),
        replication,
        violations,
        violation_count,
    }
}

/// The derived design at `point`: blocks through the point with the point
/// removed. Points above `point` shift down by one.
pub fn derived(design: &Design, point: u32) -> Result<Design> {
    if point >= design.v {
        return Err(Error::domain(format!("point {point} out of range for v = {}", design.v)));
    }
    if design.t < 2 {
        return Err(Error::domain("derived designs need t >= 2"));
    }
    let blocks = design
        .blocks
        .iter()
        .filter(|b| b.contains(point))
        .map(|b| {
            Block::from_sorted(
                b.points().iter().filter(|&&x| x != point).map(|&x| if x > point { x - 1 } else { x }).collect(),
            )
        })
        .collect();
    Design::new(design.v - 1, design.k - 1, design.t - 1, design.lambda, blocks)
}

/// Blocks through `point` with the point removed, keeping original labels.
pub fn derived_blocks_unshifted(design: &Design, point: u32) -> Vec<Vec<u32>> {
    design
        .blocks
        .iter()
        .filter(|b| b.contains(point))
        .map(|b| b.points().iter().copied().filter(|&x| x != point).collect())
        .collect()
}

/// The necessary and sufficient existence condition for an SQS(v):
/// `v ≡ 2 or 4 (mod 6)`, `v >= 4`.
pub fn hanani_admissible(v: u64) -> bool {
    v >= 4 && matches!(v % 6, 2 | 4)
}

/// Block count of an SQS(v), `v(v-1)(v-2)/24`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SqsBlockCount {
    pub value: u64,
    /// False when 24 does not divide `v(v-1)(v-2)`; `value` is then the floor.
    pub integral: bool,
}

pub fn sqs_block_count(v: u64) -> SqsBlockCount {
    let num = v as u128 * v.saturating_sub(1) as u128 * v.saturating_sub(2) as u128;
    SqsBlockCount { value: (num / 24) as u64, integral: num.is_multiple_of(24) }
}

pub fn write_design<W: Write>(design: &Design, mut out: W) -> Result<()> {
    writeln!(
        out,
        "DESIGN v={} k={} t={} lambda={} b={}",
        design.v,
        design.k,
        design.t,
        design.lambda,
        design.b()
    )?;
    for b in &design.blocks {
        writeln!(out, "{b}")?;
    }
    Ok(())
}

pub fn design_to_string(design: &Design) -> String {
    let mut buf = Vec::new();
    write_design(design, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("ascii output")
}

fn parse_header(line: &str) -> Result<[u64; 5]> {
    let err = |msg: &str| Error::Parse { line: 1, msg: msg.to_string() };
    let mut parts = line.split(' ');
    if parts.next() != Some("DESIGN") {
        return Err(err("header must start with `DESIGN`"));
    }
    let mut values = [0u64; 5];
    for (slot, key) in values.iter_mut().zip(["v", "k", "t", "lambda", "b"]) {
        let field = parts.next().ok_or_else(|| err(&format!("missing `{key}=`")))?;
        let value = field
            .strip_prefix(key)
            .and_then(|r| r.strip_prefix('='))
            .ok_or_else(|| err(&format!("expected `{key}=<value>`, found `{field}`")))?;
        *slot = value.parse().map_err(|_| err(&format!("bad value for `{key}`: `{value}`")))?;
    }
    if parts.next().is_some() {
        return Err(err("trailing fields in header"));
    }
    Ok(values)
}

pub fn read_design<R: BufRead>(input: R) -> Result<Design> {
    let mut lines = input.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse { line: 1, msg: "empty file".into() })??;
    let [v, k, t, lambda, b] = parse_header(&header)?;
    let to_u32 = |x: u64, what: &str| {
        u32::try_from(x).map_err(|_| Error::Parse { line: 1, msg: format!("{what} too large") })
    };
    let (v, k, t, lambda) = (to_u32(v, "v")?, to_u32(k, "k")?, to_u32(t, "t")?, to_u32(lambda, "lambda")?);
    if t == 0 || t > k || k > v {
        return Err(Error::Parse { line: 1, msg: format!("need 0 < t <= k <= v, got t={t} k={k} v={v}") });
    }
    let mut blocks: Vec<Block> = Vec::new();
    for (i, line) in lines.enumerate() {
        let lineno = i + 2;
        let line = line?;
        let perr = |msg: String| Error::Parse { line: lineno, msg };
        let mut pts = Vec::with_capacity(k as usize);
        for tok in line.split(' ') {
            let x: u32 = tok.parse().map_err(|_| perr(format!("bad point index `{tok}`")))?;
            if x >= v {
                return Err(perr(format!("point index {x} out of range for v = {v}")));
            }
            pts.push(x);
        }
        if pts.len() != k as usize {
            return Err(perr(format!("expected {k} points, found {}", pts.len())));
        }
        if pts.windows(2).any(|w| w[0] >= w[1]) {
            return Err(perr("points not strictly increasing".into()));
        }
        let block = Block::from_sorted(pts);
        if let Some(prev) = blocks.last() {
            if *prev == block {
                return Err(perr("duplicate block".into()));
            }
            if *prev > block {
                return Err(perr("blocks not in lexicographic order".into()));
            }
        }
        blocks.push(block);
    }
    if blocks.len() as u64 != b {
        return Err(Error::Parse {
            line: blocks.len() + 2,
            msg: format!("header declares b = {b} but file has {} blocks", blocks.len()),
        });
    }
    Design::new(v, k, t, lambda, blocks)
}

pub fn design_from_str(s: &str) -> Result<Design> {
    read_design(s.as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn blk(p: &[u32]) -> Block {
        Block::new(p.to_vec()).unwrap()
    }

    /// Straightforward coverage count over every t-subset.
    fn brute_force_valid(d: &Design) -> bool {
        LexSubsets::new(d.v(), d.t() as usize).all(|s| {
            let n = d.blocks().iter().filter(|b| s.iter().all(|&x| b.contains(x))).count();
            n == d.lambda() as usize
        })
    }

    fn ag32() -> Design {
        // planes of AG(3,2): 4-subsets of F_2^3 with zero XOR-sum
        let blocks = LexSubsets::new(8, 4)
            .filter(|s| s.iter().fold(0, |a, &x| a ^ x) == 0)
            .map(Block::from_sorted)
            .collect();
        Design::sqs(8, blocks).unwrap()
    }

    #[test]
    fn trivial_sqs() {
        let d = Design::sqs(4, vec![blk(&[0, 1, 2, 3])]).unwrap();
        let r = verify(&d);
        assert!(r.is_valid);
        assert_eq!(r.b, 1);
        assert_eq!(design_to_string(&d), "DESIGN v=4 k=4 t=3 lambda=1 b=1\n0 1 2 3\n");
    }

    #[test]
    fn affine_sqs8_and_a_damaged_copy() {
        let d = ag32();
        assert_eq!(d.b(), 14);
        let r = verify(&d);
        assert!(r.is_valid && brute_force_valid(&d));
        assert!(r.replication.iter().all(|&x| x == 7));

        let mut blocks = d.blocks().to_vec();
        blocks.pop();
        let damaged = Design::sqs(8, blocks).unwrap();
        let r = verify(&damaged);
        assert!(!r.is_valid);
        assert_eq!(r.violation_count, 4);
        assert!(r.violations.iter().all(|(_, c)| *c == 0));
        assert!(!brute_force_valid(&damaged));
    }

    #[test]
    fn over_coverage_is_reported() {
        let d = Design::sqs(5, vec![blk(&[0, 1, 2, 3]), blk(&[0, 1, 2, 4])]).unwrap();
        let r = verify(&d);
        assert!(!r.is_valid);
        assert!(r.violations.contains(&(vec![0, 1, 2], 2)));
    }

    #[test]
    fn structural_errors() {
        assert!(Block::new(vec![1, 1, 2, 3]).is_err());
        assert!(Design::sqs(4, vec![blk(&[0, 1, 2, 4])]).is_err());
        assert!(Design::sqs(5, vec![blk(&[0, 1, 2])]).is_err());
        assert!(Design::sqs(5, vec![blk(&[0, 1, 2, 3]), blk(&[0, 1, 2, 3])]).is_err());
    }

    #[test]
    fn derived_of_affine_sqs() {
        let d = ag32();
        for x in 0..8 {
            let dx = derived(&d, x).unwrap();
            assert_eq!((dx.v(), dx.k(), dx.t(), dx.lambda()), (7, 3, 2, 1));
            assert_eq!(dx.b(), 7);
            assert!(verify(&dx).is_valid);
        }
        assert!(derived(&d, 8).is_err());
    }

    #[test]
    fn admissibility_and_counts() {
        assert!(hanani_admissible(10));
        assert!(!hanani_admissible(13));
        assert!(!hanani_admissible(12));
        assert!(!hanani_admissible(2));
        assert!(hanani_admissible(4));
        assert_eq!(sqs_block_count(10).value, 30);
        assert_eq!(sqs_block_count(8).value, 14);
        assert_eq!(sqs_block_count(82).value, 22140);
        assert!(!sqs_block_count(13).integral);
    }

    #[test]
    fn file_parsing_errors() {
        let bad_order = "DESIGN v=5 k=4 t=3 lambda=1 b=2\n0 1 2 4\n0 1 2 3\n";
        assert!(matches!(design_from_str(bad_order), Err(Error::Parse { line: 3, .. })));
        let dup = "DESIGN v=5 k=4 t=3 lambda=1 b=2\n0 1 2 3\n0 1 2 3\n";
        assert!(matches!(design_from_str(dup), Err(Error::Parse { line: 3, .. })));
        let range = "DESIGN v=4 k=4 t=3 lambda=1 b=1\n0 1 2 4\n";
        assert!(matches!(design_from_str(range), Err(Error::Parse { line: 2, .. })));
        let header = "DESIGN v=4 k=4 t=3 b=1\n0 1 2 3\n";
        assert!(matches!(design_from_str(header), Err(Error::Parse { line: 1, .. })));
        let unsorted = "DESIGN v=4 k=4 t=3 lambda=1 b=1\n0 2 1 3\n";
        assert!(matches!(design_from_str(unsorted), Err(Error::Parse { line: 2, .. })));
        let trailing = "DESIGN v=4 k=4 t=3 lambda=1 b=1\n0 1 2 3 \n";
        assert!(design_from_str(trailing).is_err());
        let count = "DESIGN v=4 k=4 t=3 lambda=1 b=2\n0 1 2 3\n";
        assert!(design_from_str(count).is_err());
    }

    #[test]
    fn file_round_trip() {
        let d = ag32();
        let s = design_to_string(&d);
        let back = design_from_str(&s).unwrap();
        assert_eq!(back, d);
        assert_eq!(design_to_string(&back), s);
    }
}
