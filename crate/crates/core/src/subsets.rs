//! k-subsets of `[0, v)`: binomials, colex ranking and lexicographic iteration.

/// `C(n, k)`, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Colex ranking of sorted k-subsets of `[0, v)`.
#[derive(Clone, Debug)]
pub struct Ranker {
    k: usize,
    // table[i][x] = C(x, i + 1)
    table: Vec<Vec<u64>>,
}

impl Ranker {
    pub fn new(v: u32, k: usize) -> Self {
        let table = (0..k)
            .map(|i| (0..=v as u64).map(|x| binomial(x, i as u64 + 1)).collect())
            .collect();
        Ranker { k, table }
    }

    /// Rank of a strictly increasing subset.
    #[inline]
    pub fn rank(&self, sorted: &[u32]) -> u64 {
        debug_assert_eq!(sorted.len(), self.k);
        sorted.iter().enumerate().map(|(i, &x)| self.table[i][x as usize]).sum()
    }
}

/// Iterates over the k-subsets of `[0, v)` in lexicographic order.
pub struct LexSubsets {
    v: u32,
    current: Vec<u32>,
    done: bool,
}

impl LexSubsets {
    pub fn new(v: u32, k: usize) -> Self {
        LexSubsets { v, current: (0..k as u32).collect(), done: k as u32 > v }
    }
}

impl Iterator for LexSubsets {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let k = self.current.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.current[i] < self.v - (k - i) as u32 {
                self.current[i] += 1;
                for j in i + 1..k {
                    self.current[j] = self.current[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// All `t`-subsets of a sorted slice, in lexicographic order.
pub fn sub_subsets(block: &[u32], t: usize) -> impl Iterator<Item = Vec<u32>> + '_ {
    LexSubsets::new(block.len() as u32, t).map(move |idx| idx.iter().map(|&i| block[i as usize]).collect())
}
