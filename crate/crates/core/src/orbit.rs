//! Orbits of blocks and of all k-subsets, block stabilizers via Schreier
//! generators, and the flag-transitivity test built on them.

use std::collections::{BTreeSet, VecDeque};

use rustc_hash::{FxHashMap, FxHashSet};

use crate::design::{Block, Design};
use crate::error::{Error, Result};
use crate::group::{GroupElement, ProjectiveGroup};
use crate::subsets::{binomial, LexSubsets, Ranker};

/// An orbit of blocks with a transversal.
///
/// `blocks` is sorted; `transversal[i]` maps the base block onto
/// `blocks[i]`. Each transversal element is the first one found in
/// breadth-first order (generator index breaks ties within a level).
#[derive(Clone, Debug)]
pub struct BlockOrbit {
    base: Block,
    blocks: Vec<Block>,
    transversal: Vec<GroupElement>,
    position: FxHashMap<Block, usize>,
}

impl BlockOrbit {
    pub fn base(&self) -> &Block {
        &self.base
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn position(&self, block: &Block) -> Option<usize> {
        self.position.get(block).copied()
    }

    pub fn transversal(&self) -> &[GroupElement] {
        &self.transversal
    }

    /// An element mapping the base onto `block`, if `block` is in the orbit.
    pub fn representative(&self, block: &Block) -> Option<&GroupElement> {
        self.position(block).map(|i| &self.transversal[i])
    }

    pub fn into_blocks(self) -> Vec<Block> {
        self.blocks
    }
}

impl ProjectiveGroup {
    /// Orbit of `base` under the generators, with transversal.
    pub fn orbit_of_block(&self, base: &Block) -> Result<BlockOrbit> {
        let degree = self.degree();
        if let Some(&x) = base.points().iter().find(|&&x| x >= degree) {
            return Err(Error::domain(format!("point {x} out of range for {degree} points")));
        }
        let cap = self.limits().max_orbit;
        let action = self.action();
        let perms = self.generator_permutations();
        let gens = self.generators();

        let mut found: Vec<(Block, GroupElement)> = vec![(base.clone(), action.identity())];
        let mut seen: FxHashMap<Block, usize> = FxHashMap::default();
        seen.insert(base.clone(), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (perm, g) in perms.iter().zip(gens) {
                let image = found[i].0.map(perm);
                if seen.contains_key(&image) {
                    continue;
                }
                if found.len() as u64 >= cap {
                    return Err(Error::Resource { what: "block orbit size", cap });
                }
                let t = action.compose(g, &found[i].1);
                seen.insert(image.clone(), found.len());
                queue.push_back(found.len());
                found.push((image, t));
            }
        }
        found.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let (blocks, transversal): (Vec<_>, Vec<_>) = found.into_iter().unzip();
        let position = blocks.iter().enumerate().map(|(i, b)| (b.clone(), i)).collect();
        Ok(BlockOrbit { base: base.clone(), blocks, transversal, position })
    }

    /// Whether every generator maps the block set onto itself.
    pub fn preserves(&self, blocks: &[Block]) -> bool {
        let set: FxHashSet<&Block> = blocks.iter().collect();
        self.generator_permutations()
            .iter()
            .all(|perm| blocks.iter().all(|b| set.contains(&b.map(perm))))
    }

    /// Setwise stabilizer of `base`, given the order of the whole group.
    ///
    /// Schreier generators `t(s·B)^-1 · s · t(B)` are added one at a time
    /// and the subgroup is re-closed until it reaches the order predicted by
    /// orbit-stabilizer. A mismatch after all Schreier generators are
    /// consumed is reported as an error, since it means `group_order` is not
    /// the order of the generated group.
    pub fn stabilizer(&self, base: &Block, group_order: u64) -> Result<Stabilizer> {
        let orbit = self.orbit_of_block(base)?;
        self.stabilizer_from_orbit(&orbit, group_order)
    }

    pub fn stabilizer_from_orbit(&self, orbit: &BlockOrbit, group_order: u64) -> Result<Stabilizer> {
        let len = orbit.len() as u64;
        if !group_order.is_multiple_of(len) {
            return Err(Error::domain(format!(
                "orbit length {len} does not divide the group order {group_order}"
            )));
        }
        let order = group_order / len;
        let cap = self.limits().max_stabilizer;
        if order > cap {
            return Err(Error::Resource { what: "stabilizer order", cap });
        }
        let action = self.action();
        let mut gens: Vec<GroupElement> = Vec::new();
        let mut elements = FxHashSet::default();
        elements.insert(action.identity());
        'outer: for (i, block) in orbit.blocks().iter().enumerate() {
            for (perm, s) in self.generator_permutations().iter().zip(self.generators()) {
                if elements.len() as u64 == order {
                    break 'outer;
                }
                let j = orbit.position(&block.map(perm)).expect("orbit is closed");
                let z = action.compose(
                    &action.inverse(&orbit.transversal()[j]),
                    &action.compose(s, &orbit.transversal()[i]),
                );
                if elements.contains(&z) {
                    continue;
                }
                gens.push(z);
                elements = crate::group::closure(action, &gens, cap, "stabilizer closure")?;
            }
        }
        if elements.len() as u64 != order {
            return Err(Error::domain(format!(
                "stabilizer has {} elements but orbit-stabilizer predicts {order}",
                elements.len()
            )));
        }
        let mut elements: Vec<GroupElement> = elements.into_iter().collect();
        elements.sort_unstable();
        Ok(Stabilizer { base: orbit.base().clone(), order, generators: gens, elements })
    }

    /// Partition of all k-subsets of the points into orbits.
    pub fn orbits_on_k_subsets(&self, k: usize) -> Result<SubsetOrbits> {
        SubsetOrbits::compute(self, k)
    }
}

/// A block stabilizer with its elements listed in sorted order.
#[derive(Clone, Debug)]
pub struct Stabilizer {
    pub base: Block,
    pub order: u64,
    /// Schreier generators actually used.
    pub generators: Vec<GroupElement>,
    pub elements: Vec<GroupElement>,
}

/// Permutations induced on the points of a block, as position maps:
/// `perm[i] = j` when point `i` of the block goes to point `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockAction {
    pub k: usize,
    pub perms: BTreeSet<Vec<u8>>,
}

impl BlockAction {
    pub fn size(&self) -> usize {
        self.perms.len()
    }

    pub fn is_full_symmetric(&self) -> bool {
        self.perms.len() as u64 == (1..=self.k as u64).product::<u64>()
    }

    pub fn is_transitive(&self) -> bool {
        let reached: BTreeSet<u8> = self.perms.iter().map(|p| p[0]).collect();
        reached.len() == self.k
    }
}

/// The image of stabilizer elements in the symmetric group on `base`.
pub fn stabilizer_action_on_block(
    group: &ProjectiveGroup,
    elements: &[GroupElement],
    base: &Block,
) -> Result<BlockAction> {
    let action = group.action();
    let pts = base.points();
    let mut perms = BTreeSet::new();
    for g in elements {
        let mut p = Vec::with_capacity(pts.len());
        for &x in pts {
            let y = action.apply(g, x);
            let j = pts
                .binary_search(&y)
                .map_err(|_| Error::domain(format!("element does not stabilize block {base:?}")))?;
            p.push(j as u8);
        }
        perms.insert(p);
    }
    Ok(BlockAction { k: pts.len(), perms })
}

/// Orbit partition of all k-subsets of `[0, v)`.
///
/// Orbits are numbered by their lexicographically least member, and each
/// orbit's members are listed in lexicographic order.
#[derive(Clone, Debug)]
pub struct SubsetOrbits {
    v: u32,
    k: usize,
    ranker: Ranker,
    // orbit id per colex rank
    orbit_of: Vec<u32>,
    sizes: Vec<u64>,
    representatives: Vec<Block>,
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let p = parent[x as usize];
        parent[x as usize] = parent[p as usize];
        x = p;
    }
    x
}

impl SubsetOrbits {
    fn compute(group: &ProjectiveGroup, k: usize) -> Result<Self> {
        let v = group.degree();
        let total = binomial(v as u64, k as u64);
        let cap = group.limits().max_subsets;
        if total > cap || total > u32::MAX as u64 {
            return Err(Error::Resource { what: "number of k-subsets", cap });
        }
        let ranker = Ranker::new(v, k);
        let mut parent: Vec<u32> = (0..total as u32).collect();
        let mut image = vec![0u32; k];
        for s in LexSubsets::new(v, k) {
            let r = ranker.rank(&s) as u32;
            for perm in group.generator_permutations() {
                for (dst, &x) in image.iter_mut().zip(&s) {
                    *dst = perm[x as usize];
                }
                image.sort_unstable();
                let a = find(&mut parent, r);
                let b = find(&mut parent, ranker.rank(&image) as u32);
                if a != b {
                    parent[a.max(b) as usize] = a.min(b);
                }
            }
        }
        let mut root_id: FxHashMap<u32, u32> = FxHashMap::default();
        let mut orbit_of = vec![0u32; total as usize];
        let mut sizes = Vec::new();
        let mut representatives = Vec::new();
        for s in LexSubsets::new(v, k) {
            let r = ranker.rank(&s) as u32;
            let root = find(&mut parent, r);
            let id = *root_id.entry(root).or_insert_with(|| {
                sizes.push(0);
                representatives.push(Block::from_sorted(s.clone()));
                (sizes.len() - 1) as u32
            });
            sizes[id as usize] += 1;
            orbit_of[r as usize] = id;
        }
        Ok(SubsetOrbits { v, k, ranker, orbit_of, sizes, representatives })
    }

    pub fn v(&self) -> u32 {
        self.v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    /// Least member of each orbit.
    pub fn representatives(&self) -> &[Block] {
        &self.representatives
    }

    pub fn orbit_id(&self, subset: &Block) -> usize {
        self.orbit_of[self.ranker.rank(subset.points()) as usize] as usize
    }

    /// Members of one orbit in lexicographic order.
    pub fn members(&self, id: usize) -> Vec<Block> {
        LexSubsets::new(self.v, self.k)
            .filter(|s| self.orbit_of[self.ranker.rank(s) as usize] as usize == id)
            .map(Block::from_sorted)
            .collect()
    }

    /// All orbits with their members.
    pub fn orbits(&self) -> Vec<Vec<Block>> {
        let mut out: Vec<Vec<Block>> = self.sizes.iter().map(|&s| Vec::with_capacity(s as usize)).collect();
        for s in LexSubsets::new(self.v, self.k) {
            let id = self.orbit_of[self.ranker.rank(&s) as usize] as usize;
            out[id].push(Block::from_sorted(s));
        }
        out
    }
}

/// Whether `group` (of order `group_order`) acts transitively on the flags
/// of `design`: one block orbit covering every block, and a block stabilizer
/// transitive on the block's points.
///
/// Fails with a domain error when the block set is not invariant.
pub fn is_flag_transitive(group: &ProjectiveGroup, group_order: u64, design: &Design) -> Result<bool> {
    if design.v() != group.degree() {
        return Err(Error::domain("design and group act on different point counts"));
    }
    if !group.preserves(design.blocks()) {
        return Err(Error::domain("block set is not invariant under the group"));
    }
    let Some(first) = design.blocks().first() else {
        return Ok(false);
    };
    let orbit = group.orbit_of_block(first)?;
    if orbit.len() != design.b() {
        return Ok(false);
    }
    let stab = group.stabilizer_from_orbit(&orbit, group_order)?;
    Ok(stabilizer_action_on_block(group, &stab.elements, first)?.is_transitive())
}
