//! The three PSL_2(q)-invariant families of Steiner quadruple systems on the
//! projective line, the classification verdict for `(n, q)`, and the
//! invariant-design search over orbit incidence matrices.
//!
//! Families (points are `F_q ∪ {∞}`, `∞` has index `q`):
//!
//! - [`SqsFamily::Subline`], `q = 3^d`: orbit of the subline
//!   `F_3 ∪ {∞} = {0, 1, 2, ∞}` under PGL_2(q) (`d >= 2`), equivalently
//!   under PSL_2(q) when `d > 1` is odd. Any group between PSL_2(q) and
//!   PΓL_2(q) acts.
//! - [`SqsFamily::SixthRoot`], `q ≡ 7 (mod 12)`: orbit of `{0, 1, ε, ∞}`
//!   under PSL_2(q), `ε` a primitive sixth root of unity.
//! - [`SqsFamily::SplitSubline`], `q = 3^(2d)`: the union of the two
//!   PSL_2(q)-orbits of `{0, 1, -1, ∞}` and `{0, a, -a, ∞}` for a non-square
//!   `a`. PSL_2(q) has two orbits on 3-subsets here, and hence two block
//!   orbits.

use std::fmt;
use std::sync::Arc;

use crate::design::{hanani_admissible, verify, Block, Design};
use crate::error::{Error, Result};
use crate::field::{prime_power, Field, FieldElement};
use crate::group::{Family, GroupSpec, Limits, ProjectiveGroup};
use crate::orbit::{is_flag_transitive, SubsetOrbits};
use crate::subsets::binomial;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum SqsFamily {
    Subline,
    SixthRoot,
    SplitSubline,
}

impl SqsFamily {
    /// Short identifier used on the command line.
    pub fn id(self) -> &'static str {
        match self {
            SqsFamily::Subline => "ex1",
            SqsFamily::SixthRoot => "ex2",
            SqsFamily::SplitSubline => "ex3",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            SqsFamily::Subline => "images of the subline F_3 ∪ {∞}",
            SqsFamily::SixthRoot => "images of {0, 1, ε, ∞}, ε a primitive sixth root of unity",
            SqsFamily::SplitSubline => "two PSL-orbits of harmonic quadruples {0, 1, -1, ∞} and {0, a, -a, ∞}",
        }
    }

    /// Largest group in the PSL ≤ G ≤ PΓL lattice for which the family is
    /// stated to be invariant.
    pub fn stated_overgroup(self) -> Family {
        match self {
            SqsFamily::Subline => Family::PGammaL,
            SqsFamily::SixthRoot | SqsFamily::SplitSubline => Family::PSigmaL,
        }
    }
}

impl fmt::Display for SqsFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl std::str::FromStr for SqsFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ex1" => Ok(SqsFamily::Subline),
            "ex2" => Ok(SqsFamily::SixthRoot),
            "ex3" => Ok(SqsFamily::SplitSubline),
            other => Err(Error::domain(format!("unknown family `{other}` (expected ex1, ex2 or ex3)"))),
        }
    }
}

/// A constructed design with the data that produced it.
#[derive(Clone, Debug)]
pub struct Construction {
    pub family: SqsFamily,
    pub q: u32,
    /// The group whose orbits make up the design.
    pub acting: Family,
    pub base_blocks: Vec<Block>,
    /// Orbit length of each base block, in the order of `base_blocks`.
    pub orbit_sizes: Vec<usize>,
    pub design: Design,
}

impl Construction {
    pub fn group(&self) -> Result<ProjectiveGroup> {
        ProjectiveGroup::standard(self.acting, 2, self.q as u64)
    }
}

fn power_of_three(d: u32) -> Result<u64> {
    3u64.checked_pow(d)
        .filter(|&q| q <= crate::field::MAX_FIELD_ORDER)
        .ok_or_else(|| Error::domain(format!("3^{d} exceeds the supported field size")))
}

fn union_of_orbits(
    family: SqsFamily,
    group: &ProjectiveGroup,
    acting: Family,
    bases: Vec<Block>,
) -> Result<Construction> {
    let q = group.field().q();
    let mut blocks = Vec::new();
    let mut sizes = Vec::new();
    for base in &bases {
        let orbit = group.orbit_of_block(base)?;
        sizes.push(orbit.len());
        blocks.extend(orbit.into_blocks());
    }
    let design = Design::sqs(q + 1, blocks)
        .map_err(|e| Error::domain(format!("base-block orbits overlap: {e}")))?;
    Ok(Construction { family, q, acting, base_blocks: bases, orbit_sizes: sizes, design })
}

/// Subline family over GF(3^d). PGL requires `d >= 2`; PSL requires odd
/// `d > 1`.
pub fn build_subline(d: u32, acting: Family) -> Result<Construction> {
    build_subline_with_limits(d, acting, Limits::default())
}

pub fn build_subline_with_limits(d: u32, acting: Family, limits: Limits) -> Result<Construction> {
    match acting {
        Family::PGL if d < 2 => {
            return Err(Error::domain(format!("the PGL_2(3^d) construction requires d >= 2 (got d = {d})")))
        }
        Family::PSL if d <= 1 || d.is_multiple_of(2) => {
            return Err(Error::domain(format!(
                "the PSL_2(3^d) construction requires d > 1 odd (got d = {d})"
            )))
        }
        Family::PGL | Family::PSL => {}
        other => return Err(Error::domain(format!("the subline family is built from PSL or PGL, not {other}"))),
    }
    let q = power_of_three(d)?;
    let group = ProjectiveGroup::standard(acting, 2, q)?.with_limits(limits);
    let base = Block::new(vec![0, 1, 2, q as u32])?;
    union_of_orbits(SqsFamily::Subline, &group, acting, vec![base])
}

/// The PSL_2(3^d)-orbit of the subline for parameters outside the
/// sanctioned range (even `d`), compared with the PGL_2(3^d)-orbit. The
/// result is deliberately not a [`Construction`].
#[derive(Clone, Debug)]
pub struct UnsanctionedOrbit {
    pub q: u32,
    pub blocks: Vec<Block>,
    pub pgl_orbit_size: usize,
    pub coincides_with_pgl_orbit: bool,
}

pub fn subline_psl_orbit_unsanctioned(d: u32) -> Result<UnsanctionedOrbit> {
    if d < 2 {
        return Err(Error::domain("need d >= 2"));
    }
    let q = power_of_three(d)?;
    let base = Block::new(vec![0, 1, 2, q as u32])?;
    let psl = ProjectiveGroup::standard(Family::PSL, 2, q)?.orbit_of_block(&base)?.into_blocks();
    let pgl = ProjectiveGroup::standard(Family::PGL, 2, q)?.orbit_of_block(&base)?.into_blocks();
    Ok(UnsanctionedOrbit { q: q as u32, coincides_with_pgl_orbit: psl == pgl, pgl_orbit_size: pgl.len(), blocks: psl })
}

/// Sixth-root family for a prime power `q ≡ 7 (mod 12)`.
pub fn build_sixth_root(q: u64) -> Result<Construction> {
    build_sixth_root_with_limits(q, Limits::default())
}

pub fn build_sixth_root_with_limits(q: u64, limits: Limits) -> Result<Construction> {
    if q % 12 != 7 {
        return Err(Error::domain(format!("q ≡ 7 (mod 12) required (got q = {q})")));
    }
    let group = ProjectiveGroup::standard(Family::PSL, 2, q)?.with_limits(limits);
    let eps = group.field().primitive_sixth_root()?;
    let base = Block::new(vec![0, 1, eps.code(), q as u32])?;
    union_of_orbits(SqsFamily::SixthRoot, &group, Family::PSL, vec![base])
}

/// Split family over GF(3^(2d)), `d >= 1`, using the smallest non-square.
pub fn build_split_subline(d: u32) -> Result<Construction> {
    build_split_subline_with_limits(d, Limits::default())
}

pub fn build_split_subline_with_limits(d: u32, limits: Limits) -> Result<Construction> {
    if d == 0 {
        return Err(Error::domain("the split family requires d >= 1"));
    }
    let q = power_of_three(2 * d)?;
    let group = ProjectiveGroup::standard(Family::PSL, 2, q)?.with_limits(limits);
    let a = group.field().smallest_nonsquare()?;
    build_split_subline_in(&group, a)
}

/// Split family for an explicit non-square `a`.
pub fn build_split_subline_in(group: &ProjectiveGroup, a: FieldElement) -> Result<Construction> {
    let f = group.field();
    if f.p() != 3 || !f.d().is_multiple_of(2) {
        return Err(Error::domain("the split family lives over GF(3^(2d))"));
    }
    if f.is_square(a)? {
        return Err(Error::domain(format!("{a} is a square")));
    }
    let q = f.q();
    let minus = |x: FieldElement| f.neg(x).code();
    let first = Block::new(vec![0, 1, minus(FieldElement::ONE), q])?;
    let second = Block::new(vec![0, a.code(), minus(a), q])?;
    union_of_orbits(SqsFamily::SplitSubline, group, Family::PSL, vec![first, second])
}

/// Why no SQS admits the group.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NonExistenceReason {
    /// `v ≢ 2, 4 (mod 6)`.
    HananiInadmissible,
    /// `n = 2`, `q ≡ 1 (mod 12)`: a block with an S_4 stabilizer would need
    /// a point stabilizer S_3 fixing two points, but two-point stabilizers
    /// in PSL_2(q) are cyclic.
    CongruenceOneMod12,
    /// `n = 3`: `v = q^2 + q + 1` is odd.
    OddPointCount,
    /// `n > 3`: blocks through three points of a hyperplane stay in it,
    /// reducing to `n - 1` and eventually to the odd case.
    HigherDimension,
    /// `(n, q) ∈ {(2, 2), (2, 3)}`.
    SocleNotSimple,
}

impl NonExistenceReason {
    pub fn describe(self, n: u32, q: u64) -> String {
        let v = crate::geometry::point_count(n, q);
        match self {
            NonExistenceReason::HananiInadmissible => format!("v = {v} is not 2 or 4 mod 6"),
            NonExistenceReason::CongruenceOneMod12 => {
                format!("q = {q} ≡ 1 (mod 12), no block can have stabilizer S4")
            }
            NonExistenceReason::OddPointCount => format!("v = {v} odd"),
            NonExistenceReason::HigherDimension => {
                format!("n = {n} > 3 reduces to a hyperplane and finally to n = 3")
            }
            NonExistenceReason::SocleNotSimple => format!("PSL_{n}({q}) is not simple"),
        }
    }
}

/// One applicable family in a positive verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyCase {
    pub family: SqsFamily,
    pub q: u64,
    /// Exponent of 3 in `q` for the subline families.
    pub d: Option<u32>,
    pub base_blocks: Vec<Vec<u32>>,
    /// Groups that generate the block set as an orbit union.
    pub acting: Vec<Family>,
    /// Upper end of the stated overgroup range.
    pub overgroup: Family,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Families(Vec<FamilyCase>),
    None(NonExistenceReason),
}

impl Verdict {
    pub fn families(&self) -> &[FamilyCase] {
        match self {
            Verdict::Families(f) => f,
            Verdict::None(_) => &[],
        }
    }
}

/// Which SQS(v) on PG(n-1, q) admit an almost simple group with socle
/// PSL_n(q), by the closed-form case analysis.
pub fn classify(n: u32, q: u64) -> Result<Verdict> {
    if n < 2 {
        return Err(Error::domain("n must be at least 2"));
    }
    let (p, d) = prime_power(q).ok_or_else(|| Error::domain(format!("{q} is not a prime power")))?;
    if n == 2 && q <= 3 {
        return Ok(Verdict::None(NonExistenceReason::SocleNotSimple));
    }
    match n {
        3 => return Ok(Verdict::None(NonExistenceReason::OddPointCount)),
        n if n > 3 => return Ok(Verdict::None(NonExistenceReason::HigherDimension)),
        _ => {}
    }
    if !hanani_admissible(q + 1) {
        return Ok(Verdict::None(NonExistenceReason::HananiInadmissible));
    }
    if q % 12 == 1 {
        return Ok(Verdict::None(NonExistenceReason::CongruenceOneMod12));
    }
    let qi = q as u32;
    let mut cases = Vec::new();
    if p == 3 {
        let mut acting = vec![Family::PGL];
        if d % 2 == 1 {
            acting.push(Family::PSL);
        }
        cases.push(FamilyCase {
            family: SqsFamily::Subline,
            q,
            d: Some(d),
            base_blocks: vec![vec![0, 1, 2, qi]],
            acting,
            overgroup: SqsFamily::Subline.stated_overgroup(),
        });
    }
    if q % 12 == 7 {
        let eps = Field::new(p, d)?.primitive_sixth_root()?;
        let mut base = vec![0, 1, eps.code(), qi];
        base.sort_unstable();
        cases.push(FamilyCase {
            family: SqsFamily::SixthRoot,
            q,
            d: None,
            base_blocks: vec![base],
            acting: vec![Family::PSL],
            overgroup: SqsFamily::SixthRoot.stated_overgroup(),
        });
    }
    if p == 3 && d % 2 == 0 {
        let f = Field::new(p, d)?;
        let a = f.smallest_nonsquare()?;
        let mut second = vec![0, a.code(), f.neg(a).code(), qi];
        second.sort_unstable();
        cases.push(FamilyCase {
            family: SqsFamily::SplitSubline,
            q,
            d: Some(d / 2),
            base_blocks: vec![vec![0, 1, 2, qi], second],
            acting: vec![Family::PSL],
            overgroup: SqsFamily::SplitSubline.stated_overgroup(),
        });
    }
    Ok(Verdict::Families(cases))
}

/// Incidence between 3-subset orbits (rows) and 4-subset orbits (columns):
/// `matrix[i][j]` counts the 4-subsets of orbit `j` containing the
/// representative of 3-orbit `i`.
#[derive(Clone, Debug)]
pub struct OrbitIncidence {
    pub triples: SubsetOrbits,
    pub quadruples: SubsetOrbits,
    pub matrix: Vec<Vec<u32>>,
}

impl OrbitIncidence {
    pub fn build(group: &ProjectiveGroup) -> Result<Self> {
        let triples = group.orbits_on_k_subsets(3)?;
        let quadruples = group.orbits_on_k_subsets(4)?;
        let matrix = triples
            .representatives()
            .iter()
            .map(|r| Self::row_for(&quadruples, r))
            .collect();
        Ok(OrbitIncidence { triples, quadruples, matrix })
    }

    fn row_for(quadruples: &SubsetOrbits, triple: &Block) -> Vec<u32> {
        let mut row = vec![0u32; quadruples.count()];
        for x in (0..quadruples.v()).filter(|&x| !triple.contains(x)) {
            let mut pts = triple.points().to_vec();
            pts.push(x);
            pts.sort_unstable();
            row[quadruples.orbit_id(&Block::from_sorted(pts))] += 1;
        }
        row
    }

    /// Recomputes each row from up to three members of its orbit and checks
    /// the column identity `Σ_i M[i][j]·|T_i| = 4·|Q_j|`.
    pub fn validate(&self) -> Result<()> {
        for (i, expected) in self.matrix.iter().enumerate() {
            let members = self.triples.members(i);
            let picks = [0, members.len() / 2, members.len() - 1];
            for &m in &picks {
                if Self::row_for(&self.quadruples, &members[m]) != *expected {
                    return Err(Error::domain(format!(
                        "incidence row {i} depends on the orbit representative"
                    )));
                }
            }
        }
        for j in 0..self.quadruples.count() {
            let lhs: u64 =
                (0..self.triples.count()).map(|i| self.matrix[i][j] as u64 * self.triples.sizes()[i]).sum();
            if lhs != 4 * self.quadruples.sizes()[j] {
                return Err(Error::domain(format!("incidence column {j} fails the counting identity")));
            }
        }
        Ok(())
    }

    /// Every set of columns whose incidence sums to the all-ones vector,
    /// found by backtracking over columns in index order.
    pub fn exact_covers(&self) -> Vec<Vec<usize>> {
        let rows = self.matrix.len();
        let cols = self.quadruples.count();
        let column: Vec<Vec<u32>> = (0..cols).map(|j| (0..rows).map(|i| self.matrix[i][j]).collect()).collect();
        // a column with an entry above 1 over-covers its row on its own
        let usable: Vec<usize> = (0..cols).filter(|&j| column[j].iter().all(|&c| c <= 1)).collect();
        // can_cover[pos][i]: some usable column at or after pos touches row i
        let mut can_cover = vec![vec![false; rows]; usable.len() + 1];
        for pos in (0..usable.len()).rev() {
            for i in 0..rows {
                can_cover[pos][i] = can_cover[pos + 1][i] || column[usable[pos]][i] > 0;
            }
        }
        let mut solutions = Vec::new();
        let mut cover = vec![0u32; rows];
        let mut chosen = Vec::new();
        Self::search(&column, &usable, &can_cover, 0, &mut cover, &mut chosen, &mut solutions);
        solutions
    }

    fn search(
        column: &[Vec<u32>],
        usable: &[usize],
        can_cover: &[Vec<bool>],
        pos: usize,
        cover: &mut [u32],
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cover.iter().enumerate().any(|(i, &c)| c == 0 && !can_cover[pos][i]) {
            return;
        }
        if pos == usable.len() {
            if cover.iter().all(|&c| c == 1) {
                out.push(chosen.clone());
            }
            return;
        }
        let j = usable[pos];
        if column[j].iter().zip(cover.iter()).all(|(&a, &c)| a + c <= 1) {
            for (c, &a) in cover.iter_mut().zip(&column[j]) {
                *c += a;
            }
            chosen.push(j);
            Self::search(column, usable, can_cover, pos + 1, cover, chosen, out);
            chosen.pop();
            for (c, &a) in cover.iter_mut().zip(&column[j]) {
                *c -= a;
            }
        }
        Self::search(column, usable, can_cover, pos + 1, cover, chosen, out);
    }
}

/// Result of [`invariant_sqs_search`].
#[derive(Clone, Debug)]
pub struct SearchReport {
    pub n: u32,
    pub q: u64,
    pub incidence: OrbitIncidence,
    /// Column (4-orbit) index sets of each solution.
    pub solutions: Vec<Vec<usize>>,
    /// Each solution as a verified design.
    pub designs: Vec<Design>,
}

impl SearchReport {
    /// Plain-text report: orbits, incidence rows, solutions.
    pub fn render(&self) -> String {
        let mut s = String::new();
        let inc = &self.incidence;
        s.push_str(&format!("search: PSL_{}({}) on {} points\n", self.n, self.q, inc.triples.v()));
        s.push_str(&format!("3-subset orbits: {}\n", inc.triples.count()));
        for (i, (rep, size)) in inc.triples.representatives().iter().zip(inc.triples.sizes()).enumerate() {
            s.push_str(&format!("  T{i} rep {{{}}} size {size}\n", rep.points().iter().map(u32::to_string).collect::<Vec<_>>().join(",")));
        }
        s.push_str(&format!("4-subset orbits: {}\n", inc.quadruples.count()));
        for (j, (rep, size)) in inc.quadruples.representatives().iter().zip(inc.quadruples.sizes()).enumerate() {
            s.push_str(&format!("  Q{j} rep {{{}}} size {size}\n", rep.points().iter().map(u32::to_string).collect::<Vec<_>>().join(",")));
        }
        s.push_str("incidence:\n");
        for (i, row) in inc.matrix.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            s.push_str(&format!("  T{i}: {}\n", cells.join(" ")));
        }
        s.push_str(&format!("solutions: {}\n", self.solutions.len()));
        for sol in &self.solutions {
            let ids: Vec<String> = sol.iter().map(|j| format!("Q{j}")).collect();
            s.push_str(&format!("  {{{}}}\n", ids.join(", ")));
        }
        s
    }
}

/// Finds every PSL_n(q)-invariant SQS on PG(n-1, q) as an exact cover of
/// 3-subset orbits by 4-subset orbits. Invariance under any overgroup
/// implies invariance under the socle, so an empty result rules out every
/// group between PSL_n(q) and its automorphism group.
pub fn invariant_sqs_search(n: u32, q: u64) -> Result<SearchReport> {
    invariant_sqs_search_with_limits(n, q, Limits::default())
}

pub fn invariant_sqs_search_with_limits(n: u32, q: u64, limits: Limits) -> Result<SearchReport> {
    let field = Arc::new(Field::with_order(q)?);
    let v = crate::geometry::point_count(n, q);
    if binomial(v, 4) > limits.max_subsets {
        return Err(Error::Resource { what: "number of 4-subsets", cap: limits.max_subsets });
    }
    let group = ProjectiveGroup::new(GroupSpec::new(Family::PSL, n, field)?)?.with_limits(limits);
    let incidence = OrbitIncidence::build(&group)?;
    incidence.validate()?;
    let solutions = incidence.exact_covers();
    let mut designs = Vec::with_capacity(solutions.len());
    for sol in &solutions {
        let blocks = sol.iter().flat_map(|&j| incidence.quadruples.members(j)).collect();
        let design = Design::sqs(v as u32, blocks)?;
        if !verify(&design).is_valid {
            return Err(Error::domain("exact cover did not yield a Steiner quadruple system"));
        }
        designs.push(design);
    }
    Ok(SearchReport { n, q, incidence, solutions, designs })
}

/// Which extensions of PSL_2(q) preserve a PSL_2(q)-invariant design.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OvergroupReport {
    pub q: u32,
    pub diagonal_preserves: bool,
    /// `None` over a prime field, where the Frobenius map is trivial.
    pub frobenius_preserves: Option<bool>,
    pub maximal: Family,
}

pub fn preserving_overgroups(design: &Design, q: u64) -> Result<OvergroupReport> {
    let psl = ProjectiveGroup::standard(Family::PSL, 2, q)?;
    if design.v() != psl.degree() {
        return Err(Error::domain(format!("design has v = {} but PG(1,{q}) has {} points", design.v(), q + 1)));
    }
    if !psl.preserves(design.blocks()) {
        return Err(Error::domain("design is not invariant under PSL_2(q)"));
    }
    let action = psl.action().clone();
    let check = |g| ProjectiveGroup::from_generators(action.clone(), vec![g]).preserves(design.blocks());
    let diagonal_preserves = check(action.diagonal_extension());
    let frobenius_preserves = (psl.field().d() > 1).then(|| check(action.frobenius_element()));
    let maximal = match (diagonal_preserves, frobenius_preserves.unwrap_or(false)) {
        (true, true) => Family::PGammaL,
        (true, false) => Family::PGL,
        (false, true) => Family::PSigmaL,
        (false, false) => Family::PSL,
    };
    Ok(OvergroupReport { q: q as u32, diagonal_preserves, frobenius_preserves, maximal })
}

/// Whether `(3^(2d))^2 ≡ 1 (mod 16)`.
pub fn q_square_mod16_check(d: u32) -> bool {
    let mut r = 1u64;
    for _ in 0..4 * d {
        r = r * 3 % 16;
    }
    r == 1
}

/// Flag-transitivity of a construction under its constructing group.
pub fn construction_is_flag_transitive(c: &Construction) -> Result<bool> {
    let g = c.group()?;
    let order = g.order().expect("standard group");
    is_flag_transitive(&g, order, &c.design)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::derived;
    use crate::orbit::stabilizer_action_on_block;

    fn blk(p: &[u32]) -> Block {
        Block::new(p.to_vec()).unwrap()
    }

    #[test]
    fn small_constructions() {
        let c = build_subline(2, Family::PGL).unwrap();
        assert_eq!(c.design.b(), 30);
        assert!(verify(&c.design).is_valid);
        let c = build_sixth_root(7).unwrap();
        assert_eq!(c.design.b(), 14);
        assert_eq!(c.base_blocks, vec![blk(&[0, 1, 3, 7])]);
        assert!(verify(&c.design).is_valid);
        let c = build_split_subline(1).unwrap();
        assert_eq!(c.orbit_sizes, vec![15, 15]);
        assert!(verify(&c.design).is_valid);
    }

    #[test]
    fn precondition_errors() {
        assert!(build_subline(1, Family::PGL).is_err());
        assert!(build_subline(2, Family::PSL).is_err());
        assert!(build_subline(1, Family::PSL).is_err());
        assert!(build_subline(3, Family::PGammaL).is_err());
        let e = build_sixth_root(13).unwrap_err();
        assert!(e.to_string().contains("q ≡ 7 (mod 12) required"));
        assert!(build_sixth_root(19).is_ok());
        assert!(build_split_subline(0).is_err());
    }

    #[test]
    fn larger_sixth_root_systems() {
        for (q, b) in [(19u64, 285usize), (31, 1240)] {
            let c = build_sixth_root(q).unwrap();
            assert_eq!(c.design.b(), b);
            assert!(verify(&c.design).is_valid);
            for x in 0..=q as u32 {
                assert!(verify(&derived(&c.design, x).unwrap()).is_valid);
            }
        }
    }

    #[test]
    fn psl_and_pgl_sublines_coincide_for_odd_d() {
        let a = build_subline(3, Family::PSL).unwrap();
        let b = build_subline(3, Family::PGL).unwrap();
        assert_eq!(a.design.b(), 819);
        assert_eq!(a.design, b.design);
    }

    #[test]
    fn unsanctioned_even_d_orbit_is_half() {
        let u = subline_psl_orbit_unsanctioned(2).unwrap();
        assert_eq!(u.blocks.len(), 15);
        assert_eq!(u.pgl_orbit_size, 30);
        assert!(!u.coincides_with_pgl_orbit);
        assert!(subline_psl_orbit_unsanctioned(3).unwrap().coincides_with_pgl_orbit);
    }

    #[test]
    fn every_nonsquare_gives_the_same_second_orbit() {
        let g = ProjectiveGroup::standard(Family::PSL, 2, 9).unwrap();
        let f = g.field().clone();
        let reference = build_split_subline_in(&g, f.smallest_nonsquare().unwrap()).unwrap();
        for a in f.elements().skip(1).filter(|&a| !f.is_square(a).unwrap()) {
            assert_eq!(build_split_subline_in(&g, a).unwrap().design, reference.design);
        }
        assert!(build_split_subline_in(&g, FieldElement::ONE).is_err());
    }

    #[test]
    fn second_base_block_must_avoid_the_first_blocks_triples() {
        // {0,1,a,∞} shares {0,1,∞} with {0,1,-1,∞}; its orbit is not even S4-stabilized
        let g = ProjectiveGroup::standard(Family::PSL, 2, 9).unwrap();
        let a = g.field().smallest_nonsquare().unwrap().code();
        let orbit = g.orbit_of_block(&blk(&[0, 1, a, 9])).unwrap();
        assert_eq!(orbit.len(), 180);
    }

    #[test]
    fn split_stabilizers_are_symmetric_groups() {
        let c = build_split_subline(1).unwrap();
        let g = c.group().unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for b in c.design.blocks() {
            let s = g.stabilizer(b, 360).unwrap();
            assert_eq!(s.order, 24);
            assert!(stabilizer_action_on_block(&g, &s.elements, b).unwrap().is_full_symmetric());
            seen.insert(s.elements);
        }
        assert_eq!(seen.len(), 30);
    }

    #[test]
    fn classification_examples() {
        let v = classify(2, 9).unwrap();
        let fams: Vec<SqsFamily> = v.families().iter().map(|c| c.family).collect();
        assert_eq!(fams, vec![SqsFamily::Subline, SqsFamily::SplitSubline]);
        assert_eq!(v.families()[0].acting, vec![Family::PGL]);
        assert_eq!(classify(2, 13).unwrap(), Verdict::None(NonExistenceReason::CongruenceOneMod12));
        for q in [2u64, 3, 4, 5, 7, 9] {
            assert_eq!(classify(3, q).unwrap(), Verdict::None(NonExistenceReason::OddPointCount));
        }
        assert_eq!(classify(4, 3).unwrap(), Verdict::None(NonExistenceReason::HigherDimension));
        assert_eq!(classify(2, 2).unwrap(), Verdict::None(NonExistenceReason::SocleNotSimple));
        assert_eq!(classify(2, 3).unwrap(), Verdict::None(NonExistenceReason::SocleNotSimple));
        assert_eq!(classify(2, 5).unwrap(), Verdict::None(NonExistenceReason::HananiInadmissible));
        assert_eq!(classify(2, 8).unwrap(), Verdict::None(NonExistenceReason::HananiInadmissible));
        let v27 = classify(2, 27).unwrap();
        assert_eq!(v27.families().len(), 1);
        assert_eq!(v27.families()[0].acting, vec![Family::PGL, Family::PSL]);
        assert_eq!(classify(2, 7).unwrap().families()[0].family, SqsFamily::SixthRoot);
        assert!(classify(2, 12).is_err());
    }

    #[test]
    fn search_small_cases() {
        let r = invariant_sqs_search(2, 7).unwrap();
        assert_eq!(r.designs.len(), r.solutions.len());
        assert!(!r.solutions.is_empty());
        let ex2 = build_sixth_root(7).unwrap();
        assert!(r.designs.contains(&ex2.design));
        assert!(invariant_sqs_search(2, 13).unwrap().solutions.is_empty());
    }

    #[test]
    fn exact_cover_handles_degenerate_matrices() {
        let g = ProjectiveGroup::standard(Family::PSL, 2, 9).unwrap();
        let mut inc = OrbitIncidence::build(&g).unwrap();
        inc.validate().unwrap();
        // zeroing a row makes it uncoverable
        for c in inc.matrix[0].iter_mut() {
            *c = 0;
        }
        assert!(inc.exact_covers().is_empty());
    }

    #[test]
    fn overgroups_small() {
        let c = build_sixth_root(7).unwrap();
        let r = preserving_overgroups(&c.design, 7).unwrap();
        assert_eq!(r.maximal, Family::PSL);
        assert!(!r.diagonal_preserves);
        assert_eq!(r.frobenius_preserves, None);
        let c = build_subline(2, Family::PGL).unwrap();
        assert_eq!(preserving_overgroups(&c.design, 9).unwrap().maximal, Family::PGammaL);
        // a non-invariant block set
        let d = Design::sqs(10, vec![blk(&[0, 1, 2, 3])]).unwrap();
        assert!(preserving_overgroups(&d, 9).is_err());
    }

    #[test]
    fn mod16() {
        for d in 1..=8 {
            assert!(q_square_mod16_check(d));
        }
        assert_eq!(3u64.pow(8) % 16, 1);
    }

    #[test]
    fn flag_transitivity() {
        assert!(construction_is_flag_transitive(&build_subline(2, Family::PGL).unwrap()).unwrap());
        assert!(construction_is_flag_transitive(&build_sixth_root(7).unwrap()).unwrap());
        assert!(!construction_is_flag_transitive(&build_split_subline(1).unwrap()).unwrap());
        let psl9 = ProjectiveGroup::standard(Family::PSL, 2, 9).unwrap();
        let d = Design::sqs(10, vec![blk(&[0, 1, 2, 3])]).unwrap();
        assert!(is_flag_transitive(&psl9, 360, &d).is_err());
    }
}
