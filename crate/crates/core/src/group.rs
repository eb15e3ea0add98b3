//! Semilinear projective groups PSL, PGL, PΣL and PΓL acting on PG(n-1, q).
//!
//! An element is a pair `(A, e)` meaning `x ↦ A · x^(p^e)` on homogeneous
//! coordinates, stored with `A` scaled so that its first nonzero entry in
//! row-major order is 1. On the projective line this is the fractional map
//! `x ↦ (a x^σ + b) / (c x^σ + d)`.

use std::fmt;
use std::sync::Arc;

use rustc_hash::FxHashSet;

use crate::error::{Error, Result};
use crate::field::{gcd, Field, FieldElement};
use crate::geometry::{point_count, ProjLinePoint, ProjSpacePoint, ProjectiveSpace};

/// Size guardrails for enumeration, orbit and stabilizer computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_group: u64,
    pub max_orbit: u64,
    pub max_stabilizer: u64,
    pub max_subsets: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_group: 1_000_000,
            max_orbit: 10_000_000,
            max_stabilizer: 10_000,
            max_subsets: 10_000_000,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Family {
    PSL,
    PGL,
    PSigmaL,
    PGammaL,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::PSL, Family::PGL, Family::PSigmaL, Family::PGammaL];

    pub fn name(self) -> &'static str {
        match self {
            Family::PSL => "PSL",
            Family::PGL => "PGL",
            Family::PSigmaL => "PSigmaL",
            Family::PGammaL => "PGammaL",
        }
    }

    fn has_diagonal_extension(self) -> bool {
        matches!(self, Family::PGL | Family::PGammaL)
    }

    fn has_field_automorphisms(self) -> bool {
        matches!(self, Family::PSigmaL | Family::PGammaL)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "psl" | "l" => Ok(Family::PSL),
            "pgl" => Ok(Family::PGL),
            "psigmal" | "psl-frob" => Ok(Family::PSigmaL),
            "pgammal" => Ok(Family::PGammaL),
            other => Err(Error::domain(format!("unknown group family `{other}`"))),
        }
    }
}

/// A named group `family_n(q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub family: Family,
    pub n: u32,
    pub field: Arc<Field>,
}

impl GroupSpec {
    pub fn new(family: Family, n: u32, field: Arc<Field>) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain("projective linear groups need n >= 2"));
        }
        let spec = GroupSpec { family, n, field };
        spec.try_order()?;
        Ok(spec)
    }

    /// `false` for `(n, q) ∈ {(2, 2), (2, 3)}`, where PSL is not simple.
    pub fn socle_simple(&self) -> bool {
        !(self.n == 2 && self.field.q() <= 3)
    }

    fn try_order(&self) -> Result<u64> {
        let q = self.field.q() as u128;
        let n = self.n;
        let mut gl: u128 = 1;
        for i in 0..n {
            let term = q
                .checked_pow(n)
                .zip(q.checked_pow(i))
                .map(|(a, b)| a - b)
                .ok_or_else(|| Error::domain("group order overflows"))?;
            gl = gl.checked_mul(term).ok_or_else(|| Error::domain("group order overflows"))?;
        }
        let pgl = gl / (q - 1);
        let mut order = match self.family {
            Family::PSL | Family::PSigmaL => pgl / gcd(n as u64, (q - 1) as u64) as u128,
            Family::PGL | Family::PGammaL => pgl,
        };
        if self.family.has_field_automorphisms() {
            order *= self.field.d() as u128;
        }
        u64::try_from(order).map_err(|_| Error::domain("group order overflows"))
    }

    /// Order of the group from the standard formulas.
    pub fn order(&self) -> u64 {
        self.try_order().expect("validated at construction")
    }
}

/// A semilinear projective transformation `(A, e)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    matrix: Box<[FieldElement]>,
    frob: u32,
}

impl GroupElement {
    /// Row-major matrix entries.
    pub fn matrix(&self) -> &[FieldElement] {
        &self.matrix
    }

    pub fn frobenius_exponent(&self) -> u32 {
        self.frob
    }

    pub fn dimension(&self) -> u32 {
        (self.matrix.len() as f64).sqrt().round() as u32
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let codes: Vec<u32> = self.matrix.iter().map(|c| c.code()).collect();
        write!(f, "({codes:?}, frob={})", self.frob)
    }
}

/// Matrix and Frobenius arithmetic for one `(n, q)`, independent of any
/// particular generating set.
#[derive(Clone, Debug)]
pub struct Semilinear {
    field: Arc<Field>,
    n: u32,
    space: Option<ProjectiveSpace>,
}

impl Semilinear {
    pub fn new(field: Arc<Field>, n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain("projective linear groups need n >= 2"));
        }
        let space = if n >= 3 { Some(ProjectiveSpace::new(field.clone(), n)?) } else { None };
        Ok(Semilinear { field, n, space })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of points acted on.
    pub fn degree(&self) -> u32 {
        point_count(self.n, self.field.q() as u64) as u32
    }

    pub fn space(&self) -> Option<&ProjectiveSpace> {
        self.space.as_ref()
    }

    fn canonical(&self, mut matrix: Vec<FieldElement>, frob: u32) -> GroupElement {
        let lead = matrix
            .iter()
            .copied()
            .find(|c| !c.is_zero())
            .expect("invertible matrix has a nonzero entry");
        if lead != FieldElement::ONE {
            let s = self.field.inv_nonzero(lead);
            for c in matrix.iter_mut() {
                *c = self.field.mul(*c, s);
            }
        }
        GroupElement { matrix: matrix.into_boxed_slice(), frob: frob % self.field.d() }
    }

    /// Builds an element from a row-major matrix and Frobenius exponent.
    pub fn element(&self, matrix: &[FieldElement], frob: u32) -> Result<GroupElement> {
        let n = self.n as usize;
        if matrix.len() != n * n {
            return Err(Error::domain(format!("expected {} matrix entries", n * n)));
        }
        if matrix.iter().any(|c| c.code() >= self.field.q()) {
            return Err(Error::domain("matrix entry out of field range"));
        }
        if frob >= self.field.d() {
            return Err(Error::domain(format!("Frobenius exponent must lie in [0, {})", self.field.d())));
        }
        if self.determinant(matrix).is_zero() {
            return Err(Error::domain("matrix is singular"));
        }
        Ok(self.canonical(matrix.to_vec(), frob))
    }

    /// Shorthand for a 2x2 element from codes `(a, b, c, d)`.
    pub fn element2(&self, entries: [u32; 4], frob: u32) -> Result<GroupElement> {
        let m: Vec<FieldElement> = entries.iter().map(|&c| FieldElement::from_code(c)).collect();
        self.element(&m, frob)
    }

    pub fn identity(&self) -> GroupElement {
        let n = self.n as usize;
        let mut m = vec![FieldElement::ZERO; n * n];
        for i in 0..n {
            m[i * n + i] = FieldElement::ONE;
        }
        GroupElement { matrix: m.into_boxed_slice(), frob: 0 }
    }

    /// The field automorphism `x ↦ x^p` acting coordinatewise.
    pub fn frobenius_element(&self) -> GroupElement {
        let mut g = self.identity();
        g.frob = 1 % self.field.d();
        g
    }

    pub fn is_identity(&self, g: &GroupElement) -> bool {
        *g == self.identity()
    }

    pub fn determinant(&self, m: &[FieldElement]) -> FieldElement {
        let f = &*self.field;
        let n = self.n as usize;
        let mut a = m.to_vec();
        let mut det = FieldElement::ONE;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return FieldElement::ZERO;
            };
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                }
                det = f.neg(det);
            }
            let pv = a[col * n + col];
            det = f.mul(det, pv);
            let inv = f.inv_nonzero(pv);
            for r in col + 1..n {
                let factor = f.mul(a[r * n + col], inv);
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let sub = f.mul(factor, a[col * n + j]);
                    a[r * n + j] = f.sub(a[r * n + j], sub);
                }
            }
        }
        det
    }

    fn matrix_inverse(&self, m: &[FieldElement]) -> Vec<FieldElement> {
        let f = &*self.field;
        let n = self.n as usize;
        let mut a = m.to_vec();
        let mut inv = self.identity().matrix.to_vec();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r * n + col].is_zero()).expect("invertible matrix");
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                    inv.swap(pivot * n + j, col * n + j);
                }
            }
            let s = f.inv_nonzero(a[col * n + col]);
            for j in 0..n {
                a[col * n + j] = f.mul(a[col * n + j], s);
                inv[col * n + j] = f.mul(inv[col * n + j], s);
            }
            for r in 0..n {
                if r == col || a[r * n + col].is_zero() {
                    continue;
                }
                let factor = a[r * n + col];
                for j in 0..n {
                    a[r * n + j] = f.sub(a[r * n + j], f.mul(factor, a[col * n + j]));
                    inv[r * n + j] = f.sub(inv[r * n + j], f.mul(factor, inv[col * n + j]));
                }
            }
        }
        inv
    }

    /// `g ∘ h`: apply `h` first, then `g`.
    pub fn compose(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        let f = &*self.field;
        let n = self.n as usize;
        let mut out = vec![FieldElement::ZERO; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = FieldElement::ZERO;
                for k in 0..n {
                    let hk = f.frobenius(h.matrix[k * n + j], g.frob);
                    acc = f.add(acc, f.mul(g.matrix[i * n + k], hk));
                }
                out[i * n + j] = acc;
            }
        }
        self.canonical(out, g.frob + h.frob)
    }

    pub fn inverse(&self, g: &GroupElement) -> GroupElement {
        let d = self.field.d();
        let back = (d - g.frob) % d;
        let m: Vec<FieldElement> =
            self.matrix_inverse(&g.matrix).into_iter().map(|c| self.field.frobenius(c, back)).collect();
        self.canonical(m, back)
    }

    /// Whether `g` lies in PSL: no field automorphism part and determinant
    /// an `n`-th power (a square when `n = 2`).
    pub fn in_psl(&self, g: &GroupElement) -> bool {
        if g.frob != 0 {
            return false;
        }
        let det = self.determinant(&g.matrix);
        let m = gcd(self.n as u64, self.field.q() as u64 - 1);
        self.field.log(det).map(|l| (l as u64).is_multiple_of(m)).unwrap_or(false)
    }

    pub fn apply_line(&self, g: &GroupElement, x: ProjLinePoint) -> ProjLinePoint {
        let f = &*self.field;
        let [a, b, c, d] = [g.matrix[0], g.matrix[1], g.matrix[2], g.matrix[3]];
        match x {
            ProjLinePoint::Infinity => {
                if c.is_zero() {
                    ProjLinePoint::Infinity
                } else {
                    ProjLinePoint::Finite(f.mul(a, f.inv_nonzero(c)))
                }
            }
            ProjLinePoint::Finite(x) => {
                let y = f.frobenius(x, g.frob);
                let num = f.add(f.mul(a, y), b);
                let den = f.add(f.mul(c, y), d);
                if den.is_zero() {
                    ProjLinePoint::Infinity
                } else {
                    ProjLinePoint::Finite(f.mul(num, f.inv_nonzero(den)))
                }
            }
        }
    }

    pub fn apply_space(&self, g: &GroupElement, x: &ProjSpacePoint) -> ProjSpacePoint {
        let space = self.space.as_ref().expect("apply_space needs n >= 3");
        let i = self.apply_space_index(g, space, x.coords());
        space.unindex(i).expect("index in range").clone()
    }

    fn apply_space_index(&self, g: &GroupElement, space: &ProjectiveSpace, x: &[FieldElement]) -> u32 {
        let f = &*self.field;
        let n = self.n as usize;
        let y: Vec<FieldElement> = x.iter().map(|&c| f.frobenius(c, g.frob)).collect();
        let mut z: Vec<FieldElement> = g
            .matrix
            .chunks(n)
            .map(|row| row.iter().zip(&y).fold(FieldElement::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b))))
            .collect();
        let lead = z.iter().position(|c| !c.is_zero()).expect("invertible map");
        let s = f.inv_nonzero(z[lead]);
        for c in z.iter_mut() {
            *c = f.mul(*c, s);
        }
        space.index_normalized(&z, lead)
    }

    /// Image of a point index.
    pub fn apply(&self, g: &GroupElement, x: u32) -> u32 {
        let q = self.field.q();
        match &self.space {
            None => {
                let p = ProjLinePoint::from_index(x, q).expect("point index in range");
                self.apply_line(g, p).index(q)
            }
            Some(space) => {
                let p = space.unindex(x).expect("point index in range");
                self.apply_space_index(g, space, p.coords())
            }
        }
    }

    /// The permutation of point indices induced by `g`.
    pub fn permutation(&self, g: &GroupElement) -> Vec<u32> {
        (0..self.degree()).map(|x| self.apply(g, x)).collect()
    }

    /// The generating set used for `family`.
    ///
    /// For `n = 2` PSL is generated by the Borel subgroup and the Weyl
    /// element: `t = (1,1;0,1)`, `h = (g,0;0,g^-1)`, `w = (0,1;-1,0)`. For
    /// `n >= 3` PSL is generated by the transvections `I + g^k E_ij`,
    /// `0 <= k < d`. PGL adds `diag(g,1,...,1)`; PΣL and PΓL add the
    /// Frobenius map when `d > 1`.
    pub fn generators(&self, family: Family) -> Vec<GroupElement> {
        let f = &*self.field;
        let g = f.generator();
        let n = self.n as usize;
        let mut gens = Vec::new();
        if n == 2 {
            let one = FieldElement::ONE;
            let zero = FieldElement::ZERO;
            gens.push(self.canonical(vec![one, one, zero, one], 0));
            gens.push(self.canonical(vec![g, zero, zero, f.inv_nonzero(g)], 0));
            gens.push(self.canonical(vec![zero, one, f.neg(one), zero], 0));
        } else {
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    for k in 0..f.d() {
                        let mut m = self.identity().matrix.to_vec();
                        m[i * n + j] = f.exp(k as u64);
                        gens.push(self.canonical(m, 0));
                    }
                }
            }
        }
        if family.has_diagonal_extension() {
            gens.push(self.diagonal_extension());
        }
        if family.has_field_automorphisms() && f.d() > 1 {
            gens.push(self.frobenius_element());
        }
        gens
    }

    /// `diag(g, 1, ..., 1)`, which together with PSL generates PGL.
    pub fn diagonal_extension(&self) -> GroupElement {
        let mut m = self.identity().matrix.to_vec();
        m[0] = self.field.generator();
        self.canonical(m, 0)
    }
}

/// A permutation group on projective points given by generators.
#[derive(Clone, Debug)]
pub struct ProjectiveGroup {
    action: Arc<Semilinear>,
    spec: Option<GroupSpec>,
    gens: Vec<GroupElement>,
    perms: Vec<Vec<u32>>,
    limits: Limits,
}

impl ProjectiveGroup {
    pub fn new(spec: GroupSpec) -> Result<Self> {
        let action = Arc::new(Semilinear::new(spec.field.clone(), spec.n)?);
        let gens = action.generators(spec.family);
        let mut group = Self::from_generators(action, gens);
        group.spec = Some(spec);
        Ok(group)
    }

    /// Convenience constructor for `family_n(q)`.
    pub fn standard(family: Family, n: u32, q: u64) -> Result<Self> {
        let field = Arc::new(Field::with_order(q)?);
        Self::new(GroupSpec::new(family, n, field)?)
    }

    pub fn from_generators(action: Arc<Semilinear>, gens: Vec<GroupElement>) -> Self {
        let perms = gens.iter().map(|g| action.permutation(g)).collect();
        ProjectiveGroup { action, spec: None, gens, perms, limits: Limits::default() }
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn action(&self) -> &Arc<Semilinear> {
        &self.action
    }

    pub fn field(&self) -> &Arc<Field> {
        self.action.field()
    }

    pub fn spec(&self) -> Option<&GroupSpec> {
        self.spec.as_ref()
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.gens
    }

    pub(crate) fn generator_permutations(&self) -> &[Vec<u32>] {
        &self.perms
    }

    pub fn degree(&self) -> u32 {
        self.action.degree()
    }

    /// Order from the standard formula; `None` for ad hoc generating sets.
    pub fn order(&self) -> Option<u64> {
        self.spec.as_ref().map(GroupSpec::order)
    }

    /// All elements, by breadth-first closure of the generators.
    pub fn enumerate(&self) -> Result<FxHashSet<GroupElement>> {
        let cap = self.limits.max_group;
        if let Some(order) = self.order() {
            if order > cap {
                return Err(Error::Resource { what: "group order", cap });
            }
        }
        closure(&self.action, &self.gens, cap, "group enumeration")
    }
}

/// Closure of `gens` under composition, failing once it exceeds `cap`.
pub fn closure(
    action: &Semilinear,
    gens: &[GroupElement],
    cap: u64,
    what: &'static str,
) -> Result<FxHashSet<GroupElement>> {
    let id = action.identity();
    let mut seen = FxHashSet::default();
    seen.insert(id.clone());
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens {
                let y = action.compose(g, x);
                if !seen.contains(&y) {
                    if seen.len() as u64 >= cap {
                        return Err(Error::Resource { what, cap });
                    }
                    seen.insert(y.clone());
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    Ok(seen)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(q: u64) -> Semilinear {
        Semilinear::new(Arc::new(Field::with_order(q).unwrap()), 2).unwrap()
    }

    fn pt(c: u32) -> ProjLinePoint {
        ProjLinePoint::Finite(FieldElement::from_code(c))
    }

    #[test]
    fn fractional_action_conventions() {
        let a = line(7);
        let id = a.identity();
        for x in 0..=7 {
            assert_eq!(a.apply(&id, x), x);
        }
        let w = a.element2([0, 1, 6, 0], 0).unwrap();
        assert_eq!(a.apply_line(&w, pt(0)), ProjLinePoint::Infinity);
        assert_eq!(a.apply_line(&w, ProjLinePoint::Infinity), pt(0));
        let t = a.element2([1, 1, 0, 1], 0).unwrap();
        assert_eq!(a.apply_line(&t, pt(6)), pt(0));
        assert_eq!(a.apply_line(&t, ProjLinePoint::Infinity), ProjLinePoint::Infinity);
    }

    #[test]
    fn canonical_scaling() {
        let a = line(7);
        let g = a.element2([2, 4, 6, 2], 0).unwrap();
        assert_eq!(g.matrix()[0], FieldElement::ONE);
        assert_eq!(g, a.element2([1, 2, 3, 1], 0).unwrap());
        assert!(a.element2([1, 2, 2, 4], 0).is_err());
    }

    #[test]
    fn compose_and_inverse() {
        let a = line(9);
        let g = a.element2([1, 3, 4, 2], 1).unwrap();
        let h = a.element2([0, 1, 5, 7], 0).unwrap();
        assert!(a.is_identity(&a.compose(&g, &a.inverse(&g))));
        assert!(a.is_identity(&a.compose(&a.inverse(&h), &h)));
        for x in 0..10 {
            assert_eq!(a.apply(&a.compose(&g, &h), x), a.apply(&g, a.apply(&h, x)));
        }
        // (M, Frob)·(M, Frob): exponent cancels, matrix is M · M^Frob
        let gg = a.compose(&g, &g);
        assert_eq!(gg.frobenius_exponent(), 0);
        for x in 0..10 {
            assert_eq!(a.apply(&gg, x), a.apply(&g, a.apply(&g, x)));
        }
        let f = a.field();
        let m: Vec<FieldElement> = g.matrix().to_vec();
        let mf: Vec<FieldElement> = m.iter().map(|&c| f.frobenius(c, 1)).collect();
        let prod = [
            f.add(f.mul(m[0], mf[0]), f.mul(m[1], mf[2])),
            f.add(f.mul(m[0], mf[1]), f.mul(m[1], mf[3])),
            f.add(f.mul(m[2], mf[0]), f.mul(m[3], mf[2])),
            f.add(f.mul(m[2], mf[1]), f.mul(m[3], mf[3])),
        ];
        assert_eq!(gg, a.element(&prod, 0).unwrap());
    }

    #[test]
    fn pure_matrix_products() {
        let a = line(7);
        let g = a.element2([1, 2, 3, 5], 0).unwrap();
        let h = a.element2([2, 0, 1, 1], 0).unwrap();
        let gh = a.compose(&g, &h);
        // (1 2; 3 5)(2 0; 1 1) = (4 2; 11 5) = (4 2; 4 5) mod 7
        assert_eq!(gh, a.element2([4, 2, 4, 5], 0).unwrap());
    }

    #[test]
    fn generator_counts_and_psl_membership() {
        let psl7 = Semilinear::new(Arc::new(Field::new(7, 1).unwrap()), 2).unwrap();
        let gens = psl7.generators(Family::PSL);
        assert_eq!(gens.len(), 3);
        assert!(gens.iter().all(|g| psl7.in_psl(g)));
        assert!(!psl7.in_psl(&psl7.diagonal_extension()));
        assert_eq!(line(9).generators(Family::PGL).len(), 4);
        assert_eq!(line(9).generators(Family::PGammaL).len(), 5);
        let pg33 = Semilinear::new(Arc::new(Field::new(3, 1).unwrap()), 4).unwrap();
        assert_eq!(pg33.generators(Family::PSL).len(), 12);
    }

    #[test]
    fn transvection_fixes_points_off_its_column() {
        let a = Semilinear::new(Arc::new(Field::new(3, 1).unwrap()), 4).unwrap();
        let gens = a.generators(Family::PSL);
        // T_{01}(1) adds coordinate 1 to coordinate 0
        let t = &gens[0];
        let space = a.space().unwrap();
        let x = space.unindex(0).unwrap().clone();
        assert_eq!(a.apply_space(t, &x), x);
        for g in &gens {
            let mut perm = a.permutation(g);
            perm.sort_unstable();
            assert_eq!(perm, (0..40).collect::<Vec<_>>());
        }
    }

    #[test]
    fn orders_match_enumeration() {
        for (family, q, expected) in [
            (Family::PSL, 9, 360),
            (Family::PGL, 9, 720),
            (Family::PSL, 7, 168),
            (Family::PSL, 5, 60),
            (Family::PGL, 3, 24),
            (Family::PSL, 13, 1092),
        ] {
            let g = ProjectiveGroup::standard(family, 2, q).unwrap();
            assert_eq!(g.order(), Some(expected));
            assert_eq!(g.enumerate().unwrap().len() as u64, expected, "{family}_2({q})");
        }
    }

    #[test]
    fn enumeration_respects_cap() {
        let g = ProjectiveGroup::standard(Family::PGL, 2, 81)
            .unwrap()
            .with_limits(Limits { max_group: 1000, ..Limits::default() });
        assert!(matches!(g.enumerate(), Err(Error::Resource { .. })));
    }

    #[test]
    fn non_simple_socles_are_flagged() {
        let f2 = Arc::new(Field::new(2, 1).unwrap());
        assert!(!GroupSpec::new(Family::PSL, 2, f2.clone()).unwrap().socle_simple());
        assert!(GroupSpec::new(Family::PSL, 3, f2).unwrap().socle_simple());
        let f4 = Arc::new(Field::new(2, 2).unwrap());
        assert!(GroupSpec::new(Family::PSL, 2, f4).unwrap().socle_simple());
    }
}
