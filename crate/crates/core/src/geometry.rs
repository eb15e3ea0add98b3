//! Points of PG(1, q) and PG(n-1, q) with a fixed integer indexing.
//!
//! On the projective line a finite point `c` has index `c.code()` and the
//! point at infinity has index `q`. In higher dimension a point is a
//! homogeneous vector whose first nonzero coordinate is 1, and its index is
//! its rank among all such vectors in lexicographic order of codes.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

/// Number of points of PG(n-1, q), i.e. `(q^n - 1) / (q - 1)`.
pub fn point_count(n: u32, q: u64) -> u64 {
    (0..n).map(|i| q.pow(i)).sum()
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ProjLinePoint {
    Finite(FieldElement),
    Infinity,
}

impl ProjLinePoint {
    pub fn index(self, q: u32) -> u32 {
        match self {
            ProjLinePoint::Finite(c) => c.code(),
            ProjLinePoint::Infinity => q,
        }
    }

    pub fn from_index(index: u32, q: u32) -> Result<Self> {
        match index {
            i if i < q => Ok(ProjLinePoint::Finite(FieldElement::from_code(i))),
            i if i == q => Ok(ProjLinePoint::Infinity),
            i => Err(Error::domain(format!("point index {i} out of range for PG(1,{q})"))),
        }
    }
}

/// A normalized homogeneous coordinate vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ProjSpacePoint {
    coords: Vec<FieldElement>,
}

impl ProjSpacePoint {
    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }
}

/// Scales `raw` so that its first nonzero coordinate becomes 1.
pub fn normalize(field: &Field, raw: &[FieldElement]) -> Result<ProjSpacePoint> {
    let lead = raw
        .iter()
        .copied()
        .find(|c| !c.is_zero())
        .ok_or_else(|| Error::domain("the zero vector is not a projective point"))?;
    let s = field.inv_nonzero(lead);
    Ok(ProjSpacePoint {
        coords: raw.iter().map(|&c| field.mul(c, s)).collect(),
    })
}

/// PG(n-1, q) together with its point table.
#[derive(Clone, Debug)]
pub struct ProjectiveSpace {
    field: Arc<Field>,
    n: u32,
    points: Vec<ProjSpacePoint>,
}

impl ProjectiveSpace {
    pub fn new(field: Arc<Field>, n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain("projective spaces need n >= 2"));
        }
        let q = field.q() as u64;
        let v = point_count(n, q);
        if v > u32::MAX as u64 / 2 {
            return Err(Error::Resource { what: "projective point count", cap: u32::MAX as u64 / 2 });
        }
        let mut points = Vec::with_capacity(v as usize);
        // Lex order: more leading zeros first, then trailing coordinates as base-q digits.
        for lead in (0..n as usize).rev() {
            let tail = n as usize - 1 - lead;
            for t in 0..q.pow(tail as u32) {
                let mut coords = vec![FieldElement::ZERO; n as usize];
                coords[lead] = FieldElement::ONE;
                let mut rest = t;
                for pos in (lead + 1..n as usize).rev() {
                    coords[pos] = FieldElement::from_code((rest % q) as u32);
                    rest /= q;
                }
                points.push(ProjSpacePoint { coords });
            }
        }
        Ok(ProjectiveSpace { field, n, points })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn dimension(&self) -> u32 {
        self.n
    }

    pub fn point_count(&self) -> u32 {
        self.points.len() as u32
    }

    /// Index of a normalized vector.
    pub fn index(&self, x: &ProjSpacePoint) -> Result<u32> {
        if x.coords.len() != self.n as usize {
            return Err(Error::domain("coordinate vector has the wrong length"));
        }
        let lead = x
            .coords
            .iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| Error::domain("the zero vector is not a projective point"))?;
        if x.coords[lead] != FieldElement::ONE {
            return Err(Error::domain("vector is not normalized"));
        }
        Ok(self.index_normalized(&x.coords, lead))
    }

    pub(crate) fn index_normalized(&self, coords: &[FieldElement], lead: usize) -> u32 {
        let q = self.field.q() as u64;
        let tail = self.n as usize - 1 - lead;
        let before = point_count(tail as u32, q);
        let mut t = 0u64;
        for c in &coords[lead + 1..] {
            t = t * q + c.code() as u64;
        }
        (before + t) as u32
    }

    pub fn unindex(&self, i: u32) -> Result<&ProjSpacePoint> {
        self.points
            .get(i as usize)
            .ok_or_else(|| Error::domain(format!("point index {i} out of range for {} points", self.points.len())))
    }

    pub fn points(&self) -> &[ProjSpacePoint] {
        &self.points
    }
}
