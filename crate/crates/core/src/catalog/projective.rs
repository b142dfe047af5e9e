//! `PSL(n, q)` acting on the points of projective space.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_integer::Integer;

use super::field::FiniteField;
use crate::actions::{ActionInstance, Provenance};
use crate::error::{Error, Result};
use crate::perm::{Domain, Permutation};
use crate::stabchain::PermGroup;

/// Projective points over `GF(q)^n`, each stored as the representative
/// whose last non-zero coordinate is 1, sorted lexicographically.
#[derive(Clone, Debug)]
pub struct ProjectivePoints {
    pub n: usize,
    pub field: FiniteField,
    pub points: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl ProjectivePoints {
    pub fn new(n: usize, q: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("dimension {n} is below 2")));
        }
        let field = FiniteField::new(q)?;
        let mut points = Vec::new();
        let total = q.pow(n as u32);
        for code in 1..total {
            let mut v = Vec::with_capacity(n);
            let mut x = code;
            for _ in 0..n {
                v.push(x % q);
                x /= q;
            }
            if v.iter().rev().find(|&&c| c != 0) == Some(&1) {
                points.push(v);
            }
        }
        points.sort();
        let index = points.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        Ok(ProjectivePoints { n, field, points, index })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Index of the point spanned by a non-zero vector.
    pub fn index_of(&self, v: &[usize]) -> Option<usize> {
        let last = *v.iter().rev().find(|&&c| c != 0)?;
        let s = self.field.inv(last)?;
        let w: Vec<usize> = v.iter().map(|&c| self.field.mul(c, s)).collect();
        self.index.get(&w).copied()
    }

    pub fn label(&self, i: usize) -> String {
        let parts: Vec<String> = self.points[i].iter().map(|&c| self.field.label(c)).collect();
        format!("({})", parts.join(","))
    }

    /// Permutation induced by the row-vector action `v ↦ vM`.
    pub fn induced(&self, matrix: &[Vec<usize>]) -> Result<Permutation> {
        let f = &self.field;
        let images = self
            .points
            .iter()
            .map(|v| {
                let w: Vec<usize> = (0..self.n)
                    .map(|j| (0..self.n).fold(0, |acc, i| f.add(acc, f.mul(v[i], matrix[i][j]))))
                    .collect();
                self.index_of(&w)
                    .ok_or_else(|| Error::Validation("matrix is singular".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    }
}

/// `|PSL(n, q)| = q^{n(n-1)/2} ∏_{i=2}^{n} (q^i − 1) / gcd(n, q − 1)`.
pub fn psl_order(n: usize, q: usize) -> BigUint {
    let qb = BigUint::from(q);
    let mut order = qb.pow((n * (n - 1) / 2) as u32);
    for i in 2..=n {
        order *= qb.pow(i as u32) - 1u32;
    }
    order / BigUint::from(n.gcd(&(q - 1)))
}

/// Generators of `SL(n, q)`: the transvections `I + λE_{12}` for `λ` in the
/// polynomial basis, and the monomial matrix `e_i ↦ e_{i+1}`,
/// `e_n ↦ (−1)^{n−1} e_1`.
pub fn sl_generators(n: usize, field: &FiniteField) -> Vec<Vec<Vec<usize>>> {
    let identity = |n: usize| -> Vec<Vec<usize>> {
        (0..n).map(|i| (0..n).map(|j| usize::from(i == j)).collect()).collect()
    };
    let mut gens = Vec::new();
    for lambda in field.additive_basis() {
        let mut t = identity(n);
        t[0][1] = lambda;
        gens.push(t);
    }
    let mut w = vec![vec![0; n]; n];
    for (i, row) in w.iter_mut().enumerate().take(n - 1) {
        row[i + 1] = 1;
    }
    w[n - 1][0] = if n % 2 == 1 { 1 } else { field.neg(1) };
    gens.push(w);
    gens
}

/// `PSL(n, q)` on the `(q^n − 1)/(q − 1)` projective points, with its order
/// checked against the formula.
pub fn psl_projective(n: usize, q: usize, require_simple: bool) -> Result<ActionInstance> {
    if require_simple && (n, q) == (2, 2) || require_simple && (n, q) == (2, 3) {
        return Err(Error::InvalidArgument(format!("PSL({n},{q}) is not simple")));
    }
    let space = ProjectivePoints::new(n, q)?;
    let gens = sl_generators(n, &space.field)
        .iter()
        .map(|m| space.induced(m))
        .collect::<Result<Vec<_>>>()?;
    let group = PermGroup::new(space.len(), gens)?;
    let expected = psl_order(n, q);
    if group.order() != expected {
        return Err(Error::Validation(format!(
            "PSL({n},{q}) generators give order {}, expected {expected}",
            group.order()
        )));
    }
    let labels = (0..space.len()).map(|i| space.label(i)).collect();
    Ok(ActionInstance {
        name: format!("PSL({n},{q})"),
        group,
        domain: Domain::new(labels)?,
        provenance: Provenance::Projective { n, q },
        source_order: expected,
    })
}

/// The points `⟨e_1⟩, …, ⟨e_n⟩`, followed by `⟨e_1 + … + e_n⟩` when `q > 2`.
pub fn standard_base_psl(n: usize, q: usize) -> Result<Vec<usize>> {
    let space = ProjectivePoints::new(n, q)?;
    let mut pts = Vec::new();
    for i in 0..n {
        let mut v = vec![0; n];
        v[i] = 1;
        pts.push(space.index_of(&v).unwrap());
    }
    if q > 2 {
        pts.push(space.index_of(&vec![1; n]).unwrap());
    }
    Ok(pts)
}
