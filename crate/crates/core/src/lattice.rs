//! Lattice of subspaces of a real finite-dimensional space.
//!
//! `span` (join) and `meet` (intersection) make the subspaces a lattice that
//! is not distributive once subspaces are oblique to each other; see
//! [`distributivity_gap`] and [`oblique_configuration`].

use crate::error::{Error, Result};

/// Absolute tolerance on residual norms when deciding rank.
pub const RANK_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<f64>>,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Removes from `v` its components along the orthonormal `basis`, twice
/// (classical Gram-Schmidt with one reorthogonalization pass).
fn reject_from(v: &mut [f64], basis: &[Vec<f64>]) {
    for _ in 0..2 {
        for q in basis {
            let c = dot(v, q);
            v.iter_mut().zip(q).for_each(|(x, qi)| *x -= c * qi);
        }
    }
}

impl Subspace {
    pub fn null(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn whole(ambient_dim: usize) -> Self {
        Self::from_vectors(ambient_dim, (0..ambient_dim).map(|i| unit(ambient_dim, i)))
            .expect("standard basis has the ambient dimension")
    }

    /// Span of arbitrary vectors; dependent vectors are dropped.
    pub fn from_vectors<I, V>(ambient_dim: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[f64]>,
    {
        let mut s = Self::null(ambient_dim);
        for v in vectors {
            s.absorb(v.as_ref())?;
        }
        Ok(s)
    }

    /// Ray through `v`.
    pub fn ray(v: &[f64]) -> Self {
        Self::from_vectors(v.len(), [v]).expect("dimension taken from the vector")
    }

    fn absorb(&mut self, v: &[f64]) -> Result<()> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                left: self.ambient_dim,
                right: v.len(),
            });
        }
        let mut w = v.to_vec();
        reject_from(&mut w, &self.basis);
        let n = norm(&w);
        if n > RANK_TOL {
            w.iter_mut().for_each(|x| *x /= n);
            self.basis.push(w);
        }
        Ok(())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<f64>] {
        &self.basis
    }

    pub fn is_null(&self) -> bool {
        self.basis.is_empty()
    }

    /// Orthogonal projection of `v` onto the subspace.
    pub fn project(&self, v: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.ambient_dim];
        for q in &self.basis {
            let c = dot(v, q);
            out.iter_mut().zip(q).for_each(|(o, qi)| *o += c * qi);
        }
        out
    }

    pub fn contains_vector(&self, v: &[f64]) -> bool {
        let mut w = v.to_vec();
        reject_from(&mut w, &self.basis);
        norm(&w) <= RANK_TOL * norm(v).max(1.0)
    }

    /// `self` is a subspace of `other`.
    pub fn is_within(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|q| other.contains_vector(q))
    }

    /// Same subspace, compared through mutual containment.
    pub fn same_as(&self, other: &Subspace) -> bool {
        self.rank() == other.rank() && self.is_within(other)
    }

    /// Orthogonal complement.
    pub fn complement(&self) -> Subspace {
        let mut c = Subspace::null(self.ambient_dim);
        for i in 0..self.ambient_dim {
            if c.rank() + self.rank() == self.ambient_dim {
                break;
            }
            let mut e = unit(self.ambient_dim, i);
            reject_from(&mut e, &self.basis);
            reject_from(&mut e, &c.basis);
            let n = norm(&e);
            if n > RANK_TOL {
                e.iter_mut().for_each(|x| *x /= n);
                c.basis.push(e);
            }
        }
        c
    }

    /// Orthogonal projector as a dense row-major matrix.
    pub fn projector(&self) -> Vec<Vec<f64>> {
        (0..self.ambient_dim)
            .map(|i| self.project(&unit(self.ambient_dim, i)))
            .collect()
    }
}

fn unit(dim: usize, i: usize) -> Vec<f64> {
    let mut e = vec![0.0; dim];
    e[i] = 1.0;
    e
}

fn check_dims(a: &Subspace, b: &Subspace) -> Result<()> {
    if a.ambient_dim != b.ambient_dim {
        return Err(Error::DimensionMismatch {
            left: a.ambient_dim,
            right: b.ambient_dim,
        });
    }
    Ok(())
}

/// Smallest subspace containing both, the lattice join.
pub fn span(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    check_dims(a, b)?;
    let mut s = a.clone();
    for v in &b.basis {
        s.absorb(v)?;
    }
    Ok(s)
}

/// Largest subspace inside both: the complement of the span of complements.
pub fn meet(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    check_dims(a, b)?;
    Ok(span(&a.complement(), &b.complement())?.complement())
}

/// Both sides of `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)`.
#[derive(Debug, Clone)]
pub struct DistributivityGap {
    pub left: Subspace,
    pub right: Subspace,
    pub equal: bool,
}

pub fn distributivity_gap(a: &Subspace, b: &Subspace, c: &Subspace) -> Result<DistributivityGap> {
    check_dims(a, b)?;
    check_dims(a, c)?;
    let left = meet(a, &span(b, c)?)?;
    let right = span(&meet(a, b)?, &meet(a, c)?)?;
    let equal = left.same_as(&right);
    Ok(DistributivityGap { left, right, equal })
}

/// `(L_e2, L_y, L_x)` in three dimensions with `x = (1,1,0)/√2` and
/// `y = (1,-1,0)/√2`, both oblique to `e2` inside the `e1`–`e2` plane.
pub fn oblique_configuration() -> (Subspace, Subspace, Subspace) {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    (
        Subspace::ray(&[0.0, 1.0, 0.0]),
        Subspace::ray(&[h, -h, 0.0]),
        Subspace::ray(&[h, h, 0.0]),
    )
}

/// The three coordinate axes of three-dimensional space.
pub fn orthogonal_configuration() -> (Subspace, Subspace, Subspace) {
    (
        Subspace::ray(&[1.0, 0.0, 0.0]),
        Subspace::ray(&[0.0, 1.0, 0.0]),
        Subspace::ray(&[0.0, 0.0, 1.0]),
    )
}
