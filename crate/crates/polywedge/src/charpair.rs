//! Characteristic pairs: a simple polytope together with an integer vector
//! per facet.
//!
//! The defining condition is checked at vertices only: the vectors of the
//! `n` facets through each vertex must be linearly independent. The
//! absolute determinant of that vertex matrix is the order of the local
//! group at the vertex; faces carry induced pairs obtained by projecting
//! along the saturation of the vectors of the facets containing the face,
//! and their vertex orders refine the top-level ones (the order on a face
//! divides the order on any larger face through the same vertex).

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use crate::linalg::{primitive_vector, saturation_projection, IntMatrix, IntVector};
use crate::polytope::{FaceSet, Polytope, WedgeMap};
use crate::{Error, Result};

/// Simple polytope with one integer vector per facet, vectors independent
/// at every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicPair {
    polytope: Polytope,
    lambda: Vec<IntVector>,
}

impl CharacteristicPair {
    /// Validates shape and the vertex independence condition. The witness
    /// in a condition failure is the first offending vertex in order.
    pub fn new(polytope: Polytope, lambda: Vec<IntVector>) -> Result<Self> {
        let n = polytope.dim();
        if lambda.len() != polytope.facet_count() {
            return Err(Error::Structural(format!(
                "{} characteristic vectors for {} facets",
                lambda.len(),
                polytope.facet_count()
            )));
        }
        if let Some(f) = lambda.iter().position(|l| l.len() != n) {
            return Err(Error::Structural(format!(
                "characteristic vector of facet {} has length {}, expected {}",
                polytope.facet_label(f),
                lambda[f].len(),
                n
            )));
        }
        let pair = Self { polytope, lambda };
        for v in 0..pair.polytope.vertex_count() {
            if pair.vertex_matrix(v).det().expect("vertex matrix is square").is_zero() {
                return Err(Error::Condition {
                    vertex: pair.polytope.vertex_label(v).to_string(),
                });
            }
        }
        Ok(pair)
    }

    pub fn polytope(&self) -> &Polytope {
        &self.polytope
    }

    pub fn lambda(&self) -> &[IntVector] {
        &self.lambda
    }

    pub fn lambda_of(&self, facet: usize) -> &[BigInt] {
        &self.lambda[facet]
    }

    /// All characteristic vectors as the columns of an `n x m` matrix, in
    /// facet order.
    pub fn lambda_matrix(&self) -> IntMatrix {
        IntMatrix::from_cols(self.lambda.clone()).expect("vectors have equal length")
    }

    /// Columns are the vectors of the facets through `v`, in ascending
    /// facet order.
    pub fn vertex_matrix(&self, v: usize) -> IntMatrix {
        let cols: Vec<IntVector> = self
            .polytope
            .vertex_facet_set(v)
            .iter()
            .map(|&f| self.lambda[f].clone())
            .collect();
        IntMatrix::from_cols(cols).expect("facet vectors have equal length")
    }

    /// Order of the local group at `v`: the absolute determinant of the
    /// vertex matrix.
    pub fn vertex_order(&self, v: usize) -> BigInt {
        self.vertex_matrix(v).det().expect("vertex matrix is square").abs()
    }

    /// Vertex orders in vertex order.
    pub fn orders(&self) -> Vec<BigInt> {
        (0..self.polytope.vertex_count()).map(|v| self.vertex_order(v)).collect()
    }

    /// The pair induced on a face: the face as a polytope, with each
    /// remaining facet carrying the primitive part of the projection of
    /// its vector along the saturation of the face's own vectors. The
    /// returned map sends new facet indices to original ones.
    ///
    /// The projection depends on a choice of basis for the quotient
    /// lattice, so induced vectors are canonical only up to a unimodular
    /// change of coordinates; induced orders are invariant.
    pub fn induced_pair(&self, face: &FaceSet) -> Result<(Self, Vec<usize>)> {
        if face.is_empty() {
            return Ok((self.clone(), (0..self.polytope.facet_count()).collect()));
        }
        let (poly, kept) = self.polytope.face_polytope(face)?;
        let generators: Vec<IntVector> =
            face.iter().map(|&f| self.lambda[f].clone()).collect();
        let proj = saturation_projection(&generators)?;
        let lambda = kept
            .iter()
            .map(|&f| {
                let col = IntMatrix::from_cols(vec![self.lambda[f].clone()])
                    .expect("single column");
                let image = proj.mul(&col).expect("shapes agree");
                primitive_vector(&image.col(0))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((Self::new(poly, lambda)?, kept))
    }

    /// Orders of the local groups of a face at each of its vertices,
    /// reported as (base vertex index, order), ascending in vertex index.
    pub fn face_orders(&self, face: &FaceSet) -> Result<Vec<(usize, BigInt)>> {
        let verts = self.polytope.face_vertices(face);
        if verts.is_empty() {
            return Err(Error::Structural(format!(
                "{:?} is not a face",
                self.polytope.facet_names(face)
            )));
        }
        if face.len() == self.polytope.dim() {
            // The face is a single vertex; its local group is trivial.
            return Ok(verts.into_iter().map(|v| (v, BigInt::one())).collect());
        }
        if face.is_empty() {
            return Ok(verts.into_iter().map(|v| (v, self.vertex_order(v))).collect());
        }
        let (induced, _) = self.induced_pair(face)?;
        Ok(verts
            .iter()
            .enumerate()
            .map(|(r, &v)| (v, induced.vertex_order(r)))
            .collect())
    }

    /// Order of the local group of `face` at one of its vertices.
    pub fn local_order(&self, face: &FaceSet, v: usize) -> Result<BigInt> {
        self.face_orders(face)?
            .into_iter()
            .find(|&(u, _)| u == v)
            .map(|(_, o)| o)
            .ok_or_else(|| {
                Error::Structural(format!(
                    "vertex {} does not lie on the face {:?}",
                    self.polytope.vertex_label(v),
                    self.polytope.facet_names(face)
                ))
            })
    }

    /// Orders of every (face, vertex-of-face) combination.
    pub fn all_face_orders(&self) -> Result<BTreeMap<(FaceSet, usize), BigInt>> {
        let mut table = BTreeMap::new();
        for face in self.polytope.faces() {
            for (v, order) in self.face_orders(&face)? {
                table.insert((face.clone(), v), order);
            }
        }
        Ok(table)
    }

    /// Wedge over one facet. New vectors, in the wedge's facet order
    /// (second copy first, then the originals with the first copy in
    /// place): the second copy gets `e_1` of the extended lattice, the
    /// first copy gets `(-1, lambda(F_i))` and every other facet keeps its
    /// vector with a leading zero.
    pub fn wedge_at(&self, facet: usize) -> Result<(Self, WedgeMap)> {
        let (poly, map) = self.polytope.wedge_at(facet)?;
        let n = self.polytope.dim();
        let mut lambda = Vec::with_capacity(poly.facet_count());
        let mut plus = vec![BigInt::zero(); n + 1];
        plus[0] = BigInt::one();
        lambda.push(plus);
        for (f, l) in self.lambda.iter().enumerate() {
            let mut col = Vec::with_capacity(n + 1);
            col.push(if f == facet { -BigInt::one() } else { BigInt::zero() });
            col.extend(l.iter().cloned());
            lambda.push(col);
        }
        Ok((Self::new(poly, lambda)?, map))
    }

    /// Iterated wedge with multiplicity `j[i]` over facet `i`. Columns in
    /// the wedge's facet order: the t-th copy (t >= 2) of facet `i` is the
    /// standard basis vector of the row allotted to it, and the first copy
    /// carries `-1` across all rows of its block with `lambda(F_i)` below.
    pub fn wedge(&self, j: &[u32]) -> Result<Self> {
        let poly = self.polytope.wedge(j)?;
        let m = self.polytope.facet_count();
        let n = self.polytope.dim();
        let extra: usize = j.iter().map(|&ji| ji as usize - 1).sum();
        // Row block of facet i starts at block_start[i] and has j[i]-1 rows.
        let mut block_start = Vec::with_capacity(m);
        let mut acc = 0usize;
        for &ji in j {
            block_start.push(acc);
            acc += ji as usize - 1;
        }
        let mut lambda = Vec::with_capacity(poly.facet_count());
        for (i, &ji) in j.iter().enumerate() {
            for t in 2..=ji {
                let mut col = vec![BigInt::zero(); extra + n];
                col[block_start[i] + (t as usize - 2)] = BigInt::one();
                lambda.push(col);
            }
        }
        for (i, &ji) in j.iter().enumerate() {
            let mut col = vec![BigInt::zero(); extra + n];
            for r in 0..(ji as usize - 1) {
                col[block_start[i] + r] = -BigInt::one();
            }
            col[extra..].clone_from_slice(&self.lambda[i]);
            lambda.push(col);
        }
        Self::new(poly, lambda)
    }

    /// The pair of a weighted projective space: the simplex with facet
    /// vectors a basis of the kernel of the weight vector `chi`. Weights
    /// must be positive with trivial common divisor. The order at the
    /// vertex opposite facet `i` is `chi[i]`.
    pub fn weighted_projective(chi: &[BigInt]) -> Result<Self> {
        if chi.len() < 2 {
            return Err(Error::Structural("need at least two weights".into()));
        }
        if chi.iter().any(|c| !c.is_positive()) {
            return Err(Error::Structural("weights must be positive".into()));
        }
        let g = chi.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if !g.is_one() {
            return Err(Error::Structural(format!(
                "weights must be coprime; common divisor {g}"
            )));
        }
        let n = chi.len() - 1;
        let column = IntMatrix::from_cols(vec![chi.to_vec()]).expect("single column");
        let smith = column.smith_normal_form();
        // gcd(chi) = 1, so u * chi = (1, 0, .., 0) up to the sign absorbed
        // in v; rows 1.. of u are a basis of the dual of the kernel.
        let lam = smith.u.row_slice(1..n + 1);
        let lambda: Vec<IntVector> = (0..=n).map(|i| lam.col(i)).collect();

        let facet_labels = (1..=n + 1).map(|i| format!("F{i}")).collect();
        let vertex_labels = (1..=n + 1).map(|i| format!("v{i}")).collect();
        let vertex_facets = (0..=n)
            .map(|v| (0..=n).filter(|&f| f != v).collect())
            .collect();
        let poly = Polytope::new(n, facet_labels, vertex_labels, vertex_facets)?;
        Self::new(poly, lambda)
    }
}
