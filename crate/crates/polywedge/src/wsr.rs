//! The weighted face ring of a characteristic pair.
//!
//! Every vertex `v` assigns to each facet variable `x_f` a linear form
//! `z^v_f` in the coordinates `u_1 .. u_n`: zero when `f` misses `v`, and
//! otherwise determined by requiring that the facet vectors through `v`
//! recombine the forms back into the `u_j`. Concretely the forms of the
//! facets through `v`, in ascending facet order, are the rows of the
//! inverse of the vertex matrix applied to `(u_1, .., u_n)`.
//!
//! A polynomial in the `x_f` belongs to the ring when every vertex
//! substitution has integer coefficients. The graded pieces of the ring
//! are full-rank lattices inside the span of the monomials of each degree,
//! computed exactly through a Smith normal form. An auxiliary slot `u_0`
//! carries the extra coordinate appearing in the substitution rules of a
//! wedge, where the forms of the wedged pair are expressed through the
//! forms of the base.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Zero};

use crate::charpair::CharacteristicPair;
use crate::linalg::IntMatrix;
use crate::polytope::WedgeMap;
use crate::retraction::{formality, FormalityReport};
use crate::{Error, Result};

/// Linear form in `u_0 .. u_d`: entry `k` is the coefficient of `u_k`.
/// Slot 0 is the auxiliary wedge coordinate and is zero for the forms of a
/// pair itself.
pub type LinearForm = Vec<BigRational>;

/// Sparse polynomial with rational coefficients; keys are exponent
/// vectors of fixed length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable out of range");
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(exps, BigRational::one());
        p
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, coeff: BigRational) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length");
        let mut p = Self::zero(nvars);
        p.add_term(exps, coeff);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, exps: Vec<u32>, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::constant(self.nvars, BigRational::one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Substitutes `images[i]` for variable `i`. All images must share a
    /// variable count, which becomes the variable count of the result.
    pub fn substitute(&self, images: &[Poly]) -> Self {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let out_nvars = images.first().map_or(0, Poly::nvars);
        assert!(images.iter().all(|p| p.nvars == out_nvars), "image variable counts differ");
        let mut out = Self::zero(out_nvars);
        for (exps, coeff) in &self.terms {
            let mut prod = Self::constant(out_nvars, coeff.clone());
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    prod = prod.mul(&images[i].pow(e));
                }
            }
            out = out.add(&prod);
        }
        out
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// The first term, in exponent order, whose coefficient is not an
    /// integer.
    pub fn first_non_integral(&self) -> Option<(Vec<u32>, BigRational)> {
        self.terms
            .iter()
            .find(|(_, c)| !c.is_integer())
            .map(|(e, c)| (e.clone(), c.clone()))
    }
}

fn form_to_poly(form: &LinearForm) -> Poly {
    let mut p = Poly::zero(form.len());
    for (k, c) in form.iter().enumerate() {
        if !c.is_zero() {
            let mut exps = vec![0; form.len()];
            exps[k] = 1;
            p.add_term(exps, c.clone());
        }
    }
    p
}

/// Substitution forms of every vertex: `out[v][f]` is the linear form of
/// facet `f` at vertex `v`, with `dim + 1` slots (slot 0 stays zero).
pub fn z_vectors(pair: &CharacteristicPair) -> Result<Vec<Vec<LinearForm>>> {
    let poly = pair.polytope();
    let n = poly.dim();
    let m = poly.facet_count();
    let mut out = Vec::with_capacity(poly.vertex_count());
    for v in 0..poly.vertex_count() {
        let inv = pair.vertex_matrix(v).inverse()?;
        let mut forms = vec![vec![BigRational::zero(); n + 1]; m];
        for (row, &f) in poly.vertex_facet_set(v).iter().enumerate() {
            for j in 0..n {
                forms[f][j + 1] = inv[(row, j)].clone();
            }
        }
        out.push(forms);
    }
    Ok(out)
}

/// Substitution forms of the single wedge of `base` over `facet`,
/// expressed through the base forms with the auxiliary coordinate in slot
/// 1 of the wedged pair (the wedge has dimension `n + 1`, so its forms
/// have `n + 2` slots and slot 0 again stays zero).
///
/// For a base vertex on the wedged facet, the surviving copy reads
/// `u_0 + z^v_i` on the second facet copy and the base form on everything
/// else. Off the facet, the plus copy reads `u_0` on the second copy and
/// base forms elsewhere, while the minus copy reads `-u_0` on the first
/// copy and `gamma_a u_0 + z^v_{s_a}` on its other facets, where `gamma`
/// solves the vertex matrix against the wedged facet's vector.
pub fn wedge_z_vectors(
    base: &CharacteristicPair,
    facet: usize,
    map: &WedgeMap,
) -> Result<Vec<Vec<LinearForm>>> {
    if map.facet != facet {
        return Err(Error::Structural("wedge map belongs to a different facet".into()));
    }
    let poly = base.polytope();
    let n = poly.dim();
    let m = poly.facet_count();
    let slots = n + 2;
    let base_forms = z_vectors(base)?;

    // Base form slots 1..=n move to 2..=n+1; slot 1 is the new auxiliary.
    let shift = |f: &LinearForm| -> LinearForm {
        let mut out = vec![BigRational::zero(); slots];
        out[2..(n + 1 + 1)].clone_from_slice(&f[1..(n + 1)]);
        out
    };
    let u0 = |c: i64| -> LinearForm {
        let mut out = vec![BigRational::zero(); slots];
        out[1] = BigRational::from_integer(BigInt::from(c));
        out
    };
    let add = |a: &LinearForm, b: &LinearForm| -> LinearForm {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    };

    let wedge_vertices = map
        .pairs
        .iter()
        .map(|&(minus, plus)| plus.map_or(minus, |p| p.max(minus)).max(minus))
        .max()
        .map_or(0, |mx| mx + 1);
    let mut out = vec![Vec::new(); wedge_vertices];

    for (v, &(minus, plus)) in map.pairs.iter().enumerate() {
        let zb = &base_forms[v];
        match plus {
            None => {
                // On the wedged facet: one copy on both facet copies.
                let mut forms = vec![vec![BigRational::zero(); slots]; m + 1];
                forms[0] = add(&u0(1), &shift(&zb[facet]));
                for f in 0..m {
                    forms[f + 1] = shift(&zb[f]);
                }
                out[minus] = forms;
            }
            Some(plus) => {
                let mut plus_forms = vec![vec![BigRational::zero(); slots]; m + 1];
                plus_forms[0] = u0(1);
                for f in 0..m {
                    plus_forms[f + 1] = shift(&zb[f]);
                }
                out[plus] = plus_forms;

                let inv = base.vertex_matrix(v).inverse()?;
                let col = IntMatrix::from_cols(vec![base.lambda_of(facet).to_vec()])
                    .expect("single column");
                let gamma = inv.mul(&col.to_rational())?;
                let mut minus_forms = vec![vec![BigRational::zero(); slots]; m + 1];
                minus_forms[facet + 1] = u0(-1);
                for (row, &s) in poly.vertex_facet_set(v).iter().enumerate() {
                    let mut g = vec![BigRational::zero(); slots];
                    g[1] = gamma[(row, 0)].clone();
                    minus_forms[s + 1] = add(&g, &shift(&zb[s]));
                }
                out[minus] = minus_forms;
            }
        }
    }
    Ok(out)
}

/// Facet index sets of the squarefree monomials generating the face ideal:
/// the minimal non-faces of the nerve.
pub fn sr_generators(pair: &CharacteristicPair) -> Vec<Vec<usize>> {
    pair.polytope()
        .nerve()
        .minimal_non_faces()
        .iter()
        .map(|g| g.iter().copied().collect())
        .collect()
}

/// The generators as polynomials in the facet variables.
pub fn sr_polys(pair: &CharacteristicPair) -> Vec<Poly> {
    let m = pair.polytope().facet_count();
    sr_generators(pair)
        .into_iter()
        .map(|g| {
            let mut exps = vec![0; m];
            for f in g {
                exps[f] = 1;
            }
            Poly::monomial(m, exps, BigRational::one())
        })
        .collect()
}

/// Coefficient rows of the linear relations: row `j` pairs each facet
/// variable with the j-th coordinate of its vector.
pub fn linear_relations(pair: &CharacteristicPair) -> Vec<Vec<BigInt>> {
    let lam = pair.lambda_matrix();
    (0..lam.rows()).map(|j| lam.row(j).to_vec()).collect()
}

/// The relations as polynomials in the facet variables.
pub fn linear_polys(pair: &CharacteristicPair) -> Vec<Poly> {
    let m = pair.polytope().facet_count();
    linear_relations(pair)
        .into_iter()
        .map(|row| {
            let mut p = Poly::zero(m);
            for (f, c) in row.into_iter().enumerate() {
                if !c.is_zero() {
                    let mut exps = vec![0; m];
                    exps[f] = 1;
                    p.add_term(exps, BigRational::from_integer(c));
                }
            }
            p
        })
        .collect()
}

/// Failure witness for ring membership: the vertex whose substitution has
/// a fractional coefficient, and where.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralityWitness {
    pub vertex: usize,
    pub monomial: Vec<u32>,
    pub coefficient: BigRational,
}

/// Checks whether `f` lies in the weighted face ring: every vertex
/// substitution must have integer coefficients. Returns the first witness
/// against it, or `None` when `f` is a member.
pub fn check_membership(
    pair: &CharacteristicPair,
    f: &Poly,
) -> Result<Option<IntegralityWitness>> {
    let m = pair.polytope().facet_count();
    if f.nvars() != m {
        return Err(Error::Structural(format!(
            "polynomial in {} variables against {} facets",
            f.nvars(),
            m
        )));
    }
    for (v, forms) in z_vectors(pair)?.into_iter().enumerate() {
        let images: Vec<Poly> = forms.iter().map(form_to_poly).collect();
        let g = f.substitute(&images);
        if let Some((monomial, coefficient)) = g.first_non_integral() {
            return Ok(Some(IntegralityWitness { vertex: v, monomial, coefficient }));
        }
    }
    Ok(None)
}

/// Basis data for one graded piece of the weighted face ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBasis {
    pub degree: u32,
    /// Exponent vectors of the monomials spanning the ambient degree
    /// piece, in exponent order.
    pub monomials: Vec<Vec<u32>>,
    /// Rows of a Hermite-normal-form basis of the member lattice, in
    /// monomial coordinates. Full rank: the lattice contains a multiple of
    /// every monomial.
    pub basis: Vec<Vec<BigInt>>,
    /// Per monomial, the least positive integer multiplier that makes it a
    /// member.
    pub clearing: Vec<BigInt>,
}

fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Vec<u32>> {
    fn go(nvars: usize, degree: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == nvars {
            prefix.push(degree);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in 0..=degree {
            prefix.push(e);
            go(nvars, degree - e, prefix, out);
            prefix.pop();
        }
    }
    if nvars == 0 {
        return if degree == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    go(nvars, degree, &mut Vec::new(), &mut out);
    out
}

/// Computes the lattice of degree-`degree` members inside the span of the
/// monomials of that degree: substitute every monomial at every vertex,
/// clear denominators with one global integer `D`, and solve the
/// congruence system modulo `D` through a Smith decomposition.
pub fn graded_basis(pair: &CharacteristicPair, degree: u32) -> Result<GradedBasis> {
    let m = pair.polytope().facet_count();
    let monomials = monomials_of_degree(m, degree);
    let count = monomials.len();
    let forms = z_vectors(pair)?;

    // Rational constraint rows: one per (vertex, u-monomial).
    let mut rows: BTreeMap<(usize, Vec<u32>), Vec<BigRational>> = BTreeMap::new();
    for (v, vertex_forms) in forms.iter().enumerate() {
        let images: Vec<Poly> = vertex_forms.iter().map(form_to_poly).collect();
        for (k, mono) in monomials.iter().enumerate() {
            let p = Poly::monomial(m, mono.clone(), BigRational::one());
            let g = p.substitute(&images);
            for (e, c) in g.terms() {
                rows.entry((v, e.clone()))
                    .or_insert_with(|| vec![BigRational::zero(); count])[k] = c.clone();
            }
        }
    }

    let mut denom = BigInt::one();
    for row in rows.values() {
        for c in row {
            denom = denom.lcm(c.denom());
        }
    }
    let int_rows: Vec<Vec<BigInt>> = rows
        .values()
        .map(|row| {
            row.iter()
                .map(|c| {
                    let scaled = c * BigRational::from_integer(denom.clone());
                    debug_assert!(scaled.is_integer());
                    scaled.to_integer()
                })
                .collect()
        })
        .collect();

    // Solve A c = 0 (mod D): with U A V = S diagonal, c = V y where each
    // y_i runs over multiples of D / gcd(s_i, D).
    let a = if int_rows.is_empty() {
        IntMatrix::zero(1, count)
    } else {
        IntMatrix::from_rows(int_rows.clone())?
    };
    let smith = a.smith_normal_form();
    let mut basis_rows = Vec::with_capacity(count);
    for i in 0..count {
        let s = if i < a.rows().min(a.cols()) {
            smith.s[(i, i)].clone()
        } else {
            BigInt::zero()
        };
        let step = &denom / s.gcd(&denom);
        let col = smith.v.col(i);
        basis_rows.push(col.into_iter().map(|x| x * &step).collect::<Vec<BigInt>>());
    }
    let (hnf, _) = IntMatrix::from_rows(basis_rows)?.hermite_normal_form();
    let basis: Vec<Vec<BigInt>> = (0..hnf.rows())
        .map(|r| hnf.row(r).to_vec())
        .filter(|row| row.iter().any(|x| !x.is_zero()))
        .collect();

    let clearing = (0..count)
        .map(|k| {
            let g = int_rows
                .iter()
                .fold(BigInt::zero(), |g, row| g.gcd(&row[k]));
            &denom / g.gcd(&denom)
        })
        .collect();

    Ok(GradedBasis { degree, monomials, basis, clearing })
}

/// Whether `c` lies in the row lattice of a Hermite-normal-form basis.
pub fn in_lattice(basis: &[Vec<BigInt>], c: &[BigInt]) -> bool {
    let mut rem = c.to_vec();
    for row in basis {
        let Some(pivot) = row.iter().position(|x| !x.is_zero()) else { continue };
        if rem[pivot].is_zero() {
            continue;
        }
        let (q, r) = rem[pivot].div_rem(&row[pivot]);
        if !r.is_zero() {
            return false;
        }
        for (j, x) in row.iter().enumerate() {
            let sub = &q * x;
            rem[j] -= sub;
        }
    }
    rem.iter().all(BigInt::is_zero)
}

/// Quotient presentation data, available only once the per-prime
/// certificates have been established.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub report: FormalityReport,
    /// Facet index sets of the face ideal generators.
    pub sr: Vec<Vec<usize>>,
    /// Coefficient rows of the linear relations.
    pub linear: Vec<Vec<BigInt>>,
    /// Graded member lattices in degrees 1 ..= the requested bound.
    pub graded: Vec<GradedBasis>,
}

/// Runs the certificate search and, when it certifies, assembles the
/// presentation with graded bases up to `max_degree`.
pub fn presentation(
    pair: &CharacteristicPair,
    budget: u64,
    max_degree: u32,
) -> Result<Presentation> {
    let report = formality(pair, budget)?;
    if !report.certified() {
        return Err(Error::Hypothesis(
            "per-prime retraction certificates could not be established".into(),
        ));
    }
    let graded = (1..=max_degree)
        .map(|d| graded_basis(pair, d))
        .collect::<Result<Vec<_>>>()?;
    Ok(Presentation {
        report,
        sr: sr_generators(pair),
        linear: linear_relations(pair),
        graded,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn rat2(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn poly_arithmetic() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let sq = x.add(&y).pow(2);
        assert_eq!(sq.terms().len(), 3);
        assert_eq!(sq.terms()[&vec![1, 1]], rat(2));
        assert_eq!(sq.total_degree(), 2);
        let zero = sq.add(&sq.scale(&rat(-1)));
        assert!(zero.is_zero());
    }

    #[test]
    fn substitute_composes() {
        // f(x, y) = x^2 + y, then x -> a + b, y -> ab.
        let f = Poly::var(2, 0).pow(2).add(&Poly::var(2, 1));
        let a = Poly::var(2, 0);
        let b = Poly::var(2, 1);
        let g = f.substitute(&[a.add(&b), a.mul(&b)]);
        // (a + b)^2 + ab = a^2 + 3ab + b^2.
        assert_eq!(g.terms()[&vec![1, 1]], rat(3));
        assert_eq!(g.terms().len(), 3);
    }

    #[test]
    fn smooth_pair_forms_are_integral() {
        let pair = fixtures::smooth_triangle_pair();
        let forms = z_vectors(&pair).unwrap();
        // Vertex v3 lies on F1 and F2 whose vectors are the standard
        // basis, so the forms are plain coordinates.
        assert_eq!(forms[2][0], vec![rat(0), rat(1), rat(0)]);
        assert_eq!(forms[2][1], vec![rat(0), rat(0), rat(1)]);
        assert_eq!(forms[2][2], vec![rat(0), rat(0), rat(0)]);
    }

    #[test]
    fn prism_forms_at_singular_vertex() {
        let pair = fixtures::prism_pair();
        let forms = z_vectors(&pair).unwrap();
        // At v1 (facets F1, F3, F4) the vertex matrix has determinant -2.
        assert_eq!(forms[0][0], vec![rat(0), rat(1), rat2(-1, 2), rat(0)]);
        assert_eq!(forms[0][2], vec![rat(0), rat(0), rat(-2), rat(1)]);
        assert_eq!(forms[0][3], vec![rat(0), rat(0), rat2(1, 2), rat(0)]);
        assert_eq!(forms[0][1], vec![rat(0); 4]);
    }

    #[test]
    fn linear_relations_substitute_to_coordinates() {
        for pair in [fixtures::prism_pair(), fixtures::weighted_projective_pair(&[1, 1, 2])] {
            let n = pair.polytope().dim();
            let forms = z_vectors(&pair).unwrap();
            for (j, rel) in linear_polys(&pair).iter().enumerate() {
                for vertex_forms in &forms {
                    let images: Vec<Poly> = vertex_forms.iter().map(form_to_poly).collect();
                    let got = rel.substitute(&images);
                    assert_eq!(got, Poly::var(n + 1, j + 1));
                }
            }
        }
    }

    #[test]
    fn sr_generators_substitute_to_zero() {
        let pair = fixtures::prism_pair();
        let forms = z_vectors(&pair).unwrap();
        for gen in sr_polys(&pair) {
            for vertex_forms in &forms {
                let images: Vec<Poly> = vertex_forms.iter().map(form_to_poly).collect();
                assert!(gen.substitute(&images).is_zero());
            }
        }
    }

    #[test]
    fn membership_witnesses_fractional_vertex() {
        let pair = fixtures::prism_pair();
        let m = pair.polytope().facet_count();
        // x4 alone fails at v1 with coefficient 1/2 on u2.
        let x4 = Poly::var(m, 3);
        let witness = check_membership(&pair, &x4).unwrap().unwrap();
        assert_eq!(witness.vertex, 0);
        assert_eq!(witness.coefficient, rat2(1, 2));
        // 2*x4 still fails, at v2 where the denominator is 4.
        let witness = check_membership(&pair, &x4.scale(&rat(2))).unwrap().unwrap();
        assert_eq!(witness.vertex, 1);
        // 4*x4 clears every vertex.
        assert!(check_membership(&pair, &x4.scale(&rat(4))).unwrap().is_none());
    }

    #[test]
    fn graded_basis_degree_one_prism() {
        let pair = fixtures::prism_pair();
        let gb = graded_basis(&pair, 1).unwrap();
        assert_eq!(gb.monomials.len(), 5);
        assert_eq!(gb.basis.len(), 5);
        // x4 is the fourth monomial in exponent order? Monomial order is
        // by exponent vector; find it explicitly.
        let x4_idx = gb.monomials.iter().position(|e| e == &vec![0, 0, 0, 1, 0]).unwrap();
        assert_eq!(gb.clearing[x4_idx], BigInt::from(4));
        // Every basis row really is a member.
        let m = pair.polytope().facet_count();
        for row in &gb.basis {
            let mut f = Poly::zero(m);
            for (k, c) in row.iter().enumerate() {
                f = f.add(&Poly::monomial(
                    m,
                    gb.monomials[k].clone(),
                    BigRational::from_integer(c.clone()),
                ));
            }
            assert!(check_membership(&pair, &f).unwrap().is_none());
        }
    }

    #[test]
    fn graded_basis_matches_membership_on_small_combinations(
    ) {
        let pair = fixtures::weighted_projective_pair(&[1, 1, 2]);
        let m = pair.polytope().facet_count();
        let gb = graded_basis(&pair, 2).unwrap();
        // Exhaustive box {0, 1, 2} over the first four monomials, zero
        // elsewhere: membership and the lattice must agree on every point.
        let n_mono = gb.monomials.len();
        let mut boxes: Vec<Vec<BigInt>> = Vec::new();
        for a in 0..3i64 {
            for b in 0..3i64 {
                for c in 0..3i64 {
                    for d in 0..3i64 {
                        let mut v: Vec<BigInt> =
                            vec![a.into(), b.into(), c.into(), d.into()];
                        v.resize(n_mono, BigInt::zero());
                        boxes.push(v);
                    }
                }
            }
        }
        for c in boxes {
            let mut f = Poly::zero(m);
            for (k, x) in c.iter().enumerate() {
                f = f.add(&Poly::monomial(
                    m,
                    gb.monomials[k].clone(),
                    BigRational::from_integer(x.clone()),
                ));
            }
            let member = check_membership(&pair, &f).unwrap().is_none();
            assert_eq!(member, in_lattice(&gb.basis, &c), "vector {c:?}");
        }
    }

    #[test]
    fn wedge_forms_match_direct_computation() {
        for (pair, facets) in [
            (fixtures::smooth_triangle_pair(), vec![0, 1, 2]),
            (fixtures::prism_pair(), vec![0, 3, 4]),
            (fixtures::weighted_projective_pair(&[1, 1, 2]), vec![0, 1, 2]),
        ] {
            for facet in facets {
                let (wedged, map) = pair.wedge_at(facet).unwrap();
                let direct = z_vectors(&wedged).unwrap();
                let via_base = wedge_z_vectors(&pair, facet, &map).unwrap();
                assert_eq!(direct, via_base, "facet {facet}");
            }
        }
    }

    #[test]
    fn presentation_requires_certificate() {
        let pres = presentation(&fixtures::prism_pair(), 100_000, 2).unwrap();
        assert_eq!(pres.sr.len(), 2);
        assert_eq!(pres.linear.len(), 3);
        assert_eq!(pres.graded.len(), 2);

        let err = presentation(&fixtures::even_pentagon_pair(), 1_000_000, 2).unwrap_err();
        assert!(matches!(err, Error::Hypothesis(_)));
    }

    #[test]
    fn lattice_membership_helper() {
        let basis = vec![
            vec![BigInt::from(2), BigInt::from(1)],
            vec![BigInt::from(0), BigInt::from(3)],
        ];
        assert!(in_lattice(&basis, &[BigInt::from(2), BigInt::from(1)]));
        assert!(in_lattice(&basis, &[BigInt::from(2), BigInt::from(4)]));
        assert!(in_lattice(&basis, &[BigInt::from(4), BigInt::from(5)]));
        assert!(!in_lattice(&basis, &[BigInt::from(1), BigInt::from(1)]));
        assert!(!in_lattice(&basis, &[BigInt::from(2), BigInt::from(2)]));
    }
}
