//! Combinatorial simple polytopes via vertex-facet incidence.
//!
//! A polytope of dimension `n` is stored as the list of facets each vertex
//! lies on; simplicity means every vertex lies on exactly `n` facets. Faces
//! are identified with the sets of facets containing them: the whole
//! polytope is the empty set, a codimension-k face is a realized k-set of
//! facet indices, and a vertex is its full incidence set. Validation checks
//! the combinatorial consequences of simplicity (each vertex has one edge
//! per dropped facet, realized sets are exactly the facet sets of their
//! faces, the graph is connected), which is what every construction here
//! relies on.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::complex::SimplicialComplex;
use crate::{Error, Result};

/// A face, named by the set of facets containing it. Empty set = the whole
/// polytope; a set of size `dim` = a vertex.
pub type FaceSet = BTreeSet<usize>;

/// Simple polytope given combinatorially.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytope {
    dim: usize,
    facet_labels: Vec<String>,
    vertex_labels: Vec<String>,
    vertex_facets: Vec<FaceSet>,
}

/// How the vertices of a wedge relate to the vertices of its base: every
/// base vertex has a `minus` copy, and a `plus` copy unless it lies on the
/// wedged facet.
#[derive(Debug, Clone)]
pub struct WedgeMap {
    pub facet: usize,
    pub pairs: Vec<(usize, Option<usize>)>,
}

impl Polytope {
    pub fn new(
        dim: usize,
        facet_labels: Vec<String>,
        vertex_labels: Vec<String>,
        vertex_facets: Vec<FaceSet>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Structural("polytopes of dimension zero are not supported".into()));
        }
        check_distinct(&facet_labels, "facet")?;
        check_distinct(&vertex_labels, "vertex")?;
        if vertex_labels.len() != vertex_facets.len() {
            return Err(Error::Structural(format!(
                "{} vertex labels for {} vertices",
                vertex_labels.len(),
                vertex_facets.len()
            )));
        }
        if vertex_facets.is_empty() {
            return Err(Error::Structural("a polytope needs at least one vertex".into()));
        }
        let m = facet_labels.len();
        for (v, s) in vertex_facets.iter().enumerate() {
            if s.len() != dim {
                return Err(Error::Structural(format!(
                    "vertex {} lies on {} facets, expected {}",
                    vertex_labels[v],
                    s.len(),
                    dim
                )));
            }
            if let Some(&f) = s.iter().find(|&&f| f >= m) {
                return Err(Error::Structural(format!(
                    "vertex {} refers to facet {} but there are only {}",
                    vertex_labels[v], f, m
                )));
            }
        }
        let distinct: BTreeSet<&FaceSet> = vertex_facets.iter().collect();
        if distinct.len() != vertex_facets.len() {
            return Err(Error::Structural("two vertices lie on the same facet set".into()));
        }
        let p = Self { dim, facet_labels, vertex_labels, vertex_facets };
        p.check_facets_realized()?;
        p.check_edges()?;
        p.check_realized_sets_canonical()?;
        p.check_connected()?;
        Ok(p)
    }

    fn check_facets_realized(&self) -> Result<()> {
        let mut seen = vec![false; self.facet_labels.len()];
        for s in &self.vertex_facets {
            for &f in s {
                seen[f] = true;
            }
        }
        match seen.iter().position(|&b| !b) {
            Some(f) => Err(Error::Structural(format!(
                "facet {} contains no vertex",
                self.facet_labels[f]
            ))),
            None => Ok(()),
        }
    }

    /// In a simple polytope a vertex has one edge per facet it drops, and
    /// each edge has exactly two endpoints.
    fn check_edges(&self) -> Result<()> {
        for (v, s) in self.vertex_facets.iter().enumerate() {
            for &drop in s {
                let mut edge = s.clone();
                edge.remove(&drop);
                let endpoints = self
                    .vertex_facets
                    .iter()
                    .filter(|t| edge.is_subset(t))
                    .count();
                if endpoints != 2 {
                    return Err(Error::Structural(format!(
                        "edge through vertex {} missing facet {} has {} endpoints, expected 2",
                        self.vertex_labels[v], self.facet_labels[drop], endpoints
                    )));
                }
            }
        }
        Ok(())
    }

    /// Every realized facet set must equal the full set of facets through
    /// its vertex set, otherwise the face poset is degenerate.
    fn check_realized_sets_canonical(&self) -> Result<()> {
        for s in self.realized_sets() {
            let mut common: Option<FaceSet> = None;
            for t in self.vertex_facets.iter().filter(|t| s.is_subset(t)) {
                common = Some(match common {
                    None => t.clone(),
                    Some(c) => c.intersection(t).copied().collect(),
                });
            }
            let common = common.expect("realized sets have a witness vertex");
            if common != s {
                return Err(Error::Structural(format!(
                    "facet set {:?} cuts out the same face as {:?}",
                    self.facet_names(&s),
                    self.facet_names(&common)
                )));
            }
        }
        Ok(())
    }

    fn check_connected(&self) -> Result<()> {
        let n = self.vertex_facets.len();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if !seen[v] && self.adjacent(u, v) {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        if seen.iter().all(|&b| b) {
            Ok(())
        } else {
            Err(Error::Structural("vertex-edge graph is disconnected".into()))
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facet_count(&self) -> usize {
        self.facet_labels.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_facets.len()
    }

    pub fn facet_labels(&self) -> &[String] {
        &self.facet_labels
    }

    pub fn facet_label(&self, f: usize) -> &str {
        &self.facet_labels[f]
    }

    pub fn facet_index(&self, label: &str) -> Option<usize> {
        self.facet_labels.iter().position(|l| l == label)
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertex_labels
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertex_labels[v]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertex_labels.iter().position(|l| l == label)
    }

    /// Facets through vertex `v`, ascending.
    pub fn vertex_facet_set(&self, v: usize) -> &FaceSet {
        &self.vertex_facets[v]
    }

    pub fn facet_names(&self, s: &FaceSet) -> Vec<String> {
        s.iter().map(|&f| self.facet_labels[f].clone()).collect()
    }

    /// Two vertices are adjacent when they share all but one facet.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v
            && self.vertex_facets[u]
                .intersection(&self.vertex_facets[v])
                .count()
                == self.dim - 1
    }

    /// Vertices lying on the face named by `s`.
    pub fn face_vertices(&self, s: &FaceSet) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| s.is_subset(&self.vertex_facets[v]))
            .collect()
    }

    pub fn is_face(&self, s: &FaceSet) -> bool {
        self.vertex_facets.iter().any(|t| s.is_subset(t))
    }

    pub fn face_dim(&self, s: &FaceSet) -> usize {
        self.dim - s.len()
    }

    fn realized_sets(&self) -> BTreeSet<FaceSet> {
        let mut out = BTreeSet::new();
        for s in &self.vertex_facets {
            let elems: Vec<usize> = s.iter().copied().collect();
            for mask in 0u64..(1 << elems.len()) {
                out.insert(
                    elems
                        .iter()
                        .enumerate()
                        .filter(|&(b, _)| mask >> b & 1 == 1)
                        .map(|(_, &f)| f)
                        .collect(),
                );
            }
        }
        out
    }

    /// All faces, from the whole polytope (empty set) down to the vertices,
    /// sorted by the face set.
    pub fn faces(&self) -> Vec<FaceSet> {
        self.realized_sets().into_iter().collect()
    }

    /// Face counts by dimension, ascending: `f[k]` is the number of
    /// k-dimensional faces, for `k < dim`.
    pub fn f_vector(&self) -> Vec<u64> {
        let mut f = vec![0u64; self.dim];
        for s in self.realized_sets() {
            if !s.is_empty() {
                f[self.dim - s.len()] += 1;
            }
        }
        f
    }

    /// Coefficients, ascending in degree, of the polynomial
    /// `sum_k f*_{k-1} (t-1)^{dim-k}` where `f*_{k-1}` counts the
    /// codimension-k faces and the whole polytope contributes the leading
    /// `(t-1)^dim` term.
    pub fn h_vector(&self) -> Result<Vec<u64>> {
        let mut by_codim = vec![0i128; self.dim + 1];
        for s in self.realized_sets() {
            by_codim[s.len()] += 1;
        }
        let mut h = vec![0i128; self.dim + 1];
        for (codim, &count) in by_codim.iter().enumerate() {
            // Add count * (t-1)^(dim-codim).
            let e = self.dim - codim;
            let mut binom: i128 = 1;
            for k in 0..=e {
                // binom = C(e, k), sign (-1)^(e-k).
                let sign = if (e - k) % 2 == 0 { 1 } else { -1 };
                h[k] += count * binom * sign;
                binom = binom * (e - k) as i128 / (k + 1) as i128;
            }
        }
        h.into_iter()
            .map(|c| {
                u64::try_from(c).map_err(|_| {
                    Error::Structural("incidence data has a negative h-vector entry".into())
                })
            })
            .collect()
    }

    /// Nerve of the facet cover: the simplicial complex on the facets whose
    /// faces are the facet sets with a common vertex. Minimal non-faces are
    /// found by breadth-first search over set sizes; none can exceed
    /// `dim + 1` elements.
    pub fn nerve(&self) -> SimplicialComplex {
        let m = self.facet_labels.len();
        let mut non_faces: Vec<BTreeSet<usize>> = Vec::new();
        let mut frontier: Vec<BTreeSet<usize>> = vec![BTreeSet::new()];
        for _size in 1..=(self.dim + 1).min(m) {
            let mut next = Vec::new();
            for s in frontier {
                let start = s.iter().next_back().map_or(0, |&f| f + 1);
                for f in start..m {
                    let mut t = s.clone();
                    t.insert(f);
                    if non_faces.iter().any(|g| g.is_subset(&t)) {
                        continue;
                    }
                    if self.is_face(&t) {
                        next.push(t);
                    } else {
                        non_faces.push(t);
                    }
                }
            }
            frontier = next;
        }
        SimplicialComplex::new(self.facet_labels.clone(), non_faces)
            .expect("nerve generators are minimal by construction")
    }

    /// Rebuilds a simple polytope from a complex that is the nerve of one:
    /// vertices are the maximal faces, which must all have the same size
    /// (the dimension), and every complex vertex must occur in one.
    /// Vertices are labelled `v1, v2, ..` in order of their facet sets.
    pub fn from_nerve(nerve: &SimplicialComplex) -> Result<Self> {
        let faces = nerve.all_faces()?;
        let face_set: BTreeSet<&BTreeSet<usize>> = faces.iter().collect();
        let maximal: Vec<&BTreeSet<usize>> = faces
            .iter()
            .filter(|f| {
                (0..nerve.vertex_count()).all(|u| {
                    if f.contains(&u) {
                        return true;
                    }
                    let mut g = (*f).clone();
                    g.insert(u);
                    !face_set.contains(&g)
                })
            })
            .collect();
        let dims: BTreeSet<usize> = maximal.iter().map(|f| f.len()).collect();
        if dims.len() != 1 {
            return Err(Error::Structural(format!(
                "nerve is not pure: maximal faces of sizes {dims:?}"
            )));
        }
        let dim = *dims.iter().next().expect("complex has at least the empty face");
        let mut vertex_facets: Vec<FaceSet> = maximal.into_iter().cloned().collect();
        vertex_facets.sort();
        let covered: BTreeSet<usize> = vertex_facets.iter().flatten().copied().collect();
        if covered.len() != nerve.vertex_count() {
            return Err(Error::Structural(
                "nerve has a vertex in no maximal face".into(),
            ));
        }
        Self::new(
            dim,
            nerve.labels().to_vec(),
            (1..=vertex_facets.len()).map(|i| format!("v{i}")).collect(),
            vertex_facets,
        )
    }

    /// A face as a polytope in its own right. Its facets are the nonempty
    /// intersections with the facets not containing the face, keeping their
    /// labels and relative order; vertices keep their labels. Also returns
    /// the map from new facet indices to original ones.
    pub fn face_polytope(&self, face: &FaceSet) -> Result<(Self, Vec<usize>)> {
        if !self.is_face(face) {
            return Err(Error::Structural(format!(
                "{:?} is not a face",
                self.facet_names(face)
            )));
        }
        if face.len() >= self.dim {
            return Err(Error::Structural(
                "a vertex has no facets; its face polytope is not defined".into(),
            ));
        }
        let verts = self.face_vertices(face);
        let kept: Vec<usize> = (0..self.facet_labels.len())
            .filter(|f| !face.contains(f))
            .filter(|&f| verts.iter().any(|&v| self.vertex_facets[v].contains(&f)))
            .collect();
        let rank: BTreeMap<usize, usize> =
            kept.iter().enumerate().map(|(r, &f)| (f, r)).collect();
        let vertex_facets = verts
            .iter()
            .map(|&v| {
                self.vertex_facets[v]
                    .iter()
                    .filter(|f| !face.contains(f))
                    .map(|f| rank[f])
                    .collect()
            })
            .collect();
        let p = Self::new(
            self.dim - face.len(),
            kept.iter().map(|&f| self.facet_labels[f].clone()).collect(),
            verts.iter().map(|&v| self.vertex_labels[v].clone()).collect(),
            vertex_facets,
        )?;
        Ok((p, kept))
    }

    /// Wedge over a single facet `X = F_i`. The result has dimension
    /// `dim + 1` and facets, in order: the second copy `X_2`, then the
    /// original facets with the first copy `X_1` in place of `F_i`. Each
    /// base vertex off `F_i` produces two vertices (labels suffixed `+` and
    /// `-`, on `X_2` resp. `X_1`); each vertex on `F_i` produces one vertex
    /// on both copies (suffixed `-`).
    pub fn wedge_at(&self, facet: usize) -> Result<(Self, WedgeMap)> {
        let m = self.facet_labels.len();
        if facet >= m {
            return Err(Error::Structural(format!("no facet {facet} to wedge at")));
        }
        let x = &self.facet_labels[facet];
        let mut facet_labels = Vec::with_capacity(m + 1);
        facet_labels.push(format!("{x}_2"));
        for (f, l) in self.facet_labels.iter().enumerate() {
            facet_labels.push(if f == facet { format!("{x}_1") } else { l.clone() });
        }
        // Old facet f sits at new index f + 1; X_2 is new index 0 and X_1
        // is new index facet + 1.
        let plus_copy = 0usize;
        let minus_copy = facet + 1;

        let mut vertex_labels = Vec::new();
        let mut vertex_facets: Vec<FaceSet> = Vec::new();
        let mut pairs = Vec::with_capacity(self.vertex_count());
        for (v, s) in self.vertex_facets.iter().enumerate() {
            let rest: FaceSet = s.iter().filter(|&&f| f != facet).map(|&f| f + 1).collect();
            if s.contains(&facet) {
                let mut t = rest;
                t.insert(plus_copy);
                t.insert(minus_copy);
                vertex_labels.push(format!("{}-", self.vertex_labels[v]));
                vertex_facets.push(t);
                pairs.push((vertex_facets.len() - 1, None));
            } else {
                let mut plus = rest.clone();
                plus.insert(plus_copy);
                let mut minus = rest;
                minus.insert(minus_copy);
                vertex_labels.push(format!("{}+", self.vertex_labels[v]));
                vertex_facets.push(plus);
                let plus_index = vertex_facets.len() - 1;
                vertex_labels.push(format!("{}-", self.vertex_labels[v]));
                vertex_facets.push(minus);
                pairs.push((vertex_facets.len() - 1, Some(plus_index)));
            }
        }
        let p = Self::new(self.dim + 1, facet_labels, vertex_labels, vertex_facets)?;
        Ok((p, WedgeMap { facet, pairs }))
    }

    /// Iterated wedge: facet `i` is replaced by a block of `j[i]` copies,
    /// ordered as in the simplicial wedge (higher copies block by block,
    /// then all first copies). A vertex of the result is a base vertex `v`
    /// together with a choice, for every facet block missed by `v`, of one
    /// copy to stay off; it lies on all copies in the blocks of its facets
    /// and on all but the chosen copy elsewhere.
    pub fn wedge(&self, j: &[u32]) -> Result<Self> {
        let m = self.facet_labels.len();
        if j.len() != m {
            return Err(Error::Structural(format!(
                "wedge vector has {} entries for {} facets",
                j.len(),
                m
            )));
        }
        if j.iter().any(|&ji| ji == 0) {
            return Err(Error::Structural("wedge multiplicities must be positive".into()));
        }
        let mut order: Vec<(usize, u32)> = Vec::new();
        for (i, &ji) in j.iter().enumerate() {
            for t in 2..=ji {
                order.push((i, t));
            }
        }
        for i in 0..m {
            order.push((i, 1));
        }
        let mut position = BTreeMap::new();
        let mut facet_labels = Vec::with_capacity(order.len());
        for (pos, &(i, t)) in order.iter().enumerate() {
            position.insert((i, t), pos);
            if j[i] == 1 {
                facet_labels.push(self.facet_labels[i].clone());
            } else {
                facet_labels.push(format!("{}_{}", self.facet_labels[i], t));
            }
        }
        let new_dim = self.dim + j.iter().map(|&ji| ji as usize - 1).sum::<usize>();

        let mut vertex_labels = Vec::new();
        let mut vertex_facets = Vec::new();
        for (v, s) in self.vertex_facets.iter().enumerate() {
            let missed: Vec<usize> = (0..m).filter(|i| !s.contains(i)).collect();
            // Mixed-radix enumeration of the excluded copy per missed block.
            let mut choice: Vec<u32> = vec![1; missed.len()];
            loop {
                let mut t: FaceSet = FaceSet::new();
                for &i in s {
                    for c in 1..=j[i] {
                        t.insert(position[&(i, c)]);
                    }
                }
                let mut name_parts = Vec::new();
                for (k, &i) in missed.iter().enumerate() {
                    for c in 1..=j[i] {
                        if c != choice[k] {
                            t.insert(position[&(i, c)]);
                        }
                    }
                    if j[i] >= 2 {
                        name_parts.push(format!("{}:{}", self.facet_labels[i], choice[k]));
                    }
                }
                let label = if name_parts.is_empty() {
                    self.vertex_labels[v].clone()
                } else {
                    format!("{}({})", self.vertex_labels[v], name_parts.join(","))
                };
                debug_assert_eq!(t.len(), new_dim);
                vertex_labels.push(label);
                vertex_facets.push(t);

                // Advance the counter.
                let mut k = 0;
                loop {
                    if k == missed.len() {
                        break;
                    }
                    choice[k] += 1;
                    if choice[k] <= j[missed[k]] {
                        break;
                    }
                    choice[k] = 1;
                    k += 1;
                }
                if k == missed.len() {
                    break;
                }
            }
        }
        Self::new(new_dim, facet_labels, vertex_labels, vertex_facets)
    }
}

fn check_distinct(labels: &[String], what: &str) -> Result<()> {
    let mut seen = BTreeSet::new();
    for l in labels {
        if l.is_empty() {
            return Err(Error::Structural(format!("empty {what} label")));
        }
        if !seen.insert(l) {
            return Err(Error::Structural(format!("duplicate {what} label {l:?}")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> FaceSet {
        xs.iter().copied().collect()
    }

    fn labels(prefix: &str, n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("{prefix}{i}")).collect()
    }

    /// Triangular prism: F1, F2, F3 the square sides, F4 the top triangle,
    /// F5 the bottom.
    pub(crate) fn prism() -> Polytope {
        Polytope::new(
            3,
            labels("F", 5),
            labels("v", 6),
            vec![
                set(&[0, 2, 3]),
                set(&[0, 1, 3]),
                set(&[1, 2, 3]),
                set(&[0, 2, 4]),
                set(&[0, 1, 4]),
                set(&[1, 2, 4]),
            ],
        )
        .unwrap()
    }

    fn pentagon() -> Polytope {
        // Edges F1..F5 in cyclic order; vertex vi joins F(i-1) and Fi.
        Polytope::new(
            2,
            labels("F", 5),
            labels("v", 5),
            vec![set(&[0, 4]), set(&[0, 1]), set(&[1, 2]), set(&[2, 3]), set(&[3, 4])],
        )
        .unwrap()
    }

    fn cube() -> Polytope {
        // Facet pairs (F1, F4), (F2, F5), (F3, F6) are opposite.
        let verts = (0..8)
            .map(|b| {
                set(&[
                    if b & 1 == 0 { 0 } else { 3 },
                    if b & 2 == 0 { 1 } else { 4 },
                    if b & 4 == 0 { 2 } else { 5 },
                ])
            })
            .collect();
        Polytope::new(3, labels("F", 6), labels("v", 8), verts).unwrap()
    }

    fn simplex(n: usize) -> Polytope {
        let verts = (0..=n)
            .map(|v| (0..=n).filter(|&f| f != v).collect())
            .collect();
        Polytope::new(n, labels("F", n + 1), labels("v", n + 1), verts).unwrap()
    }

    #[test]
    fn rejects_non_simple_incidence() {
        // A vertex on two facets in a 3-polytope.
        assert!(Polytope::new(
            3,
            labels("F", 4),
            labels("v", 2),
            vec![set(&[0, 1]), set(&[0, 1, 2])],
        )
        .is_err());
        // Ghost facet: F4 has no vertex.
        assert!(Polytope::new(
            2,
            labels("F", 4),
            labels("v", 3),
            vec![set(&[0, 1]), set(&[1, 2]), set(&[0, 2])],
        )
        .is_err());
    }

    #[test]
    fn f_and_h_vectors() {
        assert_eq!(prism().f_vector(), vec![6, 9, 5]);
        assert_eq!(prism().h_vector().unwrap(), vec![1, 2, 2, 1]);
        assert_eq!(pentagon().f_vector(), vec![5, 5]);
        assert_eq!(pentagon().h_vector().unwrap(), vec![1, 3, 1]);
        assert_eq!(simplex(3).h_vector().unwrap(), vec![1, 1, 1, 1]);
        assert_eq!(cube().h_vector().unwrap(), vec![1, 3, 3, 1]);
    }

    #[test]
    fn prism_nerve_non_faces() {
        let nerve = prism().nerve();
        assert_eq!(
            nerve.minimal_non_faces().to_vec(),
            vec![set(&[0, 1, 2]), set(&[3, 4])]
        );
    }

    #[test]
    fn cube_nerve_non_faces() {
        let nerve = cube().nerve();
        assert_eq!(
            nerve.minimal_non_faces().to_vec(),
            vec![set(&[0, 3]), set(&[1, 4]), set(&[2, 5])]
        );
    }

    #[test]
    fn from_nerve_round_trip() {
        for p in [prism(), pentagon(), cube(), simplex(3)] {
            let q = Polytope::from_nerve(&p.nerve()).unwrap();
            assert_eq!(q.dim(), p.dim());
            assert_eq!(q.facet_labels().to_vec(), p.facet_labels().to_vec());
            let mut a: Vec<FaceSet> = p.vertex_facets.clone();
            a.sort();
            let mut b: Vec<FaceSet> = q.vertex_facets.clone();
            b.sort();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn from_nerve_rejects_impure() {
        // A triangle with a pendant edge: maximal faces of sizes 3 and 2.
        let k = SimplicialComplex::new(
            labels("F", 4),
            vec![set(&[0, 3]), set(&[1, 3])],
        )
        .unwrap();
        assert!(Polytope::from_nerve(&k).is_err());
    }

    #[test]
    fn face_polytope_of_prism_top_is_triangle() {
        let p = prism();
        let (top, kept) = p.face_polytope(&set(&[3])).unwrap();
        assert_eq!(top.dim(), 2);
        assert_eq!(kept, vec![0, 1, 2]);
        assert_eq!(top.vertex_count(), 3);
        assert_eq!(top.facet_labels().to_vec(), labels("F", 3));
        assert_eq!(
            top.vertex_labels().to_vec(),
            vec!["v1".to_string(), "v2".into(), "v3".into()]
        );
    }

    #[test]
    fn wedge_at_counts_and_labels() {
        let p = pentagon();
        let (w, map) = p.wedge_at(0).unwrap();
        assert_eq!(w.dim(), 3);
        // 2 * 5 - |V(F1)| = 10 - 2 = 8 vertices.
        assert_eq!(w.vertex_count(), 8);
        assert_eq!(
            w.facet_labels().to_vec(),
            ["F1_2", "F1_1", "F2", "F3", "F4", "F5"].map(String::from).to_vec()
        );
        assert_eq!(map.pairs.len(), 5);
        // v1 and v2 lie on F1, so they have no plus copy.
        assert!(map.pairs[0].1.is_none());
        assert!(map.pairs[1].1.is_none());
        assert!(map.pairs[2].1.is_some());
        // Vertices on F1 lie on both copies.
        let v1m = map.pairs[0].0;
        assert!(w.vertex_facet_set(v1m).contains(&0));
        assert!(w.vertex_facet_set(v1m).contains(&1));
    }

    #[test]
    fn wedge_matches_iterated_wedge_at() {
        let p = pentagon();
        let (w1, _) = p.wedge_at(0).unwrap();
        let w2 = p.wedge(&[2, 1, 1, 1, 1]).unwrap();
        assert_eq!(w1.dim(), w2.dim());
        assert_eq!(w1.facet_labels().to_vec(), w2.facet_labels().to_vec());
        let mut a = w1.vertex_facets.clone();
        a.sort();
        let mut b = w2.vertex_facets.clone();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn wedge_then_nerve_is_nerve_then_wedge() {
        let p = prism();
        for f in 0..p.facet_count() {
            let (w, _) = p.wedge_at(f).unwrap();
            assert_eq!(w.nerve(), p.nerve().wedge_at(f).unwrap());
        }
    }
}
