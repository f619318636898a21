//! Abstract simplicial complexes presented by their minimal non-faces.
//!
//! A complex on vertices `0..n` is stored as the antichain of minimal
//! non-faces; every singleton is a face, so generators have size at least
//! two. This presentation makes the wedge operation a pure rewriting of
//! generators: each minimal non-face inflates to the union of the vertex
//! blocks it touches.

use std::collections::BTreeSet;

use crate::{Error, Result};

/// Simplicial complex with labelled vertices, presented by minimal
/// non-faces. Generators are kept sorted, so equal complexes compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    minimal_non_faces: Vec<BTreeSet<usize>>,
}

/// Largest vertex count for which exhaustive face enumeration is allowed.
const MAX_ENUM_VERTICES: usize = 22;

impl SimplicialComplex {
    /// Builds a complex from an antichain of minimal non-faces. Labels must
    /// be distinct and nonempty; generators must have size at least two and
    /// must not contain one another.
    pub fn new(labels: Vec<String>, minimal_non_faces: Vec<BTreeSet<usize>>) -> Result<Self> {
        check_labels(&labels)?;
        let n = labels.len();
        let mut gens = minimal_non_faces;
        gens.sort();
        gens.dedup();
        for g in &gens {
            if g.len() < 2 {
                return Err(Error::Structural(format!(
                    "non-face generator {g:?} has fewer than two vertices"
                )));
            }
            if let Some(&v) = g.iter().find(|&&v| v >= n) {
                return Err(Error::Structural(format!(
                    "non-face generator refers to vertex {v} but there are only {n} vertices"
                )));
            }
        }
        for (a, ga) in gens.iter().enumerate() {
            for gb in gens.iter().skip(a + 1) {
                if ga.is_subset(gb) || gb.is_subset(ga) {
                    return Err(Error::Structural(format!(
                        "non-face generators {ga:?} and {gb:?} are nested; not an antichain"
                    )));
                }
            }
        }
        Ok(Self { labels, minimal_non_faces: gens })
    }

    /// Builds a complex from arbitrary non-face generators by discarding the
    /// non-minimal ones first.
    pub fn from_non_face_generators(
        labels: Vec<String>,
        generators: Vec<BTreeSet<usize>>,
    ) -> Result<Self> {
        Self::new(labels, antichain_minimize(generators))
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn minimal_non_faces(&self) -> &[BTreeSet<usize>] {
        &self.minimal_non_faces
    }

    /// A set is a face exactly when it contains no minimal non-face.
    pub fn is_face(&self, set: &BTreeSet<usize>) -> bool {
        set.iter().all(|&v| v < self.labels.len())
            && self.minimal_non_faces.iter().all(|g| !g.is_subset(set))
    }

    /// Simplicial wedge: vertex `i` is replaced by a block of `j[i]`
    /// copies and every minimal non-face inflates to the union of the
    /// blocks of its vertices.
    ///
    /// The new vertex order lists the higher copies first, block by block,
    /// then all first copies: `(w_{1,2}.. w_{1,j_1}, w_{2,2}.., ...,
    /// w_{1,1}, w_{2,1}, ..)`. A vertex with `j[i] == 1` keeps its label;
    /// one with `j[i] >= 2` labelled `X` yields copies `X_1 .. X_{j_i}`.
    pub fn wedge(&self, j: &[u32]) -> Result<Self> {
        let n = self.labels.len();
        if j.len() != n {
            return Err(Error::Structural(format!(
                "wedge vector has {} entries for {} vertices",
                j.len(),
                n
            )));
        }
        if j.iter().any(|&ji| ji == 0) {
            return Err(Error::Structural("wedge multiplicities must be positive".into()));
        }
        // position[(i, t)] for t in 1..=j[i], in the block-first order.
        let mut order: Vec<(usize, u32)> = Vec::new();
        for (i, &ji) in j.iter().enumerate() {
            for t in 2..=ji {
                order.push((i, t));
            }
        }
        for i in 0..n {
            order.push((i, 1));
        }
        let mut position = std::collections::BTreeMap::new();
        let mut labels = Vec::with_capacity(order.len());
        for (pos, &(i, t)) in order.iter().enumerate() {
            position.insert((i, t), pos);
            if j[i] == 1 {
                labels.push(self.labels[i].clone());
            } else {
                labels.push(format!("{}_{}", self.labels[i], t));
            }
        }
        let gens = self
            .minimal_non_faces
            .iter()
            .map(|g| {
                let mut inflated = BTreeSet::new();
                for &i in g {
                    for t in 1..=j[i] {
                        inflated.insert(position[&(i, t)]);
                    }
                }
                inflated
            })
            .collect();
        // Inflation preserves the antichain property, but the derived labels
        // could collide with pre-existing ones; `new` re-checks both.
        Self::new(labels, gens)
    }

    /// Wedge that doubles a single vertex.
    pub fn wedge_at(&self, vertex: usize) -> Result<Self> {
        if vertex >= self.labels.len() {
            return Err(Error::Structural(format!("no vertex {vertex} to wedge at")));
        }
        let mut j = vec![1u32; self.labels.len()];
        j[vertex] = 2;
        self.wedge(&j)
    }

    /// Link of a vertex: faces `S` with `S + w` still a face, on the
    /// vertices joined to `w` by an edge.
    pub fn link(&self, w: usize) -> Result<Self> {
        if w >= self.labels.len() {
            return Err(Error::Structural(format!("no vertex {w} to take the link of")));
        }
        let carrier: Vec<usize> = (0..self.labels.len())
            .filter(|&u| u != w && self.is_face(&BTreeSet::from([u, w])))
            .collect();
        let rank: std::collections::BTreeMap<usize, usize> =
            carrier.iter().enumerate().map(|(r, &u)| (u, r)).collect();
        let gens = self
            .minimal_non_faces
            .iter()
            .filter_map(|g| {
                let trimmed: BTreeSet<usize> = g.iter().copied().filter(|&u| u != w).collect();
                trimmed
                    .iter()
                    .all(|u| rank.contains_key(u))
                    .then(|| trimmed.iter().map(|u| rank[u]).collect::<BTreeSet<usize>>())
            })
            .collect();
        Self::from_non_face_generators(
            carrier.iter().map(|&u| self.labels[u].clone()).collect(),
            gens,
        )
    }

    /// Deletion of a vertex: faces not touching `w`, on the remaining
    /// vertices. Minimal non-faces are exactly the ones avoiding `w`.
    pub fn delete(&self, w: usize) -> Result<Self> {
        if w >= self.labels.len() {
            return Err(Error::Structural(format!("no vertex {w} to delete")));
        }
        let keep: Vec<usize> = (0..self.labels.len()).filter(|&u| u != w).collect();
        let rank: std::collections::BTreeMap<usize, usize> =
            keep.iter().enumerate().map(|(r, &u)| (u, r)).collect();
        let gens = self
            .minimal_non_faces
            .iter()
            .filter(|g| !g.contains(&w))
            .map(|g| g.iter().map(|u| rank[u]).collect())
            .collect();
        Self::new(keep.iter().map(|&u| self.labels[u].clone()).collect(), gens)
    }

    /// Join of two complexes on disjoint label sets: faces are unions of a
    /// face of each factor, so the minimal non-faces are simply pooled.
    pub fn join(&self, other: &Self) -> Result<Self> {
        let shift = self.labels.len();
        let labels: Vec<String> =
            self.labels.iter().chain(other.labels.iter()).cloned().collect();
        let gens = self
            .minimal_non_faces
            .iter()
            .cloned()
            .chain(
                other
                    .minimal_non_faces
                    .iter()
                    .map(|g| g.iter().map(|&u| u + shift).collect()),
            )
            .collect();
        Self::new(labels, gens)
    }

    /// Every face, including the empty one. Exhaustive, so only permitted
    /// for small vertex counts.
    pub fn all_faces(&self) -> Result<Vec<BTreeSet<usize>>> {
        let n = self.labels.len();
        if n > MAX_ENUM_VERTICES {
            return Err(Error::Structural(format!(
                "refusing to enumerate faces of a complex on {n} vertices"
            )));
        }
        let masks: Vec<u64> = self
            .minimal_non_faces
            .iter()
            .map(|g| g.iter().fold(0u64, |m, &v| m | (1 << v)))
            .collect();
        let mut out = Vec::new();
        for set in 0u64..(1 << n) {
            if masks.iter().all(|&g| g & set != g) {
                out.push((0..n).filter(|&v| set >> v & 1 == 1).collect());
            }
        }
        Ok(out)
    }

    /// Faces as sets of labels, for comparisons across different vertex
    /// numberings.
    pub fn faces_by_label(&self) -> Result<BTreeSet<BTreeSet<String>>> {
        Ok(self
            .all_faces()?
            .into_iter()
            .map(|f| f.iter().map(|&v| self.labels[v].clone()).collect())
            .collect())
    }
}

/// Keeps the inclusion-minimal sets of a family.
pub fn antichain_minimize(mut sets: Vec<BTreeSet<usize>>) -> Vec<BTreeSet<usize>> {
    sets.sort();
    sets.dedup();
    let keep: Vec<bool> = sets
        .iter()
        .map(|s| !sets.iter().any(|t| t != s && t.is_subset(s)))
        .collect();
    sets.into_iter().zip(keep).filter_map(|(s, k)| k.then_some(s)).collect()
}

fn check_labels(labels: &[String]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for l in labels {
        if l.is_empty() {
            return Err(Error::Structural("empty vertex label".into()));
        }
        if !seen.insert(l) {
            return Err(Error::Structural(format!("duplicate label {l:?}")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    fn named(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("F{i}")).collect()
    }

    /// Boundary of the pentagon: cyclic 5-gon, non-faces are the diagonals.
    fn pentagon() -> SimplicialComplex {
        SimplicialComplex::new(
            named(5),
            vec![set(&[0, 2]), set(&[0, 3]), set(&[1, 3]), set(&[1, 4]), set(&[2, 4])],
        )
        .unwrap()
    }

    #[test]
    fn rejects_bad_generators() {
        assert!(SimplicialComplex::new(named(3), vec![set(&[0])]).is_err());
        assert!(SimplicialComplex::new(named(3), vec![set(&[0, 3])]).is_err());
        assert!(
            SimplicialComplex::new(named(3), vec![set(&[0, 1]), set(&[0, 1, 2])]).is_err()
        );
        assert!(SimplicialComplex::new(vec!["a".into(), "a".into()], vec![]).is_err());
    }

    #[test]
    fn wedge_inflates_generators() {
        let k = pentagon();
        let w = k.wedge(&[2, 1, 1, 1, 1]).unwrap();
        assert_eq!(w.vertex_count(), 6);
        let want: Vec<String> =
            ["F1_2", "F1_1", "F2", "F3", "F4", "F5"].map(String::from).to_vec();
        assert_eq!(w.labels().to_vec(), want);
        // {F1, F3} inflates to {F1_2, F1_1, F3}; {F2, F4} is untouched.
        assert!(w.minimal_non_faces().contains(&set(&[0, 1, 3])));
        assert!(w.minimal_non_faces().contains(&set(&[2, 4])));
        assert_eq!(w.minimal_non_faces().len(), 5);
    }

    #[test]
    fn wedge_needs_positive_multiplicities() {
        assert!(pentagon().wedge(&[0, 1, 1, 1, 1]).is_err());
        assert!(pentagon().wedge(&[1, 1]).is_err());
    }

    #[test]
    fn link_and_delete_on_pentagon() {
        let k = pentagon();
        // Link of F1: neighbours F2, F5, no relations between them.
        let l = k.link(0).unwrap();
        assert_eq!(l.labels().to_vec(), ["F2", "F5"].map(String::from).to_vec());
        assert_eq!(l.minimal_non_faces().to_vec(), vec![set(&[0, 1])]);
        // Deletion of F1: path F2-F3-F4-F5.
        let d = k.delete(0).unwrap();
        assert_eq!(d.vertex_count(), 4);
        assert_eq!(
            d.minimal_non_faces().to_vec(),
            vec![set(&[0, 2]), set(&[0, 3]), set(&[1, 3])]
        );
    }

    /// The wedge at w decomposes as (edge on w_1 w_2) * link(w) union
    /// (two points w_1, w_2) * delete(w).
    fn check_wedge_decomposition(k: &SimplicialComplex, w: usize) {
        let lhs = k.wedge_at(w).unwrap().faces_by_label().unwrap();

        let x = k.label(w);
        let copies = vec![format!("{x}_1"), format!("{x}_2")];
        let edge = SimplicialComplex::new(copies.clone(), vec![]).unwrap();
        let two_points = SimplicialComplex::new(copies, vec![set(&[0, 1])]).unwrap();

        let mut rhs = edge.join(&k.link(w).unwrap()).unwrap().faces_by_label().unwrap();
        rhs.extend(two_points.join(&k.delete(w).unwrap()).unwrap().faces_by_label().unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn wedge_decomposition_on_pentagon() {
        for w in 0..5 {
            check_wedge_decomposition(&pentagon(), w);
        }
    }

    fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
        (3usize..=6).prop_flat_map(|n| {
            let gen = proptest::collection::btree_set(0..n, 2..=3.min(n));
            proptest::collection::vec(gen, 0..=4).prop_map(move |gens| {
                SimplicialComplex::from_non_face_generators(named(n), gens).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn wedge_vertex_count_is_multiplicity_sum(k in arb_complex(), seed in 0u32..1000) {
            let j: Vec<u32> = (0..k.vertex_count())
                .map(|i| 1 + (seed >> i) % 3)
                .collect();
            let w = k.wedge(&j).unwrap();
            prop_assert_eq!(w.vertex_count(), j.iter().sum::<u32>() as usize);
            prop_assert_eq!(w.minimal_non_faces().len(), k.minimal_non_faces().len());
        }

        #[test]
        fn wedge_decomposition_holds(k in arb_complex(), w_raw in 0usize..6) {
            let w = w_raw % k.vertex_count();
            check_wedge_decomposition(&k, w);
        }

        #[test]
        fn deletion_faces_are_faces_avoiding_vertex(k in arb_complex(), w_raw in 0usize..6) {
            let w = w_raw % k.vertex_count();
            let d = k.delete(w).unwrap();
            let expected: BTreeSet<_> = k
                .faces_by_label()
                .unwrap()
                .into_iter()
                .filter(|f| !f.contains(k.label(w)))
                .collect();
            prop_assert_eq!(d.faces_by_label().unwrap(), expected);
        }
    }
}
