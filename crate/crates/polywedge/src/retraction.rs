//! Retraction sequences: vertex-by-vertex collapses of a simple polytope.
//!
//! Starting from all faces of the polytope, a step picks a free vertex
//! (one with a unique maximal surviving face among the faces containing
//! it), records that face, and discards every face through the vertex. The
//! remaining faces must stay connected through edges. A full sequence
//! removes every vertex; its first face is always the whole polytope, and
//! the count of recorded faces per dimension reproduces the h-vector.
//!
//! For a characteristic pair, a sequence avoiding a prime `p` is one whose
//! recorded faces have local group order coprime to `p` at the removed
//! vertex. One such sequence per prime dividing some vertex order
//! certifies that the orders impose no `p`-torsion obstruction. The
//! searches here are exhaustive with memoized dead states, so a negative
//! answer within budget really means no sequence exists.

use std::collections::{BTreeMap, BTreeSet};

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use crate::charpair::CharacteristicPair;
use crate::linalg::{saturation_projection, IntMatrix, IntVector};
use crate::polytope::{FaceSet, Polytope, WedgeMap};
use crate::{Error, Result};

/// One collapse step: the removed vertex and its maximal face at the time
/// of removal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RetractionStep {
    pub vertex: usize,
    pub face: FaceSet,
}

/// A complete collapse of the polytope, one step per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RetractionSequence {
    pub steps: Vec<RetractionStep>,
}

impl RetractionSequence {
    pub fn vertex_order(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.vertex).collect()
    }

    /// Number of recorded faces of each dimension, ascending from 0 to the
    /// polytope dimension.
    pub fn census(&self, poly: &Polytope) -> Vec<u64> {
        let mut counts = vec![0u64; poly.dim() + 1];
        for s in &self.steps {
            counts[poly.dim() - s.face.len()] += 1;
        }
        counts
    }
}

/// Result of an exhaustive bounded search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(RetractionSequence),
    /// The whole search space was explored; no sequence exists.
    Exhausted,
    /// The node expansion budget ran out before the space was covered.
    BudgetExceeded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InconclusiveReason {
    BudgetExhausted,
    SearchExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimeStatus {
    Certified(RetractionSequence),
    Inconclusive(InconclusiveReason),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeCertificate {
    pub prime: BigInt,
    pub status: PrimeStatus,
}

/// Outcome of the per-prime certificate search. `certified` holds exactly
/// when a base sequence exists and every relevant prime has one avoiding
/// it; a negative can only be reported as inconclusive, with the reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalityReport {
    pub base: SearchOutcome,
    pub primes: Vec<PrimeCertificate>,
}

impl FormalityReport {
    pub fn certified(&self) -> bool {
        matches!(self.base, SearchOutcome::Found(_))
            && self
                .primes
                .iter()
                .all(|c| matches!(c.status, PrimeStatus::Certified(_)))
    }
}

/// Collapse state: which vertices remain, against the fixed face list.
struct State<'a> {
    poly: &'a Polytope,
    /// Every face of the polytope with its vertex list.
    faces: Vec<(FaceSet, Vec<usize>)>,
    removed: Vec<bool>,
    remaining: usize,
}

impl<'a> State<'a> {
    fn new(poly: &'a Polytope) -> Self {
        let faces = poly
            .faces()
            .into_iter()
            .map(|f| {
                let verts = poly.face_vertices(&f);
                (f, verts)
            })
            .collect();
        Self {
            poly,
            faces,
            removed: vec![false; poly.vertex_count()],
            remaining: poly.vertex_count(),
        }
    }

    fn survives(&self, idx: usize) -> bool {
        self.faces[idx].1.iter().all(|&v| !self.removed[v])
    }

    /// The unique maximal surviving face through `v`, if there is one.
    /// Faces are ordered by reverse inclusion of facet sets, so this is
    /// the unique minimal facet set among surviving candidates.
    fn free_face(&self, v: usize) -> Option<FaceSet> {
        if self.removed[v] {
            return None;
        }
        let candidates: Vec<&FaceSet> = (0..self.faces.len())
            .filter(|&idx| {
                self.faces[idx].0.is_subset(self.poly.vertex_facet_set(v)) && self.survives(idx)
            })
            .map(|idx| &self.faces[idx].0)
            .collect();
        let mut minimal = candidates
            .iter()
            .filter(|&&f| !candidates.iter().any(|&g| g != f && g.is_subset(f)));
        match (minimal.next(), minimal.next()) {
            (Some(&only), None) => Some(only.clone()),
            _ => None,
        }
    }

    /// Whether the remaining vertices minus `v` form a connected graph
    /// through the surviving edges (which are exactly the edges with both
    /// endpoints remaining).
    fn connected_without(&self, v: usize) -> bool {
        let keep: Vec<usize> = (0..self.poly.vertex_count())
            .filter(|&u| !self.removed[u] && u != v)
            .collect();
        is_connected(self.poly, &keep)
    }

    fn remove(&mut self, v: usize) {
        debug_assert!(!self.removed[v]);
        self.removed[v] = true;
        self.remaining -= 1;
    }

    fn restore(&mut self, v: usize) {
        debug_assert!(self.removed[v]);
        self.removed[v] = false;
        self.remaining += 1;
    }

    fn mask(&self) -> u128 {
        self.removed
            .iter()
            .enumerate()
            .fold(0u128, |m, (v, &r)| if r { m | (1 << v) } else { m })
    }
}

/// Connectivity of the induced subgraph on `keep` under polytope
/// adjacency. The empty set and singletons count as connected.
pub(crate) fn is_connected(poly: &Polytope, keep: &[usize]) -> bool {
    if keep.len() <= 1 {
        return true;
    }
    let mut seen: BTreeSet<usize> = BTreeSet::from([keep[0]]);
    let mut queue = vec![keep[0]];
    while let Some(u) = queue.pop() {
        for &w in keep {
            if !seen.contains(&w) && poly.adjacent(u, w) {
                seen.insert(w);
                queue.push(w);
            }
        }
    }
    seen.len() == keep.len()
}

/// Replays a vertex order, validating freeness and connectivity at every
/// step, and returns the recorded faces.
pub fn replay(poly: &Polytope, order: &[usize]) -> Result<RetractionSequence> {
    if order.len() != poly.vertex_count() {
        return Err(Error::Structural(format!(
            "order lists {} vertices, polytope has {}",
            order.len(),
            poly.vertex_count()
        )));
    }
    let distinct: BTreeSet<usize> = order.iter().copied().collect();
    if distinct.len() != order.len() || order.iter().any(|&v| v >= poly.vertex_count()) {
        return Err(Error::Structural("order is not a permutation of the vertices".into()));
    }
    let mut state = State::new(poly);
    let mut steps = Vec::with_capacity(order.len());
    for (r, &v) in order.iter().enumerate() {
        let face = state.free_face(v).ok_or_else(|| {
            Error::Structural(format!(
                "vertex {} is not free at step {}",
                poly.vertex_label(v),
                r + 1
            ))
        })?;
        if !state.connected_without(v) {
            return Err(Error::Structural(format!(
                "removing vertex {} at step {} disconnects the rest",
                poly.vertex_label(v),
                r + 1
            )));
        }
        state.remove(v);
        steps.push(RetractionStep { vertex: v, face });
    }
    Ok(RetractionSequence { steps })
}

struct Dfs<'a> {
    state: State<'a>,
    /// Local orders keyed by (face, vertex), present when avoiding a prime.
    constraint: Option<(&'a BigInt, &'a BTreeMap<(FaceSet, usize), BigInt>)>,
    budget_left: u64,
    /// Removal masks proven to admit no completion.
    dead: BTreeSet<u128>,
}

enum DfsOutcome {
    Found,
    Dead,
    Budget,
}

impl<'a> Dfs<'a> {
    fn run(&mut self, steps: &mut Vec<RetractionStep>) -> DfsOutcome {
        if self.state.remaining == 0 {
            return DfsOutcome::Found;
        }
        if self.budget_left == 0 {
            return DfsOutcome::Budget;
        }
        self.budget_left -= 1;
        let mask = self.state.mask();
        if self.dead.contains(&mask) {
            return DfsOutcome::Dead;
        }
        for v in 0..self.state.poly.vertex_count() {
            if self.state.removed[v] {
                continue;
            }
            let Some(face) = self.state.free_face(v) else { continue };
            if let Some((p, orders)) = self.constraint {
                let order = orders
                    .get(&(face.clone(), v))
                    .expect("every face and vertex has a tabulated order");
                if (order % p).is_zero() {
                    continue;
                }
            }
            if !self.state.connected_without(v) {
                continue;
            }
            self.state.remove(v);
            steps.push(RetractionStep { vertex: v, face });
            match self.run(steps) {
                DfsOutcome::Found => return DfsOutcome::Found,
                DfsOutcome::Budget => return DfsOutcome::Budget,
                DfsOutcome::Dead => {
                    steps.pop();
                    self.state.restore(v);
                }
            }
        }
        self.dead.insert(mask);
        DfsOutcome::Dead
    }
}

fn search(
    poly: &Polytope,
    constraint: Option<(&BigInt, &BTreeMap<(FaceSet, usize), BigInt>)>,
    budget: u64,
) -> Result<SearchOutcome> {
    if poly.vertex_count() > 128 {
        return Err(Error::Structural(
            "search supports at most 128 vertices".into(),
        ));
    }
    let mut dfs = Dfs {
        state: State::new(poly),
        constraint,
        budget_left: budget,
        dead: BTreeSet::new(),
    };
    let mut steps = Vec::new();
    match dfs.run(&mut steps) {
        DfsOutcome::Found => Ok(SearchOutcome::Found(RetractionSequence { steps })),
        DfsOutcome::Dead => Ok(SearchOutcome::Exhausted),
        DfsOutcome::Budget => Ok(SearchOutcome::BudgetExceeded),
    }
}

/// Searches for any retraction sequence, depth first, vertices in
/// ascending order, within a node expansion budget.
pub fn find_sequence(poly: &Polytope, budget: u64) -> Result<SearchOutcome> {
    search(poly, None, budget)
}

/// For every (face, vertex-of-face) step candidate, the product over the
/// vertex's facets `i` outside the face of the content of the image of
/// `lambda_i` in the quotient along the face's vectors; `1` for the whole
/// polytope and for vertex faces.
///
/// Wedging at facet `i` multiplies the local order of the step at the far
/// copy of a vertex of `F_i` by exactly that content whenever the proper
/// recorded face omits `i`: the base induced pair divides the image of
/// `lambda_i` by its content, while the corresponding wedge vector gains
/// a unit coordinate and needs no division. All other lifted steps keep
/// their orders.
fn lift_stability_factors(
    pair: &CharacteristicPair,
) -> Result<BTreeMap<(FaceSet, usize), BigInt>> {
    let poly = pair.polytope();
    let mut table = BTreeMap::new();
    for face in poly.faces() {
        let verts = poly.face_vertices(&face);
        if face.is_empty() || face.len() == poly.dim() {
            for v in verts {
                table.insert((face.clone(), v), BigInt::one());
            }
            continue;
        }
        let generators: Vec<IntVector> =
            face.iter().map(|&f| pair.lambda_of(f).to_vec()).collect();
        let proj = saturation_projection(&generators)?;
        let mut contents: BTreeMap<usize, BigInt> = BTreeMap::new();
        for v in verts {
            let mut factor = BigInt::one();
            for &i in pair.polytope().vertex_facet_set(v).iter() {
                if face.contains(&i) {
                    continue;
                }
                let content = contents.entry(i).or_insert_with(|| {
                    let col = IntMatrix::from_cols(vec![pair.lambda_of(i).to_vec()])
                        .expect("facet vectors have equal length");
                    let image = proj.mul(&col).expect("projection shapes agree");
                    image.col(0).iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
                });
                factor *= &*content;
            }
            table.insert((face.clone(), v), factor);
        }
    }
    Ok(table)
}

/// Searches for a retraction sequence every step of which has local order
/// coprime to `p`. Fails with [`Error::Structural`] unless `p` is prime:
/// the step check is divisibility by `p`, which matches coprimality only
/// for a prime modulus.
///
/// Two passes. The first also demands that every step's order stay
/// coprime to `p` after any single wedge, which by the content rule of
/// [`lift_stability_factors`] amounts to keeping the step's stability
/// factor coprime to `p` too; a sequence found this way lifts to an
/// avoiding sequence on the wedge over any facet. When no such sequence
/// exists within the budget, the second pass settles for any avoiding
/// sequence: it still certifies the pair itself, but a wedge may then
/// need a fresh search rather than a lift.
pub fn find_sequence_avoiding(
    pair: &CharacteristicPair,
    p: &BigInt,
    budget: u64,
) -> Result<SearchOutcome> {
    if !is_prime(p) {
        return Err(Error::Structural(format!(
            "avoided modulus must be a prime number, got {p}"
        )));
    }
    let orders = pair.all_face_orders()?;
    let factors = lift_stability_factors(pair)?;
    let stable: BTreeMap<(FaceSet, usize), BigInt> = orders
        .iter()
        .map(|(key, order)| {
            let factor = factors.get(key).expect("factor tables share keys");
            (key.clone(), order * factor)
        })
        .collect();
    if let found @ SearchOutcome::Found(_) =
        search(pair.polytope(), Some((p, &stable)), budget)?
    {
        return Ok(found);
    }
    search(pair.polytope(), Some((p, &orders)), budget)
}

/// Collects distinct retraction sequences depth first until `limit` are
/// found or the space is exhausted.
pub fn enumerate_sequences(poly: &Polytope, limit: usize) -> Result<Vec<RetractionSequence>> {
    fn go(
        state: &mut State,
        steps: &mut Vec<RetractionStep>,
        out: &mut Vec<RetractionSequence>,
        limit: usize,
    ) {
        if out.len() == limit {
            return;
        }
        if state.remaining == 0 {
            out.push(RetractionSequence { steps: steps.clone() });
            return;
        }
        for v in 0..state.poly.vertex_count() {
            if state.removed[v] {
                continue;
            }
            let Some(face) = state.free_face(v) else { continue };
            if !state.connected_without(v) {
                continue;
            }
            state.remove(v);
            steps.push(RetractionStep { vertex: v, face });
            go(state, steps, out, limit);
            steps.pop();
            state.restore(v);
        }
    }
    let mut state = State::new(poly);
    let mut out = Vec::new();
    go(&mut state, &mut Vec::new(), &mut out, limit);
    Ok(out)
}

/// Distinct primes dividing some vertex order of the pair, ascending.
pub fn relevant_primes(pair: &CharacteristicPair) -> Vec<BigInt> {
    let mut primes = BTreeSet::new();
    for order in pair.orders() {
        primes.extend(prime_factors(&order));
    }
    primes.into_iter().collect()
}

fn prime_factors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::from(2);
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            while (&n % &d).is_zero() {
                n = &n / &d;
            }
        }
        d += 1;
    }
    if n > BigInt::one() {
        out.push(n);
    }
    out
}

fn is_prime(n: &BigInt) -> bool {
    if *n <= BigInt::one() {
        return false;
    }
    let mut d = BigInt::from(2);
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            return false;
        }
        d += 1;
    }
    true
}

/// Runs the full certificate search: one unconstrained sequence, then one
/// sequence per prime dividing some vertex order, each within its own
/// budget.
pub fn formality(pair: &CharacteristicPair, budget: u64) -> Result<FormalityReport> {
    let base = find_sequence(pair.polytope(), budget)?;
    let mut primes = Vec::new();
    for p in relevant_primes(pair) {
        let status = match find_sequence_avoiding(pair, &p, budget)? {
            SearchOutcome::Found(seq) => PrimeStatus::Certified(seq),
            SearchOutcome::Exhausted => {
                PrimeStatus::Inconclusive(InconclusiveReason::SearchExhausted)
            }
            SearchOutcome::BudgetExceeded => {
                PrimeStatus::Inconclusive(InconclusiveReason::BudgetExhausted)
            }
        };
        primes.push(PrimeCertificate { prime: p, status });
    }
    Ok(FormalityReport { base, primes })
}

/// Vertex order of the lifted sequence on a single wedge: each base vertex
/// contributes its plus copy (when it has one) immediately followed by its
/// minus copy.
pub fn lift_vertex_order(map: &WedgeMap, base_order: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    for &b in base_order {
        let (minus, plus) = map.pairs[b];
        if let Some(p) = plus {
            out.push(p);
        }
        out.push(minus);
    }
    out
}

/// Lifts a base retraction sequence through a wedge and revalidates it by
/// replay on the wedged polytope.
///
/// Faces lift predictably: a vertex off the wedged facet contributes its
/// plus copy, whose recorded face is the base face mapped into the wedge,
/// then its minus copy, whose face also picks up the far copy of the
/// wedged facet; a vertex on the wedged facet contributes one step, the
/// mapped base face, or the face joined with both copies when the base
/// face already contains the wedged facet. Local orders carry over
/// unchanged except at the single-step case with the wedged facet outside
/// a proper base face, where the order is multiplied by the content
/// factor described at [`find_sequence_avoiding`]; a lift of an avoiding
/// sequence therefore avoids the same prime exactly when those factors
/// are coprime to it, which the first search pass guarantees.
pub fn lift_sequence(
    wedged: &Polytope,
    map: &WedgeMap,
    base: &RetractionSequence,
) -> Result<RetractionSequence> {
    let order = lift_vertex_order(map, &base.vertex_order());
    replay(wedged, &order)
}
