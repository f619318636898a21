//! Ready-made polytopes and characteristic pairs used across tests and as
//! starting points for experiments.

use num::bigint::BigInt;

use crate::charpair::CharacteristicPair;
use crate::linalg::IntVector;
use crate::polytope::{FaceSet, Polytope};

fn set(xs: &[usize]) -> FaceSet {
    xs.iter().copied().collect()
}

fn vecs(xss: &[&[i64]]) -> Vec<IntVector> {
    xss.iter().map(|xs| xs.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

fn labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// The n-simplex: facets `F1..F(n+1)`, vertex `vk` opposite facet `Fk`.
pub fn simplex(n: usize) -> Polytope {
    let vertex_facets = (0..=n).map(|v| (0..=n).filter(|&f| f != v).collect()).collect();
    Polytope::new(n, labels("F", n + 1), labels("v", n + 1), vertex_facets)
        .expect("simplex incidence is valid")
}

/// The square with opposite facet pairs (F1, F3) and (F2, F4).
pub fn square() -> Polytope {
    Polytope::new(
        2,
        labels("F", 4),
        labels("v", 4),
        vec![set(&[0, 1]), set(&[1, 2]), set(&[2, 3]), set(&[0, 3])],
    )
    .expect("square incidence is valid")
}

/// The pentagon with edges F1..F5 in cyclic order; vertex `vi` joins
/// `F(i-1)` and `Fi`.
pub fn pentagon() -> Polytope {
    Polytope::new(
        2,
        labels("F", 5),
        labels("v", 5),
        vec![set(&[0, 4]), set(&[0, 1]), set(&[1, 2]), set(&[2, 3]), set(&[3, 4])],
    )
    .expect("pentagon incidence is valid")
}

/// The cube with opposite facet pairs (F1, F4), (F2, F5), (F3, F6).
pub fn cube() -> Polytope {
    let vertex_facets = (0..8u32)
        .map(|b| {
            set(&[
                if b & 1 == 0 { 0 } else { 3 },
                if b & 2 == 0 { 1 } else { 4 },
                if b & 4 == 0 { 2 } else { 5 },
            ])
        })
        .collect();
    Polytope::new(3, labels("F", 6), labels("v", 8), vertex_facets)
        .expect("cube incidence is valid")
}

/// The triangular prism: F1, F2, F3 the square sides, F4 the top triangle,
/// F5 the bottom. Vertices v1, v2, v3 are on top, v4, v5, v6 below.
pub fn prism() -> Polytope {
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
    .expect("prism incidence is valid")
}

/// The prism with vectors (1,0,0), (0,1,0), (0,0,1), (1,2,4), (-1,-1,-1):
/// vertex orders 2, 4, 1, 1, 1, 1.
pub fn prism_pair() -> CharacteristicPair {
    CharacteristicPair::new(
        prism(),
        vecs(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 2, 4], &[-1, -1, -1]]),
    )
    .expect("prism pair satisfies the vertex condition")
}

/// Smooth pair on the triangle: the projective plane.
pub fn smooth_triangle_pair() -> CharacteristicPair {
    CharacteristicPair::new(simplex(2), vecs(&[&[1, 0], &[0, 1], &[-1, -1]]))
        .expect("triangle pair is smooth")
}

/// Smooth pair on the tetrahedron: projective 3-space.
pub fn smooth_tetrahedron_pair() -> CharacteristicPair {
    CharacteristicPair::new(
        simplex(3),
        vecs(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]]),
    )
    .expect("tetrahedron pair is smooth")
}

/// Smooth pair on the square: a product of projective lines.
pub fn smooth_square_pair() -> CharacteristicPair {
    CharacteristicPair::new(square(), vecs(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]]))
        .expect("square pair is smooth")
}

/// Smooth pair on the cube.
pub fn smooth_cube_pair() -> CharacteristicPair {
    CharacteristicPair::new(
        cube(),
        vecs(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, 0, 0], &[0, -1, 0], &[0, 0, -1]]),
    )
    .expect("cube pair is smooth")
}

/// Smooth pair on the pentagon.
pub fn smooth_pentagon_pair() -> CharacteristicPair {
    CharacteristicPair::new(
        pentagon(),
        vecs(&[&[1, 0], &[0, 1], &[-1, 1], &[-1, 0], &[0, -1]]),
    )
    .expect("pentagon pair is smooth")
}

/// Smooth pair on the prism: a product of the triangle pair and a segment.
pub fn smooth_prism_pair() -> CharacteristicPair {
    CharacteristicPair::new(
        prism(),
        vecs(&[&[1, 0, 0], &[0, 1, 0], &[-1, -1, 0], &[0, 0, 1], &[0, 0, -1]]),
    )
    .expect("prism product pair is smooth")
}

/// Pentagon pair with every vertex order even (orders 2, 2, 2, 2, 4), so
/// no retraction can avoid the prime 2.
pub fn even_pentagon_pair() -> CharacteristicPair {
    CharacteristicPair::new(
        pentagon(),
        vecs(&[&[1, 0], &[1, 2], &[1, 0], &[1, 2], &[3, 2]]),
    )
    .expect("even pentagon pair satisfies the vertex condition")
}

/// Weighted projective pair with the given positive coprime weights.
pub fn weighted_projective_pair(chi: &[i64]) -> CharacteristicPair {
    let chi: Vec<BigInt> = chi.iter().map(|&c| BigInt::from(c)).collect();
    CharacteristicPair::weighted_projective(&chi).expect("weights are positive and coprime")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::traits::One;

    #[test]
    fn smooth_pairs_have_unit_orders() {
        for pair in [
            smooth_triangle_pair(),
            smooth_tetrahedron_pair(),
            smooth_square_pair(),
            smooth_cube_pair(),
            smooth_pentagon_pair(),
            smooth_prism_pair(),
        ] {
            assert!(pair.orders().iter().all(BigInt::is_one));
        }
    }

    #[test]
    fn even_pentagon_orders() {
        let want: Vec<BigInt> = [2, 2, 2, 2, 4].iter().map(|&o| BigInt::from(o)).collect();
        assert_eq!(even_pentagon_pair().orders(), want);
    }
}
