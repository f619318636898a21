//! Fuzzes the pair-document JSON decoder: parsing must never panic, and
//! anything that parses and validates must round-trip through the
//! canonical encoding.

#![no_main]

use libfuzzer_sys::fuzz_target;
use polywedge::document::PairDocument;

fuzz_target!(|data: &[u8]| {
    if data.len() > 4096 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(doc) = PairDocument::parse(text) else { return };
    // Face enumeration visits subsets of each vertex's facet set, so keep
    // the structural sizes small enough for one input to stay cheap.
    if doc.dim > 6 || doc.facets.len() > 16 || doc.vertices.len() > 64 {
        return;
    }
    if let Ok(pair) = doc.to_pair() {
        let encoded = PairDocument::from_pair(&pair).to_canonical_string();
        let reparsed = PairDocument::parse(&encoded).expect("canonical encoding reparses");
        let pair2 = reparsed.to_pair().expect("canonical encoding revalidates");
        assert_eq!(pair.lambda(), pair2.lambda());
        assert_eq!(pair.orders(), pair2.orders());
    } else if let Ok(poly) = doc.to_polytope() {
        let encoded = PairDocument::from_polytope(&poly).to_canonical_string();
        let reparsed = PairDocument::parse(&encoded).expect("canonical encoding reparses");
        let poly2 = reparsed.to_polytope().expect("canonical encoding revalidates");
        assert_eq!(poly.facet_labels(), poly2.facet_labels());
        assert_eq!(poly.vertex_labels(), poly2.vertex_labels());
    }
});
