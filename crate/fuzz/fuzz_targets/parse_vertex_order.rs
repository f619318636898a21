//! Fuzzes the sequence-document decoder: parsing must never panic, and
//! parsed label lists must round-trip through the serializer.

#![no_main]

use libfuzzer_sys::fuzz_target;
use polywedge::document::{parse_vertex_order, vertex_order_to_string};

fuzz_target!(|data: &[u8]| {
    if data.len() > 4096 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(labels) = parse_vertex_order(text) else { return };
    let encoded = vertex_order_to_string(&labels);
    let reparsed = parse_vertex_order(&encoded).expect("serializer output reparses");
    assert_eq!(labels, reparsed);
});
