#![no_main]

use kodag::digraph::hasse_from_relation;
use kodag::format::{parse_relation, write_relation};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(r) = parse_relation(text) else {
        return;
    };
    assert_eq!(parse_relation(&write_relation(&r)).expect("written relation parses"), r);
    // Arbitrary matrices are usually not orders; this must fail cleanly.
    if let Ok(h) = hasse_from_relation(&r) {
        assert!(h.arcs().all(|(u, v)| r.leq(u, v)));
    }
});
